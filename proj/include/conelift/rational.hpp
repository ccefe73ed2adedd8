#pragma once

// Exact scalar and the dense matrix aliases built on it.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>
#include <string_view>
#include <vector>

namespace conelift {

/// Arbitrary-precision rational, always reduced with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;
using Index = Eigen::Index;

/// Serializes as "p/q", or "p" when q = 1.
std::string to_string(const Rational& x);

/// Parses "p", "p/q", or a finite decimal such as "-1.25". Throws Error(ParseError).
Rational parse_rational(std::string_view text);

double to_double(const Rational& x);

/// Nearest rational with denominator 2^bits (round half away from zero).
Rational rationalize(double x, int bits = 40);

inline int sign(const Rational& x) { return x.sign(); }

RatVector make_vector(std::initializer_list<Rational> entries);
RatMatrix make_matrix(std::initializer_list<std::initializer_list<Rational>> rows);
RatMatrix from_rows(const std::vector<RatVector>& rows, Index cols);

/// Rescales a nonzero vector by a positive factor so all entries are coprime integers.
RatVector primitive(const RatVector& v);

/// Lexicographic comparison of equally sized vectors.
bool lex_less(const RatVector& a, const RatVector& b);

}  // namespace conelift
