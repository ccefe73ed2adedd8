#include <conelift/error.hpp>
#include <conelift/rational.hpp>

#include <cctype>
#include <cmath>

namespace conelift {

std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(whole) + "'");
  const Integer v{std::string(s)};
  return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw Error(ErrorCode::ParseError, "bad denominator in '" + std::string(text) + "'");
    const Integer den(std::string{den_text});
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    std::string_view head = text.substr(0, dot);
    const bool neg = !head.empty() && head[0] == '-';
    if (head.empty() || head == "-" || head == "+") head = "0";
    const Integer whole = parse_integer(head, text);
    if (!all_digits(frac)) throw Error(ErrorCode::ParseError, "bad decimal '" + std::string(text) + "'");
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const Rational f(Integer(std::string(frac)), scale);
    const Rational w(whole);
    return neg || whole < 0 ? Rational(w - f) : Rational(w + f);
  }
  return Rational(parse_integer(text, text));
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

Rational rationalize(double x, int bits) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidInput, "cannot rationalize a non-finite value");
  const double scaled = std::round(std::ldexp(x, bits));
  Integer den = 1;
  den <<= bits;
  return Rational(Integer(scaled), den);
}

RatVector make_vector(std::initializer_list<Rational> entries) {
  RatVector v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (const auto& e : entries) v(i++) = e;
  return v;
}

RatMatrix make_matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  RatMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c) throw Error(ErrorCode::ShapeMismatch, "ragged matrix literal");
    Index j = 0;
    for (const auto& e : row) m(i, j++) = e;
    ++i;
  }
  return m;
}

RatMatrix from_rows(const std::vector<RatVector>& rows, Index cols) {
  RatMatrix m(static_cast<Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::ShapeMismatch, "row length mismatch");
    m.row(static_cast<Index>(i)) = rows[i].transpose();
  }
  return m;
}

RatVector primitive(const RatVector& v) {
  Integer l = 1;
  for (Index i = 0; i < v.size(); ++i) l = boost::multiprecision::lcm(l, denominator(v(i)));
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, Integer(numerator(v(i)) * (l / denominator(v(i)))));
  if (g == 0) return v;
  RatVector out = v * Rational(l, g);
  return out;
}

bool lex_less(const RatVector& a, const RatVector& b) {
  for (Index i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return a.size() < b.size();
}

}  // namespace conelift
