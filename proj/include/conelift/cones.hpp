#pragma once

// Exact membership tests for the psd, copositive and completely positive cones.

#include <conelift/symmetric.hpp>

#include <optional>

namespace conelift {

/// Symmetric fraction-free LDL^T with diagonal pivoting. A zero remaining diagonal forces the
/// whole remaining block to vanish.
bool psd_check_exact(const SymmetricMatrix& s);

enum class CopositivityStatus { Copositive, NotCopositive, Degenerate };

struct CopositivityVerdict {
  CopositivityStatus status = CopositivityStatus::Copositive;
  std::optional<RatVector> witness;  // x >= 0 with x^T M x < 0, present iff NotCopositive
};

inline constexpr Index kDefaultCopositiveLimit = 8;

/// Decides min{x^T M x : x >= 0, sum x = 1} >= 0 exactly by enumerating the KKT systems of all
/// supports. A singular KKT system still fixes the multiplier on its solution set, so it is
/// resolved by an exact feasibility solve instead of being reported as Degenerate.
CopositivityVerdict copositive_check_exact(const SymmetricMatrix& m, Index limit = kDefaultCopositiveLimit);

/// For M = [[a, b^T], [b, N]] with a > 0 and b <= 0, M is copositive iff a N - b b^T is.
/// Returns nullopt when the sign conditions do not hold.
std::optional<SymmetricMatrix> copositive_reduction(const SymmetricMatrix& m);

/// Certificate-carrying completely positive membership: m = n^T n with n >= 0 when a certificate
/// is given; otherwise only rank-one nonnegative outer products (and zero) are accepted.
bool cp_check(const SymmetricMatrix& m, const std::optional<RatMatrix>& certificate = std::nullopt);

}  // namespace conelift
