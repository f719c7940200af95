#pragma once

// Cohomology of irreducible GL(V)-invariant bundles on Grassmannians.
//
// Gr(k, n) is the variety of projective k-planes in P^n = P(V), dim V = n + 1.
// An irreducible homogeneous bundle is Sigma^beta Q (x) Sigma^gamma S^dual with
// beta of length k + 1 and gamma of length n - k. Its cohomology is computed by
// concatenating (beta, gamma), adding the staircase rho, and sorting: a repeated
// entry kills all cohomology, otherwise the single nonzero group sits in degree
// equal to the number of inversions and is the V^* representation of highest
// weight sorted(alpha + rho) - rho.

#include <cstdint>
#include <optional>
#include <vector>

#include "bbwu/weights.hpp"

namespace bbwu {

class GrassmannSpace {
 public:
  /// Throws InvalidSpace unless 0 <= k <= n - 1.
  GrassmannSpace(int k, int n);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  std::size_t quotient_rank() const noexcept { return static_cast<std::size_t>(k_ + 1); }
  std::size_t sub_rank() const noexcept { return static_cast<std::size_t>(n_ - k_); }
  std::size_t ambient_rank() const noexcept { return static_cast<std::size_t>(n_ + 1); }
  /// (k + 1)(n - k)
  Entry dimension() const noexcept { return Entry{k_ + 1} * (n_ - k_); }
  /// Gr(k, n) is isomorphic to Gr(n - k - 1, n).
  GrassmannSpace dual_space() const { return {n_ - k_ - 1, n_}; }

  bool operator==(const GrassmannSpace&) const = default;

 private:
  int k_;
  int n_;
};

/// Sigma^beta Q (x) Sigma^gamma S^dual on a fixed Grassmannian.
class HomogeneousBundle {
 public:
  /// Throws LengthMismatch unless |beta| = k + 1 and |gamma| = n - k.
  HomogeneousBundle(GrassmannSpace space, GLWeight beta, GLWeight gamma);

  static HomogeneousBundle structure_sheaf(GrassmannSpace space);
  static HomogeneousBundle line_bundle(GrassmannSpace space, Entry t);
  static HomogeneousBundle quotient(GrassmannSpace space);
  static HomogeneousBundle dual_sub(GrassmannSpace space);

  const GrassmannSpace& space() const noexcept { return space_; }
  const GLWeight& beta() const noexcept { return beta_; }
  const GLWeight& gamma() const noexcept { return gamma_; }

  bool operator==(const HomogeneousBundle&) const = default;

 private:
  GrassmannSpace space_;
  GLWeight beta_;
  GLWeight gamma_;
};

/// Lexicographic on (beta, gamma); used for canonical ordering of bundle lists.
bool bundle_less(const HomogeneousBundle& a, const HomogeneousBundle& b);

struct CohomologyGroup {
  Entry degree = 0;
  GLWeight weight;  // highest weight of the V^* representation, length n + 1
  BigInt dimension;

  bool operator==(const CohomologyGroup&) const = default;
};

/// Either total vanishing or a single nonzero group.
struct CohomologyReport {
  std::optional<CohomologyGroup> group;

  bool vanishes() const noexcept { return !group.has_value(); }
  bool operator==(const CohomologyReport&) const = default;
};

struct TwistedReport {
  Entry twist = 0;
  CohomologyReport report;
};

struct NormalizedBundle {
  HomogeneousBundle bundle;
  Entry shift = 0;
};

HomogeneousBundle twist(const HomogeneousBundle& b, Entry t);

/// Shifts beta and gamma together so the last gamma entry is 0; returns the
/// shift that was applied.
NormalizedBundle normalize(const HomogeneousBundle& b);

/// Cohomology of b(t).
CohomologyReport cohomology(const HomogeneousBundle& b, Entry t = 0);

/// One report per twist in [t_min, t_max]. Throws BadRange if t_min > t_max.
std::vector<TwistedReport> cohomology_table(const HomogeneousBundle& b, Entry t_min,
                                            Entry t_max);

/// chi(b(t)) = (-1)^m dim H^m, or 0 when everything vanishes.
BigInt euler_characteristic(const HomogeneousBundle& b, Entry t = 0);

/// Negate-and-reverse on both factors.
HomogeneousBundle dual(const HomogeneousBundle& b);

BigInt h0(const HomogeneousBundle& b);

}  // namespace bbwu
