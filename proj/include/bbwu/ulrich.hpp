#pragma once

// GL(V)-invariant Ulrich bundles on Gr(k, n).
//
// Every initialized invariant Ulrich bundle comes from an ordered factorization
// pair: k + 1 = k_1 * ... * k_s and n - k = n_1 * ... * n_s with k_l > 1 for
// l < s and n_l > 1 for l > 1. The pair determines a recursive filling of a
// (k+1) x (n-k) grid by 1..(k+1)(n-k), and the grid determines the weights.

#include <optional>
#include <vector>

#include "bbwu/bbw.hpp"
#include "bbwu/grassmann.hpp"

namespace bbwu {

// ---------------------------------------------------------------------------
// Predicates

bool is_initialized(const HomogeneousBundle& b);

struct InitializedBundle {
  HomogeneousBundle bundle;
  Entry shift = 0;
};

/// Twists so that H^0(E(-1)) = 0 != H^0(E). The shift is a_1 - b_{k+1}.
InitializedBundle initialize(const HomogeneousBundle& b);

/// No cohomology strictly between degree 0 and dim in any twist.
bool is_acm(const HomogeneousBundle& b);

/// First twist of the initialized bundle that breaks the vanishing window:
/// H^degree(E_init(-twist)) has the given dimension.
struct UlrichWitness {
  Entry twist = 0;
  Entry degree = 0;
  BigInt dimension;
};

struct UlrichVerdict {
  bool is_ulrich = false;
  std::optional<UlrichWitness> witness;
  bool initialized = false;  // whether the input was already initialized
  Entry init_shift = 0;
};

/// Initializes, then requires all cohomology of E_init(-t) to vanish for
/// t = 1..dim.
UlrichVerdict is_ulrich(const HomogeneousBundle& b);

/// The two-diagonal form of the same test: after initializing,
/// H^i(E(-i)) = 0 for i > 0 and H^i(E(-i-1)) = 0 for i < dim.
bool satisfies_diagonal_criterion(const HomogeneousBundle& b);

// ---------------------------------------------------------------------------
// Factorization pairs and the block grid

struct FactorizationPair {
  std::vector<int> ks;
  std::vector<int> ns;

  std::size_t length() const noexcept { return ks.size(); }
  auto operator<=>(const FactorizationPair&) const = default;
};

/// Throws InvalidPair describing the first violated constraint.
void validate_pair(const GrassmannSpace& s, const FactorizationPair& p);

/// All valid pairs, ordered by length, then ks, then ns (lexicographic).
std::vector<FactorizationPair> enumerate_factorization_pairs(const GrassmannSpace& s);

/// Values t(column, row) with columns 1..n-k left to right and rows 1..k+1
/// bottom-up. The row index used by the weight relations is j = k + 2 - row.
class BlockGrid {
 public:
  /// cells is row-major starting from the bottom row. Throws InconsistentGrid
  /// on a size mismatch.
  BlockGrid(GrassmannSpace space, std::vector<Entry> cells);

  const GrassmannSpace& space() const noexcept { return space_; }
  std::size_t columns() const noexcept { return space_.sub_rank(); }
  std::size_t rows() const noexcept { return space_.quotient_rank(); }

  Entry at(std::size_t column, std::size_t row) const {
    return cells_[(row - 1) * columns() + (column - 1)];
  }
  /// Cell in column i whose relation involves b_j.
  Entry t(std::size_t i, std::size_t j) const { return at(i, rows() + 1 - j); }

  /// Values are exactly 1..(k+1)(n-k).
  bool is_bijection() const;
  /// Row differences do not depend on the column and vice versa.
  bool is_separable() const;

  std::span<const Entry> cells() const noexcept { return cells_; }

 private:
  GrassmannSpace space_;
  std::vector<Entry> cells_;
};

BlockGrid build_grid(const GrassmannSpace& s, const FactorizationPair& p);

/// Solves b_j + n - j + 2 - t(i,j) = a_i + (n-k) - (i-1) with a_{n-k} = 0 and
/// re-checks the relation on every cell. Throws InconsistentGrid.
HomogeneousBundle bundle_from_grid(const BlockGrid& g);

HomogeneousBundle construct_ulrich(const GrassmannSpace& s, const FactorizationPair& p);

struct ConstructedBundle {
  FactorizationPair pair;
  HomogeneousBundle bundle;
};

/// One entry per distinct bundle, sorted by (beta, gamma); each keeps the
/// first pair that produced it.
std::vector<ConstructedBundle> enumerate_constructions(const GrassmannSpace& s);

std::vector<HomogeneousBundle> enumerate_ulrich(const GrassmannSpace& s);

std::size_t count_ulrich(const GrassmannSpace& s);

// ---------------------------------------------------------------------------
// Closed forms

/// prod_{1<=i<j<=k+1} (j-i)(n-k) / (k!(k-1)!...2!)
BigInt min_ulrich_rank_product_form(const GrassmannSpace& s);
/// (n-k)^{k(k+1)/2}
BigInt min_ulrich_rank_power_form(const GrassmannSpace& s);
/// Both closed forms, checked equal, evaluated with k replaced by
/// min(k, n-k-1).
BigInt min_ulrich_rank(const GrassmannSpace& s);

/// k(n-k-1)/2 * degree
ExactRational ulrich_slope(const GrassmannSpace& s);

/// Number of positive divisors.
std::size_t divisor_count(std::uint64_t m);

}  // namespace bbwu
