#pragma once

// Exhaustive classification of initialized invariant Ulrich bundles.
//
// Any initialized Ulrich bundle, normalized so that a_{n-k} = 0, has
// b_1 = k(n-k-1) and b_{k+1} = a_1, so the merged sequence
// (b_1, ..., b_{k+1} = a_1, ..., a_{n-k} = 0) is a non-increasing run of n
// integers from k(n-k-1) down to 0. The n - 2 interior entries are free, which
// gives C(k(n-k-1) + n - 2, n - 2) candidates; each is tested with is_ulrich.

#include <cstdint>
#include <vector>

#include "bbwu/bbw.hpp"

namespace bbwu {

struct ClassifyOptions {
  std::uint64_t cap = 100'000'000;
  int jobs = 0;  // 0: OpenMP default
};

BigInt candidate_count(const GrassmannSpace& s);

/// Walks all candidates in a fixed order (lexicographically decreasing).
class CandidateStream {
 public:
  explicit CandidateStream(const GrassmannSpace& s);

  /// Writes the next candidate's merged sequence (length n) into out; false
  /// once exhausted.
  bool next(std::vector<Entry>& merged);

  HomogeneousBundle to_bundle(std::span<const Entry> merged) const;

 private:
  GrassmannSpace space_;
  Entry top_;
  std::vector<Entry> free_;
  bool done_ = false;
};

/// OpenMP kernel; output sorted by (beta, gamma) and independent of the
/// schedule. Throws SearchTooLarge above the cap.
std::vector<HomogeneousBundle> brute_force_classify(const GrassmannSpace& s,
                                                    const ClassifyOptions& options = {});

/// Single-threaded reference for the kernel above.
std::vector<HomogeneousBundle> brute_force_classify_serial(const GrassmannSpace& s,
                                                           std::uint64_t cap = 100'000'000);

}  // namespace bbwu
