#pragma once

// Integer weights of GL_r, partitions, and exact dimension formulas for the
// corresponding irreducible representations.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bbwu/error.hpp"

namespace bbwu {

using BigInt = boost::multiprecision::cpp_int;
using Entry = std::int64_t;

/// A non-increasing integer sequence of fixed length r >= 1: a highest
/// weight of GL_r. Entries may be negative.
class GLWeight {
 public:
  /// Throws EmptyWeight or NotNonIncreasing.
  explicit GLWeight(std::vector<Entry> entries);

  static GLWeight constant(std::size_t length, Entry value);

  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  Entry operator[](std::size_t i) const { return entries_[i]; }
  Entry front() const noexcept { return entries_.front(); }
  Entry back() const noexcept { return entries_.back(); }
  Entry sum() const noexcept;

  auto operator<=>(const GLWeight&) const = default;
  bool operator==(const GLWeight&) const = default;

 private:
  std::vector<Entry> entries_;
};

GLWeight make_weight(std::vector<Entry> entries);

/// Appends zeros up to length r. Rejects rather than re-sorts when the last
/// entry is negative.
GLWeight pad(const GLWeight& w, std::size_t r);

GLWeight shift(const GLWeight& w, Entry t);

/// The staircase (m, m-1, ..., 1).
std::vector<Entry> rho(std::size_t m);

struct SortedSequence {
  std::vector<Entry> values;  // strictly decreasing
  std::uint64_t inversions = 0;
};

/// Sorts into strictly decreasing order and counts pairs i < j with
/// seq[i] < seq[j]. Returns nullopt when two entries coincide.
std::optional<SortedSequence> sort_and_count(std::span<const Entry> seq);

/// Dimension of the irreducible GL_r representation with highest weight w,
/// via the Weyl product over pairs i < j of (w_i - w_j + j - i) / (j - i).
BigInt weyl_dim(const GLWeight& w, std::size_t r);

/// A Young diagram. Trailing zeros are dropped on construction, so two
/// partitions that differ only by padding compare equal.
class Partition {
 public:
  Partition() = default;
  /// Throws NotAPartition on negative or increasing parts.
  explicit Partition(std::vector<Entry> parts);

  std::span<const Entry> parts() const noexcept { return parts_; }
  /// Number of nonzero parts.
  std::size_t length() const noexcept { return parts_.size(); }
  Entry size() const noexcept;  // number of boxes
  Entry part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  Partition transpose() const;
  /// Hook length at 1-based box (i, j).
  Entry hook(std::size_t i, std::size_t j) const;
  /// The weight of length r obtained by padding with zeros.
  GLWeight to_weight(std::size_t r) const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<Entry> parts_;
};

/// Hook-content formula: product over boxes (i, j) of (r + j - i) / hook(i, j).
/// Throws TooManyParts when the partition has more than r nonzero parts.
BigInt hook_content_dim(const Partition& p, std::size_t r);

}  // namespace bbwu
