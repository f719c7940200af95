#include "bbwu/weights.hpp"

#include <algorithm>
#include <string>

#include "exact.hpp"

namespace bbwu {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyWeight: return "EmptyWeight";
    case ErrorKind::NotNonIncreasing: return "NotNonIncreasing";
    case ErrorKind::PadBelowNegative: return "PadBelowNegative";
    case ErrorKind::LengthShrink: return "LengthShrink";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::TooManyParts: return "TooManyParts";
    case ErrorKind::InvalidSpace: return "InvalidSpace";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::NonIntegralChernDegree: return "NonIntegralChernDegree";
    case ErrorKind::InvalidPair: return "InvalidPair";
    case ErrorKind::InconsistentGrid: return "InconsistentGrid";
    case ErrorKind::SearchTooLarge: return "SearchTooLarge";
  }
  return "Unknown";
}

GLWeight::GLWeight(std::vector<Entry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorKind::EmptyWeight, "a weight needs at least one entry");
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
    if (entries_[i] < entries_[i + 1]) {
      throw Error(ErrorKind::NotNonIncreasing,
                  "entry " + std::to_string(i + 1) + " (" + std::to_string(entries_[i]) +
                      ") is smaller than entry " + std::to_string(i + 2) + " (" +
                      std::to_string(entries_[i + 1]) + ")");
    }
  }
}

GLWeight GLWeight::constant(std::size_t length, Entry value) {
  return GLWeight(std::vector<Entry>(length, value));
}

Entry GLWeight::sum() const noexcept {
  Entry s = 0;
  for (Entry e : entries_) s += e;
  return s;
}

GLWeight make_weight(std::vector<Entry> entries) { return GLWeight(std::move(entries)); }

GLWeight pad(const GLWeight& w, std::size_t r) {
  if (r < w.size()) {
    throw Error(ErrorKind::LengthShrink, "cannot pad a weight of length " +
                                             std::to_string(w.size()) + " to length " +
                                             std::to_string(r));
  }
  if (w.back() < 0) {
    throw Error(ErrorKind::PadBelowNegative,
                "padding with zeros after " + std::to_string(w.back()) + " breaks monotonicity");
  }
  std::vector<Entry> out(w.entries().begin(), w.entries().end());
  out.resize(r, 0);
  return GLWeight(std::move(out));
}

GLWeight shift(const GLWeight& w, Entry t) {
  std::vector<Entry> out(w.entries().begin(), w.entries().end());
  for (Entry& e : out) e += t;
  return GLWeight(std::move(out));
}

std::vector<Entry> rho(std::size_t m) {
  std::vector<Entry> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = static_cast<Entry>(m - i);
  return out;
}

std::optional<SortedSequence> sort_and_count(std::span<const Entry> seq) {
  SortedSequence out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return std::nullopt;
      if (seq[i] < seq[j]) ++out.inversions;
    }
  }
  out.values.assign(seq.begin(), seq.end());
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

BigInt weyl_dim(const GLWeight& w, std::size_t r) {
  if (w.size() != r) {
    throw Error(ErrorKind::LengthMismatch, "weight of length " + std::to_string(w.size()) +
                                               " used as a GL_" + std::to_string(r) + " weight");
  }
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      const auto gap = static_cast<Entry>(j - i);
      num *= w[i] - w[j] + gap;
      den *= gap;
    }
  }
  return detail::exact_div(num, den, "weyl_dim");
}

Partition::Partition(std::vector<Entry> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw Error(ErrorKind::NotAPartition, "negative part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
      throw Error(ErrorKind::NotAPartition, "parts must be non-increasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Entry Partition::size() const noexcept {
  Entry s = 0;
  for (Entry p : parts_) s += p;
  return s;
}

Partition Partition::transpose() const {
  if (parts_.empty()) return {};
  std::vector<Entry> cols(static_cast<std::size_t>(parts_.front()), 0);
  for (Entry p : parts_) {
    for (Entry j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

Entry Partition::hook(std::size_t i, std::size_t j) const {
  // arm + leg + 1, written as lambda_i + lambda^t_j - (i + j) + 1
  const Partition t = transpose();
  return part(i - 1) + t.part(j - 1) - static_cast<Entry>(i + j) + 1;
}

GLWeight Partition::to_weight(std::size_t r) const {
  if (parts_.size() > r) {
    throw Error(ErrorKind::TooManyParts, std::to_string(parts_.size()) +
                                             " nonzero parts do not fit in length " +
                                             std::to_string(r));
  }
  std::vector<Entry> out(parts_);
  out.resize(r, 0);
  return GLWeight(std::move(out));
}

BigInt hook_content_dim(const Partition& p, std::size_t r) {
  if (p.length() > r) {
    throw Error(ErrorKind::TooManyParts, std::to_string(p.length()) +
                                             " nonzero parts exceed rank " + std::to_string(r));
  }
  const Partition t = p.transpose();
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t i = 1; i <= p.length(); ++i) {
    for (std::size_t j = 1; j <= static_cast<std::size_t>(p.part(i - 1)); ++j) {
      num *= static_cast<Entry>(r + j) - static_cast<Entry>(i);
      den *= p.part(i - 1) + t.part(j - 1) - static_cast<Entry>(i + j) + 1;
    }
  }
  return detail::exact_div(num, den, "hook_content_dim");
}

}  // namespace bbwu
