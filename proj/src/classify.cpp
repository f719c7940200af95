#include "bbwu/classify.hpp"

#include <algorithm>
#include <string>

#include <omp.h>

#include "bbwu/ulrich.hpp"

namespace bbwu {

namespace {

constexpr std::size_t kChunk = 1 << 12;

void check_cap(const GrassmannSpace& s, std::uint64_t cap) {
  const BigInt count = candidate_count(s);
  if (count > cap) {
    throw Error(ErrorKind::SearchTooLarge, "Gr(" + std::to_string(s.k()) + "," +
                                               std::to_string(s.n()) + ") has " + count.str() +
                                               " candidates, cap is " + std::to_string(cap));
  }
}

void sort_bundles(std::vector<HomogeneousBundle>& v) {
  std::sort(v.begin(), v.end(), bundle_less);
}

}  // namespace

BigInt candidate_count(const GrassmannSpace& s) {
  const Entry n = s.n();
  if (n < 2) return 1;
  const Entry top = Entry{s.k()} * (n - s.k() - 1);
  // C(top + n - 2, n - 2)
  BigInt c = 1;
  for (Entry i = 1; i <= n - 2; ++i) {
    c *= top + i;
    c /= i;
  }
  return c;
}

CandidateStream::CandidateStream(const GrassmannSpace& s)
    : space_(s),
      top_(Entry{s.k()} * (s.n() - s.k() - 1)),
      free_(static_cast<std::size_t>(std::max(0, s.n() - 2)), top_) {}

bool CandidateStream::next(std::vector<Entry>& merged) {
  if (done_) return false;
  const auto n = static_cast<std::size_t>(space_.n());
  merged.resize(n);
  merged[0] = top_;
  std::copy(free_.begin(), free_.end(), merged.begin() + (n >= 2 ? 1 : 0));
  if (n >= 2) merged[n - 1] = 0;

  // Advance to the lexicographically previous non-increasing sequence.
  auto it = std::find_if(free_.rbegin(), free_.rend(), [](Entry e) { return e > 0; });
  if (it == free_.rend()) {
    done_ = true;
  } else {
    const Entry v = *it - 1;
    std::fill(free_.rbegin(), std::next(it), v);
  }
  return true;
}

HomogeneousBundle CandidateStream::to_bundle(std::span<const Entry> merged) const {
  const std::size_t kp = space_.quotient_rank();
  std::vector<Entry> beta(merged.begin(), merged.begin() + static_cast<std::ptrdiff_t>(kp));
  std::vector<Entry> gamma(merged.begin() + static_cast<std::ptrdiff_t>(kp - 1), merged.end());
  return {space_, GLWeight(std::move(beta)), GLWeight(std::move(gamma))};
}

std::vector<HomogeneousBundle> brute_force_classify_serial(const GrassmannSpace& s,
                                                           std::uint64_t cap) {
  check_cap(s, cap);
  CandidateStream stream(s);
  std::vector<HomogeneousBundle> found;
  std::vector<Entry> merged;
  while (stream.next(merged)) {
    HomogeneousBundle b = stream.to_bundle(merged);
    if (is_ulrich(b).is_ulrich) found.push_back(std::move(b));
  }
  sort_bundles(found);
  return found;
}

std::vector<HomogeneousBundle> brute_force_classify(const GrassmannSpace& s,
                                                    const ClassifyOptions& options) {
  check_cap(s, options.cap);
  const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
  const std::size_t width = static_cast<std::size_t>(s.n());

  CandidateStream stream(s);
  std::vector<HomogeneousBundle> found;
  std::vector<Entry> batch;  // kChunk merged sequences, back to back
  std::vector<char> pass;
  std::vector<Entry> merged;
  bool more = true;
  while (more) {
    batch.clear();
    std::size_t filled = 0;
    while (filled < kChunk && (more = stream.next(merged))) {
      batch.insert(batch.end(), merged.begin(), merged.end());
      ++filled;
    }
    pass.assign(filled, 0);

#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(filled); ++c) {
      std::span<const Entry> seq(batch.data() + static_cast<std::size_t>(c) * width, width);
      pass[static_cast<std::size_t>(c)] = is_ulrich(stream.to_bundle(seq)).is_ulrich ? 1 : 0;
    }

    for (std::size_t c = 0; c < filled; ++c) {
      if (pass[c]) {
        found.push_back(stream.to_bundle(std::span<const Entry>(batch.data() + c * width, width)));
      }
    }
  }
  sort_bundles(found);
  return found;
}

}  // namespace bbwu
