#include "bbwu/ulrich.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "exact.hpp"

namespace bbwu {

namespace {

bool has_sections(const HomogeneousBundle& b, Entry t) {
  const CohomologyReport r = cohomology(b, t);
  return !r.vanishes() && r.group->degree == 0;
}

std::string join(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

// Ordered factorizations of `target` into `length` positive factors. Factors
// equal to 1 are allowed only at position 0 (if first_may_be_one) or at the
// last position (if last_may_be_one).
void ordered_factorizations(int target, std::size_t length, bool first_may_be_one,
                            bool last_may_be_one, std::vector<int>& prefix,
                            std::vector<std::vector<int>>& out) {
  const std::size_t pos = prefix.size();
  if (pos + 1 == length) {
    if (target == 1 && !(last_may_be_one || (pos == 0 && first_may_be_one))) return;
    prefix.push_back(target);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  const bool one_ok = pos == 0 && first_may_be_one;
  for (int f = one_ok ? 1 : 2; f <= target; ++f) {
    if (target % f != 0) continue;
    prefix.push_back(f);
    ordered_factorizations(target / f, length, first_may_be_one, last_may_be_one, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> factorizations(int target, std::size_t length, bool first_one,
                                             bool last_one) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  ordered_factorizations(target, length, first_one, last_one, prefix, out);
  return out;
}

}  // namespace

bool is_initialized(const HomogeneousBundle& b) {
  return has_sections(b, 0) && !has_sections(b, -1);
}

InitializedBundle initialize(const HomogeneousBundle& b) {
  // H^0(E(t)) != 0 exactly when (beta + t, gamma) is non-increasing.
  const Entry t0 = b.gamma().front() - b.beta().back();
  return {twist(b, t0), t0};
}

bool is_acm(const HomogeneousBundle& b) {
  const Entry d = b.space().dimension();
  const Entry slack = b.space().n() + 2;
  const Entry lo = b.gamma().back() - b.beta().front() - slack;
  const Entry hi = b.gamma().front() - b.beta().back() + slack;
  for (Entry t = lo; t <= hi; ++t) {
    const CohomologyReport r = cohomology(b, t);
    if (!r.vanishes() && r.group->degree > 0 && r.group->degree < d) return false;
  }
  return true;
}

UlrichVerdict is_ulrich(const HomogeneousBundle& b) {
  UlrichVerdict v;
  v.initialized = is_initialized(b);
  const InitializedBundle init = initialize(b);
  v.init_shift = init.shift;
  const Entry d = b.space().dimension();
  for (Entry t = 1; t <= d; ++t) {
    CohomologyReport r = cohomology(init.bundle, -t);
    if (!r.vanishes()) {
      v.witness = UlrichWitness{t, r.group->degree, std::move(r.group->dimension)};
      return v;
    }
  }
  v.is_ulrich = true;
  return v;
}

bool satisfies_diagonal_criterion(const HomogeneousBundle& b) {
  const HomogeneousBundle e = initialize(b).bundle;
  const Entry d = b.space().dimension();
  auto nonzero_in = [&](Entry t, Entry degree) {
    const CohomologyReport r = cohomology(e, t);
    return !r.vanishes() && r.group->degree == degree;
  };
  for (Entry i = 1; i <= d; ++i) {
    if (nonzero_in(-i, i)) return false;
  }
  for (Entry i = 0; i < d; ++i) {
    if (nonzero_in(-i - 1, i)) return false;
  }
  return true;
}

void validate_pair(const GrassmannSpace& s, const FactorizationPair& p) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::InvalidPair, "ks=" + join(p.ks) + " ns=" + join(p.ns) + ": " + why);
  };
  if (p.ks.empty() || p.ks.size() != p.ns.size()) fail("sequences must be non-empty and of equal length");
  const std::size_t len = p.ks.size();
  long long kprod = 1, nprod = 1;
  for (std::size_t l = 0; l < len; ++l) {
    if (p.ks[l] < 1 || p.ns[l] < 1) fail("entries must be positive");
    kprod *= p.ks[l];
    nprod *= p.ns[l];
    if (kprod > static_cast<long long>(s.quotient_rank()) || nprod > static_cast<long long>(s.sub_rank())) break;
    if (l + 1 < len && p.ks[l] == 1) fail("k_l must exceed 1 for l < s");
    if (l > 0 && p.ns[l] == 1) fail("n_l must exceed 1 for l > 1");
  }
  if (kprod != static_cast<long long>(s.quotient_rank())) fail("product of ks must be k+1");
  if (nprod != static_cast<long long>(s.sub_rank())) fail("product of ns must be n-k");
}

std::vector<FactorizationPair> enumerate_factorization_pairs(const GrassmannSpace& s) {
  const int kp = static_cast<int>(s.quotient_rank());
  const int nk = static_cast<int>(s.sub_rank());
  std::vector<FactorizationPair> pairs;
  // Length s needs s-1 factors > 1 on each side.
  for (std::size_t len = 1; (1 << (len - 1)) <= kp && (1 << (len - 1)) <= nk; ++len) {
    const auto kfs = factorizations(kp, len, /*first_one=*/len == 1, /*last_one=*/true);
    const auto nfs = factorizations(nk, len, /*first_one=*/true, /*last_one=*/len == 1);
    for (const auto& ks : kfs) {
      for (const auto& ns : nfs) pairs.push_back({ks, ns});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a < b;
  });
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

BlockGrid::BlockGrid(GrassmannSpace space, std::vector<Entry> cells)
    : space_(space), cells_(std::move(cells)) {
  if (cells_.size() != static_cast<std::size_t>(space_.dimension())) {
    throw Error(ErrorKind::InconsistentGrid, "grid has " + std::to_string(cells_.size()) +
                                                 " cells, expected " +
                                                 std::to_string(space_.dimension()));
  }
}

bool BlockGrid::is_bijection() const {
  std::vector<bool> seen(cells_.size() + 1, false);
  for (Entry v : cells_) {
    if (v < 1 || v > static_cast<Entry>(cells_.size()) || seen[static_cast<std::size_t>(v)]) {
      return false;
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

bool BlockGrid::is_separable() const {
  for (std::size_t row = 1; row <= rows(); ++row) {
    for (std::size_t col = 1; col <= columns(); ++col) {
      if (at(col, row) - at(1, row) != at(col, 1) - at(1, 1)) return false;
    }
  }
  return true;
}

BlockGrid build_grid(const GrassmannSpace& s, const FactorizationPair& p) {
  validate_pair(s, p);
  const std::size_t cols = s.sub_rank();
  const std::size_t rows = s.quotient_rank();
  std::vector<Entry> cells(cols * rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      // Innermost block: k_1 rows of n_1 consecutive values, bottom row first.
      std::size_t width = static_cast<std::size_t>(p.ns[0]);
      std::size_t height = static_cast<std::size_t>(p.ks[0]);
      std::size_t value = (r % height) * width + (c % width);
      // Each outer level stacks k_l rows of n_l copies of the previous block.
      for (std::size_t l = 1; l < p.length(); ++l) {
        const auto nl = static_cast<std::size_t>(p.ns[l]);
        const auto kl = static_cast<std::size_t>(p.ks[l]);
        const std::size_t block_row = (r / height) % kl;
        const std::size_t block_col = (c / width) % nl;
        value += (block_row * nl + block_col) * width * height;
        width *= nl;
        height *= kl;
      }
      cells[r * cols + c] = static_cast<Entry>(value + 1);
    }
  }
  return BlockGrid(s, std::move(cells));
}

HomogeneousBundle bundle_from_grid(const BlockGrid& g) {
  const GrassmannSpace& s = g.space();
  const Entry n = s.n();
  const std::size_t cols = g.columns();
  const std::size_t rows = g.rows();
  const auto nk = static_cast<Entry>(cols);

  std::vector<Entry> b(rows);
  for (std::size_t j = 1; j <= rows; ++j) {
    b[j - 1] = g.t(cols, j) - n + static_cast<Entry>(j) - 1;
  }
  std::vector<Entry> a(cols);
  for (std::size_t i = 1; i <= cols; ++i) {
    a[i - 1] = g.t(cols, rows) - g.t(i, rows) + static_cast<Entry>(i) - nk;
  }
  for (std::size_t i = 1; i <= cols; ++i) {
    for (std::size_t j = 1; j <= rows; ++j) {
      const Entry lhs = b[j - 1] + n - static_cast<Entry>(j) + 2 - g.t(i, j);
      const Entry rhs = a[i - 1] + nk - static_cast<Entry>(i - 1);
      if (lhs != rhs) {
        throw Error(ErrorKind::InconsistentGrid,
                    "relation fails at column " + std::to_string(i) + ", j=" + std::to_string(j));
      }
    }
  }
  try {
    return HomogeneousBundle(s, GLWeight(std::move(b)), GLWeight(std::move(a)));
  } catch (const Error& e) {
    throw Error(ErrorKind::InconsistentGrid, std::string("grid yields ") + e.what());
  }
}

HomogeneousBundle construct_ulrich(const GrassmannSpace& s, const FactorizationPair& p) {
  return bundle_from_grid(build_grid(s, p));
}

std::vector<ConstructedBundle> enumerate_constructions(const GrassmannSpace& s) {
  std::vector<ConstructedBundle> out;
  for (auto& p : enumerate_factorization_pairs(s)) {
    HomogeneousBundle b = construct_ulrich(s, p);
    out.push_back({std::move(p), std::move(b)});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return bundle_less(x.bundle, y.bundle);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto& x, const auto& y) { return x.bundle == y.bundle; }),
            out.end());
  return out;
}

std::vector<HomogeneousBundle> enumerate_ulrich(const GrassmannSpace& s) {
  std::vector<HomogeneousBundle> out;
  for (auto& c : enumerate_constructions(s)) out.push_back(std::move(c.bundle));
  return out;
}

std::size_t count_ulrich(const GrassmannSpace& s) { return enumerate_constructions(s).size(); }

BigInt min_ulrich_rank_product_form(const GrassmannSpace& s) {
  const Entry kp = static_cast<Entry>(s.quotient_rank());
  const Entry nk = static_cast<Entry>(s.sub_rank());
  BigInt num = 1;
  for (Entry i = 1; i <= kp; ++i) {
    for (Entry j = i + 1; j <= kp; ++j) num *= (j - i) * nk;
  }
  BigInt den = 1;
  for (Entry i = 2; i <= s.k(); ++i) den *= detail::factorial(i);
  return detail::exact_div(num, den, "min_ulrich_rank_product_form");
}

BigInt min_ulrich_rank_power_form(const GrassmannSpace& s) {
  const Entry k = s.k();
  return boost::multiprecision::pow(BigInt(s.sub_rank()), static_cast<unsigned>(k * (k + 1) / 2));
}

BigInt min_ulrich_rank(const GrassmannSpace& s) {
  // The closed forms are minimal only for k <= (n-1)/2; otherwise evaluate
  // them on the isomorphic Gr(n-k-1, n).
  const GrassmannSpace reduced = 2 * s.k() <= s.n() - 1 ? s : s.dual_space();
  BigInt product = min_ulrich_rank_product_form(reduced);
  if (product != min_ulrich_rank_power_form(reduced)) {
    throw std::logic_error("minimal rank closed forms disagree");
  }
  return product;
}

ExactRational ulrich_slope(const GrassmannSpace& s) {
  const Entry k = s.k();
  const Entry n = s.n();
  return ExactRational(BigInt(k * (n - k - 1)), BigInt(2)) * ExactRational(degree(s));
}

std::size_t divisor_count(std::uint64_t m) {
  std::size_t count = 0;
  for (std::uint64_t d = 1; d * d <= m; ++d) {
    if (m % d == 0) count += (d * d == m) ? 1 : 2;
  }
  return count;
}

}  // namespace bbwu
