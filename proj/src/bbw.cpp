#include "bbwu/bbw.hpp"

#include <algorithm>
#include <string>

namespace bbwu {

GrassmannSpace::GrassmannSpace(int k, int n) : k_(k), n_(n) {
  if (k < 0 || n < 1 || k > n - 1) {
    throw Error(ErrorKind::InvalidSpace, "Gr(" + std::to_string(k) + "," + std::to_string(n) +
                                             ") needs 0 <= k <= n-1");
  }
}

HomogeneousBundle::HomogeneousBundle(GrassmannSpace space, GLWeight beta, GLWeight gamma)
    : space_(space), beta_(std::move(beta)), gamma_(std::move(gamma)) {
  if (beta_.size() != space_.quotient_rank()) {
    throw Error(ErrorKind::LengthMismatch, "beta has length " + std::to_string(beta_.size()) +
                                               ", expected k+1 = " +
                                               std::to_string(space_.quotient_rank()));
  }
  if (gamma_.size() != space_.sub_rank()) {
    throw Error(ErrorKind::LengthMismatch, "gamma has length " + std::to_string(gamma_.size()) +
                                               ", expected n-k = " +
                                               std::to_string(space_.sub_rank()));
  }
}

HomogeneousBundle HomogeneousBundle::structure_sheaf(GrassmannSpace space) {
  return line_bundle(space, 0);
}

HomogeneousBundle HomogeneousBundle::line_bundle(GrassmannSpace space, Entry t) {
  return {space, GLWeight::constant(space.quotient_rank(), t),
          GLWeight::constant(space.sub_rank(), 0)};
}

HomogeneousBundle HomogeneousBundle::quotient(GrassmannSpace space) {
  return {space, pad(GLWeight({1}), space.quotient_rank()),
          GLWeight::constant(space.sub_rank(), 0)};
}

HomogeneousBundle HomogeneousBundle::dual_sub(GrassmannSpace space) {
  return {space, GLWeight::constant(space.quotient_rank(), 0),
          pad(GLWeight({1}), space.sub_rank())};
}

bool bundle_less(const HomogeneousBundle& a, const HomogeneousBundle& b) {
  if (a.beta() != b.beta()) return a.beta() < b.beta();
  return a.gamma() < b.gamma();
}

HomogeneousBundle twist(const HomogeneousBundle& b, Entry t) {
  return {b.space(), shift(b.beta(), t), b.gamma()};
}

NormalizedBundle normalize(const HomogeneousBundle& b) {
  const Entry l = -b.gamma().back();
  return {HomogeneousBundle(b.space(), shift(b.beta(), l), shift(b.gamma(), l)), l};
}

CohomologyReport cohomology(const HomogeneousBundle& b, Entry t) {
  const std::size_t m = b.space().ambient_rank();
  const std::vector<Entry> staircase = rho(m);

  std::vector<Entry> shifted;
  shifted.reserve(m);
  for (Entry e : b.beta().entries()) shifted.push_back(e + t);
  for (Entry e : b.gamma().entries()) shifted.push_back(e);
  for (std::size_t i = 0; i < m; ++i) shifted[i] += staircase[i];

  auto sorted = sort_and_count(shifted);
  if (!sorted) return {};

  std::vector<Entry> weight = std::move(sorted->values);
  for (std::size_t i = 0; i < m; ++i) weight[i] -= staircase[i];
  GLWeight w(std::move(weight));
  BigInt dim = weyl_dim(w, m);
  return {CohomologyGroup{static_cast<Entry>(sorted->inversions), std::move(w), std::move(dim)}};
}

std::vector<TwistedReport> cohomology_table(const HomogeneousBundle& b, Entry t_min,
                                            Entry t_max) {
  if (t_min > t_max) {
    throw Error(ErrorKind::BadRange,
                "empty twist range [" + std::to_string(t_min) + ", " + std::to_string(t_max) + "]");
  }
  std::vector<TwistedReport> rows;
  rows.reserve(static_cast<std::size_t>(t_max - t_min + 1));
  for (Entry t = t_min; t <= t_max; ++t) rows.push_back({t, cohomology(b, t)});
  return rows;
}

BigInt euler_characteristic(const HomogeneousBundle& b, Entry t) {
  const CohomologyReport r = cohomology(b, t);
  if (r.vanishes()) return 0;
  return r.group->degree % 2 == 0 ? r.group->dimension : BigInt(-r.group->dimension);
}

HomogeneousBundle dual(const HomogeneousBundle& b) {
  auto negate_reverse = [](const GLWeight& w) {
    std::vector<Entry> out(w.entries().rbegin(), w.entries().rend());
    for (Entry& e : out) e = -e;
    return GLWeight(std::move(out));
  };
  return {b.space(), negate_reverse(b.beta()), negate_reverse(b.gamma())};
}

BigInt h0(const HomogeneousBundle& b) {
  const CohomologyReport r = cohomology(b, 0);
  if (r.vanishes() || r.group->degree != 0) return 0;
  return r.group->dimension;
}

}  // namespace bbwu
