#include "bbwu/grassmann.hpp"

#include "exact.hpp"

namespace bbwu {

Entry variety_dimension(const GrassmannSpace& s) { return s.dimension(); }

BigInt degree(const GrassmannSpace& s) {
  const Entry k = s.k();
  const Entry n = s.n();
  BigInt num = detail::factorial(s.dimension());
  for (Entry i = 2; i <= k; ++i) num *= detail::factorial(i);
  BigInt den = 1;
  for (Entry i = n - k; i <= n; ++i) den *= detail::factorial(i);
  return detail::exact_div(num, den, "degree");
}

BigInt rank(const HomogeneousBundle& b) {
  return weyl_dim(b.beta(), b.space().quotient_rank()) *
         weyl_dim(b.gamma(), b.space().sub_rank());
}

ExactRational slope(const HomogeneousBundle& b) {
  const auto& s = b.space();
  ExactRational mu(BigInt(b.beta().sum()), BigInt(s.quotient_rank()));
  mu -= ExactRational(BigInt(b.gamma().sum()), BigInt(s.sub_rank()));
  return mu * ExactRational(degree(s));
}

BigInt c1_degree(const HomogeneousBundle& b) {
  const ExactRational c1 = slope(b) * ExactRational(rank(b));
  if (denominator(c1) != 1) {
    throw Error(ErrorKind::NonIntegralChernDegree, "slope * rank = " + c1.str());
  }
  return numerator(c1);
}

}  // namespace bbwu
