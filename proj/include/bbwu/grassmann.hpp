#pragma once

// Numerical invariants of Gr(k, n) in its Pluecker embedding and of
// homogeneous bundles on it.

#include <boost/multiprecision/cpp_int.hpp>

#include "bbwu/bbw.hpp"

namespace bbwu {

/// Always in lowest terms with a positive denominator.
using ExactRational = boost::multiprecision::cpp_rational;

Entry variety_dimension(const GrassmannSpace& s);

/// Pluecker degree ((k+1)(n-k))! * k!(k-1)!...2! / (n!(n-1)!...(n-k)!).
BigInt degree(const GrassmannSpace& s);

/// weyl_dim(beta, k+1) * weyl_dim(gamma, n-k)
BigInt rank(const HomogeneousBundle& b);

/// deg c_1 / rank, computed as (sum(beta)/(k+1) - sum(gamma)/(n-k)) * degree
/// with signed sums.
ExactRational slope(const HomogeneousBundle& b);

/// slope * rank. Throws NonIntegralChernDegree if that is not an integer.
BigInt c1_degree(const HomogeneousBundle& b);

}  // namespace bbwu
