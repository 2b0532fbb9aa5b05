// Shared fixtures and generators for the test suites.
#pragma once

#include "clusterkit/clusterkit.hpp"

#include <numeric>
#include <random>
#include <vector>

namespace testsupport {

using namespace clusterkit;

inline ExchangeMatrix a1() { return ExchangeMatrix{{0}}; }
inline ExchangeMatrix a2() { return ExchangeMatrix{{0, 1}, {-1, 0}}; }
inline ExchangeMatrix a3() { return ExchangeMatrix{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}; }
inline ExchangeMatrix b2() { return ExchangeMatrix{{0, 2}, {-1, 0}}; }
inline ExchangeMatrix a2_plus_a2() {
  return ExchangeMatrix{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
}

/// Random skew-symmetrizable matrix with |entries| <= max_abs. A positive
/// diagonal d is drawn first and each edge weight is chosen so that diag(d)
/// symmetrizes by construction: b_ij = t*d_i/g, b_ji = -t*d_j/g with
/// g = gcd(d_i, d_j) gives b_ij*d_j = -b_ji*d_i.
inline ExchangeMatrix random_skew_symmetrizable(std::mt19937& rng, int max_rank = 6,
                                                int max_abs = 4) {
  std::uniform_int_distribution<int> rank_dist(1, max_rank);
  std::uniform_int_distribution<int> d_dist(1, 3);
  std::uniform_int_distribution<int> coin(0, 1);

  const int n = rank_dist(rng);
  std::vector<long long> d(n);
  for (auto& v : d) v = d_dist(rng);

  ExchangeMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng) == 0) continue;
      const long long g = std::gcd(d[i], d[j]);
      const long long t_max = std::min(max_abs * g / d[i], max_abs * g / d[j]);
      if (t_max < 1) continue;
      std::uniform_int_distribution<long long> t_dist(1, t_max);
      const long long t = t_dist(rng) * (coin(rng) ? 1 : -1);
      m.at(i, j) = t * d[i] / g;
      m.at(j, i) = -t * d[j] / g;
    }
  return m;
}

/// Random Laurent polynomial: up to max_terms terms, exponents in
/// [-max_exp, max_exp], nonzero coefficients in [-4, 4].
inline LaurentPolynomial random_laurent(std::mt19937& rng, int nvars, int max_terms = 5,
                                        int max_exp = 3) {
  std::uniform_int_distribution<int> term_dist(0, max_terms);
  std::uniform_int_distribution<int> exp_dist(-max_exp, max_exp);
  std::uniform_int_distribution<int> coeff_dist(-4, 4);

  LaurentPolynomial p = LaurentPolynomial::zero(nvars);
  const int terms = term_dist(rng);
  for (int t = 0; t < terms; ++t) {
    LaurentPolynomial::Exponents e(nvars);
    for (auto& v : e) v = exp_dist(rng);
    int c = coeff_dist(rng);
    if (c == 0) c = 1;
    p += LaurentPolynomial::monomial(nvars, std::move(e), c);
  }
  return p;
}

inline std::vector<int> identity_perm(int n) {
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  return sigma;
}

}  // namespace testsupport
