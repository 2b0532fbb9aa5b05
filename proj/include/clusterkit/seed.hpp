// Labeled seeds: a cluster of Laurent polynomials (expressed in the initial
// cluster), an exchange matrix, and the mutation path that produced the seed.
#pragma once

#include "clusterkit/laurent.hpp"
#include "clusterkit/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace clusterkit {

/// Exchange division came out inexact: the seed data is corrupted, since a
/// genuine seed always divides exactly.
struct seed_integrity_error : std::logic_error {
  using std::logic_error::logic_error;
};

class Seed {
 public:
  Seed(std::vector<LaurentPolynomial> cluster, ExchangeMatrix matrix,
       std::vector<int> path = {})
      : cluster_(std::move(cluster)), matrix_(std::move(matrix)), path_(std::move(path)) {
    const int n = matrix_.rank();
    if (static_cast<int>(cluster_.size()) != n)
      throw std::invalid_argument("Seed: cluster size must equal matrix rank");
    for (const auto& entry : cluster_) {
      if (entry.nvars() != n)
        throw std::invalid_argument("Seed: cluster entries must live in the rank-n Laurent ring");
      if (entry.is_zero())
        throw std::invalid_argument("Seed: cluster entries must be nonzero");
    }
    for (std::size_t i = 0; i < cluster_.size(); ++i)
      for (std::size_t j = i + 1; j < cluster_.size(); ++j)
        if (cluster_[i] == cluster_[j])
          throw std::invalid_argument("Seed: cluster entries must be pairwise distinct");
    validate_exchange_matrix(matrix_);
  }

  /// The seed (x_1, ..., x_n) with the given exchange matrix.
  static Seed initial(const ExchangeMatrix& matrix) {
    const int n = matrix.rank();
    std::vector<LaurentPolynomial> cluster;
    cluster.reserve(n);
    for (int i = 0; i < n; ++i) cluster.push_back(LaurentPolynomial::variable(n, i));
    return Seed(std::move(cluster), matrix);
  }

  int rank() const { return matrix_.rank(); }
  const std::vector<LaurentPolynomial>& cluster() const { return cluster_; }
  const ExchangeMatrix& matrix() const { return matrix_; }
  const std::vector<int>& path() const { return path_; }

  friend bool operator==(const Seed& a, const Seed& b) {
    return a.cluster_ == b.cluster_ && a.matrix_ == b.matrix_ && a.path_ == b.path_;
  }

 private:
  std::vector<LaurentPolynomial> cluster_;
  ExchangeMatrix matrix_;
  std::vector<int> path_;
};

/// Seed mutation in direction k: entry k becomes
/// (prod x_i^max(b_ik,0) + prod x_i^max(-b_ik,0)) / x_k
/// and the matrix mutates alongside. The division is exact for genuine seeds.
inline Seed mutate_seed(const Seed& seed, int k) {
  const int n = seed.rank();
  if (k < 0 || k >= n) throw std::out_of_range("mutation index out of range");
  const auto& b = seed.matrix();

  LaurentPolynomial plus = LaurentPolynomial::one(n);
  LaurentPolynomial minus = LaurentPolynomial::one(n);
  for (int i = 0; i < n; ++i) {
    const BigInt& e = b.at(i, k);
    if (e > 0) plus = plus * seed.cluster()[i].pow(to_int64_checked(e));
    else if (e < 0) minus = minus * seed.cluster()[i].pow(to_int64_checked(-e));
  }

  auto quotient = div_exact(plus + minus, seed.cluster()[k]);
  if (!quotient)
    throw seed_integrity_error("exchange division is inexact; seed is corrupted");

  auto cluster = seed.cluster();
  cluster[k] = std::move(*quotient);
  auto path = seed.path();
  path.push_back(k);
  return Seed(std::move(cluster), mutate_matrix(b, k), std::move(path));
}

/// Simultaneous relabeling: entry i moves to position sigma[i], the matrix is
/// conjugated accordingly. The replay path does not survive relabeling.
inline Seed permute_seed(const Seed& seed, std::span<const int> sigma) {
  const int n = seed.rank();
  ExchangeMatrix matrix = canonical_matrix(seed.matrix(), sigma);  // validates sigma
  std::vector<LaurentPolynomial> cluster(n, LaurentPolynomial::zero(n));
  for (int i = 0; i < n; ++i) cluster[sigma[i]] = seed.cluster()[i];
  return Seed(std::move(cluster), std::move(matrix));
}

using SeedKey = std::string;

/// Key invariant under simultaneous permutation: cluster entries are sorted in
/// the canonical Laurent order and the induced relabeling is applied to the
/// matrix. Distinctness of cluster entries rules out ties.
inline SeedKey canonical_key(const Seed& seed) {
  const int n = seed.rank();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return LaurentPolynomial::compare(seed.cluster()[a], seed.cluster()[b]) < 0;
  });
  std::vector<int> sigma(n);
  for (int r = 0; r < n; ++r) sigma[order[r]] = r;

  std::string key;
  for (int r = 0; r < n; ++r) {
    key += seed.cluster()[order[r]].str();
    key += ';';
  }
  key += '|';
  const ExchangeMatrix m = canonical_matrix(seed.matrix(), sigma);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      key += m.at(i, j).str();
      key += ',';
    }
    key += ';';
  }
  return key;
}

/// Left-to-right replay of a mutation sequence.
inline Seed replay_path(Seed seed, std::span<const int> path) {
  for (int k : path) seed = mutate_seed(seed, k);
  return seed;
}

}  // namespace clusterkit
