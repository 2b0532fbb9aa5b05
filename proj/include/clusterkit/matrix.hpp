// Exchange-matrix arithmetic: mutation in two formulations, skew-symmetrizer
// search, block decomposition, and the blockwise sign comparison used by the
// automorphism test.
//
// Conventions: indices are 0-based; a skew-symmetrizer is a positive integer
// diagonal D with B*D skew-symmetric, i.e. b_ij*d_j = -b_ji*d_i.
#pragma once

#include "clusterkit/bigint.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace clusterkit {

class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;

  explicit ExchangeMatrix(int rank)
      : n_(checked_rank(rank)), cells_(static_cast<std::size_t>(rank) * rank) {}

  ExchangeMatrix(std::initializer_list<std::initializer_list<long long>> rows)
      : ExchangeMatrix(static_cast<int>(rows.size())) {
    int i = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n_)
        throw std::invalid_argument("ExchangeMatrix: rows must form a square matrix");
      int j = 0;
      for (long long v : row) at(i, j++) = v;
      ++i;
    }
  }

  static ExchangeMatrix from_rows(const std::vector<std::vector<BigInt>>& rows) {
    ExchangeMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.n_; ++i) {
      if (static_cast<int>(rows[i].size()) != m.n_)
        throw std::invalid_argument("ExchangeMatrix: rows must form a square matrix");
      for (int j = 0; j < m.n_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  int rank() const { return n_; }

  const BigInt& at(int i, int j) const { return cells_[index(i, j)]; }
  BigInt& at(int i, int j) { return cells_[index(i, j)]; }

  bool is_zero() const {
    return std::all_of(cells_.begin(), cells_.end(), [](const BigInt& v) { return v == 0; });
  }

  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }

  /// Compact row-major rendering, e.g. "[[0,1],[-1,0]]".
  std::string str() const {
    std::ostringstream out;
    out << '[';
    for (int i = 0; i < n_; ++i) {
      out << (i ? ",[" : "[");
      for (int j = 0; j < n_; ++j) out << (j ? "," : "") << at(i, j).str();
      out << ']';
    }
    out << ']';
    return out.str();
  }

 private:
  static int checked_rank(int rank) {
    if (rank < 0) throw std::invalid_argument("ExchangeMatrix: rank must be nonnegative");
    return rank;
  }

  std::size_t index(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
      throw std::out_of_range("ExchangeMatrix: index out of range");
    return static_cast<std::size_t>(i) * n_ + j;
  }

  int n_ = 0;
  std::vector<BigInt> cells_;
};

struct SkewSymmetrizer {
  std::vector<BigInt> d;  // positive diagonal, gcd 1 on each block
};

struct BlockPartition {
  struct Block {
    std::vector<int> indices;  // sorted
    bool zero = false;
  };
  std::vector<Block> blocks;  // ordered by smallest member index
  std::vector<int> block_of;  // index -> position in `blocks`
};

struct SignPattern {
  std::vector<int> signs;  // entries in {+1, -1}, constant per nonzero block
};

namespace detail {

inline void check_mutation_index(const ExchangeMatrix& b, int k) {
  if (k < 0 || k >= b.rank())
    throw std::out_of_range("mutation index out of range");
}

inline ExchangeMatrix mat_mul(const ExchangeMatrix& a, const ExchangeMatrix& b) {
  const int n = a.rank();
  ExchangeMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int m = 0; m < n; ++m) {
      const BigInt& aim = a.at(i, m);
      if (aim == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (b.at(m, j) == 0) continue;
        out.at(i, j) += aim * b.at(m, j);
      }
    }
  return out;
}

}  // namespace detail

/// Matrix mutation in direction k: entries in row/column k flip sign, the rest
/// pick up sgn(b_ik)*max(b_ik*b_kj, 0).
inline ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k) {
  detail::check_mutation_index(b, k);
  const int n = b.rank();
  ExchangeMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out.at(i, j) = -b.at(i, j);
      } else {
        out.at(i, j) = b.at(i, j);
        const BigInt prod = b.at(i, k) * b.at(k, j);
        if (prod > 0) out.at(i, j) += sign_of(b.at(i, k)) * prod;
      }
    }
  return out;
}

/// The same mutation written as the product (J_k+E_k)*B*(J_k+F_k), where J_k
/// is the identity with -1 in slot k, E_k has column k equal to max(-b_ik, 0)
/// and F_k has row k equal to max(b_kj, 0). Must agree with mutate_matrix.
inline ExchangeMatrix mutate_matrix_product(const ExchangeMatrix& b, int k) {
  detail::check_mutation_index(b, k);
  const int n = b.rank();
  ExchangeMatrix left(n), right(n);
  for (int i = 0; i < n; ++i) {
    left.at(i, i) = (i == k) ? -1 : 1;
    right.at(i, i) = (i == k) ? -1 : 1;
  }
  for (int i = 0; i < n; ++i) {
    if (b.at(i, k) < 0) left.at(i, k) += -b.at(i, k);
    if (b.at(k, i) > 0) right.at(k, i) += b.at(k, i);
  }
  return detail::mat_mul(left, detail::mat_mul(b, right));
}

/// Finds the normalized positive integer diagonal D with B*D skew-symmetric,
/// or nullopt when none exists. Ratios d_j/d_i are propagated along a spanning
/// tree of each nonzero block with exact rationals; every remaining constraint
/// is verified before denominators are cleared and the block gcd is reduced.
inline std::optional<SkewSymmetrizer> find_skew_symmetrizer(const ExchangeMatrix& b) {
  const int n = b.rank();
  for (int i = 0; i < n; ++i)
    if (b.at(i, i) != 0) return std::nullopt;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if ((b.at(i, j) == 0) != (b.at(j, i) == 0)) return std::nullopt;
      if (b.at(i, j) != 0 && sign_of(b.at(i, j)) == sign_of(b.at(j, i))) return std::nullopt;
    }

  std::vector<BigRat> ratio(n);
  std::vector<int> component(n, -1);
  std::vector<BigInt> d(n);
  for (int root = 0; root < n; ++root) {
    if (component[root] >= 0) continue;
    component[root] = root;
    ratio[root] = 1;
    std::vector<int> todo{root};
    std::vector<int> members{root};
    while (!todo.empty()) {
      const int i = todo.back();
      todo.pop_back();
      for (int j = 0; j < n; ++j) {
        if (j == i || b.at(i, j) == 0) continue;
        // b_ij*d_j = -b_ji*d_i  =>  d_j = d_i * (-b_ji)/b_ij
        BigInt num = -b.at(j, i);
        BigInt den = b.at(i, j);
        if (den < 0) {  // the rational constructor wants a positive denominator
          num = -num;
          den = -den;
        }
        const BigRat r = ratio[i] * BigRat(std::move(num), std::move(den));
        if (component[j] < 0) {
          component[j] = root;
          ratio[j] = r;
          todo.push_back(j);
          members.push_back(j);
        } else if (ratio[j] != r) {
          return std::nullopt;  // inconsistent cycle
        }
      }
    }
    BigInt scale = 1;
    for (int i : members) scale = lcm(scale, denominator(ratio[i]));
    BigInt g = 0;
    for (int i : members) g = gcd(g, numerator(ratio[i]) * (scale / denominator(ratio[i])));
    for (int i : members) d[i] = numerator(ratio[i]) * (scale / denominator(ratio[i])) / g;
  }
  return SkewSymmetrizer{std::move(d)};
}

/// Connected components of the index graph with an edge {i,j} whenever
/// b_ij != 0 or b_ji != 0; indices with all-zero row and column are merged
/// into a single zero-block. Blocks are ordered by smallest member.
inline BlockPartition decompose_blocks(const ExchangeMatrix& b) {
  const int n = b.rank();
  std::vector<int> component(n, -1);
  std::vector<std::vector<int>> groups;
  for (int root = 0; root < n; ++root) {
    if (component[root] >= 0) continue;
    const int id = static_cast<int>(groups.size());
    component[root] = id;
    groups.push_back({root});
    std::vector<int> todo{root};
    while (!todo.empty()) {
      const int i = todo.back();
      todo.pop_back();
      for (int j = 0; j < n; ++j) {
        if (component[j] >= 0 || (b.at(i, j) == 0 && b.at(j, i) == 0)) continue;
        component[j] = id;
        groups[id].push_back(j);
        todo.push_back(j);
      }
    }
  }

  BlockPartition part;
  part.block_of.assign(n, -1);
  BlockPartition::Block zero_block;
  zero_block.zero = true;
  for (auto& group : groups) {
    if (group.size() == 1 && [&] {
          const int i = group.front();
          for (int j = 0; j < n; ++j)
            if (b.at(i, j) != 0 || b.at(j, i) != 0) return false;
          return true;
        }()) {
      zero_block.indices.push_back(group.front());
    } else {
      std::sort(group.begin(), group.end());
      part.blocks.push_back({std::move(group), false});
    }
  }
  if (!zero_block.indices.empty()) {
    std::sort(zero_block.indices.begin(), zero_block.indices.end());
    part.blocks.push_back(std::move(zero_block));
  }
  std::sort(part.blocks.begin(), part.blocks.end(),
            [](const auto& a, const auto& b2) { return a.indices.front() < b2.indices.front(); });
  for (std::size_t p = 0; p < part.blocks.size(); ++p)
    for (int i : part.blocks[p].indices) part.block_of[i] = static_cast<int>(p);
  return part;
}

/// Searches for a sign vector a, constant on each nonzero block of `part` and
/// +1 on the zero-block, with b = b2 * diag(a). Returns nullopt when no such
/// vector exists.
inline std::optional<SignPattern> sign_match_up_to_blocks(const ExchangeMatrix& b,
                                                          const ExchangeMatrix& b2,
                                                          const BlockPartition& part) {
  if (b.rank() != b2.rank())
    throw std::invalid_argument("sign_match_up_to_blocks: rank mismatch");
  const int n = b.rank();
  std::vector<int> signs(n, 1);
  for (const auto& block : part.blocks) {
    if (block.zero) {
      for (int j : block.indices)
        for (int i = 0; i < n; ++i)
          if (b.at(i, j) != b2.at(i, j)) return std::nullopt;  // both must vanish
      continue;
    }
    const auto matches = [&](int eps) {
      for (int j : block.indices)
        for (int i = 0; i < n; ++i)
          if (b.at(i, j) != eps * b2.at(i, j)) return false;
      return true;
    };
    int eps;
    if (matches(+1)) {
      eps = +1;
    } else if (matches(-1)) {
      eps = -1;
    } else {
      return std::nullopt;
    }
    for (int j : block.indices) signs[j] = eps;
  }
  return SignPattern{std::move(signs)};
}

/// Simultaneous row/column relabeling: entry (i,j) moves to (sigma[i], sigma[j]).
inline ExchangeMatrix canonical_matrix(const ExchangeMatrix& b, std::span<const int> sigma) {
  const int n = b.rank();
  if (static_cast<int>(sigma.size()) != n)
    throw std::invalid_argument("canonical_matrix: permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (int v : sigma) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("canonical_matrix: not a permutation");
    seen[v] = true;
  }
  ExchangeMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(sigma[i], sigma[j]) = b.at(i, j);
  return out;
}

/// Human-readable reason why `b` is not a valid exchange matrix (1-based
/// indices in the message), or nullopt when it is one.
inline std::optional<std::string> exchange_matrix_diagnostic(const ExchangeMatrix& b) {
  const int n = b.rank();
  if (n == 0) return "matrix must have positive rank";
  for (int i = 0; i < n; ++i)
    if (b.at(i, i) != 0) {
      std::ostringstream out;
      out << "diagonal entry (" << i + 1 << "," << i + 1 << ")=" << b.at(i, i)
          << " must be zero";
      return out.str();
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const bool bad_zero = (b.at(i, j) == 0) != (b.at(j, i) == 0);
      const bool bad_sign =
          b.at(i, j) != 0 && sign_of(b.at(i, j)) == sign_of(b.at(j, i));
      if (bad_zero || bad_sign) {
        std::ostringstream out;
        out << "entries (" << i + 1 << "," << j + 1 << ")=" << b.at(i, j) << " and ("
            << j + 1 << "," << i + 1 << ")=" << b.at(j, i)
            << " violate sign compatibility";
        return out.str();
      }
    }
  if (!find_skew_symmetrizer(b))
    return "no positive integer skew-symmetrizer exists";
  return std::nullopt;
}

inline void validate_exchange_matrix(const ExchangeMatrix& b) {
  if (auto why = exchange_matrix_diagnostic(b))
    throw std::invalid_argument("invalid exchange matrix: " + *why);
}

}  // namespace clusterkit
