// Brute-force auditors: each one replays a structural statement on a concrete
// mutation class or exchange graph and reports every counterexample found.
// Audits assume nothing; they exist to catch formula misports.
#pragma once

#include "clusterkit/automorphism.hpp"
#include "clusterkit/exchange_graph.hpp"
#include "clusterkit/matrix.hpp"
#include "clusterkit/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace clusterkit {

struct AuditViolation {
  std::string kind;
  nlohmann::ordered_json witness;  // complete enough to replay in isolation
};

struct AuditReport {
  std::string subject;
  std::size_t instances_checked = 0;
  std::vector<AuditViolation> violations;
  std::chrono::duration<double> elapsed{0};
  bool partial = false;  // a bound cut the enumeration short

  bool clean() const { return violations.empty(); }
};

namespace detail {

inline nlohmann::ordered_json matrix_rows_json(const ExchangeMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.rank(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < m.rank(); ++j) row.push_back(to_int64_checked(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::ordered_json sigma_json(const std::vector<int>& sigma) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (int v : sigma) out.push_back(v + 1);
  return out;
}

/// Labeled mutation class of `b` (exact matrix dedup), breadth first.
/// Returns the members and whether a bound was hit.
inline std::pair<std::vector<ExchangeMatrix>, bool> enumerate_matrix_class(
    const ExchangeMatrix& b, const ExploreOptions& limits) {
  std::vector<ExchangeMatrix> members{b};
  std::unordered_map<std::string, std::size_t> seen{{b.str(), 0}};
  std::vector<std::size_t> frontier{0};
  std::size_t depth = 0;
  bool truncated = false;
  const int n = b.rank();
  while (!frontier.empty() && !truncated) {
    if (depth >= limits.max_depth) {
      truncated = true;
      break;
    }
    std::vector<std::size_t> next_frontier;
    for (std::size_t u : frontier) {
      for (int k = 0; k < n && !truncated; ++k) {
        ExchangeMatrix m = mutate_matrix(members[u], k);
        std::string key = m.str();
        if (seen.contains(key)) continue;
        if (members.size() >= limits.max_nodes) {
          truncated = true;
          break;
        }
        seen.emplace(std::move(key), members.size());
        next_frontier.push_back(members.size());
        members.push_back(std::move(m));
      }
      if (truncated) break;
    }
    frontier = std::move(next_frontier);
    ++depth;
  }
  return {std::move(members), truncated};
}

/// Solves b = member * diag(a) for an integer diagonal, column by column.
/// Columns zero on both sides take the conventional a_k = 1; a column zero on
/// exactly one side means no solution, as does any non-integer ratio.
inline std::optional<std::vector<BigInt>> solve_column_diagonal(const ExchangeMatrix& b,
                                                                const ExchangeMatrix& member) {
  const int n = b.rank();
  std::vector<BigInt> diag(n, 1);
  for (int k = 0; k < n; ++k) {
    int witness = -1;
    bool b_zero = true;
    for (int i = 0; i < n; ++i) {
      if (member.at(i, k) != 0 && witness < 0) witness = i;
      if (b.at(i, k) != 0) b_zero = false;
    }
    if (witness < 0) {
      if (!b_zero) return std::nullopt;  // zero column on one side only
      diag[k] = 1;
      continue;
    }
    if (b_zero) return std::nullopt;  // zero column on the other side only
    if (b.at(witness, k) % member.at(witness, k) != 0) return std::nullopt;
    diag[k] = b.at(witness, k) / member.at(witness, k);
    for (int i = 0; i < n; ++i)
      if (b.at(i, k) != member.at(i, k) * diag[k]) return std::nullopt;
  }
  return diag;
}

}  // namespace detail

/// For every member B' of the mutation class of `b` and every integer
/// diagonal A with B = B'A, checks that each a_k on a nonzero block is +-1.
inline AuditReport scalar_rigidity_audit(const ExchangeMatrix& b,
                                         const ExploreOptions& limits = {}) {
  if (b.is_zero())
    throw std::invalid_argument("scalar_rigidity_audit: matrix must be nonzero");
  validate_exchange_matrix(b);
  const auto started = std::chrono::steady_clock::now();

  AuditReport report;
  report.subject = "scalar-rigidity";
  auto [members, truncated] = detail::enumerate_matrix_class(b, limits);
  report.partial = truncated;

  const BlockPartition part = decompose_blocks(b);
  for (const auto& member : members) {
    ++report.instances_checked;
    const auto diag = detail::solve_column_diagonal(b, member);
    if (!diag) continue;  // no integer diagonal relates the pair
    for (int k = 0; k < b.rank(); ++k) {
      if (part.blocks[part.block_of[k]].zero) continue;
      if ((*diag)[k] == 1 || (*diag)[k] == -1) continue;
      nlohmann::ordered_json witness;
      witness["matrix"] = detail::matrix_rows_json(b);
      witness["class_member"] = detail::matrix_rows_json(member);
      nlohmann::ordered_json entries = nlohmann::ordered_json::array();
      for (const BigInt& a : *diag) entries.push_back(to_int64_checked(a));
      witness["diagonal"] = std::move(entries);
      witness["column"] = k + 1;
      report.violations.push_back({"diagonal-entry-not-unit", std::move(witness)});
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

/// Scans every distinct cluster variable of the graph (complete or partial)
/// for a negative coefficient.
inline AuditReport positivity_audit(const ExchangeGraph& g) {
  const auto started = std::chrono::steady_clock::now();
  AuditReport report;
  report.subject = "positivity";
  report.partial = !g.complete;

  std::vector<LaurentPolynomial> vars;
  for (const auto& node : g.nodes)
    for (const auto& entry : node.seed.cluster()) vars.push_back(entry);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

  for (const auto& var : vars) {
    ++report.instances_checked;
    if (is_nonnegative(var)) continue;
    nlohmann::ordered_json witness;
    witness["variable"] = var.str();
    for (std::size_t id = 0; id < g.nodes.size(); ++id) {
      const auto& cluster = g.nodes[id].seed.cluster();
      if (auto it = std::find(cluster.begin(), cluster.end(), var); it != cluster.end()) {
        witness["node"] = id;
        witness["position"] = static_cast<int>(it - cluster.begin()) + 1;
        break;
      }
    }
    report.violations.push_back({"negative-coefficient", std::move(witness)});
  }
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

/// Over every (node, bijection) candidate of a complete graph, checks that the
/// sign test and one-step verification agree, and that accepted candidates
/// satisfy the exact exchange-binomial identity behind the equivalence.
inline AuditReport theorem_audit(const ExchangeGraph& g, unsigned jobs = 1) {
  if (!g.complete)
    throw std::invalid_argument("theorem_audit: exchange graph is incomplete");
  const auto started = std::chrono::steady_clock::now();
  AuditReport report;
  report.subject = "theorem";

  const int n = g.rank();
  const Seed& initial = g.nodes[g.initial].seed;

  std::vector<std::pair<std::size_t, std::vector<int>>> candidates;
  {
    std::vector<int> sigma(n);
    for (std::size_t node = 0; node < g.nodes.size(); ++node) {
      std::iota(sigma.begin(), sigma.end(), 0);
      do {
        candidates.emplace_back(node, sigma);
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
  }

  std::vector<std::vector<AuditViolation>> found(candidates.size());
  parallel_for(candidates.size(), jobs, [&](std::size_t ci) {
    const auto& [node, sigma] = candidates[ci];
    const Seed& target = g.nodes[node].seed;
    ClusterHom hom = induce_hom(initial, target, sigma);
    const bool verified = verify_one_step(hom, initial);

    const auto describe = [&](const char* kind) {
      nlohmann::ordered_json witness;
      witness["node"] = node;
      witness["target_key"] = g.nodes[node].key;
      witness["sigma"] = detail::sigma_json(sigma);
      witness["sign_test"] = hom.sign.has_value();
      witness["one_step_verified"] = verified;
      found[ci].push_back({kind, std::move(witness)});
    };

    if (hom.sign.has_value() != verified) describe("sign-verify-mismatch");
    if (!hom.sign) return;

    // Exact identity behind the accepted candidates: both exchange binomials,
    // evaluated on the images, coincide in every direction.
    std::vector<int> inverse(n);
    for (int i = 0; i < n; ++i) inverse[sigma[i]] = i;
    const ExchangeMatrix relabeled_target = canonical_matrix(target.matrix(), inverse);
    for (int k = 0; k < n; ++k) {
      LaurentPolynomial from_initial = LaurentPolynomial::one(n);
      LaurentPolynomial from_target = LaurentPolynomial::one(n);
      LaurentPolynomial from_initial_neg = LaurentPolynomial::one(n);
      LaurentPolynomial from_target_neg = LaurentPolynomial::one(n);
      for (int i = 0; i < n; ++i) {
        const BigInt& bi = initial.matrix().at(i, k);
        const BigInt& ti = relabeled_target.at(i, k);
        if (bi > 0) from_initial = from_initial * hom.images[i].pow(to_int64_checked(bi));
        else if (bi < 0)
          from_initial_neg = from_initial_neg * hom.images[i].pow(to_int64_checked(-bi));
        if (ti > 0) from_target = from_target * hom.images[i].pow(to_int64_checked(ti));
        else if (ti < 0)
          from_target_neg = from_target_neg * hom.images[i].pow(to_int64_checked(-ti));
      }
      if (from_initial + from_initial_neg != from_target + from_target_neg) {
        describe("exchange-binomial-mismatch");
        break;
      }
    }
  });

  report.instances_checked = candidates.size();
  for (auto& batch : found)
    for (auto& violation : batch) report.violations.push_back(std::move(violation));
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

}  // namespace clusterkit
