// Cluster-automorphism candidates and their two independent checks: the
// blockwise matrix sign test and the symbolic one-step commutation check,
// plus exhaustive group search over a complete exchange graph.
#pragma once

#include "clusterkit/exchange_graph.hpp"
#include "clusterkit/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace clusterkit {

enum class VerifyState { Unchecked, Passed, Failed };

/// A candidate endomorphism f given by images of the initial cluster:
/// images[i] = f(x_i) = target.cluster()[sigma[i]].
struct ClusterHom {
  std::vector<LaurentPolynomial> images;
  Seed target;
  SeedKey target_key;
  std::vector<int> sigma;
  std::optional<SignPattern> sign;
  VerifyState verified = VerifyState::Unchecked;
};

/// Relabels the initial matrix by sigma and asks for a blockwise sign vector
/// relating it to the target matrix. nullopt means the candidate cannot be a
/// cluster automorphism.
inline std::optional<SignPattern> sign_test(const Seed& initial, const Seed& target,
                                            std::span<const int> sigma) {
  if (initial.rank() != target.rank())
    throw std::invalid_argument("sign_test: rank mismatch");
  const ExchangeMatrix relabeled = canonical_matrix(initial.matrix(), sigma);
  return sign_match_up_to_blocks(relabeled, target.matrix(), decompose_blocks(relabeled));
}

inline ClusterHom induce_hom(const Seed& initial, const Seed& target, std::vector<int> sigma) {
  if (initial.rank() != target.rank())
    throw std::invalid_argument("induce_hom: rank mismatch");
  auto sign = sign_test(initial, target, sigma);  // validates sigma
  const int n = initial.rank();
  std::vector<LaurentPolynomial> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) images.push_back(target.cluster()[sigma[i]]);
  return ClusterHom{std::move(images), target,        canonical_key(target),
                    std::move(sigma),  std::move(sign), VerifyState::Unchecked};
}

/// Checks f(mu_k(x)) = mu_{f(x_k)}(z) for every direction k by substituting
/// the candidate images into the mutated initial cluster and comparing, term
/// for term, with the mutated target cluster. A substitution that leaves the
/// Laurent ring counts as failure.
inline bool verify_one_step(ClusterHom& hom, const Seed& initial) {
  const int n = initial.rank();
  if (static_cast<int>(hom.images.size()) != n)
    throw std::invalid_argument("verify_one_step: image count mismatch");
  for (int k = 0; k < n; ++k) {
    const Seed mutated = mutate_seed(initial, k);
    const auto mapped = substitute(mutated.cluster()[k], hom.images);
    if (!mapped) {
      hom.verified = VerifyState::Failed;
      return false;
    }
    const int tk = hom.sigma[k];
    const Seed target_mutated = mutate_seed(hom.target, tk);
    if (*mapped != target_mutated.cluster()[tk]) {
      hom.verified = VerifyState::Failed;
      return false;
    }
  }
  hom.verified = VerifyState::Passed;
  return true;
}

struct AutoSearchOptions {
  bool sign_prune = true;  // false: accept by one-step verification alone
  unsigned jobs = 1;
};

struct AutomorphismGroup {
  std::vector<ClusterHom> elements;            // sorted by (target_key, sigma)
  std::vector<std::vector<std::size_t>> table; // table[i][j] = index of i after j
  std::size_t identity = 0;
};

namespace detail {

inline std::string images_fingerprint(const std::vector<LaurentPolynomial>& images) {
  std::string out;
  for (const auto& img : images) {
    out += img.str();
    out += ';';
  }
  return out;
}

}  // namespace detail

/// f composed after g, i.e. x_i -> f(g(x_i)). Throws when a substitution falls
/// outside the Laurent ring, which cannot happen for verified automorphisms.
inline std::vector<LaurentPolynomial> compose_images(
    const std::vector<LaurentPolynomial>& outer, const std::vector<LaurentPolynomial>& inner) {
  std::vector<LaurentPolynomial> out;
  out.reserve(inner.size());
  for (const auto& img : inner) {
    auto value = substitute(img, outer);
    if (!value)
      throw std::logic_error("compose_images: composition left the Laurent ring");
    out.push_back(std::move(*value));
  }
  return out;
}

/// Exhaustive search over (node, bijection) candidates of a complete graph.
/// With sign_prune, candidates failing the sign test are discarded before the
/// symbolic check; without it, one-step verification alone decides. The result
/// is closed under composition, contains the identity, and carries the full
/// composition table.
inline AutomorphismGroup automorphism_group(const ExchangeGraph& g,
                                            const AutoSearchOptions& options = {}) {
  if (!g.complete)
    throw std::invalid_argument("automorphism_group: exchange graph is incomplete");
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

  std::vector<std::optional<ClusterHom>> accepted(candidates.size());
  parallel_for(candidates.size(), options.jobs, [&](std::size_t ci) {
    const auto& [node, sigma] = candidates[ci];
    ClusterHom hom = induce_hom(initial, g.nodes[node].seed, sigma);
    if (options.sign_prune && !hom.sign) return;
    if (verify_one_step(hom, initial)) accepted[ci] = std::move(hom);
  });

  AutomorphismGroup group;
  std::map<std::string, std::size_t> by_images;
  for (auto& slot : accepted) {
    if (!slot) continue;
    const std::string fp = detail::images_fingerprint(slot->images);
    if (by_images.contains(fp)) continue;
    by_images.emplace(fp, 0);  // placeholder; rebuilt after sorting
    group.elements.push_back(std::move(*slot));
  }
  std::sort(group.elements.begin(), group.elements.end(),
            [](const ClusterHom& a, const ClusterHom& b) {
              if (a.target_key != b.target_key) return a.target_key < b.target_key;
              return a.sigma < b.sigma;
            });
  by_images.clear();
  for (std::size_t i = 0; i < group.elements.size(); ++i)
    by_images.emplace(detail::images_fingerprint(group.elements[i].images), i);

  std::vector<LaurentPolynomial> identity_images;
  for (int i = 0; i < n; ++i) identity_images.push_back(LaurentPolynomial::variable(n, i));
  const auto id_it = by_images.find(detail::images_fingerprint(identity_images));
  if (id_it == by_images.end())
    throw std::logic_error("automorphism_group: identity element missing");
  group.identity = id_it->second;

  const std::size_t m = group.elements.size();
  group.table.assign(m, std::vector<std::size_t>(m));
  std::vector<std::string> composed(m * m);
  parallel_for(m * m, options.jobs, [&](std::size_t cell) {
    const std::size_t i = cell / m, j = cell % m;
    composed[cell] = detail::images_fingerprint(
        compose_images(group.elements[i].images, group.elements[j].images));
  });
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto it = by_images.find(composed[i * m + j]);
      if (it == by_images.end())
        throw std::logic_error("automorphism_group: set is not closed under composition");
      group.table[i][j] = it->second;
    }
  return group;
}

}  // namespace clusterkit
