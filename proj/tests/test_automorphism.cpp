#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace clusterkit;
using testsupport::a1;
using testsupport::a2;
using testsupport::a3;
using testsupport::identity_perm;

namespace {

std::set<std::string> image_fingerprints(const AutomorphismGroup& group) {
  std::set<std::string> out;
  for (const auto& hom : group.elements) {
    std::string fp;
    for (const auto& img : hom.images) fp += img.str() + ";";
    out.insert(fp);
  }
  return out;
}

}  // namespace

TEST_CASE("sign test", "[automorphism]") {
  const Seed s0 = Seed::initial(a2());

  SECTION("one mutation away, identity relabeling") {
    const auto sign = sign_test(s0, mutate_seed(s0, 0), identity_perm(2));
    REQUIRE(sign);
    CHECK(sign->signs == std::vector<int>{-1, -1});
  }
  SECTION("identity candidate") {
    const auto sign = sign_test(s0, s0, identity_perm(2));
    REQUIRE(sign);
    CHECK(sign->signs == std::vector<int>{1, 1});
  }
  SECTION("entry magnitudes rule a candidate out") {
    const Seed heavier({parse_laurent("x1", 2), parse_laurent("x2", 2)},
                       ExchangeMatrix{{0, 2}, {-2, 0}});
    CHECK_FALSE(sign_test(s0, heavier, identity_perm(2)));
  }
  SECTION("rank mismatch") {
    CHECK_THROWS_AS(sign_test(s0, Seed::initial(a3()), identity_perm(2)),
                    std::invalid_argument);
  }
}

TEST_CASE("induced homomorphism candidates", "[automorphism]") {
  const Seed s0 = Seed::initial(a2());

  SECTION("identity") {
    const ClusterHom hom = induce_hom(s0, s0, identity_perm(2));
    CHECK(hom.images == s0.cluster());
    CHECK(hom.verified == VerifyState::Unchecked);
    REQUIRE(hom.sign);
  }
  SECTION("images come from the target cluster through sigma") {
    const ClusterHom hom = induce_hom(s0, mutate_seed(s0, 0), identity_perm(2));
    CHECK(hom.images[0] == parse_laurent("x1^-1 + x1^-1*x2", 2));
    CHECK(hom.images[1] == parse_laurent("x2", 2));
  }
  SECTION("relabeling candidate") {
    const ClusterHom hom = induce_hom(s0, s0, std::vector<int>{1, 0});
    CHECK(hom.images[0] == parse_laurent("x2", 2));
    CHECK(hom.images[1] == parse_laurent("x1", 2));
  }
}

TEST_CASE("one-step verification", "[automorphism]") {
  const Seed s0 = Seed::initial(a2());

  SECTION("identity passes") {
    ClusterHom hom = induce_hom(s0, s0, identity_perm(2));
    CHECK(verify_one_step(hom, s0));
    CHECK(hom.verified == VerifyState::Passed);
  }
  SECTION("a genuine automorphism candidate passes") {
    ClusterHom hom = induce_hom(s0, mutate_seed(s0, 0), identity_perm(2));
    REQUIRE(hom.sign);
    CHECK(verify_one_step(hom, s0));
  }
  SECTION("sign-test rejects exactly the candidates that fail verification") {
    const ExchangeGraph g = explore(s0);
    for (const auto& node : g.nodes) {
      std::vector<int> sigma = identity_perm(2);
      do {
        ClusterHom hom = induce_hom(s0, node.seed, sigma);
        CHECK(hom.sign.has_value() == verify_one_step(hom, s0));
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
  }
}

TEST_CASE("rank-one automorphism group has order two", "[automorphism]") {
  const ExchangeGraph g = explore(Seed::initial(a1()));
  const AutomorphismGroup group = automorphism_group(g);
  REQUIRE(group.elements.size() == 2);

  std::set<std::string> images;
  for (const auto& hom : group.elements) images.insert(hom.images[0].str());
  CHECK(images == std::set<std::string>{"x1", "2*x1^-1"});

  // The nontrivial element is an involution.
  const std::size_t other = group.identity == 0 ? 1 : 0;
  CHECK(group.table[other][other] == group.identity);
}

TEST_CASE("group search equals the verify-only brute force", "[automorphism]") {
  for (const ExchangeMatrix& b : {a2(), a3()}) {
    const ExchangeGraph g = explore(Seed::initial(b));
    const AutomorphismGroup pruned = automorphism_group(g, {.sign_prune = true});
    const AutomorphismGroup brute = automorphism_group(g, {.sign_prune = false});
    CHECK(image_fingerprints(pruned) == image_fingerprints(brute));
    CHECK(pruned.elements.size() == brute.elements.size());
  }
}

TEST_CASE("the group satisfies the group axioms", "[automorphism]") {
  const ExchangeGraph g = explore(Seed::initial(a2()));
  const AutomorphismGroup group = automorphism_group(g);
  const std::size_t m = group.elements.size();
  REQUIRE(m > 0);

  SECTION("identity behaves neutrally") {
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(group.table[group.identity][i] == i);
      CHECK(group.table[i][group.identity] == i);
    }
  }
  SECTION("every element has a two-sided inverse") {
    for (std::size_t i = 0; i < m; ++i) {
      bool found = false;
      for (std::size_t j = 0; j < m; ++j)
        if (group.table[i][j] == group.identity && group.table[j][i] == group.identity)
          found = true;
      CHECK(found);
    }
  }
  SECTION("composition is associative") {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k)
          CHECK(group.table[group.table[i][j]][k] == group.table[i][group.table[j][k]]);
  }
}

TEST_CASE("automorphisms permute the cluster-variable set", "[automorphism][property]") {
  for (const ExchangeMatrix& b : {a1(), a2()}) {
    const ExchangeGraph g = explore(Seed::initial(b));
    const auto vars = cluster_variables(g);
    const AutomorphismGroup group = automorphism_group(g);
    for (const auto& hom : group.elements) {
      std::vector<LaurentPolynomial> mapped;
      for (const auto& v : vars) {
        const auto image = substitute(v, hom.images);
        REQUIRE(image);
        mapped.push_back(*image);
      }
      std::sort(mapped.begin(), mapped.end());
      CHECK(mapped == vars);
    }
  }
}

TEST_CASE("sign patterns are blockwise constant and may mix across blocks",
          "[automorphism][property]") {
  const Seed s0 = Seed::initial(testsupport::a2_plus_a2());
  const ExchangeGraph g = explore(s0);
  REQUIRE(g.complete);
  CHECK(g.nodes.size() == 25);  // pentagon x pentagon

  bool saw_mixed = false;
  for (const auto& node : g.nodes) {
    std::vector<int> sigma = identity_perm(4);
    do {
      const auto sign = sign_test(s0, node.seed, sigma);
      if (!sign) continue;
      const ExchangeMatrix relabeled = canonical_matrix(s0.matrix(), sigma);
      const BlockPartition part = decompose_blocks(relabeled);
      for (const auto& block : part.blocks)
        for (std::size_t i = 1; i < block.indices.size(); ++i)
          CHECK(sign->signs[block.indices[i]] == sign->signs[block.indices[0]]);
      const auto [lo, hi] = std::minmax_element(sign->signs.begin(), sign->signs.end());
      if (*lo != *hi) saw_mixed = true;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  CHECK(saw_mixed);  // mutating one summand flips only that block's sign
}

TEST_CASE("partial graphs are rejected", "[automorphism]") {
  const ExchangeGraph partial = explore(Seed::initial(a2()), {.max_nodes = 2});
  CHECK_THROWS_AS(automorphism_group(partial), std::invalid_argument);
}

TEST_CASE("group search is independent of worker count", "[automorphism][concurrency]") {
  const ExchangeGraph g = explore(Seed::initial(a3()));
  const AutomorphismGroup one = automorphism_group(g, {.sign_prune = true, .jobs = 1});
  const AutomorphismGroup many = automorphism_group(g, {.sign_prune = true, .jobs = 4});
  REQUIRE(one.elements.size() == many.elements.size());
  for (std::size_t i = 0; i < one.elements.size(); ++i) {
    CHECK(one.elements[i].images == many.elements[i].images);
    CHECK(one.elements[i].sigma == many.elements[i].sigma);
  }
  CHECK(one.table == many.table);
  CHECK(one.identity == many.identity);
}
