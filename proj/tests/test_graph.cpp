#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace clusterkit;
using testsupport::a1;
using testsupport::a2;
using testsupport::a3;
using testsupport::b2;

namespace {

void check_regular_and_symmetric(const ExchangeGraph& g) {
  REQUIRE(g.complete);
  const int n = g.rank();
  for (std::size_t u = 0; u < g.nodes.size(); ++u) {
    REQUIRE(static_cast<int>(g.nodes[u].neighbors.size()) == n);
    for (std::size_t k = 0; k < g.nodes[u].neighbors.size(); ++k) {
      const std::size_t v = g.nodes[u].neighbors[k];
      REQUIRE(v != ExchangeGraph::npos);
      const auto& back = g.nodes[v].neighbors;
      CHECK(std::find(back.begin(), back.end(), u) != back.end());
    }
  }
}

std::set<std::string> variable_set(const ExchangeGraph& g) {
  std::set<std::string> rendered;
  for (const auto& v : cluster_variables(g)) rendered.insert(v.str());
  return rendered;
}

}  // namespace

TEST_CASE("type A1 exchange graph is a single edge", "[graph]") {
  const ExchangeGraph g = explore(Seed::initial(a1()));
  REQUIRE(g.complete);
  REQUIRE(g.nodes.size() == 2);
  CHECK(g.nodes[0].neighbors == std::vector<std::size_t>{1});
  CHECK(g.nodes[1].neighbors == std::vector<std::size_t>{0});
  CHECK(variable_set(g) == std::set<std::string>{"x1", "2*x1^-1"});
}

TEST_CASE("type A2 exchange graph is the pentagon", "[graph]") {
  const ExchangeGraph g = explore(Seed::initial(a2()));
  REQUIRE(g.complete);
  CHECK(g.nodes.size() == 5);
  check_regular_and_symmetric(g);

  CHECK(variable_set(g) == std::set<std::string>{
                               "x1",
                               "x2",
                               "x1^-1 + x1^-1*x2",          // (1 + x2) / x1
                               "x2^-1 + x1*x2^-1",          // (1 + x1) / x2
                               "x1^-1*x2^-1 + x1^-1 + x2^-1",  // (1 + x1 + x2) / (x1 x2)
                           });

  // Pentagon: five nodes of degree two and five distinct unordered edges.
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < g.nodes.size(); ++u)
    for (std::size_t v : g.nodes[u].neighbors) edges.emplace(std::min(u, v), std::max(u, v));
  CHECK(edges.size() == 5);
}

TEST_CASE("type A3 exchange graph is the associahedron", "[graph]") {
  const ExchangeGraph g = explore(Seed::initial(a3()));
  REQUIRE(g.complete);
  CHECK(g.nodes.size() == 14);
  CHECK(cluster_variables(g).size() == 9);
  check_regular_and_symmetric(g);
}

TEST_CASE("type B2 exchange graph is the hexagon", "[graph]") {
  const ExchangeGraph g = explore(Seed::initial(b2()));
  REQUIRE(g.complete);
  CHECK(g.nodes.size() == 6);
  CHECK(cluster_variables(g).size() == 6);
  check_regular_and_symmetric(g);
}

TEST_CASE("decomposable seeds explore the product graph", "[graph]") {
  // A1 x A1: two independent directions, four seeds in a square.
  const ExchangeGraph g = explore(Seed::initial(ExchangeMatrix(2)));
  REQUIRE(g.complete);
  CHECK(g.nodes.size() == 4);
  check_regular_and_symmetric(g);
}

TEST_CASE("exploration bounds produce explicit partial graphs", "[graph]") {
  SECTION("node budget") {
    const ExchangeGraph g = explore(Seed::initial(a2()), {.max_nodes = 1});
    CHECK_FALSE(g.complete);
    CHECK(g.nodes.size() == 1);
    CHECK_THROWS_AS(cluster_variables(g), std::invalid_argument);
  }
  SECTION("depth budget") {
    const ExchangeGraph g = explore(Seed::initial(a2()), {.max_depth = 1});
    CHECK_FALSE(g.complete);
    CHECK(g.nodes.size() == 3);  // the initial seed and its two neighbors
  }
  SECTION("markov quiver does not close within a small budget") {
    const ExchangeMatrix markov{{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}};
    const ExchangeGraph g = explore(Seed::initial(markov), {.max_nodes = 30});
    CHECK_FALSE(g.complete);
    CHECK(g.nodes.size() <= 30);
  }
}

TEST_CASE("replaying a node's path lands on the node", "[graph][property]") {
  for (const ExchangeMatrix& b : {a2(), a3(), b2()}) {
    const Seed s0 = Seed::initial(b);
    const ExchangeGraph g = explore(s0);
    for (const auto& node : g.nodes) {
      const Seed replayed = replay_path(s0, node.seed.path());
      CHECK(replayed == node.seed);
      CHECK(canonical_key(replayed) == node.key);
    }
  }
}

TEST_CASE("worker count never changes the graph", "[graph][concurrency]") {
  for (const ExchangeMatrix& b : {a2(), a3(), b2()}) {
    const ExchangeGraph reference = explore(Seed::initial(b), {.jobs = 1});
    const ExchangeGraph parallel = explore(Seed::initial(b), {.jobs = 4});
    REQUIRE(reference.nodes.size() == parallel.nodes.size());
    CHECK(reference.complete == parallel.complete);
    for (std::size_t i = 0; i < reference.nodes.size(); ++i) {
      CHECK(reference.nodes[i].key == parallel.nodes[i].key);
      CHECK(reference.nodes[i].seed == parallel.nodes[i].seed);
      CHECK(reference.nodes[i].neighbors == parallel.nodes[i].neighbors);
    }
  }
}

TEST_CASE("every enumerated variable is a positive Laurent polynomial", "[graph][property]") {
  for (const ExchangeMatrix& b : {a1(), a2(), a3(), b2()}) {
    const ExchangeGraph g = explore(Seed::initial(b));
    for (const auto& v : cluster_variables(g)) CHECK(is_nonnegative(v));
  }
}
