#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "quiverknot/coloring.hpp"
#include "quiverknot/error.hpp"
#include "quiverknot/poly.hpp"
#include "quiverknot/quiver.hpp"
#include "support.hpp"

using namespace quiverknot;
using qk_test::bundled;
using qk_test::links;

namespace {

ColoringQuiver hopf_quiver() {
  const Quandle q = bundled("q3");
  return build_quiver(enumerate_colorings(links().diagram("L2a1"), q), parse_endomorphism_set("[1,1,2];[2,2,1]", q),
                      q);
}

constexpr TrailSemantics all_semantics[] = {TrailSemantics::set_maximal, TrailSemantics::endpoint_maximal,
                                            TrailSemantics::insertion_maximal};

}  // namespace

TEST_CASE("Hopf quiver shape", "[quiver]") {
  const auto q = hopf_quiver();
  CHECK(q.vertex_count() == 5);
  CHECK(q.edge_count() == 10);
  std::multiset<int> in;
  for (int v = 0; v < q.vertex_count(); ++v) {
    CHECK(q.out_degree(v) == 2);
    in.insert(q.in_degree(v));
  }
  CHECK(in == std::multiset<int>{0, 0, 0, 5, 5});
  // f -> s o f: the constant colorings (1,1) and (2,2) absorb everything
  CHECK(q.vertices()[0].str() == "(1,1)");
  CHECK(q.in_degree(0) == 5);
  CHECK(q.vertices()[3].str() == "(2,2)");
  CHECK(q.in_degree(3) == 5);
}

TEST_CASE("Hopf quiver loops and central cycle", "[quiver]") {
  const auto q = hopf_quiver();
  auto has_edge = [&](int a, int b, int label) {
    return std::find(q.edges().begin(), q.edges().end(), Edge{a, b, label}) != q.edges().end();
  };
  CHECK(has_edge(0, 0, 0));  // loop at (1,1) by the first map
  CHECK(has_edge(3, 3, 1));  // loop at (2,2) by the second
  CHECK(has_edge(0, 3, 1));
  CHECK(has_edge(3, 0, 0));
}

TEST_CASE("identity endomorphism gives one loop per vertex", "[quiver]") {
  const Quandle q = dihedral(3);
  const auto quiver = build_quiver(enumerate_colorings(links().diagram("trefoil"), q), {identity_endomorphism(3)}, q);
  CHECK(quiver.vertex_count() == 9);
  for (const auto& e : quiver.edges()) CHECK(e.source == e.target);
  for (int v = 0; v < quiver.vertex_count(); ++v) CHECK(quiver.in_degree(v) == 1);
  CHECK(maximal_trails(quiver, TrailSemantics::set_maximal).size() == 9);
}

TEST_CASE("single loop is one trail of length one", "[quiver]") {
  const Digraph g(1, {Edge{0, 0, 0}});
  for (auto sem : all_semantics) {
    const auto t = maximal_trails(g, sem);
    REQUIRE(t.size() == 1);
    CHECK(t[0].length() == 1);
  }
  CHECK(maximal_trails(Digraph(3, {}), TrailSemantics::set_maximal).empty());
}

TEST_CASE("L7a3 quiver size", "[quiver]") {
  const Quandle q = bundled("q4");
  const auto quiver =
      build_quiver(enumerate_colorings(links().diagram("L7a3"), q), parse_endomorphism_set("[1,2,4,3];[2,1,2,2]", q), q);
  CHECK(quiver.vertex_count() == 16);
  CHECK(quiver.edge_count() == 32);
}

TEST_CASE("Hopf maximal trails", "[quiver]") {
  const auto q = hopf_quiver();
  const auto set = maximal_trails(q, TrailSemantics::set_maximal);
  const auto insert = maximal_trails(q, TrailSemantics::insertion_maximal);
  const auto endpoint = maximal_trails(q, TrailSemantics::endpoint_maximal);
  CHECK(set.size() == 12);
  CHECK(insert == set);
  CHECK(endpoint.size() == 24);
  for (const auto& t : set) CHECK(t.length() == 5);
  // the extra endpoint trails skip the loop at their last vertex
  CHECK(std::count_if(endpoint.begin(), endpoint.end(), [](const Trail& t) { return t.length() == 4; }) == 12);
}

TEST_CASE("trail search equals blind enumeration on random small multigraphs", "[quiver][oracle]") {
  std::mt19937 rng(20241014);
  for (int round = 0; round < 400; ++round) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int m = static_cast<int>(rng() % 7);
    std::vector<Edge> edges;
    for (int e = 0; e < m; ++e)
      edges.push_back(Edge{static_cast<int>(rng() % n), static_cast<int>(rng() % n), e});
    const Digraph g(n, edges);
    for (auto sem : all_semantics) {
      INFO("round " << round << " semantics " << to_string(sem));
      CHECK(maximal_trails(g, sem) == qk_test::blind_trails(g, sem));
    }
  }
}

TEST_CASE("trail search equals blind enumeration on every small coloring quiver", "[quiver][oracle]") {
  std::vector<Quandle> qs{bundled("q3"), dihedral(3), bundled("q4"), bundled("q4c")};
  for (int n = 2; n <= 3; ++n)
    for (const auto& q : qk_test::all_quandles(n)) qs.push_back(q);
  std::size_t quivers = 0;
  for (const auto& name : links().names()) {
    const auto d = links().diagram(name);
    for (const auto& q : qs) {
      const auto homset = enumerate_colorings(d, q);
      const auto endos = enumerate_endomorphisms(q);
      for (std::size_t i = 0; i < endos.size(); ++i)
        for (std::size_t j = i; j < endos.size(); ++j) {
          std::vector<Endomorphism> s{endos[i]};
          if (j != i) s.push_back(endos[j]);
          if (homset.size() * s.size() > 6) continue;
          const auto quiver = build_quiver(homset, s, q);
          for (auto sem : all_semantics) CHECK(maximal_trails(quiver, sem) == qk_test::blind_trails(quiver.graph(), sem));
          ++quivers;
        }
    }
  }
  CHECK(quivers > 100);
}

TEST_CASE("every vertex has out-degree |S|", "[quiver]") {
  for (const auto& q : qk_test::bundled_quandles()) {
    const auto all = enumerate_endomorphisms(q);
    for (const auto& name : prime_links_through_seven()) {
      const auto quiver = build_quiver(enumerate_colorings(links().diagram(name), q), all, q);
      std::size_t in_total = 0;
      for (int v = 0; v < quiver.vertex_count(); ++v) {
        CHECK(quiver.out_degree(v) == static_cast<int>(all.size()));
        in_total += static_cast<std::size_t>(quiver.in_degree(v));
      }
      CHECK(in_total == all.size() * static_cast<std::size_t>(quiver.vertex_count()));
    }
  }
}

TEST_CASE("build_quiver rejects bad input", "[quiver]") {
  const Quandle q = bundled("q3");
  auto homset = enumerate_colorings(links().diagram("L2a1"), q);
  CHECK_THROWS_AS(build_quiver({}, parse_endomorphism_set("all", q), q), Error);
  try {
    (void)build_quiver(homset, {Endomorphism{{3, 3, 1}}}, q);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_an_endomorphism);
  }
  homset.pop_back();
  CHECK_THROWS_AS(build_quiver(homset, {Endomorphism{{3, 3, 3}}}, q), Error);
}

TEST_CASE("trail cap is enforced", "[quiver]") {
  const auto q = hopf_quiver();
  CHECK_THROWS_AS(maximal_trails(q, TrailSemantics::set_maximal, 5), CapExceeded);
  CHECK_NOTHROW(maximal_trails(q, TrailSemantics::set_maximal, 1000));
}

TEST_CASE("DOT output", "[quiver]") {
  const auto q = hopf_quiver();
  const auto a = to_dot(q, "hopf");
  CHECK(a == to_dot(hopf_quiver(), "hopf"));
  CHECK(a.rfind("digraph hopf {", 0) == 0);
  CHECK(std::count(a.begin(), a.end(), '\n') == 2 + 5 + 10);
  CHECK(a.find("v0 [label=\"(1,1)\\nin 5\"];") != std::string::npos);
  CHECK(a.find("-> v0 [label=\"s1\"]") != std::string::npos);
}

TEST_CASE("trail semantics names", "[quiver]") {
  for (auto s : all_semantics) CHECK(parse_trail_semantics(to_string(s)) == s);
  CHECK(parse_trail_semantics("set-maximal") == TrailSemantics::set_maximal);
  CHECK_THROWS_AS(parse_trail_semantics("longest"), Error);
}
