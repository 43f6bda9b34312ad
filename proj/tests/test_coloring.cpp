#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "quiverknot/coloring.hpp"
#include "quiverknot/error.hpp"
#include "support.hpp"

using namespace quiverknot;
using qk_test::bundled;
using qk_test::links;

TEST_CASE("counting invariants of the worked examples", "[coloring]") {
  CHECK(counting_invariant(links().diagram("trefoil"), dihedral(3)) == 9);
  CHECK(counting_invariant(links().diagram("L2a1"), bundled("q3")) == 5);
  CHECK(counting_invariant(links().diagram("L7a3"), bundled("q4")) == 16);
  CHECK(counting_invariant(links().diagram("L7a5"), bundled("q4")) == 16);
  CHECK(counting_invariant(links().diagram("L6a3"), bundled("q5")) == 13);
  CHECK(counting_invariant(links().diagram("L7a2"), bundled("q5")) == 13);
  for (int n = 1; n <= 6; ++n) {
    CHECK(counting_invariant(links().diagram("unknot"), trivial_quandle(n)) == static_cast<std::uint64_t>(n));
    CHECK(counting_invariant(links().diagram("unknot"), dihedral(n)) == static_cast<std::uint64_t>(n));
  }
}

TEST_CASE("Hopf colorings by the three-element example", "[coloring]") {
  std::vector<std::string> got;
  for (const auto& c : enumerate_colorings(links().diagram("L2a1"), bundled("q3"))) got.push_back(c.str());
  CHECK(got == std::vector<std::string>{"(1,1)", "(1,2)", "(2,1)", "(2,2)", "(3,3)"});
}

TEST_CASE("propagating search equals the brute-force filter", "[coloring][oracle]") {
  std::vector<Quandle> qs{bundled("q3"), dihedral(3)};
  for (int n = 1; n <= 3; ++n)
    for (const auto& q : qk_test::all_quandles(n)) qs.push_back(q);
  std::size_t pairs = 0;
  for (const auto& name : links().names()) {
    const auto d = links().diagram(name);
    const auto rels = relations(d);
    for (const auto& q : qs) {
      const auto fast = enumerate_colorings(d, q);
      const auto slow = brute_force_colorings(d, q);
      REQUIRE(fast == slow);
      for (const auto& c : fast) CHECK(satisfies_relations(c, rels, q));
      ++pairs;
    }
  }
  CHECK(pairs > 500);
}

TEST_CASE("propagation agrees with brute force on larger quandles", "[coloring][oracle]") {
  for (const auto& name : {"L2a1", "L4a1", "L5a1", "L6a3", "L7a2", "L7a3", "L7a5", "L6n1"}) {
    const auto d = links().diagram(name);
    for (const auto& q : {bundled("q4"), bundled("q4c"), bundled("q5"), dihedral(5)})
      CHECK(enumerate_colorings(d, q) == brute_force_colorings(d, q));
  }
}

TEST_CASE("homsets are closed under endomorphisms and contain the constants", "[coloring]") {
  for (const auto& q : qk_test::bundled_quandles()) {
    const auto endos = enumerate_endomorphisms(q);
    for (const auto& name : prime_links_through_seven()) {
      const auto d = links().diagram(name);
      const auto homset = enumerate_colorings(d, q);
      const std::set<Coloring> set(homset.begin(), homset.end());
      for (int x = 1; x <= q.size(); ++x)
        CHECK(set.count(Coloring{std::vector<int>(static_cast<std::size_t>(d.arc_count()), x)}));
      for (const auto& c : homset)
        for (const auto& s : endos) CHECK(set.count(apply_endo(c, s)));
    }
  }
}

TEST_CASE("trivial quandle colors arcs freely within components", "[coloring]") {
  // every relation collapses to in == out, so colorings are constant on components
  for (const auto& name : prime_links_through_seven()) {
    const auto d = links().diagram(name);
    std::uint64_t expected = 1;
    for (int k = 0; k < d.component_count(); ++k) expected *= 3;
    CHECK(counting_invariant(d, trivial_quandle(3)) == expected);
  }
}

TEST_CASE("brute force refuses oversized searches", "[coloring]") {
  CHECK_THROWS_AS(brute_force_colorings(links().diagram("L7a1"), dihedral(12), 1000), CapExceeded);
}

TEST_CASE("apply_endo acts arc-wise", "[coloring]") {
  const Coloring c33{{3, 3}};
  CHECK(apply_endo(c33, Endomorphism{{1, 1, 2}}).str() == "(2,2)");
  CHECK(apply_endo(Coloring{{1, 2}}, Endomorphism{{2, 2, 1}}).str() == "(2,2)");
  CHECK(apply_endo(Coloring{{1, 2}}, identity_endomorphism(3)) == Coloring{{1, 2}});
}

TEST_CASE("trivial quandles on the trefoil", "[coloring]") {
  CHECK(counting_invariant(links().diagram("trefoil"), trivial_quandle(1)) == 1);
  CHECK(counting_invariant(links().diagram("trefoil"), trivial_quandle(3)) == 3);
}
