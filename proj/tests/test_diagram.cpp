#include <catch2/catch_amalgamated.hpp>

#include "quiverknot/coloring.hpp"
#include "quiverknot/diagram.hpp"
#include "quiverknot/error.hpp"
#include "support.hpp"

using namespace quiverknot;

namespace {

ErrorKind kind_of(std::string_view pd) {
  try {
    (void)parse_pd(pd);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error for " << pd);
  return ErrorKind::invalid_input;
}

std::vector<int> signs(const LinkDiagram& d) {
  std::vector<int> out;
  for (const auto& c : d.crossings()) out.push_back(c.sign);
  return out;
}

}  // namespace

TEST_CASE("trefoil structure", "[diagram]") {
  const auto d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
  CHECK(d.arc_count() == 3);
  CHECK(d.component_count() == 1);
  CHECK(d.crossings().size() == 3);
  const auto s = signs(d);
  CHECK(std::all_of(s.begin(), s.end(), [&](int x) { return x == s.front(); }));
  CHECK(relations(d).size() == 3);
  // knot atlas bracket syntax is accepted too
  CHECK(parse_pd("X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]").to_pd() == d.to_pd());
}

TEST_CASE("Hopf link structure", "[diagram]") {
  const auto d = qk_test::links().diagram("L2a1");
  CHECK(d.name == "L2a1");
  CHECK(d.arc_count() == 2);
  CHECK(d.component_count() == 2);
  auto comps = d.components();
  std::sort(comps.begin(), comps.end());
  CHECK(comps == std::vector<std::vector<int>>{{1}, {2}});
}

TEST_CASE("unknot forms", "[diagram]") {
  for (auto pd : {"", "O(1)", "  "}) {
    const auto d = parse_pd(pd);
    CHECK(d.arc_count() == 1);
    CHECK(d.component_count() == 1);
    CHECK(d.crossings().empty());
  }
  const auto two = parse_pd("O(1) O(2)");
  CHECK(two.component_count() == 2);
  CHECK(two.arc_count() == 2);
}

TEST_CASE("virtual crossings merge arcs and impose nothing", "[diagram]") {
  const auto curl = parse_pd("V(1,2,2,1)");
  CHECK(curl.arc_count() == 1);
  CHECK(curl.virtual_crossing_count() == 1);
  CHECK(relations(curl).empty());
  CHECK(counting_invariant(curl, dihedral(3)) == 3);

  const auto vhopf = parse_pd("X(1,3,2,4) V(2,4,1,3)");
  CHECK(vhopf.arc_count() == 2);
  CHECK(vhopf.component_count() == 2);
  CHECK(vhopf.virtual_crossing_count() == 1);
  CHECK(vhopf.crossings().size() == 1);
  CHECK(counting_invariant(vhopf, dihedral(3)) == 3);
}

TEST_CASE("PD errors", "[diagram]") {
  CHECK(kind_of("X(1,2,3)") == ErrorKind::malformed_token);
  CHECK(kind_of("Y(1,2,3,4)") == ErrorKind::malformed_token);
  CHECK(kind_of("X(1,2,3,4") == ErrorKind::malformed_token);
  CHECK(kind_of("X(1,a,3,4)") == ErrorKind::malformed_token);
  CHECK(kind_of("X(0,1,1,0)") == ErrorKind::malformed_token);
  CHECK(kind_of("X(1,2,3,4)") == ErrorKind::open_diagram);
  CHECK(kind_of("X(1,4,2,5) X(3,6,4,1)") == ErrorKind::open_diagram);
  CHECK(kind_of("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) O(1)") == ErrorKind::open_diagram);
  // a positive and a negative sign on the same over strand direction
  CHECK(kind_of("X+(1,4,2,5) X-(3,6,4,1) X(5,2,6,3)") == ErrorKind::orientation_conflict);
}

TEST_CASE("reversal", "[diagram]") {
  SECTION("twice is the identity on every bundled link") {
    for (const auto& name : qk_test::links().names()) {
      const auto d = qk_test::links().diagram(name);
      for (int k = 0; k < d.component_count(); ++k) {
        const auto back = reverse_component(reverse_component(d, k), k);
        CHECK(back.to_pd() == d.to_pd());
      }
    }
  }
  SECTION("one Hopf component flips both crossing signs") {
    const auto d = qk_test::links().diagram("L2a1");
    const auto r = reverse_component(d, 0);
    REQUIRE(signs(d).size() == 2);
    CHECK(signs(r) == std::vector<int>{-signs(d)[0], -signs(d)[1]});
    const auto both = reverse_component(r, 1);
    CHECK(signs(both) == signs(d));
  }
  SECTION("a knot keeps its signs") {
    const auto d = qk_test::links().diagram("trefoil");
    CHECK(signs(reverse_component(d, 0)) == signs(d));
  }
  SECTION("bad index") {
    const auto d = qk_test::links().diagram("L2a1");
    CHECK_THROWS_AS(reverse_component(d, 2), Error);
    CHECK_THROWS_AS(reverse_component(d, -1), Error);
  }
}

TEST_CASE("signed PD output round trips", "[diagram]") {
  for (const auto& name : qk_test::links().names()) {
    const auto d = qk_test::links().diagram(name);
    const auto again = parse_pd(d.to_pd());
    CHECK(again.to_pd() == d.to_pd());
    CHECK(again.arc_count() == d.arc_count());
    CHECK(again.components() == d.components());
    CHECK(signs(again) == signs(d));
  }
}

TEST_CASE("add_kink adds one crossing and one arc", "[diagram]") {
  const auto d = qk_test::links().diagram("trefoil");
  for (int arc = 1; arc <= d.arc_count(); ++arc)
    for (int sign : {1, -1}) {
      const auto k = add_kink(d, arc, sign);
      CHECK(k.arc_count() == d.arc_count() + 1);
      CHECK(k.crossings().size() == d.crossings().size() + 1);
      CHECK(k.component_count() == d.component_count());
      CHECK(signs(k).back() == sign);
    }
  // a one-crossing diagram has a single arc
  const auto kinked = add_kink(parse_pd("O(1)"), 1, 1);
  CHECK(kinked.arc_count() == 1);
  CHECK(kinked.crossings().size() == 1);
  CHECK_THROWS_AS(add_kink(d, 0, 1), Error);
  CHECK_THROWS_AS(add_kink(d, 4, 1), Error);
  CHECK_THROWS_AS(add_kink(d, 1, 0), Error);
}

TEST_CASE("dataset parsing", "[diagram][data]") {
  const auto ds = LinkDataset::parse("# c\nhopf: X(4,1,3,2) X(2,3,1,4)\nL6n1{0,1}: O(1)\n");
  CHECK(ds.names() == std::vector<std::string>{"hopf", "L6n1{0,1}"});
  CHECK(ds.diagram("hopf").arc_count() == 2);
  CHECK(ds.contains("L6n1{0,1}"));
  CHECK_THROWS_AS(ds.pd("nope"), Error);
  CHECK_THROWS_AS(LinkDataset::parse("a: O(1)\na: O(1)\n"), Error);
  CHECK_THROWS_AS(LinkDataset::parse("no colon here\n"), Error);
  for (const auto& name : qk_test::data_dir().empty() ? std::vector<std::string>{} : prime_links_through_seven())
    CHECK(qk_test::links().contains(name));
}
