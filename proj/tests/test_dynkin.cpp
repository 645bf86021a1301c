#include <doctest.h>

#include <set>

#include "rootspace/decomposition.hpp"
#include "rootspace/dynkin.hpp"
#include "rootspace/errors.hpp"

using namespace rootspace;

namespace {

RootSystem of(Family f, int n) { return from_decomposition(decompose(build(f, n))); }

// Closure of the simple roots under their reflections, in simple-root coordinates.
RootSystem from_cartan_gram(const RationalMatrix& g) {
  const std::size_t r = g.rows();
  std::vector<RationalVector> roots;
  std::set<RationalVector> seen;
  for (std::size_t k = 0; k < r; ++k) {
    RationalVector e(r);
    e[k] = 1;
    roots.push_back(e);
    seen.insert(e);
  }
  for (std::size_t h = 0; h < roots.size(); ++h)
    for (std::size_t k = 0; k < r; ++k) {
      RationalVector e(r);
      e[k] = 1;
      const RationalVector x = roots[h];
      const Rational c = 2 * pairing(x, g, e) / g(k, k);
      const RationalVector y = x - c * e;
      if (seen.insert(y).second) roots.push_back(y);
    }
  return make_root_system(r, g, roots);
}

RationalMatrix simply_laced(std::size_t r, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  RationalMatrix g(r, r);
  for (std::size_t k = 0; k < r; ++k) g(k, k) = 2;
  for (auto [a, b] : edges) g(a, b) = g(b, a) = -1;
  return g;
}

std::string label(const RootSystem& rs) {
  const auto l = classification_label(diagram_of(rs));
  std::string s;
  for (const auto& x : l) s += (s.empty() ? "" : "+") + x;
  return s;
}

}  // namespace

TEST_CASE("classical diagrams get their types") {
  CHECK(label(of(Family::SU, 2)) == "A1");
  CHECK(label(of(Family::SU, 5)) == "A4");
  CHECK(label(of(Family::SO_odd, 1)) == "A1");
  CHECK(label(of(Family::SO_odd, 2)) == "B2=C2");
  CHECK(label(of(Family::SO_odd, 4)) == "B4");
  CHECK(label(of(Family::Sp, 1)) == "A1");
  CHECK(label(of(Family::Sp, 2)) == "B2=C2");
  CHECK(label(of(Family::Sp, 4)) == "C4");
  CHECK(label(of(Family::SO_even, 2)) == "A1+A1");
  CHECK(label(of(Family::SO_even, 3)) == "A3");
  CHECK(label(of(Family::SO_even, 5)) == "D5");
}

TEST_CASE("exceptional diagrams") {
  CHECK(label(from_cartan_gram(simply_laced(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}}))) == "E6");
  CHECK(label(from_cartan_gram(simply_laced(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}}))) == "E7");
  CHECK(label(from_cartan_gram(simply_laced(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}}))) == "E8");
  CHECK(from_cartan_gram(simply_laced(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}})).roots.size() == 240);
  RationalMatrix f4(4, 4);
  f4(0, 0) = f4(1, 1) = 2;
  f4(2, 2) = f4(3, 3) = 1;
  f4(0, 1) = f4(1, 0) = -1;
  f4(1, 2) = f4(2, 1) = -1;
  f4(2, 3) = f4(3, 2) = make_rational(-1, 2);
  const RootSystem F4 = from_cartan_gram(f4);
  CHECK(F4.roots.size() == 48);
  CHECK(label(F4) == "F4");
  CHECK(weyl_order_from_labels({"F4"}) == 1152);
}

TEST_CASE("Weyl orders implied by the labels") {
  CHECK(weyl_order_from_labels({"A3"}) == 24);
  CHECK(weyl_order_from_labels({"B3"}) == 48);
  CHECK(weyl_order_from_labels({"D4"}) == 192);
  CHECK(weyl_order_from_labels({"A1", "A1"}) == 4);
  CHECK(weyl_order_from_labels({"G2"}) == 12);
  CHECK(weyl_order_from_labels({"E6"}) == 51840);
  CHECK_FALSE(weyl_order_from_labels({"unknown"}).has_value());
}

TEST_CASE("arrows point from the long root to the short one") {
  const RootSystem rs = of(Family::Sp, 4);
  const DynkinDiagram d = diagram_of(rs);
  std::size_t doubles = 0;
  for (const auto& e : d.edges)
    if (e.mult == 2) {
      ++doubles;
      REQUIRE(e.arrow_to.has_value());
      const std::size_t other = *e.arrow_to == e.a ? e.b : e.a;
      CHECK(d.nodes[*e.arrow_to].len2 < d.nodes[other].len2);
      // In sp(n) the long simple root is the gamma one.
      CHECK(rs.label(d.nodes[other].root_index).rfind("gamma", 0) == 0);
    }
  CHECK(doubles == 1);
  CHECK(render_ascii(d) == "o-o-o<=o\n");
  CHECK(render_ascii(diagram_of(of(Family::SO_odd, 3))) == "o-o=>o\n");
}

TEST_CASE("rendering of branches and disjoint pieces") {
  CHECK(render_ascii(diagram_of(of(Family::SO_even, 2))) == "o   o\n");
  CHECK(render_ascii(diagram_of(of(Family::SO_even, 4))) == "o-o-o\n  |\n  o\n");
}

TEST_CASE("isomorphism ignores the order of simple roots") {
  const RootSystem rs = of(Family::SO_odd, 3);
  const Base b = find_base(rs);
  std::vector<std::size_t> reversed(b.simple.rbegin(), b.simple.rend());
  Base shuffled = base_from_simple(rs, reversed);
  CHECK(isomorphic(build_diagram(rs, b), build_diagram(rs, shuffled)));
  CHECK_FALSE(isomorphic(diagram_of(of(Family::SO_odd, 3)), diagram_of(of(Family::Sp, 3))));
  CHECK(equivalent(of(Family::SU, 4), of(Family::SO_even, 3)));
}

TEST_CASE("acute simple roots are refused") {
  const RootSystem rs = of(Family::SU, 3);
  const Base b = find_base(rs);
  Base bad = b;
  bad.simple[1] = *rs.index_of(rs.roots[b.simple[0]] + rs.roots[b.simple[1]]);
  CHECK_THROWS_AS(build_diagram(rs, bad), StructuralError);
}
