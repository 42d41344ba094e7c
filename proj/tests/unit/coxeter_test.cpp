#include <doctest.h>

#include <algorithm>
#include <set>

#include "test_data.hpp"
#include "vinberg/coxeter.hpp"

using namespace vinberg;

namespace {

std::vector<Root> roots_of(const QuadraticLattice& l, const std::vector<std::vector<long>>& coords) {
  auto h = share(l);
  std::vector<Root> out;
  for (const auto& c : coords) out.push_back(Root::make(LatticeVector(h, IntVector(c.begin(), c.end()))));
  return out;
}

std::vector<Root> l5_roots() {
  return roots_of(diagonal_lattice({-3, 5, 1, 1}, "L(5)"),
                  {{0, 0, 0, -1}, {0, 0, -1, 1}, {0, -1, 0, 0}, {1, 0, 3, 0}, {1, 1, 0, 0}, {2, 1, 2, 2}, {10, 6, 10, 5}});
}

std::vector<Root> l10_roots() {
  return roots_of(diagonal_lattice({-1, 3, 3, 2}, "L(10)"),
                  {{0, 0, 0, -1}, {0, 0, -1, 0}, {0, -1, 1, 0}, {1, 1, 0, 0}, {1, 0, 0, 1}, {6, 2, 2, 3}});
}

// Vertex oracle: for every facet triple, the integer null vector of the three
// hyperplane equations via 3x3 minors, kept when it is non-spacelike and on
// the inner side of every mirror.
std::set<IntVector> oracle_vertices(const std::vector<Root>& roots) {
  const IntMatrix& g = roots.front().vector.lattice->gram();
  std::vector<IntVector> w;
  for (const auto& r : roots) {
    IntVector wi(4, 0);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) wi[i] += g(i, j) * r.coords()[j];
    w.push_back(wi);
  }
  std::set<IntVector> out;
  const std::size_t n = roots.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        IntVector v(4);
        for (std::size_t col = 0; col < 4; ++col) {
          IntMatrix m(3, 3);
          const std::size_t rows[3] = {a, b, c};
          for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t k = 0, cc = 0; k < 4; ++k)
              if (k != col) m(r, cc++) = w[rows[r]][k];
          v[col] = (col % 2 ? -1 : 1) * determinant(m);
        }
        const Integer gcd = gcd_of(v);
        if (gcd == 0) continue;
        for (auto& x : v) x /= gcd;
        for (int sign : {1, -1}) {
          IntVector s = v;
          for (auto& x : s) x *= sign;
          bool inside = true;
          for (const auto& wi : w) {
            Integer dotp = 0;
            for (std::size_t k = 0; k < 4; ++k) dotp += wi[k] * s[k];
            if (dotp > 0) inside = false;
          }
          if (inside && bilinear(g, s, s) <= 0) out.insert(s);
        }
      }
  return out;
}

std::set<IntVector> ray_set(const PolyhedronCombinatorics& pc) {
  std::set<IntVector> out;
  for (const auto& v : pc.vertices) out.insert(v.ray);
  return out;
}

}  // namespace

TEST_CASE("diagram edges") {
  const auto d = build_diagram(l5_roots());
  CHECK(d.size() == 7);
  CHECK(d.relation(0, 1).m == 4);
  CHECK(d.relation(1, 0).m == 4);
  CHECK(d.relation(1, 3).m == 6);
  CHECK(d.relation(2, 6).kind == RelationKind::Divergent);
  CHECK(d.relation(2, 3).m == 2);
}

TEST_CASE("elliptic and parabolic subdiagrams") {
  const auto l = diagonal_lattice({-1, 1, 1, 1});
  const auto d = build_diagram(roots_of(l, {{0, 1, 0, 0}, {0, -1, 1, 0}}));
  REQUIRE(d.relation(0, 1).m == 4);
  CHECK(is_elliptic(d, {0, 1}));
  CHECK_FALSE(is_parabolic(d, {0, 1}));

  // Two parallel mirrors: lightlike sum.
  const auto par = build_diagram(roots_of(l, {{0, 0, 1, 0}, {1, 1, -1, 0}}));
  REQUIRE(par.relation(0, 1).kind == RelationKind::Parallel);
  CHECK(is_parabolic(par, {0, 1}));
  CHECK_FALSE(is_elliptic(par, {0, 1}));

  const auto div = build_diagram(roots_of(l, {{0, 0, 1, 0}, {2, 1, -2, 0}}));
  REQUIRE(div.relation(0, 1).kind == RelationKind::Divergent);
  CHECK_FALSE(is_parabolic(div, {0, 1}));
  CHECK_FALSE(is_elliptic(div, {0, 1}));

  // Mutually exclusive on every subset of the L(5) mirrors.
  const auto d5 = build_diagram(l5_roots());
  for (unsigned mask = 1; mask < (1u << 7); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < 7; ++i)
      if (mask & (1u << i)) s.push_back(i);
    CHECK_FALSE((is_elliptic(d5, s) && is_parabolic(d5, s)));
  }
}

TEST_CASE("finite-volume test") {
  const auto r5 = l5_roots();
  CHECK_FALSE(finite_volume_check({r5.begin(), r5.begin() + 4}).finite());
  CHECK(finite_volume_check(r5).finite());
  CHECK(finite_volume_check(l10_roots()).finite());
  for (std::size_t k = 1; k < 7; ++k) CHECK_FALSE(finite_volume_check({r5.begin(), r5.begin() + k}).finite());
  const auto r10 = l10_roots();
  for (std::size_t k = 1; k < 6; ++k) CHECK_FALSE(finite_volume_check({r10.begin(), r10.begin() + k}).finite());

  const auto witness = finite_volume_check({r5.begin(), r5.begin() + 4});
  REQUIRE(witness.ray);
  CHECK(bilinear(r5[0].vector.lattice->gram(), *witness.ray, *witness.ray) > 0);

  CHECK_THROWS_AS(finite_volume_check(IntMatrix::identity(4), {}), NotHyperbolic);
}

TEST_CASE("polyhedron vertices match the triple oracle") {
  for (const auto& rs : {l5_roots(), l10_roots()}) {
    const auto pc = polyhedron_combinatorics(rs, IntVector{1, 0, 0, 0});
    CHECK(ray_set(pc) == oracle_vertices(rs));
    const IntMatrix& g = rs.front().vector.lattice->gram();
    const auto d = build_diagram(rs);
    for (const auto& v : pc.vertices) {
      CHECK_FALSE(v.ideal);
      CHECK(bilinear(g, v.ray, v.ray) < 0);
      CHECK(v.facets.size() >= 3);
      for (std::size_t i = 0; i < rs.size(); ++i) {
        const Integer p = bilinear(g, v.ray, rs[i].coords());
        const bool on = std::find(v.facets.begin(), v.facets.end(), i) != v.facets.end();
        CHECK(p <= 0);
        CHECK((p == 0) == on);
      }
      CHECK(is_elliptic(d, v.facets));
      CHECK_FALSE(is_parabolic(d, v.facets));
    }
  }
  // A tetrahedron with two vertices cut off: 4 - 2 + 2 * 3 = 8 vertices.
  const auto pc10 = polyhedron_combinatorics(l10_roots());
  CHECK(pc10.vertices.size() == 8);
  CHECK(pc10.edges.size() == 12);
}

TEST_CASE("diagram criterion agrees with the ray test") {
  CHECK(diagram_criterion(build_diagram(l5_roots())));
  CHECK(diagram_criterion(build_diagram(l10_roots())));
  const auto r5 = l5_roots();
  std::string reason;
  CHECK_FALSE(diagram_criterion(build_diagram({r5.begin(), r5.begin() + 4}), &reason));
  CHECK_FALSE(reason.empty());
}

TEST_CASE("bad reflections") {
  const auto r5 = l5_roots();
  CHECK(bad_reflections(r5) == std::vector<std::size_t>{2, 3, 6});
  CHECK_FALSE(bad_reflections_finite(r5));
  const auto r10 = l10_roots();
  CHECK(bad_reflections(r10) == std::vector<std::size_t>{1, 2, 5});
  CHECK_FALSE(bad_reflections_finite(r10));
  const auto ones = roots_of(diagonal_lattice({-7, 1, 1, 1}), {{0, 1, 0, 0}, {0, -1, 1, 0}});
  CHECK(bad_reflections(ones).empty());
  CHECK(bad_reflections_finite(ones));
}

TEST_CASE("DOT output") {
  const auto two = roots_of(diagonal_lattice({-1, 1, 1, 1}), {{0, 1, 0, 0}, {0, 0, 1, 0}});
  const std::string dot = emit_dot(build_diagram(two), "pair");
  CHECK(dot == "graph \"pair\" {\n  node [shape=circle];\n  a1 [label=\"1\"];\n  a2 [label=\"1\"];\n}\n");

  const auto golden = testdata::golden_dir() / "oracle";
  CHECK(emit_dot(build_diagram(l5_roots()), "L(5)") == testdata::read_text(golden / "L5.dot"));
  CHECK(emit_dot(build_diagram(l10_roots()), "L(10)") == testdata::read_text(golden / "L10.dot"));
}
