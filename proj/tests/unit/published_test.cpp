#include <doctest.h>

#include "test_data.hpp"
#include "vinberg/enumeration.hpp"
#include "vinberg/local_arith.hpp"

using namespace vinberg;

namespace {

const QuadraticLattice& reference(const std::string& name) {
  for (const auto& r : reference_table())
    if (r.name == name) return r.lattice;
  throw std::out_of_range(name);
}

}  // namespace

TEST_CASE("published frame matrices") {
  const json data = testdata::read_json(testdata::data_dir() / "published_matrices.json");
  const json oracle = testdata::read_json(testdata::golden_dir() / "oracle" / "published_extensions.json");
  REQUIRE(data["matrices"].size() == 27);
  REQUIRE(oracle["matrices"].size() == 27);

  std::size_t flagged = 0;
  for (std::size_t i = 0; i < 27; ++i) {
    const json& m = data["matrices"][i];
    const json& o = oracle["matrices"][i];
    const std::string name = m["name"];
    CAPTURE(name);
    REQUIRE(o["name"] == name);
    const QuadraticLattice g = lattice_from_json(m);

    CHECK(g.determinant() == integer_from_json(o["determinant"]));
    if (!m["printed_det"].is_null()) CHECK(g.determinant() == integer_from_json(m["printed_det"]));
    CHECK(signature(g) == Signature{3, 1});
    CHECK(to_json(invariant_factors(g).factors) == o["invariant_factors"]);

    const auto ext = maximal_extensions(g);
    REQUIRE(ext.size() == o["maximal_extensions"].size());
    const json& oe = o["maximal_extensions"][0];
    CHECK(ext[0].index == integer_from_json(oe["index"]));
    CHECK(ext[0].lattice.determinant() == integer_from_json(oe["discriminant"]));
    CHECK(to_json(invariant_factors(ext[0].lattice).factors) == oe["invariant_factors"]);

    const bool matches = same_lattice_class(ext[0].lattice, reference(m["claimed_extension"]));
    if (m.contains("flag")) {
      ++flagged;
      CHECK_FALSE(matches);
    } else {
      CHECK(matches);
    }
  }
  CHECK(flagged == 1);
}

TEST_CASE("the G17 discrepancy") {
  const json data = testdata::read_json(testdata::data_dir() / "published_matrices.json");
  const QuadraticLattice g17 = lattice_from_json(data["matrices"][16]);
  CHECK(g17.determinant() == -60);
  // -60 / 7 is not a square, so no overlattice has discriminant -7.
  const auto ext = maximal_extensions(g17);
  REQUIRE(ext.size() == 1);
  CHECK(ext[0].index == 2);
  CHECK(ext[0].lattice.determinant() == -15);
  CHECK(is_anisotropic_global(ext[0].lattice));
}
