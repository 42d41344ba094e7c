#include <doctest.h>

#include "oracles.hpp"
#include "vinberg/local_arith.hpp"

using namespace vinberg;

namespace {

Place p(long v) { return Place::prime(Integer(v)); }

}  // namespace

TEST_CASE("places") {
  CHECK(Place::infinity().is_infinite());
  CHECK(p(7).label() == "7");
  CHECK(Place::infinity().label() == "inf");
  CHECK_THROWS_AS(Place::prime(Integer(9)), std::invalid_argument);
}

TEST_CASE("Hilbert symbol") {
  for (long q : {2, 3, 5, 7, 31}) CHECK(hilbert_symbol(1, 1, p(q)) == 1);
  CHECK(hilbert_symbol(1, 1, Place::infinity()) == 1);

  CHECK(oracle::hensel_hilbert(-1, -1, 2) == -1);
  CHECK(hilbert_symbol(-1, -1, p(2)) == -1);
  CHECK(hilbert_symbol(-1, -1, Place::infinity()) == -1);

  // 2 is a square mod 31, so it behaves like 1 against any unit.
  for (long b : {1, 2, 3, 5, -1, -7, 11, 30}) CHECK(hilbert_symbol(2, b, p(31)) == hilbert_symbol(1, b, p(31)));

  // Rational arguments depend only on square classes.
  CHECK(hilbert_symbol(Rational(3, 4), 5, p(5)) == hilbert_symbol(3, 5, p(5)));
  CHECK(hilbert_symbol(Rational(2, 3), 7, p(3)) == hilbert_symbol(6, 7, p(3)));
}

TEST_CASE("Hasse invariant") {
  const DiagonalForm ones({1, 1, 1, 1});
  for (long q : {2, 3, 5, 7}) CHECK(hasse_invariant(ones, p(q)) == 1);

  const DiagonalForm l2({-7, 1, 1, 1});
  int expected = 1;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      expected *= oracle::hensel_hilbert(l2.coefficients()[i].get_num().get_si(),
                                         l2.coefficients()[j].get_num().get_si(), 7);
  CHECK(expected == 1);
  CHECK(hasse_invariant(l2, p(7)) == expected);

  CHECK(hasse_invariant(DiagonalForm({-5}), p(5)) == 1);

  SUBCASE("permutation and square scaling") {
    const DiagonalForm f({-3, 5, 2, 7}), g({7, -3, 2, 5}), h({-12, 5, Rational(2, 9), 7});
    for (long q : {2, 3, 5, 7}) {
      CHECK(hasse_invariant(f, p(q)) == hasse_invariant(g, p(q)));
      CHECK(hasse_invariant(f, p(q)) == hasse_invariant(h, p(q)));
    }
  }
  CHECK_THROWS_AS(DiagonalForm({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(DiagonalForm({}), std::invalid_argument);
}

TEST_CASE("local squares") {
  CHECK(is_local_square(Rational(17), p(2)));
  CHECK_FALSE(is_local_square(Rational(5), p(2)));
  CHECK(is_local_square(Rational(2), p(7)));
  CHECK_FALSE(is_local_square(Rational(3), p(7)));
  CHECK_FALSE(is_local_square(Rational(7), p(7)));
  CHECK(is_local_square(Rational(4, 9), p(3)));
  CHECK_FALSE(is_local_square(Rational(-1), Place::infinity()));
}

TEST_CASE("local anisotropy") {
  // Oracle for diag(-15,1,1,1) at 3: a zero mod 3 with a unit among the
  // unit-coefficient coordinates lifts by Hensel's lemma.
  const auto l1 = diagonal_lattice({-15, 1, 1, 1});
  bool liftable_zero = false;
  for (int b = 0; b < 3; ++b)
    for (int c = 0; c < 3; ++c)
      for (int d = 0; d < 3; ++d)
        if ((b || c || d) && (b * b + c * c + d * d) % 3 == 0) liftable_zero = true;
  CHECK(liftable_zero);
  CHECK(is_anisotropic_local(l1, p(3)) == !liftable_zero);

  CHECK(is_anisotropic_local(diagonal_lattice({1, 1, 1, 1}), Place::infinity()));
  CHECK_FALSE(is_anisotropic_local(diagonal_lattice({-1, 1, 1, 1}), Place::infinity()));
  CHECK_THROWS_AS(is_anisotropic_local(diagonal_lattice({-1, 1, 1}), p(2)), RankNotFour);
}

TEST_CASE("global anisotropy") {
  CHECK(is_anisotropic_global(diagonal_lattice({-7, 1, 1, 1})));
  CHECK_FALSE(is_anisotropic_global(diagonal_lattice({-1, 1, 1, 1})));
  CHECK(is_anisotropic_global(diagonal_lattice({-1, 3, 3, 2})));
  CHECK_THROWS_AS(is_anisotropic_global(diagonal_lattice({-1, 1, 1})), RankNotFour);

  const auto places = relevant_places(diagonal_lattice({-15, 1, 1, 1}));
  REQUIRE(places.size() == 4);
  CHECK(places[0] == p(2));
  CHECK(places[1] == p(3));
  CHECK(places[2] == p(5));
  CHECK(places[3].is_infinite());
}
