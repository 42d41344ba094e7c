#include "properties.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "vinberg/enumeration.hpp"
#include "vinberg/hyperbolic.hpp"
#include "vinberg/lattice.hpp"
#include "vinberg/local_arith.hpp"
#include "vinberg/vinberg.hpp"

namespace properties {

using namespace vinberg;

namespace {

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  for (long p = 2; p <= n; ++p) {
    bool prime = true;
    for (long q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (prime) out.push_back(p);
  }
  return out;
}

template <typename... Args>
std::string str(const Args&... args) {
  std::ostringstream s;
  (s << ... << args);
  return s.str();
}

}  // namespace

Outcome hilbert_symbols(long bound, long max_prime) {
  Outcome o;
  const auto primes = primes_up_to(max_prime);
  std::vector<Place> places;
  for (long p : primes) places.push_back(Place::prime(Integer(p)));
  places.push_back(Place::infinity());

  for (long a = -bound; a <= bound; ++a) {
    if (a == 0) continue;
    for (long b = -bound; b <= bound; ++b) {
      if (b == 0) continue;
      int product = 1;
      for (std::size_t i = 0; i < places.size(); ++i) {
        const int got = hilbert_symbol(Rational(a), Rational(b), places[i]);
        const int want = places[i].is_infinite() ? oracle::real_hilbert(a, b) : oracle::hensel_hilbert(a, b, primes[i]);
        ++o.cases;
        if (got != want) o.fail(str("(", a, ",", b, ")_", places[i].label(), " = ", got, ", oracle ", want));
        if (got != hilbert_symbol(Rational(b), Rational(a), places[i]))
          o.fail(str("asymmetric at (", a, ",", b, ")_", places[i].label()));
        product *= got;
      }
      // Every prime dividing 2ab is at most max_prime here.
      if (product != 1) o.fail(str("product formula fails for (", a, ",", b, ")"));
    }
    for (const auto& place : places)
      if (hilbert_symbol(Rational(a), Rational(-a), place) != 1) o.fail(str("(", a, ",", -a, ")_", place.label(), " != 1"));
  }

  // Bimultiplicativity in the first argument, on rationals as well.
  for (long a1 = -bound; a1 <= bound; a1 += 7)
    for (long a2 = 1; a2 <= bound; a2 += 5)
      for (long b = -bound; b <= bound; b += 3) {
        if (a1 == 0 || b == 0) continue;
        const Rational q1 = ratio(Integer(a1), Integer(a2));
        for (const auto& place : places) {
          ++o.cases;
          const int lhs = hilbert_symbol(q1 * a2, Rational(b), place);
          const int rhs = hilbert_symbol(q1, Rational(b), place) * hilbert_symbol(Rational(a2), Rational(b), place);
          if (lhs != rhs) o.fail(str("bimultiplicativity fails for ", a1, "/", a2, " * ", a2, ", ", b, " at ", place.label()));
        }
      }
  return o;
}

Outcome smith_invariance(std::size_t count, long range, std::uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-range, range);
  std::uniform_int_distribution<int> index(0, 3);
  std::uniform_int_distribution<long> mult(-3, 3);

  while (o.cases < count) {
    std::vector<std::vector<long long>> m(4, std::vector<long long>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) m[i][j] = m[j][i] = entry(rng);
    const long long d = oracle::det(m);
    if (d == 0) continue;
    ++o.cases;
    const QuadraticLattice l(oracle::from_ll(m));

    const auto want = oracle::determinantal_factors(m);
    const auto got = invariant_factors(l).factors;
    Integer product = 1;
    for (std::size_t i = 0; i < 4; ++i) {
      product *= got[i];
      if (got[i] != static_cast<long>(want[i])) o.fail(str("case ", o.cases, ": factor ", i, " is ", got[i].get_str(), ", minors give ", want[i]));
      if (i > 0 && got[i] % got[i - 1] != 0) o.fail(str("case ", o.cases, ": divisibility chain broken"));
    }
    if (product != static_cast<long>(std::llabs(d))) o.fail(str("case ", o.cases, ": product of factors differs from |det|"));

    // Random unimodular U as a product of elementary column operations.
    IntMatrix u = IntMatrix::identity(4);
    for (int step = 0; step < 8; ++step) {
      const int i = index(rng), j = index(rng);
      if (i == j) {
        for (int r = 0; r < 4; ++r) u(r, i) = -u(r, i);
        continue;
      }
      const long c = mult(rng);
      for (int r = 0; r < 4; ++r) u(r, i) += c * u(r, j);
    }
    const QuadraticLattice moved(u.transposed() * l.gram() * u);
    if (invariant_factors(moved).factors != got) o.fail(str("case ", o.cases, ": factors change under a unimodular basis change"));
    if (!(signature(moved) == signature(l))) o.fail(str("case ", o.cases, ": signature changes under a unimodular basis change"));
  }
  return o;
}

Outcome isotropy_search(long long bound) {
  Outcome o;
  for (const auto& ref : reference_table()) {
    ++o.cases;
    const auto found = oracle::isotropic_vector(oracle::to_ll(ref.lattice.gram()), bound);
    const bool anisotropic = is_anisotropic_global(ref.lattice);
    if (anisotropic == found.has_value()) {
      std::string witness;
      if (found) witness = str(" (isotropic vector ", (*found)[0], ",", (*found)[1], ",", (*found)[2], ",", (*found)[3], ")");
      o.fail(str(ref.name, ": global verdict ", anisotropic ? "anisotropic" : "isotropic", witness));
    }
  }
  // The search must see the obvious isotropic vector of an isotropic form.
  const auto control = oracle::isotropic_vector({{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, bound);
  ++o.cases;
  if (!control) o.fail("isotropy search misses diag(-1,1,1,1)");
  return o;
}

Outcome reflections(std::size_t count, std::uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed);

  // Roots of every reference lattice in a small box.
  struct Pool {
    LatticeHandle lattice;
    std::vector<Root> roots;
  };
  std::vector<Pool> pools;
  for (const auto& ref : reference_table()) {
    Pool pool{share(ref.lattice), {}};
    const auto norms = admissible_root_norms(ref.lattice);
    for (long a = -3; a <= 3; ++a)
      for (long b = -3; b <= 3; ++b)
        for (long c = -3; c <= 3; ++c)
          for (long d = -3; d <= 3; ++d) {
            LatticeVector v(pool.lattice, {Integer(a), Integer(b), Integer(c), Integer(d)});
            const Integer k = pool.lattice->inner(v.coords, v.coords);
            if (k <= 0 || std::find(norms.begin(), norms.end(), k) == norms.end()) continue;
            if (is_root(v, k)) pool.roots.push_back(Root{v, k});
          }
    if (!pool.roots.empty()) pools.push_back(std::move(pool));
  }
  if (pools.empty()) {
    o.fail("no roots found");
    return o;
  }

  std::uniform_int_distribution<std::size_t> pick_pool(0, pools.size() - 1);
  std::uniform_int_distribution<long> coord(-20, 20);
  for (std::size_t n = 0; n < count; ++n) {
    const Pool& pool = pools[pick_pool(rng)];
    std::uniform_int_distribution<std::size_t> pick_root(0, pool.roots.size() - 1);
    const Root& e = pool.roots[pick_root(rng)];
    auto random_vector = [&] {
      IntVector x(4);
      for (auto& c : x) c = coord(rng);
      return LatticeVector(pool.lattice, x);
    };
    const LatticeVector x = random_vector(), y = random_vector();
    ++o.cases;
    try {
      const LatticeVector rx = reflect(x, e), ry = reflect(y, e);
      if (inner(rx, ry) != inner(x, y)) o.fail(str(pool.lattice->name(), ": reflection is not an isometry"));
      if (!(reflect(rx, e) == x)) o.fail(str(pool.lattice->name(), ": reflection is not an involution"));
      const LatticeVector re = reflect(e.vector, e);
      for (std::size_t i = 0; i < 4; ++i)
        if (re.coords[i] != -e.coords()[i]) o.fail(str(pool.lattice->name(), ": e is not sent to -e"));
      // Rational formula x - 2(x,e)/(e,e) e, evaluated independently.
      const Rational t = 2 * inner(x, e.vector) / Rational(e.norm);
      for (std::size_t i = 0; i < 4; ++i)
        if (Rational(rx.coords[i]) != Rational(x.coords[i]) - t * e.coords()[i])
          o.fail(str(pool.lattice->name(), ": image differs from the reflection formula"));
    } catch (const std::exception& ex) {
      o.fail(str(pool.lattice->name(), ": ", ex.what()));
    }
  }
  return o;
}

}  // namespace properties
