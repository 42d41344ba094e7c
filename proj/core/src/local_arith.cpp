#include "vinberg/local_arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace vinberg {

Place Place::prime(const Integer& p) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + p.get_str());
  return Place(p);
}

DiagonalForm::DiagonalForm(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("empty diagonal form");
  for (auto& c : coeffs_) {
    if (c == 0) throw std::invalid_argument("zero coefficient in diagonal form");
    c.canonicalize();
  }
}

Rational DiagonalForm::determinant() const {
  Rational d = 1;
  for (const auto& c : coeffs_) d *= c;
  return d;
}

DiagonalForm diagonal_form(const QuadraticLattice& lattice) {
  return DiagonalForm(rational_diagonalize(lattice));
}

namespace {

// Integer in the same square class as q (num * den).
Integer integral_rep(const Rational& q) { return q.get_num() * q.get_den(); }

// Splits n = p^v * u with p not dividing u.
void split(const Integer& n, const Integer& p, unsigned& v, Integer& u) {
  v = 0;
  u = n;
  while (mpz_divisible_p(u.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
}

int legendre(const Integer& u, const Integer& p) {
  return mpz_legendre(u.get_mpz_t(), p.get_mpz_t());
}

unsigned mod8(const Integer& u) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
  return static_cast<unsigned>(r.get_ui());
}

// eps(u) = (u-1)/2 mod 2, omega(u) = (u^2-1)/8 mod 2 for odd u.
int eps2(const Integer& u) { return mod8(u) % 4 == 3 ? 1 : 0; }
int omega2(const Integer& u) {
  unsigned r = mod8(u);
  return (r == 3 || r == 5) ? 1 : 0;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
  if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol of zero");
  if (place.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;
  const Integer& p = place.value();
  unsigned alpha, beta;
  Integer u, v;
  split(integral_rep(a), p, alpha, u);
  split(integral_rep(b), p, beta, v);
  if (p != 2) {
    int sign = ((alpha & 1) && (beta & 1) && mod8(p) % 4 == 3) ? -1 : 1;
    if (beta & 1) sign *= legendre(u, p);
    if (alpha & 1) sign *= legendre(v, p);
    return sign;
  }
  int e = eps2(u) * eps2(v) + static_cast<int>(alpha & 1) * omega2(v) +
          static_cast<int>(beta & 1) * omega2(u);
  return (e & 1) ? -1 : 1;
}

int hasse_invariant(const DiagonalForm& form, const Place& place) {
  const auto& a = form.coefficients();
  int h = 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) h *= hilbert_symbol(a[i], a[j], place);
  return h;
}

bool is_local_square(const Rational& a, const Place& place) {
  if (a == 0) throw std::invalid_argument("is_local_square of zero");
  if (place.is_infinite()) return a > 0;
  const Integer& p = place.value();
  unsigned v;
  Integer u;
  split(integral_rep(a), p, v, u);
  if (v & 1) return false;
  if (p == 2) return mod8(u) == 1;
  return legendre(u, p) == 1;
}

bool is_anisotropic_local(const QuadraticLattice& lattice, const Place& place) {
  if (lattice.rank() != 4) throw RankNotFour("anisotropy test needs rank 4");
  const DiagonalForm f = diagonal_form(lattice);
  if (place.is_infinite()) {
    const auto& c = f.coefficients();
    bool all_pos = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x > 0; });
    bool all_neg = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x < 0; });
    return all_pos || all_neg;
  }
  // Quaternary: anisotropic iff d is a square and the Hasse invariant
  // equals -(-1,-1)_p.
  if (!is_local_square(f.determinant(), place)) return false;
  return hasse_invariant(f, place) == -hilbert_symbol(Rational(-1), Rational(-1), place);
}

std::vector<Place> relevant_places(const QuadraticLattice& lattice) {
  std::vector<Place> out{Place::prime(Integer(2))};
  for (const auto& p : prime_divisors(lattice.determinant()))
    if (p != 2) out.push_back(Place::prime(p));
  out.push_back(Place::infinity());
  return out;
}

std::vector<LocalVerdict> anisotropy_by_place(const QuadraticLattice& lattice) {
  if (lattice.rank() != 4) throw RankNotFour("anisotropy test needs rank 4");
  std::vector<LocalVerdict> out;
  for (const auto& place : relevant_places(lattice))
    out.push_back(LocalVerdict{place, is_anisotropic_local(lattice, place)});
  return out;
}

bool is_anisotropic_global(const QuadraticLattice& lattice) {
  for (const auto& v : anisotropy_by_place(lattice))
    if (v.anisotropic) return true;
  return false;
}

}  // namespace vinberg
