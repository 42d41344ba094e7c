#pragma once

// p-adic invariants of rational quadratic forms: Hilbert symbols, Hasse
// invariants and the rank-4 anisotropy decision.

#include <string>
#include <vector>

#include "vinberg/arith.hpp"
#include "vinberg/lattice.hpp"

namespace vinberg {

/// A place of Q: a rational prime, or the real place.
class Place {
 public:
  static Place infinity() { return Place(Integer(0)); }
  /// Throws std::invalid_argument unless p is prime.
  static Place prime(const Integer& p);

  bool is_infinite() const { return p_ == 0; }
  const Integer& value() const { return p_; }
  std::string label() const { return is_infinite() ? "inf" : p_.get_str(); }

  friend bool operator==(const Place& a, const Place& b) { return a.p_ == b.p_; }

 private:
  explicit Place(Integer p) : p_(std::move(p)) {}
  Integer p_;
};

/// A nondegenerate diagonal form a_1 x_1^2 + ... + a_n x_n^2 over Q.
class DiagonalForm {
 public:
  /// Throws std::invalid_argument on an empty list or a zero coefficient.
  explicit DiagonalForm(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  std::size_t rank() const { return coeffs_.size(); }
  Rational determinant() const;

 private:
  std::vector<Rational> coeffs_;
};

DiagonalForm diagonal_form(const QuadraticLattice& lattice);

/// (a, b)_p: +1 iff a x^2 + b y^2 = 1 is solvable over Q_p (over R at infinity).
int hilbert_symbol(const Rational& a, const Rational& b, const Place& place);

/// prod_{i<j} (a_i, a_j)_p.
int hasse_invariant(const DiagonalForm& form, const Place& place);

/// a in (Q_p^*)^2; for the real place, a > 0.
bool is_local_square(const Rational& a, const Place& place);

/// Throws RankNotFour unless rank(L) == 4.
bool is_anisotropic_local(const QuadraticLattice& lattice, const Place& place);

/// {2} u {p | d(L)} u {infinity}, in increasing order with infinity last.
std::vector<Place> relevant_places(const QuadraticLattice& lattice);

struct LocalVerdict {
  Place place;
  bool anisotropic;
};

/// Per-place verdicts over relevant_places(); throws RankNotFour.
std::vector<LocalVerdict> anisotropy_by_place(const QuadraticLattice& lattice);

/// A rank-4 form over Q is anisotropic iff it is anisotropic at some place
/// (Hasse-Minkowski); every other place is isotropic for rank 4.
bool is_anisotropic_global(const QuadraticLattice& lattice);

}  // namespace vinberg
