#pragma once

// Integral quadratic lattices: invariants, dual quotient, overlattices and
// the genus-based isomorphism test for indefinite lattices.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vinberg/arith.hpp"

namespace vinberg {

class InvalidLattice : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when the genus-to-class argument does not apply to a pair of lattices.
class ConditionsNotMet : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class RankNotFour : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A free Z-module with a nondegenerate integral symmetric bilinear form,
/// stored as its Gram matrix in a fixed basis.
class QuadraticLattice {
 public:
  /// Throws InvalidLattice for non-square, asymmetric, empty or degenerate input.
  explicit QuadraticLattice(IntMatrix gram, std::string name = {});

  const IntMatrix& gram() const { return gram_; }
  std::size_t rank() const { return gram_.rows(); }
  const std::string& name() const { return name_; }
  const Integer& determinant() const { return det_; }

  /// Odd iff some (x, x) is odd, i.e. some diagonal entry is odd.
  bool is_even() const;

  Integer inner(const IntVector& x, const IntVector& y) const { return bilinear(gram_, x, y); }

  QuadraticLattice renamed(std::string name) const;

  friend bool operator==(const QuadraticLattice& a, const QuadraticLattice& b) {
    return a.gram_ == b.gram_;
  }

 private:
  IntMatrix gram_;
  std::string name_;
  Integer det_;
};

QuadraticLattice diagonal_lattice(const std::vector<long>& entries, std::string name = {});

struct InvariantFactors {
  std::vector<Integer> factors;  // E_1 | E_2 | ... | E_n

  const Integer& largest() const { return factors.back(); }
  friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;
};

struct Signature {
  int positives = 0;
  int negatives = 0;

  bool is_definite() const { return positives == 0 || negatives == 0; }
  bool is_hyperbolic() const { return negatives == 1 && positives >= 1; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

Integer discriminant(const QuadraticLattice& lattice);

/// Smith normal form diagonal of an arbitrary nonsingular square integer matrix.
std::vector<Integer> smith_invariants(const IntMatrix& m);

InvariantFactors invariant_factors(const QuadraticLattice& lattice);

/// Diagonal of a congruence-diagonalised form over Q. When `transform` is
/// non-null it receives P with P^T G P = diag(result).
std::vector<Rational> rational_diagonalize(const QuadraticLattice& lattice,
                                           RatMatrix* transform = nullptr);

Signature signature(const QuadraticLattice& lattice);

/// Cyclic decomposition of L*/L: the invariant factors different from 1.
std::vector<Integer> dual_quotient(const QuadraticLattice& lattice);

/// An integral overlattice M of L. `basis` holds the basis of M as columns,
/// written in the coordinates of L's basis.
struct Overlattice {
  QuadraticLattice lattice;
  RatMatrix basis;
  Integer index;
};

/// Every proper integral overlattice of prime index p over `lattice`.
std::vector<Overlattice> prime_index_extensions(const QuadraticLattice& lattice);

/// All maximal integral overlattices of finite index, one per isomorphism class
/// (identical sublattices of L (x) Q are merged first, then isomorphic ones
/// when the genus argument applies). The input itself is returned when it is
/// already maximal.
std::vector<Overlattice> maximal_extensions(const QuadraticLattice& lattice);
std::vector<QuadraticLattice> maximal_overlattices(const QuadraticLattice& lattice);

bool is_maximal(const QuadraticLattice& lattice);

/// For every prime p, some p-adic valuation is shared by two invariant factors.
bool has_repeated_valuations(const QuadraticLattice& lattice);

/// Genus comparison for indefinite lattices of rank >= 3 whose invariant
/// factors have repeated valuations at every prime; in that range genus and
/// class coincide. Throws ConditionsNotMet outside it.
bool is_isomorphic(const QuadraticLattice& a, const QuadraticLattice& b);

}  // namespace vinberg
