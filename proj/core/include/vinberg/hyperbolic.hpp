#pragma once

// Vector model of Lobachevsky space over a hyperbolic lattice: roots,
// reflections, distances to planes and the mutual position of two mirrors.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "vinberg/arith.hpp"
#include "vinberg/lattice.hpp"

namespace vinberg {

class LatticeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DegenerateFrame : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotHyperbolic : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

using LatticeHandle = std::shared_ptr<const QuadraticLattice>;

inline LatticeHandle share(QuadraticLattice lattice) {
  return std::make_shared<const QuadraticLattice>(std::move(lattice));
}

/// Integer coordinates in the basis of the ambient lattice.
struct LatticeVector {
  LatticeHandle lattice;
  IntVector coords;

  LatticeVector(LatticeHandle l, IntVector c);
  std::size_t size() const { return coords.size(); }
  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.coords == b.coords && (a.lattice == b.lattice || *a.lattice == *b.lattice);
  }
};

/// Throws LatticeMismatch when x and y live in different lattices.
Rational inner(const LatticeVector& x, const LatticeVector& y);

/// e primitive, (e,e) = k, and 2(e, b_i) divisible by k for every basis vector.
bool is_root(const LatticeVector& e, const Integer& k);

struct Root {
  LatticeVector vector;
  Integer norm;

  /// Throws std::invalid_argument unless is_root(v, (v,v)) holds with (v,v) > 0.
  static Root make(LatticeVector v);
  const IntVector& coords() const { return vector.coords; }
};

LatticeVector reflect(const LatticeVector& x, const Root& e);

/// sinh^2 of the distance from e0 to the plane orthogonal to all normals,
/// computed as y^T G^{-1} y / |(e0,e0)| with y_j = -(e0, e_j).
/// Throws DegenerateFrame unless the Gram matrix of the normals is positive definite.
Rational sinh_sq_distance(const LatticeVector& e0, const std::vector<Root>& normals);

enum class RelationKind { Angle, Parallel, Divergent };

struct FacetRelation {
  RelationKind kind;
  Rational cos_squared;  // (u,v)^2 / ((u,u)(v,v))
  int m = 0;             // angle pi/m for m in {2,3,4,6}; 0 otherwise

  std::string describe() const;
  friend bool operator==(const FacetRelation&, const FacetRelation&) = default;
};

FacetRelation facet_relation(const Root& u, const Root& v);

/// Same classification from raw data.
FacetRelation classify_pair(const Integer& uv, const Integer& uu, const Integer& vv);

}  // namespace vinberg
