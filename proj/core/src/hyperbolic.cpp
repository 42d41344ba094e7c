#include "vinberg/hyperbolic.hpp"

namespace vinberg {

LatticeVector::LatticeVector(LatticeHandle l, IntVector c) : lattice(std::move(l)), coords(std::move(c)) {
  if (!lattice) throw std::invalid_argument("vector without lattice");
  if (coords.size() != lattice->rank()) throw LatticeMismatch("coordinate count differs from rank");
}

namespace {

void same_lattice(const LatticeVector& x, const LatticeVector& y) {
  if (x.lattice != y.lattice && !(*x.lattice == *y.lattice))
    throw LatticeMismatch("vectors belong to different lattices");
}

}  // namespace

Rational inner(const LatticeVector& x, const LatticeVector& y) {
  same_lattice(x, y);
  return Rational(x.lattice->inner(x.coords, y.coords));
}

bool is_root(const LatticeVector& e, const Integer& k) {
  if (k <= 0) return false;
  if (gcd_of(e.coords) != 1) return false;
  const IntMatrix& g = e.lattice->gram();
  if (e.lattice->inner(e.coords, e.coords) != k) return false;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < g.cols(); ++j) s += g(i, j) * e.coords[j];
    s *= 2;
    if (!mpz_divisible_p(s.get_mpz_t(), k.get_mpz_t())) return false;
  }
  return true;
}

Root Root::make(LatticeVector v) {
  Integer k = v.lattice->inner(v.coords, v.coords);
  if (!is_root(v, k)) throw std::invalid_argument("not a root");
  return Root{std::move(v), k};
}

LatticeVector reflect(const LatticeVector& x, const Root& e) {
  same_lattice(x, e.vector);
  Integer t = 2 * x.lattice->inner(x.coords, e.coords());
  if (!mpz_divisible_p(t.get_mpz_t(), e.norm.get_mpz_t()))
    throw std::logic_error("reflection leaves the lattice");
  mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), e.norm.get_mpz_t());
  IntVector out = x.coords;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= t * e.coords()[i];
  return LatticeVector(x.lattice, std::move(out));
}

Rational sinh_sq_distance(const LatticeVector& e0, const std::vector<Root>& normals) {
  const Integer n0 = e0.lattice->inner(e0.coords, e0.coords);
  if (n0 >= 0) throw std::invalid_argument("point must have negative norm");
  const std::size_t k = normals.size();
  if (k == 0) return 0;
  RatMatrix g(k, k);
  RatVector y(k);
  for (std::size_t i = 0; i < k; ++i) {
    y[i] = -inner(e0, normals[i].vector);
    for (std::size_t j = 0; j < k; ++j) g(i, j) = inner(normals[i].vector, normals[j].vector);
  }
  // Positive definite iff all leading principal minors are positive.
  for (std::size_t m = 1; m <= k; ++m) {
    RatMatrix sub(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) sub(i, j) = g(i, j);
    if (determinant(sub) <= 0) throw DegenerateFrame("normals do not span an elliptic subspace");
  }
  RatVector x = solve(g, y);
  Rational s = 0;
  for (std::size_t i = 0; i < k; ++i) s += x[i] * y[i];
  return s / Rational(-n0);
}

FacetRelation classify_pair(const Integer& uv, const Integer& uu, const Integer& vv) {
  if (uu <= 0 || vv <= 0) throw std::invalid_argument("facet normals must have positive norm");
  Rational c2(uv * uv, uu * vv);
  c2.canonicalize();
  FacetRelation r{RelationKind::Angle, c2, 0};
  if (c2 == 1) {
    r.kind = RelationKind::Parallel;
  } else if (c2 > 1) {
    r.kind = RelationKind::Divergent;
  } else if (c2 == 0) {
    r.m = 2;
  } else if (c2 == Rational(1, 4)) {
    r.m = 3;
  } else if (c2 == Rational(1, 2)) {
    r.m = 4;
  } else if (c2 == Rational(3, 4)) {
    r.m = 6;
  }
  return r;
}

FacetRelation facet_relation(const Root& u, const Root& v) {
  same_lattice(u.vector, v.vector);
  return classify_pair(u.vector.lattice->inner(u.coords(), v.coords()), u.norm, v.norm);
}

std::string FacetRelation::describe() const {
  switch (kind) {
    case RelationKind::Parallel:
      return "parallel";
    case RelationKind::Divergent:
      return "divergent cosh^2=" + cos_squared.get_str();
    case RelationKind::Angle:
      if (m) return "angle pi/" + std::to_string(m);
      return "angle cos^2=" + cos_squared.get_str();
  }
  return {};
}

}  // namespace vinberg
