#include "vinberg/coxeter.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>

namespace vinberg {

const FacetRelation& CoxeterDiagram::relation(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  auto it = edges.find({i, j});
  if (it == edges.end()) throw std::out_of_range("no such pair in diagram");
  return it->second;
}

CoxeterDiagram build_diagram(const std::vector<Root>& roots) {
  CoxeterDiagram d;
  const std::size_t n = roots.size();
  d.gram = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    d.nodes.push_back(DiagramNode{i, roots[i].norm});
    for (std::size_t j = i; j < n; ++j) {
      Integer v = inner(roots[i].vector, roots[j].vector).get_num();
      d.gram(i, j) = v;
      d.gram(j, i) = v;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      d.edges.emplace(std::make_pair(i, j), classify_pair(d.gram(i, j), d.gram(i, i), d.gram(j, j)));
  return d;
}

namespace {

IntMatrix principal(const IntMatrix& g, const std::vector<std::size_t>& idx) {
  IntMatrix m(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = g(idx[i], idx[j]);
  return m;
}

bool positive_definite(const IntMatrix& m) {
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    std::vector<std::size_t> lead(k);
    for (std::size_t i = 0; i < k; ++i) lead[i] = i;
    if (determinant(principal(m, lead)) <= 0) return false;
  }
  return true;
}

// Every principal minor is non-negative.
bool positive_semidefinite(const IntMatrix& m) {
  const std::size_t n = m.rows();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    if (determinant(principal(m, idx)) < 0) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> components(const IntMatrix& g, const std::vector<std::size_t>& subset) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(subset.size(), false);
  for (std::size_t s = 0; s < subset.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      std::size_t c = stack.back();
      stack.pop_back();
      comp.push_back(subset[c]);
      for (std::size_t t = 0; t < subset.size(); ++t)
        if (!seen[t] && g(subset[c], subset[t]) != 0) {
          seen[t] = true;
          stack.push_back(t);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

using i128 = __int128;

i128 abs128(i128 x) { return x < 0 ? -x : x; }
Integer abs_of(const Integer& x) { return abs(x); }
i128 abs_of(i128 x) { return abs128(x); }

i128 gcd_of2(i128 a, i128 b) {
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}
Integer gcd_of2(const Integer& a, const Integer& b) { return gcd(a, b); }

Integer to_integer(i128 x) {
  bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
  Integer hi = Integer(static_cast<unsigned long>(u >> 64));
  Integer lo = Integer(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFull));
  Integer r = hi;
  r <<= 64;
  r += lo;
  return neg ? Integer(-r) : r;
}

template <class T>
using Vec4 = std::array<T, 4>;

template <class T>
T det3(const Vec4<T>& a, const Vec4<T>& b, const Vec4<T>& c, int skip) {
  int col[3];
  for (int k = 0, t = 0; k < 4; ++k)
    if (k != skip) col[t++] = k;
  const T& a0 = a[col[0]];
  const T& a1 = a[col[1]];
  const T& a2 = a[col[2]];
  return a0 * (b[col[1]] * c[col[2]] - b[col[2]] * c[col[1]]) -
         a1 * (b[col[0]] * c[col[2]] - b[col[2]] * c[col[0]]) +
         a2 * (b[col[0]] * c[col[1]] - b[col[1]] * c[col[0]]);
}

// Calls visit(ray, active) for every extreme ray of {x : w_i . x <= 0}, each
// ray once, primitive. Stops when visit returns false.
template <class T>
void for_each_extreme_ray(const std::vector<Vec4<T>>& w,
                          const std::function<bool(const Vec4<T>&, const std::vector<std::size_t>&)>& visit) {
  const std::size_t n = w.size();
  std::set<Vec4<T>> seen;
  std::vector<int> sign(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        Vec4<T> r;
        bool zero = true;
        for (int k = 0; k < 4; ++k) {
          T m = det3(w[a], w[b], w[c], k);
          r[k] = (k % 2 == 0) ? m : T(-m);
          if (r[k] != 0) zero = false;
        }
        if (zero) continue;
        bool pos = false, neg = false;
        for (std::size_t m = 0; m < n && !(pos && neg); ++m) {
          T s = w[m][0] * r[0] + w[m][1] * r[1] + w[m][2] * r[2] + w[m][3] * r[3];
          sign[m] = s > 0 ? 1 : (s < 0 ? -1 : 0);
          if (sign[m] > 0) pos = true;
          if (sign[m] < 0) neg = true;
        }
        if (pos && neg) continue;
        if (pos) {
          for (auto& x : r) x = -x;
          for (auto& s : sign) s = -s;
        }
        T g = 0;
        for (const auto& x : r) g = gcd_of2(g, abs_of(x));
        for (auto& x : r) x /= g;
        if (!seen.insert(r).second) continue;
        std::vector<std::size_t> active;
        for (std::size_t m = 0; m < n; ++m)
          if (sign[m] == 0) active.push_back(m);
        if (!visit(r, active)) return;
      }
}

std::size_t rank_of(const std::vector<IntVector>& rows) {
  if (rows.empty()) return 0;
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Rational(rows[i][j]);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(rank, p);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(rank, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

struct RayRecord {
  IntVector ray;
  std::vector<std::size_t> active;
  Integer norm;
};

// Extreme rays of the cone; `visit` may stop early.
void cone_rays(const IntMatrix& gram, const std::vector<IntVector>& roots,
               const std::function<bool(RayRecord&&)>& visit) {
  std::vector<IntVector> w;
  bool small = true;
  const Integer limit = Integer(1) << 30;
  for (const auto& a : roots) {
    IntVector wi(4, 0);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) wi[i] += gram(i, j) * a[j];
      if (abs(wi[i]) >= limit) small = false;
    }
    w.push_back(std::move(wi));
  }
  auto record = [&](IntVector ray, std::vector<std::size_t> active) {
    Integer norm = bilinear(gram, ray, ray);
    return visit(RayRecord{std::move(ray), std::move(active), std::move(norm)});
  };
  if (small) {
    std::vector<Vec4<i128>> w128;
    for (const auto& wi : w) w128.push_back({wi[0].get_si(), wi[1].get_si(), wi[2].get_si(), wi[3].get_si()});
    for_each_extreme_ray<i128>(w128, [&](const Vec4<i128>& r, const std::vector<std::size_t>& act) {
      return record(IntVector{to_integer(r[0]), to_integer(r[1]), to_integer(r[2]), to_integer(r[3])}, act);
    });
  } else {
    std::vector<Vec4<Integer>> wz;
    for (const auto& wi : w) wz.push_back({wi[0], wi[1], wi[2], wi[3]});
    for_each_extreme_ray<Integer>(wz, [&](const Vec4<Integer>& r, const std::vector<std::size_t>& act) {
      return record(IntVector{r[0], r[1], r[2], r[3]}, act);
    });
  }
}

void require_hyperbolic_rank4(const IntMatrix& gram) {
  if (gram.rows() != 4) throw NotHyperbolic("finite-volume test needs rank 4");
  Signature s = signature(QuadraticLattice(gram));
  if (s.positives != 3 || s.negatives != 1) throw NotHyperbolic("signature is not (3,1)");
}

std::vector<IntVector> coords_of(const std::vector<Root>& roots) {
  std::vector<IntVector> out;
  for (const auto& r : roots) out.push_back(r.coords());
  return out;
}

std::string vec_str(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

}  // namespace

bool is_elliptic(const CoxeterDiagram& d, const std::vector<std::size_t>& subset) {
  if (subset.empty()) return true;
  return positive_definite(principal(d.gram, subset));
}

bool is_parabolic(const CoxeterDiagram& d, const std::vector<std::size_t>& subset) {
  if (subset.empty()) return false;
  IntMatrix m = principal(d.gram, subset);
  if (!positive_semidefinite(m) || determinant(m) != 0) return false;
  for (const auto& comp : components(d.gram, subset))
    if (determinant(principal(d.gram, comp)) != 0) return false;
  return true;
}

std::size_t diagram_rank(const CoxeterDiagram& d, const std::vector<std::size_t>& subset) {
  return subset.size() - components(d.gram, subset).size();
}

PolyhedronCombinatorics polyhedron_combinatorics(const std::vector<Root>& roots,
                                                 const std::optional<IntVector>& future) {
  if (roots.empty()) throw std::invalid_argument("no mirrors");
  const IntMatrix& gram = roots.front().vector.lattice->gram();
  require_hyperbolic_rank4(gram);
  std::vector<RayRecord> rays;
  cone_rays(gram, coords_of(roots), [&](RayRecord&& r) {
    if (r.norm <= 0) rays.push_back(std::move(r));
    return true;
  });
  std::sort(rays.begin(), rays.end(), [](const RayRecord& a, const RayRecord& b) { return a.ray < b.ray; });

  std::optional<IntVector> ref = future;
  if (!ref && !rays.empty()) {
    auto timelike = std::find_if(rays.begin(), rays.end(), [](const RayRecord& r) { return r.norm < 0; });
    ref = (timelike != rays.end() ? timelike : rays.begin())->ray;
  }
  PolyhedronCombinatorics pc;
  for (auto& r : rays) {
    Integer side = bilinear(gram, r.ray, *ref);
    // A lightlike reference pairs to zero with itself.
    if (side > 0 || (side == 0 && r.ray != *ref)) continue;
    pc.vertices.push_back(PolyhedronVertex{r.active, r.ray, r.norm == 0});
  }
  std::map<std::pair<std::size_t, std::size_t>, int> count;
  for (const auto& v : pc.vertices)
    for (std::size_t i = 0; i < v.facets.size(); ++i)
      for (std::size_t j = i + 1; j < v.facets.size(); ++j) ++count[{v.facets[i], v.facets[j]}];
  for (const auto& [pair, c] : count)
    if (c >= 2) pc.edges.push_back(pair);
  return pc;
}

FiniteVolumeResult finite_volume_check(const IntMatrix& gram, const std::vector<IntVector>& roots) {
  require_hyperbolic_rank4(gram);
  std::vector<IntVector> w;
  for (const auto& a : roots) {
    IntVector wi(4, 0);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) wi[i] += gram(i, j) * a[j];
    w.push_back(std::move(wi));
  }
  if (rank_of(w) < 4) return {VolumeVerdict::Infinite, "mirrors do not cut out a pointed cone", std::nullopt, 0};

  FiniteVolumeResult result{VolumeVerdict::Finite, {}, std::nullopt, 0};
  cone_rays(gram, roots, [&](RayRecord&& r) {
    if (r.norm > 0) {
      result.verdict = VolumeVerdict::Infinite;
      result.witness = "extreme ray " + vec_str(r.ray) + " has positive norm " + r.norm.get_str();
      result.ray = std::move(r.ray);
      return false;
    }
    ++result.vertex_count;
    return true;
  });
  if (result.finite() && result.vertex_count == 0) {
    result.verdict = VolumeVerdict::Infinite;
    result.witness = "no vertex";
  }
  return result;
}

FiniteVolumeResult finite_volume_check(const std::vector<Root>& roots) {
  if (roots.empty()) return {VolumeVerdict::Infinite, "no mirrors", std::nullopt, 0};
  return finite_volume_check(roots.front().vector.lattice->gram(), coords_of(roots));
}

bool diagram_criterion(const CoxeterDiagram& d, std::string* reason) {
  const std::size_t n = d.size();
  std::vector<std::vector<std::size_t>> vertices;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        std::vector<std::size_t> s{a, b, c};
        if (is_elliptic(d, s) || (is_parabolic(d, s) && diagram_rank(d, s) == 2)) vertices.push_back(s);
        for (std::size_t e = c + 1; e < n; ++e) {
          std::vector<std::size_t> q{a, b, c, e};
          if (diagram_rank(d, q) == 2 && is_parabolic(d, q)) vertices.push_back(q);
        }
      }
  if (vertices.empty()) {
    if (reason) *reason = "no vertex";
    return false;
  }
  std::map<std::pair<std::size_t, std::size_t>, int> count;
  for (const auto& v : vertices)
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j)
        if (is_elliptic(d, {v[i], v[j]})) ++count[{v[i], v[j]}];
  for (const auto& [edge, c] : count)
    if (c != 2) {
      if (reason)
        *reason = "edge a" + std::to_string(edge.first + 1) + "a" + std::to_string(edge.second + 1) + " lies in " +
                  std::to_string(c) + " vertices";
      return false;
    }
  return true;
}

std::vector<std::size_t> bad_reflections(const std::vector<Root>& roots) {
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i].norm != 1 && roots[i].norm != 2) bad.push_back(i);
  return bad;
}

bool bad_reflections_finite(const std::vector<Root>& roots) {
  std::vector<std::size_t> bad = bad_reflections(roots);
  if (bad.empty()) return true;
  IntMatrix g(bad.size(), bad.size());
  for (std::size_t i = 0; i < bad.size(); ++i)
    for (std::size_t j = 0; j < bad.size(); ++j)
      g(i, j) = inner(roots[bad[i]].vector, roots[bad[j]].vector).get_num();
  return positive_definite(g);
}

std::string emit_dot(const CoxeterDiagram& d, const std::string& graph_name) {
  std::ostringstream out;
  out << "graph \"" << graph_name << "\" {\n";
  out << "  node [shape=circle];\n";
  for (const auto& node : d.nodes)
    out << "  a" << node.index + 1 << " [label=\"" << node.norm.get_str() << "\"];\n";
  for (const auto& [pair, rel] : d.edges) {
    std::string attrs;
    switch (rel.kind) {
      case RelationKind::Parallel:
        attrs = " [style=bold]";
        break;
      case RelationKind::Divergent:
        attrs = " [style=dashed, label=\"" + rel.cos_squared.get_str() + "\"]";
        break;
      case RelationKind::Angle:
        if (rel.m == 2) continue;
        if (rel.m == 4) attrs = " [color=\"black:black\"]";
        if (rel.m == 6) attrs = " [color=\"black:black:black\"]";
        if (rel.m == 0) attrs = " [label=\"" + rel.cos_squared.get_str() + "\"]";
        break;
    }
    out << "  a" << pair.first + 1 << " -- a" << pair.second + 1 << attrs << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace vinberg
