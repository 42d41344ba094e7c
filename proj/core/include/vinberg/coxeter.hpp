#pragma once

// Coxeter diagrams of mirror sets, elliptic and parabolic subdiagrams, the
// exact finite-volume test and the bad-reflection criterion.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vinberg/hyperbolic.hpp"

namespace vinberg {

struct DiagramNode {
  std::size_t index;
  Integer norm;
};

struct CoxeterDiagram {
  std::vector<DiagramNode> nodes;
  std::map<std::pair<std::size_t, std::size_t>, FacetRelation> edges;  // key i < j
  IntMatrix gram;                                                       // (a_i, a_j)

  std::size_t size() const { return nodes.size(); }
  const FacetRelation& relation(std::size_t i, std::size_t j) const;
};

CoxeterDiagram build_diagram(const std::vector<Root>& roots);

/// Gram matrix of the subset is positive definite.
bool is_elliptic(const CoxeterDiagram& d, const std::vector<std::size_t>& subset);

/// Positive semidefinite, singular, and every connected component singular.
bool is_parabolic(const CoxeterDiagram& d, const std::vector<std::size_t>& subset);

/// |subset| minus the number of connected components.
std::size_t diagram_rank(const CoxeterDiagram& d, const std::vector<std::size_t>& subset);

struct PolyhedronVertex {
  std::vector<std::size_t> facets;  // every mirror through the vertex
  IntVector ray;                    // primitive, future-directed
  bool ideal = false;
};

struct PolyhedronCombinatorics {
  std::vector<PolyhedronVertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Vertices are the extreme rays of {x : (x, a_i) <= 0} with (v,v) <= 0 on the
/// side of `future`; edges are facet pairs shared by two vertices. Without a
/// reference point the sum of the non-spacelike extreme rays is used.
PolyhedronCombinatorics polyhedron_combinatorics(const std::vector<Root>& roots,
                                                 const std::optional<IntVector>& future = {});

enum class VolumeVerdict { Finite, Infinite };

struct FiniteVolumeResult {
  VolumeVerdict verdict;
  std::string witness;           // empty when finite
  std::optional<IntVector> ray;  // offending extreme ray, when there is one
  std::size_t vertex_count = 0;  // only complete when finite

  bool finite() const { return verdict == VolumeVerdict::Finite; }
};

/// Exact extreme-ray test for the cone cut out by the mirrors.
FiniteVolumeResult finite_volume_check(const std::vector<Root>& roots);
FiniteVolumeResult finite_volume_check(const IntMatrix& gram, const std::vector<IntVector>& roots);

/// Vinberg's combinatorial criterion read off the diagram alone: at least one
/// vertex (elliptic rank-3 or parabolic rank-2 subdiagram), and every edge
/// (elliptic pair inside a vertex) lies in exactly two vertices.
bool diagram_criterion(const CoxeterDiagram& d, std::string* reason = nullptr);

/// Mirrors whose norm lies outside {1, 2}.
std::vector<std::size_t> bad_reflections(const std::vector<Root>& roots);

/// The bad mirrors span a positive definite Gram matrix (finite group).
bool bad_reflections_finite(const std::vector<Root>& roots);

/// Graphviz text; nodes a1..an labelled by norm.
std::string emit_dot(const CoxeterDiagram& d, const std::string& graph_name = "coxeter");

}  // namespace vinberg
