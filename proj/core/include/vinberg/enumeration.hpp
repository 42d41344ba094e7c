#pragma once

// Outermost-edge candidate generation: the case tree with its bounds on T,
// Gram matrices of the framing vectors e1..e4, anisotropy filter, maximal
// extensions and the deduplicated table of candidate lattices.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vinberg/lattice.hpp"

namespace vinberg {

/// Index order of the off-diagonal signs: 12, 13, 14, 23, 24.
using EpsTuple = std::array<int, 5>;
using NormTuple = std::array<int, 4>;

enum class BoundKind {
  Exact,      // T equals `t`
  Below,      // 1 <= T < t
  Impossible  // no admissible T
};

struct CaseLeaf {
  std::string label;
  NormTuple d;
  EpsTuple eps;
  BoundKind kind;
  int t;
};

/// The hard-coded leaves of the case tree, cases (2) to (9).
const std::vector<CaseLeaf>& enumerate_case_tree();

struct CandidateFrame {
  std::string label;
  NormTuple d;
  EpsTuple eps;
  int T;

  /// Gram matrix of e1..e4: d on the diagonal, -eps off it, -T at (3,4).
  IntMatrix gram() const;
  /// The frame with (e1,e2) and (e3,e4) swapped simultaneously.
  CandidateFrame swapped() const;
};

/// Vertex type (d_a, d_b, d_c; eps_ab, eps_ac, eps_bc) excluded by the
/// angle-sum condition.
bool is_forbidden_vertex(const std::array<int, 6>& type);

/// eps12 = 0 together with pi/4 angles at 13 and 24 (or at 14 and 23).
bool has_excluded_quarter_angles(const NormTuple& d, const EpsTuple& eps);

/// Every (leaf, T) pair, with frames equivalent under the face swap merged.
std::vector<CandidateFrame> enumerate_frames();

struct CandidateLattice {
  CandidateFrame frame;
  QuadraticLattice lattice;
  std::vector<Overlattice> maximal_forms;
};

struct EnumerationStats {
  std::size_t frames = 0;
  std::size_t hyperbolic = 0;
  std::size_t anisotropic = 0;
};

/// Signature (3,1) and anisotropic frames, each with its maximal overlattices.
std::vector<CandidateLattice> frames_to_candidates(EnumerationStats* stats = nullptr);

struct ReferenceLattice {
  std::string name;
  QuadraticLattice lattice;
};

/// The published candidate list L(1)..L(10).
const std::vector<ReferenceLattice>& reference_table();

struct TableEntry {
  std::string name;  // L(k) when isomorphic to a reference lattice, else X(k)
  QuadraticLattice lattice;
  InvariantFactors factors;
  Integer discriminant;
  std::vector<std::string> sources;  // frame labels "case/T"
};

/// Deduplicated maximal forms, named by matching against reference_table().
/// Named entries come first in reference order; unmatched forms follow by
/// decreasing discriminant.
std::vector<TableEntry> candidate_table(const std::vector<CandidateLattice>& candidates);
std::vector<TableEntry> candidate_table();

/// Isomorphism used for naming: the genus test where it applies, equality of
/// Gram matrices otherwise.
bool same_lattice_class(const QuadraticLattice& a, const QuadraticLattice& b);

}  // namespace vinberg
