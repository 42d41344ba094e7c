#include "vinberg/enumeration.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "vinberg/local_arith.hpp"

namespace vinberg {

namespace {

// Off-diagonal position of each eps slot.
constexpr std::array<std::pair<int, int>, 5> kEpsPos{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}};

int slot(int i, int j) {
  if (i > j) std::swap(i, j);
  for (int s = 0; s < 5; ++s)
    if (kEpsPos[s].first == i && kEpsPos[s].second == j) return s;
  return -1;
}

// eps tuple from the pairs equal to one, written as two-digit face numbers.
EpsTuple ones(std::initializer_list<int> pairs) {
  EpsTuple e{0, 0, 0, 0, 0};
  for (int p : pairs) e[slot(p / 10 - 1, p % 10 - 1)] = 1;
  return e;
}

// eps tuple with every slot one except the listed pairs.
EpsTuple zeros(std::initializer_list<int> pairs) {
  EpsTuple e{1, 1, 1, 1, 1};
  for (int p : pairs) e[slot(p / 10 - 1, p % 10 - 1)] = 0;
  return e;
}

CaseLeaf exact(std::string label, NormTuple d, EpsTuple e, int t) {
  return CaseLeaf{std::move(label), d, e, BoundKind::Exact, t};
}
CaseLeaf below(std::string label, NormTuple d, EpsTuple e, int t) {
  return CaseLeaf{std::move(label), d, e, BoundKind::Below, t};
}
CaseLeaf none(std::string label, NormTuple d, EpsTuple e) {
  return CaseLeaf{std::move(label), d, e, BoundKind::Impossible, 0};
}

std::vector<CaseLeaf> build_tree() {
  const NormTuple c2{1, 1, 1, 2}, c3{1, 1, 2, 2}, c4{1, 2, 1, 1}, c5{1, 2, 2, 1};
  const NormTuple c6{1, 2, 2, 2}, c7{2, 2, 1, 1}, c8{2, 2, 2, 1}, c9{2, 2, 2, 2};
  return {
      exact("2.0", c2, ones({}), 2),
      below("2.1", c2, ones({14}), 2),

      exact("3.0", c3, ones({}), 3),
      below("3.1", c3, ones({13}), 3),
      below("3.2", c3, ones({13, 14}), 6),

      none("4.0", c4, ones({})),
      below("4.1.1", c4, ones({12}), 3),
      below("4.1.2", c4, ones({23}), 3),
      below("4.2.1", c4, ones({23, 24}), 3),

      exact("5.0", c5, ones({}), 2),
      below("5.1.1", c5, ones({12}), 5),
      below("5.1.2", c5, ones({13}), 2),
      below("5.1.3", c5, ones({23}), 3),
      below("5.2.1", c5, ones({12, 23}), 5),
      below("5.2.2", c5, ones({13, 23}), 5),
      below("5.2.3", c5, ones({23, 24}), 4),

      exact("6.0", c6, ones({}), 3),
      below("6.1.1", c6, ones({12}), 4),
      below("6.1.2", c6, ones({13}), 4),
      below("6.1.3", c6, ones({23}), 4),
      below("6.2.1", c6, ones({12, 23}), 8),
      below("6.2.2", c6, ones({13, 23}), 5),
      below("6.2.3", c6, ones({13, 14}), 6),
      below("6.2.4", c6, ones({13, 24}), 4),
      below("6.2.5", c6, ones({23, 24}), 6),
      below("6.3.1", c6, zeros({13, 14}), 8),
      below("6.3.2", c6, zeros({12, 14}), 7),
      below("6.3.3", c6, zeros({12, 24}), 6),
      below("6.4.1", c6, zeros({12}), 6),

      none("7.0", c7, ones({})),
      below("7.1.1", c7, ones({12}), 3),
      below("7.1.2", c7, ones({13}), 2),
      below("7.2.1", c7, ones({12, 13}), 6),
      below("7.2.2", c7, ones({13, 14}), 3),
      below("7.3.1", c7, zeros({23, 24}), 8),
      below("7.3.2", c7, zeros({13, 24}), 5),

      exact("8.0", c8, ones({}), 2),
      below("8.1.1", c8, ones({12}), 4),
      below("8.1.2", c8, ones({23}), 7),
      below("8.1.3", c8, ones({14}), 4),
      below("8.2.1", c8, ones({12, 13}), 5),
      below("8.2.2", c8, ones({12, 14}), 7),
      below("8.2.3", c8, ones({13, 14}), 7),
      below("8.2.4", c8, ones({14, 23}), 7),
      below("8.2.5", c8, ones({13, 23}), 4),
      below("8.3.1", c8, zeros({23, 24}), 7),
      below("8.3.2", c8, zeros({23, 14}), 7),
      below("8.3.3", c8, zeros({12, 14}), 7),

      exact("9.0", c9, ones({}), 3),
      below("9.1.1", c9, ones({12}), 5),
      below("9.1.2", c9, ones({23}), 5),
      below("9.2.1", c9, ones({12, 13}), 6),
      below("9.2.2", c9, ones({13, 23}), 4),
      below("9.2.3", c9, ones({13, 14}), 5),
      below("9.2.4", c9, ones({13, 24}), 4),
      below("9.3.1", c9, zeros({12, 13}), 6),
      below("9.3.2", c9, zeros({13, 14}), 7),
      below("9.3.3", c9, zeros({13, 24}), 7),
      below("9.4.1", c9, zeros({12}), 7),
  };
}

const std::vector<std::array<int, 6>> kForbidden{
    {1, 1, 2, 0, 1, 1}, {2, 1, 1, 1, 1, 0}, {1, 2, 1, 1, 0, 1}, {2, 2, 1, 0, 1, 1}, {2, 1, 2, 1, 0, 1},
    {1, 2, 2, 1, 1, 0}, {2, 2, 1, 1, 1, 1}, {2, 1, 2, 1, 1, 1}, {1, 2, 2, 1, 1, 1}, {2, 2, 2, 1, 1, 1},
};

int eps_at(const EpsTuple& e, int i, int j) { return e[slot(i, j)]; }

bool quarter(const NormTuple& d, const EpsTuple& e, int i, int j) {
  return d[i] != d[j] && eps_at(e, i, j) == 1;
}

std::string frame_source(const CandidateFrame& f) { return f.label + "/T=" + std::to_string(f.T); }

}  // namespace

const std::vector<CaseLeaf>& enumerate_case_tree() {
  static const std::vector<CaseLeaf> tree = build_tree();
  return tree;
}

IntMatrix CandidateFrame::gram() const {
  IntMatrix g(4, 4);
  for (int i = 0; i < 4; ++i) g(i, i) = d[i];
  for (int s = 0; s < 5; ++s) {
    auto [i, j] = kEpsPos[s];
    g(i, j) = -eps[s];
    g(j, i) = -eps[s];
  }
  g(2, 3) = -T;
  g(3, 2) = -T;
  return g;
}

CandidateFrame CandidateFrame::swapped() const {
  // e1 <-> e2, e3 <-> e4: 12 fixed, 13 <-> 24, 14 <-> 23.
  CandidateFrame f = *this;
  f.d = {d[1], d[0], d[3], d[2]};
  f.eps = {eps[0], eps[4], eps[3], eps[2], eps[1]};
  return f;
}

bool is_forbidden_vertex(const std::array<int, 6>& type) {
  // Compare up to relabelling of the three faces.
  const int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto pair_eps = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    if (a == 0 && b == 1) return type[3];
    if (a == 0 && b == 2) return type[4];
    return type[5];
  };
  for (const auto& p : perm) {
    std::array<int, 6> t{type[p[0]], type[p[1]], type[p[2]], pair_eps(p[0], p[1]), pair_eps(p[0], p[2]),
                         pair_eps(p[1], p[2])};
    if (std::find(kForbidden.begin(), kForbidden.end(), t) != kForbidden.end()) return true;
  }
  return false;
}

bool has_excluded_quarter_angles(const NormTuple& d, const EpsTuple& e) {
  if (eps_at(e, 0, 1) != 0) return false;
  return (quarter(d, e, 0, 2) && quarter(d, e, 1, 3)) || (quarter(d, e, 0, 3) && quarter(d, e, 1, 2));
}

std::vector<CandidateFrame> enumerate_frames() {
  std::vector<CandidateFrame> out;
  std::set<std::tuple<NormTuple, EpsTuple, int>> seen;
  for (const auto& leaf : enumerate_case_tree()) {
    const auto& d = leaf.d;
    const auto& e = leaf.eps;
    if (is_forbidden_vertex({d[0], d[1], d[2], e[0], e[1], e[3]})) continue;
    if (is_forbidden_vertex({d[0], d[1], d[3], e[0], e[2], e[4]})) continue;
    if (has_excluded_quarter_angles(d, e)) continue;
    std::vector<int> values;
    if (leaf.kind == BoundKind::Exact) values.push_back(leaf.t);
    if (leaf.kind == BoundKind::Below)
      for (int t = 1; t < leaf.t; ++t) values.push_back(t);
    for (int t : values) {
      if (t * t > 196 * d[2] * d[3]) throw std::logic_error("frame violates the outermost-edge bound");
      CandidateFrame f{leaf.label, d, e, t};
      CandidateFrame s = f.swapped();
      auto key = std::min(std::make_tuple(f.d, f.eps, f.T), std::make_tuple(s.d, s.eps, s.T));
      if (!seen.insert(key).second) continue;
      out.push_back(f);
    }
  }
  return out;
}

std::vector<CandidateLattice> frames_to_candidates(EnumerationStats* stats) {
  EnumerationStats st;
  std::vector<CandidateLattice> out;
  for (const auto& f : enumerate_frames()) {
    ++st.frames;
    IntMatrix g = f.gram();
    if (determinant(g) == 0) continue;
    QuadraticLattice l(g, frame_source(f));
    Signature s = signature(l);
    if (s.positives != 3 || s.negatives != 1) continue;
    ++st.hyperbolic;
    if (!is_anisotropic_global(l)) continue;
    ++st.anisotropic;
    out.push_back(CandidateLattice{f, l, maximal_extensions(l)});
  }
  if (stats) *stats = st;
  return out;
}

const std::vector<ReferenceLattice>& reference_table() {
  static const std::vector<ReferenceLattice> table{
      {"L(1)", diagonal_lattice({-15, 1, 1, 1}, "L(1)")}, {"L(2)", diagonal_lattice({-7, 1, 1, 1}, "L(2)")},
      {"L(3)", diagonal_lattice({-23, 1, 1, 1}, "L(3)")}, {"L(4)", diagonal_lattice({-31, 1, 1, 1}, "L(4)")},
      {"L(5)", diagonal_lattice({-3, 5, 1, 1}, "L(5)")},  {"L(6)", diagonal_lattice({-39, 1, 1, 1}, "L(6)")},
      {"L(7)", diagonal_lattice({-111, 1, 1, 1}, "L(7)")}, {"L(8)", diagonal_lattice({-71, 1, 1, 1}, "L(8)")},
      {"L(9)", diagonal_lattice({-47, 1, 1, 1}, "L(9)")}, {"L(10)", diagonal_lattice({-1, 3, 3, 2}, "L(10)")},
  };
  return table;
}

bool same_lattice_class(const QuadraticLattice& a, const QuadraticLattice& b) {
  if (a.gram() == b.gram()) return true;
  try {
    return is_isomorphic(a, b);
  } catch (const ConditionsNotMet&) {
    return false;
  }
}

std::vector<TableEntry> candidate_table(const std::vector<CandidateLattice>& candidates) {
  std::vector<TableEntry> found;
  for (const auto& c : candidates)
    for (const auto& m : c.maximal_forms) {
      auto it = std::find_if(found.begin(), found.end(),
                             [&](const TableEntry& t) { return same_lattice_class(t.lattice, m.lattice); });
      if (it == found.end()) {
        found.push_back(TableEntry{{}, m.lattice, invariant_factors(m.lattice), m.lattice.determinant(), {}});
        it = std::prev(found.end());
      }
      it->sources.push_back(frame_source(c.frame));
    }

  std::vector<TableEntry> named, extra;
  for (const auto& ref : reference_table()) {
    auto it = std::find_if(found.begin(), found.end(),
                           [&](const TableEntry& t) { return t.name.empty() && same_lattice_class(t.lattice, ref.lattice); });
    if (it == found.end()) continue;
    it->name = ref.name;
    named.push_back(*it);
  }
  for (auto& t : found)
    if (t.name.empty()) extra.push_back(t);
  std::stable_sort(extra.begin(), extra.end(),
                   [](const TableEntry& a, const TableEntry& b) { return a.discriminant > b.discriminant; });
  for (std::size_t i = 0; i < extra.size(); ++i) extra[i].name = "X(" + std::to_string(i + 1) + ")";
  named.insert(named.end(), extra.begin(), extra.end());
  for (auto& t : named) t.lattice = t.lattice.renamed(t.name);
  return named;
}

std::vector<TableEntry> candidate_table() { return candidate_table(frames_to_candidates()); }

}  // namespace vinberg
