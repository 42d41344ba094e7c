#pragma once

// Vinberg's algorithm for rank-4 hyperbolic lattices: the fundamental cone at
// a basic point, then roots in order of increasing distance, stopping as soon
// as the mirrors bound a polyhedron of finite volume.

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "vinberg/coxeter.hpp"
#include "vinberg/hyperbolic.hpp"

namespace vinberg {

struct VinbergConfig {
  std::optional<IntVector> basic_point;  // default: see default_basic_point
  std::vector<Integer> allowed_norms;    // empty: every admissible norm
  std::size_t max_roots = 64;
  Integer max_height = 10000;            // bound on h = -(a, v0)
};

enum class RunStatus { FiniteVolume, BudgetExhausted };

std::string to_string(RunStatus s);

struct VinbergRun {
  LatticeHandle lattice;
  IntVector basic_point;
  std::vector<Integer> norms;     // norms actually searched
  std::vector<Root> roots;        // cone roots first
  std::vector<Integer> heights;   // -(a, v0) per root
  std::size_t cone_size = 0;
  RunStatus status = RunStatus::BudgetExhausted;
  std::string stop_reason;
  std::size_t steps = 0;          // shells enumerated
  FiniteVolumeResult volume{VolumeVerdict::Infinite, {}, {}, 0};

  /// (a, v0)^2 / (a, a) of root i.
  Rational priority(std::size_t i) const;
};

/// Positive divisors of twice the largest invariant factor.
std::vector<Integer> admissible_root_norms(const QuadraticLattice& lattice);

/// For a diagonal Gram matrix with one negative entry, that basis vector;
/// otherwise a negative vector of least |norm| from a bounded search.
IntVector default_basic_point(const QuadraticLattice& lattice);

/// Simple roots of the finite reflection group generated by the roots
/// orthogonal to v0 with the given norms.
std::vector<Root> fundamental_cone(const LatticeHandle& lattice, const IntVector& v0,
                                   const std::vector<Integer>& norms);

/// Step-by-step driver; run() below loops next_root() to completion.
class VinbergSearch {
 public:
  /// Throws NotHyperbolic unless the lattice has rank 4 and signature (3,1),
  /// std::invalid_argument for a basic point of non-negative norm.
  VinbergSearch(LatticeHandle lattice, const VinbergConfig& config);

  const VinbergRun& state() const { return run_; }

  /// Accepts and returns the next root, or nothing once max_height is exhausted.
  std::optional<Root> next_root();

  /// Loops until finite volume or budget exhaustion.
  const VinbergRun& run();

 private:
  struct Shell {
    __int128 h;
    long k;
  };
  struct ShellOrder {
    bool operator()(const Shell& a, const Shell& b) const;
  };
  struct Candidate {
    long k;
    std::vector<long long> coords;
    __int128 h;
  };

  // Search coordinates for the roots of one norm k: a = T b on the sublattice
  // {a : 2Ga = 0 mod k}, with (a, v0) = gamma * b_0 and the remaining
  // coordinates orthogonal-complement-like, so each shell is an ellipsoid.
  struct Frame {
    long k = 0;
    std::vector<long long> transform;  // n x n, row-major
    long long gamma = 1;
    std::vector<long long> m;          // T^T G T
    std::vector<double> chol;     // Fincke-Pohst coefficients
    std::vector<double> center_dir;
    double defect = 0;            // norm defect of the v0 direction
    // Per free-prefix length i: H_ff^{-1} (i x i) and H_ff^{-1} H_f,fixed.
    std::vector<std::vector<double>> block_inv, block_proj;
    // Accepted half-spaces (x, a_j) <= 0 in b-coordinates.
    std::vector<std::vector<double>> halfspace_w, halfspace_q;
  };

  Frame make_frame(long k) const;
  void add_halfspace(Frame& f, const std::vector<long long>& ga) const;
  void enumerate_shell(const Shell& s, std::vector<Candidate>& out);
  // Shrinks [lo, hi] for y_i to the values whose remaining slice can still
  // meet every accepted half-space.
  void narrow_range(const Frame& f, std::size_t i, long long b0, const std::vector<long long>& y,
                    const std::vector<double>& c, double center, double rem, double qii, double& lo,
                    double& hi) const;
  bool load_next_level();
  bool compatible(const std::vector<long long>& a) const;
  void accept(const std::vector<long long>& a, long k, __int128 h);

  VinbergConfig config_;
  VinbergRun run_;
  std::size_t n_ = 0;
  std::vector<long long> gram_;  // n x n
  std::vector<long long> v0_;
  std::vector<long long> g_;     // gram * v0
  std::map<long, Frame> frames_;
  std::priority_queue<Shell, std::vector<Shell>, ShellOrder> shells_;
  std::deque<Candidate> pending_;
  std::vector<std::vector<long long>> accepted_;
  std::vector<std::vector<long long>> accepted_g_;  // gram * a
};

VinbergRun run(const QuadraticLattice& lattice, const VinbergConfig& config = {});

}  // namespace vinberg
