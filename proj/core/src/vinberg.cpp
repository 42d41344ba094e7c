#include "vinberg/vinberg.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

namespace vinberg {

namespace {

using i128 = __int128;

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2 * kPi;
// Angular slack when intersecting half-spaces with a shell slice; candidates are
// verified exactly afterwards, so erring on the wide side only costs time.
constexpr double kArcPad = 1e-5;

long long to_ll(const Integer& x, const char* what) {
  if (!x.fits_slong_p() || abs(x) > Integer("1000000000000"))
    throw std::overflow_error(std::string(what) + " too large for the search");
  return x.get_si();
}

Integer from_i128(i128 x) {
  if (x >= 0 && x <= static_cast<i128>(INT64_MAX)) return Integer(static_cast<long>(x));
  if (x < 0 && x >= static_cast<i128>(INT64_MIN)) return Integer(static_cast<long>(x));
  bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
  Integer r(static_cast<unsigned long>(u >> 64));
  r <<= 64;
  r += Integer(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFull));
  return neg ? Integer(-r) : r;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

IntVector to_int_vector(const std::vector<long long>& v) {
  IntVector out;
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

// Inverse of a small positive definite matrix, row-major.
std::vector<double> invert_small(std::vector<double> a, std::size_t n) {
  std::vector<double> inv(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < n; ++i)
      if (std::fabs(a[i * n + c]) > std::fabs(a[p * n + c])) p = i;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a[c * n + j], a[p * n + j]);
      std::swap(inv[c * n + j], inv[p * n + j]);
    }
    const double piv = a[c * n + c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c * n + j] /= piv;
      inv[c * n + j] /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c) continue;
      const double f = a[i * n + c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i * n + j] -= f * a[c * n + j];
        inv[i * n + j] -= f * inv[c * n + j];
      }
    }
  }
  return inv;
}

bool is_diagonal(const IntMatrix& g) {
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (i != j && g(i, j) != 0) return false;
  return true;
}

}  // namespace

std::string to_string(RunStatus s) {
  return s == RunStatus::FiniteVolume ? "FINITE_VOLUME" : "BUDGET_EXHAUSTED";
}

Rational VinbergRun::priority(std::size_t i) const {
  return ratio(heights[i] * heights[i], roots[i].norm);
}

std::vector<Integer> admissible_root_norms(const QuadraticLattice& lattice) {
  Integer twice = 2 * invariant_factors(lattice).largest();
  std::vector<Integer> out;
  for (Integer k = 1; k * k <= twice; ++k)
    if (mpz_divisible_p(twice.get_mpz_t(), k.get_mpz_t())) {
      out.push_back(k);
      if (k * k != twice) out.push_back(twice / k);
    }
  std::sort(out.begin(), out.end());
  return out;
}

IntVector default_basic_point(const QuadraticLattice& lattice) {
  const IntMatrix& g = lattice.gram();
  const std::size_t n = lattice.rank();
  if (is_diagonal(g)) {
    std::size_t negatives = 0, where = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g(i, i) < 0) {
        ++negatives;
        where = i;
      }
    if (negatives == 1) {
      IntVector v(n, 0);
      v[where] = 1;
      return v;
    }
  }
  for (long bound = 1; bound <= 64; bound *= 2) {
    std::optional<IntVector> best;
    Integer best_norm;
    IntVector v(n, -bound);
    for (;;) {
      // First nonzero coordinate positive, primitive.
      auto lead = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
      if (lead != v.end() && *lead > 0 && gcd_of(v) == 1) {
        Integer norm = bilinear(g, v, v);
        if (norm < 0 && (!best || -norm < -best_norm)) {
          best = v;
          best_norm = norm;
        }
      }
      std::size_t i = n;
      while (i > 0 && v[i - 1] == bound) v[--i] = -bound;
      if (i == 0) break;
      ++v[i - 1];
    }
    if (best) return *best;
  }
  throw NotHyperbolic("no vector of negative norm found");
}

bool VinbergSearch::ShellOrder::operator()(const Shell& a, const Shell& b) const {
  i128 pa = a.h * a.h * b.k;
  i128 pb = b.h * b.h * a.k;
  if (pa != pb) return pa > pb;
  if (a.k != b.k) return a.k > b.k;
  return a.h > b.h;
}

VinbergSearch::VinbergSearch(LatticeHandle lattice, const VinbergConfig& config) : config_(config) {
  if (!lattice) throw std::invalid_argument("no lattice");
  if (lattice->rank() != 4) throw NotHyperbolic("Vinberg's algorithm is implemented for rank 4");
  Signature sig = signature(*lattice);
  if (sig.positives != 3 || sig.negatives != 1) throw NotHyperbolic("signature is not (3,1)");
  run_.lattice = lattice;
  n_ = lattice->rank();
  run_.basic_point = config.basic_point ? *config.basic_point : default_basic_point(*lattice);
  if (run_.basic_point.size() != n_) throw LatticeMismatch("basic point has the wrong length");
  if (lattice->inner(run_.basic_point, run_.basic_point) >= 0)
    throw std::invalid_argument("basic point must have negative norm");

  const auto admissible = admissible_root_norms(*lattice);
  for (const auto& k : admissible)
    if (config.allowed_norms.empty() ||
        std::find(config.allowed_norms.begin(), config.allowed_norms.end(), k) != config.allowed_norms.end())
      run_.norms.push_back(k);

  const IntMatrix& G = lattice->gram();
  gram_.assign(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) gram_[i * n_ + j] = to_ll(G(i, j), "Gram entry");
  v0_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) v0_[i] = to_ll(run_.basic_point[i], "basic point");
  g_.assign(n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) g_[i] += gram_[i * n_ + j] * v0_[j];
  for (const auto& k : run_.norms) {
    const long kl = to_ll(k, "norm");
    frames_.emplace(kl, make_frame(kl));
  }

  // Fundamental cone: all roots orthogonal to v0, reduced to simple roots.
  std::vector<Candidate> cone;
  for (const auto& k : run_.norms) enumerate_shell(Shell{0, to_ll(k, "norm")}, cone);
  if (!cone.empty()) {
    const long long v0sq = -bilinear(lattice->gram(), run_.basic_point, run_.basic_point).get_si();
    std::vector<long long> w(n_), c(n_);
    auto pair_c = [&](const Candidate& a) {
      i128 s = 0;
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) s += static_cast<i128>(a.coords[i]) * gram_[i * n_ + j] * c[j];
      return s;
    };
    for (long t = 0;; ++t) {
      for (std::size_t i = 0; i < n_; ++i)
        w[i] = static_cast<long long>(n_ - i) * 1000 + static_cast<long long>(i) + t * static_cast<long long>(i * i + 1);
      long long wv0 = 0;
      for (std::size_t i = 0; i < n_; ++i) wv0 += w[i] * g_[i];
      for (std::size_t i = 0; i < n_; ++i) c[i] = v0sq * w[i] + wv0 * v0_[i];
      if (std::none_of(cone.begin(), cone.end(), [&](const Candidate& a) { return pair_c(a) == 0; })) break;
      if (t > 10000) throw std::logic_error("no generic direction for the fundamental cone");
    }
    std::vector<std::pair<i128, Candidate>> positive;
    for (auto& a : cone) {
      i128 s = pair_c(a);
      if (s < 0) positive.emplace_back(s, a);
    }
    std::sort(positive.begin(), positive.end(), [](const auto& x, const auto& y) {
      i128 lx = x.first * x.first * y.second.k;
      i128 ly = y.first * y.first * x.second.k;
      if (lx != ly) return lx < ly;
      if (x.second.k != y.second.k) return x.second.k < y.second.k;
      return x.second.coords < y.second.coords;
    });
    std::vector<Candidate> simple;
    for (auto& [s, a] : positive) {
      if (!compatible(a.coords)) continue;
      accepted_.push_back(a.coords);
      std::vector<long long> ga(n_, 0);
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) ga[i] += gram_[i * n_ + j] * a.coords[j];
      accepted_g_.push_back(std::move(ga));
      simple.push_back(a);
    }
    accepted_.clear();
    accepted_g_.clear();
    std::sort(simple.begin(), simple.end(), [](const Candidate& x, const Candidate& y) {
      return x.k != y.k ? x.k < y.k : x.coords < y.coords;
    });
    for (const auto& a : simple) accept(a.coords, a.k, 0);
  }
  run_.cone_size = run_.roots.size();

  for (const auto& kz : run_.norms) {
    long k = to_ll(kz, "norm");
    const long long step = frames_.at(k).gamma;
    if (Integer(static_cast<long>(step)) <= config_.max_height) shells_.push(Shell{step, k});
  }
}

VinbergSearch::Frame VinbergSearch::make_frame(long k) const {
  const IntMatrix& G = run_.lattice->gram();
  Frame f;
  f.k = k;

  // Sublattice {a : 2Ga = 0 mod k}: its dual is Z^n + (2G/k) Z^n.
  IntMatrix gens(n_, 2 * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    gens(i, i) = k;
    for (std::size_t j = 0; j < n_; ++j) gens(i, n_ + j) = 2 * G(i, j);
  }
  const RatMatrix hinv = inverse(to_rational(column_hermite_basis(gens)));
  std::vector<long long> basis(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      Rational e = hinv(j, i) * k;
      if (e.get_den() != 1) throw std::logic_error("root sublattice is not integral");
      basis[i * n_ + j] = to_ll(e.get_num(), "sublattice basis");
    }

  // Column operations bringing (B^T g)^T to (gamma, 0, ..., 0).
  std::vector<long long> r(n_, 0);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t i = 0; i < n_; ++i) r[j] += basis[i * n_ + j] * g_[i];
  std::vector<long long>& t = f.transform;
  t = basis;
  auto col_axpy = [&](std::size_t dst, std::size_t src, long long q) {
    r[dst] -= q * r[src];
    for (std::size_t i = 0; i < n_; ++i) t[i * n_ + dst] -= q * t[i * n_ + src];
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    std::swap(r[a], r[b]);
    for (std::size_t i = 0; i < n_; ++i) std::swap(t[i * n_ + a], t[i * n_ + b]);
  };
  for (;;) {
    std::size_t piv = n_;
    for (std::size_t j = 0; j < n_; ++j)
      if (r[j] != 0 && (piv == n_ || std::llabs(r[j]) < std::llabs(r[piv]))) piv = j;
    bool done = true;
    for (std::size_t j = 0; j < n_; ++j)
      if (j != piv && r[j] != 0) {
        col_axpy(j, piv, r[j] / r[piv]);
        done = false;
      }
    if (done) {
      col_swap(0, piv);
      break;
    }
  }
  if (r[0] < 0) {
    r[0] = -r[0];
    for (std::size_t i = 0; i < n_; ++i) t[i * n_] = -t[i * n_];
  }
  f.gamma = r[0];

  f.m.assign(n_ * n_, 0);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) {
      i128 s = 0;
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) s += static_cast<i128>(t[i * n_ + a]) * gram_[i * n_ + j] * t[j * n_ + b];
      f.m[a * n_ + b] = static_cast<long long>(s);
    }

  // Positive definite block H on coordinates 1..n-1.
  const std::size_t d = n_ - 1;
  std::vector<double> h(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) h[i * d + j] = static_cast<double>(f.m[(i + 1) * n_ + (j + 1)]);
  std::vector<double> q = h;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      q[j * d + i] = q[i * d + j];
      q[i * d + j] = q[i * d + j] / q[i * d + i];
    }
    for (std::size_t k2 = i + 1; k2 < d; ++k2)
      for (std::size_t l = k2; l < d; ++l) q[k2 * d + l] -= q[k2 * d + i] * q[i * d + l];
  }
  f.chol = q;

  f.block_inv.assign(d, {});
  f.block_proj.assign(d, {});
  for (std::size_t i = 1; i < d; ++i) {
    std::vector<double> hff(i * i);
    for (std::size_t a = 0; a < i; ++a)
      for (std::size_t c = 0; c < i; ++c) hff[a * i + c] = h[a * d + c];
    f.block_inv[i] = invert_small(hff, i);
    const std::size_t nf = d - i;
    f.block_proj[i].assign(i * nf, 0);
    for (std::size_t a = 0; a < i; ++a)
      for (std::size_t c = 0; c < nf; ++c)
        for (std::size_t l = 0; l < i; ++l) f.block_proj[i][a * nf + c] += f.block_inv[i][a * i + l] * h[l * d + i + c];
  }

  const std::vector<double> hi = invert_small(h, d);
  f.center_dir.assign(d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) f.center_dir[i] += hi[i * d + j] * static_cast<double>(f.m[(j + 1) * n_]);
  double mhm = 0;
  for (std::size_t i = 0; i < d; ++i) mhm += static_cast<double>(f.m[(i + 1) * n_]) * f.center_dir[i];
  f.defect = static_cast<double>(f.m[0]) - mhm;
  return f;
}

void VinbergSearch::add_halfspace(Frame& f, const std::vector<long long>& ga) const {
  const std::size_t d = n_ - 1;
  std::vector<double> w(n_, 0);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t i = 0; i < n_; ++i) w[j] += static_cast<double>(f.transform[i * n_ + j]) * ga[i];
  std::vector<double> qs(d, 0);
  for (std::size_t i = 1; i < d; ++i)
    for (std::size_t a = 0; a < i; ++a)
      for (std::size_t c = 0; c < i; ++c) qs[i] += w[a + 1] * f.block_inv[i][a * i + c] * w[c + 1];
  f.halfspace_w.push_back(std::move(w));
  f.halfspace_q.push_back(std::move(qs));
}

void VinbergSearch::enumerate_shell(const Shell& s, std::vector<Candidate>& out) {
  // Rank 4: b = (b0, y0, y1, y2) with y in a positive definite ternary form;
  // y2 and y1 are looped over, y0 is solved for.
  const Frame& f = frames_.at(s.k);
  constexpr std::size_t d = 3;
  if (s.h % f.gamma != 0) return;
  const long long b0 = -static_cast<long long>(s.h / f.gamma);
  std::vector<double> c(d);
  for (std::size_t i = 0; i < d; ++i) c[i] = -static_cast<double>(b0) * f.center_dir[i];
  const double radius = static_cast<double>(s.k) - static_cast<double>(b0) * static_cast<double>(b0) * f.defect;
  const double slack = 1e-7 * (1 + std::fabs(radius));
  if (radius < -slack) return;
  const long k = s.k;
  const double* q = f.chol.data();
  std::vector<long long> y(d);

  auto emit = [&]() {
    long long a[4];
    const long long b[4] = {b0, y[0], y[1], y[2]};
    for (std::size_t i = 0; i < n_; ++i) {
      i128 t = 0;
      for (std::size_t j = 0; j < n_; ++j) t += static_cast<i128>(f.transform[i * n_ + j]) * b[j];
      a[i] = static_cast<long long>(t);
    }
    i128 norm = 0, hv = 0, ga[4] = {0, 0, 0, 0};
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) ga[i] += static_cast<i128>(gram_[i * n_ + j]) * a[j];
      norm += ga[i] * a[i];
      hv += ga[i] * v0_[i];
    }
    if (norm != k || hv != -s.h) return;
    long long g = 0;
    for (auto x : a) g = gcd_ll(g, x);
    if (g != 1) return;
    for (std::size_t i = 0; i < n_; ++i)
      if ((2 * ga[i]) % k != 0) return;
    out.push_back(Candidate{k, std::vector<long long>(a, a + 4), s.h});
  };

  auto range = [&](std::size_t i, double center, double rem, long long& lo, long long& hi) {
    const double span = std::sqrt(std::max(rem + slack, 0.0) / q[i * d + i]);
    double flo = center - span, fhi = center + span;
    narrow_range(f, i, b0, y, c, center, rem, q[i * d + i], flo, fhi);
    lo = static_cast<long long>(std::ceil(flo - 1e-7));
    hi = static_cast<long long>(std::floor(fhi + 1e-7));
  };

  long long lo2, hi2;
  range(2, c[2], radius, lo2, hi2);
  const double q00 = q[0], q01 = q[1], q11 = q[1 * d + 1];
  std::vector<std::pair<double, double>> arcs, next;
  std::vector<std::pair<long long, long long>> spans;
  for (long long v2 = lo2; v2 <= hi2; ++v2) {
    const double t2 = static_cast<double>(v2) - c[2];
    const double rem2 = radius - q[2 * d + 2] * t2 * t2;
    if (rem2 < -slack) continue;
    y[2] = v2;
    const double center1 = c[1] - q[1 * d + 2] * t2;
    const double base0 = c[0] - q[0 * d + 2] * t2;

    // The slice is the ellipse y1 = center1 + r1 sin(th),
    // y0 = base0 - q01 (y1 - c1) + r0 cos(th); keep the arcs inside every half-space.
    const double r0 = std::sqrt(std::max(rem2, 0.0) / q00), r1 = std::sqrt(std::max(rem2, 0.0) / q11);
    arcs.assign(1, {0.0, kTwoPi});
    for (std::size_t j = 0; j < f.halfspace_w.size() && !arcs.empty(); ++j) {
      const auto& w = f.halfspace_w[j];
      const double K = w[0] * static_cast<double>(b0) + w[3] * static_cast<double>(v2) +
                       w[1] * (base0 - q01 * (center1 - c[1])) + w[2] * center1;
      const double P = w[1] * r0, Q = (w[2] - w[1] * q01) * r1;
      const double M = std::hypot(P, Q);
      const double tol = 1e-9 * (std::fabs(K) + M + 1);
      if (M <= tol) {
        if (K > tol) arcs.clear();
        continue;
      }
      const double ratio_k = -K / M;
      if (ratio_k >= 1) continue;
      if (ratio_k < -1 - 1e-9) {
        arcs.clear();
        break;
      }
      const double alpha = std::acos(std::clamp(ratio_k, -1.0, 1.0)) - kArcPad;
      if (alpha <= 0) continue;
      double start = std::fmod(std::atan2(Q, P) + alpha, kTwoPi);
      if (start < 0) start += kTwoPi;
      const double len = kTwoPi - 2 * alpha;
      next.clear();
      auto clip = [&](double lo, double hi) {
        for (const auto& [x, z] : arcs) {
          const double u = std::max(x, lo), v = std::min(z, hi);
          if (u <= v) next.emplace_back(u, v);
        }
      };
      clip(start, std::min(start + len, kTwoPi));
      if (start + len > kTwoPi) clip(0.0, start + len - kTwoPi);
      arcs.swap(next);
    }
    if (arcs.empty()) continue;

    spans.clear();
    for (const auto& [x, z] : arcs) {
      double smin = std::min(std::sin(x), std::sin(z)), smax = std::max(std::sin(x), std::sin(z));
      if (x <= kPi / 2 && kPi / 2 <= z) smax = 1;
      if (x <= 3 * kPi / 2 && 3 * kPi / 2 <= z) smin = -1;
      spans.emplace_back(static_cast<long long>(std::floor(center1 + r1 * smin)) - 1,
                         static_cast<long long>(std::ceil(center1 + r1 * smax)) + 1);
    }
    std::sort(spans.begin(), spans.end());
    long long done = std::numeric_limits<long long>::min();
    for (auto [lo1, hi1] : spans) {
      lo1 = std::max(lo1, done + 1);
      for (long long v1 = lo1; v1 <= hi1; ++v1) {
        const double t1 = static_cast<double>(v1) - center1;
        const double rem1 = rem2 - q11 * t1 * t1;
        if (rem1 < -slack) continue;
        const double center0 = base0 - q01 * (static_cast<double>(v1) - c[1]);
        const double span = std::sqrt(std::max(rem1, 0.0) / q00);
        const double tol = slack + 1e-7 * (1 + std::fabs(rem1));
        long long last = std::numeric_limits<long long>::min();
        for (double e : {center0 - span, center0 + span}) {
          const long long mid = std::llround(e);
          for (long long v0 = mid - 1; v0 <= mid + 1; ++v0) {
            if (v0 <= last) continue;
            const double t0 = static_cast<double>(v0) - center0;
            if (std::fabs(rem1 - q00 * t0 * t0) > tol) continue;
            last = v0;
            y[1] = v1;
            y[0] = v0;
            emit();
          }
        }
      }
      done = std::max(done, hi1);
    }
  }
}

void VinbergSearch::narrow_range(const Frame& f, std::size_t i, long long b0, const std::vector<long long>& y,
                                 const std::vector<double>& c, double center, double rem, double qii, double& lo,
                                 double& hi) const {
  // With y_i = v, the slice left for y_0..y_{i-1} is an ellipsoid of squared
  // radius rem - qii (v - center)^2 around star(v). Half-space j meets it iff
  // lin(v) <= sqrt(q_j * radius^2), with lin affine in v; solve for v.
  const std::size_t d = n_ - 1, nf = d - i;
  double star0[3], star1[3];
  for (std::size_t r = 0; r < i; ++r) {
    double x = 0;
    for (std::size_t k = 1; k < nf; ++k)
      x -= f.block_proj[i][r * nf + k] * (static_cast<double>(y[i + k]) - c[i + k]);
    star0[r] = c[r] + x + f.block_proj[i][r * nf] * c[i];
    star1[r] = -f.block_proj[i][r * nf];
  }
  for (std::size_t j = 0; j < f.halfspace_w.size() && lo <= hi; ++j) {
    const auto& w = f.halfspace_w[j];
    double alpha = w[0] * static_cast<double>(b0), beta = w[i + 1];
    for (std::size_t k = i + 1; k < d; ++k) alpha += w[k + 1] * static_cast<double>(y[k]);
    for (std::size_t r = 0; r < i; ++r) {
      alpha += w[r + 1] * star0[r];
      beta += w[r + 1] * star1[r];
    }
    const double q = f.halfspace_q[j][i];
    // (alpha + beta v)^2 <= q (rem - qii (v - center)^2)
    const double A = beta * beta + q * qii;
    const double B = 2 * alpha * beta - 2 * q * qii * center;
    const double C = alpha * alpha - q * (rem - qii * center * center);
    double r1 = 0, r2 = 0;
    bool real = false;
    if (A > 0) {
      const double disc = B * B - 4 * A * C;
      if (disc >= 0) {
        const double sq = std::sqrt(disc);
        r1 = (-B - sq) / (2 * A);
        r2 = (-B + sq) / (2 * A);
        real = true;
      }
    }
    const double pad = 1 + 1e-9 * (std::fabs(lo) + std::fabs(hi));
    double nlo = lo, nhi = hi;
    if (beta > 0) {
      double top = -alpha / beta;
      if (real) top = std::max(top, r2);
      nhi = std::min(hi, top + pad);
    } else if (beta < 0) {
      double bottom = -alpha / beta;
      if (real) bottom = std::min(bottom, r1);
      nlo = std::max(lo, bottom - pad);
    } else if (alpha > 0) {
      if (!real) return void(hi = lo - 1);
      nlo = std::max(lo, r1 - pad);
      nhi = std::min(hi, r2 + pad);
    }
    lo = nlo;
    hi = nhi;
  }
}

bool VinbergSearch::compatible(const std::vector<long long>& a) const {
  for (const auto& ga : accepted_g_) {
    i128 s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += static_cast<i128>(ga[i]) * a[i];
    if (s > 0) return false;
  }
  return true;
}

void VinbergSearch::accept(const std::vector<long long>& a, long k, i128 h) {
  std::vector<long long> ga(n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) ga[i] += gram_[i * n_ + j] * a[j];
  for (auto& [norm, f] : frames_) add_halfspace(f, ga);
  accepted_.push_back(a);
  accepted_g_.push_back(std::move(ga));
  run_.roots.push_back(Root{LatticeVector(run_.lattice, to_int_vector(a)), Integer(k)});
  run_.heights.push_back(from_i128(h));
}

bool VinbergSearch::load_next_level() {
  while (pending_.empty()) {
    if (shells_.empty()) return false;
    const Shell first = shells_.top();
    std::vector<Shell> level;
    while (!shells_.empty()) {
      const Shell& s = shells_.top();
      if (s.h * s.h * first.k != first.h * first.h * s.k) break;
      level.push_back(s);
      shells_.pop();
    }
    std::vector<Candidate> found;
    for (const auto& s : level) {
      enumerate_shell(s, found);
      ++run_.steps;
      const long long step = frames_.at(s.k).gamma;
      Shell next{s.h + step, s.k};
      if (from_i128(next.h) <= config_.max_height) shells_.push(next);
    }
    found.erase(std::remove_if(found.begin(), found.end(), [&](const Candidate& c) { return !compatible(c.coords); }),
                found.end());
    std::sort(found.begin(), found.end(), [](const Candidate& x, const Candidate& y) {
      return x.k != y.k ? x.k < y.k : x.coords < y.coords;
    });
    pending_.assign(found.begin(), found.end());
  }
  return true;
}

std::optional<Root> VinbergSearch::next_root() {
  for (;;) {
    if (pending_.empty() && !load_next_level()) return std::nullopt;
    Candidate c = std::move(pending_.front());
    pending_.pop_front();
    if (!compatible(c.coords)) continue;
    accept(c.coords, c.k, c.h);
    return run_.roots.back();
  }
}

const VinbergRun& VinbergSearch::run() {
  auto check = [&] {
    if (run_.roots.size() < n_) return false;
    std::vector<IntVector> coords;
    for (const auto& r : run_.roots) coords.push_back(r.coords());
    run_.volume = finite_volume_check(run_.lattice->gram(), coords);
    return run_.volume.finite();
  };
  if (check()) {
    run_.status = RunStatus::FiniteVolume;
    return run_;
  }
  for (;;) {
    if (run_.roots.size() >= config_.max_roots) {
      run_.status = RunStatus::BudgetExhausted;
      run_.stop_reason = "max_roots reached";
      return run_;
    }
    if (!next_root()) {
      run_.status = RunStatus::BudgetExhausted;
      run_.stop_reason = "max_height reached";
      return run_;
    }
    if (check()) {
      run_.status = RunStatus::FiniteVolume;
      run_.stop_reason.clear();
      return run_;
    }
  }
}

std::vector<Root> fundamental_cone(const LatticeHandle& lattice, const IntVector& v0,
                                   const std::vector<Integer>& norms) {
  VinbergConfig cfg;
  cfg.basic_point = v0;
  cfg.allowed_norms = norms;
  if (norms.empty()) return {};
  VinbergSearch search(lattice, cfg);
  return search.state().roots;
}

VinbergRun run(const QuadraticLattice& lattice, const VinbergConfig& config) {
  VinbergSearch search(share(lattice), config);
  return search.run();
}

}  // namespace vinberg
