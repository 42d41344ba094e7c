#include "vinberg/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vinberg/local_arith.hpp"

namespace vinberg {

QuadraticLattice::QuadraticLattice(IntMatrix gram, std::string name)
    : gram_(std::move(gram)), name_(std::move(name)) {
  if (gram_.rows() == 0) throw InvalidLattice("empty Gram matrix");
  if (!gram_.square()) throw InvalidLattice("Gram matrix is not square");
  if (!gram_.is_symmetric()) throw InvalidLattice("Gram matrix is not symmetric");
  det_ = vinberg::determinant(gram_);
  if (det_ == 0) throw InvalidLattice("Gram matrix is degenerate");
}

bool QuadraticLattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (mpz_odd_p(gram_(i, i).get_mpz_t())) return false;
  return true;
}

QuadraticLattice QuadraticLattice::renamed(std::string name) const {
  QuadraticLattice copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

QuadraticLattice diagonal_lattice(const std::vector<long>& entries, std::string name) {
  IntMatrix g(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) g(i, i) = Integer(entries[i]);
  return QuadraticLattice(std::move(g), std::move(name));
}

Integer discriminant(const QuadraticLattice& lattice) { return lattice.determinant(); }

std::vector<Integer> smith_invariants(const IntMatrix& input) {
  if (!input.square()) throw std::invalid_argument("smith_invariants: non-square matrix");
  IntMatrix a = input;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      // Pivot on the entry of least nonzero absolute value in the trailing block.
      std::size_t pr = n, pc = n;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (a(i, j) != 0 && (pr == n || abs(a(i, j)) < abs(a(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == n) throw std::domain_error("smith_invariants: singular matrix");
      a.swap_rows(k, pr);
      a.swap_cols(k, pc);

      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a(i, k) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, k).get_mpz_t(), a(k, k).get_mpz_t());
        for (std::size_t j = k; j < n; ++j) a(i, j) -= q * a(k, j);
        if (a(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a(k, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(k, j).get_mpz_t(), a(k, k).get_mpz_t());
        for (std::size_t i = k; i < n; ++i) a(i, j) -= q * a(i, k);
        if (a(k, j) != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the whole trailing block.
      std::size_t bad_row = n;
      for (std::size_t i = k + 1; i < n && bad_row == n; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(k, k).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == n) break;
      for (std::size_t j = k; j < n; ++j) a(k, j) += a(bad_row, j);
    }
  }
  std::vector<Integer> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = abs(a(i, i));
  return d;
}

InvariantFactors invariant_factors(const QuadraticLattice& lattice) {
  return InvariantFactors{smith_invariants(lattice.gram())};
}

std::vector<Rational> rational_diagonalize(const QuadraticLattice& lattice, RatMatrix* transform) {
  const std::size_t n = lattice.rank();
  RatMatrix a = to_rational(lattice.gram());
  RatMatrix p = RatMatrix::identity(n);

  // Congruence step on basis vectors: column/row j of `a` and column j of `p`.
  auto add_multiple = [&](std::size_t target, std::size_t source, const Rational& f) {
    for (std::size_t r = 0; r < n; ++r) a(r, target) += f * a(r, source);
    for (std::size_t c = 0; c < n; ++c) a(target, c) += f * a(source, c);
    for (std::size_t r = 0; r < n; ++r) p(r, target) += f * p(r, source);
  };
  auto swap_basis = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    a.swap_cols(i, j);
    p.swap_cols(i, j);
  };

  std::vector<Rational> diag;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (a(i, i) != 0) {
        piv = i;
        break;
      }
    if (piv == n) {
      // All remaining diagonal entries vanish: e_i + e_j has norm 2 a_ij != 0.
      for (std::size_t i = k; i < n && piv == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            add_multiple(i, j, Rational(1));
            piv = i;
            break;
          }
    }
    if (piv == n) throw std::domain_error("rational_diagonalize: degenerate form");
    if (piv != k) swap_basis(k, piv);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(k, i) == 0) continue;
      add_multiple(i, k, -a(k, i) / a(k, k));
    }
    diag.push_back(a(k, k));
  }
  if (transform) *transform = std::move(p);
  return diag;
}

Signature signature(const QuadraticLattice& lattice) {
  Signature s;
  for (const auto& d : rational_diagonalize(lattice)) (d > 0 ? s.positives : s.negatives)++;
  return s;
}

std::vector<Integer> dual_quotient(const QuadraticLattice& lattice) {
  std::vector<Integer> out;
  for (const auto& e : invariant_factors(lattice).factors)
    if (e != 1) out.push_back(e);
  return out;
}

namespace {

// Z-basis (columns, lower-triangular Hermite form) of the lattice spanned by
// the columns of a full-row-rank integer matrix.
// Null space of `m` over F_p (rows of the result span it).
std::vector<std::vector<long>> kernel_mod_p(const IntMatrix& m, long p) {
  const std::size_t n = m.rows();
  std::vector<std::vector<long>> a(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Integer r;
      mpz_fdiv_r_ui(r.get_mpz_t(), m(i, j).get_mpz_t(), static_cast<unsigned long>(p));
      a[i][j] = r.get_si();
    }
  auto inv_mod = [p](long x) {
    long r = 1, e = p - 2, b = x % p;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < n; ++c) {
    std::size_t pr = row;
    while (pr < n && a[pr][c] == 0) ++pr;
    if (pr == n) continue;
    std::swap(a[row], a[pr]);
    long iv = inv_mod(a[row][c]);
    for (auto& v : a[row]) v = v * iv % p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][c] == 0) continue;
      long f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] = ((a[i][j] - f * a[row][j]) % p + p) % p;
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<std::vector<long>> basis;
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<long> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = (p - a[r][free]) % p;
    basis.push_back(v);
  }
  return basis;
}

// Canonical key of a sublattice of L (x) Q given by basis columns.
std::string lattice_key(const RatMatrix& basis) {
  Integer den = 1;
  for (std::size_t i = 0; i < basis.rows(); ++i)
    for (std::size_t j = 0; j < basis.cols(); ++j) den = lcm(den, basis(i, j).get_den());
  IntMatrix scaled(basis.rows(), basis.cols());
  for (std::size_t i = 0; i < basis.rows(); ++i)
    for (std::size_t j = 0; j < basis.cols(); ++j) {
      Rational v = basis(i, j) * den;
      scaled(i, j) = v.get_num();
    }
  IntMatrix h = column_hermite_basis(scaled);
  std::string key = den.get_str() + ":";
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) key += h(i, j).get_str() + ",";
  return key;
}

IntMatrix gram_in_basis(const IntMatrix& gram, const RatMatrix& basis) {
  RatMatrix g = basis.transposed() * to_rational(gram) * basis;
  IntMatrix out(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (g(i, j).get_den() != 1) throw std::logic_error("overlattice is not integral");
      out(i, j) = g(i, j).get_num();
    }
  return out;
}

}  // namespace

std::vector<Overlattice> prime_index_extensions(const QuadraticLattice& lattice) {
  const std::size_t n = lattice.rank();
  const IntMatrix& g = lattice.gram();
  std::vector<Overlattice> out;
  std::set<std::string> seen;
  for (const auto& prime : prime_divisors(lattice.determinant())) {
    if (valuation(lattice.determinant(), prime) < 2) continue;
    if (!prime.fits_slong_p()) throw std::overflow_error("prime too large for glue search");
    const long p = prime.get_si();
    auto ker = kernel_mod_p(g, p);
    const std::size_t r = ker.size();
    // Enumerate nonzero kernel vectors whose first nonzero coefficient is 1.
    std::vector<long> coef(r, 0);
    long total = 1;
    for (std::size_t i = 0; i < r; ++i) total *= p;
    for (long code = 1; code < total; ++code) {
      long c = code;
      for (std::size_t i = 0; i < r; ++i) {
        coef[i] = c % p;
        c /= p;
      }
      std::size_t lead = 0;
      while (coef[lead] == 0) ++lead;
      if (coef[lead] != 1) continue;
      IntVector glue(n, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) glue[j] += coef[i] * ker[i][j];
      for (auto& x : glue) x = x % p;
      // (glue/p, glue/p) integral.
      Integer norm = bilinear(g, glue, glue);
      if (!mpz_divisible_ui_p(norm.get_mpz_t(), static_cast<unsigned long>(p * p))) continue;

      IntMatrix gens(n, n + 1);
      for (std::size_t i = 0; i < n; ++i) {
        gens(i, i) = p;
        gens(i, n) = glue[i];
      }
      IntMatrix h = column_hermite_basis(gens);
      RatMatrix basis(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) basis(i, j) = ratio(h(i, j), Integer(p));
      std::string key = lattice_key(basis);
      if (!seen.insert(key).second) continue;
      out.push_back(Overlattice{QuadraticLattice(gram_in_basis(g, basis)), basis, prime});
    }
  }
  return out;
}

bool is_maximal(const QuadraticLattice& lattice) { return prime_index_extensions(lattice).empty(); }

std::vector<Overlattice> maximal_extensions(const QuadraticLattice& lattice) {
  const std::size_t n = lattice.rank();
  std::vector<Overlattice> frontier{
      Overlattice{lattice, RatMatrix::identity(n), Integer(1)}};
  std::set<std::string> visited{lattice_key(frontier.front().basis)};
  std::map<std::string, Overlattice> maximal;
  while (!frontier.empty()) {
    Overlattice cur = std::move(frontier.back());
    frontier.pop_back();
    auto ext = prime_index_extensions(cur.lattice);
    if (ext.empty()) {
      maximal.emplace(lattice_key(cur.basis), cur);
      continue;
    }
    for (auto& e : ext) {
      RatMatrix basis = cur.basis * e.basis;
      std::string key = lattice_key(basis);
      if (!visited.insert(key).second) continue;
      frontier.push_back(Overlattice{e.lattice, basis, cur.index * e.index});
    }
  }

  std::vector<Overlattice> out;
  for (auto& [key, m] : maximal) {
    bool duplicate = false;
    for (const auto& kept : out) {
      if (kept.lattice.gram() == m.lattice.gram()) {
        duplicate = true;
      } else {
        try {
          duplicate = is_isomorphic(kept.lattice, m.lattice);
        } catch (const ConditionsNotMet&) {
          duplicate = false;
        }
      }
      if (duplicate) break;
    }
    if (!duplicate) out.push_back(m);
  }
  return out;
}

std::vector<QuadraticLattice> maximal_overlattices(const QuadraticLattice& lattice) {
  std::vector<QuadraticLattice> out;
  for (auto& e : maximal_extensions(lattice)) out.push_back(e.lattice);
  return out;
}

bool has_repeated_valuations(const QuadraticLattice& lattice) {
  const auto f = invariant_factors(lattice).factors;
  for (const auto& p : prime_divisors(lattice.determinant())) {
    std::vector<unsigned> vals;
    for (const auto& e : f) vals.push_back(valuation(e, p));
    std::sort(vals.begin(), vals.end());
    if (std::adjacent_find(vals.begin(), vals.end()) == vals.end()) return false;
  }
  // Primes not dividing d give valuation 0 everywhere; rank >= 2 repeats it.
  return lattice.rank() >= 2;
}

bool is_isomorphic(const QuadraticLattice& a, const QuadraticLattice& b) {
  for (const auto* l : {&a, &b}) {
    if (l->rank() < 3) throw ConditionsNotMet("genus argument needs rank >= 3");
    if (signature(*l).is_definite()) throw ConditionsNotMet("lattice is definite");
    if (!has_repeated_valuations(*l))
      throw ConditionsNotMet("invariant factors have pairwise distinct valuations at some prime");
  }
  if (a.rank() != b.rank()) return false;
  if (a.gram() == b.gram()) return true;
  if (!(signature(a) == signature(b))) return false;
  if (a.determinant() != b.determinant()) return false;
  if (!(invariant_factors(a) == invariant_factors(b))) return false;
  if (a.is_even() != b.is_even()) return false;

  const DiagonalForm fa = diagonal_form(a);
  const DiagonalForm fb = diagonal_form(b);
  std::vector<Integer> primes = prime_divisors(2 * a.determinant() * b.determinant());
  for (const auto& p : primes) {
    Place place = Place::prime(p);
    if (hasse_invariant(fa, place) != hasse_invariant(fb, place)) return false;
  }
  return true;
}

}  // namespace vinberg
