#include "vinberg/arith.hpp"

#include <algorithm>

namespace vinberg {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

Integer determinant(const IntMatrix& input) {
  if (!input.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational determinant(const RatMatrix& input) {
  if (!input.square()) throw std::invalid_argument("determinant of non-square matrix");
  RatMatrix a = input;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(k, p);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& input) {
  if (!input.square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = input.rows();
  RatMatrix a = input;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    a.swap_rows(k, p);
    inv.swap_rows(k, p);
    Rational piv = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= piv;
      inv(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

RatVector solve(const RatMatrix& m, const RatVector& b) {
  RatMatrix inv = inverse(m);
  RatVector x(b.size());
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < inv.cols(); ++j) x[i] += inv(i, j) * b[j];
  return x;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer gcd_of(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

unsigned valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  Integer m = abs(n);
  unsigned e = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++e;
  }
  return e;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  Integer m = abs(n);
  if (m < 2) return out;
  for (Integer p = 2; p * p <= m; ++p) {
    if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      out.push_back(p);
      while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()))
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Integer square_class(const Rational& q) {
  if (q == 0) throw std::domain_error("square class of zero");
  Integer n = q.get_num() * q.get_den();
  Integer sign = n < 0 ? -1 : 1;
  Integer m = abs(n);
  Integer out = 1;
  for (const auto& p : prime_divisors(m)) {
    if (valuation(m, p) % 2 == 1) out *= p;
  }
  return sign * out;
}

std::string to_string(const Integer& n) { return n.get_str(); }
std::string to_string(const Rational& q) { return q.get_str(); }

Integer bilinear(const IntMatrix& m, const IntVector& x, const IntVector& y) {
  Integer s = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) row += m(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

Rational bilinear(const RatMatrix& m, const RatVector& x, const RatVector& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) row += m(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

IntMatrix column_hermite_basis(IntMatrix gens) {
  const std::size_t n = gens.rows();
  const std::size_t m = gens.cols();
  IntMatrix basis(n, n);
  std::size_t col = 0;
  for (std::size_t r = 0; r < n; ++r) {
    // Euclid on row r across columns col..m-1.
    for (;;) {
      std::size_t best = m;
      for (std::size_t c = col; c < m; ++c)
        if (gens(r, c) != 0 && (best == m || abs(gens(r, c)) < abs(gens(r, best)))) best = c;
      if (best == m) throw std::domain_error("column_hermite_basis: rank deficient");
      gens.swap_cols(col, best);
      bool done = true;
      for (std::size_t c = col + 1; c < m; ++c) {
        if (gens(r, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), gens(r, c).get_mpz_t(), gens(r, col).get_mpz_t());
        for (std::size_t i = 0; i < n; ++i) gens(i, c) -= q * gens(i, col);
        if (gens(r, c) != 0) done = false;
      }
      if (done) break;
    }
    if (gens(r, col) < 0)
      for (std::size_t i = 0; i < n; ++i) gens(i, col) = -gens(i, col);
    ++col;
  }
  // Reduce entries below the diagonal of earlier columns modulo later pivots.
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < n; ++i) basis(i, c) = gens(i, c);
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t c = 0; c < r; ++c) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), basis(r, c).get_mpz_t(), basis(r, r).get_mpz_t());
      if (q == 0) continue;
      for (std::size_t i = 0; i < n; ++i) basis(i, c) -= q * basis(i, r);
    }
  return basis;
}

}  // namespace vinberg
