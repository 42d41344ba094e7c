#pragma once

// Brute-force reference implementations used to cross-check the library.
// None of them calls into the code under test beyond plain data types.

#include <array>
#include <optional>
#include <vector>

#include "vinberg/arith.hpp"

namespace oracle {

using vinberg::IntMatrix;

/// +1 iff z^2 = a x^2 + b y^2 has a primitive solution over Z_p, found by
/// lifting solutions mod p^k until Hensel's lemma applies.
int hensel_hilbert(long a, long b, long p);

/// (a, b) over the reals.
int real_hilbert(long a, long b);

/// Invariant factors as quotients of successive gcds of k x k minors.
std::vector<long long> determinantal_factors(const std::vector<std::vector<long long>>& m);

/// Cofactor-expansion determinant.
long long det(const std::vector<std::vector<long long>>& m);

/// A nonzero x with |x_i| <= bound and x^T G x = 0, if one exists.
std::optional<std::array<long long, 4>> isotropic_vector(const std::vector<std::vector<long long>>& g, long long bound);

/// Glue vectors x/p (p^2 | det, x mod p nonzero) with G x = 0 mod p and
/// x^T G x = 0 mod p^2: the lattice is maximal iff there are none.
bool has_integral_glue(const std::vector<std::vector<long long>>& g);

struct NaiveRoot {
  std::array<long long, 4> x;
  long long k;
  long long h;  // -(x, v0)
};

/// Vinberg's selection by exhaustive search for diag(-m, a, b, c) and
/// v0 = (1,0,0,0): every k-root with h > 0 and h^2/k <= max_priority, ordered
/// by (h^2/k, k, coordinates), accepted greedily against `accepted`.
/// Returns the roots accepted after the given ones, at most `count` of them.
std::vector<NaiveRoot> naive_vinberg(const std::array<long long, 4>& diag, const std::vector<long long>& norms,
                                     std::vector<std::array<long long, 4>> accepted, double max_priority,
                                     std::size_t count);

std::vector<std::vector<long long>> to_ll(const IntMatrix& m);
IntMatrix from_ll(const std::vector<std::vector<long long>>& m);

}  // namespace oracle
