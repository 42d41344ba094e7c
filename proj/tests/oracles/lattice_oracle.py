#!/usr/bin/env python3
"""Brute-force reference data for the C++ test suite.

Everything here is computed from first principles with Python integers and
fractions: determinants by elimination, invariant factors from gcds of minors,
overlattices by exhaustive search over glue vectors x/p, and Coxeter diagram
DOT text from the stated root vectors.

    lattice_oracle.py --write DIR   regenerate the golden files
    lattice_oracle.py --check DIR   fail when a stored file differs
"""

import argparse
import itertools
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

HERE = Path(__file__).resolve().parent
DATA = HERE.parent / "data"


def det(m):
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    sign = 1
    result = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if a[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            sign = -sign
        result *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            for k in range(c, n):
                a[r][k] -= f * a[c][k]
    return sign * result


def invariant_factors(m):
    n = len(m)
    d = [1]
    for k in range(1, n + 1):
        g = 0
        for rows in itertools.combinations(range(n), k):
            for cols in itertools.combinations(range(n), k):
                g = math.gcd(g, int(det([[m[r][c] for c in cols] for r in rows])))
        d.append(g)
    return [d[k] // d[k - 1] for k in range(1, n + 1)]


def prime_factors(n):
    n, p, out = abs(n), 2, []
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def gram_of(basis, g):
    """basis: list of rational column vectors in the coordinates of g."""
    n = len(basis)
    return [[sum(basis[i][r] * g[r][s] * basis[j][s] for r in range(n) for s in range(n))
             for j in range(n)] for i in range(n)]


def prime_extensions(g):
    """Integral overlattices L + Z(x/p), one per glue line, as integer Gram matrices."""
    n = len(g)
    d = int(det(g))
    out = []
    for p in prime_factors(d):
        if d % (p * p):
            continue
        seen = set()
        for x in itertools.product(range(p), repeat=n):
            if not any(x):
                continue
            i = next(k for k in range(n) if x[k] % p)
            inv = pow(x[i], -1, p)
            x = tuple((v * inv) % p for v in x)
            if x in seen:
                continue
            seen.add(x)
            if any(sum(g[r][s] * x[s] for s in range(n)) % p for r in range(n)):
                continue
            if sum(x[r] * g[r][s] * x[s] for r in range(n) for s in range(n)) % (p * p):
                continue
            basis = [[Fraction(int(r == c)) for r in range(n)] for c in range(n)]
            basis[i] = [Fraction(v, p) for v in x]
            h = gram_of(basis, g)
            assert all(v.denominator == 1 for row in h for v in row)
            out.append(([[int(v) for v in row] for row in h], p))
    return out


def maximal_extensions(g):
    """(index, gram) of every maximal overlattice reached by prime-index steps."""
    found = []
    stack = [(g, 1)]
    while stack:
        h, index = stack.pop()
        ext = prime_extensions(h)
        if not ext:
            found.append((index, h))
        for m, p in ext:
            stack.append((m, index * p))
    return found


def is_even(g):
    return all(g[i][i] % 2 == 0 for i in range(len(g)))


def extension_summary(g):
    kinds = set()
    for index, h in maximal_extensions(g):
        kinds.add((index, int(det(h)), tuple(invariant_factors(h)), is_even(h)))
    return [{"index": i, "discriminant": d, "invariant_factors": list(f), "even": e}
            for i, d, f, e in sorted(kinds)]


def published_report():
    data = json.loads((DATA / "published_matrices.json").read_text())
    rows = []
    for m in data["matrices"]:
        g = m["gram"]
        rows.append({
            "name": m["name"],
            "determinant": int(det(g)),
            "invariant_factors": invariant_factors(g),
            "maximal_extensions": extension_summary(g),
        })
    return {"matrices": rows}


def cos_squared(g, u, v):
    def ip(a, b):
        return sum(a[r] * g[r][s] * b[s] for r in range(len(g)) for s in range(len(g)))
    return Fraction(ip(u, v) ** 2, ip(u, u) * ip(v, v)), ip(u, v), ip(u, u)


def dot_text(name, g, roots):
    lines = [f'graph "{name}" {{', "  node [shape=circle];"]
    for i, r in enumerate(roots):
        _, _, k = cos_squared(g, r, r)
        lines.append(f'  a{i + 1} [label="{k}"];')
    for i, j in itertools.combinations(range(len(roots)), 2):
        c, uv, _ = cos_squared(g, roots[i], roots[j])
        assert uv <= 0, (name, i, j)
        if c == 0:
            continue
        if c == 1:
            attrs = " [style=bold]"
        elif c > 1:
            attrs = f' [style=dashed, label="{c}"]'
        elif c == Fraction(1, 4):
            attrs = ""
        elif c == Fraction(1, 2):
            attrs = ' [color="black:black"]'
        elif c == Fraction(3, 4):
            attrs = ' [color="black:black:black"]'
        else:
            attrs = f' [label="{c}"]'
        lines.append(f"  a{i + 1} -- a{j + 1}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def diag(*entries):
    return [[entries[i] if i == j else 0 for j in range(len(entries))] for i in range(len(entries))]


# Root lists as stated for the two reflective lattices. For L(10) the third
# root is printed as (0; -1, 2, 0), whose norm is 15; (0; -1, 1, 0) has the
# stated norm 6 and is used instead.
DIAGRAMS = {
    "L5.dot": ("L(5)", diag(-3, 5, 1, 1), [
        (0, 0, 0, -1), (0, 0, -1, 1), (0, -1, 0, 0), (1, 0, 3, 0),
        (1, 1, 0, 0), (2, 1, 2, 2), (10, 6, 10, 5)]),
    "L10.dot": ("L(10)", diag(-1, 3, 3, 2), [
        (0, 0, 0, -1), (0, 0, -1, 0), (0, -1, 1, 0), (1, 1, 0, 0),
        (1, 0, 0, 1), (6, 2, 2, 3)]),
}


def golden_files():
    files = {"published_extensions.json": json.dumps(published_report(), indent=2) + "\n"}
    for fname, (name, g, roots) in DIAGRAMS.items():
        files[fname] = dot_text(name, g, roots)
    return files


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    mode = ap.add_mutually_exclusive_group(required=True)
    mode.add_argument("--write", type=Path)
    mode.add_argument("--check", type=Path)
    args = ap.parse_args()
    files = golden_files()
    if args.write:
        args.write.mkdir(parents=True, exist_ok=True)
        for name, text in files.items():
            (args.write / name).write_text(text)
        return 0
    bad = [n for n, t in files.items()
           if not (args.check / n).exists() or (args.check / n).read_text() != t]
    for n in bad:
        print(f"oracle drift: {n}", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
