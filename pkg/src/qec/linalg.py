"""Exact linear algebra over Q with Fraction entries.

Plain Gaussian elimination on lists of lists; nothing here is numerical.
Characteristic polynomials reuse the fraction-free Laurent determinant, and
eigenvalues come from exact rational root extraction (trial-division integer
factorization), so Jordan data is either exactly right or reported as
non-split.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonSplitSpectrum
from .laurent import LaurentMatrix, LaurentPoly, det


def rref(rows):
    """Reduced row echelon form (in place on a copy); returns (rows, pivots)."""
    m = [list(map(Fraction, row)) for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows):
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows, ncols=None):
    """Basis of the right kernel, one canonical vector per free column."""
    if not rows:
        n = ncols or 0
        return [[Fraction(i == j) for j in range(n)] for i in range(n)]
    ncols = ncols if ncols is not None else len(rows[0])
    m, pivots = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][free]
        basis.append(v)
    return basis


def solve(rows, rhs):
    """One exact solution of rows * x = rhs, or None if inconsistent."""
    if not rows:
        return []
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    m, pivots = rref(aug)
    ncols = len(rows[0])
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = m[r][ncols]
    return x


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    return [
        [sum((a[i][t] * b[t][j] for t in range(k)), Fraction(0)) for j in range(m)]
        for i in range(n)
    ]


def mat_vec(a, v):
    return [sum((row[j] * v[j] for j in range(len(v))), Fraction(0)) for row in a]


def identity(n):
    return [[Fraction(i == j) for j in range(n)] for i in range(n)]


def mat_inverse(a):
    """Exact inverse of a square rational matrix, or None if singular."""
    n = len(a)
    aug = [list(map(Fraction, row)) + identity(n)[i] for i, row in enumerate(a)]
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in m[:n]]


def charpoly(a) -> LaurentPoly:
    """det(z*I - a) as a Laurent polynomial in the indeterminate z."""
    n = len(a)
    entries = [
        [
            LaurentPoly(0, (-a[i][j],)) + (LaurentPoly.monomial(1, 1) if i == j else 0)
            for j in range(n)
        ]
        for i in range(n)
    ]
    return det(LaurentMatrix(entries))


def _divisors(n):
    n = abs(n)
    if n == 0:
        return []
    factors = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    divs = [1]
    for p, e in factors.items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(set(divs))


def rational_roots(p: LaurentPoly):
    """All rational roots with multiplicity, plus the degree left unsplit.

    Returns (sorted [(root, multiplicity)], remaining_degree).  Root 0 comes
    from a positive valuation; the rest from the rational root theorem after
    clearing denominators.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    roots = []
    if p.bot > 0:
        roots.append((Fraction(0), p.bot))
    coeffs = list(p.coeffs)  # poly with nonzero constant and leading coeff
    if len(coeffs) > 1:
        from math import lcm

        scale = lcm(*(c.denominator for c in coeffs))
        ints = [int(c * scale) for c in coeffs]
        cands = set()
        for a in _divisors(ints[0]):
            for b in _divisors(ints[-1]):
                cands.add(Fraction(a, b))
                cands.add(Fraction(-a, b))
        for r in sorted(cands):
            mult = 0
            while len(coeffs) > 1:
                # synthetic division by (z - r): Horner from the top
                out = [Fraction(0)] * (len(coeffs) - 1)
                acc = Fraction(0)
                for i in range(len(coeffs) - 1, 0, -1):
                    acc = acc * r + coeffs[i]
                    out[i - 1] = acc
                if acc * r + coeffs[0] != 0:
                    break
                coeffs = out
                mult += 1
            if mult:
                roots.append((r, mult))
    return sorted(roots), len(coeffs) - 1


def jordan_structure_constant(a):
    """Jordan data [(eigenvalue, size), ...] of an exact rational matrix,
    sorted by (eigenvalue, -size).  NonSplitSpectrum if the characteristic
    polynomial has an irreducible factor of degree >= 2 over Q."""
    n = len(a)
    roots, remaining = rational_roots(charpoly(a))
    if remaining:
        raise NonSplitSpectrum(
            f"characteristic polynomial has a non-split factor of degree {remaining}"
        )
    blocks = []
    for lam, mult in roots:
        b = [[a[i][j] - (lam if i == j else 0) for j in range(n)] for i in range(n)]
        ranks = [n]
        power = identity(n)
        while ranks[-1] > n - mult:
            power = mat_mul(power, b)
            ranks.append(rank(power))
        ge = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
        ge.append(0)
        total = 0
        for k in range(1, len(ge)):
            exact = ge[k - 1] - ge[k]
            blocks.extend((lam, k) for _ in range(exact))
            total += k * exact
        assert total == mult
    return sorted(blocks, key=lambda b: (b[0], -b[1]))
