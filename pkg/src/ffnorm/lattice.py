"""Integer lattices: LLL, Babai rounding, echelon forms and linear systems over Z.

All arithmetic is exact (ints and Fractions); the lattices here have rank at
most a dozen.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor, gcd


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def round_half_up(x: Fraction) -> int:
    """Nearest integer, ties rounded up."""
    return floor(x + Fraction(1, 2))


def gram_schmidt(rows):
    """Orthogonalised rows (Fractions) and the mu coefficients."""
    bstar = []
    mu = [[Fraction(0)] * len(rows) for _ in rows]
    norms = []
    for i, b in enumerate(rows):
        v = [Fraction(x) for x in b]
        for j in range(i):
            if norms[j] == 0:
                continue
            mu[i][j] = _dot(b, bstar[j]) / norms[j]
            v = [a - mu[i][j] * c for a, c in zip(v, bstar[j])]
        bstar.append(v)
        norms.append(_dot(v, v))
    return bstar, mu, norms


def lll_int(rows, delta=Fraction(3, 4)):
    """LLL-reduce independent integer rows (exact rational Gram-Schmidt)."""
    b = [list(r) for r in rows]
    k = len(b)
    if k == 0:
        return []
    bstar, mu, norms = gram_schmidt(b)
    i = 1
    while i < k:
        for j in range(i - 1, -1, -1):
            c = round_half_up(mu[i][j])
            if c:
                b[i] = [x - c * y for x, y in zip(b[i], b[j])]
                for t in range(j + 1):
                    mu[i][t] -= c * (mu[j][t] if t < j else 1)
        if norms[i] >= (delta - mu[i][i - 1] ** 2) * norms[i - 1]:
            i += 1
        else:
            b[i], b[i - 1] = b[i - 1], b[i]
            bstar, mu, norms = gram_schmidt(b)
            i = max(i - 1, 1)
    return b


def is_lll_reduced(rows, delta=Fraction(3, 4)) -> bool:
    if not rows:
        return True
    _, mu, norms = gram_schmidt(rows)
    for i in range(len(rows)):
        for j in range(i):
            if abs(mu[i][j]) > Fraction(1, 2):
                return False
    for i in range(1, len(rows)):
        if norms[i] < (delta - mu[i][i - 1] ** 2) * norms[i - 1]:
            return False
    return True


def cvp_babai(rows, target):
    """Lattice vector near ``target`` by nearest-plane rounding on the given basis."""
    if not rows:
        return [0] * len(target)
    bstar, _, norms = gram_schmidt(rows)
    t = [Fraction(x) for x in target]
    for i in range(len(rows) - 1, -1, -1):
        c = round_half_up(_dot(t, bstar[i]) / norms[i])
        if c:
            t = [a - c * x for a, x in zip(t, rows[i])]
    return [int(a - r) for a, r in zip(target, t)]


def echelon_transform(rows):
    """Row echelon form H = U * rows with U unimodular.

    Returns (H, U, pivots); zero rows of H come last and the matching rows of
    U span the left kernel.
    """
    m = len(rows)
    h = [list(r) for r in rows]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if h[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(h[i][c]))
            h[r], h[piv] = h[piv], h[r]
            u[r], u[piv] = u[piv], u[r]
            done = True
            for i in range(r + 1, m):
                if h[i][c]:
                    qt = h[i][c] // h[r][c]
                    h[i] = [a - qt * b for a, b in zip(h[i], h[r])]
                    u[i] = [a - qt * b for a, b in zip(u[i], u[r])]
                    if h[i][c]:
                        done = False
            if done:
                break
        if any(h[i][c] for i in range(r, m)):
            if h[r][c] < 0:
                h[r] = [-a for a in h[r]]
                u[r] = [-a for a in u[r]]
            pivots.append(c)
            r += 1
    return h, u, pivots


def hnf_int(rows):
    """Row Hermite normal form (nonzero rows only), positive pivots, reduced above."""
    h, _, pivots = echelon_transform(rows)
    h = h[: len(pivots)]
    for i, c in enumerate(pivots):
        for k in range(i):
            qt = h[k][c] // h[i][c]
            if qt:
                h[k] = [a - qt * b for a, b in zip(h[k], h[i])]
    return h


def kernel_int(rows):
    """Z-basis of {y : y * rows = 0} (left kernel), LLL-reduced."""
    if not rows:
        return []
    h, u, pivots = echelon_transform(rows)
    ker = [u[i] for i in range(len(pivots), len(rows))]
    return lll_int(ker) if ker else []


def solve_integer_system(A, b):
    """Integer solutions of A x = b.

    Returns None when there is none, otherwise (x0, kernel) with kernel an
    LLL-reduced Z-basis of {x : A x = 0} and x0 size-reduced against it.
    """
    m = len(A)
    k = len(A[0]) if A else 0
    if m == 0:
        return [0] * k, [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    # x^T A^T = b^T: echelon form of the rows of A^T
    At = [[A[i][j] for i in range(m)] for j in range(k)]
    h, u, pivots = echelon_transform(At)
    y = [0] * k
    rest = list(b)
    for r, c in enumerate(pivots):
        if rest[c] % h[r][c]:
            return None
        y[r] = rest[c] // h[r][c]
        if y[r]:
            rest = [a - y[r] * v for a, v in zip(rest, h[r])]
    if any(rest):
        return None
    x = [sum(y[r] * u[r][j] for r in range(k)) for j in range(k)]
    ker = [u[i] for i in range(len(pivots), k)]
    if ker:
        ker = lll_int(ker)
        near = cvp_babai(ker, x)
        x = [a - c for a, c in zip(x, near)]
    return x, ker


def smith_invariants(rows) -> list:
    """Invariant factors of Z^ncols / (row lattice): entries > 1, then 0 per free rank."""
    if not rows:
        return []
    n = len(rows[0])
    a = hnf_int(rows)
    while True:
        off = any(a[i][j] for i in range(len(a)) for j in range(len(a[i])) if i != j)
        if not off:
            break
        t = hnf_int([list(c) for c in zip(*a)])
        a = hnf_int([list(c) for c in zip(*t)])
    diag = [abs(a[i][i]) for i in range(len(a))]
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            g = gcd(diag[i], diag[j])
            diag[i], diag[j] = g, diag[i] * diag[j] // g
    return [d for d in diag if d != 1] + [0] * (n - len(diag))


def lattice_det(rows) -> int:
    """sqrt(det(B B^T)) for integer rows, exact when the Gram determinant is a square."""
    from math import isqrt

    if not rows:
        return 1
    gram = [[_dot(a, b) for b in rows] for a in rows]
    d = _det_frac(gram)
    r = isqrt(int(d))
    return r if r * r == d else d


def _det_frac(m):
    a = [[Fraction(x) for x in r] for r in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def gcd_list(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
