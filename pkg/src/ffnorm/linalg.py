"""Dense linear algebra over F_q, k[x] and k(x).

Matrices are plain lists of row lists. Nothing here is clever; dimensions in
this package stay below ~30 over F_q and ~6 over k[x].
"""

from __future__ import annotations

from .arith import DEG_ZERO, Poly, RatFunc

# ---------------------------------------------------------------------------
# F_q


def rref_mod(rows, q: int):
    """Reduced row echelon form. Returns (rref rows without zero rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] % q:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], q - 2, q)
        m[r] = [v * inv % q for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] % q:
                f = m[i][c]
                ri = m[r]
                m[i] = [(a - f * b) % q for a, b in zip(m[i], ri)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank_mod(rows, q: int) -> int:
    return len(rref_mod(rows, q)[0])


def kernel_mod(rows, q: int, ncols: int | None = None):
    """Basis of {v : A v = 0} for A given by rows."""
    if not rows:
        n = ncols or 0
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    n = len(rows[0])
    red, piv = rref_mod(rows, q)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for fcol in free:
        v = [0] * n
        v[fcol] = 1
        for r, pc in enumerate(piv):
            v[pc] = (-red[r][fcol]) % q
        basis.append(v)
    return basis


def left_kernel_mod(rows, q: int):
    """Basis of {y : y A = 0}."""
    if not rows:
        return []
    return kernel_mod(transpose(rows), q, len(rows))


def solve_mod(rows, b, q: int):
    """One solution x of A x = b, or None."""
    n = len(rows[0]) if rows else 0
    aug = [list(r) + [bi] for r, bi in zip(rows, b)]
    red, piv = rref_mod(aug, q)
    if n in piv:
        return None
    x = [0] * n
    for r, pc in enumerate(piv):
        x[pc] = red[r][n]
    return x


def span_basis_mod(vectors, q: int):
    return rref_mod(vectors, q)[0]


def transpose(m):
    return [list(c) for c in zip(*m)] if m else []


# ---------------------------------------------------------------------------
# k[x]


def poly_vec_is_zero(v) -> bool:
    return all(not a.c for a in v)


def hnf_poly(gens, n: int, p: int):
    """Row Hermite normal form of the k[x]-module spanned by ``gens``.

    Rows of the result are upper triangular with monic diagonal and entries
    above each pivot of degree below the pivot's. Raises ValueError when the
    module has rank < n.
    """
    rows = [list(r) for r in gens if not poly_vec_is_zero(r)]
    out = []
    for j in range(n):
        cand = [r for r in rows if r[j].c]
        rest = [r for r in rows if not r[j].c]
        while len(cand) > 1:
            cand.sort(key=lambda r: r[j].deg)
            piv = cand[0]
            new = [piv]
            for r in cand[1:]:
                qt = r[j] // piv[j]
                r = [a - qt * b for a, b in zip(r, piv)]
                if r[j].c:
                    new.append(r)
                elif not poly_vec_is_zero(r):
                    rest.append(r)
            cand = new
        if not cand:
            raise ValueError("module is not of full rank")
        piv = cand[0]
        lc = piv[j].lc
        if lc != 1:
            inv = pow(lc, p - 2, p)
            piv = [a * inv for a in piv]
        out.append(piv)
        rows = rest
    for j in range(1, n):
        pj = out[j]
        for i in range(j):
            if out[i][j].deg >= pj[j].deg:
                qt = out[i][j] // pj[j]
                out[i] = [a - qt * b for a, b in zip(out[i], pj)]
    return out


def hnf_contains(h, v, p: int) -> bool:
    """Membership of a polynomial vector in the module with upper-triangular HNF h."""
    v = list(v)
    n = len(h)
    for j in range(n):
        if not v[j].c:
            continue
        qt, r = divmod(v[j], h[j][j])
        if r.c:
            return False
        v = [a - qt * b for a, b in zip(v, h[j])]
    return True


def poly_mat_det(m, p: int) -> Poly:
    """Determinant of a square polynomial matrix (Bareiss, fraction free)."""
    n = len(m)
    if n == 0:
        return Poly.one(p)
    a = [list(r) for r in m]
    sign = 1
    prev = Poly.one(p)
    for k in range(n - 1):
        if not a[k][k].c:
            sw = next((i for i in range(k + 1, n) if a[i][k].c), None)
            if sw is None:
                return Poly.zero(p)
            a[k], a[sw] = a[sw], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


def weak_popov(rows, companion=None):
    """Row-reduce a nonsingular square polynomial matrix to weak Popov form.

    ``companion`` rows receive the same unimodular row operations. Returns
    (rows, companion, row_degrees).
    """
    rows = [list(r) for r in rows]
    comp = [list(r) for r in companion] if companion is not None else None

    def lead(r):
        d = max(a.deg for a in r)
        pos = max(j for j, a in enumerate(r) if a.deg == d)
        return d, pos

    info = [lead(r) for r in rows]
    changed = True
    while changed:
        changed = False
        bypos = {}
        for i, (d, pos) in enumerate(info):
            if pos in bypos:
                k = bypos[pos]
                # reduce the row of larger degree by the other
                if info[k][0] > d:
                    i, k = k, i
                di, dk = info[i][0], info[k][0]
                p = rows[i][pos].p
                c = rows[i][pos].lc * pow(rows[k][pos].lc, p - 2, p) % p
                shift = di - dk
                rk = rows[k]
                rows[i] = [a - (b.shift(shift) * c) for a, b in zip(rows[i], rk)]
                if comp is not None:
                    ck = comp[k]
                    comp[i] = [a - (b.shift(shift) * c) for a, b in zip(comp[i], ck)]
                if poly_vec_is_zero(rows[i]):
                    raise ValueError("singular matrix in weak Popov reduction")
                info[i] = lead(rows[i])
                changed = True
                break
            bypos[pos] = i
    return rows, comp, [d for d, _ in info]


# ---------------------------------------------------------------------------
# k(x)


def rat_mat_inverse(m, p: int):
    """Inverse of a square matrix over k(x) by Gauss-Jordan."""
    n = len(m)
    one = RatFunc.from_int(1, p)
    zero = RatFunc.from_int(0, p)
    a = [[RatFunc(v, normalized=True) if isinstance(v, Poly) else v for v in row]
         + [one if i == j else zero for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = None
        best = None
        for i in range(c, n):
            if not a[i][c].is_zero():
                h = a[i][c].num.deg + a[i][c].den.deg
                if best is None or h < best:
                    piv, best = i, h
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[c], a[piv] = a[piv], a[c]
        inv = a[c][c].inverse()
        a[c] = [v * inv for v in a[c]]
        for i in range(n):
            if i != c and not a[i][c].is_zero():
                f = a[i][c]
                a[i] = [v - f * w for v, w in zip(a[i], a[c])]
    return [row[n:] for row in a]


def rat_mat_mul(a, b, p: int):
    zero = RatFunc.from_int(0, p)
    out = []
    for row in a:
        new = []
        for j in range(len(b[0])):
            acc = zero
            for k, v in enumerate(row):
                if not v.is_zero() and not b[k][j].is_zero():
                    acc = acc + v * b[k][j]
            new.append(acc)
        out.append(new)
    return out


def rat_vec_mat(v, m, p: int):
    return rat_mat_mul([v], m, p)[0]


def common_denominator(vals, p: int) -> Poly:
    from .arith import poly_lcm

    d = Poly.one(p)
    for v in vals:
        if not v.den.is_one():
            d = poly_lcm(d, v.den)
    return d


def rat_vec_to_poly(v, p: int):
    """Rational vector -> (polynomial numerators, monic common denominator)."""
    d = common_denominator(v, p)
    return [a.num * (d // a.den) for a in v], d


def poly_vec_content(v, p: int) -> Poly:
    from .arith import poly_gcd

    g = Poly.zero(p)
    for a in v:
        if a.c:
            g = poly_gcd(g, a) if g.c else a.monic()
            if g.is_one():
                break
    return g


def rat_deg(v) -> float:
    return max((a.deg for a in v), default=DEG_ZERO)
