"""Pencils of diagonal quadrics: square-free Specht combinatorics and beyond.

The degeneracy condition of the second quadric of a pencil on isotropic
k-planes is sum alpha_I p_I^2; restricted to the Cartan of traceless
diagonal matrices this produces the two-row Specht polynomials P_T, their
square-free embeddings Q_T, the cross-ratio coordinates of 2k points on
the line, the genus-two Kummer quartic, and - through the octonion chart
of the six-dimensional quadric - the fourteen-dimensional space of quartic
coordinates of the genus-three hyperelliptic case.
"""

from __future__ import annotations

from itertools import combinations

from ..exactmath import QQ, ZERO, ONE, rank, solve, Echelon
from ..poly import Poly, poly_rank, monomials_of_degree
from ..grasscoord import orthogonal_diag, quadric, mono_mul, sort_sign, _monomials
from ..idealscan import SampledMap, vanishing_forms


def alpha_names(m):
    return tuple("a%d" % i for i in range(1, m + 1))


def hook_dim(m, p):
    """Dimension of the two-row irreducible [m-p, p]."""
    from math import comb
    if p == 0:
        return 1
    return comb(m, p) - comb(m, p - 1)


def standard_tableaux(m, p):
    """Standard two-row tableaux of shape (m-p, p) on 1..m."""
    out = []

    def rec(row1, row2, nxt):
        if nxt > m:
            if len(row1) == m - p and len(row2) == p:
                out.append((tuple(row1), tuple(row2)))
            return
        if len(row1) < m - p:
            row1.append(nxt)
            rec(row1, row2, nxt + 1)
            row1.pop()
        if len(row2) < p and len(row2) < len(row1):
            row2.append(nxt)
            rec(row1, row2, nxt + 1)
            row2.pop()

    rec([], [], 1)
    return out


def specht_poly(T, m):
    """Product of column differences of a two-row tableau."""
    row1, row2 = T
    if len(row1) + len(row2) != m or set(row1) | set(row2) != set(range(1, m + 1)):
        raise ValueError("tableau entries must be a permutation of 1..m")
    if len(row2) > len(row1):
        raise ValueError("second row is longer than the first")
    names = alpha_names(m)
    p = Poly.constant(names, 1)
    for a, b in zip(row1, row2):
        p = p * (Poly.variable(names, "a%d" % a) - Poly.variable(names, "a%d" % b))
    return p


def elementary_symmetric(names, variables, k):
    out = Poly.zero(names)
    if k == 0:
        return Poly.constant(names, 1)
    for sub in combinations(variables, k):
        term = Poly.constant(names, 1)
        for v in sub:
            term = term * Poly.variable(names, v)
        out = out + term
    return out


def sf_embed(T, m, k):
    """Q_T = P_T times e_{k-p} in the complementary variables."""
    row1, row2 = T
    p = len(row2)
    if not (p <= k <= m // 2):
        raise ValueError("need p <= k <= m/2")
    used = set(row1[:p]) | set(row2)
    comp = ["a%d" % i for i in range(1, m + 1) if i not in set(row1[:p]) | set(row2)]
    names = alpha_names(m)
    return specht_poly(T, m) * elementary_symmetric(names, comp, k - p)


def sf_dimension_check(m, k):
    """Hook identity and the span dimensions of the square-free embeddings."""
    from math import comb
    dims = [hook_dim(m, p) for p in range(k + 1)]
    identity_ok = sum(dims) == comb(m, k)
    spans = []
    all_vecs = []
    for p in range(k + 1):
        polys = [sf_embed(T, m, k) for T in standard_tableaux(m, p)]
        vecs = [q.vec() for q in polys]
        spans.append(rank(vecs))
        all_vecs.extend(vecs)
    total = rank(all_vecs)
    return {
        "hook_dims": dims,
        "hook_identity": identity_ok,
        "span_dims": spans,
        "spans_match_hooks": spans == dims,
        "total_span": total,
        "total_is_binomial": total == comb(m, k),
    }


# ---------------------------------------------------------------------------
# the quadric section of the orthogonal Grassmannian


def coble_quadric_OG(alpha, k, ctx):
    """sum over k-subsets of alpha_{i1}...alpha_{ik} p_I^2, reduced."""
    m = 0
    for s in ctx.subsets:
        m = max(m, max(s) + 1)
    out = {}
    for I in combinations(range(m), k):
        c = ONE
        for i in I:
            c = c * alpha[i]
        if not c:
            continue
        idx = ctx.index_of[I]
        key = (idx, idx)
        x = out.get(key)
        out[key] = c if x is None else x + c
    return ctx.reduce(out)


def rho_rank(k, ctx):
    """Rank of the square-free-monomial to reduced-squared-Pluecker map."""
    m = 0
    for s in ctx.subsets:
        m = max(m, max(s) + 1)
    rows = []
    for I in combinations(range(m), k):
        idx = ctx.index_of[I]
        rows.append(ctx.reduce({(idx, idx): ONE}))
    return rank(rows)


def isotropy_relation_reduces(ctx, J):
    """Reduce sum_{a not in J} p_{aJ}^2 (must be zero on the orthogonal side)."""
    m = 0
    for s in ctx.subsets:
        m = max(m, max(s) + 1)
    out = {}
    for a in range(m):
        s = sort_sign(tuple(J) + (a,))
        if s is None:
            continue
        idx = ctx.index_of[s[1]]
        key = (idx, idx)
        x = out.get(key)
        out[key] = ONE if x is None else x + ONE
    return ctx.reduce(out)


# ---------------------------------------------------------------------------
# cross-ratio coordinates


def cross_ratio_map(alpha, m, k):
    """P_T values over the standard tableaux of shape (m-k, k)."""
    vals = []
    for T in standard_tableaux(m, k):
        row1, row2 = T
        v = ONE
        for a, b in zip(row1, row2):
            v = v * (alpha[a - 1] - alpha[b - 1])
        vals.append(v)
    return vals


def projectively_equal(u, v):
    if len(u) != len(v):
        return False
    for i in range(len(u)):
        for j in range(i + 1, len(u)):
            if u[i] * v[j] != u[j] * v[i]:
                return False
    return any(u) and any(v)


def moebius(alpha, a, b, c, d):
    return [(a * x + b) / (c * x + d) for x in alpha]


# ---------------------------------------------------------------------------
# genus two: the Kummer quartic with five cubic coefficients


KUMMER_PARAM_NAMES = ("x", "y", "z", "p", "q", "r")


def kummer_coefficient_cubics():
    """The five coefficient cubics of the genus-two quartic surface.

    In the parameters (x, y, z, p, q, r) with p + q + r = 0 and the half
    differences u = (p-q)/2, t = (q-r)/2, w = (r-p)/2.
    """
    names = KUMMER_PARAM_NAMES
    x, y, z, p, q, r = (Poly.variable(names, n) for n in names)
    half = QQ(1, 2)
    u = (p - q) * half
    t = (q - r) * half
    w = (r - p) * half
    return [
        x * (y * y + z * z - w * w),
        y * (x * x + z * z - t * t),
        z * (x * x + y * y - u * u),
        x * y * z,
        -2 * (x * x * w + y * y * t + z * z * u + u * t * w),
    ]


def genus2_kummer():
    """The printed quartic in (a, b, c, d) with its cubic coefficients."""
    pnames = KUMMER_PARAM_NAMES
    anames = ("A", "B", "C", "D")
    a, b, c, d = (Poly.variable(anames, n) for n in anames)
    quartics = [
        a * a * b * b + c * c * d * d,
        a * a * c * c + b * b * d * d,
        a * a * d * d + b * b * c * c,
        a ** 4 + b ** 4 + c ** 4 + d ** 4,
        a * b * c * d,
    ]
    return kummer_coefficient_cubics(), quartics


def kummer_map_eliminated():
    """The five coefficient cubics with r eliminated (p + q + r = 0)."""
    cubics = kummer_coefficient_cubics()
    names5 = ("x", "y", "z", "p", "q")
    x, y, z, p, q = (Poly.variable(names5, n) for n in names5)
    assignment = {"x": x, "y": y, "z": z, "p": p, "q": q, "r": -p - q}
    return [cb.substitute(assignment) for cb in cubics]


def segre_cubic_count(seed=None):
    from ..idealscan import DEFAULT_SEED
    seed = DEFAULT_SEED if seed is None else seed
    coords = kummer_map_eliminated()
    smap = SampledMap(coords, seed=seed)
    n3, forms, _ = vanishing_forms(smap, 3)
    n2, _, _ = vanishing_forms(smap, 2)
    return {"cubic_count": n3, "quadric_count": n2, "forms": forms}


# ---------------------------------------------------------------------------
# the octonion chart of the six-dimensional quadric


V_NAMES = tuple("v%d" % i for i in range(8))


def octonion_matrix():
    """The 4x8 matrix whose rows span the right ideal of an isotropic octonion."""
    names = V_NAMES
    v = [Poly.variable(names, n) for n in names]
    return [
        [v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]],
        [-v[1], v[0], -v[3], v[2], v[5], -v[4], v[7], -v[6]],
        [-v[2], v[3], v[0], -v[1], v[6], -v[7], -v[4], v[5]],
        [-v[3], -v[2], v[1], v[0], v[7], v[6], -v[5], -v[4]],
    ]


def _minor(mat, cols):
    from itertools import permutations
    names = V_NAMES
    det = Poly.zero(names)
    for perm in permutations(range(4)):
        sign = 1
        for a in range(4):
            for b in range(a + 1, 4):
                if perm[a] > perm[b]:
                    sign = -sign
        term = Poly.constant(names, sign)
        for r in range(4):
            term = term * mat[r][cols[perm[r]]]
        det = det + term
    return det


# context variable i corresponds to v_{7-i}, so the relation pivot
# eliminates squares of the last coordinate
def _ctx_index(i):
    return 7 - i


def _poly_to_keydict(p):
    out = {}
    for e, c in p.terms.items():
        key = []
        for i, k in enumerate(e):
            key.extend([_ctx_index(i)] * k)
        out[tuple(sorted(key, reverse=True))] = c
    return out


def _keydict_to_poly(d, degree):
    terms = {}
    for key, c in d.items():
        e = [0] * 8
        for idx in key:
            e[_ctx_index(idx)] += 1
        terms[tuple(e)] = c
    return Poly(V_NAMES, terms)


def octonion_contexts():
    qdict = {}
    for i in range(8):
        qdict[(i, i)] = ONE
    ctx4 = quadric(8, 4, qdict, tag="Qoct4")
    ctx2 = quadric(8, 2, qdict, tag="Qoct2")
    return ctx2, ctx4


def octonion_spinor_chart():
    """Solve for the renormalized Pluecker quadrics and their spans.

    For each 4-subset I of columns, the quartic minor M_I satisfies
    factor * p_I = M_I modulo the quadric, with factor = v0^2+..+v3^2; the
    quadratic p_I is recovered by exact linear algebra and canonicalized
    modulo the span of the quadric (squares of the last coordinate are
    eliminated).  Returns the p_I by subset plus both span dimensions and
    the quartic normal-form context.
    """
    ctx2, ctx4 = octonion_contexts()
    mat = octonion_matrix()
    names = V_NAMES
    factor = Poly.zero(names)
    for i in range(4):
        e = [0] * 8
        e[i] = 2
        factor = factor + Poly.monomial(names, tuple(e))
    factor_key = _poly_to_keydict(factor)
    mon2 = _monomials(8, 2)
    col_vecs = [ctx4.reduce({mono_mul(factor_k := k, m): c for k, c in factor_key.items()})
                for m in mon2]
    # assemble the linear system rows indexed by degree-4 standard monomials
    p_of = {}
    for I in combinations(range(8), 4):
        rhs_vec = ctx4.reduce(_poly_to_keydict(_minor(mat, I)))
        rows_map = {}
        for j, cv in enumerate(col_vecs):
            for key, c in cv.items():
                rows_map.setdefault(key, {})[j] = c
        all_keys = sorted(set(rows_map) | set(rhs_vec))
        rows = [rows_map.get(k, {}) for k in all_keys]
        rhs = [rhs_vec.get(k, ZERO) for k in all_keys]
        sol = solve(rows, rhs, len(mon2))
        if sol is None:
            raise RuntimeError("renormalization solve inconsistent for %s" % (I,))
        p_keys = {}
        for j, c in sol.items():
            if c:
                p_keys[mon2[j]] = c
        p_of[I] = ctx2.reduce(p_keys)
    # spans
    squares_raw = []
    squares_red = []
    for I, pk in p_of.items():
        sq = {}
        for k1, c1 in pk.items():
            for k2, c2 in pk.items():
                key = mono_mul(k1, k2)
                c = c1 * c2
                x = sq.get(key)
                if x is None:
                    sq[key] = c
                else:
                    x = x + c
                    if x:
                        sq[key] = x
                    else:
                        del sq[key]
        squares_raw.append(dict(sq))
        squares_red.append(ctx4.reduce(sq))
    return {
        "p": p_of,
        "ctx2": ctx2,
        "ctx4": ctx4,
        "square_span_raw": rank(squares_raw),
        "square_span_reduced": rank([dict(s) for s in squares_red]),
        "squares_reduced": squares_red,
    }


def theta14_basis_polys():
    names = V_NAMES
    v = [Poly.variable(names, n) for n in names]

    def quad4(i, j, k, l):
        return v[i] * v[j] * v[k] * v[l]

    def sqsum(idx):
        s = Poly.zero(names)
        for i in idx:
            s = s + v[i] * v[i]
        return s * s

    return [
        quad4(0, 1, 2, 3) - quad4(4, 5, 6, 7),
        quad4(0, 1, 4, 5) - quad4(2, 3, 6, 7),
        quad4(0, 1, 6, 7) - quad4(2, 3, 4, 5),
        quad4(0, 2, 4, 6) - quad4(1, 3, 5, 7),
        quad4(0, 2, 5, 7) - quad4(1, 3, 4, 6),
        quad4(0, 3, 4, 7) - quad4(1, 2, 5, 6),
        quad4(0, 3, 5, 6) - quad4(1, 2, 4, 7),
        sqsum((4, 5, 6, 7)),
        sqsum((2, 3, 6, 7)),
        sqsum((2, 3, 4, 5)),
        sqsum((1, 3, 5, 7)),
        sqsum((1, 3, 4, 6)),
        sqsum((1, 2, 5, 6)),
        sqsum((1, 2, 4, 7)),
    ]


def printed_renormalized(chart):
    """Check the four displayed renormalized coordinates modulo the quadric."""
    names = V_NAMES
    v = [Poly.variable(names, n) for n in names]
    ctx2 = chart["ctx2"]

    def red(p):
        return ctx2.reduce(_poly_to_keydict(p))

    expected = {
        (0, 1, 2, 3): v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3],
        (4, 5, 6, 7): -(v[4] * v[4] + v[5] * v[5] + v[6] * v[6] + v[7] * v[7]),
        (1, 2, 3, 6): v[1] * v[5] + v[2] * v[6] + v[3] * v[7] - v[0] * v[4],
        (1, 2, 4, 6): v[2] * v[3] - v[4] * v[5] - v[6] * v[7] - v[0] * v[1],
    }
    out = {}
    for I, exp in expected.items():
        got = chart["p"][I]
        exp_red = red(exp)
        if got == exp_red:
            out[I] = "exact"
        elif got == {k: -c for k, c in exp_red.items()}:
            out[I] = "negated"
        else:
            out[I] = "mismatch"
    return out
