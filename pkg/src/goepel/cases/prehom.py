"""Quintuples of skew forms on C^5 and 3x3x3 cubes: the two warm-up cases.

The first family lives in A_5 ox wedge^2 B_5 with a rank-two Cartan
subspace; its hypersurface is a bidegree (2,1) form whose three coefficient
quadrics come from the decomposability condition on a contracted two-form.
The second lives in the tensor cube of C^3 with a rank-three Cartan
subspace; the Hesse pencil, a plane Cremona translation, Cayley's
hyperdeterminant and the twelve-coordinate quartic map all live here.
"""

from __future__ import annotations

from itertools import combinations, permutations

from ..exactmath import QQ, ZERO, ONE, Cyclotomic, zeta3, rank, kernel_basis, invariant_subspace
from ..poly import Poly, poly_rank
from ..idealscan import SampledMap, vanishing_forms, jacobian_rank


# ---------------------------------------------------------------------------
# the rank-two case: A_5 ox wedge^2 B_5


def _bsort(i, j):
    """(sign, sorted pair) for b_i ^ b_j, indices 1..5."""
    if i == j:
        return None
    return (1, (i, j)) if i < j else (-1, (j, i))


def toy_h1():
    """a_i ox b_{i,i+1}, cyclically."""
    out = {}
    for i in range(1, 6):
        s, pair = _bsort(i, i % 5 + 1)
        out[(i, pair)] = QQ(s)
    return out


def toy_h2():
    """a_1 ox b_35 + a_2 ox b_41 + a_3 ox b_52 + a_4 ox b_13 + a_5 ox b_24."""
    out = {}
    for a, (i, j) in ((1, (3, 5)), (2, (4, 1)), (3, (5, 2)), (4, (1, 3)), (5, (2, 4))):
        s, pair = _bsort(i, j)
        out[(a, pair)] = QQ(s)
    return out


_EPS5 = {}
for perm in permutations(range(1, 6)):
    sign = 1
    for x in range(5):
        for y in range(x + 1, 5):
            if perm[x] > perm[y]:
                sign = -sign
    _EPS5[perm] = sign


def toy_bracket(u, v):
    """[a_p ox b_I, a_q ox b_K] = (a_p ^ a_q) ox (b_I ^ b_K) in wedge^2 A ox B^v."""
    out = {}
    for (p, (i, j)), c1 in u.items():
        for (q, (k, l)), c2 in v.items():
            if p == q:
                continue
            sa = 1 if p < q else -1
            apq = (p, q) if p < q else (q, p)
            if len({i, j, k, l}) != 4:
                continue
            m = ({1, 2, 3, 4, 5} - {i, j, k, l}).pop()
            eps = _EPS5[(i, j, k, l, m)]
            key = (apq, m)
            c = c1 * c2 * (sa * eps)
            x = out.get(key)
            if x is None:
                out[key] = c
            else:
                x = x + c
                if x:
                    out[key] = x
                else:
                    del out[key]
    return out


def toy_commutes():
    return not toy_bracket(toy_h1(), toy_h2())


def toy_heisenberg_invariants():
    """Invariants of the stabilizer of the Cartan pair inside the 50-dim space.

    The diagonal generator acts on a_p ox b_ij by the cube... fifth root of
    unity character (1-2p) + (i-1) + (j-1); its fixed monomials are cut out
    combinatorially, and the cyclic shift then acts on that span by a
    signed permutation whose fixed space is computed exactly.
    """
    monos = []
    for p in range(1, 6):
        for i in range(1, 6):
            for j in range(i + 1, 6):
                if ((1 - 2 * p) + (i - 1) + (j - 1)) % 5 == 0:
                    monos.append((p, (i, j)))
    index = {m: k for k, m in enumerate(monos)}
    dim = len(monos)
    # cyclic shift a_p -> a_{p+1}, b_i -> b_{i+1}
    mat = [[ZERO] * dim for _ in range(dim)]
    for m, k in index.items():
        p, (i, j) = m
        s, pair = _bsort(i % 5 + 1, j % 5 + 1)
        tgt = (p % 5 + 1, pair)
        mat[index[tgt]][k] = QQ(s)
    fixed = invariant_subspace([mat], dim)
    basis = []
    for v in fixed:
        basis.append({monos[k]: c for k, c in v.items()})
    return basis, monos


def toy_coble_equation():
    """The bidegree (2,1) form cutting the rank-two hypersurface.

    omega = sum_i x_i (v1 b_{i,i+1} + v2 b_{i,i+2});  the equation is the
    pairing of omega ^ omega in wedge^4 B with the y-coordinates, content
    normalized so the v1^2 coefficient is the first printed quadric.
    """
    names = ("v1", "v2") + tuple("x%d" % i for i in range(1, 6)) + tuple("y%d" % i for i in range(1, 6))
    v1 = Poly.variable(names, "v1")
    v2 = Poly.variable(names, "v2")
    xs = [None] + [Poly.variable(names, "x%d" % i) for i in range(1, 6)]
    ys = [None] + [Poly.variable(names, "y%d" % i) for i in range(1, 6)]
    omega = {}
    for i in range(1, 6):
        for coeff, (a, b) in ((v1 * xs[i], (i, i % 5 + 1)), (v2 * xs[i], (i, (i + 1) % 5 + 1))):
            s, pair = _bsort(a, b)
            cur = omega.get(pair, Poly.zero(names))
            omega[pair] = cur + coeff * s
    total = Poly.zero(names)
    pairs = list(omega)
    for p1 in pairs:
        for p2 in pairs:
            union = set(p1) | set(p2)
            if len(union) != 4:
                continue
            m = ({1, 2, 3, 4, 5} - union).pop()
            i, j = p1
            k, l = p2
            eps = _EPS5[(i, j, k, l, m)]
            total = total + omega[p1] * omega[p2] * (eps) * ys[m]
    # content: the expansion double counts each unordered pair
    return total * QQ(1, 2)


def toy_printed_quadrics():
    names = ("v1", "v2") + tuple("x%d" % i for i in range(1, 6)) + tuple("y%d" % i for i in range(1, 6))
    x = {i: Poly.variable(names, "x%d" % i) for i in range(1, 6)}
    y = {i: Poly.variable(names, "y%d" % i) for i in range(1, 6)}
    q1 = x[2] * x[4] * y[1] + x[3] * x[5] * y[2] + x[4] * x[1] * y[3] + x[5] * x[2] * y[4] + x[1] * x[3] * y[5]
    q2 = x[3] * x[5] * y[1] + x[4] * x[1] * y[2] + x[5] * x[2] * y[3] + x[1] * x[3] * y[4] + x[2] * x[4] * y[5]
    q3 = x[2] * x[3] * y[1] + x[3] * x[4] * y[2] + x[4] * x[5] * y[3] + x[5] * x[1] * y[4] + x[1] * x[2] * y[5]
    return q1, q2, q3


def toy_goepel_map():
    """Coordinates of the rank-two case map: a plane conic."""
    names = ("v1", "v2")
    v1 = Poly.variable(names, "v1")
    v2 = Poly.variable(names, "v2")
    return [v1 * v1, -(v1 * v2), -(v2 * v2)]


# ---------------------------------------------------------------------------
# the Hesse pencil and the Cremona translation


def hesse_determinant():
    """Determinant of the circulant-like matrix of the cube tensor."""
    names = ("u", "v", "w", "x1", "x2", "x3")
    u, v, w, x1, x2, x3 = (Poly.variable(names, n) for n in names)
    m = [[u * x1, v * x2, w * x3],
         [w * x2, u * x3, v * x1],
         [v * x3, w * x1, u * x2]]
    det = Poly.zero(names)
    for perm in permutations(range(3)):
        sign = 1
        for a in range(3):
            for b in range(a + 1, 3):
                if perm[a] > perm[b]:
                    sign = -sign
        term = m[0][perm[0]] * m[1][perm[1]] * m[2][perm[2]]
        det = det + term * sign
    return det


def hesse_pencil_form():
    names = ("u", "v", "w", "x1", "x2", "x3")
    u, v, w, x1, x2, x3 = (Poly.variable(names, n) for n in names)
    return x1 * x2 * x3 * (u ** 3 + v ** 3 + w ** 3) - (x1 ** 3 + x2 ** 3 + x3 ** 3) * u * v * w


def cremona_translation(uvw, x):
    """Image point of the translation correspondence on the Hesse curve."""
    u, v, w = uvw
    x1, x2, x3 = x
    return (u * u * x2 * x3 - v * w * x1 * x1,
            v * v * x1 * x3 - u * w * x2 * x2,
            w * w * x1 * x2 - u * v * x3 * x3)


def cremona_det_identity():
    """Collinearity determinant of the parameter point, x and its Cremona image.

    With the image in its natural coordinate order the determinant vanishes
    identically (the translation is the curve symmetry about the parameter
    point followed by the exchange of the last two coordinates, so the
    pre-exchange point is the third collinear point).
    """
    names = ("u", "v", "w", "x1", "x2", "x3")
    u, v, w, x1, x2, x3 = (Poly.variable(names, n) for n in names)
    y1 = u * u * x2 * x3 - v * w * x1 * x1
    y2 = v * v * x1 * x3 - u * w * x2 * x2
    y3 = w * w * x1 * x2 - u * v * x3 * x3
    rows = [[u, v, w], [x1, x2, x3], [y1, y2, y3]]
    det = Poly.zero(names)
    for perm in permutations(range(3)):
        sign = 1
        for a in range(3):
            for b in range(a + 1, 3):
                if perm[a] > perm[b]:
                    sign = -sign
        det = det + rows[0][perm[0]] * rows[1][perm[1]] * rows[2][perm[2]] * sign
    return det


# ---------------------------------------------------------------------------
# Cayley's hyperdeterminant


def cayley_hyperdet(s):
    """Hyperdeterminant of a 2x2x2 array s[i][j][k], i,j,k in {0,1}.

    The four-plus-six-plus-two term polynomial; entries may be scalars or
    polynomials.
    """
    def S(i, j, k):
        return s[i][j][k]

    first = (S(0, 0, 0) ** 2 * S(1, 1, 1) ** 2 + S(0, 0, 1) ** 2 * S(1, 1, 0) ** 2
             + S(0, 1, 0) ** 2 * S(1, 0, 1) ** 2 + S(1, 0, 0) ** 2 * S(0, 1, 1) ** 2)
    second = (S(0, 0, 0) * S(1, 1, 1) * S(0, 0, 1) * S(1, 1, 0)
              + S(0, 0, 0) * S(1, 1, 1) * S(0, 1, 0) * S(1, 0, 1)
              + S(0, 0, 0) * S(1, 1, 1) * S(1, 0, 0) * S(0, 1, 1)
              + S(0, 0, 1) * S(1, 1, 0) * S(0, 1, 0) * S(1, 0, 1)
              + S(0, 0, 1) * S(1, 1, 0) * S(1, 0, 0) * S(0, 1, 1)
              + S(0, 1, 0) * S(1, 0, 1) * S(1, 0, 0) * S(0, 1, 1))
    third = (S(0, 0, 0) * S(0, 1, 1) * S(1, 0, 1) * S(1, 1, 0)
             + S(1, 1, 1) * S(1, 0, 0) * S(0, 1, 0) * S(0, 0, 1))
    return first - 2 * second + 4 * third


def cayley_oracle(s):
    """Brute-force discriminant of det(x A + y B) for the two slices."""
    A = s[0]
    B = s[1]
    # det(xA + yB) = a x^2 + b xy + c y^2
    a = A[0][0] * A[1][1] - A[0][1] * A[1][0]
    c = B[0][0] * B[1][1] - B[0][1] * B[1][0]
    b = (A[0][0] * B[1][1] + B[0][0] * A[1][1]
         - A[0][1] * B[1][0] - B[0][1] * A[1][0])
    return b * b - 4 * a * c


# ---------------------------------------------------------------------------
# the cube case: Cartan data, Heisenberg, the fifteen coefficient quadrics


RUBIK_NAMES = ("u", "v", "w", "x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2", "z3")


def rubik_cartan():
    """h_1, h_2, h_3 as 3x3x3 coefficient dicts {(i,j,k): 1}, indices 0..2."""
    h1 = {(i, i, i): ONE for i in range(3)}
    h2 = {(i, (i + 1) % 3, (i + 2) % 3): ONE for i in range(3)}
    h3 = {(i, (i + 2) % 3, (i + 1) % 3): ONE for i in range(3)}
    return h1, h2, h3


def rubik_bracket(t1, t2):
    """(a^a') ox (b^b') ox (c^c') with all three wedges identified with duals."""
    eps = {}
    for p in permutations(range(3)):
        sign = 1
        for a in range(3):
            for b in range(a + 1, 3):
                if p[a] > p[b]:
                    sign = -sign
        eps[p] = sign
    out = {}
    for (i1, j1, k1), c1 in t1.items():
        for (i2, j2, k2), c2 in t2.items():
            if i1 == i2 or j1 == j2 or k1 == k2:
                continue
            i3 = 3 - i1 - i2
            j3 = 3 - j1 - j2
            k3 = 3 - k1 - k2
            c = c1 * c2 * (eps[(i1, i2, i3)] * eps[(j1, j2, j3)] * eps[(k1, k2, k3)])
            key = (i3, j3, k3)
            x = out.get(key)
            if x is None:
                out[key] = c
            else:
                x = x + c
                if x:
                    out[key] = x
                else:
                    del out[key]
    return out


def rubik_heisenberg_operators():
    """The shift and the two diagonal cube-root operators on C^3 ox C^3 ox C^3."""
    z = zeta3()
    zero = Cyclotomic(3, 0, 0)
    one = Cyclotomic(3, 1, 0)
    basis = [(i, j, k) for i in range(3) for j in range(3) for k in range(3)]
    index = {m: t for t, m in enumerate(basis)}

    def op(fn):
        mat = [[zero] * 27 for _ in range(27)]
        for m, t in index.items():
            tgt, c = fn(m)
            mat[index[tgt]][t] = c
        return mat

    zpow = [one, z, z * z]
    sigma = op(lambda m: (((m[0] + 1) % 3, (m[1] + 1) % 3, (m[2] + 1) % 3), one))
    tau3 = op(lambda m: (m, zpow[(m[0] + m[1] + m[2]) % 3]))
    tau12 = op(lambda m: (m, zpow[(m[1] + 2 * m[2]) % 3]))
    return [sigma, tau3, tau12], basis


def rubik_trivialized_section():
    """The section of the rank-two quotient cube bundle over the affine chart.

    Obtained from u h_1 + v h_2 + w h_3 by rewriting the third basis vector
    of each factor in terms of the first two with chart coordinates.
    """
    names = RUBIK_NAMES
    u, v, w, x1, x2, _, y1, y2, _, z1, z2, _ = (Poly.variable(names, n) for n in names)
    one = Poly.constant(names, 1)
    t = {}
    h1, h2, h3 = rubik_cartan()
    # the printed trivialized section pairs v with the slope-two element
    # and w with the slope-one one; the coefficient table is the oracle
    coeffs = [(u, h1), (v, h3), (w, h2)]
    subs = {0: {0: one}, 1: {1: one}, 2: None}
    charts = [
        {2: {0: x1, 1: x2}},
        {2: {0: y1, 1: y2}},
        {2: {0: z1, 1: z2}},
    ]
    for coeff, h in coeffs:
        for (i, j, k), c in h.items():
            for (ii, ci) in ({i: one} if i < 2 else charts[0][2]).items():
                for (jj, cj) in ({j: one} if j < 2 else charts[1][2]).items():
                    for (kk, ck) in ({k: one} if k < 2 else charts[2][2]).items():
                        key = (ii, jj, kk)
                        term = coeff * ci * cj * ck * c
                        t[key] = t.get(key, Poly.zero(names)) + term
    return t


def rubik_hyperdet_table():
    """The fifteen coefficient quadrics Q_{p,q,r} of the homogenized hyperdeterminant."""
    t = rubik_trivialized_section()
    s = [[[t.get((i, j, k), Poly.zero(RUBIK_NAMES)) for k in range(2)]
          for j in range(2)] for i in range(2)]
    det = cayley_hyperdet(s)
    # homogenize each block to degree two; the chart coordinates are the
    # negatives of the affine ratios, so odd chart degrees flip sign
    names = RUBIK_NAMES
    idx = {n: i for i, n in enumerate(names)}
    blocks = (("x1", "x2", "x3"), ("y1", "y2", "y3"), ("z1", "z2", "z3"))
    out = {}
    for e, c in det.terms.items():
        e = list(e)
        for b in blocks:
            d = e[idx[b[0]]] + e[idx[b[1]]] + e[idx[b[2]]]
            if d > 2:
                raise AssertionError("chart degree exceeds two")
            e[idx[b[2]]] += 2 - d
            if d % 2:
                c = -c
        key = tuple(e)
        x = out.get(key)
        out[key] = c if x is None else x + c
    det = Poly(names, {k: c for k, c in out.items() if c})
    table = {}
    for p in range(5):
        for q in range(5 - p):
            r = 4 - p - q
            cp = det.coefficient_poly((idx["u"], idx["v"], idx["w"]), (p, q, r))
            if cp:
                table[(p, q, r)] = cp
    return table


def rubik_printed_table():
    """Transcription of the printed Q_{p,q,r} quadrics."""
    names = RUBIK_NAMES
    x = {i: Poly.variable(names, "x%d" % i) for i in (1, 2, 3)}
    y = {i: Poly.variable(names, "y%d" % i) for i in (1, 2, 3)}
    z = {i: Poly.variable(names, "z%d" % i) for i in (1, 2, 3)}

    def m(xi, xj, yi, yj, zi, zj):
        return x[xi] * x[xj] * y[yi] * y[yj] * z[zi] * z[zj]

    T = {}
    T[(4, 0, 0)] = (m(1, 1, 1, 1, 1, 1) + m(2, 2, 2, 2, 2, 2) + m(3, 3, 3, 3, 3, 3)
                    - 2 * m(1, 2, 1, 2, 1, 2) - 2 * m(1, 3, 1, 3, 1, 3) - 2 * m(2, 3, 2, 3, 2, 3))
    T[(0, 4, 0)] = (m(1, 1, 3, 3, 2, 2) + m(2, 2, 1, 1, 3, 3) + m(3, 3, 2, 2, 1, 1)
                    - 2 * m(1, 2, 1, 3, 2, 3) - 2 * m(1, 3, 2, 3, 1, 2) - 2 * m(2, 3, 1, 2, 1, 3))
    T[(0, 0, 4)] = (m(1, 1, 2, 2, 3, 3) + m(2, 2, 3, 3, 1, 1) + m(3, 3, 1, 1, 2, 2)
                    - 2 * m(1, 2, 2, 3, 1, 3) - 2 * m(1, 3, 1, 2, 2, 3) - 2 * m(2, 3, 1, 3, 1, 2))
    T[(3, 1, 0)] = -4 * (m(2, 3, 1, 2, 1, 3) + m(1, 2, 1, 3, 2, 3) + m(1, 3, 2, 3, 1, 2))
    T[(0, 1, 3)] = T[(3, 1, 0)]
    T[(3, 0, 1)] = -4 * (m(1, 2, 2, 3, 1, 3) + m(1, 3, 1, 2, 2, 3) + m(2, 3, 1, 3, 1, 2))
    T[(0, 3, 1)] = T[(3, 0, 1)]
    T[(1, 3, 0)] = -4 * (m(1, 2, 1, 2, 1, 2) + m(1, 3, 1, 3, 1, 3) + m(2, 3, 2, 3, 2, 3))
    T[(1, 0, 3)] = T[(1, 3, 0)]
    T[(0, 2, 2)] = -2 * (m(1, 2, 1, 2, 3, 3) + m(2, 2, 1, 3, 1, 3) + m(1, 3, 2, 2, 1, 3)
                         + m(2, 3, 2, 3, 1, 1) + m(2, 3, 1, 1, 2, 3) + m(1, 1, 2, 3, 2, 3)
                         + m(1, 2, 3, 3, 1, 2) + m(3, 3, 1, 2, 1, 2) + m(1, 3, 1, 3, 2, 2))
    T[(2, 0, 2)] = -2 * (m(1, 1, 1, 2, 1, 3) + m(1, 2, 1, 3, 1, 1) + m(1, 2, 2, 2, 2, 3)
                         + m(1, 3, 1, 1, 1, 2) + m(2, 2, 2, 3, 1, 2) + m(2, 3, 1, 2, 2, 2)
                         + m(1, 3, 2, 3, 3, 3) + m(2, 3, 3, 3, 1, 3) + m(3, 3, 1, 3, 2, 3))
    T[(2, 2, 0)] = -2 * (m(1, 2, 1, 1, 1, 3) + m(1, 3, 1, 2, 1, 1) + m(2, 2, 1, 2, 2, 3)
                         + m(1, 1, 1, 3, 1, 2) + m(2, 3, 2, 2, 1, 2) + m(1, 2, 2, 3, 2, 2)
                         + m(2, 3, 1, 3, 3, 3) + m(3, 3, 2, 3, 1, 3) + m(1, 3, 3, 3, 2, 3))
    T[(2, 1, 1)] = -4 * (m(2, 2, 2, 2, 1, 3) + m(2, 3, 1, 1, 1, 1) + m(1, 1, 2, 3, 1, 1)
                         + m(1, 1, 1, 1, 2, 3) + m(2, 2, 1, 3, 2, 2) + m(1, 3, 2, 2, 2, 2)
                         + m(1, 2, 3, 3, 3, 3) + m(3, 3, 1, 2, 3, 3) + m(3, 3, 3, 3, 1, 2))
    T[(1, 2, 1)] = -4 * (m(1, 2, 2, 2, 1, 1) + m(2, 2, 1, 1, 1, 2) + m(1, 1, 1, 2, 2, 2)
                         + m(1, 3, 1, 1, 3, 3) + m(2, 2, 2, 3, 3, 3) + m(1, 1, 3, 3, 1, 3)
                         + m(3, 3, 1, 3, 1, 1) + m(3, 3, 2, 2, 2, 3) + m(2, 3, 3, 3, 2, 2))
    T[(1, 1, 2)] = -4 * (m(2, 2, 1, 2, 1, 1) + m(1, 1, 2, 2, 1, 2) + m(1, 2, 1, 1, 2, 2)
                         + m(1, 1, 1, 3, 3, 3) + m(2, 3, 2, 2, 3, 3) + m(3, 3, 1, 1, 1, 3)
                         + m(1, 3, 3, 3, 1, 1) + m(2, 2, 3, 3, 2, 3) + m(3, 3, 2, 3, 2, 2))
    return T


def rubik_goepel_coordinates():
    """The twelve-coordinate quartic map induced by the coefficient identifications.

    The three equalities among the Q_{p,q,r} pair the Veronese coordinates
    u^3 v with v w^3 (and cyclic variants), so each paired coordinate
    appears as the symmetric combination below.  These twelve functions
    span the Hessian-line quartic space.
    """
    names = ("u", "v", "w")
    u, v, w = (Poly.variable(names, n) for n in names)
    return [
        u ** 4, v ** 4, w ** 4,
        u * (v ** 3 + w ** 3), v * (u ** 3 + w ** 3), w * (u ** 3 + v ** 3),
        u ** 2 * v ** 2, u ** 2 * w ** 2, v ** 2 * w ** 2,
        u ** 2 * v * w, u * v ** 2 * w, u * v * w ** 2,
    ]


def rubik_projection_map():
    """The twelve-monomial projection of the quartic Veronese with pinch points.

    This is the projection of v_4(P^2) whose center meets the secant
    variety in three points; its image is singular at the images of the
    coordinate points and its ideal needs thirty-six quadrics.  It differs
    from the coordinate map induced by the coefficient identifications by
    exchanging each pairing u^3 v + v w^3 with u^3 v + u^3 w.
    """
    names = ("u", "v", "w")
    u, v, w = (Poly.variable(names, n) for n in names)
    return [
        u ** 4, v ** 4, w ** 4,
        u ** 3 * (v + w), v ** 3 * (u + w), w ** 3 * (u + v),
        u ** 2 * v ** 2, u ** 2 * w ** 2, v ** 2 * w ** 2,
        u ** 2 * v * w, u * v ** 2 * w, u * v * w ** 2,
    ]


def hessian_lines():
    """The twelve lines of the Hessian arrangement, over Q(zeta_3)."""
    z = zeta3()
    one = Cyclotomic(3, 1, 0)
    zero = Cyclotomic(3, 0, 0)
    lines = [(one, zero, zero), (zero, one, zero), (zero, zero, one)]
    zpow = [one, z, z * z]
    for a in range(3):
        for b in range(3):
            lines.append((one, zpow[a], zpow[b]))
    return lines


def hessian_line_quartics():
    """Fourth powers of the twelve Hessian lines as vectors over Q(zeta_3)."""
    names = ("u", "v", "w")
    out = []
    for coeffs in hessian_lines():
        form = Poly(names, {})
        for i, c in enumerate(coeffs):
            if c:
                e = [0, 0, 0]
                e[i] = 1
                form = form + Poly.monomial(names, tuple(e), c)
        out.append(form ** 4)
    return out


def rubik_checks(seed=None):
    """Quadric counts, pinch-point Jacobian ranks and the line-quartic span.

    The interpolation and singular-point certificates run on the
    twelve-monomial projection map (the one with the three pinch points);
    the Hessian-span membership runs on the induced coordinate map, and
    the induced map's own generic counts are reported alongside.
    """
    from ..idealscan import DEFAULT_SEED
    seed = DEFAULT_SEED if seed is None else seed
    proj = rubik_projection_map()
    smap = SampledMap(proj, seed=seed)
    nforms, forms, evrank = vanishing_forms(smap, 2)
    ranks = []
    for pt_index in range(3):
        point = [ZERO] * 12
        point[pt_index] = ONE
        ranks.append(jacobian_rank(forms, point))
    coords = rubik_goepel_coordinates()
    smap2 = SampledMap(coords, seed=seed)
    nforms2, _, evrank2 = vanishing_forms(smap2, 2)
    lines4 = hessian_line_quartics()
    span_dim = poly_rank(lines4)
    coords_in_span = rank([p.vec() for p in lines4] + [c.vec() for c in coords])
    return {
        "quadric_count": nforms,
        "evaluation_rank": evrank,
        "jacobian_ranks": ranks,
        "induced_quadric_count": nforms2,
        "induced_evaluation_rank": evrank2,
        "hessian_span_dim": span_dim,
        "coords_inside_span": coords_in_span == span_dim,
        "forms": forms,
    }
