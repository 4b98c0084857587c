"""Root systems, Weyl reflections, complex reflection groups, Macdonald spans.

The E8 frame used everywhere downstream: eight pairwise orthogonal roots
``u_1..u_8`` obtained from the standard epsilon-coordinates as

    u_1 = eps1+eps2   u_2 = eps1-eps2   u_3 = eps3+eps4   u_4 = eps3-eps4
    u_5 = eps5+eps6   u_6 = eps5-eps6   u_7 = eps7-eps8   u_8 = eps7+eps8

Expressed in the (Killing-orthogonal, square-length-two) basis u_i, the 240
roots of E8 become the 16 vectors +-u_i together with the 224 vectors
(+-u_i +- u_j +- u_k +- u_l)/2 supported on the 14 quadruples of a Steiner
system S(3,4,8); reflections act as ordinary Euclidean reflections in unit
vectors.  The roots orthogonal to u_8 form the E7 subsystem.

Weyl groups are never enumerated; every orbit computation goes through a
set of simple reflections and the deterministic span closure of
:mod:`goepel.exactmath`.  The complex reflection groups G25 and G32 are
realized by order-three unitary reflections over Q(zeta_3) about their
classical hyperplane arrangements; their orders and hyperplane counts are
certified by breadth-first enumeration in the test suite rather than
trusted.
"""

from __future__ import annotations

from itertools import combinations
from math import gcd

from .exactmath import QQ, ZERO, ONE, Cyclotomic, zeta3, Echelon, span_closure, kernel_basis
from .poly import Poly


HALF = QQ(1, 2)

# frame change: u_i in epsilon coordinates
_FRAME = [
    (1, 1, 0, 0, 0, 0, 0, 0),
    (1, -1, 0, 0, 0, 0, 0, 0),
    (0, 0, 1, 1, 0, 0, 0, 0),
    (0, 0, 1, -1, 0, 0, 0, 0),
    (0, 0, 0, 0, 1, 1, 0, 0),
    (0, 0, 0, 0, 1, -1, 0, 0),
    (0, 0, 0, 0, 0, 0, 1, -1),
    (0, 0, 0, 0, 0, 0, 1, 1),
]


def e8_roots_standard():
    """The 240 roots of E8 in the standard epsilon coordinates."""
    roots = []
    for i in range(8):
        for j in range(i + 1, 8):
            for si in (1, -1):
                for sj in (1, -1):
                    v = [ZERO] * 8
                    v[i] = QQ(si)
                    v[j] = QQ(sj)
                    roots.append(tuple(v))
    for signs in range(256):
        bits = [(signs >> k) & 1 for k in range(8)]
        if sum(bits) % 2:
            continue
        roots.append(tuple(HALF if b == 0 else -HALF for b in bits))
    return roots


def dot(u, v):
    s = ZERO
    for a, b in zip(u, v):
        if a and b:
            s = s + a * b
    return s


def to_frame(root):
    """Coordinates of an epsilon-vector in the u-basis (Gram matrix 2*Id)."""
    return tuple(dot(root, f) * HALF for f in _FRAME)


def e8_in_cartan_frame():
    """All 240 E8 roots expressed in the orthonormal-up-to-scale u-frame."""
    return [to_frame(r) for r in e8_roots_standard()]


def is_positive(root):
    for c in root:
        if c:
            return c > 0
    return False


def positive_roots(roots):
    return [r for r in roots if is_positive(r)]


def e7_subsystem(roots=None):
    """Roots orthogonal to u_8, i.e. with vanishing last frame coordinate."""
    if roots is None:
        roots = e8_in_cartan_frame()
    return [r for r in roots if not r[7]]


def steiner_quadruples(roots=None):
    """Supports of the half-integral roots: the 14 Steiner quadruples."""
    if roots is None:
        roots = e8_in_cartan_frame()
    quads = set()
    for r in roots:
        supp = tuple(i + 1 for i, c in enumerate(r) if c)
        if len(supp) == 4:
            quads.add(supp)
    return sorted(quads)


def simple_roots(roots):
    """Positive roots not expressible as a sum of two positive roots."""
    pos = positive_roots(roots)
    pos_set = set(pos)
    simples = []
    for r in pos:
        decomposable = False
        for s in pos:
            t = tuple(a - b for a, b in zip(r, s))
            if any(t) and t in pos_set:
                decomposable = True
                break
        if not decomposable:
            simples.append(r)
    return simples


def reflect_vector(x, r):
    """Euclidean reflection of x in the unit root r (sum r_i^2 = 1)."""
    c = ZERO
    for a, b in zip(x, r):
        if a and b:
            c = c + a * b
    c = c + c
    return tuple(a - c * b for a, b in zip(x, r))


def reflection_matrix(r, dim=None):
    dim = dim if dim is not None else len(r)
    return [[(ONE if i == j else ZERO) - 2 * r[i] * r[j] for j in range(dim)]
            for i in range(dim)]


# ---------------------------------------------------------------------------
# Macdonald spans: orbits of products of linear forms under reflections


def _expand_product(forms, nvars):
    """Expand a product of linear forms into an exponent-keyed dict."""
    prod = {(0,) * nvars: ONE}
    for form in forms:
        nxt = {}
        for e, c in prod.items():
            for i, a in form.items():
                e2 = list(e)
                e2[i] += 1
                e2 = tuple(e2)
                cc = c * a
                x = nxt.get(e2)
                if x is None:
                    nxt[e2] = cc
                else:
                    x = x + cc
                    if x:
                        nxt[e2] = x
                    else:
                        del nxt[e2]
        prod = nxt
    return prod


def _reflect_form(form, root):
    """Pull back a linear form along the reflection in the unit root."""
    c = ZERO
    for i, a in form.items():
        b = root[i]
        if b:
            c = c + a * b
    if not c:
        return dict(form)
    c = c + c
    out = dict(form)
    for i, b in enumerate(root):
        if b:
            x = out.get(i)
            y = (x if x is not None else ZERO) - c * b
            if y:
                out[i] = y
            elif x is not None:
                del out[i]
    return out


class MacdonaldSpan:
    """Span of the reflection orbit of a product of linear forms."""

    def __init__(self, nvars, ech, products):
        self.nvars = nvars
        self.ech = ech
        self.products = products

    @property
    def dim(self):
        return len(self.ech)

    def contains_vec(self, vec):
        return self.ech.contains(vec)

    def contains_poly(self, p):
        return self.ech.contains(p.vec())

    def basis_vecs(self):
        return [dict(v) for v in self.ech.rows.values()]


def macdonald_span(seed_forms, generator_roots, nvars):
    """Closure of the orbit of prod(seed_forms) under the given reflections.

    Orbit members stay factored as lists of linear forms; only the echelon
    insertion expands them.  The reflections must generate the intended
    group (simple roots suffice for a Weyl group).
    """
    ech = Echelon()
    seed = [dict(f) for f in seed_forms]
    queue = []
    kept = []
    v = ech.reduce(_expand_product(seed, nvars))
    if v:
        p = min(v)
        inv = 1 / v[p]
        ech.rows[p] = {k: inv * x for k, x in v.items()}
        queue.append(seed)
        kept.append(seed)
    i = 0
    while i < len(queue):
        forms = queue[i]
        i += 1
        for r in generator_roots:
            img = [_reflect_form(f, r) for f in forms]
            v = ech.reduce(_expand_product(img, nvars))
            if v:
                p = min(v)
                inv = 1 / v[p]
                ech.rows[p] = {k: inv * x for k, x in v.items()}
                queue.append(img)
                kept.append(img)
    return MacdonaldSpan(nvars, ech, kept)


def macdonald_span_matrices(seed_forms, generator_matrices, nvars):
    """Same closure for matrix generators (complex reflection groups).

    Each generator g pulls a linear form l back to l o g; the generator
    list should be closed under inverses to guarantee a group-stable span.
    """
    def act(g, form):
        out = {}
        for i, a in form.items():
            for j in range(nvars):
                c = g[i][j]
                if c:
                    x = out.get(j)
                    y = (x if x is not None else ZERO) + a * c
                    if y:
                        out[j] = y
                    elif x is not None:
                        del out[j]
        return out

    ech = Echelon()
    queue = []
    kept = []
    seed = [dict(f) for f in seed_forms]
    v = ech.reduce(_expand_product(seed, nvars))
    if v:
        p = min(v)
        c = v[p]
        inv = c.inverse() if isinstance(c, Cyclotomic) else 1 / c
        ech.rows[p] = {k: inv * x for k, x in v.items()}
        queue.append(seed)
        kept.append(seed)
    i = 0
    while i < len(queue):
        forms = queue[i]
        i += 1
        for g in generator_matrices:
            img = [act(g, f) for f in forms]
            v = ech.reduce(_expand_product(img, nvars))
            if v:
                p = min(v)
                c = v[p]
                inv = c.inverse() if isinstance(c, Cyclotomic) else 1 / c
                ech.rows[p] = {k: inv * x for k, x in v.items()}
                queue.append(img)
                kept.append(img)
    return MacdonaldSpan(nvars, ech, kept)


# ---------------------------------------------------------------------------
# complex reflection groups over Q(zeta_3)
#
# Matrices are encoded as (k, entries) where entries is a 2*dim*dim tuple of
# ints: entry (i,j) equals (entries[2*(dim*i+j)] + entries[...+1]*zeta)/3^k.
# This keeps breadth-first closure allocation-light and hashable.


def _cyc_encode(mat, dim):
    k = 0
    num = []
    dens = []
    for row in mat:
        for x in row:
            if not isinstance(x, Cyclotomic):
                x = Cyclotomic(3, x, 0)
            for q in (x.a, x.b):
                d = int(q.denominator)
                dens.append(d)
    lcm = 1
    for d in dens:
        lcm = lcm * d // gcd(lcm, d)
    kk = 0
    while 3 ** kk < lcm:
        kk += 1
    if 3 ** kk != lcm:
        raise ValueError("denominator is not a power of three")
    scale = 3 ** kk
    ints = []
    for row in mat:
        for x in row:
            if not isinstance(x, Cyclotomic):
                x = Cyclotomic(3, x, 0)
            for q in (x.a, x.b):
                v = q * scale
                if int(v.denominator) != 1:
                    raise ValueError("inconsistent denominators")
                ints.append(int(v.numerator))
    return _cyc_normalize(kk, tuple(ints))


def _cyc_normalize(k, ints):
    while k > 0 and all(x % 3 == 0 for x in ints):
        ints = tuple(x // 3 for x in ints)
        k -= 1
    return (k, ints)


def _cyc_mul(A, B, dim):
    ka, a = A
    kb, b = B
    out = []
    for i in range(dim):
        base_i = 2 * dim * i
        for j in range(dim):
            pa = ZERO_I = 0
            pb = 0
            for m in range(dim):
                x0 = a[base_i + 2 * m]
                x1 = a[base_i + 2 * m + 1]
                y0 = b[2 * (dim * m + j)]
                y1 = b[2 * (dim * m + j) + 1]
                # (x0 + x1 z)(y0 + y1 z), z^2 = -1 - z
                pa += x0 * y0 - x1 * y1
                pb += x0 * y1 + x1 * y0 - x1 * y1
            out.append(pa)
            out.append(pb)
    return _cyc_normalize(ka + kb, tuple(out))


def _cyc_to_matrix(M, dim):
    k, ints = M
    den = QQ(1, 3 ** k)
    mat = []
    for i in range(dim):
        row = []
        for j in range(dim):
            a = ints[2 * (dim * i + j)]
            b = ints[2 * (dim * i + j) + 1]
            row.append(Cyclotomic(3, QQ(a) * den, QQ(b) * den))
        mat.append(row)
    return mat


def unitary_reflection(normal, dim, eigen=None):
    """Order-three unitary reflection about the hyperplane normal to ``normal``.

    s(x) = x - (1 - zeta) <x, a>/<a, a> a with the standard Hermitian form.
    """
    z = zeta3()
    if eigen is None:
        eigen = z
    a = [x if isinstance(x, Cyclotomic) else Cyclotomic(3, x, 0) for x in normal]
    nrm = ZERO
    for x in a:
        nrm = nrm + (x * x.conjugate()).a
    factor_ = (Cyclotomic(3, 1, 0) - eigen)
    mat = []
    for i in range(dim):
        row = []
        for j in range(dim):
            delta = Cyclotomic(3, 1 if i == j else 0, 0)
            row.append(delta - factor_ * a[i] * a[j].conjugate() * QQ(1) / nrm)
        mat.append(row)
    return mat


def g25_generators():
    """Reflection generators for the Hessian group G25 acting on C^3."""
    z = zeta3()
    gens = [
        unitary_reflection((1, 0, 0), 3),
        unitary_reflection((0, 1, 0), 3),
        unitary_reflection((0, 0, 1), 3),
        unitary_reflection((1, 1, 1), 3),
        unitary_reflection((1, 1, z), 3),
    ]
    return gens


# -- G32 as the little Weyl group of three-forms in nine variables ---------
#
# Label a basis e_1..e_9 of C^9 by the points of the affine plane AG(2, 3),
# e_{1+x+3y} <-> (x, y).  The twelve affine lines fall into four parallel
# classes, and the Cartan basis of wedge^3 C^9 is h_k = sum of the three
# line monomials of class k (all index-sorted, sign +1):
#
#   h_1: rows y = c        h_2: columns x = c
#   h_3: slope-one lines   h_4: slope-two lines
#
# Elements of SL_9 built from quadratic-character diagonals, plane
# collineations and a finite Fourier transform normalize the span of the
# h_k; their induced 4x4 matrices generate the little Weyl group on the
# Cartan subspace.  Together with the central scalar zeta they generate a
# group whose order (155520) and hyperplane count (40) are certified by
# enumeration in the test suite.


_AG_POINTS = [(x, y) for y in range(3) for x in range(3)]
_AG_INDEX = {v: i for i, v in enumerate(_AG_POINTS)}

_H_CLASSES = (
    ((0, 1, 2), (3, 4, 5), (6, 7, 8)),
    ((0, 3, 6), (1, 4, 7), (2, 5, 8)),
    ((0, 4, 8), (1, 5, 6), (2, 3, 7)),
    ((0, 5, 7), (1, 3, 8), (2, 4, 6)),
)


def _wedge3_image(g, triple):
    """Image of e_a ^ e_b ^ e_c under a 9x9 matrix, as {sorted triple: coeff}."""
    out = {}
    cols = [[g[r][c] for r in range(9)] for c in triple]
    for a in range(9):
        xa = cols[0][a]
        if not xa:
            continue
        for b in range(9):
            if b == a:
                continue
            xb = cols[1][b]
            if not xb:
                continue
            for c in range(9):
                if c == a or c == b:
                    continue
                xc = cols[2][c]
                if not xc:
                    continue
                key = (a, b, c)
                sign = 1
                if key[0] > key[1]:
                    key = (key[1], key[0], key[2]); sign = -sign
                if key[1] > key[2]:
                    key = (key[0], key[2], key[1]); sign = -sign
                if key[0] > key[1]:
                    key = (key[1], key[0], key[2]); sign = -sign
                coeff = xa * xb * xc
                coeff = coeff if sign > 0 else -coeff
                x = out.get(key)
                if x is None:
                    out[key] = coeff
                else:
                    x = x + coeff
                    if x:
                        out[key] = x
                    else:
                        del out[key]
    return out


def _h_action_matrix(g):
    """4x4 matrix of g on the Cartan basis h_1..h_4, or None if not stable."""
    hvecs = []
    for cls in _H_CLASSES:
        v = {}
        for line in cls:
            v[tuple(sorted(line))] = Cyclotomic(3, 1, 0)
        hvecs.append(v)
    cols = []
    for k in range(4):
        img = {}
        for line in _H_CLASSES[k]:
            for key, c in _wedge3_image(g, tuple(sorted(line))).items():
                x = img.get(key)
                if x is None:
                    img[key] = c
                else:
                    x = x + c
                    if x:
                        img[key] = x
                    else:
                        del img[key]
        # solve img = sum_l col[l] * h_l using the leading monomial of each h
        col = []
        residue = dict(img)
        for l in range(4):
            lead = tuple(sorted(_H_CLASSES[l][0]))
            c = residue.get(lead, ZERO)
            col.append(c)
            if c:
                for key, x in hvecs[l].items():
                    y = residue.get(key, ZERO) - c * x
                    if y:
                        residue[key] = y
                    elif key in residue:
                        del residue[key]
        if residue:
            return None
        cols.append(col)
    return [[cols[j][i] for j in range(4)] for i in range(4)]


def _sl9_diag(qform):
    """Diagonal e_v -> zeta^(a x^2 + b xy + c y^2) e_v."""
    a, b, c = qform
    z = zeta3()
    pow_ = [Cyclotomic(3, 1, 0), z, z * z]
    mat = [[Cyclotomic(3, 0, 0)] * 9 for _ in range(9)]
    for (x, y), i in _AG_INDEX.items():
        q = (a * x * x + b * x * y + c * y * y) % 3
        mat[i][i] = pow_[q]
    return mat


def _sl9_collineation(A):
    """Permutation e_v -> e_(A v) for A in GL_2(F_3)."""
    mat = [[Cyclotomic(3, 0, 0)] * 9 for _ in range(9)]
    for (x, y), i in _AG_INDEX.items():
        w = ((A[0][0] * x + A[0][1] * y) % 3, (A[1][0] * x + A[1][1] * y) % 3)
        mat[_AG_INDEX[w]][i] = Cyclotomic(3, 1, 0)
    return mat


def _sl9_fourier():
    """Normalized finite Fourier transform of the plane (1/3 scaling)."""
    z = zeta3()
    third = Cyclotomic(3, QQ(1, 3), 0)
    pow_ = [Cyclotomic(3, 1, 0), z, z * z]
    mat = []
    for (x1, y1) in _AG_POINTS:
        row = []
        for (x2, y2) in _AG_POINTS:
            row.append(third * pow_[(x1 * x2 + y1 * y2) % 3])
        mat.append(row)
    return mat


def _det_cyc(mat, dim):
    m = [row[:] for row in mat]
    det = Cyclotomic(3, 1, 0)
    for col in range(dim):
        piv = next((r for r in range(col, dim) if m[r][col]), None)
        if piv is None:
            return Cyclotomic(3, 0, 0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        pv = m[col][col]
        det = det * pv
        inv = pv.inverse() if isinstance(pv, Cyclotomic) else 1 / pv
        m[col] = [inv * x for x in m[col]]
        for r in range(col + 1, dim):
            if m[r][col]:
                c = m[r][col]
                m[r] = [a - c * b for a, b in zip(m[r], m[col])]
    return det


def g32_generators():
    """Generators of the little Weyl group G32 on the Cartan coordinates.

    Induced by quadratic-character diagonals, plane collineations and the
    Fourier transform of AG(2, 3); determinant-(-1) candidates enter
    through their negatives, which lie in SL_9 and negate the induced
    matrix on three-forms.  The central scalar zeta is adjoined.
    """
    z = zeta3()
    cands = [
        _sl9_diag((1, 0, 0)),
        _sl9_diag((0, 0, 1)),
        _sl9_diag((0, 1, 0)),
        _sl9_collineation(((0, 2), (1, 0))),
        _sl9_collineation(((1, 1), (0, 1))),
        _sl9_collineation(((2, 0), (0, 1))),
        _sl9_fourier(),
    ]
    gens = []
    for g in cands:
        m = _h_action_matrix(g)
        if m is None:
            raise RuntimeError("candidate does not normalize the Cartan span")
        det = _det_cyc(g, 9)
        if det == 1:
            pass
        elif det == -1:
            m = [[-x for x in row] for row in m]
        else:
            raise RuntimeError("candidate is not in +-SL_9")
        gens.append(m)
    one = Cyclotomic(3, 1, 0)
    zero = Cyclotomic(3, 0, 0)
    gens.append([[z if i == j else zero for j in range(4)] for i in range(4)])
    return gens


def mat_inverse(mat, dim):
    """Inverse of a small matrix over Q or Q(zeta_3) by Gaussian elimination."""
    work = [list(row) + [Cyclotomic(3, 1, 0) if i == j else Cyclotomic(3, 0, 0)
                         for j in range(dim)] for i, row in enumerate(mat)]
    for col in range(dim):
        piv = next(r for r in range(col, dim) if work[r][col])
        work[col], work[piv] = work[piv], work[col]
        pv = work[col][col]
        inv = pv.inverse() if isinstance(pv, Cyclotomic) else 1 / pv
        work[col] = [inv * x for x in work[col]]
        for r in range(dim):
            if r != col and work[r][col]:
                c = work[r][col]
                work[r] = [a - c * b for a, b in zip(work[r], work[col])]
    return [row[dim:] for row in work]


def enumerate_group(generators, dim, limit=200000):
    """Breadth-first closure of a matrix group over Q(zeta_3); exact order.

    Returns (order, elements) with elements in the packed integer encoding;
    raises if the closure exceeds ``limit``.
    """
    gens = [_cyc_encode(g, dim) for g in generators]
    ident = _cyc_encode([[1 if i == j else 0 for j in range(dim)] for i in range(dim)], dim)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for M in frontier:
            for G in gens:
                P = _cyc_mul(M, G, dim)
                if P not in seen:
                    seen.add(P)
                    nxt.append(P)
                    if len(seen) > limit:
                        raise RuntimeError("group enumeration exceeded budget")
        frontier = nxt
    return len(seen), seen


def reflection_hyperplanes(elements, dim):
    """Distinct fixed hyperplanes of the rank-one elements g - id.

    Each is keyed by the normalized normal vector (the nonzero row of
    g - id up to scalar), as a tuple over Q(zeta_3).
    """
    normals = set()
    for M in elements:
        mat = _cyc_to_matrix(M, dim)
        rows = []
        for i in range(dim):
            row = [mat[i][j] - (1 if i == j else 0) for j in range(dim)]
            if any(row):
                rows.append(row)
        if not rows:
            continue
        first = rows[0]
        # rank-one test: every row a multiple of the first
        lead = next(i for i, x in enumerate(first) if x)
        ok = True
        for row in rows[1:]:
            ratio = row[lead] / first[lead]
            for a, b in zip(row, first):
                if a != ratio * b:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        inv = first[lead].inverse() if isinstance(first[lead], Cyclotomic) else 1 / first[lead]
        key = tuple(repr(inv * x) for x in first)
        normals.add(key)
    return normals


# ---------------------------------------------------------------------------
# Sp4(F3): independent order certificate for G32


def sp4_f3_order():
    """Order of Sp4(F3) by breadth-first closure over symplectic transvections."""
    p = 3
    dim = 4
    # Gram matrix of the symplectic form
    J = [[0, 0, 1, 0], [0, 0, 0, 1], [-1 % p, 0, 0, 0], [0, -1 % p, 0, 0]]

    def omega(x, y):
        s = 0
        for i in range(dim):
            for j in range(dim):
                s += x[i] * J[i][j] * y[j]
        return s % p

    def transvection(v, lam=1):
        cols = []
        for j in range(dim):
            e = [1 if i == j else 0 for i in range(dim)]
            w = omega(e, v)
            col = [(e[i] + lam * w * v[i]) % p for i in range(dim)]
            cols.append(col)
        # columns are images of basis vectors; store row-major
        return tuple(cols[j][i] for i in range(dim) for j in range(dim))

    def mul(A, B):
        return tuple(
            sum(A[i * dim + k] * B[k * dim + j] for k in range(dim)) % p
            for i in range(dim) for j in range(dim)
        )

    gens = []
    for v in ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
              (1, 1, 0, 0), (1, 0, 1, 0), (0, 1, 0, 1), (1, 1, 1, 1)):
        for lam in (1, 2):
            gens.append(transvection(v, lam))
    ident = tuple(1 if i == j else 0 for i in range(dim) for j in range(dim))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for M in frontier:
            for G in gens:
                P = mul(M, G)
                if P not in seen:
                    seen.add(P)
                    nxt.append(P)
        frontier = nxt
    return len(seen)


# ---------------------------------------------------------------------------
# misc group-theoretic helpers


def trace_on_span(basis_polys, image_polys):
    """Exact trace of an operator through its action on a spanning basis.

    ``image_polys[i]`` must be the image of ``basis_polys[i]`` and lie in
    the span of the basis (checked); the trace of the restriction is the
    sum of the diagonal coordinates.
    """
    from .poly import PolySpace
    space = PolySpace(basis_polys[0].names, basis_polys[0].degree(), basis_polys)
    tr = ZERO
    for b, img in zip(basis_polys, image_polys):
        coords = space.coords_of(img)
        if coords is None:
            raise ValueError("space is not stable under the operator")
        idx = space.basis.index(b)
        tr = tr + coords.get(idx, ZERO)
    return tr


def subsystem_orbit(seed_roots, all_roots, generator_roots):
    """Orbit of a subsystem (set of roots up to sign) under reflections."""
    def canon(roots):
        out = set()
        for r in roots:
            rr = r if is_positive(r) else tuple(-x for x in r)
            out.add(rr)
        return frozenset(out)

    start = canon(seed_roots)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for sub in frontier:
            for g in generator_roots:
                img = canon([reflect_vector(r, g) for r in sub])
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return seen
