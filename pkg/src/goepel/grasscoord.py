"""Normal forms for forms on Grassmannians, orthogonal Grassmannians, quadrics.

A :class:`NormalFormContext` holds the degree-d piece of the relevant
relation ideal in echelon form.  Monomials in the Pluecker (or linear)
variables are encoded as descending tuples of variable indices; the natural
tuple order on these keys is graded reverse lexicographic, and elimination
always removes the smallest key, so reduction is a linear projection onto
the span of the standard (non-pivot) monomials and in particular idempotent.

Flavors:

* ``grassmannian(k, n)`` -- quadrics on G(k, n) modulo the single-index
  shuffle syzygies, whose span is the full degree-two part of the Pluecker
  ideal (certified by the standard-monomial count in the test suite).
* ``orthogonal_split(n)`` -- quadrics on OG(2, 2n) in a hyperbolic frame
  e_0..e_{n-1}, f_0..f_{n-1}: Pluecker syzygies plus the isotropy relations
  obtained by contracting the tautological tensor with the quadratic form.
* ``orthogonal_diag(k, m)`` -- quadrics on OG(k, m) in an orthonormal
  frame: Pluecker syzygies plus sum_a p_{aJ} p_{aK}.
* ``quadric(nvars, d, q)`` -- degree-d forms on the quadric hypersurface
  q = 0, modulo q * S^(d-2).
"""

from __future__ import annotations

import os
from itertools import combinations

from .exactmath import QQ, ZERO, ONE, Echelon
from .exterior import dual_label


def subset_index_map(n, k):
    """Sorted k-subsets of range(n) and their positions."""
    subs = list(combinations(range(n), k))
    return subs, {s: i for i, s in enumerate(subs)}


def sort_sign(seq):
    """(sign, sorted tuple) of a sequence of distinct ints, or None."""
    lst = list(seq)
    if len(set(lst)) != len(lst):
        return None
    sign = 1
    for i in range(1, len(lst)):
        j = i
        while j and lst[j - 1] > lst[j]:
            lst[j - 1], lst[j] = lst[j], lst[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(lst)


class NormalFormContext:
    def __init__(self, tag, nvars, degree, relations):
        self.tag = tag
        self.nvars = nvars
        self.degree = degree
        self.ech = Echelon()
        for r in relations:
            if r:
                self.ech.insert(r)

    @property
    def relation_rank(self):
        return len(self.ech)

    def reduce(self, vec):
        """Canonical representative of a form modulo the relation span."""
        return self.ech.reduce(dict(vec))

    def reduces_to_zero(self, vec):
        return not self.reduce(vec)

    def monomial(self, var_indices, coeff=ONE):
        key = tuple(sorted(var_indices, reverse=True))
        if len(key) != self.degree:
            raise ValueError("degree mismatch")
        return {key: coeff}


def mono_mul(m1, m2):
    """Multiply two monomial keys (descending index tuples)."""
    return tuple(sorted(m1 + m2, reverse=True))


def vec_mul_mono(vec, mono):
    return {mono_mul(k, mono): c for k, c in vec.items()}


# ---------------------------------------------------------------------------
# relation generators


def _plucker_rows(k, n, index_of):
    """Single-index shuffle syzygies spanning the quadratic Pluecker ideal."""
    rows = []
    for A in combinations(range(n), k - 1):
        for D in combinations(range(n), k + 1):
            row = {}
            for i, d in enumerate(D):
                rest = D[:i] + D[i + 1:]
                sA = sort_sign(A + (d,))
                if sA is None:
                    continue
                c = sA[0] if i % 2 == 0 else -sA[0]
                key = tuple(sorted((index_of[sA[1]], index_of[rest]), reverse=True))
                x = row.get(key)
                if x is None:
                    row[key] = QQ(c)
                else:
                    x = x + c
                    if x:
                        row[key] = x
                    else:
                        del row[key]
            if row:
                rows.append(row)
    return rows


def grassmannian(k, n):
    subs, index_of = subset_index_map(n, k)
    ctx = NormalFormContext(("G", k, n), len(subs), 2, _plucker_rows(k, n, index_of))
    ctx.subsets = subs
    ctx.index_of = index_of
    return ctx


def orthogonal_diag(k, m):
    """OG(k, m) with the form sum x_i^2: isotropy sum_a p_{aJ} p_{aK} = 0."""
    subs, index_of = subset_index_map(m, k)
    rows = _plucker_rows(k, m, index_of)
    for J in combinations(range(m), k - 1):
        for K in combinations(range(m), k - 1):
            if K < J:
                continue
            row = {}
            for a in range(m):
                sJ = sort_sign(J + (a,))
                sK = sort_sign(K + (a,))
                if sJ is None or sK is None:
                    continue
                key = tuple(sorted((index_of[sJ[1]], index_of[sK[1]]), reverse=True))
                c = QQ(sJ[0] * sK[0])
                x = row.get(key)
                if x is None:
                    row[key] = c
                else:
                    x = x + c
                    if x:
                        row[key] = x
                    else:
                        del row[key]
            if row:
                rows.append(row)
    ctx = NormalFormContext(("OGdiag", k, m), len(subs), 2, rows)
    ctx.subsets = subs
    ctx.index_of = index_of
    return ctx


def orthogonal_split(n=8, cache_dir=None):
    """OG(2, 2n) in the hyperbolic frame; labels 0..n-1 = e, n..2n-1 = f.

    The relation space is the Pluecker part plus the three isotropy
    families obtained from the contraction of the tautological tensor by a
    generic linear form; together these cut out exactly the complement of
    the standard monomials of the harmonic part of S^2(wedge^2 V).
    """
    N = 2 * n
    cached = _load_cached(("OGsplit", n), cache_dir)
    if cached is not None:
        return cached
    subs, index_of = subset_index_map(N, 2)

    def sym(a, b):
        """Index and sign of the Pluecker variable for a ^ b."""
        if a == b:
            return None
        if a < b:
            return index_of[(a, b)], 1
        return index_of[(b, a)], -1

    def add(row, va, vb, c):
        if va is None or vb is None:
            return
        ia, sa = va
        ib, sb = vb
        key = (ia, ib) if ia >= ib else (ib, ia)
        c = c * sa * sb
        x = row.get(key)
        if x is None:
            row[key] = QQ(c)
        else:
            x = x + c
            if x:
                row[key] = x
            else:
                del row[key]

    rows = _plucker_rows(2, N, index_of)
    E = lambda i: i
    F = lambda i: n + i
    for i in range(n):
        for j in range(i, n):
            r1, r2 = {}, {}
            for k in range(n):
                # sum_k (e_i e_k)(e_j f_k) + (e_j e_k)(e_i f_k)
                add(r1, sym(E(i), E(k)), sym(E(j), F(k)), 1)
                add(r1, sym(E(j), E(k)), sym(E(i), F(k)), 1)
                # sum_k (f_i f_k)(f_j e_k) + (f_j f_k)(f_i e_k)
                add(r2, sym(F(i), F(k)), sym(F(j), E(k)), 1)
                add(r2, sym(F(j), F(k)), sym(F(i), E(k)), 1)
            rows.append(r1)
            rows.append(r2)
    for i in range(n):
        for j in range(n):
            r3 = {}
            for k in range(n):
                # sum_k (e_i e_k)(f_j f_k) - (e_i f_k)(e_k f_j)
                add(r3, sym(E(i), E(k)), sym(F(j), F(k)), 1)
                add(r3, sym(E(i), F(k)), sym(E(k), F(j)), -1)
            rows.append(r3)
    ctx = NormalFormContext(("OGsplit", n), len(subs), 2, rows)
    ctx.subsets = subs
    ctx.index_of = index_of
    ctx.frame_n = n
    _store_cached(ctx, cache_dir)
    return ctx


def quadric(nvars, degree, q_monomials, tag="Q"):
    """Degree-d forms modulo q * S^(d-2); q given as {descending pair: coeff}.

    Variable 0 is the largest in the monomial order, so choosing the
    variable numbering controls which squares get eliminated.
    """
    rows = []
    lower = _monomials(nvars, degree - 2)
    for m in lower:
        row = {}
        for k, c in q_monomials.items():
            key = mono_mul(k, m)
            x = row.get(key)
            if x is None:
                row[key] = c
            else:
                x = x + c
                if x:
                    row[key] = x
                else:
                    del row[key]
        rows.append(row)
    return NormalFormContext((tag, nvars, degree), nvars, degree, rows)


def _monomials(nvars, d):
    """All degree-d monomial keys (descending index tuples with repeats)."""
    out = []

    def rec(start, left, acimed):
        if left == 0:
            out.append(tuple(acimed))
            return
        for v in range(start, nvars):
            acimed.append(v)
            rec(v, left - 1, acimed)
            acimed.pop()

    rec(0, d, [])
    return [tuple(sorted(m, reverse=True)) for m in out]


# ---------------------------------------------------------------------------
# the two contraction maps of the sixteen-dimensional story


def _splittings(key):
    """All (pair, rest, sign) splittings of a sorted 4-tuple into 2+2."""
    out = []
    idx = range(4)
    for a, b in combinations(idx, 2):
        rest = tuple(key[i] for i in idx if i not in (a, b))
        pair = (key[a], key[b])
        # sign of the permutation moving the pair to the front
        sign = 1 if (a, b) in ((0, 1), (0, 3), (1, 2), (2, 3)) else -1
        out.append((pair, rest, sign))
    return out


def zeta(m1, m2, ctx):
    """Contraction S^2(wedge^4 V) -> quadrics on OG(2, 2n), unreduced.

    Both arguments are degree-four multivectors over the 2n frame labels;
    each is split into a 2-subset contracted against the other through the
    hyperbolic form and a residual Pluecker symbol.  The output is a
    quadric dict over the Pluecker variables of ``ctx`` (call
    ``ctx.reduce`` for the normal form).  The sign is normalized so that
    zeta(e_ij f_ij, e_ik f_ik) = (e_jf_j)(e_kf_k) for distinct j, k.
    """
    n = ctx.frame_n
    index_of = ctx.index_of
    out = {}
    split2 = {}
    for k2, c2 in m2.terms.items():
        for pair, rest, sign in _splittings(k2):
            split2.setdefault(frozenset(pair), []).append((c2, pair, rest, sign))
    for k1, c1 in m1.terms.items():
        for pair1, rest1, sign1 in _splittings(k1):
            a, b = pair1
            da, db = dual_label(a, n), dual_label(b, n)
            hits = split2.get(frozenset((da, db)))
            if not hits:
                continue
            i1 = index_of[rest1]
            for c2, pair2, rest2, sign2 in hits:
                c, d = pair2
                det = 1 if (c == da and d == db) else -1
                i2 = index_of[rest2]
                key = (i1, i2) if i1 >= i2 else (i2, i1)
                # overall minus fixes the printed contraction values
                coeff = -(c1 * c2) * (sign1 * sign2 * det)
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


def eta2(q1, q2, nvars=16, n=8):
    """Double contraction S^2(S_<2,2>V) -> quartics on the ambient quadric.

    Inputs are quadric dicts over Pluecker pair-variables of OG(2, 2n)
    (keys: descending pairs of 2-subset indices, as produced by ``zeta``);
    ``subsets`` of the corresponding context are the label 2-subsets.  One
    vector of each Pluecker symbol on one side is contracted with one on
    the other side; the remaining four frame vectors multiply out to a
    quartic monomial in the 2n linear coordinates (label l becomes the
    coordinate dual to l).  Unreduced; reduce mod q * S^2 afterwards.
    """
    subs, _ = subset_index_map(2 * n, 2)
    out = {}
    for (p1, p2), c1 in q1.items():
        A, B = subs[p1], subs[p2]
        for (p3, p4), c2 in q2.items():
            C, D = subs[p3], subs[p4]
            c = c1 * c2
            for X, Y in ((C, D), (D, C)):
                for ia in range(2):
                    for ix in range(2):
                        if X[ix] != dual_label(A[ia], n):
                            continue
                        for ib in range(2):
                            for iy in range(2):
                                if Y[iy] != dual_label(B[ib], n):
                                    continue
                                mono = (dual_label(A[1 - ia], n),
                                        dual_label(B[1 - ib], n),
                                        dual_label(X[1 - ix], n),
                                        dual_label(Y[1 - iy], n))
                                key = tuple(sorted(mono, reverse=True))
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


# ---------------------------------------------------------------------------
# context cache


_CACHE_VERSION = "1"


def _cache_path(tag, cache_dir):
    if cache_dir is None:
        cache_dir = os.environ.get("GOEPEL_CACHE_DIR",
                                   os.path.join(os.path.expanduser("~"), ".cache", "goepel"))
    name = "ctx_" + "_".join(str(t) for t in tag) + "_v" + _CACHE_VERSION + ".txt"
    return os.path.join(cache_dir, name)


def _store_cached(ctx, cache_dir=None):
    path = _cache_path(ctx.tag, cache_dir)
    try:
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, "w") as fh:
            fh.write("%s %d %d\n" % ("_".join(str(t) for t in ctx.tag), ctx.nvars, ctx.degree))
            for pivot in sorted(ctx.ech.rows):
                row = ctx.ech.rows[pivot]
                bits = ["|".join(str(i) for i in pivot)]
                for k in sorted(row):
                    bits.append("%s:%s" % ("|".join(str(i) for i in k), row[k]))
                fh.write(" ".join(bits) + "\n")
    except OSError:
        pass


def _load_cached(tag, cache_dir=None):
    path = _cache_path(tag, cache_dir)
    if not os.path.exists(path):
        return None
    try:
        with open(path) as fh:
            header = fh.readline().split()
            nvars, degree = int(header[1]), int(header[2])
            ctx = NormalFormContext(tag, nvars, degree, [])
            for line in fh:
                bits = line.split()
                row = {}
                for kv in bits[1:]:
                    kk, vv = kv.split(":")
                    row[tuple(int(x) for x in kk.split("|"))] = QQ(vv)
                pivot = tuple(int(x) for x in bits[0].split("|"))
                ctx.ech.rows[pivot] = row
    except (OSError, ValueError, IndexError):
        return None
    if tag[0] == "OGsplit":
        n = tag[1]
        subs, index_of = subset_index_map(2 * n, 2)
        ctx.subsets = subs
        ctx.index_of = index_of
        ctx.frame_n = n
    return ctx
