"""Exterior algebra over a named frame, Clifford action on spinors.

A :class:`Multivector` stores a sparse map from strictly increasing index
tuples into a frame of basis symbols to exact scalars.  Writing an unsorted
wedge monomial sorts the indices and multiplies by the permutation sign.

The split-orthogonal conventions used throughout:

* ``V`` has a hyperbolic frame ``e_0..e_{n-1}, f_0..f_{n-1}`` encoded as
  integer labels ``0..n-1`` (e part) and ``n..2n-1`` (f part); the pairing
  is ``<e_i, f_j> = delta_ij`` and the e/f parts are isotropic.
* Spinors live in the exterior algebra of the e-frame; ``e_i`` acts by
  wedge and ``f_i`` by contraction, so ``(e_i + f_i)^2 = 1``.
* Contraction by a dual monomial applies its indices in increasing order,
  innermost first, each single contraction removing the j-th slot with
  sign ``(-1)^(j-1)``.
* A sorted tuple of pairwise distinct frame vectors acts on spinors by the
  alternating (antisymmetrized) product of the single Clifford actions.
"""

from __future__ import annotations

from itertools import permutations

from .exactmath import QQ, ZERO, ONE, Cyclotomic


def merge_sign(a, b):
    """Concatenate two strictly increasing tuples; (sign, merged) or None."""
    if not a:
        return 1, b
    if not b:
        return 1, a
    out = []
    i = j = 0
    sign = 1
    la, lb = len(a), len(b)
    while i < la and j < lb:
        x, y = a[i], b[j]
        if x == y:
            return None
        if x < y:
            out.append(x)
            i += 1
        else:
            out.append(y)
            j += 1
            if (la - i) & 1:
                sign = -sign
    out.extend(a[i:])
    out.extend(b[j:])
    return sign, tuple(out)


class Multivector:
    __slots__ = ("size", "terms")

    def __init__(self, size, terms=None):
        self.size = size
        self.terms = {} if terms is None else terms

    @classmethod
    def zero(cls, size):
        return cls(size, {})

    @classmethod
    def basis(cls, size, indices, c=ONE):
        """Wedge monomial on the given (possibly unsorted) indices."""
        idx = tuple(indices)
        if len(set(idx)) != len(idx):
            return cls(size, {})
        sign = 1
        lst = list(idx)
        # insertion sort, counting transpositions
        for i in range(1, len(lst)):
            j = i
            while j and lst[j - 1] > lst[j]:
                lst[j - 1], lst[j] = lst[j], lst[j - 1]
                sign = -sign
                j -= 1
        if not isinstance(c, Cyclotomic):
            c = QQ(c)
        return cls(size, {tuple(lst): c if sign > 0 else -c})

    def copy(self):
        return Multivector(self.size, dict(self.terms))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other):
        if self.size != other.size:
            raise ValueError("frame size mismatch")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            x = terms.get(k)
            if x is None:
                terms[k] = c
            else:
                x = x + c
                if x:
                    terms[k] = x
                else:
                    del terms[k]
        return Multivector(self.size, terms)

    def __neg__(self):
        return Multivector(self.size, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        if not c:
            return Multivector(self.size, {})
        return Multivector(self.size, {k: c * x for k, x in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Multivector) and self.size == other.size and self.terms == other.terms

    def wedge(self, other):
        self._check(other)
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                m = merge_sign(k1, k2)
                if m is None:
                    continue
                sign, key = m
                c = c1 * c2 if sign > 0 else -(c1 * c2)
                x = out.get(key)
                if x is None:
                    out[key] = c
                else:
                    x = x + c
                    if x:
                        out[key] = x
                    else:
                        del out[key]
        return Multivector(self.size, out)

    def contract_index(self, i):
        """Interior product by the dual of frame vector i."""
        out = {}
        for k, c in self.terms.items():
            for pos, idx in enumerate(k):
                if idx == i:
                    key = k[:pos] + k[pos + 1:]
                    cc = c if pos % 2 == 0 else -c
                    x = out.get(key)
                    if x is None:
                        out[key] = cc
                    else:
                        x = x + cc
                        if x:
                            out[key] = x
                        else:
                            del out[key]
                    break
        return Multivector(self.size, out)

    def contract(self, dual):
        """Interior product by a dual multivector over the same frame.

        Each dual monomial applies its indices in increasing order with the
        innermost contraction first.
        """
        self._check(dual)
        out = Multivector.zero(self.size)
        for k, c in dual.terms.items():
            m = self
            for i in k:
                m = m.contract_index(i)
            out = out + m * c
        return out

    def component(self, degree):
        return Multivector(self.size, {k: c for k, c in self.terms.items() if len(k) == degree})

    def degrees(self):
        return sorted({len(k) for k in self.terms})

    def coefficient(self, indices):
        m = Multivector.basis(self.size, indices)
        if not m.terms:
            return ZERO
        (k, s), = m.terms.items()
        return self.terms.get(k, ZERO) * s

    def text(self, names):
        if not self.terms:
            return "0"
        bits = []
        for k in sorted(self.terms, key=lambda t: (len(t), t)):
            c = self.terms[k]
            mono = "".join(names[i] for i in k) if k else "1"
            cs = str(c)
            piece = mono if cs == "1" else ("-" + mono if cs == "-1" else cs + "*" + mono)
            if bits and not piece.startswith("-"):
                bits.append("+" + piece)
            else:
                bits.append(piece)
        return "".join(bits)

    def __repr__(self):
        return self.text(["x%d" % i for i in range(self.size)])


# ---------------------------------------------------------------------------
# split hyperbolic frame e_0..e_{n-1}, f_0..f_{n-1} and the Clifford module


def e_label(i, n=8):
    return i


def f_label(i, n=8):
    return n + i


def dual_label(i, n=8):
    return (i + n) % (2 * n)


def pairing(i, j, n=8):
    """<v_i, v_j> for frame labels: 1 on dual e/f pairs, else 0."""
    return ONE if j == dual_label(i, n) else ZERO


def label_text(i, n=8):
    return ("e%d" % i) if i < n else ("f%d" % (i - n))


def clifford_mul_label(i, s, n=8):
    """Clifford product of the frame vector with label i and spinor s."""
    if i < n:
        return Multivector.basis(n, (i,)).wedge(s)
    return s.contract_index(i - n)


def clifford_mul(v, s, n=8):
    """Clifford product of v = {label: coeff} in V with a spinor s."""
    out = Multivector.zero(n)
    for i, c in v.items():
        if c:
            out = out + clifford_mul_label(i, s, n) * c
    return out


def clifford_chain(labels, s, n=8):
    """Ordered Clifford product c(v_{l1}) ... c(v_{lk}) s, rightmost first."""
    for i in reversed(labels):
        s = clifford_mul_label(i, s, n)
    return s


def gamma_action(labels, s, n=8):
    """Antisymmetrized Clifford action of the wedge of the given labels.

    For pairwise non-dual labels the ordered product is already
    alternating; otherwise all permutations are averaged with signs.
    """
    duals = {dual_label(i, n) for i in labels}
    if not duals.intersection(labels):
        return clifford_chain(labels, s, n)
    out = Multivector.zero(n)
    k = len(labels)
    fact = 1
    for m in range(2, k + 1):
        fact *= m
    inv = QQ(1) / fact
    for perm in permutations(range(k)):
        sign = 1
        for a in range(k):
            for b in range(a + 1, k):
                if perm[a] > perm[b]:
                    sign = -sign
        t = clifford_chain([labels[p] for p in perm], s, n)
        out = out + t * (inv if sign > 0 else -inv)
    return out


def spinor_pair(s, t, n=8):
    """Invariant pairing on the spinor module: top coefficient of s wedge t."""
    top = tuple(range(n))
    val = ZERO
    for k1, c1 in s.terms.items():
        need = len(top) - len(k1)
        for k2, c2 in t.terms.items():
            if len(k2) != need:
                continue
            m = merge_sign(k1, k2)
            if m is None:
                continue
            sign, key = m
            if key == top:
                val = val + (c1 * c2 if sign > 0 else -(c1 * c2))
    return val


def beta2(h, hp, n=8):
    """Degree-two bracket of two spinors, as a 2-vector over the V frame.

    Sum over frame pairs i<j of <gamma(a_i wedge a_j) h, h'> b_i wedge b_j
    where (b_i) is the pairing-dual frame (e and f parts swapped).
    """
    N = 2 * n
    out = {}
    for i in range(N):
        for j in range(i + 1, N):
            v = gamma_action((i, j), h, n)
            c = spinor_pair(v, hp, n)
            if c:
                di, dj = dual_label(i, n), dual_label(j, n)
                if di > dj:
                    di, dj = dj, di
                    c = -c
                key = (di, dj)
                x = out.get(key)
                out[key] = c if x is None else x + c
    return Multivector(N, {k: c for k, c in out.items() if c})


def eta(s, t, n=8):
    """Symmetric degree-four pairing of spinors, as a 4-vector over V.

    One half of the symmetrized sum over frame 4-subsets Q of
    <delta_1, gamma(a_Q) delta_2> b_Q.
    """
    from itertools import combinations

    N = 2 * n
    half = QQ(1) / 2
    out = {}
    for Q in combinations(range(N), 4):
        v1 = gamma_action(Q, t, n)
        c = spinor_pair(s, v1, n)
        if s is not t:
            v2 = gamma_action(Q, s, n)
            c = c + spinor_pair(t, v2, n)
        else:
            c = c + c
        if not c:
            continue
        duals = sorted(dual_label(i, n) for i in Q)
        sign = 1
        lst = [dual_label(i, n) for i in Q]
        for a in range(len(lst)):
            for b in range(a + 1, len(lst)):
                if lst[a] > lst[b]:
                    sign = -sign
        c = c * half
        key = tuple(duals)
        out[key] = out.get(key, ZERO) + (c if sign > 0 else -c)
    return Multivector(N, {k: c for k, c in out.items() if c})


# ---------------------------------------------------------------------------
# lifts of signed frame permutations to the spinor module


def clifford_lift(g, n=8):
    """Lift an orthogonal signed frame permutation to the spinor module.

    ``g`` maps each frame label to ``(sign, label)``.  The returned
    operator is a signed basis permutation of the exterior algebra of the
    e-frame, as a dict  basis tuple -> (coeff, basis tuple).  Raises if g
    is not orthogonal or if some image degenerates.
    """
    N = 2 * n
    # orthogonality: pairings must be preserved
    for i in range(N):
        si, gi = g[i]
        sj, gj = g[dual_label(i, n)]
        if gj != dual_label(gi, n) or si * sj != 1:
            raise ValueError("signed permutation is not orthogonal")
    # pure spinor of g(F): e-labels appearing in the image of the f-frame
    A = sorted(g[n + i][1] for i in range(n) if g[n + i][1] < n)
    sigma0 = Multivector.basis(n, tuple(A))
    op = {}
    from itertools import combinations

    for deg in range(n + 1):
        for S in combinations(range(n), deg):
            s = sigma0
            for i in reversed(S):
                sign, lab = g[i]
                s = clifford_mul_label(lab, s, n)
                if sign < 0:
                    s = -s
            if len(s.terms) != 1:
                raise ValueError("lift image is not a signed basis vector")
            (key, c), = s.terms.items()
            op[S] = (c, key)
    return op


def lift_matches(g, op, n=8):
    """Check U c(v) = c(g v) U on every frame vector and basis spinor."""
    from itertools import combinations

    N = 2 * n
    for i in range(N):
        sign, lab = g[i]
        for deg in range(n + 1):
            for S in combinations(range(n), deg):
                s = Multivector.basis(n, S)
                lhs = apply_lift(op, clifford_mul_label(i, s, n), n)
                rhs = clifford_mul_label(lab, apply_lift(op, s, n), n)
                if sign < 0:
                    rhs = -rhs
                if lhs != rhs:
                    return False
    return True


def apply_lift(op, s, n=8):
    out = {}
    for k, c in s.terms.items():
        cc, key = op[k]
        c = c * cc
        x = out.get(key)
        if x is None:
            out[key] = c
        else:
            x = x + c
            if x:
                out[key] = x
            else:
                del out[key]
    return Multivector(n, out)


# ---------------------------------------------------------------------------
# the symmetric square map for three-forms in nine variables


def phi_sl9(w1, w2):
    """Polarized pairing of three-forms: values in V_9 tensor wedge^5 V_9.

    On decomposables (a1^a2^a3, b1^b2^b3) each tensor slot contributes its
    three cyclic terms a_i ox (a_j ^ a_k ^ b); the two slots are averaged,
    which matches the worked products h_i h_j of the nine-dimensional case.
    """
    out = {}
    half = QQ(1) / 2
    for (m1, c1) in w1.terms.items():
        for (m2, c2) in w2.terms.items():
            c = c1 * c2 * half
            for a, b in ((m1, m2), (m2, m1)):
                for t in range(3):
                    i = a[t]
                    rest = a[:t] + a[t + 1:]
                    if t == 1:
                        rest = (a[2], a[0])
                    m = merge_sign(tuple(sorted(rest)), b)
                    if m is None:
                        continue
                    sign, key = m
                    if rest[0] > rest[1]:
                        sign = -sign
                    cc = c if sign > 0 else -c
                    k = (i, key)
                    x = out.get(k)
                    if x is None:
                        out[k] = cc
                    else:
                        x = x + cc
                        if x:
                            out[k] = x
                        else:
                            del out[k]
    return out
