"""Exact scalars and exact sparse linear algebra.

Scalars are arbitrary-precision rationals (gmpy2.mpq, with a pure-python
fallback) or elements of the cyclotomic fields Q(zeta_3), Q(zeta_4).  All
linear algebra in this package runs over these fields with no rounding
anywhere; ranks, kernels and span closures are therefore exact.

Vectors are sparse dicts mapping a column label to a nonzero scalar.
Column labels must be totally ordered by Python's native ``<`` (ints, or
tuples of ints); elimination always pivots on the smallest label present,
which makes every computation deterministic.
"""

from __future__ import annotations

import heapq

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    from fractions import Fraction as QQ

ZERO = QQ(0)
ONE = QQ(1)


def qq(x):
    """Coerce an int, string or rational to the rational scalar type."""
    return QQ(x)


class Cyclotomic:
    """Element a + b*zeta of Q(zeta_n) for n in {3, 4}.

    The power basis is (1, zeta) with zeta^2 = -1 - zeta for n = 3 and
    zeta^2 = -1 for n = 4.  Rationals coerce transparently, so matrices may
    mix rational and cyclotomic entries as long as a single n is involved.
    """

    __slots__ = ("n", "a", "b")

    def __init__(self, n, a=0, b=0):
        if n not in (3, 4):
            raise ValueError("only Q(zeta_3) and Q(zeta_4) are supported")
        self.n = n
        self.a = QQ(a)
        self.b = QQ(b)

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.n != self.n:
                raise ValueError("mixed cyclotomic orders %d and %d" % (self.n, other.n))
            return other
        return Cyclotomic(self.n, other, 0)

    def __add__(self, other):
        o = self._coerce(other)
        return Cyclotomic(self.n, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, -self.a, -self.b)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        a1, b1, a2, b2 = self.a, self.b, o.a, o.b
        if self.n == 3:
            # zeta^2 = -1 - zeta
            return Cyclotomic(3, a1 * a2 - b1 * b2, a1 * b2 + a2 * b1 - b1 * b2)
        return Cyclotomic(4, a1 * a2 - b1 * b2, a1 * b2 + a2 * b1)

    __rmul__ = __mul__

    def conjugate(self):
        if self.n == 3:
            return Cyclotomic(3, self.a - self.b, -self.b)
        return Cyclotomic(4, self.a, -self.b)

    def norm(self):
        """Field norm to Q, as a rational."""
        if self.n == 3:
            return self.a * self.a - self.a * self.b + self.b * self.b
        return self.a * self.a + self.b * self.b

    def inverse(self):
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("cyclotomic division by zero")
        c = self.conjugate()
        return Cyclotomic(self.n, c.a / nrm, c.b / nrm)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.n == other.n and self.a == other.a and self.b == other.b
        return self.b == 0 and self.a == other

    def __bool__(self):
        return bool(self.a != 0 or self.b != 0)

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.n, self.a, self.b))

    def __repr__(self):
        if self.b == 0:
            return str(self.a)
        return "(%s + %s*z%d)" % (self.a, self.b, self.n)


def zeta3():
    return Cyclotomic(3, 0, 1)


def zeta4():
    return Cyclotomic(4, 0, 1)


# ---------------------------------------------------------------------------
# sparse vectors


def vec_scale(v, c):
    return {k: c * x for k, x in v.items()}


def vec_axpy(u, v, c):
    """In place u += c*v, dropping cancellations.  Returns u."""
    for k, x in v.items():
        y = u.get(k)
        if y is None:
            u[k] = c * x
        else:
            y = y + c * x
            if y:
                u[k] = y
            else:
                del u[k]
    return u


def vec_add(u, v):
    return vec_axpy(dict(u), v, ONE)


def vec_sub(u, v):
    return vec_axpy(dict(u), v, -ONE)


# ---------------------------------------------------------------------------
# echelon structures


class Echelon:
    """Growing family of independent sparse rows in echelon form.

    Each stored row is normalized so its smallest column label (the pivot)
    has coefficient 1, and contains no pivot label of any other row.  Rows
    are fully inter-reduced only lazily: reduction of an incoming vector
    eliminates pivots in ascending label order, which already yields the
    unique normal form modulo the row span.
    """

    def __init__(self):
        self.rows = {}  # pivot label -> row dict

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec):
        """Return the normal form of ``vec`` modulo the stored row space.

        The input dict is consumed.  Elimination proceeds by ascending
        column label; every subtracted row only contributes labels larger
        than its pivot, so a single heap sweep terminates.
        """
        rows = self.rows
        heap = [k for k in vec if k in rows]
        heapq.heapify(heap)
        while heap:
            k = heapq.heappop(heap)
            c = vec.get(k)
            if not c:
                continue
            row = rows[k]
            del vec[k]
            for kk, x in row.items():
                if kk == k:
                    continue
                y = vec.get(kk)
                if y is None:
                    vec[kk] = -c * x
                    if kk in rows:
                        heapq.heappush(heap, kk)
                else:
                    y = y - c * x
                    if y:
                        vec[kk] = y
                    else:
                        del vec[kk]
        return vec

    def insert(self, vec):
        """Reduce ``vec`` and adjoin it if independent.

        Returns the new pivot label, or None when the vector was already in
        the span.
        """
        vec = self.reduce(dict(vec))
        if not vec:
            return None
        p = min(vec)
        c = vec[p]
        if c != 1:
            inv = 1 / c if not isinstance(c, Cyclotomic) else c.inverse()
            vec = {k: inv * x for k, x in vec.items()}
            vec[p] = ONE
        self.rows[p] = vec
        return p

    def contains(self, vec):
        return not self.reduce(dict(vec))


def echelon_from_rows(rows):
    ech = Echelon()
    for r in rows:
        if r:
            ech.insert(r)
    return ech


def rank(rows):
    """Exact rank of a list of sparse rows."""
    return len(echelon_from_rows(rows))


def kernel_basis(rows, ncols):
    """Exact basis of the right kernel of the matrix with the given rows.

    Columns are labelled 0..ncols-1.  The basis is the reduced one attached
    to the free columns in increasing order, so it is deterministic.
    """
    ech = echelon_from_rows({c: x for c, x in enumerate(row) if x}
                            if isinstance(row, (list, tuple)) else row
                            for row in rows)
    pivots = sorted(ech.rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    # back substitution: express each pivot variable in terms of free ones
    basis = []
    for f in free:
        sol = {f: ONE}
        for p in reversed(pivots):
            row = ech.rows[p]
            s = ZERO
            for c, x in row.items():
                if c == p:
                    continue
                v = sol.get(c)
                if v is not None:
                    s = s + x * v
            if s:
                sol[p] = -s
        basis.append(sol)
    return basis


def solve(rows, rhs, ncols):
    """One exact solution x of A x = b, or None if inconsistent.

    ``rows`` are the sparse rows of A, ``rhs`` the of right-hand sides.
    Free variables are set to zero.
    """
    ech = Echelon()
    aug = []
    ncol_aug = ncols  # rhs gets column label ncols
    for row, b in zip(rows, rhs):
        r = dict(row)
        if b:
            r[ncol_aug] = b
        aug.append(r)
    for r in aug:
        ech.insert(r)
    if ncol_aug in ech.rows:
        return None
    pivots = sorted(ech.rows)
    sol = {}
    for p in reversed(pivots):
        row = ech.rows[p]
        s = row.get(ncol_aug, ZERO)
        for c, x in row.items():
            if c in (p, ncol_aug):
                continue
            v = sol.get(c)
            if v is not None:
                s = s + x * v
        if s:
            sol[p] = -s
    return sol


def span_closure(seeds, operators, apply_op=None):
    """Deterministic basis of the smallest operator-stable span of the seeds.

    ``operators`` act on sparse vectors either as callables or, when
    ``apply_op`` is given, through ``apply_op(op, vec)``.  Seeds and images
    are processed first-in first-out; elimination pivots on the first
    (smallest) nonzero column, so the output basis only depends on the
    input order.
    """
    if apply_op is None:
        apply_op = lambda op, v: op(v)
    ech = Echelon()
    basis = []
    queue = []
    for s in seeds:
        v = ech.reduce(dict(s))
        if v:
            p = min(v)
            c = v[p]
            inv = 1 / c if not isinstance(c, Cyclotomic) else c.inverse()
            v = {k: inv * x for k, x in v.items()}
            ech.rows[p] = v
            basis.append(v)
            queue.append(v)
    i = 0
    while i < len(queue):
        v = queue[i]
        i += 1
        for op in operators:
            w = ech.reduce(apply_op(op, v))
            if w:
                p = min(w)
                c = w[p]
                inv = 1 / c if not isinstance(c, Cyclotomic) else c.inverse()
                w = {k: inv * x for k, x in w.items()}
                ech.rows[p] = w
                basis.append(w)
                queue.append(w)
    return basis


def invariant_subspace(operators, dim):
    """Exact basis of the joint fixed space of square operators.

    Operators are given as dense row lists (op[i][j] = matrix entry) or as
    dicts mapping (i, j) to entries; the fixed space is the intersection of
    the kernels of (op - id) on column vectors of length ``dim``.
    """
    rows = []
    for op in operators:
        if isinstance(op, dict):
            mat = [[ZERO] * dim for _ in range(dim)]
            for (i, j), x in op.items():
                mat[i][j] = x
        else:
            mat = op
        for i in range(dim):
            row = {}
            for j in range(dim):
                x = mat[i][j]
                if i == j:
                    x = x - ONE
                if x:
                    row[j] = x
            if row:
                rows.append(row)
    return kernel_basis(rows, dim)
