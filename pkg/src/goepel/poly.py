"""Multivariate polynomials over exact scalars.

A :class:`Poly` carries an ordered tuple of variable names and a sparse
``{exponent tuple: coefficient}`` map.  Names are part of the value: mixing
polynomials over different variable tuples raises, which keeps the many
coordinate systems of this package (c-variables, Pluecker variables,
octonion coordinates, ...) from silently aliasing each other.

Monomials are ordered by graded reverse lexicographic order with respect to
the declared variable order; the canonical text form sorts terms that way.
"""

from __future__ import annotations

from .exactmath import QQ, ZERO, ONE, Cyclotomic, qq


def grevlex_key(expt):
    """Sort key: ascending order of keys = descending grevlex order."""
    return (-sum(expt), tuple(expt[::-1]))


class Poly:
    __slots__ = ("names", "terms")

    def __init__(self, names, terms=None):
        self.names = tuple(names)
        self.terms = {} if terms is None else terms

    # construction ---------------------------------------------------------

    @classmethod
    def zero(cls, names):
        return cls(names, {})

    @classmethod
    def constant(cls, names, c):
        c = c if isinstance(c, Cyclotomic) else qq(c)
        if not c:
            return cls(names, {})
        return cls(names, {(0,) * len(names): c})

    @classmethod
    def variable(cls, names, name):
        i = tuple(names).index(name)
        e = [0] * len(names)
        e[i] = 1
        return cls(names, {tuple(e): ONE})

    @classmethod
    def monomial(cls, names, expt, c=1):
        c = c if isinstance(c, Cyclotomic) else qq(c)
        if not c:
            return cls(names, {})
        return cls(names, {tuple(expt): c})

    def copy(self):
        return Poly(self.names, dict(self.terms))

    # predicates -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def _check(self, other):
        if self.names != other.names:
            raise ValueError("variable mismatch: %r vs %r" % (self.names, other.names))

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.names, other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            x = terms.get(e)
            if x is None:
                terms[e] = c
            else:
                x = x + c
                if x:
                    terms[e] = x
                else:
                    del terms[e]
        return Poly(self.names, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.names, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.names, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = other if isinstance(other, Cyclotomic) else qq(other)
            if not c:
                return Poly(self.names, {})
            return Poly(self.names, {e: c * x for e, x in self.terms.items()})
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        n = len(self.names)
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(e1[i] + e2[i] for i in range(n))
                c = c1 * c2
                x = out.get(e)
                if x is None:
                    out[e] = c
                else:
                    x = x + c
                    if x:
                        out[e] = x
                    else:
                        del out[e]
        return Poly(self.names, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = Poly.constant(self.names, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return self.degree() <= 0 and self.terms.get((0,) * len(self.names), ZERO) == other
        return self.names == other.names and self.terms == other.terms

    def __hash__(self):
        return hash((self.names, frozenset(self.terms.items())))

    # extraction -----------------------------------------------------------

    def coefficient_of(self, expt):
        """Exact coefficient of the given exponent tuple (zero if absent)."""
        return self.terms.get(tuple(expt), ZERO)

    def coefficient_poly(self, var_indices, expt):
        """Collect the coefficient of a monomial in a subset of variables.

        Returns the polynomial (in all variables, supported off the chosen
        ones) multiplying prod(x_i^expt_i) over the listed variable indices.
        """
        out = {}
        for e, c in self.terms.items():
            if all(e[i] == k for i, k in zip(var_indices, expt)):
                e2 = list(e)
                for i in var_indices:
                    e2[i] = 0
                e2 = tuple(e2)
                x = out.get(e2)
                out[e2] = c if x is None else x + c
        return Poly(self.names, {e: c for e, c in out.items() if c})

    def evaluate(self, point):
        """Exact value at a point given as a sequence of scalars."""
        total = ZERO
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                if k:
                    v = v * point[i] ** k
            total = total + v
        return total

    # substitution and linear change of variables --------------------------

    def substitute(self, assignment):
        """Exact composite under a map variable name -> Poly.

        Every variable of ``self`` must be covered; the target variable
        tuple is taken from the assignment values (all must agree).
        """
        images = [assignment[name] for name in self.names]
        target = images[0].names
        out = Poly.zero(target)
        for e, c in self.terms.items():
            term = Poly.constant(target, c)
            for i, k in enumerate(e):
                for _ in range(k):
                    term = term * images[i]
            out = out + term
        return out

    def linear_action(self, g):
        """Compose with the linear substitution x_i -> sum_j g[j][i] x_j.

        ``g`` is a square matrix (list of rows) of size len(names); acting
        by g then by h agrees with acting by the product h*g.
        """
        n = len(self.names)
        if len(g) != n or any(len(row) != n for row in g):
            raise ValueError("matrix size does not match variable count")
        forms = []
        for i in range(n):
            form = {}
            for j in range(n):
                c = g[j][i]
                if c:
                    form[j] = c
            forms.append(form)
        out = {}
        for e, c in self.terms.items():
            prod = {(0,) * n: c}
            for i, k in enumerate(e):
                for _ in range(k):
                    prod = _mul_linear(prod, forms[i], n)
            for ee, cc in prod.items():
                x = out.get(ee)
                if x is None:
                    out[ee] = cc
                else:
                    x = x + cc
                    if x:
                        out[ee] = x
                    else:
                        del out[ee]
        return Poly(self.names, out)

    # presentation ---------------------------------------------------------

    def vec(self):
        """Sparse coefficient vector keyed by exponent tuple."""
        return dict(self.terms)

    def text(self):
        """Canonical "+/-coef*monomial" form, grevlex-sorted."""
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, key=grevlex_key):
            c = self.terms[e]
            mono = "*".join(
                self.names[i] if k == 1 else "%s^%d" % (self.names[i], k)
                for i, k in enumerate(e) if k
            )
            cs = str(c)
            if mono:
                piece = mono if cs == "1" else ("-" + mono if cs == "-1" else cs + "*" + mono)
            else:
                piece = cs
            if bits and not piece.startswith("-"):
                bits.append("+" + piece)
            else:
                bits.append(piece)
        return "".join(bits)

    __repr__ = text


def _mul_linear(prod, form, n):
    out = {}
    for e, c in prod.items():
        for j, a in form.items():
            e2 = list(e)
            e2[j] += 1
            e2 = tuple(e2)
            cc = c * a
            x = out.get(e2)
            if x is None:
                out[e2] = cc
            else:
                x = x + cc
                if x:
                    out[e2] = x
                else:
                    del out[e2]
    return out


def monomials_of_degree(nvars, d):
    """All exponent tuples of total degree d, in descending grevlex order."""
    out = []

    def rec(prefix, rest, left):
        if rest == 1:
            out.append(prefix + (left,))
            return
        for k in range(left, -1, -1):
            rec(prefix + (k,), rest - 1, left - k)

    if nvars == 0:
        return [()] if d == 0 else []
    rec((), nvars, d)
    out.sort(key=grevlex_key)
    return out


def poly_rank(polys):
    """Exact dimension of the span of a family of polynomials."""
    from .exactmath import rank
    return rank([p.vec() for p in polys])


class PolySpace:
    """Subspace of polynomials of a fixed degree, kept as an echelon basis."""

    def __init__(self, names, degree, polys=()):
        from .exactmath import Echelon
        self.names = tuple(names)
        self.degree = degree
        self._ech = Echelon()
        self.basis = []
        for p in polys:
            self.add(p)

    @property
    def dim(self):
        return len(self._ech)

    def add(self, p):
        if p.names != self.names:
            raise ValueError("variable mismatch")
        added = self._ech.insert(p.vec())
        if added is not None:
            self.basis.append(p)
        return added is not None

    def contains(self, p):
        return self._ech.contains(p.vec())

    def coords_of(self, p):
        """Solve for coordinates of p in the stored basis, or None."""
        from .exactmath import solve
        cols = len(self.basis)
        rows = {}
        for j, b in enumerate(self.basis):
            for e, c in b.terms.items():
                rows.setdefault(e, {})[j] = c
        rhs_map = p.vec()
        all_keys = sorted(set(rows) | set(rhs_map))
        mat = [rows.get(k, {}) for k in all_keys]
        rhs = [rhs_map.get(k, ZERO) for k in all_keys]
        return solve(mat, rhs, cols)
