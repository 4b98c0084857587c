"""Interpolation of vanishing forms on parametrized varieties, Jacobian probes.

Given a polynomial map (a list of coordinate polynomials in r parameters),
``vanishing_forms`` finds the space of degree-d forms on the target that
vanish on the image, Groebner-free: evaluate all degree-d monomials in the
coordinates at random integer parameter points and take the kernel of the
evaluation matrix.

The kernel is computed modulo two large primes with numpy (fast), lifted to
exact rationals by Chinese remaindering and rational reconstruction, and
then certified:

* every reconstructed form is verified to vanish by exact symbolic
  composition with the map (not just at samples), so the reported kernel
  dimension is a true lower bound;
* the modular kernel dimension is an upper bound for the rational one
  (reduction cannot increase rank), so the dimension is exact.

Sampling is deterministic for a fixed seed; samples whose image is the
zero vector are redrawn.
"""

from __future__ import annotations

import random

import numpy as np

from .exactmath import QQ, ZERO, ONE
from .poly import Poly, monomials_of_degree

_P1 = 2147483629
_P2 = 2147483587

DEFAULT_SEED = 20240801
DEFAULT_RANGE = 101


class SampledMap:
    def __init__(self, coordinates, seed=DEFAULT_SEED, sample_range=DEFAULT_RANGE):
        self.coordinates = list(coordinates)
        self.names = self.coordinates[0].names
        self.nparams = len(self.names)
        self.seed = seed
        self.sample_range = sample_range

    def samples(self, count, offset=0):
        """Deterministic integer parameter points avoiding the base locus."""
        rng = random.Random((self.seed, offset))
        out = []
        while len(out) < count:
            pt = tuple(rng.randint(-self.sample_range, self.sample_range)
                       for _ in range(self.nparams))
            img = [c.evaluate([QQ(x) for x in pt]) for c in self.coordinates]
            if any(img):
                out.append((pt, img))
        return out


def _mono_eval_int(values, expt):
    v = 1
    for x, k in zip(values, expt):
        if k:
            v *= int(x) ** k
    return v


def _kernel_mod(matrix_rows, ncols, p):
    """Kernel basis mod p of an integer matrix (rows as python int lists)."""
    a = np.array([[x % p for x in row] for row in matrix_rows], dtype=np.int64)
    nrows = a.shape[0]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if a[i, c]:
                piv = i
                break
        if piv is None:
            continue
        a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = (-int(a[i, f])) % p
        basis.append(v)
    return basis, len(pivots)


def _crt_reconstruct(x1, x2):
    """Rational reconstruction of an integer known mod _P1 and _P2."""
    m = _P1 * _P2
    # CRT
    inv = pow(_P1, _P2 - 2, _P2)
    t = ((x2 - x1) * inv) % _P2
    x = (x1 + _P1 * t) % m
    # rational reconstruction: lattice reduction on (m, 0), (x, 1)
    a, b = m, x
    pa, pb = 0, 1
    bound = int(m ** 0.5) // 2
    while b > bound:
        q = a // b
        a, b = b, a - q * b
        pa, pb = pb, pa - q * pb
    if pb == 0:
        return None
    num, den = b, pb
    if den < 0:
        num, den = -num, -den
    return QQ(num, den)


def vanishing_forms(smap, degree, margin=35, seed_offset=0, _retry=True):
    """Exact basis of degree-d forms vanishing on the image of the map.

    Returns (dimension, forms, evaluation_rank).  The forms are certified
    by exact composition with the map coordinates; the dimension is exact
    (modular rank bounds the rational rank from below, symbolic
    verification bounds the kernel from below).
    """
    ncoords = len(smap.coordinates)
    target_names = tuple("w%d" % i for i in range(ncoords))
    monos = monomials_of_degree(ncoords, degree)
    ncols = len(monos)
    nsamples = ncols + margin
    samples = smap.samples(nsamples, offset=seed_offset)
    rows = []
    for _, img in samples:
        vals = [int(x) for x in img]
        rows.append([_mono_eval_int(vals, e) for e in monos])
    basis1, rank1 = _kernel_mod(rows, ncols, _P1)
    basis2, rank2 = _kernel_mod(rows, ncols, _P2)
    if rank1 != rank2 or len(basis1) != len(basis2):
        if _retry:
            return vanishing_forms(smap, degree, margin, seed_offset + 1, _retry=False)
        raise RuntimeError("modular ranks disagree; resampling failed")
    forms = []
    for v1, v2 in zip(basis1, basis2):
        coeffs = {}
        for e, x1, x2 in zip(monos, v1, v2):
            if x1 == 0 and x2 == 0:
                continue
            q = _crt_reconstruct(x1, x2)
            if q is None:
                if _retry:
                    return vanishing_forms(smap, degree, margin, seed_offset + 1,
                                           _retry=False)
                raise RuntimeError("rational reconstruction failed")
            coeffs[e] = q
        forms.append(Poly(target_names, coeffs))
    # exact certificate: symbolic composition vanishes identically
    assignment = {target_names[i]: smap.coordinates[i] for i in range(ncoords)}
    for f in forms:
        if f.substitute(assignment):
            if _retry:
                return vanishing_forms(smap, degree, margin, seed_offset + 1,
                                       _retry=False)
            raise RuntimeError("reconstructed form fails exact verification")
    return len(forms), forms, rank1


def jacobian_rank(forms, point):
    """Exact rank of the Jacobian of a list of forms at a point."""
    from .exactmath import rank as _rank
    point = [QQ(x) for x in point]
    rows = []
    nvars = len(forms[0].names)
    for f in forms:
        row = {}
        for j in range(nvars):
            # partial derivative evaluated at the point
            val = ZERO
            for e, c in f.terms.items():
                if e[j]:
                    v = c * e[j]
                    for i, k in enumerate(e):
                        kk = k - 1 if i == j else k
                        if kk:
                            v = v * point[i] ** kk
                    val = val + v
            if val:
                row[j] = val
        rows.append(row)
    return _rank(rows)


def map_jacobian_rank(coordinates, point):
    """Exact rank of the Jacobian of a polynomial map at a parameter point."""
    return jacobian_rank(coordinates, point)
