"""Exact integer/rational linear algebra helpers used by the cone machinery."""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def vec_gcd(v):
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def primitive(v):
    """Divide an integer vector by the gcd of its entries (zero vector unchanged)."""
    g = vec_gcd(v)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def clear_denominators(v):
    """Turn a vector of Fractions/ints into a primitive integer vector, same direction."""
    fracs = [Fraction(x) for x in v]
    den = 1
    for f in fracs:
        den = den * f.denominator // gcd(den, f.denominator)
    return primitive(tuple(int(f * den) for f in fracs))


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def scale_add(a, ca, b, cb):
    return tuple(ca * x + cb * y for x, y in zip(a, b))


def rref(rows):
    """Reduced row echelon form over Q.  Returns (rref_rows, pivot_columns)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c]
        mat[r] = [x / inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows):
    return len(rref(rows)[0])


def row_span_basis(rows):
    """Canonical primitive-integer basis of the row span (RREF rows, cleared)."""
    reduced, _ = rref(rows)
    return tuple(clear_denominators(row) for row in reduced)


def nullspace(rows, ncols):
    """Primitive integer basis of {x : rows . x = 0}."""
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][fc]
        basis.append(clear_denominators(v))
    return tuple(basis)


def in_row_span(v, rows):
    if not any(v):
        return True
    return rank(list(rows) + [v]) == rank(rows)


def span_intersection(rows_a, rows_b):
    """Basis of rowspan(A) ∩ rowspan(B)."""
    if not rows_a or not rows_b:
        return ()
    ncols = len(rows_a[0])
    ca = nullspace(rows_a, ncols)
    cb = nullspace(rows_b, ncols)
    return nullspace(list(ca) + list(cb), ncols)


def reduce_mod_span(v, span_rows):
    """Canonical representative of v modulo the row span.

    Eliminates the pivot coordinates of the RREF basis; deterministic and
    linear, so scaling of v carries through.
    """
    if not span_rows:
        return tuple(Fraction(x) for x in v)
    reduced, pivots = rref(span_rows)
    out = [Fraction(x) for x in v]
    for row, pc in zip(reduced, pivots):
        f = out[pc]
        if f != 0:
            out = [x - f * y for x, y in zip(out, row)]
    return tuple(out)


def reduce_ray_mod_span(v, span_rows):
    """Primitive integer representative of the ray direction v modulo a subspace."""
    red = reduce_mod_span(v, span_rows)
    return clear_denominators(red)
