"""Initial forms and initial ideals, in the ring sense over Z[t,x]/F_p[t,x]
and in the valued sense over Q_p via the t -> p translation."""

from __future__ import annotations

from .orderings import MultiWeightOrdering, WeightVector
from .rings import (
    Polynomial,
    residue_project,
    specialize_t_one,
)


def initial_form(f, weight):
    """Sum of the terms of maximal weight score; coefficients unchanged.

    Accepts any weight vector; the public ring-sense entry point enforces a
    negative t-weight, refiner steps do not need one.
    """
    if f.is_zero():
        raise ValueError("initial form of the zero polynomial is undefined")
    w = weight if isinstance(weight, WeightVector) else WeightVector(weight)
    best = None
    keep = []
    for e in f.terms:
        s = w.score(e)
        if best is None or s > best:
            best = s
            keep = [e]
        elif s == best:
            keep.append(e)
    return Polynomial(f.ring, {e: f.terms[e] for e in keep}, _normalized=True)


def initial_form_ring(f, weight):
    """Ring-sense initial form; the t-weight must be strictly negative."""
    w = weight if isinstance(weight, WeightVector) else WeightVector(weight)
    if not w.is_strictly_t_negative():
        raise ValueError("ring-sense initial forms need a strictly negative t-weight")
    return initial_form(f, w)


def iterated_initial_form(f, ordering_or_weights):
    """in_{v_d} .. in_{v_1} in_w(f) along a weight chain (epsilon-free)."""
    if isinstance(ordering_or_weights, MultiWeightOrdering):
        chain = ordering_or_weights.weights
    else:
        chain = ordering_or_weights
    g = f
    for w in chain:
        g = initial_form(g, w)
    return g


def is_weighted_homogeneous(f, weight):
    if f.is_zero():
        return True
    w = weight if isinstance(weight, WeightVector) else WeightVector(weight)
    scores = {w.score(e) for e in f.terms}
    return len(scores) == 1


def canonical_t_expansion(f, p=None):
    """Rewrite each coefficient via its p-adic digits as powers of t.

    c * t^b x^a with c = sum c_i p^i (0 < c_i < p) becomes sum c_i t^(b+i) x^a;
    negative coefficients expand with negated digits.  The result represents
    the same element of Q_p[x] under t -> p and is the representative for
    which valued term scores coincide with ring term scores.
    """
    p = p if p is not None else f.ring.p
    terms = {}
    for e, c in f.terms.items():
        sign = 1 if c > 0 else -1
        c = abs(c)
        i = 0
        while c:
            c, digit = divmod(c, p)
            if digit:
                key = (e[0] + i,) + e[1:]
                terms[key] = terms.get(key, 0) + sign * digit
            i += 1
    return Polynomial(f.ring, terms)


def initial_form_valued(f, w_x):
    """Valued-sense initial form of a Q_p[x] element given by a Z[t,x] representative.

    Scores terms by w.alpha - nu_p(c) and returns the residues of the
    normalized coefficients, computed as
    residue(specialize_t_one(initial_form(canonical representative, (-1, w)))).
    """
    if f.is_zero():
        raise ValueError("initial form of the zero polynomial is undefined")
    if f.ring.domain != "int":
        raise ValueError("valued initial forms take integer-coefficient representatives")
    w_x = tuple(w_x)
    if len(w_x) != f.ring.n:
        raise ValueError(f"expected an x-weight of length {f.ring.n}")
    lifted = canonical_t_expansion(f)
    w = WeightVector((-1,) + w_x)
    return residue_project(specialize_t_one(initial_form_ring(lifted, w)))


class InitialCertificate:
    """Initial forms of an initially reduced standard basis at a weight chain.

    Generates the initial ideal; every generator is homogeneous with respect
    to each weight in the chain.
    """

    __slots__ = ("weights", "generators", "basis")

    def __init__(self, weights, generators, basis=None):
        ws = tuple(
            w if isinstance(w, WeightVector) else WeightVector(w) for w in weights
        )
        self.weights = ws
        self.generators = tuple(generators)
        self.basis = basis
        for g in self.generators:
            for w in ws:
                if not is_weighted_homogeneous(g, w):
                    raise ValueError("certificate generator is not weighted-homogeneous")

    @property
    def weight(self):
        return self.weights[0]

    def ring(self):
        return self.generators[0].ring if self.generators else None


def initial_ideal_from_basis(basis, weight=None):
    """Package {in_w(g) : g in G} for an initially reduced standard basis G.

    With no explicit weight, the full chain of the basis ordering is used,
    matching the generic-initial construction.
    """
    if weight is not None:
        w = weight if isinstance(weight, WeightVector) else WeightVector(weight)
        chain = (w,)
        gens = [initial_form(g, w) for g in basis.generators]
    else:
        chain = basis.ordering.weights
        gens = [iterated_initial_form(g, chain) for g in basis.generators]
    return InitialCertificate(chain, gens, basis)


def valued_initial_ideal(certificate):
    """Project a ring-side initial certificate at (-1, w) to generators of the
    valued initial ideal over F_p[x]: residue reduction then t = 1."""
    if certificate.weight.entries[0] >= 0:
        raise ValueError("certificate weight must have negative t-entry")
    out = []
    for g in certificate.generators:
        h = specialize_t_one(residue_project(g))
        if not h.is_zero():
            out.append(h)
    return out
