"""Monomial orderings on t^beta x^alpha: weighted and multiweighted chains on
top of the fixed t-local lexicographic tiebreaker with x1 > .. > xn > 1 > t.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .rings import Polynomial


class WeightVector:
    """Rational weight vector stored as cleared-denominator integers.

    First entry is the t-weight.  All comparisons downstream use the integer
    entries only, so the denominator never enters cone or ordering arithmetic.
    """

    __slots__ = ("entries", "denominator")

    def __init__(self, values, denominator=1):
        if denominator <= 0:
            raise ValueError("denominator must be positive")
        fracs = [Fraction(v, denominator) for v in values]
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        self.entries = tuple(int(f * den) for f in fracs)
        self.denominator = den

    @classmethod
    def from_fractions(cls, fracs):
        return cls(list(fracs))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return (Fraction(e, self.denominator) for e in self.entries)

    def __getitem__(self, i):
        return Fraction(self.entries[i], self.denominator)

    @property
    def t_entry(self):
        return self.entries[0]

    def is_strictly_t_negative(self):
        return self.entries[0] < 0

    def score(self, exp):
        """Integer dot product with an exponent tuple (order-faithful)."""
        return sum(w * e for w, e in zip(self.entries, exp))

    def __eq__(self, other):
        return (
            isinstance(other, WeightVector)
            and self.entries == other.entries
            and self.denominator == other.denominator
        )

    def __hash__(self):
        return hash((self.entries, self.denominator))

    def __repr__(self):
        if self.denominator == 1:
            return f"w({','.join(map(str, self.entries))})"
        return f"w({','.join(str(Fraction(e, self.denominator)) for e in self.entries)})"


class TieBreaker:
    """Lexicographic tiebreak: a permutation of x-variable priorities, then
    smaller t-power wins (so that x_i > 1 > t)."""

    __slots__ = ("permutation",)

    def __init__(self, permutation=None, n=None):
        if permutation is None:
            if n is None:
                raise ValueError("need a permutation or the variable count")
            permutation = tuple(range(n))
        perm = tuple(permutation)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError("not a permutation of the x-variables")
        self.permutation = perm

    def key(self, exp):
        alpha = exp[1:]
        return tuple(alpha[i] for i in self.permutation) + (-exp[0],)

    def __eq__(self, other):
        return isinstance(other, TieBreaker) and self.permutation == other.permutation

    def __hash__(self):
        return hash(self.permutation)


class MultiWeightOrdering:
    """Ordering comparing a chain of weight dot products, then the tiebreaker.

    With an empty refiner list this is the plain weighted ordering; the chain
    (w, v1, .., vd) realizes a weight w perturbed by infinitesimally scaled
    refiners v1 .. vd without ever materializing an epsilon.
    """

    __slots__ = ("weights", "tiebreaker")

    def __init__(self, weights, tiebreaker=None, n=None):
        ws = []
        for w in weights:
            ws.append(w if isinstance(w, WeightVector) else WeightVector(w))
        if not ws:
            raise ValueError("need at least one weight vector")
        self.weights = tuple(ws)
        if tiebreaker is None:
            count = n if n is not None else len(ws[0]) - 1
            tiebreaker = TieBreaker(n=count)
        self.tiebreaker = tiebreaker

    @property
    def primary(self):
        return self.weights[0]

    @property
    def refiners(self):
        return self.weights[1:]

    def is_t_local_weighted(self):
        return self.primary.is_strictly_t_negative()

    def with_refiner(self, v):
        v = v if isinstance(v, WeightVector) else WeightVector(v)
        return MultiWeightOrdering(self.weights + (v,), self.tiebreaker)

    def prepend_chain(self, outer):
        """Ordering comparing `outer`'s chain first, then this one's."""
        return MultiWeightOrdering(tuple(outer.weights) + self.weights, self.tiebreaker)

    def key(self, exp):
        return tuple(w.score(exp) for w in self.weights) + self.tiebreaker.key(exp)

    def compare(self, a, b):
        ka, kb = self.key(a), self.key(b)
        if ka > kb:
            return 1
        if ka < kb:
            return -1
        return 0

    def greater(self, a, b):
        return self.key(a) > self.key(b)

    def __eq__(self, other):
        return (
            isinstance(other, MultiWeightOrdering)
            and self.weights == other.weights
            and self.tiebreaker == other.tiebreaker
        )

    def __hash__(self):
        return hash((self.weights, self.tiebreaker))

    def __repr__(self):
        return "|".join(repr(w) for w in self.weights)


def weighted_ordering(w, tiebreaker=None):
    return MultiWeightOrdering([w], tiebreaker)


def lex_ordering(n):
    """The bare t-local lex ordering, as a degenerate weighted ordering."""
    return MultiWeightOrdering([WeightVector((0,) * (n + 1))])


def compare(a, b, ordering):
    """Three-way comparison of distinct exponents: 1 if a > b, -1 if a < b."""
    return ordering.compare(a, b)


def leading_exponent(f, ordering):
    if f.is_zero():
        raise ValueError("zero polynomial has no leading term")
    return max(f.terms, key=ordering.key)


def leading_term(f, ordering):
    """(exponent, coefficient) of the maximal term under the ordering."""
    e = leading_exponent(f, ordering)
    return e, f.terms[e]


def leading_monomial(f, ordering):
    return leading_exponent(f, ordering)


def sorted_terms(f, ordering, reverse=True):
    return sorted(f.terms.items(), key=lambda item: ordering.key(item[0]), reverse=reverse)


def sign_normalize(f, ordering):
    """Flip signs so the leading coefficient is positive (units over Z are +-1)."""
    if f.is_zero() or f.ring.domain == "mod":
        return f
    _, c = leading_term(f, ordering)
    return -f if c < 0 else f


def make_monic(f, ordering):
    """Scale an F_p polynomial so its leading coefficient is 1."""
    if f.is_zero():
        return f
    p = f.ring.p
    _, c = leading_term(f, ordering)
    inv = pow(c, p - 2, p)
    return Polynomial(f.ring, {e: (cc * inv) % p for e, cc in f.terms.items()}, _normalized=True)
