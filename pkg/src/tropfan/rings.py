"""Sparse exact polynomial arithmetic over Z[t,x1..xn] and F_p[t,x1..xn].

Monomial exponents are tuples (beta, a1, .., an) with beta the power of t.
Coefficients are Python ints; in the residue domain they are kept in [0, p).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

INT = "int"
MOD = "mod"


class RingError(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class RingContext:
    """Declares the variable count, coefficient domain and uniformizer."""

    __slots__ = ("n", "domain", "p", "names")

    def __init__(self, n, p, domain=INT, names=None):
        if n < 1:
            raise RingError("need at least one x-variable")
        if not _is_prime(p):
            raise RingError(f"{p} is not prime")
        if domain not in (INT, MOD):
            raise RingError(f"unknown coefficient domain {domain!r}")
        self.n = n
        self.domain = domain
        self.p = p
        self.names = tuple(names) if names else tuple(f"x{i+1}" for i in range(n))
        if len(self.names) != n:
            raise RingError("variable name count does not match n")
        if "t" in self.names:
            raise RingError("'t' is reserved for the uniformizer variable")

    def residue_ring(self):
        return RingContext(self.n, self.p, MOD, self.names)

    def integer_ring(self):
        return RingContext(self.n, self.p, INT, self.names)

    def normalize(self, c):
        return c % self.p if self.domain == MOD else c

    def __eq__(self, other):
        return (
            isinstance(other, RingContext)
            and self.n == other.n
            and self.domain == other.domain
            and self.p == other.p
            and self.names == other.names
        )

    def __hash__(self):
        return hash((self.n, self.domain, self.p, self.names))

    def __repr__(self):
        dom = "Z" if self.domain == INT else f"F_{self.p}"
        return f"RingContext({dom}[t,{','.join(self.names)}], p={self.p})"


def exponent_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def exponent_divides(a, b):
    """Whether t^a x^a divides t^b x^b entrywise."""
    return all(x <= y for x, y in zip(a, b))


def exponent_div(b, a):
    """Exponent of t^b x^b / t^a x^a; caller guarantees divisibility."""
    return tuple(y - x for y, x in zip(b, a))


def exponent_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class Polynomial:
    """Immutable sparse polynomial.  `terms` maps exponent tuple -> coefficient."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms, _normalized=False):
        self.ring = ring
        if _normalized:
            self.terms = terms
        else:
            clean = {}
            for e, c in terms.items():
                c = ring.normalize(c)
                if c:
                    clean[e] = c
            self.terms = clean
        self._hash = None

    @classmethod
    def zero(cls, ring):
        return cls(ring, {}, _normalized=True)

    @classmethod
    def constant(cls, ring, c):
        return cls(ring, {(0,) * (ring.n + 1): c})

    @classmethod
    def from_terms(cls, ring, pairs):
        terms = {}
        for e, c in pairs:
            terms[e] = terms.get(e, 0) + c
        return cls(ring, terms)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        zero = (0,) * (self.ring.n + 1)
        return all(e == zero for e in self.terms)

    def constant_value(self):
        zero = (0,) * (self.ring.n + 1)
        return self.terms.get(zero, 0)

    def is_term(self):
        return len(self.terms) == 1

    def is_monomial(self):
        """Single term with coefficient a unit (1 over F_p after scaling, +-1 over Z)."""
        if len(self.terms) != 1:
            return False
        c = next(iter(self.terms.values()))
        if self.ring.domain == MOD:
            return True
        return c in (1, -1)

    def x_degree(self):
        if not self.terms:
            return None
        degs = {sum(e[1:]) for e in self.terms}
        return degs if len(degs) > 1 else degs.pop()

    def is_x_homogeneous(self):
        if not self.terms:
            return True
        return len({sum(e[1:]) for e in self.terms}) == 1

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return Polynomial(self.ring, terms)

    def __sub__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) - c
        return Polynomial(self.ring, terms)

    def __neg__(self):
        return Polynomial(
            self.ring,
            {e: self.ring.normalize(-c) for e, c in self.terms.items()},
            _normalized=self.ring.domain == MOD,
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = exponent_mul(e1, e2)
                terms[e] = terms.get(e, 0) + c1 * c2
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def scale(self, c):
        if c == 0:
            return Polynomial.zero(self.ring)
        return Polynomial(self.ring, {e: cc * c for e, cc in self.terms.items()})

    def term_mul(self, coeff, exp):
        """Multiply by the single term coeff * t^b x^a."""
        if coeff == 0:
            return Polynomial.zero(self.ring)
        return Polynomial(
            self.ring,
            {exponent_mul(e, exp): c * coeff for e, c in self.terms.items()},
        )

    def _check(self, other):
        if self.ring != other.ring:
            raise RingError("ring mismatch")

    def __repr__(self):
        return f"<{format_polynomial(self)}>"


def term_multiply(coeff, exp, f):
    return f.term_mul(coeff, exp)


def add(f, g):
    return f + g


def multiply(f, g):
    return f * g


def residue_project(f):
    """Reduce coefficients of a Z[t,x] polynomial mod p, landing in F_p[t,x]."""
    ring = f.ring.residue_ring()
    return Polynomial(ring, dict(f.terms))


def lift_to_integers(f):
    """Reinterpret an F_p[t,x] polynomial over Z with coefficients in [0, p)."""
    ring = f.ring.integer_ring()
    return Polynomial(ring, dict(f.terms), _normalized=True)


def specialize_t_one(f):
    """Substitute t = 1, merging x-monomials."""
    terms = {}
    for e, c in f.terms.items():
        key = (0,) + e[1:]
        terms[key] = terms.get(key, 0) + c
    return Polynomial(f.ring, terms)


def substitute_t(f, value):
    """Substitute an integer for t (used for the map back to Q_p[x] representatives)."""
    terms = {}
    for e, c in f.terms.items():
        key = (0,) + e[1:]
        terms[key] = terms.get(key, 0) + c * value ** e[0]
    return Polynomial(f.ring, terms)


def weighted_degree(f, weights):
    """Max over terms of w . (beta, alpha) as an exact Fraction.

    `weights` is an orderings.WeightVector or a plain rational sequence.
    Raises on the zero polynomial: its weighted degree is undefined.
    """
    entries, den = _weight_data(f.ring, weights)
    if f.is_zero():
        raise ValueError("weighted degree of the zero polynomial is undefined")
    best = max(sum(w * x for w, x in zip(entries, e)) for e in f.terms)
    return Fraction(best, den)


def term_weighted_degree(exp, weights, ring=None):
    entries, den = _weight_data(ring, weights, len(exp))
    return Fraction(sum(w * x for w, x in zip(entries, exp)), den)


def _weight_data(ring, weights, length=None):
    entries = getattr(weights, "entries", None)
    if entries is not None:
        return entries, weights.denominator
    fracs = [Fraction(w) for w in weights]
    den = 1
    for f in fracs:
        den = den * f.denominator // gcd(den, f.denominator)
    entries = tuple(int(f * den) for f in fracs)
    want = (ring.n + 1) if ring is not None else length
    if want is not None and len(entries) != want:
        raise ValueError(f"weight vector has length {len(entries)}, expected {want}")
    return entries, den


# ---------------------------------------------------------------------------
# parsing and printing


class _Tokenizer:
    def __init__(self, text, names):
        self.text = text
        self.pos = 0
        # longest match first so that x12 is not read as x1 * 2
        self.names = sorted(names, key=len, reverse=True)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def next_token(self):
        self.skip_ws()
        if self.pos >= len(self.text):
            return None, self.pos
        start = self.pos
        ch = self.text[self.pos]
        if ch in "+-*^()":
            self.pos += 1
            return ch, start
        if ch.isdigit():
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return int(self.text[start : self.pos]), start
        for name in self.names:
            if self.text.startswith(name, self.pos):
                self.pos += len(name)
                return ("var", name), start
        if self.text.startswith("t", self.pos):
            self.pos += 1
            return ("var", "t"), start
        raise ParseError(f"unexpected character {ch!r}", start)


def parse_polynomial(text, ring):
    """Parse +, -, *, ^, integer literals, t, declared names; juxtaposition multiplies."""
    tok = _Tokenizer(text, ring.names)
    var_index = {name: i + 1 for i, name in enumerate(ring.names)}
    var_index["t"] = 0

    tokens = []
    while True:
        t, pos = tok.next_token()
        if t is None:
            break
        tokens.append((t, pos))
    if not tokens:
        raise ParseError("empty polynomial text", 0)

    idx = 0

    def peek():
        return tokens[idx][0] if idx < len(tokens) else None

    def take():
        nonlocal idx
        t = tokens[idx]
        idx += 1
        return t

    def parse_sum():
        nonlocal idx
        sign = 1
        while peek() in ("+", "-"):
            if take()[0] == "-":
                sign = -sign
        result = parse_product().scale(sign)
        while peek() in ("+", "-"):
            sign = 1
            while peek() in ("+", "-"):
                if take()[0] == "-":
                    sign = -sign
            result = result + parse_product().scale(sign)
        return result

    def parse_product():
        result = parse_power()
        while True:
            nxt = peek()
            if nxt == "*":
                take()
                result = result * parse_power()
            elif isinstance(nxt, int) or isinstance(nxt, tuple) or nxt == "(":
                result = result * parse_power()
            else:
                return result

    def parse_power():
        base = parse_atom()
        if peek() == "^":
            take()
            exp_tok, pos = take() if idx < len(tokens) else (None, len(text))
            if not isinstance(exp_tok, int):
                raise ParseError("expected integer exponent after '^'", pos)
            if exp_tok < 0:
                raise ParseError("negative exponent", pos)
            result = Polynomial.constant(ring, 1)
            for _ in range(exp_tok):
                result = result * base
            return result
        return base

    def parse_atom():
        tkn, pos = take() if idx < len(tokens) else (None, len(text))
        if tkn is None:
            raise ParseError("unexpected end of input", pos)
        if isinstance(tkn, int):
            return Polynomial.constant(ring, tkn)
        if isinstance(tkn, tuple) and tkn[0] == "var":
            name = tkn[1]
            if name != "t" and name not in var_index:
                raise ParseError(f"unknown variable {name!r}", pos)
            e = [0] * (ring.n + 1)
            e[var_index[name]] = 1
            return Polynomial(ring, {tuple(e): 1})
        if tkn == "(":
            inner = parse_sum()
            closer, cpos = take() if idx < len(tokens) else (None, len(text))
            if closer != ")":
                raise ParseError("expected ')'", cpos)
            return inner
        raise ParseError(f"unexpected token {tkn!r}", pos)

    result = parse_sum()
    if idx != len(tokens):
        raise ParseError(f"trailing input {tokens[idx][0]!r}", tokens[idx][1])
    return result


def format_exponent(exp, ring):
    parts = []
    if exp[0] == 1:
        parts.append("t")
    elif exp[0] > 1:
        parts.append(f"t^{exp[0]}")
    for i, a in enumerate(exp[1:]):
        if a == 1:
            parts.append(ring.names[i])
        elif a > 1:
            parts.append(f"{ring.names[i]}^{a}")
    return "".join(parts)


def format_polynomial(f, ordering=None):
    """Print terms descending under `ordering` (plain t-local lex if omitted)."""
    if f.is_zero():
        return "0"
    ring = f.ring
    if ordering is None:
        from .orderings import lex_ordering

        ordering = lex_ordering(ring.n)
    exps = sorted(f.terms, key=ordering.key, reverse=True)
    pieces = []
    for e in exps:
        c = f.terms[e]
        mono = format_exponent(e, ring)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{mono}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+{body}" if c > 0 else f"-{body}")
    return "".join(pieces)
