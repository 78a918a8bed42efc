"""Exact sparse multivariate polynomials over QQ or GF(p)."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    """QQ (characteristic 0, Fraction elements) or GF(p) (ints in [0, p))."""

    __slots__ = ("characteristic",)

    def __init__(self, characteristic: int = 0):
        if characteristic != 0 and not _is_prime(characteristic):
            raise ValueError(f"characteristic {characteristic} is not prime")
        self.characteristic = characteristic

    def __call__(self, x):
        p = self.characteristic
        if p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, p)) % p
        return int(x) % p

    def inv(self, a):
        p = self.characteristic
        if p == 0:
            return Fraction(1) / a
        return pow(a, -1, p)

    def add(self, a, b):
        p = self.characteristic
        return a + b if p == 0 else (a + b) % p

    def mul(self, a, b):
        p = self.characteristic
        return a * b if p == 0 else (a * b) % p

    def neg(self, a):
        p = self.characteristic
        return -a if p == 0 else (-a) % p

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    __repr__ = __str__


def _grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


class MonomialOrder:
    """lex, grevlex, or the block order elimination(k) eliminating the first k variables.

    ``key(exps)`` returns a sort key; the larger key is the larger monomial.
    """

    __slots__ = ("name", "k", "key")

    def __init__(self, name: str = "grevlex", k: int = 0):
        if name not in ("lex", "grevlex", "elimination"):
            raise ValueError(f"unknown monomial order {name!r}")
        if name == "elimination" and k < 1:
            raise ValueError("elimination order needs k >= 1")
        self.name = name
        self.k = k if name == "elimination" else 0
        if name == "lex":
            self.key = tuple
        elif name == "grevlex":
            self.key = _grevlex_key
        else:
            self.key = lambda e, k=k: (_grevlex_key(e[:k]), _grevlex_key(e[k:]))

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.name, self.k) == (other.name, other.k)

    def __hash__(self):
        return hash((self.name, self.k))

    def __repr__(self):
        return f"elimination({self.k})" if self.name == "elimination" else self.name


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


class Ring:
    """K[x_1, ..., x_n] with a default monomial order."""

    def __init__(self, names, characteristic: int = 0, order: MonomialOrder | str = GREVLEX):
        names = tuple(names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.names = names
        self.n = len(names)
        self.field = Field(characteristic)
        self.order = MonomialOrder(order) if isinstance(order, str) else order
        self._index = {v: i for i, v in enumerate(names)}

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.names == other.names
                and self.field == other.field)

    def __hash__(self):
        return hash((self.names, self.field))

    def __repr__(self):
        return f"{self.field}[{','.join(self.names)}]"

    def index(self, name: str) -> int:
        return self._index[name]

    def zero(self) -> Poly:
        return Poly(self, {})

    def one(self) -> Poly:
        return self.constant(1)

    def constant(self, c) -> Poly:
        c = self.field(c)
        return Poly(self, {(0,) * self.n: c} if c else {})

    def monomial(self, exps, coef=1) -> Poly:
        exps = tuple(exps)
        if len(exps) != self.n or min(exps) < 0:
            raise ValueError(f"bad exponent vector {exps} for {self}")
        c = self.field(coef)
        return Poly(self, {exps: c} if c else {})

    def var(self, name: str) -> Poly:
        e = [0] * self.n
        e[self._index[name]] = 1
        return Poly(self, {tuple(e): self.field(1)})

    def gens(self) -> list[Poly]:
        return [self.var(v) for v in self.names]

    def __call__(self, x) -> Poly:
        if isinstance(x, Poly):
            if x.ring != self:
                raise ValueError(f"polynomial over {x.ring} used in {self}")
            return x
        if isinstance(x, str):
            from .session import parse_polynomial
            return parse_polynomial(x, self)
        return self.constant(x)

    def extend(self, new_names, front: bool = True, order: MonomialOrder | None = None):
        """Ring with extra variables and the embedding of this ring into it."""
        new_names = tuple(new_names)
        names = new_names + self.names if front else self.names + new_names
        big = Ring(names, self.characteristic, order or self.order)
        pad = (0,) * len(new_names)

        if front:
            def embed(f):
                return Poly(big, {pad + e: c for e, c in f.terms.items()})
        else:
            def embed(f):
                return Poly(big, {e + pad: c for e, c in f.terms.items()})
        return big, embed

    def fresh_names(self, count: int, stem: str = "_t") -> tuple[str, ...]:
        out = []
        i = 0
        while len(out) < count:
            cand = f"{stem}{i}"
            if cand not in self._index:
                out.append(cand)
            i += 1
        return tuple(out)


class Poly:
    """Polynomial as a map exponent-tuple -> nonzero coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- coercion helpers
    def _coerce(self, other) -> Poly | None:
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return None

    # -- arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        F = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = F.add(out.get(e, 0), c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Poly(self.ring, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        F = self.ring.field
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = F.add(out.get(e, 0), F.mul(c1, c2))
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> Poly:
        F = self.ring.field
        c = F(c)
        if not c:
            return self.ring.zero()
        return Poly(self.ring, {e: F.mul(c, v) for e, v in self.terms.items()})

    def mul_monomial(self, exps, coef=1) -> Poly:
        F = self.ring.field
        c = F(coef)
        return Poly(self.ring, {tuple(a + b for a, b in zip(e, exps)): F.mul(c, v)
                                for e, v in self.terms.items()})

    # -- comparisons
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == self.ring.constant(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- inspection
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_coefficient(self):
        return self.terms.get((0,) * self.ring.n, 0)

    def is_monomial(self) -> bool:
        """True for a single term (any nonzero coefficient)."""
        return len(self.terms) == 1

    def exponents(self) -> tuple[int, ...]:
        if len(self.terms) != 1:
            raise ValueError(f"{self} is not a monomial")
        return next(iter(self.terms))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def support(self) -> frozenset[int]:
        """Indices of variables occurring in the polynomial."""
        return frozenset(i for e in self.terms for i, a in enumerate(e) if a)

    def leading_term(self, order: MonomialOrder | None = None):
        order = order or self.ring.order
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def monic(self, order: MonomialOrder | None = None) -> Poly:
        if not self.terms:
            return self
        _, c = self.leading_term(order)
        return self.scale(self.ring.field.inv(c))

    def sorted_terms(self, order: MonomialOrder | None = None):
        order = order or self.ring.order
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        p = self.ring.characteristic
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(n if a == 1 else f"{n}^{a}" for n, a in zip(names, e) if a)
            if p == 0:
                neg = c < 0
                mag = -c if neg else c
            else:
                neg, mag = False, c
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"Poly({self})"


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def product(polys, ring: Ring) -> Poly:
    return reduce(lambda f, g: f * g, polys, ring.one())
