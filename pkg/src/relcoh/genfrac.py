"""Modules of generalized fractions U^{-n}M for cyclic modules M = R/c.

An element r/(x_1^a_1, ..., x_n^a_n) is zero iff for some d >= max(a)

    x_1^(d-a_1) ... x_n^(d-a_n) r  in  <x_1^d, ..., x_{n-1}^d> + c.

That condition is monotone in d, so a bounded search is a sound
semi-decision.  For monomial data the condition is linear in d term by term
and is decided exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContextMismatch, NotInIdeal
from .ideals import Ideal
from .modules import lift
from .poly import Poly, product

DELTA_SLACK = 16


@dataclass(frozen=True)
class ZeroCertified:
    delta: int
    is_zero = True

    def as_dict(self):
        return {"verdict": "zero", "delta": self.delta}


@dataclass(frozen=True)
class NotZeroUpTo:
    delta_max: int
    is_zero = None

    def as_dict(self):
        return {"verdict": "unknown", "delta_max": self.delta_max}


@dataclass(frozen=True)
class NonzeroCertified:
    is_zero = False

    def as_dict(self):
        return {"verdict": "nonzero"}


class FractionContext:
    """A denominator sequence x_1..x_n together with the module R/c."""

    def __init__(self, sequence, c: Ideal):
        ring = c.ring
        self.ring = ring
        self.sequence = tuple(ring(x) for x in sequence)
        if not self.sequence:
            raise ValueError("a denominator sequence needs at least one entry")
        if any(x.is_zero() for x in self.sequence):
            raise ValueError("denominator entries must be nonzero")
        self.c = c

    @property
    def n(self) -> int:
        return len(self.sequence)

    def __eq__(self, other):
        return (isinstance(other, FractionContext) and self.sequence == other.sequence
                and self.c == other.c)

    def __hash__(self):
        return hash(self.sequence)

    def __repr__(self):
        return f"FractionContext({[str(x) for x in self.sequence]}, {self.c})"

    def is_monomial(self) -> bool:
        return all(x.is_monomial() for x in self.sequence) and self.c.is_monomial()

    def power_product(self, exps) -> Poly:
        return product((x ** e for x, e in zip(self.sequence, exps)), self.ring)

    def zero_ideal(self, delta) -> Ideal:
        """<x_1^d_1, ..., x_{n-1}^d_{n-1}> + c for an int or per-entry delta."""
        if isinstance(delta, int):
            delta = [delta] * self.n
        return self.c + [x ** d for x, d in zip(self.sequence[:-1], delta)]


class GenFraction:
    """r/(x_1^a_1, ..., x_n^a_n); the numerator is kept reduced modulo c."""

    def __init__(self, context: FractionContext, numerator, alphas):
        alphas = tuple(int(a) for a in alphas)
        if len(alphas) != context.n:
            raise ValueError(f"expected {context.n} exponents, got {len(alphas)}")
        if min(alphas) < 1:
            raise ValueError("exponents must be positive")
        self.context = context
        self.alphas = alphas
        self.numerator = context.c.reduce(context.ring(numerator))

    def __repr__(self):
        den = ", ".join(f"({x})^{a}" for x, a in zip(self.context.sequence, self.alphas))
        return f"{self.numerator}/({den})"

    def _check(self, other):
        if self.context != other.context:
            raise ContextMismatch("fractions over different contexts")

    def raise_to(self, alphas) -> GenFraction:
        """Same class written over the larger denominator exponents."""
        shift = [b - a for a, b in zip(self.alphas, alphas)]
        if min(shift) < 0:
            raise ValueError("can only raise exponents")
        return GenFraction(self.context, self.numerator * self.context.power_product(shift), alphas)

    def __add__(self, other):
        self._check(other)
        top = tuple(max(a, b) for a, b in zip(self.alphas, other.alphas))
        f, g = self.raise_to(top), other.raise_to(top)
        return GenFraction(self.context, f.numerator + g.numerator, top)

    def __neg__(self):
        return GenFraction(self.context, -self.numerator, self.alphas)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, r) -> GenFraction:
        return GenFraction(self.context, self.context.ring(r) * self.numerator, self.alphas)

    __rmul__ = scale


def gf_add(f: GenFraction, g: GenFraction) -> GenFraction:
    return f + g


def gf_scalar(r, f: GenFraction) -> GenFraction:
    return f.scale(r)


def _term_min_delta(m, A, B, degs, gens_c, lo):
    """Least d >= lo putting the term of exponent A + d*B into the zero ideal, or None."""
    best = None
    alternatives = [(A, [b - e for b, e in zip(B, deg)]) for deg in degs]
    alternatives += [([a - h for a, h in zip(A, hg)], B) for hg in gens_c]
    for const, slope in alternatives:
        d = lo
        ok = True
        for c_j, s_j in zip(const, slope):
            if s_j == 0:
                if c_j < 0:
                    ok = False
                    break
            elif s_j > 0:
                d = max(d, -(c_j // s_j))   # ceil(-c_j / s_j)
            elif c_j + d * s_j < 0:
                ok = False
                break
        if ok and (best is None or d < best):
            best = d
    return best


def _monomial_zero_test(f: GenFraction):
    ctx = f.context
    lo = max(f.alphas)
    if f.numerator.is_zero():
        return ZeroCertified(lo)
    n = ctx.ring.n
    degs = [x.exponents() for x in ctx.sequence]
    B = [sum(d[j] for d in degs) for j in range(n)]
    shift = [sum(a * d[j] for a, d in zip(f.alphas, degs)) for j in range(n)]
    gens_c = [g.exponents() for g in ctx.c.groebner()]
    delta = lo
    for m in f.numerator.terms:
        A = [m[j] - shift[j] for j in range(n)]
        d = _term_min_delta(m, A, B, degs[:-1], gens_c, lo)
        if d is None:
            return NonzeroCertified()
        delta = max(delta, d)
    return ZeroCertified(delta)


def gf_is_zero(f: GenFraction, delta_max: int | None = None, closed_form: bool = True):
    """Three-valued zero test: ZeroCertified(d), NotZeroUpTo(delta_max) or NonzeroCertified.

    closed_form=False forces the bounded search even for monomial data.
    """
    ctx = f.context
    if closed_form and ctx.is_monomial():
        return _monomial_zero_test(f)
    lo = max(f.alphas)
    if delta_max is None:
        delta_max = lo + DELTA_SLACK
    if delta_max < lo:
        raise ValueError(f"delta_max must be at least {lo}")
    for d in range(lo, delta_max + 1):
        w = f.numerator * ctx.power_product([d - a for a in f.alphas])
        if ctx.zero_ideal(d).contains(w):
            return ZeroCertified(d)
    return NotZeroUpTo(delta_max)


def gf_equal(f: GenFraction, g: GenFraction, delta_max: int | None = None,
             closed_form: bool = True):
    """Decide f ~ g by the defining relation; witnesses are searched on the diagonal.

    Witness exponents can always be raised one entry at a time, so a witness
    exists iff a constant one does.  Monomial data is decided exactly via f - g.
    """
    f._check(g)
    ctx = f.context
    lo = max(max(a, b) for a, b in zip(f.alphas, g.alphas))
    if closed_form and ctx.is_monomial():
        return gf_is_zero(f - g)
    if delta_max is None:
        delta_max = lo + DELTA_SLACK
    for d in range(lo, delta_max + 1):
        w = (f.numerator * ctx.power_product([d - a for a in f.alphas])
             - g.numerator * ctx.power_product([d - b for b in g.alphas]))
        if ctx.zero_ideal(d).contains(w):
            return ZeroCertified(d)
    return NotZeroUpTo(delta_max)


# -- top local cohomology as generalized fractions

def ksz_context(a_gens, c: Ideal) -> FractionContext:
    """Context (x_1, ..., x_d, 1) representing H^d_a(R/c)."""
    ring = c.ring
    return FractionContext([ring(x) for x in a_gens] + [ring.one()], c)


def ksz_top_element(r, alphas, a_gens, c: Ideal) -> GenFraction:
    """The class r/(x_1^a_1, ..., x_d^a_d, 1) in H^d_a(R/c)."""
    ctx = ksz_context(a_gens, c)
    return GenFraction(ctx, r, tuple(alphas) + (1,))


def _quotient_context(ctx: FractionContext) -> FractionContext:
    """(x_2, ..., x_d, 1) over M/x_1 M."""
    return FractionContext(ctx.sequence[1:], ctx.c + [ctx.sequence[0]])


def phi_map(f: GenFraction, target: FractionContext) -> GenFraction:
    """r'/(x_2^a_2, ..., 1) over M/x_1M  ->  r/(x_1, x_2^a_2, ..., 1) over M."""
    if f.context != _quotient_context(target):
        raise ContextMismatch("source context must be the target with x_1 removed and x_1 added to c")
    return GenFraction(target, f.numerator, (1,) + f.alphas)


def psi_mult(f: GenFraction) -> GenFraction:
    """Multiplication by x_1."""
    return f.scale(f.context.sequence[0])


def psi_preimage(f: GenFraction) -> GenFraction:
    """z with psi(z) ~ f: r/(x_1^(a_1+1), x_2^a_2, ...), since f ~ x_1 r/(x_1^(a_1+1), ...)."""
    return GenFraction(f.context, f.numerator, (f.alphas[0] + 1,) + f.alphas[1:])


def kernel_preimage(z: GenFraction, delta: int) -> GenFraction:
    """For psi(z) ~ 0 witnessed at delta, the explicit phi-preimage r_1/(x_2^delta, ..., 1).

    Writes x_1^(delta+1-a_1) x_2^(delta-a_2) ... r = sum x_i^delta r_i (mod c)
    and keeps r_1.
    """
    ctx = z.context
    d = ctx.n - 1
    exps = [delta + 1 - z.alphas[0]] + [delta - a for a in z.alphas[1:]]
    if min(exps) < 0:
        raise ValueError("delta below the exponents")
    w = z.numerator * ctx.power_product(exps)
    gens = [x ** delta for x in ctx.sequence[:d]] + list(ctx.c.gens)
    cof = lift(w, gens)
    if cof is None:
        raise NotInIdeal("psi(z) is not zero at this delta")
    src = _quotient_context(ctx)
    return GenFraction(src, cof[0], (delta,) * (d - 1) + (1,))
