"""Ideals with cached reduced Groebner bases and the predicates built on them."""

from __future__ import annotations

import threading

from .groebner import Engine
from .poly import GREVLEX, MonomialOrder, Poly, Ring


def _to_internal(f: Poly, comp: int = 0):
    return {(comp, e): c for e, c in f.terms.items()}


def _from_internal(ring: Ring, d) -> Poly:
    return Poly(ring, {e: c for (_, e), c in d.items()})


def groebner_basis(gens, ring: Ring, order: MonomialOrder = GREVLEX, stop_on_unit: bool = False) -> list[Poly]:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    eng = Engine(ring.field, order)
    out = eng.buchberger([_to_internal(g) for g in gens if g], stop_on_unit=stop_on_unit)
    return [_from_internal(ring, d) for d in out]


def normal_form(f: Poly, basis, order: MonomialOrder = GREVLEX) -> Poly:
    eng = Engine(f.ring.field, order)
    triples = eng.basis_triples([_to_internal(g) for g in basis])
    return _from_internal(f.ring, eng.normal_form(_to_internal(f), triples))


class Ideal:
    """Ideal of a polynomial ring given by generators.

    Reduced Groebner bases are memoized per monomial order; the memo is
    write-once per order and guarded for concurrent readers.
    """

    def __init__(self, ring: Ring, gens=()):
        self.ring = ring
        self.gens = tuple(ring(g) for g in gens if ring(g))
        self._gb: dict = {}
        self._lock = threading.Lock()

    @classmethod
    def zero(cls, ring):
        return cls(ring, ())

    @classmethod
    def unit(cls, ring):
        return cls(ring, (ring.one(),))

    def __repr__(self):
        return f"<{', '.join(map(str, self.gens)) or '0'}>"

    def groebner(self, order: MonomialOrder = GREVLEX) -> list[Poly]:
        gb = self._gb.get(order)
        if gb is not None:
            return gb
        with self._lock:
            gb = self._gb.get(order)
            if gb is None:
                gb = groebner_basis(self.gens, self.ring, order)
                self._gb[order] = gb
        return gb

    def reduce(self, f: Poly) -> Poly:
        return normal_form(self.ring(f), self.groebner())

    def contains(self, f) -> bool:
        return not self.reduce(f)

    def __contains__(self, f):
        return self.contains(f)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        gb = self.groebner()
        return len(gb) == 1 and gb[0].is_constant()

    def is_proper(self) -> bool:
        return not self.is_unit()

    def is_monomial(self) -> bool:
        """True iff the ideal is generated by monomials (its reduced basis is)."""
        return all(g.is_monomial() for g in self.groebner())

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.groebner())

    def __add__(self, other):
        if isinstance(other, Ideal):
            return Ideal(self.ring, self.gens + other.gens)
        return Ideal(self.ring, self.gens + tuple(self.ring(g) for g in other))

    def __mul__(self, other: Ideal):
        return Ideal(self.ring, [f * g for f in self.gens for g in other.gens])

    def is_subset(self, other: Ideal) -> bool:
        return all(other.contains(g) for g in self.gens)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.groebner() == other.groebner()

    def __hash__(self):
        return hash(tuple(self.groebner()))


def ideal_membership(f: Poly, I: Ideal) -> bool:
    return I.contains(f)


def radical_membership(f: Poly, I: Ideal) -> bool:
    """f in Rad(I), via 1 in I + <1 - t f> over R[t]."""
    f = I.ring(f)
    if not f:
        return True
    if I.is_unit():
        return True
    if f.is_constant():
        return False
    if I.contains(f):
        return True
    t, = I.ring.fresh_names(1)
    big, embed = I.ring.extend([t])
    tvar = big.var(t)
    gens = [embed(g) for g in I.gens] + [big.one() - tvar * embed(f)]
    gb = groebner_basis(gens, big, GREVLEX, stop_on_unit=True)
    return len(gb) == 1 and gb[0].is_constant()


def radical_contains(I: Ideal, J: Ideal) -> bool:
    """Rad(J) contains I."""
    return all(radical_membership(g, J) for g in I.gens)


def radical_equal(I: Ideal, J: Ideal) -> bool:
    return radical_contains(I, J) and radical_contains(J, I)


def exact_division(h: Poly, f: Poly) -> Poly:
    """h / f, assuming f divides h."""
    eng = Engine(h.ring.field, GREVLEX)
    fi = _to_internal(f)
    lf = eng.lead(fi)
    lc_inv = h.ring.field.inv(fi[lf])
    rem = _to_internal(h)
    quot = {}
    F = h.ring.field
    while rem:
        m = eng.lead(rem)
        if not all(a >= b for a, b in zip(m[1], lf[1])):
            raise ValueError(f"{f} does not divide {h}")
        shift = tuple(a - b for a, b in zip(m[1], lf[1]))
        q = F.mul(rem[m], lc_inv)
        quot[shift] = F.add(quot.get(shift, 0), q)
        eng._sub_multiple(rem, fi, q, shift)
    return Poly(h.ring, {e: c for e, c in quot.items() if c})


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I cap J by eliminating t from t*I + (1-t)*J."""
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal.zero(ring)
    t, = ring.fresh_names(1)
    big, embed = ring.extend([t], front=True, order=MonomialOrder("elimination", 1))
    tv = big.var(t)
    gens = [tv * embed(g) for g in I.gens] + [(big.one() - tv) * embed(g) for g in J.gens]
    gb = groebner_basis(gens, big, big.order)
    kept = [Poly(ring, {e[1:]: c for e, c in g.terms.items()}) for g in gb
            if all(e[0] == 0 for e in g.terms)]
    return Ideal(ring, kept)


def ideal_quotient(I: Ideal, f) -> Ideal:
    """(I : f) = {g : g f in I}."""
    f = I.ring(f)
    if not f:
        raise ValueError("quotient by the zero polynomial")
    if f.is_constant() or I.is_unit():
        return I
    if I.is_zero():
        return I
    inter = intersect(I, Ideal(I.ring, [f]))
    return Ideal(I.ring, [exact_division(g, f) for g in inter.groebner()])


def ideal_quotient_ideal(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) as the intersection of the (I : g) over generators g of J."""
    out = None
    for g in J.gens:
        q = ideal_quotient(I, g)
        out = q if out is None else intersect(out, q)
    return out if out is not None else Ideal.unit(I.ring)


def is_regular_element(f, c: Ideal) -> bool:
    """True iff f is a nonzerodivisor on R/c."""
    f = c.ring(f)
    if not f:
        raise ValueError("the zero polynomial is never regular")
    if c.is_unit():
        raise ValueError("R/c is the zero module")
    return ideal_quotient(c, f).is_subset(c)


def is_regular_sequence(seq, c: Ideal):
    """(verdict, first failing 1-based position or None).

    Each element must be a nonzerodivisor modulo c plus its predecessors, and
    the final quotient must be nonzero.  A position ``len(seq) + 1`` reports a
    failure of properness of the final quotient.
    """
    if c.is_unit():
        raise ValueError("R/c is the zero module")
    current = c
    for i, f in enumerate(seq, start=1):
        f = c.ring(f)
        if current.contains(f):
            return False, i
        if not ideal_quotient(current, f).is_subset(current):
            return False, i
        current = current + [f]
    if current.is_unit():
        return False, len(seq) + 1
    return True, None
