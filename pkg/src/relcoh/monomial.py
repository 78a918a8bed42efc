"""Combinatorics of monomial ideals: radicals, decompositions, Stanley-Reisner data.

Monomials are exponent tuples; squarefree monomials and faces are frozensets
of variable indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .ideals import Ideal
from .linalg import rank
from .poly import Field, Ring

MAX_VERTICES = 16


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minimalize(gens):
    gens = sorted(set(tuple(g) for g in gens), key=lambda g: (sum(g), g))
    out = []
    for g in gens:
        if not any(_divides(h, g) for h in out):
            out.append(g)
    return tuple(sorted(out))


class MonomialIdeal:
    """Monomial ideal of K[x_0..x_{n-1}] stored by its minimal generators."""

    __slots__ = ("n", "gens")

    def __init__(self, n: int, gens=()):
        self.n = n
        gens = [tuple(g) for g in gens]
        for g in gens:
            if len(g) != n or min(g, default=0) < 0:
                raise ValueError(f"bad exponent vector {g} for {n} variables")
        self.gens = _minimalize(gens)

    @classmethod
    def from_ideal(cls, I: Ideal) -> MonomialIdeal:
        if not I.is_monomial():
            raise ValueError(f"{I} is not a monomial ideal")
        return cls(I.ring.n, [g.exponents() for g in I.groebner()])

    @classmethod
    def from_supports(cls, n: int, supports) -> MonomialIdeal:
        return cls(n, [tuple(1 if i in s else 0 for i in range(n)) for s in supports])

    def to_ideal(self, ring: Ring) -> Ideal:
        return Ideal(ring, [ring.monomial(g) for g in self.gens])

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and (self.n, self.gens) == (other.n, other.gens)

    def __hash__(self):
        return hash((self.n, self.gens))

    def __repr__(self):
        return f"MonomialIdeal({self.n}, {list(self.gens)})"

    def __add__(self, other):
        return MonomialIdeal(self.n, self.gens + other.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    def is_squarefree(self) -> bool:
        return all(max(g, default=0) <= 1 for g in self.gens)

    def contains(self, exps) -> bool:
        return any(_divides(g, exps) for g in self.gens)

    def supports(self):
        return [frozenset(i for i, a in enumerate(g) if a) for g in self.gens]

    def max_exponents(self):
        """Per-variable maximum exponent among the generators."""
        return tuple(max((g[i] for g in self.gens), default=0) for i in range(self.n))

    def colon_monomial(self, exps) -> MonomialIdeal:
        """(I : x^exps)."""
        return MonomialIdeal(self.n, [tuple(max(a - b, 0) for a, b in zip(g, exps))
                                      for g in self.gens])

    def contains_ideal(self, other) -> bool:
        return all(self.contains(g) for g in other.gens)


def squarefree_radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.n, [tuple(1 if a else 0 for a in g) for g in I.gens])


def irreducible_decomposition(I: MonomialIdeal) -> list[MonomialIdeal]:
    """Irredundant decomposition into ideals generated by pure powers of variables."""
    if I.is_unit():
        raise ValueError("the unit ideal has no irreducible decomposition")
    found = set()
    stack = [I.gens]
    while stack:
        gens = stack.pop()
        for g in gens:
            supp = [i for i, a in enumerate(g) if a]
            if len(supp) > 1:
                i = supp[0]
                u = tuple(g[i] if k == i else 0 for k in range(I.n))
                v = tuple(0 if k == i else g[k] for k in range(I.n))
                rest = [h for h in gens if h != g]
                stack.append(_minimalize(rest + [u]))
                stack.append(_minimalize(rest + [v]))
                break
        else:
            found.add(gens)
    comps = [MonomialIdeal(I.n, gs) for gs in found]
    irredundant = [C for C in comps
                   if not any(D != C and C.contains_ideal(D) for D in comps)]
    return sorted(irredundant, key=lambda C: C.gens)


def associated_primes(I: MonomialIdeal) -> list[frozenset]:
    """Associated primes as sets of variable indices."""
    primes = {frozenset(i for g in C.gens for i, a in enumerate(g) if a)
              for C in irreducible_decomposition(I)}
    return sorted(primes, key=lambda p: (len(p), sorted(p)))


# -- simplicial complexes

def _maximal(sets):
    sets = sorted(set(frozenset(s) for s in sets), key=len, reverse=True)
    out = []
    for s in sets:
        if not any(s <= t for t in out):
            out.append(s)
    return out


class SimplicialComplex:
    """Complex on vertices 0..n_vertices-1, stored by facets.

    The void complex has no facets; the complex {emptyset} has the single facet {}.
    """

    def __init__(self, n_vertices: int, facets):
        if n_vertices > MAX_VERTICES:
            raise ValueError(f"at most {MAX_VERTICES} vertices supported")
        self.n_vertices = n_vertices
        self.facets = sorted(_maximal(facets), key=lambda f: (len(f), sorted(f)))

    def __repr__(self):
        return f"SimplicialComplex({self.n_vertices}, {[sorted(f) for f in self.facets]})"

    def __eq__(self, other):
        return (isinstance(other, SimplicialComplex) and self.n_vertices == other.n_vertices
                and set(self.facets) == set(other.facets))

    def is_void(self) -> bool:
        return not self.facets

    def contains(self, face) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    def faces(self):
        """All faces (lazy, each once)."""
        seen = set()
        for f in self.facets:
            items = sorted(f)
            for k in range(len(items) + 1):
                for sub in itertools.combinations(items, k):
                    s = frozenset(sub)
                    if s not in seen:
                        seen.add(s)
                        yield s

    def restriction(self, sigma) -> SimplicialComplex:
        sigma = frozenset(sigma)
        if self.is_void():
            return self
        return SimplicialComplex(self.n_vertices, [f & sigma for f in self.facets])

    def reduced_homology(self, field: Field) -> dict[int, int]:
        """Nonzero reduced Betti numbers {dimension: rank} over the field."""
        if self.is_void():
            return {}
        by_dim: dict[int, list] = {}
        for f in self.faces():
            by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
        index = {d: {f: i for i, f in enumerate(sorted(fs))} for d, fs in by_dim.items()}
        top = max(by_dim)
        ranks = {}
        for d in range(0, top + 1):
            rows = []
            for f in sorted(by_dim.get(d, [])):
                rows.append({index[d - 1][f[:k] + f[k + 1:]]: (-1) ** k for k in range(len(f))})
            ranks[d] = rank(rows, field) if rows else 0
        out = {}
        for d in range(-1, top + 1):
            h = len(by_dim.get(d, [])) - ranks.get(d, 0) - ranks.get(d + 1, 0)
            if h:
                out[d] = h
        return out


def stanley_reisner(I: MonomialIdeal) -> SimplicialComplex:
    """Complex whose faces are the squarefree monomials outside I."""
    if not I.is_squarefree():
        raise ValueError("Stanley-Reisner complex needs a squarefree ideal")
    if I.is_unit():
        raise ValueError("the unit ideal has no Stanley-Reisner complex")
    full = frozenset(range(I.n))
    if I.is_zero():
        return SimplicialComplex(I.n, [full])
    return SimplicialComplex(I.n, [full - p for p in associated_primes(I)])


def complex_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    """Stanley-Reisner ideal of a complex: minimal non-faces."""
    n = delta.n_vertices
    if delta.is_void():
        return MonomialIdeal(n, [(0,) * n])
    nonfaces = []
    for k in range(1, n + 1):
        for sub in itertools.combinations(range(n), k):
            s = frozenset(sub)
            if not delta.contains(s) and not any(t <= s for t in nonfaces):
                nonfaces.append(s)
    return MonomialIdeal.from_supports(n, nonfaces)


@dataclass
class BettiTable:
    """Multigraded Betti numbers beta_{i,sigma} of R/I (R/I has beta_{0,{}} = 1)."""

    n: int
    entries: dict = field(default_factory=dict)

    def totals(self) -> list[int]:
        if not self.entries:
            return []
        top = max(i for i, _ in self.entries)
        return [sum(v for (i, _), v in self.entries.items() if i == k) for k in range(top + 1)]

    def graded(self) -> dict[tuple[int, int], int]:
        out: dict = {}
        for (i, s), v in self.entries.items():
            out[(i, len(s))] = out.get((i, len(s)), 0) + v
        return out

    def ideal_totals(self) -> list[int]:
        """Betti numbers of I itself (shifted: beta_i(I) = beta_{i+1}(R/I))."""
        return self.totals()[1:]

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def as_dict(self):
        return {f"{i}:{''.join(map(str, sorted(s)))}": v for (i, s), v in sorted(
            self.entries.items(), key=lambda t: (t[0][0], sorted(t[0][1])))}


def hochster_betti(I: MonomialIdeal, field: Field | None = None) -> BettiTable:
    """beta_{i,sigma}(R/I) = dim reduced H_{|sigma|-i-1}(Delta restricted to sigma)."""
    field = field or Field(0)
    delta = stanley_reisner(I)
    table = BettiTable(I.n)
    for k in range(I.n + 1):
        for sub in itertools.combinations(range(I.n), k):
            sigma = frozenset(sub)
            for d, h in delta.restriction(sigma).reduced_homology(field).items():
                i = len(sigma) - d - 1
                table.entries[(i, sigma)] = h
    return table


def projective_dimension(I: MonomialIdeal, field: Field | None = None) -> int:
    return hochster_betti(I, field).projective_dimension


def depth_quotient(I: MonomialIdeal, field: Field | None = None) -> int:
    """depth R/I via Auslander-Buchsbaum."""
    return I.n - projective_dimension(I, field)


def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    """Ideal generated by complements of the facets of the Stanley-Reisner complex."""
    if not I.is_squarefree():
        raise ValueError("Alexander duality needs a squarefree ideal")
    n = I.n
    if I.is_unit():
        return MonomialIdeal(n, [])
    full = frozenset(range(n))
    delta = stanley_reisner(I)
    return MonomialIdeal.from_supports(n, [full - f for f in delta.facets])
