"""Submodules of free modules: syzygies, lifts, free resolutions, Koszul grade."""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field

from .errors import DegenerateModule
from .groebner import Engine
from .ideals import Ideal, ideal_quotient_ideal
from .poly import GREVLEX, Poly, Ring


def _vec_to_internal(vec, offset: int = 0):
    out = {}
    for comp, f in enumerate(vec):
        for e, c in f.terms.items():
            out[(comp + offset, e)] = c
    return out


def _internal_to_vec(ring: Ring, d, rank: int, offset: int = 0):
    parts = [dict() for _ in range(rank)]
    for (comp, e), c in d.items():
        parts[comp - offset][e] = c
    return tuple(Poly(ring, p) for p in parts)


def _lead_comp(eng: Engine, d) -> int:
    return eng.lead(d)[0]


class Submodule:
    """Submodule of R^rank generated by vectors (tuples of Poly), with a cached basis."""

    def __init__(self, ring: Ring, rank: int, gens=()):
        self.ring = ring
        self.rank = rank
        self.gens = [tuple(ring(x) for x in v) for v in gens]
        for v in self.gens:
            if len(v) != rank:
                raise ValueError(f"vector of length {len(v)} in a rank-{rank} module")
        self._engine = Engine(ring.field, GREVLEX, module=True, pot=False)
        self._gb = None
        self._lock = threading.Lock()

    def _basis(self):
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    gb = self._engine.buchberger([_vec_to_internal(v) for v in self.gens if any(v)])
                    self._gb = self._engine.basis_triples(gb)
        return self._gb

    def reduce(self, vec):
        r = self._engine.normal_form(_vec_to_internal(vec), self._basis())
        return _internal_to_vec(self.ring, r, self.rank)

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))


def _image_basis(eng: Engine, rows, rank: int):
    """Groebner basis of the image (first ``rank`` components) with cofactors attached."""
    return eng.basis_triples(eng.buchberger(rows, image_rank=rank))


def syzygies(vectors, ring: Ring | None = None) -> list[tuple[Poly, ...]]:
    """Generators of the kernel of R^k -> R^m sending e_j to vectors[j].

    Schreyer's construction: a Groebner basis G of the image is computed with
    cofactors, then every S-pair of G and every input vector is reduced by G
    until its image part vanishes; the cofactor parts left over generate the
    kernel.  The kernel itself is never completed to a Groebner basis.
    """
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return []
    ring = ring or vectors[0][0].ring
    m = len(vectors[0])
    k = len(vectors)
    zero = (0,) * ring.n
    eng = Engine(ring.field, GREVLEX, module=True, pot=True)
    rows = []
    for j, v in enumerate(vectors):
        d = _vec_to_internal(v)
        d[(m + j, zero)] = ring.field(1)
        rows.append(d)
    basis = _image_basis(eng, rows, m)
    candidates = list(rows)
    for (f, lf, _), (g, lg, _) in itertools.combinations(basis, 2):
        if lf[0] == lg[0]:
            candidates.append(eng.spoly(f, lf, g, lg))
    out = []
    seen = set()
    for d in candidates:
        r = eng.normal_form(d, basis, full=False)
        if not r:
            continue
        assert min(comp for comp, _ in r) >= m
        vec = _internal_to_vec(ring, eng.monic(r), k, offset=m)
        if vec not in seen:
            seen.add(vec)
            out.append(vec)
    return out


def lift(f: Poly, gens) -> list[Poly] | None:
    """Cofactors q with f = sum q_j gens[j], or None when f is not in the ideal."""
    ring = f.ring
    gens = [ring(g) for g in gens]
    k = len(gens)
    zero = (0,) * ring.n
    eng = Engine(ring.field, GREVLEX, module=True, pot=True)
    rows = []
    for j, g in enumerate(gens):
        d = {(0, e): c for e, c in g.terms.items()}
        d[(1 + j, zero)] = ring.field(1)
        rows.append(d)
    basis = _image_basis(eng, rows, 1)
    nf = eng.normal_form({(0, e): c for e, c in f.terms.items()}, basis, full=False)
    if any(comp == 0 for comp, _ in nf):
        return None
    vec = _internal_to_vec(ring, nf, k, offset=1)
    return [-q for q in vec]


# -- free resolutions

def _vec_degree(vec, shifts) -> int:
    return max(f.total_degree() + s for f, s in zip(vec, shifts) if f)


def _minimalize(vectors, ring, rank, shifts):
    """Drop generators lying in the span of the others (graded Nakayama order)."""
    vectors = [v for v in vectors if any(v)]
    vectors.sort(key=lambda v: _vec_degree(v, shifts))
    kept = []
    for v in vectors:
        if kept and Submodule(ring, rank, kept).contains(v):
            continue
        kept.append(v)
    return kept


@dataclass
class Resolution:
    """Free resolution of R/I; ``maps[k]`` is d_{k+1} as a matrix (rows x columns).

    d_1 : R^{b_1} -> R is the row of generators of I.
    """

    ring: Ring
    maps: list = field(default_factory=list)
    minimal: bool = False
    truncated: bool = False

    @property
    def length(self) -> int:
        return len(self.maps)

    def ranks(self) -> list[int]:
        return [1] + [len(m[0]) if m else 0 for m in self.maps]

    def compose_is_zero(self) -> bool:
        for A, B in zip(self.maps, self.maps[1:]):
            for i in range(len(A)):
                for j in range(len(B[0])):
                    s = self.ring.zero()
                    for t in range(len(B)):
                        s = s + A[i][t] * B[t][j]
                    if s:
                        return False
        return True

    def has_constant_entries(self) -> bool:
        return any(x and x.is_constant() for M in self.maps for row in M for x in row)


def _columns_to_matrix(cols, rows: int):
    return [[c[i] for c in cols] for i in range(rows)]


def _prune_units(maps, ring):
    """Cancel unit entries d_k[i][j], splitting off R -> R summands."""
    F = ring.field
    changed = True
    while changed:
        changed = False
        for k, D in enumerate(maps):
            if not D or not D[0]:
                continue
            hit = None
            for i, row in enumerate(D):
                for j, x in enumerate(row):
                    if x and x.is_constant():
                        hit = (i, j)
                        break
                if hit:
                    break
            if hit is None:
                continue
            i, j = hit
            u_inv = F.inv(D[i][j].constant_coefficient())
            new = []
            for r, row in enumerate(D):
                if r == i:
                    continue
                new.append([row[s] - (row[j] * D[i][s]).scale(u_inv)
                            for s in range(len(row)) if s != j])
            maps[k] = new
            if k > 0:
                maps[k - 1] = [[x for s, x in enumerate(row) if s != i] for row in maps[k - 1]]
            if k + 1 < len(maps):
                maps[k + 1] = [row for r, row in enumerate(maps[k + 1]) if r != j]
            changed = True
            break
    while maps and (not maps[-1] or not maps[-1][0]):
        maps.pop()
    return maps


def free_resolution(I: Ideal, max_length: int) -> Resolution:
    """Free resolution of R/I by iterated syzygies, minimized."""
    ring = I.ring
    if I.is_unit():
        raise ValueError("R/I is zero")
    if I.is_zero():
        return Resolution(ring, [], minimal=True)
    gens = _minimalize([(g,) for g in I.groebner()], ring, 1, [0])
    shifts = [_vec_degree(v, [0]) for v in gens]
    maps = [_columns_to_matrix(gens, 1)]
    truncated = False
    cols = gens
    while True:
        syz = syzygies(cols, ring)
        syz = _minimalize(syz, ring, len(cols), shifts)
        if not syz:
            break
        if len(maps) >= max_length:
            truncated = True
            break
        shifts = [_vec_degree(v, shifts) for v in syz]
        maps.append(_columns_to_matrix(syz, len(cols)))
        cols = syz
    maps = _prune_units(maps, ring)
    res = Resolution(ring, maps, truncated=truncated)
    res.minimal = not res.has_constant_entries()
    return res


# -- Koszul homology

def _koszul_columns(gens, i: int, ring: Ring):
    """Columns of d_i : K_i -> K_{i-1} for the Koszul complex on gens."""
    r = len(gens)
    src = list(itertools.combinations(range(r), i))
    tgt = {S: t for t, S in enumerate(itertools.combinations(range(r), i - 1))}
    cols = []
    for S in src:
        col = [ring.zero()] * len(tgt)
        for pos, s in enumerate(S):
            face = S[:pos] + S[pos + 1:]
            term = gens[s] if pos % 2 == 0 else -gens[s]
            col[tgt[face]] = col[tgt[face]] + term
        cols.append(tuple(col))
    return cols, len(tgt)


def koszul_homology_nonzero(gens, c: Ideal, i: int) -> bool:
    """Decide H_i(gens; R/c) != 0 for 1 <= i <= len(gens)."""
    ring = c.ring
    r = len(gens)
    cols_i, rows_i = _koszul_columns(gens, i, ring)
    size_i = len(cols_i)
    zero = ring.zero()
    # cycles: v with d_i v in c R^{K_{i-1}}
    extra = []
    for t in range(rows_i):
        for g in c.gens:
            unit = [zero] * rows_i
            unit[t] = g
            extra.append(tuple(unit))
    syz = syzygies(cols_i + extra, ring)
    cycles = [v[:size_i] for v in syz if any(v[:size_i])]
    if not cycles:
        return False
    bounds = []
    if i < r:
        bounds, _ = _koszul_columns(gens, i + 1, ring)
    for t in range(size_i):
        for g in c.gens:
            unit = [zero] * size_i
            unit[t] = g
            bounds.append(tuple(unit))
    B = Submodule(ring, size_i, bounds)
    return any(not B.contains(z) for z in cycles)


def koszul_grade(gens, c: Ideal) -> int:
    """grade(<gens>, R/c) = r - max{i : H_i(gens; R/c) != 0}."""
    ring = c.ring
    gens = [ring(g) for g in gens]
    if not gens:
        raise ValueError("koszul_grade needs a nonempty generator list")
    if (c + gens).is_unit():
        raise DegenerateModule("M = aM: c + a is the unit ideal")
    r = len(gens)
    if not ideal_quotient_ideal(c, Ideal(ring, gens)).is_subset(c):
        return 0
    for i in range(r - 1, 0, -1):
        if koszul_homology_nonzero(gens, c, i):
            return r - i
    return r
