"""Local cohomology H^i_a(R/b) of monomial ideals via the Z^n-graded Cech complex.

A degree u in Z^n only matters through its *chamber*: per coordinate either
-1 (negative), an exact value 0..D_j-1, or D_j meaning ">= D_j", where D_j
bounds the exponents of b.  For squarefree b the grid is D = (1,...,1) and
chambers are sign patterns in {-1, 0, 1}^n.

In a chamber the Cech complex on the generators g_1..g_r of a has one basis
vector e_S for each subset S whose localization (R/b)_{g_S} is nonzero in
that degree: the negative coordinates must lie in supp(g_S) and no generator
of b may divide x^u away from supp(g_S).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import DegenerateModule
from .linalg import Echelon, nullspace, rank
from .monomial import MonomialIdeal, projective_dimension, squarefree_radical
from .poly import Field

NEG_INF = float("-inf")
MAX_VARIABLES = 12


def _popcount(m: int) -> int:
    return bin(m).count("1")


class CechComplex:
    """The finite cochain complex of one chamber (one sign pattern when squarefree)."""

    def __init__(self, chamber, r: int, valid, field: Field):
        self.chamber = tuple(chamber)
        self.r = r
        self.field = field
        self.valid = frozenset(valid)
        self.basis = [sorted(m for m in self.valid if _popcount(m) == t) for t in range(r + 1)]
        self.index = [{m: k for k, m in enumerate(b)} for b in self.basis]
        self.differentials = [self._differential(t) for t in range(r)]

    def _differential(self, t: int):
        """d^t : C^t -> C^{t+1} as rows indexed by the C^{t+1} basis."""
        rows = [dict() for _ in self.basis[t + 1]]
        tgt = self.index[t + 1]
        for col, S in enumerate(self.basis[t]):
            for j in range(self.r):
                bit = 1 << j
                if S & bit:
                    continue
                row = tgt.get(S | bit)
                if row is None:
                    continue
                sign = -1 if _popcount(S & (bit - 1)) % 2 else 1
                rows[row][col] = self.field(sign)
        return rows

    def dims(self) -> list[int]:
        return [len(b) for b in self.basis]

    def d(self, t: int):
        if 0 <= t < self.r:
            return self.differentials[t]
        return []

    def rank_d(self, t: int) -> int:
        return rank(self.d(t), self.field) if 0 <= t < self.r else 0

    def cohomology_dim(self, t: int) -> int:
        return len(self.basis[t]) - self.rank_d(t) - self.rank_d(t - 1)

    def cohomology(self) -> dict[int, int]:
        out = {}
        for t in range(self.r + 1):
            h = self.cohomology_dim(t)
            if h:
                out[t] = h
        return out

    def cocycles(self, t: int) -> list[dict]:
        if t >= self.r:
            return [{k: self.field(1)} for k in range(len(self.basis[t]))]
        return nullspace(self.d(t), len(self.basis[t]), self.field)

    def coboundaries(self, t: int) -> list[dict]:
        """Images of the C^{t-1} basis vectors under d^{t-1}."""
        if t == 0:
            return []
        rows = self.d(t - 1)
        cols = [dict() for _ in self.basis[t - 1]]
        for i, row in enumerate(rows):
            for j, v in row.items():
                cols[j][i] = v
        return [c for c in cols if c]

    def squares_to_zero(self) -> bool:
        F = self.field
        for t in range(self.r - 1):
            A, B = self.d(t + 1), self.d(t)
            for row in A:
                acc: dict = {}
                for k, a in row.items():
                    for j, b in B[k].items():
                        acc[j] = F.add(acc.get(j, 0), F.mul(a, b))
                if any(acc.values()):
                    return False
        return True


class CechModel:
    """Cech complexes of R/b with respect to the generators (supports) of a."""

    def __init__(self, a_supports, b: MonomialIdeal, field: Field, grid=None):
        self.n = b.n
        if self.n > MAX_VARIABLES:
            raise ValueError(f"at most {MAX_VARIABLES} variables supported")
        self.supports = [frozenset(s) for s in a_supports]
        self.r = len(self.supports)
        self.b = b
        self.field = field
        D = tuple(max(1, e) for e in b.max_exponents())
        self.grid = tuple(max(x, y) for x, y in zip(D, grid)) if grid else D
        self._fmask = []
        for mask in range(1 << self.r):
            bits = 0
            for j in range(self.r):
                if mask >> j & 1:
                    for v in self.supports[j]:
                        bits |= 1 << v
            self._fmask.append(bits)
        self._cache: dict = {}
        self._cover = 0
        for s in self.supports:
            for v in s:
                self._cover |= 1 << v

    def chambers(self):
        """All chambers whose negative coordinates lie in supp(a)."""
        ranges = []
        for j in range(self.n):
            lo = -1 if self._cover >> j & 1 else 0
            ranges.append(range(lo, self.grid[j] + 1))
        return itertools.product(*ranges)

    def _module_ok(self, fbits: int, chamber) -> bool:
        for h in self.b.gens:
            if all(h[j] <= chamber[j] for j in range(self.n) if not fbits >> j & 1):
                return False
        return True

    def valid(self, chamber) -> frozenset:
        neg = 0
        for j, c in enumerate(chamber):
            if c < 0:
                neg |= 1 << j
        ok_by_f: dict = {}
        out = []
        for mask, fbits in enumerate(self._fmask):
            if neg & ~fbits:
                continue
            ok = ok_by_f.get(fbits)
            if ok is None:
                ok = ok_by_f[fbits] = self._module_ok(fbits, chamber)
            if ok:
                out.append(mask)
        return frozenset(out)

    def complex(self, chamber) -> CechComplex:
        v = self.valid(chamber)
        cx = self._cache.get(v)
        if cx is None:
            cx = self._cache[v] = CechComplex(chamber, self.r, v, self.field)
        if cx.chamber != tuple(chamber):
            cx = _rechamber(cx, chamber)
        return cx


def _rechamber(cx: CechComplex, chamber) -> CechComplex:
    out = object.__new__(CechComplex)
    out.__dict__.update(cx.__dict__)
    out.chamber = tuple(chamber)
    return out


def chamber_label(chamber, grid) -> str:
    parts = []
    for c, D in zip(chamber, grid):
        if c < 0:
            parts.append("-")
        elif D == 1:
            parts.append("0" if c == 0 else "+")
        elif c >= D:
            parts.append(f">={D}")
        else:
            parts.append(str(c))
    return ",".join(parts) if any(D > 1 for D in grid) else "".join(parts)


@dataclass
class CohomologyProfile:
    """Dimensions of the graded pieces of H^i_a(R/b) per chamber, and cd."""

    n: int
    grid: tuple
    generators: list
    dims: dict = field(default_factory=dict)
    cd: float = NEG_INF
    substitutions: list = field(default_factory=list)
    degenerate: bool = False

    def nonvanishing(self, i: int) -> bool:
        return any(k == i for k, _ in self.dims)

    def degrees(self) -> list[int]:
        return sorted({i for i, _ in self.dims})

    def as_dict(self):
        return {
            "cd": None if self.cd == NEG_INF else self.cd,
            "cd_is_minus_infinity": self.cd == NEG_INF,
            "grid": list(self.grid),
            "generators": [sorted(s) for s in self.generators],
            "substitutions": list(self.substitutions),
            "pieces": [
                {"i": i, "chamber": list(ch), "label": chamber_label(ch, self.grid), "dim": d}
                for (i, ch), d in sorted(self.dims.items())
            ],
        }


def _radical_supports(a: MonomialIdeal):
    return sorted(squarefree_radical(a).supports(), key=lambda s: sorted(s))


def cech_profile(a: MonomialIdeal, b: MonomialIdeal, field: Field | None = None,
                 exact: bool = False, generators=None) -> CohomologyProfile:
    """Graded pieces of H^i_a(R/b) for monomial a, b.

    By default b is replaced by its radical (cd only depends on the support);
    ``exact=True`` keeps R/b itself.  ``generators`` overrides the generating
    supports used for a (they must generate an ideal with the radical of a).
    """
    field = field or Field(0)
    if a.n != b.n:
        raise ValueError("ideals live in different rings")
    subs = []
    if not exact and not b.is_squarefree():
        subs.append("b replaced by its radical")
        b = squarefree_radical(b)
    if not a.is_squarefree():
        subs.append("a replaced by its radical")
    supports = [frozenset(s) for s in generators] if generators is not None else _radical_supports(a)
    prof = CohomologyProfile(a.n, (), supports, substitutions=subs)
    if b.is_unit() or (a + b).is_unit() or any(not s for s in supports):
        prof.grid = tuple(1 for _ in range(a.n))
        prof.degenerate = True
        return prof
    model = CechModel(supports, b, field)
    prof.grid = model.grid
    for ch in model.chambers():
        cx = model.complex(ch)
        for i, h in cx.cohomology().items():
            prof.dims[(i, ch)] = h
    prof.cd = max((i for i, _ in prof.dims), default=NEG_INF)
    return prof


def cd_monomial(a: MonomialIdeal, b: MonomialIdeal, field: Field | None = None):
    """cd(a, R/b); NEG_INF when a + b is the unit ideal."""
    return cech_profile(a, b, field).cd


def lyubeznik_check(a: MonomialIdeal, field: Field | None = None) -> bool:
    """cd(a, R) == pd(R/a) for squarefree a."""
    if not a.is_squarefree() or a.is_unit():
        raise ValueError("needs a proper squarefree ideal")
    zero = MonomialIdeal(a.n, [])
    return cd_monomial(a, zero, field) == projective_dimension(a, field)


# -- multiplication maps between chambers

def source_chambers(target, e, grid):
    """Chambers of u = v - e as v ranges over the target chamber."""
    options = []
    for t, ej, D in zip(target, e, grid):
        if ej == 0:
            options.append([t])
        elif t < 0:
            options.append([-1])
        elif t < D:
            options.append([t - ej] if t - ej >= 0 else [-1])
        else:
            opts = set()
            lo = D - ej
            if lo < 0:
                opts.add(-1)
            for val in range(max(0, lo), D):
                opts.add(val)
            opts.add(D)
            options.append(sorted(opts))
    return itertools.product(*options)


def target_chambers(source, e, grid):
    """Chambers of u + e as u ranges over the source chamber."""
    options = []
    for s, ej, D in zip(source, e, grid):
        if ej == 0:
            options.append([s])
        elif s < 0:
            opts = {-1}
            for val in range(0, ej):
                opts.add(min(val, D))
            options.append(sorted(opts))
        else:
            options.append([min(s + ej, D)])
    return itertools.product(*options)


def _transfer(vecs, src: CechComplex, tgt: CechComplex, t: int):
    """Map cochains of src to tgt by e_S -> e_S (zero where tgt has no e_S)."""
    sb = src.basis[t]
    ti = tgt.index[t]
    out = []
    for v in vecs:
        w = {}
        for k, x in v.items():
            j = ti.get(sb[k])
            if j is not None:
                w[j] = x
        out.append(w)
    return out


def induced_surjective(src: CechComplex, tgt: CechComplex, t: int) -> bool:
    """Is the identity-on-subsets chain map surjective on H^t?"""
    F = tgt.field
    z_tgt = len(tgt.basis[t]) - tgt.rank_d(t)
    if z_tgt - tgt.rank_d(t - 1) == 0:
        return True
    ech = Echelon(F)
    for v in tgt.coboundaries(t):
        ech.add(v)
    for v in _transfer(src.cocycles(t), src, tgt, t):
        ech.add(v)
    return ech.rank == z_tgt


@dataclass
class SurjectivityReport:
    surjective: bool
    degree: int
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.surjective


def mult_surjective(a: MonomialIdeal, b: MonomialIdeal, x, i: int,
                    field: Field | None = None) -> SurjectivityReport:
    """Is multiplication by the monomial x^x surjective on H^i_a(R/b)? Decided per chamber."""
    field = field or Field(0)
    x = tuple(x)
    if not a.contains(x):
        raise ValueError(f"monomial {x} is not in a")
    if b.is_unit() or (a + b).is_unit():
        return SurjectivityReport(True, i)
    model = CechModel(_radical_supports(a), b, field)
    report = SurjectivityReport(True, i)
    for v in model.chambers():
        tgt = model.complex(v)
        if i > model.r or not tgt.cohomology_dim(i):
            continue
        for u in source_chambers(v, x, model.grid):
            src = model.complex(u)
            if not induced_surjective(src, tgt, i):
                report.surjective = False
                report.failures.append({"source": list(u), "target": list(v)})
    return report


# -- Lemma-type exactness checks


@dataclass
class ExactnessReport:
    index: int
    degree: int
    right_exact: bool = True
    middle_exact: bool = True
    top_isomorphism: bool = True
    failures: list = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.right_exact and self.middle_exact and self.top_isomorphism

    def as_dict(self):
        return {"index": self.index, "degree": self.degree, "exact": self.exact,
                "right_exact": self.right_exact, "middle_exact": self.middle_exact,
                "top_isomorphism": self.top_isomorphism, "failures": self.failures}


def _span_rank(*groups, field: Field) -> int:
    ech = Echelon(field)
    for g in groups:
        for v in g:
            ech.add(v)
    return ech.rank


def lemma24_verify(gens, b: MonomialIdeal, i: int, field: Field | None = None) -> ExactnessReport:
    """Check H^{d-i}_a(M'/x_i M') -> H^{d-i+1}_a(M') -x_i-> H^{d-i+1}_a(M') -> 0 degreewise.

    a = <gens> (monomial exponent tuples), M = R/b, M' = M/<x_1..x_{i-1}>M.
    The connecting map comes from 0 -> M'/(0:x_i) -x_i-> M' -> M'/x_i M' -> 0;
    the report also checks that H^{d-i+1}_a(M') -> H^{d-i+1}_a(M'/(0:x_i)) is
    an isomorphism, which identifies that sequence with the one above.
    """
    field = field or Field(0)
    gens = [tuple(g) for g in gens]
    d = len(gens)
    if not 1 <= i <= d:
        raise ValueError(f"index {i} out of range 1..{d}")
    n = b.n
    xi = gens[i - 1]
    J = MonomialIdeal(n, b.gens + tuple(gens[:i - 1]))
    Jq = MonomialIdeal(n, J.gens + (xi,))
    Jk = J.colon_monomial(xi)
    top = d - i + 1
    report = ExactnessReport(i, top)
    if J.is_unit():
        return report
    supports = [frozenset(k for k, e in enumerate(g) if e) for g in gens]
    if any(not s for s in supports):
        raise DegenerateModule("a is the unit ideal")
    grid = tuple(max(1, *es) for es in zip(J.max_exponents(), Jq.max_exponents(), Jk.max_exponents()))
    mM = CechModel(supports, J, field, grid)
    mQ = CechModel(supports, Jq, field, grid)
    mK = CechModel(supports, Jk, field, grid)

    for u in mM.chambers():
        cM_u = mM.complex(u)
        cK_u = mK.complex(u)
        # projection M' -> K is an isomorphism on H^top in degree u
        hM = cM_u.cohomology_dim(top)
        hK = cK_u.cohomology_dim(top)
        if hM != hK or (hK and not induced_surjective(cM_u, cK_u, top)):
            report.top_isomorphism = False
            report.failures.append({"chamber": list(u), "check": "top_isomorphism"})
        for w in target_chambers(u, xi, mM.grid):
            cM_w = mM.complex(w)
            cQ_w = mQ.complex(w)
            # right exactness: x_i : H^top(M')_u -> H^top(M')_w onto
            if not induced_surjective(cM_u, cM_w, top):
                report.right_exact = False
                report.failures.append({"chamber": list(u), "target": list(w), "check": "right"})
            if not _middle_exact(cQ_w, cM_w, cK_u, top, field):
                report.middle_exact = False
                report.failures.append({"chamber": list(u), "target": list(w), "check": "middle"})
    return report


def _middle_exact(cQ: CechComplex, cM: CechComplex, cK: CechComplex, top: int, field: Field) -> bool:
    """im(delta : H^{top-1}(Q)_w -> H^top(K)_u) == ker(H^top(K)_u -> H^top(M')_w)."""
    k = top - 1
    # connecting map on cocycle representatives
    delta_imgs = []
    for z in cQ.cocycles(k) if k >= 0 else []:
        y = _transfer([z], cQ, cM, k)[0]                # lift to M'
        dy = {}
        for row_i, row in enumerate(cM.d(k)):
            s = 0
            for col, val in row.items():
                if col in y:
                    s = field.add(s, field.mul(val, y[col]))
            if s:
                dy[row_i] = s
        t = {}
        for idx, val in dy.items():
            S = cM.basis[top][idx]
            j = cK.index[top].get(S)
            if j is None:
                return False                              # dy not in the image of x_i
            t[j] = val
        delta_imgs.append(t)
    bK = cK.coboundaries(top)
    zK = cK.cocycles(top)
    # ker of iota_* : classes of Z(K) whose image lies in B(M')
    imgs = _transfer(zK, cK, cM, top)
    bM = cM.coboundaries(top)
    cols = imgs + bM
    # nullspace of the matrix with these columns, projected onto the zK part
    ncols = len(cols)
    rows: dict = {}
    for c, vec in enumerate(cols):
        for r, val in vec.items():
            rows.setdefault(r, {})[c] = val
    null = nullspace(list(rows.values()), ncols, field)
    kernel = []
    for lam in null:
        v: dict = {}
        for c, coef in lam.items():
            if c < len(zK):
                for r, val in zK[c].items():
                    v[r] = field.add(v.get(r, 0), field.mul(coef, val))
        v = {r: x for r, x in v.items() if x}
        if v:
            kernel.append(v)
    r_im = _span_rank(delta_imgs, bK, field=field)
    r_ker = _span_rank(kernel, bK, field=field)
    r_all = _span_rank(delta_imgs, kernel, bK, field=field)
    return r_im == r_ker == r_all
