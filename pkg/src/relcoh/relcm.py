"""Relative systems of parameters, arithmetic rank and relative Cohen-Macaulayness.

Modules are cyclic, M = R/c, so Ann M = c.  cd is decided exactly whenever
the radicals of a and c are monomial; everything else (grade, radical
equality, regularity) works for arbitrary polynomial data.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .errors import (DegenerateModule, HypothesisFailure, InternalInconsistency,
                     NotInIdeal, UnsupportedInput, WrongLength)
from .ideals import (Ideal, ideal_quotient, ideal_quotient_ideal, is_regular_element,
                     is_regular_sequence, radical_contains, radical_equal,
                     radical_membership)
from .local_cohomology import NEG_INF, cech_profile, cd_monomial, mult_surjective
from .monomial import MonomialIdeal, associated_primes, squarefree_radical
from .poly import Poly

MAX_RADICAL_PROBE_VARS = 8


@dataclass
class SearchConfig:
    """Bounds for the candidate search behind ara and Rs.o.p queries."""

    degree_bound: int = 2
    max_terms: int = 2
    search_limit: int = 4000
    seed: int = 0
    trials: int = 30


class ModulePresentation:
    """The module M = R/c together with the ideal a."""

    def __init__(self, a: Ideal, c: Ideal | None = None):
        self.ring = a.ring
        self.a = a
        self.c = c if c is not None else Ideal.zero(a.ring)
        if self.c.ring != self.ring:
            raise ValueError("a and c live in different rings")

    def __repr__(self):
        return f"ModulePresentation(a={self.a}, c={self.c})"

    @property
    def homogeneous(self) -> bool:
        return self.a.is_homogeneous() and self.c.is_homogeneous()

    @property
    def graded(self) -> bool:
        """Homogeneous data with a inside the irrelevant ideal."""
        return self.homogeneous and all(g.total_degree() > 0 for g in self.a.gens)

    def is_degenerate(self) -> bool:
        """M = aM, i.e. a + c is the unit ideal."""
        return (self.a + self.c).is_unit()

    def quotient(self, elements) -> ModulePresentation:
        """M / <elements> M."""
        return ModulePresentation(self.a, self.c + list(elements))


# -- cd

def monomial_radical(I: Ideal) -> MonomialIdeal | None:
    """Rad(I) as a squarefree monomial ideal, or None when it is not monomial."""
    n = I.ring.n
    if I.is_monomial():
        return squarefree_radical(MonomialIdeal.from_ideal(I))
    if n > MAX_RADICAL_PROBE_VARS:
        return None
    # minimal squarefree monomials in Rad(I), by increasing degree
    found: list[frozenset] = []
    for k in range(1, n + 1):
        for sub in itertools.combinations(range(n), k):
            s = frozenset(sub)
            if any(f <= s for f in found):
                continue
            m = I.ring.monomial(tuple(1 if i in s else 0 for i in range(n)))
            if radical_membership(m, I):
                found.append(s)
    J = MonomialIdeal.from_supports(n, found)
    # Rad(I) = J iff every term of every generator lies in J
    for g in I.gens:
        if not all(J.contains(e) for e in g.terms):
            return None
    return J


def _monomial_data(mp: ModulePresentation):
    a = monomial_radical(mp.a)
    c = monomial_radical(mp.c) if not mp.c.is_zero() else MonomialIdeal(mp.ring.n, [])
    if a is None or c is None:
        raise UnsupportedInput("cd needs a and c with monomial radicals")
    return a, c


def cd(mp: ModulePresentation):
    """cd(a, R/c); NEG_INF when M = aM."""
    if mp.is_degenerate():
        return NEG_INF
    a, c = _monomial_data(mp)
    return cd_monomial(a, c)


# -- grade

def grade(mp: ModulePresentation) -> int:
    """grade(a, R/c) from Koszul homology."""
    from .modules import koszul_grade
    if mp.is_degenerate():
        raise DegenerateModule("M = aM: grade is not defined")
    gens = [g for g in mp.a.gens if g]
    if not gens:
        return 0
    return koszul_grade(gens, mp.c)


@dataclass
class GradeSearch:
    """A regular sequence in a built one element at a time."""

    sequence: list = field(default_factory=list)
    certified: bool = True
    methods: list = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.sequence)


def _avoiding_monomial(gens, J: Ideal):
    """A monomial generator of a outside every associated prime of the monomial J."""
    primes = associated_primes(MonomialIdeal.from_ideal(J)) if not J.is_zero() else []
    for g in gens:
        if not g.is_monomial():
            continue
        supp = g.support()
        if all(not (supp & p) for p in primes):
            return g
    return None


def grade_by_search(mp: ModulePresentation, seed: int = 0, trials: int = 30) -> GradeSearch:
    """Grow a maximal regular sequence inside a, certifying each step.

    The search stops exactly when (J : a) != J, i.e. a consists of zerodivisors
    on R/J.  Monomial J uses prime avoidance over its associated primes;
    otherwise seeded random combinations of the generators are tried and
    verified.  ``certified`` is False only if every trial failed.
    """
    if mp.is_degenerate():
        raise DegenerateModule("M = aM: grade is not defined")
    rng = random.Random(seed)
    ring = mp.ring
    gens = [g for g in mp.a.gens if g]
    out = GradeSearch()
    J = mp.c
    while True:
        if not ideal_quotient_ideal(J, mp.a).is_subset(J):
            return out
        pick = None
        if J.is_monomial():
            pick = _avoiding_monomial(gens, J)
            if pick is not None:
                out.methods.append("prime-avoidance")
        if pick is None:
            for g, h in itertools.combinations(gens, 2):
                for f in (g + h, g - h):
                    if f and is_regular_element(f, J):
                        pick = f
                        break
                if pick is not None:
                    out.methods.append("pair-sum")
                    break
        if pick is None:
            for _ in range(trials):
                f = sum((ring.constant(rng.randint(1, 97)) * g for g in gens), ring.zero())
                if f and is_regular_element(f, J):
                    pick = f
                    out.methods.append("generic")
                    break
        if pick is None:
            out.certified = False
            return out
        out.sequence.append(pick)
        J = J + [pick]


# -- Rs.o.p

@dataclass
class RsopReport:
    sequence: list
    condition_i: bool
    condition_ii: list | None = None
    condition_iii: list | None = None
    cd: object = None
    certificates: list = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return self.condition_i

    def as_dict(self):
        return {
            "sequence": [str(x) for x in self.sequence],
            "verdict": self.verdict,
            "condition_i": self.condition_i,
            "condition_ii": self.condition_ii,
            "condition_iii": self.condition_iii,
            "cd": _cd_json(self.cd),
            "certificates": self.certificates,
        }


def _cd_json(value):
    return "-inf" if value == NEG_INF else value


def _all_monomial(seq, mp: ModulePresentation) -> bool:
    return all(x.is_monomial() for x in seq) and mp.a.is_monomial() and mp.c.is_monomial()


def is_rsop(seq, mp: ModulePresentation, cd_value=None) -> RsopReport:
    """Decide whether seq is an a-Rs.o.p of M, cross-checking the equivalent conditions.

    For monomial data it also computes, for each prefix, cd(a, M/<x_1..x_i>M)
    (which must be c - i) and whether x_i acts surjectively on
    H^{c-i+1}_a(M/<x_1..x_{i-1}>M).  On such data the three conditions must
    agree, and a disagreement raises InternalInconsistency.
    """
    ring = mp.ring
    seq = [ring(x) for x in seq]
    c_val = cd(mp) if cd_value is None else cd_value
    if c_val == NEG_INF:
        raise DegenerateModule("M = aM: no Rs.o.p is defined")
    if len(seq) != c_val:
        raise WrongLength(f"an Rs.o.p has length cd = {c_val}, got {len(seq)}")
    for k, x in enumerate(seq, start=1):
        if not mp.a.contains(x):
            raise NotInIdeal(f"element {k} ({x}) is not in a")
    target = mp.a + mp.c
    cond_i = radical_equal(mp.c + seq, target)
    report = RsopReport(seq, cond_i, cd=c_val)
    report.certificates.append(
        "Rad(<seq> + c) = Rad(a + c)" if cond_i else "Rad(<seq> + c) != Rad(a + c)")
    if not _all_monomial(seq, mp):
        return report
    a_m = MonomialIdeal.from_ideal(mp.a)
    exps = [x.exponents() for x in seq]
    cds, surj = [], []
    for i in range(1, c_val + 1):
        prefix = MonomialIdeal.from_ideal(mp.c + seq[:i])
        before = MonomialIdeal.from_ideal(mp.c + seq[:i - 1]) if i > 1 else _c_monomial(mp)
        cds.append(cd_monomial(a_m, prefix))
        surj.append(bool(mult_surjective(a_m, before, exps[i - 1], c_val - i + 1)))
    report.condition_iii = cds
    report.condition_ii = surj
    iii = all(v == c_val - i for i, v in enumerate(cds, start=1))
    ii = all(surj)
    if cond_i and not (ii and iii):
        raise InternalInconsistency(f"Rs.o.p {seq} violates a necessary condition: ii={ii}, iii={iii}")
    if not cond_i and (ii or iii):
        raise InternalInconsistency(f"graded conditions ii={ii}, iii={iii} hold for a non-Rs.o.p {seq}")
    return report


def _c_monomial(mp: ModulePresentation) -> MonomialIdeal:
    if mp.c.is_zero():
        return MonomialIdeal(mp.ring.n, [])
    return MonomialIdeal.from_ideal(mp.c)


# -- candidate search for ara and Rs.o.p

def _monomials_up_to(n: int, degree: int):
    out = []
    for d in range(degree + 1):
        for combo in itertools.combinations_with_replacement(range(n), d):
            e = [0] * n
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return out


def _generators(a: Ideal) -> list[Poly]:
    if a.is_monomial():
        return [a.ring.monomial(e) for e in MonomialIdeal.from_ideal(a).gens]
    seen, out = set(), []
    for g in a.gens:
        if g and g.monic() not in seen:
            seen.add(g.monic())
            out.append(g)
    return out


def candidate_pool(a: Ideal, config: SearchConfig):
    """Elements of a in enumeration order: generators, then signed monomial combinations.

    Each entry is (cost, element); cost counts extra summands plus multiplier degree.
    """
    ring = a.ring
    gens = _generators(a)
    pool = [(0, g) for g in gens]
    seen = {g.monic() for g in gens}
    mons = _monomials_up_to(ring.n, config.degree_bound)
    extra = []
    for k in range(2, min(config.max_terms, len(gens)) + 1):
        for idx in itertools.combinations(range(len(gens)), k):
            for mults in itertools.product(mons, repeat=k):
                deg = sum(sum(m) for m in mults)
                if deg > config.degree_bound:
                    continue
                for signs in itertools.product((1, -1), repeat=k - 1):
                    f = gens[idx[0]].mul_monomial(mults[0])
                    for s, j, m in zip(signs, idx[1:], mults[1:]):
                        f = f + gens[j].mul_monomial(m, s)
                    if not f:
                        continue
                    key = f.monic()
                    if key in seen:
                        continue
                    seen.add(key)
                    extra.append((k - 1 + deg, f))
    extra.sort(key=lambda t: t[0])
    return pool + extra


@dataclass
class AraBounds:
    lower: int
    upper: int | None = None
    certificate: list | None = None
    lower_from: str = "cd"
    checked: int = 0
    exhausted: bool = False

    @property
    def exact(self) -> bool:
        return self.upper is not None and self.upper == self.lower

    def as_dict(self):
        return {
            "lower": self.lower,
            "lower_from": self.lower_from,
            "upper": self.upper,
            "exact": self.exact,
            "certificate": None if self.certificate is None else [str(x) for x in self.certificate],
            "candidates_checked": self.checked,
            "search_exhausted": self.exhausted,
        }


def _generates_up_to_radical(elements, mp: ModulePresentation) -> bool:
    return radical_contains(mp.a, mp.c + list(elements))


def search_generating_set(mp: ModulePresentation, size: int, config: SearchConfig,
                          pool=None, budget=None):
    """First set of ``size`` pool elements with Rad(<set> + c) = Rad(a + c).

    Returns (set or None, number of sets checked, whether the space was exhausted).
    """
    pool = pool if pool is not None else candidate_pool(mp.a, config)
    budget = config.search_limit if budget is None else budget
    checked = 0
    if size == 0:
        return ([] if _generates_up_to_radical([], mp) else None), 1, True
    elements = [f for _, f in pool]
    for last in range(size - 1, len(elements)):
        for head in itertools.combinations(range(last), size - 1):
            if checked >= budget:
                return None, checked, False
            checked += 1
            chosen = [elements[i] for i in head] + [elements[last]]
            if _generates_up_to_radical(chosen, mp):
                return chosen, checked, True
    return None, checked, True


def ara_bounds(mp: ModulePresentation, config: SearchConfig | None = None) -> AraBounds:
    """Certified lower and upper bounds for ara(a, R/c).

    lower = cd (or grade, flagged, when cd is not computable).  The upper bound
    is the size of the smallest set found whose radical matches; the generators
    themselves always qualify.
    """
    config = config or SearchConfig()
    if mp.is_degenerate():
        raise DegenerateModule("M = aM")
    try:
        lower, lower_from = cd(mp), "cd"
    except UnsupportedInput:
        lower, lower_from = grade(mp), "grade"
    gens = _generators(mp.a)
    result = AraBounds(lower, lower_from=lower_from)
    if lower == len(gens):
        result.upper, result.certificate, result.exhausted = lower, gens, True
        return result
    pool = candidate_pool(mp.a, config)
    budget = config.search_limit
    for size in range(lower, len(gens)):
        found, checked, done = search_generating_set(mp, size, config, pool, budget)
        result.checked += checked
        budget -= checked
        if found is not None:
            result.upper, result.certificate = size, found
            result.exhausted = done
            return result
        if budget <= 0:
            break
    # fall back to the generators, whose radical trivially matches
    result.upper, result.certificate = len(gens), gens
    result.exhausted = budget > 0
    return result


def find_rsop(mp: ModulePresentation, config: SearchConfig | None = None):
    """An a-Rs.o.p of M from the candidate search, or None (inconclusive)."""
    config = config or SearchConfig()
    c_val = cd(mp)
    if c_val == NEG_INF:
        raise DegenerateModule("M = aM")
    found, _, _ = search_generating_set(mp, c_val, config)
    return found


# -- relative Cohen-Macaulayness

@dataclass
class RcmReport:
    grade: int
    cd: object
    ara_lower: int
    ara_upper: int | None
    is_rcm: bool
    rsop_found: list | None = None
    ara_certificate: list | None = None
    rsop_regular: bool | None = None

    def as_dict(self):
        return {
            "grade": self.grade,
            "cd": _cd_json(self.cd),
            "ara_lower": self.ara_lower,
            "ara_upper": self.ara_upper,
            "ara_certificate": None if self.ara_certificate is None else [str(x) for x in self.ara_certificate],
            "is_rcm": self.is_rcm,
            "rsop_found": None if self.rsop_found is None else [str(x) for x in self.rsop_found],
            "rsop_regular": self.rsop_regular,
        }


def is_rcm(mp: ModulePresentation, config: SearchConfig | None = None) -> RcmReport:
    config = config or SearchConfig()
    c_val = cd(mp)
    if c_val == NEG_INF:
        raise DegenerateModule("M = aM")
    g = grade(mp)
    if g > c_val:
        raise InternalInconsistency(f"grade {g} exceeds cd {c_val}")
    bounds = ara_bounds(mp, config)
    rsop = bounds.certificate if bounds.exact else None
    report = RcmReport(g, c_val, bounds.lower, bounds.upper, g == c_val, rsop, bounds.certificate)
    if report.is_rcm and rsop is not None and rsop:
        report.rsop_regular = is_regular_sequence(rsop, mp.c)[0]
    elif report.is_rcm and rsop == []:
        report.rsop_regular = True
    return report


# -- theorem cross-checks


@dataclass
class Theorem32Report:
    hypothesis: bool
    graded: bool
    condition_i: bool | None = None
    condition_ii: bool | None = None
    condition_iii: bool | None = None
    regular_rsop: list | None = None
    counterexamples: list = field(default_factory=list)
    sampled: int = 0
    notes: list = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        if not self.hypothesis:
            return True
        if self.condition_iii and not self.condition_i:
            return False
        return not any(c["kind"] == "violation" for c in self.counterexamples)

    def as_dict(self):
        return {
            "hypothesis": self.hypothesis,
            "graded": self.graded,
            "condition_i": self.condition_i,
            "condition_ii": self.condition_ii,
            "condition_iii": self.condition_iii,
            "regular_rsop": None if self.regular_rsop is None else [str(x) for x in self.regular_rsop],
            "counterexamples": self.counterexamples,
            "sampled": self.sampled,
            "consistent": self.consistent,
            "notes": self.notes,
        }


def _orderings(seq):
    seen = set()
    for perm in itertools.permutations(seq):
        key = tuple(str(x) for x in perm)
        if key not in seen:
            seen.add(key)
            yield list(perm)


def theorem32_check(mp: ModulePresentation, samples: int = 10, seed: int = 0,
                    candidates=(), config: SearchConfig | None = None) -> Theorem32Report:
    """Check RCM <=> some Rs.o.p is regular, and sample whether every Rs.o.p is regular.

    ``candidates`` are extra sequences tested for condition ii).  A non-regular
    homogeneous Rs.o.p of graded RCM data makes the report inconsistent; for
    other sequences such failures are expected and only recorded.
    """
    config = config or SearchConfig(seed=seed)
    bounds = ara_bounds(mp, config)
    report = Theorem32Report(hypothesis=bounds.exact and bounds.lower_from == "cd", graded=mp.graded)
    if not report.hypothesis:
        report.notes.append("ara(a, M) = cd(a, M) is not certified")
        return report
    c_val = bounds.lower
    g = grade(mp)
    report.condition_i = g == c_val

    # condition iii: look for a regular Rs.o.p among searched sequences
    pool = candidate_pool(mp.a, config)
    tried = 0
    for seq in _rsop_stream(mp, c_val, pool, config, bounds.certificate):
        for order in _orderings(seq):
            tried += 1
            if not order or is_regular_sequence(order, mp.c)[0]:
                report.regular_rsop = order
                break
        if report.regular_rsop is not None or tried >= config.search_limit:
            break
    if report.regular_rsop is not None:
        report.condition_iii = True
    elif not report.condition_i:
        report.condition_iii = False
        report.notes.append("no regular Rs.o.p among searched candidates")
    else:
        report.notes.append("RCM but no regular Rs.o.p found within the search bounds (inconclusive)")

    # condition ii: every Rs.o.p is regular, sampled
    rng = random.Random(seed)
    sample_seqs = [list(s) for s in candidates]
    for seq in _rsop_stream(mp, c_val, pool, config, bounds.certificate, rng=rng, limit=samples):
        sample_seqs.append(seq)
    all_regular = True
    for seq in sample_seqs:
        seq = [mp.ring(x) for x in seq]
        if not radical_equal(mp.c + seq, mp.a + mp.c) or len(seq) != c_val:
            continue
        report.sampled += 1
        ok, pos = is_regular_sequence(seq, mp.c) if seq else (True, None)
        if not ok:
            all_regular = False
            homogeneous = all(x.is_homogeneous() for x in seq)
            kind = "violation" if (mp.graded and homogeneous and report.condition_i) else "expected"
            report.counterexamples.append(
                {"sequence": [str(x) for x in seq], "fails_at": pos, "kind": kind})
    report.condition_ii = all_regular if report.sampled else None
    if any(c["kind"] == "expected" for c in report.counterexamples):
        report.notes.append("a non-graded Rs.o.p need not be regular")
    return report


def _rsop_stream(mp, size, pool, config, first=None, rng=None, limit=None):
    """Rs.o.p's from the candidate pool: the certificate first, then more in search order.

    With ``rng`` the combinations are sampled at random instead.
    """
    produced = 0
    if first is not None and len(first) == size and rng is None:
        produced += 1
        yield list(first)
    elements = [f for _, f in pool]
    if size == 0 or len(elements) < size:
        return
    budget = config.search_limit
    if rng is None:
        combos = itertools.combinations(range(len(elements)), size)
    else:
        combos = (tuple(rng.sample(range(len(elements)), size)) for _ in range(budget))
    for combo in combos:
        if budget <= 0 or (limit is not None and produced >= limit):
            return
        budget -= 1
        chosen = [elements[i] for i in combo]
        if _generates_up_to_radical(chosen, mp):
            produced += 1
            yield chosen


@dataclass
class PrefixStep:
    index: int
    grade: int
    cd: object
    rcm: bool
    tail_is_rsop: bool

    def as_dict(self):
        return {"index": self.index, "grade": self.grade, "cd": _cd_json(self.cd),
                "rcm": self.rcm, "tail_is_rsop": self.tail_is_rsop}


@dataclass
class Corollary34Report:
    steps: list = field(default_factory=list)
    cd_drops_by_one: bool = True

    @property
    def ok(self) -> bool:
        return self.cd_drops_by_one and all(s.rcm and s.tail_is_rsop for s in self.steps)

    @property
    def failing_index(self):
        for s in self.steps:
            if not (s.rcm and s.tail_is_rsop):
                return s.index
        return None

    def as_dict(self):
        return {"ok": self.ok, "cd_drops_by_one": self.cd_drops_by_one,
                "failing_index": self.failing_index, "steps": [s.as_dict() for s in self.steps]}


def corollary34_check(mp: ModulePresentation, seq) -> Corollary34Report:
    """Each M/<x_1..x_i>M is a-RCM and x_{i+1}..x_c is an Rs.o.p of it."""
    seq = [mp.ring(x) for x in seq]
    if not mp.homogeneous:
        raise HypothesisFailure("needs homogeneous data")
    c_val = cd(mp)
    if grade(mp) != c_val:
        raise HypothesisFailure("M is not a-RCM")
    if not is_rsop(seq, mp, c_val).verdict:
        raise HypothesisFailure("the sequence is not an Rs.o.p")
    report = Corollary34Report()
    prev = c_val
    for i in range(1, len(seq) + 1):
        q = mp.quotient(seq[:i])
        ci = cd(q)
        gi = grade(q)
        tail = is_rsop(seq[i:], q, ci).verdict if ci == len(seq) - i else False
        report.steps.append(PrefixStep(i, gi, ci, gi == ci, tail))
        if ci != prev - 1:
            report.cd_drops_by_one = False
        prev = ci
    return report


@dataclass
class Lemma26Report:
    hypothesis: bool
    h1_zero: bool | None = None
    radicals_equal: bool | None = None
    notes: list = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not (self.hypothesis and self.h1_zero and not self.radicals_equal)

    def as_dict(self):
        return {"hypothesis": self.hypothesis, "h1_zero": self.h1_zero,
                "radicals_equal": self.radicals_equal, "consistent": self.consistent,
                "notes": self.notes}


def lemma26_check(a: Ideal, c: Ideal, x, config: SearchConfig | None = None) -> Lemma26Report:
    """With ara(a, M) = 1: H^1_a(M/xM) = 0 forces Rad(a + c) = Rad(<x> + c)."""
    x = a.ring(x)
    if not a.contains(x):
        raise NotInIdeal(f"{x} is not in a")
    mp = ModulePresentation(a, c)
    if mp.is_degenerate():
        return Lemma26Report(False, notes=["M = aM"])
    bounds = ara_bounds(mp, config)
    report = Lemma26Report(hypothesis=bounds.exact and bounds.lower == 1)
    if not report.hypothesis:
        report.notes.append(f"ara(a, M) is not certified to be 1 (bounds {bounds.lower}..{bounds.upper})")
    report.radicals_equal = radical_equal(a + c, c + [x])
    quotient = c + [x]
    if not (a.is_monomial() and quotient.is_monomial()):
        report.notes.append("H^1 test needs monomial data")
        return report
    prof = cech_profile(MonomialIdeal.from_ideal(a), MonomialIdeal.from_ideal(quotient), exact=True)
    report.h1_zero = not prof.nonvanishing(1)
    return report


def determinant(A) -> Poly:
    """Laplace expansion along the first row."""
    n = len(A)
    if n == 0:
        raise ValueError("empty matrix")
    if any(len(row) != n for row in A):
        raise ValueError("matrix must be square")
    if n == 1:
        return A[0][0]
    total = None
    for j in range(n):
        if not A[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in A[1:]]
        term = A[0][j] * determinant(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else A[0][0].ring.zero()


def dr_injectivity(x_seq, A, c: Ideal) -> bool:
    """Is multiplication by det A from M/<x>M to M/<Ax>M injective?"""
    ring = c.ring
    x_seq = [ring(v) for v in x_seq]
    A = [[ring(v) for v in row] for row in A]
    if len(A) != len(x_seq):
        raise WrongLength("matrix size does not match the sequence")
    det = determinant(A)
    if not det:
        raise HypothesisFailure("det A = 0")
    y_seq = [sum((A[i][j] * x_seq[j] for j in range(len(x_seq))), ring.zero()) for i in range(len(A))]
    return ideal_quotient(c + y_seq, det).is_subset(c + x_seq)
