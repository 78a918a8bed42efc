"""Command-line interface: ``relcoh <command> -f SESSION [options]``.

Exit codes: 0 when a verdict was computed (true or false), 2 when the input
is unsupported or the answer is inconclusive, 1 on errors.
"""

from __future__ import annotations

import argparse
import json
import signal
import sys
from contextlib import contextmanager
from importlib import resources

from . import genfrac, relcm
from .errors import DegenerateModule, RelcohError, UnsupportedInput
from .ideals import Ideal, is_regular_sequence
from .local_cohomology import NEG_INF, cech_profile, lemma24_verify
from .monomial import MonomialIdeal, hochster_betti
from .relcm import ModulePresentation, SearchConfig
from .session import parse_polynomial, parse_session

SCHEMA_VERSION = "1.0"

EXIT_OK, EXIT_ERROR, EXIT_INCONCLUSIVE = 0, 1, 2

COMMANDS = ("cd", "grade", "ara", "is-rsop", "find-rsop", "is-rcm", "is-regular-seq",
            "cech-profile", "lemma24", "lemma26", "thm29", "thm32", "cor34", "dr-map", "gf-zero")


class Inconclusive(Exception):
    """A search ended without a certified answer."""

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


def load_schema() -> dict:
    return json.loads(resources.files("relcoh").joinpath("report.schema.json").read_text())


def _cd_json(value):
    return "-inf" if value == NEG_INF else value


@contextmanager
def _time_limit(seconds):
    if not seconds:
        yield
        return

    def _expire(signum, frame):
        raise TimeoutError(f"time limit of {seconds}s exceeded")

    old = signal.signal(signal.SIGALRM, _expire)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


# -- context

class Context:
    def __init__(self, args):
        with open(args.file, encoding="utf-8") as fh:
            self.session = parse_session(fh.read())
        self.args = args
        s = self.session
        self.ring = s.ring
        self.a = s.ideal(args.ideal)
        if args.module:
            self.c = s.ideal(args.module)
        elif "c" in s.ideals:
            self.c = s.ideal("c")
        else:
            self.c = Ideal.zero(self.ring)
        self.mp = ModulePresentation(self.a, self.c)
        seed = args.seed if args.seed is not None else s.option("seed", 0)
        self.config = SearchConfig(
            degree_bound=args.degree_bound if args.degree_bound is not None else s.option("degree_bound", 2),
            search_limit=s.option("search_limit", SearchConfig.search_limit),
            seed=seed,
            trials=s.option("trials", SearchConfig.trials),
        )
        self.delta_max = args.delta_max if args.delta_max is not None else s.option("delta_max")

    def seq(self, required=True, default=None):
        name = self.args.seq
        if name is None:
            if required:
                raise KeyError("this command needs --seq NAME")
            return default
        return self.session.seq(name)

    def poly(self, text):
        return parse_polynomial(text, self.ring)


def _monomial(I: Ideal, what: str) -> MonomialIdeal:
    if not I.is_monomial():
        raise UnsupportedInput(f"{what} must be a monomial ideal")
    return MonomialIdeal.from_ideal(I)


# -- commands; each returns (result dict, verdict)

def cmd_cd(ctx):
    value = relcm.cd(ctx.mp)
    result = {"cd": _cd_json(value)}
    if ctx.c.is_zero() and value != NEG_INF:
        # cd(a, R) = pd(R/rad a): report the Betti table behind the cross-check
        rad = relcm.monomial_radical(ctx.a)
        table = hochster_betti(rad)
        result["lyubeznik"] = {"pd": table.projective_dimension, "agrees": table.projective_dimension == value,
                               "betti": table.as_dict()}
    return result, value


def cmd_grade(ctx):
    g = relcm.grade(ctx.mp)
    search = relcm.grade_by_search(ctx.mp, seed=ctx.config.seed, trials=ctx.config.trials)
    return {
        "grade": g,
        "regular_sequence": [str(x) for x in search.sequence],
        "search_certified": search.certified,
        "search_agrees": search.length == g if search.certified else None,
        "methods": search.methods,
    }, g


def cmd_ara(ctx):
    b = relcm.ara_bounds(ctx.mp, ctx.config)
    return b.as_dict(), b.upper


def cmd_is_rsop(ctx):
    r = relcm.is_rsop(ctx.seq(), ctx.mp)
    return r.as_dict(), r.verdict


def cmd_find_rsop(ctx):
    found = relcm.find_rsop(ctx.mp, ctx.config)
    result = {"cd": _cd_json(relcm.cd(ctx.mp)),
              "rsop": None if found is None else [str(x) for x in found]}
    if found is None:
        raise Inconclusive("no Rs.o.p found within the search bounds", result)
    return result, True


def cmd_is_rcm(ctx):
    r = relcm.is_rcm(ctx.mp, ctx.config)
    return r.as_dict(), r.is_rcm


def cmd_is_regular_seq(ctx):
    ok, pos = is_regular_sequence(ctx.seq(), ctx.c)
    return {"regular": ok, "fails_at": pos}, ok


def cmd_cech_profile(ctx):
    prof = cech_profile(_monomial(ctx.a, "a"), _monomial(ctx.c, "c"), exact=ctx.args.exact)
    return prof.as_dict(), prof.cd


def cmd_lemma24(ctx):
    gens = ctx.seq(required=False, default=list(ctx.a.gens))
    for g in gens:
        if not g.is_monomial():
            raise UnsupportedInput("lemma24 needs monomial generators")
    b = _monomial(ctx.c, "c")
    indices = [ctx.args.index] if ctx.args.index else range(1, len(gens) + 1)
    reports = [lemma24_verify([g.exponents() for g in gens], b, i) for i in indices]
    ok = all(r.exact for r in reports)
    return {"exact": ok, "reports": [r.as_dict() for r in reports]}, ok


def cmd_lemma26(ctx):
    if ctx.args.element:
        x = ctx.poly(ctx.args.element)
    else:
        seq = ctx.seq()
        if len(seq) != 1:
            raise ValueError("lemma26 needs a single element (--element or a one-entry --seq)")
        x = seq[0]
    r = relcm.lemma26_check(ctx.a, ctx.c, x, ctx.config)
    return r.as_dict(), r.consistent


def cmd_thm29(ctx):
    r = relcm.is_rsop(ctx.seq(), ctx.mp)
    bounds = relcm.ara_bounds(ctx.mp, ctx.config)
    out = r.as_dict()
    out["ara_equals_cd"] = bounds.exact
    out["graded"] = ctx.mp.graded
    return out, r.verdict


def cmd_thm32(ctx):
    candidates = [ctx.seq()] if ctx.args.seq else []
    r = relcm.theorem32_check(ctx.mp, samples=ctx.config.trials, seed=ctx.config.seed,
                              candidates=candidates, config=ctx.config)
    return r.as_dict(), r.consistent


def cmd_cor34(ctx):
    seq = ctx.seq(required=False)
    if seq is None:
        seq = relcm.find_rsop(ctx.mp, ctx.config)
        if seq is None:
            raise Inconclusive("no Rs.o.p found to run the chain on")
    r = relcm.corollary34_check(ctx.mp, seq)
    out = r.as_dict()
    out["sequence"] = [str(x) for x in seq]
    return out, r.ok


def cmd_dr_map(ctx):
    x_seq = ctx.seq()
    if not ctx.args.matrix:
        raise KeyError("dr-map needs --matrix NAME (a seq read row by row)")
    entries = ctx.session.seq(ctx.args.matrix)
    k = len(x_seq)
    if len(entries) != k * k:
        raise ValueError(f"matrix needs {k * k} entries, got {len(entries)}")
    A = [entries[i * k:(i + 1) * k] for i in range(k)]
    ok = relcm.dr_injectivity(x_seq, A, ctx.c)
    return {"injective": ok, "det": str(relcm.determinant(A))}, ok


def cmd_gf_zero(ctx):
    gens = ctx.seq(required=False, default=list(ctx.a.gens))
    numerator = ctx.poly(ctx.args.numerator or "1")
    if ctx.args.alphas:
        alphas = tuple(int(v) for v in ctx.args.alphas.split(","))
    else:
        alphas = (1,) * len(gens)
    f = genfrac.ksz_top_element(numerator, alphas, gens, ctx.c)
    v = genfrac.gf_is_zero(f, ctx.delta_max)
    out = v.as_dict()
    out["fraction"] = repr(f)
    if v.is_zero is None:
        raise Inconclusive(f"not zero up to delta = {v.delta_max}", out)
    return out, v.is_zero


HANDLERS = {
    "cd": cmd_cd, "grade": cmd_grade, "ara": cmd_ara, "is-rsop": cmd_is_rsop,
    "find-rsop": cmd_find_rsop, "is-rcm": cmd_is_rcm, "is-regular-seq": cmd_is_regular_seq,
    "cech-profile": cmd_cech_profile, "lemma24": cmd_lemma24, "lemma26": cmd_lemma26,
    "thm29": cmd_thm29, "thm32": cmd_thm32, "cor34": cmd_cor34, "dr-map": cmd_dr_map,
    "gf-zero": cmd_gf_zero,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="relcoh", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("-f", "--file", required=True, help="session file")
    p.add_argument("--ideal", default="a", help="name of the ideal a (default: a)")
    p.add_argument("--module", help="name of c in M = R/c (default: c if declared, else 0)")
    p.add_argument("--seq", help="name of a sequence (or ideal) used by the command")
    p.add_argument("--matrix", help="dr-map: sequence holding the square matrix row by row")
    p.add_argument("--element", help="lemma26: the element x as an expression")
    p.add_argument("--numerator", help="gf-zero: numerator expression (default 1)")
    p.add_argument("--alphas", help="gf-zero: comma-separated exponents (default all 1)")
    p.add_argument("--index", type=int, help="lemma24: a single index i (default: all)")
    p.add_argument("--exact", action="store_true", help="cech-profile: keep R/c instead of its radical")
    p.add_argument("--json", action="store_true", help="print a JSON report")
    p.add_argument("--seed", type=int)
    p.add_argument("--delta-max", type=int)
    p.add_argument("--degree-bound", type=int)
    p.add_argument("--timeout", type=float, help="seconds before giving up (exit 2)")
    return p


def _render(value, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in
                                                          (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.extend(_render(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, dict):
                lines.append(f"{pad}-")
                lines.extend(_render(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(pad + _scalar(value))
    return lines


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_scalar(x)}" for k, x in v.items()) + "}"
    return str(v)


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    report = {"schema_version": SCHEMA_VERSION, "command": args.command, "file": args.file}
    try:
        with _time_limit(args.timeout):
            ctx = Context(args)
            result, verdict = HANDLERS[args.command](ctx)
        report.update(status="ok", verdict=_verdict_json(verdict), result=result)
        code = EXIT_OK
    except Inconclusive as exc:
        report.update(status="inconclusive", message=str(exc), result=exc.result)
        code = EXIT_INCONCLUSIVE
    except (UnsupportedInput, TimeoutError) as exc:
        status = "unsupported" if isinstance(exc, UnsupportedInput) else "timeout"
        report.update(status=status, message=str(exc), error=type(exc).__name__)
        code = EXIT_INCONCLUSIVE
    except DegenerateModule as exc:
        report.update(status="degenerate", verdict=None, message=str(exc))
        code = EXIT_OK
    except (RelcohError, KeyError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        report.update(status="error", message=str(msg), error=type(exc).__name__)
        code = EXIT_ERROR
    if args.json:
        out.write(json.dumps(report, indent=2, default=str) + "\n")
    else:
        head = f"{args.command}: {report['status']}"
        if "verdict" in report:
            head += f" (verdict: {_scalar(report['verdict'])})"
        lines = [head]
        if report.get("message"):
            lines.append(f"message: {report['message']}")
        if report.get("result"):
            lines.extend(_render(report["result"]))
        out.write("\n".join(lines) + "\n")
    return code


def _verdict_json(v):
    if isinstance(v, float) and v == NEG_INF:
        return "-inf"
    return v


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
