"""Command-line front end.

Exit codes: 0 success, 2 unreadable or malformed JSON (argparse also uses 2
for bad flags), 3 shape or validation errors, 4 a failed invariant.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .chains import ChainComplex, chain_report, fold
from .checks import run_checks
from .classification import (
    canonical_form,
    classify,
    full_decomposition,
    index_formulas,
    is_regular_weyl,
    is_weyl,
    unmatched_blocks,
)
from .errors import FredpairsError, InconsistencyError
from .generators import SynthSpec, random_chain, random_pair, synth_from_case
from .matrix import Matrix
from .pair import OperatorPair, adjoint_pair, defects, generalized_inverse, is_generalized_inverse
from .quotient import quotient_pair, verify_transfer

__all__ = ["AnalysisReport", "analyze", "main"]


class InputError(Exception):
    """Input could not be read or parsed."""


@dataclass(frozen=True)
class AnalysisReport:
    defects: dict
    classification: dict
    level: int
    blocks: dict
    index_formulas: list
    unmatched: dict
    weyl: bool
    regular_weyl: bool
    warnings: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "defects": self.defects,
            "classification": self.classification,
            "level": self.level,
            "blocks": self.blocks,
            "index_formulas": self.index_formulas,
            "unmatched": self.unmatched,
            "weyl": self.weyl,
            "regular_weyl": self.regular_weyl,
            "warnings": self.warnings,
        }


def analyze(pair: OperatorPair, level: int | None = None) -> AnalysisReport:
    cl = classify(pair)
    n = level if level is not None else cl.number
    fd = full_decomposition(pair, n)
    formulas = list(index_formulas(pair))
    warnings = []
    if len(set(formulas)) != 1:
        warnings.append(f"index computations disagree: {formulas}")
    canonical_form(pair)
    return AnalysisReport(
        defects(pair).to_json(),
        cl.to_json(),
        n,
        fd.dims(),
        formulas,
        unmatched_blocks(pair),
        is_weyl(pair),
        is_regular_weyl(pair),
        warnings,
    )


# -- input ---------------------------------------------------------------


def _read_json(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def _load(path: str):
    obj = _read_json(path)
    if not isinstance(obj, dict):
        raise InputError(f"{path}: expected a JSON object")
    if "S" in obj and "T" in obj:
        return OperatorPair.from_json(obj)
    if "dims" in obj and "boundaries" in obj:
        return ChainComplex.from_json(obj)
    if "case" in obj and "number" in obj:
        return SynthSpec.from_json(obj)
    if "entries" in obj:
        return Matrix.from_json(obj)
    raise InputError(f"{path}: not a pair, chain, synthesis spec or matrix")


def _load_kind(path: str, kind):
    obj = _load(path)
    if not isinstance(obj, kind):
        raise InputError(f"{path}: expected a {kind.__name__} JSON document")
    return obj


# -- output ----------------------------------------------------------------


def _emit(args, payload: dict, text_lines: list[str] | None = None):
    if args.json or text_lines is None:
        out = json.dumps(payload, indent=2, sort_keys=True)
    else:
        out = "\n".join(text_lines)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _aligned(pairs: list[tuple[str, object]]) -> list[str]:
    width = max((len(k) for k, _ in pairs), default=0)
    return [f"{k.ljust(width)}  {v}" for k, v in pairs]


# -- commands ------------------------------------------------------------


def cmd_analyze(args):
    pair = _load_kind(args.path, OperatorPair)
    rep = analyze(pair, args.level)
    d, c = rep.defects, rep.classification
    lines = _aligned(
        [
            ("dims", f"X={pair.x_dim} Y={pair.y_dim}"),
            ("defects a b c d", f"{d['a']} {d['b']} {d['c']} {d['d']}"),
            ("index", d["index"]),
            ("p q", f"{c['p']} {c['q']}"),
            ("case", f"{c['case']}-{c['number']}"),
            ("index formulas", " ".join(str(v) for v in rep.index_formulas)),
            ("weyl", rep.weyl),
            ("regular weyl", rep.regular_weyl),
            (f"blocks (level {rep.level})", " ".join(f"{k}={v}" for k, v in rep.blocks.items())),
            ("unmatched", " ".join(f"{k}={v}" for k, v in rep.unmatched.items())),
        ]
    )
    lines += [f"warning: {w}" for w in rep.warnings]
    _emit(args, rep.to_json(), lines)
    return 0


def cmd_classify(args):
    pair = _load_kind(args.path, OperatorPair)
    cl = classify(pair)
    _emit(args, cl.to_json(), _aligned([("p", cl.p), ("q", cl.q), ("number", cl.number), ("case", cl.case)]))
    return 0


def cmd_ginv(args):
    obj = _load(args.path)
    if isinstance(obj, Matrix):
        g = generalized_inverse(obj)
        payload = {"op": obj.to_json(), "ginv": g.to_json(), "normalized": g @ obj @ g == g}
        _emit(args, payload, ["generalized inverse:", g.pretty()])
        return 0
    if not isinstance(obj, OperatorPair):
        raise InputError(f"{args.path}: ginv takes a pair or a matrix")
    adj, w = adjoint_pair(obj)
    payload = {
        "pair": adj.to_json(),
        "normalized": w.normalized,
        "index": defects(adj).index,
        "checks": {
            "S S' S = S": is_generalized_inverse(obj.S, w.s_prime),
            "T T' T = T": is_generalized_inverse(obj.T, w.t_prime),
        },
    }
    lines = ["S' =", w.s_prime.pretty(), "T' =", w.t_prime.pretty()]
    lines += _aligned([("normalized", w.normalized), ("index", defects(adj).index)])
    _emit(args, payload, lines)
    return 0


def cmd_fold(args):
    chain = _load_kind(args.path, ChainComplex)
    pair = fold(chain)
    rep = chain_report(chain)
    payload = {"pair": pair.to_json(), "chain_index": rep.index, "pair_index": defects(pair).index}
    lines = _aligned(
        [
            ("chain index", rep.index),
            ("pair index", defects(pair).index),
            ("kernel defects", list(rep.kernel_defects)),
            ("range defects", list(rep.range_defects)),
        ]
    )
    lines += ["S =", pair.S.pretty(), "T =", pair.T.pretty()]
    _emit(args, payload, lines)
    return 0


def cmd_quotient(args):
    pair = _load_kind(args.path, OperatorPair)
    qp = quotient_pair(pair)
    tr = verify_transfer(pair)
    payload = {"quotient": qp.to_json(), "transfer": tr.to_json()}
    lines = _aligned(
        [
            ("quotient dims", f"X={qp.x_complement.dim} Y={qp.y_complement.dim}"),
            ("a, quotient a", f"{tr.a} {tr.quotient_a}"),
            ("c, quotient c", f"{tr.c} {tr.quotient_c}"),
            ("symmetrical", tr.symmetrical),
            ("quotient index", tr.quotient_index),
        ]
    )
    _emit(args, payload, lines)
    return 0


def cmd_synth(args):
    spec = _load_kind(args.path, SynthSpec)
    pair = synth_from_case(spec)
    _emit(args, pair.to_json())
    return 0


def cmd_random(args):
    if args.chain is not None:
        c = random_chain(args.chain, args.max_dim, args.seed, not args.not_complex)
        _emit(args, c.to_json())
        return 0
    x, y = args.x_dim, args.y_dim
    rs = args.rank_s if args.rank_s is not None else min(x, y)
    rt = args.rank_t if args.rank_t is not None else min(x, y)
    _emit(args, random_pair(x, y, rs, rt, args.seed).to_json())
    return 0


def cmd_check(args):
    failed = []
    reports = {}
    for path in args.paths:
        obj = _load(path)
        if isinstance(obj, Matrix):
            raise InputError(f"{path}: check takes a pair, chain or synthesis spec")
        results = run_checks(obj)
        reports[path] = [r.to_json() for r in results]
        bad = [r for r in results if not r.ok]
        if bad:
            failed.append((path, bad[0]))
    lines = []
    for path, results in reports.items():
        n_ok = sum(1 for r in results if r["ok"])
        lines.append(f"{path}: {n_ok}/{len(results)} checks passed")
    for path, r in failed:
        lines.append(f"{path}: first violation: {r.check_id} ({r.detail})")
    payload = {"reports": reports, "ok": not failed}
    if failed:
        payload["first_violation"] = {"path": failed[0][0], "check": failed[0][1].check_id}
    _emit(args, payload, lines)
    return 4 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fredpairs", description="Exact analysis of operator pairs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of aligned text")
    common.add_argument("--out", help="write output to this file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="defects, case, blocks and index checks of a pair")
    p.add_argument("path")
    p.add_argument("--level", type=int, help="decomposition level (default: the pair's number)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", parents=[common], help="p, q, number and case of a pair")
    p.add_argument("path")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("ginv", parents=[common], help="generalized inverse of a matrix, or the adjoint pair")
    p.add_argument("path")
    p.set_defaults(func=cmd_ginv)

    p = sub.add_parser("fold", parents=[common], help="fold a chain into a pair")
    p.add_argument("path")
    p.set_defaults(func=cmd_fold)

    p = sub.add_parser("quotient", parents=[common], help="induced pair on the quotients by R(TS), R(ST)")
    p.add_argument("path")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("synth", parents=[common], help="build a pair from a synthesis spec")
    p.add_argument("path")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("random", parents=[common], help="seeded random pair or chain")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--x-dim", type=int, default=3)
    p.add_argument("--y-dim", type=int, default=3)
    p.add_argument("--rank-s", type=int)
    p.add_argument("--rank-t", type=int)
    p.add_argument("--chain", type=int, metavar="LENGTH", help="emit a chain with this many spaces")
    p.add_argument("--max-dim", type=int, default=3)
    p.add_argument("--not-complex", action="store_true", help="allow d d != 0 in the random chain")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("check", parents=[common], help="run the invariant suite on inputs")
    p.add_argument("paths", nargs="+")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InconsistencyError as exc:
        print(f"error: invariant violated: {exc}", file=sys.stderr)
        return 4
    except (FredpairsError, ValueError, TypeError) as exc:
        # shapes, non-complex chains, unrealizable specs, non-exact entries
        print(f"error: {exc}", file=sys.stderr)
        return 3

if __name__ == "__main__":
    sys.exit(main())
