"""The invariant suite: every structural identity, run against one concrete object.

Each check has a short id.  A check passes, or fails with a detail string; a
TheoremViolation raised inside a check counts as a failure of that check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .chains import ChainComplex, chain_report, fold, homotopy_defect, splitting_homotopy
from .classification import (
    canonical_form,
    classify,
    full_decomposition,
    index_formulas,
    range_sequences,
    subspace_families,
)
from .errors import InconsistencyError
from .generators import SynthSpec, synth_from_case
from .pair import (
    OperatorPair,
    adjoint_pair,
    decompose,
    defects,
    is_symmetrical,
    pair_index,
    swap,
)
from .quotient import verify_transfer
from .subspace import direct_sum_of, intersect, is_subset, kernel, span, sum_of

__all__ = ["CheckResult", "pair_checks", "chain_checks", "spec_checks", "run_checks"]


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"check": self.check_id, "ok": self.ok, "detail": self.detail}


def _index_identity(p: OperatorPair):
    d = defects(p)
    return d.index == p.x_dim - p.y_dim, f"index {d.index}, dim X - dim Y = {p.x_dim - p.y_dim}"


def _rank_identities(p: OperatorPair):
    d = defects(p)
    st = span(p.S @ p.T).dim
    ts = span(p.T @ p.S).dim
    return st == d.b and ts == d.d, f"dim R(ST) = {st}, b = {d.b}; dim R(TS) = {ts}, d = {d.d}"


def _swap(p: OperatorPair):
    return pair_index(swap(p)) == -pair_index(p), ""


def _symmetric_equiv(p: OperatorPair):
    d = defects(p)
    sym = is_symmetrical(p)
    ok = sym == (d.b == 0 and d.d == 0)
    if sym:
        dec = decompose(p)
        ok = ok and dec.x2.is_zero() and dec.y2.is_zero()
    return ok, f"symmetrical={sym}, b={d.b}, d={d.d}"


def _decomposition(p: OperatorPair):
    decompose(p)
    return True, ""


def _adjoint(p: OperatorPair):
    ap, w = adjoint_pair(p)
    S, T, Sp, Tp = p.S, p.T, w.s_prime, w.t_prime
    ok = S @ Sp @ S == S and Sp @ S @ Sp == Sp and T @ Tp @ T == T and Tp @ T @ Tp == Tp
    dec = decompose(p)
    ok = ok and pair_index(ap) == -pair_index(p)
    ok = ok and intersect(kernel(Sp), span(Tp)) == dec.y_tilde
    ok = ok and intersect(kernel(Tp), span(Sp)) == dec.x_tilde
    return ok, f"index of adjoint pair {pair_index(ap)}"


def _ranges(p: OperatorPair):
    seq = range_sequences(p)
    d_st = span(p.S @ p.T).dim
    d_ts = span(p.T @ p.S).dim
    for seqs, name, bound in ((seq.r_s, "R_S", d_st), (seq.r_t, "R_T", d_ts)):
        for n in range(1, len(seqs)):
            if not is_subset(seqs[n], seqs[n - 1]):
                return False, f"{name} grows at step {n}"
            if n >= 2 and seqs[n].dim > bound:
                return False, f"{name} at step {n} exceeds the two-step range"
    if seq.r_s[2] != span(p.S @ p.T) or seq.r_t[2] != span(p.T @ p.S):
        return False, "second terms are not R(ST), R(TS)"
    return abs(seq.p - seq.q) <= 1, f"p={seq.p}, q={seq.q}"


def _range_splitting(p: OperatorPair):
    seq = range_sequences(p)
    for n in range(1, len(seq.r_s) - 1):
        for nxt, til, cur in ((seq.s(n + 1), seq.s_tilde(n), seq.s(n)), (seq.t(n + 1), seq.t_tilde(n), seq.t(n))):
            if not (direct_sum_of(nxt, til) and sum_of(nxt, til) == cur):
                return False, f"level {n}"
    return True, ""


def _families(p: OperatorPair):
    subspace_families(p, classify(p).number + 2)
    return True, ""


def _canonical(p: OperatorPair):
    r = canonical_form(p)
    return True, r.label


def _formulas(p: OperatorPair):
    f = index_formulas(p)
    return len(set(f)) == 1, str(tuple(f))


def _full(p: OperatorPair):
    for n in range(1, classify(p).number + 1):
        full_decomposition(p, n)
    return True, ""


def _transfer(p: OperatorPair):
    r = verify_transfer(p)
    d = defects(p)
    ok = r.ok and r.quotient_index == d.a - d.c
    return ok, f"a={r.a}/{r.quotient_a}, c={r.c}/{r.quotient_c}"


PAIR_CHECKS: list[tuple[str, Callable]] = [
    ("index-equals-dimension-difference", _index_identity),
    ("two-step-ranks-equal-b-and-d", _rank_identities),
    ("swap-negates-index", _swap),
    ("symmetrical-iff-b-d-vanish", _symmetric_equiv),
    ("decomposition-direct-sums", _decomposition),
    ("adjoint-pair-inverses-and-index", _adjoint),
    ("range-sequences-decrease-and-trichotomy", _ranges),
    ("range-splits-into-next-and-tilde", _range_splitting),
    ("nested-families", _families),
    ("canonical-presentation", _canonical),
    ("index-from-blocks", _formulas),
    ("level-presentations", _full),
    ("quotient-defect-transfer", _transfer),
]


def _run(checks, obj) -> list[CheckResult]:
    out = []
    for cid, fn in checks:
        try:
            ok, detail = fn(obj)
        except InconsistencyError as exc:
            ok, detail = False, str(exc)
        out.append(CheckResult(cid, bool(ok), detail))
    return out


def pair_checks(pair: OperatorPair) -> list[CheckResult]:
    return _run(PAIR_CHECKS, pair)


def _fold_index(c: ChainComplex):
    rep = chain_report(c)
    folded = fold(c)
    ok = pair_index(folded) == rep.index
    if c.is_complex:
        euler = sum((-1) ** p * d for p, d in enumerate(c.dims))
        ok = ok and rep.index == euler and is_symmetrical(folded)
        ok = ok and all(r == 0 for r in rep.range_defects)
    return ok, f"chain index {rep.index}, folded index {pair_index(folded)}"


def _homotopy(c: ChainComplex):
    if not c.is_complex:
        return True, "not a complex; nothing to split"
    sh = splitting_homotopy(c)
    rep = chain_report(c)
    for p in range(len(c.dims)):
        if not homotopy_defect(c, sh, p).is_zero():
            return False, f"homotopy identity fails in degree {p}"
        k = sh.k[p]
        if k @ k != k or span(k).dim != rep.homology_dims[p]:
            return False, f"k is not a homology projection in degree {p}"
    return True, ""


CHAIN_CHECKS = [
    ("fold-preserves-index", _fold_index),
    ("splitting-homotopy", _homotopy),
]


def chain_checks(c: ChainComplex) -> list[CheckResult]:
    return _run(CHAIN_CHECKS, c) + pair_checks(fold(c))


def spec_checks(spec: SynthSpec) -> list[CheckResult]:
    pair = synth_from_case(spec)

    def round_trip(_):
        r = canonical_form(pair)
        ok = (r.classification.case, r.classification.number) == (spec.case, spec.number)
        ok = ok and r.block_dims == spec.full_dims()
        return ok, r.label

    return _run([("synthesis-round-trip", round_trip)], None) + pair_checks(pair)


def run_checks(obj) -> list[CheckResult]:
    if isinstance(obj, OperatorPair):
        return pair_checks(obj)
    if isinstance(obj, ChainComplex):
        return chain_checks(obj)
    if isinstance(obj, SynthSpec):
        return spec_checks(obj)
    raise TypeError(f"no invariant suite for {type(obj).__name__}")
