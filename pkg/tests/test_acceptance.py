"""Acceptance gate: the twelve primary criteria, each at its stated scale and tolerance.

Every criterion records one PASS/FAIL line; conftest prints them at the end of
the run.  ``python3 tests/test_acceptance.py`` runs the gate on its own.

The exhaustive synthesis sweep (criterion 8) is held to its 60 s budget.  Set
FREDPAIRS_FULL_SWEEP=1 to let it run past the budget over every spec; it still
reports the time bound honestly.
"""

from __future__ import annotations

import functools
import itertools
import os
import time

import pytest

from fredpairs import ID2, P1, SYM1
from fredpairs.chains import chain_report, fold, homotopy_defect, splitting_homotopy
from fredpairs.classification import canonical_form, classify, index_formulas, range_sequences
from fredpairs.errors import InconsistencyError
from fredpairs.generators import (
    SplitMix64,
    conjugate,
    exact_chain,
    feasible_specs,
    random_chain,
    random_pair,
    synth_from_case,
)
from fredpairs.pair import adjoint_pair, decompose, defects, is_symmetrical, pair_index
from fredpairs.quotient import quotient_pair, verify_transfer
from fredpairs.subspace import direct_sum_of, kernel, rel_codim, span, sum_of

from strategies import to_sympy

RESULTS: dict[int, tuple[bool, str]] = {}

SWEEP_BUDGET = 60.0


def criterion(number: int, title: str):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                detail = fn(*args, **kwargs)
            except BaseException as exc:
                msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
                RESULTS[number] = (False, f"{title}: {msg}")
                raise
            RESULTS[number] = (True, f"{title}: {detail}" if detail else title)

        return run

    return wrap


def summary_lines() -> list[str]:
    return [f"[{'PASS' if ok else 'FAIL'}] criterion {n:2d}  {text}" for n, (ok, text) in sorted(RESULTS.items())]


# -- corpora ---------------------------------------------------------------


@functools.cache
def pair_corpus(n: int, max_dim: int, seed: int) -> tuple:
    rng = SplitMix64(seed)
    out = []
    for _ in range(n):
        x, y = rng.randint(0, max_dim), rng.randint(0, max_dim)
        m = min(x, y)
        out.append(random_pair(x, y, rng.randint(0, m), rng.randint(0, m), rng.next_u64()))
    return tuple(out)


def corpus500():
    return pair_corpus(500, 8, 2026)


def corpus200():
    return pair_corpus(200, 8, 314)


@functools.cache
def realized_cases() -> dict:
    """One conjugated synthesized pair for each case and number up to 3."""
    out = {}
    for case, number in itertools.product(("I", "II", "III"), (1, 2, 3)):
        spec = next(feasible_specs(case, number, max_dim=2))
        out[(case, number)] = conjugate(synth_from_case(spec), 17 * number + len(case))
    return out


@functools.cache
def synthesized_corpus() -> tuple:
    pairs = list(realized_cases().values())
    for case, number in itertools.product(("I", "II", "III"), (1, 2, 3)):
        specs = list(itertools.islice(feasible_specs(case, number, max_dim=2), 0, 400, 40))
        pairs += [conjugate(synth_from_case(s), i) for i, s in enumerate(specs)]
    return tuple(pairs)


def full_corpus():
    return corpus500() + synthesized_corpus() + (ID2, P1, SYM1)


def _rank(m) -> int:
    return to_sympy(m).rank() if m.rows and m.cols else 0


# -- criteria ----------------------------------------------------------------


@criterion(1, "index = dim X - dim Y on 500 random pairs under 5 s")
def test_c01_index_identity():
    start = time.perf_counter()
    pairs = corpus500()
    profiles = [defects(p) for p in pairs]
    elapsed = time.perf_counter() - start
    for p, d in zip(pairs, profiles):
        assert d.index == p.x_dim - p.y_dim
        # independent oracle: a - b - c + d from sympy ranks of S, T, ST, TS
        rs, rt, rst, rts = _rank(p.S), _rank(p.T), _rank(p.S @ p.T), _rank(p.T @ p.S)
        a = (p.x_dim - rs) - (rt - rst)
        c = (p.y_dim - rt) - (rs - rts)
        assert (d.a, d.b, d.c, d.d) == (a, rst, c, rts)
    assert elapsed < 5.0, f"took {elapsed:.2f} s"
    return f"{elapsed:.2f} s"


@criterion(2, "dim R(ST) = b and dim R(TS) = d on the same corpus")
def test_c02_rank_identities():
    for p in corpus500():
        d = defects(p)
        assert span(p.S @ p.T).dim == d.b
        assert span(p.T @ p.S).dim == d.d


@criterion(3, "adjoint pair satisfies the four identities with opposite index on 200 pairs")
def test_c03_adjoint_pair():
    for p in corpus200():
        adj, w = adjoint_pair(p)
        S, T, Sp, Tp = p.S, p.T, w.s_prime, w.t_prime
        assert S @ Sp @ S == S and Sp @ S @ Sp == Sp
        assert T @ Tp @ T == T and Tp @ T @ Tp == Tp
        assert pair_index(adj) == -pair_index(p)


@criterion(4, "|p - q| <= 1 on 500 pairs; I, II, III realized with numbers 1, 2, 3")
def test_c04_trichotomy():
    for p in corpus500():
        seq = range_sequences(p)
        assert abs(seq.p - seq.q) <= 1
    for (case, number), pair in realized_cases().items():
        c = classify(pair)
        assert (c.case, c.number) == (case, number), f"wanted {case}-{number}, got {c.label}"


@criterion(5, "R_n = R_(n+1) + tilde R_n, direct, both sides, on 200 pairs")
def test_c05_range_splitting():
    for p in corpus200():
        seq = range_sequences(p)
        for n in range(1, len(seq.r_s) - 1):
            for nxt, til, cur in ((seq.s(n + 1), seq.s_tilde(n), seq.s(n)), (seq.t(n + 1), seq.t_tilde(n), seq.t(n))):
                assert direct_sum_of(nxt, til)
                assert sum_of(nxt, til) == cur


@criterion(6, "the three index computations agree on every tested pair")
def test_c06_index_formulas():
    pairs = full_corpus()
    for p in pairs:
        f = index_formulas(p)
        assert f.via_defects == f.via_kernel_blocks == f.via_tilde_blocks == pair_index(p)
    return f"{len(pairs)} pairs"


@criterion(7, "canonical_form raises no violation on the random and synthesized corpus")
def test_c07_canonical_forms():
    pairs = full_corpus()
    violations = []
    for i, p in enumerate(pairs):
        try:
            canonical_form(p)
        except InconsistencyError as exc:
            violations.append((i, str(exc)))
    assert not violations, f"{len(violations)} violations, first {violations[0]}"
    return f"{len(pairs)} pairs"


def _sweep_streams():
    # round robin over the twelve generators so a partial sweep touches every case
    streams = [
        ((case, number), feasible_specs(case, number, max_dim=3))
        for number in (1, 2, 3, 4)
        for case in ("I", "II", "III")
    ]
    while streams:
        alive = []
        for key, it in streams:
            spec = next(it, None)
            if spec is not None:
                alive.append((key, it))
                yield spec
        streams = alive


@criterion(8, "exhaustive synthesis round trip, number <= 4, block dims <= 3, under 60 s")
def test_c08_round_trip_sweep():
    full = os.environ.get("FREDPAIRS_FULL_SWEEP") == "1"
    start = time.perf_counter()
    checked, wrong, finished = 0, [], True
    for spec in _sweep_streams():
        if not full and time.perf_counter() - start > SWEEP_BUDGET:
            finished = False
            break
        r = canonical_form(synth_from_case(spec))
        got = (r.classification.case, r.classification.number, r.block_dims)
        if got != (spec.case, spec.number, spec.full_dims()):
            wrong.append(spec)
        checked += 1
    elapsed = time.perf_counter() - start
    total = sum(1 for _ in _sweep_streams()) if not finished else checked
    assert not wrong, f"{len(wrong)} of {checked} specs did not round trip, first {wrong[0]}"
    assert finished and elapsed < SWEEP_BUDGET, (
        f"{checked}/{total} specs round-tripped exactly in {elapsed:.1f} s; "
        f"the full sweep does not fit the {SWEEP_BUDGET:.0f} s budget"
    )
    return f"{checked} specs in {elapsed:.1f} s"


@functools.cache
def chain_corpus() -> tuple:
    rng = SplitMix64(99)
    return tuple(random_chain(rng.randint(1, 6), 3, rng.next_u64(), rng.randint(0, 1) == 1) for _ in range(200))


@criterion(9, "fold keeps the index on 200 chains; complexes give the Euler sum and a symmetrical pair")
def test_c09_chain_fold():
    n_complex = 0
    for c in chain_corpus():
        r = chain_report(c)
        p = fold(c)
        assert pair_index(p) == r.index
        if c.is_complex:
            n_complex += 1
            assert r.index == sum((-1) ** i * d for i, d in enumerate(c.dims))
            assert is_symmetrical(p)
    assert 0 < n_complex < 200
    return f"{n_complex} complexes among 200 chains"


@criterion(10, "splitting homotopy on 100 complexes; k = 0 on exact complexes")
def test_c10_splitting_homotopy():
    rng = SplitMix64(7)
    for _ in range(100):
        c = random_chain(rng.randint(1, 6), 3, rng.next_u64(), True)
        sh = splitting_homotopy(c)
        homology = chain_report(c).homology_dims
        for p in range(len(c.dims)):
            assert homotopy_defect(c, sh, p).is_zero()
            k = sh.k[p]
            assert k @ k == k
            assert span(k).dim == homology[p]
    for seed in range(20):
        c = exact_chain(rng.randint(1, 6), 3, seed)
        assert all(k.is_zero() for k in splitting_homotopy(c).k)


@criterion(11, "induced quotient pair is symmetrical and keeps a, c on 200 pairs")
def test_c11_quotient_transfer():
    for p in corpus200():
        q = quotient_pair(p)
        assert (q.s_bar @ q.t_bar).is_zero() and (q.t_bar @ q.s_bar).is_zero()
        d = defects(p)
        assert rel_codim(kernel(q.s_bar), span(q.t_bar)) == d.a
        assert rel_codim(kernel(q.t_bar), span(q.s_bar)) == d.c
        assert verify_transfer(p).ok


@criterion(12, "fixtures P1, SYM1, ID2")
def test_c12_fixtures():
    d = defects(P1)
    assert (d.a, d.b, d.c, d.d) == (2, 1, 0, 0) and d.index == 1
    assert classify(P1).label == "III-2"
    assert pair_index(SYM1) == 0 and classify(SYM1).label == "I-2"
    dec = decompose(SYM1)
    assert dec.x2.is_zero() and dec.y2.is_zero()
    assert classify(ID2).label == "I-1"


if __name__ == "__main__":
    import sys

    code = pytest.main([__file__, "-q", "-p", "no:cacheprovider"])
    print("\n".join(summary_lines()))
    sys.exit(code)
