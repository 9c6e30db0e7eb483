"""Range sequences, the number and case of a pair, and the block presentations.

The range sequences R_{S,n}, R_{T,n} start from (Y, X) and apply S and T
alternately; the tilde sequences do the same starting from S(X~) and T(Y~).
Their stabilization indices p and q give the number min(p, q) and the case
(I when p = q, II when p < q, III when q < p).

Block names used throughout (and in SynthSpec JSON):

    X1, Y1                 kernel parts outside the opposite range
    N^k, M^k               R_{T,k} ∩ N(S), R_{S,k} ∩ N(T)
    NN^k, MM^k             the same intersections taken in the tilde sequences
    X2^k, Y2^k             complements of N^k, M^k inside R_{T,k}, R_{S,k}
    XX2^k, YY2^k           complements of NN^k, MM^k inside the tilde ranges
    Xt, Yt                 the tilde complements X~, Y~
    Xt_N, Xt_2, Yt_N, Yt_2 their splits over MM^1/YY2^1 and NN^1/XX2^1
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .errors import TheoremViolation
from .pair import OperatorPair, decompose, defects, _kernels_ranges
from .subspace import (
    Subspace,
    constrained_complement,
    direct_sum_of,
    full,
    image,
    intersect,
    preimage,
    sum_of,
    zero,
)

__all__ = [
    "RangeSequences",
    "Classification",
    "SubspaceFamilies",
    "Presentation",
    "FullDecomposition",
    "CanonicalReport",
    "IndexFormulas",
    "range_sequences",
    "classify",
    "subspace_families",
    "presentation",
    "level_presentation",
    "full_decomposition",
    "canonical_form",
    "index_formulas",
    "unmatched_blocks",
    "is_weyl",
    "is_regular_weyl",
    "mirror_name",
]


# -- range sequences -----------------------------------------------------


@dataclass(frozen=True)
class RangeSequences:
    """Range sequences indexed from 0; the tilde lists hold ``None`` at index 0."""

    r_s: tuple
    r_t: tuple
    r_s_tilde: tuple
    r_t_tilde: tuple
    p: int
    q: int

    def s(self, n: int) -> Subspace:
        return self.r_s[min(n, len(self.r_s) - 1)]

    def t(self, n: int) -> Subspace:
        return self.r_t[min(n, len(self.r_t) - 1)]

    def s_tilde(self, n: int) -> Subspace:
        if n < len(self.r_s_tilde):
            return self.r_s_tilde[n]
        return zero(self.r_s[0].ambient)

    def t_tilde(self, n: int) -> Subspace:
        if n < len(self.r_t_tilde):
            return self.r_t_tilde[n]
        return zero(self.r_t[0].ambient)


@lru_cache(maxsize=4096)
def _range_sequences(pair: OperatorPair, depth: int) -> RangeSequences:
    S, T = pair.S, pair.T
    r_s, r_t = [full(pair.y_dim)], [full(pair.x_dim)]
    bound = pair.x_dim + pair.y_dim + 2
    stable_at = None
    n = 0
    while True:
        r_s.append(image(S, r_t[n]))
        r_t.append(image(T, r_s[n]))
        n += 1
        if stable_at is None and r_s[n] == r_s[n - 1] and r_t[n] == r_t[n - 1]:
            stable_at = n - 1
        if stable_at is not None and n >= max(depth, 2, stable_at + 1):
            break
        if n > bound + depth:
            raise TheoremViolation("range sequences stabilize", "no stabilization within the bound")
    lim_s, lim_t = r_s[-1], r_t[-1]
    p = next(k for k in range(1, len(r_s)) if r_s[k] == lim_s)
    q = next(k for k in range(1, len(r_t)) if r_t[k] == lim_t)

    dec = decompose(pair)
    st, tt = [None, image(S, dec.x_tilde)], [None, image(T, dec.y_tilde)]
    for k in range(1, n):
        st.append(image(S, tt[k]))
        tt.append(image(T, st[k]))
    return RangeSequences(tuple(r_s), tuple(r_t), tuple(st), tuple(tt), p, q)


def range_sequences(pair: OperatorPair, depth: int = 0) -> RangeSequences:
    """Compute both range sequences and the tilde sequences.

    The lists run at least one step past joint stabilization, and at least to
    index ``depth`` when one is given.
    """
    return _range_sequences(pair, depth)


@dataclass(frozen=True)
class Classification:
    number: int
    case: str
    p: int
    q: int

    @property
    def label(self) -> str:
        return f"{self.case}-{self.number}"

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "number": self.number, "case": self.case}


def classify(pair: OperatorPair) -> Classification:
    seq = range_sequences(pair)
    p, q = seq.p, seq.q
    case = "I" if p == q else ("II" if p < q else "III")
    return Classification(min(p, q), case, p, q)


# -- nested families -------------------------------------------------------

_SIMPLE = ("X1", "Y1", "Xt", "Yt", "Xt_N", "Xt_2", "Yt_N", "Yt_2")
_LEVELLED = ("N", "M", "NN", "MM", "X2", "Y2", "XX2", "YY2")

_MIRROR = {
    "X1": "Y1", "Xt": "Yt", "Xt_N": "Yt_N", "Xt_2": "Yt_2",
    "N": "M", "NN": "MM", "X2": "Y2", "XX2": "YY2",
}
_MIRROR.update({v: k for k, v in list(_MIRROR.items())})


def split_name(name: str) -> tuple[str, int | None]:
    if "^" in name:
        kind, level = name.split("^")
        return kind, int(level)
    return name, None


def mirror_name(name: str) -> str:
    kind, level = split_name(name)
    kind = _MIRROR[kind]
    return kind if level is None else f"{kind}^{level}"


def block_side(name: str) -> str:
    kind, _ = split_name(name)
    return "X" if kind in ("X1", "Xt", "Xt_N", "Xt_2", "N", "NN", "X2", "XX2") else "Y"


@dataclass(frozen=True)
class SubspaceFamilies:
    """All nested families up to ``depth``; look blocks up with :meth:`block`."""

    depth: int
    simple: dict
    levelled: dict  # kind -> tuple indexed by level (index 0 unused)

    def block(self, name: str) -> Subspace:
        kind, level = split_name(name)
        if level is None:
            return self.simple[kind]
        if level < 1:
            raise KeyError(f"block levels start at 1: {name}")
        if level > self.depth:
            raise KeyError(f"{name} is beyond the computed depth {self.depth}")
        return self.levelled[kind][level]

    def dims(self) -> dict:
        out = {k: v.dim for k, v in self.simple.items()}
        for kind, seq in self.levelled.items():
            for lvl in range(1, self.depth + 1):
                out[f"{kind}^{lvl}"] = seq[lvl].dim
        return out


def _check(condition: bool, claim: str, detail: str = ""):
    if not condition:
        raise TheoremViolation(claim, detail)


@lru_cache(maxsize=4096)
def subspace_families(pair: OperatorPair, n: int) -> SubspaceFamilies:
    """Build M^k, Y2^k, MM^k, YY2^k (and the X-side mirrors) for k = 1..n.

    Level k + 1 is obtained from level k by intersecting with N(T) and taking
    a complement constrained to the previous Y2; the intersection identities
    are verified afterwards.
    """
    if n < 1:
        raise ValueError("family depth must be at least 1")
    dec = decompose(pair)
    seq = range_sequences(pair, n + 1)
    ns, _, nt, _ = _kernels_ranges(pair)
    out = {}
    for side, op, ker_other, r_seq, r_tilde, m0, y0 in (
        ("Y", pair.S, nt, seq.s, seq.s_tilde, dec.nt_rs, dec.y2),
        ("X", pair.T, ns, seq.t, seq.t_tilde, dec.ns_rt, dec.x2),
    ):
        m = [None, m0]
        y2 = [None, y0]
        for k in range(1, n):
            m.append(intersect(r_seq(k + 1), ker_other))
            y2.append(constrained_complement(m[k + 1], r_seq(k + 1), y2[k]))
        mm = [None]
        yy2 = [None]
        for k in range(1, n + 1):
            mm.append(intersect(r_tilde(k), ker_other))
            yy2.append(constrained_complement(mm[k], r_tilde(k), y2[k]))
        out[side] = (m, y2, mm, yy2)

    m, y2, mm, yy2 = out["Y"]
    nn_, x2, nnn, xx2 = out["X"]
    S, T = pair.S, pair.T
    xt, yt = dec.x_tilde, dec.y_tilde
    simple = {
        "X1": dec.x1,
        "Y1": dec.y1,
        "Xt": xt,
        "Yt": yt,
        "Xt_N": intersect(xt, preimage(S, mm[1])),
        "Xt_2": intersect(xt, preimage(S, yy2[1])),
        "Yt_N": intersect(yt, preimage(T, nnn[1])),
        "Yt_2": intersect(yt, preimage(T, xx2[1])),
    }
    levelled = {
        "M": tuple(m), "Y2": tuple(y2), "MM": tuple(mm), "YY2": tuple(yy2),
        "N": tuple(nn_), "X2": tuple(x2), "NN": tuple(nnn), "XX2": tuple(xx2),
    }
    fam = SubspaceFamilies(n, simple, levelled)
    _verify_families(pair, fam, seq)
    return fam


def _verify_families(pair: OperatorPair, fam: SubspaceFamilies, seq: RangeSequences):
    n = fam.depth
    for side, r_seq, r_tilde, M, Y2, MM, YY2, tilde, tN, t2 in (
        ("Y", seq.s, seq.s_tilde, "M", "Y2", "MM", "YY2", "Xt", "Xt_N", "Xt_2"),
        ("X", seq.t, seq.t_tilde, "N", "X2", "NN", "XX2", "Yt", "Yt_N", "Yt_2"),
    ):
        L = fam.levelled
        for k in range(1, n + 1):
            r = r_seq(k)
            _check(
                direct_sum_of(L[M][k], L[Y2][k]) and sum_of(L[M][k], L[Y2][k]) == r,
                f"range at level {k} splits as {M}^{k} ⊕ {Y2}^{k}",
            )
            for j in range(1, k):
                _check(
                    L[Y2][k] == intersect(r, L[Y2][j]),
                    f"{Y2}^{k} = R ∩ {Y2}^{j}",
                )
            rt = r_tilde(k)
            _check(
                direct_sum_of(L[MM][k], L[YY2][k]) and sum_of(L[MM][k], L[YY2][k]) == rt,
                f"tilde range at level {k} splits as {MM}^{k} ⊕ {YY2}^{k}",
            )
            _check(L[YY2][k] == intersect(rt, L[Y2][k]), f"{YY2}^{k} = tilde range ∩ {Y2}^{k}")
            _check(
                direct_sum_of(r_seq(k + 1), rt) and sum_of(r_seq(k + 1), rt) == r,
                f"range at level {k} splits as next range ⊕ tilde range ({side} side)",
            )
            if k < n:
                _check(
                    direct_sum_of(L[M][k + 1], L[MM][k]) and sum_of(L[M][k + 1], L[MM][k]) == L[M][k],
                    f"{M}^{k} = {M}^{k + 1} ⊕ {MM}^{k}",
                )
                _check(
                    direct_sum_of(L[Y2][k + 1], L[YY2][k])
                    and sum_of(L[Y2][k + 1], L[YY2][k]) == L[Y2][k],
                    f"{Y2}^{k} = {Y2}^{k + 1} ⊕ {YY2}^{k}",
                )
        s = fam.simple
        _check(
            direct_sum_of(s[tN], s[t2]) and sum_of(s[tN], s[t2]) == s[tilde],
            f"{tilde} = {tN} ⊕ {t2}",
        )


# -- presentations ---------------------------------------------------------


@dataclass(frozen=True)
class Presentation:
    """Block table of one canonical presentation.

    ``s_action`` / ``t_action`` map a source block to the blocks its image is
    the direct sum of; blocks not listed are killed.  ``zero_claims`` are
    (kind, start) meaning the block is zero at every level from ``start`` on
    (``start`` is None for unlevelled blocks); ``stable_claims`` are
    (kind, level) meaning the block no longer changes from that level on.
    """

    label: str
    x_blocks: tuple
    y_blocks: tuple
    s_action: dict
    t_action: dict
    vanishing: tuple = ()
    required_nonzero: tuple = ()
    zero_claims: tuple = ()
    stable_claims: tuple = ()

    @property
    def blocks(self) -> tuple:
        return self.x_blocks + self.y_blocks

    def mirrored(self, label: str) -> "Presentation":
        mz = lambda names: tuple(mirror_name(n) for n in names)
        act = lambda a: {mirror_name(k): [mirror_name(v) for v in vs] for k, vs in a.items()}
        return Presentation(
            label,
            mz(self.y_blocks),
            mz(self.x_blocks),
            act(self.t_action),
            act(self.s_action),
            mz(self.vanishing),
            mz(self.required_nonzero),
            tuple((_MIRROR[k], s) for k, s in self.zero_claims),
            tuple((_MIRROR[k], s) for k, s in self.stable_claims),
        )

    def max_level(self) -> int:
        lv = [split_name(b)[1] or 1 for b in self.blocks + self.vanishing]
        lv += [s or 1 for _, s in self.zero_claims] + [s for _, s in self.stable_claims]
        return max(lv + [1])


def _case_one(p: int) -> Presentation:
    if p == 1:
        return Presentation(
            "I-1",
            ("X1", "X2^2"),
            ("Y1", "Y2^2"),
            {"X2^2": ["Y2^2"]},
            {"Y2^2": ["X2^2"]},
            zero_claims=(("Xt", None), ("Yt", None), ("MM", 1), ("YY2", 1), ("NN", 1),
                         ("XX2", 1), ("M", 2), ("N", 2)),
            stable_claims=(("X2", 1), ("Y2", 1)),
        )
    x = ("X1",) + tuple(f"NN^{i}" for i in range(1, p)) + (f"X2^{p-1}",)
    x += tuple(f"XX2^{i}" for i in range(1, p - 1)) + ("Xt_N",)
    s = {f"X2^{p-1}": [f"Y2^{p-1}"], "Xt_N": ["MM^1"]}
    for i in range(1, p - 2):
        s[f"XX2^{i}"] = [f"MM^{i+1}", f"YY2^{i+1}"]
    vanishing = ()
    if p >= 3:
        s[f"XX2^{p-2}"] = [f"MM^{p-1}"]
        s["Xt_2"] = ["YY2^1"]
        x += ("Xt_2",)
    else:
        vanishing = ("XX2^1", "Xt_2")
    half = Presentation(
        f"I-{p}",
        x,
        (),
        s,
        {},
        vanishing,
        (f"NN^{p-1}",),
        (("NN", p), ("XX2", p - 1), ("N", p)),
        (("X2", p - 1),),
    )
    other = half.mirrored("")
    return Presentation(
        f"I-{p}",
        half.x_blocks,
        other.y_blocks,
        half.s_action,
        other.t_action,
        half.vanishing + other.vanishing,
        half.required_nonzero + other.required_nonzero,
        half.zero_claims + other.zero_claims + (("MM", p), ("YY2", p), ("NN", p), ("XX2", p)),
        half.stable_claims + other.stable_claims,
    )


def _case_two(p: int) -> Presentation:
    if p == 1:
        return Presentation(
            "II-1",
            ("X1", "NN^1", "X2^2"),
            ("Y1", "Y2^2", "Yt_N"),
            {"X2^2": ["Y2^2"]},
            {"Y2^2": ["X2^2"], "Yt_N": ["NN^1"]},
            required_nonzero=("NN^1",),
            zero_claims=(("Xt", None), ("Yt_2", None), ("MM", 1), ("YY2", 1), ("NN", 2),
                         ("XX2", 1), ("N", 2), ("M", 2)),
            stable_claims=(("X2", 1), ("Y2", 1)),
        )
    x = ("X1",) + tuple(f"NN^{i}" for i in range(1, p + 1)) + (f"X2^{p-1}",)
    x += tuple(f"XX2^{i}" for i in range(1, p - 1)) + ("Xt_N", "Xt_2")
    y = ("Y1",) + tuple(f"MM^{j}" for j in range(1, p)) + (f"Y2^{p}",)
    y += tuple(f"YY2^{j}" for j in range(1, p)) + ("Yt_N",)
    s = {f"X2^{p-1}": [f"Y2^{p}"], "Xt_N": ["MM^1"], "Xt_2": ["YY2^1"]}
    for i in range(1, p - 1):
        s[f"XX2^{i}"] = [f"MM^{i+1}", f"YY2^{i+1}"]
    t = {f"Y2^{p}": [f"X2^{p-1}"], "Yt_N": ["NN^1"]}
    for j in range(1, p - 2):
        t[f"YY2^{j}"] = [f"NN^{j+1}", f"XX2^{j+1}"]
    for k in (p - 2, p - 1):
        if k >= 1:
            t[f"YY2^{k}"] = [f"NN^{k+1}"]
    vanishing = ()
    if p >= 3:
        t["Yt_2"] = ["XX2^1"]
        y += ("Yt_2",)
    else:
        vanishing = ("XX2^1", "Yt_2")
    return Presentation(
        f"II-{p}",
        x,
        y,
        s,
        t,
        vanishing,
        (f"NN^{p}",),
        (("MM", p), ("NN", p + 1), ("XX2", p - 1), ("YY2", p), ("M", p), ("N", p + 1)),
        (("X2", p - 1), ("Y2", p)),
    )


@lru_cache(maxsize=None)
def presentation(case: str, number: int) -> Presentation:
    """The canonical block table for a pair of the given case and number."""
    if number < 1:
        raise ValueError("the number of a pair is at least 1")
    if case == "I":
        return _case_one(number)
    if case == "II":
        return _case_two(number)
    if case == "III":
        return _case_two(number).mirrored(f"III-{number}")
    raise ValueError(f"unknown case {case!r}")


@lru_cache(maxsize=None)
def level_presentation(n: int) -> Presentation:
    """The general presentation of X and Y valid at any level n >= 1."""
    if n < 1:
        raise ValueError("level must be at least 1")
    x = ("X1", f"N^{n}") + tuple(f"NN^{i}" for i in range(1, n))
    x += (f"X2^{n}",) + tuple(f"XX2^{i}" for i in range(1, n)) + ("Xt_N", "Xt_2")
    s = {f"X2^{n}": [f"M^{n+1}", f"Y2^{n+1}"], "Xt_N": ["MM^1"], "Xt_2": ["YY2^1"]}
    for i in range(1, n):
        s[f"XX2^{i}"] = [f"MM^{i+1}", f"YY2^{i+1}"]
    half = Presentation(f"level-{n}", x, (), s, {})
    other = half.mirrored("")
    return Presentation(f"level-{n}", x, other.y_blocks, s, other.t_action)


def _verify_presentation(pair: OperatorPair, fam: SubspaceFamilies, pres: Presentation) -> list:
    """Check every claim of ``pres`` on ``fam``; return the action records."""
    label = pres.label
    records = []
    for side, blocks, op, action, n in (
        ("X", pres.x_blocks, pair.S, pres.s_action, pair.x_dim),
        ("Y", pres.y_blocks, pair.T, pres.t_action, pair.y_dim),
    ):
        spaces = [fam.block(b) for b in blocks]
        total = sum_of(*spaces) if spaces else zero(n)
        _check(
            direct_sum_of(*spaces) and total.dim == n,
            f"{label}: {side} is the direct sum of {', '.join(blocks)}",
            f"block dims {[s.dim for s in spaces]} in dimension {n}",
        )
        opname = "S" if side == "X" else "T"
        for b, U in zip(blocks, spaces):
            img = image(op, U)
            if b in action:
                targets = action[b]
                tgt = [fam.block(t) for t in targets]
                onto = sum_of(*tgt)
                _check(
                    direct_sum_of(*tgt) and img.dim == U.dim and img == onto,
                    f"{label}: {opname} maps {b} isomorphically onto {' ⊕ '.join(targets)}",
                    f"dim {b} = {U.dim}, dim image = {img.dim}, dim target = {onto.dim}",
                )
                records.append((opname, b, tuple(targets)))
            else:
                _check(img.is_zero(), f"{label}: {opname} vanishes on {b}")
                records.append((opname, b, ()))
    for b in pres.vanishing:
        _check(fam.block(b).is_zero(), f"{label}: {b} is null")
    for b in pres.required_nonzero:
        _check(not fam.block(b).is_zero(), f"{label}: {b} is nonzero")
    for kind, start in pres.zero_claims:
        if start is None:
            _check(fam.block(kind).is_zero(), f"{label}: {kind} is null")
            continue
        for lvl in range(start, fam.depth + 1):
            _check(fam.block(f"{kind}^{lvl}").is_zero(), f"{label}: {kind}^{lvl} is null")
    for kind, lvl in pres.stable_claims:
        ref = fam.block(f"{kind}^{lvl}")
        for later in range(lvl + 1, fam.depth + 1):
            _check(fam.block(f"{kind}^{later}") == ref, f"{label}: {kind}^{later} = {kind}^{lvl}")
    return records


@dataclass(frozen=True)
class FullDecomposition:
    level: int
    x_blocks: tuple  # (name, Subspace) pairs
    y_blocks: tuple
    actions: tuple  # (operator, source, targets); empty targets means killed

    def dims(self) -> dict:
        return {name: U.dim for name, U in self.x_blocks + self.y_blocks}

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "X": [{"name": n, "dim": U.dim, "subspace": U.to_json()} for n, U in self.x_blocks],
            "Y": [{"name": n, "dim": U.dim, "subspace": U.to_json()} for n, U in self.y_blocks],
            "actions": [
                {"operator": op, "source": src, "targets": list(tg)} for op, src, tg in self.actions
            ],
        }


def full_decomposition(pair: OperatorPair, n: int | None = None) -> FullDecomposition:
    """The level-n block presentation of X and Y with every action verified.

    ``n`` defaults to the number of the pair.
    """
    if n is None:
        n = classify(pair).number
    if n < 1:
        raise ValueError("level must be at least 1")
    pres = level_presentation(n)
    fam = subspace_families(pair, n + 1)
    records = _verify_presentation(pair, fam, pres)
    return FullDecomposition(
        n,
        tuple((b, fam.block(b)) for b in pres.x_blocks),
        tuple((b, fam.block(b)) for b in pres.y_blocks),
        tuple(records),
    )


@dataclass(frozen=True)
class CanonicalReport:
    classification: Classification
    presentation: Presentation
    block_dims: dict
    claims_checked: int

    @property
    def label(self) -> str:
        return self.presentation.label

    def to_json(self) -> dict:
        return {
            "classification": self.classification.to_json(),
            "presentation": self.label,
            "blocks": dict(self.block_dims),
            "claims_checked": self.claims_checked,
        }


def canonical_form(pair: OperatorPair) -> CanonicalReport:
    """Check the canonical presentation matching the pair's case and number.

    Raises TheoremViolation naming the first claim that fails.
    """
    cl = classify(pair)
    pres = presentation(cl.case, cl.number)
    fam = subspace_families(pair, pres.max_level() + 1)
    records = _verify_presentation(pair, fam, pres)
    claims = (
        len(records) + 2 + len(pres.vanishing) + len(pres.required_nonzero)
        + len(pres.zero_claims) + len(pres.stable_claims)
    )
    dims = {b: fam.block(b).dim for b in pres.blocks}
    return CanonicalReport(cl, pres, dims, claims)


# -- index formulas ------------------------------------------------------


class IndexFormulas(NamedTuple):
    via_defects: int
    via_kernel_blocks: int
    via_tilde_blocks: int


def index_formulas(pair: OperatorPair) -> IndexFormulas:
    """The index from the defects and from two block-dimension counts.

    For number >= 2 the counts are dim(X1 ⊕ N^2) - dim(Y1 ⊕ Yt_2) and
    dim(X1 ⊕ Xt_2) - dim(Y1 ⊕ M^2); for number 1 both are dim X1 - dim Y1.
    """
    ind = defects(pair).index
    fam = subspace_families(pair, 2)
    d = lambda name: fam.block(name).dim
    if classify(pair).number == 1:
        v = d("X1") - d("Y1")
        return IndexFormulas(ind, v, v)
    first = d("X1") + d("N^2") - d("Y1") - d("Yt_2")
    second = d("X1") + d("Xt_2") - d("Y1") - d("M^2")
    return IndexFormulas(ind, first, second)


def unmatched_blocks(pair: OperatorPair) -> dict:
    """Dimensions of the two block groups that no restriction of S or T relates."""
    fam = subspace_families(pair, 2)
    d = lambda name: fam.block(name).dim
    return {
        "X1+N^2": d("X1") + d("N^2"),
        "Y1+Yt_2": d("Y1") + d("Yt_2"),
        "X1+Xt_2": d("X1") + d("Xt_2"),
        "Y1+M^2": d("Y1") + d("M^2"),
    }


def is_weyl(pair: OperatorPair) -> bool:
    return defects(pair).index == 0


def is_regular_weyl(pair: OperatorPair) -> bool:
    # every finite-dimensional operator has a generalized inverse
    return is_weyl(pair)
