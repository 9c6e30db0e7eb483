"""Pair and chain generators: synthesis from block tables, worked examples, seeded randoms.

Random streams come from SplitMix64 so that a seed names the same corpus on
every platform and in every implementation: the state advances by the golden
gamma 0x9E3779B97F4A7C15 and each output is the usual two-multiply mixer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .chains import ChainComplex
from .classification import Presentation, presentation, split_name
from .errors import SpecValidationError
from .matrix import Matrix
from .pair import OperatorPair
from .subspace import kernel, rel_codim, span

__all__ = [
    "SplitMix64",
    "SynthSpec",
    "validate_spec",
    "synth_from_case",
    "feasible_specs",
    "CounterexampleParts",
    "pseudo_inverse_counterexample",
    "pseudo_inverse_defect",
    "symmetric_index_pair",
    "random_invertible",
    "random_rank_matrix",
    "random_pair",
    "random_chain",
    "exact_chain",
    "conjugate",
]

_MASK = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 pseudo-random generator with a few integer helpers."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in ``[lo, hi]`` (modulo reduction)."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next_u64() % (hi - lo + 1)

    def shuffle(self, items: list) -> list:
        for i in range(len(items) - 1, 0, -1):
            j = self.randint(0, i)
            items[i], items[j] = items[j], items[i]
        return items


# -- synthesis -------------------------------------------------------------


@dataclass(frozen=True)
class SynthSpec:
    case: str
    number: int
    block_dims: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"case": self.case, "number": self.number, "block_dims": dict(self.block_dims)}

    @classmethod
    def from_json(cls, obj) -> "SynthSpec":
        try:
            case, number = obj["case"], obj["number"]
        except (KeyError, TypeError) as exc:
            raise SpecValidationError("spec JSON needs 'case' and 'number'") from exc
        blocks = obj.get("block_dims", {})
        if not isinstance(blocks, dict):
            raise SpecValidationError("'block_dims' must be an object of block dimensions")
        return cls(case, number, dict(blocks))

    def full_dims(self) -> dict:
        """Dims of every block of the matching presentation, zeros filled in."""
        pres = presentation(self.case, self.number)
        return {b: self.block_dims.get(b, 0) for b in pres.blocks}


def validate_spec(spec: SynthSpec) -> Presentation:
    """Return the presentation for ``spec`` or raise listing every violation."""
    if spec.case not in ("I", "II", "III"):
        raise SpecValidationError(f"case must be I, II or III, not {spec.case!r}")
    if not isinstance(spec.number, int) or isinstance(spec.number, bool) or spec.number < 1:
        raise SpecValidationError(f"number must be a positive integer, not {spec.number!r}")
    pres = presentation(spec.case, spec.number)
    problems = []
    known = set(pres.blocks)
    for name, dim in spec.block_dims.items():
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
            problems.append(f"{name}: dimension must be a non-negative integer, got {dim!r}")
        elif name in pres.vanishing:
            if dim:
                problems.append(f"{name} is null in case {pres.label} but was given dim {dim}")
        elif name not in known:
            problems.append(f"{name} is not a block of case {pres.label}")
    if problems:
        raise SpecValidationError("; ".join(problems))
    dims = spec.full_dims()
    for op, action in (("S", pres.s_action), ("T", pres.t_action)):
        for src, targets in action.items():
            total = sum(dims[t] for t in targets)
            if dims[src] != total:
                problems.append(
                    f"{op} pairs {src} with {' + '.join(targets)}: dim {src} = {dims[src]} "
                    f"but the targets add up to {total}"
                )
    for b in pres.required_nonzero:
        if dims[b] == 0:
            problems.append(f"case {pres.label} needs {b} to be nonzero")
    if problems:
        raise SpecValidationError("; ".join(problems))
    return pres


def _offsets(blocks, dims):
    out, pos = {}, 0
    for b in blocks:
        out[b] = (pos, dims[b])
        pos += dims[b]
    return out, pos


def synth_from_case(spec: SynthSpec) -> OperatorPair:
    """Assemble a pair realizing ``spec`` with identity blocks along its table."""
    pres = validate_spec(spec)
    dims = spec.full_dims()
    xo, x = _offsets(pres.x_blocks, dims)
    yo, y = _offsets(pres.y_blocks, dims)
    S = [[0] * x for _ in range(y)]
    T = [[0] * y for _ in range(x)]
    for grid, action, src_off, dst_off in ((S, pres.s_action, xo, yo), (T, pres.t_action, yo, xo)):
        for src, targets in action.items():
            s0, _ = src_off[src]
            k = 0
            for t in targets:
                t0, td = dst_off[t]
                for i in range(td):
                    grid[t0 + i][s0 + k] = 1
                    k += 1
    return OperatorPair(Matrix(S, shape=(y, x)), Matrix(T, shape=(x, y)))


def _dim_rules(pres: Presentation):
    """Split the blocks into free ones and ones determined by their targets."""
    sources = {}
    for action in (pres.s_action, pres.t_action):
        sources.update(action)
    # the invertible part is a two-cycle X2 <-> Y2; keep its X side free
    cycle = [b for b in sources if any(sources.get(t) == [b] for t in sources[b])]
    cyc_x = [b for b in cycle if split_name(b)[0] == "X2"]
    free = [b for b in pres.blocks if b not in sources] + cyc_x
    derived = [b for b in pres.blocks if b in sources and b not in cyc_x]
    return free, derived, sources


def feasible_specs(case: str, number: int, max_dim: int = 3) -> Iterator[SynthSpec]:
    """Every valid spec of the given case and number with all blocks <= max_dim."""
    pres = presentation(case, number)
    free, derived, sources = _dim_rules(pres)

    def resolve(dims, b):
        if b in dims:
            return dims[b]
        targets = sources[b]
        if len(targets) == 1 and targets[0] in dims and sources.get(targets[0]) == [b]:
            dims[b] = dims[targets[0]]
        else:
            dims[b] = sum(resolve(dims, t) for t in targets)
        return dims[b]

    for values in itertools.product(range(max_dim + 1), repeat=len(free)):
        dims = dict(zip(free, values))
        ok = True
        for b in derived:
            if resolve(dims, b) > max_dim:
                ok = False
                break
        if not ok or any(dims[b] == 0 for b in pres.required_nonzero):
            continue
        yield SynthSpec(case, number, {b: dims[b] for b in pres.blocks})


# -- worked examples -------------------------------------------------------


class CounterexampleParts(NamedTuple):
    pair: OperatorPair
    s_prime: Matrix
    t_prime: Matrix


def _place(grid, row0, col0, n):
    for i in range(n):
        grid[row0 + i][col0 + i] = 1


def pseudo_inverse_counterexample(x1: int, y1: int, x2: int, n1: int, n2: int) -> CounterexampleParts:
    """A pair with a plain pseudo-inverse pair whose range defect grows with n1.

    X = X1 ⊕ N1 ⊕ X2 ⊕ X~ and Y = Y1 ⊕ N2 ⊕ Y2 ⊕ Y~ with X~ = N2, Y~ = N1 and
    dim Y2 = dim X2.  S sends X2 to Y2 and X~ to N2, T sends Y2 to X2 and Y~ to
    N1; both vanish elsewhere.  T' inverts T on N1 ⊕ X2 and S' inverts S on
    N2 ⊕ Y2 while also mapping Y~ onto N1.
    """
    for v in (x1, y1, x2, n1, n2):
        if not isinstance(v, int) or v < 0:
            raise SpecValidationError("block dimensions must be non-negative integers")
    # X offsets
    xN1, xX2, xXt = x1, x1 + n1, x1 + n1 + x2
    X = xXt + n2
    yN2, yY2, yYt = y1, y1 + n2, y1 + n2 + x2
    Y = yYt + n1
    S = [[0] * X for _ in range(Y)]
    T = [[0] * Y for _ in range(X)]
    Tp = [[0] * X for _ in range(Y)]
    Sp = [[0] * Y for _ in range(X)]
    _place(S, yY2, xX2, x2)
    _place(S, yN2, xXt, n2)
    _place(T, xX2, yY2, x2)
    _place(T, xN1, yYt, n1)
    _place(Tp, yYt, xN1, n1)
    _place(Tp, yY2, xX2, x2)
    _place(Sp, xXt, yN2, n2)
    _place(Sp, xX2, yY2, x2)
    _place(Sp, xN1, yYt, n1)
    pair = OperatorPair(Matrix(S, shape=(Y, X)), Matrix(T, shape=(X, Y)))
    return CounterexampleParts(pair, Matrix(Sp, shape=(X, Y)), Matrix(Tp, shape=(Y, X)))


def pseudo_inverse_defect(s_prime: Matrix, t_prime: Matrix) -> int:
    """dim R(S') / (N(T') ∩ R(S'))."""
    return rel_codim(span(s_prime), kernel(t_prime))


def symmetric_index_pair(x1: int, n: int, m: int) -> OperatorPair:
    """X = X1 ⊕ N ⊕ M, Y = M ⊕ N; S is the identity on M, T the identity on N.

    The pair is symmetrical and its index is x1.
    """
    if x1 < 1 or n < 0 or m < 0:
        raise SpecValidationError("need x1 >= 1 and n, m >= 0")
    X, Y = x1 + n + m, m + n
    S = [[0] * X for _ in range(Y)]
    T = [[0] * Y for _ in range(X)]
    _place(S, 0, x1 + n, m)
    _place(T, x1, m, n)
    return OperatorPair(Matrix(S, shape=(Y, X)), Matrix(T, shape=(X, Y)))


# -- random ----------------------------------------------------------------


def random_invertible(n: int, rng: SplitMix64, spread: int = 2) -> tuple[Matrix, Matrix]:
    """A random invertible matrix and its inverse (unit lower times unit upper)."""
    L = [[1 if i == j else (rng.randint(-spread, spread) if j < i else 0) for j in range(n)] for i in range(n)]
    U = [[1 if i == j else (rng.randint(-spread, spread) if j > i else 0) for j in range(n)] for i in range(n)]
    perm = rng.shuffle(list(range(n)))
    P = [[1 if perm[i] == j else 0 for j in range(n)] for i in range(n)]
    A = Matrix(P, shape=(n, n)) @ Matrix(L, shape=(n, n)) @ Matrix(U, shape=(n, n))
    return A, A.inverse()


def random_rank_matrix(rows: int, cols: int, rank: int, rng: SplitMix64) -> Matrix:
    if rank < 0 or rank > min(rows, cols):
        raise SpecValidationError(f"rank {rank} impossible for a {rows}x{cols} matrix")
    D = [[1 if i == j and i < rank else 0 for j in range(cols)] for i in range(rows)]
    P, _ = random_invertible(rows, rng)
    Q, _ = random_invertible(cols, rng)
    return P @ Matrix(D, shape=(rows, cols)) @ Q


def random_pair(x_dim: int, y_dim: int, rank_s: int, rank_t: int, seed: int) -> OperatorPair:
    """Random pair with rank S = rank_s and rank T = rank_t, fixed by ``seed``."""
    if x_dim < 0 or y_dim < 0:
        raise SpecValidationError("dimensions must be non-negative")
    rng = SplitMix64(seed)
    S = random_rank_matrix(y_dim, x_dim, rank_s, rng)
    T = random_rank_matrix(x_dim, y_dim, rank_t, rng)
    return OperatorPair(S, T)


def conjugate(pair: OperatorPair, seed: int) -> OperatorPair:
    """Change bases in X and Y at random; every invariant of the pair is kept."""
    rng = SplitMix64(seed)
    P, P_inv = random_invertible(pair.y_dim, rng)
    Q, Q_inv = random_invertible(pair.x_dim, rng)
    return OperatorPair(P @ pair.S @ Q_inv, Q @ pair.T @ P_inv)


def random_chain(length: int, max_dim: int, seed: int, complex: bool = True) -> ChainComplex:
    """Random chain with ``length`` spaces of dimension at most ``max_dim``.

    With ``complex`` each boundary is routed through the kernel of the next
    one down, so consecutive boundaries compose to zero.
    """
    if length < 1 or max_dim < 0:
        raise SpecValidationError("need length >= 1 and max_dim >= 0")
    rng = SplitMix64(seed)
    dims = [rng.randint(0, max_dim) for _ in range(length)]
    bounds = []
    for p in range(1, length):
        rows, cols = dims[p - 1], dims[p]
        if complex and bounds:
            K = kernel(bounds[-1]).basis
            R = random_rank_matrix(K.cols, cols, rng.randint(0, min(K.cols, cols)), rng)
            bounds.append(K @ R)
        else:
            bounds.append(random_rank_matrix(rows, cols, rng.randint(0, min(rows, cols)), rng))
    return ChainComplex(tuple(dims), tuple(bounds), complex)


def exact_chain(length: int, max_rank: int, seed: int) -> ChainComplex:
    """Random exact complex: every cycle is a boundary, so all homology vanishes.

    Degree p splits as B_p ⊕ C_p with d_p carrying C_p isomorphically onto
    B_{p-1}; a random change of basis in each degree hides the splitting.
    """
    if length < 1 or max_rank < 0:
        raise SpecValidationError("need length >= 1 and max_rank >= 0")
    rng = SplitMix64(seed)
    # ranks[p] = rank of the boundary out of degree p; none out of 0 or into the top
    ranks = [0] + [rng.randint(0, max_rank) for _ in range(length - 1)] + [0]
    dims = [ranks[p] + ranks[p + 1] for p in range(length)]
    bases = [random_invertible(n, rng) for n in dims]
    bounds = []
    for p in range(1, length):
        r_below = ranks[p]
        E = [[0] * dims[p] for _ in range(dims[p - 1])]
        for i in range(r_below):
            E[i][ranks[p + 1] + i] = 1
        E = Matrix(E, shape=(dims[p - 1], dims[p]))
        bounds.append(bases[p - 1][0] @ E @ bases[p][1])
    return ChainComplex(tuple(dims), tuple(bounds), True)
