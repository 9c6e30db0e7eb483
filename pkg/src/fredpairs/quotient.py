"""The induced pair on X / R(TS) and Y / R(ST).

Quotients are modelled by explicit complements: ``Q`` reads coordinates along
the greedy complement of the subspace and ``section`` embeds it back.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InconsistencyError
from .matrix import Matrix
from .pair import OperatorPair, defects, is_symmetrical
from .subspace import Subspace, image, is_subset, kernel, quotient_map, rel_codim, span

__all__ = ["QuotientPair", "TransferReport", "quotient_pair", "verify_transfer"]


@dataclass(frozen=True)
class QuotientPair:
    x_complement: Subspace
    y_complement: Subspace
    s_bar: Matrix
    t_bar: Matrix
    projections: tuple  # (Q_X, Q_Y)
    sections: tuple

    @property
    def pair(self) -> OperatorPair:
        return OperatorPair(self.s_bar, self.t_bar)

    def to_json(self) -> dict:
        out = self.pair.to_json()
        out["Q_X"] = self.projections[0].to_json()
        out["Q_Y"] = self.projections[1].to_json()
        return out


def quotient_pair(pair: OperatorPair) -> QuotientPair:
    S, T = pair.S, pair.T
    r_ts = span(T @ S)
    r_st = span(S @ T)
    if not is_subset(image(S, r_ts), r_st) or not is_subset(image(T, r_st), r_ts):
        raise InconsistencyError("S and T do not respect R(TS) and R(ST)")
    qx, secx = quotient_map(r_ts)
    qy, secy = quotient_map(r_st)
    s_bar = qy @ S @ secx
    t_bar = qx @ T @ secy
    if qy @ S != s_bar @ qx or qx @ T != t_bar @ qy:
        raise InconsistencyError("induced maps do not commute with the quotient maps")
    return QuotientPair(span(secx), span(secy), s_bar, t_bar, (qx, qy), (secx, secy))


@dataclass(frozen=True)
class TransferReport:
    a: int
    c: int
    quotient_a: int
    quotient_c: int
    symmetrical: bool
    quotient_index: int

    @property
    def ok(self) -> bool:
        return self.symmetrical and self.a == self.quotient_a and self.c == self.quotient_c

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "c": self.c,
            "quotient_a": self.quotient_a,
            "quotient_c": self.quotient_c,
            "symmetrical": self.symmetrical,
            "quotient_index": self.quotient_index,
            "ok": self.ok,
        }


def verify_transfer(pair: OperatorPair) -> TransferReport:
    """Compare the kernel defects of the induced pair with a and c of the original."""
    qp = quotient_pair(pair)
    dp = defects(pair)
    sb, tb = qp.s_bar, qp.t_bar
    qa = rel_codim(kernel(sb), span(tb))
    qc = rel_codim(kernel(tb), span(sb))
    qpair = qp.pair
    return TransferReport(dp.a, dp.c, qa, qc, is_symmetrical(qpair), defects(qpair).index)
