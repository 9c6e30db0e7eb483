"""A tour of one small pair, from defects to its quotient.

X = Q^3, Y = Q^2, S keeps the first coordinate and T sends the second basis
vector of Y to the first of X.  Run with ``python3 demos/walkthrough.py``.
"""

from fredpairs import P1, adjoint_pair, canonical_form, classify, decompose, defects, range_sequences
from fredpairs.classification import full_decomposition, index_formulas
from fredpairs.quotient import verify_transfer

pair = P1
print("S =")
print(pair.S.pretty())
print("T =")
print(pair.T.pretty())

d = defects(pair)
print(f"\ndefects a={d.a} b={d.b} c={d.c} d={d.d}, index {d.index} (dim X - dim Y = {pair.x_dim - pair.y_dim})")

dec = decompose(pair)
for name in ("ns_rt", "x1", "x2", "x_tilde", "nt_rs", "y1", "y2", "y_tilde"):
    print(f"  {name:8s} {getattr(dec, name).vectors()}")

seq = range_sequences(pair)
print("\nR_S dims:", [s.dim for s in seq.r_s], " R_T dims:", [s.dim for s in seq.r_t])
print("classification:", classify(pair).label)

print("\nlevel-2 blocks:")
for name, dim in full_decomposition(pair, 2).dims().items():
    if dim:
        print(f"  {name:6s} {dim}")
print("index three ways:", tuple(index_formulas(pair)))
print("canonical signature:", canonical_form(pair).block_dims)

adj, w = adjoint_pair(pair)
print("\nadjoint pair has index", defects(adj).index)
print("S' =")
print(w.s_prime.pretty())

t = verify_transfer(pair)
print(f"\nquotient by R(TS), R(ST): kernel defects {t.quotient_a}, {t.quotient_c}; symmetrical {t.symmetrical}")
