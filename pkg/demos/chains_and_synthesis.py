"""Folding complexes into pairs, and building pairs from a block signature."""

from fredpairs import C2, canonical_form, chain_report, fold, splitting_homotopy
from fredpairs.generators import SynthSpec, conjugate, random_chain, synth_from_case
from fredpairs.pair import pair_index

r = chain_report(C2)
print("C2: homology", r.homology_dims, "index", r.index, "folded index", pair_index(fold(C2)))
sh = splitting_homotopy(C2)
print("projection onto H_1:")
print(sh.k[1].pretty())

for seed in range(3):
    c = random_chain(5, 3, seed)
    print(f"random complex dims {c.dims}: index {chain_report(c).index}, folded {pair_index(fold(c))}")

spec = SynthSpec("II", 2, {"NN^2": 1, "Xt_2": 1, "YY2^1": 1})
pair = conjugate(synth_from_case(spec), seed=5)
report = canonical_form(pair)
print("\nsynthesized then scrambled:", report.label)
print("recovered blocks:", {k: v for k, v in report.block_dims.items() if v})
