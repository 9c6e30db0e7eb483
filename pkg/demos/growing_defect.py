"""Pseudo-inverse pairs need not stay Fredholm.

The truncated construction keeps the index of (S, T) fixed while the range
defect of the pair of pseudo-inverses grows with the size of one block.  In
infinite dimensions the block is infinite and the defect is too.
"""

from fredpairs.generators import pseudo_inverse_counterexample, pseudo_inverse_defect
from fredpairs.pair import is_generalized_inverse, pair_index

print(" n1  index  defect of (S', T')")
for n1 in range(0, 7):
    parts = pseudo_inverse_counterexample(1, 1, 1, n1, 2)
    assert is_generalized_inverse(parts.pair.S, parts.s_prime)
    assert is_generalized_inverse(parts.pair.T, parts.t_prime)
    print(f"{n1:3d}  {pair_index(parts.pair):5d}  {pseudo_inverse_defect(parts.s_prime, parts.t_prime):4d}")
