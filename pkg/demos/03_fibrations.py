"""Which base dimensions could carry an invariant fibration?

If the generic fibre is of general type, the relative degrees are all 1
and the total sequence must be a sliding-window maximum of the base
sequence. general_type_feasibility decides whether such a base sequence
exists; base_dim_bound reads a lower bound off the plateau at the top.

Run from the repository root:  python3 demos/03_fibrations.py
"""
from hkdyn import (
    FibrationHypothesis,
    base_dim_bound,
    dnt_check,
    general_type_feasibility,
)

for total in ([1, 2, 4, 2, 1], [1, 2, 2, 2, 1], [1, 1, 1, 1, 1], [1, 2, 4, 4, 4, 2, 1]):
    print(total, " base dim >=", base_dim_bound(total))
    for d in range(1, len(total) - 1):
        f = general_type_feasibility(total, d)
        verdict = f"witness {list(map(int, f.witness))}" if f.feasible else f"fails at p={f.index}"
        print(f"   base_dim {d}: {verdict}")

# %% the product formula with nontrivial relative degrees
h = FibrationHypothesis((1, 2, 4, 2, 1), 2, base_seq=(1, 2, 1), relative_seq=(1, 2, 1))
print("(1,2,1) x (1,2,1) reproduces (1,2,4,2,1):", dnt_check(h).ok)
