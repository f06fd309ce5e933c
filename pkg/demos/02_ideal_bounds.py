"""Bounding arithmetic unipotent subgroups by fractional ideals of F_q[t].

Run with ``python demos/02_ideal_bounds.py``.
"""
# %% A conjugate of the upper unipotent group of SL_2
import random

from btquot.ffield import GF, RationalFunction, rr_dim, truncated_basis, FracIdeal
from btquot.ideals import ConjContext, lower_ideal, m_alpha, random_h, sandwich, sl2_example, upper_ideals

F = GF(3)
t = RationalFunction.t_power(F, 1)
for x in (t, t.inverse()):
    ctx = sl2_example(F, x)
    print(f"x = {x!r:8}  M_alpha = {m_alpha(ctx, (0, 1))!r:10}  lower ideal = {lower_ideal(ctx, (0, 1))!r}")

# %% Random conjugates of SL_3: lower ideal <= exact set <= upper ideal
rng = random.Random(5)
ctx = ConjContext(GF(2), random_h(GF(2), 3, rng))
ups = upper_ideals(ctx)
for pair in [(0, 1), (1, 2), (0, 2)]:
    rep = sandwich(ctx, pair)
    print(f"alpha = {pair}: lower {rep.lower!r:14} upper {ups[pair]!r:14} "
          f"{len(rep.brute)} members on window {rep.window}, ok = {rep.lower_ok and rep.upper_ok}")

# %% Riemann-Roch in genus 0: the truncations have the predicted dimension
J = FracIdeal(t * t * (t + 1))
for m in range(2, 7):
    print(f"m = {m}: |basis of J[m]| = {len(truncated_basis(J, m))}, formula {rr_dim(J.degree, m, 0, 1)}")
