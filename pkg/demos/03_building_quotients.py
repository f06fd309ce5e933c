"""Quotients of Bruhat-Tits buildings by SL_n(F_q[t]).

Run with ``python demos/03_building_quotients.py``.
"""
# %% For SL_2 the quotient of the tree is a ray
from btquot.building import CurveSpec, cusp_count, pic_order, quotient_ball, stabilizer_order_sl2

Q = quotient_ball(2, 2, 5)
print(f"ball of {Q.ball_size} vertices folds to {len(Q.nodes)} types: {Q.nodes}")
print("path:", Q.is_path())

# %% Vertex stabilizers along the ray
for q in (2, 3):
    print(f"q = {q}:", [stabilizer_order_sl2(m, q) for m in range(6)])

# %% For SL_3 the quotient ball is a sector chamber
Q = quotient_ball(3, 2, 2)
print("\nSL_3 types within distance 2:", Q.nodes)
print(Q.to_dot())

# %% Cusps are counted by the Picard group: one for F_q[t], |E(F_q)|^rank in genus 1
E = CurveSpec(1, 5, (0, 0, 0, 1, 0))
print("y^2 = x^3 + x over F_5:", pic_order(E), "points;", cusp_count(E, 2), "cusps in rank 2")
