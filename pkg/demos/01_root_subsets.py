"""Commutative root subsets and their conjugation polynomials.

Run with ``python demos/01_root_subsets.py``.
"""
# %% Root systems are integer vectors on the simple roots
from btquot.chevalley import conjugation_polynomials, structure_constants
from btquot.rootsys import highest_root, parse_type
from btquot.subsets import check_conditions, psi_basis, psi_theta

for spec in ["A3", "B3", "G2", "E8"]:
    rs = parse_type(spec)
    print(f"{spec:3}  |Phi+| = {len(rs.positive_roots):3}  highest root {highest_root(rs)}")

# %% A commutative, Borel-normalized basis of the root span
rs = parse_type("E8")
psi = psi_basis(rs)
print("\nE8 basis subset:", ["".join(map(str, a)) for a in psi])
print("conditions:", {k: v for k, v in check_conditions(psi).items() if k in ("C1", "C2")})

# %% The subsets attached to a set Theta of simple roots grow as Theta grows
rs = parse_type("B3")
for theta in [(), (0,), (1,), (0, 1)]:
    print(f"Theta = {theta!s:7}  Psi = {sorted(psi_theta(rs, theta).elements)}")

# %% Conjugating a commutative subgroup by the whole unipotent group is triangular
sc = structure_constants(parse_type("G2"))
table = conjugation_polynomials(sc, psi_basis(sc.rs))
print("\nG2, Psi =", table.psi)
for row in table.P:
    print("   ", [str(p) for p in row])
