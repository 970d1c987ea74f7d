"""Periodic labelings of the square, hexagonal, triangular and cubic lattices.

Run: python3 demos/lattices.py
"""

from tdlab import lattice
from tdlab.starelim import star_elim_lower_bound

for name in lattice.PERIODIC_FIXTURES:
    p = lattice.figure_fixture(name)
    ok = not lattice.validate_periodic(p)
    print(f"{name:>6} {p.model.name:<10} basis {p.basis}  max {p.max_label}  valid {ok}")

# The drawn triangular patch: its last row puts a 5 above a 10.
print()
for v in lattice.validate_patch(lattice.TRIANGULAR, lattice.fig15_patch()):
    print("drawn triangular patch:", v.kind, v.witness)

# Search finds a genuine 12-labeling, matching the star-elimination bound for degree 6.
p, tried = lattice.search_all_domains(lattice.TRIANGULAR, 12, 12)
print(f"triangular, k=12: basis {p.basis} after {tried} bases")
for y in range(4):
    print("   ", [p.label_at((x, y)) for x in range(9)])
print("bound for degree 6:", star_elim_lower_bound(6))

# Square lattice: nothing with labels up to 7 on any domain of at most 16 cells.
p, tried = lattice.search_all_domains(lattice.SQUARE, 7, 16)
print(f"square, k=7: {p} over {tried} bases")

cubic = lattice.linear_functional_search(lattice.CUBIC, 13, 7)
print("cubic:", cubic.name, "valid", not lattice.validate_periodic(cubic))

t = lattice.TREE_RULES
print("binary tree rules", dict(t.rules), "valid", not lattice.validate_tree_rulemap(t))
print("any graph of max degree 4 has a labeling up to", lattice.generic_infinite_upper_bound(4))

print()
print(lattice.write_fixture(lattice.figure_fixture("fig4")))
