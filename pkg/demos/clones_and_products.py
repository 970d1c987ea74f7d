"""Cloning every vertex, and Cartesian products with complete graphs.

Run: python3 demos/clones_and_products.py
"""

from tdlab import analysis, graphs
from tdlab.graphs import complete

for g in (complete(1), complete(2), complete(3), graphs.cycle(5), graphs.petersen()):
    r = analysis.check_clone_bound(g)
    print(f"{g.name:>9}: chi {r['chi_g']:>2}, clone {r['chi_clone']:>2}, bound {r['bound_2chi_plus_1']:>2}")

print()
for n in range(4, 8):
    labels = analysis.clone_complete_labeling(n)
    print(f"cl(K{n}) from a shifted minimal row: max label {max(labels)}")
try:
    analysis.clone_complete_labeling(3)
except ValueError as exc:
    print("K3:", exc)

print()
for g, m in ((graphs.path(3), 2), (complete(2), 3), (graphs.cycle(3), 2)):
    r = analysis.check_product_bound(g, m)
    print(f"K{m} x {g.name}: chi {r['chi_product']}, bound {r['bound']}")
