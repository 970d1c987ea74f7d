"""Exact chi_td for a few small graphs, and what goes wrong in a bad labeling.

Run: python3 demos/small_graphs.py
"""

from tdlab import graphs
from tdlab.labeling import validate
from tdlab.solver import chi_td, lower_bound_report

for g in [graphs.path(6), graphs.cycle(7), graphs.star(5), graphs.petersen(), graphs.triforce(), graphs.graph_i()]:
    res = chi_td(g, search_below=True)
    print(f"{g.name:>10}: chi_td = {res.chi:2d}   witness {res.witness}")

# Bounds explain where the search starts. For the Petersen graph the
# diameter is 2, so all ten labels must differ and 10 is immediate.
print()
print(lower_bound_report(graphs.petersen()).lower_bounds)

# A labeling of P4 that breaks every rule at least once.
bad = [2, 4, 2, 6]
print()
print("P4 labeled", bad)
for v in validate(graphs.path(4), bad):
    print(f"  {v.kind:<14} at vertices {v.witness}")
