"""Which small connected graphs have chi_td equal to their order, and are they saturable?

Run: python3 demos/saturability_survey.py
"""

from tdlab import analysis, graphs

total = 0
for n in range(1, 7):
    s = analysis.survey_order(n)
    total += s.saturable if n <= 5 else 0
    print(f"order {n}: {s.scanned:>3} graphs, {s.chi_equals_order:>2} with chi_td = n, "
          f"{s.saturable:>2} saturable, {s.supersaturable:>2} supersaturable")
    if n <= 5:
        for r in s.saturable_graphs():
            print(f"    {r['graph6']:<8} diameter {r['diameter']}  {r['class']}")
print("saturable graphs of order at most 5:", total)

print()
for g in (graphs.triforce(), graphs.graph_i(), graphs.path(4)):
    v = analysis.saturability(g)
    print(f"{g.name}: {v.cls}, {v.saturated_count} of {v.minimal_count} minimal labelings saturated")
