"""Well-spaced rows: greedy versus minimal, and chi_td of complete graphs.

The minimal search for n up to 20 takes around half a minute.
Run: python3 demos/well_spaced_rows.py [max_n]
"""

import sys

from tdlab import wsr

max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 14

print("greedy row of 10:", wsr.greedy_wsr(10))
print("k-th greedy element is k-1 in binary read in base 3, plus 1:", [wsr.greedy_element(k) for k in range(1, 11)])
print()
print(f"{'n':>3} {'OS':>4} {'E':>4} {'D':>4} {'Mi1':>4} {'Mi2':>4}")
for s in wsr.wsr_table(max_n):
    print("{:>3} {:>4} {:>4} {:>4} {:>4} {:>4}".format(*s.as_row()))

# A minimal row labels K_n directly, so chi_td(K_n) = E(n).
print()
print("minimal rows for n=6:", wsr.enumerate_minimal_wsrs(6))
