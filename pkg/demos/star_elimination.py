"""Lower bounds for regular graphs by discarding labels that cannot sit at a star center.

Run: python3 demos/star_elimination.py
"""

from tdlab import starelim

for delta in (3, 4, 6):
    print(f"degree {delta}")
    for t in starelim.lower_bound_traces(delta):
        verdict = "empty" if t.contradiction else f"{len(t.survivors)} survive"
        print(f"  labels 1..{t.x}: removed {t.removed} -> {verdict}")
    hand = starelim.hand_trace(delta)
    print(f"  by hand at x={hand.x}: remove {hand.removed}, left {list(hand.survivors)}")
    print(f"  lower bound {starelim.star_elim_lower_bound(delta)}")

# The degree-6 hand sequence removes one label more than it needs to.
print()
print("five removals already contradict:", starelim.replay_elimination(11, 6, [5, 6, 4, 9, 2]).contradiction)
