"""Propose minimum cuts and read the engine's diagnostics.

A selected node set is interpreted as the s-side (contains the source) or
t-side (contains the sink) of a cut. Valid proposals are exactly those whose
capacity equals the maximum flow value; invalid ones get witnesses: the
capacity gap, crossing edges a maximum flow leaves unsaturated, and edges
returning flow into the s-side.

Run:  python demos/03_min_cuts.py
"""

from flowtutor import FlowNetwork, cut_capacity, find_min_cut, validate_cut

diamond = FlowNetwork.build(
    [("s", "a", 3), ("s", "b", 2), ("a", "b", 1), ("a", "t", 2), ("b", "t", 3)],
    source="s",
    sink="t",
)

print("cut capacities by hand:")
for side in [{"s"}, {"s", "a"}, {"s", "b"}, {"s", "a", "b"}]:
    print(f"  S = {sorted(side)}  capacity {cut_capacity(diamond, side)}")

smallest = find_min_cut(diamond)
print(f"\nsmallest min cut: S = {sorted(smallest.s_side)}, capacity {smallest.capacity}")

print("\nproposals:")
for selected in [{"t"}, {"s", "a"}, {"s", "b"}, {"s", "t"}]:
    verdict = validate_cut(diamond, selected)
    print(f"  selected {sorted(selected)} -> {verdict.interpretation}, valid={verdict.valid}")
    for finding in verdict.diagnostics:
        print(f"      [{finding.code}] {finding.message}")
