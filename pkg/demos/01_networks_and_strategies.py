"""Build a network, check the flow laws, and compare augmenting-path strategies.

Run:  python demos/01_networks_and_strategies.py
"""

from flowtutor import (
    Flow,
    FlowNetwork,
    Random,
    Shortest,
    Widest,
    check_flow,
    flow_value,
    residual_graph,
    solve,
    validate_network,
)


def describe(path):
    nodes = [path[0].tail] + [arc.head for arc in path]
    return " -> ".join(nodes)


# The running example: a diamond with a width-1 middle edge. Its maximum flow
# is 5, and the interesting part is that every maximum flow must route one
# unit across the middle.
diamond = FlowNetwork.build(
    [("s", "a", 3), ("s", "b", 2), ("a", "b", 1), ("a", "t", 2), ("b", "t", 3)],
    source="s",
    sink="t",
)
assert validate_network(diamond) == []

print("network edges:")
for edge in diamond.edges:
    print(f"  {edge.tail} -> {edge.head}  capacity {edge.capacity}")

# A flow is any per-edge assignment satisfying the three laws; check_flow
# explains every violation instead of just failing.
bad = Flow({("s", "a"): 3, ("a", "t"): 1})
print("\na broken flow gets diagnosed:")
for finding in check_flow(diamond, bad):
    print(f"  [{finding.code}] {finding.message}")

good = Flow({("s", "a"): 2, ("a", "t"): 2})
print(f"\na legal flow has value {flow_value(diamond, good)}")

# The residual graph is where augmenting paths live: forward arcs carry the
# remaining capacity, backward arcs the undoable flow.
print("\nresidual arcs under that flow:")
for arc in residual_graph(diamond, good).arcs:
    print(f"  {arc.tail} -> {arc.head}  {arc.capacity:>3}  ({arc.kind} of {arc.origin[0]}->{arc.origin[1]})")

# All strategies reach the same value; they differ in which paths they pick
# and how many iterations they need.
print("\nsolving from zero with each strategy:")
for strategy in (Shortest(), Widest(), Random(seed=11)):
    result = solve(diamond, strategy)
    print(f"  {type(strategy).__name__:<8} value {result.value} in {result.iterations} iterations")
    for path, amount in result.history:
        print(f"      push {amount} along {describe(path)}")
