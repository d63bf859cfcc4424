"""Edgelist files and automatic node placement.

The file format is line-oriented: `source`/`sink`/`node`/`pos` directives
plus `tail head capacity` records and `#` comments. Serialization is
canonical, so formatting a file twice changes nothing.

Run:  python demos/04_files_and_layouts.py
"""

from flowtutor import layered_layout, parse_edgelist, serialize_edgelist, spring_layout

document = """\
# a diamond with one cross edge
sink t
s a 3
s b 2
a b 1
a t 2
b t 3
source s
pos a 120.5 80.0
"""

net = parse_edgelist(document)
print("canonical form:")
print(serialize_edgelist(net))

assert parse_edgelist(serialize_edgelist(net)) == net
assert serialize_edgelist(parse_edgelist(serialize_edgelist(net))) == serialize_edgelist(net)
print("round-trip and fixpoint laws hold\n")

try:
    parse_edgelist("source s\nsink t\ns t 5\ns t 7\n")
except Exception as err:
    print(f"errors carry line numbers: {err}\n")

print("layered layout (columns = BFS distance from the source):")
layered = layered_layout(net, width=600, height=400)
for node, (x, y) in sorted(layered.positions.items()):
    print(f"  {node}: ({x:.1f}, {y:.1f})")

print("\nspring layout (seeded, deterministic):")
spring = spring_layout(net, width=600, height=400, seed=4)
for node, (x, y) in sorted(spring.positions.items()):
    print(f"  {node}: ({x:.1f}, {y:.1f})")
assert spring.positions == spring_layout(net, width=600, height=400, seed=4).positions
