"""Walk the interactive tutoring state machine, mistakes included.

The session validates every move a student makes: selecting a path by
clicking residual arcs, choosing how much flow to push, and editing the
residual graph by hand. Wrong moves are rejected with per-edge findings and
never change the state.

Run:  python demos/02_guided_session.py
"""

from flowtutor import apply_action, new_session, snapshot


def step(state, action, note=""):
    state, feedback = apply_action(state, action)
    verdict = "ok " if feedback.accepted else "REJ"
    print(f"  {verdict} {action['type']:<18} {note}")
    for finding in feedback.messages:
        print(f"        [{finding.code}] {finding.message}")
    return state


state = new_session()
print("stage 1: graph creation")
for node in "sabt":
    state = step(state, {"type": "add_node", "id": node})
for tail, head, capacity in [
    ("s", "a", 1000), ("s", "b", 1000), ("a", "b", 1), ("a", "t", 1000), ("b", "t", 1000),
]:
    state = step(state, {"type": "add_edge", "tail": tail, "head": head, "capacity": capacity})
state = step(state, {"type": "set_source", "id": "s"})
state = step(state, {"type": "set_sink", "id": "t"})
state = step(state, {"type": "confirm_graph"})

print("\nstage 2, phase 1: select a path by clicking arcs")
state = step(state, {"type": "select_arc", "tail": "s", "head": "a"}, "pick the first arc")
state = step(state, {"type": "select_arc", "tail": "b", "head": "t"}, "oops, skipped the middle")
state = step(state, {"type": "validate_path"}, "the gap is pointed out")
state = step(state, {"type": "select_arc", "tail": "a", "head": "b"}, "fill the gap")
state = step(state, {"type": "validate_path"})

print("\nstage 2, phase 2: choose the flow amount")
state = step(state, {"type": "highlight_bottleneck"}, "the width-1 arc is the bottleneck")
state = step(state, {"type": "confirm_amount", "amount": 2}, "too much")
state = step(state, {"type": "confirm_amount", "amount": 1})

print("\nstage 2, phase 3: update the residual graph by hand")
state = step(state, {"type": "edit_residual_arc", "tail": "s", "head": "a", "capacity": 999})
state = step(state, {"type": "validate_residual"}, "still missing the other edits")
state = step(state, {"type": "auto_residual"}, "let the engine finish this one")

print("\nfast-forward: the engine plays both roles")
while True:
    state, feedback = apply_action(state, {"type": "auto_path", "strategy": "shortest"})
    if not feedback.accepted:
        break
    amount = min(arc["capacity"] for arc in feedback.data["path"])
    state, _ = apply_action(state, {"type": "confirm_amount", "amount": amount})
    state, _ = apply_action(state, {"type": "auto_residual"})

print("\nstage 3: finalization")
state = step(state, {"type": "confirm_max_flow", "value": 1999}, "a self-test: wrong value, no spoilers")
state = step(state, {"type": "confirm_max_flow", "value": snapshot(state)["flow_value"]})
state = step(state, {"type": "find_min_cut"})

view = snapshot(state)
print(f"\nfinal: value {view['flow_value']} after {len(view['history'])} augmentations,"
      f" min cut s-side {view['cut_selection']}")
