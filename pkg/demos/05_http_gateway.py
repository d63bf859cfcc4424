"""Drive the session protocol over real HTTP.

Starts the gateway on a local port, creates a session, builds a network,
runs one manual iteration, and exports the edgelist, all through the wire.

Run:  python demos/05_http_gateway.py
"""

import json
import socket
import threading
import time
import urllib.request

import uvicorn

from flowtutor.service import create_app


def call(method, url, payload=None):
    data = None if payload is None else json.dumps(payload).encode()
    request = urllib.request.Request(url, data=data, method=method)
    if data is not None:
        request.add_header("Content-Type", "application/json")
    with urllib.request.urlopen(request) as response:
        body = response.read().decode()
    return json.loads(body) if body.startswith("{") else body


with socket.socket() as probe:
    probe.bind(("127.0.0.1", 0))
    port = probe.getsockname()[1]

server = uvicorn.Server(uvicorn.Config(create_app(), host="127.0.0.1", port=port, log_level="error"))
thread = threading.Thread(target=server.run, daemon=True)
thread.start()
while not server.started:
    time.sleep(0.05)
base = f"http://127.0.0.1:{port}"
print(f"gateway up at {base}, health: {call('GET', base + '/healthz')}")

session = call("POST", base + "/sessions", {"seed": 0})
sid = session["session_id"]
print(f"session {sid[:8]}... revision {session['revision']}")

actions = [
    {"type": "add_node", "id": "s"},
    {"type": "add_node", "id": "t"},
    {"type": "add_edge", "tail": "s", "head": "t", "capacity": 5},
    {"type": "set_source", "id": "s"},
    {"type": "set_sink", "id": "t"},
    {"type": "confirm_graph"},
    {"type": "select_arc", "tail": "s", "head": "t"},
    {"type": "validate_path"},
    {"type": "confirm_amount", "amount": 5},
    {"type": "auto_residual"},
    {"type": "confirm_max_flow", "value": 5},
    {"type": "find_min_cut"},
]
for action in actions:
    body = call("POST", f"{base}/sessions/{sid}/actions", {"action": action})
    print(f"  {action['type']:<18} accepted={body['accepted']} revision={body['revision']}")

print("\nexported edgelist:")
print(call("GET", f"{base}/sessions/{sid}/edgelist"))

server.should_exit = True
thread.join(timeout=5)
