#!/usr/bin/env python3
"""Run the HTTP query service and drive it over a real socket.

Equivalent to `kre serve --snapshot ...` plus a few curl calls. The
service is stateless per request: the whole view state travels in the
request body, and identical requests always return identical bytes.
"""

import json
import threading
import time
import urllib.request
from pathlib import Path

import uvicorn

from kre.corpus import IngestOptions, load_corpus
from kre.server import create_app

ROOT = Path(__file__).resolve().parent.parent
PORT = 8901

handle = load_corpus(ROOT / "fixtures" / "tweets_6day_500.jsonl", IngestOptions(seed=42))
config = uvicorn.Config(create_app(handle), host="127.0.0.1", port=PORT, log_level="error")
server = uvicorn.Server(config)
thread = threading.Thread(target=server.run, daemon=True)
thread.start()
while not server.started:
    time.sleep(0.05)


def get(path):
    with urllib.request.urlopen(f"http://127.0.0.1:{PORT}{path}") as response:
        return json.loads(response.read())


def post(path, payload):
    request = urllib.request.Request(
        f"http://127.0.0.1:{PORT}{path}",
        data=json.dumps(payload).encode(),
        headers={"content-type": "application/json"},
        method="POST",
    )
    with urllib.request.urlopen(request) as response:
        return response.read()


info = get("/api/info")
print(f"GET /api/info -> {info}")

matrix = json.loads(post("/api/matrix", {"node_count": 5}))
print(f"\nPOST /api/matrix (5 nodes) -> {len(matrix['cells'])} cells, "
      f"nodes {[kw['text'] for kw in matrix['keywords']]}")

timeline = json.loads(post("/api/timeline", {"mode": "discrete", "granularity": "day"}))
print(f"POST /api/timeline -> {len(timeline['views'])} daily views")

tweets = json.loads(post("/api/tweets", {"target": {"keyword": "protest"}, "limit": 2}))
print(f"POST /api/tweets (keyword protest) -> {tweets['total']} tweets, first: "
      f"{tweets['items'][0]['text']!r}")

# responses are pure functions of (snapshot, request)
assert post("/api/matrix", {}) == post("/api/matrix", {})
print("\nrepeated identical requests return byte-identical bodies")

server.should_exit = True
thread.join(timeout=5)
