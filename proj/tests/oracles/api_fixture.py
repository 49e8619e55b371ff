#!/usr/bin/env python3
"""Writes tests/fixtures/api/bar_flow.json: a scripted HTTP exchange against
the bundled bar domain with the fallback embedder and sequential session ids.

Expected bodies are written out by hand here; similarities come from the
trigram reference in trigram_oracle.py, not from the C++ code.
Run: python3 tests/oracles/api_fixture.py > tests/fixtures/api/bar_flow.json
"""
import json
import os
import sys

sys.path.insert(0, os.path.dirname(__file__))
from trigram_oracle import cos  # noqa: E402


def act(aid, summary):
    return {"action_id": aid, "summary": summary}


HOME = [
    act("travel(Place=bar)", "travel to the bar"),
    act("travel(Place=park)", "travel to the park"),
    act("wait()", "wait"),
]

AT_BAR = [
    act("travel(Place=park)", "travel to the park"),
    act("leave(Place=bar)", "leave the bar"),
    act("wait()", "wait"),
    act("order_drink(Drink=beer)", "order a beer"),
    act("order_drink(Drink=cider)", "order a cider"),
    act("order_water()", "order a glass of water"),
    act("play_jukebox()", "play a song on the jukebox"),
    act("greet(Person=gabe,Place=bar)", "greet gabe"),
    act("greet(Person=isaac,Place=bar)", "greet isaac"),
]

INITIAL_FACTS = [
    "place.home", "place.bar", "place.park", "destination.bar", "destination.park",
    "at.player!home", "at.isaac!bar", "at.gabe!bar", "character.isaac", "character.gabe",
    "menu.beer", "menu.cider", "jukebox!off",
]


def ranked(intent, actions, k=3):
    scored = [(cos(intent, a["summary"]), a) for a in actions]
    scored.sort(key=lambda p: (-p[0], p[1]["summary"], p[1]["action_id"]))
    hi, lo = scored[0][0], scored[-1][0]
    out = []
    for i, (s, a) in enumerate(scored):
        shade = 0.5 if hi == lo else (s - lo) / (hi - lo)
        out.append({**a, "similarity": s, "intensity": shade, "enlarged": i < k})
    return out


def err(code):
    return {"error": code}


def main():
    after_travel_facts = sorted([f for f in INITIAL_FACTS if f != "at.player!home"] + ["at.player!bar"])
    travel_event = {"step": 0, "action_id": "travel(Place=bar)", "summary": "travel to the bar",
                    "intent_text": "go to the bar"}

    exchanges = [
        ("GET", "/api/domains", None, 200, {"domains": ["bar", "empty"]}),
        ("POST", "/api/session", {"domain": "bar"}, 200, {"session_id": "s1", "step": 0, "actions": HOME}),
        ("POST", "/api/session/s1/intent", {"text": "go to the bar"}, 200,
         {"step": 0, "ranked": ranked("go to the bar", HOME)}),
        ("POST", "/api/session/s1/act", {"action_id": "travel(Place=bar)", "step": 0, "intent_text": "go to the bar"},
         200, {"event": travel_event, "actions": AT_BAR}),
        ("POST", "/api/session/s1/act", {"action_id": "travel(Place=bar)", "step": 0}, 409, err("stale-action")),
        ("POST", "/api/session/s1/act", {"action_id": "travel(Place=bar)", "step": 1}, 409, err("stale-action")),
        ("POST", "/api/session/s1/intent", {"text": "order a beer"}, 200,
         {"step": 1, "ranked": ranked("order a beer", AT_BAR)}),
        ("GET", "/api/session/s1", None, 200,
         {"session_id": "s1", "step": 1, "actions": AT_BAR, "facts": after_travel_facts,
          "transcript": [travel_event]}),
        ("POST", "/api/session/s1/act", {"action_id": "dance()", "step": 1}, 404, err("unknown-action")),
        ("POST", "/api/session/s1/intent", {"text": "   "}, 400, err("empty-intent")),
        ("POST", "/api/session/s1/intent", "{not json", 400, err("bad-request")),
        ("POST", "/api/session/s1/act", {"action_id": "wait()"}, 400, err("bad-request")),
        ("POST", "/api/session", {"domain": "castle"}, 404, err("unknown-domain")),
        ("POST", "/api/session/s9/intent", {"text": "hi"}, 404, err("no-session")),
        ("GET", "/api/session/s9", None, 404, err("no-session")),
        ("GET", "/api/nothing", None, 404, err("not-found")),
        ("GET", "/api/session/s1/intent", None, 405, err("method-not-allowed")),
        ("DELETE", "/api/session", None, 405, err("method-not-allowed")),
        ("POST", "/api/session", {"domain": "empty"}, 200, {"session_id": "s2", "step": 0, "actions": []}),
        ("POST", "/api/session/s2/intent", {"text": "anything"}, 200, {"step": 0, "ranked": []}),
    ]

    doc = []
    for method, path, body, status, response in exchanges:
        raw = "" if body is None else (body if isinstance(body, str) else json.dumps(body))
        doc.append({"method": method, "path": path, "body": raw, "status": status, "response": response})
    json.dump(doc, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
