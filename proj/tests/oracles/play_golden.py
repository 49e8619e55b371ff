#!/usr/bin/env python3
"""Writes tests/golden/play_bar.txt: the expected terminal output of
`pwim play` on the bar domain for the input "travel to the bar", "1", ":quit".
Run: python3 tests/oracles/play_golden.py > tests/golden/play_bar.txt
"""
import os
import sys

sys.path.insert(0, os.path.dirname(__file__))
from api_fixture import AT_BAR, HOME, ranked  # noqa: E402

out = ["[The Bar] type what you want to do; a number performs that action; :facts, :save <file>, :quit"]
out.append("-- step 0 --")
out += [f"  {i + 1}. {a['summary']}" for i, a in enumerate(HOME)]
r = ranked("travel to the bar", HOME)
prompt = "> "
lines = [f"  {i + 1}.{'*' if e['enlarged'] else ' '} {e['summary']:<40} sim {e['similarity']:+.3f}  shade {e['intensity']:.2f}"
         for i, e in enumerate(r)]
out.append(prompt + lines[0])
out += lines[1:]
out.append(prompt + "performed: " + r[0]["summary"])
out.append("-- step 1 --")
out += [f"  {i + 1}. {a['summary']}" for i, a in enumerate(AT_BAR)]
out.append(prompt)
out.append("transcript:")
out.append('  0. travel to the bar  ("travel to the bar")')
sys.stdout.write("\n".join(out) + "\n")
