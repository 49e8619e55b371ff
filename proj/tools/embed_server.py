#!/usr/bin/env python3
"""Minimal /embed server backed by sentence-transformers.

    pip install sentence-transformers
    python3 tools/embed_server.py --port 8765 [--model all-mpnet-base-v2]
    PWIM_EMBED_URL=http://127.0.0.1:8765 pwim eval ...

POST /embed  {"model": str, "texts": [str]}
          -> {"model": str, "dimension": int, "vectors": [[float]]}
"""
import argparse
import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from sentence_transformers import SentenceTransformer


def make_handler(model, model_name):
    class Handler(BaseHTTPRequestHandler):
        def _reply(self, status, payload):
            body = json.dumps(payload).encode()
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

        def do_POST(self):
            if self.path.rstrip("/") != "/embed":
                return self._reply(404, {"error": "not-found"})
            try:
                req = json.loads(self.rfile.read(int(self.headers.get("Content-Length", 0))))
                texts = req["texts"]
                if not isinstance(texts, list) or not all(isinstance(t, str) for t in texts):
                    raise ValueError("texts must be a list of strings")
            except (ValueError, KeyError, TypeError) as e:
                return self._reply(400, {"error": "bad-request", "detail": str(e)})
            vecs = model.encode(texts, convert_to_numpy=True) if texts else []
            self._reply(200, {"model": model_name, "dimension": model.get_sentence_embedding_dimension(),
                              "vectors": [[float(x) for x in v] for v in vecs]})

        def log_message(self, fmt, *args):
            pass

    return Handler


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--host", default="127.0.0.1")
    ap.add_argument("--port", type=int, default=8765)
    ap.add_argument("--model", default="all-mpnet-base-v2")
    args = ap.parse_args()
    model = SentenceTransformer(args.model)
    server = ThreadingHTTPServer((args.host, args.port), make_handler(model, args.model))
    print(f"embedding with {args.model} on http://{args.host}:{args.port}/embed", flush=True)
    server.serve_forever()


if __name__ == "__main__":
    main()
