#!/usr/bin/env python3
"""Scripted walkthrough of the whole posting workflow against a live server.

Trains a model on a synthetic corpus, starts the HTTP service in a
subprocess, then drives draft -> publish -> filter -> triggers -> comment and
prints each response. Everything happens inside a temp directory.

    python3 scripts/run_workflow_demo.py
"""

import json
import socket
import subprocess
import sys
import tempfile
import time
from pathlib import Path

import httpx

from peersupport.demo import make_separable_corpus
from peersupport.emoclass import save_corpus


def free_port() -> int:
    with socket.socket() as sock:
        sock.bind(("127.0.0.1", 0))
        return sock.getsockname()[1]


def step(title: str, payload) -> None:
    print(f"\n== {title} ==")
    print(json.dumps(payload, indent=2)[:600])


def main() -> int:
    with tempfile.TemporaryDirectory() as tmp:
        base_dir = Path(tmp)
        corpus_path = base_dir / "corpus.tsv"
        model_path = base_dir / "model.json"
        save_corpus(make_separable_corpus(docs_per_label=20, seed=1), corpus_path)
        print("training model ...")
        subprocess.run(
            [sys.executable, "-m", "peersupport", "train",
             "--corpus", str(corpus_path), "--out", str(model_path)],
            check=True,
        )
        config_path = base_dir / "service.json"
        config_path.write_text(json.dumps({
            "model_path": str(model_path),
            "store_path": str(base_dir / "store.json"),
        }))
        port = free_port()
        server = subprocess.Popen(
            [sys.executable, "-m", "peersupport", "serve",
             "--config", str(config_path), "--port", str(port)],
        )
        try:
            with httpx.Client(base_url=f"http://127.0.0.1:{port}", timeout=5.0) as client:
                for _ in range(100):
                    try:
                        client.get("/health")
                        break
                    except httpx.TransportError:
                        time.sleep(0.1)
                body = "completely overwhelmed, drowning in deadlines and running on no sleep"
                draft = client.post("/drafts", json={"body": body}).json()
                step("draft analysis", draft)
                post = client.post("/posts", json={
                    "body": body,
                    "emotion": draft["suggested_emotion"],
                    "keywords": [k["term"] for k in draft["suggested_keywords"]] or ["deadlines"],
                }).json()
                step("published post", post)
                feed = client.get("/posts", params={"emotions": post["emotion"]}).json()
                step(f"feed filtered by emotion={post['emotion']}", feed)
                offered = client.post(f"/posts/{post['id']}/triggers").json()
                step("trigger recommendation", offered)
                comment = client.post(f"/posts/{post['id']}/comments", json={
                    "trigger": offered["phrases"][0],
                    "interpretation": "Deadlines and lost sleep are piling up on you at once.",
                    "exploration": "Is there one deadline that would unblock the rest?",
                }).json()
                step("stored comment", comment)
                step("post detail", client.get(f"/posts/{post['id']}").json())
        finally:
            server.terminate()
            server.wait(timeout=10)
    print("\nworkflow complete")
    return 0


if __name__ == "__main__":
    sys.exit(main())
