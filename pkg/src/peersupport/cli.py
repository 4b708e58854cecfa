"""Command-line entry points: train, eval, serve, seed-demo.

Shared flags: ``--config`` (JSON service config), ``--seed``, ``--port``.
Environment variables with the ``EMPATHY_`` prefix override config file
values; explicit flags override both.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .api import build_state, create_app
from .community import CommunityStore, save_store
from .config import ConfigError, load_service_config, with_overrides
from .emoclass import (
    ClassifierError,
    CorpusError,
    TrainingConfig,
    evaluate,
    format_confusion,
    load_corpus,
    load_model,
    save_model,
    split,
    train,
)
from .scaffold import ScaffoldError, default_phrase_bank, load_phrase_bank
from .textproc import ProfileError, default_profile, load_language_profile


def _profile_for(path: str | None):
    return load_language_profile(path) if path else default_profile()


def _cmd_train(args: argparse.Namespace) -> int:
    corpus = load_corpus(args.corpus)
    profile = _profile_for(args.profile)
    config = TrainingConfig(smoothing=args.smoothing)
    train_split, validation_split = split(corpus, config, seed=args.seed)
    model = train(train_split, profile, config)
    report = evaluate(model, validation_split, profile)
    save_model(model, args.out)
    print(f"trained on {len(train_split)} records, validated on {len(validation_split)}")
    print(f"validation accuracy: {report.accuracy:.4f}")
    print(format_confusion(report))
    print(f"model written to {args.out}")
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    model = load_model(args.model)
    corpus = load_corpus(args.corpus)
    profile = _profile_for(args.profile)
    report = evaluate(model, corpus, profile)
    print(f"accuracy on {len(corpus)} records: {report.accuracy:.4f}")
    print(format_confusion(report))
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    config = with_overrides(load_service_config(args.config), port=args.port, seed=args.seed)
    try:
        state = build_state(config)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    app = create_app(state)
    print(f"serving on http://{config.host}:{config.port} (seed_mode={config.seed_mode})")
    uvicorn.run(app, host=config.host, port=config.port, log_level="warning")
    return 0


def _cmd_seed_demo(args: argparse.Namespace) -> int:
    bank = load_phrase_bank(args.phrase_bank) if args.phrase_bank else default_phrase_bank()
    store = CommunityStore()
    from .demo import seed_demo_store

    seed_demo_store(store, bank)
    out = Path(args.store)
    save_store(store, out)
    print(f"wrote {len(store.posts)} posts and {len(store.comments)} comments to {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="peersupport", description=__doc__)
    parser.add_argument("--version", action="version", version=f"peersupport {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    train_p = sub.add_parser("train", help="train an emotion model from a label<TAB>text corpus")
    train_p.add_argument("--corpus", required=True, help="path to the corpus file")
    train_p.add_argument("--out", required=True, help="where to write the model JSON")
    train_p.add_argument("--seed", type=int, default=0, help="split shuffle seed")
    train_p.add_argument("--profile", default=None, help="language profile JSON (default: packaged)")
    train_p.add_argument("--smoothing", type=float, default=1.0, help="additive smoothing constant")
    train_p.set_defaults(func=_cmd_train)

    eval_p = sub.add_parser("eval", help="evaluate a model on a corpus")
    eval_p.add_argument("--model", required=True)
    eval_p.add_argument("--corpus", required=True)
    eval_p.add_argument("--profile", default=None)
    eval_p.set_defaults(func=_cmd_eval)

    serve_p = sub.add_parser("serve", help="run the HTTP service")
    serve_p.add_argument("--config", default=None, help="service config JSON")
    serve_p.add_argument("--port", type=int, default=None, help="override the configured port")
    serve_p.add_argument("--seed", type=int, default=None, help="override the configured seed")
    serve_p.set_defaults(func=_cmd_serve)

    demo_p = sub.add_parser("seed-demo", help="write a demo store snapshot for UI work")
    demo_p.add_argument("--store", required=True, help="where to write the store JSON")
    demo_p.add_argument("--phrase-bank", default=None, help="phrase bank JSON (default: packaged)")
    demo_p.set_defaults(func=_cmd_seed_demo)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, CorpusError, ClassifierError, ProfileError, ScaffoldError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
