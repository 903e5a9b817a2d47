"""Command-line face of the pipeline; mirrors the HTTP API surface.

Exit codes: 0 success, 2 usage error, 3 data error (unknown frame/pattern/...).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .bundle import default_data_dir, load_bundle
from .errors import (
    EmptyPackageSelection,
    UnknownFrame,
    UnknownPath,
    UnknownPattern,
    UnknownSlot,
    ValgenError,
)
from .generation import GenerationRequest, export_phrases
from .service import generation_payload, package_payload

_USAGE_ERRORS = (EmptyPackageSelection, ValueError)
_DATA_ERRORS = (UnknownFrame, UnknownPattern, UnknownSlot, UnknownPath, ValgenError)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="valgen",
        description="Valency-driven noun-phrase generation over the loaded data bundle.",
    )
    parser.add_argument(
        "--data-dir",
        default=os.environ.get("VALGEN_DATA_DIR"),
        help="data bundle directory (default: $VALGEN_DATA_DIR or the packaged fixtures)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("languages", help="list available languages")

    p_nouns = sub.add_parser("nouns", help="list head nouns of one language")
    p_nouns.add_argument("--lang", required=True)

    p_struct = sub.add_parser("structures", help="list offered argument structures")
    p_struct.add_argument("--lang", required=True)
    p_struct.add_argument("--noun", required=True)

    p_pkg = sub.add_parser("packages", help="list semantic packages for one slot")
    p_pkg.add_argument("--lang", required=True)
    p_pkg.add_argument("--noun", required=True)
    p_pkg.add_argument("--pattern", required=True)
    p_pkg.add_argument("--slot", default="a", help='slot key "a", "b" or "index.variant"')

    p_gen = sub.add_parser("generate", help="generate phrases")
    p_gen.add_argument("--lang", required=True)
    p_gen.add_argument("--noun", required=True)
    p_gen.add_argument("--pattern", required=True)
    p_gen.add_argument(
        "--package",
        action="append",
        default=[],
        metavar="SLOT=CLASSPATH",
        help='repeatable, e.g. a=belebt.menschlich.beruf.ausbildung or b=all',
    )
    p_gen.add_argument("--limit", type=int, default=20)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--threshold", type=float, default=0.25)
    p_gen.add_argument("--include-adjectives", action="store_true")
    p_gen.add_argument("--format", choices=("json", "csv", "text"), default="text")

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--bind", default="127.0.0.1:8000")

    return parser


def _parse_packages(pairs: list[str]) -> dict[str, list[str]]:
    packages: dict[str, list[str]] = {}
    for pair in pairs:
        slot, sep, path = pair.partition("=")
        if not sep or not slot or not path:
            raise ValueError(f"--package expects SLOT=CLASSPATH, got {pair!r}")
        packages.setdefault(slot, []).append(path)
    return packages


def _print_json(payload) -> None:
    sys.stdout.write(json.dumps(payload, ensure_ascii=False, indent=2) + "\n")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    try:
        if args.command == "serve":
            import uvicorn

            from .service import ServiceConfig, create_app

            config = ServiceConfig(
                data_dir=Path(args.data_dir) if args.data_dir else default_data_dir(),
                bind_address=args.bind,
            )
            host, _, port = args.bind.partition(":")
            uvicorn.run(create_app(config), host=host or "127.0.0.1", port=int(port or 8000))
            return 0

        engine = load_bundle(args.data_dir)

        if args.command == "languages":
            _print_json({"languages": engine.languages()})
        elif args.command == "nouns":
            _print_json({"nouns": engine.nouns(args.lang)})
        elif args.command == "structures":
            infos = engine.list_structures(args.lang, args.noun)
            _print_json(
                {
                    "structures": [
                        {
                            "pattern_id": i.pattern_id,
                            "label": i.label,
                            "arity": i.arity,
                            "grade": i.grade,
                        }
                        for i in infos
                    ]
                }
            )
        elif args.command == "packages":
            _print_json(
                package_payload(engine, args.lang, args.noun, args.pattern, args.slot)
            )
        elif args.command == "generate":
            request = GenerationRequest(
                language=args.lang,
                lemma=args.noun,
                pattern_id=args.pattern,
                packages=_parse_packages(args.package),
                limit=args.limit,
                seed=args.seed,
                compat_threshold=args.threshold,
                include_adjectives=args.include_adjectives,
            )
            if args.format == "text":
                payload = generation_payload(engine, request)
                for i, phrase in enumerate(payload["phrases"], 1):
                    sys.stdout.write(f"{i:3d}. {phrase['text']}\n")
                stats = payload["stats"]
                sys.stdout.write(
                    f"# generated={stats['generated']} filtered={stats['filtered']} "
                    f"truncated={stats['truncated']}\n"
                )
            else:
                phrases, _stats = engine.generate(request)
                sys.stdout.buffer.write(export_phrases(phrases, args.format))
                sys.stdout.buffer.write(b"\n")
    except _USAGE_ERRORS as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    except _DATA_ERRORS as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
