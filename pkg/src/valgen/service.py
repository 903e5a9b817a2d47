"""Stateless HTTP service over one immutable data snapshot.

Endpoints (all JSON, UTF-8, /v1 prefix):
  GET  /v1/languages
  GET  /v1/nouns?lang=
  GET  /v1/structures?lang=&noun=
  GET  /v1/packages?lang=&noun=&pattern=&slot=
  POST /v1/generate           body = generation request
  GET|POST /v1/export?format= body = the same request, re-submitted

Errors are {"error": code, "message": text} with a 4xx status. No state is
kept between requests; export re-runs the generation it serializes.
"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.staticfiles import StaticFiles

from .bundle import default_data_dir, load_bundle
from .errors import (
    EmptyPackageSelection,
    UnknownFrame,
    UnknownPath,
    UnknownPattern,
    UnknownSlot,
    ValgenError,
)
from .generation import Engine, GenerationRequest, export_phrases, phrase_to_json_obj
from .ontology import format_class_path

logger = logging.getLogger("valgen.service")

_STATUS_BY_ERROR = (
    (UnknownFrame, 404, "unknown_frame"),
    (UnknownPattern, 404, "unknown_pattern"),
    (UnknownSlot, 404, "unknown_slot"),
    (EmptyPackageSelection, 422, "package_mismatch"),
    (UnknownPath, 422, "unknown_package"),
)


@dataclass
class ServiceConfig:
    data_dir: Path = field(default_factory=default_data_dir)
    bind_address: str = "127.0.0.1:8000"
    default_limit: int = 20
    default_threshold: float = 0.25
    log_level: str = "INFO"
    ui_dir: Path | None = None

    @classmethod
    def from_env(cls) -> "ServiceConfig":
        data_dir = os.environ.get("VALGEN_DATA_DIR")
        return cls(data_dir=Path(data_dir) if data_dir else default_data_dir())


def _json_response(payload, status_code: int = 200) -> Response:
    return Response(
        content=json.dumps(payload, ensure_ascii=False),
        status_code=status_code,
        media_type="application/json",
    )


def _error(status_code: int, code: str, message: str) -> Response:
    return _json_response({"error": code, "message": message}, status_code)


def _classify_error(exc: Exception) -> tuple[int, str]:
    for err_type, status, code in _STATUS_BY_ERROR:
        if isinstance(exc, err_type):
            return status, code
    if isinstance(exc, (ValueError, KeyError, TypeError)):
        return 400, "malformed_request"
    return 400, "bad_request"


def parse_generation_request(body: dict, config: ServiceConfig) -> GenerationRequest:
    for key in ("language", "lemma", "pattern_id"):
        if not isinstance(body.get(key), str) or not body.get(key):
            raise ValueError(f"field {key!r} must be a non-empty string")
    raw_packages = body.get("packages")
    if not isinstance(raw_packages, dict) or not raw_packages:
        raise EmptyPackageSelection("field 'packages' must map slot keys to class lists")
    packages: dict[str, list[str]] = {}
    for key, paths in raw_packages.items():
        if not isinstance(paths, list) or not all(isinstance(p, str) for p in paths):
            raise ValueError(f"packages[{key!r}] must be a list of class paths")
        packages[str(key)] = list(paths)
    limit = body.get("limit", config.default_limit)
    seed = body.get("seed", 0)
    threshold = body.get("threshold", config.default_threshold)
    if not isinstance(limit, int) or isinstance(limit, bool):
        raise ValueError("limit must be an integer")
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise ValueError("seed must be an integer")
    if not isinstance(threshold, (int, float)) or isinstance(threshold, bool):
        raise ValueError("threshold must be a number")
    return GenerationRequest(
        language=body["language"],
        lemma=body["lemma"],
        pattern_id=body["pattern_id"],
        packages=packages,
        limit=limit,
        seed=seed,
        compat_threshold=float(threshold),
        include_adjectives=bool(body.get("include_adjectives", False)),
    )


def package_payload(engine: Engine, language: str, lemma: str, pattern_id: str, slot: str) -> dict:
    packages = engine.list_semantic_packages(language, lemma, pattern_id, slot)
    items = []
    for package in packages:
        grade = (
            {
                "grade": package.grade.grade.value,
                "representative_count": package.grade.representative_count,
                "summed_count": package.grade.summed_count,
            }
            if package.grade is not None
            else "ungraded"
        )
        items.append(
            {
                "class": format_class_path(package.class_path),
                "slot": f"{package.slot[0]}.{package.slot[1]}",
                "preview": package.preview,
                "number": package.number_policy,
                "members": list(package.members),
                "grade": grade,
            }
        )
    return {"packages": items}


def generation_payload(engine: Engine, request: GenerationRequest) -> dict:
    phrases, stats = engine.generate(request)
    items = []
    for phrase in phrases:
        obj = phrase_to_json_obj(phrase)
        obj["numbers"] = dict(phrase.numbers)
        obj["packages"] = dict(phrase.packages)
        if phrase.adjectives:
            obj["adjectives"] = dict(phrase.adjectives)
        items.append(obj)
    return {
        "phrases": items,
        "stats": {
            "generated": stats.generated,
            "filtered": stats.filtered,
            "truncated": stats.truncated,
        },
    }


def create_app(config: ServiceConfig | None = None, engine: Engine | None = None) -> FastAPI:
    config = config or ServiceConfig.from_env()
    logging.basicConfig(level=config.log_level)
    if engine is None:
        engine = load_bundle(config.data_dir)
    app = FastAPI(title="valgen", docs_url=None, redoc_url=None)
    app.state.engine = engine
    app.state.config = config

    def require(request: Request, *names: str) -> list[str]:
        values = []
        for name in names:
            value = request.query_params.get(name)
            if not value:
                raise ValueError(f"missing query parameter {name!r}")
            values.append(value)
        return values

    @app.exception_handler(ValgenError)
    async def _valgen_error(request: Request, exc: ValgenError):
        status, code = _classify_error(exc)
        return _error(status, code, str(exc))

    @app.exception_handler(ValueError)
    async def _value_error(request: Request, exc: ValueError):
        return _error(400, "malformed_request", str(exc))

    @app.get("/v1/languages")
    async def languages():
        return _json_response({"languages": engine.languages()})

    @app.get("/v1/nouns")
    async def nouns(request: Request):
        (lang,) = require(request, "lang")
        return _json_response({"nouns": engine.nouns(lang)})

    @app.get("/v1/structures")
    async def structures(request: Request):
        lang, noun = require(request, "lang", "noun")
        infos = engine.list_structures(lang, noun)
        return _json_response(
            {
                "structures": [
                    {
                        "pattern_id": info.pattern_id,
                        "label": info.label,
                        "arity": info.arity,
                        "grade": info.grade,
                    }
                    for info in infos
                ]
            }
        )

    @app.get("/v1/packages")
    async def packages(request: Request):
        lang, noun, pattern, slot = require(request, "lang", "noun", "pattern", "slot")
        return _json_response(package_payload(engine, lang, noun, pattern, slot))

    async def _read_request(request: Request) -> GenerationRequest:
        try:
            body = json.loads(await request.body())
        except json.JSONDecodeError as exc:
            raise ValueError(f"request body is not valid JSON: {exc}") from exc
        if not isinstance(body, dict):
            raise ValueError("request body must be a JSON object")
        return parse_generation_request(body, config)

    @app.post("/v1/generate")
    async def generate(request: Request):
        gen_request = await _read_request(request)
        return _json_response(generation_payload(engine, gen_request))

    @app.api_route("/v1/export", methods=["GET", "POST"])
    async def export(request: Request):
        fmt = request.query_params.get("format", "json")
        if fmt not in ("json", "csv"):
            raise ValueError(f"format must be json or csv, got {fmt!r}")
        gen_request = await _read_request(request)
        phrases, _stats = engine.generate(gen_request)
        payload = export_phrases(phrases, fmt)
        media = "application/json" if fmt == "json" else "text/csv"
        return Response(content=payload, media_type=f"{media}; charset=utf-8")

    ui_dir = config.ui_dir
    if ui_dir is None:
        candidate = Path(__file__).resolve().parents[2] / "frontend" / "dist"
        ui_dir = candidate if candidate.is_dir() else None
    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/ui", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app


def main() -> None:
    import uvicorn

    config = ServiceConfig.from_env()
    host, _, port = config.bind_address.partition(":")
    uvicorn.run(create_app(config), host=host or "127.0.0.1", port=int(port or 8000))


if __name__ == "__main__":
    main()
