"""Loading one data directory (lexica, ontologies, tables, vectors) into an Engine."""

from __future__ import annotations

import json
from pathlib import Path

from .core import load_lexicon
from .embeddings import load_vectors
from .errors import SchemaError
from .generation import Engine, TableKey
from .ontology import load_ontology, parse_class_path
from .prototyping import (
    CooccurrenceTable,
    GradingConfig,
    DEFAULT_GRADING,
    RoleAnnotation,
    ingest_frequency_table,
    load_annotations,
)


def default_data_dir() -> Path:
    """The fixture bundle shipped inside the package."""
    return Path(__file__).parent / "data"


def load_bundle(data_dir: str | Path | None = None, grading: GradingConfig = DEFAULT_GRADING) -> Engine:
    """Read manifest.json and every referenced file; returns a ready Engine."""
    data_dir = Path(data_dir) if data_dir is not None else default_data_dir()
    manifest_path = data_dir / "manifest.json"
    if not manifest_path.exists():
        raise SchemaError(f"{data_dir}: no manifest.json found")
    manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    languages = manifest.get("languages", [])
    if not languages:
        raise SchemaError(f"{manifest_path}: manifest lists no languages")

    lexicons = {}
    ontologies = {}
    lexeme_frequencies = {}
    vectors = {}
    overrides: dict[tuple[str, str], dict[tuple[str, ...], frozenset[str]]] = {}
    for lang in languages:
        lexicons[lang] = load_lexicon(data_dir / f"lexicon.{lang}.json")
        ontologies[lang] = load_ontology(data_dir / f"ontology.{lang}.json")
        freq_path = data_dir / f"lexfreq.{lang}.json"
        if freq_path.exists():
            raw = json.loads(freq_path.read_text(encoding="utf-8"))
            lexeme_frequencies[lang] = {str(k): int(v) for k, v in raw.items()}
        vec_path = data_dir / f"vectors.{lang}.txt"
        if vec_path.exists():
            vectors[lang] = load_vectors(vec_path)
        override_path = data_dir / f"overrides.{lang}.json"
        if override_path.exists():
            raw = json.loads(override_path.read_text(encoding="utf-8"))
            for lemma, classes in raw.items():
                overrides[(lang, lemma)] = {
                    parse_class_path(path): frozenset(excluded)
                    for path, excluded in classes.items()
                }

    tables: dict[TableKey, CooccurrenceTable] = {}
    annotations: dict[TableKey, list[RoleAnnotation]] = {}
    for item in manifest.get("tables", []):
        key = (item["language"], item["lemma"], item["pattern_id"])
        tables[key] = ingest_frequency_table(
            data_dir / item["table"], (item["language"], item["lemma"])
        )
        if item.get("annotations"):
            annotations[key] = load_annotations(data_dir / item["annotations"])

    return Engine(
        lexicons=lexicons,
        ontologies=ontologies,
        tables=tables,
        annotations=annotations,
        overrides=overrides,
        lexeme_frequencies=lexeme_frequencies,
        vectors=vectors,
        grading=grading,
    )
