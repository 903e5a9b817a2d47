"""Valency-driven multilingual noun-phrase generation.

A lexicon of valency frames plus a miniature class ontology, corpus
frequency evidence, word embeddings and table-driven morphology feed two
engines: monoargumental and biargumental phrase generation with JSON/CSV
export, exposed through a CLI and a stateless HTTP API.
"""

from .bundle import default_data_dir, load_bundle
from .core import Language, Lexicon, ValencyFrame, load_lexicon, validate_frame
from .embeddings import (
    VectorStore,
    compatibility_filter,
    cosine,
    load_vectors,
    nearest_neighbors,
    train_skipgram,
)
from .generation import Engine, GenerationRequest, export_phrases
from .morphology import (
    compose_compound,
    inflect_adjective,
    inflect_determiner,
    inflect_noun,
    realize_np,
    recheck_agreement,
)
from .ontology import Ontology, classify_lexeme, expand_class, load_ontology, subsumes
from .prototyping import (
    GradingConfig,
    contrast_report,
    filter_candidates,
    grade_class,
    grade_pattern,
    ingest_frequency_table,
)

__version__ = "0.1.0"

__all__ = [
    "Engine",
    "GenerationRequest",
    "GradingConfig",
    "Language",
    "Lexicon",
    "Ontology",
    "ValencyFrame",
    "VectorStore",
    "classify_lexeme",
    "compatibility_filter",
    "compose_compound",
    "contrast_report",
    "cosine",
    "default_data_dir",
    "expand_class",
    "export_phrases",
    "filter_candidates",
    "grade_class",
    "grade_pattern",
    "inflect_adjective",
    "inflect_determiner",
    "inflect_noun",
    "ingest_frequency_table",
    "load_bundle",
    "load_lexicon",
    "load_ontology",
    "load_vectors",
    "nearest_neighbors",
    "realize_np",
    "recheck_agreement",
    "subsumes",
    "train_skipgram",
    "validate_frame",
]
