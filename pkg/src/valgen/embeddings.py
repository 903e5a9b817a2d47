"""Word-vector store, cosine compatibility filter, and a desk-scale
skip-gram/negative-sampling trainer so the pipeline is self-contained.

The trainer is intentionally small and single-threaded: generation only needs
a VectorStore, loaded from disk or trained here, and fixed seeds must yield
bit-identical results.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

import numpy as np

from .errors import (
    DimensionMismatch,
    DuplicateWord,
    EmptyCorpus,
    FormatError,
    MissingVector,
    ZeroVector,
)


@dataclass
class VectorStore:
    dimension: int
    vectors: dict[str, np.ndarray] = field(default_factory=dict)
    norms: dict[str, float] = field(default_factory=dict)
    training_loss: list[float] = field(default_factory=list)

    @classmethod
    def from_arrays(cls, arrays: dict[str, np.ndarray]) -> "VectorStore":
        if not arrays:
            raise FormatError("vector store needs at least one vector")
        dimension = len(next(iter(arrays.values())))
        if dimension < 2:
            raise FormatError("vector dimension must be >= 2")
        store = cls(dimension=dimension)
        for word, vec in arrays.items():
            vec = np.asarray(vec, dtype=np.float64)
            if vec.shape != (dimension,):
                raise DimensionMismatch(
                    f"{word!r}: expected {dimension} values, got {vec.shape}"
                )
            norm = float(np.linalg.norm(vec))
            if norm == 0.0:
                raise ZeroVector(f"{word!r} has zero norm")
            store.vectors[word] = vec
            store.norms[word] = norm
        return store

    def __contains__(self, word: str) -> bool:
        return word in self.vectors

    def __len__(self) -> int:
        return len(self.vectors)


def load_vectors(path: str | Path) -> VectorStore:
    """Read the common text vector format: "<count> <dim>" then "word v1 … vd"."""
    path = Path(path)
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines:
        raise FormatError(f"{path}: empty vector file")
    header = lines[0].split()
    if len(header) != 2:
        raise FormatError(f"{path}: header must be '<count> <dimension>'")
    try:
        declared_count, dimension = int(header[0]), int(header[1])
    except ValueError as exc:
        raise FormatError(f"{path}: non-numeric header") from exc
    if dimension < 2:
        raise FormatError(f"{path}: dimension must be >= 2")

    store = VectorStore(dimension=dimension)
    for lineno, line in enumerate(lines[1:], 2):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != dimension + 1:
            raise DimensionMismatch(
                f"{path}:{lineno}: expected {dimension} values for {parts[0]!r}, "
                f"got {len(parts) - 1}"
            )
        word = parts[0]
        if word in store.vectors:
            raise DuplicateWord(f"{path}:{lineno}: duplicate word {word!r}")
        try:
            vec = np.array([float(x) for x in parts[1:]], dtype=np.float64)
        except ValueError as exc:
            raise FormatError(f"{path}:{lineno}: non-numeric value") from exc
        norm = float(np.linalg.norm(vec))
        if norm == 0.0:
            raise ZeroVector(f"{path}:{lineno}: zero vector for {word!r}")
        store.vectors[word] = vec
        store.norms[word] = norm
    if len(store.vectors) != declared_count:
        raise FormatError(
            f"{path}: header declares {declared_count} words, file has {len(store.vectors)}"
        )
    return store


def save_vectors(store: VectorStore, path: str | Path) -> None:
    path = Path(path)
    lines = [f"{len(store.vectors)} {store.dimension}"]
    for word, vec in store.vectors.items():
        lines.append(word + " " + " ".join(repr(float(x)) for x in vec))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def cosine(a: str, b: str, store: VectorStore) -> float:
    for word in (a, b):
        if word not in store.vectors:
            raise MissingVector(word)
    value = float(
        np.dot(store.vectors[a], store.vectors[b]) / (store.norms[a] * store.norms[b])
    )
    return max(-1.0, min(1.0, value))


def nearest_neighbors(w: str, k: int, store: VectorStore) -> list[tuple[str, float]]:
    """Top-k by similarity, ties broken lexicographically; w itself excluded."""
    if w not in store.vectors:
        raise MissingVector(w)
    if k < 1:
        raise ValueError("k must be >= 1")
    scored = [(other, cosine(w, other, store)) for other in store.vectors if other != w]
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    return scored[:k]


class Decision(str, Enum):
    ACCEPT = "accept"
    REJECT = "reject"
    UNSCORED_ACCEPT = "unscored_accept"


@dataclass(frozen=True)
class CompatibilityVerdict:
    pair: tuple[str, str]
    similarity: float | None
    decision: Decision


def compatibility_filter(
    pairs: list[tuple[str, str]], threshold: float, store: VectorStore
) -> list[CompatibilityVerdict]:
    """Score each filler pair; reject below threshold, pass unscored pairs through."""
    if not -1.0 <= threshold <= 1.0:
        raise ValueError(f"threshold must lie in [-1, 1], got {threshold}")
    verdicts = []
    for a, b in pairs:
        if a not in store.vectors or b not in store.vectors:
            verdicts.append(
                CompatibilityVerdict(pair=(a, b), similarity=None, decision=Decision.UNSCORED_ACCEPT)
            )
            continue
        sim = cosine(a, b, store)
        decision = Decision.REJECT if sim < threshold else Decision.ACCEPT
        verdicts.append(CompatibilityVerdict(pair=(a, b), similarity=sim, decision=decision))
    return verdicts


# --- skip-gram with negative sampling -------------------------------------------

def _sigmoid(x: np.ndarray | float) -> np.ndarray | float:
    return 1.0 / (1.0 + np.exp(-np.clip(x, -60.0, 60.0)))


def _log_sigmoid(x: np.ndarray | float) -> np.ndarray | float:
    return -np.logaddexp(0.0, -np.clip(x, -60.0, 60.0))


def ns_loss(
    w_in: np.ndarray,
    w_out: np.ndarray,
    examples: list[tuple[int, int, list[int]]],
) -> float:
    """Negative-sampling objective over (center, context, negatives) triples."""
    total = 0.0
    for center, context, negatives in examples:
        v = w_in[center]
        total -= float(_log_sigmoid(np.dot(w_out[context], v)))
        for neg in negatives:
            total -= float(_log_sigmoid(-np.dot(w_out[neg], v)))
    return total


def ns_gradients(
    w_in: np.ndarray,
    w_out: np.ndarray,
    examples: list[tuple[int, int, list[int]]],
) -> tuple[np.ndarray, np.ndarray]:
    """Analytic gradients of ns_loss with respect to both weight matrices."""
    grad_in = np.zeros_like(w_in)
    grad_out = np.zeros_like(w_out)
    for center, context, negatives in examples:
        v = w_in[center]
        u_ctx = w_out[context]
        g_pos = _sigmoid(np.dot(u_ctx, v)) - 1.0
        grad_in[center] += g_pos * u_ctx
        grad_out[context] += g_pos * v
        for neg in negatives:
            u_neg = w_out[neg]
            g_neg = _sigmoid(np.dot(u_neg, v))
            grad_in[center] += g_neg * u_neg
            grad_out[neg] += g_neg * v
    return grad_in, grad_out


def _read_corpus(path: str | Path) -> list[list[str]]:
    sentences = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        tokens = line.split()
        if tokens:
            sentences.append(tokens)
    return sentences


def train_skipgram(
    corpus: str | Path,
    dims: int = 32,
    window: int = 2,
    negatives: int = 5,
    epochs: int = 5,
    seed: int = 0,
    learning_rate: float = 0.05,
) -> VectorStore:
    """Train input vectors on a tokenized corpus; deterministic for a fixed seed.

    The per-epoch loss over the whole corpus (with a fixed evaluation negative
    set) is recorded on the returned store's training_loss.
    """
    if dims < 2:
        raise ValueError("dims must be >= 2")
    sentences = _read_corpus(corpus)
    counts: dict[str, int] = {}
    for sentence in sentences:
        for token in sentence:
            counts[token] = counts.get(token, 0) + 1
    if not counts:
        raise EmptyCorpus(str(corpus))
    if len(counts) == 1:
        warnings.warn(
            "corpus contains a single distinct token; negative sampling has no diversity",
            stacklevel=2,
        )

    vocab = sorted(counts, key=lambda t: (-counts[t], t))
    index = {t: i for i, t in enumerate(vocab)}
    noise = np.array([counts[t] for t in vocab], dtype=np.float64) ** 0.75
    noise /= noise.sum()

    rng = np.random.default_rng(seed)
    w_in = (rng.random((len(vocab), dims)) - 0.5) / dims
    w_out = np.zeros((len(vocab), dims))

    pairs: list[tuple[int, int]] = []
    for sentence in sentences:
        ids = [index[t] for t in sentence]
        for i, center in enumerate(ids):
            for j in range(max(0, i - window), min(len(ids), i + window + 1)):
                if j != i:
                    pairs.append((center, ids[j]))

    eval_rng = np.random.default_rng(seed + 1)
    eval_examples = [
        (c, o, list(eval_rng.choice(len(vocab), size=negatives, p=noise)))
        for c, o in pairs
    ]

    store = VectorStore(dimension=dims)
    loss_history: list[float] = []
    total_updates = max(1, epochs * len(pairs))
    step = 0
    for _epoch in range(epochs):
        for center, context, in pairs:
            lr = learning_rate * max(0.05, 1.0 - step / total_updates)
            step += 1
            negs = list(rng.choice(len(vocab), size=negatives, p=noise)) if negatives else []
            grad_in, grad_out = ns_gradients(w_in, w_out, [(center, context, negs)])
            w_in -= lr * grad_in
            w_out -= lr * grad_out
        loss_history.append(ns_loss(w_in, w_out, eval_examples))

    for token in vocab:
        vec = w_in[index[token]].copy()
        norm = float(np.linalg.norm(vec))
        if norm == 0.0:  # astronomically unlikely with random init
            raise ZeroVector(token)
        store.vectors[token] = vec
        store.norms[token] = norm
    store.training_loss = loss_history
    return store
