"""Word vectors: loading, neighbors, the compatibility filter, and training.

Run from the repository root:  python3 demos/04_embeddings.py
"""

import tempfile
from pathlib import Path

from valgen import (
    compatibility_filter,
    cosine,
    default_data_dir,
    load_vectors,
    nearest_neighbors,
    train_skipgram,
)

store = load_vectors(default_data_dir() / "vectors.de.txt")
print(f"store: {len(store)} words, dimension {store.dimension}")

print("\nnearest neighbors of 'Kopf':")
for word, similarity in nearest_neighbors("Kopf", 5, store):
    print(f"  {word:12s} {similarity:+.3f}")

# The filter rejects implausible filler pairs in biargumental patterns;
# unscored pairs (missing vectors) pass through flagged, never rejected.
pairs = [("Bundesregierung", "Anfrage"), ("Bemerkung", "Akademikerin"),
         ("Kopf", "Lippenstift"), ("Kopf", "fehlt-im-store")]
for verdict in compatibility_filter(pairs, 0.3, store):
    sim = "  --  " if verdict.similarity is None else f"{verdict.similarity:+.3f}"
    print(f"  {verdict.pair[0]:16s} x {verdict.pair[1]:16s} {sim}  {verdict.decision.value}")

# A small corpus with controlled co-occurrence is enough to see skip-gram
# with negative sampling pull shared-context words together:
corpus = "\n".join([
    "Kopf Schmerz stark", "Rücken Schmerz stark", "Kopf Schmerz akut",
    "Rücken Schmerz akut", "Lippenstift Farbe rot", "Lippenstift Farbe grell",
] * 10)
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "corpus.txt"
    path.write_text(corpus, encoding="utf-8")
    trained = train_skipgram(path, dims=16, window=2, negatives=4, epochs=10, seed=3)
print("\nafter training:")
print(f"  cos(Kopf, Rücken)      = {cosine('Kopf', 'Rücken', trained):+.3f}   (shared contexts)")
print(f"  cos(Kopf, Lippenstift) = {cosine('Kopf', 'Lippenstift', trained):+.3f}   (disjoint contexts)")
print("  per-epoch loss:", " ".join(f"{loss:.1f}" for loss in trained.training_loss))
