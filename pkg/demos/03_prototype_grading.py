"""Frequency evidence to prototypicality grades, step by step.

Run from the repository root:  python3 demos/03_prototype_grading.py
"""

from valgen import default_data_dir, load_bundle
from valgen.core import ArgumentSlot
from valgen.prototyping import contrast_report, filter_candidates, ingest_frequency_table, load_annotations

data = default_data_dir()
engine = load_bundle()

# 1. Ingest a co-occurrence table; per-million values are re-derived and checked.
table = ingest_frequency_table(data / "tables" / "de_Text_gen.tsv", ("de", "Text"))
print(f"TEXT+genitive table: {len(table.entries)} rows, "
      f"{table.pattern_per_million():.3f} hits per million")
for entry in table.entries[:5]:
    print(f"  {entry.rank:>3}  {entry.filler:24s} {entry.count:>6}  {entry.per_million:.5f}")

# 2. The raw list is not a candidate list: role annotations filter it.
annotations = load_annotations(data / "tables" / "de_Text_gen.annotations.json")
agens = ArgumentSlot(index=1, variant=1, role="AGENS")
candidates = filter_candidates(table, annotations, agens, engine.ontologies["de"])
print(f"\nAGENS candidates after filtering: {len(candidates)}; first three:")
for candidate in candidates[:3]:
    print(f"  rank {candidate.rank:>3}  {candidate.lexeme}")

# 3. Pattern grades: frequent+diverse, representative-but-rare, excluded.
for lemma, pattern_id in (
    ("Diskussion", "det+Diskussion+über+acc+N2A"),
    ("Schmerz", "det+adjN1b+Schmerz"),
    ("Schmerz", "det+Schmerz+gen+N1a"),
):
    grade = engine.pattern_grade("de", lemma, pattern_id)
    print(f"\n{lemma} / {pattern_id}\n  grade={grade.grade.value}"
          f"  per_million={grade.pattern_per_million:.4f}"
          f"  candidates={grade.distinct_candidates}"
          f"  valency_share={grade.valency_share:.2f}")

# 4. The same lexeme can be prototypical for one head noun and marginal for
#    another; the contrast report makes that visible.
tables = {
    ("de", "Farbe"): engine.tables[("de", "Farbe", "det+Farbe+gen+N1a")],
    ("de", "Schmerz"): engine.tables[("de", "Schmerz", "det+arg1c+Schmerz")],
}
for lexeme in ("Haar", "Auge", "Haut"):
    result = contrast_report(lexeme, ("de", "Farbe"), ("de", "Schmerz"), tables)
    a, b = result.occurrence_a, result.occurrence_b
    print(f"\n{lexeme!r}: FARBE rank {a.rank} ({a.count}), "
          f"SCHMERZ rank {b.rank} ({b.count}) -> {result.verdict.value}")
