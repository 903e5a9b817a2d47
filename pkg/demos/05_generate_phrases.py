"""The full generation loop: structures -> packages -> phrases -> export.

Run from the repository root:  python3 demos/05_generate_phrases.py
"""

from valgen import load_bundle
from valgen.generation import GenerationRequest, export_phrases
from valgen.ontology import format_class_path

engine = load_bundle()

# Step 1: which argument structures does TEXT offer? (Excluded ones are gone.)
print("structures for (de, Text):")
for info in engine.list_structures("de", "Text"):
    print(f"  [{info.arity:4s}] {info.pattern_id:32s} {info.grade}")

# Step 2: the semantic packages of the genitive slot, with standard examples.
print("\nsemantic packages for the genitive slot:")
for package in engine.list_semantic_packages("de", "Text", "det+adj+Text+gen+adj+N1aG", "a"):
    print(f"  {format_class_path(package.class_path):52s} {package.preview}")

# Step 3a: monoargumental generation over one package.
mono = GenerationRequest(
    language="de", lemma="Text", pattern_id="det+Text+gen+N1a",
    packages={"a": ["belebt.menschlich.beruf.ausbildung"]}, limit=6,
)
print("\nmonoargumental:")
for phrase in engine.generate(mono)[0]:
    print(f"  {phrase.text}")

# Step 3b: biargumental generation crosses two packages and filters the pairs
# through embedding compatibility before realization.
bi = GenerationRequest(
    language="de", lemma="Text", pattern_id="det+arg5c+head+gen+N1a",
    packages={"a": ["intellektuelles.kommunikation.mitteilung"],
              "b": ["belebt.menschlich.beruf.ausbildung"]},
    limit=9,
)
phrases, stats = engine.generate(bi)
print(f"\nbiargumental ({stats.generated} candidates, {stats.filtered} filtered, "
      f"{stats.truncated} truncated):")
for phrase in phrases:
    print(f"  {phrase.text}")

# Step 4: byte-stable exports, ready for reuse in other e-tools.
print("\nCSV export:")
print(export_phrases(phrases[:3], "csv").decode("utf-8"))
