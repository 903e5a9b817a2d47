"""Class hierarchy walk: classification, subsumption, vocabulary expansion.

Run from the repository root:  python3 demos/02_ontology_expansion.py
"""

import json

from valgen import classify_lexeme, default_data_dir, expand_class, load_ontology, subsumes
from valgen.ontology import format_class_path, parse_class_path

onto = load_ontology(default_data_dir() / "ontology.de.json")
print(f"{len(onto.nodes)} nodes, {onto.member_count()} member links, roots: "
      + ", ".join(format_class_path(r) for r in sorted(onto.roots)))

# Where does a lexeme live?
for lexeme in ("Kopf", "Haut", "Lippenstift", "zzz"):
    paths = classify_lexeme(lexeme, onto)
    print(f"\nclassify({lexeme!r}):",
          [format_class_path(p) for p in sorted(paths)] or "(unclassified)")

# Subsumption is plain path-prefix testing:
body = parse_class_path("belebt.menschlich.körperteil")
extern = parse_class_path("belebt.menschlich.körperteil.extern")
print(f"\n{format_class_path(body)} subsumes extern: {subsumes(body, extern, onto)}")
print(f"extern subsumes body:                        {subsumes(extern, body, onto)}")

# Expansion collects the members of a node and all its descendants; attaching
# corpus frequencies makes the order deterministic by (frequency desc, lexeme):
freqs = json.loads((default_data_dir() / "lexfreq.de.json").read_text())
members = expand_class(body, onto, freqs)
print(f"\nexpand({format_class_path(body)}) — top 8 of {len(members)}:")
for lexeme in members[:8]:
    print(f"  {lexeme:12s} {freqs.get(lexeme, 0):>8}")
