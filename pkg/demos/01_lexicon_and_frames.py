"""Tour of the valency lexicon: frames, slots, patterns, validation.

Run from the repository root:  python3 demos/01_lexicon_and_frames.py
"""

from valgen import default_data_dir, load_lexicon, validate_frame

lexicon = load_lexicon(default_data_dir() / "lexicon.de.json")
print(f"loaded {len(lexicon.frames)} German frames, {len(lexicon.entries)} entries")

# The frame of TEXT carries the argument slots with their semantic roles ...
frame = lexicon.frame("Text")
print(f"\nTEXT ({frame.scene}, evidence={frame.evidence}):")
for slot in frame.slots:
    print(f"  Arg{slot.index}.{slot.variant}  {slot.role:14s} {slot.role_gloss}")

# ... and the realization patterns the generators offer for it.
print("\npatterns:")
for pattern in frame.patterns:
    print(f"  [{pattern.arity:4s}] {pattern.id}")
    print(f"         menu label: {pattern.label}")

# validate_frame reports violations as data instead of raising:
print("\nviolations in the shipped frame:", validate_frame(frame, lexicon.entries) or "none")

# Inflection is table lookup, nothing is synthesized:
entry = lexicon.entries["Gastprofessor"]
print("\nGastprofessor paradigm:")
for cell, form in entry.forms.items():
    print(f"  {cell:8s} {form}")
