"""Shared domain model: languages, features, valency frames, patterns, lexicon."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .errors import DanglingReference, DuplicateId, SchemaError


class Language(str, Enum):
    DE = "de"
    ES = "es"
    FR = "fr"


class Gender(str, Enum):
    MASC = "masc"
    FEM = "fem"
    NEUT = "neut"  # German only


class Number(str, Enum):
    SG = "sg"
    PL = "pl"


class Case(str, Enum):
    NOM = "nom"
    GEN = "gen"
    DAT = "dat"
    ACC = "acc"
    NONE = "none"  # Spanish and French carry no case


class Definiteness(str, Enum):
    DEFINITE = "definite"
    INDEFINITE = "indefinite"
    NONE = "none"


class Pos(str, Enum):
    NOUN = "noun"
    ADJECTIVE = "adjective"


class SlotKind(str, Enum):
    DETERMINER = "determiner"
    ADJECTIVE = "adjective"
    HEAD = "head"
    ARGUMENT_FILLER = "argument_filler"
    PREPOSITION = "preposition"
    COMPOUND_MODIFIER = "compound_modifier"


#: The five scene labels the twenty nouns per language are drawn from.
SCENES = frozenset({"BEWEGUNG", "LOKATION", "AUSDRUCK", "AFFIZIERTHEIT", "KLASSIFIKATION"})

#: (index, variant) key of an argument slot, e.g. (1, 1) for Arg1 variant 1.
SlotRef = tuple[int, int]


def parse_slot_ref(text: str) -> SlotRef:
    """Parse an "index.variant" slot reference such as "1.1" or "5.2"."""
    try:
        index_s, variant_s = text.split(".")
        ref = (int(index_s), int(variant_s))
    except ValueError as exc:
        raise SchemaError(f"malformed slot reference {text!r}") from exc
    if ref[0] < 1 or ref[1] < 1:
        raise SchemaError(f"slot reference {text!r} must have index and variant >= 1")
    return ref


def format_slot_ref(ref: SlotRef) -> str:
    return f"{ref[0]}.{ref[1]}"


@dataclass(frozen=True)
class GrammaticalFeatures:
    """A full feature assignment for one token or noun group."""

    gender: Gender
    number: Number
    case: Case
    definiteness: Definiteness = Definiteness.NONE


@dataclass(frozen=True)
class SlotMarks:
    """Partial morphosyntactic requirements carried by a pattern slot."""

    case: Case | None = None
    definiteness: Definiteness | None = None
    number: Number | None = None
    pos: Pos | None = None


@dataclass(frozen=True)
class ArgumentSlot:
    """One role-bearing position of a frame; variant = realization subindex."""

    index: int
    variant: int
    role: str
    role_gloss: str = ""

    @property
    def ref(self) -> SlotRef:
        return (self.index, self.variant)


@dataclass(frozen=True)
class PatternSlot:
    kind: SlotKind
    marks: SlotMarks = SlotMarks()
    binds: SlotRef | None = None
    fixed_text: str | None = None
    optional: bool = False


@dataclass(frozen=True)
class PackageOffering:
    """A semantic class offered for one slot of one pattern."""

    class_path: str
    number_policy: str = "sg"  # "sg" or "both"
    preview_adjectives: tuple[str, ...] = ()
    preview_member: str | None = None  # curated example member; default = top member


@dataclass
class RealizationPattern:
    id: str
    language: Language
    slots: list[PatternSlot]
    label: str = ""
    head_ref: str = ""  # lexeme-id of the governing head noun, stamped at load
    offerings: dict[SlotRef, list[PackageOffering]] = field(default_factory=dict)

    @property
    def arity(self) -> str:
        n = len(self.bound_slots())
        return {1: "mono", 2: "bi"}.get(n, f"invalid({n})")

    def bound_slots(self) -> list[PatternSlot]:
        """Argument-realizing slots (fillers and compound modifiers) in order."""
        return [
            s
            for s in self.slots
            if s.kind in (SlotKind.ARGUMENT_FILLER, SlotKind.COMPOUND_MODIFIER)
        ]


@dataclass
class ValencyFrame:
    lemma: str
    language: Language
    gender: Gender
    inflection_ref: str
    scene: str
    slots: list[ArgumentSlot] = field(default_factory=list)
    patterns: list[RealizationPattern] = field(default_factory=list)
    adjectives: list[str] = field(default_factory=list)
    evidence: str = "synthetic"

    def slot_map(self) -> dict[SlotRef, ArgumentSlot]:
        return {s.ref: s for s in self.slots}

    def pattern(self, pattern_id: str) -> RealizationPattern | None:
        for p in self.patterns:
            if p.id == pattern_id:
                return p
        return None


@dataclass
class Lexicon:
    """Immutable after load; safe to share across workers."""

    language: Language
    frames: dict[tuple[str, str], ValencyFrame] = field(default_factory=dict)
    entries: dict[str, "LexicalEntry"] = field(default_factory=dict)  # noqa: F821

    def frame(self, lemma: str) -> ValencyFrame | None:
        return self.frames.get((self.language.value, lemma))


def validate_frame(frame: ValencyFrame, entries: dict | None = None) -> list[str]:
    """Check every frame invariant; return one description per violation."""
    violations: list[str] = []
    seen_refs: set[SlotRef] = set()
    for slot in frame.slots:
        if slot.index < 1 or slot.variant < 1:
            violations.append(
                f"slot {format_slot_ref(slot.ref)}: index and variant must be >= 1"
            )
        if not slot.role:
            violations.append(f"slot {format_slot_ref(slot.ref)}: empty role label")
        if slot.ref in seen_refs:
            violations.append(f"slot {format_slot_ref(slot.ref)}: duplicate (index, variant)")
        seen_refs.add(slot.ref)

    if frame.scene not in SCENES:
        violations.append(
            f"scene: {frame.scene!r} is not one of the five scene labels "
            f"({', '.join(sorted(SCENES))})"
        )

    seen_pattern_ids: set[str] = set()
    for pattern in frame.patterns:
        pid = pattern.id
        if pid in seen_pattern_ids:
            violations.append(f"pattern {pid}: duplicate id within frame")
        seen_pattern_ids.add(pid)
        if pattern.language != frame.language:
            violations.append(f"pattern {pid}: language differs from frame")

        heads = [s for s in pattern.slots if s.kind == SlotKind.HEAD]
        if len(heads) != 1:
            violations.append(f"pattern {pid}: multiple head slots" if heads else f"pattern {pid}: no head slot")

        n_bound = len(pattern.bound_slots())
        if n_bound not in (1, 2):
            violations.append(f"pattern {pid}: arity must be 1 or 2, found {n_bound} filler slots")

        for s in pattern.slots:
            if s.kind in (SlotKind.ARGUMENT_FILLER, SlotKind.COMPOUND_MODIFIER):
                if s.binds is None:
                    violations.append(f"pattern {pid}: {s.kind.value} slot binds no argument slot")
                elif s.binds not in seen_refs:
                    violations.append(
                        f"pattern {pid}: binds unknown slot {format_slot_ref(s.binds)}"
                    )
            if s.kind == SlotKind.PREPOSITION and not s.fixed_text:
                violations.append(f"pattern {pid}: preposition slot without fixed_text")

        bound_refs = {s.binds for s in pattern.bound_slots()}
        for ref in pattern.offerings:
            if ref not in bound_refs:
                violations.append(
                    f"pattern {pid}: offering for unbound slot {format_slot_ref(ref)}"
                )

    if entries is not None:
        if frame.inflection_ref not in entries:
            violations.append(f"inflection_ref: unknown entry {frame.inflection_ref!r}")
        else:
            head = entries[frame.inflection_ref]
            if head.gender != frame.gender:
                violations.append(
                    f"gender: frame says {frame.gender.value}, entry says {head.gender.value}"
                )
        for adj in frame.adjectives:
            if adj not in entries:
                violations.append(f"adjectives: unknown entry {adj!r}")

    return violations


# --- JSON loading -----------------------------------------------------------

def _parse_marks(obj: dict) -> SlotMarks:
    def enum_or_none(cls, key):
        raw = obj.get(key)
        if raw is None:
            return None
        try:
            return cls(raw)
        except ValueError as exc:
            raise SchemaError(f"invalid {key} value {raw!r}") from exc

    return SlotMarks(
        case=enum_or_none(Case, "case"),
        definiteness=enum_or_none(Definiteness, "definiteness"),
        number=enum_or_none(Number, "number"),
        pos=enum_or_none(Pos, "pos"),
    )


def _parse_pattern_slot(obj: dict) -> PatternSlot:
    try:
        kind = SlotKind(obj["kind"])
    except (KeyError, ValueError) as exc:
        raise SchemaError(f"pattern slot needs a valid kind, got {obj.get('kind')!r}") from exc
    binds = parse_slot_ref(obj["binds"]) if "binds" in obj else None
    return PatternSlot(
        kind=kind,
        marks=_parse_marks(obj),
        binds=binds,
        fixed_text=obj.get("fixed_text"),
        optional=bool(obj.get("optional", False)),
    )


def _parse_offering(obj: dict) -> PackageOffering:
    if "class" not in obj:
        raise SchemaError("offering without class path")
    policy = obj.get("number", "sg")
    if policy not in ("sg", "both"):
        raise SchemaError(f"offering number policy must be sg|both, got {policy!r}")
    return PackageOffering(
        class_path=str(obj["class"]).lower(),
        number_policy=policy,
        preview_adjectives=tuple(obj.get("preview_adjectives", ())),
        preview_member=obj.get("preview_member"),
    )


def _parse_pattern(obj: dict, language: Language, head_ref: str) -> RealizationPattern:
    if "id" not in obj or not obj["id"]:
        raise SchemaError("pattern without id")
    slots = [_parse_pattern_slot(s) for s in obj.get("slots", [])]
    offerings = {
        parse_slot_ref(ref): [_parse_offering(o) for o in offers]
        for ref, offers in obj.get("offerings", {}).items()
    }
    return RealizationPattern(
        id=str(obj["id"]),
        language=language,
        slots=slots,
        label=obj.get("label", ""),
        head_ref=head_ref,
        offerings=offerings,
    )


def _parse_frame(obj: dict, language: Language) -> ValencyFrame:
    for key in ("lemma", "gender", "inflection_ref", "scene"):
        if key not in obj:
            raise SchemaError(f"frame missing field {key!r}")
    try:
        gender = Gender(obj["gender"])
    except ValueError as exc:
        raise SchemaError(f"frame {obj['lemma']}: invalid gender {obj['gender']!r}") from exc
    slots = [
        ArgumentSlot(
            index=int(s["index"]),
            variant=int(s["variant"]),
            role=str(s.get("role", "")),
            role_gloss=str(s.get("gloss", "")),
        )
        for s in obj.get("slots", [])
    ]
    frame = ValencyFrame(
        lemma=str(obj["lemma"]),
        language=language,
        gender=gender,
        inflection_ref=str(obj["inflection_ref"]),
        scene=str(obj["scene"]),
        slots=slots,
        adjectives=[str(a) for a in obj.get("adjectives", [])],
        evidence=str(obj.get("evidence", "synthetic")),
    )
    frame.patterns = [
        _parse_pattern(p, language, frame.inflection_ref) for p in obj.get("patterns", [])
    ]
    return frame


def load_lexicon(path: str | Path) -> Lexicon:
    """Load and fully cross-check one language bundle; all-or-nothing."""
    from .morphology import parse_entry  # deferred: morphology depends on these enums

    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError(f"{path}: top level must be an object")
    try:
        language = Language(doc.get("language"))
    except ValueError as exc:
        raise SchemaError(f"{path}: unknown language code {doc.get('language')!r}") from exc

    entries: dict = {}
    for raw in doc.get("entries", []):
        entry = parse_entry(raw, language)
        if entry.id in entries:
            raise DuplicateId(f"{path}: duplicate entry id {entry.id!r}")
        entries[entry.id] = entry

    lexicon = Lexicon(language=language, entries=entries)
    seen_pattern_ids: set[str] = set()
    for raw in doc.get("frames", []):
        frame = _parse_frame(raw, language)
        key = (language.value, frame.lemma)
        if key in lexicon.frames:
            raise DuplicateId(f"{path}: duplicate frame for lemma {frame.lemma!r}")
        for pattern in frame.patterns:
            if pattern.id in seen_pattern_ids:
                raise DuplicateId(f"{path}: pattern id {pattern.id!r} reused across frames")
            seen_pattern_ids.add(pattern.id)
        violations = validate_frame(frame, entries)
        dangling = [v for v in violations if "unknown slot" in v or "unknown entry" in v]
        if dangling:
            raise DanglingReference(f"{path}: frame {frame.lemma}: " + "; ".join(dangling))
        if violations:
            raise SchemaError(f"{path}: frame {frame.lemma}: " + "; ".join(violations))
        lexicon.frames[key] = frame
    return lexicon


def lexicon_to_json(lexicon: Lexicon) -> dict:
    """Serialize back to the documented file schema (round-trips load_lexicon)."""
    from .morphology import entry_to_json

    frames = []
    for (_, _lemma), frame in lexicon.frames.items():
        patterns = []
        for p in frame.patterns:
            slots = []
            for s in p.slots:
                obj: dict = {"kind": s.kind.value}
                if s.marks.case is not None:
                    obj["case"] = s.marks.case.value
                if s.marks.definiteness is not None:
                    obj["definiteness"] = s.marks.definiteness.value
                if s.marks.number is not None:
                    obj["number"] = s.marks.number.value
                if s.marks.pos is not None:
                    obj["pos"] = s.marks.pos.value
                if s.binds is not None:
                    obj["binds"] = format_slot_ref(s.binds)
                if s.fixed_text is not None:
                    obj["fixed_text"] = s.fixed_text
                if s.optional:
                    obj["optional"] = True
                slots.append(obj)
            offerings = {
                format_slot_ref(ref): [
                    {
                        "class": o.class_path,
                        "number": o.number_policy,
                        **(
                            {"preview_adjectives": list(o.preview_adjectives)}
                            if o.preview_adjectives
                            else {}
                        ),
                        **(
                            {"preview_member": o.preview_member}
                            if o.preview_member is not None
                            else {}
                        ),
                    }
                    for o in offers
                ]
                for ref, offers in p.offerings.items()
            }
            pattern_obj = {"id": p.id, "label": p.label, "slots": slots}
            if offerings:
                pattern_obj["offerings"] = offerings
            patterns.append(pattern_obj)
        frames.append(
            {
                "lemma": frame.lemma,
                "gender": frame.gender.value,
                "inflection_ref": frame.inflection_ref,
                "scene": frame.scene,
                "evidence": frame.evidence,
                "adjectives": list(frame.adjectives),
                "slots": [
                    {
                        "index": s.index,
                        "variant": s.variant,
                        "role": s.role,
                        "gloss": s.role_gloss,
                    }
                    for s in frame.slots
                ],
                "patterns": patterns,
            }
        )
    return {
        "language": lexicon.language.value,
        "frames": frames,
        "entries": [entry_to_json(e) for e in lexicon.entries.values()],
    }
