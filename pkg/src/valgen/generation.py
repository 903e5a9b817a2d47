"""Candidate enumeration, binding, filtering, ranking and export.

Monoargumental requests realize every member of the selected semantic
packages; biargumental requests cross two member sets and pass the pairs
through the embedding compatibility filter first. Everything is a pure
function of (request, data snapshot): identical inputs give byte-identical
exports.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass, field

from .core import (
    ArgumentSlot,
    Lexicon,
    Number,
    PackageOffering,
    Pos,
    RealizationPattern,
    SlotKind,
    SlotRef,
    ValencyFrame,
    format_slot_ref,
    parse_slot_ref,
)
from .embeddings import CompatibilityVerdict, Decision, VectorStore, compatibility_filter
from .errors import (
    DanglingReference,
    EmptyPackageSelection,
    UnknownFrame,
    UnknownPath,
    UnknownPattern,
    UnknownSlot,
)
from .morphology import Binding, FillerChoice, RealizedPhrase, realize_np, recheck_agreement
from .ontology import ClassPath, Ontology, expand_class, format_class_path, parse_class_path
from .prototyping import (
    ClassGrade,
    ClassPrototypicality,
    CooccurrenceTable,
    GradingConfig,
    DEFAULT_GRADING,
    LexicalPrototype,
    PatternGrade,
    PrototypicalityGrade,
    RoleAnnotation,
    filter_candidates,
    grade_class,
    grade_pattern,
)

TableKey = tuple[str, str, str]  # (language, lemma, pattern_id)


@dataclass(frozen=True)
class SemanticPackage:
    """A semantic class offered for one slot, with preview and member list."""

    class_path: ClassPath
    slot: SlotRef
    preview: str
    members: tuple[str, ...]
    number_policy: str
    grade: ClassPrototypicality | None  # None = no corpus evidence at desk scale


@dataclass(frozen=True)
class StructureInfo:
    pattern_id: str
    label: str
    arity: str
    grade: str


@dataclass
class GenerationRequest:
    language: str
    lemma: str
    pattern_id: str
    packages: dict[str, list[str]]  # "a"/"b" -> class paths, or ["all"]
    limit: int = 20
    seed: int = 0
    compat_threshold: float = 0.25
    include_adjectives: bool = False


@dataclass(frozen=True)
class GeneratedPhrase:
    text: str
    pattern_id: str
    slots: dict[str, str]  # "1.1" -> lexeme
    numbers: dict[str, str]  # "1.1" -> sg|pl (fillers); "head" -> sg|pl
    packages: dict[str, str]  # "1.1" -> class path
    adjectives: dict[str, str]  # pattern position -> lexeme
    frequencies: dict[str, int]
    similarity: float | None
    trace: RealizedPhrase


@dataclass(frozen=True)
class GenerationStats:
    generated: int
    filtered: int
    truncated: int


@dataclass(frozen=True)
class _Member:
    lexeme: str
    frequency: int
    class_path: ClassPath
    number_policy: str


class Engine:
    """Read-only facade over one loaded data snapshot.

    All lookup structures are immutable after construction, so one Engine may
    serve any number of concurrent requests.
    """

    def __init__(
        self,
        lexicons: dict[str, Lexicon],
        ontologies: dict[str, Ontology],
        tables: dict[TableKey, CooccurrenceTable] | None = None,
        annotations: dict[TableKey, list[RoleAnnotation]] | None = None,
        overrides: dict[tuple[str, str], dict[ClassPath, frozenset[str]]] | None = None,
        lexeme_frequencies: dict[str, dict[str, int]] | None = None,
        vectors: dict[str, VectorStore] | None = None,
        grading: GradingConfig = DEFAULT_GRADING,
    ):
        self.lexicons = lexicons
        self.ontologies = ontologies
        self.tables = tables or {}
        self.annotations = annotations or {}
        self.overrides = overrides or {}
        self.lexeme_frequencies = lexeme_frequencies or {}
        self.vectors = vectors or {}
        self.grading = grading
        self._grade_cache: dict[TableKey, PrototypicalityGrade | None] = {}
        self._validate_cross_references()

    def _validate_cross_references(self) -> None:
        for lang, onto in self.ontologies.items():
            lexicon = self.lexicons.get(lang)
            if lexicon is None:
                continue
            for node in onto.nodes.values():
                for member in node.members:
                    if member not in lexicon.entries:
                        raise DanglingReference(
                            f"ontology {lang}: member {member!r} of "
                            f"{format_class_path(node.path)} has no lexicon entry"
                        )

    # --- lookups ---------------------------------------------------------

    def languages(self) -> list[str]:
        return sorted(self.lexicons)

    def nouns(self, language: str) -> list[str]:
        lexicon = self.lexicons.get(language)
        if lexicon is None:
            raise UnknownFrame(f"unknown language {language!r}")
        return sorted(lemma for (_, lemma) in lexicon.frames)

    def frame(self, language: str, lemma: str) -> ValencyFrame:
        lexicon = self.lexicons.get(language)
        frame = lexicon.frame(lemma) if lexicon else None
        if frame is None:
            raise UnknownFrame(f"unknown frame ({language!r}, {lemma!r})")
        return frame

    def _pattern(self, frame: ValencyFrame, pattern_id: str) -> RealizationPattern:
        pattern = frame.pattern(pattern_id)
        if pattern is None:
            raise UnknownPattern(f"frame {frame.lemma}: unknown pattern {pattern_id!r}")
        return pattern

    def slot_for_key(self, frame: ValencyFrame, pattern: RealizationPattern, key: str) -> ArgumentSlot:
        """Resolve a slot key: positional "a"/"b" or an explicit "index.variant"."""
        bound = pattern.bound_slots()
        slot_map = frame.slot_map()
        if key in ("a", "b"):
            position = 0 if key == "a" else 1
            if position >= len(bound):
                raise UnknownSlot(f"pattern {pattern.id} has no slot {key!r}")
            return slot_map[bound[position].binds]
        ref = parse_slot_ref(key)
        if ref not in {s.binds for s in bound}:
            raise UnknownSlot(f"pattern {pattern.id} does not bind slot {key!r}")
        return slot_map[ref]

    # --- grading ----------------------------------------------------------

    def pattern_grade(
        self, language: str, lemma: str, pattern_id: str
    ) -> PrototypicalityGrade | None:
        """Grade from the pattern's co-occurrence table; None without evidence."""
        key = (language, lemma, pattern_id)
        if key not in self._grade_cache:
            table = self.tables.get(key)
            if table is None:
                self._grade_cache[key] = None
            else:
                candidates = self._table_candidates(key)
                self._grade_cache[key] = grade_pattern(table, candidates, self.grading)
        return self._grade_cache[key]

    def _table_candidates(self, key: TableKey) -> list[LexicalPrototype]:
        """All valency-required candidates of a table, across its bound slots."""
        language, lemma, pattern_id = key
        table = self.tables[key]
        annotations = self.annotations.get(key, [])
        frame = self.frame(language, lemma)
        pattern = self._pattern(frame, pattern_id)
        onto = self.ontologies.get(language)
        merged: dict[str, LexicalPrototype] = {}
        slot_map = frame.slot_map()
        for pattern_slot in pattern.bound_slots():
            slot = slot_map[pattern_slot.binds]
            for proto in filter_candidates(table, annotations, slot, onto):
                merged.setdefault(proto.filler, proto)
        return sorted(merged.values(), key=lambda p: p.rank)

    def slot_candidates(
        self, language: str, lemma: str, pattern_id: str, slot: ArgumentSlot
    ) -> list[LexicalPrototype]:
        key = (language, lemma, pattern_id)
        table = self.tables.get(key)
        if table is None:
            return []
        return filter_candidates(
            table, self.annotations.get(key, []), slot, self.ontologies.get(language)
        )

    # --- menus -------------------------------------------------------------

    def list_structures(self, language: str, lemma: str) -> list[StructureInfo]:
        """Offered patterns: Excluded ones omitted, Type I first, then by id."""
        frame = self.frame(language, lemma)
        rows: list[tuple[int, str, StructureInfo]] = []
        for pattern in frame.patterns:
            grade = self.pattern_grade(language, lemma, pattern.id)
            if grade is not None and grade.grade == PatternGrade.EXCLUDED:
                continue
            label = grade.grade.value if grade is not None else "ungraded"
            bucket = 0 if grade is not None and grade.grade == PatternGrade.TYPE_I else 1
            rows.append(
                (
                    bucket,
                    pattern.id,
                    StructureInfo(
                        pattern_id=pattern.id,
                        label=pattern.label or pattern.id,
                        arity=pattern.arity,
                        grade=label,
                    ),
                )
            )
        rows.sort(key=lambda r: (r[0], r[1]))
        return [info for _, _, info in rows]

    def _offered_pattern(self, language: str, lemma: str, pattern_id: str) -> tuple[ValencyFrame, RealizationPattern]:
        frame = self.frame(language, lemma)
        pattern = self._pattern(frame, pattern_id)
        grade = self.pattern_grade(language, lemma, pattern_id)
        if grade is not None and grade.grade == PatternGrade.EXCLUDED:
            raise UnknownPattern(
                f"pattern {pattern_id!r} is not offered (graded Excluded)"
            )
        return frame, pattern

    def _package_members(
        self,
        language: str,
        lemma: str,
        offering: PackageOffering,
        slot_marks_pos: Pos | None,
    ) -> list[tuple[str, int]]:
        """Expanded, override-filtered, pos-filtered members with frequencies."""
        onto = self.ontologies.get(language)
        if onto is None:
            raise UnknownPath(f"no ontology loaded for {language!r}")
        path = parse_class_path(offering.class_path)
        freqs = self.lexeme_frequencies.get(language, {})
        lexicon = self.lexicons[language]
        excluded = self.overrides.get((language, lemma), {}).get(path, frozenset())
        wanted_pos = slot_marks_pos or Pos.NOUN
        members = []
        for lexeme in expand_class(path, onto, freqs):
            if lexeme in excluded:
                continue
            entry = lexicon.entries.get(lexeme)
            if entry is None or entry.pos != wanted_pos:
                continue
            members.append((lexeme, freqs.get(lexeme, 0)))
        return members

    def _preview(
        self,
        frame: ValencyFrame,
        pattern: RealizationPattern,
        slot: ArgumentSlot,
        offering: PackageOffering,
        top_member: str,
    ) -> str:
        """Realize the package's standard example with parenthesized adjectives."""
        fillers: dict[SlotRef, FillerChoice] = {slot.ref: FillerChoice(top_member)}
        for pattern_slot in pattern.bound_slots():
            ref = pattern_slot.binds
            if ref == slot.ref or ref in fillers:
                continue
            other_offers = pattern.offerings.get(ref, [])
            if not other_offers:
                raise UnknownSlot(
                    f"pattern {pattern.id}: slot {format_slot_ref(ref)} offers no packages"
                )
            other_members = self._package_members(
                frame.language.value, frame.lemma, other_offers[0], pattern_slot.marks.pos
            )
            lexemes = [lexeme for lexeme, _ in other_members]
            preferred = other_offers[0].preview_member
            if preferred in lexemes:
                fillers[ref] = FillerChoice(preferred)
            elif lexemes:
                fillers[ref] = FillerChoice(lexemes[0])
        adjective_positions = [
            pos for pos, s in enumerate(pattern.slots) if s.kind == SlotKind.ADJECTIVE
        ]
        adjectives = {
            pos: offering.preview_adjectives[i % len(offering.preview_adjectives)]
            for i, pos in enumerate(adjective_positions)
            if offering.preview_adjectives
        }
        binding = Binding(fillers=fillers, adjectives=adjectives)
        realized = realize_np(
            pattern, binding, self.lexicons[frame.language.value], parenthesize_adjectives=True
        )
        return realized.text

    def list_semantic_packages(
        self, language: str, lemma: str, pattern_id: str, slot_key: str
    ) -> list[SemanticPackage]:
        """Non-excluded classes for one slot, each with its standard example."""
        frame, pattern = self._offered_pattern(language, lemma, pattern_id)
        slot = self.slot_for_key(frame, pattern, slot_key)
        pattern_slot = next(s for s in pattern.bound_slots() if s.binds == slot.ref)
        key = (language, lemma, pattern_id)
        pattern_grade_value = self.pattern_grade(language, lemma, pattern_id)
        packages: list[SemanticPackage] = []
        slot_candidates = self.slot_candidates(language, lemma, pattern_id, slot)
        for offering in pattern.offerings.get(slot.ref, []):
            members = self._package_members(language, lemma, offering, pattern_slot.marks.pos)
            if not members:
                continue
            path = parse_class_path(offering.class_path)
            grade: ClassPrototypicality | None = None
            # A graded pattern with no annotated candidates for this slot is
            # missing evidence, not evidence of exclusion.
            if pattern_grade_value is not None and slot_candidates:
                grade = grade_class(path, slot_candidates, pattern_grade_value, self.grading)
                if grade.grade == ClassGrade.EXCLUDED:
                    continue
            lexemes = [lexeme for lexeme, _ in members]
            preview_member = (
                offering.preview_member if offering.preview_member in lexemes else lexemes[0]
            )
            packages.append(
                SemanticPackage(
                    class_path=path,
                    slot=slot.ref,
                    preview=self._preview(frame, pattern, slot, offering, preview_member),
                    members=tuple(lexemes),
                    number_policy=offering.number_policy,
                    grade=grade,
                )
            )
        return packages

    # --- generation ----------------------------------------------------------

    def _selected_members(
        self,
        language: str,
        lemma: str,
        pattern: RealizationPattern,
        slot_ref: SlotRef,
        selected_paths: list[str],
        slot_marks_pos: Pos | None,
    ) -> list[_Member]:
        offerings = pattern.offerings.get(slot_ref, [])
        by_path = {parse_class_path(o.class_path): o for o in offerings}
        if selected_paths == ["all"]:
            chosen = list(by_path)
        else:
            chosen = []
            for raw in selected_paths:
                path = parse_class_path(raw)
                if path not in by_path:
                    raise UnknownPath(
                        f"class {format_class_path(path)} is not offered for slot "
                        f"{format_slot_ref(slot_ref)} of pattern {pattern.id}"
                    )
                chosen.append(path)
        members: dict[str, _Member] = {}
        for path in chosen:
            offering = by_path[path]
            for lexeme, freq in self._package_members(language, lemma, offering, slot_marks_pos):
                members.setdefault(
                    lexeme,
                    _Member(
                        lexeme=lexeme,
                        frequency=freq,
                        class_path=path,
                        number_policy=offering.number_policy,
                    ),
                )
        ordered = sorted(members.values(), key=lambda m: (-m.frequency, m.lexeme))
        return ordered

    def _number_variants(
        self, pattern: RealizationPattern, slot_ref: SlotRef, member: _Member
    ) -> list[tuple[Number, Number | None]]:
        """(head_number, filler_number) combinations one member realizes.

        Slots realized inside the head group (compound modifiers, adjectival
        fillers) vary the head's number; noun fillers vary their own.
        """
        pattern_slot = next(s for s in pattern.bound_slots() if s.binds == slot_ref)
        in_head_group = pattern_slot.kind == SlotKind.COMPOUND_MODIFIER or (
            pattern_slot.marks.pos == Pos.ADJECTIVE
        )
        numbers = [Number.SG, Number.PL] if member.number_policy == "both" else [Number.SG]
        if in_head_group:
            return [(n, None) for n in numbers]
        return [(Number.SG, n) for n in numbers]

    def _ordered_adjectives(self, frame: ValencyFrame) -> list[str]:
        """Frame adjective pool, scored by cosine against the head where possible."""
        store = self.vectors.get(frame.language.value)
        scored = []
        for adj in frame.adjectives:
            sim = -2.0
            if store is not None and adj in store and frame.lemma in store:
                from .embeddings import cosine

                sim = cosine(adj, frame.lemma, store)
            scored.append((adj, sim))
        scored.sort(key=lambda pair: (-pair[1], pair[0]))
        return [adj for adj, _ in scored]

    def _assign_adjectives(
        self,
        frame: ValencyFrame,
        pattern: RealizationPattern,
        rng: random.Random,
    ) -> dict[int, str]:
        pool = self._ordered_adjectives(frame)
        if not pool:
            return {}
        return {
            pos: pool[rng.randrange(len(pool))]
            for pos, s in enumerate(pattern.slots)
            if s.kind == SlotKind.ADJECTIVE
        }

    def _realize_candidate(
        self,
        frame: ValencyFrame,
        pattern: RealizationPattern,
        fillers: dict[SlotRef, tuple[_Member, Number | None]],
        head_number: Number,
        adjectives: dict[int, str],
        similarity: float | None,
    ) -> GeneratedPhrase:
        binding = Binding(
            fillers={
                ref: FillerChoice(member.lexeme, number or Number.SG)
                for ref, (member, number) in fillers.items()
            },
            head_number=head_number,
            adjectives=adjectives,
        )
        realized = realize_np(pattern, binding, self.lexicons[frame.language.value])
        numbers = {"head": head_number.value}
        for ref, (_member, number) in fillers.items():
            if number is not None:
                numbers[format_slot_ref(ref)] = number.value
        return GeneratedPhrase(
            text=realized.text,
            pattern_id=pattern.id,
            slots={
                format_slot_ref(ref): member.lexeme for ref, (member, _) in fillers.items()
            },
            numbers=numbers,
            packages={
                format_slot_ref(ref): format_class_path(member.class_path)
                for ref, (member, _) in fillers.items()
            },
            adjectives={str(pos): lexeme for pos, lexeme in adjectives.items()},
            frequencies={
                member.lexeme: member.frequency for _, (member, _) in fillers.items()
            },
            similarity=similarity,
            trace=realized,
        )

    def _validate_request(
        self, request: GenerationRequest
    ) -> tuple[ValencyFrame, RealizationPattern, list[tuple[SlotRef, Pos | None, list[str]]]]:
        if request.limit < 0:
            raise ValueError("limit must be >= 0")
        frame, pattern = self._offered_pattern(
            request.language, request.lemma, request.pattern_id
        )
        bound = pattern.bound_slots()
        keys = ["a", "b"][: len(bound)]
        provided = {k: v for k, v in request.packages.items() if v}
        if sorted(provided) != keys:
            raise EmptyPackageSelection(
                f"pattern {pattern.id} is {pattern.arity}; expected package sets "
                f"{keys}, got {sorted(provided) or 'none'}"
            )
        slots = []
        for key, pattern_slot in zip(keys, bound):
            slots.append((pattern_slot.binds, pattern_slot.marks.pos, provided[key]))
        return frame, pattern, slots

    def generate_mono(self, request: GenerationRequest) -> tuple[list[GeneratedPhrase], GenerationStats]:
        frame, pattern, slots = self._validate_request(request)
        if pattern.arity != "mono":
            raise EmptyPackageSelection(f"pattern {pattern.id} is not monoargumental")
        slot_ref, slot_pos, selected = slots[0]
        members = self._selected_members(
            request.language, request.lemma, pattern, slot_ref, selected, slot_pos
        )
        candidates: list[tuple[tuple, dict[SlotRef, tuple[_Member, Number | None]], Number]] = []
        for member in members:
            for head_number, filler_number in self._number_variants(pattern, slot_ref, member):
                fillers = {slot_ref: (member, filler_number)}
                base = self._realize_candidate(
                    frame, pattern, fillers, head_number, {}, None
                )
                sort_key = (-member.frequency, member.lexeme, base.text)
                candidates.append((sort_key, fillers, head_number))
        candidates.sort(key=lambda c: c[0])
        kept = candidates[: request.limit]

        rng = random.Random(request.seed)
        phrases = []
        for _key, fillers, head_number in kept:
            adjectives = (
                self._assign_adjectives(frame, pattern, rng)
                if request.include_adjectives
                else {}
            )
            phrases.append(
                self._realize_candidate(frame, pattern, fillers, head_number, adjectives, None)
            )
        stats = GenerationStats(
            generated=len(candidates),
            filtered=0,
            truncated=len(candidates) - len(kept),
        )
        return phrases, stats

    def generate_bi(self, request: GenerationRequest) -> tuple[list[GeneratedPhrase], GenerationStats]:
        frame, pattern, slots = self._validate_request(request)
        if pattern.arity != "bi":
            raise EmptyPackageSelection(f"pattern {pattern.id} is not biargumental")
        (ref_a, pos_a, selected_a), (ref_b, pos_b, selected_b) = slots
        members_a = self._selected_members(
            request.language, request.lemma, pattern, ref_a, selected_a, pos_a
        )
        members_b = self._selected_members(
            request.language, request.lemma, pattern, ref_b, selected_b, pos_b
        )
        pairs = [(a.lexeme, b.lexeme) for a in members_a for b in members_b]
        store = self.vectors.get(request.language) or VectorStore(dimension=2)
        verdicts = compatibility_filter(pairs, request.compat_threshold, store)

        candidates = []
        rejected = 0
        index = 0
        for member_a in members_a:
            for member_b in members_b:
                verdict: CompatibilityVerdict = verdicts[index]
                index += 1
                if verdict.decision == Decision.REJECT:
                    rejected += 1
                    continue
                for head_a, fill_a in self._number_variants(pattern, ref_a, member_a):
                    for head_b, fill_b in self._number_variants(pattern, ref_b, member_b):
                        head_number = head_a if fill_a is None else head_b
                        fillers = {
                            ref_a: (member_a, fill_a),
                            ref_b: (member_b, fill_b),
                        }
                        base = self._realize_candidate(
                            frame, pattern, fillers, head_number, {}, verdict.similarity
                        )
                        sort_key = (
                            -min(member_a.frequency, member_b.frequency),
                            base.text,
                        )
                        candidates.append((sort_key, fillers, head_number, verdict.similarity))
        candidates.sort(key=lambda c: c[0])
        kept = candidates[: request.limit]

        rng = random.Random(request.seed)
        phrases = []
        for _key, fillers, head_number, similarity in kept:
            adjectives = (
                self._assign_adjectives(frame, pattern, rng)
                if request.include_adjectives
                else {}
            )
            phrases.append(
                self._realize_candidate(
                    frame, pattern, fillers, head_number, adjectives, similarity
                )
            )
        stats = GenerationStats(
            generated=len(candidates),
            filtered=rejected,
            truncated=len(candidates) - len(kept),
        )
        return phrases, stats

    def generate(self, request: GenerationRequest) -> tuple[list[GeneratedPhrase], GenerationStats]:
        frame = self.frame(request.language, request.lemma)
        pattern = self._pattern(frame, request.pattern_id)
        if pattern.arity == "bi":
            return self.generate_bi(request)
        return self.generate_mono(request)

    def recheck(self, language: str, phrase: GeneratedPhrase) -> bool:
        """Agreement re-check over the phrase's realization trace."""
        recheck_agreement(phrase.trace, self.lexicons[language])
        return True


# --- export ---------------------------------------------------------------------

def phrase_to_json_obj(phrase: GeneratedPhrase) -> dict:
    return {
        "text": phrase.text,
        "pattern_id": phrase.pattern_id,
        "slots": dict(phrase.slots),
        "scores": {
            "frequencies": dict(phrase.frequencies),
            "similarity": phrase.similarity,
        },
    }


def export_phrases(phrases: list[GeneratedPhrase], format: str = "json") -> bytes:
    """Serialize a phrase list; stable field order, bit-exact for equal inputs."""
    if format == "json":
        payload = json.dumps(
            [phrase_to_json_obj(p) for p in phrases], ensure_ascii=False, indent=2
        )
        return payload.encode("utf-8")
    if format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\r\n")
        writer.writerow(["text", "pattern_id", "slot_fillers", "similarity"])
        for p in phrases:
            fillers = ";".join(f"{ref}={lexeme}" for ref, lexeme in p.slots.items())
            similarity = "" if p.similarity is None else f"{p.similarity:.6f}"
            writer.writerow([p.text, p.pattern_id, fillers, similarity])
        return buffer.getvalue().encode("utf-8")
    raise ValueError(f"unsupported export format {format!r}")
