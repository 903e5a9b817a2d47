"""Surface realization: table-driven inflection, German compounds, NP agreement.

All inflection is explicit table lookup. Nothing is synthesized at runtime:
every emitted token is a declared table cell, a closed-class determiner, or a
pattern literal, and the realization trace records which.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    Case,
    Definiteness,
    Gender,
    Language,
    Number,
    Pos,
    RealizationPattern,
    SlotKind,
    SlotRef,
    format_slot_ref,
)
from .errors import (
    AgreementUnsatisfiable,
    InvalidFeatureCombination,
    MissingBinding,
    MissingForm,
    MissingLinkElement,
    SchemaError,
)

_DE_NOUN_CELLS = frozenset(
    f"{c.value}.{n.value}"
    for c in (Case.NOM, Case.GEN, Case.DAT, Case.ACC)
    for n in (Number.SG, Number.PL)
)
_ROMANCE_NOUN_CELLS = frozenset(f"none.{n.value}" for n in (Number.SG, Number.PL))
_DE_ADJ_CLASSES = ("weak", "mixed", "strong")


@dataclass(frozen=True)
class LexicalEntry:
    """One lexeme with its full explicit form table."""

    id: str
    lemma: str
    language: Language
    pos: Pos
    forms: dict[str, str]
    gender: Gender | None = None
    compound_link: str | None = None  # German linking element, e.g. "s" or ""


def _validate_noun_forms(entry_id: str, language: Language, forms: dict[str, str]) -> None:
    expected = _DE_NOUN_CELLS if language == Language.DE else _ROMANCE_NOUN_CELLS
    missing = expected - forms.keys()
    extra = forms.keys() - expected
    if missing:
        raise SchemaError(f"entry {entry_id}: missing noun cells {sorted(missing)}")
    if extra:
        raise SchemaError(f"entry {entry_id}: unexpected noun cells {sorted(extra)}")


def _validate_adjective_forms(entry_id: str, language: Language, forms: dict[str, str]) -> None:
    if language == Language.DE:
        classes = {key.split(".")[0] for key in forms}
        bad = classes - set(_DE_ADJ_CLASSES)
        if bad:
            raise SchemaError(f"entry {entry_id}: unknown declension classes {sorted(bad)}")
        if not classes:
            raise SchemaError(f"entry {entry_id}: adjective without any declension class")
        for cls in classes:
            for g in (Gender.MASC, Gender.FEM, Gender.NEUT):
                for c in (Case.NOM, Case.GEN, Case.DAT, Case.ACC):
                    for n in (Number.SG, Number.PL):
                        key = f"{cls}.{g.value}.{c.value}.{n.value}"
                        if key not in forms:
                            raise SchemaError(f"entry {entry_id}: missing adjective cell {key}")
    else:
        expected = {
            f"{g.value}.{n.value}"
            for g in (Gender.MASC, Gender.FEM)
            for n in (Number.SG, Number.PL)
        }
        missing = expected - forms.keys()
        if missing:
            raise SchemaError(f"entry {entry_id}: missing adjective cells {sorted(missing)}")


def parse_entry(obj: dict, language: Language) -> LexicalEntry:
    for key in ("id", "lemma", "pos", "forms"):
        if key not in obj:
            raise SchemaError(f"entry missing field {key!r}: {obj}")
    try:
        pos = Pos(obj["pos"])
    except ValueError as exc:
        raise SchemaError(f"entry {obj['id']}: invalid pos {obj['pos']!r}") from exc
    forms = {str(k): str(v) for k, v in obj["forms"].items()}
    gender = None
    if pos == Pos.NOUN:
        try:
            gender = Gender(obj.get("gender"))
        except ValueError as exc:
            raise SchemaError(f"entry {obj['id']}: noun needs a valid gender") from exc
        if gender == Gender.NEUT and language != Language.DE:
            raise SchemaError(f"entry {obj['id']}: neuter gender is German-only")
        _validate_noun_forms(str(obj["id"]), language, forms)
    else:
        _validate_adjective_forms(str(obj["id"]), language, forms)
    link = obj.get("compound_link")
    if link is not None and (pos != Pos.NOUN or language != Language.DE):
        raise SchemaError(f"entry {obj['id']}: compound_link is for German nouns only")
    return LexicalEntry(
        id=str(obj["id"]),
        lemma=str(obj["lemma"]),
        language=language,
        pos=pos,
        forms=forms,
        gender=gender,
        compound_link=link,
    )


def entry_to_json(entry: LexicalEntry) -> dict:
    obj: dict = {
        "id": entry.id,
        "lemma": entry.lemma,
        "pos": entry.pos.value,
        "forms": dict(entry.forms),
    }
    if entry.gender is not None:
        obj["gender"] = entry.gender.value
    if entry.compound_link is not None:
        obj["compound_link"] = entry.compound_link
    return obj


# --- closed determiner tables -------------------------------------------------

_DE_DEFINITE = {
    (Gender.MASC, Number.SG, Case.NOM): "der",
    (Gender.FEM, Number.SG, Case.NOM): "die",
    (Gender.NEUT, Number.SG, Case.NOM): "das",
    (Gender.MASC, Number.SG, Case.GEN): "des",
    (Gender.FEM, Number.SG, Case.GEN): "der",
    (Gender.NEUT, Number.SG, Case.GEN): "des",
    (Gender.MASC, Number.SG, Case.DAT): "dem",
    (Gender.FEM, Number.SG, Case.DAT): "der",
    (Gender.NEUT, Number.SG, Case.DAT): "dem",
    (Gender.MASC, Number.SG, Case.ACC): "den",
    (Gender.FEM, Number.SG, Case.ACC): "die",
    (Gender.NEUT, Number.SG, Case.ACC): "das",
}
for _g in (Gender.MASC, Gender.FEM, Gender.NEUT):
    _DE_DEFINITE[(_g, Number.PL, Case.NOM)] = "die"
    _DE_DEFINITE[(_g, Number.PL, Case.GEN)] = "der"
    _DE_DEFINITE[(_g, Number.PL, Case.DAT)] = "den"
    _DE_DEFINITE[(_g, Number.PL, Case.ACC)] = "die"

_DE_INDEFINITE = {
    (Gender.MASC, Number.SG, Case.NOM): "ein",
    (Gender.FEM, Number.SG, Case.NOM): "eine",
    (Gender.NEUT, Number.SG, Case.NOM): "ein",
    (Gender.MASC, Number.SG, Case.GEN): "eines",
    (Gender.FEM, Number.SG, Case.GEN): "einer",
    (Gender.NEUT, Number.SG, Case.GEN): "eines",
    (Gender.MASC, Number.SG, Case.DAT): "einem",
    (Gender.FEM, Number.SG, Case.DAT): "einer",
    (Gender.NEUT, Number.SG, Case.DAT): "einem",
    (Gender.MASC, Number.SG, Case.ACC): "einen",
    (Gender.FEM, Number.SG, Case.ACC): "eine",
    (Gender.NEUT, Number.SG, Case.ACC): "ein",
}

_ES_DEFINITE = {
    (Gender.MASC, Number.SG): "el",
    (Gender.FEM, Number.SG): "la",
    (Gender.MASC, Number.PL): "los",
    (Gender.FEM, Number.PL): "las",
}
_ES_INDEFINITE = {
    (Gender.MASC, Number.SG): "un",
    (Gender.FEM, Number.SG): "una",
    (Gender.MASC, Number.PL): "unos",
    (Gender.FEM, Number.PL): "unas",
}
_FR_DEFINITE = {
    (Gender.MASC, Number.SG): "le",
    (Gender.FEM, Number.SG): "la",
    (Gender.MASC, Number.PL): "les",
    (Gender.FEM, Number.PL): "les",
}
_FR_INDEFINITE = {
    (Gender.MASC, Number.SG): "un",
    (Gender.FEM, Number.SG): "une",
    (Gender.MASC, Number.PL): "des",
    (Gender.FEM, Number.PL): "des",
}

_VOWELS = "aeiouàâäéèêëîïôöùûüh"


def inflect_noun(entry: LexicalEntry, case: Case, number: Number) -> str:
    """Pure table lookup of one noun form; never synthesized."""
    if entry.pos != Pos.NOUN:
        raise MissingForm(f"{entry.id} is not a noun")
    key = f"{case.value}.{number.value}"
    try:
        return entry.forms[key]
    except KeyError as exc:
        raise MissingForm(f"entry {entry.id}: no cell {key}") from exc


def inflect_determiner(
    definiteness: Definiteness,
    gender: Gender,
    case: Case,
    number: Number,
    language: Language,
) -> str:
    if definiteness == Definiteness.NONE:
        raise InvalidFeatureCombination("determiner requires definite or indefinite")
    if language == Language.DE:
        if case == Case.NONE:
            raise InvalidFeatureCombination("German determiners carry a case")
        if definiteness == Definiteness.DEFINITE:
            return _DE_DEFINITE[(gender, number, case)]
        if number == Number.PL:
            raise InvalidFeatureCombination("German has no plural indefinite article")
        return _DE_INDEFINITE[(gender, number, case)]
    if case != Case.NONE:
        raise InvalidFeatureCombination(f"{language.value} determiners carry no case")
    if gender == Gender.NEUT:
        raise InvalidFeatureCombination(f"{language.value} has no neuter gender")
    table = {
        (Language.ES, Definiteness.DEFINITE): _ES_DEFINITE,
        (Language.ES, Definiteness.INDEFINITE): _ES_INDEFINITE,
        (Language.FR, Definiteness.DEFINITE): _FR_DEFINITE,
        (Language.FR, Definiteness.INDEFINITE): _FR_INDEFINITE,
    }[(language, definiteness)]
    return table[(gender, number)]


def inflect_adjective(
    entry: LexicalEntry,
    declension_class: str,
    gender: Gender,
    case: Case,
    number: Number,
) -> str:
    if entry.pos != Pos.ADJECTIVE:
        raise MissingForm(f"{entry.id} is not an adjective")
    if entry.language == Language.DE:
        key = f"{declension_class}.{gender.value}.{case.value}.{number.value}"
    else:
        key = f"{gender.value}.{number.value}"
    try:
        return entry.forms[key]
    except KeyError as exc:
        raise MissingForm(f"entry {entry.id}: no cell {key}") from exc


def compose_compound(modifier: LexicalEntry, head: LexicalEntry) -> LexicalEntry:
    """Join a German modifier noun and head noun; inflection follows the head."""
    if modifier.language != Language.DE or head.language != Language.DE:
        raise MissingLinkElement("compounds are German-only")
    if modifier.pos != Pos.NOUN or head.pos != Pos.NOUN:
        raise MissingLinkElement("compound parts must be nouns")
    if modifier.compound_link is None:
        raise MissingLinkElement(f"entry {modifier.id}: no linking element defined")
    stem = modifier.lemma + modifier.compound_link
    def join(head_form: str) -> str:
        joined = stem + head_form.lower()
        return joined[0].upper() + joined[1:]
    return LexicalEntry(
        id=f"{modifier.id}+{head.id}",
        lemma=join(head.lemma),
        language=Language.DE,
        pos=Pos.NOUN,
        forms={key: join(form) for key, form in head.forms.items()},
        gender=head.gender,
        compound_link=head.compound_link,
    )


# --- NP realization -----------------------------------------------------------

@dataclass(frozen=True)
class FillerChoice:
    lexeme_id: str
    number: Number = Number.SG


@dataclass
class Binding:
    """Concrete choices for one realization of a pattern."""

    fillers: dict[SlotRef, FillerChoice] = field(default_factory=dict)
    head_number: Number = Number.SG
    adjectives: dict[int, str] = field(default_factory=dict)  # slot position -> lexeme-id


@dataclass(frozen=True)
class TokenTrace:
    surface: str
    kind: SlotKind
    provenance: tuple  # ("entry", id, cell) | ("determiner", lang) | ("literal",)
    group: int
    joined_to_next: bool = False


@dataclass(frozen=True)
class GroupTrace:
    """One noun group with the feature assignment realization committed to."""

    index: int
    entry_id: str
    gender: Gender
    number: Number
    case: Case
    definiteness: Definiteness | None


@dataclass
class RealizedPhrase:
    text: str
    pattern_id: str
    tokens: list[TokenTrace]
    groups: list[GroupTrace]


def _elide_french(tokens: list[TokenTrace]) -> list[TokenTrace]:
    out: list[TokenTrace] = []
    for i, tok in enumerate(tokens):
        nxt = tokens[i + 1] if i + 1 < len(tokens) else None
        if (
            tok.kind == SlotKind.DETERMINER
            and tok.surface in ("le", "la")
            and nxt is not None
            and nxt.surface[:1].lower() in _VOWELS
        ):
            out.append(
                TokenTrace(
                    surface="l'",
                    kind=tok.kind,
                    provenance=tok.provenance,
                    group=tok.group,
                    joined_to_next=True,
                )
            )
        else:
            out.append(tok)
    return out


def _assemble(tokens: list[TokenTrace]) -> str:
    parts: list[str] = []
    for tok in tokens:
        parts.append(tok.surface)
        parts.append("" if tok.joined_to_next else " ")
    return "".join(parts).strip()


def _group_pattern(pattern: RealizationPattern) -> list[list[tuple[int, object]]]:
    """Split the slot sequence into noun groups ending at their nucleus.

    A nucleus is the head slot or a noun-valued argument filler; adjectival
    argument fillers belong to the group of the following nucleus.
    """
    groups: list[list[tuple[int, object]]] = []
    current: list[tuple[int, object]] = []
    for pos, slot in enumerate(pattern.slots):
        current.append((pos, slot))
        is_nucleus = slot.kind == SlotKind.HEAD or (
            slot.kind == SlotKind.ARGUMENT_FILLER and slot.marks.pos != Pos.ADJECTIVE
        )
        if is_nucleus:
            groups.append(current)
            current = []
    if current:
        raise SchemaError(f"pattern {pattern.id}: trailing slots without a nucleus")
    return groups


def realize_np(
    pattern: RealizationPattern,
    binding: Binding,
    lexicon,
    parenthesize_adjectives: bool = False,
) -> RealizedPhrase:
    """Realize one NP left-to-right with full agreement propagation."""
    entries = lexicon.entries
    language = pattern.language
    default_case = Case.NOM if language == Language.DE else Case.NONE

    tokens: list[TokenTrace] = []
    groups: list[GroupTrace] = []

    for gi, group in enumerate(_group_pattern(pattern)):
        nucleus_pos, nucleus = group[-1]

        # resolve the nucleus entry, case and number first
        if nucleus.kind == SlotKind.HEAD:
            entry = entries.get(pattern.head_ref)
            if entry is None:
                raise MissingBinding(f"pattern {pattern.id}: unknown head {pattern.head_ref!r}")
            number = binding.head_number
            compound_slots = [
                (p, s) for p, s in group if s.kind == SlotKind.COMPOUND_MODIFIER
            ]
            for _, cslot in compound_slots:
                choice = binding.fillers.get(cslot.binds)
                if choice is None:
                    raise MissingBinding(
                        f"pattern {pattern.id}: compound slot "
                        f"{format_slot_ref(cslot.binds)} unbound"
                    )
                modifier = entries.get(choice.lexeme_id)
                if modifier is None:
                    raise MissingBinding(f"unknown lexeme {choice.lexeme_id!r}")
                entry = compose_compound(modifier, entry)
        else:
            choice = binding.fillers.get(nucleus.binds)
            if choice is None:
                raise MissingBinding(
                    f"pattern {pattern.id}: filler slot "
                    f"{format_slot_ref(nucleus.binds)} unbound"
                )
            entry = entries.get(choice.lexeme_id)
            if entry is None:
                raise MissingBinding(f"unknown lexeme {choice.lexeme_id!r}")
            if entry.pos != Pos.NOUN:
                raise AgreementUnsatisfiable(
                    f"filler {entry.id} must be a noun for slot "
                    f"{format_slot_ref(nucleus.binds)}"
                )
            number = choice.number
        if nucleus.marks.number is not None:
            number = nucleus.marks.number
        case = nucleus.marks.case or default_case
        if language != Language.DE and case != Case.NONE:
            raise AgreementUnsatisfiable(
                f"{language.value} group cannot carry case {case.value}"
            )
        gender = entry.gender

        det_definiteness: Definiteness | None = None
        for _, slot in group:
            if slot.kind == SlotKind.DETERMINER:
                det_definiteness = slot.marks.definiteness or Definiteness.DEFINITE
        if det_definiteness == Definiteness.DEFINITE:
            adj_class = "weak"
        elif det_definiteness == Definiteness.INDEFINITE:
            adj_class = "mixed"
        else:
            adj_class = "strong"

        for pos, slot in group:
            if slot.kind == SlotKind.PREPOSITION:
                tokens.append(
                    TokenTrace(slot.fixed_text, slot.kind, ("literal",), gi)
                )
            elif slot.kind == SlotKind.DETERMINER:
                surface = inflect_determiner(det_definiteness, gender, case, number, language)
                tokens.append(
                    TokenTrace(surface, slot.kind, ("determiner", language.value), gi)
                )
            elif slot.kind == SlotKind.ADJECTIVE or (
                slot.kind == SlotKind.ARGUMENT_FILLER and slot.marks.pos == Pos.ADJECTIVE
            ):
                if slot.kind == SlotKind.ADJECTIVE:
                    lexeme = binding.adjectives.get(pos)
                    if lexeme is None:
                        if slot.optional:
                            continue
                        raise MissingBinding(f"pattern {pattern.id}: adjective slot {pos} unbound")
                else:
                    fchoice = binding.fillers.get(slot.binds)
                    if fchoice is None:
                        raise MissingBinding(
                            f"pattern {pattern.id}: filler slot "
                            f"{format_slot_ref(slot.binds)} unbound"
                        )
                    lexeme = fchoice.lexeme_id
                adj = entries.get(lexeme)
                if adj is None or adj.pos != Pos.ADJECTIVE:
                    raise MissingBinding(f"{lexeme!r} is not a known adjective")
                cell = f"{adj_class}.{gender.value}.{case.value}.{number.value}" \
                    if language == Language.DE else f"{gender.value}.{number.value}"
                surface = inflect_adjective(adj, adj_class, gender, case, number)
                if parenthesize_adjectives:
                    surface = f"({surface})"
                tokens.append(TokenTrace(surface, slot.kind, ("entry", adj.id, cell), gi))
            elif slot.kind == SlotKind.COMPOUND_MODIFIER:
                continue  # realized inside the composed nucleus
            else:  # nucleus
                cell = f"{case.value}.{number.value}"
                surface = inflect_noun(entry, case, number)
                provenance = (
                    ("compound", entry.id, cell)
                    if "+" in entry.id
                    else ("entry", entry.id, cell)
                )
                tokens.append(TokenTrace(surface, slot.kind, provenance, gi))

        groups.append(
            GroupTrace(
                index=gi,
                entry_id=entry.id,
                gender=gender,
                number=number,
                case=case,
                definiteness=det_definiteness,
            )
        )

    if language == Language.FR:
        tokens = _elide_french(tokens)
    return RealizedPhrase(
        text=_assemble(tokens),
        pattern_id=pattern.id,
        tokens=tokens,
        groups=groups,
    )


# --- agreement re-check ---------------------------------------------------------

def _determiner_candidates(language: Language, surface: str) -> set[tuple[Gender, Number, Case]]:
    found: set[tuple[Gender, Number, Case]] = set()
    if language == Language.DE:
        for table in (_DE_DEFINITE, _DE_INDEFINITE):
            for (g, n, c), form in table.items():
                if form == surface:
                    found.add((g, n, c))
        return found
    tables = (
        (_ES_DEFINITE, _ES_INDEFINITE) if language == Language.ES else (_FR_DEFINITE, _FR_INDEFINITE)
    )
    for table in tables:
        for (g, n), form in table.items():
            if form == surface:
                found.add((g, n, Case.NONE))
    if language == Language.FR and surface == "l'":
        found.update({(Gender.MASC, Number.SG, Case.NONE), (Gender.FEM, Number.SG, Case.NONE)})
    return found


def _entry_candidates(entry: LexicalEntry, surface: str) -> set[tuple[Gender, Number, Case]]:
    found: set[tuple[Gender, Number, Case]] = set()
    bare = surface[1:-1] if surface.startswith("(") and surface.endswith(")") else surface
    for key, form in entry.forms.items():
        if form != bare:
            continue
        parts = key.split(".")
        if entry.pos == Pos.NOUN:
            case, number = Case(parts[0]), Number(parts[1])
            found.add((entry.gender, number, case))
        elif entry.language == Language.DE:
            _cls, g, c, n = parts
            found.add((Gender(g), Number(n), Case(c)))
        else:
            g, n = parts
            found.add((Gender(g), Number(n), Case.NONE))
    return found


def recheck_agreement(phrase: RealizedPhrase, lexicon) -> list[GroupTrace]:
    """Re-analyze every emitted form; verify one consistent assignment per group.

    Each determiner/adjective/noun of a group must share exactly the gender,
    number and case the derivation claims, once the group's required case is
    imposed. Raises AgreementUnsatisfiable otherwise.
    """
    verified: list[GroupTrace] = []
    for group in phrase.groups:
        candidate_sets: list[set[tuple[Gender, Number, Case]]] = []
        for tok in phrase.tokens:
            if tok.group != group.index or tok.provenance[0] == "literal":
                continue
            if tok.provenance[0] == "determiner":
                candidate_sets.append(
                    _determiner_candidates(Language(tok.provenance[1]), tok.surface)
                )
            else:
                entry_id = tok.provenance[1]
                entry = lexicon.entries.get(entry_id)
                if entry is None and tok.provenance[0] == "compound":
                    mod_id, head_id = entry_id.split("+", 1)
                    entry = compose_compound(lexicon.entries[mod_id], lexicon.entries[head_id])
                if entry is None:
                    raise AgreementUnsatisfiable(f"token {tok.surface!r}: unknown entry {entry_id!r}")
                candidate_sets.append(_entry_candidates(entry, tok.surface))
        if not candidate_sets:
            continue
        consistent = set.intersection(*candidate_sets)
        consistent = {t for t in consistent if t[2] == group.case}
        claimed = (group.gender, group.number, group.case)
        if consistent != {claimed}:
            raise AgreementUnsatisfiable(
                f"group {group.index} ({group.entry_id}): expected exactly {claimed}, "
                f"re-analysis found {sorted(consistent) if consistent else 'nothing'}"
            )
        verified.append(group)
    return verified
