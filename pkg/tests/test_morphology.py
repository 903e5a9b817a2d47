"""Inflection tables, compounds, NP realization and the agreement re-check."""

import dataclasses

import pytest

from valgen.core import (
    Case,
    Definiteness,
    Gender,
    Language,
    Number,
    PatternSlot,
    RealizationPattern,
    SlotKind,
    SlotMarks,
)
from valgen.errors import (
    AgreementUnsatisfiable,
    InvalidFeatureCombination,
    MissingBinding,
    MissingForm,
    MissingLinkElement,
)
from valgen.morphology import (
    Binding,
    FillerChoice,
    compose_compound,
    inflect_adjective,
    inflect_determiner,
    inflect_noun,
    realize_np,
    recheck_agreement,
)


def det(case=None, definiteness="definite"):
    return PatternSlot(
        kind=SlotKind.DETERMINER,
        marks=SlotMarks(
            case=Case(case) if case else None,
            definiteness=Definiteness(definiteness),
        ),
    )


def filler(ref, case=None):
    return PatternSlot(
        kind=SlotKind.ARGUMENT_FILLER,
        marks=SlotMarks(case=Case(case) if case else None),
        binds=ref,
    )


def make_pattern(slots, language=Language.DE, head_ref="Text", pattern_id="test"):
    return RealizationPattern(
        id=pattern_id, language=language, slots=slots, head_ref=head_ref
    )


def test_inflect_noun_abb8_forms(de_lexicon):
    entries = de_lexicon.entries
    assert inflect_noun(entries["Akademikerin"], Case.GEN, Number.SG) == "Akademikerin"
    assert inflect_noun(entries["Gastprofessor"], Case.GEN, Number.SG) == "Gastprofessors"
    assert inflect_noun(entries["Erzieher"], Case.GEN, Number.PL) == "Erzieher"


def test_inflect_determiner_genitive_paradigm():
    assert inflect_determiner(Definiteness.DEFINITE, Gender.FEM, Case.GEN, Number.SG, Language.DE) == "der"
    assert inflect_determiner(Definiteness.DEFINITE, Gender.MASC, Case.GEN, Number.SG, Language.DE) == "des"
    assert inflect_determiner(Definiteness.DEFINITE, Gender.MASC, Case.NOM, Number.PL, Language.DE) == "die"


def test_inflect_determiner_invalid_combinations():
    with pytest.raises(InvalidFeatureCombination):
        inflect_determiner(Definiteness.INDEFINITE, Gender.MASC, Case.NOM, Number.PL, Language.DE)
    with pytest.raises(InvalidFeatureCombination):
        inflect_determiner(Definiteness.DEFINITE, Gender.MASC, Case.GEN, Number.SG, Language.ES)
    with pytest.raises(InvalidFeatureCombination):
        inflect_determiner(Definiteness.NONE, Gender.MASC, Case.NOM, Number.SG, Language.DE)


def test_inflect_adjective_weak_forms(de_lexicon):
    entries = de_lexicon.entries
    assert inflect_adjective(entries["langweilig"], "weak", Gender.MASC, Case.NOM, Number.SG) == "langweilige"
    assert inflect_adjective(entries["deutsch"], "weak", Gender.FEM, Case.GEN, Number.SG) == "deutschen"
    assert inflect_adjective(entries["alt"], "weak", Gender.MASC, Case.GEN, Number.SG) == "alten"


def test_inflect_missing_form(de_lexicon):
    with pytest.raises(MissingForm):
        inflect_noun(de_lexicon.entries["kurz"], Case.NOM, Number.SG)


def test_compose_compounds(de_lexicon):
    entries = de_lexicon.entries
    assert compose_compound(entries["Bemerkung"], entries["Text"]).lemma == "Bemerkungstext"
    assert compose_compound(entries["Antwort"], entries["Text"]).lemma == "Antworttext"
    assert compose_compound(entries["Kopf"], entries["Schmerz"]).lemma == "Kopfschmerz"


def test_compose_inherits_head_inflection(de_lexicon):
    entries = de_lexicon.entries
    composed = compose_compound(entries["Lösung"], entries["Text"])
    assert composed.gender is Gender.MASC
    assert inflect_noun(composed, Case.NOM, Number.PL) == "Lösungstexte"
    assert inflect_noun(composed, Case.GEN, Number.SG) == "Lösungstextes"


def test_compose_idempotent_nominative(de_lexicon):
    entries = de_lexicon.entries
    for modifier, head in (("Bemerkung", "Text"), ("Kopf", "Schmerz"), ("Auge", "Schmerz")):
        composed = compose_compound(entries[modifier], entries[head])
        assert inflect_noun(composed, Case.NOM, Number.SG) == composed.lemma


def test_compose_missing_link(de_lexicon):
    entries = de_lexicon.entries
    with pytest.raises(MissingLinkElement):
        compose_compound(entries["Lippenstift"], entries["Text"])


def test_realize_abb8_compound_phrase(de_lexicon):
    pattern = make_pattern([
        det(),
        PatternSlot(kind=SlotKind.COMPOUND_MODIFIER, binds=(5, 2)),
        PatternSlot(kind=SlotKind.HEAD),
        det(case="gen"),
        filler((1, 1), case="gen"),
    ])
    binding = Binding(fillers={
        (5, 2): FillerChoice("Bemerkung"),
        (1, 1): FillerChoice("Akademikerin"),
    })
    phrase = realize_np(pattern, binding, de_lexicon)
    assert phrase.text == "der Bemerkungstext der Akademikerin"
    recheck_agreement(phrase, de_lexicon)


def test_realize_plural_filler(de_lexicon):
    pattern = make_pattern([
        det(),
        PatternSlot(kind=SlotKind.COMPOUND_MODIFIER, binds=(5, 2)),
        PatternSlot(kind=SlotKind.HEAD),
        det(case="gen"),
        filler((1, 1), case="gen"),
    ])
    binding = Binding(fillers={
        (5, 2): FillerChoice("Antwort"),
        (1, 1): FillerChoice("Englischlehrer", Number.PL),
    })
    phrase = realize_np(pattern, binding, de_lexicon)
    assert phrase.text == "der Antworttext der Englischlehrer"
    recheck_agreement(phrase, de_lexicon)


def test_realize_missing_binding(de_lexicon):
    pattern = make_pattern([det(), PatternSlot(kind=SlotKind.HEAD), det(case="gen"),
                            filler((1, 1), case="gen")])
    with pytest.raises(MissingBinding):
        realize_np(pattern, Binding(), de_lexicon)


def test_realize_case_on_romance_group_fails(engine):
    lexicon = engine.lexicons["es"]
    pattern = make_pattern(
        [det(), PatternSlot(kind=SlotKind.HEAD), filler((1, 1), case="gen")],
        language=Language.ES, head_ref="texto",
    )
    binding = Binding(fillers={(1, 1): FillerChoice("guerra")})
    with pytest.raises(AgreementUnsatisfiable):
        realize_np(pattern, binding, lexicon)


def test_french_elision(engine):
    lexicon = engine.lexicons["fr"]
    pattern = make_pattern(
        [det(), PatternSlot(kind=SlotKind.HEAD)],
        language=Language.FR, head_ref="absence",
    )
    phrase = realize_np(pattern, Binding(), lexicon)
    assert phrase.text == "l'absence"
    recheck_agreement(phrase, lexicon)


def test_no_synthesized_forms(de_lexicon):
    pattern = make_pattern([
        det(),
        PatternSlot(kind=SlotKind.ADJECTIVE, optional=True),
        PatternSlot(kind=SlotKind.HEAD),
        det(case="gen"),
        filler((1, 1), case="gen"),
    ])
    binding = Binding(
        fillers={(1, 1): FillerChoice("Dozent")},
        adjectives={1: "kurz"},
    )
    phrase = realize_np(pattern, binding, de_lexicon)
    assert phrase.text == "der kurze Text des Dozenten"
    for token in phrase.tokens:
        kind = token.provenance[0]
        assert kind in ("entry", "determiner", "literal", "compound")
        if kind == "entry":
            entry = de_lexicon.entries[token.provenance[1]]
            cell = token.provenance[2]
            assert entry.forms[cell] == token.surface


def test_recheck_detects_tampering(de_lexicon):
    pattern = make_pattern([det(), PatternSlot(kind=SlotKind.HEAD), det(case="gen"),
                            filler((1, 1), case="gen")])
    binding = Binding(fillers={(1, 1): FillerChoice("Dozentin")})
    phrase = realize_np(pattern, binding, de_lexicon)
    broken = dataclasses.replace(phrase.tokens[1], surface="Texte")
    phrase.tokens[1] = broken
    with pytest.raises(AgreementUnsatisfiable):
        recheck_agreement(phrase, de_lexicon)


def test_recheck_every_entry_and_cell(engine):
    """Determiner + noun round-trips a unique analysis for every table cell."""
    import valgen.morphology as morphology

    for language, lexicon in engine.lexicons.items():
        for entry in lexicon.entries.values():
            if entry.pos.value != "noun":
                continue
            for key in entry.forms:
                if language == "de":
                    case_s, number_s = key.split(".")
                else:
                    _none, number_s = key.split(".")
                    case_s = "none"
                pattern = make_pattern(
                    [det(case=None if case_s == "none" else case_s),
                     PatternSlot(
                         kind=SlotKind.HEAD,
                         marks=SlotMarks(case=Case(case_s) if case_s != "none" else None),
                     )],
                    language=lexicon.language, head_ref=entry.id,
                )
                binding = Binding(head_number=Number(number_s))
                phrase = morphology.realize_np(pattern, binding, lexicon)
                recheck_agreement(phrase, lexicon)
