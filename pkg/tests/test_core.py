"""Lexicon model: loading, validation, round-trips, the 20-noun inventory."""

import json

import pytest

from valgen.core import (
    Gender,
    Language,
    SCENES,
    load_lexicon,
    lexicon_to_json,
    validate_frame,
)
from valgen.errors import DanglingReference, DuplicateId, SchemaError

TAB1_NOUNS = {
    "de": {
        "Flucht", "Reise", "Umzug", "Anwesenheit", "Abwesenheit", "Aufenthalt",
        "Gespräch", "Diskussion", "Frage", "Antwort", "Text", "Video",
        "Tod", "Zunahme", "Schmerz", "Liebe",
        "Geruch", "Geschmack", "Farbe", "Breite",
    },
    "es": {
        "huida", "viaje", "mudanza", "presencia", "ausencia", "estancia",
        "conversación", "discusión", "pregunta", "respuesta", "texto", "video",
        "muerte", "aumento", "dolor", "amor",
        "olor", "sabor", "color", "anchura",
    },
    "fr": {
        "fuite", "voyage", "déménagement", "présence", "absence", "séjour",
        "conversation", "discussion", "question", "réponse", "texte", "vidéo",
        "mort", "augmentation", "douleur", "amour",
        "odeur", "saveur", "couleur", "largeur",
    },
}


def minimal_lexicon(frame_overrides=None, pattern_overrides=None):
    """A one-frame German lexicon document for mutation tests."""
    pattern = {
        "id": "det+Ding+gen+N1a",
        "label": "test pattern",
        "slots": [
            {"kind": "determiner", "definiteness": "definite"},
            {"kind": "head"},
            {"kind": "determiner", "definiteness": "definite", "case": "gen"},
            {"kind": "argument_filler", "binds": "1.1", "case": "gen"},
        ],
    }
    if pattern_overrides:
        pattern.update(pattern_overrides)
    frame = {
        "lemma": "Ding",
        "gender": "neut",
        "inflection_ref": "Ding",
        "scene": "KLASSIFIKATION",
        "slots": [{"index": 1, "variant": 1, "role": "AGENS"}],
        "patterns": [pattern],
    }
    if frame_overrides:
        frame.update(frame_overrides)
    return {
        "language": "de",
        "frames": [frame],
        "entries": [
            {
                "id": "Ding", "lemma": "Ding", "pos": "noun", "gender": "neut",
                "forms": {
                    "nom.sg": "Ding", "gen.sg": "Dings", "dat.sg": "Ding",
                    "acc.sg": "Ding", "nom.pl": "Dinge", "gen.pl": "Dinge",
                    "dat.pl": "Dingen", "acc.pl": "Dinge",
                },
            }
        ],
    }


def write_lexicon(tmp_path, doc):
    path = tmp_path / "lexicon.json"
    path.write_text(json.dumps(doc, ensure_ascii=False), encoding="utf-8")
    return path


def test_text_frame_slots(de_lexicon):
    frame = de_lexicon.frame("Text")
    refs = {slot.ref for slot in frame.slots}
    assert refs == {(1, 1), (1, 3), (1, 4), (2, 1), (3, 1), (4, 1), (4, 2), (5, 1), (5, 2)}


def test_empty_lexicon(tmp_path):
    path = write_lexicon(tmp_path, {"language": "de", "frames": [], "entries": []})
    lexicon = load_lexicon(path)
    assert lexicon.frames == {} and lexicon.entries == {}


def test_dangling_slot_reference(tmp_path):
    doc = minimal_lexicon(pattern_overrides={
        "slots": [
            {"kind": "determiner"},
            {"kind": "head"},
            {"kind": "argument_filler", "binds": "9.1", "case": "gen"},
        ]
    })
    with pytest.raises(DanglingReference):
        load_lexicon(write_lexicon(tmp_path, doc))


def test_unknown_language_rejected(tmp_path):
    path = write_lexicon(tmp_path, {"language": "it", "frames": [], "entries": []})
    with pytest.raises(SchemaError):
        load_lexicon(path)


def test_duplicate_entry_id(tmp_path):
    doc = minimal_lexicon()
    doc["entries"].append(doc["entries"][0])
    with pytest.raises(DuplicateId):
        load_lexicon(write_lexicon(tmp_path, doc))


def test_validate_wellformed_frame(de_lexicon):
    frame = de_lexicon.frame("Text")
    assert validate_frame(frame, de_lexicon.entries) == []


def test_validate_two_head_slots(tmp_path):
    doc = minimal_lexicon(pattern_overrides={
        "slots": [
            {"kind": "head"},
            {"kind": "head"},
            {"kind": "argument_filler", "binds": "1.1", "case": "gen"},
        ]
    })
    with pytest.raises(SchemaError, match="multiple head slots"):
        load_lexicon(write_lexicon(tmp_path, doc))


def test_validate_unknown_scene(tmp_path):
    # the oracle is the closed five-label scene set itself
    assert "WETTER" not in SCENES
    doc = minimal_lexicon(frame_overrides={"scene": "WETTER"})
    with pytest.raises(SchemaError, match="scene"):
        load_lexicon(write_lexicon(tmp_path, doc))


def test_loaded_frames_all_validate(engine):
    # load/validate agreement: whatever loaded must re-validate clean
    for lexicon in engine.lexicons.values():
        for frame in lexicon.frames.values():
            assert validate_frame(frame, lexicon.entries) == []


def test_lexicon_roundtrip(tmp_path, data_dir):
    original = load_lexicon(data_dir / "lexicon.de.json")
    path = tmp_path / "roundtrip.json"
    path.write_text(json.dumps(lexicon_to_json(original), ensure_ascii=False), encoding="utf-8")
    reloaded = load_lexicon(path)
    assert reloaded.language == original.language
    assert reloaded.entries == original.entries
    assert set(reloaded.frames) == set(original.frames)
    for key, frame in original.frames.items():
        other = reloaded.frames[key]
        assert other.slots == frame.slots
        assert other.patterns == frame.patterns
        assert (other.gender, other.scene, other.adjectives) == (
            frame.gender, frame.scene, frame.adjectives,
        )


@pytest.mark.parametrize("language", ["de", "es", "fr"])
def test_twenty_nouns_per_language(engine, language):
    lemmas = {lemma for (_, lemma) in engine.lexicons[language].frames}
    assert lemmas == TAB1_NOUNS[language]


def test_sixty_frames_total(engine):
    total = sum(len(lex.frames) for lex in engine.lexicons.values())
    assert total == 60


def test_language_and_gender_enums():
    assert {lang.value for lang in Language} == {"de", "es", "fr"}
    assert Gender("neut") is Gender.NEUT
    with pytest.raises(ValueError):
        Language("it")


def test_pattern_ids_unique_per_lexicon(tmp_path):
    doc = minimal_lexicon()
    second = json.loads(json.dumps(doc["frames"][0]))
    second["lemma"] = "Geruch"
    second["inflection_ref"] = "Ding"
    second["gender"] = "neut"
    doc["frames"].append(second)  # reuses the same pattern id
    with pytest.raises(DuplicateId):
        load_lexicon(write_lexicon(tmp_path, doc))
