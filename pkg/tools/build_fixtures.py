#!/usr/bin/env python3
"""Regenerate the fixture bundle under src/valgen/data/.

Entry form tables, ontology membership, frequency tables and the engineered
vector store are all emitted from the literals below so that plurals,
per-million columns and cross-references stay mutually consistent.

Run from the repository root:  python tools/build_fixtures.py
"""

from __future__ import annotations

import json
import zlib
from pathlib import Path

import numpy as np

DATA = Path(__file__).resolve().parents[1] / "src" / "valgen" / "data"

#: derived once from the rank-1 row of the German genitive table:
#: 1913 hits at 0.09658 per million.
CORPUS = 19_807_413_544

SCENE_BY_NOUN_DE = {
    "Flucht": "BEWEGUNG", "Reise": "BEWEGUNG", "Umzug": "BEWEGUNG",
    "Anwesenheit": "LOKATION", "Abwesenheit": "LOKATION", "Aufenthalt": "LOKATION",
    "Gespräch": "AUSDRUCK", "Diskussion": "AUSDRUCK", "Frage": "AUSDRUCK",
    "Antwort": "AUSDRUCK", "Text": "AUSDRUCK", "Video": "AUSDRUCK",
    "Tod": "AFFIZIERTHEIT", "Zunahme": "AFFIZIERTHEIT", "Schmerz": "AFFIZIERTHEIT",
    "Liebe": "AFFIZIERTHEIT",
    "Geruch": "KLASSIFIKATION", "Geschmack": "KLASSIFIKATION",
    "Farbe": "KLASSIFIKATION", "Breite": "KLASSIFIKATION",
}
SCENE_BY_NOUN_ES = {
    "huida": "BEWEGUNG", "viaje": "BEWEGUNG", "mudanza": "BEWEGUNG",
    "presencia": "LOKATION", "ausencia": "LOKATION", "estancia": "LOKATION",
    "conversación": "AUSDRUCK", "discusión": "AUSDRUCK", "pregunta": "AUSDRUCK",
    "respuesta": "AUSDRUCK", "texto": "AUSDRUCK", "video": "AUSDRUCK",
    "muerte": "AFFIZIERTHEIT", "aumento": "AFFIZIERTHEIT", "dolor": "AFFIZIERTHEIT",
    "amor": "AFFIZIERTHEIT",
    "olor": "KLASSIFIKATION", "sabor": "KLASSIFIKATION",
    "color": "KLASSIFIKATION", "anchura": "KLASSIFIKATION",
}
SCENE_BY_NOUN_FR = {
    "fuite": "BEWEGUNG", "voyage": "BEWEGUNG", "déménagement": "BEWEGUNG",
    "présence": "LOKATION", "absence": "LOKATION", "séjour": "LOKATION",
    "conversation": "AUSDRUCK", "discussion": "AUSDRUCK", "question": "AUSDRUCK",
    "réponse": "AUSDRUCK", "texte": "AUSDRUCK", "vidéo": "AUSDRUCK",
    "mort": "AFFIZIERTHEIT", "augmentation": "AFFIZIERTHEIT", "douleur": "AFFIZIERTHEIT",
    "amour": "AFFIZIERTHEIT",
    "odeur": "KLASSIFIKATION", "saveur": "KLASSIFIKATION",
    "couleur": "KLASSIFIKATION", "largeur": "KLASSIFIKATION",
}


# --- German entry helpers ----------------------------------------------------

def de_noun(lemma, gender, gen_sg, nom_pl, dat_pl=None, link=None, entry_id=None):
    if dat_pl is None:
        dat_pl = nom_pl if nom_pl[-1] in "ns" else nom_pl + "n"
    entry = {
        "id": entry_id or lemma,
        "lemma": lemma,
        "pos": "noun",
        "gender": gender,
        "forms": {
            "nom.sg": lemma, "gen.sg": gen_sg, "dat.sg": lemma, "acc.sg": lemma,
            "nom.pl": nom_pl, "gen.pl": nom_pl, "dat.pl": dat_pl, "acc.pl": nom_pl,
        },
    }
    if link is not None:
        entry["compound_link"] = link
    return entry


def de_weak_noun(lemma, link=None):
    """Masculine n-declension: every cell but nom.sg carries -en."""
    oblique = lemma + "en"
    entry = de_noun(lemma, "masc", oblique, oblique, oblique)
    for cell in ("dat.sg", "acc.sg"):
        entry["forms"][cell] = oblique
    if link is not None:
        entry["compound_link"] = link
    return entry


def de_fem(lemma, nom_pl=None, link=None):
    if nom_pl is None:
        if lemma.endswith("e"):
            nom_pl = lemma + "n"
        elif lemma.endswith("in"):
            nom_pl = lemma + "nen"
        else:
            nom_pl = lemma + "en"
    return de_noun(lemma, "fem", lemma, nom_pl, link=link)


def de_adjective(lemma):
    stem = lemma
    forms = {}
    genders = ("masc", "fem", "neut")
    cases = ("nom", "gen", "dat", "acc")
    strong = {
        ("nom", "masc"): "er", ("nom", "fem"): "e", ("nom", "neut"): "es",
        ("gen", "masc"): "en", ("gen", "fem"): "er", ("gen", "neut"): "en",
        ("dat", "masc"): "em", ("dat", "fem"): "er", ("dat", "neut"): "em",
        ("acc", "masc"): "en", ("acc", "fem"): "e", ("acc", "neut"): "es",
    }
    strong_pl = {"nom": "e", "gen": "er", "dat": "en", "acc": "e"}
    for g in genders:
        for c in cases:
            weak_sg = "e" if (c == "nom" or (c == "acc" and g != "masc")) else "en"
            if c == "nom":
                mixed_sg = {"masc": "er", "fem": "e", "neut": "es"}[g]
            elif c == "acc":
                mixed_sg = {"masc": "en", "fem": "e", "neut": "es"}[g]
            else:
                mixed_sg = "en"
            forms[f"weak.{g}.{c}.sg"] = stem + weak_sg
            forms[f"mixed.{g}.{c}.sg"] = stem + mixed_sg
            forms[f"strong.{g}.{c}.sg"] = stem + strong[(c, g)]
            forms[f"weak.{g}.{c}.pl"] = stem + "en"
            forms[f"mixed.{g}.{c}.pl"] = stem + "en"
            forms[f"strong.{g}.{c}.pl"] = stem + strong_pl[c]
    return {"id": lemma, "lemma": lemma, "pos": "adjective", "forms": forms}


# --- Spanish / French entry helpers -------------------------------------------

def es_plural(word):
    if word.endswith("ión"):
        return word[:-3] + "iones"
    if word[-1] in "aeiouáéíóú":
        return word + "s"
    return word + "es"


def es_noun(lemma, gender, pl=None):
    pl = pl or es_plural(lemma)
    return {
        "id": lemma, "lemma": lemma, "pos": "noun", "gender": gender,
        "forms": {"none.sg": lemma, "none.pl": pl},
    }


def fr_noun(lemma, gender, pl=None):
    pl = pl or lemma + "s"
    return {
        "id": lemma, "lemma": lemma, "pos": "noun", "gender": gender,
        "forms": {"none.sg": lemma, "none.pl": pl},
    }


def es_adjective(lemma, fem=None):
    fem = fem or (lemma[:-1] + "a" if lemma.endswith("o") else lemma)
    return {
        "id": lemma, "lemma": lemma, "pos": "adjective",
        "forms": {
            "masc.sg": lemma, "fem.sg": fem,
            "masc.pl": es_plural(lemma), "fem.pl": es_plural(fem),
        },
    }


def fr_adjective(lemma, fem=None, masc_pl=None, fem_pl=None):
    fem = fem or (lemma if lemma.endswith("e") else lemma + "e")
    return {
        "id": lemma, "lemma": lemma, "pos": "adjective",
        "forms": {
            "masc.sg": lemma, "fem.sg": fem,
            "masc.pl": masc_pl or lemma + "s", "fem.pl": fem_pl or fem + "s",
        },
    }


# --- German inventory -----------------------------------------------------------

DE_HEADS = [
    de_noun("Text", "masc", "Textes", "Texte"),
    de_noun("Schmerz", "masc", "Schmerzes", "Schmerzen"),
    de_fem("Farbe"),
    de_fem("Diskussion"),
    de_fem("Antwort", link=""),
    de_fem("Frage"),
    de_noun("Gespräch", "neut", "Gesprächs", "Gespräche"),
    de_noun("Video", "neut", "Videos", "Videos"),
    de_noun("Tod", "masc", "Todes", "Tode"),
    de_fem("Zunahme"),
    de_fem("Liebe"),
    de_noun("Geruch", "masc", "Geruchs", "Gerüche"),
    de_noun("Geschmack", "masc", "Geschmacks", "Geschmäcker"),
    de_fem("Breite"),
    de_fem("Flucht"),
    de_fem("Reise"),
    de_noun("Umzug", "masc", "Umzugs", "Umzüge"),
    de_fem("Anwesenheit"),
    de_fem("Abwesenheit"),
    de_noun("Aufenthalt", "masc", "Aufenthalts", "Aufenthalte"),
]

# class path -> (member entries, per-member corpus frequency for ordering)
DE_CLASSES = {
    "belebt.menschlich.beruf.ausbildung": [
        (de_fem("Akademikerin"), 2950),
        (de_noun("Akademiker", "masc", "Akademikers", "Akademiker"), 2940),
        (de_weak_noun("Dozent"), 2930),
        (de_fem("Dozentin"), 2920),
        (de_noun("Englischlehrer", "masc", "Englischlehrers", "Englischlehrer"), 2910),
        (de_fem("Englischlehrerin"), 2905),
        (de_noun("Erzieher", "masc", "Erziehers", "Erzieher"), 2895),
        (de_fem("Erzieherin"), 2890),
        (de_noun("Gastprofessor", "masc", "Gastprofessors", "Gastprofessoren"), 2885),
        (de_fem("Gastprofessorin"), 2880),
        (de_noun("Hochschullehrer", "masc", "Hochschullehrers", "Hochschullehrer"), 2875),
        (de_fem("Hochschullehrerin"), 2870),
    ],
    "belebt.menschlich.beruf": [
        (de_noun("Detektiv", "masc", "Detektivs", "Detektive"), 2600),
        (de_noun("Autor", "masc", "Autors", "Autoren"), 844),
        (de_fem("Autorin"), 331),
        (de_weak_noun("Architekt"), 280),
        (de_fem("Journalistin"), 275),
        (de_noun("Dichter", "masc", "Dichters", "Dichter"), 250),
        (de_noun("Künstler", "masc", "Künstlers", "Künstler"), 240),
        (de_noun("Schriftsteller", "masc", "Schriftstellers", "Schriftsteller"), 160),
        (de_noun("Sänger", "masc", "Sängers", "Sänger"), 155),
        (de_weak_noun("Philosoph"), 152),
        (de_noun("Hersteller", "masc", "Herstellers", "Hersteller"), 150),
        (de_noun("Lehrer", "masc", "Lehrers", "Lehrer"), 145),
        (de_fem("Lehrerin"), 143),
        (de_noun("Professor", "masc", "Professors", "Professoren"), 141),
        (de_fem("Professorin"), 139),
        (de_noun("Forscher", "masc", "Forschers", "Forscher"), 137),
        (de_fem("Forscherin"), 135),
        (de_noun("Übersetzer", "masc", "Übersetzers", "Übersetzer"), 133),
        (de_fem("Übersetzerin"), 131),
        (de_noun("Redakteur", "masc", "Redakteurs", "Redakteure"), 129),
        (de_fem("Redakteurin"), 127),
        (de_noun("Wissenschaftler", "masc", "Wissenschaftlers", "Wissenschaftler"), 125),
        (de_fem("Wissenschaftlerin"), 123),
        (de_noun("Maler", "masc", "Malers", "Maler"), 121),
        (de_fem("Malerin"), 119),
        (de_noun("Musiker", "masc", "Musikers", "Musiker"), 117),
        (de_fem("Musikerin"), 115),
        (de_noun("Regisseur", "masc", "Regisseurs", "Regisseure"), 113),
        (de_fem("Regisseurin"), 111),
        (de_weak_noun("Fotograf"), 109),
        (de_fem("Fotografin"), 107),
        (de_noun("Ingenieur", "masc", "Ingenieurs", "Ingenieure"), 105),
        (de_fem("Ingenieurin"), 103),
    ],
    "belebt.menschlich.eigenschaft": [
        (de_noun("Schüler", "masc", "Schülers", "Schüler"), 420),
        (de_noun("Teilnehmer", "masc", "Teilnehmers", "Teilnehmer"), 410),
    ],
    "belebt.menschlich.organisation.unternehmen": [
        (de_noun("Konzern", "masc", "Konzerns", "Konzerne"), 1100),
        (de_noun("Verlag", "masc", "Verlags", "Verlage"), 1000),
        (de_noun("Firma", "fem", "Firma", "Firmen"), 500),
        (de_fem("Bank", "Banken"), 450),
        (de_fem("Fabrik"), 440),
        (de_noun("Unternehmen", "neut", "Unternehmens", "Unternehmen"), 430),
    ],
    "belebt.menschlich.organisation.bildung": [
        (de_fem("Hochschule"), 1050),
        (de_fem("Uni", "Unis"), 1040),
        (de_fem("Universität"), 1030),
        (de_fem("Schule"), 1020),
        (de_fem("Akademie", "Akademien"), 1010),
        (de_noun("Institut", "neut", "Instituts", "Institute"), 1005),
        (de_fem("Fakultät"), 995),
    ],
    "belebt.menschlich.organisation.politik": [
        (de_noun("Nato", "fem", "Nato", "Natos"), 950),
        (de_noun("EU", "fem", "EU", "EUs"), 940),
        (de_fem("Partei"), 930),
        (de_noun("Bundestag", "masc", "Bundestags", "Bundestage"), 215),
        (de_noun("Uno", "fem", "Uno", "Unos"), 205),
    ],
    "belebt.menschlich.organisation.regierungsgebunden": [
        (de_fem("Bundesregierung"), 4650),
        (de_fem("Landesregierung"), 920),
        (de_noun("Senat", "masc", "Senats", "Senate"), 810),
        (de_fem("Regierung"), 370),
        (de_fem("Verwaltung"), 350),
        (de_fem("Behörde"), 340),
        (de_noun("Ministerium", "neut", "Ministeriums", "Ministerien"), 320),
        (de_fem("Stadtverwaltung"), 310),
    ],
    "belebt.menschlich.organisation.militär": [
        (de_fem("Polizei", "Polizeien"), 900),
        (de_fem("Armee"), 405),
        (de_fem("Bundeswehr"), 305),
    ],
    "belebt.menschlich.verein.freizeit": [
        (de_noun("Verein", "masc", "Vereins", "Vereine"), 980),
        (de_noun("Club", "masc", "Clubs", "Clubs"), 402),
        (de_noun("Sportverein", "masc", "Sportvereins", "Sportvereine"), 390),
    ],
    "belebt.menschlich.familie": [
        (de_fem("Cousine"), 800),
        (de_noun("Mutter", "fem", "Mutter", "Mütter"), 638),
        (de_noun("Onkel", "masc", "Onkels", "Onkel"), 398),
        (de_fem("Tante"), 396),
        (de_fem("Schwester", "Schwestern"), 394),
        (de_noun("Bruder", "masc", "Bruders", "Brüder"), 392),
        (de_noun("Cousin", "masc", "Cousins", "Cousins"), 388),
        (de_fem("Nichte"), 386),
        (de_noun("Oma", "fem", "Oma", "Omas"), 384),
        (de_noun("Opa", "masc", "Opas", "Opas"), 382),
    ],
    "belebt.menschlich.ideologie.politik": [
        (de_weak_noun("Faschist"), 700),
        (de_weak_noun("Kommunist"), 360),
        (de_weak_noun("Sozialist"), 355),
    ],
    "belebt.menschlich.amt": [
        (de_fem("Geschäftsführerin"), 850),
        (de_noun("Papst", "masc", "Papstes", "Päpste"), 840),
        (de_fem("Direktorin"), 302),
        (de_fem("Ministerin"), 300),
    ],
    "belebt.menschlich.glaube": [
        (de_noun("Agnostiker", "masc", "Agnostikers", "Agnostiker"), 750),
        (de_weak_noun("Atheist"), 740),
        (de_weak_noun("Christ"), 730),
        (de_weak_noun("Buddhist"), 720),
    ],
    "belebt.menschlich.eigename": [
        (de_noun("Paulus", "masc", "Paulus", "Paulus", "Paulus"), 260),
        (de_noun("Mia", "fem", "Mia", "Mias"), 255),
        (de_noun("Lena", "fem", "Lena", "Lenas"), 251),
        (de_noun("Paul", "masc", "Pauls", "Pauls"), 245),
        (de_noun("Anna", "fem", "Anna", "Annas"), 241),
    ],
    "belebt.menschlich.kollektiv": [
        (de_noun("Jury", "fem", "Jury", "Jurys"), 230),
        (de_noun("Team", "neut", "Teams", "Teams"), 228),
        (de_noun("Komitee", "neut", "Komitees", "Komitees"), 226),
    ],
    "belebt.menschlich.körperteil.extern": [
        (de_noun("Kopf", "masc", "Kopfes", "Köpfe", link=""), 188950),
        (de_noun("Rücken", "masc", "Rückens", "Rücken", link=""), 92363),
        (de_noun("Bauch", "masc", "Bauchs", "Bäuche", link=""), 45907),
        (de_noun("Zahn", "masc", "Zahns", "Zähne", link=""), 31200),
        (de_noun("Nacken", "masc", "Nackens", "Nacken", link=""), 18300),
        (de_fem("Brust", "Brüste", link=""), 12900),
        (de_noun("Auge", "neut", "Auges", "Augen", link="n"), 1949),
        (de_noun("Arm", "masc", "Arms", "Arme", link=""), 705),
        (de_fem("Hand", "Hände", link=""), 702),
        (de_noun("Bein", "neut", "Beins", "Beine", link=""), 685),
        (de_noun("Fuß", "masc", "Fußes", "Füße", link=""), 672),
        (de_fem("Schulter", "Schultern", link=""), 662),
        (de_noun("Knie", "neut", "Knies", "Knie", "Knien", link=""), 652),
        (de_noun("Hals", "masc", "Halses", "Hälse", link=""), 645),
    ],
    "belebt.menschlich.körperteil.intern.muskel/knochen": [
        (de_noun("Muskel", "masc", "Muskels", "Muskeln", link=""), 21500),
        (de_noun("Gelenk", "neut", "Gelenks", "Gelenke", link=""), 28400),
        (de_noun("Knochen", "masc", "Knochens", "Knochen", link=""), 633),
        (de_fem("Sehne", link="n"), 622),
    ],
    "belebt.menschlich.körperteil.beschichtung": [
        (de_fem("Haut", "Häute", link=""), 285),
        (de_noun("Haar", "neut", "Haars", "Haare", link=""), 402),
        (de_noun("Nagel", "masc", "Nagels", "Nägel", link=""), 612),
    ],
    "belebt.menschlich.körperteil.organ": [
        (de_noun("Eierstock", "masc", "Eierstocks", "Eierstöcke", link=""), 100),
        (de_noun("Magen", "masc", "Magens", "Mägen", link=""), 92),
        (de_fem("Niere", link="n"), 87),
        (de_fem("Lunge", link="n"), 82),
    ],
    "materiell.gegenstand.schönheitspflege.kosmetik": [
        (de_noun("Lippenstift", "masc", "Lippenstifts", "Lippenstifte"), 1540),
    ],
    "materiell.pflanze": [
        (de_fem("Blume"), 1303),
        (de_fem("Rose"), 639),
        (de_fem("Tulpe"), 322),
        (de_fem("Nelke"), 318),
        (de_fem("Lilie", "Lilien"), 312),
    ],
    "intellektuelles": [
        (de_noun("Thema", "neut", "Themas", "Themen"), 5189),
        (de_fem("Zukunft", "Zukünfte"), 2886),
        (de_noun("Sinn", "masc", "Sinns", "Sinne"), 1893),
        (de_fem("Rolle"), 874),
        (de_noun("Problem", "neut", "Problems", "Probleme"), 874),
        (de_fem("Möglichkeit"), 838),
        (de_noun("Inhalt", "masc", "Inhalts", "Inhalte"), 765),
        (de_noun("Umgang", "masc", "Umgangs", "Umgänge"), 743),
        (de_fem("Einführung"), 714),
        (de_fem("Bedeutung"), 555),
        (de_noun("Begriff", "masc", "Begriffs", "Begriffe"), 550),
        (de_fem("Idee", "Ideen"), 545),
        (de_fem("Theorie", "Theorien"), 540),
    ],
    "intellektuelles.kommunikation": [
        (de_fem("Anfrage"), 4600),
        ("Frage", 2383),  # shares the head-noun entry
        (de_fem("Nachricht"), 600),
        (de_noun("Brief", "masc", "Briefs", "Briefe"), 590),
        (de_noun("Bericht", "masc", "Berichts", "Berichte"), 580),
        (de_fem("Rede"), 570),
        (de_fem("Mitteilung", link="s"), 560),
        (de_fem("Petition"), 507),
    ],
    "intellektuelles.kommunikation.mitteilung": [
        (de_fem("Bemerkung", link="s"), 3000),
        (de_fem("Lösung", link="s"), 2900),
        ("Antwort", 2800),  # shares the head-noun entry (link "")
        (de_fem("Erklärung", link="s"), 2700),
        (de_fem("Ankündigung", link="s"), 2600),
        (de_fem("Beschreibung", link="s"), 2500),
    ],
    "eigenschaft.empfindung": [
        (de_adjective("körperlich"), 5899),
        (de_adjective("seelisch"), 3612),
        (de_adjective("geistig"), 500),
    ],
}

DE_ADJECTIVES = [
    "kurz", "lang", "bekannt", "ausführlich", "langweilig", "offiziell",
    "vollständig", "schwierig", "literarisch", "komisch", "endgültig",
    "deutsch", "alt", "spanisch", "russisch", "schlau", "nett", "mächtig",
    "privat",
]

TEXT_ADJ_POOL = [
    "kurz", "lang", "bekannt", "ausführlich", "langweilig", "offiziell",
    "vollständig", "schwierig", "literarisch", "komisch", "endgültig",
]

#: Abb.-5-style offerings for the TEXT genitive slot:
#: (class, preview adjectives (head, filler), curated preview member)
TEXT_GENITIVE_OFFERINGS = [
    ("belebt.menschlich.organisation.militär", ("langweilig", "deutsch"), "Polizei"),
    ("belebt.menschlich.verein.freizeit", ("lang", "alt"), "Verein"),
    ("belebt.menschlich.beruf.ausbildung", ("kurz", "bekannt"), "Akademiker"),
    ("belebt.menschlich.organisation.regierungsgebunden", ("ausführlich", "deutsch"), "Bundesregierung"),
    ("belebt.menschlich.familie", ("literarisch", "alt"), "Cousine"),
    ("belebt.menschlich.ideologie.politik", ("komisch", "spanisch"), "Faschist"),
    ("belebt.menschlich.organisation.unternehmen", ("offiziell", "russisch"), "Konzern"),
    ("belebt.menschlich.beruf", ("endgültig", "schlau"), "Detektiv"),
    ("belebt.menschlich.organisation.politik", ("vollständig", "mächtig"), "Nato"),
    ("belebt.menschlich.amt", ("bekannt", "nett"), "Geschäftsführerin"),
    ("belebt.menschlich.glaube", ("schwierig", "bekannt"), "Agnostiker"),
    ("belebt.menschlich.organisation.bildung", ("lang", "privat"), "Hochschule"),
]


def build_de_lexicon():
    entries: dict[str, dict] = {}
    lexfreq: dict[str, int] = {}
    class_members: dict[str, list[str]] = {}

    for entry in DE_HEADS:
        entries[entry["id"]] = entry
    for path, members in DE_CLASSES.items():
        ids = []
        for member, freq in members:
            if isinstance(member, str):  # reference to an already-defined entry
                member_id = member
            else:
                member_id = member["id"]
                if member_id not in entries:
                    entries[member_id] = member
            ids.append(member_id)
            lexfreq[member_id] = freq
        class_members[path] = ids
    for adj in DE_ADJECTIVES:
        entries[adj] = de_adjective(adj)

    genders = {e["id"]: e.get("gender") for e in DE_HEADS}

    def slot(index, variant, role, gloss=""):
        return {"index": index, "variant": variant, "role": role, "gloss": gloss}

    frames = []
    for head in DE_HEADS:
        lemma = head["id"]
        scene = SCENE_BY_NOUN_DE[lemma]
        if lemma == "Text":
            frames.append({
                "lemma": "Text", "gender": "masc", "inflection_ref": "Text",
                "scene": scene, "evidence": "paper",
                "adjectives": TEXT_ADJ_POOL,
                "slots": [
                    slot(1, 1, "AGENS", "derjenige, der die Handlung durchführt"),
                    slot(1, 3, "AGENS", "adjektivische Realisierung"),
                    slot(1, 4, "AGENS", "Realisierung als Kompositumsbestandteil"),
                    slot(2, 1, "ZUGEHÖRIGKEIT", "dasjenige, das über den Text verfügt"),
                    slot(3, 1, "THEMA", "dasjenige, worum es im Text geht"),
                    slot(4, 1, "ZITAT", "Titel oder Wortlaut"),
                    slot(4, 2, "ZITAT", "angeführter Wortlaut"),
                    slot(5, 1, "ART", "adjektivische Sortenangabe"),
                    slot(5, 2, "ART", "Textsorte als Kompositumsbestandteil"),
                ],
                "patterns": [
                    {
                        "id": "det+Text+gen+N1a",
                        "label": "determinante+Text+determinante genitivo+actante N1aG",
                        "slots": [
                            {"kind": "determiner", "definiteness": "definite"},
                            {"kind": "head"},
                            {"kind": "determiner", "definiteness": "definite", "case": "gen"},
                            {"kind": "argument_filler", "binds": "1.1", "case": "gen"},
                        ],
                        "offerings": {
                            "1.1": [
                                {"class": path, "number": "sg",
                                 "preview_adjectives": list(adjs), "preview_member": member}
                                for path, adjs, member in TEXT_GENITIVE_OFFERINGS
                            ]
                        },
                    },
                    {
                        "id": "det+adj+Text+gen+adj+N1aG",
                        "label": "determinante+adjetivo+Text+determinante genitivo+adjetivo+actante N1aG",
                        "slots": [
                            {"kind": "determiner", "definiteness": "definite"},
                            {"kind": "adjective", "optional": True},
                            {"kind": "head"},
                            {"kind": "determiner", "definiteness": "definite", "case": "gen"},
                            {"kind": "adjective", "optional": True},
                            {"kind": "argument_filler", "binds": "1.1", "case": "gen"},
                        ],
                        "offerings": {
                            "1.1": [
                                {"class": path, "number": "sg",
                                 "preview_adjectives": list(adjs), "preview_member": member}
                                for path, adjs, member in TEXT_GENITIVE_OFFERINGS
                            ]
                        },
                    },
                    {
                        "id": "det+arg5c+head+gen+N1a",
                        "label": "determinante+actante A5N+Text+determinante genitivo+actante N1aG",
                        "slots": [
                            {"kind": "determiner", "definiteness": "definite"},
                            {"kind": "compound_modifier", "binds": "5.2"},
                            {"kind": "head"},
                            {"kind": "determiner", "definiteness": "definite", "case": "gen"},
                            {"kind": "argument_filler", "binds": "1.1", "case": "gen"},
                        ],
                        "offerings": {
                            "5.2": [{"class": "intellektuelles.kommunikation.mitteilung",
                                     "number": "both", "preview_member": "Bemerkung"}],
                            "1.1": [{"class": "belebt.menschlich.beruf.ausbildung",
                                     "number": "both", "preview_member": "Akademikerin"}],
                        },
                    },
                    {
                        "id": "det+adj+Text+über+acc+adj+N2A",
                        "label": "determinante+adjetivo+Text+über+determinante acusativo+adjetivo+actante N2A",
                        "slots": [
                            {"kind": "determiner", "definiteness": "definite"},
                            {"kind": "adjective", "optional": True},
                            {"kind": "head"},
                            {"kind": "preposition", "fixed_text": "über"},
                            {"kind": "determiner", "definiteness": "definite", "case": "acc"},
                            {"kind": "adjective", "optional": True},
                            {"kind": "argument_filler", "binds": "3.1", "case": "acc"},
                        ],
                        "offerings": {
                            "3.1": [{"class": "intellektuelles", "number": "sg",
                                     "preview_adjectives": ["lang", "alt"],
                                     "preview_member": "Thema"}]
                        },
                    },
                ],
            })
        elif lemma == "Schmerz":
            frames.append({
                "lemma": "Schmerz", "gender": "masc", "inflection_ref": "Schmerz",
                "scene": scene, "evidence": "paper",
                "adjectives": [],
                "slots": [
                    slot(1, 1, "BETROFFENES", "dasjenige, das schmerzt (Genitiv)"),
                    slot(1, 2, "BETROFFENES", "adjektivische Realisierung"),
                    slot(1, 3, "BETROFFENES", "Realisierung als Kompositumsbestandteil"),
                ],
                "patterns": [
                    {
                        "id": "det+arg1c+Schmerz",
                        "label": "determinante+actante A1N+Schmerz",
                        "slots": [
                            {"kind": "determiner", "definiteness": "definite"},
                            {"kind": "compound_modifier", "binds": "1.3"},
                            {"kind": "head"},
                        ],
                        "offerings": {
                            "1.3": [{"class": "belebt.menschlich.körperteil",
                                     "number": "both", "preview_member": "Kopf"}]
                        },
                    },
                    {
                        "id": "det+adjN1b+Schmerz",
                        "label": "determinante+actante adjetival A1N+Schmerz",
                        "slots": [
                            {"kind": "determiner", "definiteness": "definite"},
                            {"kind": "argument_filler", "binds": "1.2", "pos": "adjective"},
                            {"kind": "head"},
                        ],
                        "offerings": {
                            "1.2": [{"class": "eigenschaft.empfindung", "number": "sg",
                                     "preview_member": "körperlich"}]
                        },
                    },
                    {
                        "id": "det+Schmerz+gen+N1a",
                        "label": "determinante+Schmerz+determinante genitivo+actante N1aG",
                        "slots": [
                            {"kind": "determiner", "definiteness": "definite"},
                            {"kind": "head"},
                            {"kind": "determiner", "definiteness": "definite", "case": "gen"},
                            {"kind": "argument_filler", "binds": "1.1", "case": "gen"},
                        ],
                        "offerings": {
                            "1.1": [{"class": "belebt.menschlich.körperteil", "number": "sg"}]
                        },
                    },
                ],
            })
        elif lemma == "Farbe":
            frames.append({
                "lemma": "Farbe", "gender": "fem", "inflection_ref": "Farbe",
                "scene": scene, "evidence": "paper",
                "adjectives": [],
                "slots": [slot(1, 1, "TRÄGER", "dasjenige, das die Farbe hat")],
                "patterns": [
                    {
                        "id": "det+Farbe+gen+N1a",
                        "label": "determinante+Farbe+determinante genitivo+actante N1aG",
                        "slots": [
                            {"kind": "determiner", "definiteness": "definite"},
                            {"kind": "head"},
                            {"kind": "determiner", "definiteness": "definite", "case": "gen"},
                            {"kind": "argument_filler", "binds": "1.1", "case": "gen"},
                        ],
                        "offerings": {
                            "1.1": [
                                {"class": "belebt.menschlich.körperteil", "number": "sg",
                                 "preview_member": "Auge"},
                                {"class": "materiell.gegenstand.schönheitspflege.kosmetik",
                                 "number": "sg", "preview_member": "Lippenstift"},
                            ]
                        },
                    },
                ],
            })
        elif lemma == "Diskussion":
            frames.append({
                "lemma": "Diskussion", "gender": "fem", "inflection_ref": "Diskussion",
                "scene": scene, "evidence": "paper",
                "adjectives": [],
                "slots": [
                    slot(1, 1, "AGENS", "derjenige, der diskutiert"),
                    slot(2, 1, "THEMA", "dasjenige, worüber diskutiert wird"),
                ],
                "patterns": [
                    {
                        "id": "det+Diskussion+über+acc+N2A",
                        "label": "determinante+Diskussion+über+determinante acusativo+actante N2A",
                        "slots": [
                            {"kind": "determiner", "definiteness": "definite"},
                            {"kind": "head"},
                            {"kind": "preposition", "fixed_text": "über"},
                            {"kind": "determiner", "definiteness": "definite", "case": "acc"},
                            {"kind": "argument_filler", "binds": "2.1", "case": "acc"},
                        ],
                        "offerings": {
                            "2.1": [{"class": "intellektuelles", "number": "sg",
                                     "preview_member": "Thema"}]
                        },
                    },
                ],
            })
        elif lemma == "Antwort":
            frames.append({
                "lemma": "Antwort", "gender": "fem", "inflection_ref": "Antwort",
                "scene": scene, "evidence": "paper",
                "adjectives": [],
                "slots": [
                    slot(1, 1, "AGENS", "derjenige, der antwortet"),
                    slot(2, 1, "THEMA", "dasjenige, worauf geantwortet wird"),
                ],
                "patterns": [
                    {
                        "id": "det+Antwort+gen+N1+auf+acc+N2",
                        "label": "determinante+Antwort+determinante genitivo+actante N1aG+auf+determinante acusativo+actante N2A",
                        "slots": [
                            {"kind": "determiner", "definiteness": "definite"},
                            {"kind": "head"},
                            {"kind": "determiner", "definiteness": "definite", "case": "gen"},
                            {"kind": "argument_filler", "binds": "1.1", "case": "gen"},
                            {"kind": "preposition", "fixed_text": "auf"},
                            {"kind": "determiner", "definiteness": "indefinite", "case": "acc"},
                            {"kind": "argument_filler", "binds": "2.1", "case": "acc"},
                        ],
                        "offerings": {
                            "1.1": [{"class": "belebt.menschlich.organisation.regierungsgebunden",
                                     "number": "sg", "preview_member": "Bundesregierung"}],
                            "2.1": [{"class": "intellektuelles.kommunikation",
                                     "number": "sg", "preview_member": "Anfrage"}],
                        },
                    },
                ],
            })
        else:
            offerings = [{"class": "belebt.menschlich.beruf", "number": "sg"}]
            if lemma in ("Geruch", "Geschmack"):
                offerings.append({"class": "materiell.pflanze", "number": "both",
                                  "preview_member": "Blume"})
            role = {
                "BEWEGUNG": "AGENS", "LOKATION": "AGENS", "AUSDRUCK": "AGENS",
                "AFFIZIERTHEIT": "PATIENS", "KLASSIFIKATION": "QUELLE",
            }[scene]
            frames.append({
                "lemma": lemma, "gender": genders[lemma], "inflection_ref": lemma,
                "scene": scene, "evidence": "synthetic",
                "adjectives": [],
                "slots": [slot(1, 1, role)],
                "patterns": [
                    {
                        "id": f"det+{lemma}+gen+N1a",
                        "label": f"determinante+{lemma}+determinante genitivo+actante N1aG",
                        "slots": [
                            {"kind": "determiner", "definiteness": "definite"},
                            {"kind": "head"},
                            {"kind": "determiner", "definiteness": "definite", "case": "gen"},
                            {"kind": "argument_filler", "binds": "1.1", "case": "gen"},
                        ],
                        "offerings": {"1.1": offerings},
                    },
                ],
            })

    lexicon = {"language": "de", "frames": frames, "entries": list(entries.values())}
    return lexicon, class_members, lexfreq


def build_de_ontology(class_members):
    nodes = {}

    def ensure(path_str, members=(), tags=None):
        path = path_str.split(".")
        for depth in range(1, len(path) + 1):
            prefix = ".".join(path[:depth])
            nodes.setdefault(prefix, {"path": path[:depth], "members": [], "tags": {}})
        if members:
            nodes[path_str]["members"].extend(members)
        if tags:
            nodes[path_str]["tags"].update(tags)

    for path_str, members in class_members.items():
        ensure(path_str, members)
    ensure("belebt.menschlich.körperteil", tags={
        "sumo": "BodyPart", "domain": "anatomy", "top_concept": "1stOrderEntity Living Part",
    })
    return {"language": "de", "nodes": list(nodes.values())}


# --- Spanish / French inventories -------------------------------------------------

ES_HEAD_GENDERS = {
    "huida": "fem", "viaje": "masc", "mudanza": "fem", "presencia": "fem",
    "ausencia": "fem", "estancia": "fem", "conversación": "fem", "discusión": "fem",
    "pregunta": "fem", "respuesta": "fem", "texto": "masc", "video": "masc",
    "muerte": "fem", "aumento": "masc", "dolor": "masc", "amor": "masc",
    "olor": "masc", "sabor": "masc", "color": "masc", "anchura": "fem",
}
FR_HEAD_GENDERS = {
    "fuite": "fem", "voyage": "masc", "déménagement": "masc", "présence": "fem",
    "absence": "fem", "séjour": "masc", "conversation": "fem", "discussion": "fem",
    "question": "fem", "réponse": "fem", "texte": "masc", "vidéo": "fem",
    "mort": "fem", "augmentation": "fem", "douleur": "fem", "amour": "masc",
    "odeur": "fem", "saveur": "fem", "couleur": "fem", "largeur": "fem",
}

ES_CLASSES = {
    "animado.humano.profesión": [
        ("periodista", 1200), ("escritora", 1150), ("profesora", 1100),
        ("traductora", 560), ("investigadora", 550), ("artista", 540),
        ("cantante", 530), ("fotógrafa", 520), ("abogada", 510),
        ("doctora", 505), ("arquitecta", 495), ("ingeniera", 490),
    ],
    "animado.humano.profesión.educación": [
        ("académica", 1050), ("maestra", 1020), ("catedrática", 1000),
    ],
    "animado.humano.organización": [
        ("universidad", 990), ("policía", 950), ("empresa", 900),
        ("administración", 850), ("asociación", 800),
    ],
    "inanimado.tema": [
        ("guerra", 2000), ("historia", 1900), ("política", 1800),
        ("economía", 1700), ("cultura", 1600), ("música", 1500),
        ("ciencia", 1400), ("literatura", 1300),
    ],
    "inanimado.lugar": [
        ("ciudad", 700), ("casa", 690), ("cocina", 680), ("plaza", 670),
        ("estación", 660), ("oficina", 650), ("iglesia", 640),
    ],
    "materia.naturaleza": [("flor", 600), ("rosa", 590), ("planta", 580)],
}
ES_ADJ = [("famoso", None), ("nuevo", None), ("interesante", None),
          ("largo", None), ("corto", None), ("oficial", None)]

FR_CLASSES = {
    "animé.humain.profession": [
        ("journaliste", 1200), ("écrivaine", 1150), ("professeure", 1100),
        ("traductrice", 560), ("chercheuse", 550), ("artiste", 540),
        ("chanteuse", 530), ("photographe", 520), ("avocate", 510),
        ("architecte", 505), ("ingénieure", 495), ("infirmière", 490),
    ],
    "animé.humain.profession.éducation": [
        ("académicienne", 1050), ("enseignante", 1020), ("universitaire", 1000),
    ],
    "animé.humain.organisation": [
        ("université", 990), ("police", 950), ("entreprise", 900),
        ("administration", 850), ("association", 800),
    ],
    "inanimé.thème": [
        ("guerre", 2000), ("histoire", 1900), ("politique", 1800),
        ("économie", 1700), ("culture", 1600), ("musique", 1500),
        ("science", 1400), ("littérature", 1300),
    ],
    "inanimé.lieu": [
        ("ville", 700), ("maison", 690), ("cuisine", 680), ("place", 670),
        ("gare", 660), ("église", 650), ("bibliothèque", 640),
    ],
    "matière.nature": [("fleur", 600), ("rose", 590), ("plante", 580)],
}
FR_ADJ = [
    ("célèbre", None, None, None),
    ("nouveau", "nouvelle", "nouveaux", "nouvelles"),
    ("intéressant", None, None, None),
    ("long", "longue", None, None),
    ("court", None, None, None),
    ("officiel", "officielle", None, None),
]


def build_romance(language):
    if language == "es":
        head_genders, scenes, classes = ES_HEAD_GENDERS, SCENE_BY_NOUN_ES, ES_CLASSES
        make_noun, prep_of, prep_about = es_noun, "de", "sobre"
        adjectives = [es_adjective(a, f) for a, f in ES_ADJ]
        theme_class, nature_class, place_class = "inanimado.tema", "materia.naturaleza", "inanimado.lugar"
        profession_class = "animado.humano.profesión"
        preview_adj = "famoso"
        nature_number = "both"
    else:
        head_genders, scenes, classes = FR_HEAD_GENDERS, SCENE_BY_NOUN_FR, FR_CLASSES
        make_noun, prep_of, prep_about = fr_noun, "de", "sur"
        adjectives = [fr_adjective(*spec) for spec in FR_ADJ]
        theme_class, nature_class, place_class = "inanimé.thème", "matière.nature", "inanimé.lieu"
        profession_class = "animé.humain.profession"
        preview_adj = "célèbre"
        nature_number = "sg"  # "de"+plural would need the unsupported article contraction

    entries = {}
    lexfreq = {}
    class_members = {}
    for lemma, gender in head_genders.items():
        entries[lemma] = make_noun(lemma, gender)
    for path, members in classes.items():
        ids = []
        for lemma, freq in members:
            if lemma not in entries:
                entries[lemma] = make_noun(lemma, "fem")
            ids.append(lemma)
            lexfreq[lemma] = freq
        class_members[path] = ids
    for adj in adjectives:
        entries[adj["id"]] = adj
    adj_pool = [adj["id"] for adj in adjectives]

    role_by_scene = {
        "BEWEGUNG": "AGENS", "LOKATION": "AGENS", "AUSDRUCK": "AGENS",
        "AFFIZIERTHEIT": "PATIENS", "KLASSIFIKATION": "QUELLE",
    }
    frames = []
    for lemma, gender in head_genders.items():
        scene = scenes[lemma]
        if scene == "KLASSIFIKATION":
            if lemma in ("anchura", "largeur"):
                of_class, of_number = place_class, "sg"
            else:
                of_class, of_number = nature_class, nature_number
        else:
            of_class, of_number = profession_class, "sg"
        patterns = [
            {
                "id": f"det+{lemma}+{prep_of}+N1a",
                "label": f"determinante+{lemma}+{prep_of}+determinante+actante N1a",
                "slots": [
                    {"kind": "determiner", "definiteness": "definite"},
                    {"kind": "head"},
                    {"kind": "preposition", "fixed_text": prep_of},
                    {"kind": "determiner", "definiteness": "definite"},
                    {"kind": "argument_filler", "binds": "1.1"},
                ],
                "offerings": {"1.1": [{"class": of_class, "number": of_number}]},
            }
        ]
        slots = [{"index": 1, "variant": 1, "role": role_by_scene[scene], "gloss": ""}]
        if scene == "AUSDRUCK":
            slots.append({"index": 2, "variant": 1, "role": "THEMA", "gloss": ""})
            patterns.append({
                "id": f"det+{lemma}+{prep_about}+adj+N2a",
                "label": f"determinante+{lemma}+{prep_about}+determinante+adjetivo+actante N2a",
                "slots": [
                    {"kind": "determiner", "definiteness": "definite"},
                    {"kind": "head"},
                    {"kind": "preposition", "fixed_text": prep_about},
                    {"kind": "determiner", "definiteness": "definite"},
                    {"kind": "adjective", "optional": True},
                    {"kind": "argument_filler", "binds": "2.1"},
                ],
                "offerings": {
                    "2.1": [{"class": theme_class, "number": "sg",
                             "preview_adjectives": [preview_adj]}]
                },
            })
        frames.append({
            "lemma": lemma, "gender": gender, "inflection_ref": lemma,
            "scene": scene, "evidence": "synthetic",
            "adjectives": adj_pool if scene == "AUSDRUCK" else [],
            "slots": slots,
            "patterns": patterns,
        })

    lexicon = {"language": language, "frames": frames, "entries": list(entries.values())}
    nodes = {}

    def ensure(path_str, members=()):
        path = path_str.split(".")
        for depth in range(1, len(path) + 1):
            prefix = ".".join(path[:depth])
            nodes.setdefault(prefix, {"path": path[:depth], "members": [], "tags": {}})
        if members:
            nodes[path_str]["members"].extend(members)

    for path_str, ids in class_members.items():
        ensure(path_str, ids)
    ontology = {"language": language, "nodes": list(nodes.values())}
    return lexicon, ontology, lexfreq


# --- frequency tables -------------------------------------------------------------

TEXT_GEN_PAPER_ROWS = [
    (1, "Text die Lied", 1913, "0.09658"),
    (2, "Text die Bibel", 1820, "0.09188"),
    (3, "Text die Buch", 866, "0.04372"),
    (4, "Text die Autor", 844, "0.04261"),
    (5, "Text die Band", 837, "0.04226"),
    (6, "Text die Song", 755, "0.03812"),
    (7, "Text die neu Testament", 649, "0.03276"),
    (8, "Text die alt Testament", 509, "0.02570"),
    (9, "Text die Petition", 507, "0.02560"),
    (10, "Text die Seite", 487, "0.02459"),
    (11, "Text die Artikel", 467, "0.02358"),
    (12, "Text die Mail", 365, "0.01843"),
    (13, "Text die Anzeige", 345, "0.01742"),
    (14, "Text die Rede", 332, "0.01676"),
    (15, "Text die heilig Schrift", 331, "0.01671"),
    (16, "Text die Autorin", 331, "0.01671"),
    (17, "Text die Urkunde", 326, "0.01646"),
    (18, "Text die E-Mail", 324, "0.01636"),
    (19, "Text die Webseite", 323, "0.01631"),
    (20, "Text die Evangelium", 318, "0.01605"),
]

#: synthetic continuation: plausible agent fillers giving every offered class
#: at least three annotated representatives (ranks 21.., counts 310, 307, ...)
TEXT_GEN_SYNTHETIC = [
    "Akademikerin", "Architekt", "Journalistin", "Dozent", "Gastprofessor",
    "Dichter", "Künstler", "Polizei", "Verein", "Bundesregierung",
    "Landesregierung", "Regierung", "Senat", "Cousine", "Faschist", "Konzern",
    "Detektiv", "Nato", "Geschäftsführerin", "Agnostiker", "Hochschule", "Uni",
    "Schriftsteller", "Sänger", "Philosoph", "Armee", "Bundeswehr", "Club",
    "Sportverein", "Mutter", "Onkel", "Kommunist", "Sozialist", "Verlag",
    "Firma", "EU", "Partei", "Papst", "Direktorin", "Atheist", "Christ",
    "Schule",
]

SCHMERZ_ADJ_PAPER_ROWS = [
    (1, "stark Schmerz", 30125),
    (2, "chronisch Schmerz", 21934),
    (3, "groß Schmerz", 12875),
    (4, "stechend Schmerz", 8063),
    (5, "körperlich Schmerz", 5899),
    (6, "heftig Schmerz", 5165),
    (7, "akut Schmerz", 5045),
    (8, "leicht Schmerz", 4624),
    (9, "brennend Schmerz", 3673),
    (10, "seelisch Schmerz", 3612),
]
SCHMERZ_ADJ_SYNTHETIC = [
    ("dumpf Schmerz", 3400), ("anhaltend Schmerz", 3100), ("extrem Schmerz", 2900),
    ("plötzlich Schmerz", 2700), ("unerträglich Schmerz", 2500),
    ("ständig Schmerz", 2300), ("massiv Schmerz", 2100), ("tief Schmerz", 1900),
    ("scharf Schmerz", 1700), ("dauerhaft Schmerz", 1500),
    ("wahnsinnig Schmerz", 1300), ("höllisch Schmerz", 1100),
    ("stumpf Schmerz", 900), ("ziehend Schmerz", 700), ("permanent Schmerz", 500),
]

SCHMERZ_COMPOUND_ROWS = [
    (1, "Kopfschmerz", 188950, "Kopf", "valency_required"),
    (2, "Rückenschmerz", 92363, "Rücken", "valency_required"),
    (3, "Bauchschmerz", 45907, "Bauch", "valency_required"),
    (4, "Zahnschmerz", 31200, "Zahn", "valency_required"),
    (5, "Gelenkschmerz", 28400, "Gelenk", "valency_required"),
    (6, "Muskelschmerz", 21500, "Muskel", "valency_required"),
    (7, "Nackenschmerz", 18300, "Nacken", "valency_required"),
    (8, "Brustschmerz", 12900, "Brust", "valency_required"),
    (30, "Auge", 1949, "Auge", "valency_required"),
    (234, "Haut", 48, "Haut", "not_valency"),
    (263, "Haar", 39, "Haar", "not_valency"),
]

FARBE_GEN_ROWS = [
    (12, "Lippenstift", 1540),
    (31, "Auge", 460),
    (38, "Haar", 402),
    (54, "Haut", 285),
]

DISKUSSION_ROWS = [
    (1, "Thema", 5189), (2, "Zukunft", 2886), (3, "Frage", 2383),
    (4, "Sinn", 1893), (5, "Problem", 874), (6, "Rolle", 874),
    (7, "Möglichkeit", 838), (8, "Inhalt", 765), (9, "Umgang", 743),
    (10, "Einführung", 714),
]

ANTWORT_ROWS = [
    (1, "die Bundesregierung auf eine Anfrage", 465, "Bundesregierung"),
    (2, "die Landesregierung auf eine Anfrage", 92, "Landesregierung"),
    (3, "die Senat auf eine Anfrage", 81, "Senat"),
    (4, "die Bundesregierung auf die Anfrage", 66, "Bundesregierung"),
    (5, "die Landesregierung auf die Anfrage", 38, "Landesregierung"),
    (6, "die Regierung auf eine Anfrage", 37, "Regierung"),
    (7, "die Verwaltung auf eine Anfrage", 35, "Verwaltung"),
    (8, "die Bundesregierung auf die Frage", 35, "Bundesregierung"),
    (9, "die Stadtverwaltung auf eine Anfrage", 31, "Stadtverwaltung"),
    (10, "die Verwaltung auf die Anfrage", 29, "Verwaltung"),
]


def pm(count):
    return f"{count / CORPUS * 1e6:.5f}"


def write_table(name, pattern_id, rows, extra_comment=None, pattern_hits=None):
    lines = [f"# corpus_size_tokens={CORPUS}", f"# pattern_id={pattern_id}"]
    if pattern_hits is not None:
        lines.append(f"# pattern_hits={pattern_hits}")
    if extra_comment:
        lines.append(f"# {extra_comment}")
    for rank, filler, count, *declared in rows:
        per_million = declared[0] if declared else pm(count)
        lines.append(f"{rank}\t{filler}\t{count}\t{per_million}")
    (DATA / "tables" / name).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_annotations(name, annotations):
    (DATA / "tables" / name).write_text(
        json.dumps(annotations, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )


def build_tables():
    (DATA / "tables").mkdir(parents=True, exist_ok=True)
    manifest_tables = []

    def register(lemma, pattern_id, table_name, annotations_name):
        manifest_tables.append({
            "language": "de", "lemma": lemma, "pattern_id": pattern_id,
            "table": f"tables/{table_name}",
            "annotations": f"tables/{annotations_name}",
        })

    # TEXT genitive: transcribed top 20 + synthetic continuation + two adjunct rows
    rows = [(r, f, c, p) for r, f, c, p in TEXT_GEN_PAPER_ROWS]
    count = 310
    rank = 21
    synthetic_fillers = []
    for lexeme in TEXT_GEN_SYNTHETIC:
        rows.append((rank, f"Text die {lexeme}", count))
        synthetic_fillers.append(lexeme)
        rank += 1
        count -= 3
    rows.append((103, "Text die Jahr", 102))
    rows.append((124, "Text die Monat", 88))
    write_table(
        "de_Text_gen.tsv", "det+Text+gen+N1a", rows,
        extra_comment="rows 1-20 transcribed; ranks 21+ synthetic desk-scale continuation",
    )
    annotations = []
    not_agens = ["Lied", "Bibel", "Buch", "Song", "neu Testament", "alt Testament",
                 "Petition", "Seite", "Artikel", "Mail", "Anzeige", "Rede",
                 "heilig Schrift", "Urkunde", "E-Mail", "Webseite", "Evangelium"]
    for lexeme in not_agens:
        annotations.append({
            "filler": lexeme, "verdict": "not_valency",
            "note": "Ergänzung, aber kein AGENS",
        })
    for lexeme in ["Autor", "Band", "Autorin"] + synthetic_fillers:
        annotations.append({"filler": lexeme, "verdict": "valency_required", "slot": "1.1"})
    for lexeme in ("Jahr", "Monat"):
        annotations.append({
            "filler": lexeme, "verdict": "excluded", "note": "temporale Angabe",
        })
    write_annotations("de_Text_gen.annotations.json", annotations)
    register("Text", "det+Text+gen+N1a", "de_Text_gen.tsv", "de_Text_gen.annotations.json")

    # DISKUSSION + über: the pattern-level total is transcribed alongside
    # the candidate rows
    write_table("de_Diskussion_ueber.tsv", "det+Diskussion+über+acc+N2A",
                [(r, f, c) for r, f, c in DISKUSSION_ROWS], pattern_hits=114929)
    write_annotations("de_Diskussion_ueber.annotations.json", [
        {"filler": f, "verdict": "valency_required", "slot": "2.1"}
        for _r, f, _c in DISKUSSION_ROWS
    ])
    register("Diskussion", "det+Diskussion+über+acc+N2A",
             "de_Diskussion_ueber.tsv", "de_Diskussion_ueber.annotations.json")

    # SCHMERZ compound realization
    write_table("de_Schmerz_kompositum.tsv", "det+arg1c+Schmerz",
                [(r, f, c) for r, f, c, _lex, _v in SCHMERZ_COMPOUND_ROWS],
                extra_comment="ranks 4-8 synthetic desk-scale continuation")
    write_annotations("de_Schmerz_kompositum.annotations.json", [
        {"filler": filler, "lexeme": lexeme, "verdict": verdict, "slot": "1.3"}
        for _r, filler, _c, lexeme, verdict in SCHMERZ_COMPOUND_ROWS
    ])
    register("Schmerz", "det+arg1c+Schmerz",
             "de_Schmerz_kompositum.tsv", "de_Schmerz_kompositum.annotations.json")

    # adjective + SCHMERZ
    adj_rows = [(r, f, c) for r, f, c in SCHMERZ_ADJ_PAPER_ROWS]
    rank = 11
    for filler, count in SCHMERZ_ADJ_SYNTHETIC:
        adj_rows.append((rank, filler, count))
        rank += 1
    write_table("de_Schmerz_adjektiv.tsv", "det+adjN1b+Schmerz", adj_rows,
                extra_comment="ranks 11-25 synthetic desk-scale continuation")
    adj_annotations = []
    for _r, filler, _c in adj_rows:
        adjective = filler.split()[0]
        verdict = "valency_required" if adjective in ("körperlich", "seelisch") else "not_valency"
        anno = {"filler": adjective, "verdict": verdict}
        if verdict == "valency_required":
            anno["slot"] = "1.2"
        adj_annotations.append(anno)
    write_annotations("de_Schmerz_adjektiv.annotations.json", adj_annotations)
    register("Schmerz", "det+adjN1b+Schmerz",
             "de_Schmerz_adjektiv.tsv", "de_Schmerz_adjektiv.annotations.json")

    # SCHMERZ + genitive (not representative, not frequent)
    write_table("de_Schmerz_gen.tsv", "det+Schmerz+gen+N1a",
                [(107, "Schmerz die Kopf", 21)])
    write_annotations("de_Schmerz_gen.annotations.json", [
        {"filler": "Kopf", "verdict": "valency_required", "slot": "1.1"},
    ])
    register("Schmerz", "det+Schmerz+gen+N1a",
             "de_Schmerz_gen.tsv", "de_Schmerz_gen.annotations.json")

    # FARBE + genitive
    write_table("de_Farbe_gen.tsv", "det+Farbe+gen+N1a",
                [(r, f, c) for r, f, c in FARBE_GEN_ROWS])
    write_annotations("de_Farbe_gen.annotations.json", [
        {"filler": f, "verdict": "valency_required", "slot": "1.1"}
        for _r, f, _c in FARBE_GEN_ROWS
    ])
    register("Farbe", "det+Farbe+gen+N1a", "de_Farbe_gen.tsv", "de_Farbe_gen.annotations.json")

    # ANTWORT biargumental
    write_table("de_Antwort_bi.tsv", "det+Antwort+gen+N1+auf+acc+N2",
                [(r, f, c) for r, f, c, _lex in ANTWORT_ROWS])
    write_annotations("de_Antwort_bi.annotations.json", [
        {"filler": filler, "lexeme": lexeme, "verdict": "valency_required", "slot": "1.1"}
        for _r, filler, _c, lexeme in ANTWORT_ROWS
    ])
    register("Antwort", "det+Antwort+gen+N1+auf+acc+N2",
             "de_Antwort_bi.tsv", "de_Antwort_bi.annotations.json")

    return manifest_tables


# --- engineered vectors --------------------------------------------------------

AXES = {"comm": 0, "edu": 1, "gov": 2, "body": 3, "cosmetics": 4, "nature": 5,
        "org": 6, "people": 7, "theme": 8, "quality": 9}
DIM = 24

FAMILY_LOADINGS = {
    "communication": {"comm": 0.8, "edu": 0.5, "theme": 0.3},
    "education": {"edu": 0.9, "comm": 0.35, "people": 0.25},
    "government": {"gov": 0.85, "comm": 0.45, "org": 0.3},
    "body": {"body": 0.9, "people": 0.3, "nature": 0.1},
    "cosmetics": {"cosmetics": 0.9, "nature": 0.2, "body": 0.25},
    "nature": {"nature": 0.9, "theme": 0.1},
    "organisation": {"org": 0.85, "people": 0.35, "gov": 0.2},
    "people": {"people": 0.9, "org": 0.2},
    "quality": {"quality": 0.9, "theme": 0.2},
    "head": {"theme": 0.5, "comm": 0.3, "people": 0.2},
}
FAMILY_BY_CLASS_PREFIX = [
    ("intellektuelles", "communication"),
    ("belebt.menschlich.beruf", "education"),
    ("belebt.menschlich.organisation.regierungsgebunden", "government"),
    ("belebt.menschlich.körperteil", "body"),
    ("materiell.gegenstand.schönheitspflege.kosmetik", "cosmetics"),
    ("materiell.pflanze", "nature"),
    ("belebt.menschlich.organisation", "organisation"),
    ("belebt.menschlich.verein", "organisation"),
    ("belebt.menschlich", "people"),
    ("eigenschaft.empfindung", "quality"),
]
HEAD_LOADINGS = {
    "Text": {"comm": 0.7, "theme": 0.5, "edu": 0.2},
    "Diskussion": {"comm": 0.8, "theme": 0.4},
    "Schmerz": {"body": 0.8, "people": 0.3, "quality": 0.2},
    "Farbe": {"cosmetics": 0.4, "nature": 0.4, "body": 0.3, "theme": 0.3},
}
EXACT_VECTORS = {
    # engineered to cosine 0.6 exactly
    "Anfrage": {"comm": 1.0},
    "Bundesregierung": {"comm": 0.6, "gov": 0.8},
}


def _loading_vector(loadings):
    vec = np.zeros(DIM)
    for axis, weight in loadings.items():
        vec[AXES[axis]] = weight
    return vec


def build_vectors(class_members, de_entry_ids, de_adjectives):
    words = {}

    def family_for(word):
        for path, members in class_members.items():
            if word in members:
                for prefix, family in FAMILY_BY_CLASS_PREFIX:
                    if path.startswith(prefix):
                        return family
        return None

    for word in de_entry_ids:
        if word in EXACT_VECTORS:
            vec = _loading_vector(EXACT_VECTORS[word])
            words[word] = vec / np.linalg.norm(vec)
            continue
        loadings = HEAD_LOADINGS.get(word)
        if loadings is None:
            family = family_for(word)
            if family is None:
                family = "quality" if word in de_adjectives else "head"
            loadings = FAMILY_LOADINGS[family]
        vec = _loading_vector(loadings)
        rng = np.random.default_rng(zlib.crc32(word.encode("utf-8")))
        vec = vec + 0.03 * (rng.random(DIM) - 0.5)
        words[word] = vec / np.linalg.norm(vec)

    def cos(a, b):
        return float(np.dot(words[a], words[b]))

    assert abs(cos("Bundesregierung", "Anfrage") - 0.6) < 1e-9
    for modifier in class_members["intellektuelles.kommunikation.mitteilung"]:
        for filler in class_members["belebt.menschlich.beruf.ausbildung"]:
            assert cos(modifier, filler) > 0.3, (modifier, filler, cos(modifier, filler))
    for n1 in class_members["belebt.menschlich.organisation.regierungsgebunden"]:
        for n2 in class_members["intellektuelles.kommunikation"]:
            assert cos(n1, n2) > 0.3, (n1, n2, cos(n1, n2))

    lines = [f"{len(words)} {DIM}"]
    for word in sorted(words):
        lines.append(word + " " + " ".join(f"{x:.8f}" for x in words[word]))
    (DATA / "vectors.de.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")


# --- top level -------------------------------------------------------------------

def dump(name, payload):
    (DATA / name).write_text(
        json.dumps(payload, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    de_lexicon, de_classes, de_lexfreq = build_de_lexicon()
    de_ontology = build_de_ontology(de_classes)
    dump("lexicon.de.json", de_lexicon)
    dump("ontology.de.json", de_ontology)
    dump("lexfreq.de.json", de_lexfreq)
    dump("overrides.de.json", {
        "Schmerz": {"belebt.menschlich.körperteil": ["Haar", "Haut"]},
    })

    total_members = sum(len(v) for v in de_classes.values())
    for language in ("es", "fr"):
        lexicon, ontology, lexfreq = build_romance(language)
        dump(f"lexicon.{language}.json", lexicon)
        dump(f"ontology.{language}.json", ontology)
        dump(f"lexfreq.{language}.json", lexfreq)
        total_members += sum(len(n["members"]) for n in ontology["nodes"])

    manifest_tables = build_tables()
    dump("manifest.json", {"languages": ["de", "es", "fr"], "tables": manifest_tables})

    de_entry_ids = [e["id"] for e in de_lexicon["entries"]]
    build_vectors(de_classes, de_entry_ids, set(DE_ADJECTIVES))

    node_count = len(de_ontology["nodes"])
    for language in ("es", "fr"):
        node_count += len(json.loads((DATA / f"ontology.{language}.json").read_text())["nodes"])
    print(f"fixtures written: {node_count} ontology nodes, {total_members} member links")


if __name__ == "__main__":
    main()
