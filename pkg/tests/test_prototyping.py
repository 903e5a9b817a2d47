"""Frequency ingestion, role filtering, grading and the contrast report."""

import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from valgen.core import ArgumentSlot
from valgen.errors import InconsistentPerMillion, LexemeAbsent, UnannotatedFiller
from valgen.ontology import parse_class_path
from valgen.prototyping import (
    ClassGrade,
    ContrastVerdict,
    CooccurrenceEntry,
    CooccurrenceTable,
    GradingConfig,
    LexicalPrototype,
    PatternGrade,
    RoleAnnotation,
    RoleVerdict,
    contrast_report,
    filter_candidates,
    grade_class,
    grade_pattern,
    ingest_frequency_table,
    load_annotations,
)

CORPUS = 19_807_413_544
AGENS_SLOT = ArgumentSlot(index=1, variant=1, role="AGENS")


@pytest.fixture(scope="module")
def text_table(data_dir):
    return ingest_frequency_table(data_dir / "tables" / "de_Text_gen.tsv", ("de", "Text"))


@pytest.fixture(scope="module")
def text_annotations(data_dir):
    return load_annotations(data_dir / "tables" / "de_Text_gen.annotations.json")


def make_table(rows, corpus=CORPUS, pattern_id="p", frame=("de", "X")):
    entries = [
        CooccurrenceEntry(
            pattern_id=pattern_id, filler=filler, count=count,
            per_million=count / corpus * 1e6, rank=rank,
        )
        for rank, filler, count in rows
    ]
    return CooccurrenceTable(
        frame=frame, corpus_size_tokens=corpus, pattern_id=pattern_id, entries=entries
    )


def test_tab2_rank_one(text_table):
    top = text_table.entries[0]
    assert (top.filler, top.count, top.rank) == ("Text die Lied", 1913, 1)
    assert top.per_million == pytest.approx(0.09658, rel=0.01)


def test_tab2_per_million_consistency(text_table):
    for entry in text_table.entries:
        assert entry.per_million == pytest.approx(entry.count / CORPUS * 1e6, rel=1e-9)


def test_ingestion_is_fast(data_dir):
    start = time.perf_counter()
    ingest_frequency_table(data_dir / "tables" / "de_Text_gen.tsv", ("de", "Text"))
    assert time.perf_counter() - start < 1.0


def test_empty_tsv_body(tmp_path):
    path = tmp_path / "empty.tsv"
    path.write_text("# corpus_size_tokens=1000\n", encoding="utf-8")
    table = ingest_frequency_table(path, ("de", "X"))
    assert table.entries == [] and table.corpus_size_tokens == 1000


def test_inconsistent_per_million(tmp_path):
    path = tmp_path / "bad.tsv"
    path.write_text(
        f"# corpus_size_tokens={19_800_000_000}\n1\tfiller\t1913\t9.9\n",
        encoding="utf-8",
    )
    with pytest.raises(InconsistentPerMillion):
        ingest_frequency_table(path, ("de", "X"))


def test_filter_starts_with_autor(text_table, text_annotations, de_ontology):
    kept = filter_candidates(text_table, text_annotations, AGENS_SLOT, de_ontology)
    assert kept[0].lexeme == "Autor" and kept[0].rank == 4
    assert parse_class_path("belebt.menschlich.beruf") in kept[0].class_paths


def test_filter_excludes_temporal_adjuncts(text_table, text_annotations):
    kept = filter_candidates(text_table, text_annotations, AGENS_SLOT)
    lexemes = {c.lexeme for c in kept}
    assert "Jahr" not in lexemes and "Monat" not in lexemes
    assert "Lied" not in lexemes  # not_valency


def test_filter_empty_annotations(text_table):
    assert filter_candidates(text_table, [], AGENS_SLOT) == []


def test_filter_strict_mode(text_table):
    with pytest.raises(UnannotatedFiller):
        filter_candidates(text_table, [], AGENS_SLOT, strict=True)


def test_filter_is_subsequence(text_table, text_annotations):
    kept = filter_candidates(text_table, text_annotations, AGENS_SLOT)
    ranks = [c.rank for c in kept]
    assert ranks == sorted(ranks)
    table_fillers = [e.filler for e in text_table.entries]
    positions = [table_fillers.index(c.filler) for c in kept]
    assert positions == sorted(positions)


def test_grade_diskussion_type_one(engine):
    grade = engine.pattern_grade("de", "Diskussion", "det+Diskussion+über+acc+N2A")
    assert grade.grade is PatternGrade.TYPE_I
    assert grade.distinct_candidates >= 5


def test_grade_schmerz_adjective_type_two(engine):
    grade = engine.pattern_grade("de", "Schmerz", "det+adjN1b+Schmerz")
    assert grade.grade is PatternGrade.TYPE_II
    assert grade.valency_share == pytest.approx(0.08)


def test_grade_schmerz_genitive_excluded(engine):
    grade = engine.pattern_grade("de", "Schmerz", "det+Schmerz+gen+N1a")
    assert grade.grade is PatternGrade.EXCLUDED
    assert grade.pattern_per_million < 0.01


@given(
    scale=st.floats(min_value=1.0, max_value=1e6),
    diverse=st.booleans(),
    rank_offset=st.sampled_from([0, 29]),
)
@settings(max_examples=100, deadline=None)
def test_grade_monotone_in_frequency(scale, diverse, rank_offset):
    # raising the pattern frequency may only move a grade toward Type I
    order = {PatternGrade.EXCLUDED: 0, PatternGrade.TYPE_II: 1, PatternGrade.TYPE_I: 2}
    fillers = ["a", "b", "c", "d", "e", "f"] if diverse else ["a"]
    base_rows = [(i + 1 + rank_offset, f, 10 - i) for i, f in enumerate(fillers)]
    candidates = [
        LexicalPrototype(
            lexeme=f, filler=f, count=10 - i, per_million=0.0, rank=i + 1 + rank_offset
        )
        for i, f in enumerate(fillers)
    ]
    small = make_table(base_rows, corpus=10_000_000_000)
    big = make_table([(r, f, int(c * scale)) for r, f, c in base_rows], corpus=10_000_000_000)
    g_small = grade_pattern(small, candidates)
    g_big = grade_pattern(big, candidates)
    assert order[g_big.grade] >= order[g_small.grade]


def test_grade_class_koerperteil_many(engine):
    key = ("de", "Schmerz", "det+arg1c+Schmerz")
    frame = engine.frame("de", "Schmerz")
    slot = frame.slot_map()[(1, 3)]
    candidates = engine.slot_candidates(*key, slot)
    grade = grade_class(
        parse_class_path("belebt.menschlich.körperteil"),
        candidates,
        engine.pattern_grade(*key),
    )
    assert grade.grade is ClassGrade.MANY
    assert grade.representative_count >= 3


def test_grade_class_kosmetik_few(engine):
    key = ("de", "Farbe", "det+Farbe+gen+N1a")
    frame = engine.frame("de", "Farbe")
    slot = frame.slot_map()[(1, 1)]
    candidates = engine.slot_candidates(*key, slot)
    grade = grade_class(
        parse_class_path("materiell.gegenstand.schönheitspflege.kosmetik"),
        candidates,
        engine.pattern_grade(*key),
    )
    assert grade.grade is ClassGrade.FEW
    assert grade.representative_count == 1
    assert grade.summed_count >= 1000


def test_grade_class_excluded_under_excluded_pattern():
    table = make_table([(1, "x", 1)])
    candidates = [
        LexicalPrototype(
            lexeme="x", filler="x", count=1, per_million=0.0, rank=30,
            class_paths=(("k",),),
        )
    ]
    pattern_grade = grade_pattern(table, candidates)
    assert pattern_grade.grade is PatternGrade.EXCLUDED
    grade = grade_class(("k",), candidates, pattern_grade)
    assert grade.grade is ClassGrade.EXCLUDED


def contrast_tables(engine):
    return {
        ("de", "Farbe"): engine.tables[("de", "Farbe", "det+Farbe+gen+N1a")],
        ("de", "Schmerz"): engine.tables[("de", "Schmerz", "det+arg1c+Schmerz")],
    }


def test_contrast_haar_farbe_only(engine):
    report = contrast_report("Haar", ("de", "Farbe"), ("de", "Schmerz"), contrast_tables(engine))
    assert report.verdict is ContrastVerdict.A_ONLY
    assert (report.occurrence_a.rank, report.occurrence_a.count) == (38, 402)
    assert (report.occurrence_b.rank, report.occurrence_b.count) == (263, 39)


def test_contrast_auge_both(engine):
    report = contrast_report("Auge", ("de", "Farbe"), ("de", "Schmerz"), contrast_tables(engine))
    assert report.verdict is ContrastVerdict.BOTH
    assert (report.occurrence_a.rank, report.occurrence_a.count) == (31, 460)
    assert (report.occurrence_b.rank, report.occurrence_b.count) == (30, 1949)


def test_contrast_symmetry(engine):
    tables = contrast_tables(engine)
    for lexeme in ("Haar", "Haut", "Auge"):
        fwd = contrast_report(lexeme, ("de", "Farbe"), ("de", "Schmerz"), tables)
        rev = contrast_report(lexeme, ("de", "Schmerz"), ("de", "Farbe"), tables)
        mirror = {
            ContrastVerdict.A_ONLY: ContrastVerdict.B_ONLY,
            ContrastVerdict.B_ONLY: ContrastVerdict.A_ONLY,
            ContrastVerdict.BOTH: ContrastVerdict.BOTH,
            ContrastVerdict.NEITHER: ContrastVerdict.NEITHER,
        }
        assert rev.verdict is mirror[fwd.verdict]


def test_contrast_lexeme_absent(engine):
    with pytest.raises(LexemeAbsent):
        contrast_report("zzz", ("de", "Farbe"), ("de", "Schmerz"), contrast_tables(engine))


def test_annotation_at_most_once(text_table):
    annotations = [
        RoleAnnotation(filler="Autor", verdict=RoleVerdict.VALENCY_REQUIRED, slot=(1, 1)),
        RoleAnnotation(filler="Text die Autor", verdict=RoleVerdict.NOT_VALENCY),
    ]
    with pytest.raises(Exception, match="annotated more than once"):
        filter_candidates(text_table, annotations, AGENS_SLOT)


def test_thresholds_are_configurable():
    config = GradingConfig(freq_min=100.0)
    table = make_table([(i + 1, f"f{i}", 1000 - i) for i in range(8)])
    candidates = [
        LexicalPrototype(lexeme=f"f{i}", filler=f"f{i}", count=1000 - i,
                         per_million=0.0, rank=i + 1)
        for i in range(8)
    ]
    assert grade_pattern(table, candidates).grade is PatternGrade.TYPE_I
    assert grade_pattern(table, candidates, config).grade is PatternGrade.TYPE_II
