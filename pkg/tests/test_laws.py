import json

import pytest

import semitop.laws as laws_mod
from semitop.catalog import catalog_entries, named_space
from semitop.laws import (FAMILY_CAP, OPERATION_NAMES, PAIR_CAP, Law,
                          LawScopeError, SpaceContext, Witness, check_law,
                          register_laws, registry, run_suite)


def _stream3(spaces3):
    return spaces3 + [entry.space for entry in catalog_entries()]


def test_registry_integrity():
    laws = register_laws()
    assert len(laws) >= 25
    ids = [law.id for law in laws]
    assert len(ids) == len(set(ids))
    for law in laws:
        assert law.anchor.strip()
        assert law.status in ("expected", "disputed")
        if law.status == "disputed":
            assert law.dispute_space
        assert set(law.covers) <= set(OPERATION_NAMES)
        assert law.max_points >= PAIR_CAP


def test_registry_coverage_meta():
    covered = set()
    for law in register_laws():
        covered |= set(law.covers)
    assert covered == set(OPERATION_NAMES)


def test_known_anchors():
    reg = registry()
    assert "$(B^c)^{\\Lambda_s}=(B^{V_s})^c$" in reg["prop-3.2f"].anchor
    assert reg["cor-4-cantor-bendixson"].status == "disputed"
    assert reg["cor-4-cantor-bendixson"].dispute_space == "discrete:2"


def test_check_law_pass(e33):
    assert check_law("prop-3.2d", e33) is None
    assert check_law("example-4.6-intersection", e33) is None


def test_check_law_existence_scope(e1, e33):
    assert check_law("remark-3.3-strictness", e1) is None
    with pytest.raises(LawScopeError):
        check_law("remark-3.3-strictness", e33)


def test_check_law_size_bound():
    wide = named_space("khalimsky:-7:7")
    with pytest.raises(LawScopeError):
        check_law("prop-3.2b", wide)
    assert check_law("prop-3.2a", wide) is None


def test_check_law_disputed_witness():
    w = check_law("cor-4-cantor-bendixson", named_space("discrete:2"))
    assert isinstance(w, Witness)
    assert w.points == ("a",)
    assert w.subsets == ("∅", "X")
    assert "isolated" in w.message


def test_shared_context_reuse(e33):
    ctx = SpaceContext(e33)
    for lid in ("prop-3.2a", "prop-3.2f", "thm-5.3"):
        assert check_law(lid, e33, ctx) is None


def test_expected_laws_hold_on_all_3_point_spaces(spaces3):
    report = run_suite(_stream3(spaces3))
    for result in report.results:
        law = registry()[result.law_id]
        assert result.passed + len(result.witnesses) == result.examined
        if law.status == "expected":
            assert not result.witnesses, result.law_id
    assert report.exit_code() == 0


def test_disputed_confirmation_and_witness_replay(spaces3):
    report = run_suite(_stream3(spaces3))
    disputed = [r for r in report.results
                if registry()[r.law_id].status == "disputed"]
    assert disputed and all(r.witnesses for r in disputed)
    for result in report.results:
        for w in result.witnesses:
            again = check_law(result.law_id, w.space)
            assert again is not None
            assert (again.subsets, again.points, again.message) == \
                (w.subsets, w.points, w.message)


def test_report_is_deterministic(spaces3):
    stream = _stream3(spaces3)
    one = run_suite(stream)
    two = run_suite(stream)
    assert one.render_text() == two.render_text()
    assert json.dumps(one.to_dict()) == json.dumps(two.to_dict())


def test_worker_pool_merges_identically(spaces3):
    stream = _stream3(spaces3)
    seq = run_suite(stream)
    par = run_suite(stream, workers=3)
    assert seq.render_text() == par.render_text()
    assert seq.to_dict() == par.to_dict()


def test_law_id_filter(spaces3):
    report = run_suite(spaces3, ["prop-3.2a", "prop-3.8"])
    assert [r.law_id for r in report.results] == ["prop-3.2a", "prop-3.8"]
    with pytest.raises(KeyError):
        run_suite(spaces3, ["no-such-law"])


def test_examined_respects_caps(spaces3):
    wide = named_space("khalimsky:-7:7")
    report = run_suite(spaces3 + [wide], ["prop-3.2a", "prop-3.2b",
                                          "prop-3.2f"])
    by_id = {r.law_id: r for r in report.results}
    assert by_id["prop-3.2a"].examined == 30
    assert by_id["prop-3.2b"].examined == 29   # PAIR_CAP skips the window
    assert by_id["prop-3.2f"].examined == 29   # FAMILY_CAP skips it too
    assert PAIR_CAP < FAMILY_CAP < wide.n


def _with_fake_law(monkeypatch, law):
    reg = dict(registry())
    reg[law.id] = law
    monkeypatch.setattr(laws_mod, "_REGISTRY", reg)


def test_expected_failure_sets_exit_code(monkeypatch, e33):
    fake = Law("fake-always-fails", "$B=B$", lambda ctx: laws_mod._Fail(
        (0,), (), "forced failure"), status="expected")
    _with_fake_law(monkeypatch, fake)
    report = run_suite([e33], ["fake-always-fails"])
    assert report.exit_code() == 1
    assert "VIOLATED" in report.results[0].verdict()
    assert report.to_dict()["exit_code"] == 1


def test_stale_dispute_detection(monkeypatch, e33):
    fake = Law("fake-stale-dispute", "$B=B$", lambda ctx: None,
               status="disputed", dispute_space="e33")
    _with_fake_law(monkeypatch, fake)
    report = run_suite([e33], ["fake-stale-dispute"])
    assert report.exit_code() == 1
    assert "STALE" in report.results[0].verdict()


def test_unexercised_dispute_is_not_fatal(monkeypatch, e1):
    fake = Law("fake-stale-dispute", "$B=B$", lambda ctx: None,
               status="disputed", dispute_space="e33")
    _with_fake_law(monkeypatch, fake)
    report = run_suite([e1], ["fake-stale-dispute"])
    assert report.exit_code() == 0
    assert "not exercised" in report.results[0].verdict()


def test_render_text_caps_witnesses(spaces3):
    report = run_suite(spaces3, ["cor-4-cantor-bendixson"])
    text = report.render_text(witness_cap=5)
    assert text.count("cor-4-cantor-bendixson @") == 5
    assert "more" in text
    assert text.endswith("exit-code: 0\n")


def test_machine_dict_shape(spaces3):
    doc = run_suite(spaces3[:5]).to_dict()
    assert doc["spaces"] == 5
    assert doc["exit_code"] == 0
    for rec in doc["laws"]:
        assert set(rec) == {"id", "status", "examined", "passed", "verdict",
                            "witnesses"}
        for w in rec["witnesses"]:
            assert isinstance(w["subsets"], list)
            for labels in w["subsets"]:
                assert labels == sorted(labels)
