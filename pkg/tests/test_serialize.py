import json

import pytest

from bunred import (
    GenusContext,
    ParseError,
    SheafType,
    dump,
    dumps,
    load,
    loads,
    reduce,
    trace_from_dict,
    trace_to_dict,
    verify_trace,
)


def _traces():
    yield reduce(GenusContext(2), SheafType(2, 1))
    yield reduce(GenusContext(2), SheafType(4, 2))
    yield reduce(GenusContext(2), SheafType(3, 0))
    yield reduce(GenusContext(3), SheafType(6, 4))
    yield reduce(GenusContext(4), SheafType(9, -6))


def test_round_trip_equality():
    for tr in _traces():
        assert loads(dumps(tr)) == tr
        assert trace_from_dict(trace_to_dict(tr)) == tr


def test_byte_stable_reserialization():
    for tr in _traces():
        text = dumps(tr)
        assert dumps(loads(text)) == text


def test_file_round_trip(tmp_path):
    tr = reduce(GenusContext(2), SheafType(2, 1))
    path = tmp_path / "trace.json"
    dump(tr, str(path))
    assert load(str(path)) == tr


def test_tampered_document_parses_but_fails_verification():
    tr = reduce(GenusContext(2), SheafType(2, 1))
    doc = trace_to_dict(tr)
    doc["root"]["dF"] = -1
    tampered = trace_from_dict(doc)
    report = verify_trace(tampered, strict=False)
    assert not report.ok
    assert "euler_equation" in report.failed_names()


def test_truncated_document_is_parse_error():
    text = dumps(reduce(GenusContext(2), SheafType(2, 1)))
    with pytest.raises(ParseError):
        loads(text[: len(text) // 2])


def test_missing_key_reports_location():
    doc = trace_to_dict(reduce(GenusContext(2), SheafType(2, 1)))
    del doc["root"]["mu1"]["twist_degree"]
    with pytest.raises(ParseError) as exc:
        trace_from_dict(doc)
    assert "$.root.mu1" in str(exc.value)


def test_wrong_version_rejected():
    doc = trace_to_dict(reduce(GenusContext(2), SheafType(2, 1)))
    doc["version"] = 2
    with pytest.raises(ParseError):
        trace_from_dict(doc)


def test_non_integer_field_rejected():
    doc = trace_to_dict(reduce(GenusContext(2), SheafType(2, 1)))
    doc["root"]["rkV"] = "four"
    with pytest.raises(ParseError):
        trace_from_dict(doc)
    doc["root"]["rkV"] = True
    with pytest.raises(ParseError):
        trace_from_dict(doc)


def test_bad_sign_rejected():
    doc = trace_to_dict(reduce(GenusContext(2), SheafType(2, 1)))
    doc["composite_det"]["sign"] = 2
    with pytest.raises(ParseError):
        trace_from_dict(doc)


def test_schema_shape_is_stable():
    doc = trace_to_dict(reduce(GenusContext(2), SheafType(2, 1)))
    assert doc["version"] == 1
    assert set(doc) == {
        "version", "genus", "input", "h", "total_affine_dim", "composite_det", "root",
    }
    assert set(doc["root"]) == {
        "kind", "rF", "dF", "r1", "d1", "h1", "rkV",
        "rho_affine", "hecke_affine", "det_maps", "mu1", "mu2",
    }
    assert doc["root"]["kind"] == "composite"
    assert set(doc["root"]["mu1"]) == {"kind", "rank", "degree", "twist_degree"}
    assert json.loads(dumps(reduce(GenusContext(2), SheafType(2, 1)))) == doc
