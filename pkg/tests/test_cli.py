import dataclasses
import json

import pytest

from foldbox import catalog, cli, codec
from foldbox.codec import ParseError, SchemaVersionMismatch, UnknownKind, dump, parse_document, serialize


@pytest.fixture
def write(tmp_path):
    def put(name, kind, value, **meta):
        p = tmp_path / name
        p.write_text(dump(kind, value, **meta), encoding="utf-8")
        return str(p)
    return put


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("entry", catalog.catalog(), ids=lambda e: e.name)
def test_catalog_round_trips_byte_identically(entry):
    text = dump(entry.kind, entry.value, name=entry.name)
    doc = parse_document(text.encode())
    assert doc.value == entry.value
    assert serialize(doc) == text
    assert text.endswith("\n") and "\r" not in text


def test_empty_category_round_trips():
    from foldbox.fincat import FinCategory
    empty = FinCategory((), {}, {}, {})
    assert parse_document(dump("category", empty)).value == empty


def test_duplicate_id_is_located():
    text = dump("category", catalog.terminal_category())
    lines = text.splitlines()
    i = next(n for n, line in enumerate(lines) if line.strip().startswith('["1", ["*", "*"]]'))
    lines.insert(i + 1, lines[i].rstrip(",") + ",")
    with pytest.raises(ParseError) as e:
        parse_document("\n".join(lines))
    assert e.value.line == i + 2
    assert e.value.col > 1


def test_malformed_json_reports_position():
    with pytest.raises(ParseError) as e:
        parse_document('{"schema_version": 1,\n  "kind": }')
    assert e.value.line == 2


def test_unknown_kind_and_schema_version():
    body = json.loads(dump("category", catalog.terminal_category()))
    with pytest.raises(UnknownKind):
        parse_document(json.dumps({**body, "kind": "triple_category"}))
    with pytest.raises(SchemaVersionMismatch):
        parse_document(json.dumps({**body, "schema_version": 2}))


def test_canonicalize_is_idempotent():
    text = json.dumps(json.loads(dump("groupoid", catalog.bg("S3"))))
    once = codec.canonicalize(text)
    assert codec.canonicalize(once) == once


def test_validate_ok(capsys, write):
    f = write("sq.fbx", "double_category", catalog.y_catalog()["square_C2"].base)
    code, out, _ = run(capsys, "validate", "--kind", "double_category", f)
    assert code == 0
    assert "squares=8" in out and "OK" in out


def test_validate_violations_exit_1(capsys, write):
    d = catalog.y_catalog()["square_C2"].base
    (a, b), ab = next(iter(d.hcomp_mor.items()))
    other = next(m for m in d.hmor if m != ab)
    broken = dataclasses.replace(d, hcomp_mor={**d.hcomp_mor, (a, b): other})
    f = write("bad.fbx", "double_category", broken)
    code, out, _ = run(capsys, "validate", f)
    assert code == 1
    assert "violation" in out


def test_parse_error_exit_2(capsys, tmp_path):
    p = tmp_path / "junk.fbx"
    p.write_text("{not json", encoding="utf-8")
    code, out, _ = run(capsys, "validate", str(p))
    assert code == 2
    assert "PARSE_ERROR" in run(capsys, "validate", "--format", "structured", str(p))[1]


def test_usage_errors_exit_3(capsys, tmp_path):
    assert run(capsys, "frobnicate")[0] == 3
    assert run(capsys, "validate")[0] == 3
    assert run(capsys, "validate", str(tmp_path / "missing.fbx"))[0] == 3
    assert run(capsys, "roundtrip", "--theorem", "nonsense", "--in", "x")[0] == 3
    assert run(capsys, "validate", "--cap", "0", "x")[0] == 3


def test_kind_mismatch_is_usage_error(capsys, write):
    f = write("g.fbx", "groupoid", catalog.bg("C2"))
    assert run(capsys, "validate", "--kind", "double_category", f)[0] == 3


def test_generate_commutative_squares_s3(capsys):
    code, out, err = run(capsys, "generate", "--kind", "commutative_squares", "--group", "S3")
    assert code == 0
    assert parse_document(out).kind == "double_category"
    assert len(parse_document(out).value.squares) == 216
    assert "squares=216" in err


def test_generate_to_file(capsys, tmp_path):
    out = tmp_path / "q.fbx"
    code, text, _ = run(capsys, "generate", "--kind", "quintets", "--group", "C2", "--out", str(out))
    assert code == 0 and "squares=" in text
    assert parse_document(out.read_bytes()).kind == "double_category"


def test_convert_and_back(capsys, write, tmp_path):
    f = write("xm.fbx", "crossed_module", catalog.crossed_modules()["c3_normal_s3"])
    tg = tmp_path / "tg.fbx"
    assert run(capsys, "convert", "--kind", "two_group", f, "--out", str(tg))[0] == 0
    assert len(parse_document(tg.read_bytes()).value.cat.two_cells) == 18
    back = tmp_path / "xm2.fbx"
    assert run(capsys, "convert", "--kind", "crossed_module", str(tg), "--out", str(back))[0] == 0
    assert parse_document(back.read_bytes()).kind == "crossed_module"
    assert run(capsys, "convert", "--kind", "homotopy", f)[0] == 3


def test_fold_connection_round_trip(capsys, write):
    f = write("f.fbx", "folded_double", catalog.double_groups()["dg_c2_in_c4"])
    code, out, _ = run(capsys, "roundtrip", "--theorem", "fold_connection", "--in", f)
    assert code == 0
    assert "identity round trip" in out


@pytest.mark.parametrize("theorem,kind,value", [
    ("BrownSpencer", "crossed_module", catalog.crossed_modules()["c3_c2_inversion"]),
    ("YZ", "two_functor_under_i", catalog.z_catalog()["bc2_into_c2_in_c4"]),
    ("XZ", "two_functor_under_i", catalog.z_catalog()["bc4_into_c2_in_c4"]),
    ("homotopy", "homotopy", catalog.homotopy_examples()[5]),
])
def test_theorem_round_trips(capsys, write, theorem, kind, value):
    f = write("in.fbx", kind, value)
    code, out, _ = run(capsys, "roundtrip", "--theorem", theorem, "--in", f)
    assert code == 0, out


def test_structured_output_is_deterministic(capsys, write):
    f = write("xm.fbx", "crossed_module", catalog.crossed_modules()["c2_in_c4"])
    a = json.loads(run(capsys, "roundtrip", "--theorem", "brown_spencer", "--in", f, "--format", "structured")[1])
    b = json.loads(run(capsys, "roundtrip", "--theorem", "brown_spencer", "--in", f, "--format", "structured")[1])
    assert a == b
    assert a["exit_status"] == 0 and a["targets"][0]["verdict"] == "ok"


def test_report_lists_metadata(capsys, write):
    f = write("g.fbx", "groupoid", catalog.bg("S3"), origin="S3")
    code, out, _ = run(capsys, "report", f)
    assert code == 0
    assert "origin: S3" in out and "tags: none" in out


def test_cap_from_environment(capsys, write, monkeypatch):
    f = write("sq.fbx", "double_category", catalog.y_catalog()["square_S3"].base)
    # six morphisms in each direction
    monkeypatch.setenv("FOLDBOX_CAP", "5")
    code, out, _ = run(capsys, "validate", f)
    assert code == 2 and "CAP_EXCEEDED" in run(capsys, "validate", "--format", "structured", f)[1]
    assert run(capsys, "validate", "--cap", "1000", f)[0] == 0
