import io
import json
from pathlib import Path

import pytest

from matroidhall import canon
from matroidhall.canon import enumerate_matroids
from matroidhall.catalog import (
    CATALOG_ENV,
    Catalog,
    dumps_matroid,
    fixture,
    load_matroid,
    loads_matroid,
    matroid_from_document,
)
from matroidhall.cli import CHECK_FAILED, OK, USAGE, main
from matroidhall.errors import ParseError, ValidationError
from matroidhall.matroid import direct_sum, free_matroid, uniform

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), buf)
    return code, buf.getvalue()


def test_documents_round_trip():
    for n in range(4):
        for c in enumerate_matroids(n):
            assert loads_matroid(dumps_matroid(c.matroid)) == c.matroid


def test_document_kinds(u12, u23):
    assert matroid_from_document({"ground": ["*", "1", "2"], "bases": [["1"], ["2"]]}) == u12
    doc = {"graph": {"vertices": ["u", "v", "w"], "edges": [["*", "u", "u"], ["1", "u", "v"], ["2", "v", "w"], ["3", "w", "u"]]}}
    assert matroid_from_document(doc) == u23


@pytest.mark.parametrize(
    "doc, where",
    [
        ([], "$"),
        ({"ground": ["*"]}, "$"),
        ({"ground": ["*", "1"], "flats": [["*"]], "bases": [[]]}, "$"),
        ({"flats": [["*"]]}, "ground"),
        ({"ground": ["*", "1"], "flats": [["*", "9"]]}, "flats[0][1]"),
        ({"ground": ["*", "1"], "bases": [["*"]]}, "bases[0][0]"),
        ({"graph": {"vertices": ["u"], "edges": [["*", "u"]]}}, "graph.edges[0]"),
    ],
)
def test_parse_errors_carry_positions(doc, where):
    with pytest.raises(ParseError) as info:
        matroid_from_document(doc)
    assert info.value.where == where


def test_validation_errors():
    with pytest.raises(ValidationError) as info:
        matroid_from_document({"ground": ["*", "1"], "flats": [["1"], ["*", "1"]]})
    assert info.value.where == "flats"
    with pytest.raises(ParseError):
        loads_matroid("{not json")


def test_fixtures(a, b):
    assert fixture("a") == a and fixture("b") == b
    assert fixture("u_2_3") == uniform(2, 3)
    assert fixture("free_2") == free_matroid(2)
    assert fixture("a+b") == direct_sum(a, b)
    with pytest.raises(ParseError):
        fixture("q")
    with pytest.raises(ValidationError):
        fixture("u_3_2")


def test_load_matroid_from_file(tmp_path, u23):
    p = tmp_path / "m.json"
    p.write_text(dumps_matroid(u23))
    assert load_matroid(p) == u23
    with pytest.raises(ParseError):
        load_matroid(tmp_path / "missing.json")


def test_catalog_matches_golden_file():
    built = Catalog.build(4)
    assert built.text() == (GOLDEN / "catalog_4.txt").read_text()
    assert built.counts() == [1, 2, 4, 8, 17]


def test_catalog_round_trip(tmp_path):
    cat = Catalog.build(3)
    path = tmp_path / "cat.txt"
    cat.write(path)
    back = Catalog.read(path)
    assert back.classes() == cat.classes() and back.bound == 3
    assert back.text() == path.read_text()


def test_catalog_rejects_tampering():
    text = (GOLDEN / "catalog_4.txt").read_text()
    lines = text.splitlines()
    with pytest.raises(ValidationError):
        Catalog.parse("\n".join(lines[:-1]) + "\n")
    with pytest.raises(ParseError):
        Catalog.parse("\n".join(lines[1:]))
    with pytest.raises(ParseError):
        Catalog.parse(text + "garbage\n")
    with pytest.raises(ParseError):
        Catalog.read("/nonexistent/catalog.txt")


def test_catalog_install_answers_enumeration(monkeypatch, tmp_path):
    monkeypatch.setattr(canon, "_preloaded", {})
    path = tmp_path / "cat.txt"
    Catalog.build(3).write(path)
    monkeypatch.setenv(CATALOG_ENV, str(path))
    code, out = run("k0", "u_2_3")
    assert code == OK and out.strip() == "r=2 c=1"
    assert set(canon._preloaded) == {0, 1, 2, 3}
    assert enumerate_matroids(3) == Catalog.read(path).blocks[3]


def test_cli_validate(tmp_path):
    code, out = run("validate", "u_2_3")
    assert code == OK and out.startswith("valid degree=3 rank=2 flats=5")
    code, out = run("validate", '{"ground":["*","1"],"flats":[["1"]]}')
    assert code == CHECK_FAILED and "basepoint" in out
    code, _ = run("validate", str(tmp_path / "missing.json"))
    assert code == USAGE


def test_cli_usage_errors():
    assert run()[0] == USAGE
    assert run("nonsense")[0] == USAGE
    assert run("k0")[0] == USAGE
    assert run("antipode")[0] == USAGE


def test_cli_iso():
    code, out = run("iso", "a+b", "b+a")
    assert code == OK and out.splitlines()[0] == "isomorphic"
    assert run("iso", "a", "b")[0] == CHECK_FAILED


def test_cli_minor():
    code, out = run("minor", "u_2_3", "--contract", "1")
    assert code == OK
    assert loads_matroid(out) == loads_matroid(json.dumps({"ground": ["*", "2", "3"], "flats": [["*"], ["*", "2", "3"]]}))


def test_cli_hall_product_golden():
    code, out = run("hall-product", "b", "a")
    assert code == OK and out == (GOLDEN / "hall_product_b_a.txt").read_text()


def test_cli_antipode_table_golden():
    code, out = run("antipode", "--degree-table", "--max-degree", "3")
    assert code == OK and out == (GOLDEN / "antipode_3.txt").read_text()


def test_cli_json_output():
    code, out = run("k0", "u_1_2", "--format", "json")
    assert code == OK and json.loads(out) == {"r": 1, "c": 1}
    code, out = run("structure-constant", "--A", "b", "--C", "a", "--B", "u_1_2", "--format", "json")
    assert json.loads(out) == {"structure_constant": 2}
    code, out = run("hall-coproduct", "a+b", "--format", "json")
    assert code == OK and len(json.loads(out)["coproduct"]) == 4


def test_cli_checks():
    code, out = run("duality", "--max-degree", "3")
    assert code == OK and out.strip() == "duality checked=15 failures=0"
    code, out = run("flags", "u_1_2", "--n", "2", "--check")
    assert code == OK and out.splitlines() == ["n=2 count=9", "square_failures=0 identity_failures=0"]
    code, out = run("verify-axioms", "--max-degree", "2")
    assert code == OK and out.splitlines()[0] == "FLATS 7 0"
    assert all(line.split()[2] == "0" for line in out.splitlines() if line.startswith("PROP"))
    code, out = run("decompose", "u_2_3")
    assert out.strip() == "a a b"
    code, out = run("mm-coproduct", "a")
    assert code == OK and len(out.splitlines()) == 2


def test_cli_build_catalog(tmp_path):
    path = tmp_path / "cat.txt"
    code, out = run("build-catalog", "--n", "4", "--out", str(path))
    assert code == OK and out.splitlines()[-1] == "degree 4 count 17"
    assert path.read_text() == (GOLDEN / "catalog_4.txt").read_text()
