import io
import json

import pytest

from supernabla.cli import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, ParseError, main, parse_expr
from supernabla.macdonald import cache_dir


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


# ---------------------------------------------------------------- expand

def test_expand_e1():
    code, text = run("expand", "e1", "--k", "1")
    assert code == EXIT_OK
    assert text.strip() == "s1(x) s1(y) : 1"


def test_expand_shift_groups_into_E():
    code, text = run("expand", "e2", "--k", "1", "--shift", "qp1")
    assert code == EXIT_OK
    assert text.splitlines() == ["E(2) : 1", "E(2,2) : s1"]


def test_expand_structured_is_json_lines():
    code, text = run("expand", "e2", "--k", "1", "--format", "structured")
    assert code == EXIT_OK
    recs = [json.loads(line) for line in text.splitlines()]
    assert {"key": [[1, 1], [1, 1]], "bases": ["s", "s"], "coeff": "q + t"} in recs
    assert len(recs) == 3


def test_expand_t1_monomial():
    code, text = run("expand", "e2", "--k", "1", "--t", "1", "--basis", "m")
    assert code == EXIT_OK
    assert "m11(x) m11(y) : q + 3" in text


def test_expand_q0_t1_counts():
    code, text = run("expand", "e3", "--k", "1", "--special", "q0t1")
    assert code == EXIT_OK
    assert "s21(x) s21(y) : 2" in text


def test_expand_schur_qt():
    code, text = run("expand", "e2", "--k", "1", "--schur-qt")
    assert code == EXIT_OK
    assert "s11(x) s11(y) : s1" in text


def test_expand_latex_has_tabular():
    code, text = run("expand", "e2", "--k", "1", "--t", "1", "--basis", "m", "--format", "latex")
    assert code == EXIT_OK
    assert text.startswith(r"\begin{tabular}")
    assert "q + 3" in text


def test_expand_rejects_large_degree():
    assert run("expand", "e7")[0] == EXIT_USAGE
    assert run("expand", "e7", "--max-n", "7", "--k", "0")[0] == EXIT_OK


def test_expand_parse_errors():
    assert run("expand", "foo")[0] == EXIT_USAGE
    assert run("expand", "e2", "--shift", "qm1")[0] == EXIT_USAGE
    assert run("expand", "e2", "--shift", "qp1", "--t", "1")[0] == EXIT_USAGE


def test_parse_expr_forms():
    for text in ["e3", "h3", "p3", "wp3", "xi(e21)", "delta(m1,e2)", "Ev(0,1,2)"]:
        assert parse_expr(text) is not None
    with pytest.raises(ParseError):
        parse_expr("e0")
    with pytest.raises(ParseError):
        parse_expr("s21")


def test_unknown_subcommand():
    assert run("frobnicate")[0] == EXIT_USAGE
    assert run()[0] == EXIT_USAGE


# ---------------------------------------------------------------- enumerate

@pytest.mark.parametrize("content", ["1,2,3;1,1,2;1,1,1", "m111;m21;m3"])
def test_enumerate_three_label_example(content):
    code, text = run("enumerate", "mld", "--n", "3", "--k", "2", "--content", content)
    assert code == EXIT_OK
    assert text.strip() == "mld: 12 objects, GF q^2 + 4*q + 7"


def test_enumerate_dump_structured():
    code, text = run("enumerate", "mld", "--n", "3", "--k", "2", "--content", "m111;m21;m3",
                     "--dump", "--format", "structured")
    assert code == EXIT_OK
    lines = [json.loads(x) for x in text.splitlines()]
    assert len(lines) == 13
    assert lines[-1] == {"family": "mld", "count": 12, "gf": "q^2 + 4*q + 7"}


def test_enumerate_other_families():
    assert run("enumerate", "sr", "--mu", "2")[1].startswith("sr: 2 objects")
    assert run("enumerate", "square", "--n", "3")[1].startswith("square: 10 objects")
    assert run("enumerate", "polyomino", "--n", "2", "--width", "2")[1].startswith("polyomino: 3 objects")
    assert run("enumerate", "marked", "--n", "2", "--k", "0", "--gamma", "1")[1].startswith("marked: 4 objects")
    code, text = run("enumerate", "cct", "--mu", "21", "--order", "4")
    assert code == EXIT_OK and "GF 3*q^4 + 3*q^3 + 2*q^2 + q + 2" in text


def test_enumerate_usage_errors():
    assert run("enumerate", "mld", "--n", "2", "--k", "1")[0] == EXIT_USAGE
    assert run("enumerate", "mld", "--n", "2", "--k", "1", "--content", "1,2")[0] == EXIT_USAGE
    assert run("enumerate", "sr")[0] == EXIT_USAGE
    assert run("enumerate", "marked", "--n", "2")[0] == EXIT_USAGE
    assert run("enumerate", "nope")[0] == EXIT_USAGE


# ---------------------------------------------------------------- verify

def test_verify_classical():
    code, text = run("verify", "--suite", "classical", "--n", "4")
    assert code == EXIT_OK
    assert "0 mismatches" in text.splitlines()[-1]


def test_verify_t1_and_log(tmp_path):
    log = tmp_path / "log.jsonl"
    code, text = run("verify", "--suite", "t1", "--n", "2", "--k", "1", "--log", str(log))
    assert code == EXIT_OK
    recs = [json.loads(x) for x in log.read_text().splitlines()]
    assert len(recs) == 2 and all(r["verdict"] == "match" for r in recs)


def test_verify_power_structured():
    code, text = run("verify", "--suite", "power", "--n", "2", "--k", "1", "--format", "structured")
    assert code == EXIT_OK
    recs = [json.loads(x) for x in text.splitlines()]
    assert recs and all(r["check"] == "power_theorem" for r in recs)


def test_verify_requires_suite():
    assert run("verify")[0] == EXIT_USAGE


# ---------------------------------------------------------------- cache

def test_cache_lifecycle():
    assert run("cache", "clear")[0] == EXIT_OK
    code, text = run("cache", "build", "--n", "2")
    assert code == EXIT_OK and "n=2 written" in text
    code, text = run("cache", "info")
    assert "n=1" in text and "n=2" in text
    code, text = run("cache", "check")
    assert code == EXIT_OK and "n=2 ok" in text
    code, text = run("cache", "clear")
    assert code == EXIT_OK and "removed" in text


def test_cache_check_flags_corruption():
    run("cache", "clear")
    run("cache", "build", "--n", "2")
    path = next(cache_dir().glob("htilde-v*-n2.json"))
    data = json.loads(path.read_text())
    data["sha256"] = "0" * 64
    path.write_text(json.dumps(data))
    code, text = run("cache", "check")
    assert code == EXIT_MISMATCH
    assert "n=2 rejected" in text
    run("cache", "clear")
