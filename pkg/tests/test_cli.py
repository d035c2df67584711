import json
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from knotsplit import ParseError, Presentation, Word
from knotsplit.cli import main
from knotsplit.dsl import format_presentation, parse_presentation, parse_word, parse_words

from conftest import nonempty_words


# -- DSL ------------------------------------------------------------------

def test_parse_52():
    P = parse_presentation("< a, b, t | t a t^-1 = b, t b^-1 a b^-1 t^-1 = (b^-1 a)^2 >")
    assert P.generators == ("a", "b", "t")
    assert P.relators == (Word.from_string("t a t^-1 b^-1"),
                          Word.from_string("t b^-1 a b^-1 t^-1 a^-1 b a^-1 b"))


def test_parse_free_group_and_padding():
    P = parse_presentation("< a | >")
    assert P.generators == ("a",) and P.relators == ()
    Q = parse_presentation("<a,b|a b a^-1 b^-1, 1>")
    assert Q.padding == 1


@pytest.mark.parametrize("text", [
    "< a, b | (a b)^0 >",
    "< a, b | a a^-1 >",
    "< a, b | c >",
    "< a, a | a >",
    "< a | a ",
    "< a | a^ >",
    "< a | 2 >",
    "< a | a $ >",
    "a | a >",
])
def test_syntax_errors(text):
    with pytest.raises(ParseError):
        parse_presentation(text)


def test_error_position():
    with pytest.raises(ParseError) as e:
        parse_presentation("< a, b |\n  a c >")
    assert (e.value.line, e.value.column) == (2, 5)


def test_words():
    assert parse_word("1") == Word()
    assert parse_word("(a b^2)^-1") == Word.from_string("b^-2 a^-1")
    assert parse_words("a, b^-1 a b^-1") == [Word.from_string("a"), Word.from_string("b^-1 a b^-1")]
    assert parse_words("") == []
    with pytest.raises(ParseError):
        parse_word("a", generators=["b"])


@st.composite
def presentations(draw):
    n = draw(st.integers(1, 3))
    gens = ["a", "b", "c@1"][:n]
    rels = draw(st.lists(nonempty_words(tuple(gens), 8), max_size=3))
    return Presentation(tuple(gens), tuple(rels), draw(st.integers(0, 2)))


@given(presentations())
def test_roundtrip(P):
    assert parse_presentation(format_presentation(P)) == P
    assert Presentation.parse(str(P)) == P


# -- CLI --------------------------------------------------------------------

def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out)["result"] if code == 0 and out.out else None), out


def test_cli_wada_fixture(capsys):
    code, res, _ = run(capsys, "wada", "--fixture", "5_2", "--rep", "trivial")
    assert code == 0
    assert res["degree"] == 1
    assert res["bounds"] == {"genus": 1, "rank": 2}
    assert res["Q_str"] == "2*t^2 - 3*t + 2"


def test_cli_fold(capsys):
    code, res, _ = run(capsys, "fold", "--gens", "a, b^-1 a b^-1, b^-2 a b^-2")
    assert code == 0 and res["rank"] == 3
    code, res, _ = run(capsys, "fold", "--gens", "a, b^-1 a b^-1, b^-1 a^2 b, b^-2 a b^-2, b^4",
                       "--alphabet", "a,b", "--member", "b^-1 a b^-1")
    assert (res["rank"], res["index"]) == (5, 4)
    assert res["member"]["contained"]
    code, res, _ = run(capsys, "fold", "--gens", "a, b^-1 a b^-1", "--images", "b, (b^-1 a)^2")
    assert res["injective"] is True


def test_cli_amalgam(capsys):
    code, res, _ = run(capsys, "hnn-amalgam", "--fixture", "5_2", "--from", "0", "--to", "2")
    assert code == 0
    assert res["presentation"]["num_generators"] == 6
    assert res["presentation"]["num_relators"] == 4


def test_cli_other_verbs(capsys):
    assert run(capsys, "parse", "--pres", "< a | a^2 >")[1]["relators"] == ["a^2"]
    assert run(capsys, "abelianize", "--fixture", "trefoil")[1] == {"free_rank": 1, "torsion": []}
    res = run(capsys, "fox", "--fixture", "bs_1_2", "--evaluate")[1]
    assert res["evaluated"][0][0] == [[0, "-2"], [1, "1"]]
    assert run(capsys, "rep-search", "--fixture", "trefoil", "--dim", "2", "--p", "2")[1]["count"] == 12
    assert run(capsys, "hnn-present", "--fixture", "5_2")[1]["monomorphism_verified"] is True
    assert run(capsys, "hnn-induce", "--fixture", "5_2", "--n", "0")[1]["d"] == 2
    res = run(capsys, "hnn-check", "--fixture", "5_2_rank3")[1]
    assert res["degree_bound"]["slack"] == 1
    res = run(capsys, "knot-from-pd", "--pd", "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]")[1]
    assert res["alexander"] == "t^2 - 3*t + 1"
    assert run(capsys, "fixture", "unknot")[1]["presentation"] == "< a |  >"
    res = run(capsys, "wada", "--fixture", "5_2", "--field", "fp:5")[1]
    assert res["Q_str"] == "t^2 + t + 1"


def test_cli_rep_json(capsys, tmp_path):
    code, res, _ = run(capsys, "rep-search", "--fixture", "5_2", "--dim", "2", "--p", "3", "--limit", "3")
    rep = res["representations"][2]
    f = tmp_path / "rep.json"
    f.write_text(json.dumps(rep))
    code, res, _ = run(capsys, "wada", "--fixture", "5_2", "--rep", f"@{f}")
    assert code == 0 and res["dimension"] == 2


def test_cli_exit_codes(capsys):
    code, _, out = run(capsys, "bound", "--pres", "< a, b | >", "--eps", '{"a": 1, "b": 0}')
    assert code == 1 and "ZeroInvariantError" in out.err
    code, _, out = run(capsys, "wada", "--fixture", "5_2", "--column", "a")
    assert code == 1 and "ColumnError" in out.err
    assert run(capsys, "parse", "--pres", "< a, b | (a b)^0 >")[0] == 2
    assert run(capsys, "parse")[0] == 2
    assert run(capsys, "no-such-verb")[0] == 2
    assert run(capsys, "hnn-present", "--fixture", "trefoil")[0] == 2


def test_cli_output_file_and_determinism(capsys, tmp_path):
    out = tmp_path / "r.json"
    assert main(["--output", str(out), "wada", "--fixture", "figure8"]) == 0
    first = out.read_text()
    assert main(["--output", str(out), "wada", "--fixture", "figure8"]) == 0
    assert out.read_text() == first


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "knotsplit", "fold", "--gens", "a, b^-1 a b^-1, b^-2 a b^-2"],
                       capture_output=True, text=True)
    assert p.returncode == 0
    assert json.loads(p.stdout)["result"]["rank"] == 3
    q = subprocess.run([sys.executable, "-m", "knotsplit", "fold", "--gens", "a, b^-1 a b^-1, b^-2 a b^-2"],
                       capture_output=True, text=True)
    assert q.stdout == p.stdout
