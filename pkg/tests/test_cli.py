import json
from types import SimpleNamespace

import pytest
from hypothesis import given, settings, assume, strategies as st

from skewhowe.cli import parse_ladder, format_ladder, LadderSyntaxError, run, main, build_parser, RunReport
from skewhowe.ladder import LadderElement, word, eval_ladder
from skewhowe.qarith import parse_q


def args(argv):
    return build_parser().parse_args(argv)


def test_parse_single_word():
    x = parse_ladder("E1 F1 @ [2,0]")
    assert x == LadderElement.of(word((2, 0), "E1", "F1"))
    assert x.source == (2, 0) and x.target == (2, 0)


def test_parse_coefficients_and_divided_powers():
    x = parse_ladder("(q^-1 + q) E1^(2) F1^(2) @ [2,0] - 3 E1 F1 @[2,0]")
    assert x.terms[word((2, 0), "E1^(2)", "F1^(2)")] == parse_q("q^-1 + q")
    assert x.terms[word((2, 0), "E1", "F1")] == -3
    assert parse_ladder("F1^(2) @ [2,0]").target == (0, 2)


def test_parse_identity_and_fraction():
    x = parse_ladder("(-q/(1 + q^2)) @ [1,1]")
    assert x == LadderElement.of(word((1, 1)), parse_q("-q/(1 + q^2)"))


def test_evaluation_through_parser():
    M = eval_ladder(parse_ladder("E1 F1 @ [2,0]"), 2, 0)
    assert M.shape == (1, 1) and M[0, 0] == parse_q("q^-1 + q")


@pytest.mark.parametrize("text,col", [
    ("E1 F1 @ [2", 11),
    ("G1 @ [1,1]", 1),
    ("E1 @ [1,-1]", 9),
    ("E1 F1", 6),
    ("(q + ) E1 @ [1,1]", 1),
])
def test_syntax_errors_report_position(text, col):
    with pytest.raises(LadderSyntaxError) as info:
        parse_ladder(text)
    assert info.value.line == 1
    assert info.value.column == col


def test_error_on_second_line():
    with pytest.raises(LadderSyntaxError) as info:
        parse_ladder("E1 @ [1,1]\n + E1 @ [x]")
    assert info.value.line == 2


def test_negative_weights_opt_in():
    x = parse_ladder("E1 @ [1,-1]", allow_negative=True)
    assert x.source == (1, -1)


def test_mixed_sources_rejected():
    with pytest.raises(LadderSyntaxError):
        parse_ladder("E1 @ [1,1] + E1 @ [2,0]")


ops = st.tuples(st.sampled_from("EF"), st.integers(1, 2), st.integers(1, 2))
coeffs = st.sampled_from(["1", "-1", "2", "q", "-q^-1 + q^3", "q/(1 + q^2)", "-1/(q^-1 + q)"])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=3, max_size=3), st.lists(st.tuples(coeffs, st.lists(ops, max_size=3)),
                                                                       min_size=1, max_size=3))
def test_format_parse_round_trip(lam, terms):
    lam = tuple(lam)
    el = None
    for c, rungs in terms:
        try:
            w = word(lam, *["%s%d^(%d)" % r for r in rungs])
        except ValueError:
            assume(False)
        t = LadderElement.of(w, parse_q(c))
        if el is not None:
            assume(t.target == el.target)
        el = t if el is None else el + t
    assert parse_ladder(format_ladder(el)) == el


def test_run_eval():
    rep = run("eval", args(["eval", "--m", "2", "--n", "0", "E1 F1 @ [2,0]"]))
    assert rep.ok
    assert rep.payload["scalar"] == "q^-1 + q"
    assert rep.payload["matrix"] == [["q^-1 + q"]]


def test_run_verify_ladders():
    rep = run("verify-ladders", args(["verify-ladders", "--family", "3", "--trials", "20"]))
    assert rep.ok
    assert rep.payload["families"]["3"]["passed"] == 20


def test_run_projector():
    rep = run("projector", args(["projector", "--k", "1", "--l", "1", "--M", "1", "--verify", "1", "1"]))
    assert rep.ok
    assert rep.payload["projectors"]["1"]["coefficients"] == ["1", "-q/(1 + q^2)"]


def test_run_invariant():
    rep = run("invariant", args(["invariant", "--braid", "s1 s1 s1", "--N", "2"]))
    assert rep.ok
    assert parse_q(rep.payload["invariant"]) == parse_q("q + q^3 + q^5 - q^9")


def test_run_klr():
    rep = run("klr", args(["klr", "--lambda", "2,0", "--beta", "1:2"]))
    assert rep.ok
    assert rep.payload["total"] == 4


def test_run_commutant():
    rep = run("commutant", args(["commutant", "--m", "1", "--n", "1", "--p", "2", "--K", "2"]))
    assert rep.ok


def test_unknown_command():
    with pytest.raises(ValueError):
        run("nope", SimpleNamespace())


def test_json_is_byte_identical(capsys):
    argv = ["eval", "--m", "1", "--n", "1", "(q) E1 F1 @ [1,1] + F1 E1 @ [1,1]"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first
    d = json.loads(first)
    assert d["schema_version"] == 1 and "timing" not in d


def test_timing_flag(capsys):
    assert main(["eval", "--timing", "E1 F1 @ [1,0]"]) == 0
    assert "total" in json.loads(capsys.readouterr().out)["timing"]


def test_text_output(capsys):
    assert main(["projector", "--k", "2", "--l", "1", "--text"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("projector: PASS")


def test_exit_codes(capsys):
    assert main(["eval", "E1 F1 @ [2"]) == 2
    assert "line 1, column 11" in capsys.readouterr().err
    assert main(["projector", "--k", "1", "--l", "1", "--M", "5"]) == 2
    with pytest.raises(SystemExit) as info:
        main(["projector"])
    assert info.value.code == 2


def test_failed_check_exit_code(capsys, monkeypatch):
    import skewhowe.cli as cli

    def bad(a, rep):
        rep.check("always false", False)

    monkeypatch.setitem(cli.COMMANDS, "eval", bad)
    assert main(["eval", "E1 @ [1,0]"]) == 1
    capsys.readouterr()


def test_report_text():
    rep = RunReport("x", {})
    rep.check("a", True)
    rep.payload["v"] = [1]
    assert rep.to_text() == "x: PASS\n  [pass] a\n  v: [1]"
