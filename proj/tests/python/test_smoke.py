import itertools

import pytest

import htcraig

VALUES = ["F", "NF", "T"]
ORDER = {v: i for i, v in enumerate(VALUES)}


def test_parse_and_print():
    f = htcraig.parse("p & ~q -> nh(r)")
    assert str(f) == "p & ~q -> nh(r)"
    assert f == htcraig.parse("(p & ~q) -> nh(r)")
    assert f.voc() == {"p", "q", "r"}
    with pytest.raises(htcraig.ParseError):
        htcraig.parse("p &")
    with pytest.raises(ValueError):
        htcraig.parse("p | | q")


def test_eval_matches_tables():
    imp = {("T", "NF"): "NF", ("NF", "F"): "F", ("T", "F"): "F"}
    for a, b in itertools.product(VALUES, repeat=2):
        want = imp.get((a, b), "T")
        assert htcraig.eval("a -> b", {"a": a, "b": b}) == want
    assert htcraig.eval("nh(a)", {"a": "NF"}) == "T"
    assert htcraig.eval("~a", {"a": "NF"}) == "F"


def test_entails_and_countermodel():
    holds, cm = htcraig.entails("~~p", "p")
    assert not holds
    assert cm == {"p": "NF"}
    holds, cm = htcraig.entails("p & q", "q")
    assert holds and cm is None


def test_interpolate_round_trip():
    a, b = "(p -> q) & p", "q | r"
    result = htcraig.interpolate(a, b)
    assert result["status"] == "entails"
    c = result["interpolant"]
    assert set(htcraig.parse(c).voc()) <= {"q"}
    assert htcraig.entails(a, c)[0]
    assert htcraig.entails(c, b)[0]
    assert all(htcraig.verify_interpolant(a, c, b).values())


def test_interpolate_failure():
    result = htcraig.interpolate("~~p", "p")
    assert result["status"] == "not-entails"
    assert result["countermodel"] == {"p": "NF"}
    assert result["interpolant"] is None


def test_prove_and_normal_forms():
    ok, proof = htcraig.prove("q", "p -> q")
    assert ok and '"rule"' in proof
    ok, cm = htcraig.prove("p", "q")
    assert not ok and cm == {"p": "T", "q": "F"}
    assert str(htcraig.to_nh_nnf("nh(p | ~q)")) == "nh(p) & ~~q"
    assert str(htcraig.strengthen("nh(e) | g")) == "e -> g"
    assert [str(c) for c in htcraig.to_cnf("nh(p) | q & r")] == ["nh(p) | q", "nh(p) | r"]
    body = htcraig.body_normalize("(p -> q) -> r")
    assert htcraig.equivalent(body, "(p -> q) -> r")[0]


def test_truth_table_rows():
    rows = htcraig.truth_table("p | q")
    assert len(rows) == 9
    for assignment, value in rows:
        want = max(assignment["p"], assignment["q"], key=ORDER.get)
        assert value == want
