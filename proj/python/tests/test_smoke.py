import json

import pytest

import synmon


def test_syntactic_sizes():
    assert synmon.syntactic_algebra("set", "(ab)*").size == 6
    assert synmon.syntactic_algebra("inv", "(ab)*").size == 12
    assert synmon.syntactic_algebra("jsl", "a*").size == 2
    assert synmon.syntactic_algebra("vect", "(b*ab*a)*b*", prime=2).size == 2


def test_algebra_tables():
    s = synmon.syntactic_algebra("set", "(ab)*")
    assert s.class_of("aa") == s.class_of("bb") == s.zero
    assert s.class_of("") == s.unit
    a, b = s.generators
    assert s.mult[s.mult[a][b]][a] == a
    assert s.law_violations() == []
    assert json.loads(s.to_json())


def test_pset_bottom():
    s = synmon.syntactic_algebra("pset", "(ab)*")
    assert s.class_of("_|_") == s.class_of("aa")


def test_congruence_oracle():
    assert synmon.congruent("jsl", "(ab)*", "{ab}", "{ab,aabb}")
    assert not synmon.congruent("set", "(ab)*", "ab", "")


def test_dfa_round_trip():
    d = synmon.min_dfa("(ab)*")
    assert d.states == 3
    assert d.accepts("abab") and not d.accepts("aba")
    assert synmon.Dfa.from_json(d.to_json()) == d


def test_checks_and_duality():
    for v in synmon.varieties():
        assert all(passed for _, passed, _ in synmon.check(v, "(a|b)*a"))
    syn, mini = (json.loads(r) for r in synmon.duality("(ab)*"))
    assert syn["atoms"] == syn["synSize"] == 6 and syn["passed"]
    assert mini["atoms"] == mini["states"] == 3


def test_errors():
    with pytest.raises(ValueError):
        synmon.min_dfa("((")
    with pytest.raises(synmon.CapacityError):
        synmon.syntactic_algebra("jsl", "(ab)*", max_jsl_states=4)


def test_cli():
    code, out, _ = synmon.run_cli(["dual", "--regex", "(ab)*"])
    assert code == 0
    assert "atoms=6 syn=6 isomorphic=true" in out
    assert synmon.run_cli(["syn", "--regex", "(("])[0] == 2
