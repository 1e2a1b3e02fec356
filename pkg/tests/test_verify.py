import pytest

from thompson import verify
from thompson.cli import main
from thompson.plmap import PLMap
from thompson.verify import (
    SUITES,
    Instance,
    Report,
    check_cost_witnesses,
    check_h_and_sigma,
    check_isomorphisms,
    check_lemma41,
    check_noncommute_pattern,
    check_presentations,
    check_remark_identity,
    format_records,
    format_text,
    run_suite,
)
from thompson.words import Word


def labels(report):
    return {i.label: i for i in report.instances}


def test_presentations():
    rep = check_presentations()
    assert rep.passed, rep.failures()
    got = labels(rep)
    naive = got["y.naive_substitution(-1,0)"]
    assert naive.expected is False and naive.observed is False
    assert got["G.adjacent_noncommute(7,8)"].observed is False
    assert "g@4.braid(2,3,4)" in got and "g@8.commute(0,8)" in got
    assert "rG.braid(-5,-4,-3)" in got
    assert sum(1 for i in rep.instances if i.kind == "x.xshift") == 55


def test_isomorphisms():
    rep = check_isomorphisms()
    assert rep.passed, rep.failures()
    got = labels(rep)
    assert got["phi_n.g_to_G(4,4)"].observed
    assert got["phi_n.value_at_k(8,8)"].observed
    assert got["phi_n.node(5,6)"].observed


def test_remark_identity():
    rep = check_remark_identity()
    assert rep.passed, rep.failures()
    assert {i.kind for i in rep.instances} >= {"chain", "g_family.braid", "s_shift"}


def test_lemma41():
    rep = check_lemma41(k_max=3, samples=60)
    assert rep.passed, rep.failures()
    got = labels(rep)
    assert got["witness(1)"].observed is False
    assert got["empty(0)"].observed
    assert len(rep.notes) == 4


def test_h_sigma_cost_noncommute():
    for rep in (check_h_and_sigma(k_max=3, n_max=4), check_cost_witnesses(), check_noncommute_pattern()):
        assert rep.passed, (rep.check, rep.failures())
    got = labels(check_cost_witnesses())
    assert got["even_commute(2,4)"].observed
    assert got["g1_fixes(-2)"].observed
    assert got["g1_moves(0)"].observed is False
    got = labels(check_noncommute_pattern())
    assert got["adjacent(3,4)"].observed is False
    assert got["far(0,3)"].observed


def test_reports_deterministic():
    a = run_suite("lemma41", k_max=2, samples=30, seed=5)
    b = run_suite("lemma41", k_max=2, samples=30, seed=5)
    assert format_records(a) == format_records(b)
    assert format_text(a) == format_text(b)
    assert "seed=5" in format_records(a)


def test_run_suite_selection():
    reps = run_suite("cost", r=2, seed=1, unrelated=3)
    assert [r.check for r in reps] == ["cost"]
    assert reps[0].params == {"r": 2}
    with pytest.raises(KeyError):
        run_suite("nope")
    assert sorted(SUITES) == ["cost", "h-sigma", "isomorphisms", "lemma41", "noncommute",
                              "presentations", "remark-identity"]


def test_instances_sorted():
    rep = Report("t", {}, [Instance("b", (1,), True, True), Instance("a", (2,), True, True),
                           Instance("a", (-1,), True, True)])
    assert [i.label for i in rep.instances] == ["a(-1)", "a(2)", "b(1)"]


def test_failing_instance_reproducible(tmp_path, capsys):
    w = Word.parse("G[0]*G[1]*G[0]^-1*G[1]^-1")
    inst = verify._word_instance("forced", (0, 1), w)
    assert not inst.ok
    head, _, maptext = inst.counterexample.partition("\n")
    assert head == f"word: {w}"
    # the word alone reproduces the failure in one call
    assert main(["eq", str(w), ""]) == 1
    # the serialized map re-parses to the realized commutator
    path = tmp_path / "cx.map"
    path.write_text(maptext)
    assert PLMap.from_text(maptext).to_text() == maptext
    assert main(["eq", str(path), str(w)]) == 0
    rep = Report("forced", {}, [inst])
    text = format_text([rep])
    assert "[FAIL] forced" in text and "word: G[0]*G[1]*G[0]^-1*G[1]^-1" in text
    assert 'forced,,"forced(0,1)",fail' in format_records([rep])
    capsys.readouterr()


def test_map_instance_counterexample():
    from thompson.generators import gen_Gt

    inst = verify._map_instance("m", (0,), gen_Gt(0), gen_Gt(1))
    assert not inst.ok
    assert inst.counterexample.startswith("lhs:\ndomain: real")
