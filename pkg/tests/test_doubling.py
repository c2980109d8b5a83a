import pytest

from hochschild import doubling as dbl
from hochschild import triword as tw
from hochschild.invariants import semidistributive_violations
from hochschild.poset import FinitePoset


def chain3():
    return FinitePoset(["a", "b", "c"], [(0, 1), (1, 2)])


def test_double_a_point_of_chain():
    p = dbl.double_interval(chain3(), "b", "b")
    assert len(p) == 4
    assert sorted(p.cover_labels()) == [("(b,0)", "(b,1)"), ("(b,1)", "c"), ("a", "(b,0)")]


def test_double_whole_poset_is_product():
    p = dbl.double_interval(chain3(), "a", "c")
    assert len(p) == 6 and len(p.covers) == 7


def test_double_rejects_non_interval():
    with pytest.raises(ValueError):
        dbl.double_interval(chain3(), "c", "a")


def test_first_doubling_gives_tr1():
    _, p = dbl.doubling_sequence(1)[0]
    assert p == tw.hasse(1)


@pytest.mark.parametrize("n", range(1, 7))
def test_two_step_reconstruction(n):
    rep = dbl.verify_doubling_construction(n)
    assert rep.ok
    assert rep.exact and rep.sets_match
    assert rep.size == tw.count(n + 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_sequence_length_and_end(n):
    seq = dbl.doubling_sequence(n)
    assert len(seq) == 2 * n - 1
    assert seq[-1][1] == tw.hasse(n)


def test_interval_I0():
    assert dbl.interval_I0(2) == ["110", "120"]
    assert len(dbl.interval_I0(4)) == 2 ** 3


@pytest.mark.parametrize("n", range(1, 4))
def test_intermediate_posets_semidistributive(n):
    for _, p in dbl.doubling_steps(tw.hasse(n)):
        assert p.is_lattice()
        assert not any(semidistributive_violations(p, cap=1))
