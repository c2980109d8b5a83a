import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hochschild import invariants as inv
from hochschild import triword as tw
from hochschild.poset import FinitePoset


def test_labels_of_displayed_chains():
    inc = ("000", "100", "110", "120", "121", "122")
    dec = ("000", "002", "022", "122")
    assert inv.chain_labels(inc) == ((1, 0), (2, 0), (2, 1), (3, 0), (3, 1))
    assert inv.chain_labels(dec) == ((3, 0), (2, 0), (1, 0))
    chains = inv.saturated_chains("000", "122")
    assert [c for c in chains if inv.is_increasing(inv.chain_labels(c))] == [inc]
    assert [c for c in chains if inv.is_weakly_decreasing(inv.chain_labels(c))] == [dec]


def test_interval_report():
    rep = inv.shellability_of_interval("000", "122")
    assert (rep.chains, rep.increasing_chains, rep.weakly_decreasing_chains) == (8, 1, 1)
    assert rep.increasing_is_lex_min and rep.ok


def test_weakly_decreasing_allows_ties():
    assert inv.is_weakly_decreasing(((2, 0), (2, 0)))
    assert not inv.is_increasing(((2, 0), (2, 0)))


@pytest.mark.parametrize("n", range(1, 5))
def test_el_certificate(n):
    reports = inv.certify_el_shellability(n)
    assert len(reports) == sum(1 for u in tw.generate(n) for v in tw.generate(n) if tw.leq(u, v))
    assert all(r.ok for r in reports)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_el_on_random_intervals_of_size_six(data):
    words = tw.generate(6)
    u = data.draw(st.sampled_from(words))
    v = data.draw(st.sampled_from([w for w in words if tw.leq(u, w)]))
    assert inv.shellability_of_interval(u, v).ok


def test_mobius_examples():
    assert inv.mobius("00", "00") == 1
    assert inv.mobius("00", "02") == -1
    # pentagon: the top gets +1, the middle of the long side 0
    assert inv.mobius("00", "12") == 1
    assert inv.mobius("00", "11") == 0


@pytest.mark.parametrize("n", range(1, 6))
def test_mobius_range(n):
    assert inv.mobius_values(n) <= {-1, 0, 1}


@pytest.mark.parametrize("n", range(1, 9))
def test_irreducibles(n):
    J, M = inv.join_irreducibles(n), inv.meet_irreducibles(n)
    assert len(J) == len(M) == 2 * n - 1
    assert J == [w for w in tw.generate(n) if inv.JOIN_IRREDUCIBLE.fullmatch(w)]
    assert M == [w for w in tw.generate(n) if inv.MEET_IRREDUCIBLE.fullmatch(w)]


def test_irreducibles_n3():
    assert inv.join_irreducibles(3) == ["002", "020", "100", "110", "111"]
    assert inv.meet_irreducibles(3) == ["022", "102", "112", "120", "121"]


@pytest.mark.parametrize("n", range(1, 8))
def test_maximal_chains_and_spine(n):
    stats = inv.maximal_chain_stats(n)
    assert stats.ok and stats.length == 2 * n - 1
    assert len(inv.spine_words(n)) == 2 ** n


@pytest.mark.parametrize("n", range(1, 6))
def test_spine_is_distributive_sublattice(n):
    s = inv.spine(n)
    assert inv.is_distributive(s)
    assert inv.is_sublattice_of_tr(list(s.elements))


@pytest.mark.parametrize("n", range(2, 7))
def test_spine_join_irreducibles_form_ladder(n):
    q = inv.spine_join_irreducibles(n)
    assert list(q.elements) == sorted(w for w in tw.generate(n) if inv.SPINE_JOIN_IRREDUCIBLE.fullmatch(w))
    assert sorted(q.cover_labels()) == inv.ladder_covers(n)


def test_birkhoff_on_n3():
    s = inv.spine(3)
    ideals = inv.order_ideals(s.induced(inv.join_irreducibles_of(s)))
    assert len(ideals) == 8
    assert inv.birkhoff_isomorphism(3) is not None


@pytest.mark.parametrize("n", range(1, 6))
def test_birkhoff(n):
    assert inv.birkhoff_isomorphism(n) is not None


def test_order_ideals_of_antichain_is_boolean():
    p = FinitePoset(["a", "b", "c"], [])
    j = inv.order_ideals(p)
    assert len(j) == 8 and inv.is_distributive(j)


def test_diamond_not_distributive_nor_semidistributive():
    m3 = FinitePoset(["0", "a", "b", "c", "1"], [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
    assert m3.is_lattice()
    assert not inv.is_distributive(m3)
    assert any(inv.semidistributive_violations(m3))


@pytest.mark.parametrize("n", range(1, 5))
def test_semidistributive_extremal_trim(n):
    assert inv.check_semidistributive(n).ok
    assert inv.check_extremal(n).ok
    assert inv.check_trim(n).ok


def test_trim_chain_n3():
    p = tw.hasse(3)
    chain = [p.elements[i] for i in inv.left_modular_chain(p)]
    assert chain == ["000", "100", "110", "120", "121", "122"]
