import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hochschild import triword as tw
from hochschild.triword import TriwordError

KNOWN_SIZES = [2, 5, 12, 28, 64, 144, 320, 704, 1536, 3328]


def brute_force_words(n):
    return sorted("".join(w) for w in itertools.product("012", repeat=n) if tw.is_triword("".join(w)))


@st.composite
def same_size_pair(draw, n_max=6):
    n = draw(st.integers(1, n_max))
    words = tw.generate(n)
    return draw(st.sampled_from(words)), draw(st.sampled_from(words))


@pytest.mark.parametrize("word", ["120", "102", "0", "1", "12222", "10002"])
def test_validate_accepts(word):
    assert tw.validate(word) == word


@pytest.mark.parametrize("word,reason", [
    ("201", "leading-2"),
    ("1021", "forbidden-01-subword"),
    ("01", "forbidden-01-subword"),
    ("103", "bad-alphabet"),
])
def test_validate_rejects_with_reason(word, reason):
    with pytest.raises(TriwordError) as info:
        tw.validate(word)
    assert info.value.reason == reason


def test_validate_digit_sequence_and_empty():
    assert tw.validate([1, 2, 0]) == "120"
    assert tw.validate(tw.EMPTY) == ""


def test_small_listings():
    assert tw.generate(0) == [""]
    assert tw.generate(1) == ["0", "1"]
    assert tw.generate(2) == ["00", "02", "10", "11", "12"]
    assert tw.generate(3) == ["000", "002", "020", "022", "100", "102", "110", "111",
                              "112", "120", "121", "122"]


@pytest.mark.parametrize("n", range(1, 11))
def test_count_matches_table(n):
    assert len(tw.generate(n)) == tw.count(n) == KNOWN_SIZES[n - 1]


@pytest.mark.parametrize("n", range(0, 9))
def test_grammar_matches_filter(n):
    assert tw.generate(n) == brute_force_words(n)


def test_count_up_to_twelve():
    for n in range(1, 13):
        assert len(tw.generate(n)) * 4 == 2 ** n * (n + 3)


def test_leq_examples():
    assert tw.leq("000", "122")
    assert not tw.leq("02", "11")
    assert tw.leq("10", "12")
    with pytest.raises(ValueError):
        tw.leq("0", "00")


def test_cover_examples():
    assert tw.upper_covers("00") == ["02", "10"]
    assert tw.covers("110", "120")
    assert not tw.covers("000", "122")
    assert not tw.covers("00", "12")
    # 0 -> 2 is only a cover where 0 -> 1 is forbidden
    assert not tw.covers("00", "20")
    assert not tw.covers("100", "120")
    assert tw.covers("100", "102")


def test_meet_examples():
    assert tw.meet("11112", "10222") == "10002"
    assert tw.componentwise_min("11112", "10222") == "10112"
    assert not tw.is_triword(tw.componentwise_min("11112", "10022"))
    assert tw.componentwise_min("11112", "10022") == "10012"


def test_join_examples():
    assert tw.join("02", "10") == "12"


@pytest.mark.parametrize("n,edges", [(1, 1), (2, 5), (3, 18)])
def test_hasse_sizes(n, edges):
    p = tw.hasse(n)
    assert len(p) == len(tw.generate(n))
    assert len(p.covers) == edges


def test_hasse_n2_edges():
    assert sorted(tw.hasse(2).cover_labels()) == [
        ("00", "02"), ("00", "10"), ("02", "12"), ("10", "11"), ("11", "12")]


@pytest.mark.parametrize("n", range(1, 7))
def test_covers_are_transitive_reduction(n):
    assert tw.hasse(n) == tw.brute_force_hasse(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_bottom_and_top(n):
    p = tw.hasse(n)
    assert p.elements[p.bottom] == tw.bottom(n) == "0" * n
    assert p.elements[p.top] == tw.top(n) == "1" + "2" * (n - 1)


def test_lower_covers_inverse_to_upper():
    for n in range(1, 6):
        for u in tw.generate(n):
            for v in tw.upper_covers(u):
                assert u in tw.lower_covers(v)
                assert tw.covers(u, v)


@given(same_size_pair())
def test_join_is_least_upper_bound(pair):
    u, v = pair
    j = tw.join(u, v)
    assert tw.is_triword(j) and tw.leq(u, j) and tw.leq(v, j)
    for w in tw.generate(len(u)):
        if tw.leq(u, w) and tw.leq(v, w):
            assert tw.leq(j, w)


@given(same_size_pair())
def test_meet_is_greatest_lower_bound(pair):
    u, v = pair
    m = tw.meet(u, v)
    assert tw.is_triword(m) and tw.leq(m, u) and tw.leq(m, v)
    for w in tw.generate(len(u)):
        if tw.leq(w, u) and tw.leq(w, v):
            assert tw.leq(w, m)


@settings(max_examples=200)
@given(same_size_pair(), st.data())
def test_absorption_and_commutativity(pair, data):
    u, v = pair
    assert tw.join(u, tw.meet(u, v)) == u
    assert tw.meet(u, tw.join(u, v)) == u
    assert tw.join(u, v) == tw.join(v, u)
    assert tw.meet(u, v) == tw.meet(v, u)
    w = data.draw(st.sampled_from(tw.generate(len(u))))
    assert tw.meet(tw.meet(u, v), w) == tw.meet(u, tw.meet(v, w))


@given(st.integers(1, 7).flatmap(lambda n: st.sampled_from(tw.generate(n))))
def test_neutral_elements(u):
    n = len(u)
    assert tw.join(tw.bottom(n), u) == u
    assert tw.meet(u, tw.top(n)) == u
    assert tw.join(u, u) == u == tw.meet(u, u)
