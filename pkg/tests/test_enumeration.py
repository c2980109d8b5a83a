from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hochschild import enumeration as en
from hochschild import triword as tw
from hochschild.polynomial import BivarPolynomial, Polynomial


# degree polynomial ------------------------------------------------------------

def test_degree_profile_n2():
    x, y = BivarPolynomial.x(), BivarPolynomial.y()
    assert en.degree_profile(2) == x * x + 3 * x * y + y * y


@pytest.mark.parametrize("n", range(2, 11))
def test_degree_polynomial(n):
    assert en.degree_profile(n) == en.degree_closed_form(n)
    assert not en.regularity_defects(n)
    assert en.h_polynomial(n) == en.h_closed_form(n)


def test_h_polynomial_sums_to_size():
    for n in range(2, 9):
        assert en.h_polynomial(n)(1) == tw.count(n)


# mini Hochschild --------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 11))
def test_mini_count(n):
    assert len(en.generate_mu(n)) == en.count_mu(n) == 2 ** (n - 2) * (n + 1)


def test_mini_n2_intervals():
    assert en.generate_mu(2) == ["10", "11", "12"]
    assert en.count_multichains(2, 2, "mu") == 6


# Z-classification and phi -----------------------------------------------------

def test_phi_worked_examples():
    assert en.phi(["00200", "02200", "02202", "12222"]) == (2, ("0020", "0220", "0220", "1222"))
    assert en.phi(["00000", "00200", "12210", "12211", "12212"]) == (1, ("0000", "0020", "1221", "1221", "1221"))


def test_phi_worked_example_indices():
    assert en.z_index(["00200", "02200", "02202", "12222"]) == 1
    assert en.phi_inverse(1, 2, ("0020", "0220", "0220", "1222")) == ("00200", "02200", "02202", "12222")
    assert en.z_index(["00000", "00200", "12210", "12211", "12212"]) == 2
    assert en.phi_inverse(2, 1, ("0000", "0020", "1221", "1221", "1221")) == (
        "00000", "00200", "12210", "12211", "12212")


def test_phi_rejects_malformed():
    with pytest.raises(ValueError):
        en.phi(["12", "00"])
    with pytest.raises(ValueError):
        en.phi(["12", "000"])


@pytest.mark.parametrize("n", range(2, 5))
@pytest.mark.parametrize("k", range(1, 4))
def test_phi_bijection(n, k):
    zs = en.classify_chains(n, k)
    for i in range(k + 1):
        images = [en.phi(c) for c in zs[i]]
        assert len(set(images)) == len(images)
        assert sorted(images) == sorted(en.phi_preimage_domain(n, k, i))
        for c, (t, short) in zip(zs[i], images):
            assert en.phi_inverse(i, t, short) == c


@given(st.integers(2, 4), st.integers(1, 3), st.data())
def test_phi_inverse_lands_in_class(n, k, data):
    i = data.draw(st.integers(0, k))
    domain = en.phi_preimage_domain(n, k, i)
    if domain:
        t, short = data.draw(st.sampled_from(domain))
        chain = en.phi_inverse(i, t, short)
        assert en.z_index(chain) == i
        assert en.phi(chain) == (t, tuple(short))


# z-system ---------------------------------------------------------------------

def test_z_system_examples():
    assert en.z_counts(2, 1) == ([3, 2], 5)
    assert en.z_counts(3, 2)[1] == 53
    assert en.ZSystem(2).matrix == [[3, 1, 1], [0, 3, 2], [0, 0, 3]]


@pytest.mark.parametrize("variant", ["tr", "mu"])
@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("k", range(1, 4))
def test_z_system_matches_brute_force(variant, n, k):
    vec, total = en.z_counts(n, k, variant)
    classes = en.classify_chains(n, k, variant)
    assert vec == [len(c) for c in classes]
    assert total == en.count_multichains(n, k, variant)


def test_one_chains_are_elements():
    for n in range(1, 13):
        assert en.z_counts(n, 1)[1] == tw.count(n)
        assert en.z_counts(n, 1, "mu")[1] == en.count_mu(n)


# closed forms -----------------------------------------------------------------

@pytest.mark.parametrize("variant", ["tr", "mu"])
@pytest.mark.parametrize("k", range(1, 6))
def test_closed_forms(variant, k):
    p = en.CLOSED_FORMS[(variant, k)]
    assert p.degree == k and p.is_monic
    for n in range(1, 13):
        assert en.closed_form_count(n, k, variant) == en.z_counts(n, k, variant)[1]
    assert en.chain_polynomial(k, variant) == p


@pytest.mark.parametrize("k", range(1, 7))
def test_chain_polynomial_properties(k):
    p = en.chain_polynomial(k)
    assert p.degree == k and p.is_monic
    assert p(1) == (k + 1) ** (k + 1)


@pytest.mark.parametrize("k", range(1, 5))
def test_interpolation_is_node_independent(k):
    assert en.chain_polynomial(k, start=1) == en.chain_polynomial(k) == en.chain_polynomial(k, start=9)


def test_constant_terms():
    assert tuple(en.chain_polynomial(k)[0] for k in range(1, 6)) == en.CONNECTED_FUNCTIONS
    assert tuple(en.chain_polynomial(k, "mu")[0] for k in range(1, 6)) == en.FACTORIALS


def test_mini_k4_brute_force_values():
    assert [en.z_counts(n, 4, "mu")[1] for n in range(1, 6)] == [1, 15, 160, 1450, 11899]
    assert [en.count_multichains(n, 4, "mu") for n in range(1, 5)] == [1, 15, 160, 1450]


def test_misprinted_mini_form_is_not_a_count():
    value = Fraction(5) ** (1 - 5) * Fraction(en.MISPRINTED_MU_4(1))
    assert value != 1
    assert en.closed_form_count(1, 4, "mu") == 1


def test_known_k2_formulas():
    for n in range(1, 10):
        assert en.z_counts(n, 2)[1] == Fraction(3) ** (n - 3) * (n * n + 9 * n + 17)
        assert en.z_counts(n, 2, "mu")[1] == Fraction(3) ** (n - 3) * (n * n + 6 * n + 2)


# N-powers ---------------------------------------------------------------------

@pytest.mark.parametrize("k", range(1, 7))
def test_n_power_diagonal_entries(k):
    for l in range(0, k + 1):
        for (i, j), (got, want) in en.n_power_entries(k, l).items():
            assert got == want == factorial(i + l - 1) // factorial(i - 1)


@pytest.mark.parametrize("k", range(1, 6))
def test_n_power_support_is_diagonal_band(k):
    for l in range(1, k + 2):
        assert all(j - i >= l for i, j in en.n_power_support(k, l))
    assert en.n_power_support(k, k + 1) == []


@pytest.mark.parametrize("k,n", [(1, 5), (3, 7), (5, 3), (6, 10)])
def test_binomial_expansion(k, n):
    assert en.binomial_expansion_check(k, n)


# tables -----------------------------------------------------------------------

def test_count_rows_csv():
    rows = en.count_rows(3, 1, variants=("tr",))
    assert [r["total"] for r in rows] == [2, 5, 12]
    assert en.rows_to_csv(rows).splitlines()[:2] == ["n,k,variant,z,total", "1,1,tr,1 1,2"]
