import random
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hochschild import coxeter as cx
from hochschild import triword as tw
from hochschild.poset import FinitePoset
from hochschild.polynomial import Polynomial

ROUTES = ("exact", "modular", "hessenberg")


def chain(k):
    return FinitePoset([str(i) for i in range(k)], [(i, i + 1) for i in range(k - 1)])


def random_linear_extension(p, rng):
    indeg = [len(p.lower_covers(i)) for i in range(len(p))]
    ready = [i for i in range(len(p)) if indeg[i] == 0]
    order = []
    while ready:
        x = ready.pop(rng.randrange(len(ready)))
        order.append(x)
        for y in p.upper_covers(x):
            indeg[y] -= 1
            if indeg[y] == 0:
                ready.append(y)
    return order


small_matrices = st.integers(1, 6).flatmap(
    lambda d: st.lists(st.lists(st.integers(-3, 3), min_size=d, max_size=d), min_size=d, max_size=d))


# matrices -----------------------------------------------------------------------

def test_chain_coxeter_polynomials():
    # linear A_k quiver: 1 + x + ... + x^k
    for k in range(1, 7):
        assert cx.coxeter_polynomial(chain(k)) == Polynomial([1] * (k + 1))


def test_tr1_and_tr2():
    assert cx.hochschild_coxeter_polynomial(1) == Polynomial((1, 1, 1))
    assert cx.hochschild_coxeter_polynomial(2) == Polynomial((1, 1, 0, 0, 1, 1))


@pytest.mark.parametrize("n", range(1, 6))
def test_incidence_matrix_is_unimodular(n):
    m = cx.zeta_matrix(tw.hasse(n))
    assert cx.bareiss_det(m.tolist()) == 1
    inv = cx.unit_upper_inverse(m)
    assert np.array_equal(m @ inv, np.eye(len(m), dtype=np.int64))


@pytest.mark.parametrize("n", range(1, 6))
def test_coxeter_entries_small(n):
    c = cx.coxeter_matrix(tw.hasse(n))
    assert set(np.unique(c)) <= {-1, 0, 1}


def test_zeta_rejects_bad_order():
    with pytest.raises(ValueError):
        cx.zeta_matrix(chain(3), [2, 1, 0])


@pytest.mark.parametrize("n", range(1, 5))
def test_linear_extension_invariance(n):
    p = tw.hasse(n)
    rng = random.Random(n)
    base = cx.coxeter_polynomial(p)
    for _ in range(3):
        assert cx.coxeter_polynomial(p, order=random_linear_extension(p, rng)) == base


# characteristic polynomial routes ----------------------------------------------

@settings(max_examples=60, deadline=None)
@given(small_matrices)
def test_routes_agree_on_random_matrices(rows):
    m = np.array(rows, dtype=np.int64)
    want = cx.char_poly_expansion(m)
    assert want.is_monic and want.degree == len(rows)
    for method in ROUTES:
        assert cx.char_poly(m, method) == want


def test_known_char_poly():
    m = np.array([[2, 1], [1, 2]])
    assert cx.char_poly(m, "exact") == Polynomial((3, -4, 1))
    with pytest.raises(ValueError):
        cx.char_poly(m, "bogus")


@pytest.mark.parametrize("n", range(1, 5))
def test_routes_agree_on_hochschild(n):
    c = cx.coxeter_matrix(tw.hasse(n))
    results = {method: cx.char_poly(c, method) for method in ROUTES}
    assert len(set(results.values())) == 1
    if n <= 2:
        assert cx.char_poly_expansion(c) == results["exact"]


def test_modular_and_hessenberg_agree_at_n6():
    assert cx.hochschild_coxeter_polynomial(6) == cx.hochschild_coxeter_polynomial(6, "hessenberg")


def test_primes():
    assert [q for q in range(2, 60) if cx._is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31,
                                                          37, 41, 43, 47, 53, 59]
    assert cx._is_prime(2147483647) and not cx._is_prime(2147483649)


# cyclotomic polynomials ----------------------------------------------------------

def test_small_cyclotomics():
    assert cx.cyclotomic(1) == Polynomial((-1, 1))
    assert cx.cyclotomic(6) == Polynomial((1, -1, 1))
    assert cx.cyclotomic(12) == Polynomial((1, 0, -1, 0, 1))
    # first coefficient outside {-1, 0, 1}
    assert -2 in cx.cyclotomic(105).coeffs


@pytest.mark.parametrize("d", list(range(1, 61)) + [105, 120, 210])
def test_mobius_product_matches_recurrence(d):
    assert cx.cyclotomic(d) == cx.cyclotomic_by_recurrence(d)


def test_divisor_product_identity():
    for n in range(1, 201):
        prod = Polynomial((1,))
        for d in cx.divisors(n):
            prod = prod * cx.cyclotomic(d)
        assert prod == Polynomial.x_power_minus_one(n), n


def test_cyclotomic_degree_is_totient():
    phi = cx.totients_up_to(300)
    assert all(cx.cyclotomic(d).degree == phi[d] for d in range(1, 301))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 30), max_size=5), st.booleans())
def test_factor_recovers_constructed_products(ds, junk):
    p = Polynomial((1,))
    for d in ds:
        p = p * cx.cyclotomic(d)
    extra = Polynomial((1, -3, 1)) if junk else Polynomial((1,))
    found, rem = cx.cyclotomic_factor(p * extra)
    assert found == Counter(ds)
    assert rem == extra


def test_xk_notation():
    mult = {1: 2, 2: 1, 3: 1, 6: 1}
    xk = cx.to_xk_form(mult)
    assert xk == {1: 1, 6: 1}
    assert cx.expand_xk(xk) == Polynomial.x_power_minus_one(1) * Polynomial.x_power_minus_one(6)
    assert cx.format_xk({1: -1, 3: -4, 6: 4, 7: 1, 23: 2}) == "6^4 * 7 * 23^2 / 1 * 3^4"


@pytest.mark.parametrize("n", sorted(cx.TABLE))
def test_table_rows_are_polynomials_of_full_degree(n):
    assert cx.xk_degree(cx.TABLE[n]) == tw.count(n)
    if n <= 7:
        f = cx.expand_xk(cx.TABLE[n])
        assert f.degree == tw.count(n) and f.is_monic


# the tabulated rows and the exponent rule ------------------------------------------

@pytest.mark.parametrize("n", range(1, 7))
def test_computed_rows(n):
    rep = cx.analyse(n)
    assert rep.conjA and rep.degree_ok and rep.roundtrip_ok
    assert rep.factorization == cx.TABLE[n]


@pytest.mark.slow
def test_computed_row_n7():
    rep = cx.analyse(7, "hessenberg")
    assert rep.conjA and rep.factorization == cx.TABLE[7]


@pytest.mark.parametrize("n", [1, 3, 4, 5, 7, 9])
def test_rule_agrees_with_table(n):
    assert cx.conjecture_b_prediction(n).exponents == cx.TABLE[n]


@pytest.mark.parametrize("n,indices", [(2, [4, 8]), (6, [14, 28]), (8, [10, 20]), (10, [24, 48, 51, 102])])
def test_rule_disagreements_are_reported(n, indices):
    pred = cx.conjecture_b_prediction(n)
    assert not pred.ambiguous
    assert cx.xk_mismatch(pred.exponents, cx.TABLE[n]) == indices
    assert cx.xk_degree(pred.exponents) == tw.count(n)


def test_golden_rows_flagged():
    reps = cx.verify_conjectures(3)
    assert [r.n for r in reps] == list(range(1, 11))
    assert all(not r.computed and r.note == cx.NOT_RECOMPUTED for r in reps[3:])
    assert "not recomputed" in reps[-1].line()
    assert "not recomputed" in cx.reports_to_json(reps)


@pytest.mark.parametrize("n", range(1, 6))
def test_constant_term_is_unit(n):
    c = cx.hochschild_coxeter_polynomial(n)
    assert c.degree == tw.count(n) and c[0] in (1, -1)


def test_non_cyclotomic_remainder():
    found, rem = cx.cyclotomic_factor(Polynomial((-2, 0, 1)))
    assert not found and rem == Polynomial((-2, 0, 1))
    assert not cx.is_cyclotomic_product(Polynomial((-2, 0, 1)))
    assert cx.cyclotomic_factor(Polynomial((1, 1, 1)))[0] == Counter({3: 1})


def test_context_note_for_n4():
    assert cx.analyse(4).note == cx.NOT_DIAGONALIZABLE
