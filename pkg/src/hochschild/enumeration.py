"""Counting in Tr(n): degree and h-polynomials, the Z-classification of
k-chains, the bijection phi, the z-system and the closed forms it yields,
and the mini-Hochschild subposet of triwords starting with 1.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Literal, Sequence

from . import triword as tw
from .polynomial import BivarPolynomial, Polynomial

Variant = Literal["tr", "mu"]
Chain = tuple[str, ...]


# degree polynomial ----------------------------------------------------------

def degree_profile(n: int) -> BivarPolynomial:
    """Sum of x^in(u) y^out(u) over Tr(n), by direct count of covers."""
    p = tw.hasse(n)
    terms: dict[tuple[int, int], int] = {}
    for i in range(len(p)):
        key = (len(p.lower_covers(i)), len(p.upper_covers(i)))
        terms[key] = terms.get(key, 0) + 1
    return BivarPolynomial(terms)


def degree_closed_form(n: int) -> BivarPolynomial:
    """(x + y)^(n-2) (x^2 + (n+1) x y + y^2), for n >= 2."""
    x, y = BivarPolynomial.x(), BivarPolynomial.y()
    return (x + y) ** (n - 2) * (x * x + (n + 1) * x * y + y * y)


def h_polynomial(n: int) -> Polynomial:
    return degree_profile(n).at_x_one()


def h_closed_form(n: int) -> Polynomial:
    y = Polynomial.x()
    return (y + 1) ** (n - 2) * (y * y + (n + 1) * y + 1)


def regularity_defects(n: int) -> list[str]:
    """Elements whose in-degree plus out-degree is not n."""
    p = tw.hasse(n)
    return [p.elements[i] for i in range(len(p))
            if len(p.lower_covers(i)) + len(p.upper_covers(i)) != n]


# k-chains and the Z-classification ------------------------------------------

def generate_mu(n: int) -> list[tw.Triword]:
    """Triwords of size n starting with 1."""
    return [u for u in tw.generate(n) if u[:1] == "1"]


def count_mu(n: int) -> int:
    num = 2 ** n * (n + 1)
    return num // 4 if n >= 1 else 1


def _words(n: int, variant: Variant) -> list[tw.Triword]:
    return generate_mu(n) if variant == "mu" else tw.generate(n)


def multichains(n: int, k: int, variant: Variant = "tr") -> Iterator[Chain]:
    """All weakly increasing k-tuples u1 <= ... <= uk, in lexicographic order."""
    words = _words(n, variant)
    above = {u: [v for v in words if tw.leq(u, v)] for u in words}

    def extend(prefix: list[str]) -> Iterator[Chain]:
        if len(prefix) == k:
            yield tuple(prefix)
            return
        for v in above[prefix[-1]] if prefix else words:
            prefix.append(v)
            yield from extend(prefix)
            prefix.pop()

    yield from extend([])


def z_index(chain: Sequence[str]) -> int:
    """The i with chain in Z_i: the last i words have no 0 and the others have one."""
    k = len(chain)
    i = sum(1 for u in chain if "0" not in u)
    if any("0" not in u for u in chain[: k - i]):
        raise ValueError(f"{chain} is not a chain")
    return i


def classify_chains(n: int, k: int, variant: Variant = "tr") -> list[list[Chain]]:
    """``out[i]`` lists Z_i(n, k)."""
    out: list[list[Chain]] = [[] for _ in range(k + 1)]
    for c in multichains(n, k, variant):
        out[z_index(c)].append(c)
    return out


def count_multichains(n: int, k: int, variant: Variant = "tr") -> int:
    """Number of k-chains by dynamic programming over the order (an oracle for z_counts)."""
    words = _words(n, variant)
    ways = {u: 1 for u in words}
    for _ in range(k - 1):
        ways = {v: sum(c for u, c in ways.items() if tw.leq(u, v)) for v in words}
    return sum(ways.values())


def _check_chain(chain: Sequence[str]) -> None:
    if not chain or len({len(u) for u in chain}) != 1:
        raise ValueError("malformed chain")
    for u in chain:
        tw.validate(u)
    if any(not tw.leq(a, b) for a, b in zip(chain, chain[1:])):
        raise ValueError(f"{list(chain)} is not weakly increasing")


def phi(chain: Sequence[str]) -> tuple[int, Chain]:
    """(number of words ending in 2, the chain with last letters removed)."""
    _check_chain(chain)
    if len(chain[0]) < 2:
        raise ValueError("phi needs words of size at least 2")
    t = sum(1 for u in chain if u[-1] == "2")
    return t, tuple(u[:-1] for u in chain)


def phi_inverse(i: int, t: int, shorter: Sequence[str]) -> Chain:
    """The unique chain in Z_i with ``phi(chain) == (t, shorter)``."""
    _check_chain(shorter)
    k = len(shorter)
    j = z_index(shorter)
    if j < i:
        raise ValueError(f"chain lies in Z_{j}, below Z_{i}")
    if j == i:
        if not 0 <= t <= k:
            raise ValueError("t out of range")
        letters = [("0" if "0" in v else "1") for v in shorter[: k - t]] + ["2"] * t
    else:
        if not 0 <= t <= i:
            raise ValueError("t out of range")
        letters = ["0"] * (k - i) + ["1"] * (i - t) + ["2"] * t
    return tuple(v + a for v, a in zip(shorter, letters))


def phi_preimage_domain(n: int, k: int, i: int, variant: Variant = "tr") -> list[tuple[int, Chain]]:
    """All (t, shorter) pairs phi maps Z_i(n, k) onto."""
    zs = classify_chains(n - 1, k, variant)
    out = [(t, c) for c in zs[i] for t in range(k + 1)]
    out += [(t, c) for j in range(i + 1, k + 1) for c in zs[j] for t in range(i + 1)]
    return out


# the z-system ---------------------------------------------------------------

Matrix = list[list[int]]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    return [[sum(a[i][l] * b[l][j] for l in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def _matpow(m: Matrix, e: int) -> Matrix:
    size = len(m)
    out = [[int(i == j) for j in range(size)] for i in range(size)]
    while e:
        if e & 1:
            out = _matmul(out, m)
        m = _matmul(m, m)
        e >>= 1
    return out


@dataclass(frozen=True)
class ZSystem:
    """z(n) = M^(n-1) z(1) with M upper triangular, M[i][i] = k+1, M[i][j] = i+1 (j > i)."""

    k: int
    variant: Variant = "tr"

    @property
    def matrix(self) -> Matrix:
        k = self.k
        return [[k + 1 if j == i else (i + 1 if j > i else 0) for j in range(k + 1)]
                for i in range(k + 1)]

    @property
    def initial(self) -> list[int]:
        if self.variant == "mu":
            return [0] * self.k + [1]
        return [1] * (self.k + 1)

    def nilpotent_part(self) -> Matrix:
        m = self.matrix
        return [[m[i][j] - (self.k + 1) * (i == j) for j in range(self.k + 1)]
                for i in range(self.k + 1)]

    def vector(self, n: int) -> list[int]:
        if n < 1:
            raise ValueError("n >= 1")
        power = _matpow(self.matrix, n - 1)
        return [sum(row[j] * self.initial[j] for j in range(self.k + 1)) for row in power]

    def total(self, n: int) -> int:
        return sum(self.vector(n))


def z_counts(n: int, k: int, variant: Variant = "tr") -> tuple[list[int], int]:
    z = ZSystem(k, variant)
    vec = z.vector(n)
    return vec, sum(vec)


def n_power_entries(k: int, l: int) -> dict[tuple[int, int], tuple[int, int]]:
    """For each valid 1-based i: (N^l(i, i+l), (i+l-1)!/(i-1)!)."""
    z = ZSystem(k)
    power = _matpow(z.nilpotent_part(), l)
    return {(i, i + l): (power[i - 1][i + l - 1], factorial(i + l - 1) // factorial(i - 1))
            for i in range(1, k + 2 - l)}


def n_power_support(k: int, l: int) -> list[tuple[int, int]]:
    """1-based positions of the nonzero entries of N^l."""
    power = _matpow(ZSystem(k).nilpotent_part(), l)
    return [(i + 1, j + 1) for i, row in enumerate(power) for j, v in enumerate(row) if v]


# closed forms -----------------------------------------------------------------

F = Fraction
_P = {
    ("tr", 1): (3, 1),
    ("tr", 2): (17, 9, 1),
    ("tr", 3): (142, 93, 20, 1),
    ("tr", 4): (1569, F(3490, 3), 355, F(110, 3), 1),
    ("tr", 5): (21576, 17363, F(13261, 2), 1026, F(119, 2), 1),
    ("mu", 1): (1, 1),
    ("mu", 2): (2, 6, 1),
    ("mu", 3): (6, 41, 16, 1),
    ("mu", 4): (24, F(2075, 6), F(445, 2), F(95, 3), 1),
    ("mu", 5): (120, 3599, F(6505, 2), 750, F(107, 2), 1),
}
CLOSED_FORMS: dict[tuple[str, int], Polynomial] = {key: Polynomial(c) for key, c in _P.items()}

# The mini k=4 form is often quoted with linear coefficient 2075/2; that
# version is not even integral at n = 1. The z-system forces 2075/6.
MISPRINTED_MU_4 = Polynomial((24, F(2075, 2), F(445, 2), F(95, 3), 1))

CONNECTED_FUNCTIONS = (3, 17, 142, 1569, 21576)
FACTORIALS = (1, 2, 6, 24, 120)


def closed_form_count(n: int, k: int, variant: Variant = "tr") -> Fraction:
    """(k+1)^(n-(k+1)) P_k(n) in exact rationals (the exponent may be negative)."""
    return Fraction(k + 1) ** (n - (k + 1)) * Fraction(CLOSED_FORMS[(variant, k)](n))


def chain_polynomial(k: int, variant: Variant = "tr", start: int | None = None) -> Polynomial:
    """P_k recovered from z-system totals at the k+1 nodes start, ..., start+k.

    Default nodes are n = k+2, ..., 2k+2, where (k+1)^(n-(k+1)) is a positive
    integer power.
    """
    start = k + 2 if start is None else start
    z = ZSystem(k, variant)
    nodes = list(range(start, start + k + 1))
    values = [Fraction(z.total(n), (k + 1) ** (n - (k + 1))) if n >= k + 1
              else Fraction(z.total(n) * (k + 1) ** (k + 1 - n)) for n in nodes]
    return Polynomial.interpolate(nodes, values)


# tables -----------------------------------------------------------------------

def count_rows(n_max: int, k_max: int, variants: Sequence[Variant] = ("tr", "mu")) -> list[dict]:
    rows = []
    for variant in variants:
        for k in range(1, k_max + 1):
            for n in range(1, n_max + 1):
                vec, total = z_counts(n, k, variant)
                rows.append({"n": n, "k": k, "variant": variant, "z": vec, "total": total})
    return rows


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "k", "variant", "z", "total"])
    for r in rows:
        w.writerow([r["n"], r["k"], r["variant"], " ".join(map(str, r["z"])), r["total"]])
    return buf.getvalue()


def rows_to_json(rows: list[dict]) -> str:
    return json.dumps(rows, separators=(",", ":"))


def binomial_expansion_check(k: int, n: int) -> bool:
    """M^(n-1) equals sum_i C(n-1, i) (k+1)^(n-1-i) N^i."""
    z = ZSystem(k)
    lhs = _matpow(z.matrix, n - 1)
    size = k + 1
    rhs = [[0] * size for _ in range(size)]
    for i in range(min(k, n - 1) + 1):
        ni = _matpow(z.nilpotent_part(), i)
        c = comb(n - 1, i) * (k + 1) ** (n - 1 - i)
        for a in range(size):
            for b in range(size):
                rhs[a][b] += c * ni[a][b]
    return lhs == rhs
