"""Exact univariate and bivariate polynomials over the integers or rationals."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

Coeff = Union[int, Fraction]


def _norm(c) -> Coeff:
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c))
    raise TypeError(f"inexact coefficient {c!r}")


class Polynomial:
    """Dense polynomial; ``coeffs[i]`` is the coefficient of x^i.

    Coefficients are Python ints where possible and ``Fraction`` otherwise, so
    arithmetic never loses precision. Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Coeff, ...] = tuple(cs)

    # constructors -------------------------------------------------------

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Coeff) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Coeff = 1) -> "Polynomial":
        return cls([0] * degree + [c])

    @classmethod
    def x_power_minus_one(cls, i: int) -> "Polynomial":
        """x^i - 1."""
        return cls([-1] + [0] * (i - 1) + [1])

    @classmethod
    def interpolate(cls, nodes: Sequence[int], values: Sequence[Coeff]) -> "Polynomial":
        """The unique polynomial of degree < len(nodes) through the given points (Newton form)."""
        if len(nodes) != len(values) or len(set(nodes)) != len(nodes):
            raise ValueError("need distinct nodes, one value each")
        table = [Fraction(v) for v in values]
        coef = [table[0]]
        for level in range(1, len(nodes)):
            table = [(table[i + 1] - table[i]) / (nodes[i + level] - nodes[i])
                     for i in range(len(table) - 1)]
            coef.append(table[0])
        result = cls()
        for c, t in zip(reversed(coef), reversed(nodes[: len(coef)])):
            result = result * cls((-t, 1)) + cls((c,))
        return result

    # structure ----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Coeff:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __getitem__(self, i: int) -> Coeff:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # arithmetic ---------------------------------------------------------

    @staticmethod
    def _lift(other) -> "Polynomial":
        return other if isinstance(other, Polynomial) else Polynomial((other,))

    def __add__(self, other) -> "Polynomial":
        other = self._lift(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[i] + other[i] for i in range(size))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._lift(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = self._lift(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative power")
        result, base = Polynomial((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        quot = [0] * max(0, len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q = c // lead if isinstance(c, int) and isinstance(lead, int) and c % lead == 0 else Fraction(c) / lead
            quot[k - dq] = q
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] -= q * b
        return Polynomial(quot), Polynomial(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other) -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Polynomial":
        return divmod(self, other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("division is not exact")
        return q

    def divides(self, other: "Polynomial") -> bool:
        """True iff ``self`` divides ``other``."""
        return (other % self).is_zero()

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_mod(self, x: int, p: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % p
        return acc

    def negate_variable(self) -> "Polynomial":
        """p(-x)."""
        return Polynomial(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    # display ------------------------------------------------------------

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return self.pretty()

    def pretty(self, var: str = "x") -> str:
        """Highest degree first, e.g. ``n^4 + 110/3 n^3 + 355 n^2``."""
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{mag} {mono}" if isinstance(mag, Fraction) else f"{mag}{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


class BivarPolynomial:
    """Sparse polynomial in x and y: ``terms[(a, b)]`` is the coefficient of x^a y^b."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], Coeff] | None = None):
        self.terms: dict[tuple[int, int], Coeff] = {
            k: _norm(v) for k, v in sorted((terms or {}).items()) if v != 0}

    @classmethod
    def x(cls) -> "BivarPolynomial":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BivarPolynomial":
        return cls({(0, 1): 1})

    @classmethod
    def constant(cls, c: Coeff) -> "BivarPolynomial":
        return cls({(0, 0): c})

    def _lift(self, other) -> "BivarPolynomial":
        return other if isinstance(other, BivarPolynomial) else BivarPolynomial.constant(other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = BivarPolynomial.constant(other)
        return isinstance(other, BivarPolynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __add__(self, other) -> "BivarPolynomial":
        other = self._lift(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BivarPolynomial(out)

    __radd__ = __add__

    def __mul__(self, other) -> "BivarPolynomial":
        other = self._lift(other)
        out: dict[tuple[int, int], Coeff] = {}
        for (a, b), c in self.terms.items():
            for (e, f), d in other.terms.items():
                out[(a + e, b + f)] = out.get((a + e, b + f), 0) + c * d
        return BivarPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BivarPolynomial":
        result = BivarPolynomial.constant(1)
        for _ in range(e):
            result = result * self
        return result

    def __call__(self, x, y):
        return sum(c * x ** a * y ** b for (a, b), c in self.terms.items())

    def at_x_one(self) -> Polynomial:
        """Specialize x = 1, giving a polynomial in y."""
        deg = max((b for _, b in self.terms), default=-1)
        out = [0] * (deg + 1)
        for (_, b), c in self.terms.items():
            out[b] += c
        return Polynomial(out)

    def is_homogeneous(self, degree: int) -> bool:
        return all(a + b == degree for a, b in self.terms)

    def __repr__(self) -> str:
        return f"BivarPolynomial({self.terms!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items(), key=lambda kv: (-kv[0][0], kv[0][1])):
            mono = "".join(v if e == 1 else f"{v}^{e}" for v, e in (("x", a), ("y", b)) if e)
            coef = "" if c == 1 and mono else "-" if c == -1 and mono else str(c)
            parts.append(coef + mono)
        return " + ".join(parts).replace("+ -", "- ")
