"""Triwords and the Hochschild lattice Tr(n).

A triword of size n is a word over {0, 1, 2} whose first letter is not 2 and
in which no letter 1 appears after a letter 0. Tr(n) is ordered componentwise;
joins are componentwise maxima and meets are componentwise minima with every
1 to the right of a 0 lowered to 0.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .poset import FinitePoset

EMPTY = "ε"


class TriwordError(ValueError):
    """Raised for words that are not triwords; ``reason`` is a short code."""

    def __init__(self, word: str, reason: str):
        super().__init__(f"{word!r} is not a triword ({reason})")
        self.word = word
        self.reason = reason


class Triword(str):
    """A validated triword; behaves as its digit string."""

    __slots__ = ()

    @property
    def size(self) -> int:
        return len(self)

    def letters(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self)


def _reason(word: str) -> str | None:
    if any(c not in "012" for c in word):
        return "bad-alphabet"
    if word[:1] == "2":
        return "leading-2"
    zero = word.find("0")
    if zero >= 0 and "1" in word[zero + 1:]:
        return "forbidden-01-subword"
    return None


def is_triword(word: str) -> bool:
    return _reason(word) is None


def validate(word: str | Iterable[int]) -> Triword:
    """Return ``word`` as a :class:`Triword` or raise :class:`TriwordError`."""
    if not isinstance(word, str):
        word = "".join(str(d) for d in word)
    if word == EMPTY:
        word = ""
    reason = _reason(word)
    if reason is not None:
        raise TriwordError(word, reason)
    return Triword(word)


def _words_over_02(n: int) -> list[str]:
    # A = eps + 0A + 2A
    words = [""]
    for _ in range(n):
        words = [c + w for c in "02" for w in words]
    return words


@lru_cache(maxsize=None)
def _avoiding_01(n: int) -> tuple[str, ...]:
    # B = eps + 0A + 1B + 2B
    if n == 0:
        return ("",)
    out = ["0" + w for w in _words_over_02(n - 1)]
    out += ["1" + w for w in _avoiding_01(n - 1)]
    out += ["2" + w for w in _avoiding_01(n - 1)]
    return tuple(sorted(out))


def generate(n: int) -> list[Triword]:
    """All triwords of size ``n`` in lexicographic order, via Tr = eps + 0A + 1B."""
    if n < 0:
        raise ValueError("size must be non-negative")
    if n == 0:
        return [Triword("")]
    words = ["0" + w for w in _words_over_02(n - 1)] + ["1" + w for w in _avoiding_01(n - 1)]
    return [Triword(w) for w in sorted(words)]


def count(n: int) -> int:
    """Closed form 2^(n-2) (n+3) for n >= 1, evaluated exactly."""
    if n == 0:
        return 1
    num = 2 ** n * (n + 3)
    assert num % 4 == 0
    return num // 4


def _same_size(u: str, v: str) -> None:
    if len(u) != len(v):
        raise ValueError(f"size mismatch: {u!r} vs {v!r}")


def leq(u: str, v: str) -> bool:
    _same_size(u, v)
    return all(a <= b for a, b in zip(u, v))


def covers(u: str, v: str) -> bool:
    """True iff ``v`` covers ``u`` in Tr(n)."""
    _same_size(u, v)
    diff = [i for i, (a, b) in enumerate(zip(u, v)) if a != b]
    if len(diff) != 1:
        return False
    i = diff[0]
    if u[i] > v[i] or not (is_triword(u) and is_triword(v)):
        return False
    if u[i] == "0" and v[i] == "2":
        return not is_triword(u[:i] + "1" + u[i + 1:])
    return True


def upper_covers(u: str) -> list[Triword]:
    out = []
    for i, a in enumerate(u):
        for b in "12":
            if b > a:
                w = u[:i] + b + u[i + 1:]
                if is_triword(w):
                    out.append(Triword(w))
                    break  # 0->2 is a cover only when 0->1 is not allowed
    return sorted(out)


def lower_covers(u: str) -> list[Triword]:
    out = []
    for i, a in enumerate(u):
        for b in "10":
            if b < a:
                w = u[:i] + b + u[i + 1:]
                if is_triword(w):
                    out.append(Triword(w))
                    break
    return sorted(out)


def join(u: str, v: str) -> Triword:
    _same_size(u, v)
    return Triword("".join(max(a, b) for a, b in zip(u, v)))


def meet(u: str, v: str) -> Triword:
    """Componentwise minimum, then every 1 right of some 0 becomes 0."""
    _same_size(u, v)
    out = []
    zero_seen = False
    for a, b in zip(u, v):
        c = min(a, b)
        if c == "0":
            zero_seen = True
        elif c == "1" and zero_seen:
            c = "0"
        out.append(c)
    return Triword("".join(out))


def componentwise_min(u: str, v: str) -> str:
    _same_size(u, v)
    return "".join(min(a, b) for a, b in zip(u, v))


def bottom(n: int) -> Triword:
    return Triword("0" * n)


def top(n: int) -> Triword:
    return Triword("1" + "2" * (n - 1)) if n else Triword("")


@lru_cache(maxsize=32)
def hasse(n: int) -> FinitePoset:
    """Tr(n) with its covering relation."""
    words = generate(n)
    index = {w: i for i, w in enumerate(words)}
    pairs = [(index[w], index[c]) for w in words for c in upper_covers(w)]
    return FinitePoset(words, pairs, n=n)


def brute_force_hasse(n: int) -> FinitePoset:
    """Transitive reduction of the componentwise order on Tr(n); an oracle for :func:`hasse`."""
    return FinitePoset.from_relation(generate(n), leq, n=n)
