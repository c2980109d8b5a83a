"""Dyck paths, dexter covering moves, the interval F(n) and the bijection rho.

Paths are binary words: 1 is a north-east step and 0 a south-east step.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from . import triword as tw
from .poset import FinitePoset


class DyckError(ValueError):
    pass


class DyckPath(str):
    """A validated Dyck path; behaves as its binary string."""

    __slots__ = ()

    def __new__(cls, steps: str):
        height = 0
        for c in steps:
            if c == "1":
                height += 1
            elif c == "0":
                height -= 1
                if height < 0:
                    raise DyckError(f"{steps!r} goes below the axis")
            else:
                raise DyckError(f"{steps!r} has a letter other than 0/1")
        if height:
            raise DyckError(f"{steps!r} does not return to the axis")
        return super().__new__(cls, steps)

    @property
    def size(self) -> int:
        return self.count("1")

    def heights(self) -> list[int]:
        """Ordinates of the 2n+1 lattice points."""
        out = [0]
        for c in self:
            out.append(out[-1] + (1 if c == "1" else -1))
        return out

    def valleys(self) -> list[tuple[int, int]]:
        """(position of the 0 in the factor 01, height of the valley)."""
        h = self.heights()
        return [(i, h[i + 1]) for i in range(len(self) - 1) if self[i] == "0" and self[i + 1] == "1"]


def is_dyck(word: str) -> bool:
    try:
        DyckPath(word)
    except DyckError:
        return False
    return True


def _is_primitive(x: str) -> bool:
    # a nonempty Dyck word is primitive iff it touches the axis only at its ends
    h = 0
    for k, c in enumerate(x):
        h += 1 if c == "1" else -1
        if h == 0 and k != len(x) - 1:
            return False
    return bool(x) and h == 0


@dataclass(frozen=True, order=True)
class DexterMove:
    """A movable subpath ``x = d[start:start+length]`` sitting after ``1 0^m``."""

    start: int
    m: int
    length: int
    alpha: int = field(default=0, compare=False)

    @property
    def beta(self) -> int:
        return self.m - self.alpha

    def apply(self, d: str) -> str:
        """``p 1 0^alpha x 0^beta s`` for ``d = p 1 0^m x s``."""
        head = d[: self.start - self.m]
        x = d[self.start: self.start + self.length]
        tail = d[self.start + self.length:]
        return head + "0" * self.alpha + x + "0" * self.beta + tail


def movable_subpaths(d: str) -> list[DexterMove]:
    """All movable subpaths of ``d`` as ``(start, m, length)`` triples (alpha left at 0)."""
    d = DyckPath(d)
    out = []
    for start in range(1, len(d)):
        if d[start] != "1" or d[start - 1] != "0":
            continue
        m = 0
        while d[start - 1 - m] == "0":
            m += 1
        # the run of zeros before x is preceded by a 1 because paths start with 1
        h = 0
        for end in range(start, len(d)):
            h += 1 if d[end] == "1" else -1
            if h < 0:
                break
            if h == 0:
                nxt = end + 1
                if (nxt == len(d) or d[nxt] == "1") and _is_primitive(d[start:nxt]):
                    out.append(DexterMove(start, m, nxt - start))
                break  # longer factors from here are not primitive
    return out


def dexter_covers(d: str) -> list[DyckPath]:
    """Paths covering ``d`` in the dexter order, deduplicated and sorted."""
    out = set()
    for mv in movable_subpaths(d):
        for alpha in range(mv.m):
            out.add(DexterMove(mv.start, mv.m, mv.length, alpha).apply(d))
    return sorted(DyckPath(x) for x in out)


def F_bottom(n: int) -> DyckPath:
    return DyckPath("1100" + "10" * n)


def F_top(n: int) -> DyckPath:
    return DyckPath("1" + "1" * n + "0" * n + "100")


@lru_cache(maxsize=16)
def generate_F(n: int) -> FinitePoset:
    """The dexter interval F(n) = [1100(10)^n, 1 1^n 0^n 100] in Dy(n+2)."""
    if n < 1:
        raise ValueError("F(n) needs n >= 1")
    lo, hi = F_bottom(n), F_top(n)
    up: dict[str, list[DyckPath]] = {}
    queue = deque([lo])
    seen = {lo}
    while queue:
        d = queue.popleft()
        up[d] = dexter_covers(d)
        for e in up[d]:
            if e not in seen:
                seen.add(e)
                queue.append(e)
    if hi not in seen:
        raise AssertionError("top of F(n) not reachable from its bottom")
    down: dict[str, list[str]] = {d: [] for d in seen}
    for d, ups in up.items():
        for e in ups:
            down[e].append(d)
    inside = {hi}
    queue = deque([hi])
    while queue:
        d = queue.popleft()
        for e in down[d]:
            if e not in inside:
                inside.add(e)
                queue.append(e)
    elements = sorted(inside)
    index = {d: i for i, d in enumerate(elements)}
    pairs = [(index[d], index[e]) for d in elements for e in up[d] if e in index]
    return FinitePoset(elements, pairs, n=n)


def rho(d: str) -> tw.Triword:
    """Read ``d`` left to right: doubled ascents feed a counter, each valley emits h 2^counter."""
    d = DyckPath(d)
    if not d.startswith("11"):
        raise DyckError(f"{d!r} does not start with 11, so it is not in any F(n)")
    out = []
    n2 = 0
    h = 0
    for i, c in enumerate(d):
        if c == "1" and i >= 2 and d[i - 1] == "1":
            n2 += 1
        if c == "1" and i >= 1 and d[i - 1] == "0":
            out.append(str(h) + "2" * n2)
            n2 = 0
        h += 1 if c == "1" else -1
    u = "".join(out)
    if not tw.is_triword(u) or rho_inv(u) != d:
        raise DyckError(f"{d!r} is not in F({d.size - 2})")
    return tw.Triword(u)


def rho_inv(u: str) -> DyckPath:
    """Inverse of :func:`rho`, rebuilt from the valley heights and the runs of 2.

    ``u`` splits into blocks ``h 2^k`` (h in {0, 1}); block j gives a valley of
    height h whose preceding ascent has k doubled steps. The final ascent is a
    single step.
    """
    u = tw.validate(u)
    blocks: list[list[int]] = []
    for c in u:
        if c == "2":
            blocks[-1][1] += 1
        else:
            blocks.append([int(c), 0])
    if not blocks:
        raise DyckError("rho is defined for n >= 1")
    r = len(blocks)
    ascents = [blocks[0][1] + 2] + [blocks[j][1] + 1 for j in range(1, r)] + [1]
    heights = [b[0] for b in blocks]
    descents = [ascents[0] - heights[0]]
    for j in range(1, r):
        descents.append(heights[j - 1] + ascents[j] - heights[j])
    descents.append(heights[-1] + ascents[-1])
    return DyckPath("".join("1" * a + "0" * b for a, b in zip(ascents, descents)))


def rho_inv_by_search(u: str) -> DyckPath:
    """Oracle for :func:`rho_inv`: scan F(n) for the preimage."""
    u = tw.validate(u)
    for d in generate_F(len(u)).elements:
        if rho(d) == u:
            return DyckPath(d)
    raise DyckError(f"no preimage for {u!r}")


def f_properties(d: str) -> dict[str, bool]:
    """The three structural properties every element of F(n) has."""
    d = DyckPath(d)
    hs = [h for _, h in d.valleys()]
    return {
        "valleys_weakly_decreasing": all(a >= b for a, b in zip(hs, hs[1:])),
        "ends_010_or_0100": d.endswith("010") or d.endswith("0100"),
        "starts_11_low_valleys": d.startswith("11") and all(h in (0, 1) for h in hs),
    }


@dataclass
class IsomorphismReport:
    n: int
    size: int
    edges: int
    bijective: bool
    missing_in_tr: list[tuple[str, str]] = field(default_factory=list)
    missing_in_f: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.bijective and not self.missing_in_tr and not self.missing_in_f


def verify_isomorphism(n: int) -> IsomorphismReport:
    """Check rho: F(n) -> Tr(n) is a bijection that maps covers onto covers."""
    f = generate_F(n)
    t = tw.hasse(n)
    image = {d: rho(d) for d in f.elements}
    bijective = sorted(image.values()) == list(t.elements)
    f_edges = {(image[a], image[b]) for a, b in f.cover_labels()}
    t_edges = set(t.cover_labels())
    return IsomorphismReport(
        n=n, size=len(f), edges=len(f.covers), bijective=bijective,
        missing_in_tr=sorted(f_edges - t_edges), missing_in_f=sorted(t_edges - f_edges))
