"""Day's interval doubling and the two-step passage from Tr(n) to Tr(n+1)."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

from . import triword as tw
from .invariants import join_irreducibles, semidistributive_violations
from .poset import FinitePoset, PosetError

Relabel = Callable[[str, int], str]


def _default_relabel(base: str, tag: int) -> str:
    return f"({base},{tag})"


def double_interval(p: FinitePoset, lo: str, hi: str, relabel: Optional[Relabel] = None) -> FinitePoset:
    """P[I] for the interval I = [lo, hi] of ``p``.

    Elements outside I keep their label; each x in I is replaced by the two
    elements ``relabel(x, 0)`` < ``relabel(x, 1)``. Outside/inside comparisons use
    the base order only; two copies compare iff their bases and tags do.
    """
    relabel = relabel or _default_relabel
    a, b = p.index(lo), p.index(hi)
    if not p.leq(a, b):
        raise PosetError(f"[{lo}, {hi}] is not an interval")
    inside = set(p.interval(a, b))
    # node = (base index, tag) with tag None outside I
    nodes: list[tuple[int, Optional[int]]] = []
    for i in range(len(p)):
        if i in inside:
            nodes += [(i, 0), (i, 1)]
        else:
            nodes.append((i, None))
    labels = [p.elements[i] if t is None else relabel(p.elements[i], t) for i, t in nodes]
    if len(set(labels)) != len(labels):
        raise PosetError("relabelling is not injective")
    order = sorted(range(len(nodes)), key=lambda k: labels[k])
    nodes = [nodes[k] for k in order]
    labels = [labels[k] for k in order]
    node_of = dict(zip(labels, nodes))
    up = p.up_masks

    def leq(x: str, y: str) -> bool:
        (i, s), (j, t) = node_of[x], node_of[y]
        if not (up[i] >> j) & 1:
            return False
        if s is None or t is None:
            return True
        return s <= t

    return FinitePoset.from_relation(labels, leq, n=p.n)


def singleton() -> FinitePoset:
    return FinitePoset([""], [], n=0)


def append_letter(p: FinitePoset, letter: str) -> FinitePoset:
    """Relabel every element u as u + letter; e.g. Tr(n) -> T0(n+1)."""
    return p.relabel(lambda u: u + letter, n=(p.n or 0) + 1)


def _tag_last(zero_to: str) -> Relabel:
    def relabel(base: str, tag: int) -> str:
        return base if tag == 0 else base[:-1] + zero_to
    return relabel


def doubling_steps(p: FinitePoset) -> list[tuple[str, FinitePoset]]:
    """The two doublings turning Tr(n) (given as ``p``) into Tr(n+1).

    Returns ``[(description, poset)]`` for T0(n+1), T0(n+1) x 2 and Tr(n+1).
    """
    n = p.n
    t0 = append_letter(p, "0")
    t02 = double_interval(t0, "0" * (n + 1), tw.top(n) + "0", _tag_last("2"))
    lo, hi = "1" * n + "0", tw.top(n) + "0"
    t = double_interval(t02, lo, hi, _tag_last("1"))
    return [("relabel u -> u0", t0),
            (f"double [{t0.elements[t0.bottom]}, {t0.elements[t0.top]}]", t02),
            (f"double [{lo}, {hi}]", t)]


def doubling_sequence(n: int) -> list[tuple[str, FinitePoset]]:
    """All doublings from the singleton up to Tr(n); 2n - 1 of them."""
    if n < 1:
        raise ValueError("n >= 1")
    first = double_interval(singleton(), "", "", lambda base, tag: str(tag))
    first.n = 1
    seq = [("double [ε, ε]", first)]
    current = first
    for _ in range(1, n):
        _, (d1, t02), (d2, t) = doubling_steps(current)
        seq += [(d1, t02), (d2, t)]
        current = t
    return seq


def build_step_posets(n: int) -> tuple[FinitePoset, FinitePoset, FinitePoset]:
    """T0(n+1), T02(n+1) and T(n+1) as sets of words with the componentwise order."""
    words = tw.generate(n)
    t0 = [u + "0" for u in words]
    t02 = t0 + [u + "2" for u in words]
    i0 = [u for u in t0 if u[0] == "1" and "0" not in u[1:-1]]
    i1 = [u[:-1] + "1" for u in i0]
    make = lambda ws: FinitePoset.from_relation(sorted(ws), tw.leq, n=n + 1)
    return make(t0), make(t02), make(t02 + i1)


def interval_I0(n: int) -> list[str]:
    """Words of shape 1(1+2)^{n-1}0."""
    return [u + "0" for u in tw.generate(n) if u[0] == "1" and "0" not in u]


@dataclass
class DoublingReport:
    n: int
    size: int
    covers: int
    exact: bool
    sets_match: bool
    steps_from_point: int
    join_irreducibles: int
    all_lattices: bool
    semidistributive: Optional[bool] = None
    missing: list[list[str]] = field(default_factory=list)
    extra: list[list[str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.exact and self.sets_match and self.all_lattices
                and self.steps_from_point == self.join_irreducibles
                and self.semidistributive is not False)

    def to_dict(self) -> dict:
        return asdict(self)


def verify_doubling_construction(n: int, semidistributive_up_to: int = 4) -> DoublingReport:
    """Double Tr(n) twice and compare with Tr(n+1) cover for cover."""
    base = tw.hasse(n)
    steps = doubling_steps(base)
    result = steps[-1][1]
    target = tw.hasse(n + 1)
    got, want = set(result.cover_labels()), set(target.cover_labels())
    _, _, t = build_step_posets(n)
    posets = [s[1] for s in steps]
    semi = None
    if n + 1 <= semidistributive_up_to:
        semi = all(not any(semidistributive_violations(q, cap=1)) for q in posets)
    return DoublingReport(
        n=n, size=len(result), covers=len(result.covers),
        exact=result.elements == target.elements and got == want,
        sets_match=t == target,
        steps_from_point=len(doubling_sequence(n)),
        join_irreducibles=len(join_irreducibles(n)),
        all_lattices=all(q.is_lattice() for q in posets),
        semidistributive=semi,
        missing=sorted(map(list, want - got)), extra=sorted(map(list, got - want)))
