"""Structural invariants of Tr(n): EL-labelling, Möbius values, irreducibles,
maximal chains, the spine and its Birkhoff representation, and the
semidistributive / extremal / trim checks.
"""

from __future__ import annotations

import json
import re
from dataclasses import asdict, dataclass, field
from typing import Optional

from . import triword as tw
from .poset import FinitePoset, PosetError, _bits, find_isomorphism

JOIN_IRREDUCIBLE = re.compile(r"1+0*|0+20*")
MEET_IRREDUCIBLE = re.compile(r"12*12*|12*02*|02*")
SPINE = re.compile(r"0*|1[12]*0*")
SPINE_JOIN_IRREDUCIBLE = re.compile(r"1+0*|1+20*")

Label = tuple[int, int]


class _Report:
    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


# EL-labelling ---------------------------------------------------------------

def el_label(u: str, v: str) -> Label:
    """``(i, u_i)`` for the unique position i (1-based) where a cover u < v changes."""
    if not tw.covers(u, v):
        raise ValueError(f"{u} < {v} is not a cover")
    i = next(k for k, (a, b) in enumerate(zip(u, v)) if a != b)
    return (i + 1, int(u[i]))


def saturated_chains(u: str, v: str) -> list[tuple[str, ...]]:
    """Every saturated chain from ``u`` up to ``v``, as tuples of words."""
    if not tw.leq(u, v):
        raise ValueError(f"{u} and {v} are not comparable")
    out: list[tuple[str, ...]] = []
    path = [u]

    def walk(w: str) -> None:
        if w == v:
            out.append(tuple(path))
            return
        for c in tw.upper_covers(w):
            if tw.leq(c, v):
                path.append(c)
                walk(c)
                path.pop()

    walk(u)
    return out


def chain_labels(chain: tuple[str, ...]) -> tuple[Label, ...]:
    return tuple(el_label(a, b) for a, b in zip(chain, chain[1:]))


def is_increasing(labels: tuple[Label, ...]) -> bool:
    return all(a < b for a, b in zip(labels, labels[1:]))


def is_weakly_decreasing(labels: tuple[Label, ...]) -> bool:
    return all(a >= b for a, b in zip(labels, labels[1:]))


@dataclass
class ShellabilityReport(_Report):
    interval: tuple[str, str]
    chains: int
    increasing_chains: int
    weakly_decreasing_chains: int
    increasing_is_lex_min: bool
    witnesses: list[list[str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.increasing_chains == 1 and self.increasing_is_lex_min
                and self.weakly_decreasing_chains <= 1)


def shellability_of_interval(u: str, v: str) -> ShellabilityReport:
    chains = saturated_chains(u, v)
    labelled = [(chain_labels(c), c) for c in chains]
    inc = [c for lab, c in labelled if is_increasing(lab)]
    dec = [c for lab, c in labelled if is_weakly_decreasing(lab)]
    # lex-min in the weak sense: no chain has a strictly smaller label sequence
    lex_min = len(inc) == 1 and all(chain_labels(inc[0]) <= lab for lab, _ in labelled)
    report = ShellabilityReport((u, v), len(chains), len(inc), len(dec), lex_min)
    if not report.ok:
        report.witnesses = [list(c) for c in inc + dec]
    return report


def certify_el_shellability(n: int) -> list[ShellabilityReport]:
    """One report per comparable pair of Tr(n), sorted by interval."""
    p = tw.hasse(n)
    pairs = sorted((p.elements[i], p.elements[j]) for i, j in p.comparable_pairs())
    return [shellability_of_interval(u, v) for u, v in pairs]


def mobius(u: str, v: str) -> int:
    p = tw.hasse(len(u))
    return p.mobius(p.index(u), p.index(v))


def mobius_values(n: int) -> set[int]:
    p = tw.hasse(n)
    return {m for i in range(len(p)) for m in p.mobius_row(i).values()}


# irreducibles and chains ----------------------------------------------------

def join_irreducibles_of(p: FinitePoset) -> list[str]:
    return [p.elements[i] for i in range(len(p)) if len(p.lower_covers(i)) == 1]


def meet_irreducibles_of(p: FinitePoset) -> list[str]:
    return [p.elements[i] for i in range(len(p)) if len(p.upper_covers(i)) == 1]


def join_irreducibles(n: int) -> list[str]:
    return join_irreducibles_of(tw.hasse(n))


def meet_irreducibles(n: int) -> list[str]:
    return meet_irreducibles_of(tw.hasse(n))


def longest_chain_profile(p: FinitePoset) -> tuple[int, list[int]]:
    """Length of a longest bottom-top chain and the elements lying on one."""
    below = [0] * len(p)
    for i in p.topological_order:
        for j in p.upper_covers(i):
            below[j] = max(below[j], below[i] + 1)
    above = [0] * len(p)
    for i in reversed(p.topological_order):
        for j in p.upper_covers(i):
            above[i] = max(above[i], above[j] + 1)
    length = max(below)
    return length, [i for i in range(len(p)) if below[i] + above[i] == length]


@dataclass
class ChainStats(_Report):
    n: int
    length: int
    members: list[str]
    matches_spine_regex: bool

    @property
    def ok(self) -> bool:
        return self.length == 2 * self.n - 1 and self.matches_spine_regex


def maximal_chain_stats(n: int) -> ChainStats:
    p = tw.hasse(n)
    length, idx = longest_chain_profile(p)
    members = sorted(p.elements[i] for i in idx)
    expected = sorted(w for w in p.elements if SPINE.fullmatch(w))
    return ChainStats(n, length, members, members == expected)


def spine_words(n: int) -> list[str]:
    return [w for w in tw.generate(n) if SPINE.fullmatch(w)]


def spine(n: int) -> FinitePoset:
    """The spine of Tr(n) as an induced subposet."""
    return tw.hasse(n).induced(spine_words(n))


def is_sublattice_of_tr(words: list[str]) -> bool:
    s = set(words)
    return all(tw.join(a, b) in s and tw.meet(a, b) in s for a in words for b in words)


def is_distributive(p: FinitePoset) -> bool:
    if not p.is_lattice():
        return False
    J, M = p.join_table, p.meet_table
    r = range(len(p))
    return all(M[x][J[y][z]] == J[M[x][y]][M[x][z]] for x in r for y in r for z in r)


def ladder_covers(n: int) -> list[tuple[str, str]]:
    """Expected Hasse diagram of the join-irreducibles of the spine."""
    rung = [("1" * k + "0" * (n - k)) for k in range(1, n + 1)]
    out = [(a, b) for a, b in zip(rung, rung[1:])]
    out += [("1" * k + "0" * (n - k), "1" * (k - 1) + "2" + "0" * (n - k)) for k in range(2, n + 1)]
    return sorted(out)


def spine_join_irreducibles(n: int) -> FinitePoset:
    s = spine(n)
    return s.induced(join_irreducibles_of(s))


def order_ideals(p: FinitePoset, limit: int = 20) -> FinitePoset:
    """Lattice J(p) of down-closed subsets, ordered by inclusion (covers add one element)."""
    if len(p) > limit:
        raise PosetError(f"order ideals of a {len(p)}-element poset exceed the size limit {limit}")
    lower = [sum(1 << j for j in p.lower_covers(i)) for i in range(len(p))]
    seen = {0}
    frontier = [0]
    covers: list[tuple[int, int]] = []
    while frontier:
        nxt = []
        for ideal in frontier:
            for i in range(len(p)):
                if not (ideal >> i) & 1 and lower[i] & ~ideal == 0:
                    bigger = ideal | (1 << i)
                    covers.append((ideal, bigger))
                    if bigger not in seen:
                        seen.add(bigger)
                        nxt.append(bigger)
        frontier = nxt
    ideals = sorted(seen, key=lambda m: (bin(m).count("1"), m))
    pos = {m: k for k, m in enumerate(ideals)}
    labels = ["{" + ",".join(p.elements[i] for i in _bits(m)) + "}" for m in ideals]
    return FinitePoset(labels, [(pos[a], pos[b]) for a, b in covers], n=p.n)


def birkhoff_isomorphism(n: int) -> Optional[dict[int, int]]:
    """An isomorphism spine(n) -> J(join-irreducibles of spine(n)), if one exists."""
    s = spine(n)
    return find_isomorphism(s, order_ideals(s.induced(join_irreducibles_of(s))))


# semidistributivity, extremality, trimness ----------------------------------

@dataclass
class SemidistributivityReport(_Report):
    n: int
    triples: int
    join_violations: list[list[str]] = field(default_factory=list)
    meet_violations: list[list[str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.join_violations and not self.meet_violations


def semidistributive_violations(p: FinitePoset, cap: int = 20) -> tuple[list, list]:
    J, M = p.join_table, p.meet_table
    if J is None or M is None:
        raise PosetError("not a lattice")
    e = p.elements
    jv, mv = [], []
    r = range(len(p))
    for x in r:
        Jx, Mx = J[x], M[x]
        for y in r:
            for z in range(y, len(p)):
                if Jx[y] == Jx[z] and Jx[M[y][z]] != Jx[y] and len(jv) < cap:
                    jv.append([e[x], e[y], e[z]])
                if Mx[y] == Mx[z] and Mx[J[y][z]] != Mx[y] and len(mv) < cap:
                    mv.append([e[x], e[y], e[z]])
    return jv, mv


def check_semidistributive(n: int) -> SemidistributivityReport:
    p = tw.hasse(n)
    jv, mv = semidistributive_violations(p)
    return SemidistributivityReport(n, len(p) ** 3, jv, mv)


@dataclass
class ExtremalReport(_Report):
    n: int
    join_irreducibles: int
    meet_irreducibles: int
    chain_length: int

    @property
    def ok(self) -> bool:
        return self.join_irreducibles == self.meet_irreducibles == self.chain_length


def check_extremal(n: int) -> ExtremalReport:
    p = tw.hasse(n)
    return ExtremalReport(n, len(join_irreducibles_of(p)), len(meet_irreducibles_of(p)),
                          longest_chain_profile(p)[0])


def left_modular_elements(p: FinitePoset) -> list[int]:
    J, M = p.join_table, p.meet_table
    if J is None or M is None:
        raise PosetError("not a lattice")
    pairs = list(p.comparable_pairs())
    return [x for x in range(len(p)) if all(M[J[y][x]][z] == J[y][M[x][z]] for y, z in pairs)]


@dataclass
class TrimReport(_Report):
    n: int
    extremal: bool
    left_modular_count: int
    chain: list[str]

    @property
    def ok(self) -> bool:
        return self.extremal and bool(self.chain)


def left_modular_chain(p: FinitePoset) -> list[int]:
    """A maximal chain bottom-to-top through left modular elements, or []."""
    good = set(left_modular_elements(p))
    bottom, top = p.bottom, p.top
    if bottom not in good:
        return []
    parent = {bottom: None}
    stack = [bottom]
    while stack:
        i = stack.pop()
        for j in p.upper_covers(i):
            if j in good and j not in parent:
                parent[j] = i
                stack.append(j)
    if top not in parent:
        return []
    chain = [top]
    while parent[chain[-1]] is not None:
        chain.append(parent[chain[-1]])
    return chain[::-1]


def check_trim(n: int) -> TrimReport:
    p = tw.hasse(n)
    chain = left_modular_chain(p)
    return TrimReport(n, check_extremal(n).ok, len(left_modular_elements(p)),
                      [p.elements[i] for i in chain])


def is_left_modular(p: FinitePoset, x: int) -> bool:
    J, M = p.join_table, p.meet_table
    return all(M[J[y][x]][z] == J[y][M[x][z]] for y, z in p.comparable_pairs())
