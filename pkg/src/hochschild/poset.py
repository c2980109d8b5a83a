"""Finite posets given by an element list and their covering pairs.

The container is deliberately small: it knows its Hasse diagram, derives the
order as bitsets of up-sets and down-sets, and provides the handful of generic
lattice operations the rest of the package needs (join/meet tables, Möbius
values, induced subposets, isomorphism search, JSON/DOT export).
"""

from __future__ import annotations

import json
from collections import deque
from functools import cached_property
from typing import Callable, Iterable, Iterator, Optional, Sequence


class PosetError(ValueError):
    pass


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FinitePoset:
    """A finite poset on labelled elements.

    ``elements`` are kept in the order given (callers pass them sorted), and
    ``covers`` is a set of index pairs ``(a, b)`` meaning ``a`` is covered by
    ``b``. The constructor rejects cycles and cover pairs implied by
    transitivity, so the stored pairs are exactly the Hasse diagram.
    """

    def __init__(self, elements: Sequence[str], covers: Iterable[tuple[int, int]], n: Optional[int] = None):
        self.elements: tuple[str, ...] = tuple(elements)
        self.n = n
        size = len(self.elements)
        self._index = {label: i for i, label in enumerate(self.elements)}
        if len(self._index) != size:
            raise PosetError("duplicate element labels")
        pairs = sorted(set((int(a), int(b)) for a, b in covers))
        for a, b in pairs:
            if not (0 <= a < size and 0 <= b < size) or a == b:
                raise PosetError(f"bad cover pair {(a, b)}")
        self.covers: tuple[tuple[int, int], ...] = tuple(pairs)
        self._up: list[list[int]] = [[] for _ in range(size)]
        self._down: list[list[int]] = [[] for _ in range(size)]
        for a, b in pairs:
            self._up[a].append(b)
            self._down[b].append(a)
        self.topological_order = self._toposort()
        self._check_hasse()

    # construction -------------------------------------------------------

    @classmethod
    def from_relation(cls, elements: Sequence[str], leq: Callable[[str, str], bool],
                      n: Optional[int] = None) -> "FinitePoset":
        """Build the Hasse diagram of ``leq`` restricted to ``elements`` by brute force."""
        elements = list(elements)
        size = len(elements)
        below = [0] * size  # strict down-sets
        for j, y in enumerate(elements):
            for i, x in enumerate(elements):
                if i != j and leq(x, y):
                    below[j] |= 1 << i
        covers = []
        for j in range(size):
            for i in _bits(below[j]):
                # i < j is a cover unless some k strictly between exists
                if not any((below[k] >> i) & 1 for k in _bits(below[j]) if k != i):
                    covers.append((i, j))
        return cls(elements, covers, n=n)

    @classmethod
    def from_json(cls, text: str) -> "FinitePoset":
        data = json.loads(text)
        return cls(data["elements"], [tuple(c) for c in data["covers"]], n=data.get("n"))

    def _toposort(self) -> tuple[int, ...]:
        indeg = [len(d) for d in self._down]
        queue = deque(i for i, d in enumerate(indeg) if d == 0)
        order = []
        while queue:
            i = queue.popleft()
            order.append(i)
            for j in self._up[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    queue.append(j)
        if len(order) != len(self.elements):
            raise PosetError("cover relation has a cycle")
        return tuple(order)

    def _check_hasse(self) -> None:
        up = self.up_masks
        for a, b in self.covers:
            for c in self._up[a]:
                if c != b and (up[c] >> b) & 1:
                    raise PosetError(
                        f"cover {self.elements[a]} < {self.elements[b]} is implied by transitivity")

    # basic queries ----------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self.elements == other.elements and self.covers == other.covers

    def __repr__(self) -> str:
        return f"FinitePoset({len(self)} elements, {len(self.covers)} covers)"

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise PosetError(f"{label!r} is not an element") from None

    def upper_covers(self, i: int) -> list[int]:
        return self._up[i]

    def lower_covers(self, i: int) -> list[int]:
        return self._down[i]

    def cover_labels(self) -> list[tuple[str, str]]:
        return [(self.elements[a], self.elements[b]) for a, b in self.covers]

    @cached_property
    def up_masks(self) -> list[int]:
        """``up_masks[i]`` has bit ``j`` set iff ``i <= j``."""
        masks = [0] * len(self)
        for i in reversed(self.topological_order):
            m = 1 << i
            for j in self._up[i]:
                m |= masks[j]
            masks[i] = m
        return masks

    @cached_property
    def down_masks(self) -> list[int]:
        masks = [0] * len(self)
        for i in self.topological_order:
            m = 1 << i
            for j in self._down[i]:
                m |= masks[j]
            masks[i] = m
        return masks

    def leq(self, i: int, j: int) -> bool:
        return bool((self.up_masks[i] >> j) & 1)

    def interval(self, i: int, j: int) -> list[int]:
        return list(_bits(self.up_masks[i] & self.down_masks[j]))

    def minimal_elements(self) -> list[int]:
        return [i for i in range(len(self)) if not self._down[i]]

    def maximal_elements(self) -> list[int]:
        return [i for i in range(len(self)) if not self._up[i]]

    @property
    def bottom(self) -> int:
        mins = self.minimal_elements()
        if len(mins) != 1:
            raise PosetError("poset has no least element")
        return mins[0]

    @property
    def top(self) -> int:
        maxs = self.maximal_elements()
        if len(maxs) != 1:
            raise PosetError("poset has no greatest element")
        return maxs[0]

    def comparable_pairs(self) -> Iterator[tuple[int, int]]:
        for i in range(len(self)):
            for j in _bits(self.up_masks[i]):
                yield i, j

    # lattice structure --------------------------------------------------

    def join(self, i: int, j: int) -> Optional[int]:
        """Least upper bound of ``i`` and ``j``, or ``None`` if there is none."""
        common = self.up_masks[i] & self.up_masks[j]
        up = self.up_masks
        for c in _bits(common):
            if up[c] == common:
                return c
        return None

    def meet(self, i: int, j: int) -> Optional[int]:
        common = self.down_masks[i] & self.down_masks[j]
        down = self.down_masks
        for c in _bits(common):
            if down[c] == common:
                return c
        return None

    @cached_property
    def join_table(self) -> Optional[list[list[int]]]:
        size = len(self)
        table = [[0] * size for _ in range(size)]
        for i in range(size):
            for j in range(i, size):
                c = self.join(i, j)
                if c is None:
                    return None
                table[i][j] = table[j][i] = c
        return table

    @cached_property
    def meet_table(self) -> Optional[list[list[int]]]:
        size = len(self)
        table = [[0] * size for _ in range(size)]
        for i in range(size):
            for j in range(i, size):
                c = self.meet(i, j)
                if c is None:
                    return None
                table[i][j] = table[j][i] = c
        return table

    def is_lattice(self) -> bool:
        return len(self) > 0 and self.join_table is not None and self.meet_table is not None

    def mobius_row(self, i: int) -> dict[int, int]:
        """Möbius values ``mu(i, j)`` for every ``j >= i``."""
        up = self.up_masks[i]
        down = self.down_masks
        mu = {i: 1}
        for j in self.topological_order:
            if j == i or not (up >> j) & 1:
                continue
            below = down[j] & up & ~(1 << j)
            mu[j] = -sum(mu[k] for k in _bits(below))
        return mu

    def mobius(self, i: int, j: int) -> int:
        if not self.leq(i, j):
            raise PosetError("Möbius function needs comparable elements")
        return self.mobius_row(i)[j]

    # derived posets -----------------------------------------------------

    def induced(self, labels: Iterable[str]) -> "FinitePoset":
        """Subposet on ``labels`` (kept in this poset's order)."""
        keep = sorted(self.index(x) for x in set(labels))
        up = self.up_masks
        sub = [self.elements[i] for i in keep]
        return FinitePoset.from_relation(
            sub, lambda x, y: bool((up[self._index[x]] >> self._index[y]) & 1), n=self.n)

    def relabel(self, mapping: Callable[[str], str], n: Optional[int] = None) -> "FinitePoset":
        """Rename every element through ``mapping``; elements are re-sorted by new label."""
        new = [mapping(x) for x in self.elements]
        order = sorted(range(len(new)), key=lambda i: new[i])
        pos = {old: k for k, old in enumerate(order)}
        return FinitePoset([new[i] for i in order], [(pos[a], pos[b]) for a, b in self.covers],
                           n=self.n if n is None else n)

    # export -------------------------------------------------------------

    def to_dict(self) -> dict:
        return {"n": self.n, "elements": list(self.elements), "covers": [list(c) for c in self.covers]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def to_dot(self, name: str = "hasse") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for label in self.elements:
            lines.append(f'  "{label}";')
        for a, b in self.covers:
            lines.append(f'  "{self.elements[a]}" -> "{self.elements[b]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _levels(p: FinitePoset) -> list[int]:
    level = [0] * len(p)
    for i in p.topological_order:
        for j in p.upper_covers(i):
            level[j] = max(level[j], level[i] + 1)
    return level


def find_isomorphism(p: FinitePoset, q: FinitePoset) -> Optional[dict[int, int]]:
    """Backtracking search for an order isomorphism ``p -> q``.

    Candidates are pruned by (level, #lower covers, #upper covers, |down-set|,
    |up-set|); adjacency in the Hasse diagram is checked as the map grows.
    """
    if len(p) != len(q) or len(p.covers) != len(q.covers):
        return None

    def signature(poset: FinitePoset) -> list[tuple[int, ...]]:
        lv = _levels(poset)
        return [(lv[i], len(poset.lower_covers(i)), len(poset.upper_covers(i)),
                 bin(poset.down_masks[i]).count("1"), bin(poset.up_masks[i]).count("1"))
                for i in range(len(poset))]

    sp, sq = signature(p), signature(q)
    if sorted(sp) != sorted(sq):
        return None
    order = list(p.topological_order)
    p_down = [set(p.lower_covers(i)) for i in range(len(p))]
    q_down = [set(q.lower_covers(i)) for i in range(len(q))]
    by_sig: dict[tuple[int, ...], list[int]] = {}
    for j, s in enumerate(sq):
        by_sig.setdefault(s, []).append(j)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        x = order[k]
        # lower covers of x come earlier in topological order, so are mapped
        want = {mapping[y] for y in p_down[x]}
        for cand in by_sig[sp[x]]:
            if cand in used or q_down[cand] != want:
                continue
            mapping[x] = cand
            used.add(cand)
            if extend(k + 1):
                return True
            del mapping[x]
            used.discard(cand)
        return False

    return dict(mapping) if extend(0) else None
