"""Weight diagrams, arrow diagrams, cap diagrams and (x-o) sequences."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping, NamedTuple

from .core import ShiftedWeight, require_dominant

__all__ = [
    "Cell",
    "WeightDiagram",
    "ArrowDiagram",
    "DualArrowDiagram",
    "CapDiagram",
    "CrossCircSequence",
    "weight_diagram",
    "atypicality",
    "arrow_diagram",
    "dual_arrow_diagram",
    "cap_diagram",
    "cross_circ_sequences",
    "intervals",
]


class Cell(NamedTuple):
    """Contents of one position: ``x`` crosses plus ``gt`` or ``lt`` extra markers."""

    x: int = 0
    gt: int = 0
    lt: int = 0

    @property
    def marker(self):
        if self.gt:
            return "gt"
        if self.lt:
            return "lt"
        return None

    @property
    def empty(self) -> bool:
        return not (self.x or self.gt or self.lt)

    @property
    def glyph(self) -> str:
        """Compact text form: ``o``, ``X``, ``X3``, ``>``, ``X>``, ``>2`` ..."""
        if self.empty:
            return "o"
        out = ""
        if self.x:
            out += "X" if self.x == 1 else f"X{self.x}"
        for sym, cnt in ((">", self.gt), ("<", self.lt)):
            if cnt:
                out += sym if cnt == 1 else f"{sym}{cnt}"
        return out


EMPTY = Cell()


@dataclass(frozen=True)
class WeightDiagram:
    """Sparse diagram: only non-empty positions are stored, sorted by position."""

    cells: tuple[tuple[int, Cell], ...] = ()

    def __post_init__(self):
        cleaned = tuple(
            sorted((int(p), Cell(*c)) for p, c in self.cells if not Cell(*c).empty)
        )
        if len({p for p, _ in cleaned}) != len(cleaned):
            raise ValueError("duplicate position in diagram")
        object.__setattr__(self, "cells", cleaned)

    @classmethod
    def from_mapping(cls, cells: Mapping[int, Cell]) -> "WeightDiagram":
        return cls(tuple(cells.items()))

    def __getitem__(self, p: int) -> Cell:
        return self.as_dict().get(p, EMPTY)

    def as_dict(self) -> dict[int, Cell]:
        return dict(self.cells)

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.cells)

    def x_positions(self) -> tuple[int, ...]:
        """Positions of crosses, repeated by multiplicity, left to right."""
        return tuple(p for p, c in self.cells for _ in range(c.x))

    @property
    def atypicality(self) -> int:
        return sum(c.x for _, c in self.cells)

    def to_weight(self) -> ShiftedWeight:
        """The dominant-ordered weight with this diagram."""
        eps, dlt = [], []
        for p, c in self.cells:
            eps += [p] * (c.x + c.gt)
            dlt += [p] * (c.x + c.lt)
        return ShiftedWeight(sorted(eps, reverse=True), [-p for p in sorted(dlt)])

    def __str__(self) -> str:
        return "{" + ", ".join(f"{p}:{c.glyph}" for p, c in self.cells) + "}"


def weight_diagram(nu: ShiftedWeight) -> WeightDiagram:
    k = Counter(nu.a)
    s = Counter(nu.delta_positions)
    cells = {}
    for p in set(k) | set(s):
        x = min(k[p], s[p])
        cells[p] = Cell(x, k[p] - x, s[p] - x)
    return WeightDiagram.from_mapping(cells)


def atypicality(nu: ShiftedWeight) -> int:
    return weight_diagram(nu).atypicality


@dataclass(frozen=True)
class ArrowDiagram:
    """Arrow ends ``k`` and counts ``M``, both indexed by row ``i = 1..m``."""

    starts: tuple[int, ...]
    k: tuple[int, ...]
    M: tuple[int, ...]

    def arrows(self) -> list[tuple[int, int]]:
        return list(zip(self.starts, self.k))

    def over(self, r: int) -> int:
        """Number of arrows starting at or passing over ``r``."""
        return sum(1 for s, e in zip(self.starts, self.k) if s <= r < e)


def arrow_diagram(lam: ShiftedWeight) -> ArrowDiagram:
    require_dominant(lam)
    blocked = set(lam.delta_positions)
    used: set[int] = set()
    k = [0] * lam.m
    for i in range(lam.m - 1, -1, -1):
        c = lam.a[i]
        while c in blocked or c in used:
            c += 1
        used.add(c)
        k[i] = c
    dpos = lam.delta_positions
    M = tuple(sum(1 for q in dpos if q < ki) for ki in k)
    return ArrowDiagram(lam.a, tuple(k), M)


@dataclass(frozen=True)
class DualArrowDiagram:
    """Arrows starting at the delta positions, indexed by ``j = 1..n``."""

    starts: tuple[int, ...]
    l: tuple[int, ...]
    N: tuple[int, ...]


def dual_arrow_diagram(lam: ShiftedWeight) -> DualArrowDiagram:
    """Arrows from each ``-b_j`` to the first free position right of it
    that carries no epsilon, drawn for ``j = 1..n``.

    ``N_j`` counts the ``>`` and ``X`` symbols left of ``l_j``.  Column ``j``
    of the CTD is then the row window ``[m - N_j + 1, m - N_j + (l_j + b_j)]``.
    """
    require_dominant(lam)
    blocked = set(lam.a)
    used: set[int] = set()
    dpos = lam.delta_positions
    l = []
    for q in dpos:
        c = q
        while c in blocked or c in used:
            c += 1
        used.add(c)
        l.append(c)
    N = tuple(sum(1 for p in lam.a if p < lj) for lj in l)
    return DualArrowDiagram(dpos, tuple(l), N)


@dataclass(frozen=True)
class CapDiagram:
    """Caps ``(start, end)`` ordered by start, one per cross."""

    caps: tuple[tuple[int, int], ...]

    @property
    def ends(self) -> frozenset[int]:
        return frozenset(e for _, e in self.caps)

    def over(self, r: int) -> int:
        return sum(1 for s, e in self.caps if s <= r < e)


def cap_diagram(lam: ShiftedWeight) -> CapDiagram:
    """Caps drawn right to left, each to the first free empty position."""
    require_dominant(lam)
    D = weight_diagram(lam)
    occupied = set(D.positions)
    ends: set[int] = set()
    caps = []
    for p in reversed(D.x_positions()):
        c = p + 1
        while c in occupied or c in ends:
            c += 1
        ends.add(c)
        caps.append((p, c))
    return CapDiagram(tuple(sorted(caps)))


@dataclass(frozen=True)
class CrossCircSequence:
    rows: tuple[int, ...]
    start: int
    end: int


def cross_circ_sequences(lam: ShiftedWeight) -> list[CrossCircSequence]:
    """One sequence per cross, chaining arrows through ``>`` end points."""
    arrows = arrow_diagram(lam)
    D = weight_diagram(lam)
    row_at = {p: i for i, p in enumerate(lam.a, start=1)}
    out = []
    for p in D.x_positions():
        i = row_at[p]
        rows = [i]
        end = arrows.k[i - 1]
        while D[end].gt and not D[end].x:
            i = row_at[end]
            rows.append(i)
            end = arrows.k[i - 1]
        out.append(CrossCircSequence(tuple(rows), p, end))
    return out


def intervals(lam: ShiftedWeight) -> list[tuple[int, int]]:
    """Connected components of the segments spanned by (x-o) sequences."""
    segs = sorted((s.start, s.end) for s in cross_circ_sequences(lam))
    out: list[list[int]] = []
    for s, e in segs:
        if out and s <= out[-1][1]:
            out[-1][1] = max(out[-1][1], e)
        else:
            out.append([s, e])
    return [(s, e) for s, e in out]
