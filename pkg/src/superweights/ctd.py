"""Change-tracking diagrams, closed-form transport and atoms.

The CTD of a dominant weight marks the right odd roots whose reflection
moves the weight.  Row ``i`` is the window ``M_i + 1 - (k_i - a_i) <= j <= M_i``.
Transport to any base is then a single sum over B_sigma.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from ._errors import InvalidAtomIndexSet
from .core import BaseWord, RightOddRoot, ShiftedWeight, b_sigma, require_dominant
from .diagrams import (
    Cell,
    WeightDiagram,
    arrow_diagram,
    cap_diagram,
    intervals,
    weight_diagram,
)

__all__ = [
    "CTD",
    "Atom",
    "ctd",
    "shifted_weight_for_base",
    "rho",
    "RHO_SHIFT_RULE",
    "weight_for_base",
    "anti_distinguished_diagram",
    "distinguished_to_anti_walk",
    "atom_index_sets",
    "atom_weight",
]


@dataclass(frozen=True)
class CTD:
    """Set of right odd roots ``(i, j)`` with bit 1 on an ``m x n`` grid."""

    m: int
    n: int
    ones: frozenset[RightOddRoot]

    @classmethod
    def from_windows(cls, m: int, n: int, windows: Sequence) -> "CTD":
        ones = frozenset(
            RightOddRoot(i, j)
            for i, w in enumerate(windows, start=1)
            if w is not None
            for j in range(w[0], w[1] + 1)
        )
        return cls(m, n, ones)

    def bit(self, i: int, j: int) -> bool:
        return (i, j) in self.ones

    def dense(self) -> np.ndarray:
        grid = np.zeros((self.m, self.n), dtype=bool)
        for i, j in self.ones:
            grid[i - 1, j - 1] = True
        return grid

    def windows(self) -> list:
        """Per-row ``(jmin, jmax)`` or ``None``; rows must be contiguous."""
        out = []
        for i in range(1, self.m + 1):
            js = sorted(j for (r, j) in self.ones if r == i)
            if not js:
                out.append(None)
                continue
            if js[-1] - js[0] + 1 != len(js):
                raise ValueError(f"row {i} of the CTD is not contiguous")
            out.append((js[0], js[-1]))
        return out

    def to_json(self) -> dict:
        rows = [
            {"i": i, "jmin": w[0], "jmax": w[1]}
            for i, w in enumerate(self.windows(), start=1)
            if w is not None
        ]
        return {"m": self.m, "n": self.n, "rows": rows}

    @classmethod
    def from_json(cls, data: dict) -> "CTD":
        windows: list = [None] * data["m"]
        for row in data["rows"]:
            windows[row["i"] - 1] = (row["jmin"], row["jmax"])
        return cls.from_windows(data["m"], data["n"], windows)


def ctd(lam: ShiftedWeight) -> CTD:
    arrows = arrow_diagram(lam)
    windows = []
    for a, k, M in zip(lam.a, arrows.k, arrows.M):
        windows.append(None if k == a else (M + 1 - (k - a), M))
    return CTD.from_windows(lam.m, lam.n, windows)


def _add_roots(lam: ShiftedWeight, roots: Iterable) -> ShiftedWeight:
    a, b = list(lam.a), list(lam.b)
    for i, j in roots:
        a[i - 1] += 1
        b[j - 1] -= 1
    return ShiftedWeight(a, b)


def shifted_weight_for_base(lam: ShiftedWeight, sigma) -> ShiftedWeight:
    """Transport ``lam`` to ``sigma`` by adding the CTD-marked roots of B_sigma."""
    C = ctd(lam)
    return _add_roots(lam, (r for r in b_sigma(sigma) if r in C.ones))


RHO_SHIFT_RULE = (
    "rho_i = (m - n + 1 - 2i)/2 and rho_-j = (m + n + 1 - 2j)/2, "
    "plus 1/2 on every epsilon entry and -1/2 on every delta entry when m + n is even"
)


def rho(m: int, n: int) -> ShiftedWeight:
    """Integral Weyl vector of the distinguished base.

    The half-sum is shifted by ``r(1..1 | -1..-1)`` with ``r`` in ``{0, 1/2}``;
    that vector is orthogonal to every root so all formulas are unchanged.
    """
    r = Fraction(1, 2) if (m + n) % 2 == 0 else Fraction(0)
    a = [Fraction(m - n + 1 - 2 * i, 2) + r for i in range(1, m + 1)]
    b = [Fraction(m + n + 1 - 2 * j, 2) - r for j in range(1, n + 1)]
    return ShiftedWeight([int(x) for x in a], [int(x) for x in b])


def weight_for_base(
    lam: ShiftedWeight, sigma, unshifted: ShiftedWeight | None = None
) -> ShiftedWeight:
    """Unshifted highest weight with respect to ``sigma``.

    ``unshifted`` is the distinguished highest weight; when omitted it is
    ``lam - rho(m, n)``.
    """
    C = ctd(lam)
    if unshifted is None:
        r = rho(lam.m, lam.n)
        unshifted = ShiftedWeight(
            [x - y for x, y in zip(lam.a, r.a)], [x - y for x, y in zip(lam.b, r.b)]
        )
    a, b = list(unshifted.a), list(unshifted.b)
    for i, j in b_sigma(sigma):
        if (i, j) not in C.ones:
            a[i - 1] -= 1
            b[j - 1] += 1
    return ShiftedWeight(a, b)


def anti_distinguished_diagram(lam: ShiftedWeight) -> WeightDiagram:
    """Move every cross of the diagram to the end of its cap."""
    D = weight_diagram(lam).as_dict()
    for start, end in cap_diagram(lam).caps:
        c = D[start]
        D[start] = Cell(c.x - 1, c.gt, c.lt)
        e = D.get(end, Cell())
        D[end] = Cell(e.x + 1, e.gt, e.lt)
    return WeightDiagram.from_mapping(D)


def distinguished_to_anti_walk(lam: ShiftedWeight) -> list[ShiftedWeight]:
    """Weights for the bases ``e^i d^n e^(m-i)`` with ``i = m, m-1, .., 0``.

    Step ``t`` applies the CTD row ``m - t + 1``, which carries epsilon_i
    from ``a_i`` to ``k_i``.
    """
    C = ctd(lam)
    windows = C.windows()
    out = [lam]
    cur = lam
    for i in range(lam.m, 0, -1):
        w = windows[i - 1]
        if w is not None:
            cur = _add_roots(cur, ((i, j) for j in range(w[0], w[1] + 1)))
        out.append(cur)
    return out


@dataclass(frozen=True)
class Atom:
    """Rows and columns of one atom and the segment it covers."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    segment: tuple[int, int]

    @property
    def index_set(self) -> frozenset[int]:
        return frozenset(self.rows) | frozenset(-j for j in self.cols)

    def __str__(self) -> str:
        idx = sorted(self.rows) + sorted((-j for j in self.cols), reverse=True)
        return "{" + ",".join(map(str, idx)) + "}"


def atom_index_sets(lam: ShiftedWeight, include_trivial: bool = False) -> list[Atom]:
    """Atoms ordered left to right, one per interval.

    With ``include_trivial`` every index outside all intervals becomes a
    singleton atom, so the result partitions all ``m + n`` indices.
    """
    arrows = arrow_diagram(lam)
    dpos = lam.delta_positions
    atoms = []
    for p, k in intervals(lam):
        rows = tuple(
            i
            for i in range(1, lam.m + 1)
            if p <= lam.a[i - 1] and arrows.k[i - 1] <= k
        )
        cols = tuple(j for j in range(1, lam.n + 1) if p <= dpos[j - 1] <= k)
        atoms.append(Atom(rows, cols, (p, k)))
    if include_trivial:
        taken_r = {i for A in atoms for i in A.rows}
        taken_c = {j for A in atoms for j in A.cols}
        for i in range(1, lam.m + 1):
            if i not in taken_r:
                atoms.append(Atom((i,), (), (lam.a[i - 1], arrows.k[i - 1])))
        for j in range(1, lam.n + 1):
            if j not in taken_c:
                atoms.append(Atom((), (j,), (dpos[j - 1], dpos[j - 1])))
        atoms.sort(key=lambda A: (A.segment, A.rows, A.cols))
    return atoms


def atom_weight(lam: ShiftedWeight, A) -> ShiftedWeight:
    """Restriction of ``lam`` to the coordinates of the atom ``A``.

    ``A`` may be an :class:`Atom` or an iterable of signed indices.
    """
    target = A.index_set if isinstance(A, Atom) else frozenset(A)
    for atom in atom_index_sets(lam, include_trivial=True):
        if atom.index_set == target:
            return ShiftedWeight(
                [lam.a[i - 1] for i in sorted(atom.rows)],
                [lam.b[j - 1] for j in sorted(atom.cols)],
            )
    raise InvalidAtomIndexSet(f"{sorted(target)} is not an atom of {lam}")
