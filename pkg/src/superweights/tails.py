"""Orthogonal incomparable sets, tail and longtail.

``s(nu)`` is the size of the largest incomparable set of right odd roots
orthogonal to ``nu``.  ``longtail`` maximizes it over every base; ``tail``
evaluates it at the single base ``sigma_lambda`` built from the dagger
diagram.  The two can differ, and :func:`search_tail_gap` looks for weights
where they do.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from multiprocessing import Pool
from typing import Iterator

import numpy as np

from ._errors import NotDaggerDiagram
from .core import (
    BaseWord,
    RightOddRoot,
    ShiftedWeight,
    base_from_row_lengths,
    enumerate_bases,
    require_dominant,
)
from .ctd import ctd, shifted_weight_for_base
from .diagrams import (
    Cell,
    WeightDiagram,
    arrow_diagram,
    cap_diagram,
    weight_diagram,
)

__all__ = [
    "OrthogonalityMask",
    "DaggerDiagram",
    "GapWitness",
    "orthogonality_mask",
    "s_value",
    "longest_incomparable_chain",
    "hwt",
    "longtail",
    "longtail_via_ctd",
    "longtail_via_arrows",
    "longtail_via_caps",
    "gathering_base",
    "witness_base",
    "is_dagger_diagram",
    "phi",
    "psi",
    "sigma_lambda",
    "dagger_weight",
    "tail",
    "canonical_dominant_weights",
    "search_tail_gap",
]


@dataclass(frozen=True)
class OrthogonalityMask:
    m: int
    n: int
    stars: frozenset[RightOddRoot]

    def dense(self) -> np.ndarray:
        grid = np.zeros((self.m, self.n), dtype=bool)
        for i, j in self.stars:
            grid[i - 1, j - 1] = True
        return grid


def orthogonality_mask(nu: ShiftedWeight) -> OrthogonalityMask:
    stars = frozenset(
        RightOddRoot(i, j)
        for i, x in enumerate(nu.a, start=1)
        for j, y in enumerate(nu.b, start=1)
        if x == -y
    )
    return OrthogonalityMask(nu.m, nu.n, stars)


def longest_incomparable_chain(cells) -> int:
    """Longest chain of cells strictly increasing in both coordinates."""
    cells = sorted(set(cells))
    best = [1] * len(cells)
    for t, (i, j) in enumerate(cells):
        for u in range(t):
            i2, j2 = cells[u]
            if i2 < i and j2 < j and best[u] + 1 > best[t]:
                best[t] = best[u] + 1
    return max(best, default=0)


def s_value(nu: ShiftedWeight) -> int:
    return longest_incomparable_chain(orthogonality_mask(nu).stars)


def hwt(lam: ShiftedWeight) -> list[ShiftedWeight]:
    """Sorted, deduplicated highest weights over every base."""
    require_dominant(lam)
    return sorted({shifted_weight_for_base(lam, w) for w in enumerate_bases(lam.m, lam.n)})


def longtail_via_ctd(lam: ShiftedWeight) -> int:
    return longest_incomparable_chain(ctd(lam).ones)


def longtail_via_arrows(lam: ShiftedWeight) -> int:
    arrows = arrow_diagram(lam)
    return max((arrows.over(r) for r in set(lam.a)), default=0)


def longtail_via_caps(lam: ShiftedWeight) -> int:
    caps = cap_diagram(lam)
    return max((caps.over(s) for s, _ in caps.caps), default=0)


longtail = longtail_via_arrows


def gathering_base(lam: ShiftedWeight, r: int) -> BaseWord:
    """Base that drives every arrow over ``r`` to end exactly at ``r``.

    Rows whose arrow starts at or before ``r`` and ends after it stop at
    ``r``; rows whose arrow ends at or before ``r`` are reflected fully.
    """
    arrows = arrow_diagram(lam)
    lengths = []
    for a, k, M in zip(lam.a, arrows.k, arrows.M):
        if a > r:
            lengths.append(0)
        elif k > r:
            lengths.append(min(lam.n, max(0, M + r - k)))
        else:
            lengths.append(lam.n)
    return base_from_row_lengths(lengths, lam.n)


def witness_base(lam: ShiftedWeight) -> BaseWord:
    """A base whose diagram stacks ``longtail(lam)`` crosses at one position."""
    arrows = arrow_diagram(lam)
    if not lam.a:
        return BaseWord.dist(lam.m, lam.n)
    r = max(sorted(set(lam.a)), key=lambda p: (arrows.over(p), -p))
    return gathering_base(lam, r)


@dataclass(frozen=True)
class DaggerDiagram:
    """A diagram of the dagger space with the data of its construction.

    ``stacked`` is the position holding the cross stack (``None`` when the
    weight is typical) and ``multiplicity`` its size.
    """

    diagram: WeightDiagram
    stacked: int | None = None
    multiplicity: int = 0
    x_first: int | None = None
    d: int | None = None


def _symbol_count(c: Cell) -> int:
    return c.x + c.gt + c.lt


def is_dagger_diagram(D) -> bool:
    D = D.diagram if isinstance(D, DaggerDiagram) else D
    crowded = [(p, c) for p, c in D.cells if _symbol_count(c) > 1]
    if len(crowded) > 1:
        return False
    xs = [p for p, c in D.cells if c.x]
    if crowded:
        p, c = crowded[0]
        if c.gt or c.lt or c.x < 2:
            return False
        if any(q < p for q in xs):
            return False
    if len(xs) >= 2:
        occupied = set(D.positions)
        if all(q in occupied for q in range(xs[0] + 1, xs[1])):
            return False
    return True


def phi(lam: ShiftedWeight) -> DaggerDiagram:
    """Stack the crosses of the leftmost run onto its rightmost cross."""
    require_dominant(lam)
    D = weight_diagram(lam)
    xs = D.x_positions()
    if not xs:
        return DaggerDiagram(D)
    x1 = xs[0]
    occupied = set(D.positions)
    d = x1 + 1
    while d in occupied:
        d += 1
    run = [p for p in xs if p < d]
    xdag = run[-1]
    cells = D.as_dict()
    for p in run:
        del cells[p]
    cells[xdag] = Cell(len(run))
    return DaggerDiagram(WeightDiagram.from_mapping(cells), xdag, len(run), x1, d)


def psi(D) -> ShiftedWeight:
    """Spread the cross stack over the nearest empty positions on its left."""
    dd = D.diagram if isinstance(D, DaggerDiagram) else D
    if not is_dagger_diagram(dd):
        raise NotDaggerDiagram(f"{dd} is not in the dagger space")
    cells = dd.as_dict()
    for p, c in dd.cells:
        if c.x > 1:
            cells[p] = Cell(1)
            q = p - 1
            for _ in range(c.x - 1):
                while q in cells:
                    q -= 1
                cells[q] = Cell(1)
    return WeightDiagram.from_mapping(cells).to_weight()


def sigma_lambda(lam: ShiftedWeight) -> BaseWord:
    """Base whose highest weight has the diagram ``phi(lam)``."""
    dag = phi(lam)
    if dag.stacked is None:
        return BaseWord.dist(lam.m, lam.n)
    return gathering_base(lam, dag.stacked)


def dagger_weight(lam: ShiftedWeight) -> ShiftedWeight:
    return shifted_weight_for_base(lam, sigma_lambda(lam))


def tail(lam: ShiftedWeight) -> int:
    return s_value(dagger_weight(lam))


def canonical_dominant_weights(m: int, n: int, span: int) -> Iterator[ShiftedWeight]:
    """Dominant weights with all positions in ``[0, span]`` and leftmost position 0."""
    window = range(span + 1)
    eps_choices = list(combinations(window, m))
    for eps in eps_choices:
        for dlt in combinations(window, n):
            if (eps and eps[0] == 0) or (dlt and dlt[0] == 0) or (not eps and not dlt):
                yield ShiftedWeight(eps[::-1], [-q for q in dlt])


@dataclass(frozen=True, order=True)
class GapWitness:
    weight: ShiftedWeight
    tail: int
    longtail: int
    sigma_lambda: BaseWord
    witness_base: BaseWord

    def to_json(self) -> str:
        return json.dumps(
            {
                "weight": str(self.weight),
                "tail": self.tail,
                "longtail": self.longtail,
                "sigma_lambda": str(self.sigma_lambda),
                "witness_base": str(self.witness_base),
            }
        )


def _gap_record(lam: ShiftedWeight) -> GapWitness | None:
    lt = longtail_via_arrows(lam)
    # tail >= 1 for every atypical weight, so a gap needs longtail >= 2
    if lt < 2:
        return None
    t = tail(lam)
    if lt <= t:
        return None
    return GapWitness(lam, t, lt, sigma_lambda(lam), witness_base(lam))


def _scan_chunk(args) -> list[GapWitness]:
    m, n, span, eps = args
    out = []
    for dlt in combinations(range(span + 1), n):
        if eps[0] != 0 and dlt[0] != 0:
            continue
        rec = _gap_record(ShiftedWeight(eps[::-1], [-q for q in dlt]))
        if rec is not None:
            out.append(rec)
    return out


def search_tail_gap(m: int, n: int, bound: int, jobs: int = 1) -> list[GapWitness]:
    """All dominant weights with ``longtail > tail`` whose positions fit in
    ``[-bound, bound]`` after some translation, in canonical form and sorted.
    """
    if m < 1 or n < 1 or bound < 1:
        raise ValueError("search_tail_gap needs m, n, bound >= 1")
    span = 2 * bound
    tasks = [(m, n, span, eps) for eps in combinations(range(span + 1), m)]
    if jobs > 1:
        with Pool(jobs) as pool:
            chunks = pool.imap_unordered(_scan_chunk, tasks, chunksize=8)
            found = [rec for chunk in chunks for rec in chunk]
    else:
        found = [rec for task in tasks for rec in _scan_chunk(task)]
    return sorted(found)
