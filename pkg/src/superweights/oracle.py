"""Brute-force reference implementations and the verification sweep.

Nothing here calls a closed-form formula: transports are literal folds of
odd reflections, CTD bits come from reflecting once, and s-values come from
exhaustive subset search.  ``run_verification_suite`` pits these against
the fast implementations.
"""

from __future__ import annotations

import json
from collections import Counter
import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable

from ._errors import EnumerationTooLarge, TooManyStars
from .core import (
    BaseWord,
    RightOddRoot,
    ShiftedWeight,
    b_sigma,
    base_from_incomparable_set,
    enumerate_bases,
    incomparable_set_of_base,
    reflect_base,
    reflect_shifted_weight,
    reflection_sequence,
    require_dominant,
)

__all__ = [
    "OracleReport",
    "random_valid_order",
    "fold_reflections",
    "oracle_shifted_weight",
    "oracle_ctd",
    "oracle_s_value",
    "oracle_longtail",
    "run_verification_suite",
    "MAX_STARS",
    "MAX_BASES",
]

MAX_STARS = 20
MAX_BASES = comb(24, 12)


def random_valid_order(sigma, rng: random.Random) -> list[RightOddRoot]:
    """A uniformly chosen valid next root at every step until B_sigma is used up."""
    w = BaseWord(sigma) if not isinstance(sigma, BaseWord) else sigma
    todo = set(b_sigma(w))
    cur = BaseWord.dist(w.m, w.n)
    order = []
    while todo:
        simple = sorted(todo & incomparable_set_of_base(cur))
        alpha = rng.choice(simple)
        cur = reflect_base(cur, alpha)
        todo.remove(alpha)
        order.append(alpha)
    return order


def fold_reflections(lam: ShiftedWeight, order: Iterable) -> tuple[BaseWord, ShiftedWeight]:
    """Apply reflections one by one from the distinguished base.

    Raises if some root is not simple at its turn.
    """
    cur = BaseWord.dist(lam.m, lam.n)
    nu = lam
    for alpha in order:
        cur = reflect_base(cur, alpha)
        nu = reflect_shifted_weight(nu, alpha)
    return cur, nu


def oracle_shifted_weight(lam: ShiftedWeight, sigma, order=None) -> ShiftedWeight:
    require_dominant(lam)
    if order is None:
        order = reflection_sequence(sigma)
    end, nu = fold_reflections(lam, order)
    if end != BaseWord(sigma):
        raise AssertionError(f"reflection order ends at {end}, not {sigma}")
    return nu


def oracle_ctd(lam: ShiftedWeight):
    """Bit ``(i, j)``: is the transported weight orthogonal to the root?"""
    from .ctd import CTD

    require_dominant(lam)
    ones = set()
    for i in range(1, lam.m + 1):
        for j in range(1, lam.n + 1):
            sigma = base_from_incomparable_set({(i, j)}, lam.m, lam.n)
            nu = oracle_shifted_weight(lam, sigma)
            if nu.a[i - 1] == -nu.b[j - 1]:
                ones.add(RightOddRoot(i, j))
    return CTD(lam.m, lam.n, frozenset(ones))


def _stars(nu: ShiftedWeight) -> list[tuple[int, int]]:
    return [
        (i, j)
        for i, x in enumerate(nu.a, start=1)
        for j, y in enumerate(nu.b, start=1)
        if x == -y
    ]


def oracle_s_value(nu: ShiftedWeight) -> int:
    stars = _stars(nu)
    if len(stars) > MAX_STARS:
        raise TooManyStars(f"{len(stars)} starred cells exceed the limit {MAX_STARS}")
    for size in range(min(nu.m, nu.n, len(stars)), 0, -1):
        for subset in combinations(stars, size):
            if all(
                (x[0] - y[0]) * (x[1] - y[1]) > 0 for x, y in combinations(subset, 2)
            ):
                return size
    return 0


def oracle_longtail(lam: ShiftedWeight) -> int:
    """Maximize s over the literal transports to every base."""
    from .tails import s_value

    require_dominant(lam)
    if comb(lam.m + lam.n, lam.n) > MAX_BASES:
        raise EnumerationTooLarge(f"gl({lam.m}|{lam.n}) has too many bases to enumerate")
    return max(
        (s_value(oracle_shifted_weight(lam, w)) for w in enumerate_bases(lam.m, lam.n)),
        default=0,
    )


@dataclass
class OracleReport:
    checked: int = 0
    mismatches: list = field(default_factory=list)
    by_label: Counter = field(default_factory=Counter)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def check(self, label: str, inp, expected, got) -> None:
        self.checked += 1
        self.by_label[label] += 1
        if expected != got:
            self.mismatches.append((label, str(inp), str(expected), str(got)))

    def merge(self, other: "OracleReport") -> "OracleReport":
        return OracleReport(
            self.checked + other.checked,
            sorted(self.mismatches + other.mismatches),
            self.by_label + other.by_label,
        )

    def to_json(self) -> str:
        return json.dumps(
            {"checked": self.checked, "mismatches": [list(x) for x in self.mismatches]}
        )


def _check_weight(lam: ShiftedWeight, report: OracleReport, rng: random.Random) -> None:
    from .ctd import (
        anti_distinguished_diagram,
        atom_index_sets,
        atom_weight,
        ctd,
        distinguished_to_anti_walk,
        shifted_weight_for_base,
    )
    from .diagrams import arrow_diagram, cap_diagram, dual_arrow_diagram, weight_diagram
    from .tails import longtail_via_arrows, longtail_via_caps, longtail_via_ctd

    m, n = lam.m, lam.n
    arrows = arrow_diagram(lam)
    C = ctd(lam)
    D = weight_diagram(lam)

    report.check("ctd", lam, oracle_ctd(lam).ones, C.ones)

    for w in enumerate_bases(m, n):
        expected = oracle_shifted_weight(lam, w)
        report.check("transport", (lam, w), expected, shifted_weight_for_base(lam, w))
        if m + n <= 6:
            for _ in range(3):
                got = oracle_shifted_weight(lam, w, random_valid_order(w, rng))
                report.check("order-independence", (lam, w), expected, got)

    lt = oracle_longtail(lam)
    report.check("longtail-ctd", lam, lt, longtail_via_ctd(lam))
    report.check("longtail-arrows", lam, lt, longtail_via_arrows(lam))
    report.check("longtail-caps", lam, lt, longtail_via_caps(lam))

    walk = distinguished_to_anti_walk(lam)
    for t, nu in enumerate(walk):
        sigma = BaseWord.sigma_i(m - t, m, n)
        report.check("walk", (lam, sigma), oracle_shifted_weight(lam, sigma), nu)
    anti = anti_distinguished_diagram(lam)
    report.check("anti-walk", lam, anti, weight_diagram(walk[-1]))
    report.check(
        "anti-oracle",
        lam,
        anti,
        weight_diagram(oracle_shifted_weight(lam, BaseWord.anti(m, n))),
    )

    # walk properties (1), (2), (4); diags[i] is the diagram for the base e^i d^n e^(m-i)
    diags = {m - t: weight_diagram(nu) for t, nu in enumerate(walk)}
    for i in range(m, -1, -1):
        Di = diags[i]
        report.check("walk-no-x-and-lt", (lam, i), True, all(
            not (c.x and c.lt) for _, c in Di.cells
        ))
        if i >= 1:
            ai, ki = lam.a[i - 1], arrows.k[i - 1]
            report.check("walk-busy-segment", (lam, i), True, all(
                Di[p].x or Di[p].lt for p in range(ai, ki)
            ))
            nxt = diags[i - 1]
            changed = {p for p in set(Di.positions) | set(nxt.positions) if Di[p] != nxt[p]}
            if ai == ki:
                report.check("walk-step", (lam, i), set(), changed)
            else:
                report.check("walk-step", (lam, i), True, changed <= {ai, ki}
                             and nxt[ki].x == Di[ki].x + 1 and nxt[ai].x == Di[ai].x - 1)
        if i < m:
            bound = arrows.k[i]
            report.check("walk-right-part", (lam, i), True, all(
                Di[p] == D[p] for p in set(D.positions) | set(Di.positions) if p > bound
            ))

    # window monotonicity
    starts = [M + 1 - (k - a) for a, k, M in zip(lam.a, arrows.k, arrows.M)]
    report.check("window-monotone", lam, True, all(
        starts[i2] <= starts[i1] for i1 in range(m) for i2 in range(i1, m)
    ))
    report.check("M-monotone", lam, True, all(
        x >= y for x, y in zip(arrows.M, arrows.M[1:])
    ))

    # columns of the CTD from the dual arrow diagram
    dual = dual_arrow_diagram(lam)
    cols = {
        RightOddRoot(i, j)
        for j, (q, lj, Nj) in enumerate(zip(dual.starts, dual.l, dual.N), start=1)
        for i in range(m - Nj + 1, m - Nj + (lj - q) + 1)
    }
    report.check("dual-columns", lam, C.ones, frozenset(cols))

    caps = cap_diagram(lam)
    report.check("cap-ends", lam, caps.ends, frozenset(k for k in arrows.k if D[k].empty))
    span = set(lam.a) | set(lam.delta_positions) | set(arrows.k)
    for r in range(min(span, default=0) - 1, max(span, default=0) + 2):
        report.check("arrow-cap-duality", (lam, r), arrows.over(r), caps.over(r))

    # atom CTD restriction
    for A in atom_index_sets(lam):
        sub = atom_weight(lam, A)
        rows, cols = sorted(A.rows), sorted(A.cols)
        sub_ones = {
            (rows[i - 1], cols[j - 1]) for i, j in ctd(sub).ones
        }
        restricted = {(i, j) for i, j in C.ones if i in A.rows and j in A.cols}
        report.check("atom-ctd", (lam, str(A)), restricted, sub_ones)
    inside = {(i, j) for A in atom_index_sets(lam) for i in A.rows for j in A.cols}
    report.check("ctd-in-atoms", lam, True, set(C.ones) <= inside)


def _weights(m: int, n: int, bound: int):
    from .tails import canonical_dominant_weights

    return canonical_dominant_weights(m, n, bound)


def run_verification_suite(m: int, n: int, bound: int, seed: int = 0) -> OracleReport:
    """Sweep every canonical dominant weight of ``gl(m'|n')`` for ``m' <= m``,
    ``n' <= n`` with positions in ``[0, bound]`` and every base.
    """
    if comb(m + n, n) > MAX_BASES:
        raise EnumerationTooLarge(f"gl({m}|{n}) has too many bases to enumerate")
    rng = random.Random(seed)
    report = OracleReport()
    for mm in range(m + 1):
        for nn in range(n + 1):
            for lam in _weights(mm, nn, bound):
                _check_weight(lam, report, rng)
    report.mismatches.sort()
    return report
