"""Weights, right odd roots and the bases reachable by odd reflections.

A base is stored as a word over the letters ``e`` and ``d``.  The i-th ``e``
stands for epsilon_i and the j-th ``d`` for delta_j; the numbering is always
positional.  The right odd root epsilon_i - delta_j is the pair ``(i, j)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, NamedTuple

from ._errors import (
    NotDominant,
    NotIncomparable,
    NotIsoSet,
    ParseError,
    RootNotSimpleInBase,
)

__all__ = [
    "ShiftedWeight",
    "RightOddRoot",
    "SignedOddRoot",
    "BaseWord",
    "validate_dominant",
    "require_dominant",
    "is_incomparable",
    "incomparable_set_of_base",
    "base_from_incomparable_set",
    "row_lengths",
    "base_from_row_lengths",
    "b_sigma",
    "reflection_sequence",
    "reflect_base",
    "reflect_shifted_weight",
    "enumerate_bases",
    "count_bases",
    "positive_normal_form",
    "parse_root_set",
]


_INT = re.compile(r"[+-]?\d+$")


def _parse_ints(text: str) -> tuple[int, ...]:
    parts = [p for p in re.split(r"[\s,]+", text.strip()) if p]
    out = []
    for p in parts:
        p = p.replace("−", "-")
        if not _INT.match(p):
            raise ParseError(f"not an integer: {p!r}")
        out.append(int(p))
    return tuple(out)


@dataclass(frozen=True, order=True)
class ShiftedWeight:
    """A rho-shifted weight ``(a_1..a_m | b_1..b_n)``.

    ``a`` holds the epsilon coordinates and ``b`` the delta coordinates.  On
    the weight diagram epsilon_i sits at position ``a[i-1]`` and delta_j at
    position ``-b[j-1]``.
    """

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))

    @classmethod
    def parse(cls, text: str) -> "ShiftedWeight":
        """Parse ``"a1 a2 .. | b1 .. bn"``; commas and parentheses are allowed."""
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        if body.count("|") != 1:
            raise ParseError(f"expected exactly one '|' in {text!r}")
        left, right = body.split("|")
        return cls(_parse_ints(left), _parse_ints(right))

    @property
    def m(self) -> int:
        return len(self.a)

    @property
    def n(self) -> int:
        return len(self.b)

    @property
    def delta_positions(self) -> tuple[int, ...]:
        return tuple(-x for x in self.b)

    def translate(self, t: int) -> "ShiftedWeight":
        """Shift every symbol of the diagram by ``t`` positions."""
        return ShiftedWeight(tuple(x + t for x in self.a), tuple(x - t for x in self.b))

    def canonical(self) -> "ShiftedWeight":
        """Translate so that the leftmost occupied position is 0."""
        pos = self.a + self.delta_positions
        return self.translate(-min(pos)) if pos else self

    def __str__(self) -> str:
        return "({} | {})".format(",".join(map(str, self.a)), ",".join(map(str, self.b)))


class RightOddRoot(NamedTuple):
    i: int
    j: int

    # tuple ordering is kept for sorting; the root poset lives in leq()
    def leq(self, other: "RightOddRoot") -> bool:
        return self.i >= other.i and self.j <= other.j

    def incomparable(self, other: "RightOddRoot") -> bool:
        return (self.i < other.i and self.j < other.j) or (
            self.i > other.i and self.j > other.j
        )


class SignedOddRoot(NamedTuple):
    root: RightOddRoot
    sign: int = 1

    def __neg__(self):
        return SignedOddRoot(self.root, -self.sign)


@dataclass(frozen=True, order=True)
class BaseWord:
    """A base in the odd-reflection orbit of the distinguished base."""

    letters: str

    def __post_init__(self):
        letters = self.letters
        if isinstance(letters, BaseWord):
            letters = letters.letters
        letters = str(letters).replace("ε", "e").replace("δ", "d")
        bad = [k for k, c in enumerate(letters) if c not in "ed"]
        if bad:
            raise ParseError(f"letter {bad[0] + 1} of {letters!r} is not 'e' or 'd'")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def dist(cls, m: int, n: int) -> "BaseWord":
        return cls("e" * m + "d" * n)

    @classmethod
    def anti(cls, m: int, n: int) -> "BaseWord":
        return cls("d" * n + "e" * m)

    @classmethod
    def sigma_i(cls, i: int, m: int, n: int) -> "BaseWord":
        """The word e_1..e_i d^n e_{i+1}..e_m."""
        return cls("e" * i + "d" * n + "e" * (m - i))

    @property
    def m(self) -> int:
        return self.letters.count("e")

    @property
    def n(self) -> int:
        return self.letters.count("d")

    def slots(self) -> tuple[dict[int, int], dict[int, int]]:
        """Letter index of each epsilon_i and each delta_j."""
        eps, dlt = {}, {}
        for k, c in enumerate(self.letters):
            if c == "e":
                eps[len(eps) + 1] = k
            else:
                dlt[len(dlt) + 1] = k
        return eps, dlt

    def __str__(self) -> str:
        return self.letters

    def __len__(self) -> int:
        return len(self.letters)


def _word(sigma) -> BaseWord:
    return sigma if isinstance(sigma, BaseWord) else BaseWord(sigma)


def validate_dominant(nu: ShiftedWeight) -> bool:
    """True iff both coordinate sequences are strictly decreasing."""
    return all(x > y for x, y in zip(nu.a, nu.a[1:])) and all(
        x > y for x, y in zip(nu.b, nu.b[1:])
    )


def require_dominant(nu: ShiftedWeight) -> ShiftedWeight:
    for name, seq in (("a", nu.a), ("b", nu.b)):
        for k in range(len(seq) - 1):
            if seq[k] <= seq[k + 1]:
                raise NotDominant(
                    f"{nu} is not dominant: {name}_{k + 1}={seq[k]} <= {name}_{k + 2}={seq[k + 1]}"
                )
    return nu


def is_incomparable(roots: Iterable) -> bool:
    rs = sorted(RightOddRoot(*r) for r in roots)
    if len(set(rs)) != len(rs):
        return False
    return all(x.i < y.i and x.j < y.j for x, y in zip(rs, rs[1:]))


def incomparable_set_of_base(sigma) -> frozenset[RightOddRoot]:
    """Pairs ``(i, j)`` with epsilon_i immediately left of delta_j."""
    w = _word(sigma).letters
    out = set()
    i = j = 0
    for k, c in enumerate(w):
        if c == "e":
            i += 1
            if k + 1 < len(w) and w[k + 1] == "d":
                out.add(RightOddRoot(i, j + 1))
        else:
            j += 1
    return frozenset(out)


def row_lengths(sigma) -> tuple[int, ...]:
    """``e(i)``: the number of delta letters left of epsilon_i."""
    out = []
    j = 0
    for c in _word(sigma).letters:
        if c == "e":
            out.append(j)
        else:
            j += 1
    return tuple(out)


def base_from_row_lengths(lengths: Iterable[int], n: int) -> BaseWord:
    """Inverse of :func:`row_lengths`; ``lengths`` must be non-decreasing in [0, n]."""
    lengths = tuple(lengths)
    prev = 0
    parts = []
    for e in lengths:
        if e < prev or e > n:
            raise ValueError(f"row lengths {lengths} do not describe a base with n={n}")
        parts.append("d" * (e - prev) + "e")
        prev = e
    parts.append("d" * (n - prev))
    return BaseWord("".join(parts))


def base_from_incomparable_set(S: Iterable, m: int, n: int) -> BaseWord:
    roots = sorted(RightOddRoot(*r) for r in S)
    for r in roots:
        if not (1 <= r.i <= m and 1 <= r.j <= n):
            raise NotIncomparable(f"root {tuple(r)} is outside 1..{m} x 1..{n}")
    for x, y in combinations(roots, 2):
        if not x.incomparable(y):
            raise NotIncomparable(f"roots {tuple(x)} and {tuple(y)} are comparable")
    adj = {r.i: r.j for r in roots}
    e = [0] * (m + 1)
    for i in range(m, 0, -1):
        if i in adj:
            e[i] = adj[i] - 1
        elif i == m:
            e[i] = n
        else:
            e[i] = e[i + 1]
    return base_from_row_lengths(e[1:], n)


def b_sigma(sigma) -> frozenset[RightOddRoot]:
    """Roots to reflect by, in some valid order, to reach ``sigma`` from the distinguished base."""
    return frozenset(
        RightOddRoot(i, j)
        for i, e in enumerate(row_lengths(sigma), start=1)
        for j in range(1, e + 1)
    )


def reflection_sequence(sigma) -> list[RightOddRoot]:
    """Column-major ordering of B_sigma: j ascending, i descending."""
    B = b_sigma(sigma)
    w = _word(sigma)
    return [
        RightOddRoot(i, j)
        for j in range(1, w.n + 1)
        for i in range(w.m, 0, -1)
        if (i, j) in B
    ]


def reflect_base(sigma, alpha) -> BaseWord:
    w = _word(sigma)
    alpha = _signed(alpha)
    (i, j), sign = alpha
    eps, dlt = w.slots()
    if i not in eps or j not in dlt:
        raise RootNotSimpleInBase(f"root ({i},{j}) is out of range for {w}")
    first, second = (eps[i], dlt[j]) if sign > 0 else (dlt[j], eps[i])
    if second != first + 1:
        raise RootNotSimpleInBase(f"{'+' if sign > 0 else '-'}({i},{j}) is not simple in {w}")
    letters = list(w.letters)
    letters[first], letters[second] = letters[second], letters[first]
    return BaseWord("".join(letters))


def _signed(alpha) -> SignedOddRoot:
    if isinstance(alpha, SignedOddRoot):
        return alpha
    if len(alpha) == 2 and isinstance(alpha[0], tuple):
        return SignedOddRoot(RightOddRoot(*alpha[0]), alpha[1])
    return SignedOddRoot(RightOddRoot(*alpha), 1)


def reflect_shifted_weight(nu: ShiftedWeight, alpha) -> ShiftedWeight:
    """Add ``alpha`` to ``nu`` when ``nu`` is orthogonal to it, otherwise return ``nu``."""
    (i, j), sign = _signed(alpha)
    if not (1 <= i <= nu.m and 1 <= j <= nu.n):
        raise IndexError(f"root ({i},{j}) out of range for {nu}")
    if nu.a[i - 1] != -nu.b[j - 1]:
        return nu
    a, b = list(nu.a), list(nu.b)
    a[i - 1] += sign
    b[j - 1] -= sign
    return ShiftedWeight(a, b)


def enumerate_bases(m: int, n: int) -> Iterator[BaseWord]:
    """All C(m+n, n) words, lexicographic with e < d."""
    total = m + n
    for epos in combinations(range(total), m):
        letters = ["d"] * total
        for k in epos:
            letters[k] = "e"
        yield BaseWord("".join(letters))


def positive_normal_form(S: Iterable) -> frozenset[RightOddRoot]:
    """Replace every signed root of an iso-set by its positive form."""
    roots = [_signed(s) for s in S]
    seen = set()
    for (r, sign) in roots:
        if (r, -sign) in seen:
            raise NotIsoSet(f"root ({r.i},{r.j}) appears with both signs")
        seen.add((r, sign))
    plain = [r for r, _ in seen]
    for x, y in combinations(plain, 2):
        if x.i == y.i or x.j == y.j:
            raise NotIsoSet(f"roots ({x.i},{x.j}) and ({y.i},{y.j}) are not orthogonal")
    return frozenset(plain)


def parse_root_set(text: str) -> frozenset[RightOddRoot]:
    """Parse ``"i:j,i:j,..."``."""
    out = set()
    for part in re.split(r"[\s,]+", text.strip()):
        if not part:
            continue
        m = re.fullmatch(r"(\d+):(\d+)", part)
        if not m:
            raise ParseError(f"bad root {part!r}, expected i:j")
        out.add(RightOddRoot(int(m.group(1)), int(m.group(2))))
    return frozenset(out)


def count_bases(m: int, n: int) -> int:
    return comb(m + n, n)
