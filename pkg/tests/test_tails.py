import json

import pytest
from hypothesis import given

from conftest import any_weights, dominant_weights
from superweights import (
    BaseWord,
    NotDaggerDiagram,
    NotDominant,
    RightOddRoot,
    ShiftedWeight,
    atypicality,
    base_from_incomparable_set,
    enumerate_bases,
    incomparable_set_of_base,
    shifted_weight_for_base,
    weight_diagram,
)
from superweights.ctd import ctd
from superweights.diagrams import Cell, WeightDiagram
from superweights.oracle import oracle_longtail, oracle_s_value
from superweights.tails import (
    canonical_dominant_weights,
    dagger_weight,
    gathering_base,
    hwt,
    is_dagger_diagram,
    longest_incomparable_chain,
    longtail,
    longtail_via_arrows,
    longtail_via_caps,
    longtail_via_ctd,
    orthogonality_mask,
    phi,
    psi,
    s_value,
    search_tail_gap,
    sigma_lambda,
    tail,
    witness_base,
)

W = ShiftedWeight.parse
CE = W("5 4 3 0 -1 | 1 0 -3 -4 -5")


def D(spec):
    cells = {}
    for p, g in spec.items():
        cells[p] = {"X": Cell(1), ">": Cell(0, 1), "<": Cell(0, 0, 1)}.get(g) or Cell(int(g[1:]))
    return WeightDiagram.from_mapping(cells)


def test_orthogonality_mask_examples():
    stars = orthogonality_mask(W("5 5 4 1 0 | 0 -1 -3 -5 -5")).stars
    assert stars == {RightOddRoot(*p) for p in [(1, 4), (1, 5), (2, 4), (2, 5), (4, 2), (5, 1)]}
    assert orthogonality_mask(W("3 2 | 0 -1")).stars == frozenset()
    assert orthogonality_mask(W("0|0")).stars == {RightOddRoot(1, 1)}
    assert orthogonality_mask(W("0|0")).dense().tolist() == [[True]]


@given(any_weights())
def test_star_count(nu):
    mask = orthogonality_mask(nu)
    values = set(nu.a)
    expected = sum(nu.a.count(v) * nu.delta_positions.count(v) for v in values)
    assert len(mask.stars) == expected


@pytest.mark.parametrize(
    "text, s",
    [
        ("5 5 4 1 0 | 0 -1 -3 -5 -5", 2),
        ("5 4 3 0 0 | 0 0 -3 -4 -5", 2),
        ("3 3 3 1 | -3 -3 -3 -4", 3),
        ("3 2 | 0 -1", 0),
    ],
)
def test_s_value_examples(text, s):
    assert s_value(W(text)) == s
    assert oracle_s_value(W(text)) == s


@given(any_weights(max_m=4, max_n=4, span=2))
def test_s_value_matches_brute_force(nu):
    if len(orthogonality_mask(nu).stars) > 12:
        return
    s = s_value(nu)
    assert s == oracle_s_value(nu)
    assert 0 <= s <= min(nu.m, nu.n)
    assert s <= atypicality(nu)


def test_full_block_has_diagonal_chain():
    for k in range(1, 5):
        nu = ShiftedWeight([0] * k, [0] * k)
        assert s_value(nu) == k == oracle_s_value(nu)


def test_longest_chain():
    assert longest_incomparable_chain([]) == 0
    assert longest_incomparable_chain([(1, 1), (1, 2), (2, 1)]) == 1
    assert longest_incomparable_chain([(1, 1), (2, 2), (3, 1), (3, 3)]) == 3


def test_hwt_examples():
    assert hwt(W("0|0")) == [W("0|0"), W("1|-1")]
    typical = W("3 2 | 0 -1")
    assert hwt(typical) == [typical]
    H = hwt(W("4 3 1 0 | 0 -1 -4 -5"))
    assert len(H) == 15
    assert H[0] == W("4 3 1 0 | 0 -1 -4 -5")
    assert H[-1] == W("7 6 3 2 | -2 -5 -6 -7")
    assert W("4 4 3 2 | -2 -4 -4 -5") in H


@pytest.mark.parametrize(
    "text, value",
    [
        ("5 4 3 0 -1 | 1 0 -3 -4 -5", 3),
        ("3 2 | 0 -1", 0),
        ("3 2 1 0 | 0 -2 -3 -4", 3),
        ("4 3 1 0 | 0 -1 -4 -5", 2),
    ],
)
def test_longtail_examples(text, value):
    lam = W(text)
    assert longtail_via_ctd(lam) == value
    assert longtail_via_arrows(lam) == value
    assert longtail_via_caps(lam) == value
    assert oracle_longtail(lam) == value


@given(dominant_weights(max_m=3, max_n=3))
def test_longtail_formulas_agree(lam):
    lt = longtail_via_arrows(lam)
    assert lt == longtail_via_ctd(lam) == longtail_via_caps(lam) == oracle_longtail(lam)


@given(dominant_weights(max_m=3, max_n=3))
def test_stacked_crosses_bound_s(lam):
    best = 0
    for w in enumerate_bases(lam.m, lam.n):
        nu = shifted_weight_for_base(lam, w)
        stack = max((c.x for _, c in weight_diagram(nu).cells), default=0)
        assert stack <= s_value(nu)
        best = max(best, stack)
    assert best == longtail(lam)


@given(dominant_weights())
def test_witness_base_stacks_longtail(lam):
    nu = shifted_weight_for_base(lam, witness_base(lam))
    stack = max((c.x for _, c in weight_diagram(nu).cells), default=0)
    assert stack == longtail(lam)


@given(dominant_weights())
def test_rectangle_in_ctd(lam):
    """A longest chain of CTD bits fits in a full rectangle of bits."""
    C = ctd(lam)
    cells = sorted(C.ones)
    best = {}
    for c in cells:
        best[c] = (1, None)
        for d in cells:
            if d[0] < c[0] and d[1] < c[1] and best[d][0] + 1 > best[c][0]:
                best[c] = (best[d][0] + 1, d)
    if not best:
        return
    end = max(best, key=lambda c: best[c][0])
    chain = [end]
    while best[chain[-1]][1] is not None:
        chain.append(best[chain[-1]][1])
    rows = range(min(c[0] for c in chain), max(c[0] for c in chain) + 1)
    cols = range(min(c[1] for c in chain), max(c[1] for c in chain) + 1)
    assert all(C.bit(i, j) for i in rows for j in cols)


def test_dagger_examples():
    assert is_dagger_diagram(D({0: "X2", 3: "X", 4: "X", 5: "X"}))
    assert not is_dagger_diagram(D({3: "X", 4: "X2"}))
    assert is_dagger_diagram(weight_diagram(W("3 2 | 0 -1")))
    assert not is_dagger_diagram(D({0: "X", 1: "X"}))
    assert is_dagger_diagram(D({0: "X", 2: "X"}))
    assert not is_dagger_diagram(D({0: "X2", 3: "X2"}))
    assert not is_dagger_diagram(WeightDiagram.from_mapping({0: Cell(2, 1)}))
    assert not is_dagger_diagram(WeightDiagram.from_mapping({0: Cell(1, 1)}))


def test_phi_examples():
    dag = phi(CE)
    assert dag.diagram == D({0: "X2", 3: "X", 4: "X", 5: "X"})
    assert (dag.x_first, dag.d, dag.multiplicity, dag.stacked) == (-1, 1, 2, 0)
    dag = phi(W("6 4 3 1 | -1 -2 -3 -4"))
    assert dag.diagram == D({2: "<", 4: "X3", 6: ">"})
    typical = W("3 2 | 0 -1")
    assert phi(typical).diagram == weight_diagram(typical)
    with pytest.raises(NotDominant):
        phi(W("1 2 | 0"))


def test_psi_examples():
    assert psi(D({2: "<", 4: "X3", 6: ">"})) == W("6 4 3 1 | -1 -2 -3 -4")
    assert psi(D({0: "X2", 3: "X", 4: "X", 5: "X"})) == CE
    typical = W("3 2 | 0 -1")
    assert psi(weight_diagram(typical)) == typical
    with pytest.raises(NotDaggerDiagram):
        psi(D({3: "X", 4: "X2"}))


@given(dominant_weights())
def test_phi_psi_roundtrip(lam):
    dag = phi(lam)
    assert is_dagger_diagram(dag)
    assert psi(dag) == lam


def _dagger_diagrams(width):
    """All dagger diagrams supported on [0, width) with at most one stack."""
    from itertools import product

    singles = [None, Cell(1), Cell(0, 1), Cell(0, 0, 1)]
    for cells in product(singles, repeat=width):
        base = {p: c for p, c in enumerate(cells) if c is not None}
        D0 = WeightDiagram.from_mapping(base)
        if is_dagger_diagram(D0):
            yield D0
        for p, c in base.items():
            if c == Cell(1):
                for k in (2, 3):
                    stacked = dict(base)
                    stacked[p] = Cell(k)
                    D1 = WeightDiagram.from_mapping(stacked)
                    if is_dagger_diagram(D1):
                        yield D1


def test_phi_psi_bijection_exhaustive():
    count = 0
    for Dg in _dagger_diagrams(7):
        assert phi(psi(Dg)).diagram == Dg
        count += 1
    for m in range(5):
        for n in range(5):
            for lam in canonical_dominant_weights(m, n, 5):
                assert psi(phi(lam)) == lam
                count += 1
    assert count >= 10_000


def test_sigma_lambda_examples():
    assert sigma_lambda(CE) == BaseWord("eeeededddd")
    assert sigma_lambda(W("6 4 3 1 | -1 -2 -3 -4")) == BaseWord("edededed")
    assert sigma_lambda(W("3 2 | 0 -1")) == BaseWord.dist(2, 2)
    assert dagger_weight(CE) == W("5 4 3 0 0 | 0 0 -3 -4 -5")
    assert dagger_weight(W("6 4 3 1 | -1 -2 -3 -4")) == W("6 4 4 4 | -2 -4 -4 -4")


@given(dominant_weights())
def test_sigma_lambda_realizes_phi(lam):
    assert weight_diagram(dagger_weight(lam)) == phi(lam).diagram


@pytest.mark.parametrize(
    "text, value",
    [("5 4 3 0 -1 | 1 0 -3 -4 -5", 2), ("3 2 1 0 | 0 -2 -3 -4", 3), ("3 2 | 0 -1", 0)],
)
def test_tail_examples(text, value):
    assert tail(W(text)) == value


@given(dominant_weights())
def test_tail_bounds(lam):
    t = tail(lam)
    assert phi(lam).multiplicity <= t <= longtail(lam)
    assert (t >= 1) == (atypicality(lam) >= 1)


def test_gathering_base_counterexample():
    w = gathering_base(CE, 5)
    assert incomparable_set_of_base(w) == {RightOddRoot(1, 3), RightOddRoot(2, 4), RightOddRoot(3, 5)}
    assert w == base_from_incomparable_set({(1, 3), (2, 4), (3, 5)}, 5, 5)
    assert witness_base(CE) == w


def test_canonical_weights():
    ws = list(canonical_dominant_weights(1, 1, 2))
    assert ws == [W("0|0"), W("0|-1"), W("0|-2"), W("1|0"), W("2|0")]
    assert list(canonical_dominant_weights(0, 0, 3)) == [W(" | ")]


def test_search_small_cases():
    assert search_tail_gap(2, 2, 3) == []
    assert search_tail_gap(2, 2, 2) == []
    assert search_tail_gap(1, 1, 5) == []
    with pytest.raises(ValueError):
        search_tail_gap(0, 1, 1)


def test_search_gl33_gaps_confirmed_by_oracle():
    from superweights.oracle import oracle_shifted_weight

    found = search_tail_gap(3, 3, 3)
    assert [str(r.weight) for r in found] == [
        "(3,2,0 | 0,-2,-3)",
        "(4,3,0 | 0,-3,-4)",
        "(5,4,0 | 0,-4,-5)",
        "(6,5,0 | 0,-5,-6)",
    ]
    for rec in found:
        lam = rec.weight
        assert oracle_longtail(lam) == rec.longtail == 2
        assert oracle_s_value(oracle_shifted_weight(lam, rec.sigma_lambda)) == rec.tail == 1
        data = json.loads(rec.to_json())
        assert data["sigma_lambda"] == str(rec.sigma_lambda)


def test_search_jobs_deterministic():
    assert search_tail_gap(3, 3, 3, jobs=2) == search_tail_gap(3, 3, 3)
