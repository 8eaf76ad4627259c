"""Exceptional collections, the Kronecker pairing and Beilinson tables."""

import random
from itertools import product

import pytest

from scrollcoh import (Collection, DivClass, FormalSheaf, H, NotDiagonalError,
                       Scroll, beilinson_table, beilinson_table_from_profile,
                       block, build_collections, diagonal_type,
                       duality_report, omega_atom, sheaf_chi, sigma,
                       type_sheaf, verify_duality)


def test_sigma_examples():
    assert sigma(0) == (0, 0)
    assert sigma(1) == (1, 0)
    assert sigma(-3) == (-1, -2)
    for i in range(-9, 10):
        s1, s2 = sigma(i)
        assert s1 + s2 == i and s1 - s2 in (0, 1)


def test_collection_display_for_threefolds():
    S = Scroll((1, 1, 1, 1))  # any n = 3 scroll has the same shape
    e, f = build_collections(S)
    pairs = [(m.atom.twist.pair(), m.shift) for m in e]
    assert pairs == [((0, 0), 0), ((-1, 0), 0),
                     ((0, -1), -1), ((-1, -1), -1),
                     ((-1, -2), -2), ((-2, -2), -2),
                     ((-2, -3), -3), ((-3, -3), -3)]
    assert f[2].atom == omega_atom(S, 1, DivClass.from_pair(0, 1))
    assert f[3].atom == omega_atom(S, 1, DivClass.from_pair(-1, 1))
    assert f[2 * S.n].atom.twist.pair() == (S.c - 2, -1)
    assert f[2 * S.n + 1].atom.twist.pair() == (S.c - 3, -1)


def test_top_dual_member_is_normalised_differential():
    # the next-to-last dual member equals the top relative differential with
    # its standard twist, after line normalisation
    for S in [Scroll((1, 2)), Scroll((1, 1, 1)), Scroll((2, 3, 4, 5))]:
        _, f = build_collections(S)
        assert f[2 * S.n].atom == omega_atom(S, S.n, DivClass.from_pair(S.n - 1, S.n))


def test_duality_holds_across_scrolls():
    for S in [Scroll((1, 2)), Scroll((1, 1, 1)), Scroll((1, 1, 2)),
              Scroll((2, 3)), Scroll((1, 2, 3, 4)), Scroll((1, 1, 1, 1, 2))]:
        report = verify_duality(S)
        assert report.passed, (S.degrees, report.violations[:5])
        size = 2 * S.n + 2
        assert len(report.dims) == size and len(report.dims[0]) == size


def test_duality_negative_control():
    # swapping two dual members must fail loudly with named violations
    S = Scroll((1, 1, 2))
    e, f = build_collections(S)
    swapped = list(f.members)
    swapped[0], swapped[1] = swapped[1], swapped[0]
    report = duality_report(S, e, Collection("F", tuple(swapped)))
    assert not report.passed
    assert report.violations
    assert all(len(v) == 4 for v in report.violations)


def test_single_block_table_is_a_unit_slot():
    for S in [Scroll((1, 2)), Scroll((1, 1, 1)), Scroll((1, 2, 3, 4))]:
        for i in range(S.n + 1):
            table = beilinson_table(S, block(S, i).twist(-H))
            slot = (1, 1) if i == 0 else (2 * i, 2 * i)
            assert dict(table.entries) == {slot: 1}, (S.degrees, i)


def test_two_ended_type_fills_the_extreme_slots():
    # the type supported on the two line-bundle blocks puts its weight in
    # column 1 and column 2n only
    S = Scroll((1, 1, 2, 3))
    mults = (2,) + (0,) * (S.n - 1) + (3,)
    table = beilinson_table(S, type_sheaf(S, mults).twist(-H))
    assert dict(table.entries) == {(1, 1): 2, (2 * S.n, 2 * S.n): 3}


def test_table_additivity_over_block_sums():
    rng = random.Random(19)
    for S in [Scroll((1, 2)), Scroll((1, 1, 2))]:
        for _ in range(10):
            mults = tuple(rng.randint(0, 2) for _ in range(S.n + 1))
            if not any(mults):
                continue
            total = beilinson_table(S, type_sheaf(S, mults).twist(-H))
            summed: dict = {}
            for i, a in enumerate(mults):
                if not a:
                    continue
                part = beilinson_table(S, block(S, i).twist(-H))
                for key, v in part.entries.items():
                    summed[key] = summed.get(key, 0) + a * v
            assert dict(total.entries) == summed


def test_roundtrip_of_types():
    for S in [Scroll((1, 2)), Scroll((1, 1, 1)), Scroll((2, 2, 3))]:
        for mults in product(range(3), repeat=S.n + 1):
            if not 1 <= sum(mults) <= 4:
                continue
            table = beilinson_table(S, type_sheaf(S, mults).twist(-H))
            assert diagonal_type(S, table) == mults


def test_column_chi_conservation():
    S = Scroll((1, 1, 2))
    sheaf = type_sheaf(S, (1, 2, 1)).twist(-H)
    table = beilinson_table(S, sheaf)
    e, _ = build_collections(S)
    for j, em in enumerate(e):
        column = sum((-1) ** q * v for (jj, q), v in table.entries.items() if jj == j)
        want = (-1) ** em.shift * sheaf_chi(S, sheaf.twist(em.atom.twist))
        assert column == want, j


def test_zero_sheaf_gives_zero_table():
    S = Scroll((1, 1, 1))
    table = beilinson_table(S, FormalSheaf())
    assert not table.entries
    assert diagonal_type(S, table) == (0, 0, 0)


def test_profile_ingestion_and_validation():
    S = Scroll((1, 1, 1))
    profile = {"n": 2, "entries": [{"j": 1, "q": 1, "h": 3}, {"j": 4, "q": 4, "h": 2}]}
    table = beilinson_table_from_profile(S, profile)
    assert diagonal_type(S, table) == (3, 0, 2)
    with pytest.raises(ValueError):
        beilinson_table_from_profile(S, {"n": 3, "entries": []})
    with pytest.raises(ValueError):
        beilinson_table_from_profile(S, {"entries": [{"j": 99, "q": 0, "h": 1}]})
    with pytest.raises(ValueError):
        beilinson_table_from_profile(S, {"entries": [{"j": 0, "q": 0, "h": -1}]})


def test_diagonal_type_rejects_stray_entries():
    S = Scroll((1, 1, 1))
    off = beilinson_table_from_profile(S, {"entries": [{"j": 3, "q": 1, "h": 1}]})
    with pytest.raises(NotDiagonalError):
        diagonal_type(S, off)
    on_wrong_slot = beilinson_table_from_profile(S, {"entries": [{"j": 3, "q": 3, "h": 1}]})
    with pytest.raises(NotDiagonalError):
        diagonal_type(S, on_wrong_slot)


def test_rendering_layout():
    S = Scroll((1, 2))
    table = beilinson_table(S, block(S, 1).twist(-H))
    md = table.render_md()
    lines = md.splitlines()
    # dual labels on top, shifted collection labels on the bottom
    assert lines[0].startswith("| O_S(") and "O_S(0,0)" in lines[0]
    assert lines[-1].count("[-1]") == 2
    assert len(lines) == 2 + table.size + 1
    tex = table.render_latex()
    assert tex.startswith(r"\begin{tabular}")
    assert r"\Omega" in tex or r"\mathcal{O}_S" in tex
