import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import starradii.radii as radii_mod
from starradii.errors import DomainError, NoSignChangeError
from starradii.kernel import ClassId, logderiv_bound
from starradii.radii import (
    closed_form_radius,
    containment_margin,
    is_sharp,
    radius_equation,
    radius_quadratic,
    radius_result,
    radius_table,
    solve_radius,
)
from starradii.regions import (
    CARDIOID,
    EXP,
    LEMNISCATE,
    LUNE,
    PARABOLIC,
    RATIONAL,
    SINE,
    SPECIAL_REGIONS,
    TargetRegion,
    admissible_interval,
)

SQRT2 = math.sqrt(2)
HP = TargetRegion.half_plane
PAIRS = [(c, r) for c in ClassId for r in (HP(0.0), *SPECIAL_REGIONS)]
PAIR_IDS = [f"{c.value}-{r}" for c, r in PAIRS]


@pytest.mark.parametrize(
    "cls, region, expected",
    [
        (ClassId.PI1, HP(0.0), 3 - 2 * SQRT2),
        (ClassId.PI1, LEMNISCATE, (SQRT2 - 1) * (math.sqrt(10) - 3)),
        (ClassId.PI2, PARABOLIC, 5 - 2 * math.sqrt(6)),
        (ClassId.PI2, HP(0.0), 0.2),
        (ClassId.PI1, CARDIOID, (9 - math.sqrt(73)) / 4),
    ],
)
def test_closed_form_examples(cls, region, expected):
    assert closed_form_radius(cls, region) == pytest.approx(expected, abs=1e-15)


# Reference quadratics, kept independent of the library.
PRINTED_QUADRATICS = [
    (ClassId.PI1, HP(0.3), lambda r: 1.3 * r * r - 6 * r + 0.7),
    (ClassId.PI2, HP(0.3), lambda r: 0.3 * r * r - 5 * r + 0.7),
    (ClassId.PI2, PARABOLIC, lambda r: r * r - 10 * r + 1),
    (ClassId.PI1, CARDIOID, lambda r: 2 * r * r - 9 * r + 1),
    (ClassId.PI2, CARDIOID, lambda r: r * r - 15 * r + 2),
]


@pytest.mark.parametrize("cls, region, poly", PRINTED_QUADRATICS)
def test_printed_quadratic_vanishes(cls, region, poly):
    assert abs(poly(closed_form_radius(cls, region))) <= 1e-9


@pytest.mark.parametrize("cls, region", PAIRS, ids=PAIR_IDS)
def test_radius_is_smallest_positive_root(cls, region):
    roots = np.roots(radius_quadratic(cls, region))
    roots = roots[(np.abs(roots.imag) < 1e-12) & (roots.real > 0)].real
    assert closed_form_radius(cls, region) == pytest.approx(roots.min(), abs=1e-12)


@pytest.mark.parametrize("cls, region", PAIRS, ids=PAIR_IDS)
def test_solver_matches_closed_form(cls, region):
    R = closed_form_radius(cls, region)
    assert 0 < R < 1
    assert abs(solve_radius(cls, region) - R) <= 1e-9
    if cls is ClassId.PI1:
        assert R <= 3 - 2 * SQRT2 + 1e-15
    else:
        assert R <= 0.2 + 1e-15


def test_solver_examples():
    assert solve_radius(ClassId.PI1, EXP, 1e-12) == pytest.approx(0.1080, abs=5e-5)
    assert solve_radius(ClassId.PI2, RATIONAL, 1e-12) == pytest.approx(0.0345, abs=5e-5)


@pytest.mark.parametrize("cls", list(ClassId))
@pytest.mark.parametrize("alpha", [round(0.1 * k, 1) for k in range(10)])
def test_alpha_sweep(cls, alpha):
    region = HP(alpha)
    assert abs(closed_form_radius(cls, region) - solve_radius(cls, region)) <= 1e-9


@pytest.mark.parametrize("cls, region", PAIRS, ids=PAIR_IDS)
def test_single_sign_change(cls, region):
    lo_a, hi_a = admissible_interval(region)
    signs = []
    for r in np.arange(1e-4, 1.0, 1e-4):
        if not (lo_a < logderiv_bound(cls, r).center < hi_a):
            break
        signs.append(containment_margin(cls, region, r) >= 0)
    signs = np.array(signs)
    assert signs[0]
    assert np.count_nonzero(signs[1:] != signs[:-1]) == 1


@settings(max_examples=200, deadline=None)
@given(st.floats(0.0, 0.99), st.floats(0.0, 0.99))
def test_half_plane_radius_decreasing_in_alpha(a1, a2):
    lo, hi = sorted((a1, a2))
    if hi - lo < 1e-9:
        return
    for cls in ClassId:
        assert closed_form_radius(cls, HP(lo)) > closed_form_radius(cls, HP(hi))


@pytest.mark.parametrize("cls", list(ClassId))
def test_identity_remarks(cls):
    assert abs(closed_form_radius(cls, PARABOLIC) - closed_form_radius(cls, HP(0.5))) <= 1e-12
    assert abs(closed_form_radius(cls, EXP) - closed_form_radius(cls, HP(1 / math.e))) <= 1e-12
    assert abs(solve_radius(cls, PARABOLIC) - solve_radius(cls, HP(0.5))) <= 1e-12
    assert abs(solve_radius(cls, EXP) - solve_radius(cls, HP(1 / math.e))) <= 1e-12


def test_no_sign_change_for_nearly_degenerate_half_plane():
    with pytest.raises(NoSignChangeError):
        solve_radius(ClassId.PI1, HP(1 - 1e-12), tol=1e-12)


def test_no_sign_change_for_misspecified_region(monkeypatch):
    monkeypatch.setattr(radii_mod, "max_disk_radius", lambda region, a: 10.0)
    with pytest.raises(NoSignChangeError):
        solve_radius(ClassId.PI1, LUNE)


@pytest.mark.parametrize("tol", [0.0, -1e-9, 1e-5])
def test_solver_rejects_bad_tol(tol):
    with pytest.raises(DomainError):
        solve_radius(ClassId.PI1, LUNE, tol)


def test_unknown_route():
    with pytest.raises(ValueError):
        containment_margin(ClassId.PI1, LUNE, 0.05, route="other")


def test_pi2_lemniscate_routes_agree():
    res = radius_result(ClassId.PI2, LEMNISCATE)
    assert not res.sharp
    assert abs(res.alt_routes["unit"] - res.closed_form) <= 1e-9
    assert abs(res.solved - res.closed_form) <= 1e-9


def test_sharpness_flags():
    flags = {(c, r.kind) for c, r in PAIRS if not is_sharp(c, r)}
    assert flags == {(ClassId.PI2, LEMNISCATE.kind), (ClassId.PI2, SINE.kind)}


def test_table_rows_and_identities():
    rows = radius_table(ClassId.PI1, [0.0, 0.5, 1 / math.e])
    assert len(rows) == 10
    by_name = {str(r.region): r for r in rows}
    assert by_name["halfplane(0.5)"].closed_form == pytest.approx(by_name["parabolic"].closed_form, abs=1e-12)
    assert rows[2].closed_form == pytest.approx(by_name["exp"].closed_form, abs=1e-12)
    assert all(r.abs_diff <= 1e-9 for r in rows)


def test_pi2_table_bounded_by_starlikeness_radius():
    rows = radius_table(ClassId.PI2, [0.0])
    assert len(rows) == 8
    assert rows[0].closed_form == 0.2
    assert all(r.closed_form <= 0.2 and r.solved <= 0.2 + 1e-9 for r in rows)


def test_equation_text():
    assert radius_equation(ClassId.PI1, CARDIOID) == "2r^2 - 9r + 1 = 0"
    assert radius_equation(ClassId.PI2, HP(0.25)).endswith("with alpha = 0.25")
