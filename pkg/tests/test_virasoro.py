import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from w3cft.virasoro import (
    H12,
    H13,
    H21,
    H_SPIN,
    VirCharge,
    half_line_residual,
    on_curve_residual,
    on_slope_at_origin,
    potts_curve_residual,
    vir_c,
    vir_curves,
    vir_equivalent,
    vir_fixed_points,
    vir_fuse_deg_generic,
    vir_h,
    vir_h_from_alpha,
    vir_sector_check,
    vir_spin,
    vir_spin_in_model,
    vir_z2,
)

frac = st.builds(Fraction, st.integers(-10, 10), st.integers(1, 4))


def _h_numeric(r, s, b):
    return ((r / b - s * b) ** 2 - (1 / b - b) ** 2) / 4


@given(frac, frac)
def test_h_two_forms_agree(r, s):
    assert vir_h(r, s) == vir_h_from_alpha(VirCharge(r, s))
    assert vir_h(r, s) == vir_h(-r, -s)


def test_ising_and_lee_yang():
    b2 = Fraction(3, 4)
    assert (H12.at_b2(b2), H13.at_b2(b2), vir_c().at_b2(b2)) == (Fraction(1, 16), Fraction(1, 2), Fraction(1, 2))
    ly = Fraction(2, 5)
    assert H12.at_b2(ly) == H13.at_b2(ly) == Fraction(-1, 5)
    assert vir_c().at_b2(ly) == Fraction(-22, 5)
    assert vir_h(1, 1).is_zero()


@given(st.integers(1, 4), st.integers(1, 4), frac, frac)
def test_fusion_term_count(r, s, ra, sa):
    out = vir_fuse_deg_generic(r, s, VirCharge(ra, sa))
    assert sum(out.values()) == r * s


def test_fusion_examples():
    a = VirCharge(Fraction(1, 3), Fraction(2, 7))
    assert vir_fuse_deg_generic(1, 1, a) == {a: 1}
    b = 1.3
    shifted = {round(c.alpha()(b), 12) for c in vir_fuse_deg_generic(2, 1, a)}
    alpha = a.alpha()(b)
    assert shifted == {round(alpha + 0.5 / b, 12), round(alpha - 0.5 / b, 12)}
    with pytest.raises(ValueError):
        vir_fuse_deg_generic(0, 1, a)


def test_spin_is_the_fixed_point():
    assert set(vir_fixed_points()) == {VirCharge(Fraction(1, 2), 0), VirCharge(Fraction(-1, 2), 0)}
    for f in vir_fixed_points():
        assert any(vir_equivalent(t, f) for t in vir_fuse_deg_generic(2, 1, f))
    assert vir_spin() == VirCharge(Fraction(1, 2), 0)


def test_spin_in_ising():
    a, b = vir_spin_in_model(3, 4)
    assert (a, b) == (VirCharge(1, 2), VirCharge(2, 2))
    b2 = Fraction(3, 4)
    assert vir_h(a.r, a.s).at_b2(b2) == vir_h(b.r, b.s).at_b2(b2) == H_SPIN.at_b2(b2)
    with pytest.raises(ValueError):
        vir_spin_in_model(4, 5)


@pytest.mark.parametrize("p,pp", [(3, 4), (5, 6), (3, 8), (7, 4)])
def test_spin_center_of_table(p, pp):
    b2 = Fraction(p, pp)
    for c in vir_spin_in_model(p, pp):
        assert vir_h(c.r, c.s).at_b2(b2) == H_SPIN.at_b2(b2)


def test_z2_charges():
    assert vir_z2(1, 3) == 0 and vir_z2(1, 2) == 1
    assert vir_z2(2, 1, 3, 4) == 0 and vir_z2(1, 2, 3, 4) == 1
    assert vir_z2(2, 1, 4, 5) == 1
    assert vir_z2(1, 2, 3, 5) == 1
    with pytest.raises(ValueError):
        vir_z2(1, Fraction(1, 2))


def test_sector_check_to_cutoff_seven():
    rows = vir_sector_check(7)
    assert len(rows) == 49
    for row in rows:
        assert row.found == (row.s % 2 == 1)


def test_sector_check_against_numeric_dimensions():
    """Independent check: some product term has the spin's dimension at a generic b."""
    b = 1.1234
    spin_h = _h_numeric(0.5, 0.0, b)
    for row in vir_sector_check(5):
        terms = vir_fuse_deg_generic(row.r, row.s, vir_spin())
        hit = any(abs(_h_numeric(float(t.r), float(t.s), b) - spin_h) < 1e-12 for t in terms)
        assert hit == row.found


def test_curve_identities_are_exact():
    assert on_curve_residual().is_zero()
    assert potts_curve_residual().is_zero()
    assert half_line_residual().is_zero()


def test_merge_point_and_potts_intersection():
    assert (H_SPIN.at_b2(1), H21.at_b2(1), vir_c().at_b2(1)) == (Fraction(1, 16), Fraction(1, 4), 1)
    assert H_SPIN.at_b2(Fraction(5, 2)) == H21.at_b2(Fraction(5, 2)) == Fraction(-1, 5)


def test_on_curve_slope_at_free_field_point():
    assert vir_c().at_b2(Fraction(1, 2)) == -2
    assert on_slope_at_origin() == 4


def test_curve_rows():
    rows = vir_curves([math.sqrt(0.75)])
    assert rows[0]["h_spin"] == pytest.approx(1 / 16)
    assert rows[0]["sqrtQ"] == pytest.approx(math.sqrt(2))
    assert rows[0]["n"] == pytest.approx(1)
    exact = vir_curves([Fraction(3, 4)], squared=True, exact=True)
    assert exact[0]["h13"] == Fraction(1, 2)
    with pytest.raises(ValueError):
        vir_curves([-1.0])
