from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from w3cft import sl3
from w3cft.charges import KacCharge, classify, conjugate, weyl_equivalent, FieldClass
from w3cft.fusion import (
    contains,
    degenerate_spectrum,
    fuse_deg_deg,
    fuse_deg_generic,
    generic_witnesses,
)
from w3cft.rational import POTTS, field_of
from w3cft.sl3 import Weight

from strategies import kac_charge

small_dominant = st.builds(Weight, st.integers(0, 2), st.integers(0, 2))
SIGMA = KacCharge(Fraction(2, 3), Fraction(-1, 3), Fraction(1, 3), Fraction(1, 3))


def _brute_force_contains(lam, mu, alpha, mode):
    """Enumerate the whole product and look for the target orbit."""
    target = conjugate(alpha) if mode == "self" else alpha
    return any(weyl_equivalent(t, target) for t in fuse_deg_generic(lam, mu, alpha).terms)


@given(small_dominant, small_dominant, kac_charge, st.sampled_from(["self", "conjugate"]))
def test_witness_search_agrees_with_brute_force(lam, mu, alpha, mode):
    if classify(alpha) is FieldClass.COMPLETELY_DEGENERATE:
        return
    assert bool(generic_witnesses(lam, mu, alpha, mode)) == _brute_force_contains(lam, mu, alpha, mode)


@given(small_dominant, small_dominant, kac_charge)
def test_generic_fusion_has_dim_product_terms(lam, mu, alpha):
    out = fuse_deg_generic(lam, mu, alpha)
    assert out.total == sl3.weyl_dimension(*lam) * sl3.weyl_dimension(*mu)


def test_identity_acts_trivially():
    alpha = KacCharge(Fraction(1, 3), 2, 5, Fraction(-1, 2))
    assert fuse_deg_generic((0, 0), (0, 0), alpha).terms == {alpha: 1}


def test_fundamental_shifts():
    alpha = KacCharge(0, 0, 0, 0)
    out = fuse_deg_generic((1, 0), (0, 0), alpha)
    assert set(out.terms) == {KacCharge(1, 0, 0, 0), KacCharge(-1, 1, 0, 0), KacCharge(0, -1, 0, 0)}


@given(small_dominant, small_dominant)
def test_witnesses_reverify(lam, mu):
    for mode in ("self", "conjugate"):
        for w in generic_witnesses(lam, mu, SIGMA, mode):
            target = conjugate(SIGMA) if mode == "self" else SIGMA
            assert w.x(SIGMA.P + w.lam_weight) == target.P
            assert w.x(SIGMA.R + w.mu_weight) == target.R


def test_potts_spin_fusions_in_table():
    sigma = field_of(KacCharge.from_table([[1, 2], [1, 1]]), POTTS)
    sigma_star = field_of(KacCharge.from_table([[1, 1], [1, 2]]), POTTS)
    psi_star = field_of(KacCharge.from_table([[1, 3], [1, 1]]), POTTS)
    one = field_of(KacCharge(1, 1, 1, 1), POTTS)
    eps = field_of(KacCharge.from_table([[1, 2], [1, 2]]), POTTS)
    assert fuse_deg_deg(sigma, sigma, model=POTTS).terms == {sigma_star: 1, psi_star: 1}
    assert fuse_deg_deg(sigma, sigma_star, model=POTTS).terms == {one: 1, eps: 1}


def test_degenerate_fusion_without_model_keeps_everything():
    out = fuse_deg_deg(KacCharge(2, 1, 1, 1), KacCharge(2, 1, 1, 1))
    assert out.terms == {KacCharge(3, 1, 1, 1): 1, KacCharge(1, 2, 1, 1): 1}


@pytest.mark.parametrize("mode,total", [("self", 1), ("conjugate", 0)])
def test_sigma_spectrum_is_a_full_charge_sector(mode, total):
    reps = sl3.dominant_weights(3)
    got = set(degenerate_spectrum(SIGMA, 3, mode))
    want = {
        (l, m) for l in reps for m in reps
        if sl3.balanced_mod3(sl3.z3_charge(l) + sl3.z3_charge(m)) == total
    }
    assert got == want


def test_completely_degenerate_alpha_uses_tensor_rule():
    s2 = KacCharge.from_table([[1, 2], [1, 1]])
    assert set(degenerate_spectrum(s2, 4, "conjugate")) == {
        (Weight(0, 0), Weight(0, 0)),
        (Weight(0, 0), Weight(1, 1)),
    }
    assert contains((0, 0), (0, 2), s2, "self")


def test_bad_inputs():
    with pytest.raises(ValueError):
        contains((1, 0), (0, 0), SIGMA, "sideways")
    with pytest.raises(ValueError):
        fuse_deg_generic((-1, 0), (0, 0), SIGMA)
    with pytest.raises(ValueError):
        degenerate_spectrum(SIGMA, 0, "self")
    with pytest.raises(ValueError):
        fuse_deg_deg(SIGMA, SIGMA)
