"""Acceptance criteria 1-10, one test per criterion.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints one
PASS/FAIL line per criterion. ``python tests/test_acceptance.py`` does the same.
"""
import subprocess
import sys
import time
from fractions import Fraction
from itertools import product

from w3cft import oracles, sl3
from w3cft.charges import FieldClass, KacCharge, central_charge, classify, h_of, w_of
from w3cft.fusion import block_counts, degenerate_spectrum
from w3cft.laurent import B, BINV
from w3cft.rational import RationalModel, kac_table, potts_content
from w3cft.spin import FIELDS, bundled_spec, on_wall, orbit_b, orbit_points, shared_points, solve
from w3cft.virasoro import (
    H12,
    H13,
    H21,
    H_SPIN,
    half_line_residual,
    on_curve_residual,
    potts_curve_residual,
    vir_c,
    vir_sector_check,
)

F = Fraction


def test_criterion_1_potts_content():
    table = kac_table(RationalModel(4, 5))
    assert len(table) == 6
    assert sorted(f.h for f in table) == sorted(map(F, ["0", "1/15", "1/15", "2/3", "2/3", "2/5"]))
    assert sorted(f.q for f in table) == [-1, -1, 0, 0, 1, 1]
    assert all(isinstance(f.h, Fraction) for f in table)
    # the charge pairs up with h: q = 0 on h in {0, 2/5}, q = +-1 on each doublet
    for f in table:
        assert (f.q == 0) == (f.h in (0, F(2, 5)))
    fus = potts_content().fusions
    assert {"sigma*", "psi*"} <= set(fus["sigma x sigma"])
    assert {"1", "eps"} <= set(fus["sigma x sigma*"])


def test_criterion_2_spin_uniqueness():
    res = solve(bundled_spec("sigma"))
    assert len(res.spec.rep_pairs) == 3
    assert res.status == "unique" and len(res.solutions) == 1 and not res.families
    charge = res.solutions[0].charge
    assert charge.indices == (F(2, 3), F(-1, 3), F(1, 3), F(1, 3))
    d = BINV - B
    assert h_of(charge) == (1 - 8 * d * d) / 9
    # w is stored divided by beta*sqrt(3)
    assert w_of(charge) == F(-2, 27) * d


def test_criterion_3_variant_solutions():
    s1 = KacCharge(1, 0, F(1, 2), F(1, 2))
    s2 = KacCharge(1, 1, 2, 1)
    assert classify(s1) is FieldClass.SEMI_DEGENERATE_LEVEL_ONE
    d = BINV - B
    assert h_of(s1) == BINV * BINV / 12 - F(3, 4) * d * d
    assert h_of(s2) == (4 * B * B - 3) / 3
    assert any(f.contains(s1) for f in solve(bundled_spec("sigma1")).families)
    assert solve(bundled_spec("sigma2")).charges() == [s2]


def _pairs(cutoff):
    reps = sl3.dominant_weights(cutoff)
    return [(l, m) for l in reps for m in reps]


def test_criterion_4_sector_coverage():
    q = sl3.z3_charge
    predicted = {
        ("sigma", "self"): lambda l, m: (q(l) + q(m)) % 3 == 1,
        ("sigma", "conjugate"): lambda l, m: (q(l) + q(m)) % 3 == 0,
        ("sigma1", "self"): lambda l, m: q(l) % 3 == 1 and q(m) % 3 == 0,
        ("sigma1", "conjugate"): lambda l, m: q(l) % 3 == 0 and q(m) % 3 == 0,
        ("sigma2", "conjugate"): lambda l, m: (tuple(l), tuple(m)) in {((0, 0), (0, 0)), ((0, 0), (1, 1))},
    }
    mismatches = []
    for (name, mode), rule in predicted.items():
        want = {(tuple(l), tuple(m)) for l, m in _pairs(4) if rule(l, m)}
        got = {(tuple(l), tuple(m)) for l, m in degenerate_spectrum(FIELDS[name], 4, mode)}
        mismatches += [(name, mode, p) for p in want ^ got]
    assert mismatches == []


def test_criterion_5_block_counts():
    pairs = _pairs(5)
    assert len(pairs) == 21 * 21
    bad = [(l, m) for l, m in pairs if block_counts(l, m).s_channel != block_counts(l, m).t_channel]
    assert bad == []


PRINTED = {
    ((1, 0), (1, 0)): {(2, 0): 1, (0, 1): 1},
    ((1, 0), (0, 1)): {(0, 0): 1, (1, 1): 1},
    ((1, 1), (1, 1)): {(0, 0): 1, (2, 2): 1, (0, 3): 1, (3, 0): 1},
    ((2, 0), (2, 0)): {(4, 0): 1, (2, 1): 1, (0, 2): 1},
    ((2, 0), (0, 2)): {(0, 0): 1, (1, 1): 1, (2, 2): 1},
    ((1, 0), (2, 0)): {(3, 0): 1, (1, 1): 1},
}


def test_criterion_6_sl3_kernel():
    for lam in sl3.dominant_weights(6):
        assert dict(sl3.weight_system(lam).table) == oracles.convolution_character(*lam)
    for lam, mu in _pairs(4):
        t = sl3.tensor_decompose(lam, mu)
        assert sum(n * sl3.weyl_dimension(*nu) for nu, n in t.items()) == (
            sl3.weyl_dimension(*lam) * sl3.weyl_dimension(*mu))
    for lam in sl3.dominant_weights(8):
        qq = sl3.z3_charge(lam)
        assert sl3.contains_hj_triple(lam, 1) == (qq == 1)
        assert sl3.contains_hj_triple(lam, -1) == (qq == -1)
        assert sl3.contains_zero(lam) == (qq == 0)
    diffs = {}
    for (lam, mu), printed in PRINTED.items():
        got = {tuple(k): v for k, v in sl3.tensor_decompose(lam, mu).items()}
        d = {k: got.get(k, 0) - printed.get(k, 0) for k in set(got) | set(printed)}
        d = {k: v for k, v in d.items() if v}
        if d:
            diffs[(lam, mu)] = d
    # only the adjoint square differs: the adjoint appears twice and is not printed
    assert diffs == {((1, 1), (1, 1)): {(1, 1): 2}}


def test_criterion_7_special_points():
    c = central_charge()
    h = {n: h_of(FIELDS[n]) for n in ("sigma", "sigma1", "sigma2", "psi", "psi1", "eps")}
    assert [c.at_b2(x) for x in map(F, ["4/5", "4/3", "2/3", "1/2", "2"])] == list(
        map(F, ["4/5", "0", "-2", "-10", "-10"]))
    at = lambda n, x: h[n].at_b2(F(x))
    assert at("sigma", "4/5") == at("sigma1", "4/5") == at("sigma2", "4/5") == F(1, 15)
    assert at("sigma1", "4/3") == at("psi1", "4/3") == 0
    assert at("sigma1", "2/3") == at("eps", "2/3") == 0
    assert at("sigma", "1/2") == at("sigma2", "1/2") == at("psi", "1/2") == F(-1, 3)
    assert at("sigma", "2") == at("sigma1", "2") == at("psi1", "2") == F(-1, 3)
    assert c.at_b2(1) == 2 and at("sigma", 1) == F(1, 9)
    # c = 2: the formula gives h_psi = 4/3, not the printed 1/3 (h_psi' is 1/3)
    assert at("psi", 1) == F(4, 3) and at("psi1", 1) == F(1, 3)


def test_criterion_8_virasoro_baseline():
    assert (H12.at_b2(F(3, 4)), H13.at_b2(F(3, 4))) == (F(1, 16), F(1, 2))
    assert H12.at_b2(F(2, 5)) == F(-1, 5) and vir_c().at_b2(F(2, 5)) == F(-22, 5)
    for residual in (on_curve_residual(), potts_curve_residual(), half_line_residual()):
        assert residual.is_zero()
    assert (H_SPIN.at_b2(1), H21.at_b2(1)) == (F(1, 16), F(1, 4))
    rows = vir_sector_check(7)
    assert len(rows) == 49 and all(r.expected == r.found for r in rows)


def test_criterion_9_orbit_geometry():
    names = ("sigma", "sigma1", "sigma2")
    for p, n in product(range(1, 21), names):
        assert len(orbit_points(FIELDS[n], orbit_b(p))) == 12
    assert shared_points([orbit_points(FIELDS[n], orbit_b(4)) for n in names], tol=1e-10)
    common = shared_points([orbit_points(FIELDS[n], orbit_b(1)) for n in ("sigma", "sigma2")], tol=1e-10)
    assert common and all(on_wall(pt) for pt in common)


def test_criterion_10_check_command():
    t0 = time.perf_counter()
    out = subprocess.run([sys.executable, "-m", "w3cft.cli", "check"], capture_output=True, text=True)
    elapsed = time.perf_counter() - t0
    assert out.returncode == 0, out.stdout + out.stderr
    assert "FAIL" not in out.stdout
    assert elapsed < 60


if __name__ == "__main__":
    import pytest

    sys.exit(pytest.main([__file__, "-q"]))
