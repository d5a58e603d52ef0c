from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from w3cft.charges import KacCharge, h_of, w_of
from w3cft.rational import (
    POTTS,
    ModelError,
    RationalModel,
    field_of,
    index_shift,
    kac_table,
    potts_content,
    rotate,
    triple,
    z3_charge_of,
)
from w3cft.sl3 import balanced_mod3

coprime = st.tuples(st.integers(2, 9), st.integers(2, 9)).filter(
    lambda t: __import__("math").gcd(*t) == 1
)


def _table_charges(model):
    for n1 in range(1, model.p):
        for n2 in range(1, model.p - n1):
            for m1 in range(1, model.pp):
                for m2 in range(1, model.pp - m1):
                    yield KacCharge(n1, n2, m1, m2)


def test_potts_table():
    table = kac_table(POTTS)
    assert len(table) == 6
    assert sorted(f.h for f in table) == sorted(
        Fraction(x) for x in ("0", "1/15", "1/15", "2/3", "2/3", "2/5")
    )
    assert sorted(f.q for f in table) == [-1, -1, 0, 0, 1, 1]
    assert POTTS.central_charge == Fraction(4, 5)


def test_potts_fusions():
    rep = potts_content()
    assert rep.fusions["sigma x sigma"] == {"sigma*": 1, "psi*": 1}
    assert rep.fusions["sigma x sigma*"] == {"1": 1, "eps": 1}
    assert [r["name"] for r in rep.rows()] == ["1", "sigma", "sigma*", "psi", "psi*", "eps"]


@given(coprime)
def test_rotation_has_order_three_and_preserves_eigenvalues(pq):
    model = RationalModel(*pq)
    b2 = model.b2
    for c in _table_charges(model):
        a, b, cc = triple(c, model)
        assert rotate(cc, model) == a
        assert h_of(b).at_b2(b2) == h_of(a).at_b2(b2)
        assert w_of(b).shift(-1).at_b2(b2) == w_of(a).shift(-1).at_b2(b2)


@given(coprime)
def test_table_size(pq):
    """Every charge lies in exactly one triple of three distinct members."""
    model = RationalModel(*pq)
    n_charges = sum(1 for _ in _table_charges(model))
    fields = kac_table(model)
    assert 3 * len(fields) == n_charges
    assert all(len(set(f.triple)) == 3 for f in fields)


@given(coprime)
def test_z3_charge_constant_on_triples(pq):
    model = RationalModel(*pq)
    for f in kac_table(model):
        assert len({z3_charge_of(c, model) for c in f.triple}) == 1


@given(coprime, st.integers(-2, 2), st.integers(-2, 2))
def test_index_shift_leaves_vertex_charge_fixed(pq, u, v):
    model = RationalModel(*pq)
    c = KacCharge(1, 2, 2, 1)
    s = index_shift(c, u, v, model)
    # alpha components are odd in b: compare b * alpha at b^2 = p/p'
    for a, b in zip(c.alpha(), s.alpha()):
        assert a.shift(1).at_b2(model.b2) == b.shift(1).at_b2(model.b2)


def test_z3_case_split():
    assert RationalModel(3, 4).z3_case == "p"
    assert RationalModel(4, 3).z3_case == "p'"
    assert RationalModel(4, 5).z3_case == "p+p'"
    assert RationalModel(4, 7).z3_case == "p-p'"


def test_z3_case_matches_charge_conservation_in_potts():
    sigma = field_of(KacCharge.from_table([[1, 2], [1, 1]]), POTTS)
    eps = field_of(KacCharge.from_table([[1, 2], [1, 2]]), POTTS)
    assert balanced_mod3(sigma.q + sigma.q) == -1
    assert eps.q == 0


def test_model_validation():
    with pytest.raises(ModelError):
        RationalModel(4, 6)
    with pytest.raises(ModelError):
        RationalModel(0, 1)
    with pytest.raises(ModelError):
        kac_table(RationalModel(1, 3))
    assert field_of(KacCharge(3, 3, 1, 1), POTTS) is None
    assert kac_table(RationalModel(3, 4))[0].indices == KacCharge(1, 1, 1, 1)


def test_field_exposes_w():
    sigma = field_of(KacCharge.from_table([[1, 2], [1, 1]]), POTTS)
    assert sigma.w_factor == pytest.approx(w_of(sigma.indices)(POTTS.b))
    assert sigma.w != 0
