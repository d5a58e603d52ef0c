import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from w3cft.records import Record, decode, encode, parse_csv, parse_json, round12

rational = st.builds(Fraction, st.integers(-10**6, 10**6), st.integers(1, 10**6))
finite = st.floats(allow_nan=False, allow_infinity=False, width=64)
text = st.text(alphabet=st.characters(blacklist_categories=("Cs", "Cc")), max_size=12)


@given(st.lists(st.tuples(rational, finite, st.integers(-10**9, 10**9), text), max_size=8))
def test_csv_and_json_are_value_identical(rows):
    rec = Record(["r", "d", "i", "t"], {"r": "rational", "d": "decimal", "i": "int", "t": "text"})
    for r, d, i, t in rows:
        rec.add(r=r, d=d, i=i, t=t)
    cols_j, vals_j = parse_json(rec.to_json())
    cols_c, vals_c = parse_csv(rec.to_csv(), rec.types)
    assert cols_j == cols_c == rec.columns
    # text "" and None are the same empty cell in CSV
    norm = lambda vals: [[None if v == "" else v for v in row] for row in vals]
    assert norm(vals_j) == norm(vals_c) == norm(rec.values())
    for (r, d, i, _), row in zip(rows, vals_j):
        assert row[0] == r
        assert row[1] == round12(d)
        assert row[2] == i


def test_rational_format():
    assert encode(Fraction(3), "rational") == "3/1"
    assert encode(Fraction(-2, 6), "rational") == "-1/3"
    assert decode("-1/3", "rational") == Fraction(-1, 3)
    with pytest.raises(ValueError):
        decode("0.5", "rational")
    with pytest.raises(TypeError):
        encode(0.5, "rational")


def test_decimal_precision():
    assert encode(1 / 3, "decimal") == 0.333333333333
    assert json.loads(json.dumps(encode(2 / 3, "decimal"))) == float("0.666666666667")


def test_record_validation():
    with pytest.raises(ValueError):
        Record(["a"], {"a": "complex"})
    rec = Record(["a"], {"a": "int"})
    with pytest.raises(KeyError):
        rec.add(b=1)
    assert rec.to_csv() == "a\n"
