from __future__ import annotations

import random
from fractions import Fraction

import pytest

from looptorsion.presentation import RelationSet, THEOREM1_PARAMS, relation_set_AX, relation_set_E
from looptorsion.quotient import graded_piece
from looptorsion.series import (
    PowerSeries,
    dimension_series,
    format_series,
    invert_series,
    roos_poincare,
    series_json,
)


def test_invert_geometric():
    s = PowerSeries.from_coeffs([1, -8], truncation=3)
    assert [int(c) for c in invert_series(s).coefficients] == [1, 8, 64, 512]


def test_invert_identity():
    s = PowerSeries.from_coeffs([1], truncation=3)
    assert [int(c) for c in invert_series(s).coefficients] == [1, 0, 0, 0]


def test_invert_is_involutive():
    rng = random.Random(43)
    for _ in range(30):
        coeffs = [Fraction(1)] + [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(5)]
        s = PowerSeries(tuple(coeffs))
        assert invert_series(invert_series(s)) == s
        assert (s * invert_series(s)).coefficients == (Fraction(1),) + (Fraction(0),) * 5


def test_invert_rejects_bad_constant_term():
    with pytest.raises(ValueError):
        invert_series(PowerSeries.from_coeffs([2, 1]))


def test_dimension_series_free_algebra():
    free = RelationSet(8, THEOREM1_PARAMS, "graded", ())
    assert [int(c) for c in dimension_series(free, "Q", 2).coefficients] == [1, 8, 64]
    assert [int(c) for c in dimension_series(free, 13, 2).coefficients] == [1, 8, 64]


def test_dimension_series_inner_algebra():
    rels = relation_set_E(THEOREM1_PARAMS, 3, "graded")
    assert [int(c) for c in dimension_series(rels, "Q", 3).coefficients] == [1, 6, 35, 202]
    assert int(dimension_series(rels, 11, 3)[3]) == 203


def test_dimension_series_rejects_bad_fields():
    rels = relation_set_E(THEOREM1_PARAMS, 2, "graded")
    with pytest.raises(ValueError):
        dimension_series(rels, 4, 2)
    with pytest.raises(ValueError):
        dimension_series(rels, (1 << 61) + 9, 2)


def test_rank_drop_matches_divisors():
    rels = relation_set_E(THEOREM1_PARAMS, 4, "graded")
    for p in (5, 11, 13, 29):
        for n in range(5):
            piece = graded_piece(rels, n)
            drop = sum(1 for d in piece.divisors if d % p == 0)
            over_p = int(dimension_series(rels, p, n)[n])
            assert over_p == piece.free_rank + drop


def test_roos_free_algebra_case():
    a = invert_series(PowerSeries.from_coeffs([1, -8], truncation=4))
    p = roos_poincare(a)
    assert [int(c) for c in p.coefficients] == [1, 8, 64, 525, 4304]
    assert [int(c) for c in invert_series(p).coefficients] == [1, -8, 0, -13, 0]


def test_roos_trivial_algebra_case():
    p = roos_poincare(PowerSeries.from_coeffs([1, 0, 0, 0]))
    assert [int(c) for c in invert_series(p).coefficients] == [1, 0, 8, -13]


def test_roos_on_reference_dimension_series():
    a = dimension_series(relation_set_AX(THEOREM1_PARAMS, "graded"), 13, 4)
    p = roos_poincare(a)
    assert p.is_integral()
    assert all(c >= 0 for c in p.coefficients)


def test_roos_rejects_non_unit_constant():
    with pytest.raises(ValueError):
        roos_poincare(PowerSeries.from_coeffs([2, 1, 1]))


def test_format_series():
    s = PowerSeries.from_coeffs([1, 8, 64])
    assert format_series(s) == "1 + 8 t + 64 t^2"
    assert format_series(PowerSeries.from_coeffs([0, 0])) == "0"
    assert format_series(PowerSeries.from_coeffs([1, 0, Fraction(1, 2)])) == "1 + 1/2 t^2"


def test_series_json():
    payload = series_json(PowerSeries.from_coeffs([1, Fraction(3, 2)]))
    assert payload == {"truncation": 1, "coefficients": [1, "3/2"]}
