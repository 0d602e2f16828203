# Copyright 2024 Eurobios
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ecrse import ec_group
from ecrse.ec_group import INFINITY, CurveParams, ECPoint
from ecrse.exceptions import (CurveTooLarge, InvalidCurve, NonResidue,
                              NotOnCurve, ScalarOutOfRange)

CURVE = CurveParams(1009, 71, 602)
P = ECPoint(1, 237)
VALID_X = [x for x in range(CURVE.p) if ec_group.valid_x_table(CURVE)[x]]


def test_validate_curve():
    assert ec_group.validate_curve(CURVE)
    assert not ec_group.validate_curve(CurveParams(1009, 0, 0))
    assert not ec_group.validate_curve(CurveParams(1008, 71, 602))
    assert not ec_group.validate_curve(CurveParams(1009, 1071, 602))


def test_check_curve_singular():
    with pytest.raises(InvalidCurve):
        ec_group.check_curve(CurveParams(1009, 0, 0))


def test_is_on_curve_known_points():
    for point in (P, ECPoint(354, 88), ECPoint(984, 175), ECPoint(926, 227),
                  ECPoint(984, 834), INFINITY):
        assert ec_group.is_on_curve(CURVE, point)
    assert not ec_group.is_on_curve(CURVE, ECPoint(1, 238))
    assert not ec_group.is_on_curve(CURVE, ECPoint(1010, 237))


def test_scalar_mul_mask():
    assert ec_group.scalar_mul(CURVE, 281, P) == ECPoint(984, 175)


def test_add_masking():
    assert ec_group.add(CURVE, ECPoint(354, 88), ECPoint(984, 175)) == ECPoint(926, 227)
    assert ec_group.add(CURVE, ECPoint(926, 227), ECPoint(984, 834)) == ECPoint(354, 88)


def test_negate():
    assert ec_group.negate(CURVE, ECPoint(984, 175)) == ECPoint(984, 834)
    assert ec_group.negate(CURVE, INFINITY) == INFINITY


def test_add_identity_and_inverse():
    assert ec_group.add(CURVE, P, INFINITY) == P
    assert ec_group.add(CURVE, INFINITY, P) == P
    assert ec_group.add(CURVE, P, ec_group.negate(CURVE, P)) == INFINITY


def test_add_two_torsion():
    roots = [x for x in range(CURVE.p) if CURVE.rhs(x) == 0]
    assert roots
    point = ECPoint(roots[0], 0)
    assert ec_group.add(CURVE, point, point) == INFINITY
    assert ec_group.brute_force_order(CURVE, point) == 2


def test_add_off_curve():
    with pytest.raises(NotOnCurve):
        ec_group.add(CURVE, P, ECPoint(1, 238))


@given(st.sampled_from(VALID_X), st.sampled_from(VALID_X), st.sampled_from(VALID_X))
@settings(max_examples=1000, deadline=None)
def test_add_group_laws(x1, x2, x3):
    p1, p2, p3 = (ec_group.lift_x(CURVE, x) for x in (x1, x2, x3))
    assert ec_group.add(CURVE, p1, p2) == ec_group.add(CURVE, p2, p1)
    left = ec_group.add(CURVE, ec_group.add(CURVE, p1, p2), p3)
    right = ec_group.add(CURVE, p1, ec_group.add(CURVE, p2, p3))
    assert left == right
    assert ec_group.is_on_curve(CURVE, left)


def test_scalar_mul_small_multiples():
    expected = INFINITY
    for k in range(51):
        assert ec_group.scalar_mul(CURVE, k, P) == expected
        expected = ec_group.add(CURVE, expected, P)


def test_scalar_mul_not_reduced():
    # the order of P is 530, not 1009
    assert ec_group.scalar_mul(CURVE, 7344, P) == ec_group.scalar_mul(CURVE, 7344 % 530, P)
    assert ec_group.scalar_mul(CURVE, 7344, P) != ec_group.scalar_mul(CURVE, 281, P)


@given(st.integers(min_value=0, max_value=529), st.integers(min_value=0, max_value=529))
@settings(max_examples=300, deadline=None)
def test_scalar_mul_additive(k1, k2):
    assert ec_group.scalar_mul(CURVE, k1 + k2, P) == ec_group.add(
        CURVE, ec_group.scalar_mul(CURVE, k1, P), ec_group.scalar_mul(CURVE, k2, P))


@given(st.integers(min_value=0, max_value=10 ** 12))
@settings(max_examples=300, deadline=None)
def test_scalar_mul_modulo_order(k):
    assert ec_group.scalar_mul(CURVE, k, P) == ec_group.scalar_mul(CURVE, k % 530, P)


def test_scalar_mul_negative():
    with pytest.raises(ScalarOutOfRange):
        ec_group.scalar_mul(CURVE, -1, P)


def test_brute_force_count():
    assert ec_group.brute_force_count(CURVE) == 1060


def test_brute_force_order():
    assert ec_group.brute_force_order(CURVE, P) == 530
    assert ec_group.scalar_mul(CURVE, 530, P) == INFINITY
    assert ec_group.brute_force_order(CURVE, INFINITY) == 1


def test_brute_force_order_matches_naive_scan():
    for x in VALID_X[:25]:
        point = ec_group.lift_x(CURVE, x)
        k, multiple = 1, point
        while not multiple.is_infinity:
            multiple = ec_group.add(CURVE, multiple, point)
            k += 1
        assert ec_group.brute_force_order(CURVE, point) == k


def test_lift_x():
    assert ec_group.lift_x(CURVE, 354) == ECPoint(354, 88)


def test_lift_x_non_residue():
    invalid = next(x for x in range(CURVE.p)
                   if x not in VALID_X and CURVE.rhs(x) != 0)
    with pytest.raises(NonResidue):
        ec_group.lift_x(CURVE, invalid)


def test_valid_x_table_counts_points():
    table = ec_group.valid_x_table(CURVE)
    zeros = int(np.count_nonzero(ec_group.rhs_table(CURVE) == 0))
    assert 1 + zeros + 2 * int(table.sum()) == 1060


def test_rhs_table_too_large():
    with pytest.raises(CurveTooLarge):
        ec_group.rhs_table(CurveParams(1000003, 1, 1))


def test_random_curve(rng):
    for _ in range(20):
        assert ec_group.validate_curve(ec_group.random_curve(1009, rng))


def test_random_curve_not_prime(rng):
    with pytest.raises(InvalidCurve):
        ec_group.random_curve(1008, rng)


def test_find_base_point(rng):
    base = ec_group.find_base_point(CURVE, rng, min_order=100)
    assert base.order >= 100
    assert ec_group.scalar_mul(CURVE, base.order, base.point) == INFINITY
    assert 1060 % base.order == 0


def test_validate_curve_small_field():
    assert ec_group.validate_curve(CurveParams(17, 2, 2))
    assert not ec_group.validate_curve(CurveParams(17, 0, 0))


def test_brute_force_count_matches_pair_scan():
    curve = CurveParams(17, 2, 2)
    pairs = sum(1 for x in range(17) for y in range(17)
                if ec_group.is_on_curve(curve, ECPoint(x, y)))
    assert ec_group.brute_force_count(curve) == pairs + 1 == 19


def test_brute_force_count_hasse_bound(rng):
    for p in (101, 1009, 7919):
        for _ in range(10):
            count = ec_group.brute_force_count(ec_group.random_curve(p, rng))
            assert (count - (p + 1)) ** 2 <= 4 * p


def test_brute_force_order_divides_count():
    for x in VALID_X:
        point = ec_group.lift_x(CURVE, x)
        order = ec_group.brute_force_order(CURVE, point)
        assert 1060 % order == 0
        assert ec_group.brute_force_order(CURVE, ec_group.negate(CURVE, point)) == order


def test_is_point_order():
    assert ec_group.is_point_order(CURVE, P, 530)
    assert not ec_group.is_point_order(CURVE, P, 1060)
    assert not ec_group.is_point_order(CURVE, P, 265)
    assert not ec_group.is_point_order(CURVE, P, 531)
    assert ec_group.is_point_order(CURVE, INFINITY, 1)


def test_factorize():
    assert ec_group.factorize(1060) == {2: 2, 5: 1, 53: 1}
    assert ec_group.factorize(999983) == {999983: 1}
    assert ec_group.factorize(1) == {}
