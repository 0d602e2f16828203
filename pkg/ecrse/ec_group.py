# Copyright 2024 Eurobios
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""
Group law of an elliptic curve ``y^2 = x^3 + ax + b (mod p)`` in affine
coordinates, and brute force census utilities for desk-scale primes.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np

from ecrse import bigmath
from ecrse.exceptions import (CurveTooLarge, InvalidCurve, NonResidue,
                              NotOnCurve, ScalarOutOfRange)
from ecrse.misc import execution

LOGGER = logging.getLogger(__name__)

ENUMERATION_GUARD = 10 ** 6


@dataclass(frozen=True)
class CurveParams:
    p: int
    a: int
    b: int

    @property
    def discriminant(self) -> int:
        return (4 * self.a ** 3 + 27 * self.b ** 2) % self.p

    def rhs(self, x: int) -> int:
        """ ``x^3 + ax + b mod p`` """
        return (x * x * x + self.a * x + self.b) % self.p

    def __str__(self):
        return f"y^2 = x^3 + {self.a}x + {self.b} (mod {self.p})"


@dataclass(frozen=True)
class ECPoint:
    """ Affine point; both coordinates None stands for the point at infinity """
    x: Optional[int] = None
    y: Optional[int] = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self):
        return "O" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = ECPoint()


@dataclass(frozen=True)
class BasePointInfo:
    point: ECPoint
    order: int


# ===========================================================================
#                           VALIDATION
# ===========================================================================
def validate_curve(params: CurveParams) -> bool:
    """
    Parameters
    ----------
    params: CurveParams

    Returns
    -------
        True if p is a prime at least 5, the coefficients are reduced and
        ``4a^3 + 27b^2 != 0 (mod p)``
    """
    if params.p < 5 or not bigmath.is_prime(params.p):
        return False
    if not (0 <= params.a < params.p and 0 <= params.b < params.p):
        return False
    return params.discriminant != 0


def check_curve(params: CurveParams) -> CurveParams:
    if not validate_curve(params):
        raise InvalidCurve(f"{params} is not a valid curve")
    return params


def is_on_curve(params: CurveParams, pt: ECPoint) -> bool:
    if pt.is_infinity:
        return True
    if not (0 <= pt.x < params.p and 0 <= pt.y < params.p):
        return False
    return pt.y * pt.y % params.p == params.rhs(pt.x)


def _check_point(params: CurveParams, pt: ECPoint) -> None:
    if not is_on_curve(params, pt):
        raise NotOnCurve(f"{pt} is not on {params}")


# ===========================================================================
#                           GROUP LAW
# ===========================================================================
def negate(params: CurveParams, pt: ECPoint) -> ECPoint:
    _check_point(params, pt)
    if pt.is_infinity:
        return INFINITY
    return ECPoint(pt.x, (params.p - pt.y) % params.p)


def add(params: CurveParams, P: ECPoint, Q: ECPoint) -> ECPoint:
    """
    Group sum of two points of the curve.

    Parameters
    ----------
    params: CurveParams
    P: ECPoint
    Q: ECPoint

    Returns
    -------
        P + Q
    """
    _check_point(params, P)
    _check_point(params, Q)
    return _add(params, P, Q)


def _add(params: CurveParams, P: ECPoint, Q: ECPoint) -> ECPoint:
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    p = params.p
    if P.x == Q.x:
        if P.y == (p - Q.y) % p:
            # inverse pair, including the 2-torsion doubling y = 0
            return INFINITY
        slope = (3 * P.x * P.x + params.a) * bigmath.mod_inverse(2 * P.y, p) % p
    else:
        slope = (Q.y - P.y) * bigmath.mod_inverse(Q.x - P.x, p) % p
    x3 = (slope * slope - P.x - Q.x) % p
    y3 = (slope * (P.x - x3) - P.y) % p
    return ECPoint(x3, y3)


def scalar_mul(params: CurveParams, k: int, P: ECPoint) -> ECPoint:
    """
    ``k * P`` by left-to-right double-and-add. The scalar is used as given,
    it is never reduced modulo p.
    """
    if k < 0:
        raise ScalarOutOfRange(f"negative scalar {k}")
    _check_point(params, P)
    result = INFINITY
    for bit in bin(k)[2:]:
        result = _add(params, result, result)
        if bit == "1":
            result = _add(params, result, P)
    return result


def lift_x(params: CurveParams, x: int) -> ECPoint:
    """
    Point of abscissa x carrying the smaller square root as ordinate.
    """
    rhs = params.rhs(x)
    if rhs != 0 and not bigmath.is_quadratic_residue(rhs, params.p):
        raise NonResidue(f"{x} is not an abscissa of {params}")
    y, _ = bigmath.mod_sqrt(rhs, params.p)
    return ECPoint(x % params.p, y)


# ===========================================================================
#                           CENSUS
# ===========================================================================
def _guard(params: CurveParams) -> None:
    if params.p > ENUMERATION_GUARD:
        raise CurveTooLarge(
            f"p = {params.p} exceeds the enumeration guard {ENUMERATION_GUARD}")


def vector_pow(base: np.ndarray, exponent: int, modulus: int) -> np.ndarray:
    # operands stay below modulus**2 <= 1e12, inside int64
    result = np.ones_like(base)
    base = base % modulus
    while exponent:
        if exponent & 1:
            result = result * base % modulus
        base = base * base % modulus
        exponent >>= 1
    return result


def rhs_table(params: CurveParams) -> np.ndarray:
    """ ``x^3 + ax + b mod p`` for every x in [0, p) """
    _guard(params)
    x = np.arange(params.p, dtype=np.int64)
    return (x * x % params.p * x + params.a * x + params.b) % params.p


def valid_x_table(params: CurveParams) -> np.ndarray:
    """
    Returns
    -------
        boolean array over [0, p), True where ``x^3 + ax + b`` is a nonzero
        quadratic residue
    """
    rhs = rhs_table(params)
    return vector_pow(rhs, (params.p - 1) // 2, params.p) == 1


@execution.execution_time
def brute_force_count(params: CurveParams) -> int:
    """
    Number of points of the curve, point at infinity included, counting the
    square roots of ``x^3 + ax + b`` for every x.
    """
    rhs = rhs_table(params)
    residues = vector_pow(rhs, (params.p - 1) // 2, params.p) == 1
    count = 1 + int(np.count_nonzero(rhs == 0)) + 2 * int(np.count_nonzero(residues))
    LOGGER.info("#E = %d for %s", count, params)
    return count


def factorize(n: int) -> Dict[int, int]:
    """ Prime factors of n with their multiplicity, by trial division """
    factors = {}
    divisor = 2
    while divisor * divisor <= n:
        while n % divisor == 0:
            factors[divisor] = factors.get(divisor, 0) + 1
            n //= divisor
        divisor += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def brute_force_order(params: CurveParams, P: ECPoint) -> int:
    """
    Least k >= 1 with ``k * P = O``.

    The order divides the group size, so the search strips prime factors from
    :func:`brute_force_count` rather than stepping through every multiple.
    """
    _check_point(params, P)
    if P.is_infinity:
        return 1
    order = brute_force_count(params)
    for prime in factorize(order):
        while order % prime == 0 and scalar_mul(params, order // prime, P).is_infinity:
            order //= prime
    return order


def is_point_order(params: CurveParams, P: ECPoint, order: int) -> bool:
    """
    True when ``order`` is the least k >= 1 with ``k * P = O``: the multiple
    vanishes and no ``order // prime`` multiple does.
    """
    _check_point(params, P)
    if order < 1 or not scalar_mul(params, order, P).is_infinity:
        return False
    return not any(scalar_mul(params, order // prime, P).is_infinity
                   for prime in factorize(order))


# ===========================================================================
#                           DESK-SCALE CURVES
# ===========================================================================
def random_curve(p: int, rng: "RandomSource") -> CurveParams:
    """ Uniformly drawn non-singular curve over the prime p """
    if p < 5 or not bigmath.is_prime(p):
        raise InvalidCurve(f"{p} is not a prime at least 5")
    while True:
        params = CurveParams(p, rng.randbelow(p), rng.randbelow(p))
        if params.discriminant != 0:
            return params


def find_base_point(params: CurveParams, rng: "RandomSource",
                    min_order: int = 3, max_attempts: int = 1000) -> BasePointInfo:
    """
    Draw points of the curve until one has order at least ``min_order``.

    Parameters
    ----------
    params: CurveParams
    rng: RandomSource
    min_order: int
        smallest acceptable order
    max_attempts: int
        number of abscissae drawn before giving up

    Returns
    -------
    :obj:`BasePointInfo`
    """
    check_curve(params)
    _guard(params)
    for _ in range(max_attempts):
        x = rng.randbelow(params.p)
        try:
            point = lift_x(params, x)
        except NonResidue:
            continue
        order = brute_force_order(params, point)
        if order >= min_order:
            return BasePointInfo(point, order)
    raise InvalidCurve(
        f"no point of order >= {min_order} found on {params}")
