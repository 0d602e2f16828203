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
Mapping message integers onto curve points.

Two schemes live here:

- the RSA embedding: ``x = M^e mod n`` for exponents e tried one after the
  other until x is an abscissa of the curve; only the holder of
  ``phi(n)`` can invert it with ``M = x^d mod n``;
- the Koblitz embedding: ``x = K*M + j`` for ``j = 1 .. K-1``, inverted by
  anyone with ``floor(x / K)``.
"""
import logging
from dataclasses import dataclass
from math import isqrt
from typing import Iterator, Optional, Union

from ecrse import bigmath
from ecrse.ec_group import CurveParams, ECPoint, lift_x
from ecrse.exceptions import (DegenerateMessage, MessageTooLarge,
                              ModulusTooLarge, NoEmbeddingFound,
                              NoSuitableModulus, NotCoprime, PointAtInfinity,
                              XOutOfRange)
from ecrse.utils.randomness import RandomSource

LOGGER = logging.getLogger(__name__)

DEFAULT_MAX_ATTEMPTS = 128


# ===========================================================================
#                           KEYS
# ===========================================================================
@dataclass(frozen=True)
class RsaEmbedPublicKey:
    """ What a sender knows of the embedding modulus: n only """
    n: int

    @property
    def phi(self) -> Optional[int]:
        return None


@dataclass(frozen=True)
class RsaEmbedKey:
    """ Receiver-held embedding modulus ``n = q*r`` with its totient """
    q: int
    r: int

    def __post_init__(self):
        if self.q == self.r:
            raise ValueError(f"q and r must be distinct, got {self.q} twice")
        for factor in (self.q, self.r):
            if not bigmath.is_prime(factor):
                raise ValueError(f"embedding factor {factor} is not prime")

    @property
    def n(self) -> int:
        return self.q * self.r

    @property
    def phi(self) -> int:
        return (self.q - 1) * (self.r - 1)

    def public(self) -> RsaEmbedPublicKey:
        return RsaEmbedPublicKey(self.n)


AnyEmbedKey = Union[RsaEmbedKey, RsaEmbedPublicKey]


@dataclass(frozen=True)
class EmbeddingResult:
    point: ECPoint
    exponent_used: int
    attempts: int


@dataclass(frozen=True)
class KoblitzParams:
    K: int

    def __post_init__(self):
        if self.K < 2:
            raise ValueError(f"expansion factor K must be at least 2, got {self.K}")

    def capacity(self, p: int) -> int:
        """ Largest M with ``(M + 1) * K < p`` """
        return (p - 1) // self.K - 1


# ===========================================================================
#                           EXPONENT POLICIES
# ===========================================================================
def public_exponent_window(n: int) -> range:
    """
    Exponents a sender may use knowing n only.

    For odd distinct primes q, r every prime factor of ``(q-1)(r-1)`` is below
    ``n/3`` and ``phi(n) >= 2n/3 - 2``, so any prime e in
    ``(n/3, 2n/3 - 2)`` satisfies ``1 < e < phi`` and ``gcd(e, phi) = 1``.
    """
    return range(n // 3 + 1, (2 * n - 6) // 3)


class ExponentStrategy:
    """
    Order in which the embedding tries exponents.

    With the full key, candidates are the integers of ``(1, phi)`` coprime to
    ``phi``. With the public key, candidates are the primes of
    :func:`public_exponent_window`.
    """
    name = "abstract"

    def candidates(self, key: AnyEmbedKey) -> Iterator[int]:
        raise NotImplementedError

    @staticmethod
    def _admissible(key: AnyEmbedKey, e: int) -> bool:
        if key.phi is None:
            return bigmath.is_prime(e)
        return bigmath.gcd(e, key.phi) == 1

    @staticmethod
    def _bounds(key: AnyEmbedKey) -> range:
        if key.phi is None:
            return public_exponent_window(key.n)
        return range(3, key.phi)


class AscendingExponents(ExponentStrategy):
    """ Admissible exponents in increasing order; from 3 with the full key """
    name = "ascending"

    def candidates(self, key: AnyEmbedKey) -> Iterator[int]:
        for e in self._bounds(key):
            if self._admissible(key, e):
                yield e


class RandomExponents(ExponentStrategy):
    """ Admissible exponents drawn uniformly, with replacement """
    name = "random"

    def __init__(self, rng: RandomSource):
        self.rng = rng

    def candidates(self, key: AnyEmbedKey) -> Iterator[int]:
        bounds = self._bounds(key)
        if len(bounds) == 0:
            return
        max_misses = 100 * max(1, key.n.bit_length())
        misses = 0
        while misses < max_misses:
            e = self.rng.randrange(bounds.start, bounds.stop)
            if self._admissible(key, e):
                misses = 0
                yield e
            else:
                misses += 1


def exponent_strategy(name: str, rng: Optional[RandomSource] = None) -> ExponentStrategy:
    if name == AscendingExponents.name:
        return AscendingExponents()
    if name == RandomExponents.name:
        return RandomExponents(rng if rng is not None else RandomSource.from_seed())
    raise ValueError(f"unknown exponent strategy {name}")


# ===========================================================================
#                           RSA EMBEDDING
# ===========================================================================
def rsa_embed(curve: CurveParams, key: AnyEmbedKey, M: int,
              e_strategy: Optional[ExponentStrategy] = None,
              max_attempts: int = DEFAULT_MAX_ATTEMPTS) -> EmbeddingResult:
    """
    Map the message M onto a point of the curve.

    Parameters
    ----------
    curve: CurveParams
        target curve, ``n < p`` is required
    key: RsaEmbedKey or RsaEmbedPublicKey
        embedding modulus
    M: int
        message, ``2 <= M < n``
    e_strategy: ExponentStrategy
        order of the exponents tried, ascending by default
    max_attempts: int
        number of exponents tried before giving up

    Returns
    -------
    :obj:`EmbeddingResult`
        point ``(M^e mod n, y)`` with y the smaller square root
    """
    if M in (0, 1):
        raise DegenerateMessage(f"M = {M} is fixed by every exponent")
    if M >= key.n:
        raise MessageTooLarge(f"M = {M} is not below n = {key.n}")
    if key.n >= curve.p:
        raise ModulusTooLarge(f"n = {key.n} is not below p = {curve.p}")
    if e_strategy is None:
        e_strategy = AscendingExponents()

    attempts = 0
    for e in e_strategy.candidates(key):
        if attempts >= max_attempts:
            break
        attempts += 1
        x = pow(M, e, key.n)
        assert x < curve.p
        if bigmath.is_quadratic_residue(curve.rhs(x), curve.p):
            LOGGER.debug("M = %d embedded with e = %d after %d attempts",
                         M, e, attempts)
            return EmbeddingResult(lift_x(curve, x), e, attempts)
        LOGGER.debug("e = %d gives x = %d, not an abscissa", e, x)
    raise NoEmbeddingFound(
        f"no exponent among {attempts} tried maps M = {M} onto {curve}",
        attempts=attempts)


def rsa_unembed(key: RsaEmbedKey, point: ECPoint, e: int) -> int:
    """
    Recover the message of an embedded point: ``x^d mod n`` with
    ``e*d = 1 (mod phi(n))``.
    """
    if point.is_infinity:
        raise PointAtInfinity("the point at infinity carries no message")
    if point.x >= key.n:
        raise XOutOfRange(f"x = {point.x} is not below n = {key.n}")
    if bigmath.gcd(e, key.phi) != 1:
        raise NotCoprime(f"exponent {e} is not invertible modulo phi(n)")
    d = bigmath.mod_inverse(e, key.phi)
    return pow(point.x, d, key.n)


def _random_prime(low: int, high: int, rng: RandomSource, budget: int) -> Optional[int]:
    """ Random prime of [low, high], None after ``budget`` draws """
    if low > high:
        return None
    for _ in range(budget):
        candidate = rng.randrange(low, high + 1)
        if bigmath.is_prime(candidate):
            return candidate
    return None


def generate_embed_key(M_bound: int, p: int, rng: RandomSource,
                       max_attempts: int = 1000) -> RsaEmbedKey:
    """
    Draw two distinct odd primes q, r with ``M_bound < q*r < p``.

    q is drawn below ``sqrt(p)``, r from the range that puts the product in
    ``(M_bound, p)``.

    Parameters
    ----------
    M_bound: int
        every message to embed is at most ``M_bound``
    p: int
        prime of the target curve
    rng: RandomSource
    max_attempts: int
        number of (q, r) draws

    Returns
    -------
    :obj:`RsaEmbedKey`
    """
    q_high = isqrt(p - 1)
    for _ in range(max_attempts):
        q = _random_prime(3, q_high, rng, budget=64)
        if q is None:
            continue
        r_low = max(M_bound // q + 1, 3)
        r_high = (p - 1) // q
        r = _random_prime(r_low, r_high, rng, budget=64)
        if r is None or r == q:
            continue
        key = RsaEmbedKey(q, r)
        if M_bound < key.n < p:
            LOGGER.info("embedding modulus n = %d drawn", key.n)
            return key
    raise NoSuitableModulus(
        f"no n = q*r with {M_bound} < n < {p} found in {max_attempts} draws")


# ===========================================================================
#                           KOBLITZ EMBEDDING
# ===========================================================================
def koblitz_embed(curve: CurveParams, params: KoblitzParams, M: int) -> ECPoint:
    """
    First ``x = K*M + j``, ``j = 1 .. K-1``, whose ``x^3 + ax + b`` is a
    quadratic residue, with the smaller root as ordinate.
    """
    if M < 0 or (M + 1) * params.K >= curve.p:
        raise MessageTooLarge(
            f"(M + 1) * K = {(M + 1) * params.K} is not below p = {curve.p}")
    for j in range(1, params.K):
        x = params.K * M + j
        if bigmath.is_quadratic_residue(curve.rhs(x), curve.p):
            return lift_x(curve, x)
    raise NoEmbeddingFound(
        f"none of the {params.K - 1} abscissae of M = {M} lies on {curve}",
        attempts=params.K - 1)


def koblitz_unembed(params: KoblitzParams, point: ECPoint) -> int:
    if point.is_infinity:
        raise PointAtInfinity("the point at infinity carries no message")
    return point.x // params.K
