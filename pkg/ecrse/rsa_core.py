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
Textbook RSA: no padding, no blinding, no CRT.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from ecrse import bigmath
from ecrse.exceptions import (CiphertextTooLarge, MessageTooLarge,
                              RandomnessExhausted)
from ecrse.utils.randomness import RandomSource

LOGGER = logging.getLogger(__name__)

PREFERRED_EXPONENT = 65537


@dataclass(frozen=True)
class RsaKeyPair:
    n: int
    e: int
    d: int
    p_factor: int
    q_factor: int

    @property
    def phi(self) -> int:
        return (self.p_factor - 1) * (self.q_factor - 1)

    @property
    def public(self) -> Tuple[int, int]:
        return self.n, self.e


def choose_public_exponent(phi: int) -> int:
    """ 65537 when it fits and is coprime to phi, otherwise the smallest e >= 3 """
    if PREFERRED_EXPONENT < phi and bigmath.gcd(PREFERRED_EXPONENT, phi) == 1:
        return PREFERRED_EXPONENT
    for e in range(3, phi):
        if bigmath.gcd(e, phi) == 1:
            return e
    raise ValueError(f"no public exponent below phi = {phi}")


def rsa_keypair_from_primes(p_factor: int, q_factor: int,
                            e: Optional[int] = None) -> RsaKeyPair:
    """
    Assemble a key pair from two distinct primes.

    Parameters
    ----------
    p_factor: int
    q_factor: int
    e: int
        public exponent, chosen with :func:`choose_public_exponent` if None

    Returns
    -------
    :obj:`RsaKeyPair`
    """
    if p_factor == q_factor:
        raise ValueError("the two prime factors must be distinct")
    phi = (p_factor - 1) * (q_factor - 1)
    if e is None:
        e = choose_public_exponent(phi)
    if not 1 < e < phi:
        raise ValueError(f"public exponent {e} is not in (1, {phi})")
    d = bigmath.mod_inverse(e, phi)
    return RsaKeyPair(p_factor * q_factor, e, d, p_factor, q_factor)


def _random_prime_bits(bits: int, rng: RandomSource, budget: int) -> int:
    for _ in range(budget):
        candidate = rng.randbits(bits) | (1 << (bits - 1)) | 1
        if bigmath.is_prime(candidate, rng=rng):
            return candidate
    raise RandomnessExhausted(
        f"no {bits}-bit prime found in {budget} candidates")


def rsa_keygen(bits: int, rng: RandomSource, budget: Optional[int] = None) -> RsaKeyPair:
    """
    Generate a key pair whose modulus has about ``bits`` bits.

    Parameters
    ----------
    bits: int
        modulus size, at least 8
    rng: RandomSource
    budget: int
        candidates examined per prime, defaults to ``50 * bits``

    Returns
    -------
    :obj:`RsaKeyPair`
    """
    if bits < 8:
        raise ValueError(f"modulus of {bits} bits is too small")
    budget = 50 * bits if budget is None else budget
    p_bits = bits // 2
    q_bits = bits - p_bits
    p_factor = _random_prime_bits(p_bits, rng, budget)
    for _ in range(budget):
        q_factor = _random_prime_bits(q_bits, rng, budget)
        if q_factor != p_factor:
            break
    else:
        raise RandomnessExhausted("second prime kept equal to the first one")
    key = rsa_keypair_from_primes(p_factor, q_factor)
    LOGGER.info("RSA modulus of %d bits generated", key.n.bit_length())
    return key


def rsa_encrypt(key_public: Tuple[int, int], M: int) -> int:
    """ ``C = M^e mod n`` """
    n, e = key_public
    if not 0 <= M < n:
        raise MessageTooLarge(f"M = {M} is not in [0, {n})")
    return pow(M, e, n)


def rsa_decrypt(key: RsaKeyPair, C: int) -> int:
    """ ``M = C^d mod n`` """
    if not 0 <= C < key.n:
        raise CiphertextTooLarge(f"C = {C} is not in [0, {key.n})")
    return pow(C, key.d, key.n)


def rsa_sign_raw(key: RsaKeyPair, M: int) -> int:
    """ Private exponent first: ``S = M^d mod n`` """
    if not 0 <= M < key.n:
        raise MessageTooLarge(f"M = {M} is not in [0, {key.n})")
    return pow(M, key.d, key.n)


def rsa_verify_raw(key_public: Tuple[int, int], S: int) -> int:
    """ Recover the signed value ``S^e mod n`` """
    n, e = key_public
    if not 0 <= S < n:
        raise CiphertextTooLarge(f"S = {S} is not in [0, {n})")
    return pow(S, e, n)
