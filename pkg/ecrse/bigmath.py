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
Modular arithmetic on arbitrary-precision naturals: exponentiation,
inverses, primality and quadratic residues.

All functions are pure; Python integers carry the arbitrary precision.
"""
import logging
from typing import Optional, Tuple

from ecrse.exceptions import EvenModulus, NonResidue, NotCoprime, ZeroModulus

LOGGER = logging.getLogger(__name__)

DEFAULT_ROUNDS = 40

# first twelve primes: deterministic Miller-Rabin below 3.3e24
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = _WITNESSES + (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """
    Parameters
    ----------
    base: int
    exp: int
        non-negative exponent
    modulus: int
        at least 2

    Returns
    -------
        ``base ** exp mod modulus``
    """
    if modulus < 2:
        raise ZeroModulus(f"modulus must be at least 2, got {modulus}")
    if exp < 0:
        raise ValueError(f"negative exponent {exp}")
    return pow(base, exp, modulus)


def gcd(a: int, b: int) -> int:
    """ Greatest common divisor, ``gcd(0, 0) = 0`` """
    while b:
        a, b = b, a % b
    return a


def extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """
    Extended Euclid.

    Returns
    -------
        (g, u, v) with ``a*u + b*v = g = gcd(a, b)``
    """
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_u, u = u, old_u - quotient * u
        old_v, v = v, old_v - quotient * v
    return old_r, old_u, old_v


def mod_inverse(a: int, modulus: int) -> int:
    """
    Inverse of ``a`` modulo ``modulus`` by the extended Euclidean algorithm.

    Returns
    -------
        d with ``a*d = 1 (mod modulus)`` and ``0 < d < modulus``
    """
    if modulus < 2:
        raise ZeroModulus(f"modulus must be at least 2, got {modulus}")
    g, u, _ = extended_gcd(a % modulus, modulus)
    if g != 1:
        raise NotCoprime(f"gcd({a}, {modulus}) = {g}, no inverse")
    return u % modulus


def is_prime(n: int, rounds: int = DEFAULT_ROUNDS,
             rng: Optional["RandomSource"] = None) -> bool:
    """
    Miller-Rabin primality test.

    Below 2**64 the fixed witness set makes the verdict exact; above, ``rounds``
    random bases are drawn, from ``rng`` if given and otherwise from a source
    seeded by ``n`` itself so the verdict stays a function of the input.

    Parameters
    ----------
    n: int
    rounds: int
        number of random witnesses for ``n >= 2**64``
    rng: RandomSource
        optional source of the random witnesses

    Returns
    -------
        bool
    """
    if n < 2:
        return False
    for prime in _SMALL_PRIMES:
        if n % prime == 0:
            return n == prime

    exponent, remainder = 0, n - 1
    while remainder & 1 == 0:
        remainder >>= 1
        exponent += 1

    if n < 1 << 64:
        witnesses = _WITNESSES
    else:
        if rng is None:
            from ecrse.utils.randomness import RandomSource
            rng = RandomSource.from_seed(n)
        witnesses = [rng.randrange(2, n - 1) for _ in range(rounds)]

    return not any(_is_witness(w, n, exponent, remainder) for w in witnesses)


def _is_witness(witness: int, n: int, exponent: int, remainder: int) -> bool:
    x = pow(witness, remainder, n)
    if x in (1, n - 1):
        return False
    for _ in range(exponent - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def legendre(a: int, p: int) -> int:
    """ Legendre symbol by Euler's criterion: 1, -1 or 0 """
    value = pow(a, (p - 1) // 2, p)
    return -1 if value == p - 1 else value


def is_quadratic_residue(a: int, p: int) -> bool:
    """
    Euler's criterion ``a^((p-1)/2) = 1 (mod p)``.

    Zero is not a residue here (``0^((p-1)/2) = 0``) although
    :func:`mod_sqrt` accepts it.

    Parameters
    ----------
    a: int
    p: int
        odd prime

    Returns
    -------
        bool
    """
    if p == 2:
        raise EvenModulus("quadratic residuosity is only defined for odd p")
    return pow(a % p, (p - 1) // 2, p) == 1


def mod_sqrt(a: int, p: int) -> Tuple[int, int]:
    """
    Square roots modulo an odd prime by Tonelli-Shanks.

    Parameters
    ----------
    a: int
        residue, or zero
    p: int
        odd prime

    Returns
    -------
        (y, p - y) with ``y <= p - y``; ``(0, 0)`` for ``a = 0``
    """
    a %= p
    if a == 0:
        return 0, 0
    if not is_quadratic_residue(a, p):
        raise NonResidue(f"{a} is not a square modulo {p}")

    if p % 4 == 3:
        root = pow(a, (p + 1) // 4, p)
    else:
        root = _tonelli_shanks(a, p)

    root = min(root, p - root)
    return root, p - root


def _tonelli_shanks(a: int, p: int) -> int:
    # p - 1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q & 1 == 0:
        q >>= 1
        s += 1

    z = 2
    while is_quadratic_residue(z, p):
        z += 1

    m = s
    c = pow(z, q, p)
    t = pow(a, q, p)
    r = pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m = i
        c = b * b % p
        t = t * c % p
        r = r * b % p
    return r
