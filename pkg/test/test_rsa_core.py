# Copyright 2024 Eurobios
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.
import pytest

from ecrse import bigmath
from ecrse.exceptions import (CiphertextTooLarge, MessageTooLarge,
                              RandomnessExhausted)
from ecrse.rsa_core import (choose_public_exponent, rsa_decrypt, rsa_encrypt,
                            rsa_keygen, rsa_keypair_from_primes, rsa_sign_raw,
                            rsa_verify_raw)
from ecrse.utils.randomness import RandomSource


@pytest.fixture(scope="module")
def example_rsa():
    return rsa_keypair_from_primes(23, 43)


def test_rsa_keypair_from_primes_known_key(example_rsa):
    assert example_rsa.n == 989
    assert example_rsa.phi == 924
    assert example_rsa.e == 5
    assert example_rsa.d == 185


def test_rsa_keypair_from_primes_distinct():
    with pytest.raises(ValueError):
        rsa_keypair_from_primes(23, 23)


def test_choose_public_exponent_prefers_65537():
    assert choose_public_exponent(10 ** 6) == 65537
    assert choose_public_exponent(924) == 5


def test_rsa_encrypt_known_value(example_rsa):
    assert rsa_encrypt(example_rsa.public, 439) == 354
    assert rsa_decrypt(example_rsa, 354) == 439


def test_rsa_roundtrip_exhaustive(example_rsa):
    # includes messages sharing a factor with n
    for M in range(example_rsa.n):
        assert rsa_decrypt(example_rsa, rsa_encrypt(example_rsa.public, M)) == M


def test_rsa_sign_raw_exhaustive(example_rsa):
    for M in range(example_rsa.n):
        assert rsa_verify_raw(example_rsa.public, rsa_sign_raw(example_rsa, M)) == M


def test_rsa_encrypt_too_large(example_rsa):
    with pytest.raises(MessageTooLarge):
        rsa_encrypt(example_rsa.public, 989)
    with pytest.raises(CiphertextTooLarge):
        rsa_decrypt(example_rsa, 989)


@pytest.mark.slow
def test_rsa_keygen_roundtrip():
    rng = RandomSource.from_seed(11)
    for _ in range(10):
        key = rsa_keygen(32, rng)
        assert bigmath.is_prime(key.p_factor) and bigmath.is_prime(key.q_factor)
        assert key.p_factor != key.q_factor
        assert key.e * key.d % key.phi == 1
        for _ in range(100):
            M = rng.randbelow(key.n)
            assert rsa_decrypt(key, rsa_encrypt(key.public, M)) == M


def test_rsa_keygen_reproducible():
    first = rsa_keygen(64, RandomSource.from_seed(5))
    second = rsa_keygen(64, RandomSource.from_seed(5))
    assert first == second


def test_rsa_keygen_too_small(rng):
    with pytest.raises(ValueError):
        rsa_keygen(4, rng)


def test_rsa_keygen_exhausted(rng):
    with pytest.raises(RandomnessExhausted):
        rsa_keygen(512, rng, budget=0)
