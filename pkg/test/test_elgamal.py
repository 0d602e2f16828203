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

from ecrse import ec_group
from ecrse.ec_group import INFINITY, BasePointInfo, ECPoint
from ecrse.elgamal import (ElGamalCiphertext, HybridCiphertext,
                           elgamal_decrypt, elgamal_encrypt, elgamal_keygen,
                           hybrid_decrypt, hybrid_encrypt, hybrid_keygen,
                           hybrid_unmask, koblitz_elgamal_decrypt,
                           koblitz_elgamal_encrypt)
from ecrse.embedding import KoblitzParams, public_exponent_window, rsa_unembed
from ecrse.exceptions import (InvalidCurve, NoEmbeddingFound, NotOnCurve,
                              ScalarOutOfRange)
from ecrse.utils.randomness import RandomSource


def test_elgamal_decrypt_known_mask(example_curve):
    ct = ElGamalCiphertext(ECPoint(984, 175), ECPoint(926, 227))
    assert elgamal_decrypt(example_curve, 1, ct) == ECPoint(354, 88)


def test_hybrid_encrypt_replay(example_curve, example_keypair, example_key):
    ct = hybrid_encrypt(example_keypair.public(), 439, b1=432, mask_scalar=281,
                        embed_key=example_key)
    assert ct.masked == ECPoint(926, 227)
    assert ct.exponent == 5
    assert ct.ephemeral == ec_group.scalar_mul(example_curve, 432, ECPoint(1, 237))
    mask = ec_group.scalar_mul(example_curve, 281, ECPoint(1, 237))
    unmasked = ec_group.add(example_curve, ct.masked, ec_group.negate(example_curve, mask))
    assert unmasked == ECPoint(354, 88)
    assert rsa_unembed(example_key, unmasked, ct.exponent) == 439


def test_hybrid_roundtrip_example_key(example_keypair, rng):
    keypub = example_keypair.public()
    for M in range(2, 989):
        b1 = rng.randrange(2, 530)
        try:
            ct = hybrid_encrypt(keypub, M, b1)
        except NoEmbeddingFound:
            continue
        if ct.masked.is_infinity:
            continue
        assert ct.exponent in public_exponent_window(989)
        assert hybrid_decrypt(example_keypair, ct) == M


@pytest.mark.slow
def test_hybrid_roundtrip_seeded_keypairs(desk_curve):
    curve, base = desk_curve
    failures = 0
    for seed in range(20):
        rng = RandomSource.from_seed(seed)
        keypair = hybrid_keygen(curve, base, curve.p // 2, rng)
        for _ in range(25):
            M = rng.randrange(2, keypair.embed_modulus.n)
            ct = hybrid_encrypt(keypair.public(), M, rng.randrange(2, base.order))
            if hybrid_decrypt(keypair, ct) != M:
                failures += 1
    assert failures == 0


def test_hybrid_keygen(example_curve, example_base, rng):
    keypair = hybrid_keygen(example_curve, example_base, 500, rng)
    assert 500 < keypair.embed_modulus.n < 1009
    assert 1 < keypair.secret < 530
    assert ec_group.scalar_mul(example_curve, keypair.secret,
                               example_base.point) == keypair.public_point


def test_hybrid_keygen_bound_too_large(example_curve, example_base, rng):
    with pytest.raises(ValueError):
        hybrid_keygen(example_curve, example_base, 1009, rng)


def test_hybrid_encrypt_scalar_out_of_range(example_keypair):
    for b1 in (0, 1, 530):
        with pytest.raises(ScalarOutOfRange):
            hybrid_encrypt(example_keypair.public(), 439, b1)


def test_hybrid_unmask_off_curve(example_keypair):
    ct = HybridCiphertext(ECPoint(1, 237), ECPoint(926, 228), 5)
    with pytest.raises(NotOnCurve):
        hybrid_unmask(example_keypair, ct)


def test_elgamal_roundtrip(example_curve, example_base, rng):
    valid = [x for x in range(example_curve.p)
             if ec_group.valid_x_table(example_curve)[x]]
    for _ in range(500):
        keypair = elgamal_keygen(example_curve, example_base, rng)
        point = ec_group.lift_x(example_curve, valid[rng.randbelow(len(valid))])
        ct = elgamal_encrypt(example_curve, example_base, keypair.public_point, point,
                             rng.randrange(2, example_base.order))
        assert elgamal_decrypt(example_curve, keypair.secret, ct) == point


def test_elgamal_encrypt_point_at_infinity(example_curve, example_base, example_keypair):
    ct = elgamal_encrypt(example_curve, example_base, example_keypair.public_point,
                         INFINITY, 432)
    assert elgamal_decrypt(example_curve, example_keypair.secret, ct) == INFINITY


def test_elgamal_encrypt_off_curve(example_curve, example_base, example_keypair):
    with pytest.raises(NotOnCurve):
        elgamal_encrypt(example_curve, example_base, example_keypair.public_point,
                        ECPoint(1, 238), 432)


def test_koblitz_elgamal_roundtrip(example_curve, example_base, rng):
    keypair = elgamal_keygen(example_curve, example_base, rng)
    params = KoblitzParams(20)
    for M in range(params.capacity(example_curve.p) + 1):
        try:
            ct = koblitz_elgamal_encrypt(example_curve, example_base, keypair.public_point,
                                         params, M, rng.randrange(2, example_base.order))
        except NoEmbeddingFound:
            continue
        assert koblitz_elgamal_decrypt(keypair, params, ct) == M


def test_elgamal_mask_consistency(example_curve, example_base, rng):
    P = example_base.point
    for _ in range(200):
        a1 = rng.randrange(2, example_base.order)
        b1 = rng.randrange(2, example_base.order)
        A = ec_group.scalar_mul(example_curve, a1, P)
        assert ec_group.scalar_mul(example_curve, b1, A) == \
            ec_group.scalar_mul(example_curve, a1, ec_group.scalar_mul(example_curve, b1, P))


def test_keygen_multiple_of_order(example_curve):
    # seed 16 draws the secret 530, the true order of (1, 237)
    base = BasePointInfo(ECPoint(1, 237), 1060)
    with pytest.raises(InvalidCurve):
        elgamal_keygen(example_curve, base, RandomSource.from_seed(16))
    with pytest.raises(InvalidCurve):
        hybrid_keygen(example_curve, base, 500, RandomSource.from_seed(16))
