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
EC-ElGamal over embedded points, and the hybrid EC-RSA-ElGamal system.

The receiver holds a secret scalar ``a1`` and publishes ``A = a1*P`` together
with the embedding modulus n. The sender embeds M into ``A0`` with the RSA
embedding, draws ``b1`` and sends ``(b1*P, A0 + b1*A, e)``. The receiver
removes ``a1*(b1*P)`` and inverts the embedding with ``d = e^-1 mod phi(n)``.

>>> curve = CurveParams(1009, 71, 602)
>>> base = BasePointInfo(ECPoint(1, 237), 530)
>>> keypair = hybrid_keygen(curve, base, 500, RandomSource.from_seed(1))
>>> ciphertext = hybrid_encrypt(keypair.public(), 439, b1=432)
>>> hybrid_decrypt(keypair, ciphertext)
439
"""
import logging
from dataclasses import dataclass
from typing import Optional

from ecrse import ec_group
from ecrse.ec_group import BasePointInfo, CurveParams, ECPoint
from ecrse.embedding import (DEFAULT_MAX_ATTEMPTS, AnyEmbedKey,
                             ExponentStrategy,
                             KoblitzParams, RsaEmbedKey, RsaEmbedPublicKey,
                             generate_embed_key, koblitz_embed,
                             koblitz_unembed, rsa_embed, rsa_unembed)
from ecrse.exceptions import InvalidCurve, NotOnCurve, ScalarOutOfRange
from ecrse.utils.randomness import RandomSource

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class ElGamalKeyPair:
    secret: int
    public_point: ECPoint
    curve: CurveParams
    base: BasePointInfo


@dataclass(frozen=True)
class ElGamalCiphertext:
    ephemeral: ECPoint
    masked: ECPoint


@dataclass(frozen=True)
class HybridPublicKey:
    curve: CurveParams
    base: BasePointInfo
    public_point: ECPoint
    n: int

    @property
    def embed_key(self) -> RsaEmbedPublicKey:
        return RsaEmbedPublicKey(self.n)


@dataclass(frozen=True)
class HybridKeyPair:
    secret: int
    public_point: ECPoint
    curve: CurveParams
    base: BasePointInfo
    embed_modulus: RsaEmbedKey

    def public(self) -> HybridPublicKey:
        return HybridPublicKey(self.curve, self.base, self.public_point,
                               self.embed_modulus.n)


@dataclass(frozen=True)
class HybridCiphertext:
    ephemeral: ECPoint
    masked: ECPoint
    exponent: int


def _check_scalar(scalar: int, base: BasePointInfo, name: str) -> None:
    if not 1 < scalar < base.order:
        raise ScalarOutOfRange(f"{name} = {scalar} is not in (1, {base.order})")


def _random_scalar(base: BasePointInfo, rng: RandomSource) -> int:
    return rng.randrange(2, base.order)


def _public_point(curve: CurveParams, base: BasePointInfo, secret: int) -> ECPoint:
    public_point = ec_group.scalar_mul(curve, secret, base.point)
    if public_point.is_infinity:
        raise InvalidCurve(f"{base.order} is not the order of {base.point}, "
                           f"{secret} * P is the point at infinity")
    return public_point


# ===========================================================================
#                           EC-ELGAMAL
# ===========================================================================
def elgamal_keygen(curve: CurveParams, base: BasePointInfo,
                   rng: RandomSource) -> ElGamalKeyPair:
    secret = _random_scalar(base, rng)
    return ElGamalKeyPair(secret, _public_point(curve, base, secret),
                          curve, base)


def elgamal_encrypt(curve: CurveParams, base: BasePointInfo,
                    recipient_public: ECPoint, plaintext_point: ECPoint,
                    b: int) -> ElGamalCiphertext:
    """
    Parameters
    ----------
    curve: CurveParams
    base: BasePointInfo
    recipient_public: ECPoint
        ``Q = a*P`` of the recipient
    plaintext_point: ECPoint
        embedded message
    b: int
        ephemeral scalar, ``1 < b < order``

    Returns
    -------
    :obj:`ElGamalCiphertext`
        ``(b*P, M + b*Q)``
    """
    _check_scalar(b, base, "b")
    if not ec_group.is_on_curve(curve, plaintext_point):
        raise NotOnCurve(f"plaintext {plaintext_point} is not on {curve}")
    ephemeral = ec_group.scalar_mul(curve, b, base.point)
    mask = ec_group.scalar_mul(curve, b, recipient_public)
    return ElGamalCiphertext(ephemeral, ec_group.add(curve, plaintext_point, mask))


def elgamal_decrypt(curve: CurveParams, secret: int,
                    ct: ElGamalCiphertext) -> ECPoint:
    """ ``masked - secret * ephemeral`` """
    shared = ec_group.scalar_mul(curve, secret, ct.ephemeral)
    if not ec_group.is_on_curve(curve, ct.masked):
        raise NotOnCurve(f"masked point {ct.masked} is not on {curve}")
    return ec_group.add(curve, ct.masked, ec_group.negate(curve, shared))


# ===========================================================================
#                           EC-RSA-ELGAMAL
# ===========================================================================
def hybrid_keygen(curve: CurveParams, base: BasePointInfo, M_bound: int,
                  rng: RandomSource) -> HybridKeyPair:
    """
    Parameters
    ----------
    curve: CurveParams
    base: BasePointInfo
        generator and its order
    M_bound: int
        largest message the key must accept, below p
    rng: RandomSource

    Returns
    -------
    :obj:`HybridKeyPair`
    """
    ec_group.check_curve(curve)
    if not ec_group.is_on_curve(curve, base.point):
        raise NotOnCurve(f"base point {base.point} is not on {curve}")
    if M_bound >= curve.p:
        raise ValueError(f"message bound {M_bound} is not below p = {curve.p}")
    secret = _random_scalar(base, rng)
    public_point = _public_point(curve, base, secret)
    embed_modulus = generate_embed_key(M_bound, curve.p, rng)
    LOGGER.info("hybrid key pair generated on %s, n = %d", curve, embed_modulus.n)
    return HybridKeyPair(secret, public_point, curve, base, embed_modulus)


def hybrid_encrypt(keypub: HybridPublicKey, M: int, b1: int,
                   e_strategy: Optional[ExponentStrategy] = None,
                   max_attempts: int = DEFAULT_MAX_ATTEMPTS,
                   mask_scalar: Optional[int] = None,
                   embed_key: Optional[AnyEmbedKey] = None) -> HybridCiphertext:
    """
    Embed M with the public modulus n and mask it with ``b1 * A``.

    Parameters
    ----------
    keypub: HybridPublicKey
    M: int
        message, ``1 < M < n``
    b1: int
        ephemeral scalar, ``1 < b1 < order``
    e_strategy: ExponentStrategy
        exponent policy of the embedding
    max_attempts: int
        exponents tried by the embedding
    mask_scalar: int
        replay only: mask with ``mask_scalar * P`` instead of ``b1 * A``
    embed_key: RsaEmbedKey
        embedding key used instead of the public modulus; a holder of
        phi(n) may use the full exponent range

    Returns
    -------
    :obj:`HybridCiphertext`
    """
    _check_scalar(b1, keypub.base, "b1")
    if embed_key is None:
        embed_key = keypub.embed_key
    embedded = rsa_embed(keypub.curve, embed_key, M,
                         e_strategy=e_strategy, max_attempts=max_attempts)
    ephemeral = ec_group.scalar_mul(keypub.curve, b1, keypub.base.point)
    if mask_scalar is None:
        mask = ec_group.scalar_mul(keypub.curve, b1, keypub.public_point)
    else:
        mask = ec_group.scalar_mul(keypub.curve, mask_scalar, keypub.base.point)
    masked = ec_group.add(keypub.curve, embedded.point, mask)
    return HybridCiphertext(ephemeral, masked, embedded.exponent_used)


def hybrid_unmask(keypair: HybridKeyPair, ct: HybridCiphertext) -> ECPoint:
    """ ``A0 = Q - a1 * R`` """
    curve = keypair.curve
    for point in (ct.ephemeral, ct.masked):
        if not ec_group.is_on_curve(curve, point):
            raise NotOnCurve(f"{point} is not on {curve}")
    shared = ec_group.scalar_mul(curve, keypair.secret, ct.ephemeral)
    return ec_group.add(curve, ct.masked, ec_group.negate(curve, shared))


def hybrid_decrypt(keypair: HybridKeyPair, ct: HybridCiphertext) -> int:
    """
    Remove the mask, then ``M = x0^d mod n`` with ``e*d = 1 (mod phi(n))``.
    """
    embedded = hybrid_unmask(keypair, ct)
    return rsa_unembed(keypair.embed_modulus, embedded, ct.exponent)


# ===========================================================================
#                           KOBLITZ BASELINE
# ===========================================================================
def koblitz_elgamal_encrypt(curve: CurveParams, base: BasePointInfo,
                            recipient_public: ECPoint, params: KoblitzParams,
                            M: int, b: int) -> ElGamalCiphertext:
    """ Classic pipeline: Koblitz embedding then EC-ElGamal """
    return elgamal_encrypt(curve, base, recipient_public,
                           koblitz_embed(curve, params, M), b)


def koblitz_elgamal_decrypt(keypair: ElGamalKeyPair, params: KoblitzParams,
                            ct: ElGamalCiphertext) -> int:
    point = elgamal_decrypt(keypair.curve, keypair.secret, ct)
    return koblitz_unembed(params, point)
