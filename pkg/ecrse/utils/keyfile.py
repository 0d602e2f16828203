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
# limitations under the License.#
"""
Text formats of keys and ciphertexts: ``key=value`` lines, decimal integers,
UTF-8 with LF line endings.

Public key::

    kind=hybrid-public
    p=1009
    a=71
    ...
    n=989

Ciphertext, one group per block, groups separated by a blank line::

    Rx=...
    Ry=...
    Qx=...
    Qy=...
    e=...
    len=...
"""
import hashlib
from typing import Dict, List, Tuple

from ecrse import ec_group
from ecrse.ec_group import BasePointInfo, CurveParams, ECPoint
from ecrse.elgamal import HybridCiphertext, HybridKeyPair, HybridPublicKey
from ecrse.embedding import RsaEmbedKey
from ecrse.exceptions import (InvalidCurve, MalformedCiphertextFile,
                              MalformedKeyFile)

PUBLIC_KIND = "hybrid-public"
PRIVATE_KIND = "hybrid-private"


class KeyFile:
    """
    Field definitions of the key files, ``{field: description}`` in file order
    """

    @classmethod
    def public_definition(cls) -> Dict[str, str]:
        return {"kind": "file kind, hybrid-public",
                "p": "prime of the field",
                "a": "curve coefficient a",
                "b": "curve coefficient b",
                "Px": "base point abscissa",
                "Py": "base point ordinate",
                "order": "order of the base point",
                "Ax": "public point abscissa",
                "Ay": "public point ordinate",
                "n": "embedding modulus"}

    @classmethod
    def private_definition(cls) -> Dict[str, str]:
        return {**cls.public_definition(),
                "kind": "file kind, hybrid-private",
                "secret": "secret scalar a1",
                "q": "first factor of n",
                "r": "second factor of n"}


class CiphertextFile:

    @classmethod
    def group_definition(cls) -> Dict[str, str]:
        return {"Rx": "ephemeral point abscissa",
                "Ry": "ephemeral point ordinate",
                "Qx": "masked point abscissa",
                "Qy": "masked point ordinate",
                "e": "embedding exponent",
                "len": "byte length of the block"}


def _render(values: Dict[str, object]) -> str:
    return "".join(f"{key}={value}\n" for key, value in values.items())


def _parse(text: str, definition: Dict[str, str], error: type) -> Dict[str, str]:
    values = {}
    for line in text.split("\n"):
        if line.strip() == "":
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise error(f"line {line!r} is not key=value")
        if key in values:
            raise error(f"duplicated field {key}")
        values[key] = value
    if set(values) != set(definition):
        missing = set(definition) - set(values)
        extra = set(values) - set(definition)
        raise error(f"missing fields {sorted(missing)}, unexpected {sorted(extra)}")
    return values


def _integers(values: Dict[str, str], error: type) -> Dict[str, int]:
    numbers = {}
    for key, value in values.items():
        if key == "kind":
            continue
        if not value.isdigit() or not value.isascii():
            raise error(f"{key}={value} is not a decimal integer")
        numbers[key] = int(value)
    return numbers


# ===========================================================================
#                           KEYS
# ===========================================================================
def _public_values(keypub: HybridPublicKey) -> Dict[str, object]:
    return {"kind": PUBLIC_KIND,
            "p": keypub.curve.p, "a": keypub.curve.a, "b": keypub.curve.b,
            "Px": keypub.base.point.x, "Py": keypub.base.point.y,
            "order": keypub.base.order,
            "Ax": keypub.public_point.x, "Ay": keypub.public_point.y,
            "n": keypub.n}


def dump_public(keypub: HybridPublicKey) -> str:
    return _render(_public_values(keypub))


def dump_private(keypair: HybridKeyPair) -> str:
    values = _public_values(keypair.public())
    values["kind"] = PRIVATE_KIND
    values["secret"] = keypair.secret
    values["q"] = keypair.embed_modulus.q
    values["r"] = keypair.embed_modulus.r
    return _render(values)


def _kind(text: str) -> str:
    for line in text.split("\n"):
        if line.startswith("kind="):
            return line[len("kind="):]
    raise MalformedKeyFile("no kind field")


def _curve_and_base(numbers: Dict[str, int]) -> Tuple[CurveParams, BasePointInfo, ECPoint]:
    curve = CurveParams(numbers["p"], numbers["a"], numbers["b"])
    try:
        ec_group.check_curve(curve)
    except InvalidCurve as error:
        raise MalformedKeyFile(str(error)) from error
    base = BasePointInfo(ECPoint(numbers["Px"], numbers["Py"]), numbers["order"])
    public_point = ECPoint(numbers["Ax"], numbers["Ay"])
    for point in (base.point, public_point):
        if not ec_group.is_on_curve(curve, point):
            raise MalformedKeyFile(f"{point} is not on {curve}")
    return curve, base, public_point


def load_public(text: str) -> HybridPublicKey:
    """
    Parameters
    ----------
    text: str
        content of a public key file

    Returns
    -------
    :obj:`HybridPublicKey`
    """
    if _kind(text) != PUBLIC_KIND:
        raise MalformedKeyFile(
            f"expected a {PUBLIC_KIND} key, got {_kind(text)}")
    numbers = _integers(_parse(text, KeyFile.public_definition(), MalformedKeyFile),
                        MalformedKeyFile)
    curve, base, public_point = _curve_and_base(numbers)
    if not numbers["n"] < curve.p:
        raise MalformedKeyFile(f"n = {numbers['n']} is not below p = {curve.p}")
    return HybridPublicKey(curve, base, public_point, numbers["n"])


def load_private(text: str) -> HybridKeyPair:
    if _kind(text) != PRIVATE_KIND:
        raise MalformedKeyFile(
            f"expected a {PRIVATE_KIND} key, got {_kind(text)}")
    numbers = _integers(_parse(text, KeyFile.private_definition(), MalformedKeyFile),
                        MalformedKeyFile)
    curve, base, public_point = _curve_and_base(numbers)
    if numbers["q"] * numbers["r"] != numbers["n"]:
        raise MalformedKeyFile("n is not the product of the factors q, r")
    try:
        embed_modulus = RsaEmbedKey(numbers["q"], numbers["r"])
    except ValueError as error:
        raise MalformedKeyFile(str(error)) from error
    if ec_group.scalar_mul(curve, numbers["secret"], base.point) != public_point:
        raise MalformedKeyFile("public point does not match the secret scalar")
    return HybridKeyPair(numbers["secret"], public_point, curve, base, embed_modulus)


def fingerprint(keypub: HybridPublicKey) -> str:
    """ Short digest of the public key file """
    return hashlib.sha256(dump_public(keypub).encode("utf-8")).hexdigest()[:16]


# ===========================================================================
#                           CIPHERTEXTS
# ===========================================================================
def dump_ciphertext(groups: List[Tuple[HybridCiphertext, int]]) -> str:
    """
    Parameters
    ----------
    groups: list of (HybridCiphertext, int)
        ciphertext of each block with the block byte length

    Returns
    -------
        file content
    """
    return "\n".join(
        _render({"Rx": ct.ephemeral.x, "Ry": ct.ephemeral.y,
                 "Qx": ct.masked.x, "Qy": ct.masked.y,
                 "e": ct.exponent, "len": byte_length})
        for ct, byte_length in groups)


def load_ciphertext(text: str) -> List[Tuple[HybridCiphertext, int]]:
    groups = []
    for chunk in text.split("\n\n"):
        if chunk.strip() == "":
            continue
        numbers = _integers(
            _parse(chunk, CiphertextFile.group_definition(), MalformedCiphertextFile),
            MalformedCiphertextFile)
        groups.append((HybridCiphertext(ECPoint(numbers["Rx"], numbers["Ry"]),
                                        ECPoint(numbers["Qx"], numbers["Qy"]),
                                        numbers["e"]),
                       numbers["len"]))
    return groups
