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
Named checks of known intermediate values, run in insertion order.

>>> registry = Checkpoints()
>>> registry.add("n", lambda: 23 * 43, 989)
>>> registry.run()
True
"""
import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Tuple

from termcolor import cprint

from ecrse import bigmath, ec_group
from ecrse.ec_group import CurveParams, ECPoint
from ecrse.embedding import AscendingExponents, RsaEmbedKey, rsa_embed, rsa_unembed
from ecrse.exceptions import EcrseError
from ecrse.misc import execution

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckpointResult:
    name: str
    expected: Any
    obtained: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.obtained


class Checkpoints:

    def __init__(self):
        self.checkpoints: Dict[str, Tuple[Callable[[], Any], Any]] = {}
        self.results: List[CheckpointResult] = []

    def add(self, name: str, compute: Callable[[], Any], expected: Any):
        self.checkpoints = {**self.checkpoints, name: (compute, expected)}

    def __len__(self):
        return len(self.checkpoints)

    def run(self, verbose: bool = False) -> bool:
        """
        Evaluate every checkpoint; a computation that raises counts as failed.

        Parameters
        ----------
        verbose: bool
            print one PASS/FAIL line per checkpoint

        Returns
        -------
            True when every checkpoint holds
        """
        self.results = []
        for name, (compute, expected) in self.checkpoints.items():
            try:
                obtained = compute()
            except EcrseError as error:
                obtained = f"{type(error).__name__}: {error}"
            result = CheckpointResult(name, expected, obtained)
            self.results.append(result)
            if verbose:
                _report(result)
            if not result.passed:
                LOGGER.warning("checkpoint %s: expected %s, got %s",
                               name, expected, obtained)
        return all(result.passed for result in self.results)


def _report(result: CheckpointResult) -> None:
    if result.passed:
        cprint(" PASS ", "white", "on_green", end=" ")
    else:
        cprint(" FAIL ", "white", "on_red", end=" ")
    execution.print_(f"{result.name:<28} {result.obtained}"
                     + ("" if result.passed else f" (expected {result.expected})"))


# ===========================================================================
#                           WORKED EXAMPLE
# ===========================================================================
EXAMPLE_CURVE = CurveParams(1009, 71, 602)
EXAMPLE_BASE = ECPoint(1, 237)
EXAMPLE_KEY = RsaEmbedKey(23, 43)
EXAMPLE_MESSAGE = 439
EXAMPLE_MASK_SCALAR = 281


def demo_checkpoints() -> Checkpoints:
    """
    Every intermediate value of the worked example: the RSA embedding of
    439 on ``y^2 = x^3 + 71x + 602 (mod 1009)`` with ``n = 23*43``, then its
    masking with ``281*P`` and the unmasking.
    """
    curve, key, M = EXAMPLE_CURVE, EXAMPLE_KEY, EXAMPLE_MESSAGE
    values = {}

    def embedded():
        if "embedding" not in values:
            values["embedding"] = rsa_embed(curve, key, M, AscendingExponents())
        return values["embedding"]

    def mask():
        return ec_group.scalar_mul(curve, EXAMPLE_MASK_SCALAR, EXAMPLE_BASE)

    def masked():
        return ec_group.add(curve, embedded().point, mask())

    def unmasked():
        return ec_group.add(curve, masked(), ec_group.negate(curve, mask()))

    registry = Checkpoints()
    registry.add("n = q*r", lambda: key.n, 989)
    registry.add("phi(n)", lambda: key.phi, 924)
    registry.add("exponent e", lambda: embedded().exponent_used, 5)
    registry.add("x = M^e mod n", lambda: pow(M, embedded().exponent_used, key.n), 354)
    registry.add("embedded point", lambda: embedded().point, ECPoint(354, 88))
    registry.add("d = e^-1 mod phi(n)",
                 lambda: bigmath.mod_inverse(embedded().exponent_used, key.phi), 185)
    registry.add("x^d mod n",
                 lambda: rsa_unembed(key, embedded().point, embedded().exponent_used),
                 M)
    registry.add("mask 281*P", mask, ECPoint(984, 175))
    registry.add("masked point Q", masked, ECPoint(926, 227))
    registry.add("-281*P", lambda: ec_group.negate(curve, mask()), ECPoint(984, 834))
    registry.add("unmasked point A0", unmasked, ECPoint(354, 88))
    registry.add("recovered message",
                 lambda: rsa_unembed(key, unmasked(), embedded().exponent_used), M)
    return registry
