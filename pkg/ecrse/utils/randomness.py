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
Seeded randomness for arbitrary-precision integers.

Every operation that needs randomness takes a :class:`RandomSource`
supplied by the caller; nothing in the package keeps a global generator.
"""
from typing import List, Optional

import numpy as np

from ecrse.utils import config


class RandomSource:
    """
    Wrapper around :class:`numpy.random.Generator` drawing integers of any
    size.

    >>> rng = RandomSource.from_seed(1)
    >>> 2 <= rng.randrange(2, 989) < 989
    True
    """

    def __init__(self, seed_sequence: np.random.SeedSequence):
        self.seed_sequence = seed_sequence
        self.generator = np.random.Generator(np.random.PCG64(seed_sequence))

    @classmethod
    def from_seed(cls, seed: Optional[int] = None) -> "RandomSource":
        """
        Parameters
        ----------
        seed: int
            Master seed. If None, ``ECRSE_SEED`` is used, then OS entropy

        Returns
        -------
        :obj:`RandomSource`
        """
        if seed is None:
            seed = config.seed_from_environment()
        return cls(np.random.SeedSequence(seed))

    def spawn(self, n_children: int) -> List["RandomSource"]:
        """
        Independent child sources, deterministic given the parent seed.
        Children are derived from the seed sequence, not from the state of
        this generator, so lanes do not depend on what was drawn before.
        """
        return [RandomSource(child)
                for child in self.seed_sequence.spawn(n_children)]

    def randbits(self, k: int) -> int:
        if k <= 0:
            return 0
        n_bytes = (k + 7) // 8
        value = int.from_bytes(self.generator.bytes(n_bytes), "big")
        return value >> (8 * n_bytes - k)

    def randbelow(self, n: int) -> int:
        """ Uniform integer in [0, n) by rejection sampling """
        if n <= 0:
            raise ValueError(f"empty range, {n = }")
        k = n.bit_length()
        value = self.randbits(k)
        while value >= n:
            value = self.randbits(k)
        return value

    def randrange(self, low: int, high: int) -> int:
        """ Uniform integer in [low, high) """
        return low + self.randbelow(high - low)
