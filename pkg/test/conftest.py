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
from ecrse.ec_group import BasePointInfo, CurveParams, ECPoint
from ecrse.elgamal import HybridKeyPair
from ecrse.embedding import RsaEmbedKey
from ecrse.utils.randomness import RandomSource


@pytest.fixture(scope="module")
def example_curve():
    return CurveParams(1009, 71, 602)


@pytest.fixture(scope="module")
def example_base():
    return BasePointInfo(ECPoint(1, 237), 530)


@pytest.fixture(scope="module")
def example_key():
    return RsaEmbedKey(23, 43)


@pytest.fixture(scope="module")
def example_keypair(example_curve, example_base, example_key):
    secret = 17
    return HybridKeyPair(secret,
                         ec_group.scalar_mul(example_curve, secret, example_base.point),
                         example_curve, example_base, example_key)


@pytest.fixture
def rng():
    return RandomSource.from_seed(20240101)


@pytest.fixture(scope="module")
def desk_curve():
    """ Random curve with a base point of large order, p below 10^6 """
    source = RandomSource.from_seed(7)
    curve = ec_group.random_curve(999983, source)
    return curve, ec_group.find_base_point(curve, source, min_order=10 ** 5)
