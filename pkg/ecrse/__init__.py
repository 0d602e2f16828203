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
from .ec_group import BasePointInfo, CurveParams, ECPoint
from .elgamal import (HybridCiphertext, HybridKeyPair, HybridPublicKey,
                      hybrid_decrypt, hybrid_encrypt, hybrid_keygen)
from .embedding import (KoblitzParams, RsaEmbedKey, RsaEmbedPublicKey,
                        koblitz_embed, koblitz_unembed, rsa_embed, rsa_unembed)
from .exceptions import EcrseError
from .utils.randomness import RandomSource
