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
Errors raised by the library. Every class carries the ``exit_code`` the
command line returns when the error escapes a command.
"""


class EcrseError(Exception):
    exit_code = 2


# ===========================================================================
#                           ARITHMETIC
# ===========================================================================
class ZeroModulus(EcrseError, ValueError):
    """ Modulus smaller than 2 """


class NotCoprime(EcrseError, ArithmeticError):
    """ No inverse exists, gcd(a, modulus) != 1 """
    exit_code = 7


class EvenModulus(EcrseError, ValueError):
    """ Quadratic residuosity asked modulo 2 """


class NonResidue(EcrseError, ArithmeticError):
    """ Square root asked for a quadratic nonresidue """


# ===========================================================================
#                           CURVE
# ===========================================================================
class InvalidCurve(EcrseError, ValueError):
    pass


class NotOnCurve(EcrseError, ValueError):
    exit_code = 6


class CurveTooLarge(EcrseError, ValueError):
    """ Prime beyond the enumeration guard of brute force routines """


class PointAtInfinity(EcrseError, ValueError):
    pass


class ScalarOutOfRange(EcrseError, ValueError):
    pass


# ===========================================================================
#                           EMBEDDING / RSA
# ===========================================================================
class MessageTooLarge(EcrseError, ValueError):
    exit_code = 4


class ModulusTooLarge(EcrseError, ValueError):
    exit_code = 4


class DegenerateMessage(EcrseError, ValueError):
    """ M in {0, 1} is a fixed point of every exponent """
    exit_code = 4


class NoEmbeddingFound(EcrseError, RuntimeError):
    exit_code = 4

    def __init__(self, message: str, attempts: int = 0):
        super().__init__(message)
        self.attempts = attempts


class XOutOfRange(EcrseError, ValueError):
    """ Abscissa not below the embedding modulus: foreign or corrupted point """
    exit_code = 7


class CiphertextTooLarge(EcrseError, ValueError):
    pass


class NoSuitableModulus(EcrseError, RuntimeError):
    exit_code = 3


class RandomnessExhausted(EcrseError, RuntimeError):
    exit_code = 3


# ===========================================================================
#                           CODEC / FILES
# ===========================================================================
class BoundTooSmall(EcrseError, ValueError):
    pass


class MalformedBlock(EcrseError, ValueError):
    exit_code = 7


class InvalidUtf8(EcrseError, ValueError):
    exit_code = 7


class EmptyMessage(EcrseError, ValueError):
    exit_code = 5


class MalformedKeyFile(EcrseError, ValueError):
    pass


class MalformedCiphertextFile(EcrseError, ValueError):
    pass


class ConfigurationError(EcrseError, ValueError):
    pass
