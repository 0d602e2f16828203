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
Text to integer blocks and back.

UTF-8 bytes are cut in chunks of L bytes, each read big-endian and shifted by
+2 so that no block is 0 or 1, the two fixed points of the RSA embedding.
"""
from dataclasses import dataclass
from typing import List, Sequence

from ecrse.exceptions import BoundTooSmall, InvalidUtf8, MalformedBlock

OFFSET = 2
MIN_BOUND = 256 + OFFSET + 1


@dataclass(frozen=True)
class MessageBlock:
    value: int
    byte_length: int


def chunk_size(bound: int) -> int:
    """ Largest L with ``256^L + 2 <= bound`` """
    if bound < MIN_BOUND:
        raise BoundTooSmall(f"bound {bound} leaves no room for one byte")
    size = 1
    while 256 ** (size + 1) + OFFSET <= bound:
        size += 1
    return size


def text_to_blocks(text: str, bound: int) -> List[MessageBlock]:
    """
    Parameters
    ----------
    text: str
    bound: int
        every block value stays strictly below it, at least 259

    Returns
    -------
        list of :obj:`MessageBlock`
    """
    size = chunk_size(bound)
    data = text.encode("utf-8")
    return [MessageBlock(int.from_bytes(data[i:i + size], "big") + OFFSET,
                         len(data[i:i + size]))
            for i in range(0, len(data), size)]


def blocks_to_text(blocks: Sequence[MessageBlock]) -> str:
    data = bytearray()
    for block in blocks:
        raw = block.value - OFFSET
        if block.byte_length < 1 or not 0 <= raw < 256 ** block.byte_length:
            raise MalformedBlock(
                f"block {block.value} does not hold {block.byte_length} bytes")
        data += raw.to_bytes(block.byte_length, "big")
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as error:
        raise InvalidUtf8(f"decoded bytes are not UTF-8: {error}") from error
