"""
Canonical byte encoding of integer tuples.

Each integer is written as a sign byte (0 or 1), a 4-byte big-endian length
and the minimal big-endian magnitude (zero has an empty magnitude and sign 0).
The encoding is injective and every integer tuple has exactly one encoding.
"""

from typing import Sequence, Tuple

from ..errors import ContractViolationError

_LENGTH_BYTES = 4


def encode_ints(values: Sequence[int]) -> bytes:
    parts = []
    for value in values:
        magnitude = abs(value)
        body = magnitude.to_bytes((magnitude.bit_length() + 7) // 8, "big")
        parts.append(
            (b"\x01" if value < 0 else b"\x00")
            + len(body).to_bytes(_LENGTH_BYTES, "big")
            + body
        )
    return b"".join(parts)


def decode_ints(data: bytes) -> Tuple[int, ...]:
    values = []
    offset = 0
    while offset < len(data):
        header_end = offset + 1 + _LENGTH_BYTES
        if header_end > len(data):
            raise ContractViolationError("truncated integer header")
        sign = data[offset]
        if sign not in (0, 1):
            raise ContractViolationError(f"invalid sign byte {sign}")
        length = int.from_bytes(data[offset + 1 : header_end], "big")
        body = data[header_end : header_end + length]
        if len(body) != length:
            raise ContractViolationError("truncated integer body")
        if length and body[0] == 0:
            raise ContractViolationError("non-minimal integer encoding")
        magnitude = int.from_bytes(body, "big")
        if sign and not magnitude:
            raise ContractViolationError("negative zero is not canonical")
        values.append(-magnitude if sign else magnitude)
        offset = header_end + length
    return tuple(values)
