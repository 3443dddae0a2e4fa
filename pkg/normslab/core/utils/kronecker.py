"""Polynomial products over Z by Kronecker substitution.

Coefficients are packed into fixed-width byte slots of one big integer, the
integers are multiplied (CPython uses Karatsuba for large operands) and the
product is unpacked. Inputs must be non-negative.
"""

from typing import List, Sequence


def _slot_bytes(a: Sequence[int], b: Sequence[int]) -> int:
    bits = (
        max(x.bit_length() for x in a)
        + max(x.bit_length() for x in b)
        + min(len(a), len(b)).bit_length()
        + 1
    )
    return (bits + 7) // 8


def pack(coeffs: Sequence[int], width: int) -> int:
    return int.from_bytes(
        b"".join(c.to_bytes(width, "little") for c in coeffs), "little"
    )


def unpack(value: int, width: int, count: int) -> List[int]:
    raw = value.to_bytes(width * count, "little")
    return [
        int.from_bytes(raw[i * width : (i + 1) * width], "little") for i in range(count)
    ]


def poly_mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Coefficients of the product, low degree first."""
    if not a or not b:
        return []
    count = len(a) + len(b) - 1
    if len(a) == 1:
        return [a[0] * x for x in b]
    if len(b) == 1:
        return [b[0] * x for x in a]
    width = _slot_bytes(a, b)
    return unpack(pack(a, width) * pack(b, width), width, count)


def poly_sqr(a: Sequence[int]) -> List[int]:
    if len(a) <= 1:
        return [x * x for x in a]
    width = _slot_bytes(a, a)
    packed = pack(a, width)
    return unpack(packed * packed, width, 2 * len(a) - 1)


def taylor_shift(coeffs: Sequence[int], step: int = 1) -> List[int]:
    """Coefficients of P(x + step) from those of P(x)."""
    a = list(coeffs)
    n = len(a)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            a[j] += step * a[j + 1]
    return a
