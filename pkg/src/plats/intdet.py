"""Exact determinants of integer matrices.

Two independent routes: fraction-free Bareiss elimination over Python
integers (the reference), and a fast path that reduces modulo 31-bit
primes, eliminates with numpy int64 arithmetic, and reconstructs the
value by the Chinese remainder theorem against a Hadamard bound.
Products stay below 2^62, so the vectorized arithmetic never overflows.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

_PRIMES = (
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549,
    2147483543, 2147483497, 2147483489, 2147483477, 2147483423, 2147483399,
    2147483353, 2147483323, 2147483269, 2147483249, 2147483237, 2147483179,
    2147483171, 2147483137, 2147483123, 2147483077, 2147483069, 2147483059,
    2147483053, 2147483033, 2147483029, 2147482951, 2147482949, 2147482943,
    2147482937, 2147482921, 2147482877, 2147482873, 2147482867, 2147482859,
    2147482819, 2147482817, 2147482811, 2147482801, 2147482763, 2147482739,
    2147482697, 2147482693, 2147482681, 2147482663, 2147482661, 2147482621,
)


def bareiss_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free elimination; every division in the loop is exact."""
    a = [[int(x) for x in row] for row in rows]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot_row = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if pivot_row is None:
                return 0
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def _hadamard_bits(rows: Sequence[Sequence[int]]) -> int:
    bits = 1
    for row in rows:
        s = sum(x * x for x in row)
        if s == 0:
            return 1
        bits += (s.bit_length() + 1) // 2
    return bits


def _det_mod(rows: Sequence[Sequence[int]], p: int) -> int:
    a = np.array([[x % p for x in row] for row in rows], dtype=np.int64)
    n = a.shape[0]
    det = 1
    for col in range(n):
        nonzero = np.nonzero(a[col:, col])[0]
        if nonzero.size == 0:
            return 0
        pivot_row = col + int(nonzero[0])
        if pivot_row != col:
            a[[col, pivot_row]] = a[[pivot_row, col]]
            det = -det
        pivot = int(a[col, col])
        det = det * pivot % p
        inv = pow(pivot, -1, p)
        a[col, col:] = a[col, col:] * inv % p
        if col + 1 < n:
            factors = a[col + 1 :, col].copy()
            a[col + 1 :, col:] = (a[col + 1 :, col:] - np.outer(factors, a[col, col:])) % p
    return det % p


def determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant via CRT over 31-bit primes."""
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    if n <= 4:
        return bareiss_determinant(rows)
    bits = _hadamard_bits(rows)
    needed = bits // 30 + 2
    if needed > len(_PRIMES):
        # matrices beyond ~1400 bits of determinant are out of scope for
        # the fast path; fall back to the exact reference
        return bareiss_determinant(rows)
    value = 0
    modulus = 1
    for p in _PRIMES[:needed]:
        residue = _det_mod(rows, p)
        correction = (residue - value) * pow(modulus % p, -1, p) % p
        value += modulus * correction
        modulus *= p
    if value > modulus // 2:
        value -= modulus
    return value
