"""GF(2) linear algebra on bit matrices.

A matrix is a list of rows; each row is a Python int whose bit j is the
entry in column j.  Widths are passed explicitly because leading zero
columns are invisible in the int encoding.
"""

from __future__ import annotations


def parity(word: int) -> int:
    return word.bit_count() & 1


def rank(rows: list[int]) -> int:
    r = 0
    basis = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            r += 1
    return r


def rref(rows: list[int], width: int) -> tuple[list[int], list[int]]:
    """Reduced row-echelon form.

    Returns (pivot_columns, reduced_rows); reduced_rows contains only the
    nonzero rows, ordered by ascending pivot column (column j = bit j).
    """
    work = [r for r in rows if r]
    pivots = []
    out = []
    for col in range(width):
        mask = 1 << col
        hit = None
        for i, r in enumerate(work):
            if r & mask:
                hit = i
                break
        if hit is None:
            continue
        piv = work.pop(hit)
        work = [r ^ piv if r & mask else r for r in work]
        out = [r ^ piv if r & mask else r for r in out]
        out.append(piv)
        pivots.append(col)
        if not work:
            break
    return pivots, out


def kernel(rows: list[int], width: int) -> list[int]:
    """Basis of {v : v . row = 0 for every row}, as bit words of length width."""
    pivots, red = rref(rows, width)
    pivot_set = set(pivots)
    free = [c for c in range(width) if c not in pivot_set]
    out = []
    for f in free:
        v = 1 << f
        for p, row in zip(pivots, red):
            if row & (1 << f):
                v |= 1 << p
        out.append(v)
    return out


def invert(rows: list[int], size: int) -> list[int]:
    """Inverse of a square bit matrix; raises ValueError if singular."""
    work = list(rows)
    aug = [1 << i for i in range(size)]
    for col in range(size):
        mask = 1 << col
        hit = None
        for i in range(col, size):
            if work[i] & mask:
                hit = i
                break
        if hit is None:
            raise ValueError("matrix is singular over GF(2)")
        work[col], work[hit] = work[hit], work[col]
        aug[col], aug[hit] = aug[hit], aug[col]
        for i in range(size):
            if i != col and work[i] & mask:
                work[i] ^= work[col]
                aug[i] ^= aug[col]
    return aug


def mat_vec(rows: list[int], v: int) -> int:
    """Matrix-vector product: result bit i = parity(rows[i] & v)."""
    out = 0
    for i, r in enumerate(rows):
        out |= parity(r & v) << i
    return out


def transpose(rows: list[int], width: int) -> list[int]:
    out = [0] * width
    for i, r in enumerate(rows):
        while r:
            j = (r & -r).bit_length() - 1
            out[j] |= 1 << i
            r &= r - 1
    return out


def from_bits(matrix) -> tuple[list[int], int]:
    """Pack an iterable of 0/1 rows into bit words; returns (rows, width)."""
    packed = []
    width = None
    for row in matrix:
        bits = list(row)
        if width is None:
            width = len(bits)
        elif len(bits) != width:
            raise ValueError("ragged matrix")
        word = 0
        for j, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError(f"matrix entry {b!r} is not a bit")
            word |= b << j
        packed.append(word)
    if width is None:
        raise ValueError("empty matrix")
    return packed, width


def to_bits(rows: list[int], width: int) -> list[list[int]]:
    return [[(r >> j) & 1 for j in range(width)] for r in rows]
