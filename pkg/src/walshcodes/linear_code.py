"""Binary linear codes with exact weight-distribution machinery.

A code keeps the generator rows it was built from verbatim (they may be
dependent or zero); its dimension k is always the derived GF(2) rank.  Each
row is an int whose bit j is coordinate j.  Enumeration walks the 2^k
codewords spanned by the reduced row-echelon basis in Gray-code order, and
is the oracle the transform-based weight computations are checked against.
"""

from __future__ import annotations

from math import comb

from . import bitmat

ENUMERATION_LIMIT = 24  # largest rank brute-force enumeration will accept


class BinaryCode:
    """An [n, k] linear code over GF(2), presented by a spanning set of rows."""

    def __init__(self, rows, n: int):
        rows = tuple(int(r) for r in rows)
        if n < 1:
            raise ValueError("code length must be positive")
        for r in rows:
            if r < 0 or r >> n:
                raise ValueError(f"generator row {r:#x} does not fit in {n} columns")
        self.rows = rows
        self.n = n
        pivots, reduced = bitmat.rref(rows, n)
        self._pivots = tuple(pivots)
        self._basis = tuple(reduced)
        self.k = len(self._basis)
        self._weights = None

    # -- construction ----------------------------------------------------

    @staticmethod
    def from_rows(matrix) -> "BinaryCode":
        """Build from rows given as 0/1 strings or iterables of 0/1 ints."""
        rows = []
        n = None
        for raw in matrix:
            if isinstance(raw, str):
                raw = raw.strip()
                if any(c not in "01" for c in raw):
                    raise ValueError(f"row {raw!r} contains characters other than 0/1")
                bits = [int(c) for c in raw]
            else:
                bits = [int(b) for b in raw]
                if any(b not in (0, 1) for b in bits):
                    raise ValueError("matrix entries must be 0 or 1")
            if n is None:
                n = len(bits)
            elif len(bits) != n:
                raise ValueError("generator rows have unequal lengths")
            rows.append(sum(b << j for j, b in enumerate(bits)))
        if not rows or n == 0:
            raise ValueError("generator matrix must have at least one row and column")
        return BinaryCode(rows, n)

    def to_strings(self) -> list[str]:
        """Rows as 0/1 strings; character j is coordinate j."""
        return ["".join("01"[(r >> j) & 1] for j in range(self.n)) for r in self.rows]

    # -- canonical form ----------------------------------------------------

    def rref(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(pivot columns, rows) of the canonical reduced row-echelon basis."""
        return self._pivots, self._basis

    # -- basic queries -----------------------------------------------------

    def contains(self, word: int) -> bool:
        if word < 0 or word >> self.n:
            raise ValueError(f"word {word:#x} does not fit in {self.n} columns")
        for r in self._basis:
            if word & (r & -r):
                word ^= r
        return word == 0

    def codewords(self):
        """Yield all 2^k codewords (Gray-code order over the echelon basis)."""
        self._enumeration_guard()
        word = 0
        yield 0
        for i in range(1, 1 << self.k):
            word ^= self._basis[(i & -i).bit_length() - 1]
            yield word

    def _enumeration_guard(self):
        if self.k > ENUMERATION_LIMIT:
            raise ValueError(
                f"refusing to enumerate 2^{self.k} codewords "
                f"(limit is k <= {ENUMERATION_LIMIT}); use the transform-based paths")

    # -- weight distribution -------------------------------------------------

    def weight_distribution(self) -> dict[int, int]:
        """Exact weight distribution {weight: count} by full enumeration."""
        if self._weights is None:
            counts = [0] * (self.n + 1)
            for c in self.codewords():
                counts[c.bit_count()] += 1
            self._weights = {w: c for w, c in enumerate(counts) if c}
        return dict(self._weights)

    def minimum_distance(self) -> int:
        """Least nonzero codeword weight; falls back to the dual side when k is large."""
        if self.k == 0:
            raise ValueError("minimum distance of the zero code is undefined")
        if self.k <= ENUMERATION_LIMIT:
            dist = self.weight_distribution()
        elif self.n - self.k <= ENUMERATION_LIMIT:
            dist = macwilliams_transform(self.dual().weight_distribution(),
                                         self.n, self.n - self.k)
        else:
            raise ValueError("both the code and its dual exceed the enumeration limit")
        return min(w for w in dist if w > 0)

    # -- duality -------------------------------------------------------------

    def dual(self) -> "BinaryCode":
        return BinaryCode(bitmat.kernel(self.rows, self.n), self.n)

    def is_projective(self) -> bool:
        """True when the canonical generator columns are pairwise distinct and
        nonzero, i.e. the dual code has minimum distance at least 3."""
        if self.k == 0:
            raise ValueError("projectivity of the zero code is undefined")
        cols = bitmat.transpose(self._basis, self.n)
        return 0 not in cols and len(set(cols)) == self.n

    def __eq__(self, other):
        return (isinstance(other, BinaryCode)
                and self.n == other.n and self._basis == other._basis)

    def __hash__(self):
        return hash((self.n, self._basis))

    def __repr__(self):
        return f"BinaryCode(n={self.n}, k={self.k})"


def codes_equal(a: BinaryCode, b: BinaryCode) -> bool:
    """Row-space equality (mutual containment through the echelon bases)."""
    if a.n != b.n:
        raise ValueError(f"cannot compare codes of lengths {a.n} and {b.n}")
    return a == b


def macwilliams_transform(weights: dict[int, int], n: int, k: int) -> dict[int, int]:
    """Weight distribution of the dual of an [n, k] code from that code's own
    distribution, via Krawtchouk sums; all arithmetic is exact."""
    total = sum(weights.values())
    if total != 1 << k:
        raise ValueError(f"distribution sums to {total}, expected 2^{k}")
    out = {}
    for j in range(n + 1):
        acc = 0
        for i, a_i in weights.items():
            kraw = sum((-1) ** l * comb(i, l) * comb(n - i, j - l) for l in range(j + 1))
            acc += a_i * kraw
        q, r = divmod(acc, 1 << k)
        if r or q < 0:
            raise ValueError("distribution is not that of a linear code")
        if q:
            out[j] = q
    return out


def random_spanning_rows(rng, max_k: int = 12, max_n: int = 64) -> tuple[list[int], int]:
    """A random generator matrix (occasionally rank-deficient) for round-trip tests."""
    n = rng.randint(2, max_n)
    k = rng.randint(1, min(max_k, n))
    rows = [rng.getrandbits(n) for _ in range(k)]
    while not any(rows):
        rows = [rng.getrandbits(n) for _ in range(k)]
    for _ in range(rng.randint(0, 2)):
        mask = rng.getrandbits(len(rows))
        combo = 0
        for i, r in enumerate(rows):
            if (mask >> i) & 1:
                combo ^= r
        rows.append(combo)
    return rows, n
