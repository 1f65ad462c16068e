"""Boolean functions on GF(2^m) and their Walsh spectra.

The Walsh coefficient used throughout pairs points through the field trace,

    W_f(w) = sum over x of (-1)^(f(x) + Tr(w*x)),

which matches the coordinate-free convention the code constructions need.
Since Tr(w*x) equals the dot product (T*w).x for the trace bilinear form T,
the fast path is a standard fast Walsh--Hadamard butterfly followed by an
index permutation.  A slow character-matrix evaluation is kept alongside as
an independent oracle.
"""

from __future__ import annotations

import functools

import numpy as np

from .gf2 import Field, field as get_field


def _as_field(f) -> Field:
    return f if isinstance(f, Field) else get_field(int(f))


@functools.lru_cache(maxsize=16)
def character_matrix(field: Field) -> np.ndarray:
    """Return the q x q matrix H with H[w, x] = (-1)**Tr(w*x), built by discrete logs.

    The traces come from the sum-of-squares definition, so the matrix is
    independent of the mask-based fast path and doubles as an oracle both for
    the transform itself and for its inversion identity H @ W_f == q * signs.
    """
    q = field.order
    g = field.primitive_element.value
    logs = np.zeros(q, dtype=np.int64)
    traces = np.zeros(max(q - 1, 1), dtype=np.int64)
    cur = 1
    for s in range(q - 1):
        logs[cur] = s
        traces[s] = field.trace_sum_of_squares(cur)
        cur = field.mul(cur, g)
    h = np.ones((q, q), dtype=np.float64)
    if q > 2:
        idx = (logs[1:, None] + logs[None, 1:]) % (q - 1)
        h[1:, 1:] = 1.0 - 2.0 * traces[idx]
    else:
        h[1, 1] = 1.0 - 2.0 * traces[0]
    h.setflags(write=False)
    return h


def _fwht(a: np.ndarray) -> np.ndarray:
    """In-place fast Walsh--Hadamard transform over GF(2)^m (dot-product pairing)."""
    h = 1
    while h < a.size:
        v = a.reshape(-1, 2 * h)
        x = v[:, :h].copy()
        y = v[:, h:].copy()
        v[:, :h] = x + y
        v[:, h:] = x - y
        h *= 2
    return a


class BooleanFunction:
    """A function GF(2^m) -> GF(2), stored as a truth table indexed by word value."""

    def __init__(self, field, values):
        self.field = _as_field(field)
        table = np.asarray(list(values) if not isinstance(values, np.ndarray) else values)
        if table.shape != (self.field.order,):
            raise ValueError(
                f"truth table must have 2^{self.field.m} = {self.field.order} entries, "
                f"got {table.size}")
        if not np.isin(table, (0, 1)).all():
            raise ValueError("truth table entries must be 0 or 1")
        self.table = table.astype(np.uint8)
        self.table.setflags(write=False)
        self._spectrum = None

    @property
    def m(self) -> int:
        return self.field.m

    @staticmethod
    def from_support(field, support) -> "BooleanFunction":
        """The characteristic function of a set of field elements (no duplicates)."""
        field = _as_field(field)
        table = np.zeros(field.order, dtype=np.uint8)
        seen = set()
        for v in support:
            v = int(v)
            if not 0 <= v < field.order:
                raise ValueError(f"support point {v} outside GF(2^{field.m})")
            if v in seen:
                raise ValueError(f"duplicate support point {v}; supports are sets")
            seen.add(v)
            table[v] = 1
        return BooleanFunction(field, table)

    def support(self):
        """The set {x : f(x) = 1} as FieldElements in ascending order."""
        return [self.field.element(int(v)) for v in np.flatnonzero(self.table)]

    def support_values(self) -> list[int]:
        return [int(v) for v in np.flatnonzero(self.table)]

    def weight(self) -> int:
        return int(self.table.sum())

    def __call__(self, x: int) -> int:
        return int(self.table[x])

    def __eq__(self, other):
        return (isinstance(other, BooleanFunction)
                and self.field == other.field
                and bool((self.table == other.table).all()))

    def __hash__(self):
        return hash((self.field, self.table.tobytes()))

    def __repr__(self):
        return f"BooleanFunction(m={self.m}, weight={self.weight()})"

    # -- serialization: bit i of the hex value is f(i) -------------------------

    def to_hex(self) -> str:
        v = 0
        for i in np.flatnonzero(self.table):
            v |= 1 << int(i)
        return format(v, f"0{max(1, self.field.order // 4)}x")

    @staticmethod
    def from_hex(field, s: str) -> "BooleanFunction":
        field = _as_field(field)
        width = max(1, field.order // 4)
        if len(s) != width:
            raise ValueError(f"expected {width} hex digits for m={field.m}, got {len(s)}")
        v = int(s, 16)
        if v >> field.order:
            raise ValueError("hex truth table has bits beyond 2^m")
        return BooleanFunction(field, [(v >> i) & 1 for i in range(field.order)])

    # -- Walsh spectrum ---------------------------------------------------------

    def walsh_transform(self) -> "WalshSpectrum":
        """Fast transform: FWHT butterfly, then reindex by w -> T*w."""
        if self._spectrum is None:
            signs = 1 - 2 * self.table.astype(np.int64)
            _fwht(signs)
            perm = self._trace_permutation()
            self._spectrum = WalshSpectrum(self, signs[perm])
        return self._spectrum

    def _trace_permutation(self) -> np.ndarray:
        # perm[w] = T*w built by doubling, so spectrum[w] = fwht[perm[w]]
        rows = self.field.trace_form_rows
        perm = np.zeros(self.field.order, dtype=np.int64)
        for i in range(self.m):
            half = 1 << i
            perm[half:2 * half] = perm[:half] ^ rows[i]
        return perm

    def walsh_transform_naive(self) -> "WalshSpectrum":
        """Quadratic-time oracle: explicit character matrix times the sign vector."""
        if self.m > 12:
            raise ValueError("naive Walsh transform is limited to m <= 12")
        h = character_matrix(self.field)
        signs = (1 - 2 * self.table.astype(np.int64)).astype(np.float64)
        spec = np.rint(h @ signs).astype(np.int64)
        return WalshSpectrum(self, spec)

    # -- algebraic normal form ---------------------------------------------------

    def anf(self) -> "Anf":
        a = self.table.copy()
        h = 1
        while h < a.size:
            v = a.reshape(-1, 2 * h)
            v[:, h:] ^= v[:, :h]
            h *= 2
        return Anf(self.field, frozenset(int(x) for x in np.flatnonzero(a)))

    def algebraic_degree(self) -> int:
        return self.anf().degree()

    def nonlinearity(self) -> int:
        return self.walsh_transform().nonlinearity()

    def classify(self) -> tuple[str, dict[int, int]]:
        """Most specific of affine / bent / plateaued / balanced / general,
        together with the spectrum histogram."""
        spec = self.walsh_transform()
        hist = spec.histogram()
        absvals = sorted({abs(v) for v in hist})
        nonzero_abs = [v for v in absvals if v]
        q = self.field.order
        if nonzero_abs == [q]:
            return "affine", hist
        if self.m % 2 == 0 and absvals == [1 << (self.m // 2)]:
            return "bent", hist
        if len(nonzero_abs) == 1:
            return "plateaued", hist
        if spec.values[0] == 0:
            return "balanced", hist
        return "general", hist


class WalshSpectrum:
    """All 2^m Walsh coefficients of a Boolean function, with sanity checks."""

    def __init__(self, function: BooleanFunction, values: np.ndarray):
        self.function = function
        self.field = function.field
        values = np.asarray(values, dtype=np.int64)
        q = self.field.order
        if values.shape != (q,):
            raise ValueError("spectrum must have one coefficient per field element")
        if int((values * values).sum()) != q * q:
            raise ValueError("spectrum violates the Parseval identity")
        if (values % 2).any():
            raise ValueError("spectrum parity is inconsistent with a sign sum")
        if int(values[0]) != q - 2 * function.weight():
            raise ValueError("spectrum at 0 disagrees with the support size")
        self.values = values
        self.values.setflags(write=False)

    def __getitem__(self, w: int) -> int:
        return int(self.values[w])

    def histogram(self) -> dict[int, int]:
        vals, counts = np.unique(self.values, return_counts=True)
        return {int(v): int(c) for v, c in zip(vals, counts)}

    def max_abs(self) -> int:
        return int(np.abs(self.values).max())

    def nonlinearity(self) -> int:
        return (self.field.order - self.max_abs()) // 2


class Anf:
    """Algebraic normal form: an xor of monomials, each a mask of variables."""

    def __init__(self, field, monomials: frozenset[int]):
        self.field = _as_field(field)
        self.monomials = frozenset(int(x) for x in monomials)
        for x in self.monomials:
            if not 0 <= x < self.field.order:
                raise ValueError(f"monomial mask {x} outside GF(2^{self.field.m})")

    def degree(self) -> int:
        return max((x.bit_count() for x in self.monomials), default=0)

    def evaluate(self, x: int) -> int:
        """Direct evaluation (independent of the butterfly that built the form)."""
        return sum(1 for mask in self.monomials if x & mask == mask) & 1

    def to_function(self) -> BooleanFunction:
        return BooleanFunction(self.field, [self.evaluate(x) for x in range(self.field.order)])

    def __str__(self):
        if not self.monomials:
            return "0"
        terms = []
        for mask in sorted(self.monomials):
            if mask == 0:
                terms.append("1")
            else:
                terms.append("*".join(f"x{i}" for i in range(self.field.m) if (mask >> i) & 1))
        return " + ".join(terms)

    def __eq__(self, other):
        return (isinstance(other, Anf) and self.field == other.field
                and self.monomials == other.monomials)

    def __hash__(self):
        return hash((self.field, self.monomials))


def trace_component(field, a: int) -> BooleanFunction:
    """The component function x -> Tr(a*x)."""
    field = _as_field(field)
    return BooleanFunction(field, [field.trace(field.mul(a, x)) for x in range(field.order)])


def bent_function(field) -> BooleanFunction:
    """The norm-trace bent function Tr(lambda * x^(2^(m/2)+1)) for even m.

    lambda is the least element with nonzero relative trace onto the half
    field; without the twist the composition is identically zero, because
    x^(2^(m/2)+1) lands in the half field where the absolute trace vanishes.
    """
    field = _as_field(field)
    m = field.m
    if m % 2:
        raise ValueError(f"bent functions need even m, got {m}")
    h = m // 2
    lam = next(v for v in range(1, field.order)
               if field.relative_trace_raw(v, h) != 0)
    e = (1 << h) + 1
    return BooleanFunction(
        field, [field.trace(field.mul(lam, field.pow(x, e))) for x in range(field.order)])


def random_function(field, rng, balanced: bool = False) -> BooleanFunction:
    """Uniformly random truth table (optionally balanced) from a seeded rng."""
    field = _as_field(field)
    if balanced:
        table = [1] * (field.order // 2) + [0] * (field.order - field.order // 2)
        rng.shuffle(table)
    else:
        table = [rng.getrandbits(1) for _ in range(field.order)]
    return BooleanFunction(field, table)
