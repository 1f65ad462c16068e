"""Arithmetic in binary extension fields GF(2^m).

Field elements are m-bit words: the integer b_{m-1}...b_1 b_0 stands for
sum b_i * alpha^i, where alpha is the residue class of x modulo the field
polynomial.  Addition is xor.  The heavy lifting happens on plain ints via
Field methods; FieldElement is a thin wrapper that carries its field and
supports operators, which is what the public API hands out.

Also provides the trace machinery this library is built on: absolute and
relative traces, trace-dual bases, and coordinates with respect to a basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd

from . import bitmat

MAX_M = 20

# Least irreducible polynomial of minimal weight for each degree, as a
# bit word (bit i = coefficient of x^i).  Regenerated by the exhaustive
# search in the test suite.
DEFAULT_MODULI = {
    1: 0x2, 2: 0x7, 3: 0xB, 4: 0x13, 5: 0x25, 6: 0x43, 7: 0x83,
    8: 0x11B, 9: 0x203, 10: 0x409, 11: 0x805, 12: 0x1009, 13: 0x201B,
    14: 0x4021, 15: 0x8003, 16: 0x1002B, 17: 0x20009, 18: 0x40009,
    19: 0x80027, 20: 0x100009,
}


class FieldMismatchError(ValueError):
    """Raised when an operation mixes elements of different fields."""


# ---------------------------------------------------------------------------
# Polynomials over GF(2) as bit words (bit i = coefficient of x^i).

def poly_degree(p: int) -> int:
    return p.bit_length() - 1


def poly_mul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def poly_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = poly_degree(b)
    q = 0
    while a and poly_degree(a) >= db:
        shift = poly_degree(a) - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def poly_mod(a: int, b: int) -> int:
    return poly_divmod(a, b)[1]


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def _x_to_2e_mod(e: int, p: int) -> int:
    # x^(2^e) mod p by e squarings of x
    r = poly_mod(0b10, p)
    for _ in range(e):
        r = poly_mod(poly_mul(r, r), p)
    return r


def is_irreducible(p: int) -> bool:
    """Irreducibility over GF(2): p has no root in GF(2^d) for any proper
    divisor d of deg(p), and x^(2^deg) == x mod p."""
    deg = poly_degree(p)
    if deg <= 0:
        return False
    if deg == 1:
        return True
    if not (p & 1):
        return False
    if _x_to_2e_mod(deg, p) != poly_mod(0b10, p):
        return False
    for d in range(1, deg):
        if deg % d == 0:
            if poly_gcd(_x_to_2e_mod(d, p) ^ poly_mod(0b10, p), p) != 1:
                return False
    return True


def default_modulus(m: int) -> int:
    if m not in DEFAULT_MODULI:
        raise ValueError(f"extension degree m={m} outside supported range 1..{MAX_M}")
    return DEFAULT_MODULI[m]


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Field and elements.

class Field:
    """GF(2^m) with a fixed irreducible modulus.  Immutable."""

    def __init__(self, m: int, modulus: int | None = None):
        if not 1 <= m <= MAX_M:
            raise ValueError(f"extension degree m={m} outside supported range 1..{MAX_M}")
        if modulus is None:
            modulus = default_modulus(m)
        if poly_degree(modulus) != m:
            raise ValueError(f"modulus {modulus:#x} does not have degree {m}")
        if not is_irreducible(modulus):
            raise ValueError(f"modulus {modulus:#x} is reducible over GF(2)")
        self.m = m
        self.modulus = modulus
        self.order = 1 << m

    def __eq__(self, other):
        return isinstance(other, Field) and (self.m, self.modulus) == (other.m, other.modulus)

    def __hash__(self):
        return hash((self.m, self.modulus))

    def __repr__(self):
        return f"Field(m={self.m}, modulus={self.modulus:#x})"

    # -- element plumbing --------------------------------------------------

    def element(self, value: int) -> "FieldElement":
        if not 0 <= value < self.order:
            raise ValueError(f"value {value} is not an {self.m}-bit word")
        return FieldElement(self, value)

    def elements(self):
        for v in range(self.order):
            yield FieldElement(self, v)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def alpha(self) -> "FieldElement":
        # residue class of x; reduces to 0 resp. 1 in the two m=1 fields
        return FieldElement(self, poly_mod(0b10, self.modulus))

    # -- core arithmetic on raw words ---------------------------------------

    def mulx(self, v: int) -> int:
        v <<= 1
        if v >> self.m:
            v ^= self.modulus
        return v

    def mul(self, a: int, b: int) -> int:
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a = self.mulx(a)
        return r

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero field element")
        return self.pow(a, self.order - 2)

    # -- traces ------------------------------------------------------------

    @cached_property
    def _trace_mask(self) -> int:
        # Tr is GF(2)-linear, so trace(v) = parity(v & mask) with
        # mask bit i = Tr(alpha^i), each computed from the defining sum.
        mask = 0
        for i in range(self.m):
            if self.trace_sum_of_squares(self.pow(self.alpha.value, i) if i else 1):
                mask |= 1 << i
        return mask

    def trace_sum_of_squares(self, a: int) -> int:
        """Absolute trace straight from its definition: a + a^2 + ... + a^(2^(m-1))."""
        acc = 0
        cur = a
        for _ in range(self.m):
            acc ^= cur
            cur = self.mul(cur, cur)
        return acc

    def trace(self, a: int) -> int:
        return (a & self._trace_mask).bit_count() & 1

    def relative_trace_raw(self, a: int, h: int) -> int:
        """Tr from GF(2^m) onto its subfield GF(2^h), as a word of this field."""
        if h <= 0 or self.m % h:
            raise ValueError(f"h={h} does not divide m={self.m}")
        acc = 0
        cur = a
        for _ in range(self.m // h):
            acc ^= cur
            for _ in range(h):
                cur = self.mul(cur, cur)
        return acc

    def relative_trace(self, a: "FieldElement", h: int) -> "FieldElement":
        """Relative trace mapped into the standalone GF(2^h) (identity when h == m)."""
        self._check(a)
        if h == self.m:
            return a
        emb = self.subfield(h)
        return emb.small.element(emb.down(self.relative_trace_raw(a.value, h)))

    # -- bilinear form of the trace ------------------------------------------

    @cached_property
    def trace_form_rows(self) -> tuple[int, ...]:
        """Rows of the m x m bit matrix T with T[i][j] = Tr(alpha^i * alpha^j)."""
        tr_pows = []
        cur = 1
        for _ in range(2 * self.m - 1):
            tr_pows.append(self.trace(cur))
            cur = self.mul(cur, self.alpha.value)
        rows = []
        for i in range(self.m):
            row = 0
            for j in range(self.m):
                row |= tr_pows[i + j] << j
            rows.append(row)
        return tuple(rows)

    def trace_coordinates(self, v: int) -> int:
        """Word whose bit i is Tr(alpha^i * v); linear in v."""
        out = 0
        rows = self.trace_form_rows
        while v:
            j = (v & -v).bit_length() - 1
            out ^= rows[j]
            v &= v - 1
        return out

    # -- multiplicative structure ---------------------------------------------

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.order - 1
        for p in _prime_factors(n):
            while n % p == 0 and self.pow(a, n // p) == 1:
                n //= p
        return n

    @cached_property
    def primitive_element(self) -> "FieldElement":
        """Least element (by word value) of multiplicative order 2^m - 1."""
        n = self.order - 1
        primes = _prime_factors(n)
        for v in range(1, self.order):
            if all(self.pow(v, n // p) != 1 for p in primes):
                return FieldElement(self, v)
        raise AssertionError("no primitive element found")  # pragma: no cover

    @lru_cache(maxsize=None)
    def element_of_order(self, n: int) -> "FieldElement":
        """Least element of exact multiplicative order n; n must divide 2^m - 1."""
        if n < 1 or (self.order - 1) % n:
            raise ValueError(f"no element of order {n} in GF(2^{self.m})")
        g = self.pow(self.primitive_element.value, (self.order - 1) // n)
        best = None
        cur = 1
        for j in range(n):
            if gcd(j, n) == 1 and (best is None or cur < best):
                best = cur
            cur = self.mul(cur, g)
        return FieldElement(self, best)

    # -- subfields ---------------------------------------------------------

    @lru_cache(maxsize=None)
    def subfield(self, h: int) -> "SubfieldEmbedding":
        if h <= 0 or self.m % h:
            raise ValueError(f"h={h} does not divide m={self.m}")
        return SubfieldEmbedding(self, h)

    # -- misc ----------------------------------------------------------------

    def _check(self, e: "FieldElement") -> None:
        if e.field != self:
            raise FieldMismatchError(f"element of {e.field!r} used in {self!r}")

    def polynomial_basis(self) -> "Basis":
        """{1, alpha, ..., alpha^(m-1)}; word encodings are exactly 1 << i."""
        return Basis(tuple(FieldElement(self, 1 << i) for i in range(self.m)))

    @cached_property
    def dual_polynomial_basis(self) -> "Basis":
        return self.polynomial_basis().dual()

    def to_json_dict(self) -> dict:
        return {"m": self.m, "modulus": format(self.modulus, "x")}

    @staticmethod
    def from_json_dict(d: dict) -> "Field":
        return field(int(d["m"]), int(d["modulus"], 16))


@lru_cache(maxsize=None)
def field(m: int, modulus: int | None = None) -> Field:
    """Interned Field constructor; repeated lookups share lazy caches."""
    return Field(m, modulus)


class FieldElement:
    """An element of a specific GF(2^m); immutable."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, *a):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            self.field._check(other)
            return other
        raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, self.value ^ other.value)

    __sub__ = __add__
    __radd__ = __add__

    def __mul__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(other.value)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def trace(self) -> int:
        return self.field.trace(self.value)

    def multiplicative_order(self) -> int:
        return self.field.element_order(self.value)

    def __eq__(self, other):
        return (isinstance(other, FieldElement)
                and other.field == self.field and other.value == self.value)

    def __hash__(self):
        return hash((self.field, self.value))

    def __lt__(self, other):
        other = self._coerce(other)
        return self.value < other.value

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    __index__ = __int__

    def __repr__(self):
        return f"<{self.value:#x} in GF(2^{self.field.m})>"

    def to_hex(self) -> str:
        return format(self.value, "x")


@dataclass(frozen=True)
class Basis:
    """A GF(2)-basis of GF(2^m), validated at construction."""

    elements: tuple[FieldElement, ...]

    def __post_init__(self):
        if not self.elements:
            raise ValueError("empty basis")
        f = self.field
        for e in self.elements:
            f._check(e)
        if len(self.elements) != f.m:
            raise ValueError(f"basis needs {f.m} elements, got {len(self.elements)}")
        if bitmat.rank([e.value for e in self.elements]) != f.m:
            raise ValueError("basis elements are linearly dependent over GF(2)")

    @property
    def field(self) -> Field:
        return self.elements[0].field

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def dual(self) -> "Basis":
        return dual_basis(self)

    def coordinates(self, x: FieldElement) -> list[int]:
        return coordinates(x, self)

    def combine(self, bits) -> FieldElement:
        f = self.field
        v = 0
        for b, e in zip(bits, self.elements):
            if b:
                v ^= e.value
        return FieldElement(f, v)


def dual_basis(basis: Basis) -> Basis:
    """The basis {b_j} with Tr(a_i * b_j) = delta_ij, via the inverse Gram matrix."""
    f = basis.field
    m = f.m
    vals = [e.value for e in basis.elements]
    gram = []
    for i in range(m):
        row = 0
        for j in range(m):
            row |= f.trace(f.mul(vals[i], vals[j])) << j
        gram.append(row)
    cinv = bitmat.invert(gram, m)
    duals = []
    for j in range(m):
        v = 0
        for k in range(m):
            if (cinv[k] >> j) & 1:
                v ^= vals[k]
        duals.append(FieldElement(f, v))
    out = Basis(tuple(duals))
    for i in range(m):
        for j in range(m):
            if f.trace(f.mul(vals[i], duals[j].value)) != (i == j):
                raise AssertionError("dual basis failed trace-orthonormality check")
    return out


def coordinates(x: FieldElement, basis: Basis) -> list[int]:
    """Coefficients c with x = sum c_i * basis_i, via c_i = Tr(x * dual_i)."""
    f = basis.field
    f._check(x)
    dual = basis.dual()
    return [f.trace(f.mul(x.value, d.value)) for d in dual.elements]


class SubfieldEmbedding:
    """Identifies {y in GF(2^m) : y^(2^h) = y} with a standalone GF(2^h).

    The subfield is enumerated through its least generator g of order
    2^h - 1; the isomorphism sends the least root r (inside the subfield)
    of the default degree-h modulus to the standalone alpha, so words map
    by change of basis {r^i} -> {alpha^i}.
    """

    def __init__(self, big: Field, h: int):
        self.big = big
        self.h = h
        self.small = field(h)
        members = self._members()
        r = None
        for y in sorted(members):
            if self._eval_small_modulus(y) == 0:
                r = y
                break
        if r is None:  # pragma: no cover - the default modulus always splits
            raise AssertionError("default modulus has no root in subfield")
        self.root = r
        # up[c] = sum over set bits i of c of r^i; bijective on the subfield
        vals = [0]
        cur = 1
        for _ in range(h):
            vals += [v ^ cur for v in vals]
            cur = big.mul(cur, r)
        if len(set(vals)) != 1 << h:  # pragma: no cover
            raise AssertionError("powers of subfield root are dependent")
        self._up = vals
        self._down = {v: c for c, v in enumerate(vals)}

    def _members(self) -> list[int]:
        if self.h == self.big.m:
            return list(range(self.big.order))
        g = self.big.element_of_order((1 << self.h) - 1).value
        out = [0, 1]
        cur = g
        while cur != 1:
            out.append(cur)
            cur = self.big.mul(cur, g)
        return out

    def _eval_small_modulus(self, y: int) -> int:
        p = self.small.modulus
        acc = 0
        for i in range(poly_degree(p), -1, -1):
            acc = self.big.mul(acc, y) ^ ((p >> i) & 1)
        return acc

    def down(self, v: int) -> int:
        """Map a subfield member of the big field to its standalone word."""
        try:
            return self._down[v]
        except KeyError:
            raise ValueError(f"{v:#x} is not in the embedded GF(2^{self.h})") from None

    def lift(self, c: int) -> int:
        """Map a standalone GF(2^h) word into the big field."""
        return self._up[c]
