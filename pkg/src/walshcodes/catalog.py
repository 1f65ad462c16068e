"""Constructors for the classical code families the library is exercised on:
simplex, punctured simplex (MacDonald), Hamming, Reed-Muller, BCH,
quadratic-residue (including the [23,12,7] Golay code and its extension),
and irreducible cyclic codes, plus the cyclotomic-coset / minimal-polynomial
machinery the cyclic constructions need.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import bitmat
from .defining_set import DefiningSet, code_from_defining_set
from .gf2 import MAX_M, Field, field as get_field, poly_divmod
from .linear_code import ENUMERATION_LIMIT, BinaryCode


@dataclass(frozen=True)
class Poly2:
    """A polynomial over GF(2) as a bit word (bit i = coefficient of x^i)."""

    word: int

    @property
    def degree(self) -> int:
        return self.word.bit_length() - 1

    def __mul__(self, other: "Poly2") -> "Poly2":
        r = 0
        a, b = self.word, other.word
        while b:
            if b & 1:
                r ^= a
            a <<= 1
            b >>= 1
        return Poly2(r)

    def divides(self, other: "Poly2") -> bool:
        return poly_divmod(other.word, self.word)[1] == 0

    def __str__(self):
        if self.word == 0:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            if (self.word >> i) & 1:
                terms.append("1" if i == 0 else ("x" if i == 1 else f"x^{i}"))
        return " + ".join(terms)


@dataclass(frozen=True)
class CyclotomicCoset:
    """An orbit of residues mod n under multiplication by 2."""

    n: int
    leader: int
    members: frozenset[int]


@lru_cache(maxsize=None)
def cyclotomic_cosets(n: int) -> tuple[CyclotomicCoset, ...]:
    """Partition of {0, ..., n-1} into orbits under doubling mod n."""
    if n % 2 == 0 or not 3 <= n <= 4095:
        raise ValueError(f"cyclotomic cosets need odd n in [3, 4095], got {n}")
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        members = set()
        cur = start
        while cur not in members:
            members.add(cur)
            seen[cur] = True
            cur = (2 * cur) % n
        out.append(CyclotomicCoset(n=n, leader=min(members), members=frozenset(members)))
    return tuple(out)


def _expand_roots(field: Field, roots) -> list[int]:
    """Coefficients (ascending degree) of prod (x + r) over the field."""
    coeffs = [1]
    for r in roots:
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] ^= c
            nxt[i] ^= field.mul(r, c)
        coeffs = nxt
    return coeffs


def minimal_polynomial(field: Field, element) -> Poly2:
    """The minimal polynomial over GF(2) of a field element (x itself for 0)."""
    a = int(element)
    if a == 0:
        return Poly2(0b10)
    conjugates = []
    cur = a
    while cur not in conjugates:
        conjugates.append(cur)
        cur = field.mul(cur, cur)
    coeffs = _expand_roots(field, conjugates)
    word = 0
    for i, c in enumerate(coeffs):
        if c > 1:
            raise AssertionError("conjugate product has a non-binary coefficient")
        word |= c << i
    return Poly2(word)


def _splitting_field(n: int) -> Field:
    """The smallest GF(2^m) containing primitive n-th roots of unity."""
    m = 1
    while m <= MAX_M and pow(2, m, n) != 1:
        m += 1
    if m > MAX_M:
        raise ValueError(f"order of 2 mod {n} exceeds the field cap {MAX_M}")
    return get_field(m)


def _cyclic_code(n: int, generator: Poly2) -> BinaryCode:
    if generator.word == 0:
        raise ValueError("zero generator polynomial")
    if poly_divmod((1 << n) | 1, generator.word)[1] != 0:
        raise ValueError(f"generator {generator} does not divide x^{n} + 1")
    k = n - generator.degree
    rows = [generator.word << i for i in range(k)]
    return BinaryCode(rows, n)


# ---------------------------------------------------------------------------
# Families with closed-form generator matrices.

def simplex(k: int) -> BinaryCode:
    """[2^k - 1, k, 2^(k-1)]: columns are all nonzero k-bit words, ascending."""
    if not 2 <= k <= 20:
        raise ValueError(f"simplex needs 2 <= k <= 20, got {k}")
    cols = list(range(1, 1 << k))
    return BinaryCode(bitmat.transpose(cols, k), len(cols))


def macdonald_punctured_simplex(k: int) -> BinaryCode:
    """[2^k - 2, k, 2^(k-1) - 1]: the simplex with the column for value 1 deleted."""
    if not 3 <= k <= 20:
        raise ValueError(f"macdonald needs 3 <= k <= 20, got {k}")
    # the deleted column is the first one (value 1), so bit 0 drops out
    rows = [r >> 1 for r in simplex(k).rows]
    return BinaryCode(rows, (1 << k) - 2)


def hamming(m: int) -> BinaryCode:
    """[2^m - 1, 2^m - 1 - m, 3]: null space of the all-nonzero-columns check matrix."""
    if not 3 <= m <= 12:
        raise ValueError(f"hamming needs 3 <= m <= 12, got {m}")
    checks = simplex(m).rows
    return BinaryCode(bitmat.kernel(checks, (1 << m) - 1), (1 << m) - 1)


def reed_muller(ell: int, m: int) -> BinaryCode:
    """RM(ell, m): evaluations over GF(2)^m of all monomials of degree <= ell."""
    if not 1 <= ell < m <= 12:
        raise ValueError(f"reed_muller needs 1 <= ell < m <= 12, got ell={ell}, m={m}")
    n = 1 << m
    var = []
    for i in range(m):
        block = ((1 << (1 << i)) - 1) << (1 << i)  # x_i = 1 on odd 2^i-blocks
        v = 0
        for t in range(n >> (i + 1)):
            v |= block << (t << (i + 1))
        var.append(v)
    masks = sorted(range(n), key=lambda s: (s.bit_count(), s))
    rows = []
    for s in masks:
        if s.bit_count() > ell:
            continue
        row = (1 << n) - 1
        for i in range(m):
            if (s >> i) & 1:
                row &= var[i]
        rows.append(row)
    code = BinaryCode(rows, n)
    expected_k = sum(comb(m, i) for i in range(ell + 1))
    if code.k != expected_k:  # pragma: no cover - construction is standard
        raise AssertionError("monomial evaluation rows are unexpectedly dependent")
    return code


# ---------------------------------------------------------------------------
# Cyclic families.

def bch_generator_polynomial(n: int, delta: int) -> Poly2:
    """Narrow-sense BCH generator: lcm of the minimal polynomials of
    gamma^1, ..., gamma^(delta-1) for the least primitive n-th root gamma."""
    if n % 2 == 0 or n < 3:
        raise ValueError(f"BCH length must be odd and >= 3, got {n}")
    if not 2 <= delta <= n:
        raise ValueError(f"designed distance must satisfy 2 <= delta <= n, got {delta}")
    fld = _splitting_field(n)
    gamma = fld.element_of_order(n)
    leaders = []
    for coset in cyclotomic_cosets(n):
        if coset.leader != 0 and any(1 <= e <= delta - 1 for e in coset.members):
            leaders.append(coset.leader)
    g = Poly2(1)
    for leader in sorted(leaders):
        g = g * minimal_polynomial(fld, fld.pow(gamma.value, leader))
    return g


def bch_code(n: int, delta: int) -> BinaryCode:
    """Narrow-sense BCH code of length n and designed distance delta."""
    g = bch_generator_polynomial(n, delta)
    code = _cyclic_code(n, g)
    if 1 <= code.k <= ENUMERATION_LIMIT and code.minimum_distance() < delta:
        raise AssertionError(
            f"BCH({n},{delta}) enumerated distance fell below the designed distance")
    return code


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def quadratic_residue_code(n: int) -> BinaryCode:
    """QR code of prime length n (n = +-1 mod 8): generator has the nonzero
    squares mod n as root exponents; k = (n+1)/2."""
    if not _is_prime(n) or n > 127:
        raise ValueError(f"QR length must be an odd prime <= 127, got {n}")
    if n % 8 not in (1, 7):
        raise ValueError(f"2 must be a square mod n (n = +-1 mod 8), got n={n}")
    fld = _splitting_field(n)
    gamma = fld.element_of_order(n).value
    residues = sorted({pow(i, 2, n) for i in range(1, n)})
    coeffs = _expand_roots(fld, [fld.pow(gamma, r) for r in residues])
    word = 0
    for i, c in enumerate(coeffs):
        if c > 1:
            raise AssertionError("QR generator has a non-binary coefficient")
        word |= c << i
    return _cyclic_code(n, Poly2(word))


def golay23() -> BinaryCode:
    """The [23, 12, 7] code, realized as the length-23 quadratic-residue code."""
    return quadratic_residue_code(23)


def extended_golay24() -> BinaryCode:
    """[24, 12, 8]: an overall parity bit appended to each generator row;
    the result is checked to be self-dual."""
    base = golay23()
    rows = [r | ((r.bit_count() & 1) << 23) for r in base.rows]
    code = BinaryCode(rows, 24)
    if code.dual() != code:
        raise AssertionError("extended code failed the self-duality check")
    return code


def irreducible_cyclic(m: int, big_n: int) -> tuple[BinaryCode, DefiningSet]:
    """Code of the defining set {gamma^(N*i)} (the group of N-th powers) for
    the least primitive gamma of GF(2^m); N must divide 2^m - 1."""
    fld = get_field(m)
    if big_n < 1 or (fld.order - 1) % big_n:
        raise ValueError(f"N={big_n} does not divide 2^{m} - 1 = {fld.order - 1}")
    n1 = (fld.order - 1) // big_n
    gamma = fld.primitive_element.value
    step = fld.pow(gamma, big_n)
    vals = []
    cur = 1
    for _ in range(n1):
        vals.append(cur)
        cur = fld.mul(cur, step)
    ds = DefiningSet(fld, vals)
    return code_from_defining_set(ds), ds


# ---------------------------------------------------------------------------
# Name-string addressing ("simplex:k=3", "bch:n=15,d=5", ...).

def build_from_name(spec: str) -> BinaryCode:
    """Construct a catalog code from its CLI name string."""
    name, _, paramstr = spec.strip().partition(":")
    name = name.strip().lower()
    params = {}
    if paramstr:
        for chunk in paramstr.split(","):
            key, eq, val = chunk.partition("=")
            if not eq:
                raise ValueError(f"malformed parameter {chunk!r} in {spec!r}")
            try:
                params[key.strip().lower()] = int(val)
            except ValueError:
                raise ValueError(f"parameter {key.strip()!r} in {spec!r} is not an integer")

    def take(*keys):
        missing = [k for k in keys if k not in params]
        if missing or set(params) != set(keys):
            raise ValueError(
                f"{name} expects parameters {{{', '.join(keys)}}}, got {sorted(params)}")
        return [params[k] for k in keys]

    if name == "simplex":
        return simplex(*take("k"))
    if name == "macdonald":
        return macdonald_punctured_simplex(*take("k"))
    if name == "hamming":
        return hamming(*take("m"))
    if name == "rm":
        return reed_muller(*take("l", "m"))
    if name == "bch":
        return bch_code(*take("n", "d"))
    if name == "qr":
        return quadratic_residue_code(*take("n"))
    if name == "golay23":
        take()
        return golay23()
    if name in ("extended_golay24", "golay24"):
        take()
        return extended_golay24()
    if name == "irrcyclic":
        return irreducible_cyclic(*take("m", "n"))[0]
    raise ValueError(f"unknown catalog code {name!r}")
