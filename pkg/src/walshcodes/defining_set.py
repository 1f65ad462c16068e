"""The bridge between defining sets, codes, and Boolean functions.

A defining set D = (d_1, ..., d_n) over GF(2^m) generates the code

    C_D = { (Tr(x*d_1), ..., Tr(x*d_n)) : x in GF(2^m) },

every binary linear code arises this way (extraction through a dual basis
inverts the construction column-for-column), and when D is the support of a
Boolean function f the weight of the codeword c_x is (2*n_f + W_f(x)) / 4.
That identity turns a single Walsh transform into the full weight
distribution; this module implements both directions plus the split of a
degree-2h field into two GF(2^h) coordinates (the bivariate view).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from . import bitmat
from .boolfun import BooleanFunction
from .gf2 import Field, FieldElement, Basis, field as get_field
from .linear_code import BinaryCode, codes_equal


class NotProjectiveError(ValueError):
    """Raised when a construction requires a projective code but got one with
    a zero or repeated generator column."""


class DefiningSet:
    """An ordered (multi)set of GF(2^m) elements; order fixes the column order
    of the generated code."""

    def __init__(self, field, elements):
        self.field = field if isinstance(field, Field) else get_field(int(field))
        values = tuple(int(e) for e in elements)
        if not values:
            raise ValueError("defining set must contain at least one element")
        for v in values:
            if not 0 <= v < self.field.order:
                raise ValueError(f"element {v} outside GF(2^{self.field.m})")
        self.values = values

    @staticmethod
    def from_support(field, support) -> "DefiningSet":
        """Canonical defining set of a support: ascending integer order."""
        return DefiningSet(field, sorted(int(v) for v in support))

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def is_multiset(self) -> bool:
        return len(set(self.values)) < len(self.values)

    def elements(self) -> list[FieldElement]:
        return [self.field.element(v) for v in self.values]

    def characteristic_function(self) -> BooleanFunction:
        if self.is_multiset:
            raise ValueError("a multiset has no characteristic function")
        return BooleanFunction.from_support(self.field, self.values)

    def __eq__(self, other):
        return (isinstance(other, DefiningSet)
                and self.field == other.field and self.values == other.values)

    def __hash__(self):
        return hash((self.field, self.values))

    def __repr__(self):
        return f"DefiningSet(m={self.field.m}, n={self.n})"

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "m": self.field.m,
            "modulus": format(self.field.modulus, "x"),
            "elements": [format(v, "x") for v in self.values],
        }

    @staticmethod
    def from_json_dict(d: dict) -> "DefiningSet":
        fld = get_field(int(d["m"]), int(d["modulus"], 16))
        return DefiningSet(fld, [int(e, 16) for e in d["elements"]])


def code_from_defining_set(ds: DefiningSet) -> BinaryCode:
    """The code whose rows are r_i[j] = Tr(alpha^i * d_j); rank may be < m."""
    f = ds.field
    cols = [f.trace_coordinates(v) for v in ds.values]
    rows = bitmat.transpose(cols, f.m)
    return BinaryCode(rows, ds.n)


def codeword_weight(ds: DefiningSet, x) -> int:
    """Hamming weight of c_x by direct coordinate counting (oracle path)."""
    f = ds.field
    x = int(x)
    return sum(f.trace(f.mul(x, v)) for v in ds.values)


def extract_defining_set(code: BinaryCode, field: Field | None = None,
                         basis: Basis | None = None) -> DefiningSet:
    """Invert the construction: read d_j = sum_i G[i][j] * beta_i off the
    echelon generator G, beta the dual of the chosen basis of GF(2^k).

    The resulting defining set keeps the code's column order, so rebuilding
    reproduces the code coordinate-for-coordinate.
    """
    if code.k == 0:
        raise ValueError("the zero code has no defining set")
    fld = field if field is not None else get_field(code.k)
    if fld.m != code.k:
        raise ValueError(f"extraction field must have degree k={code.k}, got m={fld.m}")
    if basis is None:
        basis = fld.polynomial_basis()
    elif basis.field != fld:
        raise ValueError("basis does not belong to the extraction field")
    beta = basis.dual()
    _, gen = code.rref()
    cols = bitmat.transpose(gen, code.n)
    vals = []
    for col in cols:
        v = 0
        for i in range(code.k):
            if (col >> i) & 1:
                v ^= beta[i].value
        vals.append(v)
    for i, b in enumerate(basis):
        rebuilt = 0
        for j, v in enumerate(vals):
            rebuilt |= fld.trace(fld.mul(b.value, v)) << j
        if rebuilt != gen[i]:
            raise AssertionError("extraction failed to reproduce the generator row")
    return DefiningSet(fld, vals)


def _projectivity_diagnostic(code: BinaryCode) -> str:
    _, gen = code.rref()
    cols = bitmat.transpose(gen, code.n)
    for j, c in enumerate(cols):
        if c == 0:
            return f"generator column {j} is zero"
    seen = {}
    for j, c in enumerate(cols):
        if c in seen:
            return f"generator columns {seen[c]} and {j} are identical"
        seen[c] = j
    return "code is projective"


def boolean_from_code(code: BinaryCode, field: Field | None = None,
                      basis: Basis | None = None) -> BooleanFunction:
    """The characteristic function of the extracted defining set (the code
    must be projective so that the set has distinct nonzero elements)."""
    if not code.is_projective():
        raise NotProjectiveError(
            f"cannot attach a Boolean function: {_projectivity_diagnostic(code)}")
    ds = extract_defining_set(code, field, basis)
    return BooleanFunction.from_support(ds.field, ds.values)


@dataclass(frozen=True)
class SpectralWeightReport:
    """Weight distribution of C_{D_f} read off the Walsh spectrum of f.

    e counts the zero-weight multiplicity 1 + |{w != 0 : weight(w) = 0}|; the
    code has dimension m - log2(e) and each listed weight occurs with the
    listed frequency (raw multiplicity divided by e).
    """

    n_f: int
    e: int
    dimension: int
    weights: dict[int, int]

    def to_json_dict(self) -> dict:
        return {
            "n_f": self.n_f,
            "e": self.e,
            "dimension": self.dimension,
            "weights": {str(w): c for w, c in sorted(self.weights.items())},
        }


def spectral_weight_distribution(f: BooleanFunction) -> SpectralWeightReport:
    """Weight distribution of the code of f's support, from one Walsh transform."""
    n_f = f.weight()
    if n_f == 0:
        raise ValueError("the zero function has an empty support and no code")
    spec = f.walsh_transform()
    m = f.m
    multiset = Counter({0: 1})  # the x = 0 codeword
    for w in range(1, f.field.order):
        t = 2 * n_f + spec[w]
        if t < 0 or t % 4:
            raise ValueError(
                f"spectral weight (2*{n_f} + {spec[w]})/4 at w={w} is not a "
                f"nonnegative integer; the weight identity has been violated")
        multiset[t // 4] += 1
    e = multiset[0]
    if e & (e - 1):
        raise ValueError(f"zero-weight multiplicity e={e} is not a power of two")
    weights = {}
    for w, c in multiset.items():
        q, r = divmod(c, e)
        if r:
            raise ValueError(
                f"multiplicity {c} of weight {w} is not divisible by e={e}; "
                f"frequencies would not be integral")
        weights[w] = q
    dimension = m - e.bit_length() + 1
    if sum(weights.values()) != 1 << dimension:
        raise ValueError("spectral frequencies do not sum to 2^dimension")
    return SpectralWeightReport(n_f=n_f, e=e, dimension=dimension, weights=weights)


def verify_spectral_distribution(f: BooleanFunction) -> bool:
    """True iff the spectral distribution matches brute-force enumeration of
    the code generated by f's support."""
    report = spectral_weight_distribution(f)
    code = code_from_defining_set(DefiningSet.from_support(f.field, f.support_values()))
    return report.weights == code.weight_distribution() and report.dimension == code.k


def bivariate_view(ds: DefiningSet, h: int):
    """Split GF(2^(2h)) as GF(2^h)^2: decompose each d as d = d1*v1 + d2*v2
    over the relative-trace dual pair {v1, v2} of {1, alpha}, and rebuild the
    code from the pairs E = [(d1, d2)].  Returns (E, C_E) with C_E equal to
    the code of the original defining set.
    """
    big = ds.field
    if big.m != 2 * h:
        raise ValueError(f"bivariate view needs m = 2h, got m={big.m}, h={h}")
    emb = big.subfield(h)
    small = emb.small

    u = [1, big.alpha.value]
    gram = [[emb.down(big.relative_trace_raw(big.mul(a, b), h)) for b in u] for a in u]
    det = small.mul(gram[0][0], gram[1][1]) ^ small.mul(gram[0][1], gram[1][0])
    if det == 0:  # pragma: no cover - the relative trace form is nondegenerate
        raise AssertionError("degenerate relative-trace Gram matrix")
    det_inv = small.inv(det)
    # 2x2 inverse in characteristic 2: swap the diagonal, keep the rest
    inv = [[small.mul(det_inv, gram[1][1]), small.mul(det_inv, gram[0][1])],
           [small.mul(det_inv, gram[1][0]), small.mul(det_inv, gram[0][0])]]
    v = [emb.lift(inv[0][j]) ^ big.mul(emb.lift(inv[1][j]), u[1]) for j in range(2)]
    for i in range(2):
        for j in range(2):
            rt = big.relative_trace_raw(big.mul(u[i], v[j]), h)
            if rt != (1 if i == j else 0):
                raise AssertionError("relative-trace dual pair failed orthonormality")

    pairs = []
    for d in ds.values:
        d1 = emb.down(big.relative_trace_raw(big.mul(d, u[0]), h))
        d2 = emb.down(big.relative_trace_raw(big.mul(d, u[1]), h))
        pairs.append((small.element(d1), small.element(d2)))

    # generator rows of C_E: x runs over the GF(2)-basis of GF(2^h)^2
    rows = []
    for side in range(2):
        for i in range(h):
            xi = 1 << i
            row = 0
            for j, (e1, e2) in enumerate(pairs):
                term = small.mul((e1, e2)[side].value, xi)
                row |= small.trace(term) << j
            rows.append(row)
    code = BinaryCode(rows, ds.n)
    if not codes_equal(code, code_from_defining_set(ds)):
        raise AssertionError("bivariate code disagrees with the direct construction")
    return pairs, code
