"""Tests for GF(2^m) arithmetic, traces, bases, and subfield embeddings."""

import itertools
import random

import pytest

from walshcodes import gf2
from walshcodes.gf2 import (
    Basis,
    FieldMismatchError,
    coordinates,
    dual_basis,
    field,
    is_irreducible,
    poly_degree,
    poly_divmod,
    poly_gcd,
    poly_mod,
    poly_mul,
)


def sympy_irreducible(word: int) -> bool:
    """Independent irreducibility oracle over GF(2), via sympy."""
    from sympy import GF, Poly
    from sympy.abc import x

    coeffs = [(word >> i) & 1 for i in range(word.bit_length() - 1, -1, -1)]
    return bool(Poly(coeffs, x, domain=GF(2)).is_irreducible)


# -- polynomial layer ---------------------------------------------------------


def test_poly_mul_against_integer_convolution():
    rng = random.Random(11)
    for _ in range(200):
        a = rng.randrange(1, 1 << 10)
        b = rng.randrange(1, 1 << 10)
        prod = 0
        for i in range(a.bit_length()):
            if (a >> i) & 1:
                prod ^= b << i
        assert poly_mul(a, b) == prod


def test_poly_divmod_identity():
    rng = random.Random(12)
    for _ in range(300):
        a = rng.randrange(0, 1 << 14)
        b = rng.randrange(1, 1 << 8)
        q, r = poly_divmod(a, b)
        assert poly_mul(q, b) ^ r == a
        assert r == poly_mod(a, b)
        assert b == 1 or poly_degree(r) < poly_degree(b)


def test_poly_gcd_divides_both_inputs():
    rng = random.Random(13)
    for _ in range(200):
        a = rng.randrange(1, 1 << 12)
        b = rng.randrange(1, 1 << 12)
        g = poly_gcd(a, b)
        assert poly_mod(a, g) == 0 and poly_mod(b, g) == 0
        # any common divisor has degree at most deg(gcd): check via products
        assert poly_gcd(poly_mul(a, 0b11), poly_mul(b, 0b11)) == poly_mul(g, 0b11)


def test_is_irreducible_matches_sympy():
    rng = random.Random(14)
    seen = 0
    for _ in range(250):
        p = rng.randrange(2, 1 << 13)
        assert is_irreducible(p) == sympy_irreducible(p)
        seen += is_irreducible(p)
    assert seen > 10  # the sample actually exercised both outcomes


def test_default_moduli_are_irreducible_and_minimal():
    """Each table entry is the least-weight, then least-value, monic irreducible."""
    for m, mod in gf2.DEFAULT_MODULI.items():
        assert poly_degree(mod) == m
        assert sympy_irreducible(mod)
        target_weight = bin(mod).count("1")
        for weight in range(1, target_weight + 1):
            for low_bits in itertools.combinations(range(m), weight - 1):
                cand = (1 << m) | sum(1 << i for i in low_bits)
                if (weight, cand) < (target_weight, mod):
                    assert not sympy_irreducible(cand), (
                        f"smaller candidate {cand:#x} beats table entry for m={m}"
                    )


# -- field construction and multiplication -----------------------------------


def test_field_rejects_bad_parameters():
    with pytest.raises(ValueError):
        field(0)
    with pytest.raises(ValueError):
        field(gf2.MAX_M + 1)
    with pytest.raises(ValueError):
        field(3, 0b1111)  # (x+1)(x^2+x+1) is reducible
    with pytest.raises(ValueError):
        field(3, 0b10011)  # degree 4 modulus for m=3


def test_gf8_multiplication_fixtures():
    f = field(3)
    assert f.modulus == 0b1011
    assert f.mul(2, 4) == 3  # alpha * alpha^2 = alpha^3 = alpha + 1
    assert f.inv(2) == 5  # alpha * (alpha^2 + 1) = alpha^3 + alpha = 1
    assert f.mul(2, 5) == 1


def test_small_fields_satisfy_ring_axioms():
    for m in (1, 2, 3):
        f = field(m)
        q = f.order
        for a, b in itertools.product(range(q), repeat=2):
            assert f.mul(a, b) == f.mul(b, a)
        for a, b, c in itertools.product(range(q), repeat=3):
            assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
            assert f.mul(a, b ^ c) == f.mul(a, b) ^ f.mul(a, c)


def test_every_nonzero_element_has_inverse():
    for m in (1, 2, 3, 4, 6, 8):
        f = field(m)
        for a in range(1, f.order):
            assert f.mul(a, f.inv(a)) == 1
    with pytest.raises(ZeroDivisionError):
        field(4).inv(0)


def test_pow_matches_repeated_multiplication():
    rng = random.Random(15)
    f = field(7)
    for _ in range(100):
        a = rng.randrange(f.order)
        e = rng.randrange(0, 300)
        acc = 1
        for _ in range(e):
            acc = f.mul(acc, a)
        assert f.pow(a, e) == acc


def test_squaring_is_additive():
    f = field(6)
    for a, b in itertools.product(range(16), range(64)):
        assert f.pow(a ^ b, 2) == f.pow(a, 2) ^ f.pow(b, 2)


# -- traces -------------------------------------------------------------------


def test_trace_mask_matches_sum_of_squares_everywhere():
    for m in range(1, 11):
        f = field(m)
        for a in range(f.order):
            assert f.trace(a) == f.trace_sum_of_squares(a)


def test_trace_of_one_is_m_mod_2():
    for m in range(1, gf2.MAX_M + 1):
        assert field(m).trace(1) == m % 2


def test_gf8_trace_fixtures():
    f = field(3)
    values = [f.trace(a) for a in range(8)]
    assert values[0] == 0 and values[1] == 1
    assert values[2] == 0 and values[4] == 0  # alpha and alpha^2
    assert sum(values) == 4  # balanced on GF(8)


def test_trace_is_linear_and_nondegenerate():
    rng = random.Random(16)
    for m in (2, 4, 6, 8):
        f = field(m)
        for _ in range(100):
            a, b = rng.randrange(f.order), rng.randrange(f.order)
            assert f.trace(a ^ b) == f.trace(a) ^ f.trace(b)
        for a in range(1, f.order):
            assert any(f.trace(f.mul(a, b)) for b in range(f.order))


def test_trace_linear_forms_are_pairwise_distinct():
    for m in (2, 3, 4, 6):
        f = field(m)
        tables = {
            tuple(f.trace(f.mul(a, x)) for x in range(f.order))
            for a in range(f.order)
        }
        assert len(tables) == f.order


def test_trace_form_rows_match_direct_products():
    for m in (1, 2, 3, 5, 8):
        f = field(m)
        rows = f.trace_form_rows
        assert len(rows) == m
        from walshcodes import bitmat

        assert bitmat.rank(list(rows)) == m  # nondegenerate pairing
        for i in range(m):
            for j in range(m):
                direct = f.trace(f.mul(1 << i, 1 << j))
                assert (rows[i] >> j) & 1 == direct
                assert (rows[j] >> i) & 1 == direct  # symmetry


def test_trace_coordinates_match_definition_and_are_bijective():
    rng = random.Random(17)
    for m in (2, 5, 8, 10):
        f = field(m)
        seen = set()
        for _ in range(150):
            v = rng.randrange(f.order)
            w = f.trace_coordinates(v)
            for i in range(m):
                assert (w >> i) & 1 == f.trace(f.mul(1 << i, v))
            u = rng.randrange(f.order)
            assert f.trace_coordinates(u ^ v) == f.trace_coordinates(u) ^ w
            seen.add(v)
        assert len({f.trace_coordinates(v) for v in seen}) == len(seen)


def test_relative_trace_transitivity_and_identity():
    big = field(4)
    small = field(2)
    for a in range(16):
        e = big.element(a)
        rt = big.relative_trace(e, 2)
        assert rt.field == small
        assert small.trace(rt.value) == big.trace(a)  # Tr composes through GF(4)
        assert big.relative_trace(e, 4) == e
    with pytest.raises(ValueError):
        big.relative_trace(big.element(1), 3)


def test_relative_trace_lands_in_the_subfield():
    f = field(6)
    for h in (1, 2, 3):
        for a in range(0, 64, 5):
            y = f.relative_trace_raw(a, h)
            assert f.pow(y, 1 << h) == y  # fixed by the subfield Frobenius
        if h == 1:
            for a in range(64):
                assert f.relative_trace_raw(a, 1) == f.trace(a)


# -- bases and coordinates ----------------------------------------------------


def test_dual_basis_of_gf8_polynomial_basis():
    f = field(3)
    basis = f.polynomial_basis()
    dual = dual_basis(basis)
    for i in range(3):
        for j in range(3):
            assert f.trace(f.mul(basis[i].value, dual[j].value)) == (i == j)
    redual = dual.dual()
    assert [e.value for e in redual] == [e.value for e in basis]


def test_dual_basis_involution_on_random_bases():
    rng = random.Random(18)
    from walshcodes import bitmat

    for m in (2, 4, 6, 10):
        f = field(m)
        for _ in range(10):
            vals = [rng.randrange(1, f.order) for _ in range(m)]
            if bitmat.rank(vals) != m:
                continue
            basis = Basis(tuple(f.element(v) for v in vals))
            dual = basis.dual()
            assert [e.value for e in dual.dual()] == vals


def test_basis_rejects_dependent_or_foreign_elements():
    f = field(3)
    with pytest.raises(ValueError):
        Basis((f.element(1), f.element(2), f.element(3)))  # 3 = 1 ^ 2
    with pytest.raises(ValueError):
        Basis((f.element(1), f.element(2)))
    with pytest.raises(FieldMismatchError):
        Basis((f.element(1), f.element(2), field(4).element(4)))


def test_coordinates_round_trip():
    rng = random.Random(19)
    f = field(10)
    basis = f.polynomial_basis()
    for _ in range(50):
        x = f.element(rng.randrange(f.order))
        bits = coordinates(x, basis)
        assert basis.combine(bits) == x
        assert bits == [(x.value >> i) & 1 for i in range(10)]
    assert coordinates(f.zero, basis) == [0] * 10


def test_coordinates_in_a_nonstandard_basis():
    f = field(4)
    basis = Basis(tuple(f.element(v) for v in (3, 5, 9, 14)))
    for v in range(16):
        x = f.element(v)
        assert basis.combine(basis.coordinates(x)) == x


# -- multiplicative structure --------------------------------------------------


def naive_order(f, a):
    n, cur = 1, a
    while cur != 1:
        cur = f.mul(cur, a)
        n += 1
    return n


def test_element_order_matches_naive_loop():
    for m in (1, 2, 3, 4, 6, 8):
        f = field(m)
        for a in range(1, f.order):
            assert f.element_order(a) == naive_order(f, a)


def test_primitive_element_is_least_generator():
    for m in (1, 2, 3, 4, 6, 8):
        f = field(m)
        g = f.primitive_element.value
        assert f.element_order(g) == f.order - 1
        for v in range(1, g):
            assert f.element_order(v) != f.order - 1
    assert field(3).primitive_element.value == 2


def test_element_of_order_is_least_with_that_order():
    for m in (2, 3, 4, 6):
        f = field(m)
        n_max = f.order - 1
        for n in range(1, n_max + 1):
            if n_max % n:
                with pytest.raises(ValueError):
                    f.element_of_order(n)
                continue
            got = f.element_of_order(n).value
            assert f.element_order(got) == n
            for v in range(1, got):
                assert f.element_order(v) != n
    assert field(4).element_of_order(1).value == 1


# -- subfield embeddings --------------------------------------------------------


def test_subfield_embedding_is_a_field_isomorphism():
    for m, h in ((4, 2), (6, 2), (6, 3), (8, 4), (12, 6)):
        big, emb = field(m), field(m).subfield(h)
        small = emb.small
        assert small == field(h)
        lifted = [emb.lift(c) for c in range(small.order)]
        assert len(set(lifted)) == small.order
        for y in lifted:
            assert big.pow(y, 1 << h) == y  # lands in the fixed field
        for a in range(small.order):
            for b in range(small.order):
                assert emb.lift(a ^ b) == emb.lift(a) ^ emb.lift(b)
                assert emb.lift(small.mul(a, b)) == big.mul(emb.lift(a), emb.lift(b))
                assert emb.down(emb.lift(a)) == a
        assert emb.lift(0) == 0 and emb.lift(1) == 1


def test_subfield_embedding_rejects_outsiders():
    emb = field(4).subfield(2)
    members = {emb.lift(c) for c in range(4)}
    outsider = next(v for v in range(16) if v not in members)
    with pytest.raises(ValueError):
        emb.down(outsider)
    with pytest.raises(ValueError):
        field(4).subfield(3)


def test_subfield_tower_intersection():
    f = field(6)
    quad = {f.subfield(2).lift(c) for c in range(4)}
    cube = {f.subfield(3).lift(c) for c in range(8)}
    assert quad & cube == {0, 1}


# -- element wrapper and serialization ------------------------------------------


def test_field_element_operator_algebra():
    f = field(4)
    a, b = f.element(7), f.element(9)
    assert (a + b).value == 7 ^ 9
    assert a * b == f.element(f.mul(7, 9))
    assert a / b == a * b.inverse()
    assert (a**3).value == f.pow(7, 3)
    assert a + a == f.zero
    assert int(a) == 7 and bool(a) and not bool(f.zero)
    assert a.trace() == f.trace(7)
    assert sorted([b, a]) == [a, b]
    assert a.to_hex() == "7"
    with pytest.raises(FieldMismatchError):
        a + field(3).element(1)


def test_field_json_round_trip():
    f = field(8)
    d = f.to_json_dict()
    assert d == {"m": 8, "modulus": "11b"}
    assert gf2.Field.from_json_dict(d) == f
    custom = field(4, 0b11001)
    assert gf2.Field.from_json_dict(custom.to_json_dict()) == custom
    assert field(4) != custom


def test_field_factory_caches_instances():
    assert field(5) is field(5)
    assert field(5) == gf2.Field(5)
