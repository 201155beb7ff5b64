from fractions import Fraction

import pytest
import sympy

from conftest import poly, to_sympy
from eqproj.canonical import kawasaki_constant, schubert_class
from eqproj.errors import NotRepresentableError
from eqproj.polyring import Polynomial, divided_difference
from eqproj.structconst import (
    StructureTable,
    closed_row,
    positivity_certificate,
    struct_const_closed,
    struct_consts_oracle,
    verify_expansion,
    weighted_struct_const,
)


def one(n):
    return Polynomial.constant(1, n + 1)


def test_identity_row():
    for n in range(5):
        for j in range(n + 1):
            for k in range(n + 1):
                expect = one(n) if k == j else Polynomial.zero(n + 1)
                assert struct_const_closed(0, j, k, n) == expect
                assert struct_consts_oracle(0, j, n)[k] == expect


def test_p1_squared_on_p2():
    assert struct_const_closed(1, 1, 1, 2) == poly("t0 - t1", 3)
    assert struct_const_closed(1, 1, 2, 2) == one(2)
    assert struct_consts_oracle(1, 1, 2) == (Polynomial.zero(3), poly("t0 - t1", 3), one(2))


def test_p2_squared_on_p4():
    assert struct_const_closed(2, 2, 3, 4) == poly("t0 + t1 - t2 - t3", 5)
    assert struct_const_closed(2, 2, 4, 4) == one(4)


def test_top_class_squared():
    for n in range(1, 6):
        row = struct_consts_oracle(n, n, n)
        assert row[n] == schubert_class(n, n).parts[n]
        assert all(c.is_zero() for c in row[:n])


def test_symmetry_and_range():
    assert struct_const_closed(3, 1, 2, 4) == struct_const_closed(1, 3, 2, 4)
    with pytest.raises(IndexError):
        struct_const_closed(1, 1, 5, 4)


def test_closed_form_by_sympy_oracle():
    # independent: sympy-computed divided differences applied to p_i(x_j)
    n = 5
    ts = sympy.symbols(f"t0:{n + 1}")

    def dd(e, j):
        s = e.subs({ts[j]: ts[j + 1], ts[j + 1]: ts[j]}, simultaneous=True)
        return sympy.cancel((s - e) / (ts[j] - ts[j + 1]))

    for i in range(n + 1):
        for j in range(i, n + 1):
            e = sympy.prod([ts[m] - ts[j] for m in range(i)])
            for k in range(j, min(i + j, n) + 1):
                if k > j:
                    e = dd(e, k - 1)
                assert sympy.expand(to_sympy(struct_const_closed(i, j, k, n)) - e) == 0


def test_band_homogeneity_and_support():
    n = 7
    for i in range(n + 1):
        for j in range(i, n + 1):
            row = closed_row(i, j, n)
            for k, c in enumerate(row):
                if k < j or k > i + j:
                    assert c.is_zero()
                elif c:
                    assert c.is_homogeneous(i + j - k)
                    assert c.support() <= frozenset(range(k + 1))


def test_recursion_step():
    n = 7
    for i in range(n + 1):
        for j in range(i, n + 1):
            for k in range(j, min(i + j, n)):
                assert struct_consts_oracle(i, j, n)[k + 1] == divided_difference(struct_consts_oracle(i, j, n)[k], k)


def test_chevalley_monk():
    for n in range(1, 8):
        for j in range(1, n):
            expect = [0] * (n + 1)
            expect[0], expect[j] = 1, -1
            assert struct_const_closed(1, j, j, n) == Polynomial.linear(expect)
            assert struct_const_closed(1, j, j + 1, n) == one(n)


def test_expansion_pass_and_fail():
    table = StructureTable.compute(2, pairs=[(1, 1)])
    assert verify_expansion(1, 1, table, 2)
    bad = table.with_entry((1, 1, 2), Polynomial.constant(2, 3))
    verdict = verify_expansion(1, 1, bad, 2)
    assert not verdict and verdict.failing_point == 2


def test_identity_row_expansion():
    for n in range(9):
        table = StructureTable.compute(n, pairs=[(0, j) for j in range(n + 1)])
        for j in range(n + 1):
            assert verify_expansion(0, j, table, n)


def test_table_methods_agree():
    assert StructureTable.compute(5, "closed") == StructureTable.compute(5, "oracle")
    assert StructureTable.compute(3)[2, 1, 3] == struct_const_closed(1, 2, 3, 3)


def test_associativity_through_table():
    for n in range(1, 6):
        table = StructureTable.compute(n)
        p = [schubert_class(k, n) for k in range(n + 1)]

        def mult(coeffs_a, coeffs_b):
            # multiply two expansions sum a_k p_k using the table
            out = [Polynomial.zero(n + 1)] * (n + 1)
            for x, a in enumerate(coeffs_a):
                for y, b in enumerate(coeffs_b):
                    if a and b:
                        for k in range(n + 1):
                            c = table[x, y, k]
                            if c:
                                out[k] = out[k] + a * b * c
            return out

        e1 = [one(n) if k == 1 else Polynomial.zero(n + 1) for k in range(n + 1)]
        left = mult(mult(e1, e1), e1)
        right = mult(e1, mult(e1, e1))
        assert left == right
        direct = p[1] * p[1] * p[1]
        recon = sum((p[k] * left[k] for k in range(n + 1)), start=p[0].scale(0))
        assert recon == direct


def test_positivity_examples():
    assert positivity_certificate(poly("t0 - t1", 3)).alpha == Polynomial.linear([1, 0])
    cert = positivity_certificate(struct_const_closed(2, 2, 3, 4))
    assert cert.nonneg and cert.alpha == Polynomial.linear([1, 2, 1, 0])
    p23 = schubert_class(2, 3).parts[3]
    a = [Polynomial.var(m, 3) for m in range(3)]
    cert = positivity_certificate(p23)
    assert cert.alpha == (a[0] + a[1] + a[2]) * (a[1] + a[2])
    assert cert.nonneg
    with pytest.raises(NotRepresentableError):
        positivity_certificate(poly("t0", 3))


def test_weighted_unit_weights():
    for (i, j, k) in [(1, 1, 1), (1, 2, 3), (2, 2, 3)]:
        w = weighted_struct_const(i, j, k, (1, 1, 1, 1))
        assert w.image == w.native == struct_const_closed(i, j, k, 3)


def test_weighted_examples():
    lam = (1, 2, 2)
    w = weighted_struct_const(1, 1, 2, lam)
    assert w.image == w.native == one(2)
    w = weighted_struct_const(1, 1, 1, lam)
    assert w.image == poly("2*t0 - 2*t1", 3)
    assert w.native == poly("2*t0 - t1", 3)
    assert w.image_integral and w.native_integral


def test_weighted_integrality_is_reported():
    lam = (1, 2, 3)
    w = weighted_struct_const(1, 1, 2, lam)
    ratio = Fraction(kawasaki_constant(1, lam) ** 2, kawasaki_constant(2, lam))
    assert w.image == one(2).scale(ratio)
    w = weighted_struct_const(1, 1, 1, lam)
    assert w.native == poly("6*t0 - 3*t1", 3)
