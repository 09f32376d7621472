import json
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from burau.laurent import (
    COMPLEX,
    INT,
    BivariatePoly,
    LaurentMatrix,
    LaurentPoly,
    bivariate_det,
    charpoly,
)


def P(coeffs, domain=INT):
    return LaurentPoly.from_dict(coeffs, domain)


sparse_polys = st.dictionaries(
    st.integers(min_value=-8, max_value=8),
    st.integers(min_value=-9, max_value=9),
    max_size=6,
).map(P)


class TestRingOps:
    def test_add_cancels(self):
        assert P({0: 1, 1: -1}) + P({1: 1}) == P({0: 1})

    def test_unit_product(self):
        assert P({-1: 1}) * P({1: 1}) == LaurentPoly.one()

    def test_shift_by_t(self):
        p = P({0: 1, 1: -1, -1: -1})
        assert p * LaurentPoly.t_power(1) == P({1: 1, 2: -1, 0: -1})

    def test_domain_mismatch(self):
        with pytest.raises(ValueError):
            P({0: 1}) + P({0: 1}, COMPLEX)

    def test_no_zero_terms_stored(self):
        with pytest.raises(ValueError):
            LaurentPoly(((0, 0),))

    @settings(deadline=None)
    @given(sparse_polys, sparse_polys, sparse_polys)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


class TestBar:
    def test_exponents_flip(self):
        assert P({-2: 1, -1: -1, 0: 1}).bar() == P({2: 1, 1: -1, 0: 1})

    def test_constant_fixed(self):
        assert LaurentPoly.one().bar() == LaurentPoly.one()

    def test_complex_conjugates(self):
        p = P({1: 2j}, COMPLEX)
        assert p.bar() == P({-1: -2j}, COMPLEX)

    @given(sparse_polys)
    def test_involution(self, p):
        assert p.bar().bar() == p

    @settings(deadline=None)
    @given(sparse_polys, sparse_polys)
    def test_ring_automorphism(self, p, q):
        assert (p * q).bar() == p.bar() * q.bar()
        assert (p + q).bar() == p.bar() + q.bar()


class TestEvaluate:
    def test_example_coefficient(self):
        # 1 - t - t^-1 at t = -1
        assert P({0: 1, 1: -1, -1: -1}).evaluate(-1) == pytest.approx(3)

    def test_at_one_sums_coefficients(self):
        p = P({-3: 2, 0: -1, 5: 4})
        assert p.evaluate(1) == pytest.approx(5)
        assert p.coefficient_sum() == 5

    def test_negative_exponents(self):
        assert P({-2: 1, -1: -1, 0: 1}).evaluate(-1) == pytest.approx(3)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            P({1: 1}).evaluate(0)

    def test_multiplicative_on_unit_circle(self):
        rng = random.Random(108)
        for _ in range(100):
            p = P({rng.randint(-8, 8): rng.randint(-9, 9) or 1 for _ in range(4)})
            q = P({rng.randint(-8, 8): rng.randint(-9, 9) or 1 for _ in range(4)})
            theta = rng.uniform(0, 2 * math.pi)
            t = complex(math.cos(theta), math.sin(theta))
            lhs = (p * q).evaluate(t)
            rhs = p.evaluate(t) * q.evaluate(t)
            scale = 1 + abs(lhs)
            assert abs(lhs - rhs) / scale < 1e-10


class TestNormalize:
    def test_prunes_only_on_request(self):
        p = P({0: 1e-15, 1: 1}, COMPLEX)
        assert len(p.terms) == 2
        assert p.normalize().terms == ((1, 1 + 0j),)

    def test_int_domain_untouched(self):
        p = P({0: 1})
        assert p.normalize() is p


class TestRender:
    def test_ascending_with_signs(self):
        assert P({-2: -1, -1: 1, 0: -1}).render() == "-t^-2 + t^-1 - 1"

    def test_simple_cases(self):
        assert LaurentPoly.zero().render() == "0"
        assert P({0: 1, 1: -1}).render() == "1 - t"
        assert P({1: 1}).render() == "t"
        assert P({2: 3, -1: -2}).render() == "-2*t^-1 + 3*t^2"


class TestJson:
    def test_integer_round_trip(self):
        p = P({-1: 2, 0: -1, 3: 10 ** 40})
        blob = json.dumps(p.to_json())
        assert LaurentPoly.from_json(json.loads(blob)) == p

    def test_complex_round_trip(self):
        p = P({0: 1 + 2j, -2: -0.5j}, COMPLEX)
        blob = json.dumps(p.to_json())
        assert LaurentPoly.from_json(json.loads(blob)) == p


class TestBivariate:
    def test_trim_and_degree(self):
        poly = BivariatePoly.make([LaurentPoly.one(), LaurentPoly.zero()])
        assert poly.degree == 0

    def test_arithmetic(self):
        one = LaurentPoly.one()
        x_minus_1 = BivariatePoly.make([LaurentPoly.constant(-1), one])
        x_plus_1 = BivariatePoly.make([one, one])
        square = x_minus_1 * x_plus_1
        assert square == BivariatePoly.make([LaurentPoly.constant(-1),
                                             LaurentPoly.zero(), one])

    def test_render(self):
        one = LaurentPoly.one()
        poly = BivariatePoly.make([-LaurentPoly.t_power(1), LaurentPoly.constant(-1)])
        assert poly.render("x") == "-t - x"
        assert BivariatePoly.make([one, LaurentPoly.constant(-1)]).render("x") == "1 - x"


class TestCharpoly:
    def test_identity_2x2(self):
        one = LaurentPoly.one()
        m = LaurentMatrix.identity(2)
        # (X - 1)^2 = 1 - 2X + X^2
        expected = BivariatePoly.make([one, LaurentPoly.constant(-2), one])
        assert charpoly(m) == expected

    def test_example_1_factored_form(self, ex1):
        from burau.foxburau import burau_matrix

        one = LaurentPoly.one()
        c = P({0: 1, 1: -1, -1: -1})  # 1 - t - t^-1
        quadratic = BivariatePoly.make([one, -c, one])
        x_minus_1 = BivariatePoly.make([LaurentPoly.constant(-1), one])
        assert charpoly(burau_matrix(ex1).matrix) == x_minus_1 * quadratic

    def test_example_2_factored_form(self, ex2):
        from burau.foxburau import burau_matrix

        one = LaurentPoly.one()
        c = P({0: 1, 1: -1, -1: -1})
        d = P({-2: 1, -1: -1, 0: 1})
        cubic = BivariatePoly.make([LaurentPoly.t_power(-1), d, -c, one])
        x_minus_1 = BivariatePoly.make([LaurentPoly.constant(-1), one])
        assert charpoly(burau_matrix(ex2).matrix) == x_minus_1 * cubic

    def test_dimension_guard(self):
        with pytest.raises(ValueError):
            charpoly(LaurentMatrix.identity(13))

    def test_determinant_of_triangular(self):
        one = LaurentPoly.one()
        zero = LaurentPoly.zero()
        t = LaurentPoly.t_power(1)
        m = LaurentMatrix(((t, one), (zero, t)))
        poly = charpoly(m)
        # (X - t)^2 = t^2 - 2t X + X^2
        expected = BivariatePoly.make([P({2: 1}), P({1: -2}), one])
        assert poly == expected


def test_matrix_product_and_identity():
    one = LaurentPoly.one()
    zero = LaurentPoly.zero()
    t = LaurentPoly.t_power(1)
    m = LaurentMatrix(((one - t, t), (one, zero)))
    identity = LaurentMatrix.identity(2)
    assert m * identity == m
    inverse = LaurentMatrix(((zero, one), (LaurentPoly.t_power(-1),
                                           one - LaurentPoly.t_power(-1))))
    assert m * inverse == identity


def test_bivariate_det_of_constant_matrix():
    t = LaurentPoly.t_power(1)
    entries = [[BivariatePoly.make([t])]]
    assert bivariate_det(entries) == BivariatePoly.make([t])
