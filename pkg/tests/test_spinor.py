import cmath
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FAMILIES, hyperbolics, params_strategy, quaternions, rationals
from tribospin import (
    ConjugationKind,
    HSpinor,
    HyperbolicNumber,
    RepeatedRoots,
    SequenceParams,
    SplitQuaternion,
    ZeroDenominator,
    ZeroDivisor,
    conjugate,
    f_map,
    family_lookup,
    generating_function_check,
    gtn_quaternion,
    spinor_binet,
    spinor_det_cereceda,
    spinor_det_hessenberg,
    spinor_norm,
    spinor_term,
    spinor_term_by_matrix,
    sq_conjugate,
    sq_norm,
)
from tribospin.quaternion import gtn_quaternions
from tribospin.spinor import (
    C,
    ZERO,
    egf_check,
    egf_closed_form,
    egf_series,
    f_inverse,
    gf_numerator,
    gf_numerator_polynomials,
    initial_spinors,
    pgf_check,
    pgf_closed_form,
    pgf_series,
    series_times_denominator,
    spinor_sum_even,
    spinor_sum_first,
    spinor_sum_odd,
    spinor_sum_special_s1,
    spinor_sums,
    spinor_terms,
    zeta,
)

H = HyperbolicNumber
TRIB = SequenceParams(0, 1, 1, 1, 1, 1)
JP = SequenceParams(1, 1, 1, 0, 1, 2)
STAR, BAR, TILDE, CHECK = ConjugationKind


def sp(a, b, c, d):
    return HSpinor(H(a, b), H(c, d))


def vterms(p, count):
    v = [p.a, p.b, p.c]
    while len(v) < count:
        v.append(p.r * v[-1] + p.s * v[-2] + p.t * v[-3])
    return v


spinors = st.builds(HSpinor, hyperbolics, hyperbolics)


class TestFMap:
    def test_example(self):
        assert f_map(SplitQuaternion(1, 2, 3, 4)) == sp(1, 4, -2, 3)

    def test_zero(self):
        assert f_map(SplitQuaternion(0)) == ZERO

    @given(quaternions)
    def test_conjugate_image(self, q):
        assert f_map(sq_conjugate(q)) == sp(q.q0, -q.q3, q.q1, -q.q2)
        assert f_map(sq_conjugate(q)) == conjugate(f_map(q), STAR)

    @given(quaternions, quaternions, rationals)
    def test_linear(self, q, p, w):
        assert f_map(q + p) == f_map(q) + f_map(p)
        assert f_map(q * w) == f_map(q) * w

    @given(quaternions)
    def test_injective(self, q):
        assert f_inverse(f_map(q)) == q
        assert (f_map(q) == ZERO) == (q == SplitQuaternion(0))

    @given(quaternions)
    def test_norm_preserved(self, q):
        n = spinor_norm(f_map(q))
        assert n.jpart == 0 and n.re == sq_norm(q)


class TestSpinorTerm:
    def test_jacobsthal_padovan(self):
        assert spinor_terms(JP, 3) == [sp(1, 3, -1, 1), sp(1, 3, -1, 3), sp(1, 5, -3, 3)]

    def test_tribonacci_three(self):
        assert spinor_term(TRIB, 3) == sp(2, 13, -4, 7)

    def test_initial_spinors_symbolic(self):
        a, b, c, r, s, t = sympy.symbols("a b c r s t")
        v = [a, b, c]
        for _ in range(3):
            v.append(sympy.expand(r * v[-1] + s * v[-2] + t * v[-3]))
        vals = {a: 2, b: -3, c: Fraction(1, 2), r: 3, s: Fraction(-2, 3), t: 5}
        params = SequenceParams(*(vals[x] for x in (a, b, c, r, s, t)))
        got = initial_spinors(params)
        for n in range(3):
            want = [v[n], v[n + 3], -v[n + 1], v[n + 2]]
            assert [Fraction(str(sympy.nsimplify(w.subs(vals)))) for w in want] == list(got[n].components)

    @pytest.mark.parametrize("fam", FAMILIES, ids=lambda f: f.name)
    def test_is_f_image_and_recurs(self, fam):
        p = fam.params
        phis = spinor_terms(p, 101)
        assert phis == [f_map(q) for q in gtn_quaternions(p, 101)]
        assert phis[37] == f_map(gtn_quaternion(p, 37))
        for n in range(3, 101):
            assert phis[n] == phis[n - 1] * p.r + phis[n - 2] * p.s + phis[n - 3] * p.t

    def test_json(self):
        x = sp(1, 3, -1, 1)
        assert x.to_json() == {"c1": {"re": "1", "j": "3"}, "c2": {"re": "-1", "j": "1"}}
        assert HSpinor.from_json(x.to_json()) == x


class TestConjugations:
    def test_bar(self):
        assert conjugate(sp(1, 4, -2, 3), BAR) == sp(1, -4, -2, -3)

    def test_check(self):
        assert conjugate(sp(1, 4, -2, 3), CHECK) == sp(2, 3, 1, -4)

    def test_string_kind(self):
        assert conjugate(sp(1, 4, -2, 3), "tilde") == conjugate(sp(1, 4, -2, 3), TILDE)

    def test_sequence_formulas(self):
        v = vterms(TRIB, 10)
        x = spinor_term(TRIB, 4)
        V = v[4:]
        assert conjugate(x, STAR) == sp(V[0], -V[3], V[1], -V[2])
        assert conjugate(x, BAR) == sp(V[0], -V[3], -V[1], -V[2])
        assert conjugate(x, TILDE) == sp(-V[2], -V[1], V[3], -V[0])
        assert conjugate(x, CHECK) == sp(V[1], V[2], V[0], -V[3])

    @given(spinors)
    def test_bar_involution(self, x):
        assert conjugate(conjugate(x, BAR), BAR) == x
        assert conjugate(conjugate(x, STAR), STAR) == x

    @given(spinors)
    def test_relations_as_matrix_identities(self, x):
        j = H(0, 1)
        assert conjugate(x, BAR) == conjugate(x, CHECK).apply(C)
        assert conjugate(x, CHECK) == -(j * conjugate(x, TILDE))
        assert conjugate(x, BAR) == -(j * conjugate(x, TILDE).apply(C))

    @pytest.mark.parametrize("fam", FAMILIES, ids=lambda f: f.name)
    def test_relations_on_families(self, fam):
        j = H(0, 1)
        for x in spinor_terms(fam.params, 30):
            assert conjugate(x, BAR) == conjugate(x, CHECK).apply(C)
            assert conjugate(x, CHECK) == -(j * conjugate(x, TILDE))


class TestNorm:
    def test_example(self):
        assert spinor_norm(f_map(SplitQuaternion(1, 2, 3, 4))) == -20

    def test_unit(self):
        assert spinor_norm(sp(1, 0, 0, 0)) == 1

    @pytest.mark.parametrize("fam", FAMILIES, ids=lambda f: f.name)
    def test_families(self, fam):
        v = vterms(fam.params, 105)
        for n, x in enumerate(spinor_terms(fam.params, 101)):
            nrm = spinor_norm(x)
            assert nrm.jpart == 0
            assert nrm.re == v[n] ** 2 + v[n + 1] ** 2 - v[n + 2] ** 2 - v[n + 3] ** 2


class TestGeneratingFunction:
    @settings(max_examples=30, deadline=None)
    @given(params_strategy)
    def test_random(self, p):
        assert generating_function_check(p, 64)

    def test_degree_zero(self):
        assert gf_numerator(TRIB)[0] == spinor_term(TRIB, 0)

    def test_needs_three(self):
        with pytest.raises(ValueError):
            generating_function_check(TRIB, 2)

    def test_jacobsthal_padovan_numerator_by_sympy(self):
        # Oracle: expand the rational function's numerator symbolically.
        x = sympy.symbols("x")
        phis = spinor_terms(JP, 12)
        den = 1 - x ** 2 - 2 * x ** 3
        want = []
        for slot in range(4):
            series = sum(int(phis[n].components[slot]) * x ** n for n in range(12))
            num = sympy.Poly(sympy.expand(series * den), x)
            coeffs = [num.coeff_monomial(x ** k) for k in range(3)]
            want.append([Fraction(int(c)) for c in coeffs])
        got = [list(pl.coeffs) + [Fraction(0)] * (3 - len(pl.coeffs)) for pl in gf_numerator_polynomials(JP)]
        assert got == want
        # c1 = 1 + x + (3 + 3x + 2x^2) j ; c2 = -1 - x - 2x^2 + (1 + 3x + 2x^2) j
        assert got == [[1, 1, 0], [3, 3, 2], [-1, -1, -2], [1, 3, 2]]

    def test_higher_coefficients_vanish(self):
        prod = series_times_denominator(TRIB, 20)
        assert all(c == ZERO for c in prod[3:21])


class TestBinet:
    def test_tribonacci_ten(self):
        c1, c2 = spinor_binet(TRIB, 10)
        exact = spinor_term(TRIB, 10)
        assert exact == sp(149, 927, -274, 504)
        for z, e in zip((c1.re, c1.jpart, c2.re, c2.jpart), exact.components):
            assert abs(z - float(e)) <= 1e-6 * max(1, abs(e))
            assert abs(z.imag) < 1e-6

    def test_initial(self):
        c1, c2 = spinor_binet(JP, 0)
        for z, e in zip((c1.re, c1.jpart, c2.re, c2.jpart), spinor_term(JP, 0).components):
            assert abs(z - float(e)) < 1e-9

    def test_repeated_roots(self):
        with pytest.raises(RepeatedRoots):
            spinor_binet(SequenceParams(1, 0, 0, 3, -3, 1), 2)

    def test_zeta(self):
        sigma = 1.5 + 0.5j
        first, second = zeta(sigma)
        assert first.re == 1 and first.jpart == sigma ** 3
        assert second.re == -sigma and second.jpart == sigma ** 2


def flat(pair):
    c1, c2 = pair
    return (c1.re, c1.jpart, c2.re, c2.jpart)


class TestExponentialGF:
    def test_zero(self):
        exact = [float(e) for e in spinor_term(TRIB, 0).components]
        for z, e in zip(flat(egf_closed_form(TRIB, 0.0)), exact):
            assert abs(z - e) < 1e-9
        assert flat(egf_series(TRIB, 0.0)) == tuple(complex(e) for e in exact)

    def test_half(self):
        closed, series = flat(egf_closed_form(TRIB, 0.5)), flat(egf_series(TRIB, 0.5, 40))
        for a, b in zip(closed, series):
            assert abs(a - b) <= 1e-6 * max(1, abs(b))

    def test_poisson_scaling(self):
        f = cmath.exp(-0.5)
        for a, b in zip(flat(pgf_closed_form(TRIB, 0.5)), flat(egf_closed_form(TRIB, 0.5))):
            assert abs(a - f * b) < 1e-12 * max(1, abs(b))
        for a, b in zip(flat(pgf_series(TRIB, 0.5)), flat(egf_series(TRIB, 0.5))):
            assert abs(a - f * b) < 1e-12 * max(1, abs(b))

    def test_checks(self):
        assert egf_check(TRIB) and pgf_check(TRIB)

    def test_repeated_roots(self):
        with pytest.raises(RepeatedRoots):
            egf_check(SequenceParams(1, 0, 0, 3, -3, 1))


class TestMatrix:
    def test_zero(self):
        assert spinor_term_by_matrix(JP, 0) == spinor_term(JP, 0)

    def test_tribonacci_fifty(self):
        assert spinor_term_by_matrix(TRIB, 50) == spinor_term(TRIB, 50)

    def test_jacobsthal_padovan_matrix(self):
        assert JP.companion() == [[0, 1, 2], [1, 0, 0], [0, 1, 0]]

    @settings(max_examples=30, deadline=None)
    @given(params_strategy, st.integers(0, 40))
    def test_random(self, p, n):
        assert spinor_term_by_matrix(p, n) == spinor_term(p, n)


class TestSums:
    def test_jacobsthal_padovan_display(self):
        phi = spinor_terms(JP, 10)
        m = 5
        display = (phi[m + 3] + phi[m + 2] - phi[2] - phi[1]) / 2
        assert display == spinor_sum_first(JP, m) == sum(phi[:m + 1], ZERO)

    def test_m_zero(self):
        assert spinor_sum_first(TRIB, 0) == spinor_term(TRIB, 0)

    def test_pell_padovan(self):
        p = family_lookup("pell-padovan").params
        with pytest.raises(ZeroDenominator):
            spinor_sum_even(p, 3)
        with pytest.raises(ZeroDenominator):
            spinor_sum_odd(p, 3)

    def test_bundle(self):
        p = family_lookup("padovan").params
        first, even, odd = spinor_sums(p, 6)[:3]
        phi = spinor_terms(p, 14)
        assert first == sum(phi[:7], ZERO)
        assert even == sum(phi[0:13:2], ZERO)
        assert odd == sum(phi[1:14:2], ZERO)

    @settings(max_examples=40, deadline=None)
    @given(params_strategy, st.integers(0, 20))
    def test_special_s1(self, p, m):
        p = SequenceParams(p.a, p.b, p.c, p.r, 1, p.t)
        phi = spinor_terms(p, 2 * m + 2)
        if p.r + p.t == 0:
            with pytest.raises(ZeroDenominator):
                spinor_sum_special_s1(p, m, "even")
            return
        assert spinor_sum_special_s1(p, m, "even") == sum(phi[0:2 * m + 1:2], ZERO)
        assert spinor_sum_special_s1(p, m, "odd") == sum(phi[1:2 * m + 2:2], ZERO)


class TestDeterminants:
    def test_hessenberg_small(self):
        phi = spinor_terms(TRIB, 3)
        assert spinor_det_hessenberg(TRIB, 0) == phi[0]
        assert spinor_det_hessenberg(TRIB, 2) == phi[2]

    def test_hessenberg_tribonacci(self):
        assert spinor_det_hessenberg(TRIB, 8) == spinor_term(TRIB, 8)

    def test_cereceda(self):
        p = family_lookup("tribonacci-lucas").params
        assert spinor_det_cereceda(p, 5) == spinor_term(p, 5)
        assert spinor_det_cereceda(p, 0) == spinor_term(p, 0)

    def test_cereceda_tribonacci_null_cone(self):
        # phi0 = [2j; -1 + j]; the second component is a zero divisor.
        with pytest.raises(ZeroDivisor):
            spinor_det_cereceda(TRIB, 5)

    def test_cereceda_constructed_null_cone(self):
        # a = r c + s b + t a makes phi0's first component a + a j.
        p = SequenceParams(1, 2, 0, 1, 0, 1)
        assert spinor_term(p, 0).c1 == H(1, 1)
        with pytest.raises(ZeroDivisor):
            spinor_det_cereceda(p, 3)

    def test_cereceda_t_zero(self):
        with pytest.raises(ZeroDenominator):
            spinor_det_cereceda(SequenceParams(1, 2, 3, 1, 1, 0), 3)

    @settings(max_examples=30, deadline=None)
    @given(params_strategy, st.integers(0, 10))
    def test_random(self, p, n):
        assert spinor_det_hessenberg(p, n) == spinor_term(p, n)
        phi0 = spinor_term(p, 0)
        if p.t != 0 and not phi0.c1.is_null() and not phi0.c2.is_null():
            assert spinor_det_cereceda(p, n) == spinor_term(p, n)
