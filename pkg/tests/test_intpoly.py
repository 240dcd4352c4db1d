import pytest
from hypothesis import given, settings, strategies as st

from chowforge.intpoly import (
    NotHomogeneousError,
    Polynomial,
    canonical_string,
    poly_add,
    poly_mul,
    ring_make,
    substitute,
    variable,
    weighted_degree,
)


def V(ring, name):
    return Polynomial.var(ring, name)


class TestRingMake:
    def test_basic_construction(self):
        R = ring_make([("t", 1), ("c1", 1), ("c2", 2)])
        assert len(R) == 3
        assert R.names == ("t", "c1", "c2")
        assert R.weight_of("c2") == 2

    def test_duplicate_name_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            ring_make([("x", 1), ("x", 1)])

    def test_non_positive_weight_rejected(self):
        with pytest.raises(ValueError, match="weight"):
            ring_make([("c2", 0)])
        with pytest.raises(ValueError, match="weight"):
            ring_make([("c2", -3)])

    def test_bad_identifier_rejected(self):
        with pytest.raises(ValueError, match="identifier"):
            ring_make([("X", 1)])

    def test_value_equality(self):
        a = ring_make([("t", 1), ("c2", 2)])
        b = ring_make([("t", 1), ("c2", 2)])
        assert a == b and hash(a) == hash(b)
        assert a != ring_make([("c2", 2), ("t", 1)])

    def test_with_var_uses_registry_order(self):
        R = ring_make([("c1", 1), ("c2", 2), ("xi2a", 1), ("xi2b", 1)])
        assert R.with_var("t", 1).names == ("t", "c1", "c2", "xi2a", "xi2b")
        R2 = ring_make([("t", 1), ("c1", 1), ("c2", 2)])
        assert R2.with_var("u", 1).names == ("t", "u", "c1", "c2")
        assert R2.with_var("xi1", 1).names == ("t", "c1", "c2", "xi1")
        with pytest.raises(ValueError, match="collision"):
            R2.with_var("t", 1)


RING = ring_make([("t", 1), ("c1", 1), ("c2", 2)])
XRING = ring_make([("c1", 1), ("c2", 2), ("xi", 1)])
TORUS = ring_make([("xi", 1), ("t1", 1), ("t2", 1)])


class TestArithmetic:
    def test_additive_inverse(self):
        t = V(RING, "t")
        assert poly_add(2 * t, -2 * t).is_zero()

    def test_cancellation(self):
        c1, c2, xi = (V(XRING, n) for n in ("c1", "c2", "xi"))
        assert poly_add(xi ** 2 - c1 * xi, c1 * xi + c2) == xi ** 2 + c2

    def test_disjoint_supports(self):
        c1, c2 = V(RING, "c1"), V(RING, "c2")
        s = poly_add(4 * c2, -(c1 ** 2))
        assert s == 4 * c2 - c1 ** 2
        assert len(s.terms) == 2

    def test_binomial_expansion(self):
        xi, t1, t2 = (V(TORUS, n) for n in ("xi", "t1", "t2"))
        assert poly_mul(xi - t1, xi - t2) == xi ** 2 - (t1 + t2) * xi + t1 * t2

    def test_multiplicative_identity(self):
        p = 3 * V(RING, "t") ** 2 - V(RING, "c2")
        assert poly_mul(p, Polynomial.const(RING, 1)) == p

    def test_difference_of_squares(self):
        c1, xi = V(XRING, "c1"), V(XRING, "xi")
        assert poly_mul(2 * xi - 2 * c1, 2 * xi + 2 * c1) == 4 * xi ** 2 - 4 * c1 ** 2

    def test_ring_mismatch(self):
        with pytest.raises(ValueError, match="ring mismatch"):
            poly_add(V(RING, "t"), V(XRING, "xi"))


class TestWeightedDegree:
    def test_product_relation_degree(self):
        # xi2a*xi2b - 4ab*c2 at a = b = 1 is homogeneous of degree 2
        R = ring_make([("c1", 1), ("c2", 2), ("xi2a", 1), ("xi2b", 1)])
        p = V(R, "xi2a") * V(R, "xi2b") - 4 * V(R, "c2")
        assert weighted_degree(p) == 2

    def test_mixed_degrees_report_witnesses(self):
        p = V(RING, "t") + V(RING, "c2")
        with pytest.raises(NotHomogeneousError) as err:
            weighted_degree(p)
        degrees = {err.value.witness_a[1], err.value.witness_b[1]}
        assert degrees == {1, 2}

    def test_linear_row_degree(self):
        n = 3
        p = 2 * (2 * n - 1) * V(RING, "t")
        assert p == 10 * V(RING, "t")
        assert weighted_degree(p) == 1

    def test_zero_degree_undefined(self):
        with pytest.raises(ValueError, match="zero"):
            weighted_degree(Polynomial.zero(RING))

    def test_zero_counts_as_homogeneous(self):
        assert Polynomial.zero(RING).is_homogeneous()


class TestSubstitute:
    def test_hyperplane_shift(self):
        # xi -> xi - a*c1 applied to 2(2a-1)*xi - 2a(2a-1)*c1 at a = 1
        xi, c1 = V(XRING, "xi"), V(XRING, "c1")
        p = 2 * xi - 2 * c1
        images = {n: V(XRING, n) for n in ("c1", "c2")}
        images["xi"] = xi - c1
        assert substitute(p, images) == 2 * xi - 4 * c1

    def test_identity_map(self):
        p = V(XRING, "xi") ** 2 - V(XRING, "c1") * V(XRING, "xi") + V(XRING, "c2")
        images = {n: V(XRING, n) for n in XRING.names}
        assert substitute(p, images) == p

    def test_torsor_substitution(self):
        # xi -> n*c1 - t at n = 2 sends 2(2n-1)*xi - 2n(2n-1)*c1 to -6t
        n = 2
        src = ring_make([("t", 1), ("c1", 1), ("c2", 2), ("xi", 1)])
        xi, t, c1 = V(src, "xi"), V(src, "t"), V(src, "c1")
        p = 2 * (2 * n - 1) * xi - 2 * n * (2 * n - 1) * c1
        images = {m: V(src, m) for m in ("t", "c1", "c2")}
        images["xi"] = n * c1 - t
        assert substitute(p, images) == -6 * t

    def test_missing_image(self):
        with pytest.raises(ValueError, match="missing image"):
            substitute(V(RING, "t"), {})

    def test_degree_violating_image(self):
        images = {"t": V(RING, "c2")}
        with pytest.raises(ValueError, match="degree"):
            substitute(V(RING, "t"), images)

    def test_zero_image_allowed(self):
        # needed at degenerate parameters, e.g. xi -> (n-1)*c1 at n = 1
        images = {"t": Polynomial.zero(RING), "c1": V(RING, "c1")}
        assert substitute(V(RING, "t") * V(RING, "c1"), images).is_zero()


class TestCanonicalString:
    def test_interface_contract_example(self):
        t, c1, c2 = (V(RING, n) for n in RING.names)
        assert canonical_string(-2 * t * c1 + 4 * c2) == "-2*t*c1 + 4*c2"

    def test_zero(self):
        assert canonical_string(Polynomial.zero(RING)) == "0"

    def test_unit_coefficients_elided(self):
        t, c1 = V(RING, "t"), V(RING, "c1")
        assert canonical_string(t - c1) == "t - c1"

    def test_constants_and_powers(self):
        t = V(RING, "t")
        assert canonical_string(Polynomial.const(RING, -7)) == "-7"
        assert canonical_string(t ** 3 + 5) == "t^3 + 5"

    def test_graded_lex_order(self):
        t, c1, c2 = (V(RING, n) for n in RING.names)
        p = c2 + c1 ** 2 + t * c1 + t ** 2
        assert canonical_string(p) == "t^2 + t*c1 + c1^2 + c2"
        # higher weighted degree comes first
        assert canonical_string(c2 + t) == "c2 + t"

    def test_injectivity_on_samples(self):
        t, c1, c2 = (V(RING, n) for n in RING.names)
        samples = [t, -t, 2 * t, c1, c2, t * c1, t + c1, t - c1, t ** 2, c2 - t ** 2]
        strings = {canonical_string(p) for p in samples}
        assert len(strings) == len(samples)


# ----------------------------------------------------------------------------
# property tests
# ----------------------------------------------------------------------------

_exps = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2))
_polys = st.dictionaries(_exps, st.integers(-9, 9), max_size=6).map(
    lambda d: Polynomial(RING, d)
)


@settings(max_examples=1000, deadline=None)
@given(_polys, _polys, _polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


def _random_homogeneous(draw, ring, degree):
    from chowforge.grideal import monomial_basis

    basis = monomial_basis(ring, degree)
    coeffs = draw(
        st.lists(st.integers(-9, 9), min_size=len(basis), max_size=len(basis))
    )
    return Polynomial(ring, dict(zip(basis, coeffs)))


@st.composite
def _homog_pair_with_images(draw):
    d1 = draw(st.integers(1, 3))
    d2 = draw(st.integers(1, 3))
    p = _random_homogeneous(draw, RING, d1)
    q = _random_homogeneous(draw, RING, d2)
    target = ring_make([("x", 1), ("y", 1)])
    lin = lambda: draw(st.integers(-3, 3)) * V(target, "x") + draw(
        st.integers(-3, 3)
    ) * V(target, "y")
    quad = _random_homogeneous(draw, target, 2)
    images = {"t": lin(), "c1": lin(), "c2": quad}
    return p, q, images, target


@settings(max_examples=300, deadline=None)
@given(_homog_pair_with_images())
def test_substitute_is_graded_homomorphism(data):
    p, q, images, target = data
    sp = p.substitute(images, target)
    sq = q.substitute(images, target)
    assert (p * q).substitute(images, target) == sp * sq
    assert (p + q).substitute(images, target) == sp + sq
    if p.terms and sp.terms:
        assert sp.weighted_degree() == p.weighted_degree()
