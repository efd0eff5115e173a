"""Core multivector arithmetic: products, involutions, determinant, inverse."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cl3 import (
    InvolutionKind,
    Multivector,
    NonInvertibleError,
    NormUndefinedError,
    Signature,
    SignatureMismatchError,
    adjugate,
    blade,
    blades,
    det_norm,
    determinant,
    geometric_product,
    grade_select,
    inverse,
    involute,
    sign_table,
)
from conftest import ALL_SIGS, max_err, rand_mv
from reference_values import REF_COEFFS, REF_DET

# Hand-derived CL30 blade product table in the order
# [1, e1, e2, e3, e12, e13, e23, e123]: worked out on paper from the
# generator relations, independently of the programmatic construction.
CL30_INDEX = [
    [0, 1, 2, 3, 4, 5, 6, 7],
    [1, 0, 4, 5, 2, 3, 7, 6],
    [2, 4, 0, 6, 1, 7, 3, 5],
    [3, 5, 6, 0, 7, 1, 2, 4],
    [4, 2, 1, 7, 0, 6, 5, 3],
    [5, 3, 7, 1, 6, 0, 4, 2],
    [6, 7, 3, 2, 5, 4, 0, 1],
    [7, 6, 5, 4, 3, 2, 1, 0],
]
CL30_SIGN = [
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, -1, 1, 1, -1, -1, 1, -1],
    [1, -1, -1, 1, 1, -1, -1, 1],
    [1, -1, 1, 1, -1, -1, 1, -1],
    [1, -1, -1, 1, 1, -1, -1, 1],
    [1, 1, -1, 1, -1, 1, -1, -1],
    [1, 1, -1, 1, -1, 1, -1, -1],
]


def test_cl30_sign_table_snapshot():
    index, sign = sign_table(Signature.CL30)
    assert index.tolist() == CL30_INDEX
    assert sign.tolist() == CL30_SIGN


mv_coeffs = st.lists(
    st.floats(min_value=-2.0, max_value=2.0, allow_nan=False), min_size=8, max_size=8
)
sig_st = st.sampled_from(list(Signature))


@pytest.mark.parametrize("sig", ALL_SIGS)
def test_generator_squares(sig):
    for k, sq in enumerate(sig.squares, start=1):
        e = blade(sig, f"e{k}")
        assert (e * e).c.tolist() == [float(sq), 0, 0, 0, 0, 0, 0, 0]


@pytest.mark.parametrize("sig", ALL_SIGS)
def test_generator_anticommutation(sig):
    for i in range(1, 4):
        for j in range(1, 4):
            if i == j:
                continue
            ei, ej = blade(sig, f"e{i}"), blade(sig, f"e{j}")
            assert max_err(ei * ej, -(ej * ei)) == 0.0


def test_product_examples():
    cl30, cl03 = Signature.CL30, Signature.CL03
    assert (blade(cl30, "e1") * blade(cl30, "e1")).c[0] == 1.0
    assert (blade(cl03, "e1") * blade(cl03, "e1")).c[0] == -1.0
    for sig in ALL_SIGS:
        assert blade(sig, "e1") * blade(sig, "e3") == blade(sig, "e13")
        assert blade(sig, "e3") * blade(sig, "e1") == blade(sig, "e13", -1.0)
    assert blade(cl30, "e12") * blade(cl30, "e13") == blade(cl30, "e23", -1.0)


def test_pseudoscalar_square_and_centrality(rng):
    for sig in ALL_SIGS:
        i_mv = blade(sig, "e123")
        assert (i_mv * i_mv).c[0] == sig.i_square
        x = rand_mv(rng, sig)
        assert max_err(i_mv * x, x * i_mv) == 0.0


@given(sig=sig_st, a=mv_coeffs, b=mv_coeffs, c=mv_coeffs)
@settings(max_examples=60, deadline=None)
def test_associativity_distributivity(sig, a, b, c):
    x, y, z = (Multivector(sig, v) for v in (a, b, c))
    assoc = max_err((x * y) * z, x * (y * z))
    scale = max(1.0, float(np.abs(((x * y) * z).c).max()))
    assert assoc <= 1e-12 * scale
    dist = max_err(x * (y + z), x * y + x * z)
    assert dist <= 1e-12 * max(1.0, float(np.abs((x * y + x * z).c).max()))


def test_signature_mismatch_errors(rng):
    x = rand_mv(rng, Signature.CL30)
    y = rand_mv(rng, Signature.CL03)
    with pytest.raises(SignatureMismatchError):
        geometric_product(x, y)
    with pytest.raises(SignatureMismatchError):
        x + y


def test_multivector_validation():
    with pytest.raises(ValueError):
        Multivector(Signature.CL30, [1, 2, 3])
    with pytest.raises(ValueError):
        Multivector(Signature.CL30, [np.inf, 0, 0, 0, 0, 0, 0, 0])


def test_involution_examples():
    cl30 = Signature.CL30
    assert involute(blade(cl30, "e12"), InvolutionKind.REVERSE) == blade(cl30, "e12", -1.0)
    x = blade(cl30, "e1") + blade(cl30, "e12")
    gi = involute(x, InvolutionKind.GRADE_INVERSE)
    assert gi == blade(cl30, "e1", -1.0) + blade(cl30, "e12")


@given(sig=sig_st, coeffs=mv_coeffs, kind=st.sampled_from(list(InvolutionKind)))
@settings(max_examples=60, deadline=None)
def test_involutions_are_involutions(sig, coeffs, kind):
    x = Multivector(sig, coeffs)
    assert involute(involute(x, kind), kind) == x


def test_involution_composition(rng):
    for sig in ALL_SIGS:
        x = rand_mv(rng, sig)
        both = involute(involute(x, InvolutionKind.REVERSE), InvolutionKind.GRADE_INVERSE)
        assert both == involute(x, InvolutionKind.REVERSE_GRADE_INVERSE)


def test_involutions_are_antiautomorphic_or_automorphic(rng):
    # reverse(xy) = reverse(y) reverse(x); gradeinv(xy) = gradeinv(x) gradeinv(y)
    for sig in ALL_SIGS:
        x, y = rand_mv(rng, sig), rand_mv(rng, sig)
        rev = lambda m: involute(m, InvolutionKind.REVERSE)
        gi = lambda m: involute(m, InvolutionKind.GRADE_INVERSE)
        assert max_err(rev(x * y), rev(y) * rev(x)) < 1e-12
        assert max_err(gi(x * y), gi(x) * gi(y)) < 1e-12


def test_grade_select_examples():
    cl30 = Signature.CL30
    x = Multivector(cl30, [2.0, 3.0, 0, 0, 0, 0, 0, 0])
    assert grade_select(x, 0) == Multivector.scalar(cl30, 2.0)
    assert grade_select(blade(cl30, "e13"), 2) == blade(cl30, "e13")
    with pytest.raises(ValueError):
        grade_select(x, 4)


@given(sig=sig_st, coeffs=mv_coeffs)
@settings(max_examples=40, deadline=None)
def test_grade_partition(sig, coeffs):
    x = Multivector(sig, coeffs)
    total = Multivector.zero(sig)
    for g in range(4):
        total = total + grade_select(x, g)
    assert total == x


def test_determinant_reference_value():
    x = Multivector(Signature.CL30, REF_COEFFS)
    assert determinant(x) == REF_DET


def test_determinant_trivial_cases():
    for sig in ALL_SIGS:
        assert determinant(Multivector.scalar(sig, 1.0)) == 1.0
        assert determinant(Multivector.scalar(sig, -3.0)) == 81.0


def test_determinant_multiplicative(rng):
    for sig in ALL_SIGS:
        for _ in range(30):
            x, y = rand_mv(rng, sig), rand_mv(rng, sig)
            dx, dy, dxy = determinant(x), determinant(y), determinant(x * y)
            assert abs(dxy - dx * dy) <= 1e-10 * max(1.0, abs(dx * dy))


def test_adjugate_two_sided(rng):
    for sig in ALL_SIGS:
        x = rand_mv(rng, sig)
        adj = adjugate(x)
        det = determinant(x)
        scale = max(1.0, float(np.abs(x.c).sum()) ** 4)
        assert max_err(x * adj, Multivector.scalar(sig, det)) <= 1e-10 * scale
        assert max_err(adj * x, Multivector.scalar(sig, det)) <= 1e-10 * scale


def test_inverse_examples():
    cl30 = Signature.CL30
    assert inverse(Multivector.scalar(cl30, 2.0)).inverse == Multivector.scalar(cl30, 0.5)
    assert inverse(blade(cl30, "e1")).inverse == blade(cl30, "e1")


def test_inverse_random_identity(rng):
    one = np.eye(8)[0]
    for sig in ALL_SIGS:
        for _ in range(50):
            x = rand_mv(rng, sig)
            got = geometric_product(x, inverse(x).inverse)
            assert max_err(got, one) <= 1e-12 * max(1.0, float(np.abs(x.c).sum()) ** 4)


def test_non_invertible_carries_partial_results():
    cl30 = Signature.CL30
    x = Multivector.scalar(cl30, 1.0) + blade(cl30, "e1")  # (1+e1)(1-e1) = 0
    with pytest.raises(NonInvertibleError) as exc:
        inverse(x)
    assert exc.value.determinant == 0.0
    assert isinstance(exc.value.adjugate, Multivector)


def test_det_norm_reference():
    x = Multivector(Signature.CL30, REF_COEFFS)
    assert abs(det_norm(x) - REF_DET ** 0.25) < 1e-10
    assert det_norm(Multivector.scalar(Signature.CL30, 1.0)) == 1.0


def test_det_norm_scales_linearly(rng):
    for sig in (Signature.CL30, Signature.CL03):
        x = rand_mv(rng, sig)
        n = det_norm(x)
        for s in (0.5, 2.0, 7.25):
            assert abs(det_norm(x * s) - s * n) <= 1e-10 * max(1.0, s * n)


def test_det_norm_negative_determinant_errors():
    x = Multivector(Signature.CL21, [1, 1, 0, 1, 0, 0, 1, 0])
    assert determinant(x) == -4.0
    with pytest.raises(NormUndefinedError):
        det_norm(x)


def test_blades_helper():
    table = blades(Signature.CL12)
    assert set(table) == {"1", "e1", "e2", "e3", "e12", "e13", "e23", "e123"}
    assert table["e12"].c[4] == 1.0
    with pytest.raises(ValueError):
        blade(Signature.CL12, "e31")
