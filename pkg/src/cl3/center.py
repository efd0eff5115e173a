"""Center decomposition of (vector + bivector) squares and its isolated roots.

For any multivector the square of its vector + bivector part lands in the
center span{1, e123}.  The scalar/pseudoscalar pair (a_s, a_i) of that
square drives the exponential factor tables, and its isolated square roots
a_r + a_p*e123 exist under algebra-specific conditions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import Multivector, Signature
from .exceptions import NoIsolatedRootError

__all__ = ["CenterElement", "center_decompose", "center_product", "sqrt_center"]


@dataclass(frozen=True)
class CenterElement:
    """Element a_s + a_i * e123 of the algebra center."""

    a_s: float
    a_i: float

    def as_multivector(self, sig: Signature) -> Multivector:
        c = np.zeros(8)
        c[0] = self.a_s
        c[7] = self.a_i
        return Multivector(sig, c)


def center_product(x: CenterElement, y: CenterElement, sig: Signature) -> CenterElement:
    """Product of two center elements under the signature's pseudoscalar square."""
    i2 = sig.i_square
    return CenterElement(
        x.a_s * y.a_s + i2 * x.a_i * y.a_i,
        x.a_s * y.a_i + x.a_i * y.a_s,
    )


def center_decompose(x: Multivector) -> CenterElement:
    """Scalar/pseudoscalar pair (a_s, a_i) of the squared vector+bivector part.

    Scalar and pseudoscalar coefficients of ``x`` are ignored.  Sign
    conventions follow the per-algebra factor tables: for CL03 the pair
    satisfies (a + A)^2 = -(a_s + a_i*e123), for the other three algebras
    (a + A)^2 = +(a_s + a_i*e123).
    """
    a1, a2, a3, a12, a13, a23 = (float(v) for v in x.c[1:7])
    cross = 2.0 * (a3 * a12 - a2 * a13 + a1 * a23)
    sig = x.sig
    if sig is Signature.CL03:
        a_s = a1 * a1 + a2 * a2 + a3 * a3 + a12 * a12 + a13 * a13 + a23 * a23
        return CenterElement(a_s, -cross)
    if sig is Signature.CL30:
        a_s = a1 * a1 + a2 * a2 + a3 * a3 - a12 * a12 - a13 * a13 - a23 * a23
    elif sig is Signature.CL12:
        a_s = a1 * a1 - a2 * a2 - a3 * a3 + a12 * a12 + a13 * a13 - a23 * a23
    else:  # CL21
        a_s = a1 * a1 + a2 * a2 - a3 * a3 - a12 * a12 + a13 * a13 + a23 * a23
    return CenterElement(a_s, cross)


def sqrt_center(c: CenterElement, sig: Signature) -> list[CenterElement]:
    """All isolated square roots of a center element.

    CL30/CL12 (e123^2 = -1) yield one +/- pair whenever a_s + |c| > 0.
    CL03/CL21 (e123^2 = +1) yield up to two +/- pairs, one per branch
    a_s +/- sqrt(a_s^2 - a_i^2) that is positive, provided a_s^2 > a_i^2.
    Violated conditions raise ``NoIsolatedRootError``.
    """
    a_s, a_i = c.a_s, c.a_i
    if sig.i_square == -1:
        radius = math.hypot(a_s, a_i)
        # a_s + radius cancels badly for a_s < 0; rewrite via the conjugate.
        base = a_s + radius if a_s >= 0.0 else (a_i * a_i) / (radius - a_s)
        if base <= 0.0:
            raise NoIsolatedRootError(
                f"center {a_s:.6g} + {a_i:.6g}*e123 has no isolated root in {sig.name}"
            )
        denom = math.sqrt(2.0 * base)
        root = CenterElement(base / denom, a_i / denom)
        return [root, CenterElement(-root.a_s, -root.a_i)]

    disc = (a_s - a_i) * (a_s + a_i)
    roots: list[CenterElement] = []
    if disc > 0.0:
        d = math.sqrt(disc)
        plus = a_s + d
        # a_s - d cancels for small |a_i|; its product with a_s + d is a_i^2.
        minus = (a_i * a_i) / plus if plus > 0.0 else a_s - d
        for branch in (plus, minus):
            if branch > 0.0:
                denom = math.sqrt(2.0 * branch)
                root = CenterElement(branch / denom, a_i / denom)
                roots.append(root)
                roots.append(CenterElement(-root.a_s, -root.a_i))
    if not roots:
        raise NoIsolatedRootError(
            f"center {a_s:.6g} + {a_i:.6g}*e123 has no isolated root in {sig.name}"
        )
    return roots
