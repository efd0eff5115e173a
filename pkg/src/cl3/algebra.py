"""Multivector arithmetic in the four real Clifford algebras of 3D space.

Coefficients are stored in the fixed blade order

    [1, e1, e2, e3, e12, e13, e23, e123]

i.e. graded by scalar, vector, bivector, pseudoscalar, with ascending
generator indices inside each blade (``e13`` is the stored blade; ``e31``
is its negative and never appears).  The sign tables are derived from the
generator relations ``ei*ej + ej*ei = +/-2*delta_ij`` rather than entered
by hand.
"""

from __future__ import annotations

import enum
from typing import NamedTuple, Sequence

import numpy as np

from .exceptions import NonInvertibleError, NormUndefinedError, SignatureMismatchError

__all__ = [
    "BLADE_NAMES",
    "BLADE_GRADES",
    "Signature",
    "Multivector",
    "InvolutionKind",
    "InverseResult",
    "blade",
    "blades",
    "blade_product",
    "sign_table",
    "geometric_product",
    "involute",
    "grade_select",
    "determinant",
    "adjugate",
    "inverse",
    "det_norm",
]

BLADE_NAMES = ("1", "e1", "e2", "e3", "e12", "e13", "e23", "e123")
BLADE_GRADES = (0, 1, 1, 1, 2, 2, 2, 3)

# Bit i of a mask marks generator e_{i+1}.
_BLADE_MASKS = (0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111)
_MASK_TO_INDEX = {mask: idx for idx, mask in enumerate(_BLADE_MASKS)}

# Residue guard on the involution-product determinant, and the
# scale-invariant singularity cutoff |det| < 1e-12 * (sum |c_i|)^4.
_RESIDUE_TOL = 1e-10
_SINGULAR_TOL = 1e-12


class Signature(enum.Enum):
    """Metric signature (p, q): p generators square to +1, q to -1."""

    CL30 = (3, 0)
    CL03 = (0, 3)
    CL12 = (1, 2)
    CL21 = (2, 1)

    @property
    def p(self) -> int:
        return self.value[0]

    @property
    def q(self) -> int:
        return self.value[1]

    @property
    def squares(self) -> tuple[int, int, int]:
        """Squares of (e1, e2, e3); the first p generators are positive."""
        p = self.value[0]
        return tuple(1 if i < p else -1 for i in range(3))

    @property
    def i_square(self) -> int:
        """Square of the pseudoscalar e123 (-1 for CL30/CL12, +1 for CL03/CL21)."""
        s = self.squares
        return -s[0] * s[1] * s[2]

    @classmethod
    def from_name(cls, name: str) -> "Signature":
        try:
            return cls[name.upper().replace("(", "").replace(")", "").replace(",", "")]
        except KeyError:
            valid = ", ".join(sig.name.lower() for sig in cls)
            raise ValueError(f"unknown algebra {name!r}; expected one of {valid}") from None


def blade_product(mask_a: int, mask_b: int, squares: Sequence[int]) -> tuple[int, int]:
    """Product of two basis blades given as generator bitmasks.

    Returns ``(result_mask, sign)``.  The sign counts the generator swaps
    needed to interleave the two blades into ascending order and folds in
    the squares of the repeated generators.
    """
    swaps = 0
    a = mask_a >> 1
    while a:
        swaps += (a & mask_b).bit_count()
        a >>= 1
    sign = -1 if swaps & 1 else 1
    common = mask_a & mask_b
    i = 0
    while common:
        if common & 1:
            sign *= squares[i]
        common >>= 1
        i += 1
    return mask_a ^ mask_b, sign


class _SigTables(NamedTuple):
    index: np.ndarray   # (8, 8) target blade index
    sign: np.ndarray    # (8, 8) sign in {-1, 0, +1}
    flat: np.ndarray    # (8, 64) product tensor folded for two matmuls


def _build_tables(sig: Signature) -> _SigTables:
    index = np.zeros((8, 8), dtype=np.int8)
    sign = np.zeros((8, 8), dtype=np.int8)
    tensor = np.zeros((8, 8, 8))
    for i, mask_a in enumerate(_BLADE_MASKS):
        for j, mask_b in enumerate(_BLADE_MASKS):
            mask, s = blade_product(mask_a, mask_b, sig.squares)
            k = _MASK_TO_INDEX[mask]
            index[i, j] = k
            sign[i, j] = s
            tensor[i, j, k] = s
    index.flags.writeable = False
    sign.flags.writeable = False
    return _SigTables(index, sign, np.ascontiguousarray(tensor.reshape(8, 64)))


_TABLES = {sig: _build_tables(sig) for sig in Signature}


def sign_table(sig: Signature) -> tuple[np.ndarray, np.ndarray]:
    """(target index, sign) arrays of the 8x8 blade product table."""
    tables = _TABLES[sig]
    return tables.index.copy(), tables.sign.copy()


class Multivector:
    """Immutable 8-coefficient element of one of the four 3D algebras."""

    __slots__ = ("sig", "c")

    def __init__(self, sig: Signature, coeffs):
        c = np.array(coeffs, dtype=float).reshape(8)
        if not np.all(np.isfinite(c)):
            raise ValueError("multivector coefficients must be finite")
        c.flags.writeable = False
        self.sig = sig
        self.c = c

    @classmethod
    def zero(cls, sig: Signature) -> "Multivector":
        return cls(sig, np.zeros(8))

    @classmethod
    def scalar(cls, sig: Signature, value: float) -> "Multivector":
        c = np.zeros(8)
        c[0] = value
        return cls(sig, c)

    @property
    def scalar_part(self) -> float:
        return float(self.c[0])

    def grade(self, g: int) -> "Multivector":
        return grade_select(self, g)

    def reverse(self) -> "Multivector":
        return involute(self, InvolutionKind.REVERSE)

    def _check_sig(self, other: "Multivector") -> None:
        if self.sig is not other.sig:
            raise SignatureMismatchError(
                f"cannot combine {self.sig.name} and {other.sig.name} multivectors"
            )

    def __add__(self, other):
        if isinstance(other, Multivector):
            self._check_sig(other)
            return Multivector(self.sig, self.c + other.c)
        if isinstance(other, (int, float)):
            c = self.c.copy()
            c[0] += other
            return Multivector(self.sig, c)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return Multivector(self.sig, -self.c)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, (int, float)):
            return Multivector(self.sig, self.c * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return Multivector(self.sig, self.c * other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return Multivector(self.sig, self.c / other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.sig is other.sig and np.array_equal(self.c, other.c)

    __hash__ = None

    def __repr__(self):
        return f"Multivector(Signature.{self.sig.name}, {self.c.tolist()})"

    def __str__(self):
        parts = []
        for name, v in zip(BLADE_NAMES, self.c):
            if v == 0.0:
                continue
            term = f"{abs(v):.12g}" if name == "1" else f"{abs(v):.12g}*{name}"
            parts.append(("- " if v < 0 else "+ " if parts else "") + term)
        if not parts:
            return "0"
        head = parts[0]
        if head.startswith("- "):
            head = "-" + head[2:]
        return " ".join([head] + parts[1:])


def blade(sig: Signature, name: str, coeff: float = 1.0) -> Multivector:
    """Basis blade by name, e.g. ``blade(Signature.CL30, "e12")``."""
    try:
        idx = BLADE_NAMES.index(name)
    except ValueError:
        raise ValueError(f"unknown blade {name!r}; valid names: {', '.join(BLADE_NAMES)}") from None
    c = np.zeros(8)
    c[idx] = coeff
    return Multivector(sig, c)


def blades(sig: Signature) -> dict[str, Multivector]:
    """Name -> unit blade map for one algebra."""
    return {name: blade(sig, name) for name in BLADE_NAMES}


def geometric_product(x: Multivector, y: Multivector) -> Multivector:
    """Geometric (Clifford) product of two multivectors of the same algebra."""
    if x.sig is not y.sig:
        raise SignatureMismatchError(
            f"cannot multiply {x.sig.name} by {y.sig.name} multivector"
        )
    m = (x.c @ _TABLES[x.sig].flat).reshape(8, 8)
    return Multivector(x.sig, y.c @ m)


class InvolutionKind(enum.Enum):
    REVERSE = "reverse"
    GRADE_INVERSE = "grade-inverse"
    REVERSE_GRADE_INVERSE = "reverse-grade-inverse"


_INVOLUTION_SIGNS = {
    # Reverse flips grades 2 and 3, grade inverse flips 1 and 3,
    # their composition flips 1 and 2.
    InvolutionKind.REVERSE: np.array([1, 1, 1, 1, -1, -1, -1, -1], dtype=float),
    InvolutionKind.GRADE_INVERSE: np.array([1, -1, -1, -1, 1, 1, 1, -1], dtype=float),
    InvolutionKind.REVERSE_GRADE_INVERSE: np.array([1, -1, -1, -1, -1, -1, -1, 1], dtype=float),
}


def involute(x: Multivector, kind: InvolutionKind) -> Multivector:
    """Apply one of the three grade-sign involutions."""
    return Multivector(x.sig, x.c * _INVOLUTION_SIGNS[kind])


def grade_select(x: Multivector, g: int) -> Multivector:
    """Zero every coefficient whose blade is not of grade ``g``."""
    if g not in (0, 1, 2, 3):
        raise ValueError(f"grade must be in 0..3, got {g}")
    c = np.where(np.array(BLADE_GRADES) == g, x.c, 0.0)
    return Multivector(x.sig, c)


def _adjugate_with_det(x: Multivector) -> tuple[Multivector, float]:
    """Adjugate and determinant via the 3D involution product.

    The four-factor product x * rev(x) * gradeinv(x) * gradeinv(rev(x)) must
    be a scalar; a residue above tolerance means the sign tables are corrupt,
    so it is asserted rather than silently projected away.
    """
    rev = involute(x, InvolutionKind.REVERSE)
    gi = involute(x, InvolutionKind.GRADE_INVERSE)
    gi_rev = involute(rev, InvolutionKind.GRADE_INVERSE)
    adj = geometric_product(geometric_product(rev, gi), gi_rev)
    prod = geometric_product(x, adj)
    scale = float(np.abs(x.c).sum()) ** 4
    residue = float(np.abs(prod.c[1:]).max())
    assert residue <= _RESIDUE_TOL * max(scale, 1.0), (
        f"non-scalar residue {residue:.3e} in determinant product"
    )
    return adj, float(prod.c[0])


def determinant(x: Multivector) -> float:
    """Scalar determinant of a multivector."""
    return _adjugate_with_det(x)[1]


def adjugate(x: Multivector) -> Multivector:
    """Adjugate: adj(x) * x = x * adj(x) = det(x)."""
    return _adjugate_with_det(x)[0]


class InverseResult(NamedTuple):
    adjugate: Multivector
    determinant: float
    inverse: Multivector


def inverse(x: Multivector) -> InverseResult:
    """Adjugate, determinant and inverse of a multivector.

    Raises ``NonInvertibleError`` (still carrying the adjugate and the
    determinant) when |det| falls below the scale-invariant cutoff.
    """
    adj, det = _adjugate_with_det(x)
    cutoff = _SINGULAR_TOL * float(np.abs(x.c).sum()) ** 4
    if abs(det) <= cutoff:
        raise NonInvertibleError(
            f"determinant {det:.6e} below singularity cutoff {cutoff:.6e}",
            adjugate=adj,
            determinant=det,
        )
    return InverseResult(adj, det, adj * (1.0 / det))


def det_norm(x: Multivector) -> float:
    """Determinant norm det(x)**(1/4) (the 3D determinant is a 4-factor product)."""
    det = determinant(x)
    if det < 0.0:
        raise NormUndefinedError(
            f"determinant {det:.6g} is negative; no real fourth root"
        )
    return det ** 0.25
