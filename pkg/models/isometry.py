"""Isometries of the upper half-plane and half-space as 2x2 matrices up to scale."""
import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple, Union

from models.errors import DegenerateIsometryError, HyperstretchError

Scalar = Union[int, float, complex]

REAL = 'real'
COMPLEX = 'complex'

# Rounding used for hashing and equality of canonical representatives
CANONICAL_DIGITS = 9

# Matrices with |ad − bc| below this fraction of |ad| + |bc| are rejected
DEGENERACY_EPS = 1e-12


class IsometryClass(Enum):
    """Conjugacy-invariant type of an isometry.

    The identity has its own tag; callers that count it as elliptic
    must union the two.
    """
    IDENTITY = 'Identity'
    ELLIPTIC = 'Elliptic'
    PARABOLIC = 'Parabolic'
    HYPERBOLIC = 'Hyperbolic'
    REFLECTION = 'Reflection'
    GLIDE_REFLECTION = 'GlideReflection'


def _is_int(x: Scalar) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _real_part(x: Scalar) -> float:
    return x.real if isinstance(x, complex) else float(x)


def _imag_part(x: Scalar) -> float:
    return x.imag if isinstance(x, complex) else 0.0


@dataclass(frozen=True, eq=False)
class Isometry:
    """Normalized canonical matrix (a b; c d).

    Real matrices have |det| = 1 and act on H²; det = -1 means the map
    reverses orientation and acts by z -> (a z̄ + b)/(c z̄ + d). Complex
    matrices have det = 1 and act on H³. Integer matrices of determinant
    ±1 keep Python ints so traces and products stay exact.

    Build instances with ``Isometry.of`` (arbitrary input) or
    ``Isometry.product`` (entries of a product of normalized matrices);
    the raw constructor assumes its entries are already normalized and
    canonical. ``sign`` is the determinant, kept apart from the entries so
    large products never have to recompute ad − bc.
    """
    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar
    field: str = REAL
    sign: int = 1

    @classmethod
    def of(cls, a: Scalar, b: Scalar, c: Scalar, d: Scalar,
           field: Optional[str] = None) -> 'Isometry':
        """
        Normalize and canonicalize a matrix.

        Args:
            a, b, c, d: Matrix entries (int, float or complex)
            field: 'real' or 'complex'; inferred from the entries when omitted

        Returns:
            Isometry with |det| = 1 and canonical sign
        """
        entries = [a, b, c, d]
        for x in entries:
            if isinstance(x, complex):
                if not (cmath.isfinite(x)):
                    raise HyperstretchError(f"Non-finite matrix entry: {x}")
            elif not math.isfinite(x):
                raise HyperstretchError(f"Non-finite matrix entry: {x}")

        if field is None:
            field = COMPLEX if any(isinstance(x, complex) and x.imag != 0 for x in entries) else REAL
        if field not in (REAL, COMPLEX):
            raise HyperstretchError(f"Unknown field tag: {field}")

        if field == REAL:
            if any(isinstance(x, complex) and x.imag != 0 for x in entries):
                raise HyperstretchError("Complex entries given for a real isometry")
            entries = [x.real if isinstance(x, complex) else x for x in entries]

        a, b, c, d = entries
        det = a * d - b * c
        # relative to |ad| + |bc|, so the test does not depend on the overall scale
        if det == 0 or abs(det) <= DEGENERACY_EPS * (abs(a * d) + abs(b * c)):
            raise DegenerateIsometryError(
                f"Degenerate matrix [[{a}, {b}], [{c}, {d}]]: determinant is {det}"
            )

        sign = 1
        if field == REAL:
            sign = 1 if _real_part(det) > 0 else -1
            if all(_is_int(x) for x in entries) and abs(det) == 1:
                pass
            else:
                s = math.sqrt(abs(det))
                entries = [float(x) / s for x in entries]
        else:
            s = cmath.sqrt(complex(det))
            entries = [complex(x) / s for x in entries]

        return cls(*_canonical_sign(entries), field=field, sign=sign)

    @classmethod
    def product(cls, a: Scalar, b: Scalar, c: Scalar, d: Scalar,
                field: str, sign: int) -> 'Isometry':
        """
        Canonicalize entries whose determinant is already known.

        Products and adjugates of normalized matrices have determinant
        ±1 up to rounding, so only the overall sign is fixed here.

        Args:
            a, b, c, d: Matrix entries
            field: 'real' or 'complex'
            sign: Determinant of the result (always 1 for complex)

        Returns:
            Isometry with the given determinant sign
        """
        entries = [a, b, c, d]
        for x in entries:
            if not _is_int(x) and not cmath.isfinite(complex(x)):
                raise HyperstretchError(f"Non-finite matrix entry: {x}")
        if field == REAL:
            entries = [x.real if isinstance(x, complex) else x for x in entries]
        else:
            sign = 1
        return cls(*_canonical_sign(entries), field=field, sign=sign)

    @classmethod
    def identity(cls, field: str = REAL) -> 'Isometry':
        if field == COMPLEX:
            return cls(1 + 0j, 0j, 0j, 1 + 0j, field=COMPLEX)
        return cls(1, 0, 0, 1)

    @property
    def entries(self) -> Tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.a, self.b, self.c, self.d)

    @property
    def det(self) -> Scalar:
        if self.is_exact:
            return self.a * self.d - self.b * self.c
        return self.sign

    @property
    def trace(self) -> Scalar:
        return self.a + self.d

    @property
    def frobenius_sq(self) -> float:
        """Sum of squared moduli of the entries (exact int for integer matrices)."""
        if self.is_exact:
            return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d
        return sum(abs(x) ** 2 for x in self.entries)

    @property
    def orientation(self) -> int:
        """+1 for orientation-preserving, -1 for orientation-reversing."""
        if self.field == COMPLEX:
            return 1
        return self.sign

    @property
    def is_exact(self) -> bool:
        return all(_is_int(x) for x in self.entries)

    @property
    def is_real(self) -> bool:
        return self.field == REAL

    def canonical_key(self, digits: int = CANONICAL_DIGITS) -> Tuple[float, ...]:
        """Rounded canonical entries, used for hashing and equality."""
        key = []
        for x in self.entries:
            # adding 0.0 folds -0.0 into 0.0
            key.append(round(_real_part(x), digits) + 0.0)
            key.append(round(_imag_part(x), digits) + 0.0)
        return tuple(key)

    def is_close(self, other: 'Isometry', tol: float = 1e-12) -> bool:
        """Entrywise comparison of canonical representatives, relative to the entry scale."""
        if self.orientation != other.orientation:
            return False
        scale = max(1.0, math.sqrt(float(self.frobenius_sq)), math.sqrt(float(other.frobenius_sq)))
        return all(abs(x - y) <= tol * scale for x, y in zip(self.entries, other.entries))

    def is_identity(self, tol: float = 1e-9) -> bool:
        if self.orientation != 1:
            return False
        scale = max(1.0, math.sqrt(float(self.frobenius_sq)))
        return (abs(self.b) <= tol * scale and abs(self.c) <= tol * scale
                and abs(self.a - 1) <= tol * scale and abs(self.d - 1) <= tol * scale)

    def rows(self) -> Tuple[Tuple[Scalar, Scalar], Tuple[Scalar, Scalar]]:
        return ((self.a, self.b), (self.c, self.d))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Isometry):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self) -> int:
        return hash(self.canonical_key())

    def __repr__(self) -> str:
        return f"Isometry([[{self.a}, {self.b}], [{self.c}, {self.d}]], {self.field})"


def _canonical_sign(entries):
    """Flip the overall sign so the first significant entry is positive.

    Positive means positive real part, or positive imaginary part when the
    real part vanishes.
    """
    if all(_is_int(x) for x in entries):
        for x in entries:
            if x != 0:
                return [-y for y in entries] if x < 0 else list(entries)
        return list(entries)

    norm = math.sqrt(sum(abs(x) ** 2 for x in entries))
    tol = 1e-9 * max(1.0, norm)
    for x in entries:
        if abs(x) <= tol:
            continue
        re, im = _real_part(x), _imag_part(x)
        if abs(re) > tol:
            negative = re < 0
        else:
            negative = im < 0
        return [-y for y in entries] if negative else list(entries)
    return list(entries)
