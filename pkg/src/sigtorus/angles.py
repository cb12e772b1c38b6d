"""Angles on the unit circle, rational when possible, and torus points.

Angles are measured in turns: the value ``a`` stands for ``exp(2*pi*i*a)``.
Rational angles (stored as :class:`fractions.Fraction`) admit exact
predicates; float angles are accepted everywhere but any exact predicate
refuses to guess on them.
"""

import cmath
import math
from fractions import Fraction

from .errors import InexactAngles

_TWO_PI = 2.0 * math.pi


def normalize_angle(a):
    """Reduce an angle to the fundamental interval [0, 1)."""
    if isinstance(a, bool):
        raise TypeError("bool is not an angle")
    if isinstance(a, Fraction):
        return a % 1
    if isinstance(a, int):
        return Fraction(a) % 1
    if isinstance(a, float):
        return a % 1.0
    raise TypeError("not an angle: %r" % (a,))


def as_angle(value):
    """Coerce an angle or a unit complex number to an angle in [0, 1).

    Complex input is projected to the circle and loses exactness.
    """
    if isinstance(value, complex):
        return (cmath.phase(value) / _TWO_PI) % 1.0
    return normalize_angle(value)


def is_exact(a):
    return isinstance(a, Fraction)


def is_zero_angle(a):
    return a == 0


def angle_sum(a, b):
    return normalize_angle(a + b)


def scale_angle(a, k):
    """The angle of the k-th power of the circle point."""
    return normalize_angle(a * k)


def conj_angle(a):
    return normalize_angle(-a)


def angle_to_complex(a):
    return cmath.exp(complex(0.0, _TWO_PI * float(a)))


def half_angle_complex(a):
    """The square root exp(pi*i*a) of the circle point, for a in [0, 1)."""
    a = normalize_angle(a)
    return cmath.exp(complex(0.0, math.pi * float(a)))


def parse_angle(text):
    """Parse "p/q" (exact), an integer, or a decimal (inexact)."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return normalize_angle(Fraction(int(num), int(den)))
    if "." in text or "e" in text or "E" in text:
        return normalize_angle(float(text))
    return normalize_angle(Fraction(int(text)))


def format_angle(a):
    return str(a) if isinstance(a, Fraction) else repr(float(a))


class TorusPoint:
    """A point of the mu-torus, stored as a tuple of angles in [0, 1)."""

    __slots__ = ("angles",)

    def __init__(self, angles):
        self.angles = tuple(normalize_angle(a) for a in angles)

    @classmethod
    def from_text(cls, text):
        text = text.strip()
        if not text:
            return cls(())
        return cls(parse_angle(part) for part in text.split(","))

    @property
    def mu(self):
        return len(self.angles)

    def __len__(self):
        return len(self.angles)

    def __iter__(self):
        return iter(self.angles)

    def __getitem__(self, j):
        return self.angles[j]

    def __eq__(self, other):
        return isinstance(other, TorusPoint) and self.angles == other.angles

    def __hash__(self):
        return hash(self.angles)

    @property
    def is_exact(self):
        return all(isinstance(a, Fraction) for a in self.angles)

    @property
    def in_open_torus(self):
        """True when no coordinate equals 1 (angle 0)."""
        return all(a != 0 for a in self.angles)

    def boundary_indices(self):
        return [j for j, a in enumerate(self.angles) if a == 0]

    def omega(self):
        return tuple(angle_to_complex(a) for a in self.angles)

    def sqrt_omega(self):
        return tuple(half_angle_complex(a) for a in self.angles)

    def conjugate(self):
        return TorusPoint(conj_angle(a) for a in self.angles)

    def prepend(self, angle):
        return TorusPoint((normalize_angle(angle),) + self.angles)

    def drop_first(self):
        return TorusPoint(self.angles[1:])

    def is_one(self, j):
        return self.angles[j] == 0

    def power_is_integer(self, coefficients):
        """Exact predicate: is the integer combination of angles an integer?

        Coordinates with zero coefficient may be inexact; any other inexact
        coordinate raises InexactAngles.
        """
        coefficients = tuple(int(c) for c in coefficients)
        if len(coefficients) != len(self.angles):
            raise ValueError("coefficient count does not match point")
        total = Fraction(0)
        for c, a in zip(coefficients, self.angles):
            if c == 0:
                continue
            if not isinstance(a, Fraction):
                raise InexactAngles("exact predicate asked of a float angle")
            total += c * a
        return total.denominator == 1

    def angle_text(self):
        return ",".join(format_angle(a) for a in self.angles)

    def __repr__(self):
        return "TorusPoint(%s)" % self.angle_text()
