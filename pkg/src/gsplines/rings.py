"""The three concrete base rings: Z, Z/mZ and Z[x].

Ring elements are immutable :class:`RingValue` objects that carry their
ring; arithmetic between elements of different rings raises
:class:`RingMismatch`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from . import polynomial as poly
from .errors import RingMismatch

INTEGERS = "integers"
INTEGERS_MOD = "integers_mod"
POLYNOMIALS = "integer_polynomials"


@dataclass(frozen=True)
class Ring:
    """Descriptor for one of the supported base rings.

    Build instances with :meth:`integers`, :meth:`mod` or :meth:`polynomials`.
    Calling a ring coerces a Python value into it: ``Ring.mod(6)(8)`` is the
    residue 2, ``Ring.polynomials()("x^2-9")`` is a polynomial.
    """

    kind: str
    modulus: int = 0
    variable: str = ""

    def __post_init__(self):
        if self.kind == INTEGERS_MOD:
            if not isinstance(self.modulus, int) or self.modulus < 2:
                raise ValueError(f"modulus must be an integer >= 2, got {self.modulus!r}")
        elif self.kind == POLYNOMIALS:
            if not re.fullmatch(r"[A-Za-z_]\w*", self.variable or ""):
                raise ValueError(f"invalid polynomial variable {self.variable!r}")
        elif self.kind != INTEGERS:
            raise ValueError(f"unknown ring kind {self.kind!r}")

    @classmethod
    def integers(cls) -> "Ring":
        return cls(INTEGERS)

    @classmethod
    def mod(cls, m: int) -> "Ring":
        return cls(INTEGERS_MOD, modulus=m)

    @classmethod
    def polynomials(cls, variable: str = "x") -> "Ring":
        return cls(POLYNOMIALS, variable=variable)

    @classmethod
    def parse(cls, text: str) -> "Ring":
        """Parse shorthand such as ``"Z"``, ``"Z/6"``, ``"Z/6Z"`` or ``"Z[x]"``."""
        s = text.replace(" ", "")
        if s in ("Z", "ZZ", INTEGERS):
            return cls.integers()
        m = re.fullmatch(r"Z/(\d+)(?:Z)?", s)
        if m:
            return cls.mod(int(m.group(1)))
        m = re.fullmatch(r"Z\[([A-Za-z_]\w*)\]", s)
        if m:
            return cls.polynomials(m.group(1))
        raise ValueError(f"unrecognized ring {text!r}")

    @property
    def is_polynomial(self) -> bool:
        return self.kind == POLYNOMIALS

    @property
    def is_modular(self) -> bool:
        return self.kind == INTEGERS_MOD

    def __str__(self) -> str:
        if self.kind == INTEGERS:
            return "Z"
        if self.kind == INTEGERS_MOD:
            return f"Z/{self.modulus}Z"
        return f"Z[{self.variable}]"

    def __call__(self, value: Union[int, str, tuple, list, "RingValue"]) -> "RingValue":
        if isinstance(value, RingValue):
            if value.ring != self:
                raise RingMismatch(f"cannot coerce element of {value.ring} into {self}")
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not ring elements")
        if self.kind == POLYNOMIALS:
            if isinstance(value, int):
                return RingValue(self, poly.strip((value,)))
            if isinstance(value, str):
                return RingValue(self, poly.parse(value, self.variable))
            if isinstance(value, (tuple, list)):
                return RingValue(self, poly.strip(value))
            raise TypeError(f"cannot make a polynomial from {value!r}")
        if isinstance(value, str):
            value = int(value.strip())
        if not isinstance(value, int):
            raise TypeError(f"cannot make an element of {self} from {value!r}")
        if self.kind == INTEGERS_MOD:
            value %= self.modulus
        return RingValue(self, value)

    def zero(self) -> "RingValue":
        return self(0)

    def one(self) -> "RingValue":
        return self(1)

    def ideal(self, *generators):
        """Shorthand for ``Ideal(self, generators)``."""
        from .ideals import Ideal

        return Ideal(self, [self(g) for g in generators])


@dataclass(frozen=True)
class RingValue:
    """An exact element of a :class:`Ring`.

    ``payload`` is an int for Z, a residue in ``range(m)`` for Z/mZ, and an
    ascending coefficient tuple without trailing zeros for Z[x].
    """

    ring: Ring
    payload: Union[int, tuple]

    def _check(self, other) -> "RingValue":
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring(other)
        if not isinstance(other, RingValue):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} and {other.ring} do not mix")
        return other

    def _wrap(self, payload) -> "RingValue":
        if self.ring.kind == INTEGERS_MOD:
            payload %= self.ring.modulus
        return RingValue(self.ring, payload)

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        if self.ring.is_polynomial:
            return RingValue(self.ring, poly.add(self.payload, other.payload))
        return self._wrap(self.payload + other.payload)

    __radd__ = __add__

    def __neg__(self):
        if self.ring.is_polynomial:
            return RingValue(self.ring, poly.neg(self.payload))
        return self._wrap(-self.payload)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        if self.ring.is_polynomial:
            return RingValue(self.ring, poly.mul(self.payload, other.payload))
        return self._wrap(self.payload * other.payload)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.payload

    def __str__(self) -> str:
        if self.ring.is_polynomial:
            return poly.render(self.payload, self.ring.variable)
        return str(self.payload)

    def __repr__(self) -> str:
        return f"RingValue({self.ring}, {self})"
