"""Ring automorphisms of the supported rings.

Z and Z/mZ only have the identity.  The automorphisms of Z[x] are exactly
the substitutions ``x -> epsilon*x + shift`` with ``epsilon`` in {1, -1}.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import polynomial as poly
from .errors import InvalidAutomorphism
from .ideals import Ideal
from .rings import Ring, RingValue


@dataclass(frozen=True)
class Automorphism:
    epsilon: int = 1
    shift: int = 0

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise InvalidAutomorphism(f"epsilon must be +1 or -1, got {self.epsilon!r}")
        if not isinstance(self.shift, int) or isinstance(self.shift, bool):
            raise InvalidAutomorphism(f"shift must be an integer, got {self.shift!r}")

    @property
    def is_identity(self) -> bool:
        return self.epsilon == 1 and self.shift == 0

    def validate_for(self, ring: Ring) -> None:
        if not ring.is_polynomial and not self.is_identity:
            raise InvalidAutomorphism(f"{ring} has only the identity automorphism, not {self}")

    def then(self, other: "Automorphism") -> "Automorphism":
        """The automorphism ``other o self`` (apply ``self`` first)."""
        return Automorphism(self.epsilon * other.epsilon, self.epsilon * other.shift + self.shift)

    def inverse(self) -> "Automorphism":
        return Automorphism(self.epsilon, -self.epsilon * self.shift)

    def __str__(self) -> str:
        if self.is_identity:
            return "identity"
        image = poly.render(poly.strip((self.shift, self.epsilon)))
        return f"x -> {image}"


IDENTITY = Automorphism()


def apply_automorphism(phi: Automorphism, v: RingValue) -> RingValue:
    phi.validate_for(v.ring)
    if phi.is_identity:
        return v
    return RingValue(v.ring, poly.compose_affine(v.payload, phi.epsilon, phi.shift))


def image_ideal(phi: Automorphism, I: Ideal) -> Ideal:
    """The ideal generated by the images of the generators (the image of ``I``)."""
    return Ideal(I.ring, [apply_automorphism(phi, g) for g in I.generators])
