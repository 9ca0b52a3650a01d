"""Curve descriptions: an odd-degree separable polynomial over Q.

A ``CurveSpec`` is the hyperelliptic model y^2 = f(x).  The torsion prime
is fixed to 2 for every global operation; the permutation-module oracle
is the only consumer that accepts other primes, and it takes them
directly rather than through a curve.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from .errors import InvalidInputError
from .ratpoly import RatPoly, discriminant, is_separable

__all__ = ["CurveSpec", "curve_hash"]


@dataclass(frozen=True)
class CurveSpec:
    f: RatPoly
    p: int = 2
    declared_factors: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.p != 2:
            raise InvalidInputError("global operations require p = 2")
        if self.f.degree < 3 or self.f.degree % 2 == 0:
            raise InvalidInputError("f must have odd degree >= 3")
        if not is_separable(self.f):
            raise InvalidInputError("f must be separable")
        if self.declared_factors:
            object.__setattr__(self, "declared_factors", tuple(self.declared_factors))
            prod = RatPoly.one()
            for g in self.declared_factors:
                if not isinstance(g, RatPoly) or g.degree < 1:
                    raise InvalidInputError("declared factors must be nonconstant polynomials")
                prod = prod * g
            if prod.degree != self.f.degree:
                raise InvalidInputError("declared factor degrees do not sum to deg(f)")
            # product must equal f up to a nonzero rational constant
            scaled = prod * (self.f.lead / prod.lead)
            if scaled != self.f:
                raise InvalidInputError("declared factors do not multiply to f")

    @property
    def degree(self) -> int:
        return self.f.degree

    def discriminant(self):
        return discriminant(self.f)

    def factor_constant(self):
        """Constant c with f = c * prod(declared_factors)."""
        if not self.declared_factors:
            raise InvalidInputError("curve has no declared factors")
        prod = RatPoly.one()
        for g in self.declared_factors:
            prod = prod * g
        return self.f.lead / prod.lead

    def canonical_text(self) -> str:
        cs = ",".join(str(c) for c in self.f.coeffs)
        return f"p={self.p};f=[{cs}]"

    def __str__(self):
        return f"y^2 = {self.f}"


def curve_hash(curve: CurveSpec) -> str:
    """Stable 16-hex-digit key for caches and reports."""
    return hashlib.sha256(curve.canonical_text().encode()).hexdigest()[:16]
