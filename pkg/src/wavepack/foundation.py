"""Complex arithmetic conventions, unit reduction, and combinatorial helpers.

Everything downstream works in the reduced time tau = t*hbar/(2m); physical
(t, hbar, m) appear only at the API boundary.  Fractional powers of complex
numbers always use the principal branch, implemented once here.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import CapacityError, DomainError

BINOMIAL_N_CAP = 128


def require_finite(z: complex, what: str = "value") -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite {what}: {z!r}")
    return z


@dataclass(frozen=True)
class PhysicalConfig:
    """Physical constants entering the evolution phase exp(-i hbar z^2 t / 2m).

    The default is natural units hbar=1, mass=1/2, for which tau == t.
    """

    hbar: float = 1.0
    mass: float = 0.5

    def __post_init__(self) -> None:
        if not (self.hbar > 0):
            raise DomainError("hbar must be positive")
        if not (self.mass > 0):
            raise DomainError("mass must be positive")


NATURAL_UNITS = PhysicalConfig()


def reduced_time(t: complex, cfg: PhysicalConfig = NATURAL_UNITS) -> complex:
    """Map physical time to the dimensionless reduced time tau = t*hbar/(2m)."""
    return require_finite(complex(t) * cfg.hbar / (2.0 * cfg.mass), "reduced time")


def sqrt_principal(z: complex) -> complex:
    """Principal square root: w^2 = z with Re(w) >= 0, and Im(w) >= 0 on the cut.

    cmath.sqrt already implements this branch (cut along the negative real
    axis); wrapped here so the convention is named and tested in one place.
    """
    return cmath.sqrt(z)


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient with a hard cap at n=128."""
    if n < 0 or k < 0 or k > n:
        raise DomainError(f"binomial requires 0 <= k <= n, got ({n}, {k})")
    if n > BINOMIAL_N_CAP:
        raise CapacityError(f"binomial capped at n <= {BINOMIAL_N_CAP}, got {n}")
    return math.comb(n, k)
