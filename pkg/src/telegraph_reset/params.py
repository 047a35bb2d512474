"""Process parameters, velocity regimes and the sign-reflection symmetry."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError, ReflectNotNeededError


class VelocityRegime(enum.Enum):
    STRADDLING = "straddling"  # v2 < 0 < v1
    BOTH_POSITIVE = "both_positive"  # 0 < v2 < v1
    BOTH_NEGATIVE = "both_negative"  # v2 < v1 < 0


@dataclass(frozen=True)
class MotionParams:
    """GCP intensity ``lam``, reset rate ``xi`` and the two velocities ``v1 > v2``.

    ``xi = 0`` is the reset-free process.
    """

    lam: float
    xi: float
    v1: float
    v2: float

    def __post_init__(self):
        for name in ("lam", "xi", "v1", "v2"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise DomainError(f"{name} must be finite, got {value!r}")
        if self.lam <= 0:
            raise DomainError(f"lam must be positive, got {self.lam}")
        if self.xi < 0:
            raise DomainError(f"xi must be nonnegative, got {self.xi}")
        if self.v1 == 0 or self.v2 == 0:
            raise DomainError("velocities must be nonzero")
        if not self.v2 < self.v1:
            raise DomainError(f"need v2 < v1, got v1={self.v1}, v2={self.v2}")

    @property
    def regime(self) -> VelocityRegime:
        return classify_regime(self)

    def velocity(self, j: int) -> float:
        """Velocity with index ``j`` (1 or 2)."""
        check_index(j)
        return self.v1 if j == 1 else self.v2

    @property
    def spread(self) -> float:
        return self.v1 - self.v2


def check_index(j: int) -> None:
    if j not in (1, 2):
        raise DomainError(f"velocity index must be 1 or 2, got {j!r}")


def classify_regime(p: MotionParams) -> VelocityRegime:
    if p.v2 < 0 < p.v1:
        return VelocityRegime.STRADDLING
    if p.v2 > 0:
        return VelocityRegime.BOTH_POSITIVE
    return VelocityRegime.BOTH_NEGATIVE


def reflect(p: MotionParams, j: int) -> tuple[MotionParams, int, int]:
    """Map a both-negative parameter set onto the both-positive regime.

    Negating positions turns velocity ``v1`` into ``-v1``, which is the slower of
    the two reflected velocities, so indices swap. Returns ``(p', 3 - j, -1)``;
    densities obey ``f(x, t | v_j; p) = f(-x, t | v_j'; p')`` and means
    ``E_j = -E'_j'``.
    """
    check_index(j)
    if p.regime is not VelocityRegime.BOTH_NEGATIVE:
        raise ReflectNotNeededError(f"reflect only applies to both-negative velocities, got {p.regime.value}")
    return MotionParams(p.lam, p.xi, -p.v2, -p.v1), 3 - j, -1


class StartMode(enum.Enum):
    FIXED_V1 = "v1"
    FIXED_V2 = "v2"
    RANDOM = "random"


@dataclass(frozen=True)
class VelocityStart:
    """Initial velocity: fixed ``v1``, fixed ``v2``, or ``v1`` with probability ``q``."""

    mode: StartMode
    q: float = 1.0

    def __post_init__(self):
        if not 0.0 <= self.q <= 1.0:
            raise DomainError(f"q must lie in [0, 1], got {self.q}")
        if self.mode is StartMode.FIXED_V1 and self.q != 1.0:
            raise DomainError("fixed-v1 start carries q = 1")
        if self.mode is StartMode.FIXED_V2 and self.q != 0.0:
            raise DomainError("fixed-v2 start carries q = 0")

    @classmethod
    def fixed(cls, j: int) -> VelocityStart:
        check_index(j)
        return cls(StartMode.FIXED_V1, 1.0) if j == 1 else cls(StartMode.FIXED_V2, 0.0)

    @classmethod
    def random(cls, q: float) -> VelocityStart:
        return cls(StartMode.RANDOM, q)

    @classmethod
    def parse(cls, text: str) -> VelocityStart:
        """Parse ``v1``, ``v2`` or ``random:<q>``."""
        text = text.strip().lower()
        if text == "v1":
            return cls.fixed(1)
        if text == "v2":
            return cls.fixed(2)
        if text.startswith("random:"):
            try:
                q = float(text.split(":", 1)[1])
            except ValueError:
                raise DomainError(f"unrecognized start {text!r}") from None
            return cls.random(q)
        raise DomainError(f"unrecognized start {text!r}; expected v1, v2 or random:q")

    @property
    def fixed_index(self) -> int | None:
        if self.mode is StartMode.FIXED_V1:
            return 1
        if self.mode is StartMode.FIXED_V2:
            return 2
        return None

    def weight(self, j: int) -> float:
        """Probability that the initial velocity is ``v_j``."""
        check_index(j)
        return self.q if j == 1 else 1.0 - self.q

    def reflected(self) -> VelocityStart:
        """The same start after :func:`reflect` swaps velocity labels."""
        if self.mode is StartMode.FIXED_V1:
            return VelocityStart.fixed(2)
        if self.mode is StartMode.FIXED_V2:
            return VelocityStart.fixed(1)
        return VelocityStart.random(1.0 - self.q)

    def label(self) -> str:
        if self.mode is StartMode.RANDOM:
            return f"random:{self.q!r}"
        return self.mode.value
