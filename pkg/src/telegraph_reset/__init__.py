"""Telegraph process driven by geometric counting processes, with Poissonian resets.

Closed-form laws live in :mod:`telegraph_reset.law`, the exact path simulator
in :mod:`telegraph_reset.montecarlo`, and the oracle harness in
:mod:`telegraph_reset.validation`.
"""

from .params import MotionParams, StartMode, VelocityRegime, VelocityStart, classify_regime, reflect

__version__ = "0.1.0"

__all__ = [
    "MotionParams",
    "StartMode",
    "VelocityRegime",
    "VelocityStart",
    "__version__",
    "classify_regime",
    "reflect",
]
