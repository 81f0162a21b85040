"""The constant-improvement map for exponents of the form
c1*n/psi(n) + c2*(n/phi(n))*ln(phi(n)).

One application of the map sends (c1, c2) to

    c1' = (c1 + c3) / d
    c2' = c2 * (1 + 1/(c2*ln q) + c3)

where d > 1 comes from the halving condition on psi and c3 > 0 absorbs
the composition-count term.  Iterating drives c1 towards the fixed point
c3/(d-1) geometrically with ratio 1/d while c2 grows strictly; the
trajectory is reported as data, with no claim that every iterate is a
valid bound for a concrete phi and psi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InputError
from .functions import FunctionSpec

__all__ = [
    "BootstrapState",
    "BootstrapTrajectory",
    "ExponentCompareReport",
    "bootstrap_step",
    "bootstrap_iterate",
    "fixed_point_c1",
    "exponent_compare",
]


@dataclass(frozen=True)
class BootstrapState:
    q: int
    d: float
    c1: float
    c2: float
    c3: float
    phi: FunctionSpec | None = None
    psi: FunctionSpec | None = None

    def __post_init__(self):
        if not isinstance(self.q, int) or self.q < 2:
            raise InputError(f"q must be an integer >= 2, got {self.q!r}")
        if not self.d > 1.0:
            raise InputError(f"d must exceed 1, got {self.d!r}")
        if not self.c1 > 0 or not self.c2 > 0:
            raise InputError("c1 and c2 must be positive")
        if not self.c3 > 0:
            raise InputError(f"c3 must be positive, got {self.c3!r}")


def bootstrap_step(state: BootstrapState) -> tuple[float, float]:
    """One application of the map; returns the new (c1, c2)."""
    c1_new = (state.c1 + state.c3) / state.d
    c2_new = state.c2 * (1.0 + 1.0 / (state.c2 * math.log(state.q)) + state.c3)
    return c1_new, c2_new


def fixed_point_c1(state: BootstrapState) -> float:
    """The unique fixed point of c1 -> (c1 + c3)/d."""
    return state.c3 / (state.d - 1.0)


@dataclass(frozen=True)
class BootstrapTrajectory:
    start: BootstrapState
    steps: int
    points: tuple[tuple[float, float], ...]  # (c1, c2), point 0 is the start
    c1_fixed_point: float

    @property
    def final(self) -> tuple[float, float]:
        return self.points[-1]


def bootstrap_iterate(state: BootstrapState, steps: int) -> BootstrapTrajectory:
    """Iterate the map `steps` times with q, d, c3 held fixed."""
    if not isinstance(steps, int) or steps < 0:
        raise InputError(f"steps must be a non-negative integer, got {steps!r}")
    points = [(state.c1, state.c2)]
    current = state
    for _ in range(steps):
        c1_new, c2_new = bootstrap_step(current)
        points.append((c1_new, c2_new))
        current = BootstrapState(state.q, state.d, c1_new, c2_new, state.c3,
                                 state.phi, state.psi)
    return BootstrapTrajectory(state, steps, tuple(points),
                               fixed_point_c1(state))


@dataclass(frozen=True)
class ExponentCompareReport:
    n: float
    old_exponent: float
    new_exponent: float
    improved: bool
    # old exponent is dominated by its first term
    first_term_dominates: bool
    # one map application shrinks c1
    c1_shrinks: bool


def exponent_compare(state: BootstrapState, n: float) -> ExponentCompareReport:
    """Compare the exponent before and after one application of the map
    at a concrete argument n, together with the two side conditions that
    make the improvement genuine."""
    if state.phi is None or state.psi is None:
        raise InputError("exponent_compare needs phi and psi on the state")
    if not n > 1:
        raise InputError(f"n must exceed 1, got {n!r}")
    phi_n = state.phi.value(n)
    psi_n = state.psi.value(n)
    if phi_n <= 1 or psi_n <= 0:
        raise InputError("phi and psi must be positive (phi above 1) at n")
    term1 = state.c1 * n / psi_n
    term2 = state.c2 * (n / phi_n) * math.log(phi_n)
    old_exponent = term1 + term2
    c1_new, c2_new = bootstrap_step(state)
    new_exponent = c1_new * n / psi_n + (c2_new / state.c2) * term2
    return ExponentCompareReport(
        n=n,
        old_exponent=old_exponent,
        new_exponent=new_exponent,
        improved=new_exponent < old_exponent,
        first_term_dominates=term1 > term2,
        c1_shrinks=c1_new < state.c1,
    )
