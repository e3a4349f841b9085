"""Explicit constants behind the growth estimates.

Rational quantities stay exact (``Fraction``). Anything involving ``log``,
``sinh`` or ``pi`` is an outward-rounded double-precision interval from
``mpmath.iv``, so comparisons between constants never hinge on rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from fractions import Fraction

from mpmath import iv

from .errors import InputOutOfRange, NonPositiveXi

iv.prec = 53


def _iv(x):
    if isinstance(x, Fraction):
        return iv.mpf(x.numerator) / iv.mpf(x.denominator)
    return iv.mpf(x)


def ivsinh(x):
    return (iv.exp(x) - iv.exp(-x)) / 2


def ivmax(*xs):
    """Interval enclosing the max of the enclosed values."""
    xs = [_iv(x) for x in xs]
    lo = max(x.a for x in xs)
    hi = max(x.b for x in xs)
    return iv.mpf([lo, hi])


def bounds(x) -> tuple[float, float]:
    """(lo, hi) as floats, rounded outward."""
    if isinstance(x, (int, Fraction)):
        lo = float(x)
        hi = float(x)
        if Fraction(lo) > x:
            lo = math.nextafter(lo, -math.inf)
        if Fraction(hi) < x:
            hi = math.nextafter(hi, math.inf)
        return lo, hi
    lo, hi = float(x.a), float(x.b)
    if x.a < lo:
        lo = math.nextafter(lo, -math.inf)
    if x.b > hi:
        hi = math.nextafter(hi, math.inf)
    return lo, hi


def certainly_less(x, y) -> bool:
    return bounds(x)[1] < bounds(y)[0]


def certainly_greater(x, y) -> bool:
    return bounds(x)[0] > bounds(y)[1]


def as_json(x):
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return {"exact": str(x), "value": float(x)}
    lo, hi = bounds(x)
    return {"interval": [lo, hi], "value": (lo + hi) / 2}


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(str(x)) if isinstance(x, float) else Fraction(x)


@dataclass(frozen=True)
class ConstantsInputs:
    """User inputs. The small cancellation constants (delta0, Delta0, rho0) have
    no canonical numerical value, so the defaults below are placeholders."""

    delta: Fraction = Fraction(1, 200)
    delta0: Fraction = Fraction(1, 100)
    Delta0: Fraction = Fraction(1)
    rho0: Fraction = Fraction(1)
    kappa: Fraction = Fraction(1, 100)
    N: int = 1
    L0: Fraction = Fraction(1)
    epsilon: Fraction = Fraction(1, 2)
    xi: Fraction = Fraction(1)
    U_size: int = 2
    Delta_Q: Fraction | None = None
    alpha: Fraction | None = None
    energy_LU: Fraction | None = None
    energy_LUp: Fraction | None = None
    stable_tlen: Fraction | None = None
    Delta_g: Fraction = Fraction(0)

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if v is None or f.name in ("N", "U_size"):
                continue
            object.__setattr__(self, f.name, _frac(v))
        d = self
        if not 0 < d.epsilon < Fraction(3, 4):
            raise InputOutOfRange("epsilon must lie in (0, 3/4)")
        if not 0 < d.delta <= d.delta0:
            raise InputOutOfRange("need 0 < delta <= delta0")
        if d.L0 <= 0 or d.Delta0 < 0 or d.kappa <= 0:
            raise InputOutOfRange("L0 and kappa must be positive, Delta0 nonnegative")
        if int(d.N) != d.N or d.N < 1:
            raise InputOutOfRange("N must be a positive integer")
        if d.U_size < 2:
            raise InputOutOfRange("the counting argument needs |U| >= 2")
        if d.xi <= 0:
            raise NonPositiveXi("xi must be positive")
        if d.Delta_Q is not None and d.Delta_Q <= 0:
            raise InputOutOfRange("Delta_Q must be positive")
        if d.stable_tlen is not None and d.stable_tlen <= 0:
            raise InputOutOfRange("stable translation length must be positive")


DERIVED = (
    "C", "tau0", "b", "M", "d1", "d2", "M0", "tau1", "rho", "tau2", "lambda0", "mu0",
    "sigma_rescale", "nu", "xi_count", "sigma_counting", "xi_out", "alpha", "a0", "b0",
)


class ConstantsRecord:
    """Every derived constant, recomputed from the inputs on each access."""

    def __init__(self, inputs: ConstantsInputs):
        self.inputs = inputs

    def __getattr__(self, name):
        if name in DERIVED:
            return getattr(self, "_" + name)()
        raise AttributeError(name)

    @property
    def i(self) -> ConstantsInputs:
        return self.inputs

    def _C(self) -> int:
        return 10**6 * (self.i.N + 1)

    def _tau0(self) -> Fraction:
        return self.i.Delta0 + 2 * self.i.L0 + 223 * self.i.delta

    def _b(self) -> int:
        return math.ceil(self._tau0() / (200 * self.i.delta) + 2) + 1

    def _M(self) -> int:
        return math.floor((self._tau0() - 50 * self.i.delta) / self.i.L0)

    def _d1(self):
        eps = self.i.epsilon
        return self._b() * iv.log(4) - iv.log(_iv(eps / (1 - eps)))

    def _d2(self):
        return iv.log(4) + iv.log(_iv(1 - self.i.epsilon))

    def _M0(self):
        # the computation lemma also takes M >= b
        return ivmax(self._b(), self._d1() / self._d2())

    def _tau1(self):
        return ivmax(self._tau0(), _iv(self.i.L0) * (self._M0() + 1) + _iv(50 * self.i.delta0))

    def _rho(self):
        return ivmax(self.i.rho0, iv.log(2 * (2 * self._tau1() + _iv(23 * self.i.delta0)) + 1))

    def _tau2(self):
        return self._tau1() + _iv(8 * self.i.L0 + 8 * self.i.delta)

    def _scale(self):
        return 100 * iv.pi * ivsinh(self._rho())

    def _lambda0(self):
        return _iv(self.i.Delta0) / self._scale()

    def _mu0(self):
        return self._scale() / _iv(self.i.delta0) * _iv(self.i.kappa / self.i.delta)

    def _sigma_rescale(self) -> Fraction:
        a = self.i.delta0 / self.i.kappa
        return a if self.i.Delta_Q is None else min(a, self.i.Delta0 / self.i.Delta_Q)

    def _nu(self) -> Fraction:
        return (1 - self.i.epsilon) * 2 * self.i.U_size

    def _xi_count(self) -> int:
        return 2 * (2 * self.i.U_size) ** self._b()

    def _sigma_counting(self) -> Fraction:
        eps = self.i.epsilon
        return eps / (2 * (1 - eps) * self._xi_count())

    def _xi_out(self):
        return growth_transfer(self.i.xi)

    def _alpha(self) -> Fraction:
        return self.i.alpha if self.i.alpha is not None else 200 * self.i.delta

    def _a0(self) -> Fraction | None:
        if self.i.energy_LU is None or self.i.stable_tlen is None:
            return None
        return 2 * self.i.N * (self.i.energy_LU / self.i.stable_tlen * 8 + 1)

    def _b0(self) -> Fraction | None:
        if self.i.energy_LUp is None or self.i.stable_tlen is None:
            return None
        return 2 / self.i.stable_tlen * (self.i.Delta_g + 5 * self.i.energy_LUp + 104 * self.i.delta + self._alpha())

    def consistency(self) -> dict[str, bool]:
        """Internal checks; a False is a flag for the reader, not an error."""
        return {
            "M_at_least_b": self._M() >= self._b(),
            "tau1_at_least_tau0": not certainly_less(self._tau1(), self._tau0()),
        }

    def to_json(self) -> dict:
        inputs = {}
        for f in fields(self.i):
            v = getattr(self.i, f.name)
            inputs[f.name] = None if v is None else (v if isinstance(v, int) else str(v))
        derived = {}
        for name in DERIVED:
            v = getattr(self, name)
            derived[name] = None if v is None else as_json(v)
        return {"inputs": inputs, "derived": derived, "consistency": self.consistency()}


def constants_pipeline(inputs: ConstantsInputs | None = None, **kw) -> ConstantsRecord:
    if inputs is None:
        inputs = ConstantsInputs(**kw)
    return ConstantsRecord(inputs)


GROWTH_CAP_FACTOR = Fraction(1, 10**5)


def growth_transfer(xi):
    """min{xi / 10^8, 10^-5 log 2}: exact when the first term wins, an interval otherwise."""
    xi = _frac(xi)
    if xi <= 0:
        raise NonPositiveXi("xi must be positive")
    a = xi / 10**8
    # extra working precision so the outward rounding to doubles is one ulp wide
    iv.prec = 113
    try:
        cap = iv.log(2) / GROWTH_CAP_FACTOR.denominator
    finally:
        iv.prec = 53
    if certainly_less(a, cap):
        return a
    if certainly_greater(a, cap):
        return cap
    lo, hi = bounds(cap)
    return iv.mpf([min(lo, float(a)), min(hi, float(a))])


@dataclass(frozen=True)
class PingPongConstants:
    C: int
    n1: int
    n2: int
    n1_energy_bound: Fraction
    energy_power_bound: Fraction
    S_energy_bound: Fraction
    S_word_exponent: int
    L: Fraction
    kappa: Fraction

    def to_json(self) -> dict:
        return {
            "C": self.C,
            "n1": self.n1,
            "n2": self.n2,
            "n1_energy_bound": str(self.n1_energy_bound),
            "energy_power_bound": str(self.energy_power_bound),
            "S_energy_bound": str(self.S_energy_bound),
            "S_word_exponent": self.S_word_exponent,
            "L": str(self.L),
            "kappa": str(self.kappa),
        }


def pingpong_constants(N: int, L, kappa) -> PingPongConstants:
    """C = 10^6 (N+1), n1 = 4C^2, n2 = 3304 n1 and the energy bounds that go with them."""
    L, kappa = _frac(L), _frac(kappa)
    if int(N) != N or N < 1:
        raise InputOutOfRange("N must be a positive integer")
    if L <= 0 or kappa <= 0:
        raise InputOutOfRange("L and kappa must be positive")
    C = 10**6 * (N + 1)
    n1 = 4 * C**2
    n2 = 3304 * n1
    return PingPongConstants(C, n1, n2, 4 * C**2 * L, 13216 * C**2 * L, 10**12 * C**3 * L, 10**7, L, kappa)
