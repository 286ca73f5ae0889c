"""Second-order coefficient jets of deformed starlike and convex functions.

A normalized function f(z) = z + a2 z^2 + a3 z^3 + ... belongs to the
deformed starlike class when z D f / f is subordinate to a target phi,
and to the deformed convex class when D(z D f) / D f is, where D is the
two-parameter quantum derivative.  Subordination pins (a2, a3) as
explicit functions of the target coefficients (b1, b2) and of the first
two coefficients of the Schwarz function that witnesses it, equivalently
of the Caratheodory data (c1, c2).  This module builds those jets and
checks them against the defining subordination by direct series algebra.

All types are immutable and every constructor is re-entrant.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Literal

from .pq_core import DomainError, PQParams, TruncatedSeries, pq_derivative, pq_number

ClassKind = Literal["starlike", "convex"]

#: Slack admitted when testing membership in the closed feasibility bodies,
#: so that boundary points survive roundtrips through floating point.
FEASIBILITY_TOL = 1e-12


@dataclass(frozen=True)
class MaMindaTarget:
    """Target function phi(z) = 1 + b1 z + b2 z^2 + ... by its coefficients.

    The coefficients are real; b1 must be nonzero.  Only b1 and b2 enter
    the bound formulas, but further coefficients are kept so composed
    expansions of phi(w(z)) stay available at higher order.
    """

    b: tuple[float, ...]

    def __init__(self, b: tuple[float, ...] | list[float]):
        bs = tuple(float(x) for x in b)
        if not bs:
            raise DomainError("target needs at least the coefficient b1")
        if bs[0] == 0.0:
            raise DomainError("target needs b1 != 0")
        object.__setattr__(self, "b", bs)

    @classmethod
    def koebe(cls) -> "MaMindaTarget":
        """The half-plane target (1+z)/(1-z) truncated to (b1, b2) = (2, 2)."""
        return cls((2.0, 2.0))

    @property
    def b1(self) -> float:
        return self.b[0]

    @property
    def b2(self) -> float:
        return self.b[1] if len(self.b) > 1 else 0.0

    def series(self, order: int | None = None) -> TruncatedSeries:
        if order is None:
            order = TruncatedSeries.DEFAULT_ORDER
        return TruncatedSeries([1.0] + list(self.b), order=order)


@dataclass(frozen=True)
class SchwarzJet:
    """First two coefficients (w1, w2) of a Schwarz function w.

    Feasible exactly when |w1| <= 1 and |w2| <= 1 - |w1|^2, the sharp
    second-order coefficient body of self-maps of the disc fixing 0.
    """

    w1: complex
    w2: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "w1", complex(self.w1))
        object.__setattr__(self, "w2", complex(self.w2))
        r1 = abs(self.w1)
        if r1 > 1.0 + FEASIBILITY_TOL:
            raise DomainError(f"Schwarz jet needs |w1| <= 1, got |w1|={r1:.6g}")
        cap = 1.0 - r1 * r1
        if abs(self.w2) > cap + FEASIBILITY_TOL:
            raise DomainError(
                f"Schwarz jet needs |w2| <= 1 - |w1|^2, got |w2|={abs(self.w2):.6g} > {cap:.6g}"
            )

    def series(self, order: int | None = None) -> TruncatedSeries:
        if order is None:
            order = TruncatedSeries.DEFAULT_ORDER
        return TruncatedSeries([0.0, self.w1, self.w2], order=order)


@dataclass(frozen=True)
class CaratheodoryJet:
    """Coefficients (c1, c2) of a function 1 + c1 z + c2 z^2 + ... with
    positive real part, constrained to the sharp body |c1| <= 2 and
    |c2 - c1^2/2| <= 2 - |c1|^2/2."""

    c1: complex
    c2: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "c1", complex(self.c1))
        object.__setattr__(self, "c2", complex(self.c2))
        if abs(self.c1) > 2.0 + 2 * FEASIBILITY_TOL:
            raise DomainError(f"Caratheodory jet needs |c1| <= 2, got |c1|={abs(self.c1):.6g}")
        slack = 2.0 - abs(self.c1) ** 2 / 2.0
        if abs(self.c2 - self.c1**2 / 2.0) > slack + 2 * FEASIBILITY_TOL:
            raise DomainError(
                "Caratheodory jet needs |c2 - c1^2/2| <= 2 - |c1|^2/2, got "
                f"{abs(self.c2 - self.c1 ** 2 / 2.0):.6g} > {slack:.6g}"
            )

    @classmethod
    def from_schwarz(cls, j: SchwarzJet) -> "CaratheodoryJet":
        """Second-order data of (1 + w)/(1 - w): c1 = 2 w1, c2 = 2 w1^2 + 2 w2."""
        return cls(2.0 * j.w1, 2.0 * j.w1**2 + 2.0 * j.w2)

    def schwarz(self) -> SchwarzJet:
        """Invert the correspondence: w1 = c1/2, w2 = (c2 - c1^2/2)/2."""
        return SchwarzJet(self.c1 / 2.0, (self.c2 - self.c1**2 / 2.0) / 2.0)


def caratheodory_from_schwarz(j: SchwarzJet) -> CaratheodoryJet:
    return CaratheodoryJet.from_schwarz(j)


@dataclass(frozen=True)
class MemberJet:
    """The pair (a2, a3) of a class member, with its construction data."""

    a2: complex
    a3: complex
    kind: ClassKind
    source: CaratheodoryJet
    phi: MaMindaTarget
    params: PQParams


def deformation_numbers(params: PQParams) -> tuple[float, float]:
    """Return ([2], [3]) and reject the regime where the formulas degenerate.

    The member constructors and every bound divide by [2]-1 and [3]-1, so
    the module refuses parameters with [2] <= 1 (that is p + q <= 1) or
    [3] <= 1 rather than guessing a continuation.
    """
    two = pq_number(2, params)
    three = pq_number(3, params)
    if two <= 1.0 or three <= 1.0:
        raise DomainError(
            f"need [2] > 1 (p + q > 1) and [3] > 1; got [2]={two:.6g}, [3]={three:.6g} "
            f"for (p, q)=({params.p:g}, {params.q:g})"
        )
    return two, three


def _jet_scales(kind: ClassKind, two: float, three: float) -> tuple[float, float]:
    """(A, E): a3 prefactor divisor and a2 denominator scale for a class kind."""
    if kind == "starlike":
        return three - 1.0, two - 1.0
    if kind == "convex":
        return three * (three - 1.0), two * (two - 1.0)
    raise DomainError(f"unknown class kind {kind!r}")


def _member(kind: ClassKind, c: CaratheodoryJet, phi: MaMindaTarget, params: PQParams) -> MemberJet:
    two, three = deformation_numbers(params)
    A, E = _jet_scales(kind, two, three)
    b1, b2 = phi.b1, phi.b2
    a2 = b1 * c.c1 / (2.0 * E)
    a3 = b1 / (2.0 * A) * (c.c2 - 0.5 * (1.0 - b2 / b1 - b1 / (two - 1.0)) * c.c1**2)
    return MemberJet(a2=a2, a3=a3, kind=kind, source=c, phi=phi, params=params)


def starlike_member(c: CaratheodoryJet, phi: MaMindaTarget, params: PQParams) -> MemberJet:
    """Starlike jet: a2 = b1 c1 / (2([2]-1)) and

        a3 = b1 / (2([3]-1)) * [c2 - (1 - b2/b1 - b1/([2]-1)) c1^2 / 2].
    """
    return _member("starlike", c, phi, params)


def convex_member(c: CaratheodoryJet, phi: MaMindaTarget, params: PQParams) -> MemberJet:
    """Convex jet: same bracket as the starlike one, with denominators
    2[2]([2]-1) for a2 and 2[3]([3]-1) for a3."""
    return _member("convex", c, phi, params)


def _drop_z(s: TruncatedSeries) -> TruncatedSeries:
    # divide by z; valid only for series vanishing at 0
    if s.coeffs[0] != 0:
        raise DomainError("cannot divide by z: nonzero constant term")
    return TruncatedSeries(s.coeffs[1:])


def subordination_residual(
    m: MemberJet, j: SchwarzJet, phi: MaMindaTarget, params: PQParams
) -> float:
    """Largest coefficient mismatch, through z^2, between the class-defining
    quotient of the jet and phi(w(z)).

    The quotient is z D f / f for starlike jets and D(z D f) / D f for
    convex ones, computed with truncated-series arithmetic from
    f = z + a2 z^2 + a3 z^3.  A jet built by the constructors from ``j``
    yields a residual at roundoff level (<= 1e-10); any corruption of the
    jet shows up here at first order.
    """
    f = TruncatedSeries([0.0, 1.0, m.a2, m.a3])
    df = pq_derivative(f, params)
    if m.kind == "starlike":
        # z D f / f with the common z factor cancelled before dividing
        quotient = df / _drop_z(f)
    else:
        # padding D f back to order 3 is exact because f is a cubic here
        z_df = TruncatedSeries.monomial(1, order=3) * df.truncate(3)
        quotient = pq_derivative(z_df, params) / df.truncate(2)
    expected = phi.series(order=2).compose(j.series(order=2))
    return max(abs(quotient.coeffs[k] - expected.coeffs[k]) for k in range(3))


def sample_schwarz_jet(rng) -> SchwarzJet:
    """Draw one jet uniformly over the feasibility body.

    w1 is uniform on the closed unit disc and w2 uniform on the disc of
    radius 1 - |w1|^2, which covers the body including its boundary.
    ``rng`` is a numpy Generator; four variates are consumed per jet.
    """
    u = rng.random(4)
    w1 = cmath.rect(u[0] ** 0.5, 2.0 * cmath.pi * u[1])
    w2 = cmath.rect((u[2] ** 0.5) * (1.0 - abs(w1) ** 2), 2.0 * cmath.pi * u[3])
    return SchwarzJet(w1, w2)
