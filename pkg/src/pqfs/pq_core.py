"""Two-parameter quantum calculus on truncated power series.

The deformation is controlled by a pair (p, q) with 0 < q < p <= 1.  The
basic quantity is the deformed integer

    [n] = p^(n-1) + p^(n-2) q + ... + q^(n-1),

which equals (p^n - q^n) / (p - q) whenever p != q and degenerates
continuously to n itself as p = q = 1.  Functions are represented purely
as coefficient jets (truncated Taylor series); nothing in this module
evaluates a function on the disc.

Everything here is an immutable value and every operation is pure, so the
module is safe to use from concurrent code without locking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator


class DomainError(ValueError):
    """Raised when arguments leave the domain an operation is defined on."""


@dataclass(frozen=True)
class PQParams:
    """The deformation pair (p, q), validated strictly as 0 < q < p <= 1."""

    p: float
    q: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", float(self.p))
        object.__setattr__(self, "q", float(self.q))
        if not (0.0 < self.q < self.p <= 1.0):
            raise DomainError(
                f"need 0 < q < p <= 1, got (p, q)=({self.p:g}, {self.q:g}); "
                "use PQParams.limit for the closed boundary q = p"
            )

    @classmethod
    def limit(cls, p: float = 1.0, q: float = 1.0) -> "PQParams":
        """Relaxed constructor that admits the closed boundary q = p.

        The summation form of the deformed integers is continuous through
        q = p, so limit suites can evaluate the classical regime exactly
        at p = q = 1 instead of approximating it with q = 1 - eps.
        """
        p, q = float(p), float(q)
        if not (0.0 < q <= p <= 1.0):
            raise DomainError(f"limit params need 0 < q <= p <= 1, got (p, q)=({p:g}, {q:g})")
        self = object.__new__(cls)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        return self


def pq_number(n: int, params: PQParams) -> float:
    """Deformed integer [n] = sum_{k=0}^{n-1} p^k q^(n-1-k).

    The summation form is used instead of (p^n - q^n)/(p - q) because it
    stays finite and continuous through p = q; the two agree to roundoff
    away from that diagonal.  [0] = 0 by the empty sum.
    """
    if n < 0:
        raise DomainError(f"pq_number needs n >= 0, got n={n}")
    p, q = params.p, params.q
    return math.fsum(p**k * q ** (n - 1 - k) for k in range(n))


@dataclass(frozen=True, init=False)
class TruncatedSeries:
    """Coefficient jet a0 + a1 z + ... + aN z^N of an analytic function.

    Coefficients are stored as complex numbers.  Binary operations keep
    the truncation honest: the result carries the smaller of the two
    operand orders, and division/composition are tracked to that same
    order.  Instances are immutable.
    """

    coeffs: tuple[complex, ...]

    #: Default truncation order used by convenience constructors.
    DEFAULT_ORDER = 8

    def __init__(self, coeffs: Iterable[complex], order: int | None = None):
        cs = [complex(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise DomainError(f"series order must be >= 0, got {order}")
            cs = (cs + [0j] * (order + 1 - len(cs)))[: order + 1]
        if not cs:
            raise DomainError("a series needs at least its constant coefficient")
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, degree: int, order: int | None = None) -> "TruncatedSeries":
        """The single term z^degree, padded to ``order`` (default: degree)."""
        if degree < 0:
            raise DomainError(f"monomial degree must be >= 0, got {degree}")
        return cls([0j] * degree + [1.0 + 0j], order=order if order is not None else degree)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_normalized(self) -> bool:
        """True when a0 = 0 and a1 = 1 (the usual disc normalization)."""
        return self.order >= 1 and self.coeffs[0] == 0 and self.coeffs[1] == 1

    def __getitem__(self, n: int) -> complex:
        return self.coeffs[n]

    def __iter__(self) -> Iterator[complex]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, order=order)

    def __add__(self, other: "TruncatedSeries | complex") -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            return TruncatedSeries([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])
        return TruncatedSeries((self.coeffs[0] + other,) + self.coeffs[1:])

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs])

    def __sub__(self, other: "TruncatedSeries | complex") -> "TruncatedSeries":
        return self + (-other if isinstance(other, TruncatedSeries) else -complex(other))

    def __rsub__(self, other: complex) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other: "TruncatedSeries | complex") -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            out = [
                sum(self.coeffs[i] * other.coeffs[k - i] for i in range(k + 1))
                for k in range(n + 1)
            ]
            return TruncatedSeries(out)
        return TruncatedSeries([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def __truediv__(self, other: "TruncatedSeries | complex") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self * (1.0 / complex(other))
        if other.coeffs[0] == 0:
            raise DomainError("series division needs a nonzero constant term in the divisor")
        n = min(self.order, other.order)
        out: list[complex] = []
        for k in range(n + 1):
            acc = self.coeffs[k] - sum(out[i] * other.coeffs[k - i] for i in range(k))
            out.append(acc / other.coeffs[0])
        return TruncatedSeries(out)

    def __rtruediv__(self, other: complex) -> "TruncatedSeries":
        return TruncatedSeries([other], order=self.order) / self

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """Substitute ``inner`` for the variable; inner must vanish at 0."""
        if inner.coeffs[0] != 0:
            raise DomainError("composition needs an inner series with zero constant term")
        n = min(self.order, inner.order)
        w = inner.truncate(n)
        # Horner evaluation with series arithmetic at the working order.
        acc = TruncatedSeries([self.coeffs[n]], order=n)
        for k in range(n - 1, -1, -1):
            acc = acc * w + self.coeffs[k]
        return acc


def pq_derivative(f: TruncatedSeries, params: PQParams) -> TruncatedSeries:
    """Termwise deformed derivative: z^n maps to [n] z^(n-1).

    The order drops by one, so the input must carry order >= 1.
    """
    if f.order < 1:
        raise DomainError("pq_derivative needs a series of order >= 1")
    return TruncatedSeries([pq_number(n, params) * f.coeffs[n] for n in range(1, f.order + 1)])


def pq_integral(f: TruncatedSeries, params: PQParams) -> TruncatedSeries:
    """Termwise deformed antiderivative: z^n maps to z^(n+1) / [n+1].

    The order rises by one and the constant of integration is zero.
    """
    return TruncatedSeries(
        [0j] + [f.coeffs[n] / pq_number(n + 1, params) for n in range(f.order + 1)]
    )
