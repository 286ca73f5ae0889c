"""The deformed Bernardi averaging operator and its bound variants.

The operator maps a normalized series f(z) = z + sum a_n z^n to

    z + sum ( [1+c] / [n+c] ) a_n z^n       (c = 0, 1, 2, ...),

multiplying each coefficient by L_n = [1+c]/[n+c], which reduces to the
classical Bernardi factor (1+c)/(n+c) in the limit p = q = 1.  The same
operator arises from the integral form: multiply by t^(c-1), take the
deformed antiderivative, and divide by z^c; both routes are implemented
so they can be checked against each other.

Bound variants substitute the effective integers [2]L2 and [3]L3 into
the max-form, piecewise and refined kernels.  Since L_n < 1 typically,
the effective integers drop below 1 for many (c, p, q); that regime is
refused with an error reporting the effective values.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import oracle as _oracle
from .bounds import (
    BoundReport,
    fs_bound_from_numbers,
    fs_scales,
    piecewise_from_numbers,
    refined_lhs_from_numbers,
    thresholds_from_numbers,
    v_from_numbers,
    _require_real,
)
from .classes import ClassKind, MaMindaTarget, MemberJet, deformation_numbers
from .oracle import OracleConfig, VerificationRecord
from .pq_core import DomainError, PQParams, TruncatedSeries, pq_integral, pq_number


@dataclass(frozen=True)
class BernardiParams:
    """Operator order c (a nonnegative integer) over a base deformation pair."""

    c: int
    base: PQParams

    def __post_init__(self) -> None:
        if not isinstance(self.c, int) or self.c < 0:
            raise DomainError(f"operator order c must be an integer >= 0, got {self.c!r}")


def bernardi_factor(n: int, bp: BernardiParams) -> float:
    """Coefficient multiplier L_n = [1+c] / [n+c] for n >= 1; L_1 = 1."""
    if n < 1:
        raise DomainError(f"bernardi_factor needs n >= 1, got n={n}")
    return pq_number(1 + bp.c, bp.base) / pq_number(n + bp.c, bp.base)


def bernardi_transform(f: TruncatedSeries, bp: BernardiParams) -> TruncatedSeries:
    """Apply the operator coefficientwise; the input must be normalized."""
    if not f.is_normalized:
        raise DomainError("bernardi_transform needs a normalized series (a0 = 0, a1 = 1)")
    return TruncatedSeries(
        [0j] + [bernardi_factor(n, bp) * f.coeffs[n] for n in range(1, f.order + 1)]
    )


def _shift_up(s: TruncatedSeries, k: int) -> TruncatedSeries:
    # multiply by z^k; shifted coefficients are exact, so the order grows
    return TruncatedSeries([0j] * k + list(s.coeffs))


def _shift_down(s: TruncatedSeries, k: int) -> TruncatedSeries:
    if any(s.coeffs[i] != 0 for i in range(k)):
        raise DomainError(f"cannot divide by z^{k}: lower-order coefficients are nonzero")
    return TruncatedSeries(s.coeffs[k:])


def bernardi_transform_integral(f: TruncatedSeries, bp: BernardiParams) -> TruncatedSeries:
    """Integral route: [1+c] z^(-c) times the antiderivative of t^(c-1) f(t).

    For c = 0 the prefactor t^(-1) is a downward shift, legal because f
    is normalized.  Agrees with ``bernardi_transform`` coefficient by
    coefficient up to roundoff.
    """
    if not f.is_normalized:
        raise DomainError("bernardi_transform_integral needs a normalized series")
    c = bp.c
    integrand = _shift_up(f, c - 1) if c >= 1 else _shift_down(f, 1)
    return pq_number(1 + c, bp.base) * _shift_down(pq_integral(integrand, bp.base), c)


def effective_numbers(bp: BernardiParams) -> tuple[float, float]:
    """([2] L2, [3] L3), the deformed integers the bound kernels see.

    Rejected when either drops to 1 or below, a regime that is common
    because L_n < 1 away from c = 0; the message reports the effective
    values so the caller can see how far off the request was.
    """
    two, three = deformation_numbers(bp.base)
    two_eff = two * bernardi_factor(2, bp)
    three_eff = three * bernardi_factor(3, bp)
    if two_eff <= 1.0 or three_eff <= 1.0:
        raise DomainError(
            f"operator bound formulas need [2]L2 > 1 and [3]L3 > 1; got "
            f"[2]L2={two_eff:.6g}, [3]L3={three_eff:.6g} for c={bp.c}, "
            f"(p, q)=({bp.base.p:g}, {bp.base.q:g})"
        )
    return two_eff, three_eff


def bernardi_member(m: MemberJet, bp: BernardiParams) -> MemberJet:
    """Jet of the transformed function: (a2, a3) -> (L2 a2, L3 a3)."""
    return MemberJet(
        a2=bernardi_factor(2, bp) * m.a2,
        a3=bernardi_factor(3, bp) * m.a3,
        kind=m.kind,
        source=m.source,
        phi=m.phi,
        params=m.params,
    )


def fs_bound_bernardi(
    kind: ClassKind, mu: complex, phi: MaMindaTarget, bp: BernardiParams
) -> BoundReport:
    """Max-form bound with the effective integers; reduces to the plain
    bound when both multipliers are 1."""
    two_eff, three_eff = effective_numbers(bp)
    return fs_bound_from_numbers(kind, mu, phi, two_eff, three_eff, bp.base.p, bp.base.q)


def thresholds_bernardi(
    kind: ClassKind, phi: MaMindaTarget, bp: BernardiParams, printed_form: bool = False
) -> tuple[float, float, float]:
    """Piecewise thresholds with the effective integers."""
    two_eff, three_eff = effective_numbers(bp)
    return thresholds_from_numbers(kind, phi, two_eff, three_eff, printed_form=printed_form)


def fs_piecewise_bernardi(
    kind: ClassKind, mu: float, phi: MaMindaTarget, bp: BernardiParams, printed_form: bool = False
) -> BoundReport:
    """Piecewise bound with the effective integers.

    ``printed_form`` reproduces the comparison variant that circulates in
    print, whose thresholds carry the operator multipliers but whose
    branch values do not; it is inconsistent with the max-form bound and
    may even turn negative, in which case constructing the report fails.
    """
    two_eff, three_eff = effective_numbers(bp)
    if not printed_form:
        return piecewise_from_numbers(kind, mu, phi, two_eff, three_eff, bp.base.p, bp.base.q)
    mu = _require_real(mu)
    t1, t2, t3 = thresholds_from_numbers(kind, phi, two_eff, three_eff)
    two, three = deformation_numbers(bp.base)
    A, _, _ = fs_scales(kind, two, three)
    arg = 1.0 - 2.0 * v_from_numbers(kind, mu, phi, two, three).real
    if mu < t1:
        branch, value = "below_printed", phi.b1 / A * arg
    elif mu <= t2:
        branch, value = "mid_printed", phi.b1 / A
    else:
        branch, value = "above_printed", -(phi.b1 / A) * arg
    return BoundReport(
        value=value, branch=branch, mu=mu, p=bp.base.p, q=bp.base.q, thresholds=(t1, t2, t3)
    )


def refined_lhs_bernardi(
    window: str, m: MemberJet, mu: float, phi: MaMindaTarget, bp: BernardiParams
) -> tuple[float, float]:
    """Refined functional for the transformed jet, with effective integers
    supplying the thresholds, penalty and cap."""
    sm = bernardi_member(m, bp)
    two_eff, three_eff = effective_numbers(bp)
    return refined_lhs_from_numbers(window, sm.a2, sm.a3, mu, phi, two_eff, three_eff)


def verify_fs_bernardi(
    kind: ClassKind, mu: complex, phi: MaMindaTarget, bp: BernardiParams, cfg: OracleConfig
) -> VerificationRecord:
    """Brute-force check of the operator bound over transformed jets.

    Member jets are built from the sampled body with the plain integers,
    scaled coefficientwise by (L2, L3), and the functional maximum is
    compared with the effective-number bound.  The transform contracts
    the jets, so the bound holds with slack rather than sharply.
    """
    two, three = deformation_numbers(bp.base)
    report = fs_bound_bernardi(kind, mu, phi, bp)
    L2, L3 = bernardi_factor(2, bp), bernardi_factor(3, bp)
    w1, w2, c1, c2 = _oracle._caratheodory_samples(cfg)
    a2, a3 = _oracle._member_arrays(kind, phi, two, three, c1, c2)
    values = abs(L3 * a3 - mu * (L2 * a2) ** 2)
    return _oracle._record(mu, report.value, values, w1, w2, report.branch, cfg)
