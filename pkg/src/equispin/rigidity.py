"""Constraint and verdict engine for homologically trivial cyclic actions.

The pipeline evaluates a candidate fixed-point dataset against every exact
necessary condition this toolkit knows:

* realness, twist symmetry, and (order 3) rationality of the spin numbers;
* integrality of the eigenspace-defect vector and the defect bounds;
* integrality of the orbit-space signature and Euler characteristic, and
  their rigidity under a homologically trivial action;
* the vanishing theorem for the Seiberg-Witten integer of the trivial
  spin-c structure when the spin number is rational and negative, played
  against the parity fact that this integer is odd on a homotopy K3
  surface (Morgan-Szabo), which yields the contradiction.

Outcomes: ``Contradiction`` (the rigidity argument completed against an
otherwise consistent dataset), ``ConstraintViolation`` (the dataset already
fails a necessary condition), ``NoObstruction``.  Every reason in a verdict
names the checked inequality or equation and is re-checkable through the
corresponding module operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .cyclo import CyclotomicNumber, IntPolynomial
from .dataset import FixedPointDataset, ManifoldInvariants, count_p3_types
from .lefschetz import (
    KVector,
    NonIntegralDefectError,
    SpinNumberTuple,
    euler_quotient_p3,
    fixed_set_euler,
    k_vector,
    signature_quotient_p3,
    spin_number_tuple,
    synthesize_spins,
)
from .repring import InstanceParameters, RepRingElement, adams_constraint_residual, solve_adams_kernel

CONTRADICTION = "Contradiction"
CONSTRAINT_VIOLATION = "ConstraintViolation"
NO_OBSTRUCTION = "NoObstruction"

SIGN_NEGATIVE = "negative"
SIGN_ZERO = "zero"
SIGN_POSITIVE = "positive"
SIGN_UNKNOWN = "unknown-irrational"


def numeric_estimate(value: CyclotomicNumber, bits: int = 80) -> str:
    """Advisory floating estimate of a real cyclotomic value, as a string.

    This is the only place the package leaves exact arithmetic; the result
    is for reports only and never feeds back into a decision.
    """
    with mpmath.workprec(bits):
        acc = mpmath.mpf(0)
        n = value.conductor
        for idx, c in enumerate(value.coeffs):
            if c:
                acc += (
                    mpmath.mpf(c.numerator)
                    / c.denominator
                    * mpmath.cos(2 * mpmath.pi * idx / n)
                )
        return mpmath.nstr(acc, max(6, bits * 3 // 10))


@dataclass(frozen=True)
class SpinClass:
    """Exact rationality and sign classification of a spin number."""

    rational: bool
    value: Fraction | None
    sign: str
    estimate: str | None = None


def classify_spin(value: CyclotomicNumber, precision_bits: int = 80) -> SpinClass:
    """Classify a (real) spin number by exact rationality and sign.

    Irrational values get sign ``unknown-irrational`` plus an advisory
    numeric estimate; the exact pipeline never branches on the estimate.
    """
    if not value.is_real():
        raise ValueError("spin numbers are real; got a non-real value")
    reduced = value.reduced()
    if reduced.is_rational():
        v = reduced.to_rational()
        sign = SIGN_ZERO if v == 0 else (SIGN_POSITIVE if v > 0 else SIGN_NEGATIVE)
        return SpinClass(rational=True, value=v, sign=sign)
    return SpinClass(
        rational=False,
        value=None,
        sign=SIGN_UNKNOWN,
        estimate=numeric_estimate(reduced, precision_bits),
    )


@dataclass(frozen=True)
class Reason:
    """One checked inequality or equation, with the witnessed numbers."""

    anchor: str
    detail: str


def check_k_constraints(kv: KVector, spin: SpinClass, quotient_b_plus: int) -> list[Reason]:
    """All defect-vector constraints violated by ``kv``; empty list when clean.

    The bounds assume the invariant part of the positive cone has rank 3
    (``quotient_b_plus == 3``); with any other value no constraint applies
    and the list is empty.  Violations are data, not errors.
    """
    if quotient_b_plus != 3:
        return []
    p = kv.p
    out: list[Reason] = []
    for i, k in enumerate(kv.k):
        if k > 2:
            out.append(
                Reason(
                    "defect-bound",
                    f"k_{i} = {k} exceeds 2 (2-adic parity of the trace product "
                    "over all twists fails for any defect above 2)",
                )
            )
    if spin.sign == SIGN_ZERO:
        out.append(
            Reason(
                "spin-zero-excluded",
                "a zero spin number would force k_0 = 2/p, which is not an integer",
            )
        )
    if spin.rational and spin.sign == SIGN_POSITIVE:
        expected = (2,) + (0,) * (p - 1)
        if kv.k != expected:
            out.append(
                Reason(
                    "nonnegative-spin-pattern",
                    f"rational non-negative spin number forces defects {expected}, got {kv.k}",
                )
            )
    if spin.rational and spin.sign == SIGN_NEGATIVE:
        k0 = kv.k[0]
        tail = kv.k[1:]
        if k0 > 0:
            out.append(
                Reason(
                    "negative-spin-pattern",
                    f"rational negative spin number forces k_0 <= 0, got {k0}",
                )
            )
        if len(set(tail)) > 1:
            out.append(
                Reason(
                    "negative-spin-pattern",
                    f"rational negative spin number forces equal tail defects, got {tail}",
                )
            )
        elif tail and (2 - k0) % (p - 1) == 0 and tail[0] != (2 - k0) // (p - 1):
            out.append(
                Reason(
                    "negative-spin-pattern",
                    f"tail defects must equal (2 - k_0)/(p - 1) = {(2 - k0) // (p - 1)}, "
                    f"got {tail[0]}",
                )
            )
        head_sum = sum(kv.k[:-1])
        if head_sum != 2 - kv.k[-1] or head_sum < 0:
            out.append(
                Reason(
                    "defect-tail-sum",
                    f"k_0 + ... + k_(p-2) = {head_sum} must equal 2 - k_(p-1) "
                    f"= {2 - kv.k[-1]} and be non-negative",
                )
            )
    return out


def lift_sweep(dataset: FixedPointDataset) -> list[tuple[int, KVector, SpinClass]]:
    """Defect vectors and implied spin classes of all p alternative lifts.

    Multiplying the lift by a primitive p-th root of unity cyclically
    shifts the defects; each entry carries the shift, the shifted vector,
    and the classification of its implied first-twist value (generally not
    real for a nonzero shift, hence unclassifiable beyond irrationality).
    """
    kv = k_vector(spin_number_tuple(dataset))
    out = []
    for q in range(dataset.p):
        shifted = kv.shifted(q)
        value = synthesize_spins(shifted).values[1]
        if value.is_real():
            cls = classify_spin(value)
        else:
            cls = SpinClass(rational=False, value=None, sign=SIGN_UNKNOWN)
        out.append((q, shifted, cls))
    return out


def derive_instance(kv: KVector, l: int = 1, d: int = 0, pad: int = 1) -> InstanceParameters:
    """Minimal non-negative dimension vectors realizing a defect vector.

    ``m_i = max(k_i, 0) + pad`` and ``n_i = m_i - k_i``; the uniform pad
    keeps every dimension positive (the conclusion of the vanishing
    argument does not depend on the choice, only on the defects).
    """
    m = tuple(max(k, 0) + pad for k in kv.k)
    n = tuple(mi - ki for mi, ki in zip(m, kv.k))
    if kv.total != l + 1 + d:
        raise ValueError(
            f"defect vector sums to {kv.total}, incompatible with l = {l} and d = {d}"
        )
    return InstanceParameters(p=kv.p, m_vector=m, n_vector=n, l=l, d=d)


@dataclass(frozen=True)
class VanishingReport:
    """Outcome of the Adams-kernel verification for one parameter set."""

    hypotheses_met: bool
    detail: str
    q: int | None = None
    kernel_rank: int | None = None
    kernel_contains_expected: bool | None = None
    kernel_spanned_by_expected: bool | None = None
    scalar_forced_zero: bool | None = None
    sw_value: int | None = None


def _scalar_constraint_poly(p: int, k_total: int, l: int) -> IntPolynomial:
    """Residual of the cofactor identity at the top Adams exponent, flat group variable.

    For the candidate ``a * sigma * (1-t)^(M-1)`` the cancelled identity at
    exponent ``q = p`` with the group variable sent to 1 reads
    ``a p (1 + t + ... + t^(p-1))^(sum k - 1) = a p^(l+1)``; the difference
    of the two sides is returned.  A nonzero polynomial forces ``a = 0``.
    """
    if k_total - 1 < 0:
        raise ValueError("defect total below 1; the cofactor identity degenerates")
    ones = IntPolynomial((1,) * p)
    return p * ones ** (k_total - 1) - IntPolynomial((p ** (l + 1),))


def verify_sw_vanishing(params: InstanceParameters, q: int = 2) -> VanishingReport:
    """Run the full vanishing verification on one parameter set.

    Steps: check the hypotheses (``k_0 <= l`` and equal tail defects); solve
    the Adams-constraint kernel at exponent ``q``; test that the predicted
    generator ``sigma (1-t)^(M-1)`` lies in (and, when the rank is 1, spans)
    the kernel; then run the top-exponent specialization that forces the
    remaining integer scalar to vanish, which pins the Seiberg-Witten
    integer of the trivial spin-c structure to 0.
    """
    k = params.k_vector
    l = params.l
    if k[0] > l or len(set(k[1:])) > 1:
        return VanishingReport(
            hypotheses_met=False,
            detail=(
                f"hypotheses not met (need k_0 <= {l} and equal tail defects, "
                f"got {k}); no conclusion"
            ),
        )
    p = params.p
    total = params.truncation().total
    sigma = RepRingElement.sigma(p)
    one_minus_t = RepRingElement.one(p) - RepRingElement.t(p)
    expected = sigma * one_minus_t ** (total - 1)

    kernel = solve_adams_kernel(params, q)
    contains = adams_constraint_residual(expected, params, q).is_zero()
    spanned = len(kernel) == 1 and kernel[0] in (expected, -expected)

    residual = _scalar_constraint_poly(p, sum(k), l)
    forced = not residual.is_zero()
    return VanishingReport(
        hypotheses_met=True,
        detail=(
            f"kernel rank {len(kernel)}; candidate generator "
            f"{'spans' if spanned else ('lies in' if contains else 'MISSES')} the kernel; "
            f"scalar {'forced to zero' if forced else 'not forced'} by the "
            "top-exponent specialization"
        ),
        q=q,
        kernel_rank=len(kernel),
        kernel_contains_expected=contains,
        kernel_spanned_by_expected=spanned,
        scalar_forced_zero=forced,
        sw_value=0 if forced else None,
    )


def enumerate_pseudofree_p3(
    quotient_b_plus: int,
    homologically_trivial: bool,
    manifold: ManifoldInvariants,
) -> list[tuple[int, int]]:
    """All point-type counts ``(f1, f2)`` consistent with an order-3 pseudofree action.

    Brute force over the finite box ``0 <= f1, f2 <= 24`` (the Euler bound
    is generous), filtered by the linear relation
    ``4 f1 + 2 f2 = 9 quotient_b_plus - 3``, the mod-9 congruence
    ``f1 - f2 = 6 (mod 9)`` forced by integrality of the quotient
    signature, and, under homological triviality, the rigidity relation
    ``f1 - f2 = 3 sigma(X)``.
    """
    if not manifold.is_homotopy_k3:
        raise ValueError("the pseudofree enumeration is specific to homotopy K3 invariants")
    if quotient_b_plus not in (1, 3):
        raise ValueError("unsupported quotient b_plus (must be 1 or 3)")
    bound = 24
    target = 9 * quotient_b_plus - 3
    out = []
    for f1 in range(bound + 1):
        for f2 in range(bound + 1):
            if 4 * f1 + 2 * f2 != target:
                continue
            if (f1 - f2) % 9 != 6:
                continue
            if homologically_trivial and f1 - f2 != 3 * manifold.signature:
                continue
            out.append((f1, f2))
    return out


@dataclass(frozen=True)
class RigidityVerdict:
    """Outcome of the full constraint pipeline with its reason chain."""

    outcome: str
    reasons: tuple[Reason, ...]
    notes: tuple[Reason, ...]
    spin: SpinClass
    spins: SpinNumberTuple | None
    k: KVector | None
    sweep: tuple | None
    quotient: dict | None
    vanishing: VanishingReport | None


def verdict(dataset: FixedPointDataset, precision_bits: int = 80) -> RigidityVerdict:
    """Evaluate a dataset against every exact necessary condition.

    ``Contradiction`` requires the homologically-trivial flag: it means the
    dataset is internally consistent but the two independent computations
    of the Seiberg-Witten integer (or of the spin number's sign) cannot be
    reconciled, which is the rigidity theorem in mechanized form.
    """
    violations: list[Reason] = []
    contradictions: list[Reason] = []
    notes: list[Reason] = []

    spins = spin_number_tuple(dataset)
    spin = classify_spin(spins.values[1], precision_bits)

    kv = None
    sweep = None
    try:
        kv = k_vector(spins)
        sweep = tuple(lift_sweep(dataset))
    except NonIntegralDefectError as exc:
        violations.append(
            Reason(
                "defect-integrality",
                f"Fourier inversion of the spin numbers is not integral: {exc}",
            )
        )

    if kv is not None and dataset.manifold.is_homotopy_k3:
        violations.extend(check_k_constraints(kv, spin, dataset.quotient_b_plus))

    quotient = None
    if dataset.p == 3:
        sigma_q = signature_quotient_p3(dataset)
        euler_q = euler_quotient_p3(dataset)
        integral = sigma_q.denominator == 1 and euler_q.denominator == 1
        quotient = {
            "sigma": sigma_q,
            "euler": euler_q,
            "b_plus": dataset.quotient_b_plus,
            "b_minus": dataset.quotient_b_plus - sigma_q,
            "integral": integral,
        }
        if sigma_q.denominator != 1:
            violations.append(
                Reason(
                    "quotient-signature-integrality",
                    f"orbit-space signature {sigma_q} is not an integer; "
                    "no action with this fixed set exists",
                )
            )
        if euler_q.denominator != 1:
            violations.append(
                Reason(
                    "quotient-euler-integrality",
                    f"orbit-space Euler characteristic {euler_q} is not an integer",
                )
            )

    vanishing = None
    if dataset.homologically_trivial:
        manifold = dataset.manifold
        if dataset.p == 3:
            sigma_q = signature_quotient_p3(dataset)
            if sigma_q != manifold.signature:
                violations.append(
                    Reason(
                        "quotient-signature-trivial",
                        f"a homologically trivial action keeps the signature: "
                        f"orbit space gives {sigma_q}, manifold has {manifold.signature}",
                    )
                )
            euler_q = euler_quotient_p3(dataset)
            if euler_q != manifold.euler:
                violations.append(
                    Reason(
                        "lefschetz-euler-trivial",
                        f"a homologically trivial action forces the fixed set to have "
                        f"Euler characteristic {manifold.euler} "
                        f"(found {fixed_set_euler(dataset)})",
                    )
                )
            f1, f2 = count_p3_types(dataset)
            delta = f1 - f2
            if kv is not None and manifold.is_homotopy_k3:
                implied = 2 + Fraction(delta, 4)
                if implied != kv.k[0]:
                    violations.append(
                        Reason(
                            "defect-bookkeeping",
                            f"combined signature/index bookkeeping forces "
                            f"k_0 = 2 + (f1 - f2)/4 = {implied}, but the spin numbers "
                            f"give k_0 = {kv.k[0]}",
                        )
                    )
                if dataset.surfaces:
                    notes.append(
                        Reason(
                            "mixed-fixed-set-bookkeeping",
                            "the k_0 = 2 + (f1 - f2)/4 identity extends the pseudofree "
                            "bookkeeping to mixed fixed sets; it is applied as a "
                            "necessary condition, not re-derived independently",
                        )
                    )

        # the contradiction machinery below is specific to homotopy K3
        # invariants (the parity of the Seiberg-Witten integer among them)
        if not violations and kv is not None and manifold.is_homotopy_k3:
            if dataset.p == 3:
                f1, f2 = count_p3_types(dataset)
                if f1 == f2:
                    surface_sum = sum(sf.self_intersection for sf in dataset.surfaces)
                    normalized = Fraction(surface_sum, 6)
                    contradictions.append(
                        Reason(
                            "positive-vs-nonpositive-spin",
                            f"balanced point types force k_0 = 2, hence spin number 2; "
                            f"but with the type-determined signs the fixed set gives "
                            f"{normalized} <= 0, and a spin number can never be 0",
                        )
                    )
            if spin.rational and spin.sign == SIGN_NEGATIVE:
                l = (manifold.b_plus - 1) // 2
                vanishing = verify_sw_vanishing(derive_instance(kv, l=l, d=0))
                if vanishing.hypotheses_met and vanishing.scalar_forced_zero:
                    contradictions.append(
                        Reason(
                            "sw-vanishing",
                            "rational negative spin number forces the Seiberg-Witten "
                            "integer of the trivial spin-c structure to vanish "
                            f"(kernel rank {vanishing.kernel_rank}, scalar forced to zero)",
                        )
                    )
                    contradictions.append(
                        Reason(
                            "sw-parity",
                            "the Seiberg-Witten integer of the trivial spin-c structure "
                            "on a homotopy K3 surface is odd (Morgan-Szabo), "
                            "so it cannot vanish",
                        )
                    )

    if not dataset.homologically_trivial and dataset.p == 3 and quotient is not None:
        if quotient["integral"] and quotient["sigma"] != dataset.manifold.signature:
            notes.append(
                Reason(
                    "nontrivial-action",
                    f"orbit-space signature {quotient['sigma']} differs from "
                    f"{dataset.manifold.signature}, so the action is nontrivial "
                    "on middle cohomology",
                )
            )
    if not spin.rational:
        notes.append(
            Reason(
                "rationality-hypothesis",
                "spin number is irrational; the rational-negative obstruction "
                f"does not apply (advisory estimate {spin.estimate})",
            )
        )
    if dataset.p >= 5:
        notes.append(
            Reason(
                "trace-schedule-ambiguity",
                "the closed-form trace exponents admit two readings for p >= 5; "
                "they agree on the product over all twists, which is what the "
                "defect bound uses",
            )
        )

    if violations:
        outcome = CONSTRAINT_VIOLATION
        reasons = tuple(violations)
    elif contradictions:
        outcome = CONTRADICTION
        reasons = tuple(contradictions)
    else:
        outcome = NO_OBSTRUCTION
        reasons = ()

    return RigidityVerdict(
        outcome=outcome,
        reasons=reasons,
        notes=tuple(notes),
        spin=spin,
        spins=spins,
        k=kv,
        sweep=sweep,
        quotient=quotient,
        vanishing=vanishing,
    )


# -- report serialization -----------------------------------------------------


def _fraction_str(value: Fraction) -> str:
    return str(value)


def spin_class_dict(spin: SpinClass) -> dict:
    return {
        "rational": spin.rational,
        "value": _fraction_str(spin.value) if spin.value is not None else None,
        "sign": spin.sign,
        "estimate": spin.estimate,
    }


def cyclotomic_dict(value: CyclotomicNumber) -> dict:
    return {
        "conductor": value.conductor,
        "coeffs": [str(c) for c in value.coeffs],
    }


def verdict_report(v: RigidityVerdict) -> dict:
    """The machine-readable verdict report (JSON-compatible dict)."""
    return {
        "outcome": v.outcome,
        "spin": spin_class_dict(v.spin),
        "k_vector": list(v.k.k) if v.k is not None else None,
        "lift_sweep": [
            {"q": q, "k": list(kv.k), "spin": spin_class_dict(cls)}
            for q, kv, cls in (v.sweep or ())
        ]
        or None,
        "quotient": {
            "sigma": _fraction_str(v.quotient["sigma"]),
            "euler": _fraction_str(v.quotient["euler"]),
            "b_plus": v.quotient["b_plus"],
            "b_minus": _fraction_str(v.quotient["b_minus"]),
            "integral": v.quotient["integral"],
        }
        if v.quotient
        else None,
        "prop41": {
            "hypotheses_met": v.vanishing.hypotheses_met,
            "kernel_rank": v.vanishing.kernel_rank,
            "kernel_contains_expected": v.vanishing.kernel_contains_expected,
            "kernel_spanned_by_expected": v.vanishing.kernel_spanned_by_expected,
            "scalar_forced_zero": v.vanishing.scalar_forced_zero,
            "sw_value": v.vanishing.sw_value,
            "detail": v.vanishing.detail,
        }
        if v.vanishing
        else None,
        "reasons": [{"anchor": r.anchor, "detail": r.detail} for r in v.reasons],
        "notes": [{"anchor": r.anchor, "detail": r.detail} for r in v.notes],
    }
