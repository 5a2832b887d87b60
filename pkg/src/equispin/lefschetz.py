"""Exact fixed-point formulas for the twisted Dirac index and quotients.

The central object is the spin number of each power of the action,
evaluated exactly in the cyclotomic field of conductor ``2p`` from the
half-weight encoding of the fixed set.  Discrete Fourier inversion of the
spin numbers produces the integer eigenspace-defect vector, and the
order-3 quotient formulas give the signature and Euler characteristic of
the orbit space as exact rationals.

Power twists are evaluated through parity-canonical half weights: each pair
``(a, b)`` (and each surface residue ``c``) is shifted into the even-sum
class mod 2p, with the shift's sign carried out front.  The shifted and raw
encodings give the same value at the first power, but only the even class
makes every twist real and symmetric under ``j -> p - j``, which the index
of a lift of order p demands; the sign at higher powers is therefore
constant, not a j-th power.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .cyclo import CyclotomicNumber, half_angle_cos, half_angle_csc
from .dataset import FixedPointDataset, ManifoldInvariants, normalize_half_weights


class NonIntegralDefectError(ValueError):
    """Fourier inversion produced a non-integer defect: inconsistent dataset."""


@functools.lru_cache(maxsize=None)
def _point_term(p: int, j: int, a: int, b: int) -> CyclotomicNumber:
    """Contribution of one isolated point to the j-th spin number."""
    n = 2 * p
    delta = (a + b) % 2
    aa = (a + p * delta) % n
    bb = b % n
    z = CyclotomicNumber.zeta
    prod = (z(n, j * aa % n) - z(n, -j * aa % n)) * (z(n, j * bb % n) - z(n, -j * bb % n))
    sign = -1 if delta else 1
    return -sign * prod.inverse()


@functools.lru_cache(maxsize=None)
def _surface_factor(p: int, j: int, c: int) -> CyclotomicNumber:
    """Per-unit-self-intersection contribution of a fixed surface."""
    n = 2 * p
    delta = c % 2
    cc = (c + p * delta) % n
    z = CyclotomicNumber.zeta
    num = z(n, j * cc % n) + z(n, -j * cc % n)
    den = (z(n, j * cc % n) - z(n, -j * cc % n)) ** 2
    sign = -1 if delta else 1
    return sign * Fraction(-1, 2) * num * den.inverse()


def spin_number(dataset: FixedPointDataset, j: int) -> CyclotomicNumber:
    """Spin number of the j-th power of the action, reduced to minimal conductor."""
    p = dataset.p
    if not 1 <= j <= p - 1:
        raise ValueError("power must lie in 1..p-1")
    points, surfaces = normalize_half_weights(dataset)
    total = CyclotomicNumber.from_rational(0, 2 * p)
    for pt in points:
        total = total + _point_term(p, j, pt.a % (2 * p), pt.b % (2 * p))
    for sf in surfaces:
        if sf.self_intersection:
            total = total + sf.self_intersection * _surface_factor(p, j, sf.c % (2 * p))
    return total.reduced()


def spin_number_from_angles(dataset: FixedPointDataset) -> CyclotomicNumber:
    """Independent first-power evaluation from the literal trigonometric formula.

    Uses the exact half-angle constructors and the explicit spin signs:
    ``-(1/4) eps csc csc`` per point and ``(1/4) eps cos csc^2 <F,F>`` per
    surface.  Kept separate from :func:`spin_number` as a cross-check; the
    two must agree on every valid dataset.
    """
    p = dataset.p
    n = 4 * p
    total = CyclotomicNumber.from_rational(0, n)
    for pt in dataset.isolated:
        term = half_angle_csc(pt.l_alpha, p) * half_angle_csc(pt.l_beta, p)
        total = total + Fraction(-pt.epsilon, 4) * term
    for sf in dataset.surfaces:
        term = half_angle_cos(sf.l_theta, p) * half_angle_csc(sf.l_theta, p) ** 2
        total = total + Fraction(sf.epsilon * sf.self_intersection, 4) * term
    return total.reduced()


def spin_index(manifold: ManifoldInvariants) -> Fraction:
    """The untwisted index ``-signature / 8``."""
    if not manifold.is_spin:
        raise ValueError("the index formula needs a spin manifold")
    if manifold.signature % 8 != 0:
        raise ValueError("signature must be divisible by 8")
    return Fraction(-manifold.signature, 8)


@dataclass(frozen=True)
class SpinNumberTuple:
    """Spin numbers of all powers; slot 0 holds the full index ``-sigma/8``."""

    p: int
    values: tuple[CyclotomicNumber, ...]

    def check(self) -> None:
        """Realness of every entry and symmetry under ``j -> p - j``."""
        for j, v in enumerate(self.values):
            if not v.is_real():
                raise ValueError(f"spin number at power {j} is not real")
        for j in range(1, self.p):
            if self.values[j] != self.values[self.p - j]:
                raise ValueError(f"spin numbers at powers {j} and {self.p - j} differ")


def spin_number_tuple(dataset: FixedPointDataset) -> SpinNumberTuple:
    """All spin numbers of a dataset, with the realness/symmetry checks run."""
    index = CyclotomicNumber.from_rational(spin_index(dataset.manifold))
    values = (index,) + tuple(spin_number(dataset, j) for j in range(1, dataset.p))
    out = SpinNumberTuple(dataset.p, values)
    out.check()
    return out


@dataclass(frozen=True)
class KVector:
    """Integer eigenspace defects ``(k_0, ..., k_{p-1})``; they sum to -sigma/8."""

    p: int
    k: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "k", tuple(int(v) for v in self.k))
        if len(self.k) != self.p:
            raise ValueError("defect vector must have one entry per group element")

    @property
    def total(self) -> int:
        return sum(self.k)

    def shifted(self, q: int) -> "KVector":
        """Relabeling induced by multiplying the lift by a p-th root of unity."""
        return KVector(self.p, tuple(self.k[(i + q) % self.p] for i in range(self.p)))


def k_vector(spins: SpinNumberTuple | list | tuple) -> KVector:
    """Invert the eigenvalue expansion of the spin numbers exactly.

    ``k_i = (1/p) * sum_j nu^(-i j) * Spin(j)`` with slot 0 carrying the
    full index.  Raises :class:`NonIntegralDefectError` when a coordinate is
    not a (rational) integer: the candidate dataset is then inconsistent.
    """
    if isinstance(spins, SpinNumberTuple):
        p, values = spins.p, spins.values
    else:
        values = tuple(spins)
        p = len(values)
    embedded = []
    for v in values:
        if isinstance(v, CyclotomicNumber):
            v = v.reduced()
            if p % v.conductor != 0:
                raise NonIntegralDefectError(
                    f"spin number of conductor {v.conductor} does not live at conductor {p}"
                )
            embedded.append(v.embed(p))
        else:
            embedded.append(CyclotomicNumber.from_rational(v, p))
    nu = CyclotomicNumber.zeta(p)
    out = []
    for i in range(p):
        acc = CyclotomicNumber.from_rational(0, p)
        for j, v in enumerate(embedded):
            acc = acc + nu ** ((-i * j) % p) * v
        acc = acc * Fraction(1, p)
        if not acc.is_rational():
            raise NonIntegralDefectError(f"defect {i} is not rational")
        value = acc.to_rational()
        if value.denominator != 1:
            raise NonIntegralDefectError(f"defect {i} is not an integer: {value}")
        out.append(int(value))
    return KVector(p, tuple(out))


def synthesize_spins(kv: KVector) -> SpinNumberTuple:
    """Forward evaluation ``Spin(j) = sum_i k_i nu^(i j)`` from a defect vector.

    No realness check is run: synthesized tuples from arbitrary integer
    vectors are allowed as inputs to :func:`k_vector` round trips.
    """
    p = kv.p
    nu = CyclotomicNumber.zeta(p)
    values = []
    for j in range(p):
        acc = CyclotomicNumber.from_rational(0, p)
        for i, k in enumerate(kv.k):
            if k:
                acc = acc + k * nu ** ((i * j) % p)
        values.append(acc.reduced())
    return SpinNumberTuple(p, tuple(values))


# -- order-3 quotient formulas ---------------------------------------------


def _require_p3(dataset: FixedPointDataset) -> None:
    if dataset.p != 3:
        raise ValueError("quotient formulas are implemented for order 3 only")


def signature_quotient_p3(dataset: FixedPointDataset) -> Fraction:
    """Exact signature of the orbit space for an order-3 action.

    ``3 sigma(X/G) = sigma(X) + (8/3) * sum <F,F> + (2/3) (f1 - f2)``; the
    surface coefficient is ``csc^2(pi/3) + csc^2(2pi/3) = 8/3``.  The result
    is returned as an exact rational; integrality is the caller's check (a
    non-integral value is itself an obstruction).
    """
    from .dataset import count_p3_types

    _require_p3(dataset)
    f1, f2 = count_p3_types(dataset)
    surface_sum = sum(sf.self_intersection for sf in dataset.surfaces)
    total = (
        dataset.manifold.signature
        + Fraction(8, 3) * surface_sum
        + Fraction(2, 3) * (f1 - f2)
    )
    return total / 3


def euler_quotient_p3(dataset: FixedPointDataset) -> Fraction:
    """Exact Euler characteristic of the orbit space for an order-3 action.

    ``3 chi(X/G) = chi(X) + 2 chi(fixed set)`` with the fixed set counted
    as isolated points plus surfaces of Euler number ``2 - 2 genus``.
    """
    _require_p3(dataset)
    chi_fixed = len(dataset.isolated) + sum(2 - 2 * sf.genus for sf in dataset.surfaces)
    return Fraction(dataset.manifold.euler + 2 * chi_fixed, 3)


def fixed_set_euler(dataset: FixedPointDataset) -> int:
    """Euler characteristic of the fixed set."""
    return len(dataset.isolated) + sum(2 - 2 * sf.genus for sf in dataset.surfaces)
