"""The representation ring of the circle times an odd-prime cyclic group.

Elements are Laurent polynomials in the circle variable ``t`` over the group
ring ``Z[xi]/(xi^p - 1)``, stored sparsely as ``{(t-exponent, xi-exponent):
coefficient}``.  The group ring is deliberately *not* collapsed to the
cyclotomic field: the sum ``sigma = 1 + xi + ... + xi^(p-1)`` is a zero
divisor here, and the quotient-ring structure below depends on it.

The module provides truncated quotient rings, Adams operations, the integer
kernel of the Adams constraint, the closed-form fixed-element trace values,
and extraction of the Seiberg-Witten integer from a reduced element.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclo import CyclotomicNumber, is_odd_prime
from .intlinalg import integer_kernel


class RepRingElement:
    """Sparse exact element of ``Z[t, t^-1][xi]/(xi^p - 1)``.

    Immutable; ``xi`` exponents are reduced mod ``p`` and zero coefficients
    are dropped, so equality is a dictionary comparison.
    """

    __slots__ = ("p", "_c")

    def __init__(self, p: int, coeffs=None):
        if not is_odd_prime(p):
            raise ValueError("group order must be an odd prime")
        canon: dict[tuple[int, int], int] = {}
        if coeffs:
            for (i, j), c in dict(coeffs).items():
                c = int(c)
                if c == 0:
                    continue
                key = (int(i), int(j) % p)
                canon[key] = canon.get(key, 0) + c
                if canon[key] == 0:
                    del canon[key]
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "_c", canon)

    def __setattr__(self, name, value):
        raise AttributeError("RepRingElement is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "RepRingElement":
        return cls(p)

    @classmethod
    def one(cls, p: int) -> "RepRingElement":
        return cls(p, {(0, 0): 1})

    @classmethod
    def monomial(cls, p: int, t_exp: int = 0, xi_exp: int = 0, coeff: int = 1) -> "RepRingElement":
        return cls(p, {(t_exp, xi_exp): coeff})

    @classmethod
    def t(cls, p: int) -> "RepRingElement":
        return cls.monomial(p, t_exp=1)

    @classmethod
    def xi(cls, p: int, power: int = 1) -> "RepRingElement":
        return cls.monomial(p, xi_exp=power)

    @classmethod
    def sigma(cls, p: int) -> "RepRingElement":
        """The full group-ring sum ``1 + xi + ... + xi^(p-1)``."""
        return cls(p, {(0, j): 1 for j in range(p)})

    # -- inspection ---------------------------------------------------

    def terms(self):
        """Terms ``((i, j), c)`` in deterministic (t, xi) order."""
        return sorted(self._c.items())

    def coefficient(self, t_exp: int, xi_exp: int) -> int:
        return self._c.get((t_exp, xi_exp % self.p), 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def t_degree(self) -> int:
        """Largest t-exponent with a nonzero coefficient (-1 when zero)."""
        return max((i for i, _ in self._c), default=-1)

    def t_valuation(self) -> int:
        """Smallest t-exponent with a nonzero coefficient (0 when zero)."""
        return min((i for i, _ in self._c), default=0)

    def support_is_group_constant(self) -> bool:
        """True when no genuine ``xi`` powers appear."""
        return all(j == 0 for _, j in self._c)

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RepRingElement):
            if other.p != self.p:
                raise ValueError("group order mismatch")
            return other
        if isinstance(other, int):
            return RepRingElement(self.p, {(0, 0): other})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._c)
        for k, c in other._c.items():
            out[k] = out.get(k, 0) + c
        return RepRingElement(self.p, out)

    __radd__ = __add__

    def __neg__(self):
        return RepRingElement(self.p, {k: -c for k, c in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.p
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._c.items():
            for (i2, j2), c2 in other._c.items():
                key = (i1 + i2, (j1 + j2) % p)
                out[key] = out.get(key, 0) + c1 * c2
        return RepRingElement(p, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined in the group ring")
        result = RepRingElement.one(self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self._c == ({(0, 0): other} if other else {})
        if not isinstance(other, RepRingElement):
            return NotImplemented
        return self.p == other.p and self._c == other._c

    # -- structure maps ---------------------------------------------------

    def adams(self, q: int) -> "RepRingElement":
        """The ring endomorphism ``t -> t^q``, ``xi -> xi^q``."""
        if q < 1:
            raise ValueError("Adams operations are indexed by positive integers")
        out: dict[tuple[int, int], int] = {}
        # distinct monomials can collide (xi^q wraps around), so accumulate
        for (i, j), c in self._c.items():
            key = (i * q, (j * q) % self.p)
            out[key] = out.get(key, 0) + c
        return RepRingElement(self.p, out)

    def specialize_xi_one(self) -> "RepRingElement":
        """Collapse the group variable: ``xi -> 1``."""
        out: dict[tuple[int, int], int] = {}
        for (i, _), c in self._c.items():
            key = (i, 0)
            out[key] = out.get(key, 0) + c
        return RepRingElement(self.p, out)

    def __repr__(self):
        if self.is_zero():
            return f"RepRingElement({self.p}, 0)"
        bits = []
        for (i, j), c in self.terms():
            term = str(c)
            if i:
                term += f"*t^{i}"
            if j:
                term += f"*x^{j}"
            bits.append(term)
        return f"RepRingElement({self.p}, {' + '.join(bits)})"


def adams(q: int, element: RepRingElement) -> RepRingElement:
    """Module-level spelling of :meth:`RepRingElement.adams`."""
    return element.adams(q)


def one_minus_t_xi(p: int, i: int) -> RepRingElement:
    """The factor ``1 - t*xi^i``."""
    return RepRingElement(p, {(0, 0): 1, (1, i % p): -1})


@dataclass(frozen=True)
class TruncationIdeal:
    """The principal ideal generated by ``prod_i (1 - t*xi^i)^(m_i)``.

    The generator's top t-coefficient is ``(-1)^M * xi^s``, a unit of the
    group ring, so division yields a unique normal form of t-degree below
    ``M = sum(m_i)``.
    """

    p: int
    m_vector: tuple[int, ...]

    def __post_init__(self):
        if not is_odd_prime(self.p):
            raise ValueError("group order must be an odd prime")
        object.__setattr__(self, "m_vector", tuple(int(m) for m in self.m_vector))
        if len(self.m_vector) != self.p:
            raise ValueError("exponent vector must have one entry per group element")
        if any(m < 0 for m in self.m_vector):
            raise ValueError("exponents must be non-negative")

    @property
    def total(self) -> int:
        return sum(self.m_vector)

    @property
    def generator(self) -> RepRingElement:
        return _ideal_generator(self.p, self.m_vector)


@functools.lru_cache(maxsize=None)
def _ideal_generator(p: int, m_vector: tuple[int, ...]) -> RepRingElement:
    gen = RepRingElement.one(p)
    for i, m in enumerate(m_vector):
        if m:
            gen = gen * one_minus_t_xi(p, i) ** m
    return gen


def normal_form(element: RepRingElement, ideal: TruncationIdeal) -> RepRingElement:
    """The unique representative of t-degree below ``sum(m_i)``.

    Negative t-powers are first rewritten with ``t^-1 = (1 - generator)/t``,
    which holds modulo the ideal because the generator has constant term 1.
    """
    if element.p != ideal.p:
        raise ValueError("group order mismatch")
    total = ideal.total
    if total == 0:
        return RepRingElement.zero(element.p)
    gen = ideal.generator

    if element.t_valuation() < 0:
        element = _clear_negative_powers(element, gen)

    p = element.p
    top = gen.t_degree()
    lead_terms = [(j, c) for (i, j), c in gen._c.items() if i == top]
    assert len(lead_terms) == 1, "generator leading coefficient must be a monomial"
    lead_j, lead_c = lead_terms[0]
    assert lead_c in (1, -1)

    work = dict(element._c)
    while True:
        deg = max((i for i, _ in work), default=-1)
        if deg < total:
            break
        # cancel the whole top layer in one multiple of the generator
        layer = [(j, c) for (i, j), c in work.items() if i == deg]
        mult = RepRingElement(
            p, {(deg - top, (j - lead_j) % p): c * lead_c for j, c in layer}
        )
        reduced = RepRingElement(p, work) - mult * gen
        work = dict(reduced._c)
    return RepRingElement(p, work)


def _clear_negative_powers(element: RepRingElement, gen: RepRingElement) -> RepRingElement:
    p = element.p
    # h = (1 - gen)/t, exact since gen has constant term 1
    diff = RepRingElement.one(p) - gen
    assert all(i >= 1 for i, _ in diff._c)
    h = RepRingElement(p, {(i - 1, j): c for (i, j), c in diff._c.items()})
    out = RepRingElement.zero(p)
    for (i, j), c in element.terms():
        term = RepRingElement.monomial(p, max(i, 0), j, c)
        if i < 0:
            term = RepRingElement.monomial(p, 0, j, c) * h ** (-i)
        out = out + term
    return out


@dataclass(frozen=True)
class InstanceParameters:
    """Dimension data for one run of the Adams-constraint machinery.

    ``m_vector`` and ``n_vector`` are the eigenspace dimensions of the two
    approximation spaces, ``l`` is half of ``b_plus - 1``, and ``d`` is the
    virtual dimension of the moduli space.  The bookkeeping identity
    ``l + sum(n) = sum(m) - 1 - d`` ties them together; the eigenspace
    defects are ``k_i = m_i - n_i``.
    """

    p: int
    m_vector: tuple[int, ...]
    n_vector: tuple[int, ...]
    l: int
    d: int = 0
    t_vector: tuple[int, ...] | None = None

    def __post_init__(self):
        if not is_odd_prime(self.p):
            raise ValueError("group order must be an odd prime")
        object.__setattr__(self, "m_vector", tuple(int(m) for m in self.m_vector))
        object.__setattr__(self, "n_vector", tuple(int(n) for n in self.n_vector))
        if len(self.m_vector) != self.p or len(self.n_vector) != self.p:
            raise ValueError("dimension vectors must have one entry per group element")
        if any(m < 0 for m in self.m_vector) or any(n < 0 for n in self.n_vector):
            raise ValueError("dimensions must be non-negative")
        if self.l < 0:
            raise ValueError("l must be non-negative")
        if self.l + sum(self.n_vector) != sum(self.m_vector) - 1 - self.d:
            raise ValueError(
                "parameter bookkeeping violated: l + sum(n) must equal sum(m) - 1 - d"
            )
        if self.m_vector[0] < self.d:
            raise ValueError("m_0 must be at least the virtual dimension")
        if self.t_vector is None:
            t_vec = (2 * self.l + 1,) + (0,) * (self.p - 1)
            object.__setattr__(self, "t_vector", t_vec)
        else:
            t_vec = tuple(int(t) for t in self.t_vector)
            if len(t_vec) != self.p or sum(t_vec) != 2 * self.l + 1:
                raise ValueError("t_vector must sum to b_plus = 2l + 1")
            object.__setattr__(self, "t_vector", t_vec)

    @property
    def k_vector(self) -> tuple[int, ...]:
        return tuple(m - n for m, n in zip(self.m_vector, self.n_vector))

    def truncation(self) -> TruncationIdeal:
        """Quotient ideal; for nonzero virtual dimension the first exponent drops by d."""
        m_eff = (self.m_vector[0] - self.d,) + self.m_vector[1:]
        return TruncationIdeal(self.p, m_eff)


def adams_multiplier(params: InstanceParameters, q: int) -> RepRingElement:
    """The product ``prod_i (1 + t xi^i + ... + t^(q-1) xi^(i(q-1)))^(n_i)``."""
    p = params.p
    out = RepRingElement.one(p)
    for i, n in enumerate(params.n_vector):
        if n:
            factor = RepRingElement(p, {(r, (i * r) % p): 1 for r in range(q)})
            out = out * factor ** n
    return out


def adams_constraint_residual(
    beta: RepRingElement,
    params: InstanceParameters,
    q: int,
    multiplier: RepRingElement | None = None,
) -> RepRingElement:
    """``psi^q(beta) - q^l * beta * multiplier`` reduced to normal form.

    A class realised by an actual equivariant map satisfies this identity,
    i.e. has residual zero, for every ``q >= 1``.
    """
    if multiplier is None:
        multiplier = adams_multiplier(params, q)
    ideal = params.truncation()
    return normal_form(beta.adams(q) - (q ** params.l) * beta * multiplier, ideal)


def solve_adams_kernel(params: InstanceParameters, q=2) -> list[RepRingElement]:
    """Integral basis of the kernel of the Adams constraint.

    ``q`` may be a single exponent or a sequence; with several exponents the
    constraint matrices are stacked, computing the intersection of the
    kernels.  The basis spans the full kernel lattice (saturated) and is
    returned in a deterministic order.
    """
    qs = (q,) if isinstance(q, int) else tuple(q)
    if not qs or any(x < 1 for x in qs):
        raise ValueError("Adams exponents must be positive integers")
    p = params.p
    total = params.truncation().total
    basis_monomials = [(i, j) for i in range(total) for j in range(p)]
    index = {mon: r for r, mon in enumerate(basis_monomials)}
    dim = len(basis_monomials)

    columns: list[list[int]] = []
    multipliers = {x: adams_multiplier(params, x) for x in qs}
    for mon in basis_monomials:
        beta = RepRingElement.monomial(p, *mon)
        col: list[int] = []
        for x in qs:
            residual = adams_constraint_residual(beta, params, x, multipliers[x])
            coords = [0] * dim
            for (i, j), c in residual._c.items():
                coords[index[(i, j)]] = c
            col.extend(coords)
        columns.append(col)

    rows = [[columns[c][r] for c in range(dim)] for r in range(dim * len(qs))]
    kernel = integer_kernel(rows)
    return [
        RepRingElement(p, {basis_monomials[r]: v for r, v in enumerate(vec) if v})
        for vec in kernel
    ]


# -- closed-form trace values ------------------------------------------------


def schedule_sequential(i: int, j: int, p: int) -> int:
    """Exponent table running ``2j, 3j, ...`` with the final factor at ``-2j``."""
    if i == p - 1:
        return p - 2 * j
    return (i + 1) * j


def schedule_doubled(i: int, j: int, p: int) -> int:
    """Exponent table ``2ij`` throughout; agrees with the sequential one for p = 3."""
    return 2 * i * j


def tom_dieck_rhs(
    t_vector,
    k_vector,
    j: int,
    p: int,
    schedule=schedule_sequential,
) -> CyclotomicNumber:
    """Closed-form trace of the fixed-element character at the j-th twist.

    Evaluates, with ``nu`` a primitive p-th root of unity,

        ``2^(t0 - k0) * prod_i (1 + nu^(i j))^(t_i)
                       * prod_i (1 + nu^(schedule(i, j, p)))^(-k_i)``

    which bakes in the trace values ``-1`` and ``0`` of the two basic
    representations at the flat element.  The exponent table for the second
    product is configurable because the two natural readings disagree for
    ``p >= 5`` (they coincide for ``p = 3`` and always have the same product
    over all twists).  No pole can occur: ``1 + nu^e`` never vanishes for odd
    ``p``.
    """
    t_vector = tuple(t_vector)
    k_vector = tuple(k_vector)
    if len(t_vector) != p or len(k_vector) != p:
        raise ValueError("t and k vectors must have one entry per group element")
    if not 1 <= j <= p - 1:
        raise ValueError("twist index must lie in 1..p-1")
    nu = CyclotomicNumber.zeta(p)
    two = Fraction(2) ** (t_vector[0] - k_vector[0])
    value = CyclotomicNumber.from_rational(two, p)
    for i in range(1, p):
        if t_vector[i]:
            value = value * (1 + nu ** ((i * j) % p)) ** t_vector[i]
        if k_vector[i]:
            e = schedule(i, j, p) % p
            value = value * (1 + nu ** e) ** (-k_vector[i])
    return value


def tom_dieck_product(t_vector, k_vector, p: int, schedule=schedule_sequential) -> CyclotomicNumber:
    """Product of the trace values over all twists ``j = 1 .. p-1``."""
    out = CyclotomicNumber.from_rational(1, p)
    for j in range(1, p):
        out = out * tom_dieck_rhs(t_vector, k_vector, j, p, schedule)
    return out


def parity_obstruction(t_vector, k_vector, p: int) -> bool:
    """True when the trace product is incompatible with an integral character.

    The product over all twists must be ``2^(p-1)`` times an algebraic
    integer of the p-th cyclotomic field; its coordinates in the power basis
    are then integers.  A defect ``k_0 >= 3`` (with ``t_0 = 3``) drives the
    2-adic valuation negative and the check fails, which is exactly the
    mod-2 contradiction behind the defect bound.
    """
    prod = tom_dieck_product(t_vector, k_vector, p)
    scaled = prod * Fraction(1, 2 ** (p - 1))
    return any(c.denominator != 1 for c in scaled.coeffs)


def extract_sw(beta: RepRingElement, m: int, d: int) -> int:
    """Coefficient of ``T^(m-d-1)`` (``T = 1 - t``): the invariant up to sign.

    ``beta`` must have the group variable already specialized away and be
    reduced modulo ``T^(m-d)``.  Support below degree ``m - d - 1`` in ``T``
    means the element is not of the mandated form and raises.
    """
    if not beta.support_is_group_constant():
        raise ValueError("specialize the group variable to 1 first")
    top = m - d - 1
    if top < 0:
        raise ValueError("truncation order must be positive")
    if beta.t_valuation() < 0 or beta.t_degree() >= m - d:
        raise ValueError("element is not reduced modulo T^(m-d)")
    poly = {i: c for (i, _), c in beta._c.items()}
    coeff_at = lambda r: sum(
        c * math.comb(i, r) * (-1) ** r for i, c in poly.items() if i >= r
    )
    for r in range(top):
        if coeff_at(r) != 0:
            raise ValueError(
                "element has support below the top truncation degree; "
                "not a multiple of T^(m-d-1)"
            )
    return coeff_at(top)
