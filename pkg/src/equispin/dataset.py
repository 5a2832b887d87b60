"""Data model and validation for candidate cyclic actions on spin 4-manifolds.

A dataset lists the ambient manifold's invariants together with the fixed
set of the action: isolated points carrying two rotation numbers and a spin
sign, and fixed surfaces carrying a self-intersection number, genus, one
rotation number and a spin sign.  Parsing is strict: unknown keys are
rejected and every violated invariant is reported by name.

The half-weight normalization at the bottom encodes rotation number and
spin sign jointly as residues mod ``2p``; the exact fixed-point formulas in
:mod:`equispin.lefschetz` consume that encoding.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .cyclo import is_odd_prime


class DatasetError(ValueError):
    """Raised on schema or invariant violations; carries all of them."""

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True)
class ManifoldInvariants:
    b1: int
    b_plus: int
    signature: int
    euler: int
    is_spin: bool

    @staticmethod
    def k3() -> "ManifoldInvariants":
        """The homotopy K3 preset: signature -16, Euler number 24, b_plus 3."""
        return ManifoldInvariants(b1=0, b_plus=3, signature=-16, euler=24, is_spin=True)

    @property
    def b_minus(self) -> int:
        return self.b_plus - self.signature

    @property
    def is_homotopy_k3(self) -> bool:
        return self == ManifoldInvariants.k3()

    def violations(self) -> list[str]:
        out = []
        if self.b1 != 0:
            out.append("b1 must be 0")
        if self.b_plus < 0:
            out.append("b_plus must be non-negative")
        if self.euler != 2 + 2 * self.b_plus - self.signature:
            out.append("euler characteristic inconsistent with b_plus and signature")
        if self.is_spin and self.signature % 16 != 0:
            out.append("signature of a spin manifold must be divisible by 16")
        return out


@dataclass(frozen=True)
class IsolatedPoint:
    l_alpha: int
    l_beta: int
    epsilon: int

    def violations(self, p: int) -> list[str]:
        out = []
        for name, l in (("l_alpha", self.l_alpha), ("l_beta", self.l_beta)):
            if l % p == 0:
                out.append(f"{name}: rotation number divisible by p")
            elif not 0 < l < p:
                out.append(f"{name}: rotation number out of range 1..p-1")
        if self.epsilon not in (1, -1):
            out.append("epsilon must be +1 or -1")
        return out


@dataclass(frozen=True)
class FixedSurface:
    self_intersection: int
    genus: int
    l_theta: int
    epsilon: int

    def violations(self, p: int, trivial_k3: bool) -> list[str]:
        out = []
        if self.l_theta % p == 0:
            out.append("l_theta: rotation number divisible by p")
        elif not 0 < self.l_theta < p:
            out.append("l_theta: rotation number out of range 1..p-1")
        if self.genus < 0:
            out.append("genus must be non-negative")
        if self.epsilon not in (1, -1):
            out.append("epsilon must be +1 or -1")
        if trivial_k3:
            if self.genus != 0:
                out.append("fixed surface of a homologically trivial action must be a sphere")
            if self.self_intersection > 0:
                out.append(
                    "fixed surface of a homologically trivial action must have "
                    "non-positive self-intersection"
                )
        return out


@dataclass(frozen=True)
class FixedPointDataset:
    p: int
    manifold: ManifoldInvariants
    quotient_b_plus: int
    homologically_trivial: bool
    isolated: tuple[IsolatedPoint, ...] = ()
    surfaces: tuple[FixedSurface, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "isolated", tuple(self.isolated))
        object.__setattr__(self, "surfaces", tuple(self.surfaces))

    def violations(self) -> list[str]:
        out = []
        if not is_odd_prime(self.p):
            out.append("p must be an odd prime")
            return out
        out.extend(self.manifold.violations())
        qb = self.quotient_b_plus
        if not (0 <= qb <= self.manifold.b_plus) or (self.manifold.b_plus - qb) % 2 != 0:
            out.append(
                "quotient b_plus must lie in 0..b_plus with the same parity as b_plus"
            )
        if self.homologically_trivial and qb != self.manifold.b_plus:
            out.append("homologically trivial action requires quotient_b_plus equal to b_plus")
        trivial_k3 = self.homologically_trivial and self.manifold.is_homotopy_k3
        for idx, pt in enumerate(self.isolated):
            out.extend(f"isolated[{idx}]: {v}" for v in pt.violations(self.p))
        for idx, sf in enumerate(self.surfaces):
            out.extend(f"surfaces[{idx}]: {v}" for v in sf.violations(self.p, trivial_k3))
        return out


_TOP_KEYS = {"p", "manifold", "quotient_b_plus", "homologically_trivial", "isolated", "surfaces"}
_MANIFOLD_KEYS = {"b1", "b_plus", "signature", "euler", "is_spin"}
_POINT_KEYS = {"l_alpha", "l_beta", "epsilon"}
_SURFACE_KEYS = {"self_intersection", "genus", "l_theta", "epsilon"}


def _require_int(obj, name: str, errors: list[str]) -> int:
    # bool is an int subclass; reject it explicitly
    if type(obj) is not int:
        errors.append(f"{name} must be an integer")
        return 0
    return obj


def _require_bool(obj, name: str, errors: list[str]) -> bool:
    if type(obj) is not bool:
        errors.append(f"{name} must be a boolean")
        return False
    return obj


def parse_dataset(document) -> FixedPointDataset:
    """Parse and validate a dataset from JSON text, bytes, or a dict.

    Raises :class:`DatasetError` carrying every schema and invariant
    violation found, each named individually.
    """
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise DatasetError([f"invalid JSON: {exc}"]) from exc
    if not isinstance(document, dict):
        raise DatasetError(["document must be a JSON object"])

    errors: list[str] = []
    unknown = set(document) - _TOP_KEYS
    if unknown:
        errors.append(f"unknown keys: {sorted(unknown)}")
    for key in ("p", "manifold", "quotient_b_plus", "homologically_trivial"):
        if key not in document:
            errors.append(f"missing key: {key}")
    if errors:
        raise DatasetError(errors)

    p = _require_int(document["p"], "p", errors)
    qb = _require_int(document["quotient_b_plus"], "quotient_b_plus", errors)
    trivial = _require_bool(document["homologically_trivial"], "homologically_trivial", errors)

    man_doc = document["manifold"]
    if not isinstance(man_doc, dict):
        errors.append("manifold must be an object")
        raise DatasetError(errors)
    unknown = set(man_doc) - _MANIFOLD_KEYS
    if unknown:
        errors.append(f"manifold: unknown keys: {sorted(unknown)}")
    missing = _MANIFOLD_KEYS - set(man_doc)
    if missing:
        errors.append(f"manifold: missing keys: {sorted(missing)}")
    if errors:
        raise DatasetError(errors)
    manifold = ManifoldInvariants(
        b1=_require_int(man_doc["b1"], "manifold.b1", errors),
        b_plus=_require_int(man_doc["b_plus"], "manifold.b_plus", errors),
        signature=_require_int(man_doc["signature"], "manifold.signature", errors),
        euler=_require_int(man_doc["euler"], "manifold.euler", errors),
        is_spin=_require_bool(man_doc["is_spin"], "manifold.is_spin", errors),
    )

    points = []
    for idx, item in enumerate(document.get("isolated", [])):
        if not isinstance(item, dict):
            errors.append(f"isolated[{idx}] must be an object")
            continue
        unknown = set(item) - _POINT_KEYS
        missing = _POINT_KEYS - set(item)
        if unknown:
            errors.append(f"isolated[{idx}]: unknown keys: {sorted(unknown)}")
        if missing:
            errors.append(f"isolated[{idx}]: missing keys: {sorted(missing)}")
        if unknown or missing:
            continue
        points.append(
            IsolatedPoint(
                l_alpha=_require_int(item["l_alpha"], f"isolated[{idx}].l_alpha", errors),
                l_beta=_require_int(item["l_beta"], f"isolated[{idx}].l_beta", errors),
                epsilon=_require_int(item["epsilon"], f"isolated[{idx}].epsilon", errors),
            )
        )

    surfaces = []
    for idx, item in enumerate(document.get("surfaces", [])):
        if not isinstance(item, dict):
            errors.append(f"surfaces[{idx}] must be an object")
            continue
        unknown = set(item) - _SURFACE_KEYS
        missing = _SURFACE_KEYS - set(item)
        if unknown:
            errors.append(f"surfaces[{idx}]: unknown keys: {sorted(unknown)}")
        if missing:
            errors.append(f"surfaces[{idx}]: missing keys: {sorted(missing)}")
        if unknown or missing:
            continue
        surfaces.append(
            FixedSurface(
                self_intersection=_require_int(
                    item["self_intersection"], f"surfaces[{idx}].self_intersection", errors
                ),
                genus=_require_int(item["genus"], f"surfaces[{idx}].genus", errors),
                l_theta=_require_int(item["l_theta"], f"surfaces[{idx}].l_theta", errors),
                epsilon=_require_int(item["epsilon"], f"surfaces[{idx}].epsilon", errors),
            )
        )

    if errors:
        raise DatasetError(errors)

    dataset = FixedPointDataset(
        p=p,
        manifold=manifold,
        quotient_b_plus=qb,
        homologically_trivial=trivial,
        isolated=tuple(points),
        surfaces=tuple(surfaces),
    )
    errors = dataset.violations()
    if errors:
        raise DatasetError(errors)
    return dataset


def serialize_dataset(dataset: FixedPointDataset) -> dict:
    """Canonical plain-dict form (inverse of :func:`parse_dataset`)."""
    return {
        "p": dataset.p,
        "manifold": {
            "b1": dataset.manifold.b1,
            "b_plus": dataset.manifold.b_plus,
            "signature": dataset.manifold.signature,
            "euler": dataset.manifold.euler,
            "is_spin": dataset.manifold.is_spin,
        },
        "quotient_b_plus": dataset.quotient_b_plus,
        "homologically_trivial": dataset.homologically_trivial,
        "isolated": [
            {"l_alpha": pt.l_alpha, "l_beta": pt.l_beta, "epsilon": pt.epsilon}
            for pt in dataset.isolated
        ],
        "surfaces": [
            {
                "self_intersection": sf.self_intersection,
                "genus": sf.genus,
                "l_theta": sf.l_theta,
                "epsilon": sf.epsilon,
            }
            for sf in dataset.surfaces
        ],
    }


def to_json(dataset: FixedPointDataset) -> str:
    """Byte-deterministic JSON text for a dataset."""
    return json.dumps(serialize_dataset(dataset), sort_keys=True, separators=(",", ":"))


def canonical_json(document) -> str:
    """Canonical JSON text of a raw document (used by the round-trip checks)."""
    if isinstance(document, (str, bytes)):
        document = json.loads(document)
    doc = dict(document)
    doc.setdefault("isolated", [])
    doc.setdefault("surfaces", [])
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def fermat_quartic() -> FixedPointDataset:
    """The degree-4 hypersurface example: six isolated points, no surfaces.

    The cyclic 3-group permutes three coordinates; all six fixed points have
    rotation type (1, 2) with spin sign -1, and the action is nontrivial on
    middle cohomology.
    """
    return FixedPointDataset(
        p=3,
        manifold=ManifoldInvariants.k3(),
        quotient_b_plus=3,
        homologically_trivial=False,
        isolated=tuple(IsolatedPoint(1, 2, -1) for _ in range(6)),
        surfaces=(),
    )


# -- half-weight normalization ------------------------------------------------


@dataclass(frozen=True)
class HalfWeightPoint:
    """Rotation numbers and spin sign of an isolated point, jointly mod 2p."""

    a: int
    b: int


@dataclass(frozen=True)
class HalfWeightSurface:
    """Rotation number and spin sign of a fixed surface, jointly mod 2p."""

    c: int
    self_intersection: int
    genus: int


def normalize_half_weights(
    dataset: FixedPointDataset,
) -> tuple[tuple[HalfWeightPoint, ...], tuple[HalfWeightSurface, ...]]:
    """Encode every fixed component as residues mod ``2p``.

    Points: sign -1 keeps the raw rotation pair, sign +1 shifts the first
    rotation number by p.  Surfaces: sign +1 keeps the raw rotation number,
    sign -1 shifts it by p.  The residues stay nonzero mod p.
    """
    p = dataset.p
    points = tuple(
        HalfWeightPoint(pt.l_alpha + (p if pt.epsilon == 1 else 0), pt.l_beta)
        for pt in dataset.isolated
    )
    surfaces = tuple(
        HalfWeightSurface(
            sf.l_theta + (p if sf.epsilon == -1 else 0), sf.self_intersection, sf.genus
        )
        for sf in dataset.surfaces
    )
    return points, surfaces


def count_p3_types(dataset: FixedPointDataset) -> tuple[int, int]:
    """Counts ``(f1, f2)`` of the two isolated-point types when ``p == 3``.

    Types are taken up to order and simultaneous sign, which leaves the
    product of the two rotation numbers mod 3 as a complete invariant:
    product 2 is the (1, 2) type, product 1 the (1, 1) type.
    """
    if dataset.p != 3:
        raise ValueError("type counting is specific to order 3")
    f1 = f2 = 0
    for pt in dataset.isolated:
        if (pt.l_alpha * pt.l_beta) % 3 == 2:
            f1 += 1
        else:
            f2 += 1
    return f1, f2
