"""Command-line surface.

Subcommands: ``spin``, ``quotient``, ``kvector``, ``verdict``, ``enumerate``,
``prop41``, ``selftest``.  Exit codes: 0 for a completed evaluation
(a Contradiction outcome is a successful computation, not an error),
2 for invalid input, 3 for I/O failures.  Reports are byte-deterministic
for identical inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import rigidity
from .cyclo import CyclotomicNumber, cyclotomic_polynomial, half_angle_csc
from .dataset import (
    DatasetError,
    FixedPointDataset,
    ManifoldInvariants,
    fermat_quartic,
    parse_dataset,
)
from .lefschetz import (
    NonIntegralDefectError,
    euler_quotient_p3,
    k_vector,
    signature_quotient_p3,
    spin_index,
    spin_number_tuple,
)
from .repring import InstanceParameters, RepRingElement, solve_adams_kernel


def _emit(payload, fmt: str, render_text) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        render_text(payload)


def _load_dataset(path: str) -> FixedPointDataset:
    text = Path(path).read_text(encoding="utf-8")
    return parse_dataset(text)


def _spin_value_obj(value: CyclotomicNumber) -> dict:
    reduced = value.reduced()
    if reduced.is_rational():
        return {"rational": str(reduced.to_rational())}
    return rigidity.cyclotomic_dict(reduced)


# -- subcommand payload builders ------------------------------------------------


def _spin_payload(dataset: FixedPointDataset, power: int, bits: int) -> dict:
    spins = spin_number_tuple(dataset)
    if not 0 <= power <= dataset.p - 1:
        raise ValueError(f"power must lie in 0..{dataset.p - 1}")
    value = spins.values[power]
    cls = rigidity.classify_spin(value, bits) if value.is_real() else None
    return {
        "power": power,
        "spin": _spin_value_obj(value),
        "classification": rigidity.spin_class_dict(cls) if cls else None,
    }


def _quotient_payload(dataset: FixedPointDataset) -> dict:
    sigma_q = signature_quotient_p3(dataset)
    euler_q = euler_quotient_p3(dataset)
    integral = sigma_q.denominator == 1 and euler_q.denominator == 1
    return {
        "sigma": str(sigma_q),
        "euler": str(euler_q),
        "b_plus": dataset.quotient_b_plus,
        "b_minus": str(dataset.quotient_b_plus - sigma_q),
        "integral": integral,
    }


def _kvector_payload(dataset: FixedPointDataset) -> dict:
    try:
        kv = k_vector(spin_number_tuple(dataset))
        return {"k_vector": list(kv.k), "error": None}
    except NonIntegralDefectError as exc:
        return {"k_vector": None, "error": str(exc)}


def _verdict_payload(dataset: FixedPointDataset, bits: int) -> dict:
    return rigidity.verdict_report(rigidity.verdict(dataset, bits))


def _render_verdict_text(payload: dict) -> None:
    print(f"outcome: {payload['outcome']}")
    spin = payload["spin"]
    value = spin["value"] if spin["rational"] else f"irrational ({spin['estimate']})"
    print(f"spin number: {value} [{spin['sign']}]")
    if payload["k_vector"] is not None:
        print(f"defect vector: {tuple(payload['k_vector'])}")
    if payload["quotient"]:
        q = payload["quotient"]
        print(
            f"orbit space: signature {q['sigma']}, euler {q['euler']}, "
            f"b+ {q['b_plus']}, b- {q['b_minus']}, integral {q['integral']}"
        )
    if payload["prop41"]:
        p41 = payload["prop41"]
        print(
            f"vanishing check: kernel rank {p41['kernel_rank']}, "
            f"sw {p41['sw_value']}"
        )
    for r in payload["reasons"]:
        print(f"  reason [{r['anchor']}]: {r['detail']}")
    for r in payload["notes"]:
        print(f"  note [{r['anchor']}]: {r['detail']}")


# -- selftest -------------------------------------------------------------------


def _selftest_items() -> list[tuple[str, bool, str]]:
    items: list[tuple[str, bool, str]] = []

    def check(name: str, fn):
        try:
            ok, detail = fn()
        except Exception as exc:  # a crashed item is a failed item
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        items.append((name, ok, detail))

    fermat = fermat_quartic()

    def fermat_spin():
        v = spin_number_tuple(fermat).values[1]
        return v == 2, f"spin number {v.reduced().to_rational()}"

    def fermat_quotient():
        s, e = signature_quotient_p3(fermat), euler_quotient_p3(fermat)
        return (s, e) == (Fraction(-4), Fraction(12)), f"sigma {s}, euler {e}"

    def fermat_defects():
        kv = k_vector(spin_number_tuple(fermat))
        return kv.k == (2, 0, 0), f"defects {kv.k}"

    def fermat_verdict():
        v = rigidity.verdict(fermat)
        return v.outcome == rigidity.NO_OBSTRUCTION, v.outcome

    def spin_index_k3():
        v = spin_index(ManifoldInvariants.k3())
        return v == 2, f"index {v}"

    def enum_sets():
        k3 = ManifoldInvariants.k3()
        got = (
            rigidity.enumerate_pseudofree_p3(1, False, k3),
            rigidity.enumerate_pseudofree_p3(3, False, k3),
            rigidity.enumerate_pseudofree_p3(3, True, k3),
        )
        want = ([(0, 3)], [(0, 12), (3, 6), (6, 0)], [])
        return got == want, f"{got}"

    def adams_instance():
        params = InstanceParameters(p=3, m_vector=(2, 2, 2), n_vector=(2, 1, 1), l=1, d=0)
        rep = rigidity.verify_sw_vanishing(params)
        ok = (
            rep.kernel_rank == 1
            and rep.kernel_spanned_by_expected
            and rep.scalar_forced_zero
            and rep.sw_value == 0
        )
        return ok, rep.detail

    def unit_products():
        for p in (3, 5, 7):
            zp = CyclotomicNumber.zeta(p)
            prod = CyclotomicNumber.from_rational(1, p)
            for j in range(1, p):
                prod = prod * (1 + zp**j)
            if prod != 1:
                return False, f"product at order {p} is {prod}"
        return True, "product of (1 + zeta^j) is 1 for orders 3, 5, 7"

    def group_ring_absorption():
        sig = RepRingElement.sigma(3)
        t = RepRingElement.t(3)
        base = sig * (RepRingElement.one(3) - t)
        ok = all(
            sig * (RepRingElement.one(3) - t * RepRingElement.xi(3, k)) == base
            for k in range(3)
        )
        return ok, "sigma absorbs the group variable in 1 - t*xi^k"

    def csc_squared():
        v = (half_angle_csc(1, 3) ** 2).reduced()
        return v == Fraction(4, 3), f"csc^2(pi/3) = {v.to_rational()}"

    def cyclotomic_roots():
        for n in range(1, 61):
            if not cyclotomic_polynomial(n).evaluate(CyclotomicNumber.zeta(n)).is_zero():
                return False, f"Phi_{n} does not kill zeta_{n}"
        return True, "Phi_n(zeta_n) = 0 for n <= 60"

    check("fermat-spin-number", fermat_spin)
    check("fermat-quotient", fermat_quotient)
    check("fermat-defect-vector", fermat_defects)
    check("fermat-verdict", fermat_verdict)
    check("spin-index-k3", spin_index_k3)
    check("pseudofree-enumeration", enum_sets)
    check("adams-kernel-instance", adams_instance)
    check("unit-product-identity", unit_products)
    check("group-ring-absorption", group_ring_absorption)
    check("half-angle-csc-squared", csc_squared)
    check("cyclotomic-roots", cyclotomic_roots)
    return items


def _selftest_payload() -> dict:
    items = _selftest_items()
    return {
        "items": [
            {"name": name, "passed": ok, "detail": detail} for name, ok, detail in items
        ],
        "passed": all(ok for _, ok, _ in items),
    }


# -- argument parsing -----------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equispin",
        description=(
            "Exact equivariant index invariants for odd-prime cyclic actions "
            "on spin 4-manifolds"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_dataset_command(name, help_text, power=False):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("input", nargs="?", help="dataset JSON file")
        sp.add_argument("--batch", metavar="DIR", help="evaluate every *.json dataset in DIR")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--precision", type=int, default=80, metavar="BITS",
                        help="bits for advisory numeric estimates")
        if power:
            sp.add_argument("--power", type=int, default=1, metavar="J",
                            help="twist index (0 gives the untwisted index)")
        return sp

    add_dataset_command("spin", "spin number of a dataset at a chosen power", power=True)
    add_dataset_command("quotient", "orbit-space signature and Euler characteristic")
    add_dataset_command("kvector", "eigenspace-defect vector from the spin numbers")
    add_dataset_command("verdict", "full constraint pipeline with reason chain")

    en = sub.add_parser("enumerate", help="pseudofree point-type counts for order 3")
    en.add_argument("--p", type=int, default=3)
    en.add_argument("--quotient-b-plus", type=int, required=True, choices=(1, 3))
    en.add_argument("--trivial", action="store_true", help="restrict to homologically trivial actions")
    en.add_argument("--format", choices=("text", "json"), default="text")

    pr = sub.add_parser("prop41", help="Adams-kernel vanishing verification")
    pr.add_argument("input", nargs="?", help="dataset JSON file (parameters derived from its defects)")
    pr.add_argument("--m", help="comma-separated dimension vector, e.g. 2,2,2")
    pr.add_argument("--n", help="comma-separated dimension vector, e.g. 2,1,1")
    pr.add_argument("--l", type=int, default=1)
    pr.add_argument("--d", type=int, default=0)
    pr.add_argument("--q", type=int, default=2, help="Adams exponent for the kernel")
    pr.add_argument("--p", type=int, default=3)
    pr.add_argument("--format", choices=("text", "json"), default="text")

    st = sub.add_parser("selftest", help="reproduce the headline regression values")
    st.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def _iter_batch(directory: str):
    root = Path(directory)
    if not root.is_dir():
        raise FileNotFoundError(f"batch directory not found: {directory}")
    return sorted(root.glob("*.json"))


def _run_dataset_command(args, build_payload, render_text) -> int:
    if args.batch:
        results = []
        for path in _iter_batch(args.batch):
            try:
                dataset = _load_dataset(str(path))
                results.append({"file": path.name, "report": build_payload(dataset)})
            except (DatasetError, ValueError) as exc:
                results.append({"file": path.name, "error": str(exc)})
        payload = {"results": results}
        if args.format == "json":
            print(json.dumps(payload, sort_keys=True, indent=2))
        else:
            for entry in results:
                print(f"== {entry['file']}")
                if "error" in entry:
                    print(f"  error: {entry['error']}")
                else:
                    render_text(entry["report"])
        return 0
    if not args.input:
        print("error: an input file (or --batch) is required", file=sys.stderr)
        return 2
    dataset = _load_dataset(args.input)
    _emit(build_payload(dataset), args.format, render_text)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    try:
        if args.command == "spin":
            def render(p):
                print(f"power {p['power']}: {json.dumps(p['spin'], sort_keys=True)}")
                if p["classification"]:
                    print(f"classification: {json.dumps(p['classification'], sort_keys=True)}")
            return _run_dataset_command(
                args, lambda d: _spin_payload(d, args.power, args.precision), render
            )

        if args.command == "quotient":
            def render(p):
                print(
                    f"signature {p['sigma']}, euler {p['euler']}, b+ {p['b_plus']}, "
                    f"b- {p['b_minus']}, integral {p['integral']}"
                )
            return _run_dataset_command(args, lambda d: _quotient_payload(d), render)

        if args.command == "kvector":
            def render(p):
                if p["error"]:
                    print(f"inconsistent dataset: {p['error']}")
                else:
                    print(f"defect vector: {tuple(p['k_vector'])}")
            return _run_dataset_command(args, lambda d: _kvector_payload(d), render)

        if args.command == "verdict":
            return _run_dataset_command(
                args, lambda d: _verdict_payload(d, args.precision), _render_verdict_text
            )

        if args.command == "enumerate":
            if args.p != 3:
                print("error: enumeration is implemented for order 3 only", file=sys.stderr)
                return 2
            pairs = rigidity.enumerate_pseudofree_p3(
                args.quotient_b_plus, args.trivial, ManifoldInvariants.k3()
            )
            payload = {"pairs": [list(pair) for pair in pairs]}
            _emit(
                payload,
                args.format,
                lambda p: print(
                    "(f1, f2) pairs: " + (", ".join(map(str, map(tuple, p["pairs"]))) or "none")
                ),
            )
            return 0

        if args.command == "prop41":
            if args.m and args.n:
                m = tuple(int(x) for x in args.m.split(","))
                n = tuple(int(x) for x in args.n.split(","))
                params = InstanceParameters(p=args.p, m_vector=m, n_vector=n, l=args.l, d=args.d)
            elif args.input:
                dataset = _load_dataset(args.input)
                kv = k_vector(spin_number_tuple(dataset))
                l = (dataset.manifold.b_plus - 1) // 2
                params = rigidity.derive_instance(kv, l=l, d=args.d)
            else:
                print("error: give --m/--n vectors or a dataset file", file=sys.stderr)
                return 2
            rep = rigidity.verify_sw_vanishing(params, args.q)
            payload = {
                "hypotheses_met": rep.hypotheses_met,
                "kernel_rank": rep.kernel_rank,
                "kernel_contains_expected": rep.kernel_contains_expected,
                "kernel_spanned_by_expected": rep.kernel_spanned_by_expected,
                "scalar_forced_zero": rep.scalar_forced_zero,
                "sw_value": rep.sw_value,
                "detail": rep.detail,
            }
            _emit(payload, args.format, lambda p: print(p["detail"]))
            return 0

        if args.command == "selftest":
            payload = _selftest_payload()
            if args.format == "json":
                print(json.dumps(payload, sort_keys=True, indent=2))
            else:
                for item in payload["items"]:
                    status = "PASS" if item["passed"] else "FAIL"
                    print(f"{status} {item['name']} ({item['detail']})")
                print("all passed" if payload["passed"] else "FAILURES present")
            return 0

        raise AssertionError(f"unhandled command {args.command}")

    except (FileNotFoundError, IsADirectoryError, PermissionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (DatasetError, NonIntegralDefectError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
