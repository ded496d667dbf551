"""Command-line front end.

Subcommands:

* ``verify SUITE`` -- run a verification suite, print one status line per
  check, optionally write the JSON report; exit 0 iff nothing failed.
* ``tc FILE`` -- enumerate cosets for a presentation file (``--table`` dumps
  the coset table; bound overruns are reported, not raised).
* ``pf`` -- one full report for a pseudo-fermion parameter point, or a sweep
  over a JSON array of parameter points.
* ``act`` -- the sphere-action suite at a chosen sample size.
* ``product`` -- direct/fiber/central products of the bundled groups.
* ``dump-data`` -- write the bundled presentation files to a directory.

Exit codes: 0 all passed, 1 at least one FAIL, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, pseudofermions as pf, reports as rp
from .coset_enumeration import todd_coxeter
from .groups import (
    NotSurjective,
    central_product_quotient,
    direct_product,
    fiber_product,
    is_isomorphic,
)
from .presentations import (
    BUNDLED_PRESENTATIONS,
    PresentationFormatError,
    bundled_presentation_text,
    load_presentation,
)

USAGE_ERROR = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paulikit",
        description="Verification toolkit for the 16-element group generated "
        "by the three standard 2x2 involution matrices and its "
        "pseudo-fermion realization.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument(
        "suite", choices=list(rp.SUITE_NAMES) + ["all"], help="suite to run"
    )
    p_verify.add_argument("--tol", type=float, default=1e-10)
    p_verify.add_argument("--coset-bound", type=int, default=10_000)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--samples", type=int, default=1000,
                          help="sphere sample count")
    p_verify.add_argument("--json", metavar="PATH", default=None)

    p_tc = sub.add_parser("tc", help="coset enumeration for a presentation file")
    p_tc.add_argument("file")
    p_tc.add_argument("--coset-bound", type=int, default=10_000)
    p_tc.add_argument("--subgroup", metavar="WORD", action="append", default=[],
                      help="subgroup generator word, e.g. 'u^2 y'; repeatable")
    p_tc.add_argument("--table", action="store_true",
                      help="dump the coset table on completion")
    p_tc.add_argument("--json", metavar="PATH", default=None)
    p_tc.add_argument("--group-json", metavar="PATH", default=None,
                      help="write the realized group (labels + Cayley table) "
                      "as JSON; needs completion with the trivial subgroup")

    p_pf = sub.add_parser("pf", help="pseudo-fermion model report")
    p_pf.add_argument("--omega", type=float, help="|omega| > 0")
    p_pf.add_argument("--theta", type=float, default=0.0)
    p_pf.add_argument("--delta", type=float, default=0.0)
    p_pf.add_argument("--alpha", type=float, default=0.0)
    p_pf.add_argument("--tol", type=float, default=1e-12)
    p_pf.add_argument("--sweep", metavar="PATH", default=None,
                      help="JSON array of {omega_abs, theta, delta, alpha}")
    p_pf.add_argument("--json", metavar="PATH", default=None)

    p_act = sub.add_parser("act", help="sphere-action suite")
    p_act.add_argument("--samples", type=int, default=1000)
    p_act.add_argument("--seed", type=int, default=0)
    p_act.add_argument("--json", metavar="PATH", default=None)

    p_prod = sub.add_parser("product", help="product constructions on bundled groups")
    p_prod.add_argument("kind", choices=["direct", "central", "fiber"])
    p_prod.add_argument("left", nargs="?", default="q8",
                        help=f"one of {sorted(catalog.ZOO_BUILDERS)}")
    p_prod.add_argument("right", nargs="?", default="z4")
    p_prod.add_argument("--json", metavar="PATH", default=None,
                        help="write the resulting group as JSON")

    p_dump = sub.add_parser("dump-data", help="write bundled presentation files")
    p_dump.add_argument("--outdir", default=".")
    return parser


def _maybe_write(path, payload):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")


def _cmd_verify(args) -> int:
    reports = rp.run_suite(
        args.suite,
        tol=args.tol,
        coset_bound=args.coset_bound,
        seed=args.seed,
        samples=args.samples,
    )
    for r in reports:
        print(f"{r.status:14s} {r.check_id}")
    envelope = rp.report_envelope(
        args.suite,
        reports,
        tol=args.tol,
        coset_bound=args.coset_bound,
        seed=args.seed,
        samples=args.samples,
    )
    if args.json:
        rp.write_report_json(args.json, envelope)
    code = rp.exit_code(reports)
    counts = {}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    print("summary:", ", ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    return code


def _cmd_tc(args) -> int:
    from .presentations import Word

    try:
        pres = load_presentation(args.file)
        subgroup = [Word.from_text(w) for w in args.subgroup]
    except (PresentationFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    table = todd_coxeter(pres, subgroup_generators=subgroup,
                         coset_bound=args.coset_bound)
    print(f"presentation: {pres}")
    if table.complete:
        print(f"status: {table.status}")
        print(f"cosets: {table.coset_count}")
    else:
        print(f"status: {table.status} (bound {args.coset_bound})")
        print(f"live cosets at stop: {table.coset_count}")
    if args.table and table.complete:
        header = []
        for g in pres.generators:
            header.extend([g, f"{g}^-1"])
        print("coset | " + "  ".join(f"{h:>6s}" for h in header))
        for i, row in enumerate(table.rows):
            print(f"{i:5d} | " + "  ".join(f"{e:6d}" for e in row))
    _maybe_write(args.json, {
        "presentation": str(pres),
        "status": table.status,
        "cosets": table.coset_count,
        "rows": [list(r) for r in table.rows] if table.complete else None,
    })
    if args.group_json:
        from .coset_enumeration import Incomplete, group_from_coset_table

        try:
            group = group_from_coset_table(table)
        except Incomplete as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        _maybe_write(args.group_json, group.to_dict())
        print(f"wrote realized group to {args.group_json}")
    return 0


def _mat_payload(m) -> list:
    return [[[e.real, e.imag] for e in row] for row in m.rows()]


def _pf_point_report(params: pf.PFParams, alpha: float, tol: float) -> dict:
    pair = pf.build_pf(params, tol)
    relations = pf.verify_pf_relations(pair, tol)
    triple = pf.verify_pauli_triple(pf.mu_operators(pair), tol)
    rho = pf.verify_pauli_triple(pf.rho_operators(pair), tol)
    ham = pf.hamiltonian(params, tol)
    real = pf.pauli_group_realization(params)
    com = pf.constants_of_motion(params, alpha, tol)
    es = pf.eigensystem(pair, tol)
    metric = pf.metric_operators(es, tol)
    passed = (
        relations["passed"]
        and triple["passed"]
        and rho["passed"]
        and ham["passed"]
        and real.isomorphic_to_matrix_group
        and real.group.order == 16
        and com["passed"]
        and metric["passed"]
    )
    return {
        "parameters": {
            "omega_abs": params.omega_abs,
            "theta": params.theta,
            "delta": params.delta,
            "alpha": alpha,
            "omega_cap": params.omega_cap,
            "tol": tol,
        },
        "status": "PASS" if passed else "FAIL",
        "relations": relations,
        "mu_triple": triple["residuals"],
        "rho_triple": rho["residuals"],
        "hamiltonian": {
            "matrix": _mat_payload(ham["matrix"]),
            "eigenvalues": [[e.real, e.imag] for e in ham["eigenvalues"]],
            "residual_number_form": ham["residual_number_form"],
            "residual_mu_form": ham["residual_mu_form"],
            "residual_eigenvalues": ham["residual_eigenvalues"],
            "self_adjoint": ham["self_adjoint"],
        },
        "group": {
            "order": real.group.order,
            "q8_order": real.q8_subgroup.order,
            "z4_order": real.z4_subgroup.order,
            "isomorphic_to_matrix_group": real.isomorphic_to_matrix_group,
        },
        "generators": {
            "u": _mat_payload(real.u),
            "xy": _mat_payload(real.xy),
            "y": _mat_payload(real.y),
        },
        "constants_of_motion": {
            k: v for k, v in com.items() if not isinstance(v, complex)
        } | {
            "coefficient_mu2": [com["coefficient_mu2"].real,
                                com["coefficient_mu2"].imag],
            "coefficient_mu3": [com["coefficient_mu3"].real,
                                com["coefficient_mu3"].imag],
        },
        "eigensystem_residuals": es.residuals,
        "metric": {
            "residuals": metric["residuals"],
            "strictly_positive": metric["strictly_positive"],
            "norm_bounds_hold": metric["norm_bounds_hold"],
        },
    }


def _cmd_pf(args) -> int:
    points = []
    if args.sweep:
        try:
            with open(args.sweep, "r", encoding="utf-8") as fh:
                entries = json.load(fh)
            for entry in entries:
                points.append(
                    (
                        entry["omega_abs"],
                        entry.get("theta", 0.0),
                        entry.get("delta", 0.0),
                        entry.get("alpha", 0.0),
                    )
                )
        except (OSError, ValueError, KeyError, TypeError) as exc:
            print(f"error: bad sweep input: {exc}", file=sys.stderr)
            return USAGE_ERROR
    else:
        if args.omega is None:
            print("error: --omega is required without --sweep", file=sys.stderr)
            return USAGE_ERROR
        points.append((args.omega, args.theta, args.delta, args.alpha))

    results = []
    any_fail = False
    for w, th, dl, al in points:
        try:
            params = pf.PFParams(w, th, dl)
        except pf.InvalidRegime as exc:
            results.append(
                {
                    "parameters": {"omega_abs": w, "theta": th, "delta": dl,
                                   "alpha": al},
                    "status": "FAIL",
                    "error": f"InvalidRegime: {exc}",
                }
            )
            any_fail = True
            print(f"FAIL  omega={w} theta={th} delta={dl}: {exc}")
            continue
        report = _pf_point_report(params, al, args.tol)
        results.append(report)
        any_fail = any_fail or report["status"] == "FAIL"
        eigs = report["hamiltonian"]["eigenvalues"]
        print(
            f"{report['status']}  omega={w} theta={th} delta={dl} "
            f"Omega={params.omega_cap:.6g} eigenvalues={eigs[0]}, {eigs[1]} "
            f"group order={report['group']['order']}"
        )
    _maybe_write(args.json, results if args.sweep else results[0])
    return 1 if any_fail else 0


def _cmd_act(args) -> int:
    reports = rp.run_suite("sphere", samples=args.samples, seed=args.seed)
    for r in reports:
        print(f"{r.status:14s} {r.check_id}")
    envelope = rp.report_envelope(
        "sphere", reports, samples=args.samples, seed=args.seed
    )
    if args.json:
        rp.write_report_json(args.json, envelope)
    return rp.exit_code(reports)


def _cmd_product(args) -> int:
    try:
        left = catalog.zoo_group(args.left)
        right = catalog.zoo_group(args.right)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if args.kind == "direct":
        group = direct_product(left, right)
        print(f"direct product: order {group.order}")
    elif args.kind == "central":
        try:
            za = catalog.unique_central_involution(left)
            zb = catalog.unique_central_involution(right)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return USAGE_ERROR
        result = central_product_quotient(left, za, right, zb)
        group = result.group
        print(
            f"central product over the central involutions "
            f"({left.labels[za]} ~ {right.labels[zb]}): order {group.order}"
        )
        iso, _ = is_isomorphic(group, catalog.pauli_matrix_group())
        print(f"isomorphic to the 16-element matrix group: {iso}")
    else:
        if (args.left, args.right) != ("q8", "z4"):
            print("error: fiber product is bundled for q8 and z4 over z2",
                  file=sys.stderr)
            return USAGE_ERROR
        try:
            result = fiber_product(catalog.q8_mod_i_hom(), catalog.z4_mod_2_hom())
        except NotSurjective as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        group = result.group
        print(f"fiber product over the order-2 quotient: order {group.order}")
        print(f"structure checks: {result.checks}")
    _maybe_write(args.json, group.to_dict())
    return 0


def _cmd_dump_data(args) -> int:
    import os

    os.makedirs(args.outdir, exist_ok=True)
    for name in BUNDLED_PRESENTATIONS:
        path = os.path.join(args.outdir, f"{name}.pres")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(bundled_presentation_text(name))
        print(f"wrote {path}")
    return 0


_COMMANDS = {
    "verify": _cmd_verify,
    "tc": _cmd_tc,
    "pf": _cmd_pf,
    "act": _cmd_act,
    "product": _cmd_product,
    "dump-data": _cmd_dump_data,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
