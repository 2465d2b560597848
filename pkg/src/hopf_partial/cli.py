"""Command-line entry point: builders, checkers, the identity suite,
duality, and the example corpus, all with stable JSON I/O.

Exit codes: 0 = every asserted property passed, 1 = a check failed (the
report carries a counterexample), 2 = usage or input error.  Reports are
printed to stdout as JSON; artifacts go to --out.  Output is
byte-identical across runs with the same configuration.  The environment
variable HOPF_PARTIAL_WORKERS caps process parallelism for the identity
sweep (default 1).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cyclotomic import CycNum, Rat, RootOfUnity
from .hopf import HopfData, check_hopf_axioms, group_algebra, nichols_algebra, taft_algebra
from .linalg import basis_vector, zero_vector
from .paction import (
    ActionPreconditionError,
    ActionTable,
    PartialCnAction,
    check_partial_action,
    construct_nichols_action,
    construct_taft_action,
    delta_cn_action,
)
from .pcoaction import (
    CoactionTable,
    check_partial_coaction,
    construct_nichols_coaction,
    construct_taft_coaction,
    dualize_action,
    dualize_coaction,
)
from .qcomb import IDENTITY_TAGS, verify_identities
from .targets import TargetAlgebra, parse_target_spec
from . import corpus

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _emit(report: dict, out_path: str | None, artifact: dict | None = None):
    if artifact is not None and out_path:
        with open(out_path, "w") as fh:
            fh.write(_dump(artifact))
            fh.write("\n")
    print(_dump(report))


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}")


def parse_hopf_spec(spec: str) -> HopfData:
    """taft:n[:t] | nichols:n | group:n, or a path to a built JSON file."""
    parts = spec.split(":")
    if parts[0] == "taft":
        if len(parts) not in (2, 3):
            raise UsageError("taft spec is taft:n[:t]")
        n = int(parts[1])
        t = int(parts[2]) if len(parts) == 3 else 1
        return taft_algebra(n, RootOfUnity(n, t))
    if parts[0] == "nichols":
        if len(parts) != 2:
            raise UsageError("nichols spec is nichols:n")
        return nichols_algebra(int(parts[1]))
    if parts[0] == "group":
        if len(parts) != 2:
            raise UsageError("group spec is group:n")
        return group_algebra(int(parts[1]))
    if os.path.exists(spec):
        return HopfData.from_json(_load_json(spec))
    raise UsageError(f"unknown hopf spec {spec!r}")


def _scalar_times_unit(r, target: TargetAlgebra) -> tuple:
    c = CycNum.from_rational(r, target.conductor)
    return tuple(c * u for u in target.unit)


def parse_w(spec: str, target: TargetAlgebra) -> tuple:
    """One target element: a basis label ('z', 'e12', ...), a rational
    like 3/2 (meaning that multiple of 1_A), or a comma-separated list of
    rationals giving the full coefficient vector."""
    spec = spec.strip()
    labels = list(target.alg.basis_labels)
    if spec in labels:
        return basis_vector(target.dim, labels.index(spec), target.conductor)
    if "," in spec:
        parts = [p.strip() for p in spec.split(",")]
        if len(parts) != target.dim:
            raise UsageError(f"w vector needs {target.dim} entries")
        return tuple(
            CycNum.from_rational(Rat(p), target.conductor) for p in parts
        )
    try:
        r = Rat(spec)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse w spec {spec!r}")
    return _scalar_times_unit(r, target)


def _cmd_verify_identities(args) -> int:
    tags = [args.tag] if args.tag else None
    if args.tag and args.tag not in IDENTITY_TAGS:
        raise UsageError(f"unknown tag {args.tag!r}; choose from {', '.join(IDENTITY_TAGS)}")
    workers = int(os.environ.get("HOPF_PARTIAL_WORKERS", "1"))
    report = verify_identities(args.n_min, args.n_max, tags=tags, workers=max(1, workers))
    payload = report.to_json()
    payload["seed"] = args.seed
    _emit(payload, args.out)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_build(args) -> int:
    if args.family == "taft":
        H = taft_algebra(args.n, RootOfUnity(args.n, args.q_power))
    elif args.family == "nichols":
        H = nichols_algebra(args.n)
    else:
        H = group_algebra(args.n)
    report = check_hopf_axioms(H)
    payload = {"family": args.family, "n": args.n, "axioms": report.to_json(), "seed": args.seed}
    _emit(payload, args.out, artifact=H.to_json())
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_check_hopf(args) -> int:
    H = HopfData.from_json(_load_json(args.file))
    report = check_hopf_axioms(H)
    _emit({"axioms": report.to_json(), "seed": args.seed}, args.out)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _load_cn_action(path: str | None, n: int, target: TargetAlgebra) -> PartialCnAction:
    if path is None:
        return delta_cn_action(n, target)
    obj = _load_json(path)
    pca = PartialCnAction.from_json(obj)
    if pca.n != n:
        raise UsageError(f"cn-action file has order {pca.n}, hopf needs {n}")
    return pca


def _cmd_construct_action(args) -> int:
    H = parse_hopf_spec(args.hopf)
    family = H.meta.get("family")
    target = parse_target_spec(args.target, conductor=H.conductor)
    if family == "taft":
        pca = _load_cn_action(args.cn_action, H.meta["n"], target)
        w = parse_w(args.w, target)
        act = construct_taft_action(H, pca, w)
    elif family == "nichols":
        ws = [parse_w(part, target) for part in args.w.split(";")]
        act = construct_nichols_action(H, target, ws)
    else:
        raise UsageError("construct-action supports taft:* and nichols:* hopf specs")
    report = check_partial_action(act)
    _emit({"axioms": report.to_json(), "seed": args.seed}, args.out, artifact=act.to_json())
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_check_action(args) -> int:
    act = ActionTable.from_json(_load_json(args.file))
    report = check_partial_action(act)
    _emit({"axioms": report.to_json(), "seed": args.seed}, args.out)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_dualize(args) -> int:
    obj = _load_json(args.file)
    if args.direction == "action-to-coaction":
        act = ActionTable.from_json(obj)
        co = dualize_action(act)
        report = check_partial_coaction(co)
        _emit({"coaction": report.to_json(), "seed": args.seed}, args.out, artifact=co.to_json())
        return EXIT_OK if report.ok else EXIT_CHECK_FAILED
    co = CoactionTable.from_json(obj)
    act = dualize_coaction(co)
    report = check_partial_action(act)
    _emit({"axioms": report.to_json(), "seed": args.seed}, args.out, artifact=act.to_json())
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_construct_coaction(args) -> int:
    H = parse_hopf_spec(args.hopf)
    family = H.meta.get("family")
    target = parse_target_spec(args.target, conductor=H.conductor)
    if family == "taft":
        pca = _load_cn_action(args.cn_action, H.meta["n"], target)
        w = parse_w(args.w, target)
        co = construct_taft_coaction(H, pca, w)
    elif family == "nichols":
        ws = [parse_w(part, target) for part in args.w.split(";")]
        co = construct_nichols_coaction(H, target, ws)
    else:
        raise UsageError("construct-coaction supports taft:* and nichols:* hopf specs")
    report = check_partial_coaction(co)
    _emit({"coaction": report.to_json(), "seed": args.seed}, args.out, artifact=co.to_json())
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_check_coaction(args) -> int:
    co = CoactionTable.from_json(_load_json(args.file))
    report = check_partial_coaction(co)
    _emit({"coaction": report.to_json(), "seed": args.seed}, args.out)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _paper_example(name: str, target_spec: str | None, w_spec: str | None):
    base, _, param = name.partition(":")
    if base in ("nichols", "nichols-coaction"):
        n = int(param) if param else 2
        conductor = 2
        target = parse_target_spec(target_spec or "field", conductor)
        if w_spec:
            ws = [parse_w(part, target) for part in w_spec.split(";")]
            if len(ws) != n - 1:
                raise UsageError(f"nichols:{n} needs {n - 1} w entries separated by ';'")
        else:
            ws = [_scalar_times_unit(Rat(i), target) for i in range(1, n)]
        if base == "nichols":
            return corpus.nichols_action_example(n, target, ws)
        return corpus.nichols_coaction_example(n, target, ws)

    defaults = {
        "h4": ("truncpoly:3", 2),
        "h4-coaction": ("truncpoly:3", 2),
        "t3": ("truncpoly:3", 3),
        "t3-coaction": ("truncpoly:3", 3),
        "t4": ("truncpoly:4", 4),
        "t4-general": ("truncpoly:4", 4),
        "t4-g2-identity": ("truncpoly:4", 4),
        "t4-coaction": ("truncpoly:4", 4),
    }
    if name not in defaults:
        raise UsageError(f"unknown paper example {name!r}")
    default_target, conductor = defaults[name]
    target = parse_target_spec(target_spec or default_target, conductor)
    if name in ("t4-g2-identity", "t4-coaction"):
        w = None
    else:
        w = parse_w(w_spec, target) if w_spec else _default_w(target)
    if name == "h4":
        return corpus.h4_action_example(target, w)
    if name == "h4-coaction":
        return corpus.h4_coaction_example(target, w)
    if name == "t3":
        return corpus.t3_action_example(target, w)
    if name == "t3-coaction":
        return corpus.t3_coaction_example(target, w)
    if name == "t4":
        return corpus.t4_degenerate_example(target, w)
    if name == "t4-general":
        labels = target.alg.basis_labels
        if target.dim == 4 and labels[0] == "e11":
            pca = corpus.g2_conjugation_cn_action(target)
        else:
            pca = corpus.g2_parity_cn_action(target)
        return corpus.t4_general_example(target, w, pca)
    if name == "t4-g2-identity":
        return corpus.t4_g2_identity_example(target)
    return corpus.t4_coaction_example(target)


def _default_w(target: TargetAlgebra):
    labels = list(target.alg.basis_labels)
    if "z" in labels:
        return basis_vector(target.dim, labels.index("z"), target.conductor)
    if target.dim == 1:
        return _scalar_times_unit(Rat(1), target)
    if "e12" in labels:
        return basis_vector(target.dim, labels.index("e12"), target.conductor)
    return zero_vector(target.dim, target.conductor)


def _cmd_examples(args) -> int:
    ex = _paper_example(args.paper, args.target, args.w)
    check = ex.check()
    payload = {
        "name": ex.name,
        "kind": ex.kind,
        "matches_display": ex.matches_display,
        "notes": ex.notes,
        "check": check.to_json(),
        "seed": args.seed,
    }
    ok = check.ok and ex.matches_display
    # only verified artifacts are written
    _emit(payload, args.out, artifact=ex.built.to_json() if ok else None)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopf-partial",
        description="Exact checks of partial (co)actions of Taft and Nichols Hopf algebras",
    )
    parser.add_argument("--seed", type=int, default=0, help="recorded in reports; all checks are deterministic")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-identities", help="run the q-identity grids")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--tag", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_verify_identities)

    p = sub.add_parser("build", help="build a Hopf algebra and verify its axioms")
    p.add_argument("family", choices=["taft", "nichols", "group"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q-power", type=int, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("check-hopf", help="check Hopf axioms of a built JSON file")
    p.add_argument("file")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_check_hopf)

    p = sub.add_parser("construct-action", help="build a partial action table")
    p.add_argument("--hopf", required=True, help="taft:n[:t] | nichols:n | file")
    p.add_argument("--target", required=True, help="field | matrix:m | truncpoly:m | group:m")
    p.add_argument("--w", required=True, help="element spec; ';'-separated list for nichols")
    p.add_argument("--cn-action", default=None, help="PartialCnAction JSON (default: delta)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_construct_action)

    p = sub.add_parser("check-action", help="check the partial action axioms of a table")
    p.add_argument("file")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_check_action)

    p = sub.add_parser("dualize", help="swap between actions and coactions")
    p.add_argument("--direction", required=True, choices=["action-to-coaction", "coaction-to-action"])
    p.add_argument("file")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_dualize)

    p = sub.add_parser("construct-coaction", help="build a partial coaction table")
    p.add_argument("--hopf", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--cn-action", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_construct_coaction)

    p = sub.add_parser("check-coaction", help="check a partial coaction table")
    p.add_argument("file")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_check_coaction)

    p = sub.add_parser("examples", help="emit a named example as a checked table")
    p.add_argument("--paper", required=True, help="h4|t3|t4|t4-general|t4-g2-identity|nichols:n and -coaction variants")
    p.add_argument("--target", default=None)
    p.add_argument("--w", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_examples)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ActionPreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
