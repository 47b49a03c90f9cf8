"""cwedge: command-line front end.

Queries print a single literal (or JSON with --format json); verification
suites print a deterministic JSON report and exit nonzero iff a case fails.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import List, Optional

from .ordinals import (
    CofClass,
    OrdinalError,
    OrdinalParseError,
    cardinality_class,
    cofinality,
    format_ordinal,
    fundamental_sequence,
    parse_ordinal,
)
from .space import (
    ScaffoldTree,
    SpaceError,
    build_space,
    classify,
    format_atoms,
    format_point,
    i_class,
    intersect_admissible,
    make_admissible,
    parse_atoms,
    parse_point,
    reorder_to_r1,
    retract,
    s_class,
    sigma_continuity_ok,
    tree_height,
    union_admissible,
    valdivia_sufficient,
    weight,
)
from .functions import (
    FunctionError,
    adjoint,
    evaluate,
    format_function,
    format_measure,
    in_induced_D,
    pair,
    parse_function,
    parse_measure,
    project,
    sup_norm,
)
from .mbasis import (
    BasisError,
    biorthogonality_check,
    generator_check,
    generator_phi,
    parse_xi_rule,
    pri_basis,
    strong_reconstruct,
    tail_basis,
)
from .report import VerificationReport
from .verifier import (
    VerifierError,
    repro_mbaze_divna,
    sample_isolated_point,
    suite_chain,
    suite_commute,
    suite_duality,
    suite_oracle,
    suite_plichko,
    suite_skeleton,
)

_ERRORS = (
    OrdinalError,
    OrdinalParseError,
    SpaceError,
    FunctionError,
    BasisError,
    VerifierError,
)

_COF_TEXT = {
    CofClass.Zero: "0",
    CofClass.One: "1",
    CofClass.Omega: "w",
    CofClass.Omega1: "w1",
    CofClass.Omega2: "w2",
}

_DEFAULT_ETAS = ["5", "w", "w1", "w1*2", "w2", "w2 + w"]


def _load_space(text: str) -> ScaffoldTree:
    text = text.strip()
    if text.startswith("seg:") or text.startswith("{"):
        return build_space(text)
    with open(text) as fh:
        return build_space(json.load(fh))


def _space_dict(T: ScaffoldTree) -> dict:
    edges = []
    for eid in sorted(T.edges):
        e = T.edges[eid]
        mult: object = e.multiplicity.n if e.multiplicity.kind == "finite" else {
            "aleph0": "w",
            "aleph1": "w1",
        }.get(e.multiplicity.kind, e.multiplicity.kind)
        edges.append(
            {
                "id": e.eid,
                "parent": e.parent,
                "child": e.child,
                "length": format_ordinal(e.length),
                "multiplicity": mult,
                "copies": list(e.copies),
            }
        )
    return {"edges": edges}


class _Emitter:
    def __init__(self, args):
        self.fmt = args.format
        self.out = args.out

    def _write(self, text: str):
        if self.out:
            with open(self.out, "w") as fh:
                fh.write(text + "\n")
        else:
            print(text)

    def result(self, value, exit_on: Optional[bool] = None) -> int:
        if (self.fmt or "text") == "json":
            payload = value if isinstance(value, (dict, list)) else {"result": value}
            self._write(json.dumps(payload, indent=2))
        else:
            if isinstance(value, (dict, list)):
                self._write(json.dumps(value, indent=2))
            else:
                self._write(str(value))
        if exit_on is None:
            return 0
        return 0 if exit_on else 1

    def report(self, rep: VerificationReport) -> int:
        if (self.fmt or "json") == "text":
            lines = [f"suite: {rep.suite}  seed: {rep.seed}"]
            for key in sorted(rep.config):
                lines.append(f"config {key} = {rep.config[key]}")
            for c in rep.cases:
                tag = "PASS" if c.passed else "FAIL"
                desc = ", ".join(f"{k}={v}" for k, v in sorted(c.inputs.items()))
                lines.append(f"[{tag}] {desc}: expected {c.expected}; got {c.actual}")
                if c.witness:
                    lines.append(f"       witness: {c.witness}")
            s = rep.summary()
            lines.append(
                f"summary: total={s['total']} passed={s['passed']} failed={s['failed']}"
            )
            self._write("\n".join(lines))
        else:
            self._write(rep.to_json())
        return 0 if rep.passed else 1


def _add_common(p: argparse.ArgumentParser, space: bool = False):
    p.add_argument("--seed", type=int, default=0, help="RNG seed for sampling")
    p.add_argument("--truncation", type=int, default=8, help="Phi truncation depth")
    p.add_argument("--depth", type=int, default=3, help="closure iteration depth")
    p.add_argument("--budget", type=int, default=None, help="sample/search budget")
    p.add_argument("--out", default=None, help="write output to this path")
    # queries default to plain text, verification reports to JSON
    p.add_argument("--format", choices=["json", "text"], default=None)
    if space:
        p.add_argument(
            "--space",
            required=True,
            help='space literal: "seg:<ordinal>", inline JSON, or a JSON file path',
        )


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="cwedge", description=__doc__)
    groups = top.add_subparsers(dest="group", required=True)

    def sub(group, name, help_text, space=False, args=()):
        p = group.add_parser(name, help=help_text)
        for a, kw in args:
            p.add_argument(a, **kw)
        _add_common(p, space=space)
        return p

    g_ord = groups.add_parser("ord", help="ordinal arithmetic").add_subparsers(
        dest="cmd", required=True
    )
    sub(g_ord, "eval", "normalize an ordinal expression", args=[("expr", {})])
    sub(g_ord, "cmp", "compare two ordinals", args=[("left", {}), ("right", {})])
    sub(g_ord, "cf", "cofinality class", args=[("expr", {})])
    sub(g_ord, "card", "cardinality class", args=[("expr", {})])
    sub(
        g_ord,
        "fs",
        "n-th fundamental sequence value",
        args=[("expr", {}), ("n", {"type": int})],
    )

    g_sp = groups.add_parser("space", help="scaffold trees").add_subparsers(
        dest="cmd", required=True
    )
    sub(g_sp, "build", "validate and normalize a space", space=True)
    sub(g_sp, "classify", "r/r1 classification and Valdivia fragment", space=True)
    sub(g_sp, "reorder", "reorder an r-tree into an r1-tree", space=True)
    sub(g_sp, "weight", "weight and I/S cardinality classes", space=True)

    g_set = groups.add_parser("set", help="admissible sets").add_subparsers(
        dest="cmd", required=True
    )
    sub(
        g_set,
        "make",
        "normalize an admissible set literal",
        space=True,
        args=[("atoms", {}), ("--close", {"action": "store_true"})],
    )
    sub(
        g_set,
        "retract",
        "r_A applied to a point",
        space=True,
        args=[("atoms", {}), ("point", {})],
    )
    sub(g_set, "union", "join of two sets", space=True, args=[("left", {}), ("right", {})])
    sub(
        g_set,
        "intersect",
        "meet of two sets",
        space=True,
        args=[("left", {}), ("right", {})],
    )
    sub(g_set, "sigma-ok", "sigma-continuity predicate", space=True, args=[("atoms", {})])

    g_fn = groups.add_parser("fn", help="step functions").add_subparsers(
        dest="cmd", required=True
    )
    sub(g_fn, "eval", "evaluate at a point", space=True, args=[("fn", {}), ("point", {})])
    sub(g_fn, "norm", "sup norm", space=True, args=[("fn", {})])
    sub(g_fn, "project", "P_A f", space=True, args=[("atoms", {}), ("fn", {})])

    g_ms = groups.add_parser("meas", help="atomic measures").add_subparsers(
        dest="cmd", required=True
    )
    sub(g_ms, "pair", "dual pairing <f, mu>", space=True, args=[("fn", {}), ("measure", {})])
    sub(
        g_ms,
        "adjoint",
        "P_A* mu",
        space=True,
        args=[("atoms", {}), ("measure", {})],
    )
    sub(g_ms, "in-d", "membership in the induced subspace D", space=True, args=[("measure", {})])

    g_bs = groups.add_parser("basis", help="Markushevich bases").add_subparsers(
        dest="cmd", required=True
    )
    sub(g_bs, "tail", "tail basis pair at a point", space=True, args=[("point", {})])
    sub(
        g_bs,
        "pri",
        "PRI-derived basis pair at an index",
        space=True,
        args=[("alpha", {}), ("--xi", {"default": "identity"})],
    )
    sub(
        g_bs,
        "biortho",
        "biorthogonality on sampled tail pairs",
        space=True,
        args=[("--count", {"type": int, "default": 20})],
    )
    sub(g_bs, "reconstruct", "strong reconstruction of a step function", space=True, args=[("fn", {})])
    sub(g_bs, "phi", "projectional generator Phi of a measure", space=True, args=[("measure", {})])
    sub(
        g_bs,
        "gen-check",
        "finite-span generator property",
        space=True,
        args=[("measures", {"nargs": "+"})],
    )

    g_vf = groups.add_parser("verify", help="verification suites").add_subparsers(
        dest="cmd", required=True
    )
    sub(g_vf, "skeleton", "skeleton axioms on a sampled family", space=True)
    sub(g_vf, "commute", "commutation dichotomy", space=True)
    sub(g_vf, "chain", "fs-chain limit checks", space=True)
    sub(g_vf, "duality", "projection/adjoint duality", space=True)
    sub(g_vf, "oracle", "agreement with the finite-model oracle", space=True)
    sub(
        g_vf,
        "plichko",
        "1-Plichko dichotomy for segments",
        args=[("etas", {"nargs": "*", "default": _DEFAULT_ETAS})],
    )

    g_rp = groups.add_parser("repro", help="paper-example scenarios").add_subparsers(
        dest="cmd", required=True
    )
    sub(g_rp, "mbaze-divna", "the swap-rule basis pathology on [0, w2]")
    return top


def _dispatch(args, emit: _Emitter) -> int:
    group, cmd = args.group, args.cmd
    if group == "ord":
        if cmd == "eval":
            return emit.result(format_ordinal(parse_ordinal(args.expr)))
        if cmd == "cmp":
            a, b = parse_ordinal(args.left), parse_ordinal(args.right)
            return emit.result("<" if a < b else ("=" if a == b else ">"))
        if cmd == "cf":
            return emit.result(_COF_TEXT[cofinality(parse_ordinal(args.expr))])
        if cmd == "card":
            return emit.result(str(cardinality_class(parse_ordinal(args.expr))))
        if cmd == "fs":
            return emit.result(
                format_ordinal(fundamental_sequence(parse_ordinal(args.expr), args.n))
            )

    T = _load_space(args.space) if getattr(args, "space", None) else None

    if group == "space":
        if cmd == "build":
            return emit.result(_space_dict(T))
        if cmd == "classify":
            c = classify(T)
            return emit.result(
                {
                    "is_r_tree": c.is_r_tree,
                    "is_r1_tree": c.is_r1_tree,
                    "valdivia": valdivia_sufficient(T).value,
                }
            )
        if cmd == "reorder":
            return emit.result(_space_dict(reorder_to_r1(T)))
        if cmd == "weight":
            return emit.result(
                {
                    "height": format_ordinal(tree_height(T)),
                    "weight": str(weight(T)),
                    "i_class": str(i_class(T)),
                    "s_class": str(s_class(T)),
                }
            )
    if group == "set":
        if cmd == "make":
            A = make_admissible(T, parse_atoms(T, args.atoms), auto_close=args.close)
            return emit.result(format_atoms(A))
        if cmd == "retract":
            A = make_admissible(T, parse_atoms(T, args.atoms))
            return emit.result(format_point(retract(T, A, parse_point(T, args.point))))
        if cmd in ("union", "intersect"):
            A = make_admissible(T, parse_atoms(T, args.left))
            B = make_admissible(T, parse_atoms(T, args.right))
            op = union_admissible if cmd == "union" else intersect_admissible
            return emit.result(format_atoms(op(A, B)))
        if cmd == "sigma-ok":
            A = make_admissible(T, parse_atoms(T, args.atoms))
            ok, witness = sigma_continuity_ok(T, A)
            return emit.result(
                {
                    "sigma_continuous": ok,
                    "witness": None if witness is None else format_point(witness),
                },
                exit_on=ok,
            )
    if group == "fn":
        if cmd == "eval":
            f = parse_function(T, args.fn)
            return emit.result(str(evaluate(f, parse_point(T, args.point))))
        if cmd == "norm":
            return emit.result(str(sup_norm(parse_function(T, args.fn))))
        if cmd == "project":
            A = make_admissible(T, parse_atoms(T, args.atoms))
            return emit.result(format_function(project(T, A, parse_function(T, args.fn))))
    if group == "meas":
        if cmd == "pair":
            return emit.result(
                str(pair(parse_function(T, args.fn), parse_measure(T, args.measure)))
            )
        if cmd == "adjoint":
            A = make_admissible(T, parse_atoms(T, args.atoms))
            return emit.result(
                format_measure(adjoint(T, A, parse_measure(T, args.measure)))
            )
        if cmd == "in-d":
            ok, witness = in_induced_D(T, parse_measure(T, args.measure))
            return emit.result(
                {
                    "in_D": ok,
                    "witness": None if witness is None else format_point(witness),
                },
                exit_on=ok,
            )
    if group == "basis":
        if cmd == "tail":
            b = tail_basis(T, parse_point(T, args.point))
            return emit.result(
                {
                    "vector": format_function(b.vector),
                    "functional": format_measure(b.functional),
                }
            )
        if cmd == "pri":
            xi_spec = args.xi
            if xi_spec.strip().startswith("{"):
                xi_spec = json.loads(xi_spec)
            b = pri_basis(T, parse_xi_rule(xi_spec), parse_ordinal(args.alpha))
            return emit.result(
                {
                    "vector": format_function(b.vector),
                    "functional": format_measure(b.functional),
                }
            )
        if cmd == "biortho":
            rng = random.Random(args.seed)
            points, guard = [], 0
            while len(points) < args.count and guard < args.count * 50:
                guard += 1
                p = sample_isolated_point(rng, T)
                if p not in points:
                    points.append(p)
            pairs = [tail_basis(T, p) for p in points]
            return emit.report(biorthogonality_check(pairs, seed=args.seed))
        if cmd == "reconstruct":
            f = parse_function(T, args.fn)
            r = strong_reconstruct(T, f)
            return emit.result(
                {"reconstruction": format_function(r), "exact": r == f},
                exit_on=r == f,
            )
        if cmd == "phi":
            mu = parse_measure(T, args.measure)
            pts = generator_phi(T, mu, truncation=args.truncation)
            return emit.result([format_point(p) for p in pts])
        if cmd == "gen-check":
            ms = [parse_measure(T, m) for m in args.measures]
            return emit.report(
                generator_check(T, ms, truncation=args.truncation, seed=args.seed)
            )
    if group == "verify":
        if cmd == "skeleton":
            return emit.report(suite_skeleton(T, seed=args.seed))
        if cmd == "commute":
            return emit.report(
                suite_commute(T, seed=args.seed, samples=args.budget or 20)
            )
        if cmd == "chain":
            return emit.report(suite_chain(T, seed=args.seed, n_chains=args.budget or 10))
        if cmd == "duality":
            return emit.report(suite_duality(T, seed=args.seed, n=args.budget or 200))
        if cmd == "oracle":
            return emit.report(suite_oracle(T, seed=args.seed, n=args.budget or 510))
        if cmd == "plichko":
            etas = [parse_ordinal(t) for t in args.etas]
            return emit.report(suite_plichko(etas, seed=args.seed))
    if group == "repro" and cmd == "mbaze-divna":
        return emit.report(repro_mbaze_divna(seed=args.seed))
    raise AssertionError(f"unhandled command {group} {cmd}")  # pragma: no cover


def main(argv: Optional[List[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _dispatch(args, _Emitter(args))
    except _ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
