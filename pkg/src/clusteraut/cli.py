"""Command-line interface.

Exit status is 0 on success, 1 on a domain error (a JSON object with
``error`` and ``message`` goes to stderr) and 2 on a usage error.
Directions and quiver vertices are 1-based; graph vertex indices are 0-based,
matching the ``index`` field of graph JSON.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import verify as verify_mod
from .classify import (
    Inapplicable,
    Inconclusive,
    RankTooLarge,
    check_signature_conjecture,
    finite_type_check,
    is_mutation_finite,
    mutation_class,
    rank3_subquiver_scan,
)
from .exchange_graph import (
    UnsupportedAlgebra,
    Unreachable,
    build_graph,
    export_graph,
    geodesic_loops,
    layer_signature,
)
from .groups import (
    IncompleteGraph,
    TransportInconsistency,
    cluster_automorphism_group,
    compare_groups,
    direct_subgroup,
    graph_automorphism_group,
)
from .io import dumps, load_seed
from .laurent import NonExactDivision
from .matrices import NotSkewSymmetrizable, matrix_to_quiver
from .mutation import LaurentPhenomenonViolation, apply_sequence

BUDGET_ENV = "CLUSTERAUT_BUDGET"
DEFAULT_BUDGET = 10_000
# radius used for graphs of infinite type when no limit is given
DEFAULT_INFINITE_RADIUS = 6


class DomainError(Exception):
    """A well-formed request that has no answer for this input."""


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


def _seed(args):
    path = getattr(args, "seed", None) or getattr(args, "quiver", None)
    if path is None and args.builtin is None:
        raise DomainError("give --seed FILE, --quiver FILE or --builtin NAME")
    return load_seed(path, args.builtin)


def _is_finite_type(B) -> bool:
    try:
        return finite_type_check(B, default_budget()) is not None
    except Inconclusive:
        return False


def _graph(args, seed=None):
    seed = seed or _seed(args)
    radius = args.max_radius
    if radius is None and args.max_vertices is None and not _is_finite_type(seed.matrix):
        radius = DEFAULT_INFINITE_RADIUS
    return build_graph(seed, max_vertices=args.max_vertices, max_radius=radius)


# -- subcommands ------------------------------------------------------------

def cmd_mutate(args) -> str:
    seed = _seed(args)
    for k in args.directions:
        if not 1 <= k <= seed.n:
            raise DomainError(f"direction {k} out of range 1..{seed.n}")
    out = apply_sequence(seed, [k - 1 for k in args.directions])
    return dumps(out.to_json()) + "\n"


def cmd_graph(args) -> str:
    return export_graph(_graph(args), format=args.format, annotate=args.annotate)


def cmd_layers(args) -> str:
    G = _graph(args)
    if not 0 <= args.base < len(G):
        raise DomainError(f"base index {args.base} out of range 0..{len(G) - 1}")
    sig = layer_signature(G, args.base, max_m=args.max_layer)
    out = sig.to_json()
    out["complete"] = G.complete
    out["vertices"] = len(G)
    return dumps(out) + "\n"


def _group_json(g, emit: bool) -> dict:
    out = {"order": g.order, "shape": g.shape().to_json(), "generators": [list(p) for p in g.generators]}
    if emit:
        out["elements"] = [list(p) for p in g.elements]
    return out


def cmd_aut(args) -> str:
    seed = _seed(args)
    if not _is_finite_type(seed.matrix):
        raise DomainError("infinite graph: group computation unsupported")
    G = build_graph(seed)
    loops = geodesic_loops(G)
    out: dict = {"vertices": len(G)}
    if args.which == "graph":
        out["aut_E"] = _group_json(graph_automorphism_group(G, loops), args.emit_elements)
    elif args.which == "cluster":
        aut_a, auts = cluster_automorphism_group(G)
        out["aut_A"] = _group_json(aut_a, args.emit_elements)
        out["aut_A"]["direct_order"] = direct_subgroup(auts, len(G)).order
    else:
        cmp = compare_groups(G, loops=loops)
        out["aut_A"] = _group_json(cmp.aut_A, args.emit_elements)
        out["aut_A"]["direct_order"] = direct_subgroup(cmp.cluster_automorphisms, len(G)).order
        out["aut_E"] = _group_json(cmp.aut_E, args.emit_elements)
        out["equal"] = cmp.equal
        out["witness"] = list(cmp.witness) if cmp.witness is not None else None
    return dumps(out) + "\n"


def cmd_classify(args) -> str:
    seed = _seed(args)
    Q = seed.matrix
    budget = args.budget if args.budget is not None else default_budget()
    mode = args.mode
    if mode == "finite-type":
        label = finite_type_check(Q, budget)
        out = {"finite_type": label is not None, "type": str(label) if label is not None else None}
    elif mode == "mutation-finite":
        out = is_mutation_finite(Q, budget).to_json()
    elif mode == "class":
        cls = mutation_class(Q, budget)
        out = {
            "size": len(cls),
            "complete": cls.complete,
            "max_multiplicity": cls.max_multiplicity_seen,
            "dynkin": str(cls.witness_dynkin[0]) if cls.witness_dynkin else None,
            "members": [
                {"quiver": matrix_to_quiver(M).to_json(), "sequence": [k + 1 for k in cls.paths[f]]}
                for f, M in cls.members.items()
            ],
        }
    elif mode == "rank3":
        out = rank3_subquiver_scan(Q).to_json()
    else:  # conjecture
        G = build_graph(seed)
        if not G.complete:
            raise DomainError("infinite graph: conjecture check needs a finite exchange graph")
        out = check_signature_conjecture(G).to_json()
    return dumps(out) + "\n"


def cmd_verify(args) -> tuple[str, int]:
    cases = verify_mod.run(args.scope, stretch=args.stretch)
    lines = [dumps(c) for c in cases]
    summ = verify_mod.summary(cases)
    lines.append(dumps(summ))
    return "\n".join(lines) + "\n", 0 if summ["summary"]["failed"] == 0 else 1


# -- parser -----------------------------------------------------------------

def _add_seed_args(p, quiver_flag: bool = False):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--seed", metavar="FILE", help="matrix or quiver JSON")
    if quiver_flag:
        g.add_argument("--quiver", metavar="FILE", help="matrix or quiver JSON")
    g.add_argument("--builtin", metavar="NAME", help="named quiver, e.g. a3, b3, f4, markov")


def _add_limits(p):
    p.add_argument("--max-vertices", type=int, default=None)
    p.add_argument("--max-radius", type=int, default=None,
                   help=f"defaults to {DEFAULT_INFINITE_RADIUS} for infinite type")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clusteraut", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mutate", help="apply a sequence of mutations")
    _add_seed_args(p)
    p.add_argument("--directions", type=int, nargs="*", default=[], metavar="K", help="1-based directions")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("graph", help="enumerate the exchange graph")
    _add_seed_args(p)
    _add_limits(p)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--annotate", action="store_true", help="label DOT nodes with Dynkin types")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("layers", help="layer signature at a base seed")
    _add_seed_args(p)
    _add_limits(p)
    p.add_argument("--base", type=int, default=0, help="0-based vertex index")
    p.add_argument("--max-layer", type=int, default=None)
    p.set_defaults(func=cmd_layers)

    p = sub.add_parser("aut", help="automorphism groups of a finite-type algebra")
    _add_seed_args(p)
    p.add_argument("--which", choices=("graph", "cluster", "both"), default="both")
    p.add_argument("--emit-elements", action="store_true")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("classify", help="finite type, mutation-finiteness and mutation classes")
    _add_seed_args(p, quiver_flag=True)
    p.add_argument("--mode", choices=("finite-type", "mutation-finite", "class", "rank3", "conjecture"),
                   default="finite-type")
    p.add_argument("--budget", type=int, default=None, help=f"class-size budget (env {BUDGET_ENV})")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run the reproduction checks")
    p.add_argument("scope", nargs="?", choices=verify_mod.SCOPES, default="all")
    p.add_argument("--stretch", action="store_true", help="also run the D5 and E6 rows")
    p.set_defaults(func=cmd_verify)
    return parser


DOMAIN_ERRORS = (
    DomainError, ValueError, KeyError, Inconclusive, Inapplicable, RankTooLarge, UnsupportedAlgebra,
    Unreachable, IncompleteGraph, NotSkewSymmetrizable, NonExactDivision, LaurentPhenomenonViolation,
    TransportInconsistency, OSError,
)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except DOMAIN_ERRORS as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        sys.stderr.write(dumps({"error": type(e).__name__, "message": msg}) + "\n")
        return 1
    code = 0
    if isinstance(result, tuple):
        result, code = result
    sys.stdout.write(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
