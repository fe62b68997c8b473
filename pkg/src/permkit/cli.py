"""Command-line front end.

Examples::

    permkit perm compose "(0 1)" "(1 2)"
    permkit rank --algo mr --size 5 "(1 2)"
    permkit group order --gen "(0 1)" --gen "(0 1 2 3)"
    permkit --output json group orbits --points 0..9 --gen "(0 2)(3 5)(6 8)"

Exit status is 0 on success, 2 on usage or parse errors and 3 on domain
errors (size too small, rank out of range, group too large).
"""

from __future__ import annotations

import argparse
import json
import secrets
import sys

from permkit import cycleparser, ranking
from permkit.errors import ParseError, PermError, MalformedCycle
from permkit.groups import DEFAULT_MAX_ORDER, Group
from permkit.perms import Perm, compose

EXIT_USAGE = 2
EXIT_DOMAIN = 3


class _UsageError(Exception):
    pass


def _perm(text: str) -> Perm:
    return cycleparser.parse(text)


def _points(text: str) -> list[int]:
    """``a..b`` (b excluded) or a comma-separated list."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi)))
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise _UsageError(f"bad point range {text!r}") from None


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _perm_fields(p: Perm) -> dict:
    return {"cycles": str(p)}


def _group_fields(g: Group) -> dict:
    return {"order": g.order(), "elements": [str(p) for p in g.iterperms()]}


# Each handler returns (text_lines, json_object).


def _cmd_perm(args):
    sub = args.perm_cmd
    if sub == "compose":
        p = compose(*map(_perm, args.perms))
        return [str(p)], _perm_fields(p)
    if sub == "commutator":
        p = _perm(args.p).commutator(_perm(args.q))
        return [str(p)], _perm_fields(p)
    if sub == "random":
        seed = args.seed if args.seed is not None else args.global_seed
        if seed is None:
            seed = secrets.randbits(64)
            print(f"seed: {seed}", file=sys.stderr)
        p = ranking.random_perm(args.size, ranking.make_rng(seed))
        return [str(p)], {**_perm_fields(p), "seed": str(seed)}
    p = _perm(args.p)
    if sub == "inverse":
        q = ~p
        return [str(q)], _perm_fields(q)
    if sub == "power":
        q = p ** args.m
        return [str(q)], _perm_fields(q)
    if sub == "order":
        return [str(p.order())], {"order": p.order()}
    if sub == "parity":
        return [str(p.parity())], {"parity": p.parity()}
    if sub == "sign":
        return [f"{p.sign():+d}"], {"sign": p.sign()}
    if sub == "cycles":
        return [str(p)], {
            "cycles": str(p),
            "cycle_list": p.cycles(),
            "order": p.order(),
            "parity": p.parity(),
            "sign": p.sign(),
        }
    if sub == "array":
        arr = p.list(args.size)
        return [" ".join(map(str, arr))], {"array": arr}
    raise AssertionError(sub)


def _cmd_rank(args):
    p = _perm(args.p)
    fn = ranking.rank_lex if args.algo == "lex" else ranking.rank_mr
    r = fn(p, args.size)
    return [str(r)], {"rank": str(r), "algo": args.algo, "size": args.size}


def _cmd_unrank(args):
    try:
        r = int(args.rank)
    except ValueError:
        raise _UsageError(f"rank must be an integer, got {args.rank!r}") from None
    fn = ranking.unrank_lex if args.algo == "lex" else ranking.unrank_mr
    p = fn(args.size, r)
    return [str(p)], _perm_fields(p)


def _cmd_invvec(args):
    vec = ranking.inversion_vector(_perm(args.p), args.size)
    return [" ".join(map(str, vec))], {"inversion_vector": vec}


def _build(gens, max_order) -> Group:
    return Group.generated_by((_perm(g) for g in gens), max_order=max_order)


def _cmd_group(args):
    sub = args.group_cmd
    g = _build(args.gen, args.max_group_order)
    if sub == "order":
        return [str(g.order())], {"order": g.order()}
    if sub == "elements":
        fields = _group_fields(g)
        return fields["elements"], fields
    if sub == "is-abelian":
        flag = g.is_abelian()
        return [str(flag).lower()], {"is_abelian": flag}
    if sub == "derived-series":
        orders = [h.order() for h in g.derived_series()]
        # the first step does not shrink a perfect (nontrivial) group
        perfect = len(orders) == 1 and orders[0] > 1
        lines = [" ".join(map(str, orders))]
        if perfect:
            lines.append("perfect")
        return lines, {"orders": orders, "perfect": perfect}
    if sub == "orbits":
        orbs = sorted(g.orbits(_points(args.points)))
        text = " ".join("[" + " ".join(map(str, o)) + "]" for o in orbs)
        return [text], {"orbits": orbs}
    if sub == "is-transitive":
        flag = g.is_transitive(_points(args.points), strict=not args.lax)
        return [str(flag).lower()], {"is_transitive": flag}
    if sub == "stabilizer":
        h = g.stabilizer(args.point)
    elif sub == "center":
        h = g.center()
    elif sub in ("normalizer", "centralizer"):
        sub_group = _build(args.sub or [], args.max_group_order)
        h = g.normalizer(sub_group) if sub == "normalizer" else g.centralizer(sub_group)
    else:
        raise AssertionError(sub)
    fields = _group_fields(h)
    return fields["elements"], fields


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permkit", description="Permutation and permutation-group toolkit."
    )
    parser.add_argument("--output", choices=("text", "json"), default="text")
    parser.add_argument("--seed", dest="global_seed", type=_nonneg, default=None)
    parser.add_argument(
        "--max-group-order", type=_positive, default=DEFAULT_MAX_ORDER
    )
    cmds = parser.add_subparsers(dest="command", required=True)

    perm = cmds.add_parser("perm", help="perm algebra")
    perm.set_defaults(handler=_cmd_perm)
    psub = perm.add_subparsers(dest="perm_cmd", required=True)
    psub.add_parser("compose").add_argument("perms", nargs="+")
    for name in ("inverse", "order", "parity", "sign", "cycles"):
        psub.add_parser(name).add_argument("p")
    power = psub.add_parser("power")
    power.add_argument("p")
    power.add_argument("m", type=int)
    array = psub.add_parser("array")
    array.add_argument("p")
    array.add_argument("--size", type=int, default=None)
    comm = psub.add_parser("commutator")
    comm.add_argument("p")
    comm.add_argument("q")
    rand = psub.add_parser("random")
    rand.add_argument("--size", type=_positive, required=True)
    rand.add_argument("--seed", type=_nonneg, default=None)

    for name, handler in (("rank", _cmd_rank), ("unrank", _cmd_unrank)):
        sp = cmds.add_parser(name)
        sp.set_defaults(handler=handler)
        sp.add_argument("--algo", choices=("lex", "mr"), default="lex")
        sp.add_argument("--size", type=_positive, required=True)
        sp.add_argument("rank" if name == "unrank" else "p")
    inv = cmds.add_parser("invvec")
    inv.set_defaults(handler=_cmd_invvec)
    inv.add_argument("--size", type=_positive, required=True)
    inv.add_argument("p")

    group = cmds.add_parser("group", help="group analysis")
    group.set_defaults(handler=_cmd_group)
    gsub = group.add_subparsers(dest="group_cmd", required=True)

    def gcmd(name):
        sp = gsub.add_parser(name)
        sp.add_argument("--gen", action="append", default=[], metavar="CYCLES")
        return sp

    for name in ("order", "elements", "is-abelian", "center", "derived-series"):
        gcmd(name)
    gcmd("orbits").add_argument("--points", required=True, metavar="A..B")
    trans = gcmd("is-transitive")
    trans.add_argument("--points", required=True, metavar="A..B")
    trans.add_argument("--lax", action="store_true")
    gcmd("stabilizer").add_argument("--point", type=_nonneg, required=True)
    for name in ("normalizer", "centralizer"):
        gcmd(name).add_argument(
            "--sub", action="append", default=[], metavar="CYCLES"
        )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        lines, obj = args.handler(args)
    except (ParseError, MalformedCycle, _UsageError) as exc:
        print(f"permkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PermError as exc:
        print(f"permkit: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.output == "json":
        print(json.dumps(obj, ensure_ascii=False))
    else:
        for line in lines:
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
