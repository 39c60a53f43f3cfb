"""Command-line front end.  Every command prints JSON (or a readable form with --pretty)."""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Callable

from . import limits, special, tables, topos
from .catalog import standard_graph
from .errors import CatGraphError
from .graph import Category, Graph, dumps, is_isomorphic
from .morphisms import Morphism, count_homs, enumerate_homs, validate
from .report import Report, to_jsonable


def _category(text: str) -> Category:
    try:
        return Category.parse(text)
    except CatGraphError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return n


def _read_json(arg: str) -> Any:
    if arg == "-":
        return json.load(sys.stdin)
    with open(arg, encoding="utf-8") as fh:
        return json.load(fh)


def load_graph(arg: str) -> Graph:
    """A JSON file path, ``-`` for stdin, or a catalog name."""
    if arg == "-" or os.path.exists(arg):
        return Graph.from_dict(_read_json(arg))
    return standard_graph(arg)


def _graph_field(value: Any) -> dict:
    return standard_graph(value).to_dict() if isinstance(value, str) else value


def load_morphism(arg: str) -> Morphism:
    """A JSON file ``{"dom", "cod", "map"}``; ``dom``/``cod`` may be catalog names."""
    data = dict(_read_json(arg))
    for key in ("dom", "cod"):
        if key in data:
            data[key] = _graph_field(data[key])
    return Morphism.from_dict(data)


def _missing(what: str, obstruction: Report | None = None) -> dict:
    out: dict = {"exists": False, "what": what}
    if obstruction is not None:
        out["obstruction"] = obstruction.to_dict()
    return out


# -- command handlers -----------------------------------------------------------------

def cmd_std(a):
    g = standard_graph(a.name)
    return g.to_dot() if a.dot else g


def cmd_validate(a):
    return validate(load_morphism(a.morphism), a.category)


def cmd_hom_count(a):
    return {"count": count_homs(load_graph(a.A), load_graph(a.B), a.category)}


def cmd_hom_list(a):
    return enumerate_homs(load_graph(a.A), load_graph(a.B), a.category)


def cmd_product(a):
    return limits.product(load_graph(a.A), load_graph(a.B), a.category)


def cmd_coproduct(a):
    return limits.coproduct(load_graph(a.A), load_graph(a.B), a.category)


def cmd_equalizer(a):
    return limits.equalizer(load_morphism(a.f), load_morphism(a.g), a.category)


def cmd_coequalizer(a):
    f, g = load_morphism(a.f), load_morphism(a.g)
    q = limits.coequalizer(f, g, a.category)
    if q is None:
        return _missing("coequalizer", limits.coequalizer_obstruction(f, g, a.category))
    return q


def cmd_pullback(a):
    return limits.pullback(load_morphism(a.f), load_morphism(a.g), a.category)


def cmd_terminal(a):
    t = limits.terminal(a.category)
    if t is None:
        return _missing("terminal", limits.terminal_obstruction(a.category, a.battery_max_parts))
    return t


def cmd_initial(a):
    return limits.initial(a.category)


def cmd_classifier(a):
    cl = topos.subobject_classifier(a.category)
    if cl is None:
        return _missing("subobject classifier", topos.classifier_obstruction(a.category))
    return cl


def cmd_chi(a):
    return topos.characteristic_morphism(load_morphism(a.sub), a.category)


def cmd_exp(a):
    e = topos.exponential(load_graph(a.G), load_graph(a.H), a.category)
    if e is None:
        return _missing("exponential", topos.refute_exponentiation(a.category, seed=a.seed))
    return e


def cmd_transpose(a):
    e = topos.exponential(load_graph(a.G), load_graph(a.H), a.category)
    if e is None:
        return _missing("exponential", topos.refute_exponentiation(a.category, seed=a.seed))
    X = load_graph(a.X) if a.X else None
    return topos.transpose(load_morphism(a.g), e, X)


def cmd_refute_l2(a):
    return topos.refute_exponentiation(a.category, seed=a.seed)


def cmd_choice(a):
    f = topos.l5_instance() if a.f is None else load_morphism(a.f)
    g = topos.check_choice(f, a.category)
    return {"found": g is not None, "g": g}


def cmd_two_valued(a):
    return topos.check_two_valued(a.category)


def cmd_free(a):
    return special.free_graph(a.ids, a.category)


def cmd_cofree(a):
    g = special.cofree_graph(a.ids, a.category)
    if g is None:
        return _missing("cofree graph", special.cofree_obstruction(a.ids, a.battery_max_parts))
    return g


def cmd_classify(a):
    return special.classify(load_graph(a.graph), a.property, a.category)


def cmd_iso(a):
    found = is_isomorphic(load_graph(a.A), load_graph(a.B))
    return {"isomorphic": found is not None, "forward": found[0] if found else None,
            "inverse": found[1] if found else None}


def cmd_axiom_table(a):
    return tables.axiom_table(a.battery_max_parts)


def cmd_properties_table(a):
    return tables.properties_table(a.battery_max_parts)


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--category", type=_category, default=Category.G,
                        help="G, SiG, SiLlG, StG, SiStG, SiLlStG or a long form (default G)")
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    common.add_argument("--battery-max-parts", type=_nonneg, default=4, metavar="N",
                        help="largest test graph used by battery checks (default 4)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized trials")

    p = argparse.ArgumentParser(prog="catgraph", description="Six categories of graphs.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, fn: Callable, help_: str, *args: tuple[str, dict]):
        sp = sub.add_parser(name, parents=[common], help=help_)
        for flag, kw in args:
            sp.add_argument(flag, **kw)
        sp.set_defaults(fn=fn)
        return sp

    graph = {"help": "graph JSON file, '-' for stdin, or a catalog name"}
    morph = {"help": "morphism JSON file with dom, cod and map"}
    add("std", cmd_std, "print a catalog graph", ("name", {}),
        ("--dot", {"action": "store_true", "help": "emit DOT instead of JSON"}))
    add("validate", cmd_validate, "check a morphism", ("morphism", morph))
    add("hom-count", cmd_hom_count, "count morphisms A -> B", ("A", graph), ("B", graph))
    add("hom-list", cmd_hom_list, "list morphisms A -> B", ("A", graph), ("B", graph))
    add("product", cmd_product, "product with projections", ("A", graph), ("B", graph))
    add("coproduct", cmd_coproduct, "coproduct with injections", ("A", graph), ("B", graph))
    add("equalizer", cmd_equalizer, "equalizer of f, g", ("f", morph), ("g", morph))
    add("coequalizer", cmd_coequalizer, "coequalizer of f, g", ("f", morph), ("g", morph))
    add("pullback", cmd_pullback, "pullback of a cospan", ("f", morph), ("g", morph))
    add("terminal", cmd_terminal, "terminal object or obstruction")
    add("initial", cmd_initial, "initial object")
    add("classifier", cmd_classifier, "subobject classifier or obstruction")
    add("chi", cmd_chi, "characteristic map of a mono", ("sub", morph))
    add("exp", cmd_exp, "exponential H^G with evaluation", ("G", graph), ("H", graph))
    add("transpose", cmd_transpose, "transpose of g: X x G -> H",
        ("g", morph), ("G", graph), ("H", graph),
        ("--X", {"help": "the factor X (recovered from g when omitted)"}))
    add("refute-l2", cmd_refute_l2, "counting refutation of exponentials")
    add("choice", cmd_choice, "search g with f g f = f",
        ("f", {"nargs": "?", "help": "morphism JSON (default: the built-in instance)"}))
    add("two-valued", cmd_two_valued, "compare 1+1 with the classifier object")
    add("free", cmd_free, "free graph on ids", ("ids", {"nargs": "*"}))
    add("cofree", cmd_cofree, "cofree graph on ids", ("ids", {"nargs": "*"}))
    add("classify", cmd_classify, "projective/injective/generator/cogenerator verdict",
        ("graph", graph),
        ("--property", {"required": True, "choices": list(special.PROPERTIES)}))
    add("iso", cmd_iso, "isomorphism test", ("A", graph), ("B", graph))
    add("axiom-table", cmd_axiom_table, "recompute the axiom grid")
    add("properties-table", cmd_properties_table, "recompute the special-object grid")
    return p


def render(result: Any, pretty: bool) -> str:
    if isinstance(result, str):
        return result
    if pretty and isinstance(result, tables.Table):
        return result.render().rstrip("\n")
    return dumps(to_jsonable(result), pretty=pretty)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.fn(args)
    except (CatGraphError, OSError, json.JSONDecodeError) as exc:
        print(f"catgraph: error: {exc}", file=sys.stderr)
        return 1
    print(render(result, args.pretty))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
