"""Command-line driver.  Every verb prints one JSON document on stdout.

Exit codes: 0 success, 1 domain error (e.g. ``bound`` on a zero invariant),
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import freegroup as fg
from .dsl import parse_presentation, parse_word, parse_words
from .errors import AlphabetError, KnotsplitError, ParseError, ZeroInvariantError
from .foxcalc import fox_jacobian
from .hnn import (SplittingData, amalgam_presentation, degree_bound_check, hnn_presentation,
                  induced_splitting, verify_fox_block_structure)
from .knotio import FIXTURE_NAMES, PDCode, builtin, wirtinger_from_pd
from .laurent import ExactField
from .presentation import Epimorphism, Presentation, abelianize, epimorphism_to_Z
from .reps import Representation, evaluate_fox_matrix, search_homs, trivial_rep, verify
from .wada import genus_bound_from_degree, rank_bound_from_degree, wada_invariant

VERBS = ("parse", "abelianize", "fox", "fold", "rep-search", "wada", "bound", "hnn-present",
         "hnn-amalgam", "hnn-induce", "hnn-check", "knot-from-pd", "fixture")


class UsageError(KnotsplitError):
    pass


def _text(arg: str) -> str:
    """Inline value, or the contents of a file when written ``@path``."""
    if arg.startswith("@"):
        with open(arg[1:], encoding="utf-8") as fh:
            return fh.read()
    return arg


def _pres_json(P: Presentation) -> dict:
    return {
        "text": str(P),
        "generators": list(P.generators),
        "relators": [str(r) for r in P.relators],
        "padding": P.padding,
        "num_generators": P.num_generators,
        "num_relators": P.num_relators,
    }


def _presentation(args):
    """``(P, eps or None)`` from --pres / --fixture."""
    if getattr(args, "pres", None):
        P = parse_presentation(_text(args.pres))
        return P, None
    if getattr(args, "fixture", None):
        fx = builtin(args.fixture)
        return fx.presentation, fx.eps
    raise UsageError("give --pres or --fixture")


def _epimorphism(args, P, eps):
    if getattr(args, "eps", None):
        return Epimorphism.from_values(P, json.loads(_text(args.eps)))
    return eps if eps is not None else epimorphism_to_Z(P)


def _splitting(args) -> SplittingData:
    if getattr(args, "splitting", None):
        return SplittingData.from_json(json.loads(_text(args.splitting)))
    if getattr(args, "fixture", None):
        S = builtin(args.fixture).splitting
        if S is None:
            raise UsageError(f"fixture {args.fixture!r} carries no splitting")
        return S
    raise UsageError("give --splitting or --fixture")


def _representation(args, P) -> Representation:
    spec = getattr(args, "rep", None) or "trivial"
    if spec == "trivial":
        return trivial_rep(P, ExactField.from_spec(args.field))
    r = Representation.from_json(json.loads(_text(spec)))
    if not verify(P, r):
        raise UsageError("representation does not satisfy the relators")
    return r


def _bounds(res) -> dict:
    if res.is_zero:
        return {"genus": None, "rank": None}
    return {"genus": genus_bound_from_degree(res.degree, res.dimension),
            "rank": rank_bound_from_degree(res.degree, res.dimension)}


def cmd_parse(args):
    P, _ = _presentation(args)
    return _pres_json(P)


def cmd_abelianize(args):
    P, _ = _presentation(args)
    return abelianize(P).to_json()


def cmd_fox(args):
    P, eps = _presentation(args)
    J = fox_jacobian(P)
    out = {
        "generators": list(P.generators),
        "rows": [{"relator": str(r), "derivatives": [d.to_json() for d in row]}
                 for r, row in zip(P.relators, J)],
    }
    if args.evaluate:
        eps = _epimorphism(args, P, eps)
        alpha = _representation(args, P)
        out["evaluated"] = evaluate_fox_matrix(P, eps, alpha).to_json()
    return out


def cmd_fold(args):
    gens = parse_words(_text(args.gens))
    if not gens:
        raise UsageError("--gens needs at least one word")
    g = fg.stallings_fold(gens)
    out = {
        "rank": g.rank(),
        "is_basis": fg.is_basis(gens),
        "num_vertices": g.num_vertices,
        "graph": g.to_json(),
        "basis": [str(w) for w in g.basis()],
    }
    if args.alphabet:
        alphabet = [s.strip() for s in args.alphabet.split(",") if s.strip()]
        out["index"] = fg.index(g, alphabet)
    if args.member:
        w = parse_word(args.member)
        ok, expr = fg.contains(g, w, rewrite=True)
        out["member"] = {"word": str(w), "contained": ok,
                         "expression": None if expr is None else [list(x) for x in expr]}
    if args.images:
        imgs = parse_words(_text(args.images))
        out["injective"] = fg.free_hom_injective(gens, imgs)
    return out


def cmd_rep_search(args):
    P, _ = _presentation(args)
    reps = search_homs(P, args.dim, args.p, limit=args.limit, workers=args.workers,
                       conjugate_generators=args.conjugate)
    return {"dimension": args.dim, "p": args.p, "count": len(reps),
            "representations": [r.to_json() for r in reps]}


def _wada(args):
    P, eps = _presentation(args)
    eps = _epimorphism(args, P, eps)
    alpha = _representation(args, P)
    return wada_invariant(P, eps, alpha, args.column)


def cmd_wada(args):
    res = _wada(args)
    out = res.to_json()
    out["bounds"] = _bounds(res)
    return out


def cmd_bound(args):
    res = _wada(args)
    if res.is_zero:
        raise ZeroInvariantError("Wada's invariant is zero; no bound is available")
    return {"degree": res.degree, "dimension": res.dimension, **_bounds(res)}


def cmd_hnn_present(args):
    S = _splitting(args)
    P, eps = hnn_presentation(S)
    return {"presentation": _pres_json(P), "eps": eps.to_json(),
            "monomorphism_verified": S.monomorphism_verified}


def cmd_hnn_amalgam(args):
    S = _splitting(args)
    P = amalgam_presentation(S, args.lo, args.hi)
    return {"from": args.lo, "to": args.hi, "presentation": _pres_json(P),
            "abelianization": abelianize(P).to_json()}


def cmd_hnn_induce(args):
    S = induced_splitting(_splitting(args), args.n)
    return {"n": args.n, "splitting": S.to_json(), "d": S.d}


def cmd_hnn_check(args):
    S = _splitting(args)
    P, _ = hnn_presentation(S)
    alpha = _representation(args, P)
    return {"block_structure": verify_fox_block_structure(S, alpha).to_json(),
            "degree_bound": degree_bound_check(S, alpha).to_json()}


def cmd_knot_from_pd(args):
    pd = PDCode.parse(_text(args.pd))
    P, eps = wirtinger_from_pd(pd)
    res = wada_invariant(P, eps, trivial_rep(P, ExactField.from_spec(args.field)))
    return {"pd": pd.to_json(), "presentation": _pres_json(P), "eps": eps.to_json(),
            "alexander": str(res.Q.unit_normal()), "alexander_terms": res.Q.unit_normal().to_json()}


def cmd_fixture(args):
    return builtin(args.name).to_json()


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="knotsplit", description=__doc__.splitlines()[0])
    ap.add_argument("--output", "-o", help="write the JSON report to this file")
    ap.add_argument("--json", action="store_true", help="accepted for compatibility; JSON is the only mode")
    sub = ap.add_subparsers(dest="verb", required=True, metavar="VERB")

    def add(name, fn, help_, pres=False, field=False, rep=False, split=False):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=fn)
        if pres:
            p.add_argument("--pres", help="presentation text, or @file")
            p.add_argument("--fixture", choices=FIXTURE_NAMES)
        if split:
            p.add_argument("--splitting", help="splitting JSON, or @file")
            p.add_argument("--fixture", choices=FIXTURE_NAMES)
        if field:
            p.add_argument("--field", default="q", help="q (default) or fp:P")
        if rep:
            p.add_argument("--rep", default="trivial", help="'trivial' or representation JSON / @file")
        return p

    add("parse", cmd_parse, "parse and normalise a presentation", pres=True)
    add("abelianize", cmd_abelianize, "abelianization via Smith normal form", pres=True)
    p = add("fox", cmd_fox, "Fox Jacobian", pres=True, field=True, rep=True)
    p.add_argument("--evaluate", action="store_true", help="also evaluate under alpha (x) eps")
    p.add_argument("--eps", help="epimorphism JSON {generator: value}")
    p = sub.add_parser("fold", help="Stallings folding of a list of words")
    p.set_defaults(func=cmd_fold)
    p.add_argument("--gens", required=True, help="comma-separated words")
    p.add_argument("--alphabet", help="comma-separated ambient generators (enables index)")
    p.add_argument("--member", help="word to test for membership")
    p.add_argument("--images", help="comma-separated images; checks injectivity of gens -> images")
    p = add("rep-search", cmd_rep_search, "homomorphisms into GL(d, F_p)", pres=True)
    p.add_argument("--dim", type=int, default=1)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--limit", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--conjugate", action="store_true", help="images in one conjugacy class")
    for name, fn, h in (("wada", cmd_wada, "Wada's invariant"), ("bound", cmd_bound, "genus and rank bounds")):
        p = add(name, fn, h, pres=True, field=True, rep=True)
        p.add_argument("--column", help="generator whose Fox column is deleted")
        p.add_argument("--eps", help="epimorphism JSON {generator: value}")
    add("hnn-present", cmd_hnn_present, "presentation of an HNN splitting", split=True)
    p = add("hnn-amalgam", cmd_hnn_amalgam, "amalgam A_[n,m]", split=True)
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p = add("hnn-induce", cmd_hnn_induce, "induced splitting over A_[0,n]", split=True)
    p.add_argument("--n", type=int, required=True)
    add("hnn-check", cmd_hnn_check, "block-structure and degree-bound checks", split=True, field=True, rep=True)
    p = add("knot-from-pd", cmd_knot_from_pd, "Wirtinger presentation from a PD code", field=True)
    p.add_argument("--pd", required=True, help="PD text or JSON, or @file")
    p = sub.add_parser("fixture", help="show a built-in fixture")
    p.set_defaults(func=cmd_fixture)
    p.add_argument("name", choices=FIXTURE_NAMES)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        report = args.func(args)
    except (ParseError, AlphabetError, UsageError, json.JSONDecodeError, OSError) as e:
        print(f"knotsplit: error: {e}", file=sys.stderr)
        return 2
    except (KnotsplitError, ValueError, ArithmeticError) as e:
        print(f"knotsplit: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    text = json.dumps({"verb": args.verb, "result": report}, sort_keys=True, indent=2)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    print(f"knotsplit {args.verb}: ok", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
