"""Command-line front end.

    qrichardson lattice analyze --input lattice.json
    qrichardson grass table --m 2 --n 4
    qrichardson richardson gk --alpha 1,3 --beta 2,4
    qrichardson selftest

Output is canonical JSON (sorted keys) unless ``--format text``.  Exit codes:
0 ok, 2 invalid input, 3 invariant violation, 4 reconstruction failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import acceptance, grassmann, lattice, richardson, toric
from .degeneration import extract_graded, verify_degeneration
from .errors import InvalidInput, ParseError, QRError
from .grassmann import StdExpansion, StraighteningTable
from .scalars import parse_scalar

# -- serialisation helpers ------------------------------------------------------------


def tup(x):
    """(1, 3) -> "1,3"; other ids pass through."""
    if isinstance(x, tuple):
        return ",".join(map(str, x))
    return x


def untup(s):
    if isinstance(s, str) and s and all(p.strip().lstrip("-").isdigit() for p in s.split(",")):
        return tuple(int(p) for p in s.split(","))
    return s


def mono_key(mono):
    return "|".join(tup(x) for x in mono)


def parse_mono(key):
    return tuple(untup(p) for p in key.split("|")) if key else ()


def scalar_str(x):
    return str(x)


def parse_q(text):
    if text is None or text == "symbolic":
        return None
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"--q must be a nonzero rational or 'symbolic', got {text!r}") from exc
    if value == 0:
        raise ParseError("--q must be nonzero")
    return value


def parse_scalar_for(q, text):
    return parse_scalar(text) if q is None else Fraction(text)


def parse_index(text, name):
    try:
        return tuple(int(p) for p in text.split(","))
    except (AttributeError, ValueError) as exc:
        raise ParseError(f"{name} must look like 1,3; got {text!r}") from exc


def expansion_to_json(exp):
    return {mono_key(k): scalar_str(v) for k, v in exp.terms.items()}


def expansion_from_json(obj, q):
    return StdExpansion({parse_mono(k): parse_scalar_for(q, v) for k, v in obj.items()})


def table_to_json(table):
    return {
        "m": table.m,
        "n": table.n,
        "q": "symbolic" if table.q is None else str(table.q),
        "straightening": {mono_key(k): expansion_to_json(v) for k, v in table.straightening.items()},
        "commutation": {
            mono_key(k): {"factor": scalar_str(p), "tail": expansion_to_json(t)}
            for k, (p, t) in table.commutation.items()
        },
    }


def table_from_json(obj):
    q = parse_q(obj["q"])
    return StraighteningTable(
        obj["m"], obj["n"], q,
        {parse_mono(k): expansion_from_json(v, q) for k, v in obj["straightening"].items()},
        {parse_mono(k): (parse_scalar_for(q, v["factor"]), expansion_from_json(v["tail"], q))
         for k, v in obj["commutation"].items()},
    )


def lattice_to_json(L):
    return {
        "elements": [tup(x) for x in L.elements],
        "covers": [[tup(a), tup(b)] for a, b in L.covers()],
    }


def lattice_from_json(obj):
    """Accepts the covers format or the chain-product format; returns (L, R)."""
    if "chain_product" in obj:
        sizes = tuple(obj["chain_product"]["sizes"])
        members = obj.get("members")
        members = None if members is None else [tuple(x) for x in members]
        L = lattice.chain_product(sizes, members)
        return L, lattice.identity_realization(L, sizes)
    if "elements" not in obj or "covers" not in obj:
        raise ParseError("lattice JSON needs 'elements' and 'covers' or 'chain_product'")
    elements = [untup(x) for x in obj["elements"]]
    covers = [(untup(a), untup(b)) for a, b in obj["covers"]]
    L = lattice.FiniteLattice.from_covers(elements, covers)
    return L, None


def realization_to_json(R):
    return {
        "sizes": list(R.sizes), "d": R.d, "N": R.N,
        "increasing_images": R.increasing_images,
        "iota": {str(tup(x)): list(v) for x, v in R.iota.items()},
    }


def presentation_to_json(P):
    L = P.lattice
    return {
        "lattice": lattice_to_json(L),
        "q": [[tup(a), tup(b), str(v)] for (a, b), v in sorted(P.qmap.items(), key=_pair_key(P))],
        "c": [[tup(a), tup(b), str(v)] for (a, b), v in sorted(P.cmap.items(), key=_pair_key(P))],
        "symbolic": P.symbolic,
    }


def _pair_key(P):
    return lambda kv: (P.position[kv[0][0]], P.position[kv[0][1]])


def presentation_from_json(obj):
    L, R = lattice_from_json(obj["lattice"])
    if R is None:
        R = lattice.canonical_realization(L)
    qmap = {(untup(a), untup(b)): parse_scalar(s) for a, b, s in obj["q"]}
    cmap = {(untup(a), untup(b)): parse_scalar(s) for a, b, s in obj["c"]}
    return toric.ToricPresentation(L, R, qmap, cmap)


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


# -- commands -----------------------------------------------------------------------------


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise InvalidInput(f"--{name} is required for this command")


def cmd_lattice_analyze(args):
    if args.input:
        L, R = lattice_from_json(_load_json(args.input))
    else:
        _require(args, "m", "n")
        L, R = grassmann.plucker_poset(args.m, args.n)
    L.validate()
    L.check_bounds()
    distributive = L.is_distributive()
    irr, irr_plus = lattice.join_irreducibles(L)
    out = {
        "lattice": lattice_to_json(L),
        "size": len(L),
        "rank": L.rank(),
        "distributive": distributive,
        "irr": [tup(x) for x in irr],
        "irr_plus": [tup(x) for x in irr_plus],
    }
    if distributive:
        cert = lattice.birkhoff_check(L)
        out["birkhoff"] = {str(tup(x)): sorted(str(tup(p)) for p in s) for x, s in cert.mapping.items()}
        out["canonical_realization"] = realization_to_json(lattice.canonical_realization(L))
    if R is not None:
        R.validate(L)
        out["realization"] = realization_to_json(R)
        out["omega"] = {str(tup(x)): lattice.omega(R, x) for x in L.elements}
    return out


def cmd_grass_table(args):
    _require(args, "m", "n")
    return table_to_json(grassmann.straightening_table(args.m, args.n, parse_q(args.q)))


def cmd_grass_verify(args):
    _require(args, "m", "n")
    rep = grassmann.verify_symmetric_asl(args.m, args.n, args.degree or 2, parse_q(args.q))
    checked, muir_fail = (0, [])
    if args.m >= 2:
        checked, muir_fail = grassmann.muir_consistency(args.m - 1, args.m, args.n, parse_q(args.q))
    out = {
        "m": args.m, "n": args.n,
        "standard_monomials": {str(d): c for d, c in rep.degree_counts.items()},
        "pbw_ranks": {str(d): r for d, r in rep.degree_ranks.items()},
        "incomparable_ordered_pairs": rep.incomparable_pairs,
        "muir_checked": checked,
        "violations": rep.violations + [f"Muir mismatch at {f}" for f in muir_fail],
    }
    out["ok"] = not out["violations"]
    return out


def _richardson_from(args):
    _require(args, "alpha", "beta")
    alpha = parse_index(args.alpha, "--alpha")
    beta = parse_index(args.beta, "--beta")
    m = args.m if args.m is not None else len(alpha)
    n = args.n if args.n is not None else max(max(beta), max(alpha), m)
    return richardson.richardson(m, n, alpha, beta, parse_q(args.q))


def cmd_richardson(args):
    R = _richardson_from(args)
    base = {"m": R.m, "n": R.n, "alpha": tup(R.alpha), "beta": tup(R.beta),
            "interval": [tup(x) for x in R.interval]}
    if args.action == "gk":
        base["gk_dim"] = richardson.gk_dim(R)
        base["rank"] = R.lattice.rank()
        base["coset_lengths"] = [richardson.coset_length(R.alpha), richardson.coset_length(R.beta)]
    else:
        data = richardson.hilbert(R, args.degree)
        base.update({"h": data.h, "krull": data.krull, "numerator": data.numerator,
                     "palindromic": data.palindromic})
        if args.action == "gorenstein":
            base["gorenstein_indicator"] = data.palindromic
            base["criterion"] = "palindromic Hilbert numerator"
            base["join_irreducibles_pure"] = richardson.hibi_gorenstein(R.lattice)
    return base


def cmd_degenerate(args):
    _require(args, "m", "n")
    q = parse_q(args.q)
    ext = extract_graded(grassmann.straightening_table(args.m, args.n, q))
    conf = toric.confluence_certify(ext.presentation)
    rep = verify_degeneration(args.m, args.n, args.degree or 2, q)
    return {
        "m": args.m, "n": args.n,
        "M": ext.filtration.M,
        "weights": {tup(x): w for x, w in ext.filtration.weights.items()},
        "presentation": presentation_to_json(ext.presentation),
        "margins": {f"{k[0]}:{tup(k[1])}|{tup(k[2])}": v for k, v in ext.margins.items()},
        "confluent": conf.ok,
        "confluence_words": conf.words_checked,
        "dimension_tables": {str(d): {str(w): c for w, c in t.items()} for d, t in rep.dimension_tables.items()},
        "census_tables": {str(d): {str(w): c for w, c in t.items()} for d, t in rep.census_tables.items()},
        "violations": rep.violations,
        "ok": rep.ok and conf.ok,
    }


def _presentation_from(args):
    if args.input:
        obj = _load_json(args.input)
        if "q" in obj:
            return presentation_from_json(obj)
        L, R = lattice_from_json(obj)
        return toric.symbolic_presentation(L, R)
    _require(args, "m", "n")
    return extract_graded(grassmann.straightening_table(args.m, args.n, parse_q(args.q))).presentation


def _parse_word(text, P):
    if not text:
        raise InvalidInput("--word is required, e.g. --word '1,4;2,3'")
    word = []
    for part in text.split(";"):
        x = untup(part.strip())
        if x not in P.position and isinstance(x, str) and x.isdigit():
            x = int(x)
        if x not in P.position:
            raise InvalidInput(f"{part!r} is not a lattice element")
        word.append(x)
    return word


def cmd_toric(args):
    P = _presentation_from(args)
    if args.action == "nf":
        nf = toric.toric_nf(P, _parse_word(args.word, P))
        return {"scalar": str(nf.scalar), "monomial": [tup(x) for x in nf.monomial]}
    if args.action == "certify":
        rep = toric.confluence_certify(P, validate=not P.symbolic)
        return {
            "words_checked": rep.words_checked,
            "confluent": rep.ok,
            "failures": [[ [tup(x) for x in w], str(a[0]), str(b[0])] for w, a, b in rep.failures[:20]],
            "gk_dim": toric.gkdim_toric(P),
        }
    torus, images = toric.torus_embedding(P)
    checked, failures = toric.verify_torus_relations(P, torus, images)
    return {
        "generators": [tup(g) for g in torus.gens],
        "images": {str(tup(x)): {"scalar": str(v.scalar), "exponents": list(v.exps)} for x, v in images.items()},
        "relations_checked": checked,
        "failures": [[k, tup(a), tup(b)] for k, a, b in failures],
        "gk_dim": toric.gkdim_toric(P),
    }


def cmd_selftest(args):
    results = acceptance.run_all(seed=args.seed)
    return {
        "criteria": [
            {"number": r.number, "title": r.title, "passed": r.passed, "detail": r.detail}
            for r in results
        ],
        "ok": all(r.passed for r in results),
    }


# -- driver --------------------------------------------------------------------------------


def _common(p):
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.add_argument("--degree", type=int)
    p.add_argument("--q", default="symbolic")
    p.add_argument("--out")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--input")
    p.add_argument("--word")


def build_parser():
    parser = argparse.ArgumentParser(prog="qrichardson", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="group", required=True)
    lat = sub.add_parser("lattice").add_subparsers(dest="action", required=True)
    _common(lat.add_parser("analyze"))
    gr = sub.add_parser("grass").add_subparsers(dest="action", required=True)
    for name in ("table", "verify"):
        _common(gr.add_parser(name))
    ri = sub.add_parser("richardson").add_subparsers(dest="action", required=True)
    for name in ("hilbert", "gk", "gorenstein"):
        _common(ri.add_parser(name))
    _common(sub.add_parser("degenerate"))
    to = sub.add_parser("toric").add_subparsers(dest="action", required=True)
    for name in ("nf", "certify", "torus"):
        _common(to.add_parser(name))
    _common(sub.add_parser("selftest"))
    return parser


HANDLERS = {
    ("lattice", "analyze"): cmd_lattice_analyze,
    ("grass", "table"): cmd_grass_table,
    ("grass", "verify"): cmd_grass_verify,
    ("richardson", None): cmd_richardson,
    ("degenerate", None): cmd_degenerate,
    ("toric", None): cmd_toric,
    ("selftest", None): cmd_selftest,
}


def _text(obj, indent=""):
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{indent}{k}:")
                lines.extend(_text(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {v}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, dict):
                lines.append(f"{indent}-")
                lines.extend(_text(v, indent + "  "))
            else:
                lines.append(f"{indent}- {v}")
    else:
        lines.append(f"{indent}{obj}")
    return lines


def main(argv=None):
    args = build_parser().parse_args(argv)
    if not hasattr(args, "action"):
        args.action = None
    handler = HANDLERS.get((args.group, args.action)) or HANDLERS[(args.group, None)]
    try:
        result = handler(args)
    except QRError as exc:
        err = {"error": type(exc).__name__, "message": str(exc), "exit_code": exc.exit_code}
        print(dumps(err), file=sys.stderr)
        return exc.exit_code
    text = dumps(result) if args.format == "json" else "\n".join(_text(result))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if isinstance(result, dict) and result.get("ok") is False:
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
