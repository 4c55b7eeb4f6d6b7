"""Command-line front end.

Every subcommand is a thin shell over one library call.  Exit codes
follow one contract throughout: 0 for success, 1 for a verification
failure (only the family sweep can produce one), 2 for bad input of
any kind.  With --json each command prints a single JSON object with
sorted keys, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .matrices import IntegerMatrix, cokernel, smith_normal_form
from .slopes import Slope, SlopeInvolution, distance, fixed_slopes
from .surgery import (
    FramedLink,
    build_presentation,
    mn_framed_link,
    verify_family,
)
from .twobridge import (
    ConwayWord,
    SchubertForm,
    continued_fraction,
    is_achiral_lens,
    schubert_equivalent,
)


def _emit(args, payload: dict, text: str):
    """Print the machine- or human-readable form of one result."""
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    elif text:
        print(text)


def _read_doc(path: str) -> dict:
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [
        max(len(header[j]), *(len(r[j]) for r in rows)) if rows else len(header[j])
        for j in range(len(header))
    ]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for r in rows:
        lines.append("  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip())
    return "\n".join(lines)


# ----------------------------------------------------------------------
# subcommand handlers
# ----------------------------------------------------------------------

def _cmd_slope(args) -> int:
    if args.action == "normalize":
        s = Slope(args.ints[0], args.ints[1])
        _emit(args, {"slope": str(s)}, str(s))
    elif args.action == "dist":
        d = distance(Slope.parse(args.slopes[0]), Slope.parse(args.slopes[1]))
        _emit(args, {"distance": d}, str(d))
    elif args.action == "apply":
        inv = SlopeInvolution(*args.ints)
        s = inv.apply(Slope.parse(args.slopes[0]))
        _emit(args, {"slope": str(s)}, str(s))
    else:  # fixed
        inv = SlopeInvolution(*args.ints)
        found = fixed_slopes(inv, args.bound)
        payload = {
            "bound": args.bound,
            "is_involution": inv.is_involution(),
            "slopes": [str(s) for s in found],
        }
        _emit(args, payload, "\n".join(str(s) for s in found))
    return 0


def _parse_word(parts: list[str]) -> ConwayWord:
    return ConwayWord.parse(" ".join(parts))


def _cmd_cfrac(args) -> int:
    word = _parse_word(args.entries)
    s = continued_fraction(word)
    _emit(args, {"word": list(word.entries), "slope": str(s)}, str(s))
    return 0


def _cmd_twobridge(args) -> int:
    word = _parse_word(args.entries)
    s = continued_fraction(word)
    form = SchubertForm.from_slope(s)
    parity = "knot" if form.is_knot else "2-component link"
    payload = {
        "fraction": str(s),
        "schubert": str(form),
        "p": form.p,
        "q": form.q,
        "components": form.components,
    }
    text = "\n".join(
        [
            f"fraction: {s}",
            f"schubert: {form}",
            f"components: {form.components} ({parity})",
        ]
    )
    _emit(args, payload, text)
    return 0


def _cmd_lens(args) -> int:
    form = SchubertForm(args.p, args.q)
    parity = "knot" if form.is_knot else "2-component link"
    achiral = is_achiral_lens(form)
    payload = {
        "schubert": str(form),
        "p": form.p,
        "q": form.q,
        "components": form.components,
        "mirror": str(form.mirror()),
        "achiral": achiral,
    }
    lines = [
        f"lens: {form}",
        f"components: {form.components} ({parity})",
        f"mirror: {form.mirror()}",
        f"achiral: {'yes' if achiral else 'no'}",
    ]
    if args.compare:
        other = SchubertForm(args.compare[0], args.compare[1])
        if schubert_equivalent(form, other):
            verdict = "equivalent (orientation-preserving)"
        elif schubert_equivalent(form, other.mirror()):
            verdict = "equivalent (mirror pair)"
        else:
            verdict = "not equivalent"
        payload["compare"] = {
            "schubert": str(other),
            "equivalent": verdict != "not equivalent",
            "verdict": verdict,
        }
        lines.append(f"compare {other}: {verdict}")
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_snf(args) -> int:
    m = IntegerMatrix.from_doc(_read_doc(args.input))
    snf = smith_normal_form(m)
    group = cokernel(m)
    payload = {
        "diagonal": [str(d) for d in snf.diagonal],
        "rank": snf.rank,
        "cokernel": str(group),
        "u": snf.u.to_doc(),
        "d": snf.d.to_doc(),
        "v": snf.v.to_doc(),
    }
    text = "\n".join(
        [
            "diagonal: " + " ".join(str(d) for d in snf.diagonal),
            f"cokernel: {group}",
        ]
    )
    _emit(args, payload, text)
    return 0


def _load_surgery(args):
    if args.input and args.template:
        raise ValueError("choose either --input or --template, not both")
    if args.template:
        if args.template == "mn":
            if args.twists is None:
                raise ValueError("the mn template needs --twists")
            return mn_framed_link(args.twists)
        if args.template == "unknot":
            if args.twists is not None:
                raise ValueError("--twists only applies to the mn template")
            return FramedLink(((0,),)), {}
        raise ValueError(f"unknown template {args.template!r}")
    if args.input:
        if args.twists is not None:
            raise ValueError("--twists only applies to the mn template")
        return FramedLink.from_doc(_read_doc(args.input))
    raise ValueError("need an --input document or a --template name")


def _cmd_surgery(args) -> int:
    link, fills = _load_surgery(args)
    for component in args.drill or ():
        i = link.index(component)
        if i not in fills:
            raise ValueError(
                f"cannot drill {link.labels[i]}: component is not filled"
            )
        del fills[i]
    for item in args.fill or ():
        component, sep, slope = item.partition("=")
        if not sep:
            raise ValueError(f"fill {item!r} is not of the form COMPONENT=P/Q")
        fills[link.index(component)] = Slope.parse(slope)
    group = cokernel(build_presentation(link, fills))
    payload = {
        "components": link.num_components,
        "fillings": {link.labels[i]: str(s) for i, s in sorted(fills.items())},
        "homology": str(group),
        "free_rank": group.free_rank,
        "invariant_factors": [str(d) for d in group.invariant_factors],
    }
    _emit(args, payload, str(group))
    return 0


def _cmd_family(args) -> int:
    reports, failures = verify_family(args.n_min, args.n_max)
    header = ["n", "schubert", "comps", "t", "p", "chirality",
              "null-homology", "swap"]
    rows = [
        [
            str(r.n),
            str(r.schubert),
            str(r.components),
            str(r.torsion),
            str(r.lens_order),
            r.chirality,
            r.null_homology,
            "yes" if r.distance_one_swap else "no",
        ]
        for r in reports
    ]
    payload = {
        "range": [args.n_min, args.n_max],
        "reports": [r.as_dict() for r in reports],
        "failures": failures,
        "ok": not failures,
    }
    if args.json:
        _emit(args, payload, "")
    else:
        print(_table(header, rows))
        if failures:
            print(f"FAILED: {failures[0]}")
        else:
            print(f"all checks passed ({len(reports)} reports)")
    return 1 if failures else 0


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    # accept bare negative slopes like -2/3 as positionals; stock
    # argparse only waves through plain negative numbers
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d+(/-?\d+)?$")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="dehnkit",
        description="exact slope, two-bridge, and surgery homology toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="machine-readable output"
    )

    p = sub.add_parser("slope", parents=[common],
                       help="normalize, distance, coordinate changes")
    slope_sub = p.add_subparsers(dest="action", required=True)
    q = slope_sub.add_parser("normalize", parents=[common])
    q.add_argument("ints", type=int, nargs=2, metavar="INT")
    q.set_defaults(func=_cmd_slope)
    q = slope_sub.add_parser("dist", parents=[common])
    q.add_argument("slopes", nargs=2, metavar="SLOPE")
    q.set_defaults(func=_cmd_slope)
    q = slope_sub.add_parser("apply", parents=[common])
    q.add_argument("ints", type=int, nargs=4, metavar="INT")
    q.add_argument("slopes", nargs=1, metavar="SLOPE")
    q.set_defaults(func=_cmd_slope)
    q = slope_sub.add_parser("fixed", parents=[common])
    q.add_argument("ints", type=int, nargs=4, metavar="INT")
    q.add_argument("--bound", type=int, default=100)
    q.set_defaults(func=_cmd_slope)

    p = sub.add_parser("cfrac", parents=[common],
                       help="evaluate a Conway word to a fraction")
    p.add_argument("entries", nargs="+", metavar="INT")
    p.set_defaults(func=_cmd_cfrac)

    p = sub.add_parser("twobridge", parents=[common],
                       help="Conway word to Schubert normal form")
    p.add_argument("entries", nargs="+", metavar="INT")
    p.set_defaults(func=_cmd_twobridge)

    p = sub.add_parser("lens", parents=[common],
                       help="classify S(p,q): parity, mirror, achirality")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--compare", type=int, nargs=2, metavar=("P", "Q"))
    p.set_defaults(func=_cmd_lens)

    p = sub.add_parser("snf", parents=[common],
                       help="Smith normal form of a matrix document")
    p.add_argument("--input", required=True, metavar="FILE",
                   help="matrix document, '-' for stdin")
    p.set_defaults(func=_cmd_snf)

    p = sub.add_parser("surgery", parents=[common],
                       help="first homology of a filled surgery description")
    p.add_argument("--input", metavar="FILE",
                   help="framed-link document, '-' for stdin")
    p.add_argument("--template", metavar="NAME",
                   help="built-in link: mn (needs --twists) or unknot")
    p.add_argument("-n", "--twists", type=int,
                   help="parameter n for the mn template")
    p.add_argument("--fill", action="append", metavar="COMPONENT=P/Q",
                   help="set or override one filling slope")
    p.add_argument("--drill", action="append", metavar="COMPONENT",
                   help="remove the filling of a component")
    p.set_defaults(func=_cmd_surgery)

    p = sub.add_parser("family", parents=[common],
                       help="certify the knot exterior family over a range")
    p.add_argument("n_min", type=int, nargs="?", default=-10)
    p.add_argument("n_max", type=int, nargs="?", default=10)
    p.set_defaults(func=_cmd_family)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run():
    sys.exit(main())
