"""Command-line interface.

Exit codes: 0 success / verdict true, 1 verdict false, 2 usage or parse
error, 3 domain error.  Results go to stdout, diagnostics to stderr.
Words may be given inline or as ``@path`` to read them from a file.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import amicability, certify, georep, iet, morphism, words
from .errors import DomainError
from .qfield import Quadratic, parse_quadratic

DEFAULT_HALF_WINDOW = 2000
DEFAULT_NMAX = 15


class UsageError(Exception):
    pass


def _word(text: str) -> str:
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
    return "".join(text.split())


def _quad(text: str) -> Quadratic:
    try:
        return parse_quadratic(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _morph(text: str) -> morphism.Morphism:
    try:
        return morphism.Morphism.parse(text)
    except (ValueError, DomainError) as exc:
        raise UsageError(str(exc)) from None


def _params(args) -> iet.IetParams:
    return iet.IetParams(_quad(args.eps), _quad(args.l), _quad(args.c))


def _window_text(w: words.BiWindow) -> str:
    return w.right if not w.left else str(w)


def _jsonable(x):
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


class Outcome:
    def __init__(self, result, witnesses=None, verdict=None, text=None):
        self.result = result
        self.witnesses = witnesses or {}
        self.verdict = verdict
        self.text = text


def _certificate(cert: certify.Certificate) -> Outcome:
    lines = [f"verdict: {cert.verdict}"]
    if cert.failed_clause:
        lines.append(f"failed clause: {cert.failed_clause}")
    for name, value in cert.witnesses.items():
        approx = f"  (~{value.approx(15)})" if isinstance(value, Quadratic) else ""
        lines.append(f"  {name:<14} {value}{approx}")
    return Outcome(
        {"verdict": cert.verdict, "failed_clause": cert.failed_clause},
        cert.witnesses,
        cert.verdict,
        "\n".join(lines),
    )


# -- commands -------------------------------------------------------------------

def cmd_gen3iet(args):
    w = iet.code(_params(args), args.frm, args.to)
    return Outcome(_window_text(w))


def cmd_gensturm(args):
    s = iet.SturmianParams(_quad(args.alpha), _quad(args.beta))
    return Outcome(_window_text(iet.two_iet_code(s, args.frm, args.to)))


def cmd_complexity(args):
    if args.word is not None:
        w = _word(args.word)
    elif args.eps and args.l and args.c:
        w = iet.code(_params(args), -args.half, args.half).word
    else:
        raise UsageError("give a WORD or all of --eps, --l, --c")
    profile = words.complexity_profile(w, args.nmax)
    label = words.classify_profile(profile)
    return Outcome({"profile": profile, "class": label}, text=f"{' '.join(map(str, profile))}\n{label}")


def cmd_amicable(args):
    ok = amicability.is_amicable(_word(args.u), _word(args.v))
    return Outcome({"amicable": ok}, verdict=ok, text=str(ok).lower())


def cmd_ternarize_words(args):
    return Outcome(amicability.ternarize_words(_word(args.u), _word(args.v)))


def cmd_ternarize_morph(args):
    return Outcome(str(amicability.ternarize_morphisms(_morph(args.phi), _morph(args.psi))))


def cmd_fixedpoint(args):
    if args.morph:
        return Outcome(morphism.fixed_point_prefix(_morph(args.morph), args.len, args.seed))
    if args.phi and args.psi:
        fp = amicability.ternarization_fixed_point(_morph(args.phi), _morph(args.psi), args.len)
        wit = {"eta": str(fp.eta), "case": fp.case, "seed": fp.seed}
        return Outcome(fp.word, wit, text=f"eta: {fp.eta}\ncase {fp.case}, seed {fp.seed}\n{fp.word}")
    raise UsageError("give --morph, or both --phi and --psi")


def cmd_certify_sturm(args):
    return _certificate(certify.yasutomi_check(_quad(args.alpha), _quad(args.beta)))


def cmd_certify_3iet(args):
    return _certificate(certify.invariance_3iet_check(_params(args)))


def cmd_matrix_check(args):
    eta = _morph(args.eta)
    if args.l is not None or args.c is not None:
        if args.l is None or args.c is None:
            raise UsageError("--l and --c go together")
        return _certificate(certify.spectral_orbit_check(eta, _params(args)))
    return _certificate(certify.matrix_necessary_check(eta, _quad(args.eps)))


def cmd_decompose(args):
    d = certify.decompose(_morph(args.eta))
    result = {"power": d.power, "phi": str(d.phi), "psi": str(d.psi)}
    sign = {1: "+", -1: "-", 0: "?"}[d.lambda_conjugate_sign]
    text = f"power: {d.power}\nphi: {d.phi}\npsi: {d.psi}\nsign(lam'): {sign}"
    return Outcome(result, {"lambda_conjugate_sign": sign}, text=text)


def cmd_infer_eps(args):
    return Outcome(str(certify.infer_epsilon(_morph(args.eta))))


def cmd_selfsim(args):
    eta = _morph(args.eta)
    lengths = georep.lengths_from_perron(eta)
    lam = morphism.perron(eta).lam ** args.power
    rep = georep.build(morphism.fixed_point_prefix(eta, args.len, args.seed), lengths)
    if args.dump:
        return Outcome(None, text=georep.dump_points(rep))
    recovered = georep.substitution_from_geometry(rep, lam)
    wit = {"lam": lam, **{f"ell_{a}": v for a, v in lengths.lengths}}
    text = f"lam: {lam}\n" + "\n".join(f"ell({a}) = {v}" for a, v in lengths.lengths) + f"\nrecovered: {recovered}"
    return Outcome(str(recovered), wit, recovered == eta**args.power, text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="threeiet", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def params(p, required=True):
        p.add_argument("--eps", required=required)
        p.add_argument("--l", required=required)
        p.add_argument("--c", required=required)

    def window(p):
        p.add_argument("--from", dest="frm", type=int, default=0)
        p.add_argument("--to", type=int, default=DEFAULT_HALF_WINDOW)

    p = sub.add_parser("gen3iet", help="code the orbit of 0 under a 3iet")
    params(p)
    window(p)
    p.set_defaults(func=cmd_gen3iet)

    p = sub.add_parser("gensturm", help="code a two-interval exchange")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    window(p)
    p.set_defaults(func=cmd_gensturm)

    p = sub.add_parser("complexity", help="factor complexity of a word or 3iet window")
    p.add_argument("word", nargs="?")
    params(p, required=False)
    p.add_argument("--half", type=int, default=DEFAULT_HALF_WINDOW)
    p.add_argument("--nmax", type=int, default=DEFAULT_NMAX)
    p.set_defaults(func=cmd_complexity)

    for name, func, helptext in (
        ("amicable", cmd_amicable, "is U amicable to V"),
        ("ternarize-words", cmd_ternarize_words, "ternarization of two words"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("u")
        p.add_argument("v")
        p.set_defaults(func=func)

    p = sub.add_parser("ternarize-morph", help="ternarization of two morphisms")
    p.add_argument("--phi", required=True)
    p.add_argument("--psi", required=True)
    p.set_defaults(func=cmd_ternarize_morph)

    p = sub.add_parser("fixedpoint", help="fixed-point prefix")
    p.add_argument("--morph")
    p.add_argument("--phi")
    p.add_argument("--psi")
    p.add_argument("--seed")
    p.add_argument("--len", type=int, default=100)
    p.set_defaults(func=cmd_fixedpoint)

    p = sub.add_parser("certify-sturm", help="invariance criterion for a Sturmian word")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.set_defaults(func=cmd_certify_sturm)

    p = sub.add_parser("certify-3iet", help="invariance criterion for a 3iet word")
    params(p)
    p.set_defaults(func=cmd_certify_3iet)

    p = sub.add_parser("matrix-check", help="matrix conditions; add --l/--c for lattice conditions")
    p.add_argument("--eta", required=True)
    params(p, required=False)
    p.set_defaults(func=cmd_matrix_check)

    for name, func, helptext in (
        ("decompose", cmd_decompose, "amicable pair behind a ternary substitution"),
        ("infer-eps", cmd_infer_eps, "slope parameter of a ternary substitution"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--eta", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("selfsim", help="geometric representation and substitution recovery")
    p.add_argument("--eta", required=True)
    p.add_argument("--len", type=int, default=300)
    p.add_argument("--seed")
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--dump", action="store_true", help="print index, exact and approximate points")
    p.set_defaults(func=cmd_selfsim)
    return parser


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "--c -1/3" as two options; rewrite to "--c=-1/3"
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else ""
        if tok.startswith("--") and "=" not in tok and nxt[:1] == "-" and nxt[1:2].isdigit():
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_glue_negative_values(argv))
    if args.command == "matrix-check" and args.eps is None:
        parser.error("matrix-check needs --eps")
    try:
        out = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.format == "json":
        inputs = {k: v for k, v in vars(args).items() if k not in ("func", "format", "command")}
        payload = {
            "command": args.command,
            "inputs": _jsonable(inputs),
            "result": _jsonable(out.result),
            "witnesses": _jsonable(out.witnesses),
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(out.text if out.text is not None else out.result)
    return 1 if out.verdict is False else 0


if __name__ == "__main__":
    sys.exit(main())
