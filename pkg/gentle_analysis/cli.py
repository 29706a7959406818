#! /usr/bin/env python

"""
gentle-analysis command line

    gentle-analysis validate  --surface S
    gentle-analysis quiver    --surface S
    gentle-analysis cuts      --enumerate S [--a A --b B --report] [--threads N]
    gentle-analysis degree    --surface S --cut D --curve C
    gentle-analysis invariant --surface S --cut D --a A --b B
    gentle-analysis ag        --surface S --cut D
    gentle-analysis equiv     --surface S --cut D --a A --b B
                              --surface2 S2 --cut2 D2 --a2 A2 --b2 B2 [--advisory]
    gentle-analysis family    --name p2|nested|bm0|bm0prime [--cut K] [--s S] [--r R] --out DIR
    gentle-analysis oracle    --word W [--move M --position K --roles 123 --samples N]
    gentle-analysis oracle    --normal-form L M

Every subcommand takes --format text|machine and --verbose.  Exit codes:
0 success, 1 bad input, 2 internal invariant violation.
"""

import argparse
import contextlib
import logging
import sys

import numpy as np

from gentle_analysis import SurfaceData
from gentle_analysis.gentle_core import GradedAlgebra, CutSurvey
from gentle_analysis.misctools.utils import SurfaceError, InvariantViolation, configure_logging
from gentle_analysis.misctools.family_definitions import family_fixture, FAMILIES
from gentle_analysis.triangulation.surface import profile, build_quiver
from gentle_analysis.triangulation.grading import enumerate_admissible_cuts
from gentle_analysis.triangulation.curves import degree
from gentle_analysis.modeling.invariants import (derived_equivalent_torus, advisory_ag_equal,
                                                 require_torus)
from gentle_analysis.modeling.threads import format_pairs
from gentle_analysis.modeling import torusword

_default_log = logging.getLogger('gentle_analysis.cli')


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise SurfaceError("usage: {0}".format(message))


def _flag(value):
    return 'true' if value else 'false'


def _pairs_doc(counter):
    return [[n, m, k] for (n, m), k in sorted(counter.items())]


def _load_algebra(args, suffix=''):
    surface = SurfaceData.read_surface(getattr(args, 'surface' + suffix))
    d = SurfaceData.read_degree(getattr(args, 'cut' + suffix))
    a = getattr(args, 'a' + suffix, None)
    b = getattr(args, 'b' + suffix, None)
    return GradedAlgebra(surface, d,
                         a=SurfaceData.read_curve(a) if a else None,
                         b=SurfaceData.read_curve(b) if b else None)


def cmd_validate(args):
    prof = profile(SurfaceData.read_surface(args.surface))
    fields = prof._asdict()
    line = "valid " + ' '.join("{0}={1}".format(k, v) for k, v in fields.items())
    return [line], {"valid": True, "profile": dict(fields)}


def cmd_quiver(args):
    quiver = build_quiver(SurfaceData.read_surface(args.surface))
    lines = ["vertices=" + ','.join(str(v) for v in quiver.vertices)]
    lines += ["arrow={0} {1}->{2} triangle={3} slot={4}".format(*a) for a in quiver.arrows]
    lines += ["internal=" + ','.join(str(x) for x in cycle) for cycle in quiver.internal_triangles]
    report = {"vertices": list(quiver.vertices),
              "arrows": [a._asdict() for a in quiver.arrows],
              "internal_triangles": [list(c) for c in quiver.internal_triangles]}
    return lines, report


def cmd_cuts(args):
    surface = SurfaceData.read_surface(args.enumerate)
    if not args.report:
        quiver = build_quiver(surface)
        cuts = [d.choice_string(quiver) for d in enumerate_admissible_cuts(quiver)]
        return ["cut=" + c for c in cuts] + ["count={0}".format(len(cuts))], \
            {"cuts": cuts, "count": len(cuts)}
    if not (args.a and args.b):
        raise SurfaceError("usage: cuts --report needs --a and --b")
    survey = CutSurvey(surface, SurfaceData.read_curve(args.a), SurfaceData.read_curve(args.b),
                       threads=args.threads)
    records = survey.survey()
    lines = ["cut={0} gcd={1} ag={2}".format(r.cut, r.gcd, format_pairs(r.ag)) for r in records]
    lines.append("attained=" + ','.join(str(v) for v in survey.attained))
    report = {"cuts": [{"cut": r.cut, "gcd": r.gcd, "ag": _pairs_doc(r.ag),
                        "formula": list(r.formula)} for r in records],
              "attained": survey.attained}
    return lines, report


def cmd_degree(args):
    alg = _load_algebra(args)
    v = degree(SurfaceData.read_curve(args.curve), alg.quiver, alg.degree)
    return ["degree={0}".format(v)], {"degree": v}


def cmd_invariant(args):
    alg = _load_algebra(args)
    da, db = alg.degrees()
    g = alg.gcd()
    return ["gcd={0}".format(g)], {"gcd": g, "degrees": [da, db]}


def cmd_ag(args):
    alg = _load_algebra(args)
    ag = alg.ag()
    line = "ag=" + format_pairs(ag)
    report = {"ag": _pairs_doc(ag)}
    try:
        require_torus(alg.surface)
    except SurfaceError:
        return [line], report
    formula = alg.ag_formula()
    report["formula"] = list(formula)
    return [line + " formula=({0},{1})".format(*formula)], report


def cmd_equiv(args):
    first, second = _load_algebra(args), _load_algebra(args, '2')
    if args.advisory:
        res = advisory_ag_equal(first.presentation(), second.presentation())
        return ["ag_equal={0} necessary_condition_only={1}".format(
            _flag(res.equal), _flag(res.necessary_condition_only))], res._asdict()
    for alg in (first, second):
        if alg.a is None or alg.b is None:
            raise SurfaceError("usage: equiv needs --a/--b and --a2/--b2")
    equal = derived_equivalent_torus((first.surface, first.degree, first.a, first.b),
                                     (second.surface, second.degree, second.a, second.b))
    return ["equivalent=" + _flag(equal)], {"equivalent": equal}


def cmd_family(args):
    fx = family_fixture(args.name, cut=args.cut, s=args.s, r=args.r)
    paths = SurfaceData.write_fixture(fx, args.out)
    return ["wrote={0}".format(paths[k]) for k in sorted(paths)], {"files": paths}


def cmd_oracle(args):
    if args.normal_form is not None:
        lam, mu = args.normal_form
        word = torusword.normal_form_word(lam, mu)
        if torusword.abelianize(word) != (lam, mu):
            raise InvariantViolation("normal form {0} has class {1}".format(
                torusword.word_string(word), torusword.abelianize(word)))
        text = torusword.word_string(word)
        return ["word={0}".format(text)], {"word": text, "class": [lam, mu]}

    word = torusword.cyclic_reduce(torusword.parse_word(args.word))
    lam, mu = torusword.abelianize(word)
    chain = [int(x) for x in torusword.chain_Acyc(word).coefficients]
    report = {"word": torusword.word_string(word), "class": [lam, mu], "chain": chain}
    line = "word={0} class=({1},{2}) chain={3}".format(report["word"], lam, mu,
                                                      ','.join(str(x) for x in chain))
    if args.move is None:
        return [line], report

    if args.position is None:
        raise SurfaceError("usage: oracle --move needs --position")
    after = torusword.apply_move(word, args.move, args.position,
                                 roles=torusword.parse_word(args.roles))
    rng = np.random.RandomState(args.seed)
    preserved = 0
    for _ in range(args.samples):
        d = torusword.random_markoff_degree(rng)
        if torusword.degree_word(word, d) == torusword.degree_word(after, d):
            preserved += 1
    if preserved != args.samples:
        raise InvariantViolation("{0} changed the degree for {1} of {2} maps".format(
            args.move, args.samples - preserved, args.samples))
    report.update({"after": torusword.word_string(after), "samples": args.samples,
                   "preserved": preserved})
    return [line, "after={0} preserved={1}/{2}".format(report["after"], preserved, args.samples)], report


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default="text")
    common.add_argument("--verbose", action="store_true", help="debug logging on standard error")

    parser = _Parser(prog="gentle-analysis", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("validate", parents=[common])
    p.add_argument("--surface", required=True)
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("quiver", parents=[common])
    p.add_argument("--surface", required=True)
    p.set_defaults(handler=cmd_quiver)

    p = sub.add_parser("cuts", parents=[common])
    p.add_argument("--enumerate", required=True, metavar="SURFACE")
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--report", action="store_true")
    p.add_argument("--threads", type=int, default=0)
    p.set_defaults(handler=cmd_cuts)

    p = sub.add_parser("degree", parents=[common])
    p.add_argument("--surface", required=True)
    p.add_argument("--cut", required=True)
    p.add_argument("--curve", required=True)
    p.set_defaults(handler=cmd_degree)

    p = sub.add_parser("invariant", parents=[common])
    for name in ("--surface", "--cut", "--a", "--b"):
        p.add_argument(name, required=True)
    p.set_defaults(handler=cmd_invariant)

    p = sub.add_parser("ag", parents=[common])
    p.add_argument("--surface", required=True)
    p.add_argument("--cut", required=True)
    p.set_defaults(handler=cmd_ag)

    p = sub.add_parser("equiv", parents=[common])
    for name in ("--surface", "--cut", "--surface2", "--cut2"):
        p.add_argument(name, required=True)
    for name in ("--a", "--b", "--a2", "--b2"):
        p.add_argument(name)
    p.add_argument("--advisory", action="store_true")
    p.set_defaults(handler=cmd_equiv)

    p = sub.add_parser("family", parents=[common])
    p.add_argument("--name", required=True, choices=FAMILIES)
    p.add_argument("--cut", type=int, default=0)
    p.add_argument("--s", type=int)
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_family)

    p = sub.add_parser("oracle", parents=[common])
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--word")
    group.add_argument("--normal-form", nargs=2, type=int, metavar=("L", "M"))
    p.add_argument("--move", choices=sorted(torusword.MOVES))
    p.add_argument("--position", type=int)
    p.add_argument("--roles", default="123")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=cmd_oracle)
    return parser


def run(argv, stdout=None, stderr=None):
    """run one command; returns the exit code"""
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        # --help prints to the injected stream
        with contextlib.redirect_stdout(stdout):
            args = build_parser().parse_args(argv)
        configure_logging(logging.DEBUG if args.verbose else logging.WARNING, stream=stderr)
        lines, report = args.handler(args)
    except SystemExit as err:
        # --help
        return err.code if isinstance(err.code, int) else 0
    except SurfaceError as err:
        stderr.write("error: {0}\n".format(err))
        return 1
    except InvariantViolation as err:
        stderr.write("error: invariant violation: {0}\n".format(err))
        return 2
    except (IOError, OSError) as err:
        stderr.write("error: {0}\n".format(err))
        return 1
    if args.format == "machine":
        stdout.write(SurfaceData.dump_report(report))
    else:
        for line in lines:
            stdout.write(line + "\n")
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
