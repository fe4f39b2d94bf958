"""Command-line front end.

Exit status: 0 when the answer is positive (or a value was computed), 1 when
no factorization exists or the map is not a member (a certificate is
printed), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import duality, factor, submodule
from .errors import DivlinError, ParseError
from .linmap import LinMap, adjoint, image, kernel, rank
from .scalar import PrimeField
from .space import Space
from .textio import basis_map, format_matrix, read_matrix_file, vector_map

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _matrix_json(t: LinMap) -> dict:
    nrows, ncols = t.shape
    dom = t.scalars
    return {
        "scalar": dom.header(),
        "chirality": str(t.chirality),
        "rows": nrows,
        "cols": ncols,
        "entries": [[dom.format(x) for x in row] for row in t.matrix],
    }


class Output:
    """Collects labeled blocks and scalar facts, then renders text or JSON."""

    def __init__(self, command: str):
        self.command = command
        self.blocks = []
        self.notes = []
        self.lines = []
        self.data = {"command": command}

    def block(self, label: str, t: LinMap):
        self.blocks.append((label, t))

    def note(self, text: str):
        self.notes.append(text)

    def render(self, as_json: bool) -> str:
        if as_json:
            data = dict(self.data)
            if self.blocks:
                data["blocks"] = [{"label": label, **_matrix_json(t)} for label, t in self.blocks]
            return json.dumps(data, indent=2, sort_keys=True) + "\n"
        out = "".join(f"{line}\n" for line in self.lines)
        out += "".join(f"# {n}\n" for n in self.notes)
        out += "\n".join(format_matrix(t, label) for label, t in self.blocks)
        return out


def _load(paths) -> list[LinMap]:
    return [read_matrix_file(p) for p in paths]


def _same_family(maps):
    for m in maps[1:]:
        if m.domain != maps[0].domain or m.codomain != maps[0].codomain:
            raise UsageError("all generator files must describe maps between the same spaces")


def _report(out: Output, result) -> int:
    """Record a factorization or a negative answer; return the exit status."""
    if result:
        out.data.update(result="yes", form=result.form, claim=result.claim,
                        labels=list(result.labels))
        out.note(f"{result.form}" + (f" ({result.claim} witness)" if result.claim else ""))
        for label, w in zip(result.labels, result.witnesses):
            out.block(label, w)
        return EXIT_OK
    out.data.update(result="no", reason=result.reason)
    out.note(result.reason)
    if result.vector is not None:
        out.data["certificate"] = {"vector": [result.vector.space.domain.format(x) for x in result.vector]}
        out.block("CERT", vector_map(result.vector))
    if result.ranks is not None:
        out.data["certificate"] = {"ranks": list(result.ranks)}
        out.note(f"CERT rank {result.ranks[0]} > {result.ranks[1]}")
    return EXIT_NEGATIVE


def cmd_rank(args, out):
    (t,) = _load([args.matrix])
    out.data["rank"] = rank(t)
    out.lines.append(str(rank(t)))
    return EXIT_OK


def _subspace_cmd(label, fn):
    def run(args, out):
        (t,) = _load([args.matrix])
        s = fn(t)
        out.data["dim"] = s.dim
        out.block(label, basis_map(s))
        return EXIT_OK
    return run


def cmd_adjoint(args, out):
    (t,) = _load([args.matrix])
    out.block("ADJOINT", adjoint(t))
    return EXIT_OK


def cmd_factor_kernel(args, out):
    maps = _load(args.maps)
    if len(maps) < 2:
        raise UsageError("factor-kernel needs at least one S and a T")
    *gens, t = maps
    if args.equal:
        if len(gens) != 1:
            raise UsageError("--equal takes exactly one S")
        return _report(out, factor.factor_kernel_equal(gens[0], t))
    if len(gens) == 1:
        return _report(out, factor.factor_kernel_subset(gens[0], t))
    _same_family(gens)
    return _report(out, factor.factor_kernel_multi(gens, t))


def cmd_factor_image(args, out):
    maps = _load(args.maps)
    if len(maps) < 2:
        raise UsageError("factor-image needs an S and at least one T")
    s, *gens = maps
    if args.equal:
        if len(gens) != 1:
            raise UsageError("--equal takes exactly one T")
        return _report(out, factor.factor_image_equal(s, gens[0]))
    if len(gens) == 1:
        return _report(out, factor.factor_image_subset(s, gens[0]))
    _same_family(gens)
    return _report(out, factor.factor_image_multi(s, gens))


def cmd_factor_rank(args, out):
    maps = _load(args.maps)
    if len(maps) < 2:
        raise UsageError("factor-rank needs an S and at least one T")
    s, *gens = maps
    _same_family(gens)
    if len(gens) == 1:
        return _report(out, factor.factor_rank(s, gens[0]))
    return _report(out, factor.factor_rank_multi(s, gens))


def cmd_member(args, out):
    t, *gens = _load([args.matrix] + args.gens)
    gens = submodule.SubmoduleGens.of(args.side, gens, t.domain, t.codomain)
    return _report(out, submodule.member(gens, t))


def cmd_principal(args, out):
    gens = _load(args.gens)
    _same_family(gens)
    g = submodule.SubmoduleGens.of(args.side, gens)
    t0 = submodule.principal_generator(g)
    if not t0:
        out.data.update(result="no", reason=t0.reason)
        out.note(f"no single generator guaranteed: {t0.reason}")
        return EXIT_NEGATIVE
    out.data["result"] = "yes"
    out.block("T0", t0)
    return EXIT_OK


def cmd_probe(args, out):
    if args.gens:
        gens = _load(args.gens)
        _same_family(gens)
        report = submodule.conjecture_probe(submodule.SubmoduleGens.of("left", gens), args.trials)
    else:
        F = PrimeField(args.prime)
        report = submodule.probe_all_single_generators(Space(F, args.dim_v), Space(F, args.dim_w))
    out.data.update(agree=report.agree, disagree=report.disagree)
    out.lines += [f"agree {report.agree}", f"disagree {report.disagree}"]
    for t in report.counterexamples:
        out.block("COUNTEREXAMPLE", t)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="divlin", description="Exact factorizations of linear maps over division rings.")
    parser.add_argument("--json", action="store_true", help="emit a JSON document instead of matrix blocks")
    # --json is accepted before or after the command name
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, helptext in (
        ("rank", cmd_rank, "rank of a map"),
        ("kernel", _subspace_cmd("KERNEL", kernel), "canonical basis of the kernel"),
        ("image", _subspace_cmd("IMAGE", image), "canonical basis of the image"),
        ("perp", _subspace_cmd("PERP", lambda t: duality.perp(image(t))), "annihilator of the image, in the dual of the codomain"),
        ("adjoint", cmd_adjoint, "adjoint map between the dual spaces"),
    ):
        p = sub.add_parser(name, help=helptext, parents=[common])
        p.add_argument("matrix")
        p.set_defaults(func=fn)

    p = sub.add_parser("factor-kernel", help="P with T = P S (files: S... T)", parents=[common])
    p.add_argument("maps", nargs="+")
    p.add_argument("--equal", action="store_true", help="equal kernels: injective witness")
    p.set_defaults(func=cmd_factor_kernel)

    p = sub.add_parser("factor-image", help="P with S = T P (files: S T...)", parents=[common])
    p.add_argument("maps", nargs="+")
    p.add_argument("--equal", action="store_true", help="equal images: surjective witness")
    p.set_defaults(func=cmd_factor_image)

    p = sub.add_parser("factor-rank", help="P, Q with S = P T Q (files: S T...)", parents=[common])
    p.add_argument("maps", nargs="+")
    p.set_defaults(func=cmd_factor_rank)

    p = sub.add_parser("member", help="membership of T in the submodule generated by G...", parents=[common])
    p.add_argument("--side", choices=["right", "left", "two-sided"], required=True)
    p.add_argument("matrix")
    p.add_argument("gens", nargs="*")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("principal", help="single generator of a one-sided submodule", parents=[common])
    p.add_argument("--side", choices=["right", "left", "two-sided"], required=True)
    p.add_argument("gens", nargs="+")
    p.set_defaults(func=cmd_principal)

    p = sub.add_parser("probe-conjecture", help="compare closure and kernel inclusion for left submodules", parents=[common])
    p.add_argument("gens", nargs="*")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--prime", type=int, default=2)
    p.add_argument("--dim-v", type=int, default=2)
    p.add_argument("--dim-w", type=int, default=2)
    p.set_defaults(func=cmd_probe)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.command)
    try:
        status = args.func(args, out)
    except ParseError as exc:
        print(f"divlin: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, DivlinError, ValueError, OSError) as exc:
        print(f"divlin: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out.render(args.json))
    return status


if __name__ == "__main__":
    sys.exit(main())
