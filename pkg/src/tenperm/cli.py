"""Command-line surface.

Every operation is a subcommand reading and writing the text formats from
:mod:`tenperm.formats`; results go to stdout, diagnostics to stderr.  Output
is deterministic given the flags (random starts are seeded), so identical
invocations produce byte-identical stdout.

Exit codes: 0 success, 1 usage error, 2 format/parse error, 3 shape or
degree mismatch, 4 solver non-convergence.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import IO, Sequence

import numpy as np

from . import decomp, dense, eigen, formats, multilinear, perm
from .errors import FormatError, NoConvergenceError

__all__ = ["run", "main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FORMAT = 2
EXIT_MISMATCH = 3
EXIT_NO_CONVERGENCE = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # Argparse wants to sys.exit(2) on bad usage; route it through the
    # documented exit-code table instead.
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _perm_flag(text: str) -> perm.Permutation:
    return perm.Permutation.from_string(text)


def _ranks_flag(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p.strip()) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse ranks from {text!r}") from None


def _build_parser() -> _Parser:
    parser = _Parser(prog="tenperm", description="Dense tensor algebra over mode permutations.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("transpose", help="transpose a tensor by a permutation of its modes")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--perm", type=_perm_flag, help="1-based images, e.g. 2,3,1")
    group.add_argument("--named", choices=sorted(dense.NAMED_TRANSPOSES), help="order-3 shorthand")
    p.add_argument("input")
    p.add_argument("output")

    p = sub.add_parser("classify", help="classify a permutation's transpose as total or partial")
    p.add_argument("--perm", type=_perm_flag, required=True)

    p = sub.add_parser("enumerate-transposes", help="print every non-identity transpose")
    p.add_argument("input")

    p = sub.add_parser("supersym", help="test invariance under all mode permutations")
    p.add_argument("--tol", type=float, default=0.0)
    p.add_argument("input")

    p = sub.add_parser("nmode", help="contract one mode with a matrix")
    p.add_argument("--mode", type=int, required=True)
    p.add_argument("--matrix", required=True, help="order-2 tensor file")
    p.add_argument("input")
    p.add_argument("output")

    p = sub.add_parser("inner", help="inner product of two same-shaped tensors")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("norm", help="Frobenius norm")
    p.add_argument("input")

    p = sub.add_parser("outer", help="outer product of vectors (last path is the output)")
    p.add_argument("paths", nargs="+", metavar="VECTOR... OUTPUT")

    p = sub.add_parser("eig", help="one eigenpair by shifted power iteration")
    p.add_argument("--mode", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--shift", type=float, default=1.0)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-iter", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("input")

    p = sub.add_parser("cp", help="fit a Kruskal form by alternating least squares")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-iter", type=int, default=500)
    p.add_argument("input")
    p.add_argument("output")

    p = sub.add_parser("tucker", help="fit a Tucker form by higher-order SVD")
    p.add_argument("--ranks", type=_ranks_flag, required=True, help="e.g. 4,4,4")
    p.add_argument("input")
    p.add_argument("output")

    p = sub.add_parser("reconstruct", help="expand a Kruskal or Tucker file to a dense tensor")
    p.add_argument("input")
    p.add_argument("output")

    p = sub.add_parser("derangements", help="count fixed-point-free permutations")
    p.add_argument("n", type=int)

    p = sub.add_parser("perms", help="list all permutations of degree N, lexicographic")
    p.add_argument("n", type=int)

    return parser


def _load_tensor(path: str) -> np.ndarray:
    return formats.parse_tensor(Path(path).read_text())


def _write(path: str, text: str) -> None:
    Path(path).write_text(text)


def _cmd_transpose(args, out: IO[str]) -> None:
    x = _load_tensor(args.input)
    if args.perm is not None:
        y = dense.transpose(x, args.perm)
    else:
        y = dense.named_transpose3(x, args.named)
    _write(args.output, formats.serialize_tensor(y))


def _cmd_classify(args, out: IO[str]) -> None:
    print(dense.transpose_kind(args.perm).value, file=out)


def _cmd_enumerate_transposes(args, out: IO[str]) -> None:
    x = _load_tensor(args.input)
    for sigma, y in dense.enumerate_transposes(x):
        print(f"perm {sigma.to_string()}", file=out)
        out.write(formats.serialize_tensor(y))


def _cmd_supersym(args, out: IO[str]) -> None:
    x = _load_tensor(args.input)
    print("true" if dense.is_supersymmetric(x, args.tol) else "false", file=out)


def _cmd_nmode(args, out: IO[str]) -> None:
    x = _load_tensor(args.input)
    u = _load_tensor(args.matrix)
    _write(args.output, formats.serialize_tensor(multilinear.nmode_product(x, args.mode, u)))


def _cmd_inner(args, out: IO[str]) -> None:
    a = _load_tensor(args.a)
    b = _load_tensor(args.b)
    print(formats.format_float(multilinear.inner_product(a, b)), file=out)


def _cmd_norm(args, out: IO[str]) -> None:
    print(formats.format_float(multilinear.frobenius_norm(_load_tensor(args.input))), file=out)


def _cmd_outer(args, out: IO[str]) -> None:
    if len(args.paths) < 2:
        raise _UsageError("outer: need at least one vector file and one output file")
    vectors = [_load_tensor(path) for path in args.paths[:-1]]
    _write(args.paths[-1], formats.serialize_tensor(multilinear.outer_product(vectors)))


def _cmd_eig(args, out: IO[str]) -> None:
    a = _load_tensor(args.input)
    cfg = eigen.SolverConfig(
        p=args.p, shift=args.shift, tol=args.tol, max_iter=args.max_iter, seed=args.seed
    )
    pair = eigen.solve_power_iteration(a, args.mode, cfg)
    print(f"lambda {formats.format_float(pair.value)}", file=out)
    print("x " + " ".join(formats.format_float(v) for v in pair.vector), file=out)


def _cmd_cp(args, out: IO[str]) -> None:
    x = _load_tensor(args.input)
    kt = decomp.cp_als(x, args.rank, max_iter=args.max_iter, tol=args.tol, seed=args.seed)
    _write(args.output, formats.serialize_kruskal(kt))


def _cmd_tucker(args, out: IO[str]) -> None:
    x = _load_tensor(args.input)
    _write(args.output, formats.serialize_tucker(decomp.hosvd(x, args.ranks)))


def _cmd_reconstruct(args, out: IO[str]) -> None:
    value = formats.parse_any(Path(args.input).read_text())
    if isinstance(value, decomp.KruskalTensor):
        y = decomp.kruskal_reconstruct(value)
    elif isinstance(value, decomp.TuckerTensor):
        y = decomp.tucker_reconstruct(value)
    else:
        raise ValueError("input is already a dense tensor; expected a kt or tt file")
    _write(args.output, formats.serialize_tensor(y))


def _cmd_derangements(args, out: IO[str]) -> None:
    print(perm.derangement_count(args.n), file=out)


def _cmd_perms(args, out: IO[str]) -> None:
    for sigma in perm.enumerate_permutations(args.n):
        print(sigma.to_string(), file=out)


_HANDLERS = {
    "transpose": _cmd_transpose,
    "classify": _cmd_classify,
    "enumerate-transposes": _cmd_enumerate_transposes,
    "supersym": _cmd_supersym,
    "nmode": _cmd_nmode,
    "inner": _cmd_inner,
    "norm": _cmd_norm,
    "outer": _cmd_outer,
    "eig": _cmd_eig,
    "cp": _cmd_cp,
    "tucker": _cmd_tucker,
    "reconstruct": _cmd_reconstruct,
    "derangements": _cmd_derangements,
    "perms": _cmd_perms,
}


def run(
    argv: Sequence[str],
    stdout: IO[str] | None = None,
    stderr: IO[str] | None = None,
) -> int:
    """Execute one subcommand; returns the process exit code."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
        _HANDLERS[args.command](args, out)
    except _UsageError as exc:
        print(str(exc), file=err)
        return EXIT_USAGE
    except OSError as exc:
        print(f"tenperm: {exc}", file=err)
        return EXIT_USAGE
    except FormatError as exc:
        print(f"tenperm: {exc}", file=err)
        return EXIT_FORMAT
    except NoConvergenceError as exc:
        print(f"tenperm: {exc}", file=err)
        return EXIT_NO_CONVERGENCE
    except ValueError as exc:
        print(f"tenperm: {exc}", file=err)
        return EXIT_MISMATCH
    return EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))
