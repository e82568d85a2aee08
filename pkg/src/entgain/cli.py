"""Command line front end.

Subcommands: entropy, portrait, decompose, sweep, verify. Matrices are read
from JSON files of the form {"dim": d, "entries": [[re, im], ...]} with d*d
entries in row-major order. Exit codes: 0 ok, 1 bound violation, 2 file parse
error, 3 validation or usage error, 4 not decomposable.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from .bounds import gamma_sweep
from .decomposition import (
    FormDiagnostics,
    check_form_conditions,
    extract_decomposition,
    random_decomposable,
)
from .errors import (
    EntgainError,
    InconsistentEntriesError,
    MatrixFileError,
    NotDecomposableError,
)
from .states import DensityMatrix, qubit_portrait, von_neumann_entropy

EXIT_OK = 0
EXIT_BOUND_VIOLATION = 1
EXIT_PARSE_ERROR = 2
EXIT_INVALID = 3
EXIT_NOT_DECOMPOSABLE = 4

DEFAULT_GRID_SPEC = "0:1:0.1"
CSV_HEADER = "gamma,entropy_in,entropy_out,lhs_gain,rhs_bound,slack"


class CliUsageError(EntgainError):
    """Bad flags or flag values; maps to exit code 3."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors; the exit-code table reserves
    # 2 for file parse errors, so route usage problems through an exception.
    def error(self, message):
        raise CliUsageError(message)


def format_value(x: float) -> str:
    """Fixed 12-significant-digit rendering, stable across platforms."""
    if x == 0.0:
        return "0.000000000000"
    exponent = math.floor(math.log10(abs(x)))
    if -5 < exponent < 12:
        return f"{x:.{11 - exponent}f}"
    return f"{x:.11e}"


def format_complex(z: complex) -> str:
    sign = "+" if z.imag >= 0 else "-"
    return f"{format_value(z.real)}{sign}{format_value(abs(z.imag))}j"


def read_matrix_file(path: str) -> np.ndarray:
    """Load a matrix file; raises MatrixFileError with the offending position."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise MatrixFileError(f"{path}: cannot read file: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFileError(
            f"{path}: parse error at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(obj, dict) or "dim" not in obj or "entries" not in obj:
        raise MatrixFileError(f'{path}: expected an object with "dim" and "entries"')
    dim = obj["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise MatrixFileError(f'{path}: "dim" must be a positive integer, got {dim!r}')
    entries = obj["entries"]
    if not isinstance(entries, list) or len(entries) != dim * dim:
        found = len(entries) if isinstance(entries, list) else type(entries).__name__
        raise MatrixFileError(
            f'{path}: "entries" must list dim*dim = {dim * dim} pairs, got {found}'
        )
    mat = np.zeros((dim, dim), dtype=complex)
    for k, pair in enumerate(entries):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or any(isinstance(v, bool) or not isinstance(v, (int, float)) for v in pair)
        ):
            raise MatrixFileError(f"{path}: entry {k} is not a [re, im] number pair")
        re, im = float(pair[0]), float(pair[1])
        if not (math.isfinite(re) and math.isfinite(im)):
            raise MatrixFileError(f"{path}: entry {k} is not finite")
        mat[k // dim, k % dim] = complex(re, im)
    return mat


def parse_gamma_grid(spec: str) -> list[float]:
    """Grid syntax: "start:end:step" (both endpoints) or "g1,g2,...". Sorted."""
    spec = spec.strip()
    try:
        if ":" in spec:
            parts = spec.split(":")
            if len(parts) != 3:
                raise ValueError("range form is start:end:step")
            start, end, step = (float(p) for p in parts)
            if step <= 0:
                raise ValueError("step must be positive")
            if end < start:
                raise ValueError("end must be at least start")
            ratio = (end - start) / step
            count = round(ratio)
            if abs(count - ratio) > 1e-6:
                count = math.floor(ratio + 1e-9)
            grid = [start + i * step for i in range(count + 1)]
        else:
            grid = [float(p) for p in spec.split(",") if p.strip() != ""]
            if not grid:
                raise ValueError("empty grid")
    except ValueError as exc:
        raise CliUsageError(f"bad gamma grid {spec!r}: {exc}") from exc
    for g in grid:
        if not 0.0 <= g <= 1.0:
            raise CliUsageError(f"gamma value {g!r} outside [0, 1]")
    return sorted(grid)


def _print_diagnostics(diag: FormDiagnostics) -> None:
    print(f"minor_residual = {format_value(diag.minor_residual)}")
    print(f"det3_residual = {format_value(diag.det3_residual)}")
    print(f"support_residual = {format_value(diag.support_residual)}")
    print(f"decomposable = {'yes' if diag.decomposable else 'no'}")


def _print_matrix(mat: np.ndarray) -> None:
    for row in mat:
        print("  " + "  ".join(format_complex(z) for z in row))


def _load_state(args) -> DensityMatrix:
    mat = read_matrix_file(args.input)
    if args.tol is not None:
        return DensityMatrix(mat, tol_psd=args.tol, tol_trace=args.tol)
    return DensityMatrix(mat)


def _cmd_entropy(args) -> int:
    rho = _load_state(args)
    print(format_value(von_neumann_entropy(rho)))
    return EXIT_OK


def _cmd_portrait(args) -> int:
    rho = _load_state(args)
    portrait = qubit_portrait(rho)
    _print_matrix(portrait.mat)
    print(f"entropy = {format_value(von_neumann_entropy(portrait))}")
    return EXIT_OK


def _cmd_decompose(args) -> int:
    rho = _load_state(args)
    tol = args.tol if args.tol is not None else 1e-9
    diag = check_form_conditions(rho, tol)
    _print_diagnostics(diag)
    try:
        dec = extract_decomposition(rho, tol)
    except (NotDecomposableError, InconsistentEntriesError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_DECOMPOSABLE
    print("alpha:")
    _print_matrix(dec.alpha)
    print("h1 = " + "  ".join(format_complex(z) for z in dec.h1))
    print("h2 = " + "  ".join(format_complex(z) for z in dec.h2))
    return EXIT_OK


def _render_csv(rows) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                format_value(v)
                for v in (r.gamma, r.entropy_in, r.entropy_out, r.lhs, r.rhs, r.slack)
            )
        )
    return "\n".join(lines) + "\n"


def _cmd_sweep(args) -> int:
    if args.input is not None:
        rho = _load_state(args)
        dec = extract_decomposition(rho, args.tol if args.tol is not None else 1e-9)
    elif args.seed is not None:
        dec = random_decomposable(args.seed)
    else:
        raise CliUsageError("sweep needs --input FILE or --seed N")
    grid = parse_gamma_grid(args.gamma_grid)
    rows = gamma_sweep(dec, grid)
    csv_text = _render_csv(rows)
    if args.out is not None:
        Path(args.out).write_text(csv_text)
    else:
        print(csv_text, end="")
    print(f"min slack = {format_value(min(r.slack for r in rows))}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.samples < 1:
        raise CliUsageError(f"--samples must be at least 1, got {args.samples}")
    base_seed = args.seed if args.seed is not None else 0
    tol = args.tol if args.tol is not None else 1e-8
    grid = parse_gamma_grid(args.gamma_grid)
    worst = None
    violations = 0
    first_violation = None
    for offset in range(args.samples):
        seed = base_seed + offset
        dec = random_decomposable(seed)
        for row in gamma_sweep(dec, grid):
            if worst is None or row.slack < worst[0]:
                worst = (row.slack, seed, row)
            if row.slack < -tol:
                violations += 1
                if first_violation is None:
                    first_violation = (seed, row)
    assert worst is not None
    _, worst_seed, worst_row = worst
    print(f"checked {args.samples * len(grid)} cases "
          f"({args.samples} states x {len(grid)} gamma points)")
    print(
        f"worst case: seed={worst_seed} gamma={format_value(worst_row.gamma)} "
        f"lhs={format_value(worst_row.lhs)} rhs={format_value(worst_row.rhs)} "
        f"slack={format_value(worst_row.slack)}"
    )
    print(f"min slack = {format_value(worst_row.slack)}")
    if violations:
        seed, row = first_violation
        print(
            f"bound violated in {violations} cases; first at seed={seed} "
            f"gamma={format_value(row.gamma)}: lhs={format_value(row.lhs)} "
            f"rhs={format_value(row.rhs)} slack={format_value(row.slack)}",
            file=sys.stderr,
        )
        return EXIT_BOUND_VIOLATION
    print(f"bound holds for all cases (tol = {tol:g})")
    return EXIT_OK


def build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None,
                        help="override the command's default tolerance")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for commands that draw random states")
    parser = _Parser(prog="entgain", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("entropy", parents=[common],
                       help="print the entropy of a state, in nats")
    p.add_argument("input", help="matrix file")
    p.set_defaults(func=_cmd_entropy)

    p = sub.add_parser("portrait", parents=[common],
                       help="print the qubit portrait of a qutrit and its entropy")
    p.add_argument("input", help="matrix file (3x3)")
    p.set_defaults(func=_cmd_portrait)

    p = sub.add_parser("decompose", parents=[common],
                       help="check the product-form conditions and extract (alpha, h1, h2)")
    p.add_argument("input", help="matrix file (4x4)")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("sweep", parents=[common],
                       help="evaluate the bound over a damping-strength grid, as CSV")
    p.add_argument("--input", default=None, help="matrix file (4x4, decomposable)")
    p.add_argument("--gamma-grid", default=DEFAULT_GRID_SPEC,
                   help="start:end:step or comma list (default %(default)s)")
    p.add_argument("--out", default=None, help="write the CSV here instead of stdout")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("verify", parents=[common],
                       help="Monte Carlo check of the bound over random decomposable states")
    p.add_argument("--samples", type=int, default=1000,
                   help="number of random states (default %(default)s)")
    p.add_argument("--gamma-grid", default=DEFAULT_GRID_SPEC,
                   help="start:end:step or comma list (default %(default)s)")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CliUsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except MatrixFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except (NotDecomposableError, InconsistentEntriesError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_DECOMPOSABLE
    except EntgainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
