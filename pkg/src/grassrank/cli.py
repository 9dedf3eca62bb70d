"""Command-line front end.

Exit codes: 0 success, 1 malformed input, 2 index out of range, 3 invalid
parameters. Error messages go to stderr only; everything on stdout is
payload and is byte-identical across identical invocations.
"""

from __future__ import annotations

import argparse
import sys

from . import combined_codec, ext_codec, ferrers_codec, oracle
from .counting import gaussian, partition_table_for
from .errors import (
    GrassrankError,
    IndexOutOfRangeError,
    InvalidParameterError,
    MalformedInputError,
    NotRrefError,
    ParamMismatchError,
    TooLargeError,
)
from .subspace import Params, format_matrix, parse_matrix

_RANKERS = {
    "ext": ext_codec.rank_ext,
    "ferrers": ferrers_codec.rank_ferrers,
    "combined": combined_codec.rank_comb,
}
_UNRANKERS = {
    "ext": ext_codec.unrank_ext,
    "ferrers": ferrers_codec.unrank_ferrers,
    "combined": combined_codec.unrank_comb,
}


class _Parser(argparse.ArgumentParser):
    # Usage problems are invalid parameters, exit 3 (argparse defaults to 2,
    # which is reserved for out-of-range indices).
    def error(self, message):
        self.exit(3, f"{self.prog}: error: {message}\n")


def _add_params(p, required=True):
    p.add_argument("--q", type=int, required=required, help="alphabet size (>= 2)")
    p.add_argument("--n", type=int, required=required, help="vector length")
    p.add_argument("--k", type=int, required=required, help="subspace dimension")


def _add_order(p):
    p.add_argument(
        "--order",
        choices=("ext", "ferrers", "combined"),
        default="ext",
        help="which total order to use (default ext)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="grassrank", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("rank", help="matrix in, decimal index out")
    _add_order(p)
    p.add_argument("--input", default="-", help="matrix file, or - for stdin")
    p.add_argument("--output", default="-", help="output file, or - for stdout")
    _add_params(p, required=False)

    p = sub.add_parser("unrank", help="decimal index in, matrix out")
    _add_order(p)
    _add_params(p)
    p.add_argument("--index", help="decimal index (read from stdin when omitted)")
    p.add_argument("--output", default="-")

    p = sub.add_parser("next", help="matrix in, successor matrix out (empty at the end)")
    _add_order(p)
    p.add_argument("--input", default="-")
    p.add_argument("--output", default="-")

    p = sub.add_parser("enumerate", help="stream matrices in order")
    _add_order(p)
    _add_params(p)
    p.add_argument("--start", type=int, default=0, help="first index (default 0)")
    p.add_argument("--count", type=int, default=None, help="how many (default: to the end)")
    p.add_argument("--output", default="-")

    p = sub.add_parser("tables", help="dump the partition table for the k x (n-k) box")
    _add_params(p)
    p.add_argument("--output", default="-")

    p = sub.add_parser("oracle-check", help="exhaustively compare a codec against brute force")
    _add_order(p)
    _add_params(p)
    p.add_argument("--output", default="-")

    p = sub.add_parser("bench", help="timing sweep; writes CSV and a scaling figure")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--sizes", type=int, nargs="+", default=[8, 12, 16, 24, 32])
    p.add_argument(
        "--orders", nargs="+", choices=("ext", "ferrers", "combined"),
        default=["ext", "ferrers", "combined"],
    )
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--out-dir", default="bench_out")
    return parser


def _params_from(args) -> Params:
    return Params(args.q, args.n, args.k)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc}") from None


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _matrix_from(args) -> "RrefMatrix":
    X = parse_matrix(_read_text(args.input))
    if args.q is not None or args.n is not None or args.k is not None:
        stated = Params(
            args.q if args.q is not None else X.q,
            args.n if args.n is not None else X.n,
            args.k if args.k is not None else X.k,
        )
        if stated != X.params:
            raise ParamMismatchError(f"flags say {stated}, matrix says {X.params}")
    return X


def _cmd_rank(args) -> int:
    X = _matrix_from(args)
    _write_text(args.output, f"{_RANKERS[args.order](X)}\n")
    return 0


def _cmd_unrank(args) -> int:
    params = _params_from(args)
    raw = args.index if args.index is not None else sys.stdin.read()
    try:
        index = int(str(raw).strip())
    except ValueError:
        raise MalformedInputError(f"index {raw!r} is not a decimal integer") from None
    X = _UNRANKERS[args.order](index, params)
    _write_text(args.output, format_matrix(X))
    return 0


def _cmd_next(args) -> int:
    X = parse_matrix(_read_text(args.input))
    if args.order == "ext":
        nxt = ext_codec.next_ext(X)
    else:
        here = _RANKERS[args.order](X)
        total = gaussian(X.n, X.k, X.q)
        nxt = None if here + 1 == total else _UNRANKERS[args.order](here + 1, X.params)
    _write_text(args.output, format_matrix(nxt) if nxt is not None else "")
    return 0


def _cmd_enumerate(args) -> int:
    params = _params_from(args)
    total = gaussian(params.n, params.k, params.q)
    if not 0 <= args.start < total:
        raise IndexOutOfRangeError(f"start {args.start} outside [0, {total})")
    count = total - args.start if args.count is None else args.count
    if count < 0:
        raise InvalidParameterError("count must be nonnegative")
    count = min(count, total - args.start)
    chunks = []
    if args.order == "ext":
        X = ext_codec.unrank_ext(args.start, params)
        for _ in range(count):
            chunks.append(format_matrix(X) + "\n")
            X = ext_codec.next_ext(X)
            if X is None:
                break
    else:
        for i in range(args.start, args.start + count):
            chunks.append(format_matrix(_UNRANKERS[args.order](i, params)) + "\n")
    _write_text(args.output, "".join(chunks))
    return 0


def _cmd_tables(args) -> int:
    params = _params_from(args)
    rows, cols = params.k, params.n - params.k
    table = partition_table_for(rows, cols)
    lines = []
    for kappa in range(rows + 1):
        for eta in range(cols + 1):
            for m in range(kappa * eta + 1):
                lines.append(f"{kappa} {eta} {m} {table.count(kappa, eta, m)}")
    _write_text(args.output, "\n".join(lines) + "\n")
    return 0


def _cmd_oracle_check(args) -> int:
    params = _params_from(args)
    ranker = _RANKERS[args.order]
    unranker = _UNRANKERS[args.order]
    for position, X in enumerate(oracle.sorted_enumeration(params, args.order)):
        if ranker(X) != position or unranker(position, params) != X:
            _write_text(args.output, format_matrix(X))
            print(
                f"disagreement at position {position} under {args.order!r}",
                file=sys.stderr,
            )
            return 4
    return 0


def _cmd_bench(args) -> int:
    from . import bench

    bench.run_bench(
        args.out_dir,
        q=args.q,
        sizes=tuple(args.sizes),
        orders=tuple(args.orders),
        samples=args.samples,
    )
    return 0


_COMMANDS = {
    "rank": _cmd_rank,
    "unrank": _cmd_unrank,
    "next": _cmd_next,
    "enumerate": _cmd_enumerate,
    "tables": _cmd_tables,
    "oracle-check": _cmd_oracle_check,
    "bench": _cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except (MalformedInputError, NotRrefError) as exc:
        print(f"grassrank: {exc}", file=sys.stderr)
        return 1
    except IndexOutOfRangeError as exc:
        print(f"grassrank: {exc}", file=sys.stderr)
        return 2
    except (InvalidParameterError, ParamMismatchError, TooLargeError) as exc:
        print(f"grassrank: {exc}", file=sys.stderr)
        return 3
    except GrassrankError as exc:
        print(f"grassrank: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
