"""Command-line front end.

Exit status: 0 success, 2 invalid arguments or unreadable input,
3 a verification verdict is false, 4 an internal invariant was violated.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import export
from .canonical import kawasaki_constant, schubert_class, weighted_canonical_class
from .errors import DimensionError, InvalidWeightError, InvariantViolation
from .gkm import GkmGraph, LocalizedClass, is_gkm_member
from .structconst import StructureTable, nonzero_band, weighted_struct_row
from .verification import run_all

EXIT_OK, EXIT_USAGE, EXIT_FALSE, EXIT_INVARIANT = 0, 2, 3, 4

FORMAL_NOTE = "formal divisibility check, not a cohomology computation"


class UsageError(Exception):
    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


def _int_list(text: str | None, flag: str) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        values = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(flag, f"expected comma-separated positive integers, got {text!r}") from None
    if not values or any(v < 1 for v in values):
        raise UsageError(flag, f"entries must be positive integers, got {text!r}")
    return values


def _resolve(args, need_n: bool = True) -> tuple[int | None, tuple[int, ...], tuple[int, ...]]:
    """Work out n, lambda and mu; n is inferred from the vectors when omitted."""
    lam = _int_list(getattr(args, "lam", None), "--lambda")
    mu = _int_list(getattr(args, "mu", None), "--mu")
    n = getattr(args, "n", None)
    if n is not None and n < 0:
        raise UsageError("--n", "must be nonnegative")
    for flag, vec in (("--lambda", lam), ("--mu", mu)):
        if vec is None:
            continue
        if n is None:
            n = len(vec) - 1
        elif len(vec) != n + 1:
            raise UsageError(flag, f"length {len(vec)} does not match n + 1 = {n + 1}")
    if n is None:
        if need_n:
            raise UsageError("--n", "required (or give --lambda/--mu)")
        return None, (), ()
    return n, lam or (1,) * (n + 1), mu or (1,) * (n + 1)


def _index(value: int | None, flag: str, n: int, required: bool = False) -> int | None:
    if value is None:
        if required:
            raise UsageError(flag, "required")
        return None
    if not 0 <= value <= n:
        raise UsageError(flag, f"must lie in 0..{n}, got {value}")
    return value


def _class_payload(cls: LocalizedClass, fmt: str, extra: dict) -> str:
    if fmt == "json":
        return export.dumps({**extra, "class": cls.to_json()})
    if fmt == "text":
        return export.class_to_text(cls.parts)
    raise UsageError("--format", f"{fmt} output is not available for classes")


# -- subcommands --------------------------------------------------------------


def cmd_schubert(args) -> tuple[int, str]:
    n, _, _ = _resolve(args)
    i = _index(args.i, "--i", n)
    degrees = [i] if i is not None else list(range(n + 1))
    if args.format == "json":
        classes = [{"i": d, "n": n, "class": schubert_class(d, n).to_json()} for d in degrees]
        return EXIT_OK, export.dumps(classes[0] if i is not None else classes)
    if args.format != "text":
        raise UsageError("--format", f"{args.format} output is not available for classes")
    chunks = []
    for d in degrees:
        chunks.append(f"p_{d} on P^{n}\n" + export.class_to_text(schubert_class(d, n).parts))
    return EXIT_OK, "\n".join(chunks)


def cmd_kappa(args) -> tuple[int, str]:
    n, lam, _ = _resolve(args)
    i = _index(args.i, "--i", n)
    degrees = [i] if i is not None else list(range(n + 1))
    records = [{"i": d, "lambda": list(lam), "kappa": str(kawasaki_constant(d, lam))} for d in degrees]
    if args.format == "json":
        return EXIT_OK, export.dumps(records[0] if i is not None else records)
    if args.format == "csv":
        rows = [{**r, "lambda": ",".join(map(str, lam))} for r in records]
        return EXIT_OK, export.rows_to_csv(rows, ("i", "lambda", "kappa"))
    if i is not None:
        return EXIT_OK, records[0]["kappa"] + "\n"
    return EXIT_OK, "".join(f"kappa_{r['i']} = {r['kappa']}\n" for r in records)


def cmd_weighted_class(args) -> tuple[int, str]:
    n, lam, _ = _resolve(args)
    i = _index(args.i, "--i", n, required=True)
    cls = weighted_canonical_class(i, lam)
    extra = {"i": i, "lambda": list(lam), "kappa": str(kawasaki_constant(i, lam))}
    if args.format == "text":
        return EXIT_OK, f"kappa_{i} = {extra['kappa']}\n" + export.class_to_text(cls.parts)
    return EXIT_OK, _class_payload(cls, args.format, extra)


def cmd_edge_weights(args) -> tuple[int, str]:
    n, lam, mu = _resolve(args)
    graph = GkmGraph(lam, mu)
    rows = [{"i": i, "j": j, "weight": str(w)} for (i, j), w in sorted(graph.edge_weights.items())]
    if args.format == "json":
        return EXIT_OK, export.dumps({**graph.to_json(), "edges": rows})
    if args.format == "csv":
        return EXIT_OK, export.rows_to_csv(rows, ("i", "j", "weight"))
    return EXIT_OK, "".join(f"O_{r['i']}{r['j']}: {r['weight']}\n" for r in rows)


def _load_class(path: str) -> LocalizedClass:
    try:
        with (sys.stdin if path == "-" else open(path)) as fh:
            data = json.load(fh)
        return LocalizedClass.from_json(data)
    except (OSError, ValueError, KeyError, TypeError, DimensionError) as exc:
        raise UsageError("--input", f"cannot read class file {path!r}: {exc}") from None


def cmd_check_gkm(args) -> tuple[int, str]:
    if args.input is None:
        raise UsageError("--input", "a class file is required")
    cls = _load_class(args.input)
    if args.n is None and args.lam is None and args.mu is None:
        args.n = cls.n
    n, lam, mu = _resolve(args)
    if cls.n != n:
        raise UsageError("--input", f"class lives on P^{cls.n}, graph on P^{n}")
    graph = GkmGraph(lam, mu)
    verdict = is_gkm_member(cls, graph, args.ring)
    formal = args.ring == "integers" and not graph.is_unit_action()
    payload = {
        "graph": graph.to_json(),
        "ring": args.ring,
        "member": verdict.member,
        "failing_edge": list(verdict.failing_edge) if verdict.failing_edge else None,
        "reason": verdict.reason,
        "note": FORMAL_NOTE if formal else None,
        "quotients": {f"{i},{j}": q.to_text() for (i, j), q in sorted(verdict.quotients.items())},
    }
    if args.format == "json":
        out = export.dumps(payload)
    else:
        lines = [f"member: {str(verdict.member).lower()}"]
        if verdict.reason:
            lines.append(f"reason: {verdict.reason}")
        if formal:
            lines.append(f"note: {FORMAL_NOTE}")
        out = "\n".join(lines) + "\n"
    return (EXIT_OK if verdict.member else EXIT_FALSE), out


def _table_output(rows: list[dict], fmt: str, header: dict) -> str:
    if fmt == "json":
        return export.dumps({**header, "entries": rows})
    if fmt == "csv":
        return export.rows_to_csv(rows)
    if fmt == "latex":
        return export.rows_to_latex(rows)
    return export.rows_to_text(rows)


def cmd_structconst(args) -> tuple[int, str]:
    n, _, _ = _resolve(args)
    i = _index(args.i, "--i", n)
    j = _index(args.j, "--j", n)
    k = _index(args.k, "--k", n)
    if (i is None) != (j is None):
        raise UsageError("--j" if j is None else "--i", "give both --i and --j, or neither")
    if i is None:
        table = StructureTable.compute(n)
        rows = export.table_rows(table, ks=None if k is None else [k])
        return EXIT_OK, _table_output(rows, args.format, {"n": n})
    a, b = min(i, j), max(i, j)
    table = StructureTable.compute(n, pairs=[(a, b)])
    rows = export.table_rows(table, [(a, b)], ks=None if k is None else [k])
    header = {"n": n, "i": a, "j": b, "row": {str(r["k"]): r["polynomial"] for r in rows}}
    return EXIT_OK, _table_output(rows, args.format, header)


def cmd_weighted_structconst(args) -> tuple[int, str]:
    n, lam, _ = _resolve(args)
    i = _index(args.i, "--i", n, required=True)
    j = _index(args.j, "--j", n, required=True)
    k = _index(args.k, "--k", n)
    a, b = min(i, j), max(i, j)
    row = weighted_struct_row(a, b, lam)
    ks = [k] if k is not None else list(nonzero_band(a, b, n))
    records = [
        {
            "i": a,
            "j": b,
            "k": kk,
            "image": row[kk].image.to_text(),
            "native": row[kk].native.to_text(),
            "image_integral": row[kk].image_integral,
            "native_integral": row[kk].native_integral,
        }
        for kk in ks
    ]
    fields = ("i", "j", "k", "image", "native", "image_integral", "native_integral")
    if args.format == "json":
        return EXIT_OK, export.dumps({"n": n, "lambda": list(lam), "entries": records})
    if args.format == "csv":
        return EXIT_OK, export.rows_to_csv(records, fields)
    if args.format == "latex":
        raise UsageError("--format", "latex output is not available here")
    return EXIT_OK, "".join(
        f"c_{r['i']}{r['j']}^{r['k']},lambda: image {r['image']}; native {r['native']}"
        f"{'' if r['native_integral'] else ' (non-integral)'}\n"
        for r in records
    )


def cmd_verify(args) -> tuple[int, str]:
    if args.max_n < 0:
        raise UsageError("--max-n", "must be nonnegative")
    results = run_all(args.max_n)
    if args.format == "json":
        out = export.dumps([{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results])
    else:
        out = "".join(r.line() + "\n" for r in results)
        out += f"{sum(r.passed for r in results)}/{len(results)} checks passed\n"
    return (EXIT_OK if all(r.passed for r in results) else EXIT_FALSE), out


COMMANDS = {
    "schubert": cmd_schubert,
    "kappa": cmd_kappa,
    "weighted-class": cmd_weighted_class,
    "edge-weights": cmd_edge_weights,
    "check-gkm": cmd_check_gkm,
    "structconst": cmd_structconst,
    "weighted-structconst": cmd_weighted_structconst,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="dimension of projective space")
    common.add_argument("--i", type=int)
    common.add_argument("--j", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--lambda", dest="lam", metavar="L", help="weights, e.g. 1,2,3")
    common.add_argument("--mu", metavar="M", help="torus action exponents, e.g. 1,1,1")
    common.add_argument("--ring", choices=("integers", "rationals"), default="integers")
    common.add_argument("--format", choices=("text", "json", "csv", "latex"), default="text")

    parser = argparse.ArgumentParser(
        prog="eqproj",
        description="Equivariant cohomology of ordinary and weighted projective space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "check-gkm":
            p.add_argument("--input", help="JSON class file, '-' for stdin")
        if name == "verify":
            p.add_argument("--max-n", type=int, default=8)
    return parser


def run(argv: Sequence[str] | None = None) -> tuple[int, str, str]:
    """Execute a command; returns (exit status, stdout text, stderr text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    try:
        status, out = COMMANDS[args.command](args)
    except UsageError as exc:
        return EXIT_USAGE, "", f"error: {exc}\n"
    except (InvalidWeightError, DimensionError, IndexError) as exc:
        return EXIT_USAGE, "", f"error: {exc}\n"
    except InvariantViolation as exc:
        return EXIT_INVARIANT, "", f"invariant violation: {exc}\n"
    if not out.endswith("\n"):
        out += "\n"
    return status, out, ""


def main(argv: Sequence[str] | None = None) -> int:
    status, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return status


if __name__ == "__main__":
    sys.exit(main())
