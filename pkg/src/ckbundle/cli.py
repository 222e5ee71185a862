"""Command-line surface: matrix ingestion, invariant reports, comparison
verdicts and machine-readable output."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import bundle, ck, sft
from .abelian import FgAbelianGroup, format_group
from .intmat import IntMatrix, IntPolynomial, det, smith_normal_form, trace

__all__ = ["ParseError", "InvariantReport", "parse_matrix", "build_report", "main"]

SIZE_WARNING_THRESHOLD = 12


class ParseError(ValueError):
    """Raised for malformed matrix input."""


def parse_matrix(text: str) -> IntMatrix:
    """Parse a matrix from either plain text (one whitespace-separated row
    per line) or a JSON object with a "rows" key."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty input")
    if stripped.startswith("{"):
        return _parse_json_matrix(stripped)
    rows = []
    width = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        row = []
        for token in line.split():
            try:
                row.append(int(token, 10))
            except ValueError:
                raise ParseError(f"line {lineno}: {token!r} is not an integer") from None
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(f"line {lineno}: expected {width} entries, got {len(row)}")
        rows.append(row)
    if not rows:
        raise ParseError("empty input")
    return IntMatrix(rows)


def _parse_json_matrix(text: str) -> IntMatrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict) or "rows" not in obj:
        raise ParseError('JSON input must be an object with a "rows" key')
    rows = obj["rows"]
    if not isinstance(rows, list) or not rows:
        raise ParseError('"rows" must be a nonempty list of rows')
    for i, row in enumerate(rows, start=1):
        if not isinstance(row, list):
            raise ParseError(f"row {i} is not a list")
        if len(row) != len(rows[0]):
            raise ParseError(f"row {i}: expected {len(rows[0])} entries, got {len(row)}")
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                raise ParseError(f"row {i}: {x!r} is not an integer")
    return IntMatrix(rows)


@dataclass(frozen=True)
class InvariantReport:
    """Everything the `invariants` subcommand reports for one matrix.

    Bundle fields (normalized, h1, alexander, theorem1_check) are None when
    the matrix is not unimodular; irreducible/primitive are None when the
    matrix has a negative entry.
    """

    matrix: IntMatrix
    det: int
    trace: int
    normalized: bool | None
    k0: FgAbelianGroup
    k1: FgAbelianGroup
    bowen_franks: FgAbelianGroup
    h1: FgAbelianGroup | None
    alexander: IntPolynomial | None
    irreducible: bool | None
    primitive: bool | None
    theorem1_check: bool | None

    def to_dict(self) -> dict:
        return {
            "matrix": {"rows": self.matrix.to_lists()},
            "det": self.det,
            "trace": self.trace,
            "normalized": self.normalized,
            "k0": _group_dict(self.k0),
            "k1": _group_dict(self.k1),
            "bowen_franks": _group_dict(self.bowen_franks),
            "h1": _group_dict(self.h1),
            "alexander": None if self.alexander is None else list(self.alexander.coefficients),
            "irreducible": self.irreducible,
            "primitive": self.primitive,
            "theorem1_check": self.theorem1_check,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "InvariantReport":
        return cls(
            matrix=IntMatrix(d["matrix"]["rows"]),
            det=d["det"],
            trace=d["trace"],
            normalized=d["normalized"],
            k0=_group_from_dict(d["k0"]),
            k1=_group_from_dict(d["k1"]),
            bowen_franks=_group_from_dict(d["bowen_franks"]),
            h1=_group_from_dict(d["h1"]),
            alexander=None if d["alexander"] is None else IntPolynomial(tuple(d["alexander"])),
            irreducible=d["irreducible"],
            primitive=d["primitive"],
            theorem1_check=d["theorem1_check"],
        )


def _group_dict(g: FgAbelianGroup | None) -> dict | None:
    if g is None:
        return None
    return {"free_rank": g.free_rank, "invariant_factors": list(g.invariant_factors)}


def _group_from_dict(d: dict | None) -> FgAbelianGroup | None:
    if d is None:
        return None
    return FgAbelianGroup(d["free_rank"], tuple(d["invariant_factors"]))


def build_report(m: IntMatrix) -> tuple[InvariantReport, list[str]]:
    """Compute the full invariant report plus any warnings."""
    if not m.is_square:
        raise ValueError(f"invariants require a square matrix, got {m.shape}")
    warnings = []
    d = det(m)
    nonneg = m.is_nonnegative
    unimodular = d in (1, -1)
    normalized = h_1 = alexander = thm1 = None
    if unimodular:
        b = bundle.make_bundle(m)
        normalized = bundle.normalize_monodromy(b).flipped
        h_1 = bundle.h1(b)
        alexander = bundle.alexander_polynomial(b)
        thm1 = bundle.theorem1_check(b)
    else:
        warnings.append(
            f"determinant {d} is not +/-1: bundle fields (h1, alexander, "
            "theorem1_check) are omitted"
        )
    if not nonneg:
        warnings.append("matrix has negative entries: irreducible/primitive are omitted")
    return (
        InvariantReport(
            matrix=m,
            det=d,
            trace=trace(m),
            normalized=normalized,
            k0=ck.k0(m),
            k1=ck.k1(m),
            bowen_franks=ck.bowen_franks(m),
            h1=h_1,
            alexander=alexander,
            irreducible=ck.is_irreducible(m) if nonneg else None,
            primitive=ck.is_primitive(m) if nonneg else None,
            theorem1_check=thm1,
        ),
        warnings,
    )


def _render_report_text(r: InvariantReport) -> str:
    def opt(value, render=str):
        return "-" if value is None else render(value)

    lines = [
        f"matrix:         {r.matrix.to_lists()}",
        f"det:            {r.det}",
        f"trace:          {r.trace}",
        f"normalized:     {opt(r.normalized)}",
        f"k0:             {format_group(r.k0)}",
        f"k1:             {format_group(r.k1)}",
        f"bowen_franks:   {format_group(r.bowen_franks)}",
        f"h1:             {opt(r.h1, format_group)}",
        f"alexander:      {opt(r.alexander)}",
        f"irreducible:    {opt(r.irreducible)}",
        f"primitive:      {opt(r.primitive)}",
        f"theorem1_check: {opt(r.theorem1_check)}",
    ]
    return "\n".join(lines)


def _matrix_text(m: IntMatrix) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in m)


def _emit(obj: dict, text: str, fmt: str) -> None:
    if fmt == "text":
        print(text)
    else:
        print(json.dumps(obj, indent=2))


def _read_matrix(path: str) -> IntMatrix:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    m = parse_matrix(text)
    if m.rows > SIZE_WARNING_THRESHOLD:
        print(
            f"warning: {m.rows}x{m.cols} matrix; search subcommands may be slow",
            file=sys.stderr,
        )
    return m


def _cmd_invariants(args) -> int:
    report, warnings = build_report(_read_matrix(args.input))
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    _emit(report.to_dict(), _render_report_text(report), args.format)
    return 0


def _cmd_compare(args) -> int:
    a = _read_matrix(args.matrix_a)
    b = _read_matrix(args.matrix_b)
    verdict = bundle.compare_bundles(
        bundle.make_bundle(a), bundle.make_bundle(b), search_depth=args.depth
    )
    obj = {
        "verdict": verdict.outcome.value,
        "witness": verdict.witness,
        "certificate": None
        if verdict.certificate is None
        else {"rows": verdict.certificate.to_lists()},
    }
    text = f"verdict: {verdict.outcome.value}\nwitness: {verdict.witness}"
    _emit(obj, text, args.format)
    return {
        bundle.Outcome.HOMEOMORPHIC: 0,
        bundle.Outcome.DISTINCT: 1,
        bundle.Outcome.INCONCLUSIVE: 2,
    }[verdict.outcome]


def _cmd_snf(args) -> int:
    dec = smith_normal_form(_read_matrix(args.input))
    obj = {
        "u": dec.u.to_lists(),
        "d": dec.d.to_lists(),
        "v": dec.v.to_lists(),
        "diagonal": list(dec.diagonal()),
    }
    text = "\n".join(
        [
            f"diagonal: {list(dec.diagonal())}",
            "u:",
            _matrix_text(dec.u),
            "d:",
            _matrix_text(dec.d),
            "v:",
            _matrix_text(dec.v),
        ]
    )
    _emit(obj, text, args.format)
    return 0


def _cmd_dilate(args) -> int:
    dilated = ck.edge_dilation(_read_matrix(args.input))
    _emit({"rows": dilated.to_lists()}, _matrix_text(dilated), args.format)
    return 0


def _cmd_se_search(args) -> int:
    a = _read_matrix(args.matrix_a)
    b = _read_matrix(args.matrix_b)
    witness = sft.search_se_witness(a, b, max_lag=args.max_lag, entry_bound=args.entry_bound)
    obstruction = sft.se_obstruction(a, b)
    obj = {
        "witness": None
        if witness is None
        else {"r": witness.r.to_lists(), "s": witness.s.to_lists(), "lag": witness.lag},
        "obstruction": obstruction,
        "definitive": obstruction is not None,
    }
    if witness is not None:
        text = (
            f"witness found (lag {witness.lag})\nr:\n{_matrix_text(witness.r)}"
            f"\ns:\n{_matrix_text(witness.s)}"
        )
    elif obstruction is not None:
        text = f"not shift equivalent (definitive): {obstruction}"
    else:
        text = "no witness within bounds (not a proof of non-equivalence)"
    _emit(obj, text, args.format)
    return 0


def _cmd_conj_search(args) -> int:
    a = _read_matrix(args.matrix_a)
    b = _read_matrix(args.matrix_b)
    result = sft.conjugacy_search(a, b, search_depth=args.depth)
    obj = {
        "status": result.status.value,
        "conjugator": None
        if result.conjugator is None
        else {"rows": result.conjugator.to_lists()},
        "obstruction": result.obstruction,
    }
    if result.status is sft.ConjugacyStatus.CONJUGATE:
        text = f"conjugate via:\n{_matrix_text(result.conjugator)}"
    elif result.status is sft.ConjugacyStatus.NOT_CONJUGATE:
        text = f"not conjugate (definitive): {result.obstruction}"
    else:
        text = f"unknown at depth {args.depth}"
    _emit(obj, text, args.format)
    return 0


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=["text", "json", "json-like"],
        default="text",
        help="output format (json-like is an alias for json)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ckbundle",
        description="Exact invariants of integer matrices and torus-bundle monodromies.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="full invariant report for one matrix")
    p.add_argument("--input", default="-", help="matrix file, or - for stdin (default)")
    _add_format(p)
    p.set_defaults(handler=_cmd_invariants)

    p = sub.add_parser("compare", help="compare two monodromy matrices")
    p.add_argument("matrix_a", help="first matrix file, or -")
    p.add_argument("matrix_b", help="second matrix file, or -")
    p.add_argument("--depth", type=int, default=4, help="conjugacy search depth (default 4)")
    _add_format(p)
    p.set_defaults(handler=_cmd_compare)

    p = sub.add_parser("snf", help="Smith normal form")
    p.add_argument("--input", default="-")
    _add_format(p)
    p.set_defaults(handler=_cmd_snf)

    p = sub.add_parser("dilate", help="0/1 edge dilation of a nonnegative matrix")
    p.add_argument("--input", default="-")
    _add_format(p)
    p.set_defaults(handler=_cmd_dilate)

    p = sub.add_parser("se-search", help="bounded shift-equivalence witness search")
    p.add_argument("matrix_a")
    p.add_argument("matrix_b")
    p.add_argument("--max-lag", type=int, default=3, help="largest lag to try (default 3)")
    p.add_argument("--entry-bound", type=int, default=6, help="entry bound (default 6)")
    _add_format(p)
    p.set_defaults(handler=_cmd_se_search)

    p = sub.add_parser("conj-search", help="bounded GL_n(Z) conjugacy search")
    p.add_argument("matrix_a")
    p.add_argument("matrix_b")
    p.add_argument("--depth", type=int, default=4, help="word length bound (default 4)")
    _add_format(p)
    p.set_defaults(handler=_cmd_conj_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.format == "json-like":
        args.format = "json"
    try:
        return args.handler(args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
