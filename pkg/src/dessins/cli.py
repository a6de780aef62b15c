"""Command-line interface: ``dessins {count1,count2,table,verify,genus}``.

Exit codes: 0 ok, 1 usage error, 2 verification mismatch, 3 integrality failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from . import kernels
from .counting import (
    IntegralityError,
    ParityError,
    count_d1,
    count_d1_r,
    count_d2,
    count_d2_r,
    count_dual_d1_r,
    count_dual_d2_r,
    crosscheck_identities,
    genus,
    in_d_star,
    inverted_t_counts,
    inverted_v_counts,
    psi,
    sigma_j,
    upsilon,
)
from .numtheory import divisors, euler_phi, f_coeff
from .permoracle import (
    BruteForceBoundError,
    brute_cap,
    centralizer_n_cycles,
    check_bound,
    classify_pairs,
    oracle_R_m,
    oracle_sigma_fixed,
    oracle_T_centralizer,
    oracle_V_centralizer,
)

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_INTEGRALITY = 0, 1, 2, 3

# structural checks build permutations in Python; keep them desk-sized
PI_N_CHECK_MAX = 8


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    command: str
    N: int
    param: str
    value: int
    r: int | str
    per_r: dict[int, int]
    total: int
    genus: int | None = None
    provenance: str = "formula"
    crosscheck: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "query": {"command": self.command, "N": self.N, "param": self.param,
                      "value": self.value, "r": self.r},
            "counts": {
                "per_r": {str(k): str(v) for k, v in sorted(self.per_r.items())},
                "total": str(self.total),
            },
            "genus": self.genus,
            "provenance": self.provenance,
            "crosscheck": self.crosscheck,
            "notes": self.notes,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "OutputRecord":
        q, c = d["query"], d["counts"]
        return cls(
            command=q["command"], N=q["N"], param=q["param"], value=q["value"], r=q["r"],
            per_r={int(k): int(v) for k, v in c["per_r"].items()},
            total=int(c["total"]),
            genus=d["genus"], provenance=d["provenance"],
            crosscheck=list(d["crosscheck"]), notes=list(d["notes"]),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        return cls.from_dict(json.loads(text))

    def to_plain(self) -> str:
        head = f"N={self.N} {self.param}={self.value}"
        if self.genus is not None:
            head += f" genus={self.genus}"
        lines = [f"{head} [{self.provenance}]"]
        width = max([len(str(v)) for v in self.per_r.values()] + [5])
        lines.append(f"  {'r':>4}  {'count':>{width}}")
        for r, v in sorted(self.per_r.items()):
            lines.append(f"  {r:>4}  {v:>{width}}")
        lines.append(f"  {'all':>4}  {self.total:>{width}}")
        bad = [c for c in self.crosscheck if not c["passed"]]
        if self.crosscheck:
            lines.append(f"crosschecks: {len(self.crosscheck) - len(bad)}/{len(self.crosscheck)} passed")
        for c in bad:
            lines.append(f"  FAIL {c['name']}: {c['lhs']} != {c['rhs']}")
        lines += [f"note: {n}" for n in self.notes]
        return "\n".join(lines)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["N", "param", "r", "count"])
        for r, v in sorted(self.per_r.items()):
            w.writerow([self.N, self.value, r, v])
        return buf.getvalue()


def _checks_as_dicts(checks) -> list[dict]:
    return [{"name": c.name, "passed": c.passed, "lhs": str(c.lhs), "rhs": str(c.rhs)} for c in checks]


def _emit(record: OutputRecord, fmt: str) -> None:
    if fmt == "json":
        print(record.to_json())
    elif fmt == "csv":
        sys.stdout.write(record.to_csv())
    else:
        print(record.to_plain())


def _validate_common(N: int, r: int | None) -> None:
    if N < 1:
        raise UsageError(f"--edges must be positive, got {N}")
    if r is not None and (r < 1 or N % r):
        raise UsageError(f"--aut {r} does not divide --edges {N}")


def _oracle_per_r(N: int, faces=None, deg2=None) -> dict[int, int]:
    try:
        return classify_pairs(N, faces, deg2).per_r
    except BruteForceBoundError as exc:
        raise UsageError(str(exc)) from exc


def build_count1(N: int, L: int, r: int | None = None, source: str = "formula") -> OutputRecord:
    _validate_common(N, r)
    if not 1 <= L <= N:
        raise UsageError(f"--faces must be in 1..{N}, got {L}")
    notes = []
    try:
        g = genus(N, L)
    except ParityError:
        g = None
        notes.append(f"N={N} and L={L} differ in parity: no such dessin exists")
    formula = count_d1(N, L).per_r if source != "oracle" else None
    oracle = _oracle_per_r(N, faces=L) if source != "formula" else None
    per_r = formula if formula is not None else oracle
    if formula is not None and oracle is not None and formula != oracle:
        notes.append(f"MISMATCH formula={formula} oracle={oracle}")
    if r is not None:
        per_r = {r: per_r[r]}
    return OutputRecord(
        "count1", N, "L", L, "all" if r is None else r, per_r, sum(per_r.values()),
        genus=g, provenance=source, crosscheck=_checks_as_dicts(crosscheck_identities(N, L=L)),
        notes=notes,
    )


def build_count2(N: int, h: int, r: int | None = None, source: str = "formula") -> OutputRecord:
    _validate_common(N, r)
    if not 0 <= h <= N:
        raise UsageError(f"--deg2 must be in 0..{N}, got {h}")
    notes = []
    formula = count_d2(N, h).per_r if source != "oracle" else None
    oracle = _oracle_per_r(N, deg2=h) if source != "formula" else None
    per_r = formula if formula is not None else oracle
    if formula is not None and oracle is not None and formula != oracle:
        notes.append(f"MISMATCH formula={formula} oracle={oracle}")
    if r is not None:
        per_r = {r: per_r[r]}
    return OutputRecord(
        "count2", N, "h", h, "all" if r is None else r, per_r, sum(per_r.values()),
        provenance=source, crosscheck=_checks_as_dicts(crosscheck_identities(N, h=h)),
        notes=notes,
    )


# ------------------------------------------------------------------ table


def table_rows(which: int, max_edges: int, include_zero_rows: bool = False):
    """``(rows, totals)`` for the faces table (``1``) or the degree-2 table (``2``).

    The faces table keeps only ``L`` of the same parity as ``N`` unless
    ``include_zero_rows`` is set.  Rows start at ``N = 2``.
    """
    rows, totals = [], []
    for N in range(2, max_edges + 1):
        if which == 1:
            params = [L for L in range(1, N + 1) if include_zero_rows or (N - L) % 2 == 0]
            reports = [count_d1(N, L) for L in params]
        else:
            reports = [count_d2(N, h) for h in range(0, N + 1)]
        for rep in reports:
            for r, c in rep.per_r.items():
                rows.append((N, rep.value, r, c))
            totals.append((N, rep.value, rep.total))
    return rows, totals


def render_table(which: int, rows, totals, fmt: str) -> str:
    pname = "L" if which == 1 else "h"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["N", "param", "r", "count"])
        w.writerows(rows)
        return buf.getvalue()
    if fmt == "json":
        doc = {
            "table": which,
            "param": pname,
            "rows": [{"N": N, "param": p, "r": r, "count": str(c)} for N, p, r, c in rows],
            "totals": [{"N": N, "param": p, "count": str(c)} for N, p, c in totals],
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    width = max([len(str(c)) for *_, c in rows] + [5])
    out = [f"{'N':>3} {pname:>3} {'r':>4}  {'count':>{width}}"]
    out += [f"{N:>3} {p:>3} {r:>4}  {c:>{width}}" for N, p, r, c in rows]
    out.append("")
    out.append(f"{'N':>3} {pname:>3}  {'total':>{width}}")
    out += [f"{N:>3} {p:>3}  {c:>{width}}" for N, p, c in totals]
    return "\n".join(out) + "\n"


# ----------------------------------------------------------------- verify


@dataclass
class VerifyReport:
    checks: int = 0
    mismatches: list[str] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)
    verbose: bool = False

    def check(self, name: str, formula, oracle) -> None:
        self.checks += 1
        if formula != oracle:
            msg = f"MISMATCH {name}: formula={formula} oracle={oracle}"
            self.mismatches.append(msg)
            self.lines.append(msg)
        elif self.verbose:
            self.lines.append(f"ok {name}: {formula}")


def verify_props(N: int, rep: VerifyReport) -> None:
    for n in divisors(N):
        for L in range(1, N + 1):
            rep.check(f"psi({N},{L},{n})", psi(N, L, n), oracle_T_centralizer(N, L, n))
        for h in range(0, N + 1):
            expected = upsilon(N, h, n) if in_d_star(N, h, n) else 0
            rep.check(f"upsilon({N},{h},{n})", expected, oracle_V_centralizer(N, h, n))
    for m in range(1, N + 1):
        rep.check(f"zagier R({N},{m})*n(n+1)", f_coeff(N, N - m + 1), oracle_R_m(N, m) * N * (N + 1))
    for j in range(0, N):
        rep.check(f"fixed-points({N},{j})", sigma_j(N, j) - sigma_j(N, j + 1), oracle_sigma_fixed(N, j))
    if N <= PI_N_CHECK_MAX:
        for n in divisors(N):
            M = N // n
            built = list(centralizer_n_cycles(N, n, "construct"))
            filtered = set(centralizer_n_cycles(N, n, "filter"))
            formula = _fact(n - 1) * M ** (n - 1) * euler_phi(M)
            rep.check(f"pi_n cardinality({N},{n})", formula, len(set(built)))
            rep.check(f"pi_n injective({N},{n})", len(built), len(set(built)))
            rep.check(f"strategies agree({N},{n})", True, set(built) == filtered)


def _fact(k: int) -> int:
    from math import factorial

    return factorial(k)


def verify_theorems(N: int, rep: VerifyReport, jobs: int = 1) -> None:
    for L in range(1, N + 1):
        rep.check(f"count_d1({N},{L})", count_d1(N, L).per_r, classify_pairs(N, faces=L, jobs=jobs).per_r)
        for r in divisors(N):
            rep.check(f"dual_d1({N},{L},{r})", count_dual_d1_r(N, L, r), count_d1_r(N, L, r))
    for h in range(0, N + 1):
        rep.check(f"count_d2({N},{h})", count_d2(N, h).per_r, classify_pairs(N, deg2=h, jobs=jobs).per_r)
        for r in divisors(N):
            rep.check(f"dual_d2({N},{h},{r})", count_dual_d2_r(N, h, r), count_d2_r(N, h, r))


def verify_identities(N: int, rep: VerifyReport) -> None:
    for L in range(1, N + 1):
        for c in crosscheck_identities(N, L=L):
            rep.check(c.name, c.lhs, c.rhs)
        for u, c in inverted_t_counts(N, L).items():
            rep.check(f"inverted psi({N},{L}) at u={u} divisible by u", 0, c % u)
    for h in range(0, N + 1):
        for c in crosscheck_identities(N, h=h):
            rep.check(c.name, c.lhs, c.rhs)
        for u, c in inverted_v_counts(N, h).items():
            rep.check(f"inverted upsilon({N},{h}) at u={u} divisible by u", 0, c % u)


def run_verify(max_edges: int, scope: str, jobs: int = 1, verbose: bool = False) -> VerifyReport:
    scopes = ["props", "theorems", "identities"] if scope == "all" else [scope]
    if any(s != "identities" for s in scopes):
        check_bound(max_edges)
    rep = VerifyReport(verbose=verbose)
    for N in range(1, max_edges + 1):
        if "props" in scopes:
            verify_props(N, rep)
        if "theorems" in scopes:
            verify_theorems(N, rep, jobs)
        if "identities" in scopes:
            verify_identities(N, rep)
    return rep


# ------------------------------------------------------------------- main


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_format(p):
    p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dessins", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count1", help="classes with N edges and L faces")
    p.add_argument("--edges", "-N", type=int, required=True)
    p.add_argument("--faces", "-L", type=int, required=True)
    p.add_argument("--aut", "-r", type=int)
    p.add_argument("--source", choices=["formula", "oracle", "both"], default="formula")
    _add_format(p)

    p = sub.add_parser("count2", help="classes with N edges and h degree-2 faces")
    p.add_argument("--edges", "-N", type=int, required=True)
    p.add_argument("--deg2", "-H", type=int, required=True)
    p.add_argument("--aut", "-r", type=int)
    p.add_argument("--source", choices=["formula", "oracle", "both"], default="formula")
    _add_format(p)

    p = sub.add_parser("table", help="reproduce the faces (1) or degree-2 (2) table")
    p.add_argument("which", type=int, choices=[1, 2])
    p.add_argument("--max", type=int, default=7, dest="max_edges")
    p.add_argument("--include-zero-rows", action="store_true")
    _add_format(p)

    p = sub.add_parser("verify", help="compare formulas with brute force and closed forms")
    p.add_argument("--max", type=int, default=7, dest="max_edges")
    p.add_argument("--scope", choices=["props", "theorems", "identities", "all"], default="all")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--verbose", "-v", action="store_true")

    p = sub.add_parser("genus", help="genus of a two-vertex dessin with N edges and L faces")
    p.add_argument("--edges", "-N", type=int, required=True)
    p.add_argument("--faces", "-L", type=int, required=True)
    _add_format(p)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # --help exits 0; every parse failure maps to the usage code
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return _dispatch(args)
    except UsageError as exc:
        print(f"dessins: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BruteForceBoundError as exc:
        print(f"dessins: error: {exc} (set DESSIN_BRUTE_CAP to raise it)", file=sys.stderr)
        return EXIT_USAGE
    except IntegralityError as exc:
        print(f"dessins: internal integrality failure: {exc}", file=sys.stderr)
        return EXIT_INTEGRALITY


def _dispatch(args) -> int:
    if args.command in ("count1", "count2"):
        build = build_count1 if args.command == "count1" else build_count2
        param = args.faces if args.command == "count1" else args.deg2
        record = build(args.edges, param, args.aut, args.source)
        _emit(record, args.format)
        if any(n.startswith("MISMATCH") for n in record.notes):
            return EXIT_MISMATCH
        return EXIT_OK
    if args.command == "table":
        if args.max_edges < 2:
            raise UsageError("--max must be at least 2")
        rows, totals = table_rows(args.which, args.max_edges, args.include_zero_rows)
        sys.stdout.write(render_table(args.which, rows, totals, args.format))
        return EXIT_OK
    if args.command == "verify":
        if args.max_edges < 1:
            raise UsageError("--max must be positive")
        rep = run_verify(args.max_edges, args.scope, args.jobs, args.verbose)
        for line in rep.lines:
            print(line)
        print(f"verify scope={args.scope} max={args.max_edges} backend={kernels.BACKEND} "
              f"cap={brute_cap()}: {rep.checks} checks, {len(rep.mismatches)} mismatches")
        return EXIT_MISMATCH if rep.mismatches else EXIT_OK
    if args.command == "genus":
        if not 1 <= args.faces <= args.edges:
            raise UsageError(f"--faces must be in 1..{args.edges}")
        try:
            g = genus(args.edges, args.faces)
        except ParityError as exc:
            print(f"dessins: {exc}", file=sys.stderr)
            return EXIT_USAGE
        if args.format == "json":
            print(json.dumps({"N": args.edges, "L": args.faces, "genus": g}))
        elif args.format == "csv":
            print(f"N,L,genus\n{args.edges},{args.faces},{g}")
        else:
            print(g)
        return EXIT_OK
    raise AssertionError(args.command)


if __name__ == "__main__":
    sys.exit(main())
