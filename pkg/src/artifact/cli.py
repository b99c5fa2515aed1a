"""Command-line interface: ``artifact <command> [--format table|json|csv]``.

Exit status is 0 on success, 2 when a computed value fails verification
and 1 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import checks
from . import conic_counts as cc
from . import intersection_counts as ic
from . import quantum_engine as qe
from .exact_algebra import rat_to_str
from .geometry_data import dump_all
from .localization import WeightDegeneracy, all_fixpoint_records, default_weights, parse_weights, validate_weights

COMMANDS = (
    "monomials", "lines", "conics02", "conics", "two-point", "qmatrix", "picard-fuchs",
    "instantons", "quintic", "kontsevich", "am", "dump-fixpoints", "check",
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def s(x) -> str:
    return rat_to_str(x) if isinstance(x, (int, Fraction)) else str(x)


class Report:
    """A result with a JSON payload and a table of rows."""

    def __init__(self, payload: dict, header: Sequence[str], rows: Sequence[Sequence], ok: bool = True, note: str = ""):
        self.payload = payload
        self.header = list(header)
        self.rows = [[s(x) for x in r] for r in rows]
        self.ok = ok
        self.note = note

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.payload, ensure_ascii=False, indent=None)
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(self.header)
            w.writerows(self.rows)
            return buf.getvalue().rstrip("\n")
        table = [self.header] + self.rows
        widths = [max(len(r[i]) for r in table) for i in range(len(self.header))]
        lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in table]
        if self.note:
            lines.append(self.note)
        return "\n".join(lines)


def _wjson(omega) -> list[str]:
    return [s(w) for w in omega]


def cmd_monomials(args, omega) -> Report:
    vals = ic.monomial_values_N(omega)
    euler = ic.euler_characteristic_N(omega)
    ok = all(vals[m] == v for m, v in ic.MONOMIAL_VALUES.items()) and euler == 13
    rows = [(ic.monomial_name(m), vals[m]) for m in ic.MONOMIAL_VALUES] + [("c6(TN)", euler)]
    payload = {"monomials": {n: s(v) for n, v in rows}, "weights": _wjson(omega)}
    return Report(payload, ["monomial", "value"], rows, ok)


def _xyz_report(key: str, v: tuple, expected: tuple) -> Report:
    payload = {key: dict(zip(cc.TARGETS, (s(x) for x in v)))}
    return Report(payload, list(cc.TARGETS), [v], v == expected)


def cmd_lines(args, omega) -> Report:
    return _xyz_report("lines", ic.line_counts(), (147, 216, 144))


def cmd_conics02(args, omega) -> Report:
    return _xyz_report("conics02", ic.conic02_counts(), (0, 0, 36))


def cmd_conics(args, omega) -> Report:
    a, b = cc.conic11_counts(omega), ic.conic02_counts()
    t = tuple(x + y for x, y in zip(a, b))
    payload = {
        "conics11": dict(zip(cc.TARGETS, map(s, a))),
        "conics02": dict(zip(cc.TARGETS, map(s, b))),
        "total": dict(zip(cc.TARGETS, map(s, t))),
        "weights": _wjson(omega),
    }
    rows = [("(1,1)",) + a, ("(0,2)",) + b, ("total",) + t]
    return Report(payload, ["type", *cc.TARGETS], rows, t == (756, 1674, 504))


def cmd_two_point(args, omega) -> Report:
    d = qe.two_point_numbers(omega)
    rows = [(f"T{a}", f"T{b}", v) for (a, b), v in sorted(d.numbers.items())]
    seeds = {"a1": d.a1, "b1": d.b1, "c1": d.c1}
    rows += [(k, "", v) for k, v in seeds.items()]
    payload = {
        "two_point": {f"T{a},T{b}": s(v) for (a, b), v in sorted(d.numbers.items())},
        "seeds": {k: s(v) for k, v in seeds.items()},
        "weights": _wjson(omega),
    }
    ok = all(d.numbers[k] == v for k, v in checks.TWO_POINT_VALUES.items()) and (d.a1, d.b1, d.c1) == checks.SEEDS
    return Report(payload, ["a", "b", "value"], rows, ok)


def cmd_qmatrix(args, omega) -> Report:
    M = qe.quantum_matrix(omega)
    P = checks.expected_matrix()
    ok = all(M[i, j] == P[i][j] for i in range(13) for j in range(13))
    rows = [[f"T{i}"] + r for i, r in enumerate(M.as_strings())]
    payload = {"qmatrix": M.to_json(), "weights": _wjson(omega)}
    return Report(payload, ["coef of"] + [f"p*T{a}" for a in range(13)], rows, ok)


def cmd_picard_fuchs(args, omega) -> Report:
    M = qe.quantum_matrix(omega)
    pf = qe.picard_fuchs_N(M)
    low = qe.minimal_order_annihilator(M)
    rows = [(f"q^{a}", p.to_str("D")) for a, p in enumerate(pf.blocks)]
    payload = {
        "blocks": pf.to_json(),
        "order": s(pf.order),
        "q_degree": s(pf.q_degree),
        "minimal_order": s(low.order),
        "weights": _wjson(omega),
    }
    note = f"order {pf.order}; the least-order annihilator of F12 has order {low.order}"
    return Report(payload, ["block", "P_a(D)"], rows, pf == qe.QD_N_EXPECTED, note)


def _dmax(args) -> int:
    return 10 if args.dmax is None else args.dmax


def _check_dmax(dmax: int) -> int:
    if dmax < 1:
        raise UsageError("--dmax must be positive")
    return dmax


def cmd_instantons(args, omega) -> Report:
    dmax = _check_dmax(_dmax(args))
    n = qe.instantons_X(dmax, omega=omega)
    ok = n[:10] == checks.INSTANTONS_X[: min(dmax, 10)]
    rows = [(d, v) for d, v in enumerate(n, start=1)]
    return Report({"n": [s(v) for v in n], "weights": _wjson(omega)}, ["d", "n_d"], rows, ok)


def cmd_quintic(args, omega) -> Report:
    dmax = _check_dmax(_dmax(args))
    n = qe.quintic_instantons(dmax)
    g = qe.quintic_lines_grassmannian()
    rows = [(d, v) for d, v in enumerate(n, start=1)]
    payload = {"n": [s(v) for v in n], "grassmannian_lines": s(g)}
    return Report(payload, ["d", "n_d"], rows, n[0] == g == 2875, f"Grassmannian oracle: {s(g)} lines")


def cmd_kontsevich(args, omega) -> Report:
    dmax = _check_dmax(_dmax(args))
    K = qe.kontsevich_p2(dmax)
    five = qe.conics_through_five_points()
    ok = K[0] == 1 and (dmax < 2 or K[1] == five == 1)
    rows = [(d, v) for d, v in enumerate(K, start=1)]
    return Report({"K": [s(v) for v in K], "conics_through_5_points": s(five)}, ["d", "K_d"], rows, ok)


def cmd_am(args, omega) -> Report:
    if args.values:
        try:
            n = [Fraction(x) for x in args.values.split(",")]
        except ValueError as e:
            raise UsageError(f"bad instanton list: {e}") from None
    else:
        n = qe.instantons_X(_check_dmax(_dmax(args)), omega=omega)
    N = qe.aspinwall_morrison(n)
    rows = [(d, a, b) for d, (a, b) in enumerate(zip(n, N), start=1)]
    return Report({"n": [s(v) for v in n], "N": [s(v) for v in N]}, ["d", "n_d", "N_d"], rows)


def cmd_dump_fixpoints(args, omega) -> Report:
    d = dump_all()
    rows = [(k, len(v)) for k, v in d.items()]
    return Report(d, ["space", "fixpoints"], rows)


def cmd_check(args, omega) -> Report:
    res = checks.run_all(omega)
    rows = [("PASS" if r.ok else "FAIL", r.name, r.detail, f"{r.seconds:.2f}s") for r in res]
    payload = {"criteria": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in res], "weights": _wjson(omega)}
    return Report(payload, ["status", "criterion", "detail", "time"], rows, all(r.ok for r in res))


HANDLERS = {name: globals()["cmd_" + name.replace("-", "_")] for name in COMMANDS}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="artifact", description="Exact Gromov-Witten computations on the space of determinantal nets of conics.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("values", nargs="?", help="comma-separated instanton numbers (am only)")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--weights", help="one-parameter subgroup as w0,w1,w2")
    p.add_argument("--dmax", type=int, help="series degree (default 10)")
    p.add_argument("--seed", type=int, default=0, help="seed of the default weight search")
    return p


def _resolve_weights(args) -> tuple:
    if args.weights is None:
        return default_weights(args.seed)
    try:
        omega = parse_weights(args.weights)
    except ValueError as e:
        raise UsageError(str(e)) from None
    try:
        validate_weights(all_fixpoint_records(), omega)
    except WeightDegeneracy as e:
        raise UsageError(str(e)) from None
    return omega


def _join_weights(argv: list[str]) -> list[str]:
    # "--weights -12,16,-16" would otherwise be read as an option
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--weights" and i + 1 < len(argv):
            out.append("--weights=" + argv[i + 1])
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = _join_weights(list(sys.argv[1:] if argv is None else argv))
    try:
        args = build_parser().parse_args(argv)
        if args.values and args.command != "am":
            raise UsageError(f"unexpected argument {args.values!r}")
        omega = _resolve_weights(args)
        report = HANDLERS[args.command](args, omega)
    except UsageError as e:
        print(f"artifact: error: {e}", file=err)
        return 1
    except SystemExit as e:  # --help
        return 0 if not e.code else 1
    except (ArithmeticError, ic.DataIntegrityError) as e:
        print(f"artifact: verification failed: {e}", file=err)
        return 2
    print(report.render(args.format), file=out)
    if not report.ok:
        print("artifact: verification failed", file=err)
        return 2
    return 0


def main() -> None:
    sys.exit(run())
