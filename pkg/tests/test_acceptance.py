"""The eleven acceptance criteria, bit-exact, each printed as PASS or FAIL."""

import io
import json
import time
from fractions import Fraction

import pytest

from artifact import checks
from artifact.cli import run

RESULTS = {}


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    t = time.perf_counter()
    code = run([*argv, "--format", "json"], out, err)
    return code, json.loads(out.getvalue()) if out.getvalue() else None, time.perf_counter() - t


@pytest.fixture
def report(capsys):
    def emit(number, label, ok, detail=""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {label} {detail}".rstrip())
        assert ok, f"criterion {number} failed: {detail}"

    return emit


def test_criterion_01_monomials(report):
    code, data, dt = cli("monomials")
    expected = {
        "γ1^4γ2": "27", "γ1^4δ2": "18", "γ1^3γ3": "5", "γ1^2γ2^2": "14", "γ1^2γ2δ2": "9", "γ1^2δ2^2": "6",
        "γ1γ2γ3": "3", "γ1γ3δ2": "2", "γ2^3": "9", "γ2^2δ2": "5", "γ2δ2^2": "3", "γ3^2": "1",
        "γ1^6": "57", "δ2^3": "2",
    }
    got = {k: v for k, v in data["monomials"].items() if k != "c6(TN)"}
    report(1, "monomial values on N", code == 0 and got == expected and dt < 1, f"({dt:.2f}s)")


def test_criterion_02_euler(report):
    from artifact.geometry_data import fixpoints_N
    from artifact.intersection_counts import euler_characteristic_N

    t = time.perf_counter()
    e = euler_characteristic_N()
    dt = time.perf_counter() - t
    report(2, "c6(TN) = 13 = number of fixpoints", e == 13 == len(fixpoints_N()) and dt < 1, f"({dt:.2f}s)")


def test_criterion_03_lines(report):
    code, data, dt = cli("lines")
    report(3, "lines (147, 216, 144)", code == 0 and data["lines"] == {"X": "147", "Y": "216", "Z": "144"} and dt < 1, f"({dt:.2f}s)")


def test_criterion_04_two_point(report):
    from artifact.geometry_data import build_M02_fixpoints

    code, data, dt = cli("two-point")
    expected = {f"T{a},T{b}": str(v) for (a, b), v in checks.TWO_POINT_VALUES.items()}
    ok = code == 0 and data["two_point"] == expected and data["seeds"] == {"a1": "3", "b1": "-1", "c1": "-65/19"}
    ok = ok and len(build_M02_fixpoints()) == 108 and dt < 2
    report(4, "twelve two-point numbers and (3, -1, -65/19)", ok, f"({dt:.2f}s)")


def test_criterion_05_qmatrix(report):
    code, data, _ = cli("qmatrix")
    P = checks.expected_matrix()
    ok = code == 0 and all(data["qmatrix"][i][j] == P[i][j].to_json() for i in range(13) for j in range(13))
    report(5, "quantum matrix, 169 entries", ok)


def test_criterion_06_picard_fuchs(report):
    from artifact.exact_algebra import Poly

    code, data, dt = cli("picard-fuchs")
    D = Poly([0, 1])
    expected_blocks = [
        D**7 * Poly([907, -1035, 299]) * (D - 1) ** 3,
        -(D**3) * Poly([513, 2109, 1148, -5855, -7135, 5474, 10166]),
        Poly([-7668, -70962, -289727, -607063, -675645, -377246, -83122]),
        -243 * (D + 1) * Poly([1551, 1357, 299]),
    ]
    ok = code == 0 and data["blocks"] == [p.to_json() for p in expected_blocks] and dt < 60
    report(6, "Picard-Fuchs operator QD_N", ok, f"({dt:.2f}s)")


def test_criterion_07_instantons(report):
    code, data, dt = cli("instantons", "--dmax", "10")
    expected = ["147", "756", "5283", "56970", "738477", "10964412", "177916032", "3091158090", "56551583952", "1077954415692"]
    report(7, "instanton numbers n1..n10", code == 0 and data["n"] == expected and dt < 30, f"({dt:.2f}s)")


def test_criterion_08_conics(report):
    code, data, dt = cli("conics")
    ok = code == 0 and data["conics11"] == {"X": "756", "Y": "1674", "Z": "468"}
    ok = ok and data["conics02"] == {"X": "0", "Y": "0", "Z": "36"} and data["total"] == {"X": "756", "Y": "1674", "Z": "504"}
    report(8, "conics (756, 1674, 504) = (1,1) + (0,2)", ok and dt < 5, f"({dt:.2f}s)")


def test_criterion_09_cross_route(report):
    _, inst, _ = cli("instantons", "--dmax", "2")
    _, lines, _ = cli("lines")
    _, conics, _ = cli("conics")
    ok = inst["n"] == [lines["lines"]["X"], conics["total"]["X"]] == ["147", "756"]
    report(9, "n1 = lines(X), n2 = conics(X)", ok)


def test_criterion_10_quintic(report):
    code, data, dt = cli("quintic", "--dmax", "1")
    ok = code == 0 and data["n"] == ["2875"] and data["grassmannian_lines"] == "2875" and dt < 2
    report(10, "quintic n1 = 2875 = Grassmannian oracle", ok, f"({dt:.2f}s)")


def test_criterion_11_property_suite(report):
    res = checks.property_suite()
    bad = [name for name, ok in res if not ok]
    report(11, "property suite", not bad and len(res) == 8, f"({len(res) - len(bad)}/{len(res)})" + (f" failed: {bad}" if bad else ""))


def test_check_command_is_green(report):
    code, data, _ = cli("check")
    assert code == 0 and all(c["ok"] for c in data["criteria"]) and len(data["criteria"]) == 11
