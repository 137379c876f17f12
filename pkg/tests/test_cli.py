import json
import random
from pathlib import Path

import jsonschema
import pytest

from skewgalois.cli import main
from skewgalois.cli.config import ConfigError, algebra_from_text, load_config, load_schema
from skewgalois.cli.expr import ExpressionError, format_element, parse_expression, tokenize
from skewgalois.cli.runner import run_verification, strip_timings
from skewgalois.normform import hamilton
from skewgalois.poly import Poly
from skewgalois.ratfunc import KT
from skewgalois.skewfrac import SkewRationalField
from skewgalois.structalg import matrix_algebra

ROOT = Path(__file__).resolve().parent.parent
CONFIGS = ROOT / "configs"
GOLDEN = Path(__file__).resolve().parent / "golden"
HT = SkewRationalField(hamilton())
t = KT.gen()


def ev(text, parent=HT):
    return parse_expression(parent, text)


def canonical(report):
    return json.dumps(strip_timings(report), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def test_parse_examples():
    assert ev("(1 + i*t) * (1 + i*t)^-1") == HT.one()
    assert not ev("i*j − k")
    assert ev("(1+i*t)*(1+j*t)") == HT.element([1, t, t, t**2])
    assert ev("-i^2") == HT.one()
    assert ev("(-i)^2") == HT.element([-1, 0, 0, 0])


def test_parse_precedence_and_literals():
    assert ev("1 - 2 - 3") == HT.element([-4, 0, 0, 0])
    assert ev("3/4*t^2") == HT.element([KT.convert(Poly([0, 0, "3/4"])), 0, 0, 0])
    assert ev("e2*e3") == ev("k")
    assert ev("(2)^(-1)") == HT.element(["1/2", 0, 0, 0])
    assert ev("  i   *\tj ") == ev("k")


def test_parse_in_matrix_algebra():
    M = SkewRationalField(matrix_algebra(2))
    x = ev("e2*e3", M)
    assert x == M.element([1, 0, 0, 0])


@pytest.mark.parametrize("text,pos", [("i +", 3), ("(1 + i", 6), ("i * * j", 4), ("2 $ i", 2),
                                      ("i^j", 2), ("1 2", 2)])
def test_parse_error_positions(text, pos):
    with pytest.raises(ExpressionError) as info:
        ev(text)
    assert info.value.position == pos
    assert info.value.expected


def test_parse_error_kinds():
    with pytest.raises(ExpressionError) as info:
        ev("i + q")
    assert info.value.position == 4
    with pytest.raises(ExpressionError):
        ev("(i - i)^-1")
    with pytest.raises(ExpressionError):
        ev("0^-1")


def test_tokenize_unicode_minus():
    assert [tok.text for tok in tokenize("1 − i")] == ["1", "-", "i", ""]


def random_element(rng):
    coords = []
    for _ in range(4):
        num = Poly([rng.randint(-4, 4) for _ in range(rng.randint(0, 3))])
        den = Poly([rng.randint(1, 3), rng.randint(-2, 2)])
        coords.append(KT.convert(num) / KT.convert(den))
    return HT.element(coords)


def test_print_parse_round_trip():
    rng = random.Random(2024)
    for _ in range(50):
        x = random_element(rng)
        assert ev(format_element(x)) == x


def test_algebra_from_text():
    assert algebra_from_text("hamilton") == hamilton()
    assert algebra_from_text("matrix:2").dim == 4
    assert algebra_from_text("quaternion:1,1").dim == 4
    with pytest.raises(ConfigError):
        algebra_from_text("octonion")


def test_verify_exit_codes(tmp_path, capsys):
    assert main(["verify", str(CONFIGS / "split_quaternion.json"), "-o",
                 str(tmp_path / "r.json")]) == 1
    report = json.loads((tmp_path / "r.json").read_text())
    division = [e for e in report["tasks"] if e["kind"] == "division_algebra"][0]
    assert division["status"] == "fail"
    assert division["witness"] == {"zero": ["1", "1", "0", "0"]}
    assert main(["verify", str(CONFIGS / "missing_fixture.json")]) == 2
    assert "nowhere" in capsys.readouterr().err


def test_schema_violation_is_usage_error(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"schema_version": "1", "tasks": []}))
    assert main(["verify", str(path)]) == 2
    path.write_text("{not json")
    assert main(["verify", str(path)]) == 2
    dup = {"schema_version": "1", "algebra": {"matrix": 2},
           "tasks": [{"name": "a", "kind": "is_simple"}, {"name": "a", "kind": "is_simple"}]}
    path.write_text(json.dumps(dup))
    assert main(["verify", str(path)]) == 2


def test_usage_errors_exit_two():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["verify"])
    assert info.value.code == 2


def test_broken_table_rejected_with_triple():
    job = load_config(CONFIGS / "broken_table.json")
    report = run_verification(job)
    structure, norm = report["tasks"]
    assert structure["status"] == "fail"
    assert structure["witness"] == {"kind": "associativity", "indices": [2, 2, 3]}
    assert norm["status"] == "fail" and norm["witness"]["indices"] == [2, 2, 3]


def test_report_is_schema_valid_and_complete():
    job = load_config(CONFIGS / "split_quaternion.json")
    report = run_verification(job)
    jsonschema.validate(report, load_schema("report"))
    assert [e["name"] for e in report["tasks"]] == [t["name"] for t in job.tasks]
    assert all("witness" in e for e in report["tasks"] if e["status"] == "fail")


def test_golden_report(tmp_path):
    out = tmp_path / "report.json"
    assert main(["verify", str(CONFIGS / "hamilton.json"), "-o", str(out)]) == 0
    first = canonical(json.loads(out.read_text()))
    assert first == (GOLDEN / "hamilton.report.json").read_text()
    again = canonical(run_verification(load_config(CONFIGS / "hamilton.json")))
    assert again == first


def test_config_overrides():
    job = load_config(CONFIGS / "split_quaternion.json", seed=99)
    assert job.seed == 99
    assert load_config(CONFIGS / "hamilton.json", order=8).series_order == 8


def test_eval_command(capsys):
    assert main(["eval", "(1+i*t)^-1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["coords"] == ["(1)/(t^2 + 1)", "(-t)/(t^2 + 1)", "0", "0"]
    assert main(["eval", "i +"]) == 1
    assert "position 3" in capsys.readouterr().err


def test_construct_s3_command(capsys):
    assert main(["construct-s3", "--p0", "0,-1,0,1", "--p1=-1,-1,0,1", "-n", "8"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["P"] == "x^3 - x - t" and out["s3"]
    assert len(out["roots"]) == 3 and out["distinct_at_order_2"]
    assert all(r["residual_valuation"] == "inf" or r["residual_valuation"] >= 8
               for r in out["roots"])
    # x^3 - t has group S3 but its root at t = 0 is not simple
    assert main(["construct-s3", "--p0", "0,0,0,1", "--p1=-1,0,0,1"]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["s3"] and "lift_error" in out and not out["distinct_at_order_2"]
    assert main(["construct-s3", "--p0", "0,-1,0,1", "--p1=0,-1,0,1"]) == 1
    out = json.loads(capsys.readouterr().out)
    assert not out["s3"] and "root" in out
    assert main(["construct-s3", "--p0", "0,1", "--p1=1,0,1"]) == 2
