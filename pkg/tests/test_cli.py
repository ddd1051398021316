"""CLI tests: golden JSON documents, exit codes, determinism."""

import json

import pytest

from twobridge import cli
from twobridge.errors import InternalCheckFailed

GOLDEN_KNOT_INFO_3_4 = {
    "schema_version": 1,
    "command": "knot-info",
    "c1": 3,
    "c2": 4,
    "b1": 1,
    "b2": 2,
    "p": 11,
    "q": 4,
    "slope": 8,
    "mirrored": False,
    "fibered": True,
    "genus": 2,
    "lens": [11, 4],
    "even_expansion": [2, -2, -2, -2],
    "alexander": {
        "coefficients": [[-2, 1], [-1, -3], [0, 3], [1, -3], [2, 1]],
        "determinant": 11,
        "value_at_1": -1,
        "span": 4,
        "monic": True,
    },
    "lspace": {
        "admits": False,
        "reason": "DeterminantExceedsGenusBound",
        "determinant": 11,
        "genus": 2,
        "bound": 5,
    },
}

GOLDEN_PRESENTATION_3_4 = {
    "schema_version": 1,
    "command": "presentation",
    "c1": 3,
    "c2": 4,
    "g1": {"generators": ["a", "b"], "relators": ["a^2 b^-3"]},
    "g2": {"generators": ["x", "y", "z"],
           "relators": ["x^-1 y x y", "y z^-2"]},
    "amalgam": {"generators": ["x", "y", "z", "a", "b"],
                "relators": ["x^-1 y x y", "y z^-2", "a^2 b^-3",
                             "b^-1 a y^-1", "a^2 x^-2 z^-1"]},
    "gluing": {"mu": "b^-1 a", "h": "a^2", "mu_image": "y",
               "h_image": "z x^2"},
}


def run_cli(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_knot_info_golden(capsys):
    code, doc = run_cli(capsys, ["knot-info", "--c1", "3", "--c2", "4"])
    assert code == 0
    assert doc == GOLDEN_KNOT_INFO_3_4


def test_knot_info_mirrored(capsys):
    code, doc = run_cli(capsys, ["knot-info", "--c1", "-3", "--c2", "4"])
    assert code == 0
    assert doc["mirrored"] is True
    assert doc["c1"] == 3 and doc["c2"] == -4


def test_out_of_family_exit_2(capsys):
    code, doc = run_cli(capsys, ["knot-info", "--c1", "3", "--c2", "2"])
    assert code == 2
    assert doc["error"]["code"] == "OutOfFamily"
    code, doc = run_cli(capsys, ["certify", "--c1", "4", "--c2", "4"])
    assert code == 2
    assert doc["error"]["code"] == "OutOfFamily"


def test_presentation_golden(capsys):
    code, doc = run_cli(capsys, ["presentation", "--c1", "3", "--c2", "4"])
    assert code == 0
    assert doc == GOLDEN_PRESENTATION_3_4


def test_order_sign_meridian(capsys):
    code, doc = run_cli(capsys, ["order-sign", "--group", "g1",
                                 "--c1", "3", "--c2", "4", "b^-1 a"])
    assert code == 0
    assert doc["sign"] == "Positive"
    assert doc["trace"] == {"decided_by": "test-point", "test_point": 1,
                            "group": "g1"}


def test_order_sign_conjugated_reversed(capsys):
    code, doc = run_cli(capsys, ["order-sign", "--group", "g2",
                                 "--c1", "3", "--c2", "4",
                                 "--conjugator", "x", "--reversed", "y"])
    assert code == 0
    assert doc["sign"] == "Positive"
    assert doc["trace"] == {"group": "g2", "decided_by": "layer-2-t",
                            "t": -2}
    assert doc["reversed"] is True


def test_order_sign_layer3_trace(capsys):
    code, doc = run_cli(capsys, ["order-sign", "--group", "g2",
                                 "--c1", "3", "--c2", "4",
                                 "z x^-1 z x z^-1 x^-1 z^-1 x"])
    assert code == 0
    assert doc["sign"] == "Negative"
    assert doc["trace"]["decided_by"] == "layer-3-magnus"


def test_order_sign_parse_error_exit_3(capsys):
    code, doc = run_cli(capsys, ["order-sign", "--group", "g1",
                                 "--c1", "3", "--c2", "4", "q v"])
    assert code == 3
    assert doc["error"]["code"] == "ParseError"


def test_internal_check_failed_exit_4(capsys, monkeypatch):
    def explode(params, group):
        raise InternalCheckFailed("synthetic")

    monkeypatch.setattr(cli, "ConeOracle", explode)
    code, doc = run_cli(capsys, ["order-sign", "--group", "g1",
                                 "--c1", "3", "--c2", "4", "a"])
    assert code == 4
    assert doc["error"]["code"] == "InternalCheckFailed"


def test_certify_small_run(capsys):
    argv = ["certify", "--c1", "3", "--c2", "4", "--radius", "3",
            "--conj-len", "2", "--peripheral-box", "2", "--samples", "200",
            "--members", "6", "--check", "cone"]
    code, doc = run_cli(capsys, argv)
    assert code == 0
    assert doc["verdict"] == "Certified"
    assert [r["check"] for r in doc["reports"]] == ["cone-g1", "cone-g2"]
    assert all(r["verdict"] == "Certified" for r in doc["reports"])
    assert doc["budget"]["seed"] == 0


def test_certify_seed_sources(capsys, monkeypatch):
    argv = ["certify", "--c1", "3", "--c2", "4", "--radius", "3",
            "--conj-len", "2", "--peripheral-box", "2", "--samples", "50",
            "--members", "4", "--check", "restrict"]
    monkeypatch.setenv("TWOBRIDGE_SEED", "7")
    code, doc = run_cli(capsys, argv)
    assert code == 0 and doc["budget"]["seed"] == 7
    code, doc = run_cli(capsys, argv + ["--seed", "9"])
    assert code == 0 and doc["budget"]["seed"] == 9


def test_certify_deterministic_output(capsys):
    argv = ["certify", "--c1", "3", "--c2", "4", "--radius", "3",
            "--conj-len", "2", "--peripheral-box", "2", "--samples", "100",
            "--members", "5", "--check", "navas"]
    cli.main(argv)
    first = capsys.readouterr().out
    cli.main(argv)
    second = capsys.readouterr().out
    assert first == second


def test_out_file_writes_copy(capsys, tmp_path):
    target = tmp_path / "info.json"
    code, doc = run_cli(capsys, ["knot-info", "--c1", "3", "--c2", "4",
                                 "--out", str(target)])
    assert code == 0
    assert json.loads(target.read_text()) == doc


def test_selftest_passes(capsys):
    code, doc = run_cli(capsys, ["selftest"])
    assert code == 0
    assert doc["passed"] is True
    names = {r["name"] for r in doc["results"]}
    assert names == {"alexander-b(3,1)", "alexander-b(5,3)",
                     "alexander-family-(3,4)", "exact-lift-identities",
                     "corrupted-minpoly-rejected", "mutation-detection"}
    assert all(r["passed"] for r in doc["results"])


def test_usage_errors_exit_64():
    with pytest.raises(SystemExit) as exc_info:
        cli.main(["knot-info", "--c1", "3"])
    assert exc_info.value.code == 64
    with pytest.raises(SystemExit) as exc_info:
        cli.main(["certify", "--c1", "3", "--c2", "4", "--check", "bogus"])
    assert exc_info.value.code == 64
