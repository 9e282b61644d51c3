import json
from fractions import Fraction as F

import pytest
from click.testing import CliRunner

from cartankit.catalog import (
    algebra_from_dict,
    bundled_fixtures,
    format_vector,
    load_algebra,
    load_bundled,
    load_verification_matrix,
    parse_rational,
    parse_vector,
)
from cartankit.cli import main
from cartankit.errors import IndexOutOfRange, JacobiViolation, ParseError


def write_json(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return path


BAD_JACOBI = {
    "name": "broken",
    "dim": 3,
    "basis": ["x", "y", "z"],
    "brackets": {"0,1": {"1": "1"}, "1,2": {"0": "1"}, "0,2": {"2": "1"}},
}


# ---------------------------------------------------------------------------
# file format
# ---------------------------------------------------------------------------


def test_bundled_catalog_contents():
    names = set(bundled_fixtures())
    expected = {
        "abelian1", "abelian2", "abelian3", "heisenberg", "heisenberg5",
        "aff1", "e2", "oscillator", "sl2", "gl2", "sl2xsl2",
        "sl2xR2", "sl2xR2xR", "sl2xheis", "r3_0", "r3_half", "r3_1", "r3_m1",
    }
    assert names == expected


def test_load_sl2(sl2):
    assert sl2.dim == 3
    assert sl2.basis_labels == ("h", "e", "f")
    assert sl2.bracket_basis(1, 2) == (F(1), F(0), F(0))


def test_empty_brackets_is_abelian():
    g = algebra_from_dict({"name": "a", "dim": 2, "basis": ["p", "q"], "brackets": {}})
    assert g.bracket((1, 0), (0, 1)) == (F(0), F(0))


def test_jacobi_violation_reported_with_witness(tmp_path):
    path = write_json(tmp_path, "broken.json", BAD_JACOBI)
    with pytest.raises(JacobiViolation) as exc:
        load_algebra(path)
    assert exc.value.triple == (0, 1, 2)
    assert exc.value.residual == (F(2), F(0), F(0))
    # loadable when the check is explicitly skipped
    assert load_algebra(path, skip_jacobi=True).dim == 3


def test_rational_strings_roundtrip():
    assert parse_rational("3/2") == F(3, 2)
    assert parse_rational("-1") == F(-1)
    assert parse_rational(4) == F(4)
    assert format_vector([F(3, 2), F(-1)]) == ["3/2", "-1"]
    assert parse_vector(["3/2", "-1"], 2) == (F(3, 2), F(-1))


def test_floats_rejected():
    with pytest.raises(ParseError):
        parse_rational(0.5)
    with pytest.raises(ParseError):
        algebra_from_dict(
            {"dim": 2, "basis": ["a", "b"], "brackets": {"0,1": {"0": 0.5}}}
        )


def test_index_out_of_range(tmp_path):
    payload = {"dim": 2, "basis": ["a", "b"], "brackets": {"0,5": {"0": "1"}}}
    with pytest.raises(IndexOutOfRange):
        algebra_from_dict(payload)
    payload = {"dim": 2, "basis": ["a", "b"], "brackets": {"0,1": {"7": "1"}}}
    with pytest.raises(IndexOutOfRange):
        algebra_from_dict(payload)


def test_lower_triangle_keys_rejected():
    with pytest.raises(ParseError):
        algebra_from_dict({"dim": 2, "basis": ["a", "b"], "brackets": {"1,0": {"0": "1"}}})


def test_malformed_files(tmp_path):
    path = tmp_path / "nonsense.json"
    path.write_text("{", encoding="utf-8")
    with pytest.raises(ParseError):
        load_algebra(path)
    with pytest.raises(ParseError):
        algebra_from_dict({"dim": "three", "basis": [], "brackets": {}})
    with pytest.raises(ParseError):
        load_bundled("no-such-fixture")


def test_verification_matrix_references_catalog():
    matrix = load_verification_matrix()
    fixtures = set(bundled_fixtures())
    assert set(matrix["ideals"]) <= fixtures
    assert set(matrix["chain_starts"]) <= fixtures


# ---------------------------------------------------------------------------
# command line
# ---------------------------------------------------------------------------


@pytest.fixture()
def runner():
    return CliRunner()


def fixture_path(name):
    return str(bundled_fixtures()[name])


def test_cli_analyze_sl2(runner):
    result = runner.invoke(main, ["analyze", fixture_path("sl2")])
    assert result.exit_code == 0
    assert "rank: 1" in result.output
    assert "semisimple: true" in result.output
    assert "radical: dim 0" in result.output


def test_cli_analyze_heisenberg(runner):
    result = runner.invoke(main, ["analyze", fixture_path("heisenberg")])
    assert result.exit_code == 0
    assert "rank: 3" in result.output
    assert "nilradical: dim 3" in result.output


def test_cli_analyze_aff1(runner):
    result = runner.invoke(main, ["analyze", fixture_path("aff1")])
    assert result.exit_code == 0
    assert "rank: 1" in result.output
    assert "nilradical: dim 1" in result.output


def test_cli_analyze_missing_file_exit_2(runner):
    result = runner.invoke(main, ["analyze", "no-such-file.json"])
    assert result.exit_code == 2


def test_cli_analyze_jacobi_violation_exit_2(runner, tmp_path):
    path = write_json(tmp_path, "broken.json", BAD_JACOBI)
    result = runner.invoke(main, ["analyze", str(path)])
    assert result.exit_code == 2


def test_cli_cartan_methods(runner):
    for method, expected_dim in [("regular", 1), ("composite", 1)]:
        result = runner.invoke(main, ["cartan", fixture_path("sl2"), "--method", method])
        assert result.exit_code == 0
        assert f"dim {expected_dim}" in result.output
    result = runner.invoke(main, ["cartan", fixture_path("sl2"), "--method", "chain"])
    assert result.exit_code == 2  # chain needs a solvable algebra


def test_cli_levi(runner):
    result = runner.invoke(main, ["levi", fixture_path("sl2xR2"), "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert len(payload["levi"]) == 3 and len(payload["radical"]) == 2


def test_cli_quotient_roundtrip(runner):
    result = runner.invoke(
        main,
        [
            "quotient",
            fixture_path("sl2xR2"),
            "--ideal",
            '[["0","0","0","1","0"],["0","0","0","0","1"]]',
        ],
    )
    assert result.exit_code == 0
    assert "quotient: dim 3" in result.output
    assert "pushed cartan: dim 1" in result.output
    assert "roundtrip exact: true" in result.output


def test_cli_quotient_full_ideal(runner):
    result = runner.invoke(
        main,
        ["quotient", fixture_path("heisenberg"), "--ideal",
         '[["1","0","0"],["0","1","0"],["0","0","1"]]'],
    )
    assert result.exit_code == 0
    assert "quotient: dim 0" in result.output


def test_cli_quotient_rejects_non_ideal(runner):
    result = runner.invoke(
        main, ["quotient", fixture_path("sl2"), "--ideal", '[["1","0","0"]]']
    )
    assert result.exit_code == 2


def test_cli_powermap_verdict_lines(runner):
    models_dir = fixture_path("sl2").rsplit("/", 1)[0] + "/models"
    result = runner.invoke(main, ["powermap", f"{models_dir}/sl2r-model.json", "-k", "2"])
    assert result.exit_code == 0
    assert "dense: false (class 2 fails: order 2)" in result.output
    result = runner.invoke(main, ["powermap", f"{models_dir}/sl2r-model.json", "-k", "3"])
    assert result.exit_code == 0
    assert "dense: true" in result.output


def test_cli_verify_empty_list(runner):
    result = runner.invoke(main, ["verify"])
    assert result.exit_code == 0
    assert "0 checks" in result.output


def test_cli_verify_single_fixture(runner):
    result = runner.invoke(main, ["verify", fixture_path("aff1")])
    assert result.exit_code == 0
    assert "failed" in result.output


def test_cli_verify_flags_corrupted_fixture(runner, tmp_path):
    path = write_json(tmp_path, "broken.json", BAD_JACOBI)
    result = runner.invoke(main, ["verify", str(path)])
    assert result.exit_code == 1
    assert "load-jacobi" in result.output


def test_cli_verify_json_shape(runner):
    result = runner.invoke(main, ["verify", fixture_path("abelian1"), "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["summary"]["failed"] == 0
    assert payload["fixtures"][0]["fixture"] == "abelian1"


def test_cli_catalog_listing(runner):
    result = runner.invoke(main, ["catalog"])
    assert result.exit_code == 0
    assert "sl2xheis" in result.output
    assert "sl2r-model" in result.output


def test_rescaled_sl2_is_a_valid_algebra_and_passes(runner, tmp_path):
    # doubling [e,f] only rescales the basis: the result is isomorphic to
    # sl2, satisfies Jacobi, and passes every invariant
    payload = {
        "name": "sl2-rescaled",
        "dim": 3,
        "basis": ["h", "e", "f"],
        "brackets": {"0,1": {"1": "2"}, "0,2": {"2": "-2"}, "1,2": {"0": "2"}},
    }
    path = write_json(tmp_path, "sl2-rescaled.json", payload)
    result = runner.invoke(main, ["verify", str(path)])
    assert result.exit_code == 0
