import io
import json
import shutil
import subprocess

import pytest

from reducts.cli import RunConfig, main, run
from reducts.errors import InputError

TRIPLE_CSV = "a1,a2,a3,a4\n0,0,0,0\n0,0,0,0\n1,0,1,0\n1,1,0,0\n2,1,1,1\n"


@pytest.fixture
def triple_csv(tmp_path):
    path = tmp_path / "triple_reduct.csv"
    path.write_text(TRIPLE_CSV)
    return str(path)


@pytest.fixture
def walkthrough_json(tmp_path, walkthrough_rows):
    path = tmp_path / "walkthrough.json"
    path.write_text(json.dumps(walkthrough_rows))
    return str(path)


@pytest.fixture
def ladder_family_json(tmp_path, ladder_family_rows):
    path = tmp_path / "ladder.json"
    path.write_text(json.dumps(ladder_family_rows))
    return str(path)


@pytest.fixture
def single_csv(tmp_path):
    path = tmp_path / "single.csv"
    path.write_text("a,b\n0,1\n")
    return str(path)


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, argv):
    code, out, err = run_cli(capsys, argv)
    assert code == 0, err
    parsed = json.loads(out)
    # Canonical output: parsing and re-serializing reproduces the bytes.
    assert json.dumps(parsed, indent=2, sort_keys=True) + "\n" == out
    return parsed


class TestClassify:
    def test_example_characters(self, capsys, triple_csv):
        report = run_json(capsys, ["classify", "--format", "json", triple_csv])
        assert report["command"] == "classify"
        assert report["attributes"] == ["a1", "a2", "a3", "a4"]
        assert report["result"]["characters"] == {
            "a1": "relative_necessary",
            "a2": "relative_necessary",
            "a3": "relative_necessary",
            "a4": "unnecessary",
        }
        assert report["result"]["core"] == []
        assert report["result"]["families"]["a4"]["substitutes"] == [
            ["a1", "a3"],
            ["a1", "a2"],
            ["a2", "a3"],
        ]

    def test_text_output(self, capsys, triple_csv):
        code, out, _ = run_cli(capsys, ["classify", triple_csv])
        assert code == 0
        assert "core: (none)" in out
        assert "a4: unnecessary" in out

    def test_family_input(self, capsys, walkthrough_json):
        report = run_json(capsys, ["classify", "--format", "json", walkthrough_json])
        assert sorted(report["result"]["characters"]) == list("abcdef")


class TestMatrix:
    def test_example_matrix(self, capsys, triple_csv):
        report = run_json(capsys, ["matrix", "--format", "json", triple_csv])
        pairs = report["result"]["pairs"]
        assert len(pairs) == 10
        by_objects = {tuple(p["objects"]): p["attributes"] for p in pairs}
        assert by_objects[("1", "2")] == []
        assert by_objects[("1", "3")] == ["a1", "a3"]
        assert by_objects[("4", "5")] == ["a1", "a3", "a4"]
        assert report["result"]["family"] == [
            ["a1", "a3"],
            ["a1", "a2"],
            ["a1", "a2", "a3", "a4"],
            ["a2", "a3"],
            ["a1", "a2", "a4"],
            ["a1", "a3", "a4"],
        ]

    def test_id_col_labels(self, capsys, tmp_path):
        path = tmp_path / "tagged.csv"
        path.write_text("id,p,q\nx,0,0\ny,1,0\nz,0,1\n")
        report = run_json(
            capsys, ["matrix", "--format", "json", "--id-col", str(path)]
        )
        objects = [p["objects"] for p in report["result"]["pairs"]]
        assert objects == [["x", "y"], ["x", "z"], ["y", "z"]]

    def test_rejects_family_input(self, capsys, walkthrough_json):
        code, _, err = run_cli(capsys, ["matrix", walkthrough_json])
        assert code == 1
        assert "table" in err


class TestReduct:
    def test_example_walkthrough(self, capsys, walkthrough_json):
        report = run_json(
            capsys,
            ["reduct", "--algo", "ea", "--select", "first", "--format", "json", walkthrough_json],
        )
        assert report["result"]["reduct"] == ["a", "b", "c", "e"]
        assert report["result"]["valid"] is True
        assert report["result"]["algorithm"] == "ea"
        assert report["result"]["policy"] == "first"

    def test_trace_records_the_first_step(self, capsys, walkthrough_json):
        report = run_json(
            capsys,
            ["reduct", "--algo", "ea", "--verbose", "--format", "json", walkthrough_json],
        )
        step = report["result"]["trace"][0]
        assert step["chosen"] == "a"
        assert step["inner_reduct"] == ["b", "c"]
        assert step["chosen_added"] is True
        assert step["blocked"] == ["a", "d"]
        assert step["substitutes"] == [["c", "d", "f"], ["b", "d"], ["b", "c"]]

    def test_row_wise_variant(self, capsys, walkthrough_json):
        report = run_json(
            capsys, ["reduct", "--algo", "yao", "--format", "json", walkthrough_json]
        )
        assert report["result"]["reduct"] == ["a", "c", "d", "e"]
        assert report["result"]["valid"] is True

    def test_no_minimize_flag(self, capsys, walkthrough_json):
        report = run_json(
            capsys, ["reduct", "--no-minimize", "--format", "json", walkthrough_json]
        )
        assert report["result"]["valid"] is True
        assert "raw" not in report["result"]

    def test_outputs_belong_to_the_oracle(self, capsys, triple_csv):
        oracle = run_json(capsys, ["all-reducts", "--format", "json", triple_csv])
        expected = {tuple(r) for r in oracle["result"]["reducts"]}
        for algo in ("ea", "yao"):
            for select in ("first", "freq"):
                report = run_json(
                    capsys,
                    ["reduct", "--algo", algo, "--select", select,
                     "--format", "json", triple_csv],
                )
                assert tuple(report["result"]["reduct"]) in expected


class TestAllReducts:
    def test_example_reducts(self, capsys, triple_csv):
        report = run_json(capsys, ["all-reducts", "--format", "json", triple_csv])
        assert report["result"]["reducts"] == [
            ["a1", "a2"],
            ["a1", "a3"],
            ["a2", "a3"],
        ]
        assert report["result"]["count"] == 3
        assert report["warnings"] == []

    def test_single_object_table(self, capsys, single_csv):
        report = run_json(capsys, ["all-reducts", "--format", "json", single_csv])
        assert report["result"]["reducts"] == [[]]
        assert report["result"]["count"] == 1

    def test_cap_exceeded(self, capsys, triple_csv):
        code, _, err = run_cli(capsys, ["all-reducts", "--max-attrs", "3", triple_csv])
        assert code == 3
        assert "refusing" in err

    def test_raised_cap_warns(self, capsys, triple_csv):
        report = run_json(
            capsys, ["all-reducts", "--max-attrs", "25", "--format", "json", triple_csv]
        )
        assert any("25" in w for w in report["warnings"])

    def test_nonpositive_cap_is_an_input_error(self, capsys, triple_csv):
        code, _, err = run_cli(capsys, ["all-reducts", "--max-attrs", "0", triple_csv])
        assert code == 1


class TestRelations:
    def test_example_survey(self, capsys, triple_csv):
        report = run_json(
            capsys,
            [
                "relations",
                "--excludes", "a1,a2->a3",
                "--excludes=->a4",
                "--format", "json",
                triple_csv,
            ],
        )
        assert report["result"]["finer"] == [["a1", "a4"]]
        assert report["result"]["equivalent"] == []
        assert report["result"]["coupled"] == []
        assert report["result"]["exclusions"] == [
            {"given": ["a1", "a2"], "attribute": "a3", "excluded": True},
            {"given": [], "attribute": "a4", "excluded": True},
        ]

    def test_family_exclusion_query(self, capsys, ladder_family_json):
        report = run_json(
            capsys,
            ["relations", "--excludes", "a2->a1", "--format", "json",
             ladder_family_json],
        )
        assert report["result"]["exclusions"] == [
            {"given": ["a2"], "attribute": "a1", "excluded": True}
        ]

    def test_unknown_attribute_in_query(self, capsys, triple_csv):
        code, _, err = run_cli(
            capsys, ["relations", "--excludes", "zz->a1", triple_csv]
        )
        assert code == 1
        assert "zz" in err

    def test_malformed_query(self, capsys, triple_csv):
        code, _, err = run_cli(capsys, ["relations", "--excludes", "a1", triple_csv])
        assert code == 1


class TestAudit:
    def test_example_audit(self, capsys, triple_csv):
        report = run_json(capsys, ["audit", "--format", "json", triple_csv])
        result = report["result"]
        assert result["all_agree"] is False
        assert result["disagreements"] == 1
        rows = result["claims"]["avoiding_escape"]
        flagged = [r for r in rows if not r["agree"]]
        assert len(flagged) == 1
        assert flagged[0]["subject"] == "a=a4"
        assert flagged[0]["counterexample"]
        for claim, claim_rows in result["claims"].items():
            if claim != "avoiding_escape":
                assert all(r["agree"] for r in claim_rows), claim

    def test_disagreement_still_exits_zero(self, capsys, triple_csv):
        code, out, _ = run_cli(capsys, ["audit", triple_csv])
        assert code == 0
        assert "disagreement: avoiding_escape at a=a4" in out

    def test_rejects_family_input(self, capsys, walkthrough_json):
        code, _, err = run_cli(capsys, ["audit", walkthrough_json])
        assert code == 1

    def test_cap_exceeded(self, capsys, tmp_path):
        path = tmp_path / "wide.csv"
        names = [f"c{i}" for i in range(11)]
        path.write_text(
            ",".join(names) + "\n" + ",".join("0" * 11) + "\n" + ",".join("1" * 11) + "\n"
        )
        code, _, err = run_cli(capsys, ["audit", str(path)])
        assert code == 3


class TestCovering:
    def test_example_space(self, capsys, triple_csv):
        report = run_json(capsys, ["covering", "--format", "json", triple_csv])
        a4 = report["result"]["elements"]["a4"]
        assert a4["minimal_description"] == [["a1", "a2", "a4"], ["a1", "a3", "a4"]]
        assert a4["neighborhood"] == ["a1", "a4"]
        assert a4["all_true"] is False
        assert report["result"]["ground"] == ["a1", "a2", "a3", "a4"]

    def test_uncovered_attributes_warn(self, capsys, single_csv):
        report = run_json(capsys, ["covering", "--format", "json", single_csv])
        assert report["result"]["elements"] == {}
        assert len(report["warnings"]) == 2


class TestInputHandling:
    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, ["classify", "/nonexistent/input.csv"])
        assert code == 1
        assert "/nonexistent/input.csv" in err

    def test_bad_json(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("[[not json")
        code, _, err = run_cli(capsys, ["classify", str(path)])
        assert code == 1
        assert "invalid JSON" in err

    def test_json_wrong_shape(self, capsys, tmp_path):
        path = tmp_path / "shape.json"
        path.write_text('{"a": 1}')
        code, _, err = run_cli(capsys, ["classify", str(path)])
        assert code == 1

    def test_ragged_csv(self, capsys, tmp_path):
        path = tmp_path / "ragged.csv"
        path.write_text("a,b\n0\n1,2\n")
        code, _, err = run_cli(capsys, ["classify", str(path)])
        assert code == 1
        assert "ragged.csv" in err

    def test_kind_override(self, capsys, tmp_path, walkthrough_rows):
        path = tmp_path / "family.txt"
        path.write_text(json.dumps(walkthrough_rows))
        report = run_json(
            capsys,
            ["classify", "--kind", "family", "--format", "json", str(path)],
        )
        assert sorted(report["result"]["characters"]) == list("abcdef")

    def test_malformed_corpus_never_exits_two(self, capsys, tmp_path):
        corpus = {
            "empty.csv": "",
            "header_only.csv": "a,b\n",
            "dup_names.csv": "a,a\n0,1\n",
            "ragged.csv": "a,b\n0,1\n2\n",
            "empty_member.json": "[[]]",
            "numbers.json": "[[1, 2]]",
            "scalar.json": "42",
            "truncated.json": "[[\"a\"",
        }
        for name, text in corpus.items():
            path = tmp_path / name
            path.write_text(text)
            for command in ("classify", "reduct", "all-reducts", "relations"):
                code, _, _ = run_cli(capsys, [command, str(path)])
                assert code == 1, (name, command)

    def test_usage_errors_exit_one(self, capsys, triple_csv):
        assert main([]) == 1
        assert main(["reduct", "--algo", "nope", triple_csv]) == 1
        assert main(["nonsense", triple_csv]) == 1


class TestRunApi:
    def test_run_writes_to_stream(self, triple_csv):
        out = io.StringIO()
        config = RunConfig(path=triple_csv, kind="table", command="classify", fmt="json")
        assert run(config, out) == 0
        assert json.loads(out.getvalue())["command"] == "classify"

    def test_config_validates_kind_and_cap(self, triple_csv):
        with pytest.raises(InputError):
            RunConfig(path=triple_csv, kind="stream", command="classify")
        with pytest.raises(InputError):
            RunConfig(
                path=triple_csv, kind="table", command="audit", max_attrs=0
            )


def test_console_script_is_wired(triple_csv):
    executable = shutil.which("reducts")
    assert executable, "console script not installed"
    done = subprocess.run(
        [executable, "classify", "--format", "json", triple_csv],
        capture_output=True,
        text=True,
    )
    assert done.returncode == 0
    assert json.loads(done.stdout)["result"]["characters"]["a4"] == "unnecessary"
