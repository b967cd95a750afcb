"""End-to-end runs of the solv-lab command line through main(argv)."""

import json

import pytest

from solvlab.cli import main
from solvlab.families import CatalogEntry, FamilySpec, save_group_file


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out), err


class TestSol:
    def test_a5_five_cycle(self, capsys):
        code, doc, _ = run_json(capsys, "sol", "--family", "a:5", "--order", "5")
        assert code == 0
        assert doc["command"] == "sol"
        item = doc["items"][0]
        assert item["sol_size"] == 10
        assert item["nx_order"] == 10
        assert item["nx_structure"] == "D_10"
        assert item["ratio34"] == "3/1"
        assert item["flags"] == {
            "conjecture": True,
            "is_subgroup": True,
            "equals_nx": True,
        }

    def test_explicit_element(self, capsys):
        code, doc, _ = run_json(
            capsys, "sol", "--family", "a:5", "--element", "(1,2)(3,4)"
        )
        assert code == 0
        item = doc["items"][0]
        assert item["order"] == 2
        assert item["sol_size"] == 36
        assert not item["flags"]["is_subgroup"]

    def test_group_file_input(self, capsys, tmp_path):
        entry = CatalogEntry.from_spec(FamilySpec("dihedral", (6,)))
        path = tmp_path / "d6.group"
        save_group_file(path, "hexagon", entry.group)
        code, doc, _ = run_json(
            capsys, "sol", "--file", str(path), "--order", "6"
        )
        assert code == 0
        # soluble group, so the solubilizer is everything
        assert doc["items"][0]["sol_size"] == 12
        assert doc["params"]["group"] == "hexagon"

    def test_element_outside_group(self, capsys):
        code, out, err = run(capsys, "sol", "--family", "a:5", "--element", "(1,2)")
        assert code == 1
        assert out == ""
        assert "not in" in err

    def test_no_element_of_order(self, capsys):
        code, _, err = run(capsys, "sol", "--family", "a:5", "--order", "7")
        assert code == 1
        assert "no element of order 7" in err

    def test_unknown_family_token(self, capsys):
        code, _, err = run(capsys, "sol", "--family", "q:5", "--order", "2")
        assert code == 1
        assert "unknown family token" in err

    def test_bad_family_parameters(self, capsys):
        code, _, err = run(capsys, "sol", "--family", "a:x", "--order", "2")
        assert code == 1
        assert "must be integers" in err


class TestUsageErrors:
    def test_missing_subcommand_exits_1(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 1

    def test_sol_requires_an_element_selector(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["sol", "--family", "a:5"])
        assert exc.value.code == 1
        assert "error" in capsys.readouterr().err

    def test_bad_format_choice_exits_1(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["table1", "--format", "yaml"])
        assert exc.value.code == 1


class TestTable1:
    def test_reference_table_matches(self, capsys):
        code, doc, _ = run_json(capsys, "table1")
        assert code == 0
        assert len(doc["items"]) == 5
        assert doc["summary"] == {"checked": 6, "failed": 0, "skipped": 0}
        assert doc["counterexamples"] == []

    def test_identity_column_convention(self, capsys):
        _, doc, _ = run_json(capsys, "table1")
        identity = doc["items"][0]
        assert identity["column"] == "identity"
        assert identity["ell_cx"] == 1
        assert identity["ratio34"] == "1/1"
        assert identity["engine_ell_cx"] == 5
        assert identity["engine_ratio34"] == "5/1"
        assert "note" in identity

    def test_both_5_classes_agree(self, capsys):
        _, doc, _ = run_json(capsys, "table1")
        last = doc["items"][-1]
        assert last["column"] == "5-cycle"
        assert last["flags"]["agrees_with_first_5_class"] is True


class TestVerify:
    def test_small_sweep_passes(self, capsys):
        code, doc, _ = run_json(
            capsys, "verify", "--max-order", "24", "--checks", "conjecture,pq"
        )
        assert code == 0
        assert doc["summary"]["failed"] == 0
        assert doc["summary"]["checked"] > 0
        assert doc["params"] == {
            "max_order": 24,
            "checks": ["conjecture", "pq"],
            "cap": 20000,
        }
        assert "jobs" not in doc["params"]

    def test_unknown_check_token(self, capsys):
        code, _, err = run(capsys, "verify", "--checks", "conjecture,bogus")
        assert code == 1
        assert "unknown check token" in err
        assert "bogus" in err

    def test_max_order_beyond_cap(self, capsys):
        code, _, err = run(capsys, "verify", "--max-order", "30000")
        assert code == 1
        assert "exceeds the element cap" in err

    def test_csv_header(self, capsys):
        code, out, _ = run(
            capsys,
            "verify",
            "--max-order",
            "12",
            "--checks",
            "conjecture",
            "--format",
            "csv",
        )
        assert code == 0
        header = out.splitlines()[0]
        assert header.startswith("group,element,order,sol_size")

    def test_text_format_totals_line(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--max-order", "12", "--checks", "conjecture"
        )
        assert code == 0
        assert out.splitlines()[-1].startswith("checked ")
        assert "failed 0" in out


class TestDeterminism:
    # same flags must give byte-identical output however the work is split

    def test_repeat_runs_identical(self, capsys):
        args = ("verify", "--max-order", "60", "--checks", "lemma32,ratio34",
                "--format", "json")
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second

    def test_jobs_do_not_change_bytes(self, capsys):
        base = ("verify", "--max-order", "60", "--checks", "conjecture",
                "--format", "json")
        _, serial, _ = run(capsys, *base)
        _, parallel, _ = run(capsys, *base, "--jobs", "2")
        assert serial == parallel


class TestClassify:
    def test_small_theorem44_run(self, capsys):
        code, doc, _ = run_json(
            capsys, "classify", "--mode", "theorem44",
            "--max-r", "4", "--max-d", "3", "--max-q", "100",
        )
        assert code == 0
        labels = [item["label"] for item in doc["items"]]
        assert "PSL(2,4)" in labels
        assert "PSL(3,2)" in labels
        assert "m23" in labels
        assert all(item["in_theorem44"] for item in doc["items"])
        assert doc["summary"]["failed"] == 0
        # only the two groups with permutation models get brute-forced here
        assert doc["summary"]["checked"] == 2

    def test_table2_includes_negative_rows(self, capsys):
        code, doc, _ = run_json(
            capsys, "classify", "--max-r", "4", "--max-d", "3", "--max-q", "100",
        )
        assert code == 0
        negatives = [i for i in doc["items"] if not i["in_theorem44"]]
        assert [n["family"] for n in negatives] == ["psl2_mersenne"]
        assert doc["summary"]["failed"] == 0

    def test_skipped_rows_carry_a_reason(self, capsys):
        _, doc, _ = run_json(
            capsys, "classify", "--mode", "theorem44",
            "--max-r", "4", "--max-d", "3", "--max-q", "100",
        )
        skipped = [
            i for i in doc["items"]
            if i["flags"]["cross_validation"] == "skipped"
        ]
        assert skipped and all("validation_reason" in i for i in skipped)

    def test_classify_deterministic(self, capsys):
        args = ("classify", "--mode", "theorem44", "--max-r", "4",
                "--max-d", "3", "--max-q", "100", "--format", "json")
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second


class TestZsigmondyCommand:
    def test_17_6(self, capsys):
        code, doc, _ = run_json(capsys, "zsigmondy", "17", "6")
        assert code == 0
        item = doc["items"][0]
        assert item["primitive_primes"] == [7, 13]
        assert item["primitive_part"] == 91
        assert item["flags"]["exists"] is True

    def test_exceptional_pair_is_not_an_error(self, capsys):
        code, doc, _ = run_json(capsys, "zsigmondy", "2", "6")
        assert code == 0
        item = doc["items"][0]
        assert item["flags"]["exists"] is False
        assert "exception" in item["note"]

    def test_non_prime_power_base(self, capsys):
        code, _, err = run(capsys, "zsigmondy", "6", "3")
        assert code == 1
        assert "not a prime power" in err
