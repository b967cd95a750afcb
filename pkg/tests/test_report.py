"""Report envelope layout and the three renderers."""

import json

from solvlab.report import REPORT_VERSION, VerificationReport


def sample_report():
    rep = VerificationReport("verify", {"max_order": 60, "checks": "conjecture"})
    rep.items.append(
        {
            "group": "A_5",
            "order": 3,
            "flags": {"conjecture": True, "eq1": "skipped"},
            "primes": [2, 3, 5],
        }
    )
    rep.items.append(
        {"group": "S_4", "order": 2, "flags": {"conjecture": True}, "note": None}
    )
    for verdict in (True, True, "skipped"):
        rep.tally(verdict)
    return rep


class TestEnvelope:
    def test_top_level_keys_exact(self):
        d = sample_report().as_dict()
        assert list(d) == [
            "version",
            "command",
            "params",
            "items",
            "summary",
            "counterexamples",
        ]
        assert d["version"] == REPORT_VERSION
        assert list(d["summary"]) == ["checked", "failed", "skipped"]

    def test_tally_arithmetic(self):
        rep = VerificationReport("verify", {})
        for verdict in (True, False, True, "skipped", False, "skipped"):
            rep.tally(verdict)
        assert (rep.checked, rep.failed, rep.skipped) == (4, 2, 2)

    def test_json_round_trip(self):
        text = sample_report().render("json")
        assert text.endswith("\n")
        d = json.loads(text)
        assert d["summary"] == {"checked": 2, "failed": 0, "skipped": 1}
        assert d["items"][0]["group"] == "A_5"

    def test_render_is_deterministic(self):
        for fmt in ("json", "text", "csv"):
            assert sample_report().render(fmt) == sample_report().render(fmt)


class TestCsv:
    def test_header_flattens_nested_flags(self):
        lines = sample_report().render("csv").splitlines()
        assert lines[0] == "group,order,flags.conjecture,flags.eq1,primes,note"

    def test_cell_conventions(self):
        # booleans become ok/FAIL, None and missing keys become empty cells
        lines = sample_report().render("csv").splitlines()
        assert lines[1] == "A_5,3,ok,skipped,2 3 5,"
        assert lines[2] == "S_4,2,ok,,,"


class TestText:
    def test_layout(self):
        lines = sample_report().render("text").splitlines()
        assert lines[0] == "solv-lab verify"
        assert "max_order=60" in lines[1]
        assert lines[-1] == "checked 2  failed 0  skipped 1"

    def test_counterexamples_are_called_out(self):
        rep = VerificationReport("verify", {})
        rep.tally(False)
        rep.counterexamples.append({"group": "X", "flag": "conjecture"})
        out = rep.render("text")
        assert 'COUNTEREXAMPLE: {"group": "X", "flag": "conjecture"}' in out
