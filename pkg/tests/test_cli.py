"""Command-line driver: reports, exit codes, JSON stability."""

import json
import re
import subprocess
import sys

import pytest

from beauville.cli import main

A6_QUAD = ["(1,2)(3,4,5,6)", "(1,5,6,4)(2,3)", "(1,2,3,4,5)", "(2,6,4,5,3)"]


def run(capsys, argv):
    rc = main(argv)
    out = capsys.readouterr().out
    return rc, out


def run_json(capsys, argv):
    rc = main(argv + ["--json"])
    out = capsys.readouterr().out
    return rc, json.loads(out)


def strip_wall_time(text):
    return re.sub(r'"wall_time_s": [0-9.e+-]+', '"wall_time_s": _', text)


class TestVerifyMixable:
    def test_a6_fixture_passes(self, capsys):
        rc, out = run(capsys, ["verify-mixable", "alt:6"] + A6_QUAD)
        assert rc == 0
        assert "(4,4,4;5,5,5)" in out
        assert out.count("[ pass  ]") == 6

    def test_json_report_shape(self, capsys):
        rc, payload = run_json(capsys, ["verify-mixable", "alt:6"] + A6_QUAD)
        assert rc == 0
        assert payload["schema"] == 1
        assert payload["group"] == {"spec": "alt:6", "order": 360, "degree": 6}
        assert payload["status"] == "pass"
        assert payload["nu"] == [64, 125]
        assert {c["name"] for c in payload["conditions"]} == {
            "perfect",
            "first_pair_generates",
            "second_pair_generates",
            "x1_order_even",
            "y1_order_even",
            "nu_coprime",
        }
        assert all(c["verdict"] == "pass" for c in payload["conditions"])

    def test_two_odd_triples_fail_evenness(self, capsys):
        rc, payload = run_json(
            capsys,
            [
                "verify-mixable",
                "alt:6",
                "(1,2,3,4,5)",
                "(2,6,4,5,3)",
                "(1,2,3,4,5)",
                "(2,6,4,5,3)",
            ],
        )
        assert rc == 1
        verdicts = {c["name"]: c for c in payload["conditions"]}
        assert verdicts["x1_order_even"]["verdict"] == "fail"
        assert "o(x1) = 5" in verdicts["x1_order_even"]["witness"]
        assert verdicts["nu_coprime"]["verdict"] == "fail"

    def test_every_fail_carries_witness(self, capsys):
        rc, payload = run_json(
            capsys,
            ["verify-mixable", "sym:4", "(1,2)", "(1,2,3,4)", "(1,2,3)", "(1,2)(3,4)"],
        )
        assert rc == 1
        for c in payload["conditions"]:
            if c["verdict"] == "fail":
                assert c["witness"]

    def test_words_evaluate_against_named_generators(self, capsys):
        rc, out = run(
            capsys,
            [
                "verify-mixable",
                "m11.grp",
                "ab(ab^2)^2",
                "(ab(ab^2)^2)^b",
                "(ab)^5",
                "[a,b]^2",
            ],
        )
        assert rc == 0
        assert "(8,8,5;11,3,11)" in out

    def test_unknown_group_is_an_error(self, capsys):
        rc = main(["verify-mixable", "nope.grp"] + A6_QUAD)
        assert rc == 2
        assert "error:" in capsys.readouterr().err


class TestJsonStability:
    def test_identical_runs_byte_identical_modulo_wall_time(self, capsys):
        argv = ["verify-mixable", "alt:6"] + A6_QUAD + ["--json"]
        main(argv)
        first = capsys.readouterr().out
        main(argv)
        second = capsys.readouterr().out
        assert strip_wall_time(first) == strip_wall_time(second)

    def test_seeded_search_byte_identical(self, capsys):
        argv = ["search-triple", "psl2:11", "--type", "6,6,6", "--seed", "5", "--json"]
        main(argv)
        first = capsys.readouterr().out
        main(argv)
        second = capsys.readouterr().out
        assert strip_wall_time(first) == strip_wall_time(second)

    def test_round_trip_reserializes_identically(self, capsys):
        rc, payload = run_json(capsys, ["count-triples", "psl2:7", "--type", "4,4,4"])
        assert rc == 0
        assert json.dumps(payload, sort_keys=True, indent=2) == json.dumps(
            json.loads(json.dumps(payload, sort_keys=True, indent=2)),
            sort_keys=True,
            indent=2,
        )

    def test_keys_emitted_sorted(self, capsys):
        main(["zsigmondy", "--a", "3", "--n", "4", "--json"])
        out = capsys.readouterr().out
        top_keys = re.findall(r'^  "([a-z_]+)":', out, flags=re.M)
        assert top_keys == sorted(top_keys)


class TestBuildMixed:
    def test_check_passes_all_conditions(self, capsys):
        rc, payload = run_json(capsys, ["build-mixed", "alt:6", "--k", "2", "--check"])
        assert rc == 0
        assert [c["verdict"] for c in payload["conditions"]] == ["pass"] * 4
        assert [c["name"] for c in payload["conditions"]] == ["M1", "M2", "M3", "M4"]
        assert payload["result"]["G_order"] == 1_036_800
        assert payload["result"]["G0_order"] == 518_400

    def test_without_check_reports_skipped(self, capsys):
        rc, payload = run_json(capsys, ["build-mixed", "alt:6", "--k", "2"])
        assert rc == 0
        assert [c["verdict"] for c in payload["conditions"]] == ["skipped"] * 4
        assert payload["status"] == "skipped"

    def test_invalid_k_is_an_error(self, capsys):
        rc = main(["build-mixed", "alt:6", "--k", "3"])
        assert rc == 2
        assert "divide" in capsys.readouterr().err

    def test_default_g_override_matches_default_run(self, capsys):
        rc, default = run_json(capsys, ["build-mixed", "alt:6", "--k", "2", "--check"])
        rc2, overridden = run_json(
            capsys,
            ["build-mixed", "alt:6", "--k", "2", "--check", "--g-override", "();();1,0"],
        )
        assert (rc, rc2) == (0, 0)
        default.pop("wall_time_s")
        overridden.pop("wall_time_s")
        assert default == overridden

    def test_variant_gate_reads_the_other_pair(self, capsys):
        rc, payload = run_json(
            capsys,
            [
                "build-mixed",
                "alt:6",
                "--k",
                "2",
                "--check",
                "--variant-remark",
                "a-trivial",
            ],
        )
        assert rc == 0
        assert payload["result"]["variant"] == "a-trivial"
        assert [c["verdict"] for c in payload["conditions"]] == ["pass"] * 4

    def test_malformed_g_override_is_an_error(self, capsys):
        rc = main(["build-mixed", "alt:6", "--k", "2", "--g-override", "bogus"])
        assert rc == 2

    def test_skipped_source_and_strict(self, capsys):
        rc, payload = run_json(capsys, ["build-mixed", "j2"])
        assert rc == 0
        assert payload["status"] == "skipped"
        rc = main(["build-mixed", "j2", "--strict"])
        capsys.readouterr()
        assert rc == 1

    def test_unknown_source_is_an_error(self, capsys):
        rc = main(["build-mixed", "wat:9"])
        assert rc == 2


class TestSearchAndCount:
    def test_count_psl2_7_777(self, capsys):
        rc, payload = run_json(capsys, ["count-triples", "psl2:7", "--type", "7,7,7"])
        assert rc == 0
        assert payload["result"]["count"] == 336

    def test_count_budget_exceeded(self, capsys):
        rc = main(["count-triples", "psl2:13", "--type", "7,7,7", "--budget", "100"])
        assert rc == 2

    def test_search_found(self, capsys):
        rc, payload = run_json(
            capsys, ["search-triple", "alt:6", "--type", "5,5,5", "--seed", "1"]
        )
        assert rc == 0
        assert payload["conditions"][0]["verdict"] == "pass"
        assert payload["result"]["hyperbolic"] is True
        assert payload["seed"] == 1

    def test_search_exhausts_budget(self, capsys):
        rc, payload = run_json(
            capsys, ["search-triple", "alt:5", "--type", "7,7,7", "--budget", "50"]
        )
        assert rc == 1
        assert "within budget 50" in payload["conditions"][0]["witness"]

    def test_bad_type_flag(self, capsys):
        rc = main(["count-triples", "psl2:7", "--type", "7,7"])
        assert rc == 2


class TestZsigmondy:
    def test_exception_case(self, capsys):
        rc, payload = run_json(capsys, ["zsigmondy", "--a", "2", "--n", "6"])
        assert rc == 0
        assert payload["result"]["prime"] is None
        assert "exception" in payload["notes"][0]

    def test_prime_case(self, capsys):
        rc, out = run(capsys, ["zsigmondy", "--a", "2", "--n", "4"])
        assert rc == 0
        assert "prime: 5" in out

    def test_out_of_range(self, capsys):
        rc = main(["zsigmondy", "--a", "1", "--n", "5"])
        assert rc == 2


class TestCatalog:
    def test_full_run(self, capsys):
        rc, payload = run_json(capsys, ["catalog"])
        assert rc == 0
        assert payload["result"]["fail"] == 0
        assert payload["result"]["pass"] == 31
        assert payload["result"]["skipped"] == 3
        skipped = [c["name"] for c in payload["conditions"] if c["verdict"] == "skipped"]
        assert skipped == ["j2", "hs", "hs-squared"]

    def test_strict_fails_on_skipped_rows(self, capsys):
        rc = main(["catalog", "--strict"])
        capsys.readouterr()
        assert rc == 1

    def test_threads_agree_with_serial(self, capsys):
        _, serial = run_json(capsys, ["catalog"])
        _, threaded = run_json(capsys, ["catalog", "--threads", "4"])
        serial.pop("wall_time_s")
        threaded.pop("wall_time_s")
        assert serial == threaded


class TestGroupInfo:
    def test_family_spec(self, capsys):
        rc, payload = run_json(capsys, ["group-info", "alt:7"])
        assert rc == 0
        assert payload["result"]["order"] == 2520
        assert payload["result"]["perfect"] is True

    def test_bundled_file(self, capsys):
        rc, payload = run_json(capsys, ["group-info", "m23.grp"])
        assert rc == 0
        assert payload["result"]["order"] == 10_200_960
        names = [g["name"] for g in payload["result"]["generators"]]
        assert names == ["a", "b"]


class TestConsoleEntry:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "beauville.cli", "zsigmondy", "--a", "2", "--n", "6"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "prime: none" in proc.stdout
