import json

import pytest

from qsegre.cli import main, prime_power


class TestPrimePower:
    def test_accepts_prime_powers(self):
        assert prime_power(2) == (2, 1)
        assert prime_power(9) == (3, 2)
        assert prime_power(16) == (2, 4)

    def test_rejects_composites_with_two_primes(self):
        for q in (1, 6, 12, 15):
            with pytest.raises(ValueError):
                prime_power(q)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestComputationCommands:
    def test_wq_matches_reference_polynomial(self, capsys):
        code, out, _ = run(capsys, "wq", "--n", "3")
        assert code == 0
        assert json.loads(out) == ["0", "0", "2", "6", "6", "4", "1"]

    def test_wq_trivial_case(self, capsys):
        code, out, _ = run(capsys, "wq", "--n", "0")
        assert code == 0 and json.loads(out) == ["1"]

    def test_wq_evaluation(self, capsys):
        code, out, _ = run(capsys, "wq", "--n", "2", "--at", "2")
        assert code == 0 and out.strip() == "8"

    def test_wq_beyond_bound_is_labeled(self, capsys):
        code, out, err = run(capsys, "wq", "--n", "4", "--bound", "3", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["method"] == "recurrence"
        assert "recurrence-derived" in err

    def test_qbinom(self, capsys):
        code, out, _ = run(capsys, "qbinom", "--n", "4", "--k", "2")
        assert code == 0 and json.loads(out) == ["1", "1", "2", "1", "1"]

    def test_bessel_document(self, capsys):
        code, out, _ = run(capsys, "bessel", "--order", "2")
        assert code == 0
        doc = json.loads(out)
        assert doc["order"] == 2
        assert doc["checks"] == [True, True, True]
        assert doc["f_inv"][2] == {"num": ["0", "2", "1"], "den": ["1", "2", "1"]}

    def test_lattice_chains_json(self, capsys):
        code, out, _ = run(capsys, "lattice", "--n", "2", "--q", "2",
                           "--chains", "--check-el", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["chains"]["words"] == {"12": 1, "21": 2}
        assert doc["el"]["pass"] is True
        assert doc["poset"]["ranks"].count(1) == 3

    def test_segre_chain_words_use_pair_syntax(self, capsys):
        code, out, _ = run(capsys, "segre", "--n", "2", "--q", "2",
                           "--chains", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["chains"]["descending"] == 8
        assert "1,1|2,2" in doc["chains"]["words"]

    def test_mobius_and_betti(self, capsys):
        code, out, _ = run(capsys, "mobius", "--n", "3", "--q", "2", "--segre")
        assert code == 0 and out.strip() == "-344"
        code, out, _ = run(capsys, "betti", "--n", "3", "--q", "2", "--segre")
        assert code == 0 and json.loads(out) == [0, 344]

    def test_frobenius_document(self, capsys):
        code, out, _ = run(capsys, "frobenius", "--n", "2")
        assert code == 0
        doc = json.loads(out)
        assert doc["character"]["1,1|1,1"] == 3
        assert doc["ch"]["2|2"] == "-1/4"
        assert doc["ps"].startswith("(q^2+2*q)")

    def test_invalid_prime_power_is_an_error(self, capsys):
        code, _, err = run(capsys, "lattice", "--n", "2", "--q", "6")
        assert code == 2 and "prime power" in err

    def test_lowered_count_bound_is_a_clean_error(self, capsys):
        code, _, err = run(capsys, "lattice", "--n", "4", "--q", "2",
                           "--count-bound", "10")
        assert code == 2 and "exceed the bound" in err

    def test_raised_bounds_warn_about_runtime(self, capsys):
        code, _, err = run(capsys, "lattice", "--n", "2", "--q", "2",
                           "--count-bound", "200000")
        assert code == 0 and "long runtime" in err
        code, _, err = run(capsys, "wq", "--n", "2", "--bound", "8")
        assert code == 0 and "long runtime" in err


class TestVerifyCommands:
    def test_verify_csv(self, capsys):
        code, out, _ = run(capsys, "verify", "csv", "--n", "4")
        assert code == 0 and out.startswith("PASS")

    def test_verify_bessel(self, capsys):
        code, out, _ = run(capsys, "verify", "bessel", "--order", "3")
        assert code == 0 and "PASS" in out

    def test_verify_el_segre(self, capsys):
        code, out, _ = run(capsys, "verify", "el", "--n", "2", "--q", "3", "--segre")
        assert code == 0 and "PASS" in out

    def test_verify_mobius(self, capsys):
        code, out, _ = run(capsys, "verify", "mobius", "--n", "2", "--q", "3")
        assert code == 0 and "PASS" in out

    def test_verify_identities(self, capsys):
        for argv in (("verify", "thm31", "--n", "3"),
                     ("verify", "thm48", "--n", "2"),
                     ("verify", "prop26", "--sizes", "1,1,1,1")):
            code, out, _ = run(capsys, *argv)
            assert code == 0 and "PASS" in out

    def test_verify_prop26_rejects_malformed_sizes(self, capsys):
        code, _, err = run(capsys, "verify", "prop26", "--sizes", "1,2")
        assert code == 2 and "comma-separated" in err

    def test_verify_all_small(self, capsys):
        code, out, _ = run(capsys, "verify", "all", "--max-n", "2")
        assert code == 0
        lines = [line for line in out.splitlines() if line]
        assert len(lines) == 9
        assert all(line.startswith("PASS") for line in lines)

    def test_verify_all_json_is_deterministic(self, capsys):
        _, first, _ = run(capsys, "verify", "all", "--max-n", "1", "--json")
        _, second, _ = run(capsys, "verify", "all", "--max-n", "1", "--json")
        assert first == second
        doc = json.loads(first)
        assert doc["status"] == "PASS"
        assert [c["check"] for c in doc["checks"]] == [
            "csv", "bessel", "el", "chains", "mobius", "betti",
            "thm31", "thm48", "prop26"]

    def test_verify_all_parallel_matches_sequential(self, capsys):
        _, sequential, _ = run(capsys, "verify", "all", "--max-n", "2", "--json")
        _, parallel, _ = run(capsys, "verify", "all", "--max-n", "2",
                             "--threads", "3", "--json")
        assert parallel == sequential


class TestGoldenDocuments:
    def test_lattice_interchange_golden(self, capsys):
        code, out, _ = run(capsys, "lattice", "--n", "1", "--q", "2", "--json")
        assert code == 0
        assert json.loads(out) == {
            "poset": {
                "elements": ["()", "((1,),)"],
                "ranks": [0, 1],
                "covers": [[0, 1]],
                "labels": {"0-1": 1},
            }
        }

    def test_lattice_json_bytes_are_stable(self, capsys):
        _, first, _ = run(capsys, "lattice", "--n", "2", "--q", "3",
                          "--chains", "--json")
        _, second, _ = run(capsys, "lattice", "--n", "2", "--q", "3",
                           "--chains", "--json")
        assert first == second

    def test_interchange_output_feeds_back_into_the_reader(self, capsys):
        from qsegre.poset import from_interchange, mobius_number
        code, out, _ = run(capsys, "segre", "--n", "2", "--q", "2", "--json")
        assert code == 0
        rebuilt, labeling = from_interchange(json.loads(out)["poset"])
        assert mobius_number(rebuilt) == 8
        assert labeling is not None and labeling.less((1, 1), (2, 2))


class TestConsoleEntry:
    def test_module_execution(self):
        import os
        import pathlib
        import subprocess
        import sys
        env = dict(os.environ)
        src = str(pathlib.Path(__file__).resolve().parent.parent / "src")
        env["PYTHONPATH"] = src + os.pathsep + env.get("PYTHONPATH", "")
        proc = subprocess.run(
            [sys.executable, "-m", "qsegre", "wq", "--n", "2"],
            capture_output=True, text=True, env=env)
        assert proc.returncode == 0
        assert json.loads(proc.stdout) == ["0", "2", "1"]

    def test_negative_n_is_a_clean_error(self, capsys):
        code, _, err = run(capsys, "wq", "--n", "-1")
        assert code == 2 and "nonnegative" in err
