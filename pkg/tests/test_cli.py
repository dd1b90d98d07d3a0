import pytest

from mobius_renorm.cli import exit_code_for, run
from mobius_renorm.errors import InsufficientPrecision, ParseError, PolePresent

CHAIN3 = "elements: 0 1 2\n0 < 1\n1 < 2\n"
SIMPLE_CHR = "[] : e^-1\n[[]] : e^-2\n"


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDirichlet:
    def test_spec_row(self, capsys):
        code, out, _ = invoke(capsys, "mobius", "dirichlet", "--n", "30")
        assert code == 0
        assert "30  mu=-1  phi=8" in out.splitlines()

    def test_check_passes(self, capsys):
        code, out, _ = invoke(capsys, "mobius", "dirichlet", "--n", "50", "--check")
        assert code == 0
        assert "check: mu*zeta = epsilon up to 50: ok" in out
        assert "check: phi*zeta = iota up to 50: ok" in out

    def test_tsv(self, capsys):
        code, out, _ = invoke(
            capsys, "mobius", "dirichlet", "--n", "30", "--format", "tsv"
        )
        assert code == 0
        assert "30\t-1\t8" in out.splitlines()

    def test_deterministic(self, capsys):
        _, first, _ = invoke(capsys, "mobius", "dirichlet", "--n", "40")
        _, second, _ = invoke(capsys, "mobius", "dirichlet", "--n", "40")
        assert first == second


class TestPoset:
    def test_single_interval(self, tmp_path, capsys):
        f = tmp_path / "chain3.poset"
        f.write_text(CHAIN3)
        code, out, _ = invoke(
            capsys, "mobius", "poset", str(f), "--interval", "0", "2"
        )
        assert code == 0
        assert out.strip() == "mu = 0"

    def test_full_table(self, tmp_path, capsys):
        f = tmp_path / "chain3.poset"
        f.write_text(CHAIN3)
        code, out, _ = invoke(capsys, "mobius", "poset", str(f))
        assert code == 0
        lines = out.splitlines()
        assert lines[0].split() == ["lo", "hi", "mu"]
        assert "0  1  -1" in out
        assert "0  2  0" in out

    def test_missing_file(self, capsys):
        code, _, err = invoke(capsys, "mobius", "poset", "no-such-file.poset")
        assert code == 1
        assert "error" in err

    def test_cyclic_covers(self, tmp_path, capsys):
        f = tmp_path / "bad.poset"
        f.write_text("elements: a b\na < b\nb < a\n")
        code, _, err = invoke(capsys, "mobius", "poset", str(f))
        assert code == 1

    def test_unknown_interval_element(self, tmp_path, capsys):
        f = tmp_path / "chain3.poset"
        f.write_text(CHAIN3)
        code, _, _ = invoke(
            capsys, "mobius", "poset", str(f), "--interval", "0", "9"
        )
        assert code == 1


class TestAbstract:
    def test_nat_zeta(self, capsys):
        code, out, _ = invoke(
            capsys, "mobius", "abstract", "--coalgebra", "nat", "--max-degree", "4"
        )
        assert code == 0
        rows = [line.split() for line in out.splitlines()[1:]]
        assert rows[0] == ["0", "1"]
        assert rows[1] == ["1", "-1"]
        assert rows[2] == ["2", "0"]

    def test_evenodd_prints_identical_values(self, capsys):
        argv = ["mobius", "abstract", "--coalgebra", "divisors", "--n", "40",
                "--max-degree", "4"]
        _, plain, _ = invoke(capsys, *argv)
        _, evenodd, _ = invoke(capsys, *(argv + ["--evenodd"]))
        assert plain == evenodd

    def test_forest_with_character_file(self, tmp_path, capsys):
        f = tmp_path / "simple.chr"
        f.write_text(SIMPLE_CHR)
        argv = ["mobius", "abstract", "--coalgebra", "forest",
                "--phi", f"file:{f}", "--max-degree", "2"]
        code, out, _ = invoke(capsys, *argv)
        assert code == 0
        assert "[[]]  0" in out
        _, evenodd, _ = invoke(capsys, *(argv + ["--evenodd"]))
        assert out == evenodd

    def test_poset_coalgebra(self, tmp_path, capsys):
        f = tmp_path / "chain3.poset"
        f.write_text(CHAIN3)
        code, out, _ = invoke(
            capsys, "mobius", "abstract", "--coalgebra", f"poset:{f}"
        )
        assert code == 0
        assert "[0,2]  0" in out

    def test_character_file_needs_forest(self, tmp_path, capsys):
        f = tmp_path / "simple.chr"
        f.write_text(SIMPLE_CHR)
        code, _, _ = invoke(
            capsys, "mobius", "abstract", "--coalgebra", "nat", "--phi", f"file:{f}"
        )
        assert code == 1

    def test_unknown_coalgebra(self, capsys):
        code, _, _ = invoke(capsys, "mobius", "abstract", "--coalgebra", "graphs")
        assert code == 1


class TestAntipode:
    def test_table(self, capsys):
        code, out, _ = invoke(capsys, "antipode", "--max-degree", "2")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].split() == ["forest", "antipode"]
        assert "[]      -1*[]" in out
        assert "[[]]    -1*[[]] + 1*[][]" in out

    def test_deterministic(self, capsys):
        _, first, _ = invoke(capsys, "antipode", "--max-degree", "3")
        _, second, _ = invoke(capsys, "antipode", "--max-degree", "3")
        assert first == second


class TestRenormBphz:
    def test_table(self, tmp_path, capsys):
        f = tmp_path / "simple.chr"
        f.write_text(SIMPLE_CHR)
        code, out, _ = invoke(
            capsys, "renorm", "bphz", "--char", str(f), "--max-degree", "2"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0].split() == ["forest", "phi", "phi_minus", "phi_plus", "value"]
        ladder = next(line for line in lines if line.startswith("[[]]"))
        assert ladder.split() == ["[[]]", "e^-2", "0", "0", "0"]

    def test_atkinson_prints_identical_counterterms(self, tmp_path, capsys):
        f = tmp_path / "simple.chr"
        f.write_text(SIMPLE_CHR)
        argv = ["renorm", "bphz", "--char", str(f), "--max-degree", "3"]
        _, plain, _ = invoke(capsys, *argv)
        _, atkinson, _ = invoke(capsys, *(argv + ["--atkinson"]))
        assert plain == atkinson

    def test_malformed_character_file(self, tmp_path, capsys):
        f = tmp_path / "bad.chr"
        f.write_text("[] : e^^\n")
        code, _, _ = invoke(
            capsys, "renorm", "bphz", "--char", str(f), "--max-degree", "2"
        )
        assert code == 1


class TestUsageAndExitCodes:
    def test_unknown_flag_rejected(self, capsys):
        code, _, err = invoke(capsys, "mobius", "dirichlet", "--n", "5", "--bogus")
        assert code == 1

    def test_missing_subcommand(self, capsys):
        code, _, _ = invoke(capsys, "mobius")
        assert code == 1

    def test_math_postconditions_map_to_exit_two(self):
        assert exit_code_for(PolePresent("x")) == 2
        assert exit_code_for(InsufficientPrecision("x")) == 2
        assert exit_code_for(AssertionError("x")) == 2

    def test_input_errors_map_to_exit_one(self):
        assert exit_code_for(ParseError("x", 3)) == 1
        assert exit_code_for(FileNotFoundError("x")) == 1
