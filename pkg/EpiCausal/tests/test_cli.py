"""
Тесты CLI: вывод подкоманд и коды выхода.
"""

import json

import pytest

from cli.main import main
from storage.model_file import load_model_file


@pytest.fixture
def circuit(models_dir) -> str:
    return str(models_dir / "circuit.json")


@pytest.fixture
def cyclic(models_dir) -> str:
    return str(models_dir / "cyclic.json")


@pytest.fixture
def constant(models_dir) -> str:
    return str(models_dir / "constant.json")


def run(capsys, *argv) -> tuple[int, list[str], str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.splitlines(), captured.err


class TestCheck:
    """epicausal check."""

    @pytest.mark.parametrize(
        "formula, verdict",
        [("[B:=1] S=1", "true"), ("K [B:=1] S=1", "false"), ("[C=1 !] K C=1", "true")],
    )
    def test_verdicts(self, capsys, circuit, formula, verdict):
        assert run(capsys, "check", circuit, formula)[:2] == (0, [verdict])

    def test_all_points(self, capsys, circuit):
        assert run(capsys, "check", circuit, "K ~S=1", "--all-points")[:2] == (0, ["true"])
        assert run(capsys, "check", circuit, "C=1", "--all-points")[:2] == (0, ["false"])

    def test_trace(self, capsys, circuit):
        code, lines, _ = run(capsys, "check", circuit, "[B:=1] K S=1", "--trace")
        assert code == 0
        assert lines[0].startswith("Intervene | [B:=1] K S=1 | 2 | false")
        assert lines[-1] == "false"

    def test_trace_all_points(self, capsys, circuit):
        code, lines, _ = run(capsys, "check", circuit, "S=0", "--all-points", "--trace")
        assert code == 0
        assert sum(line.startswith("# ") for line in lines) == 2
        assert lines[-1] == "true"

    def test_syntax_error(self, capsys, circuit):
        code, lines, err = run(capsys, "check", circuit, "K (S=1")
        assert code == 5
        assert lines == []
        assert "error:" in err

    def test_unknown_variable(self, capsys, circuit):
        assert run(capsys, "check", circuit, "Q=1")[0] == 6

    def test_nested_intervention(self, capsys, circuit):
        assert run(capsys, "check", circuit, "[B:=1][C:=1] S=1")[0] == 6

    def test_cyclic_model(self, capsys, cyclic):
        assert run(capsys, "check", cyclic, "V1=0", "--all-points")[0] == 8

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "check", str(tmp_path / "absent.json"), "S=1")[0] == 3


class TestTranslate:
    """epicausal translate."""

    def test_reduce_with_classify(self, capsys):
        code, lines, _ = run(capsys, "translate", "[C=1 !] K C=1", "--mode", "reduce", "--classify")
        assert code == 0
        assert lines[1] == "fragment: L1 -> KC"
        assert "!" not in lines[0]

    def test_tr1(self, capsys):
        code, lines, _ = run(capsys, "translate", "[B:=1] K S=1", "--mode", "tr1")
        assert (code, lines) == (0, ["K [B:=1] S=1"])

    def test_tr2_outside_l1(self, capsys):
        assert run(capsys, "translate", "[B:=1] K S=1", "--mode", "tr2")[0] == 7

    def test_cod_e(self, capsys):
        assert run(capsys, "translate", "C=1 |> S=0", "--mode", "cod-e")[:2] == (
            0,
            ["C=1 -> S=0"],
        )

    def test_cod_e_on_dependence(self, capsys):
        assert run(capsys, "translate", "dep(B; S)", "--mode", "cod-e")[0] == 7

    def test_cod_tr(self, capsys, circuit):
        result = run(capsys, "translate", "C=1 |> S=0", "--mode", "cod-tr", "--model", circuit)
        assert result[:2] == (0, ["[C=1 !] K S=0"])

    def test_cod_trstar(self, capsys, circuit):
        result = run(capsys, "translate", "C=1 |> S=0", "--mode", "cod-trstar", "--model", circuit)
        assert result[:2] == (0, ["K [C=1 !] K S=0"])

    def test_cod_tr_needs_model(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["translate", "C=1 |> S=0", "--mode", "cod-tr"])
        assert info.value.code == 2

    def test_nested_counterfactual(self, capsys, circuit):
        result = run(
            capsys, "translate", "[[B:=1]] [[C:=1]] S=1", "--mode", "cod-tr", "--model", circuit
        )
        assert result[0] == 7


class TestDeps:
    """epicausal deps."""

    def test_circuit(self, capsys, circuit):
        assert run(capsys, "deps", circuit)[:2] == (
            0,
            ["edges:", "  B -> S", "  C -> S", "order: B, C, S"],
        )

    def test_constant(self, capsys, constant):
        assert run(capsys, "deps", constant)[:2] == (0, ["edges: none", "order: U, X"])

    def test_cyclic(self, capsys, cyclic):
        code, _, err = run(capsys, "deps", cyclic)
        assert code == 8
        assert "V1" in err and "V2" in err

    def test_verify_syntactic(self, capsys, circuit):
        code, lines, _ = run(capsys, "deps", circuit, "--verify-syntactic")
        assert code == 0
        assert "  B ~> S: true ok" in lines
        assert "  C ~> B: false ok" in lines
        assert not any("MISMATCH" in line for line in lines)


class TestTeamCheck:
    """epicausal team-check."""

    def test_dependence(self, capsys, circuit):
        assert run(capsys, "team-check", circuit, "dep(B; S)")[:2] == (0, ["true"])
        assert run(capsys, "team-check", circuit, "dep(; C)")[:2] == (0, ["false"])

    def test_all_covers(self, capsys, circuit):
        result = run(capsys, "team-check", circuit, "C=0 \\/ C=1", "--all-covers")
        assert result[:2] == (0, ["true"])

    def test_or_cap(self, capsys, circuit):
        assert run(capsys, "team-check", circuit, "C=0 \\/ C=1", "--or-cap", "1")[0] == 9


class TestDependence:
    """epicausal dependence."""

    def test_single_switch(self, capsys, circuit):
        assert run(capsys, "dependence", circuit, "--xs", "B", "--y", "S")[:2] == (
            0,
            ["e-dependence: true", "c-dependence: false"],
        )

    def test_both_switches(self, capsys, circuit):
        assert run(capsys, "dependence", circuit, "--xs", "B, C", "--y", "S")[:2] == (
            0,
            ["e-dependence: true", "c-dependence: true"],
        )

    def test_y_in_xs(self, capsys, circuit):
        assert run(capsys, "dependence", circuit, "--xs", "S", "--y", "S")[0] == 6


class TestEquiv:
    """epicausal equiv."""

    SMALL = ("--seed", "7", "--max-variables", "2", "--max-range", "2", "--max-depth", "2")

    def test_reduction(self, capsys):
        result = run(capsys, "equiv", "--which", "reduction", "--count", "5", *self.SMALL)
        assert result[:2] == (0, ["5/5 equivalent"])

    def test_axioms(self, capsys):
        code, lines, _ = run(
            capsys, "equiv", "--which", "axioms", "--count", "2", "--instances", "2", *self.SMALL
        )
        assert code == 0
        assert lines[-1] == "all instances valid"

    def test_bad_count(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["equiv", "--which", "solve", "--count", "0"])
        assert info.value.code == 2

    def test_unknown_oracle(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["equiv", "--which", "magic"])
        assert info.value.code == 2


class TestGen:
    """epicausal gen."""

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "random.json"
        assert run(capsys, "gen", "--seed", "3", "-o", str(path))[0] == 0
        loaded = load_model_file(path)
        assert loaded.team
        assert loaded.actual in loaded.team

    def test_stdout_is_deterministic(self, capsys):
        first = run(capsys, "gen", "--seed", "4")[1]
        second = run(capsys, "gen", "--seed", "4")[1]
        assert first == second
        assert "signature" in json.loads("\n".join(first))

    def test_bad_bound(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["gen", "--max-team", "0"])
        assert info.value.code == 2


class TestUsage:
    """Ошибки использования."""

    def test_no_command(self, capsys):
        with pytest.raises(SystemExit) as info:
            main([])
        assert info.value.code == 2
