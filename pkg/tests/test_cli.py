import json

from torusloc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPair:
    def test_sphere_pairing(self, capsys):
        code, out, _ = run(capsys, "pair", "--model", "spheres:3", "--class", "L^2",
                           "--path", "0:+")
        assert code == 0
        assert out == "6\n"

    def test_off_degree_prints_zero(self, capsys):
        code, out, _ = run(capsys, "pair", "--model", "spheres:3", "--class", "L^3",
                           "--path", "0:+")
        assert code == 0
        assert out == "0\n"

    def test_fraction_output(self, capsys):
        code, out, _ = run(capsys, "pair", "--model", "spheres:5", "--class",
                           "weyl(1/2*v1^2)", "--path", "0:+")
        assert code == 0
        assert out == "-3/2\n"

    def test_float_flag(self, capsys):
        code, out, _ = run(capsys, "pair", "--model", "spheres:3", "--class", "L^2",
                           "--path", "0:+", "--float")
        assert code == 0
        assert out.startswith("6 ~= 6")

    def test_wall_base_point_is_domain_error(self, capsys):
        code, _, err = run(capsys, "pair", "--model", "spheres:3", "--class", "L^2",
                           "--path", "1:+")
        assert code == 3
        assert "wall" in err

    def test_syntax_error_is_domain_error(self, capsys):
        code, _, err = run(capsys, "pair", "--model", "spheres:3", "--class", "v1^-1",
                           "--path", "0:+")
        assert code == 3
        assert "column" in err

    def test_missing_plan_source_is_usage_error(self, capsys):
        code, _, err = run(capsys, "pair", "--model", "spheres:3", "--class", "L^2")
        assert code == 2


class TestVolume:
    def test_sphere_torus(self, capsys):
        code, out, _ = run(capsys, "volume", "--model", "spheres:3", "--group", "torus",
                           "--path", "0:+")
        assert code == 0
        assert out == "3 * (2pi)^2\n"

    def test_sphere_weyl(self, capsys):
        code, out, _ = run(capsys, "volume", "--model", "spheres:5", "--group", "weyl",
                           "--path", "0:+")
        assert code == 0
        assert out == "5/2 * (2pi)^2\n"

    def test_cp2_weyl_swapped(self, capsys):
        code, out, _ = run(capsys, "volume", "--model", "cp2:4", "--group", "weyl",
                           "--cp2-variant", "swapped")
        assert code == 0
        assert out == "1 * (2pi)^0\n"


class TestWalls:
    def test_sphere_walls(self, capsys):
        code, out, _ = run(capsys, "walls", "--model", "spheres:3", "--xi", "1")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("-3: ")
        assert lines[-1].startswith("3: ")
        assert len(lines) == 4

    def test_cp_direction(self, capsys):
        code, out, _ = run(capsys, "walls", "--model", "cp2:2", "--xi", "1,0")
        assert code == 0
        assert [line.split(":")[0] for line in out.strip().splitlines()] == ["-4", "-1", "2"]


class TestPlanCommand:
    def test_emitted_plan_reproduces_path(self, capsys, tmp_path):
        plan_file = tmp_path / "plan.json"
        code, _, _ = run(capsys, "plan", "--model", "spheres:3", "--path", "0:+",
                         "--out", str(plan_file))
        assert code == 0
        data = json.loads(plan_file.read_text())
        assert len(data) == 4
        code, out_path, _ = run(capsys, "pair", "--model", "spheres:3", "--class", "L^2",
                                "--path", "0:+")
        code, out_plan, _ = run(capsys, "pair", "--model", "spheres:3", "--class", "L^2",
                                "--plan", str(plan_file))
        assert out_path == out_plan

    def test_plan_to_stdout(self, capsys):
        code, out, _ = run(capsys, "plan", "--model", "cp2:4", "--cp2-variant", "general")
        assert code == 0
        data = json.loads(out)
        assert len(data) == 27

    def test_cp2_variant_on_sphere_is_domain_error(self, capsys):
        code, _, _ = run(capsys, "plan", "--model", "spheres:3", "--cp2-variant", "swapped")
        assert code == 3


class TestRingSegre:
    def test_classical_projective_line(self, capsys):
        code, out, _ = run(capsys, "ring", "--space", "1;1")
        assert code == 0
        assert out == "h^2\n"

    def test_weighted_relation(self, capsys):
        code, out, _ = run(capsys, "ring", "--space", "1;2")
        assert code == 0
        assert out == "2*h^2\n"

    def test_equivariant_relation(self, capsys):
        code, out, _ = run(capsys, "ring", "--space", "1:2")
        assert code == 0
        assert out == "h + 2*u\n"

    def test_segre_pieces(self, capsys):
        code, out, _ = run(capsys, "segre", "--space", "1:-1", "--order", "2")
        assert code == 0
        assert out == "s_0 = 1\ns_1 = u\ns_2 = u^2\n"

    def test_bad_space_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "ring", "--space", "1:1;2")
        assert code == 2


class TestModelFiles:
    def test_model_file_roundtrip(self, capsys, tmp_path):
        model_file = tmp_path / "model.json"
        model_file.write_text(json.dumps({
            "rank": 1,
            "fixed_points": [
                {"id": "n", "moment": [1], "weights": [[1]]},
                {"id": "s", "moment": [-1], "weights": [[-1]]},
            ],
        }))
        code, out, _ = run(capsys, "pair", "--model", str(model_file), "--class", "L^0",
                           "--path", "0:+")
        assert code == 0
        assert out == "1\n"

    def test_invalid_model_is_domain_error(self, capsys, tmp_path):
        model_file = tmp_path / "model.json"
        model_file.write_text(json.dumps({
            "rank": 1,
            "fixed_points": [{"id": "n", "moment": [1], "weights": [[0]]}],
        }))
        code, _, err = run(capsys, "pair", "--model", str(model_file), "--class", "L^0",
                           "--path", "0:+")
        assert code == 3
        assert "n" in err
