import math

import numpy as np
import pytest

from plot_helper.cli import main
from plot_helper.csv_data import ScanCsvError, read_scan_csv
from plot_helper.render import PlotSpec, render


def parse_value_grid(path, column):
    """Independent float parse of a CSV column onto the sweep grid."""
    header = {}
    columns = None
    rows = []
    for line in path.read_text().splitlines():
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            header[key.strip()] = value
        elif columns is None:
            columns = line.split(",")
        elif line:
            rows.append(line.split(","))
    idx = columns.index(column)
    shape = (int(header["axis0_count"]), int(header["axis1_count"]))
    return np.array([float(r[idx]) for r in rows]).reshape(shape)


class TestPresetRendering:
    def test_renders_all_three_presets(self, preset_csvs, tmp_path):
        kinds = {"fig1a": "heatmap", "fig1b": "heatmap", "fig2": "sign-map"}
        for name, csv_path in preset_csvs.items():
            out = tmp_path / f"{name}.png"
            result = render(PlotSpec(csv_path=csv_path, kind=kinds[name], out_path=out))
            assert out.exists() and out.stat().st_size > 0
            assert result.array.size == 64 * 64

    def test_fig2_sign_map_contains_both_tones(self, preset_csvs, tmp_path):
        result = render(
            PlotSpec(
                csv_path=preset_csvs["fig2"],
                kind="sign-map",
                out_path=tmp_path / "fig2.png",
            )
        )
        tones = set(np.unique(result.array))
        assert 1 in tones and -1 in tones

    def test_heatmap_array_equals_csv_exactly(self, preset_csvs, tmp_path):
        for name in ("fig1a", "fig1b"):
            result = render(
                PlotSpec(
                    csv_path=preset_csvs[name],
                    kind="heatmap",
                    out_path=tmp_path / f"{name}.png",
                )
            )
            reference = parse_value_grid(preset_csvs[name], "ratio")
            # the colormapper sees C[y, x]; transposing back must reproduce
            # the CSV floats bit for bit
            assert np.array_equal(result.array.T, reference)

    def test_sign_map_array_is_faithful_relabeling(self, preset_csvs, tmp_path):
        csv = read_scan_csv(preset_csvs["fig2"])
        words = np.array(csv.column_strings("sign_at_tau")).reshape(csv.shape)
        result = render(
            PlotSpec(
                csv_path=preset_csvs["fig2"],
                kind="sign-map",
                out_path=tmp_path / "fig2.png",
            )
        )
        codes = result.array.T
        for word, code in (("positive", 1), ("boundary", 0), ("negative", -1)):
            assert np.array_equal(words == word, codes == code)

    def test_fig1a_render_array_mirror_symmetric(self, preset_csvs, tmp_path):
        result = render(
            PlotSpec(
                csv_path=preset_csvs["fig1a"],
                kind="heatmap",
                out_path=tmp_path / "fig1a.png",
            )
        )
        grid = result.array.T  # [theta, gamma0]
        n = grid.shape[0]
        mirror = np.array([grid[(n - j) % n, :] for j in range(n)])
        assert float(np.abs(grid - mirror).max()) <= 1e-10

    def test_render_is_deterministic(self, preset_csvs, tmp_path):
        spec = lambda out: PlotSpec(
            csv_path=preset_csvs["fig2"], kind="sign-map", out_path=out
        )
        a, b = tmp_path / "a.png", tmp_path / "b.png"
        render(spec(a))
        render(spec(b))
        assert a.read_bytes() == b.read_bytes()

    def test_line_cut_with_slice_selection(self, preset_csvs, tmp_path):
        csv = read_scan_csv(preset_csvs["fig1a"])
        gamma0 = float(csv.axes[1].values()[-1])
        out = tmp_path / "cut.png"
        result = render(
            PlotSpec(
                csv_path=preset_csvs["fig1a"],
                kind="line-cut",
                out_path=out,
                where=("gamma0", gamma0),
            )
        )
        assert out.exists()
        assert result.array.shape == (64,)
        reference = parse_value_grid(preset_csvs["fig1a"], "ratio")[:, -1]
        assert np.array_equal(result.array, reference)


class TestSyntheticInputs:
    @staticmethod
    def write_csv(path, rows, n0=3, n1=2, columns="r,theta,gamma0,lambda,tau,ratio"):
        lines = [
            "# model=jc",
            "# axis0_name=theta",
            "# axis0_min=0",
            f"# axis0_max={2 * math.pi * (n0 - 1) / n0:.17g}",
            f"# axis0_count={n0}",
            "# axis0_spacing=linear",
            "# axis1_name=gamma0",
            "# axis1_min=0.1",
            "# axis1_max=10",
            f"# axis1_count={n1}",
            "# axis1_spacing=linear",
            columns,
            *rows,
        ]
        path.write_text("\n".join(lines) + "\n")
        return path

    def make_uniform(self, tmp_path, value="0.25"):
        thetas = np.linspace(0.0, 2 * math.pi * 2 / 3, 3)
        gamma0s = np.linspace(0.1, 10.0, 2)
        rows = [
            f"0.5,{th:.17g},{g:.17g},1,1,{value}" for th in thetas for g in gamma0s
        ]
        return self.write_csv(tmp_path / "uniform.csv", rows)

    def test_constant_csv_renders_uniform_heatmap(self, tmp_path):
        path = self.make_uniform(tmp_path)
        result = render(PlotSpec(csv_path=path, kind="heatmap", out_path=tmp_path / "u.png"))
        assert np.array_equal(result.array, np.full((2, 3), 0.25))

    def test_missing_rows_error_lists_gaps(self, tmp_path):
        path = self.make_uniform(tmp_path)
        lines = path.read_text().splitlines()
        path.write_text("\n".join(lines[:-2]) + "\n")  # drop the last two rows
        with pytest.raises(ScanCsvError, match="gaps"):
            read_scan_csv(path)

    def test_ragged_row_rejected(self, tmp_path):
        path = self.make_uniform(tmp_path)
        path.write_text(path.read_text() + "1,2,3\n")
        with pytest.raises(ScanCsvError, match="cells"):
            read_scan_csv(path)

    def test_missing_column_rejected(self, tmp_path):
        path = self.make_uniform(tmp_path)
        with pytest.raises(ScanCsvError, match="not in header"):
            render(
                PlotSpec(
                    csv_path=path,
                    kind="heatmap",
                    out_path=tmp_path / "x.png",
                    value_column="tau_qsl",
                )
            )

    def test_headerless_file_rejected(self, tmp_path):
        path = tmp_path / "plain.csv"
        path.write_text("a,b\n1,2\n")
        with pytest.raises(ScanCsvError, match="no sweep axes"):
            read_scan_csv(path)

    def test_line_cut_needs_where_on_grids(self, tmp_path):
        path = self.make_uniform(tmp_path)
        with pytest.raises(ScanCsvError, match="--where"):
            render(PlotSpec(csv_path=path, kind="line-cut", out_path=tmp_path / "x.png"))

    def test_where_without_matches_rejected(self, tmp_path):
        path = self.make_uniform(tmp_path)
        with pytest.raises(ScanCsvError, match="no rows"):
            render(
                PlotSpec(
                    csv_path=path,
                    kind="line-cut",
                    out_path=tmp_path / "x.png",
                    where=("gamma0", 123.0),
                )
            )


class TestCli:
    def test_plot_subcommand(self, preset_csvs, tmp_path, capsys):
        out = tmp_path / "fig2.png"
        code = main(
            ["plot", "--in", str(preset_csvs["fig2"]), "--kind", "sign-map", "--out", str(out)]
        )
        assert code == 0
        assert str(out) in capsys.readouterr().out
        assert out.exists()

    def test_line_cut_flags(self, preset_csvs, tmp_path):
        out = tmp_path / "cut.png"
        code = main(
            [
                "plot", "--in", str(preset_csvs["fig1b"]), "--kind", "line-cut",
                "--where", "gamma0=10", "--value", "ratio", "--out", str(out),
            ]
        )
        assert code == 0
        assert out.exists()

    def test_rejects_unknown_kind(self, preset_csvs, tmp_path):
        with pytest.raises(SystemExit):
            main(
                ["plot", "--in", str(preset_csvs["fig2"]), "--kind", "surface",
                 "--out", str(tmp_path / "x.png")]
            )

    def test_rejects_malformed_where(self, preset_csvs, tmp_path):
        with pytest.raises(SystemExit):
            main(
                ["plot", "--in", str(preset_csvs["fig1a"]), "--kind", "line-cut",
                 "--where", "gamma0", "--out", str(tmp_path / "x.png")]
            )
