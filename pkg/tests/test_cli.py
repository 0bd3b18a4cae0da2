"""End-to-end tests of the command-line interface."""

import subprocess
import sys

import numpy as np
import pytest

import _refs as R
from ptwalk import closed_form_rt
from ptwalk.cli import main
from ptwalk.tableio import read_table


@pytest.fixture
def run(tmp_path):
    def _run(*args, fmt="csv"):
        path = tmp_path / f"out.{fmt}"
        code = main([*map(str, args), "--format", fmt, "--out", str(path)])
        if code != 0:
            return code, None, None, None
        meta, columns, rows = read_table(path)
        return code, meta, columns, rows

    return _run


def region_args(thetaL, thetaR, n_half=50):
    return [
        "--theta1-left", thetaL[0], "--theta2-left", thetaL[1],
        "--theta1-right", thetaR[0], "--theta2-right", thetaR[1],
        "--n-half", n_half,
    ]


def column(rows, columns, name):
    idx = columns.index(name)
    return [row[idx] for row in rows]


class TestPhaseDiagram:
    def test_single_cell(self, run):
        code, meta, columns, rows = run(
            "phase-diagram",
            "--theta1-min", R.BULK_C[0], "--theta1-max", R.BULK_C[0], "--theta1-steps", 1,
            "--theta2-min", R.BULK_C[1], "--theta2-max", R.BULK_C[1], "--theta2-steps", 1,
            "--p", R.P, "--n-k", 512,
        )
        assert code == 0
        assert len(rows) == 1
        assert column(rows, columns, "nu_zero") == [1]
        assert column(rows, columns, "nu_pi") == [-1]
        assert column(rows, columns, "boundary_flag") == [0]

    def test_boundary_cell_has_nan_invariants(self, run):
        code, meta, columns, rows = run(
            "phase-diagram",
            "--theta1-min", 0.0, "--theta1-max", 0.0, "--theta1-steps", 1,
            "--theta2-min", 0.0, "--theta2-max", 0.0, "--theta2-steps", 1,
            "--p", R.P, "--n-k", 256,
        )
        assert code == 0
        assert column(rows, columns, "boundary_flag") == [1]
        assert np.isnan(column(rows, columns, "nu_zero")[0])
        # classification is still reported for boundary cells
        assert column(rows, columns, "pt_class") == ["PartiallyBroken"]


class TestBands:
    def test_unbroken_real_quasienergies(self, run):
        code, meta, columns, rows = run(
            "bands", "--theta1", R.SET_UNBROKEN[0], "--theta2", R.SET_UNBROKEN[1],
            "--p", R.P, "--n-k", 64,
        )
        assert code == 0
        assert meta["pt_class"] == "Unbroken"
        assert len(rows) == 64
        assert max(abs(v) for v in column(rows, columns, "im_eps_plus")) < 1e-12
        prod = [
            complex(a, b) * complex(c, d)
            for a, b, c, d in zip(
                column(rows, columns, "re_lambda_plus"),
                column(rows, columns, "im_lambda_plus"),
                column(rows, columns, "re_lambda_minus"),
                column(rows, columns, "im_lambda_minus"),
            )
        ]
        assert max(abs(z - 1.0) for z in prod) < 1e-10

    def test_broken_zone_edge_real_part(self, run):
        code, meta, columns, rows = run(
            "bands", "--theta1", R.SET_BROKEN[0], "--theta2", R.SET_BROKEN[1],
            "--p", R.P, "--n-k", 64,
        )
        assert code == 0
        assert meta["pt_class"] == "CompletelyBroken"
        assert meta["pt_subcase"] == "Re eps = pi"
        re_plus = column(rows, columns, "re_eps_plus")
        assert max(abs(v - np.pi) for v in re_plus) < 1e-10

    def test_degrees_option(self, run):
        code_rad, _, columns, rows_rad = run(
            "bands", "--theta1", R.SET_UNBROKEN[0], "--theta2", R.SET_UNBROKEN[1], "--p", R.P, "--n-k", 16,
        )
        deg = 180.0 / np.pi
        code_deg, _, _, rows_deg = run(
            "bands", "--theta1", R.SET_UNBROKEN[0] * deg, "--theta2", R.SET_UNBROKEN[1] * deg,
            "--p", R.P, "--n-k", 16, "--degrees",
        )
        assert code_rad == code_deg == 0
        assert np.allclose(np.array(rows_rad, float), np.array(rows_deg, float), atol=1e-12)


class TestBerry:
    def test_anchor_invariants(self, run):
        code, meta, columns, rows = run(
            "berry", "--theta1", R.BULK_A[0], "--theta2", R.BULK_A[1], "--p", R.P,
        )
        assert code == 0
        row = dict(zip(columns, rows[0]))
        assert (row["nu_zero"], row["nu_pi"]) == (-1, -1)
        assert row["phi_b"] == pytest.approx(-4 * np.pi, abs=1e-8)
        assert row["nu_prime"] == -2 and row["nu_double_prime"] == 0
        assert row["im_zak_plus"] == pytest.approx(-row["im_zak_minus"], abs=1e-9)

    def test_partially_broken_zak_nan(self, run):
        code, meta, columns, rows = run(
            "berry", "--theta1", R.SET_PARTIAL[0], "--theta2", R.SET_PARTIAL[1], "--p", R.P,
        )
        assert code == 0
        assert meta["pt_class"] == "PartiallyBroken"
        row = dict(zip(columns, rows[0]))
        assert np.isnan(row["re_zak_plus"])
        assert not np.isnan(row["phi_b"])

    def test_boundary_rejected(self, run):
        code, *_ = run("berry", "--theta1", 0.1, "--theta2", -0.1, "--p", R.P)
        assert code == 2


class TestEvolve:
    def test_interface_pinning(self, run):
        code, meta, columns, rows = run(
            "evolve", *region_args(R.BULK_C, R.BULK_A, n_half=30), "--p", R.P,
            "--steps", 7, "--coin", "plus",
        )
        assert code == 0
        assert meta["gamma"] == pytest.approx(R.GAMMA, abs=1e-12)
        assert meta["rng"] == "PCG64"
        assert meta["wraparound"] == 0
        assert len(rows) == 8 * 61
        data = {(r[0], r[1]): r for r in rows}
        pc0 = [data[(t, 0)][columns.index("p_corrected")] for t in range(8)]
        assert pc0[7] > pc0[1]
        # raw, corrected, normalized stay consistent at every output row
        t_col = np.array(column(rows, columns, "t"))
        raw = np.array(column(rows, columns, "p_raw"))
        corr = np.array(column(rows, columns, "p_corrected"))
        assert np.allclose(corr, raw * R.GAMMA ** (2 * t_col), rtol=1e-12)

    def test_zero_steps(self, run):
        code, meta, columns, rows = run(
            "evolve", *region_args(R.BULK_C, R.BULK_A, n_half=10), "--p", R.P,
            "--steps", 0, "--x0", 2,
        )
        assert code == 0
        assert len(rows) == 21
        data = {r[1]: r[columns.index("p_raw")] for r in rows}
        assert data[2] == pytest.approx(1.0)

    def test_disordered_run_reproducible(self, run):
        args = (
            "evolve", *region_args(R.BULK_C, R.BULK_A, n_half=20), "--p", R.P,
            "--steps", 5, "--disorder", R.XI / 4, "--seed", 3,
        )
        code_a, meta_a, _, rows_a = run(*args)
        code_b, meta_b, _, rows_b = run(*args)
        assert code_a == code_b == 0
        assert rows_a == rows_b
        assert meta_a["seed"] == 3


class TestSpectrum:
    def test_golden_interface_flags(self, run):
        code, meta, columns, rows = run(
            "spectrum", *region_args(R.EDGE_L, R.EDGE_R), "--p", R.P,
        )
        assert code == 0
        flags = column(rows, columns, "edge_flag")
        assert sum(flags) == 4
        kept = [r for r in rows if r[columns.index("edge_flag")] == 1]
        assert all(r[columns.index("gap_sector")] == "zero" for r in kept)
        moduli = sorted(
            abs(complex(r[columns.index("re_lambda")], r[columns.index("im_lambda")]))
            for r in kept
        )
        assert moduli[0] == pytest.approx(1 / R.GAMMA, abs=1e-6)
        assert moduli[-1] == pytest.approx(R.GAMMA, abs=1e-6)

    def test_sorted_rows(self, run):
        code, meta, columns, rows = run(
            "spectrum", *region_args(R.EDGE_L, R.EDGE_R, n_half=10), "--p", R.P,
        )
        re = column(rows, columns, "re_lambda")
        assert re == sorted(re)

    def test_pi_sector_interface(self, run):
        code, meta, columns, rows = run(
            "spectrum", *region_args(*R.IFACE_PI), "--p", R.P,
        )
        kept = [r for r in rows if r[columns.index("edge_flag")] == 1]
        assert len(kept) == 4
        assert all(r[columns.index("gap_sector")] == "pi" for r in kept)


class TestEdgeState:
    def test_golden_metadata(self, run):
        code, meta, columns, rows = run(
            "edge-state", *region_args(R.EDGE_L, R.EDGE_R), "--p", R.P,
            "--gap", "zero", "--parity", "odd",
        )
        assert code == 0
        r_ref, t_ref = closed_form_rt(R.EDGE_L, R.EDGE_R)
        assert meta["r_coeff"] == pytest.approx(r_ref, abs=1e-10)
        assert meta["t_coeff"] == pytest.approx(t_ref, abs=1e-10)
        assert meta["coin"] == "plus"
        assert meta["kind"] == "bright"
        assert meta["re_eigenvalue"] == pytest.approx(R.GAMMA, abs=1e-9)
        assert meta["residual"] < 1e-8
        probs = column(rows, columns, "prob")
        assert sum(probs) == pytest.approx(1.0, abs=1e-10)
        assert len(rows) == 101

    def test_no_state_is_validation_error(self, run):
        code, *_ = run(
            "edge-state", *region_args(R.EDGE_L, R.EDGE_L), "--p", R.P,
            "--gap", "zero", "--parity", "odd",
        )
        assert code == 2

    def test_undersized_lattice_rejected(self, run):
        code, *_ = run(
            "edge-state", *region_args(*R.IFACE_BROKEN), "--p", R.P,
            "--gap", "zero", "--parity", "odd",
        )
        assert code == 2


class TestErrorPaths:
    def test_invalid_loss(self, run):
        code, *_ = run("bands", "--theta1", 0.2, "--theta2", 0.3, "--p", 1.5)
        assert code == 2

    def test_unwritable_output(self):
        code = main([
            "bands", "--theta1", "0.2", "--theta2", "0.3", "--n-k", "8",
            "--out", "/nonexistent-dir/x.csv",
        ])
        assert code == 4

    def test_json_format(self, run):
        code, meta, columns, rows = run(
            "berry", "--theta1", R.BULK_C[0], "--theta2", R.BULK_C[1], "--p", R.P,
            fmt="json",
        )
        assert code == 0
        assert columns[0] == "theta1"
        assert dict(zip(columns, rows[0]))["nu_zero"] == 1


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "ptwalk.cli", "bands",
         "--theta1", "0.3", "--theta2", "0.5", "--n-k", "8"],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("# theta1=")
    assert "re_lambda_plus" in proc.stdout
