# Copyright 2026 The qengine Authors

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math
import os
import subprocess

import numpy as np
import pytest

import qengine

LN2 = math.log(2.0)


def test_worked_point():
    ledger = qengine.run_cycle("three", LN2, 0.75)
    assert ledger.q_in == pytest.approx(0.25, abs=1e-12)
    assert ledger.w_ext == pytest.approx(1 / 6, abs=1e-12)
    assert ledger.q_out == pytest.approx(-1 / 12, abs=1e-12)
    assert ledger.q_used == pytest.approx(2 / 7, abs=1e-12)
    assert ledger.eta == pytest.approx(2 / 3, abs=1e-12)
    assert [s["name"] for s in ledger.strokes] == ["TP", "QMI", "QMII"]
    assert "eta" in str(ledger)


def test_five_stroke_and_first_law():
    ledger = qengine.run_cycle("five", LN2, 0.75, r=2.0)
    assert ledger.eta == pytest.approx(5 / 6, abs=1e-12)
    assert abs(qengine.first_law_residual(ledger)) <= 1e-12
    analytic = qengine.run_cycle("five", 1.0, 0.5, r=2.0, analytic=True)
    assert analytic.eta == pytest.approx(0.5, abs=1e-15)
    assert qengine.gamma_bounds("five", 2.0) == pytest.approx((1 / 3, 1.0))


def test_errors_map_to_python():
    with pytest.raises(qengine.InvalidCycleError):
        qengine.run_cycle("three", 1.0, 0.3)
    with pytest.raises(qengine.NoIsentropicPartnerError):
        qengine.isentropic_strength(0.01, 1.0)
    with pytest.raises(ValueError):
        qengine.run_cycle("three", 1.0, 1.5)


def test_channels_on_numpy_states():
    rho = qengine.gibbs_state(LN2)
    assert np.allclose(rho, np.diag([2 / 3, 1 / 3]))
    ops = qengine.first_channel(3 / 8)
    assert qengine.completeness_deviation(ops) <= 1e-15
    out = qengine.apply_unselective(ops, rho)
    assert np.allclose(np.diag(out).real, [5 / 12, 7 / 12])
    outcomes = qengine.measure_selective(ops, rho)
    assert outcomes[1][0] == pytest.approx(0.25)
    mixture = sum(p * s for p, s in outcomes if s is not None)
    assert np.allclose(mixture, out, atol=1e-13)
    assert qengine.von_neumann_entropy(np.eye(2) / 2) == pytest.approx(math.log(2))
    assert qengine.eig_hermitian(np.array([[0, 1], [1, 0]])) == pytest.approx([-1, 1])


def test_sweep_and_verify():
    csv = qengine.sweep_csv("three", [LN2], [0.5, 0.75, 1.0])
    lines = csv.strip().split("\n")
    assert lines[0].startswith("mode,b,gamma,r,P,q,")
    etas = [float(line.split(",")[12]) for line in lines[1:]]
    assert etas == pytest.approx([0.0, 2 / 3, 1.0], abs=1e-11)
    report = qengine.verify()
    assert report["ok"] and report["failures"] == 0
    assert not qengine.verify(perturb="qout")["ok"]


@pytest.mark.skipif("QENGINE_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_exit_codes():
    cli = os.environ["QENGINE_CLI"]
    run = lambda *args: subprocess.run([cli, *args], capture_output=True, text=True)
    assert run("verify").returncode == 0
    assert run("verify", "--perturb", "qout").returncode == 3
    bad = run("cycle", "--mode", "three", "--gamma", "0.3")
    assert bad.returncode == 2 and "1/2 <= gamma <= 1" in bad.stderr
    assert run("cycle", "--mode", "seven", "--gamma", "0.5").returncode == 1
