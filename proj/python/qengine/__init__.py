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

"""Density-matrix simulator for a measurement-driven single-qubit engine."""

from ._qengine import (
    EnergyLedger,
    IncompleteKrausError,
    InvalidCycleError,
    NoIsentropicPartnerError,
    QEngineError,
    apply_unselective,
    completeness_deviation,
    eig_hermitian,
    first_channel,
    first_law_residual,
    gamma_bounds,
    gibbs_state,
    isentropic_strength,
    isentropic_threshold,
    mean_energy,
    measure_selective,
    run_cycle,
    second_channel,
    sweep_csv,
    trace_distance,
    verify,
    von_neumann_entropy,
)

__all__ = [
    "EnergyLedger",
    "IncompleteKrausError",
    "InvalidCycleError",
    "NoIsentropicPartnerError",
    "QEngineError",
    "apply_unselective",
    "completeness_deviation",
    "eig_hermitian",
    "first_channel",
    "first_law_residual",
    "gamma_bounds",
    "gibbs_state",
    "isentropic_strength",
    "isentropic_threshold",
    "mean_energy",
    "measure_selective",
    "run_cycle",
    "second_channel",
    "sweep_csv",
    "trace_distance",
    "verify",
    "von_neumann_entropy",
]
