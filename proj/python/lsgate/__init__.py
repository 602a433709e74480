# Copyright 2026 The lsgate Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Light-shift gate error budgets, noisy parity-check circuits and GME witnesses."""

from ._core import (
    PauliString,
    budget,
    circuit_text,
    cl_witness,
    conjugate,
    default_config,
    fault_table,
    first_order_slope,
    gate_fidelity,
    geometry,
    simulate,
    sl_witness,
    sweep_csv,
)

__all__ = [
    "PauliString",
    "budget",
    "circuit_text",
    "cl_witness",
    "conjugate",
    "default_config",
    "fault_table",
    "first_order_slope",
    "gate_fidelity",
    "geometry",
    "simulate",
    "sl_witness",
    "sweep_csv",
]
__version__ = "0.1.0"
