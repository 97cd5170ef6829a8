# Copyright 2026 The qrec Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Correlated readout-error characterization toolkit.

Thin Python layer over the C++ core: build or load a noise model, run the
n+1 preparation protocol (simulated or via a custom backend), estimate the
epsilon/A/C correlators with their sampling-error bounds, and analyze them
against a device coupling topology.
"""

from ._qrec import (
    DEFAULT_ENUMERATION_LIMIT,
    CorrelatorSet,
    CountsTable,
    DistanceMatrix,
    NoiseModel,
    Preparation,
    Topology,
    __version__,
    bin_by_distance,
    characterize,
    derive_subseed,
    effective_flip_probs,
    estimate_a,
    estimate_c,
    estimate_epsilon,
    exact_correlators,
    exact_distribution,
    histogram,
    interpolated_quantile,
    linear_edges,
    log_spaced_edges,
    marginal_one_prob,
    min_distances,
    noise_floor_classification,
    preparation_set,
    run_protocol,
    sample_readout,
    sampling_bounds,
    simulate_protocol,
)

__all__ = [
    "DEFAULT_ENUMERATION_LIMIT",
    "CorrelatorSet",
    "CountsTable",
    "DistanceMatrix",
    "NoiseModel",
    "Preparation",
    "Topology",
    "__version__",
    "bin_by_distance",
    "characterize",
    "derive_subseed",
    "effective_flip_probs",
    "estimate_a",
    "estimate_c",
    "estimate_epsilon",
    "exact_correlators",
    "exact_distribution",
    "histogram",
    "interpolated_quantile",
    "linear_edges",
    "log_spaced_edges",
    "marginal_one_prob",
    "min_distances",
    "noise_floor_classification",
    "preparation_set",
    "run_protocol",
    "sample_readout",
    "sampling_bounds",
    "simulate_protocol",
]
