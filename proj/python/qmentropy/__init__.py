# Copyright 2026 The qmentropy Authors
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
"""Topological entropy estimates on finite samples of quasi-metric spaces."""

from ._qme import (
    MapSpec,
    PointCloud,
    QmeError,
    QuasiMetric,
    bowen_distance,
    check_axioms,
    compare_theorems,
    counts,
    estimate_entropy,
    power_rule_check,
    set_threads,
    threads,
)

__version__ = "0.1.0"

__all__ = [
    "MapSpec",
    "PointCloud",
    "QmeError",
    "QuasiMetric",
    "bowen_distance",
    "check_axioms",
    "compare_theorems",
    "counts",
    "estimate_entropy",
    "power_rule_check",
    "set_threads",
    "threads",
]
