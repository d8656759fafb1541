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

import math

import pytest

import qmentropy as q


def test_metric_evaluation():
    e = q.QuasiMetric.example1_line()
    assert e([0.0], [0.5]) == 0.5
    assert e([0.5], [0.0]) == 1.0
    assert q.QuasiMetric.weighted_asym(1.0, 0.5)([0.25], [0.75]) == 0.5
    m = e.symmetrize_max()
    assert m([0.0], [0.5]) == m([0.5], [0.0]) == 1.0


def test_axiom_report():
    report = q.check_axioms(q.QuasiMetric.example1_line(), q.PointCloud.grid_1d(-2, 2, 20))
    assert report["triangle_ok"] and report["identity_ok"]
    bad = q.QuasiMetric.matrix([[0, 1, 5], [1, 0, 1], [1, 1, 0]])
    report = q.check_axioms(bad, q.PointCloud.indices(3))
    assert not report["triangle_ok"]
    assert report["violation_count"] > 0


def test_maps_and_bowen_distance():
    t = q.MapSpec.doubling()
    assert t([0.75]) == [0.5]
    assert t.iterate(3)([0.125]) == [0.0]
    cloud = q.PointCloud.circle_grid(8)
    e = q.QuasiMetric.circle_arc()
    # Orbits of 0 and 1/8 separate by doubling until they are 1/2 apart.
    assert q.bowen_distance(e, t, cloud, 0, 1, 1) == 0.125
    assert q.bowen_distance(e, t, cloud, 0, 1, 3) == 0.5


def test_counts_on_two_points():
    e = q.QuasiMetric.matrix([[0, 1], [2, 0]])
    cloud = q.PointCloud.indices(2)
    ident = q.MapSpec.identity()
    assert q.counts(e, ident, cloud, 1, 1.5, "AsymOR")["spanning"] == 1
    two_sided = q.counts(e, ident, cloud, 1, 1.5, "SymAND")
    assert two_sided["spanning"] == 2 and two_sided["spanning_optimal"]
    assert two_sided["spanning_witness"] == [0, 1]


def test_doubling_entropy_near_log2():
    est = q.estimate_entropy(
        q.QuasiMetric.circle_arc(),
        q.MapSpec.doubling(),
        q.PointCloud.circle_grid(512),
        list(range(2, 8)),
        [0.125, 0.0625],
    )
    assert abs(est["extrapolated"] - math.log(2)) < 0.15


def test_identity_has_zero_entropy():
    est = q.estimate_entropy(
        q.QuasiMetric.example1_line(),
        q.MapSpec.identity(),
        q.PointCloud.grid_1d(0, 1, 33),
        [1, 2, 3, 4, 5],
        [0.25, 0.125],
        variant="HDoublePrime",
    )
    assert est["extrapolated"] == 0.0


def test_theorem_and_power_reports():
    report = q.compare_theorems(
        q.QuasiMetric.circle_arc(), q.MapSpec.doubling(), q.PointCloud.circle_grid(32), [1, 2, 3], [0.25, 0.125]
    )
    names = {c["name"] for c in report["checks"]}
    assert "sandwich_symand" in names
    assert all(c["passed"] for c in report["checks"] if c["level"] == "count")
    power = q.power_rule_check(
        q.QuasiMetric.circle_arc(), q.MapSpec.identity(), 2, q.PointCloud.circle_grid(16), [1, 2, 3, 4], [0.25]
    )
    assert power["passed"]


def test_errors_surface_as_value_errors():
    with pytest.raises(ValueError):
        q.MapSpec.tent(3.0)
    with pytest.raises(ValueError):
        q.counts(q.QuasiMetric.circle_arc(), q.MapSpec.doubling(), q.PointCloud.circle_grid(4), 1, 0.1, "BOTH")
    assert issubclass(q.QmeError, ValueError)


def test_thread_setting_round_trips():
    saved = q.threads()
    q.set_threads(2)
    assert q.threads() == 2
    q.set_threads(saved)
