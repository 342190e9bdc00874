# Copyright 2026 The kgon Authors
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
"""Maximum-area inscribed k-gons of convex lattice polygons.

Areas are returned as exact twice-areas (Python ints).
"""

from ._kgon import (
    KgonError,
    Polygon,
    brute_force,
    dp_kgon,
    ds_all_roots,
    ds_run,
    enumerate_stable,
    fuzz_campaign,
    heuristic_fails,
    is_stable,
    paper_polygon,
    random_convex,
    render_svg,
    shrink,
    stable_count,
    sweep_quad,
    verify_counterexample,
    was_reversed,
)

__all__ = [
    "KgonError",
    "Polygon",
    "brute_force",
    "dp_kgon",
    "ds_all_roots",
    "ds_run",
    "enumerate_stable",
    "fuzz_campaign",
    "heuristic_fails",
    "is_stable",
    "paper_polygon",
    "random_convex",
    "render_svg",
    "shrink",
    "stable_count",
    "sweep_quad",
    "verify_counterexample",
    "was_reversed",
]
