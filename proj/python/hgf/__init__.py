# Copyright 2026 The HGF Authors.
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
"""Hierarchical guided image filtering."""

from hgf._hgf import (
    DEFAULT_DEGREE,
    DEFAULT_LAMBDA,
    DEFAULT_RADIUS,
    IoError,
    NumericalDegeneracy,
    box_average,
    box_sum,
    direct_ridge_filter,
    filter_volume,
    gf_filter,
    hgf_filter,
    hgf_filter_timed,
    segmentation_cost,
    set_max_threads,
    stereo_cost,
    synthesize_guidance,
    winner_takes_all,
)

__all__ = [
    "DEFAULT_DEGREE",
    "DEFAULT_LAMBDA",
    "DEFAULT_RADIUS",
    "IoError",
    "NumericalDegeneracy",
    "box_average",
    "box_sum",
    "direct_ridge_filter",
    "filter_volume",
    "gf_filter",
    "hgf_filter",
    "hgf_filter_timed",
    "segmentation_cost",
    "set_max_threads",
    "stereo_cost",
    "synthesize_guidance",
    "winner_takes_all",
]
