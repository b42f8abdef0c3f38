# Copyright 2026 The mwkc Authors
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

"""Maximum-weight k-colourable subgraphs of interval graphs.

Pick k time-disjoint sessions of programme slots with the largest total
viewer count.
"""

from mwkc._mwkc import (
    Arc,
    ArcKind,
    CheckReport,
    CliqueSequence,
    ColourClass,
    EmptyInstance,
    Error,
    FlowNetwork,
    InstanceTooLarge,
    InternalInvariantViolation,
    Interval,
    IntervalInstance,
    KcolourSolution,
    OracleResult,
    ParseError,
    ProgrammeSlot,
    ScheduleSet,
    TransformedNetwork,
    UnknownReference,
    brute_force,
    build_network,
    compute_stats,
    enumerate_maximal_cliques,
    parse_schedule,
    serialize_schedule,
    solve,
    to_intervals,
    validate_schedule,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
