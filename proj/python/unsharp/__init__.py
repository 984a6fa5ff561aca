# Copyright 2026 The unsharp Authors
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

"""Finite effect algebras with unsharp connectives and tense operators.

Elements and time points are addressed by name. Set-valued results are lists
in the carrier's declaration order.
"""

from ._core import (
    AxiomError,
    EffectAlgebra,
    Error,
    FrameError,
    ParseError,
    TimeFrame,
    UndefinedOperation,
    UnknownElement,
    evaluate,
    induced_relation,
    laws,
    run_cli,
    tense,
)

__all__ = [
    "AxiomError",
    "EffectAlgebra",
    "Error",
    "FrameError",
    "ParseError",
    "TimeFrame",
    "UndefinedOperation",
    "UnknownElement",
    "evaluate",
    "induced_relation",
    "laws",
    "run_cli",
    "tense",
]
