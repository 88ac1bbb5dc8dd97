# Copyright 2026 The umlq Authors
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

"""Compile UML models of hybrid quantum-classical systems.

IR values are passed around as IR JSON text (see ``compile_models``); reports are
returned as dicts.
"""

import json

from . import _core
from ._core import (
    IR_VERSION,
    CodegenError,
    IrFormatError,
    ParseError,
    SimulationError,
    UnsupportedFeature,
    UnsupportedGate,
    branch_distribution,
    capabilities,
    classical_files,
    compile_models,
    counts_to_json,
    generate,
    kl_divergence,
    probabilities,
    sample,
    statevector,
    targets,
)

__all__ = [
    "IR_VERSION",
    "CodegenError",
    "IrFormatError",
    "ParseError",
    "SimulationError",
    "UnsupportedFeature",
    "UnsupportedGate",
    "branch_distribution",
    "capabilities",
    "classical_files",
    "compile_models",
    "counts_to_json",
    "element_report",
    "equivalence_verdict",
    "generate",
    "kl_divergence",
    "probabilities",
    "sample",
    "statevector",
    "targets",
    "validate",
]


def validate(ir_json, allow_mid_circuit=False):
    """Validation report as a dict with ``ok``, ``errors`` and ``warnings``."""
    return json.loads(_core.validate(ir_json, allow_mid_circuit))


def element_report(ir_json):
    """Element completeness of the generated classical skeletons."""
    return json.loads(_core.element_report(ir_json))


def equivalence_verdict(reference, candidate, threshold=0.1, shots=1024):
    """Dict with ``kl``, ``threshold``, ``pass`` and ``smoothed``."""
    return json.loads(_core.equivalence_verdict(reference, candidate, threshold, shots))
