# Generated by umlq (IR version 1), target: braket
# Model names:
#   (none)

import json

from braket.circuits import Circuit
from braket.devices import LocalSimulator

SHOTS = 1024

q = list(range(0))
qc = Circuit()

N_CLBITS = 0
# Nothing to execute: every shot reads all classical bits as 0.
counts = {"0" * N_CLBITS: SHOTS}
print(json.dumps(dict(sorted(counts.items()))))
