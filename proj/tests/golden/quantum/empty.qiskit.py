# Generated by umlq (IR version 1), target: qiskit
# Model names:
#   (none)

import json

from qiskit import ClassicalRegister, QuantumCircuit, QuantumRegister, transpile
from qiskit_aer import AerSimulator

SHOTS = 1024

q = QuantumRegister(0, "q")
cRegister = ClassicalRegister(0, "c")
qc = QuantumCircuit(q, cRegister)

simulator = AerSimulator()
result = simulator.run(transpile(qc, simulator), shots=SHOTS).result()
counts = {"": SHOTS}
print(json.dumps(dict(sorted(counts.items()))))
