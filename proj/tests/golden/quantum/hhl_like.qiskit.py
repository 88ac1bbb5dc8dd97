# Generated by umlq (IR version 1), target: qiskit
# Model names:
#   qubit 0: ancilla
#   qubit 1: clock
#   qubit 2: input
#   clbit 0: c_ancilla
#   clbit 1: c_input

import json

from qiskit import ClassicalRegister, QuantumCircuit, QuantumRegister, transpile
from qiskit_aer import AerSimulator

SHOTS = 1024

q = QuantumRegister(3, "q")
cRegister = ClassicalRegister(2, "c")
qc = QuantumCircuit(q, cRegister)

qc.ry(1.0471975511965976, q[2])
qc.h(q[1])
qc.cx(q[1], q[2])
qc.rz(-0.7853981633974483, q[1])
qc.h(q[1])
qc.ch(q[1], q[0])
qc.u(1.5707963267948966, 0.0, 0.7853981633974483, q[0])
qc.h(q[1])
qc.cx(q[1], q[2])
qc.h(q[1])
qc.measure(q[0], cRegister[0])
qc.measure(q[2], cRegister[1])

simulator = AerSimulator()
result = simulator.run(transpile(qc, simulator), shots=SHOTS).result()
counts = result.get_counts(qc)
print(json.dumps(dict(sorted(counts.items()))))
