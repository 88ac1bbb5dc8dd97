# Generated by umlq (IR version 1), target: braket
# Model names:
#   qubit 0: node_0
#   qubit 1: node_1
#   qubit 2: node_2
#   clbit 0: cut_0
#   clbit 1: cut_1
#   clbit 2: cut_2

import json

from braket.circuits import Circuit
from braket.devices import LocalSimulator

SHOTS = 1024

q = list(range(3))
qc = Circuit()

qc.h(q[0])
qc.h(q[1])
qc.h(q[2])
qc.cnot(q[0], q[1])
qc.rz(q[1], 0.8)
qc.cnot(q[0], q[1])
qc.cnot(q[1], q[2])
qc.rz(q[2], 0.8)
qc.cnot(q[1], q[2])
qc.rx(q[0], 0.6)
qc.rx(q[1], 0.6)
qc.rx(q[2], 0.6)
qc.measure(q[0])
qc.measure(q[1])
qc.measure(q[2])

N_CLBITS = 3
# (qubit, clbit) pairs in program order; a clbit keeps the last qubit measured into it.
MEASUREMENTS = [(0, 0), (1, 1), (2, 2)]
device = LocalSimulator()
result = device.run(qc, shots=SHOTS).result()
columns = list(result.measured_qubits)
counts = {}
for row in result.measurements:
    bits = ["0"] * N_CLBITS
    for qubit, clbit in MEASUREMENTS:
        bits[N_CLBITS - 1 - clbit] = str(int(row[columns.index(qubit)]))
    key = "".join(bits)
    counts[key] = counts.get(key, 0) + 1
print(json.dumps(dict(sorted(counts.items()))))
