# Generated by umlq (IR version 1), target: braket
# Model names:
#   qubit 0: ancilla
#   qubit 1: clock
#   qubit 2: input
#   clbit 0: c_ancilla
#   clbit 1: c_input

import json

from braket.circuits import Circuit
from braket.devices import LocalSimulator

SHOTS = 1024


def ch(circuit, control, target):
    """Controlled-H as ry(pi/4), cnot, ry(-pi/4) on the target."""
    circuit.ry(target, 0.7853981633974483).cnot(control, target).ry(target, -0.7853981633974483)


def u3(circuit, theta, phi, lam, target):
    """u3(theta, phi, lam) up to global phase: rz(lam), then ry(theta), then rz(phi)."""
    circuit.rz(target, lam).ry(target, theta).rz(target, phi)


q = list(range(3))
qc = Circuit()

qc.ry(q[2], 1.0471975511965976)
qc.h(q[1])
qc.cnot(q[1], q[2])
qc.rz(q[1], -0.7853981633974483)
qc.h(q[1])
ch(qc, q[1], q[0])
u3(qc, 1.5707963267948966, 0.0, 0.7853981633974483, q[0])
qc.h(q[1])
qc.cnot(q[1], q[2])
qc.h(q[1])
qc.measure(q[0])
qc.measure(q[2])

N_CLBITS = 2
# (qubit, clbit) pairs in program order; a clbit keeps the last qubit measured into it.
MEASUREMENTS = [(0, 0), (2, 1)]
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
