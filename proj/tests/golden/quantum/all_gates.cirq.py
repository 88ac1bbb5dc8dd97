# Generated by umlq (IR version 1), target: cirq
# Model names:
#   qubit 0: qubit_0
#   qubit 1: qubit_1
#   qubit 2: qubit_2
#   clbit 0: c_0
#   clbit 1: c_1
#   clbit 2: c_2

import json

import cirq

SHOTS = 1024


def u2(phi, lam, qubit):
    """u2(phi, lam) = u3(pi/2, phi, lam) up to global phase."""
    return [cirq.rz(lam)(qubit), cirq.ry(1.5707963267948966)(qubit), cirq.rz(phi)(qubit)]


def u3(theta, phi, lam, qubit):
    """u3(theta, phi, lam) up to global phase: rz(lam), then ry(theta), then rz(phi)."""
    return [cirq.rz(lam)(qubit), cirq.ry(theta)(qubit), cirq.rz(phi)(qubit)]


q = cirq.LineQubit.range(3)
qc = cirq.Circuit()

qc.append(cirq.H(q[0]))
qc.append(cirq.X(q[1]))
qc.append(cirq.Y(q[2]))
qc.append(cirq.Z(q[0]))
qc.append(cirq.S(q[1]))
qc.append((cirq.S**-1)(q[2]))
qc.append(cirq.T(q[0]))
qc.append((cirq.T**-1)(q[1]))
qc.append(cirq.rx(0.3)(q[2]))
qc.append(cirq.ry(-0.7)(q[0]))
qc.append(cirq.rz(1.1)(q[1]))
qc.append(u2(0.25, -1.5, q[2]))
qc.append(u3(0.9, 2.1, -0.4, q[0]))
qc.append(cirq.CNOT(q[0], q[1]))
qc.append(cirq.Y.controlled()(q[1], q[2]))
qc.append(cirq.CZ(q[2], q[0]))
qc.append(cirq.H.controlled()(q[0], q[2]))
qc.append(cirq.SWAP(q[0], q[1]))
qc.append(cirq.CCX(q[0], q[1], q[2]))
qc.append(cirq.CSWAP(q[1], q[0], q[2]))
qc.append(cirq.measure(q[0], key="m0"))
qc.append(cirq.measure(q[1], key="m1"))
qc.append(cirq.measure(q[2], key="m2"))

CLBIT_KEYS = ["m0", "m1", "m2"]
simulator = cirq.Simulator()
result = simulator.run(qc, repetitions=SHOTS)
counts = {}
for shot in range(SHOTS):
    bits = "".join(
        "0" if key is None else str(int(result.measurements[key][shot][0]))
        for key in reversed(CLBIT_KEYS)
    )
    counts[bits] = counts.get(bits, 0) + 1
print(json.dumps(dict(sorted(counts.items()))))
