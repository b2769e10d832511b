#!/usr/bin/env python3
# Copyright 2026 The vqelab Authors
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
"""Generates the shipped molecular Pauli-sum Hamiltonians.

Hydrogen chains in STO-3G, RHF orbitals from pyscf. The fermionic operator
is mapped with Jordan-Wigner (spin orbitals ordered alpha block then beta
block), transformed to the parity encoding by a CNOT cascade, and the two
qubits that carry the conserved alpha-parity and total parity are tapered
off. Every emitted operator is checked against the pyscf FCI energy.

Usage: gen_hamiltonians.py <out_dir>
"""

import itertools
import os
import sys

import numpy as np
from pyscf import ao2mo, fci, gto, scf

CUTOFF = 1e-10

# Single-qubit Pauli product table: (a, b) -> (phase, c) with a*b = phase*c.
_PMUL = {}
for a in "IXYZ":
    _PMUL[("I", a)] = (1, a)
    _PMUL[(a, "I")] = (1, a)
for a in "XYZ":
    _PMUL[(a, a)] = (1, "I")
_PMUL[("X", "Y")] = (1j, "Z")
_PMUL[("Y", "X")] = (-1j, "Z")
_PMUL[("Y", "Z")] = (1j, "X")
_PMUL[("Z", "Y")] = (-1j, "X")
_PMUL[("Z", "X")] = (1j, "Y")
_PMUL[("X", "Z")] = (-1j, "Y")


def mul_word(u, v):
    phase = 1
    out = []
    for a, b in zip(u, v):
        p, c = _PMUL[(a, b)]
        phase *= p
        out.append(c)
    return phase, "".join(out)


def mul_op(x, y):
    out = {}
    for wu, cu in x.items():
        for wv, cv in y.items():
            p, w = mul_word(wu, wv)
            out[w] = out.get(w, 0) + p * cu * cv
    return out


def add_into(acc, op, scale):
    for w, c in op.items():
        acc[w] = acc.get(w, 0) + scale * c


def compress(op):
    return {w: c for w, c in op.items() if abs(c) > CUTOFF}


# Words are written with character k acting on qubit k.
def jw_ladder(j, n, dagger):
    z = "Z" * j
    rest = "I" * (n - j - 1)
    sign = -1j if dagger else 1j
    return {z + "X" + rest: 0.5, z + "Y" + rest: 0.5 * sign}


def molecule(n_atoms, d):
    mol = gto.M(
        atom=[("H", (0.0, 0.0, i * d)) for i in range(n_atoms)],
        basis="sto-3g",
        unit="Angstrom",
        verbose=0,
    )
    mf = scf.RHF(mol)
    mf.conv_tol = 1e-12
    mf.kernel()
    c = mf.mo_coeff
    h1 = c.T @ mf.get_hcore() @ c
    norb = c.shape[1]
    eri = ao2mo.restore(1, ao2mo.kernel(mol, c), norb)
    e_fci = fci.FCI(mf).kernel()[0]
    return mol.energy_nuc(), h1, eri, norb, e_fci


def jw_hamiltonian(e_nuc, h1, eri, norb):
    n = 2 * norb
    # spin orbital index: alpha p -> p, beta p -> p + norb
    cr = [jw_ladder(j, n, True) for j in range(n)]
    an = [jw_ladder(j, n, False) for j in range(n)]
    spin = lambda so: so // norb
    spat = lambda so: so % norb
    acc = {"I" * n: e_nuc}
    for p, q in itertools.product(range(n), repeat=2):
        if spin(p) != spin(q):
            continue
        v = h1[spat(p), spat(q)]
        if abs(v) > CUTOFF:
            add_into(acc, mul_op(cr[p], an[q]), v)
    # 1/2 sum (pq|rs) a+_p a+_r a_s a_q over spin orbitals (chemist notation)
    create, destroy = {}, {}
    for p, q, r, s in itertools.product(range(n), repeat=4):
        if spin(p) != spin(q) or spin(r) != spin(s):
            continue
        v = eri[spat(p), spat(q), spat(r), spat(s)]
        if abs(v) < CUTOFF or p == r or q == s:
            continue
        if (p, r) not in create:
            create[(p, r)] = mul_op(cr[p], cr[r])
        if (s, q) not in destroy:
            destroy[(s, q)] = mul_op(an[s], an[q])
        add_into(acc, mul_op(create[(p, r)], destroy[(s, q)]), 0.5 * v)
    return compress(acc)


def conj_cnot(word, phase, ctrl, tgt):
    """Conjugates a Pauli word by CNOT(ctrl, tgt); returns (phase, word)."""
    w = list(word)
    a, b = w[ctrl], w[tgt]
    table = {
        # (ctrl, tgt) -> (phase, ctrl', tgt') under CNOT P CNOT
        ("I", "I"): (1, "I", "I"), ("I", "X"): (1, "I", "X"),
        ("I", "Y"): (1, "Z", "Y"), ("I", "Z"): (1, "Z", "Z"),
        ("X", "I"): (1, "X", "X"), ("X", "X"): (1, "X", "I"),
        ("X", "Y"): (1, "Y", "Z"), ("X", "Z"): (-1, "Y", "Y"),
        ("Y", "I"): (1, "Y", "X"), ("Y", "X"): (1, "Y", "I"),
        ("Y", "Y"): (-1, "X", "Z"), ("Y", "Z"): (1, "X", "Y"),
        ("Z", "I"): (1, "Z", "I"), ("Z", "X"): (1, "Z", "X"),
        ("Z", "Y"): (1, "I", "Y"), ("Z", "Z"): (1, "I", "Z"),
    }
    p, c2, t2 = table[(a, b)]
    w[ctrl], w[tgt] = c2, t2
    return phase * p, "".join(w)


def apply_clifford(op, cnots):
    out = {}
    for w, c in op.items():
        ph = 1
        for ctrl, tgt in cnots:
            ph, w = conj_cnot(w, ph, ctrl, tgt)
        out[w] = out.get(w, 0) + ph * c
    return compress(out)


def taper(op, qubits, eigen):
    """Replaces Z on `qubits` by the given eigenvalues and drops those qubits."""
    out = {}
    for w, c in op.items():
        scale = 1
        for q, e in zip(qubits, eigen):
            if w[q] == "Z":
                scale *= e
            elif w[q] != "I":
                raise ValueError("term does not commute with tapered qubit")
        nw = "".join(ch for k, ch in enumerate(w) if k not in qubits)
        out[nw] = out.get(nw, 0) + scale * c
    return compress(out)


def parity_reduced(jw, norb, n_alpha, n_beta):
    n = 2 * norb
    # |n> -> |p>, p_j = n_0 ^ ... ^ n_j via CNOT(j, j+1), j ascending.
    # Conjugations are applied in circuit order.
    cnots = [(j, j + 1) for j in range(n - 1)]
    par = apply_clifford(jw, cnots)
    z_a = 1 if n_alpha % 2 == 0 else -1
    z_t = 1 if (n_alpha + n_beta) % 2 == 0 else -1
    return taper(par, [norb - 1, n - 1], [z_a, z_t])


def verify(op, e_fci, n):
    dim = 2**n
    mats = {
        "I": np.eye(2),
        "X": np.array([[0, 1], [1, 0]]),
        "Y": np.array([[0, -1j], [1j, 0]]),
        "Z": np.diag([1, -1]),
    }
    h = np.zeros((dim, dim), dtype=complex)
    for w, c in op.items():
        m = np.array([[1.0]])
        for ch in reversed(w):  # qubit 0 is least significant
            m = np.kron(m, mats[ch])
        h += c * m
    assert np.allclose(h, h.conj().T)
    lam = np.linalg.eigvalsh(h)[0]
    return lam


def emit(path, op, header):
    items = sorted(op.items(), key=lambda kv: (kv[0] != "I" * len(kv[0]), kv[0]))
    with open(path, "w") as f:
        for line in header:
            f.write("# " + line + "\n")
        for w, c in items:
            assert abs(c.imag) < 1e-10, (w, c)
            f.write(f"{c.real:.12f} {w}\n")


def main():
    out = sys.argv[1]
    os.makedirs(os.path.join(out, "h2"), exist_ok=True)
    os.makedirs(os.path.join(out, "h4"), exist_ok=True)
    grid = [round(0.2 + 0.1 * k, 2) for k in range(19)]
    for d in grid:
        e_nuc, h1, eri, norb, e_fci = molecule(2, d)
        op = parity_reduced(jw_hamiltonian(e_nuc, h1, eri, norb), norb, 1, 1)
        lam = verify(op, e_fci, 2)
        assert abs(lam - e_fci) < 1e-8, (d, lam, e_fci)
        emit(
            os.path.join(out, "h2", f"d_{d:.2f}.ham"),
            op,
            [
                f"H2 STO-3G, bond length {d:.2f} angstrom, energies in Hartree",
                "parity mapping with two-qubit reduction; qubit 0 is the leftmost character",
                f"FCI reference energy {e_fci:.12f}",
            ],
        )
        print("h2", d, len(op) - ("II" in op), lam)
    for d in [round(0.5 + 0.1 * k, 2) for k in range(16)]:
        e_nuc, h1, eri, norb, e_fci = molecule(4, d)
        op = parity_reduced(jw_hamiltonian(e_nuc, h1, eri, norb), norb, 2, 2)
        lam = verify(op, e_fci, 6)
        assert abs(lam - e_fci) < 1e-8, (d, lam, e_fci)
        emit(
            os.path.join(out, "h4", f"d_{d:.2f}.ham"),
            op,
            [
                f"Linear H4 chain STO-3G, spacing {d:.2f} angstrom, energies in Hartree",
                "parity mapping with two-qubit reduction; qubit 0 is the leftmost character",
                f"FCI reference energy {e_fci:.12f}",
            ],
        )
        print("h4", d, len(op) - ("I" * 6 in op), lam)


if __name__ == "__main__":
    main()
