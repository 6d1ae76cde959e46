#!/usr/bin/env python3
"""Generates the H2/STO-3G test fixture (FCIDUMP + manifest).

Restricted Hartree-Fock for H2 at 0.735 Angstrom in the STO-3G basis,
integrals evaluated with the closed-form s-type Gaussian formulas
(overlap/kinetic/nuclear/ERI with the Boys F0 function), molecular orbitals
fixed by g/u symmetry, and FCI in the (1 up, 1 down) sector as a consistency
check. Only numpy/scipy are required.

Run from the repository root:  python3 data/generate_h2_fixture.py
"""

import json
import os
from itertools import product

import numpy as np
from scipy.special import erf

# STO-3G hydrogen contraction (zeta = 1.24).
EXPONENTS = np.array([3.42525091, 0.62391373, 0.16885540])
COEFFS = np.array([0.15432897, 0.53532814, 0.44463454])
ANGSTROM_TO_BOHR = 1.8897259886
BOND_ANGSTROM = 0.735


def norm_s(a):
    return (2.0 * a / np.pi) ** 0.75


def boys_f0(x):
    if x < 1e-12:
        return 1.0 - x / 3.0
    return 0.5 * np.sqrt(np.pi / x) * erf(np.sqrt(x))


def main():
    r = BOND_ANGSTROM * ANGSTROM_TO_BOHR
    centers = [0.0, r]

    def prim_pairs():
        for a, ca in zip(EXPONENTS, COEFFS):
            for b, cb in zip(EXPONENTS, COEFFS):
                yield a, ca * norm_s(a), b, cb * norm_s(b)

    def overlap(A, B):
        r2 = (A - B) ** 2
        return sum(ca * cb * (np.pi / (a + b)) ** 1.5 * np.exp(-a * b / (a + b) * r2)
                   for a, ca, b, cb in prim_pairs())

    def kinetic(A, B):
        r2 = (A - B) ** 2
        total = 0.0
        for a, ca, b, cb in prim_pairs():
            p = a + b
            mu = a * b / p
            total += ca * cb * mu * (3.0 - 2.0 * mu * r2) * (np.pi / p) ** 1.5 * np.exp(-mu * r2)
        return total

    def nuclear(A, B):
        r2 = (A - B) ** 2
        total = 0.0
        for a, ca, b, cb in prim_pairs():
            p = a + b
            P = (a * A + b * B) / p
            pref = -2.0 * np.pi / p * np.exp(-a * b / p * r2)
            for C in centers:
                total += ca * cb * pref * boys_f0(p * (P - C) ** 2)
        return total

    def eri(A, B, C, D):
        rab2, rcd2 = (A - B) ** 2, (C - D) ** 2
        total = 0.0
        for a, ca, b, cb in prim_pairs():
            p = a + b
            P = (a * A + b * B) / p
            for c, cc, d, cd_ in prim_pairs():
                q = c + d
                Q = (c * C + d * D) / q
                pref = 2.0 * np.pi ** 2.5 / (p * q * np.sqrt(p + q))
                ex = np.exp(-a * b / p * rab2 - c * d / q * rcd2)
                total += ca * cb * cc * cd_ * pref * ex * boys_f0(p * q / (p + q) * (P - Q) ** 2)
        return total

    n = 2
    s = np.array([[overlap(centers[i], centers[j]) for j in range(n)] for i in range(n)])
    hcore = np.array([[kinetic(centers[i], centers[j]) + nuclear(centers[i], centers[j])
                       for j in range(n)] for i in range(n)])
    g = np.zeros((n, n, n, n))
    for i, j, k, l in product(range(n), repeat=4):
        g[i, j, k, l] = eri(centers[i], centers[j], centers[k], centers[l])

    # Symmetry-determined RHF orbitals of the homonuclear dimer.
    cg = np.array([1.0, 1.0]) / np.sqrt(2.0 * (1.0 + s[0, 1]))
    cu = np.array([1.0, -1.0]) / np.sqrt(2.0 * (1.0 - s[0, 1]))
    cmo = np.column_stack([cg, cu])

    h_mo = cmo.T @ hcore @ cmo
    g_mo = np.einsum("pi,qj,rk,sl,pqrs->ijkl", cmo, cmo, cmo, cmo, g)
    e_nuc = 1.0 / r
    e_hf = 2 * h_mo[0, 0] + g_mo[0, 0, 0, 0] + e_nuc

    # FCI over the (1 up, 1 down) sector, Slater-Condon rules.
    def phys(i, j, k, l):  # <ij|kl> from chemists' (ik|jl)
        return g_mo[i, k, j, l]

    dets = [(0, 0), (0, 1), (1, 0), (1, 1)]
    hfci = np.zeros((4, 4))
    for a, (i, j) in enumerate(dets):
        for b, (k, l) in enumerate(dets):
            if i == k and j == l:
                hfci[a, b] = h_mo[i, i] + h_mo[j, j] + phys(i, j, i, j)
            elif i == k:
                hfci[a, b] = h_mo[j, l] + phys(i, j, i, l)
            elif j == l:
                hfci[a, b] = h_mo[i, k] + phys(i, j, k, j)
            else:
                hfci[a, b] = phys(i, j, k, l)
    e_fci_elec = np.linalg.eigvalsh(hfci)[0]
    e_fci_total = e_fci_elec + e_nuc

    out_dir = os.path.dirname(os.path.abspath(__file__))
    fcidump_path = os.path.join(out_dir, "h2_sto3g_0p735.fcidump")
    with open(fcidump_path, "w") as f:
        f.write("&FCI NORB=2,NELEC=2,MS2=0,\n  ORBSYM=1,1,\n  ISYM=1,\n&END\n")

        def line(v, i, j, k, l):
            f.write(f" {v:.16e} {i} {j} {k} {l}\n")

        line(g_mo[0, 0, 0, 0], 1, 1, 1, 1)
        line(g_mo[0, 0, 1, 1], 1, 1, 2, 2)
        line(g_mo[0, 1, 0, 1], 1, 2, 1, 2)
        line(g_mo[1, 1, 1, 1], 2, 2, 2, 2)
        line(h_mo[0, 0], 1, 1, 0, 0)
        line(h_mo[1, 1], 2, 2, 0, 0)
        line(e_nuc, 0, 0, 0, 0)

    manifest = {
        "file": os.path.basename(fcidump_path),
        "system": "H2",
        "basis": "STO-3G (zeta=1.24, standard 3-Gaussian contraction)",
        "geometry": {"bond_length_angstrom": BOND_ANGSTROM, "bond_length_bohr": r},
        "generator": "data/generate_h2_fixture.py (closed-form s-type Gaussian "
                     "integrals, symmetry-determined RHF orbitals)",
        "orbital_basis": "RHF molecular orbitals (sigma_g, sigma_u)",
        "nuclear_repulsion_ha": e_nuc,
        "hf_total_energy_ha": e_hf,
        "fci_total_energy_ha": e_fci_total,
    }
    with open(os.path.join(out_dir, "h2_manifest.json"), "w") as f:
        json.dump(manifest, f, indent=2)
        f.write("\n")

    print(f"wrote {fcidump_path}")
    print(f"E_HF  = {e_hf:.10f} Ha")
    print(f"E_FCI = {e_fci_total:.10f} Ha")


if __name__ == "__main__":
    main()
