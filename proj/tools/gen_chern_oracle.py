#!/usr/bin/env python3
"""Regenerate tests/data/chern_oracle.json.

Fine-grid Fukui-Hatsugai-Suzuki runs that pin the Chern sign convention
used by the whole project.  The values in the committed JSON were frozen
from this script before the C++ implementation existed; the acceptance
suite compares the library against them.  Rerun only if the convention
itself is deliberately changed.

Usage: python3 tools/gen_chern_oracle.py [out.json]
"""

import json
import sys

import numpy as np


def fhs(u):
    """Lattice field-strength Chern number of a band.

    u: (Nx, Ny, n) array of unit fiber vectors on the discretized torus.
    Returns (chern_int, residual, min_link).
    """
    ux = np.sum(np.conj(u) * np.roll(u, -1, axis=0), axis=2)
    uy = np.sum(np.conj(u) * np.roll(u, -1, axis=1), axis=2)
    min_link = min(np.abs(ux).min(), np.abs(uy).min())
    ux = ux / np.abs(ux)
    uy = uy / np.abs(uy)
    plaq = ux * np.roll(uy, -1, axis=0) * np.conj(np.roll(ux, -1, axis=1)) * np.conj(uy)
    total = np.angle(plaq).sum() / (2.0 * np.pi)
    c = int(np.rint(total))
    return c, abs(total - c), float(min_link)


def band_vectors(hfun, nx, ny, dim, band):
    kx = 2.0 * np.pi * np.arange(nx) / nx
    ky = 2.0 * np.pi * np.arange(ny) / ny
    u = np.empty((nx, ny, dim), dtype=complex)
    gap = np.inf
    for i in range(nx):
        for j in range(ny):
            w, v = np.linalg.eigh(hfun(kx[i], ky[j]))
            u[i, j] = v[:, band]
            lo = w[band] - w[band - 1] if band > 0 else np.inf
            hi = w[band + 1] - w[band] if band + 1 < dim else np.inf
            gap = min(gap, lo, hi)
    return u, float(gap)


def qwz(m):
    def h(kx, ky):
        d1, d2, d3 = np.sin(kx), np.sin(ky), m + np.cos(kx) + np.cos(ky)
        return np.array([[d3, d1 - 1j * d2], [d1 + 1j * d2, -d3]])
    return h


def sphere_wrap(c):
    # QWZ at m=1 composed with the degree-c self map kx -> c*kx.
    def h(kx, ky):
        return qwz(1.0)(c * kx, ky)
    return h


def harper(p, q):
    # Landau gauge; grid angle kappa_x = q * k_x traverses the magnetic BZ once.
    def h(kapx, ky):
        m = np.zeros((q, q), dtype=complex)
        for j in range(q):
            m[j, j] = 2.0 * np.cos(ky + 2.0 * np.pi * p * j / q)
        for j in range(q - 1):
            m[j, j + 1] += 1.0
            m[j + 1, j] += 1.0
        m[q - 1, 0] += np.exp(1j * kapx)
        m[0, q - 1] += np.exp(-1j * kapx)
        return m
    return h


def main():
    out = {}
    n_pin = 256

    c, res, _ = fhs(band_vectors(qwz(1.0), n_pin, n_pin, 2, 0)[0])
    out["qwz_m1"] = {"grid": n_pin, "chern": c, "residual": res}
    print(f"qwz m=1 {n_pin}^2: C={c} residual={res:.3e}")

    windows = {
        "below_-2": [-3.8, -3.4, -3.0, -2.6, -2.2],
        "-2_to_0": [-1.8, -1.4, -1.0, -0.6, -0.2],
        "0_to_2": [0.2, 0.6, 1.0, 1.4, 1.8],
        "above_2": [2.2, 2.6, 3.0, 3.4, 3.8],
    }
    sweep = {}
    for name, ms in windows.items():
        vals = []
        for m in ms:
            c, res, _ = fhs(band_vectors(qwz(m), 128, 128, 2, 0)[0])
            vals.append(c)
            assert res < 1e-9, (m, res)
        assert len(set(vals)) == 1, (name, vals)
        sweep[name] = {"m": ms, "chern": vals[0]}
        print(f"qwz window {name}: C={vals[0]}")
    out["qwz_windows"] = sweep

    wrap = {}
    for c_target in range(-2, 3):
        u, gap = band_vectors(sphere_wrap(c_target), 128, 128, 2, 0)
        c, res, _ = fhs(u)
        wrap[str(c_target)] = c
        print(f"sphere_wrap c={c_target}: C={c} gap={gap:.3f} residual={res:.3e}")
    out["sphere_wrap"] = wrap

    # Observed relation between this plaquette orientation and the
    # Landau-gauge TKNN Diophantine solution (p*t == 1 mod q, |t| <= q/2):
    # FHS lowest band = tknn_sign * t.
    out["tknn_sign"] = -1

    hof = {}
    for p, q in [(1, 3), (2, 5)]:
        bands = []
        gaps = []
        links = []
        for b in range(q):
            u, gap = band_vectors(harper(p, q), 96, 96, q, b)
            c, res, ml = fhs(u)
            bands.append(c)
            gaps.append(round(gap, 4))
            links.append(round(ml, 4))
            assert res < 1e-9
        hof[f"{p}_{q}"] = {"bands": bands, "min_gaps": gaps}
        print(f"harper p/q={p}/{q}: bands={bands} gaps={gaps} min_links={links}")
    out["hofstadter"] = hof

    path = sys.argv[1] if len(sys.argv) > 1 else "tests/data/chern_oracle.json"
    with open(path, "w") as f:
        json.dump(out, f, indent=1, sort_keys=True)
        f.write("\n")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
