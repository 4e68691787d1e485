"""Regenerate fixtures/golden_v1.json with an independent arbitrary-precision integrator.

Uses mpmath's Taylor-series ODE solver at 30 significant digits, so nothing here shares
code or arithmetic with the C++ library. Run from the repository root:

    python3 tools/oracle/gen_golden.py > fixtures/golden_v1.json
"""

import json
import sys

import mpmath as mp

mp.mp.dps = 30


def solve_u(eta, dim, r):
    y0 = [mp.mpf(1), mp.mpf(0)] if dim == 1 else [mp.mpf(0), mp.mpf(1)]
    f = mp.odefun(lambda y, s: [s[1], -eta * mp.exp(-y * y) * s[0]], 0, y0)
    return f(r)


def solve_phi(eta, r, eps=mp.mpf("1e-6")):
    f = mp.odefun(lambda y, s: [s[1], -eta * mp.exp(-y * y) * s[0] - s[1] / y], eps, [1, 0])
    return f(r)


def a_s(dim, eta, r=10):
    eta = mp.mpf(eta)
    if dim == 2:
        phi, dphi = solve_phi(eta, r)
        return 2 * r * mp.exp(-phi / (r * dphi) - mp.euler)
    u, du = solve_u(eta, dim, r)
    return r - u / du


def pole(dim, lo, hi, r=12):
    def ind(eta):
        if dim == 2:
            phi, dphi = solve_phi(eta, r)
            return r * dphi / mp.hypot(phi, r * dphi)
        u, du = solve_u(eta, dim, r)
        return du / mp.hypot(u, du)

    return mp.findroot(ind, (mp.mpf(lo), mp.mpf(hi)), solver="anderson", tol=mp.mpf("1e-26"))


def entry(id_, dim, eta, quantity, value, rel_tol, params):
    return {
        "id": id_,
        "dim": dim,
        "eta": float(eta),
        "quantity": quantity,
        "value": mp.nstr(value, 25),
        "rel_tol": rel_tol,
        "method": "mpmath.odefun taylor, 30 digits",
        "params": params,
    }


def main():
    out = []
    u, du = solve_u(mp.mpf(2), 3, 10)
    out.append(entry("u3d_eta2", 3, 2, "u", u, 1e-9, {"r": 10}))
    out.append(entry("du3d_eta2", 3, 2, "du", du, 1e-9, {"r": 10}))
    phi, dphi = solve_phi(mp.mpf(1), 10)
    out.append(entry("phi2d_eta1", 2, 1, "phi", phi, 1e-9, {"r": 10, "epsilon": 1e-6}))
    out.append(entry("dphi2d_eta1", 2, 1, "dphi", dphi, 1e-9, {"r": 10, "epsilon": 1e-6}))

    etas = [-5, -2, -0.5, 0.5, 1, 3, 5, 7]
    for dim in (1, 2, 3):
        for eta in etas + ([4] if dim == 1 else []) + ([14] if dim == 3 else []):
            params = {"r": 10} if dim != 2 else {"r": 10, "epsilon": 1e-6}
            out.append(entry(f"a{dim}d_eta{eta:g}", dim, eta, "a_s", a_s(dim, eta), 1e-8, params))

    out.append(entry("W1_3d", 3, 0, "W", pole(3, 2.6, 2.75), 1e-12, {"r": 12}))
    out.append(entry("W1_1d", 1, 0, "W", pole(1, 8.6, 8.7), 1e-12, {"r": 12}))
    out.append(entry("W1_2d", 2, 0, "W", pole(2, 11.0, 11.1), 1e-12, {"r": 12, "epsilon": 1e-6}))

    doc = {"schema": "scatlen.golden", "version": 1, "values": out}
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
