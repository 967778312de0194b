#!/usr/bin/env python3
"""Generate a table of zeta-zero ordinates (one per line) for offline use.

Zeros are bracketed by sign changes of a vectorized Riemann-Siegel Z(t)
(main sum plus first correction term) on a fine grid, then each bracket is
refined with mpmath.siegelz. Completeness is checked at the last good Gram
point below the final ordinate: N(g_n) must equal n + 1.
"""
import argparse
import math
import sys

import mpmath
import numpy as np


def theta(t):
    return (t / 2) * np.log(t / (2 * np.pi)) - t / 2 - np.pi / 8 + 1 / (48 * t) + 7 / (5760 * t**3)


def z_rs(t):
    t = np.asarray(t, dtype=np.float64)
    a = np.sqrt(t / (2 * np.pi))
    n_terms = np.floor(a).astype(np.int64)
    th = theta(t)
    out = np.zeros_like(t)
    for n in range(1, int(n_terms.max()) + 1):
        mask = n_terms >= n
        out += np.where(mask, np.cos(th - t * math.log(n)) / math.sqrt(n), 0.0)
    out *= 2
    p = a - n_terms
    den = np.cos(2 * np.pi * p)
    den = np.where(np.abs(den) < 1e-9, 1e-9, den)
    c0 = np.cos(2 * np.pi * (p * p - p - 1 / 16)) / den
    sign = np.where((n_terms - 1) % 2 == 0, 1.0, -1.0)
    return out + sign * a ** -0.5 * c0


def refine(lo, hi):
    mpmath.mp.dps = 20
    f = lambda t: mpmath.siegelz(t)
    return float(mpmath.findroot(f, (mpmath.mpf(lo), mpmath.mpf(hi)), solver="anderson", tol=1e-24))


def gram_point(n):
    return float(mpmath.grampoint(n))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, required=True)
    ap.add_argument("--step", type=float, default=0.01)
    ap.add_argument("--out", required=True)
    args = ap.parse_args()

    # Riemann-von Mangoldt inverse estimate plus margin.
    t_max = 20.0
    while (t_max / (2 * math.pi)) * math.log(t_max / (2 * math.pi * math.e)) + 7 / 8 < args.count + 20:
        t_max *= 1.05
    grid = np.arange(10.0, t_max, args.step)
    brackets = []
    chunk = 200000
    prev_t, prev_z = None, None
    for i in range(0, grid.size, chunk):
        ts = grid[i:i + chunk]
        zs = z_rs(ts)
        if prev_t is not None:
            ts = np.concatenate(([prev_t], ts))
            zs = np.concatenate(([prev_z], zs))
        idx = np.nonzero(np.sign(zs[:-1]) != np.sign(zs[1:]))[0]
        brackets.extend((ts[j], ts[j + 1]) for j in idx)
        prev_t, prev_z = ts[-1], zs[-1]
    if len(brackets) < args.count:
        sys.exit(f"only {len(brackets)} brackets found below {t_max}")

    zeros = []
    for k, (lo, hi) in enumerate(brackets[: args.count + 5]):
        zeros.append(refine(lo, hi))
        if k % 1000 == 0:
            print(f"{k} {zeros[-1]:.9f}", file=sys.stderr, flush=True)

    # Completeness: find the last good Gram point below the last zero.
    n = int(math.floor(float(mpmath.siegeltheta(zeros[-1])) / math.pi)) - 1
    while n > 0:
        g = gram_point(n)
        if (-1) ** n * float(mpmath.siegelz(g)) > 0:
            break
        n -= 1
    found = sum(1 for z in zeros if z < g)
    if found != n + 1:
        sys.exit(f"completeness check failed at gram point {n}: found {found}, expected {n + 1}")
    print(f"gram check ok: N(g_{n}) = {found}", file=sys.stderr)

    zeros = zeros[: args.count]
    with open(args.out, "w") as fh:
        fh.write(f"# first {len(zeros)} ordinates of nontrivial zeta zeros (rho = 1/2 + i*gamma)\n")
        for z in zeros:
            fh.write(f"{z:.9f}\n")


if __name__ == "__main__":
    main()
