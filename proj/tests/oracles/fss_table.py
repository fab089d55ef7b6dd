#!/usr/bin/env python3
"""Rank table for the full-set-of-sections locus of generators of mu_{p^a} inside mu_{p^(a+e)}.

F_p[zeta]/(zeta^M - 1) with M = p^s equals F_p[t]/(t^M) for t = zeta - 1, a chain ring,
so the quotient by an ideal has dimension min(M, smallest t-adic valuation of a generator).
"""
import json
import sys
from math import comb


def poly_mul(f, g, p, M):
    out = [0] * M
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[(i + j) % M] = (out[(i + j) % M] + a * b) % p
    return out


def zeta_power(k, p, M):
    v = [0] * M
    v[k % M] = 1
    return v


def t_valuation(f, p, M):
    # f(zeta) with zeta = 1 + t, truncated at t^M
    coeffs = [0] * M
    for k, c in enumerate(f):
        if c:
            for i in range(0, min(k, M - 1) + 1):
                coeffs[i] = (coeffs[i] + c * comb(k, i)) % p
    for i, c in enumerate(coeffs):
        if c:
            return i
    return M


def rank(p, a, e):
    M = p ** (a + e)
    pa, pe = p ** a, p ** e
    # coefficients in T of prod_j (T - zeta^(pe j)), lowest degree first, each in F_p[zeta]/(zeta^M - 1)
    poly = [zeta_power(0, p, M)]
    for j in range(pa):
        root = [(-c) % p for c in zeta_power(pe * j, p, M)]
        nxt = [[0] * M for _ in range(len(poly) + 1)]
        for k, c in enumerate(poly):
            nxt[k + 1] = [(x + y) % p for x, y in zip(nxt[k + 1], c)]
            prod = poly_mul(c, root, p, M)
            nxt[k] = [(x + y) % p for x, y in zip(nxt[k], prod)]
        poly = nxt
    poly[pa][0] = (poly[pa][0] - 1) % p
    poly[0][0] = (poly[0][0] + 1) % p
    return min(min(t_valuation(c, p, M) for c in poly), M)


def main():
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
    limit = int(sys.argv[1]) if len(sys.argv) > 1 else 32
    rows = []
    for p in primes:
        s = 0
        while p ** s <= limit:
            for a in range(s + 1):
                rows.append({"p": p, "a": a, "e": s - a, "rank": rank(p, a, s - a)})
            s += 1
    json.dump({"rows": rows}, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
