#!/usr/bin/env python3
"""Write the q-expansion of the newform attached to an elliptic curve as one
JSON line in the eigenform file format.

Coefficients come from point counting: a_p = p + 1 - #E(F_p) (including bad
primes, where the singular reduction is counted as is), extended by the Hecke
recursion at good primes, a_{p^k} = a_p^k at bad primes, and multiplicativity.

    gen_ec_eigenform.py --label 37a --level 37 --ainv 0,0,1,-1,0 --al-sign 1 -n 3000
"""
import argparse
import json


def primes_upto(n):
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(n + 1) if sieve[i]]


def count_affine(ainv, p):
    a1, a2, a3, a4, a6 = (a % p for a in ainv)
    count = 0
    for x in range(p):
        rhs = (x * x * x + a2 * x * x + a4 * x + a6) % p
        for y in range(p):
            if (y * y + a1 * x * y + a3 * y - rhs) % p == 0:
                count += 1
    return count


def count_affine_odd(ainv, p):
    # y^2 + (a1 x + a3) y = rhs  <=>  (2y + a1 x + a3)^2 = 4 rhs + (a1 x + a3)^2
    a1, a2, a3, a4, a6 = (a % p for a in ainv)
    squares = [0] * p
    for y in range(p):
        squares[y * y % p] += 1
    count = 0
    for x in range(p):
        rhs = (x * x * x + a2 * x * x + a4 * x + a6) % p
        b = (a1 * x + a3) % p
        count += squares[(4 * rhs + b * b) % p]
    return count


def coefficients(ainv, level, n):
    a = [0] * (n + 1)
    a[1] = 1
    ap = {}
    for p in primes_upto(n):
        pts = count_affine(ainv, p) if p == 2 else count_affine_odd(ainv, p)
        ap[p] = p - pts
    # prime powers
    for p, value in ap.items():
        prev, cur = 1, value
        pk = p
        while pk <= n:
            a[pk] = cur
            if level % p == 0:
                prev, cur = cur, cur * value
            else:
                prev, cur = cur, value * cur - p * prev
            pk *= p
    # multiplicativity via smallest prime factor
    spf = list(range(n + 1))
    for p in primes_upto(int(n ** 0.5) + 1):
        for m in range(p * p, n + 1, p):
            if spf[m] == m:
                spf[m] = p
    for m in range(2, n + 1):
        p = spf[m]
        pk = 1
        rest = m
        while rest % p == 0:
            rest //= p
            pk *= p
        if rest != 1:
            a[m] = a[pk] * a[rest]
    return a[1:]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--label", required=True)
    ap.add_argument("--level", type=int, required=True)
    ap.add_argument("--ainv", required=True, help="a1,a2,a3,a4,a6")
    ap.add_argument("--al-sign", type=int, required=True)
    ap.add_argument("-n", type=int, default=3000)
    args = ap.parse_args()
    ainv = [int(t) for t in args.ainv.split(",")]
    an = coefficients(ainv, args.level, args.n)
    print(json.dumps({"label": args.label, "level": args.level, "weight": 2,
                      "al_sign": args.al_sign, "an": an}, separators=(", ", ": ")))


if __name__ == "__main__":
    main()
