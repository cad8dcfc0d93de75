#!/usr/bin/env python3
"""Regenerates the bundled b-file snapshots under data/.

The build is hermetic, so the snapshots are produced offline. Terms come from
closed forms that do not share code with the C++ library: triangle entries are
computed as coefficients of their column generating functions, not by the
row recursion.

Usage: python3 tools/make_bfiles.py [data_dir]
"""
import sys
from math import comb
from pathlib import Path


def neg_binom(r, j):
    """[x^j] (1+x)^(-r)."""
    if r == 0:
        return 1 if j == 0 else 0
    return (-1) ** j * comb(r + j - 1, j)


def A(m, t):
    """[x^(m-t)] 1/((1-x)(1+x)^t)."""
    if t < 0 or t > m:
        return 0
    if t == 0:
        return 1
    return sum(neg_binom(t, j) for j in range(m - t + 1))


def Ak(k, m, t):
    """[x^(m-t)] 1/((1-k x^2)(1+x)^(t-1)); A_k(m,0) = k^floor(m/2)."""
    if t < 0 or t > m:
        return 0
    if t == 0:
        return k ** (m // 2)
    n = m - t
    return sum(k ** i * neg_binom(t - 1, n - 2 * i) for i in range(n // 2 + 1))


def fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def dyck_height_exactly(length, h):
    def upto(cap):
        row = [0] * (cap + 1)
        row[0] = 1
        for _ in range(length):
            nxt = [0] * (cap + 1)
            for y, w in enumerate(row):
                if w == 0:
                    continue
                if y + 1 <= cap:
                    nxt[y + 1] += w
                if y - 1 >= 0:
                    nxt[y - 1] += w
            row = nxt
        return row[0]
    return upto(h) - upto(h - 1)


def c_col(m, t):
    # (-1)^t B(m+t+1, t) with B(m,t) = A(m, m-t)
    return (-1) ** t * A(m + t + 1, m + 1)


SEQUENCES = []


def seq(oid, origin, count, fn, source):
    SEQUENCES.append((oid, origin, [fn(i) for i in range(origin, origin + count)], source))


def triangle_reading():
    out = []
    m = 0
    while len(out) < 66:
        out.extend(A(m, t) for t in range(m + 1))
        m += 1
    return out[:66]


tri = triangle_reading()
seq("A220074", 0, 66, lambda i: tri[i],
    "alternating Jacobsthal triangle read by rows, entry = [x^(m-t)] 1/((1-x)(1+x)^t)")
seq("A119282", 0, 30, lambda s: 1 + (-1) ** s * fib(s), "1 + (-1)^n Fib(n)")
SEQUENCES.append(("A059714", 0,
                  [1, 3, 11, 44, 184, 789, 3435, 15100, 66806, 296870, 1323318, 5911972],
                  "stacked directed animals sigma_n, values as printed alongside the citation"))
seq("A007179", 1, 30, lambda n: 2 ** (n - 1) if n % 2 else 2 ** (n - 1) - 2 ** (n // 2 - 1),
    "2^(n-1) for odd n, 2^(n-1) - 2^(n/2-1) for even n")
seq("A000124", 1, 30, lambda n: n * (n + 1) // 2 + 1, "n(n+1)/2 + 1")
seq("A003600", 1, 30, lambda n: (n ** 3 + 3 * n ** 2 + 8 * n) // 6, "(n^3 + 3n^2 + 8n)/6")
seq("A223718", 1, 30, lambda m: c_col(m, 4), "(-1)^4 B(m+5,4), column generating-function coefficients")
seq("A257890", 1, 30, lambda m: c_col(m, 5), "(-1)^5 B(m+6,5), column generating-function coefficients")
seq("A223659", 1, 30, lambda m: c_col(m, 6), "(-1)^6 B(m+7,6), column generating-function coefficients")
seq("A002856", 3, 30, lambda m: Ak(2, m, m - 2), "B_2(m,2) = A_2(m,m-2) from 1/((1-2x^2)(1+x)^(t-1))")
seq("A152948", 3, 30, lambda m: Ak(2, m, m - 2), "B_2(m,2) = A_2(m,m-2) from 1/((1-2x^2)(1+x)^(t-1))")
seq("A254875", 5, 30, lambda m: -Ak(2, m, m - 3), "-B_2(m,3) = -A_2(m,m-3) from 1/((1-2x^2)(1+x)^(t-1))")
seq("A258109", 1, 20, lambda s: dyck_height_exactly(2 * (s + 1), 3),
    "Dyck paths of length 2(n+1) with maximum height exactly 3 (transfer matrix)")
seq("A011848", 3, 30, lambda n: comb(n, 2) // 2, "floor(binomial(n,2)/2)")
seq("A212342", 5, 30, lambda m: Ak(-1, m, m - 2), "B_{-1}(m,2) = A_{-1}(m,m-2)")
seq("A005581", 6, 30, lambda m: -Ak(-1, m, m - 3), "-B_{-1}(m,3) = -A_{-1}(m,m-3)")
seq("A007910", 2, 30, lambda m: sum(abs(Ak(-1, m, t)) for t in range(2, m + 1)),
    "sum_{t>=2} |A_{-1}(m,t)|")
seq("A000045", 0, 40, fib, "Fibonacci numbers")
seq("A001045", 0, 40, lambda n: (2 ** n - (-1) ** n) // 3, "Jacobsthal numbers (2^n - (-1)^n)/3")


def pell(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, 2 * b + a
    return a


seq("A000129", 0, 30, pell, "Pell numbers")


def main():
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data"
    out_dir.mkdir(parents=True, exist_ok=True)
    for oid, origin, terms, source in SEQUENCES:
        lines = [f"# {oid} bundled snapshot", f"# source: {source}",
                 f"# first index: {origin}"]
        lines += [f"{origin + i} {v}" for i, v in enumerate(terms)]
        (out_dir / f"b{oid[1:]}.txt").write_text("\n".join(lines) + "\n")
    print(f"wrote {len(SEQUENCES)} files to {out_dir}")


if __name__ == "__main__":
    main()
