#!/usr/bin/env python3
"""Regenerates tests/fixtures/oeis/*.txt from the OEIS defining formulas.

oeis.org is not reachable from the build environment, so the fixtures are
computed here with Python integers from the formulas the OEIS entries give,
independently of the C++ code:

  A269939  Ward2(n,k)  = sum_m (-1)^(m+k) C(n+k, n+m) S2(n+m, m)
  A269940  Ward1(n,k)  = sum_m (-1)^(m+k) C(n+k, n+m) |s1(n+m, m)|
  A357367  WardLah     = sum_m (-1)^(m+k) C(n+k, n+m) C(n+m-1, m-1) (n+m)!/m!
  A268438  VariedWard1 = (2n)! k!/(n+k)! Ward1(n,k)
  A268437  VariedWard2 = (2n)! k!/(n+k)! Ward2(n,k)
  A268439  BinomialWard1 = C(2n, n+k) Ward1(n,k)
  A268440  BinomialWard2 = C(2n, n+k) Ward2(n,k)

Triangles are read by rows from (1,1) with index 1.

Usage: python3 tools/make_oeis_fixtures.py [rows]
"""
import sys
from functools import lru_cache
from math import comb, factorial
from pathlib import Path


def binom(n, k):
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def s1(n, k):
    if n == 0 and k == 0:
        return 1
    if n == 0 or k == 0:
        return 0
    return s1(n - 1, k - 1) + (n - 1) * s1(n - 1, k)


@lru_cache(maxsize=None)
def s2(n, k):
    if n == 0 and k == 0:
        return 1
    if n == 0 or k == 0:
        return 0
    return s2(n - 1, k - 1) + k * s2(n - 1, k)


def ward(stirling, n, k):
    return sum((-1) ** (m + k) * binom(n + k, n + m) * stirling(n + m, m) for m in range(k + 1))


def ward_lah(n, k):
    return sum((-1) ** (m + k) * binom(n + k, n + m) * binom(n + m - 1, m - 1)
               * factorial(n + m) // factorial(m) for m in range(k + 1))


def varied(x):
    def f(n, k):
        num = factorial(2 * n) * factorial(k) * x(n, k)
        assert num % factorial(n + k) == 0
        return num // factorial(n + k)
    return f


def binomial_scaled(x):
    return lambda n, k: binom(2 * n, n + k) * x(n, k)


def w1(n, k):
    return ward(s1, n, k)


def w2(n, k):
    return ward(s2, n, k)


SEQUENCES = {
    "A269939": ("Ward numbers of the second kind", w2),
    "A269940": ("Ward numbers of the first kind", w1),
    "A357367": ("Ward-Lah numbers", ward_lah),
    "A268437": ("varied Ward numbers of the second kind", varied(w2)),
    "A268438": ("varied Ward numbers of the first kind", varied(w1)),
    "A268439": ("binomial Ward numbers of the first kind", binomial_scaled(w1)),
    "A268440": ("binomial Ward numbers of the second kind", binomial_scaled(w2)),
}


def main():
    rows = int(sys.argv[1]) if len(sys.argv) > 1 else 20
    out_dir = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "oeis"
    out_dir.mkdir(parents=True, exist_ok=True)
    for anum, (title, fn) in SEQUENCES.items():
        lines = [f"# {anum} {title}, rows 1..{rows} read by rows from T(1,1)",
                 "# generated by tools/make_oeis_fixtures.py from the OEIS defining formula"]
        index = 1
        for n in range(1, rows + 1):
            for k in range(1, n + 1):
                v = fn(n, k)
                assert v > 0
                lines.append(f"{index} {v}")
                index += 1
        (out_dir / f"b{anum[1:]}.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
