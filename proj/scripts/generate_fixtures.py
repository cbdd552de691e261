#!/usr/bin/env python3
"""Regenerate the bundled OEIS fixture b-files in data/oeis/.

The sandbox this project is developed in has no route to oeis.org, so the
fixtures are produced locally from definitions that are independent of
this library's own code paths (classical recurrences and closed forms for
each A-number). When network access is available they can be refreshed
verbatim from the site instead:

    curl https://oeis.org/AXXXXXX/bXXXXXX.txt

Each generator below states the definition it uses. All arithmetic is
exact (Python ints / fractions).
"""

from fractions import Fraction
from math import comb, factorial
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "data" / "oeis"
TERMS = 30


def motzkin(count):
    # A001006: (n+2) M(n) = (2n+1) M(n-1) + 3(n-1) M(n-2), M(0)=M(1)=1.
    m = [1, 1]
    for n in range(2, count):
        num = (2 * n + 1) * m[n - 1] + 3 * (n - 1) * m[n - 2]
        assert num % (n + 2) == 0
        m.append(num // (n + 2))
    return 0, m[:count]


def triangular(count):
    # A000217: n(n+1)/2.
    return 0, [n * (n + 1) // 2 for n in range(count)]


def two_c_n_4(count):
    # A034827: 2*C(n,4), offset 4.
    return 4, [2 * comb(n, 4) for n in range(4, 4 + count)]


def five_c_n_6(count):
    # A000910: 5*C(n,6), offset 6.
    return 6, [5 * comb(n, 6) for n in range(6, 6 + count)]


def tritriangular(count):
    # A050534: C(C(n,2), 2).
    return 0, [comb(comb(n, 2), 2) for n in range(count)]


def bessel_exp_scaled(q, count):
    # A014531 (q=2) / A014532 (q=3): (n+q)! times the t^n coefficient of
    # e^t * sum_k t^(2k) / (k! (k+q)!).
    coeffs = []
    for n in range(count):
        c = Fraction(0)
        for k in range(0, n // 2 + 1):
            c += Fraction(1, factorial(k) * factorial(k + q) * factorial(n - 2 * k))
        value = factorial(n + q) * c
        assert value.denominator == 1
        coeffs.append(int(value))
    return 0, coeffs


def order_divides_m(m, count):
    # Permutations whose m-th power is the identity, via the classical
    # recurrence a(n) = a(n-1) + falling_factorial(n-1, m-1) * a(n-m):
    # A001470 (m=3), A118934 (m=4), A052501 (m=5).
    a = [1] * m
    for n in range(m, count):
        ff = 1
        for i in range(m - 1):
            ff *= n - 1 - i
        a.append(a[n - 1] + ff * a[n - m])
    return 0, a[:count]


GENERATORS = {
    "b001006.txt": lambda: motzkin(TERMS),
    "b000217.txt": lambda: triangular(45),
    "b034827.txt": lambda: two_c_n_4(40),
    "b000910.txt": lambda: five_c_n_6(40),
    "b050534.txt": lambda: tritriangular(45),
    "b014531.txt": lambda: bessel_exp_scaled(2, TERMS),
    "b014532.txt": lambda: bessel_exp_scaled(3, TERMS),
    "b001470.txt": lambda: order_divides_m(3, TERMS),
    "b118934.txt": lambda: order_divides_m(4, TERMS),
    "b052501.txt": lambda: order_divides_m(5, TERMS),
}

SPOT_CHECKS = {
    "b001006.txt": (0, [1, 1, 2, 4, 9, 21, 51, 127, 323, 835]),
    "b000217.txt": (0, [0, 1, 3, 6, 10, 15, 21, 28]),
    "b034827.txt": (4, [2, 10, 30, 70, 140]),
    "b000910.txt": (6, [5, 35, 140, 420]),
    "b050534.txt": (0, [0, 0, 0, 3, 15, 45, 105, 210, 378]),
    "b014531.txt": (0, [1, 3, 10, 30, 90, 266, 784]),
    "b014532.txt": (0, [1, 4, 15, 50, 161, 504, 1554]),
    "b001470.txt": (0, [1, 1, 1, 3, 9, 21, 81, 351, 1233]),
    "b118934.txt": (0, [1, 1, 1, 1, 7, 31, 91, 211, 1681, 12097]),
    "b052501.txt": (0, [1, 1, 1, 1, 1, 25, 145, 505, 1345, 3025]),
}


def main():
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    for name, gen in GENERATORS.items():
        offset, terms = gen()
        want_offset, prefix = SPOT_CHECKS[name]
        assert offset == want_offset, name
        assert terms[: len(prefix)] == prefix, f"{name}: {terms[:len(prefix)]} != {prefix}"
        lines = [f"{offset + i} {t}" for i, t in enumerate(terms)]
        (OUT_DIR / name).write_text("\n".join(lines) + "\n")
        print(f"wrote {name}: offset {offset}, {len(terms)} terms")


if __name__ == "__main__":
    main()
