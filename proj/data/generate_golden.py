#!/usr/bin/env python3
"""Expands the three closed-form census tables into data/golden_tables.csv.

Parametric rows are instantiated for every base rank up to MAX_RANK. Type
strings are written the way the table states them (for example D2xB1); the
C++ loader normalizes low-rank coincidences. Node indices use Kac's numbering.
"""
from math import comb
import csv
import sys

MAX_RANK = 10


def aff(base, k):
    return f"{base}^({k})"


def prod(*factors):
    return "x".join(f for f in factors if not f.endswith("0")) or "0"


def k1_rows():
    for n in range(2, MAX_RANK + 1):
        for p in range(2, n):
            yield aff(f"B{n}", 1), 1, f"p={p}", f"B{n}", prod(f"D{p}", f"B{n - p}"), 4 * comb(n, p) - 1
        yield aff(f"B{n}", 1), 1, f"p={n}", f"B{n}", f"D{n}", 2
    for n in range(2, MAX_RANK + 1):
        for p in range(1, n):
            yield aff(f"C{n}", 1), 1, f"p={p}", f"C{n}", prod(f"C{p}", f"C{n - p}"), comb(n, p)
    for n in range(4, MAX_RANK + 1):
        for p in range(2, n - 1):
            yield aff(f"D{n}", 1), 1, f"p={p}", f"D{n}", prod(f"D{p}", f"D{n - p}"), 4 * comb(n, p) - 1
    yield "G2^(1)", 1, "p=1", "G2", "A1xA1", 5
    yield "F4^(1)", 1, "p=1", "F4", "A1xC3", 23
    yield "F4^(1)", 1, "p=4", "F4", "B4", 3
    for p in (2, 4, 6):
        yield "E6^(1)", 1, f"p={p}", "E6", "A1xA5", 71
    for p in (1, 5):
        yield "E7^(1)", 1, f"p={p}", "E7", "A1xD6", 125
    yield "E7^(1)", 1, "p=7", "E7", "A7", 143
    yield "E8^(1)", 1, "p=1", "E8", "A1xE7", 239
    yield "E8^(1)", 1, "p=7", "E8", "D8", 269


def k2_rows():
    for n in range(1, MAX_RANK // 2 + 1):
        yield aff(f"A{2 * n}", 2), 2, f"p={n}", f"C{n}", f"B{n}", 2 ** (n + 1) - 1
    for n in range(2, (MAX_RANK + 1) // 2 + 1):
        for p in (0, 1):
            yield aff(f"A{2 * n - 1}", 2), 2, f"p={p}", f"C{n}", f"C{n}", 2 ** (n - 1)
        yield aff(f"A{2 * n - 1}", 2), 2, f"p={n}", f"C{n}", f"D{n}", 2 ** (n + 1) - 1
    for n in range(3, MAX_RANK):
        for p in range(1, n):
            yield aff(f"D{n + 1}", 2), 2, f"p={p}", f"B{n}", prod(f"B{p}", f"B{n - p}"), 4 * comb(n, p) - 1
        for p in (0, n):
            yield aff(f"D{n + 1}", 2), 2, f"p={p}", f"B{n}", f"B{n}", 2
    yield "E6^(2)", 2, "p=0", "F4", "F4", 4
    # The fixed-point algebra of EI is sp(8), so g0 is C4.
    yield "E6^(2)", 2, "p=4", "F4", "C4", 23


def hermitian_rows():
    for n in range(1, MAX_RANK + 1):
        for q in range(1, n + 1):
            yield aff(f"A{n}", 1), 1, f"q={q}", f"A{n}", prod(f"A{q - 1}", f"A{n - q}"), comb(n + 1, q) + q * comb(n, q)
    for n in range(2, MAX_RANK + 1):
        yield aff(f"B{n}", 1), 1, "q=1", f"B{n}", f"B{n - 1}", 4 * n
    for n in range(2, MAX_RANK + 1):
        yield aff(f"C{n}", 1), 1, f"q={n}", f"C{n}", f"A{n - 1}", 2 ** (n - 1) * (n + 2)
    for n in range(4, MAX_RANK + 1):
        yield aff(f"D{n}", 1), 1, "q=1", f"D{n}", f"D{n - 1}", 4 * n
        for q in (n - 1, n):
            yield aff(f"D{n}", 1), 1, f"q={q}", f"D{n}", f"A{n - 1}", 2 ** (n - 3) * (n + 4)
    # Bourbaki nodes 1, 6 of E6 and 7 of E7 are Kac nodes 1, 5 and 6.
    for q in (1, 5):
        yield "E6^(1)", 1, f"q={q}", "E6", "D5", 63
    yield "E7^(1)", 1, "q=6", "E7", "E6", 140


def main(path):
    with open(path, "w", newline="") as out:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["affine_type", "k", "p_or_q", "delta_f_type", "g0_type", "count"])
        for rows in (k1_rows(), k2_rows(), hermitian_rows()):
            for row in rows:
                w.writerow(row)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "golden_tables.csv")
