#!/usr/bin/env python3
"""Independent reference values for the test suite.

Everything here is recomputed from hand-entered Cartan matrices with plain
Python: root closure, Weyl group orders by brute-force group generation, and
abelian stable subsets by an exhaustive scan over all subsets of the grade-one
roots. The output (derived_values.json) is committed; the C++ tests only read it.
"""
import itertools
import json
import sys
from fractions import Fraction


def affine_cartans():
    # Kac numbering; a_ij = <alpha_i^vee, alpha_j>.
    return {
        "A1^(1)": [[2, -2], [-2, 2]],
        "A2^(1)": [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]],
        "A3^(1)": [[2, -1, 0, -1], [-1, 2, -1, 0], [0, -1, 2, -1], [-1, 0, -1, 2]],
        "B2^(1)": [[2, 0, -1], [0, 2, -1], [-2, -2, 2]],
        "B3^(1)": [[2, 0, -1, 0], [0, 2, -1, 0], [-1, -1, 2, -1], [0, 0, -2, 2]],
        "C3^(1)": [[2, -1, 0, 0], [-2, 2, -1, 0], [0, -1, 2, -2], [0, 0, -1, 2]],
        "G2^(1)": [[2, -1, 0], [-1, 2, -1], [0, -3, 2]],
        "A2^(2)": [[2, -4], [-1, 2]],
        "A3^(2)": [[2, 0, -2], [0, 2, -2], [-1, -1, 2]],
        "A4^(2)": [[2, -2, 0], [-1, 2, -2], [0, -1, 2]],
        "D4^(2)": [[2, -2, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -2, 2]],
    }


def null_vector(a):
    n = len(a)
    for labels in itertools.product(range(1, 5), repeat=n):
        if all(sum(a[i][j] * labels[j] for j in range(n)) == 0 for i in range(n)):
            return list(labels)
    raise ValueError("no labels")


def symmetrizer(a):
    n = len(a)
    d = [None] * n
    d[0] = Fraction(1)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if d[i] is not None and d[j] is None and a[i][j] != 0:
                    d[j] = d[i] * a[i][j] / a[j][i]
                    changed = True
    top = max(d)
    return [x * 2 / top for x in d]


class Affine:
    def __init__(self, cartan, window):
        self.a = cartan
        self.n = len(cartan)
        self.labels = null_vector(cartan)
        self.sq = symmetrizer(cartan)
        bound = window * self.labels[0]
        simple = [tuple(int(i == j) for j in range(self.n)) for i in range(self.n)]
        pos = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for r in frontier:
                for i in range(self.n):
                    c = self.pair(r, i)
                    if c < 0:
                        s = list(r)
                        s[i] -= c
                        s = tuple(s)
                        if s[0] <= bound and s not in pos:
                            pos.add(s)
                            nxt.append(s)
            frontier = nxt
        self.pos = pos
        self.bound = bound

    def pair(self, v, i):
        return sum(self.a[i][j] * v[j] for j in range(self.n))

    def is_root(self, v):
        if any(x != 0 for x in v):
            if all(x >= 0 for x in v) and tuple(v) in self.pos:
                return True
            if all(x <= 0 for x in v) and tuple(-x for x in v) in self.pos:
                return True
            m = v[0] // self.labels[0]
            if m != 0 and all(v[i] == m * self.labels[i] for i in range(self.n)):
                return True
        return False


def ht(s, v):
    return sum(a * b for a, b in zip(s, v))


def brute_force_family(aff, s):
    delta = tuple(aff.labels)
    grade0 = [r for r in aff.pos if ht(s, r) == 0]
    grade1 = sorted(r for r in aff.pos if ht(s, r) == 1)
    weights = list(grade1)
    if ht(s, delta) == 1:
        weights.append(delta)
    wset = set(weights)
    family = []
    for mask in range(1 << len(weights)):
        S = [weights[i] for i in range(len(weights)) if mask >> i & 1]
        Sset = set(S)
        ok = True
        for mu in S:
            for beta in grade0:
                low = tuple(x - y for x, y in zip(mu, beta))
                if low in wset and low not in Sset:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            for x, y in itertools.combinations(S, 2):
                if aff.is_root(tuple(p + q for p, q in zip(x, y))):
                    ok = False
                    break
        if ok:
            family.append(sorted(list(r) for r in S))
    family.sort(key=lambda f: (len(f), f))
    return grade1, family


def weyl_order(cartan):
    n = len(cartan)
    gens = []
    for i in range(n):
        m = [[int(r == c) for c in range(n)] for r in range(n)]
        for j in range(n):
            m[i][j] -= cartan[i][j]
        gens.append(tuple(map(tuple, m)))

    def mul(x, y):
        return tuple(tuple(sum(x[r][k] * y[k][c] for k in range(n)) for c in range(n)) for r in range(n))

    ident = tuple(tuple(int(r == c) for c in range(n)) for r in range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = mul(g, s)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return len(seen)


def finite_positive_count(cartan):
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    pos = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(n):
                c = sum(cartan[i][j] * r[j] for j in range(n))
                if c < 0:
                    s = list(r)
                    s[i] -= c
                    s = tuple(s)
                    if s not in pos:
                        pos.add(s)
                        nxt.append(s)
        frontier = nxt
    return len(pos)


FINITE = {
    "A2": [[2, -1], [-1, 2]],
    "B2": [[2, -1], [-2, 2]],
    "G2": [[2, -1], [-3, 2]],
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    "B3": [[2, -1, 0], [-1, 2, -1], [0, -2, 2]],
    "C3": [[2, -1, 0], [-1, 2, -2], [0, -1, 2]],
    "A4": [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 2]],
    "D4": [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]],
    "F4": [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]],
}

CASES = [
    ("A1^(1)", [1, 1]),
    ("A2^(1)", [1, 1, 0]),
    ("A3^(1)", [1, 1, 0, 0]),
    ("A3^(1)", [1, 0, 1, 0]),
    ("B2^(1)", [0, 0, 1]),
    ("B2^(1)", [1, 1, 0]),
    ("B3^(1)", [0, 0, 1, 0]),
    ("B3^(1)", [0, 0, 0, 1]),
    ("B3^(1)", [1, 1, 0, 0]),
    ("C3^(1)", [0, 1, 0, 0]),
    ("C3^(1)", [1, 0, 0, 1]),
    ("G2^(1)", [0, 1, 0]),
    ("A2^(2)", [0, 1]),
    ("A3^(2)", [1, 0, 0]),
    ("A3^(2)", [0, 0, 1]),
    ("A4^(2)", [0, 0, 1]),
    ("D4^(2)", [1, 0, 0, 0]),
    ("D4^(2)", [0, 1, 0, 0]),
]


def main(path):
    out = {"finite": {}, "affine": {}, "families": []}
    for name, cartan in FINITE.items():
        out["finite"][name] = {"positive_roots": finite_positive_count(cartan), "weyl_order": weyl_order(cartan)}
    cartans = affine_cartans()
    for name, cartan in cartans.items():
        twist = int(name[-2])
        aff = Affine(cartan, 3 * twist)
        out["affine"][name] = {
            "labels": aff.labels,
            "sq_lengths": [str(x) for x in aff.sq],
            "positive_real_in_window": len(aff.pos),
        }
    for name, s in CASES:
        twist = int(name[-2])
        aff = Affine(cartans[name], 3 * twist)
        grade1, family = brute_force_family(aff, s)
        out["families"].append({
            "affine_type": name,
            "s": s,
            "grade_one_real": len(grade1),
            "count": len(family),
            "family": family,
        })
    with open(path, "w") as f:
        json.dump(out, f, indent=1, sort_keys=True)
        f.write("\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "derived_values.json")
