#!/usr/bin/env python3
"""Brute-force oracles for the frozen expected values in the C++ tests.

Everything here enumerates h-tuples / subsets directly and shares no code
with the library. Run: python3 tests/oracles/compute_oracles.py
"""
import itertools
import math
from fractions import Fraction


def hfold(A, h, mods=None):
    out = set()
    for t in itertools.product(A, repeat=h):
        s = tuple(sum(c) for c in zip(*t))
        if mods:
            s = tuple(v % n if n else v for v, n in zip(s, mods))
        out.add(s)
    return out


def pts1(xs):
    return [(x,) for x in xs]


def ruzsa(m, K):
    t = K * m ** 3
    L = math.isqrt(int(t))
    while L * L < t:
        L += 1
    A = {(x, y, z) for x in range(m) for y in range(m) for z in range(m)}
    for x in range(L):
        A |= {(x, 0, 0), (0, x, 0), (0, 0, x)}
    return sorted(A), L


def lexmin_multisets(A, h):
    A = sorted(A)
    best = {}
    for t in itertools.combinations_with_replacement(range(len(A)), h):
        s = sum(A[i] for i in t)
        if s not in best:
            best[s] = t
    return sorted(best.values())


def section(title):
    print(f"\n== {title}")


section("ruzsa m=2 K=8")
A, L = ruzsa(2, 8)
print("L", L, "|A|", len(A), "|2A|", len(hfold(A, 2)), "|3A|", len(hfold(A, 3)))

section("ruzsa m=3 K=9 (sweep)")
A, L = ruzsa(3, 9)
s2, s3 = len(hfold(A, 2)), len(hfold(A, 3))
print("L", L, "|A|", len(A), "|2A|", s2, "|3A|", s3, "rho2", s3 / s2 ** 1.5)

section("lexmin {0,1,2} h=2")
print(lexmin_multisets([0, 1, 2], 2))

section("shadow sizes")
for A, mods in (([0, 1, 2], None), ([1, 3, 9], None), ([0, 1, 2, 3, 4], [5])):
    if mods:
        # Z/5: lexmin over residues
        best = {}
        for t in itertools.combinations_with_replacement(range(5), 3):
            s = sum(t) % 5
            best.setdefault(s, t)
        S = set(best.values())
        sh = {tuple(sorted(t[:i] + t[i + 1:])) for t in S for i in range(3)}
        print("Z/5", len(sh))
    else:
        S = lexmin_multisets(A, 3)
        sh = {tuple(sorted(t[:i] + t[i + 1:])) for t in S for i in range(3)}
        print(A, len(sh), "C", len(lexmin_multisets(A, 2)))

section("invert_binom(7,2)")
print((-1 + math.sqrt(57)) / 2)

section("bounds {0..9}")
A = pts1(range(10))
s2, s3 = len(hfold(A, 2)), len(hfold(A, 3))
x = (-1 + math.sqrt(1 + 8 * s2)) / 2
print(s2, s3, x, (x + 2) * (x + 1) * x / 6)

section("plunnecke {0,1,3,7} h=2 delta=0.5")
A = [0, 1, 3, 7]
twoA = {a + b for a in A for b in A}
K = Fraction(len(twoA), len(A))
cands = []
for r in range(2, 5):
    for X in itertools.combinations(A, r):
        cost = len({x + s for x in X for s in twoA})
        cands.append((cost, -len(X), X))
cands.sort()
print("admissible", len(cands), "best", cands[0], "K", K, "bound", float(K * K / Fraction(1, 2) * 4))

section("stability {1,3,9,27,81,2}")
A = sorted([1, 3, 9, 27, 81, 2])
s2 = len(hfold(pts1(A), 2))
s3 = len(hfold(pts1(A), 3))
x = (-1 + math.sqrt(1 + 8 * s2)) / 2
bx = (x + 2) * (x + 1) * x / 6
delta = 1 - s3 / bx
lo = (1 - 6 * math.sqrt(delta)) * x
hi = (1 + 9 * math.sqrt(delta)) * (x + 1)
best = None
for r in range(1, len(A) + 1):
    if not (lo - 1e-9 <= r <= hi + 1e-9):
        continue
    for Y in itertools.combinations(A, r):
        t = len({a + b + c for a in Y for b in Y for c in Y})
        key = (Fraction(t, math.comb(r + 2, 3)), r, tuple(-v for v in Y))
        if best is None or key > best[0]:
            best = (key, Y, t)
print("|2A|", s2, "|3A|", s3, "x", x, "delta", delta, "window", lo, hi)
print("bestY", best[1], "|3Y|", best[2], "ratio", best[0][0])

section("triangle {1,3,9}")
print("S' size: triples of distinct lexmin", [t for t in lexmin_multisets([1, 3, 9], 3) if len(set(t)) == 3])

section("gap k=2")
def gapP(k, d):
    return sorted({sum(dig * (3 * k) ** i for i, dig in enumerate(ds)) for ds in itertools.product(range(k), repeat=d)})
for k, d in ((2, 2), (2, 1), (3, 1)):
    P = pts1(gapP(k, d))
    print(k, d, len(P), len(hfold(P, 2)), len(hfold(P, 3)))
P = gapP(2, 1)
X = [(a, b, c) for a in P for b in P for c in P]
print("X", len(X), "|X+X|", len(hfold(X, 2)))

section("higher h=3 m=2 alpha=4")
n = 4
G = [4] * 4
X = {tuple(2 * v for v in t) for t in itertools.product(range(2), repeat=4)}
Y = set()
for i in range(4):
    for v in range(n):
        e = [0] * 4
        e[i] = v
        Y.add(tuple(e))
A = sorted(X | Y)
print("|A|", len(A), "|4A|", len(hfold(A, 4, G)))
