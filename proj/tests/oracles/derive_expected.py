"""Independent oracle for frozen expected values in the C++ tests.

Uses sympy directly (no code shared with the library): brute-force path
enumeration, plain determinants, and polynomial expansion.
Run: python3 tests/oracles/derive_expected.py
"""
import itertools
from math import comb

import sympy as sp

x = sp.Symbol("x")
c = sp.symbols("c0:12")
lam = [None] + list(sp.symbols("l1:12"))


def paths(r, s, n):
    out = []
    for steps in itertools.product((1, 0, -1), repeat=n):
        h, ok = r, True
        for st in steps:
            h += st
            if h < 0:
                ok = False
                break
        if ok and h == s:
            out.append(steps)
    return out


def weight(steps, start=0, cfun=lambda i: c[i], lfun=lambda i: lam[i]):
    w, h = sp.Integer(1), start
    for st in steps:
        if st == 1:
            w *= lfun(h + 1)
        elif st == 0:
            w *= cfun(h)
        h += st
    return w


def mu_paths(n, **kw):
    return sp.expand(sum((weight(p, **kw) for p in paths(0, 0, n)), sp.Integer(0)))


print("motzkin counts", [len(paths(0, 0, n)) for n in range(7)])
print("mu2", mu_paths(2))
print("mu4", mu_paths(4))
print("mu6|c=0", mu_paths(6, cfun=lambda i: 0))
print("h31|c=0", sp.expand(sum(weight(p, cfun=lambda i: 0) for p in paths(0, 1, 3))))

# Fibonacci polynomials by recursion
P = [sp.Integer(1), x]
for n in range(1, 12):
    P.append(sp.expand(x * P[n] + P[n - 1]))
print("P3", P[3], "P5", P[5])

nu = [sp.Integer(0)] * 24
for m in range(12):
    nu[2 * m] = sp.Integer((-1) ** m * comb(2 * m, m)) / (m + 1)


def sp_scalar(A, B, mom):
    A, B = sp.Poly(A, x), sp.Poly(B, x)
    tot = 0
    for (i,), a in A.terms():
        for (j,), b in B.terms():
            tot += a * b * mom[i + j]
    return sp.simplify(tot)


for target in (7, 8, 2):
    coeffs = [sp_scalar(x**target, P[k], nu) / sp_scalar(P[k], P[k], nu) for k in range(target + 1)]
    print(f"x^{target} in P basis", coeffs)

print("fib d_n", [sp.Matrix(n + 1, n + 1, lambda i, j: nu[i + j]).det() for n in range(7)])
print("fib chi_n", [sp.Matrix(n + 1, n + 1, lambda i, j: nu[i + j + (1 if i == n else 0)]).det() for n in range(6)])
A2 = sp.Matrix(3, 3, lambda i, j: nu[i + j])
print("fib A2 eigen", A2.eigenvals())

# gf 1/(1 - x t - t^2)
t = sp.Symbol("t")
ser = sp.series(1 / (1 - x * t - t**2), t, 0, 6).removeO()
print("gf t^2", sp.expand(ser.coeff(t, 2)), "gf t^5", sp.expand(ser.coeff(t, 5)))

# symbolic Q2 by recursion, and convergents
Q = [sp.Integer(1), x - c[0]]
for n in range(1, 5):
    Q.append(sp.expand((x - c[n]) * Q[n] - lam[n] * Q[n - 1]))
print("Q2", Q[2])
J1 = 1 / (1 - c[0] * x - lam[1] * x**2 / (1 - c[1] * x))
print("J1", sp.factor(sp.simplify(J1)))
print("d1 sym", sp.expand(mu_paths(0) * mu_paths(2) - mu_paths(1) ** 2))
