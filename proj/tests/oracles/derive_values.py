# Copyright 2026 The qps Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent numpy/mpmath oracle for the reference values frozen into the
C++ unit tests.  Shares no code with the library: Weyl operators, key
unitaries and partial traces are built from explicit Kronecker products.

Run: python3 tests/oracles/derive_values.py
"""

import itertools
import math

import mpmath
import numpy as np


def chi(k, d):
    return np.exp(2j * np.pi * k / d)


def shift(d):
    m = np.zeros((d, d), complex)
    for k in range(d):
        m[(k + 1) % d, k] = 1
    return m


def clock(d):
    return np.diag([chi(k, d) for k in range(d)])


def weyl1(p, q, d):
    Z, X = clock(d), shift(d)
    m = np.linalg.matrix_power(Z, p) @ np.linalg.matrix_power(X, q)
    if d == 2:
        return (1j) ** (-p * q) * m
    half = (d + 1) // 2
    return chi(-half * p * q, d) * m


def weyl(p, q, d):
    m = np.array([[1.0 + 0j]])
    for pk, qk in zip(p, q):
        m = np.kron(m, weyl1(pk, qk, d))
    return m


def char_table(rho, d, n):
    out = {}
    for p in itertools.product(range(d), repeat=n):
        for q in itertools.product(range(d), repeat=n):
            mp = [(-x) % d for x in p]
            mq = [(-x) % d for x in q]
            out[(p, q)] = np.trace(rho @ weyl(mp, mq, d))
    return out


def ket(d, k):
    v = np.zeros(d, complex)
    v[k] = 1
    return v


def proj(v):
    v = v / np.linalg.norm(v)
    return np.outer(v, v.conj())


def key_unitary(G, d, n):
    g00, g01, g10, g11 = G
    det = (g00 * g11 - g01 * g10) % d
    N = pow(det, -1, d)
    D = d ** n
    U = np.zeros((D * D, D * D), complex)
    for i in itertools.product(range(d), repeat=n):
        for j in itertools.product(range(d), repeat=n):
            a = [(N * g11 * x - N * g10 * y) % d for x, y in zip(i, j)]
            b = [(-N * g01 * x + N * g00 * y) % d for x, y in zip(i, j)]
            src = int("".join(map(str, i)) or "0", d) * D + int("".join(map(str, j)) or "0", d)
            dst = int("".join(map(str, a)) or "0", d) * D + int("".join(map(str, b)) or "0", d)
            U[dst, src] = 1
    return U


def ptrace_second(m, D):
    return np.einsum("ajbj->ab", m.reshape(D, D, D, D))


def convolve(rho, sigma, G, d, n):
    U = key_unitary(G, d, n)
    return ptrace_second(U @ np.kron(rho, sigma) @ U.conj().T, d ** n)


def entropy2(rho):
    ev = np.linalg.eigvalsh(rho)
    ev = ev[ev > 1e-12]
    return float(-(ev * np.log2(ev)).sum())


def section(title):
    print()
    print("== " + title)


def main():
    section("phase space")
    p, q, p2, q2 = 2, 1, 1, 2
    print("symplectic((2,1),(1,2)) d=5 =", (p * q2 - q * p2) % 5)
    span = set()
    for t in range(3):
        span.add(((t * 1) % 3, 0, 0, (t * 1) % 3))
    print("span{(1,0,0,1)} d=3 size =", len(span))
    sols = [x for x in itertools.product(range(3), repeat=2)
            if (x[0] + x[1]) % 3 == 2 and x[1] % 3 == 1]
    print("solve [[1,1],[0,1]] x=[2,1] d=3 ->", sols)

    section("weyl")
    H = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
    coeffs = {(a, b): abs(np.trace(weyl([a], [b], 2).conj().T @ H) / 2)
              for a in range(2) for b in range(2)}
    print("Hadamard Weyl coefficient moduli:", coeffs)
    T = np.diag([1, np.exp(1j * np.pi / 4)])
    TXT = T @ shift(2) @ T.conj().T
    coeffs = {(a, b): abs(np.trace(weyl([a], [b], 2).conj().T @ TXT) / 2)
              for a in range(2) for b in range(2)}
    print("T X T^dag Weyl coefficient moduli:", coeffs)
    print("w(1,1) d=2 =\n", np.round(weyl([1], [1], 2), 12))

    section("states")
    rho0 = proj(ket(3, 0))
    tab = char_table(rho0, 3, 1)
    print("char |0><0| d=3:", {k: np.round(v, 12) for k, v in tab.items()})
    d = 3
    half = 2
    v = np.array([1, 1, chi(1, 9)]) / math.sqrt(3)
    magic = proj(v)
    P = np.zeros((3, 3), complex)
    for j in range(3):
        P[(-j) % 3, j] = 1
    wmin = None
    for a in range(3):
        for b in range(3):
            w = weyl([a], [b], 3)
            Tx = w @ P @ w.conj().T
            W = np.trace(magic @ Tx).real / 3
            wmin = W if wmin is None else min(wmin, W)
    print("magic state min Wigner entry =", repr(wmin))
    tstate = proj(np.array([1, np.exp(1j * np.pi / 4)]))
    ttab = char_table(tstate, 2, 1)
    print("T-state |Xi|:", {k: round(abs(v), 12) for k, v in ttab.items()})
    print("T-state Pauli rank =", sum(abs(v) > 1e-10 for v in ttab.values()))

    # MSPS enumeration by brute force over all subsets closed under addition.
    for d in (2, 3):
        pts = [(a, b) for a in range(d) for b in range(d)]
        groups = set()
        for r in range(0, 3):
            for gens in itertools.combinations(pts, r):
                S = {(0, 0)}
                changed = True
                while changed:
                    changed = False
                    for x in list(S):
                        for g in gens:
                            y = ((x[0] + g[0]) % d, (x[1] + g[1]) % d)
                            if y not in S:
                                S.add(y)
                                changed = True
                iso = all((x[0] * y[1] - x[1] * y[0]) % d == 0 for x in S for y in S)
                if iso:
                    groups.add(frozenset(S))
        count = sum(len(S) for S in groups)  # |characters| = |S| for n=1
        print(f"MSPS count d={d} n=1 =", count)

    section("mean_magic")
    one = proj(ket(3, 1))
    tab = char_table(one, 3, 1)
    print("Xi_|1><1|(1,0) =", np.round(tab[((1,), (0,))], 12),
          "chi(2)=", np.round(chi(2, 3), 12))
    for a in range(3):
        for b in range(3):
            w = weyl([a], [b], 3)
            out = w @ one @ w.conj().T
            t = char_table(out, 3, 1)
            if all(abs(t[((pp,), (0,))] - 1) < 1e-9 for pp in range(3)):
                print("zero-mean shift candidate label (p,q) =", (a, b))
    g = 1 - max(abs(v) for k, v in ttab.items() if abs(v) < 1 - 1e-8 and abs(v) > 1e-10)
    print("T-state magic gap =", repr(g))
    # closest MSPS for the T-state, alpha = 2: only I/2 has finite divergence.
    ev = np.linalg.eigvalsh(tstate)
    print("T-state eigenvalues:", ev, " D_2(T||I/2) = 1 - H_2 =",
          1 - (-math.log2((ev ** 2).sum())))
    # LMG of T|0><0|T^dag and T|+><+|T^dag
    for name, st in (("|0>", proj(ket(2, 0))), ("|+>", proj(np.array([1, 1])))):
        out = T @ st @ T.conj().T
        t = char_table(out, 2, 1)
        vals = [abs(v) for v in t.values() if 1e-10 < abs(v) < 1 - 1e-8]
        lmg = -math.log2(max(vals)) if vals else 0.0
        print(f"LMG(T {name}) =", lmg)

    section("entropy")
    print("H_2(diag(3/4,1/4)) =", repr(-math.log2(9 / 16 + 1 / 16)), "log2(8/5) =",
          repr(math.log2(8 / 5)))
    mpmath.mp.dps = 50
    for lam in ((0.5, 0.3, 0.2), (0.6, 0.4), (0.4, 0.3, 0.2, 0.1)):
        D = len(lam)
        lam = [mpmath.mpf(x) for x in lam]
        Q = mpmath.mpf(0)
        for i in range(D):
            den = mpmath.mpf(1)
            for j in range(D):
                if j != i:
                    den *= lam[i] - lam[j]
            Q -= lam[i] ** D * mpmath.log(lam[i], 2) / den
        print("subentropy", [float(x) for x in lam], "=", mpmath.nstr(Q, 17))
    # degenerate spectrum limit (1/3,1/3,1/3) via nearby distinct nodes
    eps = mpmath.mpf("1e-15")
    lam = [mpmath.mpf(1) / 3 - eps, mpmath.mpf(1) / 3, mpmath.mpf(1) / 3 + eps]
    Q = mpmath.mpf(0)
    for i in range(3):
        den = mpmath.mpf(1)
        for j in range(3):
            if j != i:
                den *= lam[i] - lam[j]
        Q -= lam[i] ** 3 * mpmath.log(lam[i], 2) / den
    print("subentropy (1/3,1/3,1/3) ~", mpmath.nstr(Q, 15))
    lam = [mpmath.mpf(1) / 2 - eps, mpmath.mpf(1) / 2 + eps, mpmath.mpf(0)]
    Q = mpmath.mpf(0)
    for i in range(2):
        den = mpmath.mpf(1)
        for j in range(3):
            if j != i:
                den *= lam[i] - lam[j]
        Q -= lam[i] ** 3 * mpmath.log(lam[i], 2) / den
    print("subentropy (1/2,1/2,0) ~", mpmath.nstr(Q, 15))

    section("convolution")
    for d in (7,):
        circle = {(s, t) for s in range(d) for t in range(d)
                  if (s * s + t * t) % d == 1 and s not in (0, 1, d - 1)}
        print("d=7 circle raw pairs:", sorted(circle))
        hyp = {(s, t) for s in range(d) for t in range(d)
               if (s * s - t * t) % d == 1 and s not in (0, 1, d - 1)}
        print("d=7 hyperbola raw pairs:", sorted(hyp))
    primes = [p for p in range(2, 98) if all(p % k for k in range(2, p))]
    for d in primes:
        circle = {(s, t) for s in range(d) for t in range(d)
                  if (s * s + t * t) % d == 1 and s not in (0, 1, d - 1) and t != 0}
        classes = set()
        for s, t in circle:
            cls = frozenset({(a % d, b % d) for a in (s, -s) for b in (t, -t)}
                            | {(b % d, a % d) for a in (s, -s) for b in (t, -t)})
            classes.add(cls)
        hyp = {(s, t) for s in range(d) for t in range(d)
               if (s * s - t * t) % d == 1 and s not in (0, 1, d - 1) and t != 0}
        hclasses = set()
        for s, t in hyp:
            hclasses.add(frozenset({(a % d, b % d) for a in (s, -s) for b in (t, -t)}))
        print(f"d={d}: circle classes {len(classes)} (formula {(d + 1) // 8}),"
              f" hyperbola classes {len(hclasses)} (formula {(d - 3) // 4})")
    d = 7
    r = convolve(proj(ket(7, 0)), proj(ket(7, 0)), (2, 2, 2, -2 % 7), 7, 1)
    print("|0>|0> beam splitter (2,2) d=7 output diag:", np.round(np.diag(r).real, 12))
    rng = np.random.default_rng(5)
    A = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    rho = A @ A.conj().T
    rho /= np.trace(rho)
    U = key_unitary((1, 1, 1, 2), 3, 1)
    inv = U.conj().T @ np.kron(rho, np.eye(3) / 3) @ U
    print("purity ratio E^-1 / rho =",
          np.trace(inv @ inv).real / np.trace(rho @ rho).real, " 1/d^n =", 1 / 3)
    print("CNOT_{2->1} key unitary for [1,0;1,1] d=2:\n",
          key_unitary((1, 0, 1, 1), 2, 1).real.astype(int))

    section("min output entropy d=3")
    stabs = []
    for slope in ("p", 0, 1, 2):
        pass
    pts = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    lines = set()
    for x in pts:
        lines.add(frozenset({((t * x[0]) % 3, (t * x[1]) % 3) for t in range(3)}))
    lines = sorted(lines, key=lambda s: sorted(s))
    states = []
    for L in lines:
        gen = sorted(x for x in L if x != (0, 0))[0]
        w = weyl([gen[0]], [gen[1]], 3)
        ev, vec = np.linalg.eig(w)
        for k in range(3):
            states.append((L, proj(vec[:, k])))
    positive = [(a, b, c, e) for a in (1, 2) for b in (1, 2) for c in (1, 2) for e in (1, 2)
                if (a * e - b * c) % 3 != 0]
    for G in positive:
        zero = 0
        gap = 1e9
        for (L1, r1) in states:
            for (L2, r2) in states:
                h = entropy2(convolve(r1, r2, G, 3, 1))
                if h < 1e-9:
                    zero += 1
                else:
                    gap = min(gap, h)
        print("G=", G, "zero-entropy pairs:", zero, "min positive entropy:", gap)

    section("channels")
    T = np.diag([1, np.exp(1j * np.pi / 4)])
    phi = (np.kron(ket(2, 0), ket(2, 0)) + np.kron(ket(2, 1), ket(2, 1))) / math.sqrt(2)
    J = np.kron(np.eye(2), T) @ np.outer(phi, phi.conj()) @ np.kron(np.eye(2), T).conj().T
    tab = char_table(J, 2, 2)
    vals = sorted({round(abs(v), 10) for v in tab.values()})
    print("T-channel Choi |Xi| values:", vals)
    g = 1 - max(abs(v) for v in tab.values() if 1e-10 < abs(v) < 1 - 1e-8)
    print("T-channel magic gap =", repr(g))
    unit = [k for k, v in tab.items() if abs(abs(v) - 1) < 1e-9]
    print("T-channel Choi unit-modulus labels:", unit)


if __name__ == "__main__":
    main()
