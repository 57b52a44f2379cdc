"""Smith normal form over Z with transformation matrices.

smith_normal_form(A) returns (D, U, V) with U*A*V = D, U and V unimodular and
D diagonal with d1 | d2 | ... .  Matrices are lists of lists of ints; sizes
here are tiny (at most 5x5), so the classical pivoting algorithm is fine.
"""

from __future__ import annotations


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _matmul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


def smith_normal_form(A):
    n = len(A)
    m = len(A[0])
    D = [row[:] for row in A]
    U = _identity(n)
    V = _identity(m)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):  # row_dst += c*row_src
        D[dst] = [a + c * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, c):
        for row in D:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    def negate_row(i):
        D[i] = [-a for a in D[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while t < min(n, m):
        # find smallest nonzero pivot in the remaining block
        piv = None
        for i in range(t, n):
            for j in range(t, m):
                if D[i][j] and (piv is None or abs(D[i][j]) < abs(D[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        if D[t][t] < 0:
            negate_row(t)
        dirty = False
        for i in range(t + 1, n):
            if D[i][t]:
                q = D[i][t] // D[t][t]
                add_row(t, i, -q)
                if D[i][t]:
                    dirty = True
        for j in range(t + 1, m):
            if D[t][j]:
                q = D[t][j] // D[t][t]
                add_col(t, j, -q)
                if D[t][j]:
                    dirty = True
        if dirty:
            continue
        # divisibility fix-up: pivot must divide the rest of the block
        bad = None
        for i in range(t + 1, n):
            for j in range(t + 1, m):
                if D[i][j] % D[t][t]:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            add_row(bad, t, 1)
            continue
        t += 1
    return D, U, V


def kernel_mod(A, mod):
    """All solutions x in (Z/mod)^m of A x = 0 mod `mod` (A is n x m).

    Enumerates via the Smith form: with U A V = D, the solutions are
    x = V y where d_i y_i = 0 mod `mod`.  Returns a list of tuples.
    """
    n = len(A)
    m = len(A[0])
    D, U, V = smith_normal_form(A)
    from math import gcd

    choices = []
    for i in range(m):
        d = D[i][i] if i < n else 0
        d = abs(d)
        if d == 0:
            choices.append(list(range(mod)))
        else:
            g = gcd(d, mod)
            step = mod // g
            choices.append([t * step for t in range(g)])
    out = []

    def rec(i, y):
        if i == m:
            x = tuple(sum(V[r][c] * y[c] for c in range(m)) % mod for r in range(m))
            out.append(x)
            return
        for v in choices[i]:
            rec(i + 1, y + [v])

    rec(0, [])
    return out
