#!/usr/bin/env python3
"""Independent check of the S4 transposition-braiding numbers.

Braiding on the 6 transpositions of S4 with the order-flip sign twist:
  Psi(x_r (x) x_s) = sign * x_{rsr} (x) x_r,  sign = -1 iff r flips s's pair.
Computes dim ker(id+Psi), which ordered pairs give commutator relations,
and rank [n]!_Psi for n = 2, 3 over Q (exact fractions).
"""
from fractions import Fraction
from itertools import permutations


def compose(p, q):  # (p*q)(i) = p(q(i))
    return tuple(p[q[i]] for i in range(len(q)))


def inverse(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def mat_rank(M):
    M = [row[:] for row in M]
    rows, cols = len(M), len(M[0]) if M else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = Fraction(1, 1) / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
        if r == rows:
            break
    return r


n = 4
trans = []  # (perm, (a, b)) with a < b
for a in range(n):
    for b in range(a + 1, n):
        p = list(range(n))
        p[a], p[b] = b, a
        trans.append((tuple(p), (a, b)))
d = len(trans)
pos = {p: i for i, (p, _) in enumerate(trans)}

# Psi as a d^2 x d^2 matrix acting on x_r (x) x_s (index r*d+s)
Psi = [[Fraction(0) for _ in range(d * d)] for _ in range(d * d)]
for r, (pr, _) in enumerate(trans):
    for s, (ps, (a, b)) in enumerate(trans):
        tgt = pos[compose(compose(pr, ps), inverse(pr))]
        sign = -1 if pr[a] > pr[b] else 1
        Psi[tgt * d + r][r * d + s] = Fraction(sign)

I = [[Fraction(1 if i == j else 0) for j in range(d * d)] for i in range(d * d)]
two = [[I[i][j] + Psi[i][j] for j in range(d * d)] for i in range(d * d)]
rank2 = mat_rank(two)
print("dim ker(id+Psi) =", d * d - rank2, " rank [2]! =", rank2)

# which ordered pairs (r, s), r != s, have x_r x_s - x_s x_r in ker(id+Psi)?
# equivalent: (id+Psi)(e_{rs} - e_{sr}) = 0
comm_pairs = []
for r in range(d):
    for s in range(r + 1, d):
        v = [Fraction(0)] * (d * d)
        v[r * d + s] = Fraction(1)
        v[s * d + r] = Fraction(-1)
        img = [sum(two[i][j] * v[j] for j in range(d * d)) for i in range(d * d)]
        if all(x == 0 for x in img):
            comm_pairs.append((trans[r][1], trans[s][1]))
print("commutator pairs:", comm_pairs, " count =", len(comm_pairs))


def mat_mul(A, B):
    bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in A]


def kron_id_left(A, m):  # (I_m (x) A)
    sa = len(A)
    out = [[Fraction(0)] * (m * sa) for _ in range(m * sa)]
    for blk in range(m):
        for i in range(sa):
            for j in range(sa):
                out[blk * sa + i][blk * sa + j] = A[i][j]
    return out


def kron_id_right(A, m):  # (A (x) I_m)
    sa = len(A)
    out = [[Fraction(0)] * (m * sa) for _ in range(m * sa)]
    for i in range(sa):
        for j in range(sa):
            if A[i][j] != 0:
                for t in range(m):
                    out[i * m + t][j * m + t] = A[i][j]
    return out


# [3] = id + Psi_2 + Psi_2 Psi_1 on V^(x)3 (Psi_k acts on legs k, k+1; leg 1
# is the leftmost).  Matches the library convention [n] = id + Psi_{n-1} +
# Psi_{n-1} Psi_{n-2} + ... ; for n = 3: id + Psi_2 + Psi_2 Psi_1.
P1 = kron_id_right(Psi, d)  # legs 1,2
P2 = kron_id_left(Psi, d)   # legs 2,3
dim3 = d ** 3
I3 = [[Fraction(1 if i == j else 0) for j in range(dim3)] for i in range(dim3)]
P2P1 = mat_mul(P2, P1)
three = [[I3[i][j] + P2[i][j] + P2P1[i][j] for j in range(dim3)] for i in range(dim3)]
# [3]! = ([2] (x) I) . [3] with [2] on legs 1,2... library: A = (A (x) I) [m]
fact2 = kron_id_right(two, d)
fact3 = mat_mul(fact2, three)
print("rank [3]! =", mat_rank(fact3))
