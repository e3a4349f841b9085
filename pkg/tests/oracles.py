"""Independent oracles that share no code with the package under test.

* ``FuchsianSurface``: a faithful discrete representation of the genus-2
  surface group in PSL(2, R), built by doubling a one-holed torus across the
  axis of its boundary commutator. Group equality becomes "the matrix moves
  i by (numerically) nothing".
* ``tree_*``: brute-force helpers for the free group, written from scratch.
"""

from __future__ import annotations

import itertools
from collections import deque

import mpmath
from mpmath import mp

mp.dps = 60


def _letters(rank):
    return [x for i in range(1, rank + 1) for x in (i, -i)]


def tree_reduce(w):
    out = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def tree_words(rank, n):
    """All freely reduced words of length exactly n, lexicographic in a list."""
    if n == 0:
        return [()]
    return [w for w in itertools.product(_letters(rank), repeat=n) if tree_reduce(w) == w]


def tree_dist(x, y):
    return len(tree_reduce(tuple(-a for a in reversed(x)) + tuple(y)))


def brute_delta(points, dist):
    """Plain four-loop four-point defect, returned doubled (an integer)."""
    n = len(points)
    D = [[dist(points[i], points[j]) for j in range(n)] for i in range(n)]
    best = 0
    for t in range(n):
        for x in range(n):
            for y in range(n):
                gxy = D[x][t] + D[y][t] - D[x][y]
                for z in range(n):
                    gyz = D[y][t] + D[z][t] - D[y][z]
                    gxz = D[x][t] + D[z][t] - D[x][z]
                    best = max(best, min(gxy, gyz) - gxz)
    return best


class FuchsianSurface:
    """Generators a, b, c, d of <a,b,c,d | [a,b][c,d]> as 2x2 real matrices."""

    def __init__(self, trace=mpmath.mpf("3.5")):
        lam = (trace + mpmath.sqrt(trace**2 - 4)) / 2
        A = mpmath.matrix([[lam, 0], [0, 1 / lam]])
        p = trace / (lam + 1)
        s = trace - p
        B = mpmath.matrix([[p, 1], [p * s - 1, s]])
        K = A * B * mpmath.inverse(A) * mpmath.inverse(B)
        # fixed points of K on the real line
        a, b, c, d = K[0, 0], K[0, 1], K[1, 0], K[1, 1]
        disc = mpmath.sqrt((a - d) ** 2 + 4 * b * c)
        f1, f2 = (a - d + disc) / (2 * c), (a - d - disc) / (2 * c)
        M = mpmath.matrix([[f2, f1], [1, 1]])
        R = M * mpmath.matrix([[-1, 0], [0, 1]]) * mpmath.inverse(M)
        Ri = mpmath.inverse(R)
        C = R * B * Ri
        D = R * A * Ri
        self.gens = {1: A, 2: B, 3: C, 4: D}
        for k in list(self.gens):
            self.gens[-k] = mpmath.inverse(self.gens[k])
        self.boundary_trace = a + d

    def matrix(self, w):
        m = mpmath.eye(2)
        for x in w:
            m = m * self.gens[x]
        return m

    @staticmethod
    def moves_i(m):
        """Hyperbolic distance from i to m.i."""
        z = (m[0, 0] * 1j + m[0, 1]) / (m[1, 0] * 1j + m[1, 1])
        return mpmath.acosh(1 + abs(z - 1j) ** 2 / (2 * z.imag))

    def is_identity(self, w, tol=mpmath.mpf("1e-30")):
        return self.moves_i(self.matrix(w)) < tol

    @staticmethod
    def key(m):
        z = (m[0, 0] * 1j + m[0, 1]) / (m[1, 0] * 1j + m[1, 1])
        # quantise rather than print: a zero real part may come out as +-1e-60
        q = mpmath.mpf(10) ** 25
        return (int(mpmath.nint(z.real * q)), int(mpmath.nint(z.imag * q)))

    def ball(self, radius):
        """BFS over matrices; returns (sphere sizes, key -> shortlex-first word)."""
        start = mpmath.eye(2)
        seen = {self.key(start): ()}
        frontier = deque([((), start)])
        sizes = [1]
        for _ in range(radius):
            nxt = deque()
            for w, m in frontier:
                for x in sorted(self.gens, key=lambda y: (abs(y), y < 0)):
                    if w and w[-1] == -x:
                        continue
                    m2 = m * self.gens[x]
                    k = self.key(m2)
                    if k not in seen:
                        seen[k] = w + (x,)
                        nxt.append((w + (x,), m2))
            sizes.append(len(nxt))
            frontier = nxt
        return sizes, seen
