import random
from fractions import Fraction
from itertools import permutations

import pytest


@pytest.fixture
def rng():
    return random.Random(20060214)


def random_monic(rng, degree, num=6, den=5):
    """Low-to-high coefficients of a random monic rational polynomial."""
    return [Fraction(rng.randint(-num, num), rng.randint(1, den)) for _ in range(degree)] + [
        Fraction(1)
    ]


def poly_from_roots(roots):
    """Low-to-high coefficients of prod (x - r)."""
    c = [Fraction(1)]
    for r in roots:
        nxt = [Fraction(0)] * (len(c) + 1)
        for k, a in enumerate(c):
            nxt[k + 1] += a
            nxt[k] -= r * a
        c = nxt
    return c


def _perm_sign(p):
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_det(rows):
    """Determinant by the permutation expansion; an oracle for small matrices."""
    n = len(rows)
    total = 0
    for p in permutations(range(n)):
        term = _perm_sign(p)
        for i in range(n):
            term = term * rows[i][p[i]]
            if term == 0:
                break
        total += term
    return total


def cofactor_det(rows):
    """Laplace expansion along the first row."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total
