import random


def random_unimodular(d: int, rnd: random.Random, steps: int = 12):
    """Product of random elementary integer matrices (determinant +-1)."""
    A = [[int(i == j) for j in range(d)] for i in range(d)]
    for _ in range(steps):
        i, j = rnd.sample(range(d), 2)
        k = rnd.choice((-2, -1, 1, 2))
        A[i] = [a + k * b for a, b in zip(A[i], A[j])]
        if rnd.random() < 0.3:
            A[i], A[j] = A[j], A[i]
        if rnd.random() < 0.2:
            A[i] = [-a for a in A[i]]
    return A


def apply(A, v):
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)
