"""Shared test oracles, deliberately independent of the library internals."""

import cmath
import math


def naive_q_entry(centers, radii, i, j):
    """Direct product-loop evaluation of Q_ij, written from the definition."""
    prod = 1 + 0j
    for k in range(len(centers)):
        prod *= (centers[i] - centers[k]) * (centers[j] - centers[k]).conjugate() - radii[k] ** 2
    return -prod


def naive_q_matrix(centers, radii):
    n = len(centers)
    return [[naive_q_entry(centers, radii, i, j) for j in range(n)] for i in range(n)]


def roots_of_unity(n):
    return [cmath.exp(2j * math.pi * k / n) for k in range(n)]
