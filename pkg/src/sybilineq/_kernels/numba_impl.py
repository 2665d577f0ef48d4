"""Numba-jitted measure kernels, loop-for-loop twins of the numpy backend.

Importing this module requires numba; the package falls back to the numpy
backend when it is missing (see `sybilineq._kernels`).
"""

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True)
def gini_kernel(x):
    k = x.shape[0]
    total = 0.0
    for i in range(k):
        total += x[i]
    acc = 0.0
    for i in range(k):
        for j in range(k):
            d = x[i] - x[j]
            acc += d if d >= 0.0 else -d
    return acc / (2.0 * k * total)


@njit(cache=True)
def ge_kernel(x, c):
    k = x.shape[0]
    total = 0.0
    for i in range(k):
        total += x[i]
    mu = total / k
    if c == 0.0:
        s = 0.0
        for i in range(k):
            s += np.log(mu / x[i])
        return s / k
    if c == 1.0:
        s = 0.0
        for i in range(k):
            r = x[i] / mu
            if r > 0.0:
                s += r * np.log(r)
        return s / k
    s = 0.0
    for i in range(k):
        s += (x[i] / mu) ** c
    return (s / k - 1.0) / (c * (c - 1.0))


@njit(cache=True)
def cv_kernel(x):
    k = x.shape[0]
    mu = 0.0
    for i in range(k):
        mu += x[i]
    mu /= k
    var = 0.0
    for i in range(k):
        d = x[i] - mu
        var += d * d
    return np.sqrt(var / k) / mu


@njit(cache=True)
def hhi_kernel(x):
    k = x.shape[0]
    s = 0.0
    for i in range(k):
        s += x[i]
    acc = 0.0
    for i in range(k):
        share = x[i] / s
        acc += share * share
    return acc


@njit(cache=True)
def atkinson_kernel(x, eps):
    k = x.shape[0]
    mu = 0.0
    for i in range(k):
        mu += x[i]
    mu /= k
    if eps == 1.0:
        s = 0.0
        for i in range(k):
            s += np.log(x[i])
        return 1.0 - np.exp(s / k) / mu
    p = 1.0 - eps
    s = 0.0
    for i in range(k):
        s += x[i] ** p
    return 1.0 - (s / k) ** (1.0 / p) / mu
