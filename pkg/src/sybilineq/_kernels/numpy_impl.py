"""Pure-numpy measure kernels.

Inputs are validated float64 arrays; domain checks (positivity, nonzero
total) happen in the measure layer before these are called.
"""

import numpy as np

NAME = "numpy"


def gini_kernel(x: np.ndarray) -> float:
    k = x.shape[0]
    num = np.abs(x[:, None] - x[None, :]).sum()
    return float(num / (2.0 * k * x.sum()))


def ge_kernel(x: np.ndarray, c: float) -> float:
    k = x.shape[0]
    mu = x.sum() / k
    if c == 0.0:
        return float(np.log(mu / x).sum() / k)
    if c == 1.0:
        r = x / mu
        pos = r > 0.0
        return float((r[pos] * np.log(r[pos])).sum() / k)
    return float((((x / mu) ** c).sum() / k - 1.0) / (c * (c - 1.0)))


def cv_kernel(x: np.ndarray) -> float:
    mu = x.mean()
    return float(np.sqrt(((x - mu) ** 2).mean()) / mu)


def hhi_kernel(x: np.ndarray) -> float:
    s = x.sum()
    return float(((x / s) ** 2).sum())


def atkinson_kernel(x: np.ndarray, eps: float) -> float:
    mu = x.mean()
    if eps == 1.0:
        return 1.0 - float(np.exp(np.log(x).mean()) / mu)
    p = 1.0 - eps
    return 1.0 - float((x**p).mean() ** (1.0 / p) / mu)
