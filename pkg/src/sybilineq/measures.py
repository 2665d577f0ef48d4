"""Inequality measure catalog.

Every measure is a pure function of a wealth distribution. Out-of-domain
inputs raise typed errors instead of returning silent values. Measure ids
follow the CLI grammar: ``gini``, ``ge:<c>``, ``theil-t``, ``theil-l``,
``cv``, ``hhi``, ``atkinson:<eps>``, ``const:<c>``, ``sum``, ``diag:first``,
``diag:max``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ._kernels import atkinson_kernel, cv_kernel, ge_kernel, gini_kernel, hhi_kernel
from .econ import WealthDistribution
from .errors import UnknownMeasureError, ZeroEntryError, ZeroTotalWealthError


def _require_positive_total(x: WealthDistribution) -> None:
    if x.total() <= 0.0:
        raise ZeroTotalWealthError("measure undefined for zero total wealth")


def _require_positive_entries(x: WealthDistribution, measure_id: str) -> None:
    zeros = np.flatnonzero(x.values <= 0.0)
    if zeros.size:
        raise ZeroEntryError(measure_id, int(zeros[0]))


def gini(x: WealthDistribution) -> float:
    """Gini coefficient: sum of pairwise absolute differences over 2k * total.

    Ranges over [0, 1 - 1/k]; zero exactly on egalitarian input.
    """
    _require_positive_total(x)
    return gini_kernel(x.values)


def ge(c: float, x: WealthDistribution) -> float:
    """Generalized entropy index with exponent ``c`` in canonical form.

    Branches: mean log deviation at c=0, Theil T at c=1 (with the limit
    convention 0*ln(0) = 0), and the power form otherwise. Entries must be
    strictly positive for c <= 0; zero total wealth is always an error.
    """
    if not math.isfinite(c):
        raise ValueError(f"GE exponent must be finite, got {c!r}")
    _require_positive_total(x)
    if c <= 0.0:
        _require_positive_entries(x, f"ge:{c:g}")
    if np.all(x.values == x.values[0]):
        return 0.0  # exact zero on egalitarian input, all branches
    return ge_kernel(x.values, float(c))


def theil_t(x: WealthDistribution) -> float:
    """Theil T index; identical code path to ge(1, x)."""
    return ge(1.0, x)


def theil_l(x: WealthDistribution) -> float:
    """Theil L (mean log deviation); identical code path to ge(0, x)."""
    return ge(0.0, x)


def cv(x: WealthDistribution) -> float:
    """Coefficient of variation: population standard deviation over mean."""
    _require_positive_total(x)
    return cv_kernel(x.values)


def hhi(x: WealthDistribution) -> float:
    """Herfindahl-Hirschman index: sum of squared wealth shares."""
    _require_positive_total(x)
    return hhi_kernel(x.values)


def atkinson(eps: float, x: WealthDistribution) -> float:
    """Atkinson index with inequality-aversion ``eps``; entries must be
    strictly positive."""
    if not math.isfinite(eps):
        raise ValueError(f"Atkinson aversion must be finite, got {eps!r}")
    _require_positive_total(x)
    _require_positive_entries(x, f"atkinson:{eps:g}")
    return atkinson_kernel(x.values, float(eps))


@dataclass(frozen=True)
class Measure:
    """Named pure function from a wealth distribution to a scalar.

    ``positive_only`` marks measures whose domain excludes zero entries, so
    samplers can stay inside it.
    """

    id: str
    fn: Callable[[WealthDistribution], float] = field(repr=False)
    params: tuple[float, ...] = ()
    positive_only: bool = False

    def __call__(self, x: WealthDistribution) -> float:
        return self.fn(x)


def gini_measure() -> Measure:
    return Measure("gini", gini)


def ge_measure(c: float) -> Measure:
    c = float(c)
    if not math.isfinite(c):
        raise ValueError(f"GE exponent must be finite, got {c!r}")
    return Measure(
        f"ge:{c:g}", lambda x: ge(c, x), params=(c,), positive_only=c <= 0.0
    )


def constant_measure(c: float) -> Measure:
    """Measure evaluating to ``c`` on every distribution."""
    c = float(c)
    if not math.isfinite(c):
        raise ValueError(f"constant must be finite, got {c!r}")
    return Measure(f"const:{c:g}", lambda x: c, params=(c,))


def sum_dependent_measure(
    g: Callable[[float], float] | None = None, g_id: str = "sum"
) -> Measure:
    """Measure evaluating to g(total wealth); ``g`` must be injective and
    monotone on [0, inf). The default identity g is the canonical
    sybil-proof non-constant measure."""
    if g is None:
        return Measure("sum", lambda x: x.total())
    return Measure(g_id, lambda x: float(g(x.total())))


def diagnostic(which: str) -> Measure:
    """Pathological measures for falsifier self-tests: the first element
    (asymmetric) or the maximum element."""
    if which in ("first", "first_element"):
        return Measure("diag:first", lambda x: x[0])
    if which in ("max", "max_element"):
        return Measure("diag:max", lambda x: float(x.values.max()))
    raise UnknownMeasureError(f"diag:{which}")


def _parse_param(token: str, text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise UnknownMeasureError(token) from None
    if not math.isfinite(value):
        raise UnknownMeasureError(token)
    return value


def parse_measure(token: str) -> Measure:
    """Build a measure from its id string."""
    token = token.strip()
    if token == "gini":
        return gini_measure()
    if token == "theil-t":
        return Measure("theil-t", theil_t)
    if token == "theil-l":
        return Measure("theil-l", theil_l, positive_only=True)
    if token == "cv":
        return Measure("cv", cv)
    if token == "hhi":
        return Measure("hhi", hhi)
    if token == "sum":
        return sum_dependent_measure()
    if token == "diag:first":
        return diagnostic("first")
    if token == "diag:max":
        return diagnostic("max")
    if token.startswith("ge:"):
        return ge_measure(_parse_param(token, token[3:]))
    if token.startswith("atkinson:"):
        eps = _parse_param(token, token[len("atkinson:") :])
        return Measure(
            f"atkinson:{eps:g}",
            lambda x: atkinson(eps, x),
            params=(eps,),
            positive_only=True,
        )
    if token.startswith("const:"):
        return constant_measure(_parse_param(token, token[len("const:") :]))
    raise UnknownMeasureError(token)


CATALOG_IDS = (
    "gini",
    "ge:-1",
    "ge:0",
    "ge:0.5",
    "ge:1",
    "ge:2",
    "cv",
    "hhi",
    "atkinson:0.5",
    "const:0",
    "const:3",
    "sum",
    "diag:first",
    "diag:max",
)


def catalog() -> list[Measure]:
    """The bundled measure catalog used by audits and meta-tests."""
    return [parse_measure(t) for t in CATALOG_IDS]
