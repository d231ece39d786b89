"""Closed-form extremal and probabilistic bounds, each evaluated as a
:class:`BoundReport`. ``log`` is the natural logarithm throughout."""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Optional

import mpmath

# working precision for the exact binomial tail (decimal digits)
TAIL_DPS = 60


@dataclass(frozen=True)
class BoundReport:
    name: str
    inputs: dict = field(default_factory=dict)
    value: float = 0.0
    satisfied: Optional[bool] = None
    detail: dict = field(default_factory=dict)

    def row(self) -> list[str]:
        args = " ".join(f"{k}={v}" for k, v in self.inputs.items())
        sat = "" if self.satisfied is None else str(self.satisfied).lower()
        return [self.name, args, f"{self.value:.6g}", sat]


def erdos_gallai_bound(t: int, n: int) -> float:
    """Edge bound ``(t - 2) n / 2`` for n-vertex graphs with no path on t vertices."""
    if t < 2 or n < 0:
        raise ValueError("need t >= 2 and n >= 0")
    return (t - 2) * n / 2


def kst_bound(a: int, b: int, s: int, t: int) -> float:
    """Kovari-Sos-Turan upper bound on the Zarankiewicz number z(a, b, s, t)."""
    if not (a >= s >= 2 and b >= t >= 2):
        raise ValueError("need a >= s >= 2 and b >= t >= 2")
    return (t - 1) ** (1 / s) * (a - s + 1) * b ** (1 - 1 / s) + (s - 1) * b


def partial_exp_log_gap(x: float, n: int) -> float:
    """``x - x^(n+1) / (e (n+1)!) - log(sum_{i<=n} x^i / i!)``; non-negative on
    ``0 <= x <= 1``."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x={x} outside [0, 1]")
    if n < 1:
        raise ValueError("n must be at least 1")
    term, tail = 1.0, 0.0
    for i in range(1, n + 1):
        term *= x / i
        tail += term
    lhs = math.log1p(tail)
    rhs = x - x ** (n + 1) / (math.e * math.factorial(n + 1))
    return rhs - lhs


def binomial_cdf(t: int, p: float, beta: int) -> mpmath.mpf:
    """``P[Bin(t, p) <= beta]`` summed term by term at ``TAIL_DPS`` digits."""
    with mpmath.workdps(TAIL_DPS):
        p_ = mpmath.mpf(p)
        q_ = 1 - p_
        total = mpmath.mpf(0)
        for i in range(0, min(beta, t) + 1):
            total += mpmath.binomial(t, i) * p_ ** i * q_ ** (t - i)
        return +total


def tail_preconditions(t: int, p: float, beta: int, d: float) -> list[str]:
    """Reasons the tail estimate does not apply; empty when it does.

    Besides ``1/d < tp < 1`` this requires the slack the estimate absorbs:
    ``beta p <= (tp)^(beta+1) (1/e - 1/4) / (beta+1)!``.
    """
    problems = []
    tp = t * p
    if not 0 < p < 1:
        problems.append(f"p={p} not in (0, 1)")
    if beta < 1 or t <= beta:
        problems.append("need 1 <= beta < t")
    if not 1 / d < tp:
        problems.append(f"tp={tp:.6g} not above 1/d={1 / d:.6g}")
    if not tp < 1:
        problems.append(f"tp={tp:.6g} not below 1")
    slack = tp ** (beta + 1) * (1 / math.e - 0.25) / math.factorial(beta + 1)
    if beta * p > slack:
        problems.append(f"beta*p={beta * p:.6g} exceeds slack {slack:.6g}")
    return problems


def binomial_tail_bound_check(t: int, p: float, beta: int, d: float,
                              enforce_preconditions: bool = True) -> BoundReport:
    """Compare the exact ``P[Bin(t, p) <= beta]`` with
    ``exp(-(tp)^(beta+1) / (4 (beta+1)!))``.

    ``detail`` also carries the intermediate estimate
    ``(1-p)^(t-beta) sum_{i<=beta} (tp)^i / i!``. Raises ``ValueError`` listing
    the failed preconditions unless ``enforce_preconditions`` is false.
    """
    problems = tail_preconditions(t, p, beta, d)
    if problems and enforce_preconditions:
        raise ValueError("tail bound preconditions violated: " + "; ".join(problems))
    tp = t * p
    exact = binomial_cdf(t, p, beta)
    with mpmath.workdps(TAIL_DPS):
        tp_ = mpmath.mpf(t) * mpmath.mpf(p)
        partial = sum(tp_ ** i / mpmath.factorial(i) for i in range(beta + 1))
        factored = (1 - mpmath.mpf(p)) ** (t - beta) * partial
        bound = mpmath.exp(-tp_ ** (beta + 1) / (4 * mpmath.factorial(beta + 1)))
        ok = bool(exact <= factored <= bound)
    return BoundReport(
        "binomial_tail",
        {"t": t, "p": p, "beta": beta, "d": d},
        float(bound),
        ok,
        {"exact": float(exact), "factored": float(factored), "tp": tp,
         "preconditions_met": not problems},
    )


def randomgraph_k(d: float, beta: int) -> float:
    """``(4^(beta+5) (beta+1)!)^(-1/beta) d^(1+1/beta) / (log d)^(1/beta)``."""
    if d <= 1:
        raise ValueError("d must exceed 1")
    if beta < 1:
        raise ValueError("beta must be positive")
    root = (4 ** (beta + 5) * math.factorial(beta + 1)) ** (-1 / beta)
    return root * d ** (1 + 1 / beta) / math.log(d) ** (1 / beta)


def c_beta(beta: int) -> float:
    """Lower-bound constant ``(4^(beta+5) (beta+1)!)^(-1/beta) / 100``."""
    if beta < 1:
        raise ValueError("beta must be positive")
    return (4 ** (beta + 5) * math.factorial(beta + 1)) ** (-1 / beta) / 100


def sigma_bound_cycle(t: int, delta: float) -> float:
    """Bound on the number of special pairs at a vertex of a C_{2t}-free
    graph: ``t delta / (2t - t) = delta``."""
    if t < 2 or delta < 1:
        raise ValueError("need t >= 2 and delta >= 1")
    alpha = 2 * t
    return t * delta / (alpha - t)


def reference_upper(delta: float, beta: int) -> float:
    """Reference line ``(e^3 / beta) delta^(1 + 1/beta)``; reported, never asserted."""
    return math.e ** 3 / beta * delta ** (1 + 1 / beta)


# -- report helpers ----------------------------------------------------------

def report(name: str, **kw) -> BoundReport:
    """Evaluate a bound by name and wrap it as a report."""
    funcs = {
        "erdos_gallai": (erdos_gallai_bound, ("t", "n")),
        "kst": (kst_bound, ("a", "b", "s", "t")),
        "exp_log_gap": (partial_exp_log_gap, ("x", "n")),
        "randomgraph_k": (randomgraph_k, ("d", "beta")),
        "c_beta": (c_beta, ("beta",)),
        "sigma_cycle": (sigma_bound_cycle, ("t", "delta")),
        "reference_upper": (reference_upper, ("delta", "beta")),
    }
    if name == "binomial_tail":
        return binomial_tail_bound_check(kw["t"], kw["p"], kw["beta"], kw["d"])
    if name not in funcs:
        raise ValueError(f"unknown bound {name!r}")
    fn, params = funcs[name]
    args = {k: kw[k] for k in params}
    value = fn(**args)
    satisfied = value >= -1e-12 if name == "exp_log_gap" else None
    return BoundReport(name, args, value, satisfied)


BOUND_NAMES = ("erdos_gallai", "kst", "exp_log_gap", "binomial_tail",
               "randomgraph_k", "c_beta", "sigma_cycle", "reference_upper")


def format_reports(reports: list[BoundReport], fmt: str = "text") -> str:
    header = ["name", "inputs", "value", "satisfied"]
    rows = [r.row() for r in reports]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    widths = [max(len(x) for x in col) for col in zip(header, *rows)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()
             for r in [header, *rows]]
    return "\n".join(lines) + "\n"
