"""Eigenvalue lower bounds on toughness and their verification.

Four bounds, all functions of the degree d and the second largest absolute
eigenvalue lam, in historical order of strength:

    alon    (1/3) * (d^2 / (d*lam + lam^2) - 1)
    brouwer d/lam - 2
    gu      d/lam - sqrt(2)
    main    d/lam - 1

The last is the one verified end-to-end against exact toughness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DisconnectedGraph, NotRegularGraph
from .graph import Graph, NotRegular, is_connected, regularity
from .spectra import LAMBDA_EPS, SpectralProfile, spectrum
from .toughness import ToughnessResult, exact_toughness, toughness_search_cap


@dataclass(frozen=True)
class BoundReport:
    """All four bounds, the exact toughness when available, and slacks.

    ``exact_t`` is None when the minimization domain is empty (complete
    graphs) or when the graph exceeds the exact-search cap; ``slack`` and
    ``tight_gap`` are None in the same cases.  ``violation`` fires only if
    exact toughness is defined and falls below the main bound by more than
    the eigenvalue epsilon, which a correct implementation never observes.
    """

    d: int
    lam: float
    alon: float
    brouwer: float
    gu: float
    theorem: float
    exact_t: Fraction | None
    slack: float | None
    tight_gap: float | None
    violation: bool

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "lambda": self.lam,
            "alon": self.alon,
            "brouwer": self.brouwer,
            "gu": self.gu,
            "theorem": self.theorem,
            "exact_t": (
                None if self.exact_t is None
                else {"num": self.exact_t.numerator, "den": self.exact_t.denominator}
            ),
            "slack": self.slack,
            "tight_gap": self.tight_gap,
            "violation": self.violation,
        }


def _check_lambda(lam: float) -> None:
    if lam <= 0.0:
        raise ValueError(f"lambda must be positive, got {lam}")


def alon_bound(d: int, lam: float) -> float:
    _check_lambda(lam)
    return (d * d / (d * lam + lam * lam) - 1.0) / 3.0


def brouwer_bound(d: int, lam: float) -> float:
    _check_lambda(lam)
    return d / lam - 2.0


def gu_bound(d: int, lam: float) -> float:
    _check_lambda(lam)
    return d / lam - math.sqrt(2.0)


def theorem_bound(d: int, lam: float) -> float:
    _check_lambda(lam)
    return d / lam - 1.0


def _require_connected_regular(g: Graph) -> int:
    d = regularity(g)
    if isinstance(d, NotRegular):
        raise NotRegularGraph(
            f"vertex {d.vertex} has degree {d.degree}, graph is not regular"
        )
    if not is_connected(g):
        raise DisconnectedGraph("bound verification needs a connected graph")
    return d


def verify_theorem(
    g: Graph,
    profile: SpectralProfile | None = None,
    toughness: ToughnessResult | None = None,
    include_toughness: bool = True,
) -> BoundReport:
    """Evaluate all bounds on a connected regular graph and compare with t(G).

    Pass ``toughness`` to reuse a result already computed; otherwise the
    exact search runs here when the graph is within the size cap.  Graphs
    over the cap get a report with ``exact_t`` None.
    """
    d = _require_connected_regular(g)
    if profile is None:
        profile = spectrum(g)
    lam = profile.lam
    if lam is None or lam <= 0.0:
        raise ValueError("second largest absolute eigenvalue unavailable or nonpositive")
    exact_t: Fraction | None = None
    if toughness is not None:
        exact_t = toughness.t
    elif include_toughness and g.n <= toughness_search_cap():
        result = exact_toughness(g)
        if result is not None:
            exact_t = result.t
    theorem = theorem_bound(d, lam)
    slack = None
    tight_gap = None
    violation = False
    if exact_t is not None:
        slack = float(exact_t) - theorem
        tight_gap = d / lam - float(exact_t)
        violation = slack < -LAMBDA_EPS
    return BoundReport(
        d=d,
        lam=lam,
        alon=alon_bound(d, lam),
        brouwer=brouwer_bound(d, lam),
        gu=gu_bound(d, lam),
        theorem=theorem,
        exact_t=exact_t,
        slack=slack,
        tight_gap=tight_gap,
        violation=violation,
    )


def tightness_gap(g: Graph) -> float | None:
    """d/lam - t(G); how close the graph sits to the d/lam ceiling.

    Informational only; the sign rests on external literature claims.  None
    when toughness is undefined.
    """
    d = _require_connected_regular(g)
    lam = spectrum(g).lam
    if lam is None or lam <= 0.0:
        raise ValueError("second largest absolute eigenvalue unavailable or nonpositive")
    result = exact_toughness(g)
    if result is None:
        return None
    return d / lam - float(result.t)
