"""Exact-rational crossing bounds.

All three calculators work in fractions.Fraction so coefficients like
4/243 and 243/8 stay exact.  Nothing here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction

from .drawing import CrossingReport


def crossing_lemma_lb(n_vertices: int, n_edges: int, lam: Fraction) -> Fraction:
    """Lower bound (lam^-2 - 3 lam^-3) * nE^3 / nV^2 on total crossings.

    Requires lam > 3 (the coefficient is positive there) and the density
    hypothesis nE >= lam * nV.
    """
    lam = Fraction(lam)
    if n_vertices < 1:
        raise ValueError("need at least one vertex")
    if lam <= 3:
        raise ValueError("lambda must exceed 3 for a positive coefficient")
    if n_edges < lam * n_vertices:
        raise ValueError(f"density hypothesis fails: {n_edges} < {lam} * {n_vertices}")
    coeff = lam ** -2 - 3 * lam ** -3
    return coeff * Fraction(n_edges) ** 3 / Fraction(n_vertices) ** 2


def r_upper(n_vertices: int, n_edges: int) -> Fraction:
    """min(nE, 243 nV^2 / (8 nE)), valid once nE >= (9/2) nV."""
    if n_vertices < 1:
        raise ValueError("need at least one vertex")
    if Fraction(n_edges) < Fraction(9, 2) * n_vertices:
        raise ValueError(f"requires nE >= (9/2) nV, got {n_edges} < 4.5 * {n_vertices}")
    return min(Fraction(n_edges), Fraction(243 * n_vertices ** 2, 8 * n_edges))


def r_product_ratio(report: CrossingReport, cr_upper: int, lcr_upper: int) -> Fraction:
    """(cr * lcr) / (cr_upper * lcr_upper) for a verified drawing.

    When cr_upper and lcr_upper bound the graph's true minima from above,
    this underestimates the drawing's contribution to the tradeoff ratio.
    """
    if not report.valid:
        raise ValueError("ratio is only meaningful for a valid drawing")
    if cr_upper < 1 or lcr_upper < 1:
        raise ValueError("upper bounds must be positive integers")
    return Fraction(report.cr * report.lcr, cr_upper * lcr_upper)
