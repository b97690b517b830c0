"""Shared grid, quadrature and root-finding services.

Finite intervals get mapped Gauss-Legendre nodes (exact for polynomials up
to degree 2 npoints - 1).  Semi-infinite and infinite intervals apply a
double-exponential change of variables first, which also absorbs integrable
endpoint singularities of the Jacobi-type weights.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import IntervalDegenerate, NoConvergence

# half-width of the double-exponential parameter range; e^{(pi/2) sinh 4.2}
# reaches ~1e22, enough that the slowest admissible tails (x^{-1.5}) leave
# remainders far below 1e-10
DE_CUT = 4.2


@dataclass(frozen=True)
class Grid:
    """Quadrature nodes and weights for integrals over (a, b) in x."""

    nodes: np.ndarray
    weights: np.ndarray
    map_kind: str  # finite | semi_infinite | infinite

    def __post_init__(self):
        if not np.all(np.diff(self.nodes) > 0):
            raise ValueError("grid nodes must be strictly increasing")

    @property
    def npoints(self):
        return len(self.nodes)

    def integrate(self, values):
        return float(np.dot(self.weights, values))


def build_grid(spec, npoints: int = 200) -> Grid:
    """Quadrature grid adapted to the interval of `spec`."""
    a, b = spec.interval
    if not a < b:
        raise IntervalDegenerate(f"interval ({a}, {b})")
    if npoints < 16:
        raise ValueError("npoints must be at least 16")
    t, glw = np.polynomial.legendre.leggauss(npoints)

    if a != -math.inf and b != math.inf:
        x = 0.5 * (b + a) + 0.5 * (b - a) * t
        w = 0.5 * (b - a) * glw
        kind = "finite"
    elif a == -math.inf and b == math.inf:
        u = DE_CUT * t
        s = 0.5 * math.pi * np.sinh(u)
        x = np.sinh(s)
        w = glw * DE_CUT * 0.5 * math.pi * np.cosh(u) * np.cosh(s)
        kind = "infinite"
    elif b == math.inf:
        u = DE_CUT * t
        r = np.exp(0.5 * math.pi * np.sinh(u))
        x = a + r
        w = glw * DE_CUT * 0.5 * math.pi * np.cosh(u) * r
        kind = "semi_infinite"
    else:  # (-inf, b)
        u = DE_CUT * t
        r = np.exp(0.5 * math.pi * np.sinh(u))
        x = (b - r)[::-1]
        w = (glw * DE_CUT * 0.5 * math.pi * np.cosh(u) * r)[::-1]
        kind = "semi_infinite"
    return Grid(nodes=x, weights=w, map_kind=kind)


def solve_fixed_point(f, x_init: float, tol: float = 1e-13,
                      fprime=None, max_iter: int = 100) -> float:
    """Solve z = f(z) by Newton iteration with damped fixed-point fallback.

    `fprime`, when given, is df/dz; otherwise a central difference is used.
    Raises NoConvergence after `max_iter` iterations.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    z = float(x_init)
    for _ in range(max_iter):
        g = z - f(z)
        if abs(g) < tol:
            return z
        if fprime is not None:
            dg = 1.0 - fprime(z)
        else:
            h = 1e-7 * (1.0 + abs(z))
            dg = 1.0 - (f(z + h) - f(z - h)) / (2.0 * h)
        if dg != 0.0 and np.isfinite(dg):
            step = g / dg
            # damp wild Newton steps, then fall back to plain iteration
            if abs(step) > 10.0 * (1.0 + abs(z)):
                z = 0.5 * (z + f(z))
            else:
                z = z - step
        else:
            z = 0.5 * (z + f(z))
    raise NoConvergence(f"fixed point not found from z0={x_init} after {max_iter} iterations")
