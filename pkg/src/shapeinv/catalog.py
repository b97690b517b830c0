"""Catalog of generator pairs (A, W) for shape-invariant potential families.

A generator pair is a polynomial A(x) of degree <= 2 together with a
non-negative weight W(x) on an interval (a, b), subject to the admissibility
conditions

* A(x) > 0 strictly inside (a, b),
* (A*W)'/W is a polynomial of degree <= 1,
* A(x)*W(x) -> 0 at both interval ends,
* W integrable against polynomials up to a configured degree.

Everything downstream (orthogonal polynomials, potentials, ladder operators,
coherent states) is generated from such a pair.  Eight named entries cover
the standard solvable families; each entry also carries a reference record
with the tabulated closed forms (coordinate map, mu, E(n, m), omega_c, ...)
used by the `crosscheck` command.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import DegreeViolation, UnknownPreset

WEIGHT_FAMILIES = (
    "exp_quadratic",      # exp(-alpha x^2 / 2 + b x)
    "power_exp",          # x^alpha exp(-beta x)
    "power_inv_exp",      # x^alpha exp(-beta / x)
    "arctan_exp",         # (1 + x^2)^alpha exp(beta arctan x)
    "binomial_power",     # (p x + q)^alpha (r x + s)^beta
)


@dataclass(frozen=True)
class Weight:
    """Weight function from one of the admissible closed-form families."""

    family: str
    alpha: float = 0.0
    beta: float = 0.0
    b: float = 0.0
    # linear factors of the binomial_power family: (p x + q)^alpha (r x + s)^beta
    factors: tuple = ((1.0, 0.0), (1.0, 0.0))

    def __post_init__(self):
        if self.family not in WEIGHT_FAMILIES:
            raise ValueError(f"unknown weight family {self.family!r}")

    def log_w(self, x):
        """log W(x), vectorized; -inf where W underflows to zero."""
        x = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            if self.family == "exp_quadratic":
                return -0.5 * self.alpha * x * x + self.b * x
            if self.family == "power_exp":
                return self.alpha * np.log(x) - self.beta * x
            if self.family == "power_inv_exp":
                return self.alpha * np.log(x) - self.beta / x
            if self.family == "arctan_exp":
                return self.alpha * np.log1p(x * x) + self.beta * np.arctan(x)
            (p, q), (r, s) = self.factors
            return self.alpha * np.log(p * x + q) + self.beta * np.log(r * x + s)

    def w_values(self, x):
        with np.errstate(over="ignore"):
            return np.exp(self.log_w(x))

    def dlog_w_rational(self):
        """(num, den) polynomial coefficient arrays with W'/W = num/den."""
        a, b2 = self.alpha, self.beta
        if self.family == "exp_quadratic":
            return np.array([self.b, -a]), np.array([1.0])
        if self.family == "power_exp":
            return np.array([a, -b2]), np.array([0.0, 1.0])
        if self.family == "power_inv_exp":
            return np.array([b2, a]), np.array([0.0, 0.0, 1.0])
        if self.family == "arctan_exp":
            return np.array([b2, 2.0 * a]), np.array([1.0, 0.0, 1.0])
        (p, q), (r, s) = self.factors
        num = P.polyadd(a * p * np.array([s, r]), b2 * r * np.array([q, p]))
        den = P.polymul(np.array([q, p]), np.array([s, r]))
        return num, den

    def is_even(self):
        """True when W(-x) = W(x) for the current parameters."""
        if self.family == "exp_quadratic":
            return self.b == 0.0
        if self.family == "arctan_exp":
            return self.beta == 0.0
        if self.family == "binomial_power":
            (p, q), (r, s) = self.factors
            return self.alpha == self.beta and (p, q) == (-r, s)
        return False

    def to_dict(self):
        d = {"family": self.family, "alpha": self.alpha, "beta": self.beta}
        if self.family == "exp_quadratic":
            d["b"] = self.b
        if self.family == "binomial_power":
            d["factors"] = [list(f) for f in self.factors]
        return d

    @staticmethod
    def from_dict(d):
        factors = d.get("factors")
        return Weight(
            family=d["family"],
            alpha=float(d.get("alpha", 0.0)),
            beta=float(d.get("beta", 0.0)),
            b=float(d.get("b", 0.0)),
            factors=tuple(tuple(map(float, f)) for f in factors) if factors else ((1.0, 0.0), (1.0, 0.0)),
        )


@dataclass(frozen=True)
class TableReference:
    """Tabulated closed forms attached to a catalog entry, for crosschecks.

    The callables evaluate the tabulated column formulas verbatim; the
    `crosscheck` command compares them against direct evaluation of the
    general expressions and reports both sides.
    """

    x_of_t: Callable[[float], float]
    t_of_x: Callable[[float], float]
    x_of_t_label: str
    mu: Optional[Callable[[int, int], float]] = None
    mu_label: str = ""
    energy: Optional[Callable[[int, int], float]] = None
    energy_label: str = ""
    omega_c: Optional[Callable[[float, int], float]] = None
    omega_c_label: str = ""
    g_label: str = ""
    an_ratio: Optional[Callable[[int, complex], complex]] = None
    an_ratio_label: str = ""
    notes: str = ""


@dataclass(frozen=True)
class MasterSpec:
    """Generator pair: A(x) = c0 + c1 x + c2 x^2 plus a weight on (a, b).

    `mass` is the classical mass used by the phase-space and time-evolution
    formulas.  The default 0.5 matches the kinetic term -d^2/dxi^2 (hbar = 1),
    which is what makes the tabulated omega_c equal the quantum level spacing
    for the oscillator entries.
    """

    name: str
    a_coeffs: tuple
    weight: Weight
    interval: tuple
    gamma_shift: float = 0.0
    mass: float = 0.5
    table: Optional[TableReference] = field(default=None, compare=False, repr=False)

    # -- polynomial views of A -------------------------------------------
    @property
    def a_poly(self):
        return np.asarray(self.a_coeffs, dtype=float)

    def a_values(self, x):
        return P.polyval(np.asarray(x, dtype=float), self.a_poly)

    @property
    def a_prime(self):
        return P.polyder(self.a_poly)

    @property
    def app(self):
        """A''(x), a constant since deg A <= 2."""
        return 2.0 * self.a_coeffs[2]

    @property
    def a_prime0(self):
        return self.a_coeffs[1]

    def d_poly(self):
        """Coefficients [C, A1] of D(x) = A(x) W'(x)/W(x), exactly.

        D must be a polynomial of degree <= 1 for an admissible pair; this
        performs the exact rational division and raises DegreeViolation when
        the division leaves a remainder or a higher-degree quotient.
        """
        num, den = self.weight.dlog_w_rational()
        prod = P.polymul(self.a_poly, num)
        quo, rem = P.polydiv(prod, den)
        scale = max(np.max(np.abs(prod)), 1.0)
        if np.max(np.abs(rem)) > 1e-9 * scale:
            raise DegreeViolation(f"A*W'/W has remainder {rem} over denominator")
        quo = np.trim_zeros(quo, "b")
        if len(quo) > 2:
            raise DegreeViolation(f"A*W'/W has degree {len(quo) - 1}")
        out = np.zeros(2)
        out[: len(quo)] = quo
        return out

    @property
    def is_symmetric(self):
        a, b = self.interval
        even_a = self.a_coeffs[1] == 0.0
        sym_int = (a == -b) or (a == -math.inf and b == math.inf)
        return even_a and sym_int and self.weight.is_even()

    # -- serialization ----------------------------------------------------
    def to_dict(self):
        def enc(v):
            if v == math.inf:
                return "inf"
            if v == -math.inf:
                return "-inf"
            return v

        return {
            "name": self.name,
            "a_coeffs": list(self.a_coeffs),
            "weight": self.weight.to_dict(),
            "interval": [enc(self.interval[0]), enc(self.interval[1])],
            "gamma_shift": self.gamma_shift,
            "mass": self.mass,
        }

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), sort_keys=True, **kw)

    @staticmethod
    def from_dict(d):
        def dec(v):
            if v == "inf":
                return math.inf
            if v == "-inf":
                return -math.inf
            return float(v)

        name = d["name"]
        spec = MasterSpec(
            name=name,
            a_coeffs=tuple(float(c) for c in d["a_coeffs"]),
            weight=Weight.from_dict(d["weight"]),
            interval=(dec(d["interval"][0]), dec(d["interval"][1])),
            gamma_shift=float(d.get("gamma_shift", 0.0)),
            mass=float(d.get("mass", 0.5)),
            table=_TABLE_REFS.get(name),
        )
        return spec

    @staticmethod
    def from_json(text):
        return MasterSpec.from_dict(json.loads(text))


PRESET_NAMES = (
    "shifted_oscillator",
    "three_dim_oscillator",
    "morse",
    "scarf2_hyperbolic",
    "scarf1_trigonometric",
    "gen_poschl_teller",
    "row7_trigonometric",
    "natanzon",
)

# Default parameters.  Jacobi-type entries sit at the center of their allowed
# ranges; entries whose weights decay only algebraically at an infinite end
# (morse, scarf2, gen_poschl_teller, natanzon) admit only finitely many
# normalizable polynomials, and the exponents below open a window of at
# least 12 levels (2n + tail exponent < -1).
_PRESET_PARAMS = {
    "shifted_oscillator": dict(alpha=1.0, b=0.0),
    "three_dim_oscillator": dict(alpha=1.0, beta=1.0),
    "morse": dict(alpha=-25.0, beta=1.0),
    "scarf2_hyperbolic": dict(alpha=-13.5, beta=1.0),
    "scarf1_trigonometric": dict(alpha=1.0, beta=1.0),
    "gen_poschl_teller": dict(alpha=0.5, beta=-25.0),
    "row7_trigonometric": dict(alpha=1.0, beta=1.0),
    "natanzon": dict(alpha=-0.5, beta=-25.0),
}

_PRESET_RANGES = {
    "shifted_oscillator": {"alpha": (0.0, math.inf)},
    "three_dim_oscillator": {"alpha": (-1.0, math.inf), "beta": (0.0, math.inf)},
    "morse": {"alpha": (-math.inf, -2.0), "beta": (0.0, math.inf)},
    "scarf2_hyperbolic": {"alpha": (-math.inf, -1.0)},
    "scarf1_trigonometric": {"alpha": (-1.0, math.inf), "beta": (-1.0, math.inf)},
    "gen_poschl_teller": {"alpha": (-1.0, math.inf), "beta": (-math.inf, -2.0)},
    "row7_trigonometric": {"alpha": (-1.0, math.inf), "beta": (-1.0, math.inf)},
    "natanzon": {"alpha": (-1.0, math.inf), "beta": (-math.inf, -2.0)},
}


def _jacobi_type_an_ratio(scale):
    def ratio(n, k0, alpha, beta):
        ab = alpha + beta
        lg = (
            math.lgamma(n + ab / 2.0)
            + 0.5 * (math.lgamma(n + (ab - 1.0) / 2.0) - math.lgamma(n + (ab + 1.0) / 2.0))
            - 0.5 * (math.lgamma(n + 1.0) + math.lgamma(n + alpha + 1.0)
                     + math.lgamma(n + beta + 1.0) + math.lgamma(n + ab + 1.0))
        )
        return (scale * k0) ** n * math.exp(lg)

    return ratio


def _build_table_refs():
    refs = {}

    def mu_jacobi(sign, fac):
        # common tabulated mu pattern for the Jacobi-type rows
        def mu(n, m, alpha, beta):
            ab = alpha + beta
            root = ((n + alpha) * (n + beta) * (2 * n + ab - 1.0)) / (
                n * (n + ab) * (2 * n + ab + 1.0)
            )
            return sign * fac * n * (n + ab) / (2 * n + ab) * math.sqrt(root)

        return mu

    p = _PRESET_PARAMS["shifted_oscillator"]
    al = p["alpha"]
    refs["shifted_oscillator"] = TableReference(
        x_of_t=lambda t, b=p["b"], a=al: t - 2.0 * b / a,
        t_of_x=lambda x, b=p["b"], a=al: x + 2.0 * b / a,
        x_of_t_label="x = t - 2b/alpha",
        mu=lambda n, m: (n - m) / n * math.sqrt(n),
        mu_label="(n-m)/n * sqrt(n)",
        energy=lambda n, m, a=al: a * (n - m + 1.0),
        energy_label="alpha (n - m + 1)",
        omega_c=lambda E, m, a=al: a,
        omega_c_label="omega_c = alpha",
        g_label="x0 p0",
        an_ratio=lambda n, k0, a=al: (k0 / a) ** n / math.sqrt(math.gamma(n + 1.0)),
        an_ratio_label="(k0/alpha)^n / sqrt(Gamma(n+1))",
    )

    p = _PRESET_PARAMS["three_dim_oscillator"]
    al, be = p["alpha"], p["beta"]
    refs["three_dim_oscillator"] = TableReference(
        x_of_t=lambda t: 0.25 * t * t,
        t_of_x=lambda x: 2.0 * math.sqrt(x),
        x_of_t_label="x = t^2/4",
        mu=lambda n, m, a=al: -(n - m) * math.sqrt((n + a) / n),
        mu_label="-(n-m) sqrt((n+alpha)/n)",
        energy=lambda n, m, b=be: b * (n - m + 1.0),
        energy_label="beta (n - m + 1)",
        omega_c=lambda E, m, b=be: b,
        omega_c_label="omega_c = beta",
        g_label="x0 p0 (alpha+m-1/2)/beta (1 + 2H/((alpha+m-1) beta))",
        an_ratio=lambda n, k0, a=al: (-k0) ** n
        / math.sqrt(math.gamma(n + 1.0) * math.gamma(n + a + 1.0)),
        an_ratio_label="(-k0)^n / sqrt(Gamma(n+1) Gamma(n+alpha+1))",
    )

    p = _PRESET_PARAMS["morse"]
    al = p["alpha"]
    refs["morse"] = TableReference(
        x_of_t=math.exp,
        t_of_x=math.log,
        x_of_t_label="x = e^t",
        mu=lambda n, m, a=al: -((n + m) * (n + a)) / (2 * n + a) * math.sqrt((n + a) / n),
        mu_label="-(n+m)(n+alpha)/(2n+alpha) sqrt((n+alpha)/n)",
        energy=lambda n, m, a=al: -(a + n + m) * (n - m + 1.0),
        energy_label="-(alpha+n+m)(n-m+1)",
        omega_c=lambda E, m, a=al: 2.0 * math.sqrt(a * a / 4.0 + (4.0 * m * m - 1.0) / 8.0 - E),
        omega_c_label="2 sqrt(alpha^2/4 + (4m^2-1)/8 - E)",
        g_label="x0 p0 e^{2t}",
        notes="tabulated interval column corrected to (0, inf) by x = e^t",
    )

    p = _PRESET_PARAMS["scarf2_hyperbolic"]
    al = p["alpha"]
    refs["scarf2_hyperbolic"] = TableReference(
        x_of_t=math.sinh,
        t_of_x=math.asinh,
        x_of_t_label="x = sinh t",
        mu=lambda n, m, a=al: (n - m) * (n + 2 * a) / (2 * n + 2 * a)
        * math.sqrt((2 * m - 1.0) / 2.0) if m >= 1 else math.nan,
        mu_label="(n-m)(n+2alpha)/(2n+2alpha) sqrt((2m-1)/2)",
        energy=lambda n, m, a=al: -(2 * a + n + m) * (n - m + 1.0),
        energy_label="-(2 alpha+n+m)(n-m+1)",
        omega_c=lambda E, m, a=al: 2.0
        * math.sqrt(a * a + (4.0 * m * m - 1.0) / 8.0 + (2 * m - 1.0) * (a - 0.5) - E),
        omega_c_label="2 sqrt(s1+s2), s1=alpha^2+(4m^2-1)/8, s2=(2m-1)(alpha-1/2)-E",
        g_label="x0 p0 cosh^2 t",
    )

    p = _PRESET_PARAMS["scarf1_trigonometric"]
    al, be = p["alpha"], p["beta"]
    jr = _jacobi_type_an_ratio(-2.0)
    refs["scarf1_trigonometric"] = TableReference(
        x_of_t=lambda t: 0.5 * (1.0 + math.sin(t)),
        t_of_x=lambda x: math.asin(2.0 * x - 1.0),
        x_of_t_label="x = (1 + sin t)/2",
        mu=lambda n, m, a=al, b=be: mu_jacobi(-1.0, 1.0)(n, m, a, b),
        mu_label="-n(n+a+b)/(2n+a+b) sqrt((n+a)(n+b)(2n+a+b-1)/(n(n+a+b)(2n+a+b+1)))",
        energy=lambda n, m, a=al, b=be: (a + b + n + m) * (n - m + 1.0),
        energy_label="(alpha+beta+n+m)(n-m+1)",
        omega_c=lambda E, m, a=al, b=be: 2.0
        * math.sqrt((a + b) ** 2 / 4.0 + (m - 0.5) * (a + b - 1.0) - (4 * m * m - 1.0) / 8.0 + E),
        omega_c_label="2 sqrt(s1+s2+s3), s1=(a+b)^2/4, s2=(m-1/2)(a+b-1), s3=E-(4m^2-1)/8",
        g_label="x0 p0 cos^2 t",
        an_ratio=lambda n, k0, a=al, b=be: jr(n, k0, a, b),
        an_ratio_label="(-2k0)^n Gamma-product form",
    )

    p = _PRESET_PARAMS["gen_poschl_teller"]
    al, be = p["alpha"], p["beta"]
    jr = _jacobi_type_an_ratio(1.0)
    refs["gen_poschl_teller"] = TableReference(
        x_of_t=math.cosh,
        t_of_x=math.acosh,
        x_of_t_label="x = cosh t",
        mu=lambda n, m, a=al, b=be: mu_jacobi(1.0, 2.0)(n, m, a, b),
        mu_label="2n(n+a+b)/(2n+a+b) sqrt(...)",
        energy=lambda n, m, a=al, b=be: -(a + b + n + m) * (n - m + 1.0),
        energy_label="-(alpha+beta+n+m)(n-m+1)",
        omega_c=lambda E, m, a=al, b=be: 2.0
        * math.sqrt((a + b) ** 2 / 4.0 + (4 * m * m - 1.0) / 8.0 - E + (2 * m - 1.0) / 2.0 * (a + b - 1.0)),
        omega_c_label="2 sqrt(s1+s2+s3), s2=(4m^2-1)/8-E",
        g_label="x0 p0 sinh^2 t",
        an_ratio=lambda n, k0, a=al, b=be: jr(n, k0, a, b),
        an_ratio_label="Gamma-product form",
        notes="tabulated interval column corrected to (1, inf) by x = cosh t and A > 0",
    )

    p = _PRESET_PARAMS["row7_trigonometric"]
    al, be = p["alpha"], p["beta"]
    jr = _jacobi_type_an_ratio(2.0)
    refs["row7_trigonometric"] = TableReference(
        x_of_t=math.cos,
        t_of_x=math.acos,
        x_of_t_label="x = cos t",
        mu=lambda n, m, a=al, b=be: mu_jacobi(1.0, 2.0)(n, m, a, b),
        mu_label="2n(n+a+b)/(2n+a+b) sqrt(...)",
        energy=lambda n, m, a=al, b=be: (a + b + n + m) * (n - m + 1.0),
        energy_label="(alpha+beta+n+m)(n-m+1)",
        omega_c=lambda E, m, a=al, b=be: 2.0
        * math.sqrt((a + b) ** 2 / 4.0 + E - (4 * m * m - 1.0) / 8.0 + (2 * m - 1.0) / 2.0 * (a + b - 1.0)),
        omega_c_label="2 sqrt(s1+s2+s3), s2=E-(4m^2-1)/8",
        g_label="x0 p0 sin^2 t",
        an_ratio=lambda n, k0, a=al, b=be: jr(n, k0, a, b),
        an_ratio_label="(2k0)^n Gamma-product form",
        notes="unnamed row with A = 1 - x^2; xi uses asin(x) so the map increases",
    )

    p = _PRESET_PARAMS["natanzon"]
    al, be = p["alpha"], p["beta"]
    jr = _jacobi_type_an_ratio(0.25)
    refs["natanzon"] = TableReference(
        x_of_t=lambda t: 0.5 * math.cosh(2.0 * t),
        t_of_x=lambda x: 0.5 * math.acosh(2.0 * x),
        x_of_t_label="x = cosh(2t)/2",
        mu=lambda n, m, a=al, b=be: mu_jacobi(1.0, 2.0)(n, m, a, b),
        mu_label="2n(n+a+b)/(2n+a+b) sqrt(...)",
        energy=lambda n, m, a=al, b=be: -4.0 * (a + b + n + m) * (n - m + 1.0),
        energy_label="-4(alpha+beta+n+m)(n-m+1)",
        omega_c=lambda E, m, a=al, b=be: 4.0
        * math.sqrt((a + b) ** 2 + (4 * m * m - 1.0) / 8.0 - E + 2.0 * (2 * m - 1.0) * (a + b - 1.0)),
        omega_c_label="4 sqrt(s1+s2+s3), s1=(a+b)^2",
        g_label="x0 p0 sinh^2(2t)",
        an_ratio=lambda n, k0, a=al, b=be: jr(n, k0, a, b),
        an_ratio_label="(k0/4)^n Gamma-product form",
        notes="tabulated interval column corrected to (1/2, inf) by x = cosh(2t)/2",
    )
    return refs


_TABLE_REFS = _build_table_refs()


def preset(name: str) -> MasterSpec:
    """Return one of the eight catalog entries with its default parameters."""
    if name not in PRESET_NAMES:
        raise UnknownPreset(f"{name!r}; known entries: {', '.join(PRESET_NAMES)}")
    p = _PRESET_PARAMS[name]
    ref = _TABLE_REFS[name]
    inf = math.inf
    if name == "shifted_oscillator":
        return MasterSpec(name, (1.0, 0.0, 0.0),
                          Weight("exp_quadratic", alpha=p["alpha"], b=p["b"]),
                          (-inf, inf), table=ref)
    if name == "three_dim_oscillator":
        return MasterSpec(name, (0.0, 1.0, 0.0),
                          Weight("power_exp", alpha=p["alpha"], beta=p["beta"]),
                          (0.0, inf), table=ref)
    if name == "morse":
        return MasterSpec(name, (0.0, 0.0, 1.0),
                          Weight("power_inv_exp", alpha=p["alpha"], beta=p["beta"]),
                          (0.0, inf), table=ref)
    if name == "scarf2_hyperbolic":
        return MasterSpec(name, (1.0, 0.0, 1.0),
                          Weight("arctan_exp", alpha=p["alpha"], beta=p["beta"]),
                          (-inf, inf), table=ref)
    if name == "scarf1_trigonometric":
        return MasterSpec(name, (0.0, 1.0, -1.0),
                          Weight("binomial_power", alpha=p["alpha"], beta=p["beta"],
                                 factors=((1.0, 0.0), (-1.0, 1.0))),
                          (0.0, 1.0), table=ref)
    if name == "gen_poschl_teller":
        return MasterSpec(name, (-1.0, 0.0, 1.0),
                          Weight("binomial_power", alpha=p["alpha"], beta=p["beta"],
                                 factors=((1.0, -1.0), (1.0, 1.0))),
                          (1.0, inf), table=ref)
    if name == "row7_trigonometric":
        return MasterSpec(name, (1.0, 0.0, -1.0),
                          Weight("binomial_power", alpha=p["alpha"], beta=p["beta"],
                                 factors=((-1.0, 1.0), (1.0, 1.0))),
                          (-1.0, 1.0), table=ref)
    # natanzon
    return MasterSpec(name, (-1.0, 0.0, 4.0),
                      Weight("binomial_power", alpha=p["alpha"], beta=p["beta"],
                             factors=((2.0, -1.0), (2.0, 1.0))),
                      (0.5, inf), table=ref)


def normalizable_window(spec: MasterSpec) -> float:
    """Largest polynomial degree n with integral phi_n^2 W finite (inf if all).

    Only algebraic decay at an infinite endpoint limits the window; the
    criterion there is 2n + tail_exponent < -1.
    """
    w = spec.weight
    a, b = spec.interval
    tails = []
    if b == math.inf or a == -math.inf:
        if w.family == "power_inv_exp":
            tails.append(w.alpha)
        elif w.family == "arctan_exp":
            tails.append(2.0 * w.alpha)
        elif w.family == "binomial_power":
            tails.append(w.alpha + w.beta)
    if not tails:
        return math.inf
    tau = min(tails)
    # strict: 2n + tau < -1
    n = math.floor((-1.0 - tau) / 2.0)
    if 2 * n + tau >= -1.0:
        n -= 1
    return n


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    passed: bool
    evidence: str


@dataclass
class ValidationReport:
    spec_name: str
    checks: list

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_dict(self):
        return {
            "spec": self.spec_name,
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "evidence": c.evidence}
                       for c in self.checks],
        }


def _interior_points(a, b, n):
    """Deterministic sample of the open interval, denser near finite ends."""
    if a == -math.inf and b == math.inf:
        return np.concatenate([np.linspace(-8.0, 8.0, n), [-30.0, 30.0]])
    if b == math.inf:
        return a + np.concatenate([np.geomspace(1e-4, 1.0, n // 2),
                                   np.geomspace(1.0, 1e3, n - n // 2) + 1e-9])
    if a == -math.inf:
        return b - np.concatenate([np.geomspace(1e-4, 1.0, n // 2),
                                   np.geomspace(1.0, 1e3, n - n // 2) + 1e-9])
    h = b - a
    u = np.concatenate([np.linspace(1e-6, 1 - 1e-6, n), [1e-9, 1 - 1e-9]])
    return a + h * u


def validate(spec: MasterSpec, max_degree: int = 12) -> ValidationReport:
    """Run all admissibility checks; failures carry the offending numbers."""
    checks = []
    a, b = spec.interval

    ok = a < b
    checks.append(CheckResult("interval_ordered", ok, f"(a, b) = ({a}, {b})"))
    if not ok:
        return ValidationReport(spec.name, checks)

    # A > 0 strictly inside
    pts = _interior_points(a, b, 257)
    avals = spec.a_values(pts)
    i_min = int(np.argmin(avals))
    ok = bool(avals[i_min] > 0.0)
    checks.append(CheckResult(
        "a_positive_interior", ok,
        f"min A = {avals[i_min]:.6g} at x = {pts[i_min]:.6g}"))

    # (A W)'/W linear: exact rational division plus a finite-difference fit
    try:
        d = spec.d_poly()
        exact_ok = True
        exact_ev = f"A W'/W = {d[0]:.12g} + {d[1]:.12g} x"
    except DegreeViolation as e:
        exact_ok, exact_ev = False, str(e)
    rng = np.random.default_rng(20250809)
    lo = max(a, -6.0) if a != -math.inf else -4.0
    hi = min(b, 6.0) if b != math.inf else 4.0
    span = hi - lo
    xs = lo + span * (0.08 + 0.84 * rng.random(5))
    h = 1e-6 * max(span, 1.0)
    lw = spec.weight.log_w
    dlog = (lw(xs + h) - lw(xs - h)) / (2.0 * h)
    vals = P.polyval(xs, spec.a_prime) + spec.a_values(xs) * dlog
    coef, res = np.polynomial.polynomial.polyfit(xs, vals, 1, full=True)
    resid = math.sqrt(res[0][0]) if len(res[0]) else 0.0
    scale = max(np.max(np.abs(vals)), 1.0)
    fd_ok = resid < 1e-6 * scale  # fd derivative limits attainable residual
    checks.append(CheckResult(
        "aw_prime_over_w_linear", exact_ok and fd_ok,
        exact_ev + f"; fd linear-fit residual {resid:.3g} (scale {scale:.3g})"))

    # A W -> 0 at both ends, monotonically along a geometric approach
    for side, end in (("left", a), ("right", b)):
        if end in (-math.inf, math.inf):
            sgn = 1.0 if end == math.inf else -1.0
            seq = sgn * 10.0 ** np.arange(1, 7, dtype=float)
        else:
            h0 = (b - a)
            seq = end + (1.0 if side == "left" else -1.0) * h0 * 10.0 ** -np.arange(1, 7, dtype=float)
        with np.errstate(over="ignore", invalid="ignore"):
            vals = np.abs(spec.a_values(seq) * spec.weight.w_values(seq))
        finite = np.all(np.isfinite(vals))
        dec = bool(finite and np.all(np.diff(vals) <= 0.0) and
                   (vals[-1] < 1e-3 * max(vals[0], 1e-300) or vals[-1] == 0.0))
        checks.append(CheckResult(
            f"aw_vanishes_{side}", dec,
            f"|A W| along approach: {np.array2string(vals, precision=3)}"))

    # integrability window
    win = normalizable_window(spec)
    ok = win == math.inf or win >= max_degree
    checks.append(CheckResult(
        "weight_integrable", ok,
        f"normalizable polynomial degrees: n <= {win}"
        + (f" (need {max_degree})" if not ok else "")))

    # preset parameter ranges
    if spec.name in _PRESET_RANGES:
        rng_ok, msgs = True, []
        for pname, (lo_, hi_) in _PRESET_RANGES[spec.name].items():
            val = getattr(spec.weight, pname)
            good = lo_ < val < hi_
            rng_ok &= good
            msgs.append(f"{pname}={val} in ({lo_}, {hi_}): {'ok' if good else 'VIOLATION'}")
        checks.append(CheckResult("parameter_range", rng_ok, "; ".join(msgs)))

    return ValidationReport(spec.name, checks)
