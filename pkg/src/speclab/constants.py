"""Closed-form bounds on Neumann eigenvalue ratios of nested convex domains.

All quantities are indexed by the eigenvalue order k and the dimension d.
Ratio bounds are dimensionless; the diameter bounds (`kroger_upper`,
`payne_weinberger_lower`) carry 1/length^2 units through an explicit
diameter argument, keeping the scaling mu_k(c*Omega) = c^-2 mu_k(Omega)
explicit.

The improved lower bound of the form pi^2/(16 j^2) is deliberately not
implemented: the zero index it requires is not pinned down, so it is
recorded here as documentation only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import specfun

D_MAX = 120

CONSTANT_NAMES = (
    "alpha1_sharp",
    "alpha1_simple",
    "funano_lower",
    "kroger_upper",
    "c_upper",
    "alpha_k2_lower",
    "alpha_2d_lower",
    "polya_bound",
    "payne_weinberger_lower",
)

# diameter used for the dimensional rows of the emitted table
TABLE_DIAMETER = 2.0


@dataclass(frozen=True)
class ConstantRecord:
    """One named bound value with its indices and display formula."""

    name: str
    k: int
    d: int
    value: float
    formula: str

    def __post_init__(self):
        if self.name not in CONSTANT_NAMES:
            raise ValueError(f"unknown constant name {self.name!r}")
        if not self.value > 0:
            raise ValueError(f"constant {self.name} must be positive, got {self.value}")


def _validate_dimension(d: int, d_min: int = 2) -> None:
    if not isinstance(d, int) or isinstance(d, bool):
        raise ValueError(f"dimension must be an integer, got {d!r}")
    if d < d_min or d > D_MAX:
        raise ValueError(f"dimension d={d} outside supported range {d_min}..{D_MAX}")


def _validate_order_index(k: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool):
        raise ValueError(f"eigenvalue order must be an integer, got {k!r}")
    if k < 1:
        raise ValueError(f"eigenvalue order k={k} must be >= 1")


def alpha1_sharp(d: int) -> float:
    """Sharp infimum of mu_1(inner)/mu_1(outer) over nested convex domains:
    pi^2 / (4 j_{d/2-1,1}^2)."""
    _validate_dimension(d)
    j = specfun.bessel_j_zero(d / 2.0 - 1.0, 1)
    return math.pi**2 / (4.0 * j * j)


def alpha1_simple(d: int) -> float:
    """Non-sharp first-eigenvalue comparison constant pi^2 / (2 d (d+4))."""
    _validate_dimension(d)
    return math.pi**2 / (2.0 * d * (d + 4.0))


def funano_lower(d: int) -> float:
    """Universal all-order lower bound (1/92^2) / d^2."""
    _validate_dimension(d)
    return 1.0 / (92.0**2 * d * d)


def payne_weinberger_lower(diameter: float) -> float:
    """Diameter lower bound pi^2 / D^2 for mu_1 of a convex domain."""
    if not diameter > 0:
        raise ValueError(f"diameter must be positive, got {diameter}")
    return math.pi**2 / diameter**2


def kroger_upper(k: int, d: int, diameter: float) -> float:
    """Diameter upper bound for mu_k of a convex domain in dimension d.

    d = 2:             (2 j_{0,1} + pi (k-1))^2 / D^2
    d >= 3, k odd:     4 j_{d/2-1,(k+1)/2}^2 / D^2
    d >= 3, k even:    (j_{d/2-1,k/2} + j_{d/2-1,k/2+1})^2 / D^2
    """
    _validate_order_index(k)
    _validate_dimension(d)
    if not diameter > 0:
        raise ValueError(f"diameter must be positive, got {diameter}")
    if d == 2:
        j01 = specfun.bessel_j_zero(0.0, 1)
        return (2.0 * j01 + math.pi * (k - 1)) ** 2 / diameter**2
    nu = d / 2.0 - 1.0
    if k % 2 == 1:
        j = specfun.bessel_j_zero(nu, (k + 1) // 2)
        return 4.0 * j * j / diameter**2
    ja = specfun.bessel_j_zero(nu, k // 2)
    jb = specfun.bessel_j_zero(nu, k // 2 + 1)
    return (ja + jb) ** 2 / diameter**2


def c_upper(k: int, d: int) -> float:
    """Upper bound on the k-th ratio infimum: segment mu_k over the diameter
    upper bound.  The diameter cancels; c(k,3) = k^2/(k+1)^2 in closed form."""
    return math.pi**2 * k**2 / kroger_upper(k, d, 1.0)


def alpha_lower_nonsharp(k: int, d: int) -> float:
    """Non-sharp lower bounds available in two index families only:
    d = 2 (any k <= 1000) and k = 2 (any d >= 3)."""
    _validate_order_index(k)
    _validate_dimension(d)
    if d == 2:
        if k > 1000:
            raise ValueError(f"k={k} outside supported range for d=2 (k <= 1000)")
        j01 = specfun.bessel_j_zero(0.0, 1)
        return math.pi**2 / (2.0 * j01 + (k - 1) * math.pi) ** 2
    if k == 2:
        nu = (d - 2) / 2.0
        return math.pi**2 / (specfun.bessel_j_zero(nu, 1) + specfun.bessel_j_zero(nu, 2)) ** 2
    raise ValueError(
        f"no lower bound formula for (k={k}, d={d}); supported: d=2 with k<=1000, or k=2 with d>=3"
    )


def unit_ball_volume(d: int) -> float:
    """Volume of the unit ball in R^d: pi^(d/2) / Gamma(d/2 + 1)."""
    _validate_dimension(d, d_min=1)
    return math.pi ** (d / 2.0) / math.gamma(d / 2.0 + 1.0)


def polya_bound(k: int, d: int) -> float:
    """Conjectured bound 4 pi^2 k^(2/d) / omega_d^(2/d) for unit-volume mu_k."""
    _validate_order_index(k)
    _validate_dimension(d)
    return 4.0 * math.pi**2 * k ** (2.0 / d) / unit_ball_volume(d) ** (2.0 / d)


def emit_constant_table(k_max: int, d_max: int) -> list[ConstantRecord]:
    """Full grid of the constants above, ordered lexicographically by
    (name, k, d).

    Constants that do not depend on k are emitted at k = 1 only; the
    diameter bounds are evaluated at D = TABLE_DIAMETER.
    """
    _validate_order_index(k_max)
    _validate_dimension(d_max)
    D = TABLE_DIAMETER
    records: list[ConstantRecord] = []
    dims = range(2, d_max + 1)
    orders = range(1, k_max + 1)

    for d in dims:
        records.append(
            ConstantRecord("alpha1_sharp", 1, d, alpha1_sharp(d), "pi^2 / (4 j_{d/2-1,1}^2)")
        )
    for d in dims:
        records.append(
            ConstantRecord("alpha1_simple", 1, d, alpha1_simple(d), "pi^2 / (2 d (d+4))")
        )
    for k in orders:
        for d in dims:
            if d == 2 and k <= 1000:
                records.append(
                    ConstantRecord(
                        "alpha_k2_lower",
                        k,
                        2,
                        alpha_lower_nonsharp(k, 2),
                        "pi^2 / (2 j_{0,1} + (k-1) pi)^2",
                    )
                )
            elif d >= 3 and k == 2:
                records.append(
                    ConstantRecord(
                        "alpha_2d_lower",
                        2,
                        d,
                        alpha_lower_nonsharp(2, d),
                        "pi^2 / (j_{(d-2)/2,1} + j_{(d-2)/2,2})^2",
                    )
                )
    for k in orders:
        for d in dims:
            records.append(
                ConstantRecord("c_upper", k, d, c_upper(k, d), "pi^2 k^2 / (D^2 kroger_upper)")
            )
    for d in dims:
        records.append(
            ConstantRecord("funano_lower", 1, d, funano_lower(d), "(1/92^2) / d^2")
        )
    for k in orders:
        for d in dims:
            records.append(
                ConstantRecord(
                    "kroger_upper",
                    k,
                    d,
                    kroger_upper(k, d, D),
                    f"diameter upper bound at D={D:g}",
                )
            )
    records.append(
        ConstantRecord(
            "payne_weinberger_lower",
            1,
            2,
            payne_weinberger_lower(D),
            f"pi^2 / D^2 at D={D:g}",
        )
    )
    for k in orders:
        for d in dims:
            records.append(
                ConstantRecord(
                    "polya_bound", k, d, polya_bound(k, d), "4 pi^2 k^(2/d) / omega_d^(2/d)"
                )
            )
    records.sort(key=lambda r: (r.name, r.k, r.d))
    return records


def write_constant_csv(records: Sequence[ConstantRecord], path) -> None:
    """CSV emission: columns name,k,d,value,formula; 15 significant digits."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("name,k,d,value,formula\n")
        for r in records:
            fh.write(f"{r.name},{r.k},{r.d},{r.value:.15g},{r.formula}\n")
