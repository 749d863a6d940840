"""
End-to-end analysis of a Brill-Noether degeneracy locus given by a genus,
a degree and a dot array.

>>> report = classical_wrd(4, 3, 1)
>>> report.rho, report.point_count
(0, 2)
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import factorial

from .bruhat import DEFAULT_STRATA_CAP, is_smooth_schubert, reduced_words_count, singular_strata
from .dot_array import DotArray, essential_set, rho as rho_of, to_confined
from .perm_core import (
    WindowPermutation, ZPermutation, compose, essential_set_z, finite_length, inverse,
    omega, restrict_to_window, slide,
)
from .schubert_poly import chow_coefficient

__all__ = [
    "BNInput", "BNReport", "InvalidInput", "PiPrime",
    "analyze", "classical_wrd", "castelnuovo_oracle", "pi_prime",
    "report_to_json", "report_from_json", "dumps",
]


class InvalidInput(ValueError):
    """Input outside the range where the locus is defined; ``str(exc)`` is the reason."""


@dataclass(frozen=True)
class BNInput:
    g: int
    d: int
    dots: DotArray

    def to_json(self) -> dict:
        return {"d": self.d, "dots": self.dots.to_json(), "g": self.g}


@dataclass(frozen=True)
class PiPrime:
    """The confined permutation slid by ``(M, N)`` and cut down to ``range(n)``."""
    M: int
    N: int
    d_prime: int
    n: int
    perm: WindowPermutation

    def to_json(self) -> dict:
        return {"M": self.M, "N": self.N, "d_prime": self.d_prime,
                "map": list(self.perm.images), "n": self.n}


@dataclass(frozen=True)
class BNReport:
    input: BNInput
    valid: bool
    reason: str | None = None
    rho: int | None = None
    codim: int | None = None
    nonempty: bool | None = None
    chow: tuple[Fraction, int] | None = None
    point_count: int | None = None
    confined_perm: ZPermutation | None = None
    essential_set: tuple[tuple[int, int], ...] = ()
    pi_prime: PiPrime | None = None
    schubert_smooth: bool | None = None
    dim_coupled_tensors: int | None = None
    singular_strata: tuple[WindowPermutation, ...] | None = None
    singular_strata_cap: int = DEFAULT_STRATA_CAP
    extra: dict = dc_field(default_factory=dict, compare=False)


def _validate(inp: BNInput) -> None:
    if inp.g < 1 or inp.d < 1:
        raise InvalidInput(f"genus and degree must be positive, got g={inp.g}, d={inp.d}")
    if not inp.dots.dots:
        raise InvalidInput("dot array is empty")
    need = inp.d + 1 - inp.g
    if len(inp.dots) < need:
        raise InvalidInput(
            f"dot array has {len(inp.dots)} dots but at least d+1-g = {need} are required")


def pi_prime(pi: ZPermutation, d: int, g: int, M: int, N: int) -> PiPrime:
    """
    Slide ``pi`` by ``(M, N)`` and restrict to ``[0, n-1]`` with
    ``n = d + M + N + 1 - g``, checking the structural facts used downstream.
    """
    if M < 2 * g - 1 or N < 2 * g - 1:
        raise ValueError(f"M and N must be at least 2g-1 = {2 * g - 1}")
    d_prime = d + M + N
    n = d_prime + 1 - g
    slid = slide(pi, M, N)
    perm = restrict_to_window(slid, 0, n - 1)  # raises unless [0, n-1] is invariant
    inv = perm.inverse()
    start = max(d_prime - (2 * g - 1), 0)
    for i in range(start, n - 1):
        if perm[i] <= perm[i + 1] or inv[i] <= inv[i + 1]:
            raise AssertionError(f"slid permutation not decreasing at {i} on [{start}, {n - 1}]")
    from .dot_array import essential_set_perm
    shifted = {(a + M, b + N) for a, b in essential_set_z(pi)}
    if essential_set_perm(perm) != shifted:
        raise AssertionError("essential set of the slid permutation is not the shifted one")
    return PiPrime(M, N, d_prime, n, perm)


def _codim_perm(pi: ZPermutation, d: int, g: int) -> WindowPermutation:
    """``omega(d-g) * pi`` on its window, as a permutation of ``range(k)``."""
    tau = compose(omega(d - g), pi)
    if not tau.table:
        return WindowPermutation.identity(1)
    return restrict_to_window(tau, tau.lo, tau.hi)


def analyze(inp: BNInput, M: int | None = None, N: int | None = None,
            strata_cap: int = DEFAULT_STRATA_CAP) -> BNReport:
    """
    Dimension, nonemptiness, Theta class and point count of the locus, plus
    the slid permutation and Schubert-side smoothness. ``M`` and ``N``
    default to ``2g - 1``; other admissible values only change ``pi_prime``.
    """
    _validate(inp)
    g, d, dots = inp.g, inp.d, inp.dots
    M = 2 * g - 1 if M is None else M
    N = 2 * g - 1 if N is None else N
    pi = to_confined(dots, d, g)
    w = _codim_perm(pi, d, g)
    codim = w.length()
    if codim != finite_length(compose(omega(d - g), pi)):
        raise AssertionError("window restriction lost inversions")
    rho = rho_of(g, d, dots)
    if rho != g - codim:
        raise AssertionError(f"rho {rho} differs from g - codim = {g - codim}")
    chow = chow_coefficient(w, g)
    in_box = all(a <= d and b <= d for a, b in dots)
    ess = tuple(sorted(essential_set(dots)))
    if not in_box:
        # a dot beyond row or column d forces a vanishing no degree-d bundle has
        if rho >= 0:
            raise AssertionError("dot outside [0, d]^2 but rho >= 0")
        return BNReport(inp, True, None, rho, codim, False, chow, None, pi, ess,
                        None, None, codim, None, strata_cap)
    pp = pi_prime(pi, d, g, M, N)
    strata = None
    if pp.n <= strata_cap:
        strata = tuple(sorted(singular_strata(pp.perm, strata_cap)))
    point_count = reduced_words_count(w) if rho == 0 else None
    if point_count is not None and chow[0] * factorial(g) != point_count:
        raise AssertionError("point count disagrees with the Theta coefficient")
    return BNReport(inp, True, None, rho, codim, rho >= 0, chow, point_count, pi, ess,
                    pp, is_smooth_schubert(pp.perm), codim, strata, strata_cap)


def classical_wrd(g: int, d: int, r: int) -> BNReport:
    """The ordinary locus of degree-d bundles with at least r+1 sections."""
    if r < 0:
        raise InvalidInput("rank must be nonnegative")
    return analyze(BNInput(g, d, DotArray.antidiagonal(r)))


def castelnuovo_oracle(g: int, d: int, r: int) -> int:
    """``g! * prod_{i<=r} i! / (g-d+r+i)!``, valid when the expected dimension is 0."""
    if g - (r + 1) * (g - d + r) != 0:
        raise ValueError("closed formula applies only when the expected dimension is 0")
    value = Fraction(factorial(g))
    for i in range(r + 1):
        value *= Fraction(factorial(i), factorial(g - d + r + i))
    if value.denominator != 1:
        raise ArithmeticError("non-integral count")
    return value.numerator


def invalid_report(inp: BNInput, reason: str) -> BNReport:
    return BNReport(inp, False, reason)


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def report_to_json(report: BNReport) -> dict:
    out = {"input": report.input.to_json(), "valid": report.valid}
    if not report.valid:
        out["reason"] = report.reason
        return out
    pi = report.confined_perm
    out.update({
        "chow": {"coeff": _frac(report.chow[0]), "theta_power": report.chow[1]},
        "codim": report.codim,
        "confined_perm": {"table": list(pi.table), "tail_shift": pi.tail_shift,
                          "window": [pi.lo, pi.hi]},
        "dim_coupled_tensors": report.dim_coupled_tensors,
        "essential_set": [list(p) for p in report.essential_set],
        "nonempty": report.nonempty,
        "pi_prime": None if report.pi_prime is None else report.pi_prime.to_json(),
        "rho": report.rho,
        "schubert_smooth": report.schubert_smooth,
        "singular_strata": (None if report.singular_strata is None
                            else [list(s.images) for s in report.singular_strata]),
        "singular_strata_cap": report.singular_strata_cap,
    })
    if report.point_count is not None:
        out["point_count"] = report.point_count
    return out


def report_from_json(data: dict | str) -> BNReport:
    if isinstance(data, str):
        data = json.loads(data)
    i = data["input"]
    inp = BNInput(int(i["g"]), int(i["d"]), DotArray.from_json(i["dots"]))
    if not data["valid"]:
        return invalid_report(inp, data["reason"])
    cp = data["confined_perm"]
    pi = ZPermutation(cp["tail_shift"], cp["window"][0], cp["window"][1], tuple(cp["table"]))
    pp = data["pi_prime"]
    strata = data["singular_strata"]
    return BNReport(
        inp, True, None, data["rho"], data["codim"], data["nonempty"],
        (Fraction(data["chow"]["coeff"]), data["chow"]["theta_power"]),
        data.get("point_count"), pi,
        tuple(tuple(p) for p in data["essential_set"]),
        None if pp is None else PiPrime(pp["M"], pp["N"], pp["d_prime"], pp["n"],
                                        WindowPermutation(tuple(pp["map"]))),
        data["schubert_smooth"], data["dim_coupled_tensors"],
        None if strata is None else tuple(WindowPermutation(tuple(s)) for s in strata),
        data["singular_strata_cap"],
    )


def dumps(report: BNReport) -> str:
    """Canonical JSON text: sorted keys, two-space indent."""
    return json.dumps(report_to_json(report), sort_keys=True, indent=2)
