"""
Schubert polynomials with exact rational coefficients.

Two independent constructions of the single Schubert polynomial are provided:
the reduced-word sum over compatible sequences (Billey-Jockusch-Stanley) and
descent by divided differences from ``x1^(n-1) x2^(n-2) ... x(n-1)``. Double
Schubert polynomials descend from ``prod_{i+j<=n} (x_i - y_j)``.

Variables are 1-indexed (``x1, x2, ...``); permutations stay 0-indexed.

>>> from bndegen.perm_core import WindowPermutation as W
>>> str(bjs_schubert(W((1, 2, 0))))
'x1*x2'
>>> str(double_schubert(W((1, 0))))
'x1 - y1'
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Mapping

from .bruhat import reduced_words, reduced_words_count, DEFAULT_WORD_CAP
from .perm_core import WindowPermutation

__all__ = [
    "SparsePoly", "bjs_schubert", "divided_difference", "schubert_via_divided_diff",
    "double_schubert", "exponential_substitution", "chow_coefficient",
    "compatible_sequences",
]

DEFAULT_DD_CAP = 7
DEFAULT_DOUBLE_CAP = 6

Monomial = tuple[tuple[int, ...], tuple[int, ...]]


def _trim(exps) -> tuple[int, ...]:
    exps = list(exps)
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


def _pad(exps: tuple[int, ...], k: int) -> list[int]:
    return list(exps) + [0] * (k - len(exps))


@dataclass(frozen=True)
class SparsePoly:
    """
    Polynomial in ``x1, x2, ...`` and ``y1, y2, ...`` over Q.

    ``terms`` maps ``(x_exponents, y_exponents)`` to nonzero Fractions; exponent
    tuples carry no trailing zeros.
    """
    terms: Mapping[Monomial, Fraction]

    def __post_init__(self):
        clean: dict[Monomial, Fraction] = {}
        for (xe, ye), c in self.terms.items():
            c = Fraction(c)
            if c:
                key = (_trim(xe), _trim(ye))
                clean[key] = clean.get(key, Fraction(0)) + c
                if not clean[key]:
                    del clean[key]
        object.__setattr__(self, "terms", clean)

    @classmethod
    def const(cls, c) -> SparsePoly:
        return cls({((), ()): Fraction(c)})

    @classmethod
    def x(cls, i: int) -> SparsePoly:
        return cls({(_unit(i), ()): Fraction(1)})

    @classmethod
    def y(cls, j: int) -> SparsePoly:
        return cls({((), _unit(j)): Fraction(1)})

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.const(other)
        return isinstance(other, SparsePoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: SparsePoly) -> SparsePoly:
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + c
        return SparsePoly(terms)

    def __neg__(self) -> SparsePoly:
        return SparsePoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: SparsePoly) -> SparsePoly:
        return self + (-other)

    def __mul__(self, other) -> SparsePoly:
        if isinstance(other, (int, Fraction)):
            return SparsePoly({k: c * other for k, c in self.terms.items()})
        terms: dict[Monomial, Fraction] = {}
        for (xa, ya), ca in self.terms.items():
            for (xb, yb), cb in other.terms.items():
                key = (_add_exps(xa, xb), _add_exps(ya, yb))
                terms[key] = terms.get(key, Fraction(0)) + ca * cb
        return SparsePoly(terms)

    __rmul__ = __mul__

    def num_x(self) -> int:
        return max((len(xe) for xe, _ in self.terms), default=0)

    def num_y(self) -> int:
        return max((len(ye) for _, ye in self.terms), default=0)

    def degree(self) -> int:
        return max((sum(xe) + sum(ye) for xe, ye in self.terms), default=0)

    def is_homogeneous(self, degree: int) -> bool:
        return all(sum(xe) + sum(ye) == degree for xe, ye in self.terms)

    def swap_x(self, i: int) -> SparsePoly:
        """Exchange ``x_i`` and ``x_(i+1)``."""
        terms = {}
        for (xe, ye), c in self.terms.items():
            e = _pad(xe, i + 1)
            e[i - 1], e[i] = e[i], e[i - 1]
            terms[(tuple(e), ye)] = c
        return SparsePoly(terms)

    def swap_blocks(self) -> SparsePoly:
        """Exchange the roles of the x and y variables."""
        return SparsePoly({(ye, xe): c for (xe, ye), c in self.terms.items()})

    def scale_variables(self, factor: int) -> SparsePoly:
        """Substitute ``x_i -> factor*x_i`` and ``y_j -> factor*y_j``."""
        return SparsePoly({(xe, ye): c * Fraction(factor) ** (sum(xe) + sum(ye))
                           for (xe, ye), c in self.terms.items()})

    def set_y_zero(self) -> SparsePoly:
        return SparsePoly({(xe, ()): c for (xe, ye), c in self.terms.items() if not any(ye)})

    def truncate_x(self, g: int) -> SparsePoly:
        """Set ``x_(g+1), x_(g+2), ...`` to zero."""
        return SparsePoly({(xe, ye): c for (xe, ye), c in self.terms.items() if not any(xe[g:])})

    def is_symmetric_in(self, g: int) -> bool:
        """Invariance under the adjacent swaps of ``x1 .. xg``."""
        return all(self.swap_x(i) == self for i in range(1, g))

    def coefficient(self, x_exps=(), y_exps=()) -> Fraction:
        return self.terms.get((_trim(x_exps), _trim(y_exps)), Fraction(0))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Highest total degree first, ties broken lexicographically (largest exponents first)."""
        kx, ky = self.num_x(), self.num_y()

        def key(item):
            (xe, ye), _ = item
            exps = _pad(xe, kx) + _pad(ye, ky)
            return (-sum(exps), [-e for e in exps])
        return sorted(self.terms.items(), key=key)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (xe, ye), c in self.sorted_terms():
            factors = [_power(f"x{i + 1}", e) for i, e in enumerate(xe) if e]
            factors += [_power(f"y{j + 1}", e) for j, e in enumerate(ye) if e]
            mag = abs(c)
            if not factors:
                body = _frac(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([_frac(mag)] + factors)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __repr__ = __str__


def _unit(i: int) -> tuple[int, ...]:
    if i < 1:
        raise ValueError("variables are 1-indexed")
    return (0,) * (i - 1) + (1,)


def _add_exps(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    k = max(len(a), len(b))
    return tuple(u + v for u, v in zip(_pad(a, k), _pad(b, k)))


def _power(var: str, e: int) -> str:
    return var if e == 1 else f"{var}^{e}"


def _frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def compatible_sequences(word: tuple[int, ...]) -> list[tuple[int, ...]]:
    """
    Sequences ``i`` with ``i_1 <= ... <= i_l``, ``i_j <= word_j`` and
    ``i_j < i_(j+1)`` wherever ``word_j < word_(j+1)``; ``word`` is 1-indexed.
    """
    out: list[tuple[int, ...]] = []
    length = len(word)

    def extend(prefix: list[int]):
        j = len(prefix)
        if j == length:
            out.append(tuple(prefix))
            return
        low = 1
        if j:
            low = prefix[-1] + (1 if word[j - 1] < word[j] else 0)
        for v in range(low, word[j] + 1):
            prefix.append(v)
            extend(prefix)
            prefix.pop()

    extend([])
    return out


@lru_cache(maxsize=1024)
def bjs_schubert(w: WindowPermutation, cap: int = DEFAULT_WORD_CAP) -> SparsePoly:
    """Sum over reduced words ``a`` and compatible sequences ``i`` of ``x_{i_1} ... x_{i_l}``."""
    terms: dict[Monomial, Fraction] = {}
    for word in reduced_words(w, cap=cap):
        # transposition letters are 0-indexed; the compatibility bound is 1-indexed
        word1 = tuple(a + 1 for a in word)
        for seq in compatible_sequences(word1):
            exps = [0] * (max(seq, default=0))
            for i in seq:
                exps[i - 1] += 1
            key = (tuple(exps), ())
            terms[key] = terms.get(key, Fraction(0)) + 1
    return SparsePoly(terms)


def divided_difference(p: SparsePoly, i: int) -> SparsePoly:
    """``(p - s_i p) / (x_i - x_(i+1))`` in the x variables."""
    if i < 1:
        raise ValueError("divided differences are 1-indexed")
    # each monomial pair x_i^a x_(i+1)^b - x_i^b x_(i+1)^a divides exactly:
    # for a > b it is x_i^b x_(i+1)^b (x_i^(a-b) - x_(i+1)^(a-b)), and
    # (u^k - v^k)/(u - v) = sum_{t<k} u^(k-1-t) v^t
    terms: dict[Monomial, Fraction] = {}
    for (xe, ye), c in p.terms.items():
        e = _pad(xe, i + 1)
        a, b = e[i - 1], e[i]
        if a == b:
            continue
        sign = 1 if a > b else -1
        low, k = min(a, b), abs(a - b)
        for t in range(k):
            f = list(e)
            f[i - 1] = low + k - 1 - t
            f[i] = low + t
            key = (_trim(f), ye)
            terms[key] = terms.get(key, Fraction(0)) + sign * c
    return SparsePoly(terms)


def _top_single(n: int) -> SparsePoly:
    return SparsePoly({(tuple(range(n - 1, -1, -1)), ()): Fraction(1)})


def _top_double(n: int) -> SparsePoly:
    p = SparsePoly.const(1)
    for i in range(1, n):
        for j in range(1, n + 1 - i):
            p = p * (SparsePoly.x(i) - SparsePoly.y(j))
    return p


def _descend(w: WindowPermutation, top) -> SparsePoly:
    """
    Walk up from ``w`` to the longest element by fixing ascents, then apply
    divided differences on the way back down.
    """
    path = []
    u = w
    while True:
        ascents = [i for i in range(u.n - 1) if u[i] < u[i + 1]]
        if not ascents:
            break
        i = ascents[0]
        path.append(i)
        u = u.swap(i)
    p = top(w.n)
    for i in reversed(path):
        p = divided_difference(p, i + 1)
    return p


@lru_cache(maxsize=1024)
def schubert_via_divided_diff(w: WindowPermutation, cap: int = DEFAULT_DD_CAP) -> SparsePoly:
    """Schubert polynomial by divided differences from the longest element."""
    if w.n > cap:
        raise ValueError(f"n = {w.n} exceeds the divided-difference cap {cap}")
    return _descend(w, _top_single)


@lru_cache(maxsize=1024)
def double_schubert(w: WindowPermutation, cap: int = DEFAULT_DOUBLE_CAP) -> SparsePoly:
    """Double Schubert polynomial by divided differences in x."""
    if w.n > cap:
        raise ValueError(f"n = {w.n} exceeds the double Schubert cap {cap}")
    return _descend(w, _top_double)


def exponential_substitution(p: SparsePoly, g: int) -> dict[int, Fraction]:
    """
    Evaluate a symmetric polynomial in ``x1 .. xg`` under ``e_k -> Theta^k / k!``.

    Every monomial symmetric function other than ``e_k`` evaluates to zero,
    so the coefficient of ``Theta^k`` is the coefficient of ``x1 x2 ... xk``
    divided by ``k!``. Returns ``{k: coefficient}`` with zero entries omitted.
    """
    if p.num_y():
        raise ValueError("exponential substitution expects no y variables")
    if p.num_x() > g:
        raise ValueError(f"polynomial involves variables beyond x{g}; truncate first")
    if not p.is_symmetric_in(g):
        raise ValueError(f"polynomial is not symmetric in x1..x{g}")
    out = {}
    for k in range(g + 1):
        c = p.coefficient((1,) * k)
        if c:
            out[k] = c / factorial(k)
    return out


def chow_coefficient(w: WindowPermutation, g: int) -> tuple[Fraction, int]:
    """
    ``(|R(w)| / l(w)!, l(w))``, the Theta-class coefficient and exponent;
    the coefficient is 0 when ``l(w) > g``.
    """
    length = w.length()
    if length > g:
        return Fraction(0), length
    return Fraction(reduced_words_count(w), factorial(length)), length
