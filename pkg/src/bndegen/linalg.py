"""
Exact row reduction over Q and over prime fields.

Matrices are lists of rows. Over Q the entries are Fractions; over F_p they
are ints in ``range(p)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Field", "QQ", "GF", "field_from_spec", "SplitMix64",
    "rref", "rank", "nullspace_left", "intersect", "span_contains", "extend_basis",
]

MAX_PRIME = 2**31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Field:
    """Q when ``p`` is None, otherwise the prime field F_p."""
    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not (_is_prime(self.p) and self.p < MAX_PRIME):
            raise ValueError(f"F_p needs a prime p < 2^31, got {self.p}")

    @property
    def name(self) -> str:
        return "Q" if self.p is None else f"F_{self.p}"

    def __call__(self, x):
        """Coerce an int, Fraction or ``"p/q"`` string into the field."""
        if isinstance(x, str):
            x = Fraction(x)
        if self.p is not None and isinstance(x, int):
            return x % self.p
        if self.p is None:
            return Fraction(x)
        x = Fraction(x)
        return (x.numerator * pow(x.denominator, -1, self.p)) % self.p

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero in field")
        if self.p is None:
            return a / b
        return (a * pow(b, -1, self.p)) % self.p

    def random(self, rng: SplitMix64, bound: int = 9):
        """Uniform element of F_p, or an integer in [-bound, bound] for Q."""
        if self.p is None:
            return Fraction(rng.below(2 * bound + 1) - bound)
        return rng.below(self.p)

    def to_json(self, x):
        if self.p is None:
            x = Fraction(x)
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return int(x)

    def spec(self) -> str:
        return "q" if self.p is None else str(self.p)


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)


def field_from_spec(text) -> Field:
    """``"q"`` for the rationals, a prime (optionally ``"prime 101"``) for F_p."""
    if isinstance(text, int):
        return GF(text)
    t = str(text).strip().lower()
    if t in ("q", "qq", "rational", "rationals"):
        return QQ
    for prefix in ("prime", "f_", "gf"):
        if t.startswith(prefix):
            t = t[len(prefix):].strip(" :=()")
    return GF(int(t))


class SplitMix64:
    """
    The SplitMix64 generator: ``state += 0x9E3779B97F4A7C15`` then a
    xor-shift-multiply finaliser. Fixed here so seeds reproduce anywhere.
    """
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        """Uniform integer in ``range(k)`` by rejection."""
        if k <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % k)
        while True:
            x = self.next()
            if x < limit:
                return x % k


def rref(rows, field: Field) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and the pivot columns. Zero rows are dropped."""
    m = [[field(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        # exact arithmetic: any nonzero pivot is fine
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        m[r] = [field.div(x, lead) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, field: Field) -> int:
    return len(rref(rows, field)[1])


def nullspace_left(rows, field: Field) -> list[list]:
    """Basis of ``{z : z M = 0}`` for the matrix ``M`` with the given rows."""
    if not rows:
        return []
    k, ncols = len(rows), len(rows[0])
    transposed = [[rows[i][j] for i in range(k)] for j in range(ncols)]
    red, pivots = rref(transposed, field)
    free = [j for j in range(k) if j not in pivots]
    basis = []
    for f in free:
        z = [field(0)] * k
        z[f] = field(1)
        for row, pc in zip(red, pivots):
            z[pc] = field.sub(field(0), row[f])
        basis.append(z)
    return basis


def intersect(u_rows, v_rows, field: Field, n: int) -> list[list]:
    """Basis (as rows) of the intersection of the row spans of ``u_rows`` and ``v_rows``."""
    if not u_rows or not v_rows:
        return []
    stacked = list(u_rows) + list(v_rows)
    out = []
    for z in nullspace_left(stacked, field):
        vec = [field(0)] * n
        for coeff, row in zip(z[:len(u_rows)], u_rows):
            if coeff:
                vec = [field.add(a, field.mul(coeff, field(b))) for a, b in zip(vec, row)]
        out.append(vec)
    red, _ = rref(out, field)
    return red


def span_contains(basis_rows, vectors, field: Field) -> bool:
    """Whether every vector lies in the row span of ``basis_rows``."""
    base = rank(basis_rows, field)
    return rank(list(basis_rows) + list(vectors), field) == base


def extend_basis(current, candidates, field: Field, count: int) -> list:
    """Pick ``count`` vectors from ``candidates`` independent modulo ``current``."""
    chosen = []
    span = list(current)
    r = rank(span, field)
    for v in candidates:
        if len(chosen) == count:
            break
        if rank(span + [v], field) > r:
            span.append(v)
            chosen.append(v)
            r += 1
    if len(chosen) != count:
        raise ArithmeticError("could not extend basis; subspaces inconsistent")
    return chosen
