"""
Pairs of flags in an exact vector space and their relative position.

Flags are indexed by corank: the stratum of corank ``a`` has dimension
``n - a``. The relative position of two flags is the permutation ``sigma`` of
``range(n)`` with ``dim P^a & Q^b = #{i >= a : sigma(i) >= b}`` that is
decreasing across corank gaps of ``P`` and whose inverse is decreasing across
corank gaps of ``Q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bruhat import window_rank
from .dot_array import essential_set_perm
from .linalg import Field, QQ, SplitMix64, extend_basis, intersect, rank, rref
from .perm_core import WindowPermutation

__all__ = [
    "Flag", "FlagPair", "meet_dim", "associated_permutation", "adapted_basis",
    "random_flag_pair", "in_degeneracy_locus", "is_compatible", "check_adapted",
    "complete_coranks",
]


def complete_coranks(n: int) -> tuple[int, ...]:
    return tuple(range(n + 1))


@dataclass(frozen=True)
class Flag:
    """Nested subspaces of ``field^n``; ``strata[k]`` spans the corank ``coranks[k]`` piece."""
    n: int
    coranks: tuple[int, ...]
    strata: tuple[tuple[tuple, ...], ...]
    field: Field = QQ

    def __post_init__(self):
        coranks = tuple(self.coranks)
        if list(coranks) != sorted(set(coranks)) or not coranks or coranks[0] != 0:
            raise ValueError("coranks must be strictly increasing and start at 0")
        if coranks[-1] > self.n:
            raise ValueError("corank exceeds the ambient dimension")
        if len(self.strata) != len(coranks):
            raise ValueError("one basis per corank is required")
        strata = tuple(tuple(tuple(self.field(x) for x in row) for row in basis)
                       for basis in self.strata)
        for a, basis in zip(coranks, strata):
            if len(basis) != self.n - a or any(len(row) != self.n for row in basis):
                raise ValueError(f"stratum of corank {a} needs {self.n - a} rows of length {self.n}")
            if rank(basis, self.field) != self.n - a:
                raise ValueError(f"stratum of corank {a} is not of full rank")
        for (a, outer), inner in zip(zip(coranks, strata), strata[1:]):
            if rank(list(outer) + list(inner), self.field) != self.n - a:
                raise ValueError("strata are not nested")
        object.__setattr__(self, "coranks", coranks)
        object.__setattr__(self, "strata", strata)

    def stratum(self, a: int) -> tuple[tuple, ...]:
        if a == self.n:
            return ()
        try:
            return self.strata[self.coranks.index(a)]
        except ValueError:
            raise ValueError(f"corank {a} is not among {self.coranks}") from None

    def to_json(self) -> dict:
        return {
            "coranks": list(self.coranks),
            "strata": [[[self.field.to_json(x) for x in row] for row in basis]
                       for basis in self.strata],
        }

    @classmethod
    def from_json(cls, data: dict, n: int, field: Field) -> Flag:
        strata = tuple(tuple(tuple(field(x) for x in row) for row in basis)
                       for basis in data["strata"])
        return cls(n, tuple(data["coranks"]), strata, field)


@dataclass(frozen=True)
class FlagPair:
    P: Flag
    Q: Flag

    def __post_init__(self):
        if self.P.n != self.Q.n or self.P.field != self.Q.field:
            raise ValueError("flags must live in the same space over the same field")

    @property
    def n(self) -> int:
        return self.P.n

    @property
    def field(self) -> Field:
        return self.P.field

    def to_json(self) -> dict:
        return {"field": self.field.spec(), "n": self.n,
                "P": self.P.to_json(), "Q": self.Q.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> FlagPair:
        from .linalg import field_from_spec
        field = field_from_spec(data["field"])
        n = int(data["n"])
        return cls(Flag.from_json(data["P"], n, field), Flag.from_json(data["Q"], n, field))


def meet_dim(pair: FlagPair, a: int, b: int) -> int:
    """``dim P^a & Q^b`` as ``(n-a) + (n-b) - rank([P^a; Q^b])``."""
    p_rows, q_rows = pair.P.stratum(a), pair.Q.stratum(b)
    n = pair.n
    return (n - a) + (n - b) - rank(list(p_rows) + list(q_rows), pair.field)


def is_compatible(sigma: WindowPermutation, A: Sequence[int], B: Sequence[int]) -> bool:
    """Decreasing across non-coranks of ``A``; inverse decreasing across non-coranks of ``B``."""
    inv = sigma.inverse()
    A, B = set(A), set(B)
    return (all(sigma[a] < sigma[a - 1] for a in range(1, sigma.n) if a not in A)
            and all(inv[b] < inv[b - 1] for b in range(1, sigma.n) if b not in B))


def _with_end(coranks: Sequence[int], n: int) -> list[int]:
    out = list(coranks)
    if out[-1] != n:
        out.append(n)
    return out


def _blocks(pair: FlagPair):
    """Corank lists with ``n`` appended, the meet table and per-block dot counts."""
    n = pair.n
    A, B = _with_end(pair.P.coranks, n), _with_end(pair.Q.coranks, n)
    table = [[meet_dim(pair, a, b) for b in B] for a in A]
    counts = [[table[k][l] - table[k + 1][l] - table[k][l + 1] + table[k + 1][l + 1]
               for l in range(len(B) - 1)] for k in range(len(A) - 1)]
    return A, B, table, counts


def _assign(A, B, counts):
    """Rows and columns of each block, laid out so the dots run antidiagonally."""
    kk, ll = len(A) - 1, len(B) - 1
    rows_of = [[[] for _ in range(ll)] for _ in range(kk)]
    cols_of = [[[] for _ in range(ll)] for _ in range(kk)]
    for k in range(kk):
        rows = iter(range(A[k], A[k + 1]))
        for l in reversed(range(ll)):
            rows_of[k][l] = [next(rows) for _ in range(counts[k][l])]
    for l in range(ll):
        cols = iter(range(B[l], B[l + 1]))
        for k in reversed(range(kk)):
            cols_of[k][l] = [next(cols) for _ in range(counts[k][l])]
    return rows_of, cols_of


def associated_permutation(pair: FlagPair) -> WindowPermutation:
    """Relative position of the two flags, validated against the meet dimensions."""
    n = pair.n
    A, B, table, counts = _blocks(pair)
    if any(c < 0 for row in counts for c in row):
        raise ArithmeticError("meet dimensions are not a rank function")
    try:
        rows_of, cols_of = _assign(A, B, counts)
    except StopIteration:
        raise ArithmeticError("meet dimensions are not a rank function") from None
    images = [None] * n
    for k in range(len(A) - 1):
        for l in range(len(B) - 1):
            for row, col in zip(rows_of[k][l], reversed(cols_of[k][l])):
                images[row] = col
    if None in images:
        raise ArithmeticError("meet dimensions do not determine a permutation")
    sigma = WindowPermutation(tuple(images))
    # validation: conditions of the defining characterisation
    for k, a in enumerate(A):
        for l, b in enumerate(B):
            if window_rank(sigma, a, b) != table[k][l]:
                raise ArithmeticError("reconstructed permutation has the wrong rank table")
    if not is_compatible(sigma, pair.P.coranks, pair.Q.coranks):
        raise ArithmeticError("reconstructed permutation is not compatible with the coranks")
    return sigma


def _meet_basis(pair: FlagPair, a: int, b: int) -> list:
    n = pair.n
    if a >= n or b >= n:
        return []
    return intersect(pair.P.stratum(a), pair.Q.stratum(b), pair.field, n)


def adapted_basis(pair: FlagPair) -> list[list]:
    """
    Basis ``v_0 .. v_(n-1)`` with ``{v_i : i >= a}`` spanning ``P^a`` and
    ``{v_i : sigma(i) >= b}`` spanning ``Q^b``.

    Block ``(k, l)`` contributes vectors of ``P^(A_k) & Q^(B_l)`` that are
    independent modulo ``P^(A_(k+1)) & Q^(B_l) + P^(A_k) & Q^(B_(l+1))``.
    """
    n = pair.n
    sigma = associated_permutation(pair)
    A, B, _, counts = _blocks(pair)
    rows_of, _ = _assign(A, B, counts)
    field = pair.field
    meets = {(k, l): _meet_basis(pair, A[k], B[l])
             for k in range(len(A)) for l in range(len(B))}
    basis = [None] * n
    for k in range(len(A) - 1):
        for l in range(len(B) - 1):
            c = counts[k][l]
            if not c:
                continue
            lower = meets[(k + 1, l)] + meets[(k, l + 1)]
            chosen = extend_basis(lower, meets[(k, l)], field, c)
            for i, v in zip(rows_of[k][l], chosen):
                basis[i] = list(v)
    if not check_adapted(pair, sigma, basis):
        raise ArithmeticError("constructed basis is not adapted")
    return basis


def check_adapted(pair: FlagPair, sigma: WindowPermutation, basis) -> bool:
    """Span checks for every corank of both flags."""
    n, field = pair.n, pair.field
    if any(v is None for v in basis) or rank(basis, field) != n:
        return False
    for a in pair.P.coranks:
        sub = [basis[i] for i in range(a, n)]
        if not _same_span(sub, pair.P.stratum(a), field):
            return False
    for b in pair.Q.coranks:
        sub = [basis[i] for i in range(n) if sigma[i] >= b]
        if not _same_span(sub, pair.Q.stratum(b), field):
            return False
    return True


def _same_span(u, v, field: Field) -> bool:
    if len(u) != len(v):
        return False
    if not u:
        return True
    return rref(u, field)[0] == rref(v, field)[0]


def _random_invertible(k: int, field: Field, rng: SplitMix64) -> list[list]:
    while True:
        m = [[field.random(rng) for _ in range(k)] for _ in range(k)]
        if rank(m, field) == k:
            return m


def _combine(mix, rows, field: Field) -> tuple[tuple, ...]:
    out = []
    for coeffs in mix:
        vec = [field(0)] * len(rows[0])
        for c, row in zip(coeffs, rows):
            if c:
                vec = [field.add(x, field.mul(c, y)) for x, y in zip(vec, row)]
        out.append(tuple(vec))
    return tuple(out)


def random_flag_pair(sigma: WindowPermutation, A: Sequence[int] | None = None,
                     B: Sequence[int] | None = None, field: Field = QQ,
                     seed: int = 0) -> FlagPair:
    """
    Random pair of flags with relative position ``sigma``.

    A random basis ``g_0 .. g_(n-1)`` is drawn; ``P^a`` is spanned by ``g_i``
    for ``i >= a`` and ``Q^b`` by ``g_i`` with ``sigma(i) >= b``, each stratum
    then re-expressed in a random basis. Deterministic in ``seed``.
    """
    n = sigma.n
    A = complete_coranks(n) if A is None else tuple(sorted(set(A)))
    B = complete_coranks(n) if B is None else tuple(sorted(set(B)))
    if A[0] != 0 or B[0] != 0:
        raise ValueError("coranks must include 0")
    if not is_compatible(sigma, A, B):
        raise ValueError(f"{sigma} is not compatible with coranks {A}, {B}")
    rng = SplitMix64(seed)
    g = _random_invertible(n, field, rng)

    def strata(coranks, members):
        out = []
        for c in coranks:
            rows = [g[i] for i in range(n) if members(i, c)]
            if not rows:
                out.append(())
                continue
            out.append(_combine(_random_invertible(len(rows), field, rng), rows, field))
        return tuple(out)

    P = Flag(n, A, strata(A, lambda i, a: i >= a), field)
    Q = Flag(n, B, strata(B, lambda i, b: sigma[i] >= b), field)
    return FlagPair(P, Q)


def in_degeneracy_locus(pair: FlagPair, sigma: WindowPermutation) -> bool:
    """Set-theoretic test ``dim P^a & Q^b >= r_sigma(a, b)`` over the essential set."""
    if sigma.n != pair.n:
        raise ValueError("size mismatch")
    ess = essential_set_perm(sigma)
    missing = [(a, b) for a, b in ess if a not in pair.P.coranks or b not in pair.Q.coranks]
    if missing:
        raise ValueError(f"essential set entries {sorted(missing)} are not available coranks")
    return all(meet_dim(pair, a, b) >= window_rank(sigma, a, b) for a, b in ess)
