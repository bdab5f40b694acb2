"""The protagonist module families: lie, conj, lie2 and their relatives.

Everything here is a Frobenius characteristic built from the single template

    f_n = (1/n) * sum over d | n of psi(d) * p_d^(n/d)

for an arithmetic weight psi.  lie uses the Mobius function, conj the
totient, and the two-adic variant lie2 is defined through Ramanujan sums at
r = two_adic_part(n).  The standard-tableau major-index counter supplies an
independent combinatorial route to the same Schur coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Iterator

from .partitions import (
    check_partition,
    divisors,
    mobius,
    totient,
    two_adic_part,
)
from .symfunc import SymFunc, p, plethysm

__all__ = [
    "Psi",
    "ramanujan_sum",
    "f_from_psi",
    "ell",
    "lie",
    "conj",
    "lie2",
    "lie2_via_lie",
    "lie_via_lie2",
    "standard_tableaux",
    "descent_set",
    "major_index",
    "syt_multiplicity",
    "whitehouse_deficit",
]


def ramanujan_sum(d: int, r: int) -> int:
    """Sum of the r-th powers of the primitive d-th roots of unity.

    Closed form: phi(d) * mu(d/(d,r)) / phi(d/(d,r)), always an integer.
    """
    if d < 1 or r < 1:
        raise ValueError("ramanujan_sum needs d, r >= 1")
    q = d // gcd(d, r)
    num = totient(d) * mobius(q)
    den = totient(q)
    assert num % den == 0
    return num // den


def _odd_part(n: int) -> int:
    return n // two_adic_part(n)


@dataclass(frozen=True)
class Psi:
    """Named arithmetic weight for the f_n template.

    psi(1) fixes the dimension (n-1)! * psi(1) of f_n.  A custom finite
    table supports future row-sum variants without new code.
    """

    name: str
    fn: Callable[[int], int]

    def __call__(self, d: int) -> int:
        return self.fn(d)

    @classmethod
    def mobius(cls) -> "Psi":
        return cls("mobius", mobius)

    @classmethod
    def totient(cls) -> "Psi":
        return cls("totient", totient)

    @classmethod
    def ramanujan(cls, r: int) -> "Psi":
        return cls(f"ramanujan({r})", lambda d: ramanujan_sum(d, r))

    @classmethod
    def two_adic(cls) -> "Psi":
        # phi on the 2-part times mu on the odd part; this is what
        # ramanujan_sum(d, two_adic_part(n)) collapses to for every d | n,
        # making lie2 an instance of the f_n template with one fixed psi.
        return cls("two_adic", lambda d: totient(two_adic_part(d)) * mobius(_odd_part(d)))

    @classmethod
    def from_table(cls, table: dict[int, int], name: str = "custom") -> "Psi":
        def fn(d: int) -> int:
            if d not in table:
                raise KeyError(f"psi table has no entry for d={d}")
            return table[d]

        return cls(name, fn)


def f_from_psi(psi: Psi | Callable[[int], int], n: int) -> SymFunc:
    """(1/n) * sum over d | n of psi(d) * p_d^(n/d)."""
    if n < 1:
        raise ValueError("f_from_psi needs n >= 1")
    terms = {}
    for d in divisors(n):
        c = Fraction(psi(d), n)
        if c:
            terms[(d,) * (n // d)] = c
    return SymFunc(terms)


def ell(n: int, r: int) -> SymFunc:
    """Characteristic of the cyclic-group character at exponent r, induced up.

    (1/n) * sum over d | n of c_d(r) * p_d^(n/d), c_d the Ramanujan sum.
    """
    if not 1 <= r <= n:
        raise ValueError("ell needs 1 <= r <= n")
    return f_from_psi(lambda d: ramanujan_sum(d, r), n)


def lie(n: int) -> SymFunc:
    """Multilinear free-Lie-algebra character: psi = mobius."""
    return f_from_psi(Psi.mobius(), n)


def conj(n: int) -> SymFunc:
    """Conjugacy action on n-cycles: psi = totient."""
    return f_from_psi(Psi.totient(), n)


def lie2(n: int) -> SymFunc:
    """The two-adic variant: ell(n, two_adic_part(n)).

    The odd / power-of-two / twice-odd trichotomy (= lie, conj, omega(lie))
    is a consequence checked in tests, not the definition.
    """
    return ell(n, two_adic_part(n))


def lie2_via_lie(n: int) -> SymFunc:
    """Degree-n term of sum over k >= 0 of lie composed with p_{2^k}."""
    if n < 1:
        raise ValueError("n >= 1 required")
    total = SymFunc.zero()
    k = 1
    while k <= n:
        if n % k == 0:
            total = total + plethysm(lie(n // k), p(k))
        k *= 2
    return total


def lie_via_lie2(n: int) -> SymFunc:
    """Degree-n term of lie2 - lie2 composed with p_2."""
    if n < 1:
        raise ValueError("n >= 1 required")
    out = lie2(n)
    if n % 2 == 0:
        out = out - plethysm(lie2(n // 2), p(2))
    return out


# -- standard Young tableaux ---------------------------------------------------


def standard_tableaux(shape: tuple) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All standard tableaux of the given shape, as tuples of rows.

    Exhaustive backtracking: entries 1..n are placed in increasing order, so
    rows and columns are strictly increasing by construction.
    """
    shape = check_partition(tuple(shape))
    n = sum(shape)
    if n == 0:
        yield ()
        return
    rows: list[list[int]] = [[] for _ in shape]

    def place(value: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if value > n:
            yield tuple(tuple(row) for row in rows)
            return
        for i, row in enumerate(rows):
            if len(row) < shape[i] and (i == 0 or len(rows[i - 1]) > len(row)):
                row.append(value)
                yield from place(value + 1)
                row.pop()

    yield from place(1)


def descent_set(tab: tuple[tuple[int, ...], ...]) -> set[int]:
    """{i : i+1 sits in a strictly lower row than i}."""
    row_of = {}
    for i, row in enumerate(tab):
        for v in row:
            row_of[v] = i
    n = len(row_of)
    return {i for i in range(1, n) if row_of[i + 1] > row_of[i]}


def major_index(tab: tuple[tuple[int, ...], ...]) -> int:
    return sum(descent_set(tab))


def syt_multiplicity(lam: tuple, r: int) -> int:
    """Number of standard tableaux of shape lam with maj congruent to r mod n.

    Equals the s_lam coefficient of ell(n, r); the two computations are kept
    independent so each can check the other.
    """
    lam = check_partition(tuple(lam))
    n = sum(lam)
    if not 1 <= r <= n:
        raise ValueError("syt_multiplicity needs 1 <= r <= n")
    count = 0
    for tab in standard_tableaux(lam):
        if major_index(tab) % n == r % n:
            count += 1
    return count


def whitehouse_deficit(n: int, family: str = "lie") -> SymFunc:
    """p_1 * family(n-1) - family(n): the lifting obstruction at degree n."""
    if n < 2:
        raise ValueError("whitehouse_deficit needs n >= 2")
    build = {"lie": lie, "lie2": lie2}.get(family)
    if build is None:
        raise ValueError("family must be 'lie' or 'lie2'")
    return p(1) * build(n - 1) - build(n)
