"""Exact symmetric functions in the power-sum basis.

A SymFunc is a finite map from partitions to Fraction coefficients, read as
sum of c_lambda * p_lambda.  Everything is exact; there is no floating point
anywhere in this package.  The power-sum basis is the single internal
representation because plethysm and omega act monomially on it; h, e and
Schur functions are conversion views.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Mapping, Union

from .partitions import check_partition, format_partition, partitions_of, z_of

Scalar = Union[int, Fraction]

__all__ = [
    "SymFunc",
    "p",
    "h",
    "e",
    "s",
    "plethysm",
    "hall_inner",
    "mul_trunc",
]


def _merge(lam: tuple, mu: tuple) -> tuple:
    """Multiset union of two partitions, sorted decreasing."""
    return tuple(sorted(lam + mu, reverse=True))


class SymFunc:
    """Immutable sparse symmetric function in the p-basis.

    Zero coefficients are never stored.  Instances may be inhomogeneous;
    per-degree slices come from homogeneous_part().
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple, Scalar] | None = None):
        data: dict[tuple, Fraction] = {}
        if terms:
            for lam, c in terms.items():
                c = Fraction(c)
                if c:
                    data[check_partition(lam)] = c
        self._terms = data

    @classmethod
    def _raw(cls, data: dict[tuple, Fraction]) -> "SymFunc":
        # internal constructor: data already validated, no zeros
        obj = object.__new__(cls)
        obj._terms = data
        return obj

    @classmethod
    def zero(cls) -> "SymFunc":
        return cls._raw({})

    @classmethod
    def one(cls) -> "SymFunc":
        return cls._raw({(): Fraction(1)})

    # -- access ----------------------------------------------------------

    def coeff(self, lam: tuple) -> Fraction:
        return self._terms.get(lam, Fraction(0))

    def items(self) -> Iterator[tuple[tuple, Fraction]]:
        """Terms in canonical order: by degree, then reverse-lex."""
        return iter(sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), tuple(-x for x in kv[0]))))

    def support(self) -> Iterable[tuple]:
        return self._terms.keys()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, SymFunc):
            return self._terms == other._terms
        return NotImplemented

    __hash__ = None  # mutable-dict backed; compare by value only

    def degrees(self) -> set[int]:
        return {sum(lam) for lam in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Degree of a nonzero homogeneous function."""
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError("degree() needs a nonzero homogeneous function")
        return next(iter(degs))

    def homogeneous_part(self, n: int) -> "SymFunc":
        return SymFunc._raw({lam: c for lam, c in self._terms.items() if sum(lam) == n})

    def truncate(self, cap: int) -> "SymFunc":
        return SymFunc._raw({lam: c for lam, c in self._terms.items() if sum(lam) <= cap})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if not isinstance(other, SymFunc):
            return NotImplemented
        data = dict(self._terms)
        for lam, c in other._terms.items():
            new = data.get(lam, Fraction(0)) + c
            if new:
                data[lam] = new
            else:
                data.pop(lam, None)
        return SymFunc._raw(data)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        if not isinstance(other, SymFunc):
            return NotImplemented
        data = dict(self._terms)
        for lam, c in other._terms.items():
            new = data.get(lam, Fraction(0)) - c
            if new:
                data[lam] = new
            else:
                data.pop(lam, None)
        return SymFunc._raw(data)

    def __neg__(self) -> "SymFunc":
        return SymFunc._raw({lam: -c for lam, c in self._terms.items()})

    def scale(self, c: Scalar) -> "SymFunc":
        c = Fraction(c)
        if not c:
            return SymFunc.zero()
        return SymFunc._raw({lam: c * v for lam, v in self._terms.items()})

    def __mul__(self, other) -> "SymFunc":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, SymFunc):
            return NotImplemented
        data: dict[tuple, Fraction] = {}
        for lam, a in self._terms.items():
            for mu, b in other._terms.items():
                key = _merge(lam, mu)
                new = data.get(key, Fraction(0)) + a * b
                if new:
                    data[key] = new
                else:
                    del data[key]
        return SymFunc._raw(data)

    def __rmul__(self, other) -> "SymFunc":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "SymFunc":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        out = SymFunc.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- the classical operators -------------------------------------------

    def omega(self) -> "SymFunc":
        """Sign-twist involution: p_lambda -> (-1)^(|lambda|-l(lambda)) p_lambda."""
        return SymFunc._raw(
            {lam: c if (sum(lam) - len(lam)) % 2 == 0 else -c for lam, c in self._terms.items()}
        )

    def partial_p1(self) -> "SymFunc":
        """Formal derivative with respect to p_1 (= restriction on characteristics)."""
        data: dict[tuple, Fraction] = {}
        for lam, c in self._terms.items():
            m1 = 0
            for part in reversed(lam):
                if part != 1:
                    break
                m1 += 1
            if not m1:
                continue
            key = lam[:-1]
            new = data.get(key, Fraction(0)) + m1 * c
            if new:
                data[key] = new
            else:
                del data[key]
        return SymFunc._raw(data)

    def point_specialize(self, t: Scalar) -> Fraction:
        """Substitute p_k -> t for every k, so p_lambda -> t^l(lambda).

        Only defined per homogeneous degree; inhomogeneous input is rejected
        rather than silently summed.
        """
        if not self.is_homogeneous():
            raise ValueError("point_specialize needs homogeneous input")
        t = Fraction(t)
        return sum((c * t ** len(lam) for lam, c in self._terms.items()), Fraction(0))

    def dimension(self) -> Fraction:
        """<f, p_1^n> for homogeneous f of degree n: the virtual dimension."""
        if not self:
            return Fraction(0)
        n = self.degree()
        return factorial(n) * self.coeff((1,) * n)

    # -- serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        """Wire form shared with the CLI."""
        return {
            "basis": "p",
            "terms": [
                {"partition": list(lam), "coeff": str(c)} for lam, c in self.items()
            ],
        }

    @classmethod
    def from_dict(cls, payload: Mapping) -> "SymFunc":
        if payload.get("basis") != "p":
            raise ValueError("expected a p-basis payload")
        terms: dict[tuple, Fraction] = {}
        for entry in payload["terms"]:
            lam = check_partition(tuple(entry["partition"]))
            terms[lam] = terms.get(lam, Fraction(0)) + Fraction(entry["coeff"])
        return cls(terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        bits = []
        for lam, c in self.items():
            bits.append(f"{c}*p{format_partition(lam)}")
        return " + ".join(bits)


# -- basis constructors -------------------------------------------------------


def p(lam) -> SymFunc:
    """Power-sum p_lambda; accepts a partition tuple or a single part."""
    if isinstance(lam, int):
        lam = (lam,)
    lam = check_partition(tuple(lam))
    return SymFunc._raw({lam: Fraction(1)})


@lru_cache(maxsize=None)
def h(n: int) -> SymFunc:
    """Complete homogeneous h_n = sum over lambda of p_lambda / z_lambda."""
    if n < 0:
        raise ValueError("h(n) needs n >= 0")
    return SymFunc._raw({lam: Fraction(1, z_of(lam)) for lam in partitions_of(n)})


@lru_cache(maxsize=None)
def e(n: int) -> SymFunc:
    """Elementary e_n = sum over lambda of (-1)^(n-l(lambda)) p_lambda / z_lambda."""
    if n < 0:
        raise ValueError("e(n) needs n >= 0")
    return SymFunc._raw(
        {
            lam: Fraction((-1) ** ((n - len(lam)) % 2), z_of(lam))
            for lam in partitions_of(n)
        }
    )


def s(lam) -> SymFunc:
    """Schur function via characters: s_lam = sum_mu chi^lam(mu) p_mu / z_mu."""
    from . import schur  # character machinery lives there

    lam = check_partition(tuple(lam))
    n = sum(lam)
    table = schur.character_table(n)
    return SymFunc(
        {mu: Fraction(table.chi(lam, mu), z_of(mu)) for mu in partitions_of(n)}
    )


# -- bilinear / composition operators ----------------------------------------


def mul_trunc(a: SymFunc, b: SymFunc, cap: int) -> SymFunc:
    """Product with all terms of degree > cap dropped."""
    data: dict[tuple, Fraction] = {}
    b_by_deg: dict[int, list[tuple[tuple, Fraction]]] = {}
    for mu, c in b._terms.items():
        b_by_deg.setdefault(sum(mu), []).append((mu, c))
    for lam, ca in a._terms.items():
        da = sum(lam)
        if da > cap:
            continue
        for db, entries in b_by_deg.items():
            if da + db > cap:
                continue
            for mu, cb in entries:
                key = _merge(lam, mu)
                new = data.get(key, Fraction(0)) + ca * cb
                if new:
                    data[key] = new
                else:
                    del data[key]
    return SymFunc._raw(data)


def _p_k_of(g: SymFunc, k: int) -> SymFunc:
    """p_k composed with g: replace every p_m by p_{km}, coefficients fixed."""
    if k == 1:
        return g
    return SymFunc._raw(
        {tuple(part * k for part in lam): c for lam, c in g._terms.items()}
    )


def plethysm(f: SymFunc, g: SymFunc, cap: int | None = None) -> SymFunc:
    """Plethysm f o g, optionally truncated to total degree <= cap.

    g must have no degree-0 term (composition into a series with constant
    term is undefined here).  Bilinear in f; in g only power sums distribute.
    """
    if g.coeff(()):
        raise ValueError("plethysm: right argument has a degree-0 term")
    pk_cache: dict[int, SymFunc] = {}

    def pk(k: int) -> SymFunc:
        out = pk_cache.get(k)
        if out is None:
            out = _p_k_of(g, k)
            if cap is not None:
                out = out.truncate(cap)
            pk_cache[k] = out
        return out

    total: dict[tuple, Fraction] = {}
    for lam, c in f._terms.items():
        if cap is not None and sum(lam) > cap:
            continue
        term = SymFunc.one()
        for part in lam:
            term = mul_trunc(term, pk(part), cap) if cap is not None else term * pk(part)
            if not term:
                break
        for mu, v in term._terms.items():
            new = total.get(mu, Fraction(0)) + c * v
            if new:
                total[mu] = new
            else:
                del total[mu]
    return SymFunc._raw(total)


def hall_inner(f: SymFunc, g: SymFunc) -> Fraction:
    """Hall pairing: <p_lam, p_mu> = delta z_lam, extended bilinearly."""
    if len(f._terms) > len(g._terms):
        f, g = g, f
    total = Fraction(0)
    for lam, c in f._terms.items():
        d = g._terms.get(lam)
        if d is not None:
            total += c * d * z_of(lam)
    return total
