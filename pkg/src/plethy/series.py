"""Truncated plethystic series and the derived module constructions.

A Series holds one homogeneous SymFunc per degree 0..cap and, when it came
out of an outer-power operator or a product formula, a second grading by
outer length (the v-marker): slot (n, r) is the piece of degree n sitting
under v^r.  Every operation takes the cap from its inputs and never reads
beyond it; nothing truncates silently.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Iterable

from .partitions import multiplicities, partitions_of
from .symfunc import SymFunc, e, h, mul_trunc, p, plethysm

__all__ = [
    "Series",
    "apply_series",
    "higher_bracket",
    "bracket_sum",
    "series_plethysm",
    "plethystic_inverse",
    "restrict_ge2",
    "product_form",
    "SeriesContext",
    "p_sum_over",
]


class Series:
    """Degree-capped sequence of homogeneous symmetric functions."""

    __slots__ = ("cap", "_parts", "_graded")

    def __init__(
        self,
        cap: int,
        parts: Iterable[SymFunc] | dict[int, SymFunc] | None = None,
        graded: dict[tuple[int, int], SymFunc] | None = None,
    ):
        self.cap = cap
        slots = [SymFunc.zero()] * (cap + 1)
        if isinstance(parts, dict):
            for n, f in parts.items():
                if n <= cap:
                    slots[n] = f
        elif parts is not None:
            for n, f in enumerate(parts):
                if n <= cap:
                    slots[n] = f
        self._parts = slots
        if graded:
            graded = {key: f for key, f in graded.items() if f and key[0] <= cap}
        self._graded = graded or None

    # -- construction ----------------------------------------------------

    @classmethod
    def from_function(cls, cap: int, fn: Callable[[int], SymFunc], start: int = 1) -> "Series":
        return cls(cap, {n: fn(n) for n in range(start, cap + 1)})

    @classmethod
    def from_symfunc(cls, f: SymFunc, cap: int) -> "Series":
        return cls(cap, {n: f.homogeneous_part(n) for n in range(cap + 1)})

    @classmethod
    def one(cls, cap: int) -> "Series":
        return cls(cap, {0: SymFunc.one()}, graded={(0, 0): SymFunc.one()})

    # -- access ----------------------------------------------------------

    def coeff(self, n: int) -> SymFunc:
        if not 0 <= n <= self.cap:
            raise IndexError(f"degree {n} outside cap {self.cap}")
        return self._parts[n]

    @property
    def has_grading(self) -> bool:
        return self._graded is not None

    def graded(self, n: int, r: int) -> SymFunc:
        if self._graded is None:
            raise ValueError("series carries no length grading")
        if not 0 <= n <= self.cap:
            raise IndexError(f"degree {n} outside cap {self.cap}")
        return self._graded.get((n, r), SymFunc.zero())

    def graded_keys(self) -> list[tuple[int, int]]:
        return sorted(self._graded.keys()) if self._graded else []

    def total(self) -> SymFunc:
        out = SymFunc.zero()
        for f in self._parts:
            out = out + f
        return out

    def drop_grading(self) -> "Series":
        return Series(self.cap, dict(enumerate(self._parts)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.cap == other.cap and self._parts == other._parts

    __hash__ = None

    # -- arithmetic --------------------------------------------------------

    def _binary(self, other: "Series", op) -> "Series":
        if self.cap != other.cap:
            raise ValueError("cap mismatch")
        parts = {n: op(self._parts[n], other._parts[n]) for n in range(self.cap + 1)}
        graded = None
        if self._graded is not None and other._graded is not None:
            graded = dict(self._graded)
            for key, f in other._graded.items():
                graded[key] = op(graded.get(key, SymFunc.zero()), f)
        return Series(self.cap, parts, graded)

    def __add__(self, other: "Series") -> "Series":
        return self._binary(other, lambda a, b: a + b)

    def __sub__(self, other: "Series") -> "Series":
        return self._binary(other, lambda a, b: a - b)

    def scale(self, c) -> "Series":
        parts = {n: f.scale(c) for n, f in enumerate(self._parts)}
        graded = None
        if self._graded is not None:
            graded = {key: f.scale(c) for key, f in self._graded.items()}
        return Series(self.cap, parts, graded)

    def __mul__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        if self.cap != other.cap:
            raise ValueError("cap mismatch")
        cap = self.cap
        parts: dict[int, SymFunc] = {}
        for n1, f1 in enumerate(self._parts):
            if not f1:
                continue
            for n2 in range(cap - n1 + 1):
                f2 = other._parts[n2]
                if f2:
                    parts[n1 + n2] = parts.get(n1 + n2, SymFunc.zero()) + f1 * f2
        graded = None
        if self._graded is not None and other._graded is not None:
            graded = {}
            for (n1, r1), f1 in self._graded.items():
                for (n2, r2), f2 in other._graded.items():
                    if n1 + n2 > cap:
                        continue
                    key = (n1 + n2, r1 + r2)
                    graded[key] = graded.get(key, SymFunc.zero()) + f1 * f2
        return Series(cap, parts, graded)

    def reciprocal(self) -> "Series":
        """1/self for a series with constant term 1; result is ungraded."""
        if self._parts[0] != SymFunc.one():
            raise ValueError("reciprocal needs constant term 1")
        inv = [SymFunc.one()]
        for n in range(1, self.cap + 1):
            acc = SymFunc.zero()
            for k in range(1, n + 1):
                if self._parts[k]:
                    acc = acc + self._parts[k] * inv[n - k]
            inv.append(-acc)
        return Series(self.cap, inv)

    def map(self, fn: Callable[[SymFunc], SymFunc]) -> "Series":
        parts = {n: fn(f) for n, f in enumerate(self._parts)}
        graded = None
        if self._graded is not None:
            graded = {key: fn(f) for key, f in self._graded.items()}
        return Series(self.cap, parts, graded)

    def map_by_degree(self, fn: Callable[[int, SymFunc], SymFunc]) -> "Series":
        parts = {n: fn(n, f) for n, f in enumerate(self._parts)}
        graded = None
        if self._graded is not None:
            graded = {key: fn(key[0], f) for key, f in self._graded.items()}
        return Series(self.cap, parts, graded)


# -- the H/E outer operators ----------------------------------------------------


def _outer_powers(base: str, F: Series, cap: int) -> list[SymFunc]:
    """[x_0[F], x_1[F], ...] truncated to degree cap, x in {h, e}.

    Newton recursion r*h_r = sum p_k h_{r-k} (signs for e), pushed through
    the ring endomorphism given by plethysm with F.
    """
    tot = F.total()
    if tot.coeff(()):
        raise ValueError("outer application needs a series with no degree-0 term")
    pk = {k: plethysm(p(k), tot, cap) for k in range(1, cap + 1)}
    out = [SymFunc.one()]
    for r in range(1, cap + 1):
        acc = SymFunc.zero()
        for k in range(1, r + 1):
            piece = pk.get(k)
            if not piece or not out[r - k]:
                continue
            term = mul_trunc(piece, out[r - k], cap)
            if base == "e" and k % 2 == 0:
                term = -term
            acc = acc + term
        out.append(acc.scale(Fraction(1, r)))
    return out


def apply_series(kind: str, F: Series, cap: int | None = None) -> Series:
    """H, E, H^+-, or E^+- applied plethystically to F, with length grading.

    Slot (n, r) is the degree-n part of h_r[F] (resp. e_r[F]), times (-1)^r
    for the signed kinds.
    """
    if cap is None:
        cap = F.cap
    if cap > F.cap:
        raise IndexError(f"cap {cap} exceeds the argument's cap {F.cap}")
    base = {"H": "h", "E": "e", "Hpm": "h", "Epm": "e"}[kind]
    signed = kind.endswith("pm")
    powers = _outer_powers(base, F, cap)
    graded: dict[tuple[int, int], SymFunc] = {}
    parts: dict[int, SymFunc] = {}
    for r, fr in enumerate(powers):
        if signed and r % 2:
            fr = -fr
        for n in fr.degrees():
            piece = fr.homogeneous_part(n)
            graded[(n, r)] = piece
            parts[n] = parts.get(n, SymFunc.zero()) + piece
    return Series(cap, parts, graded)


def higher_bracket(kind: str, lam: tuple, Q: Series) -> SymFunc:
    """H_lam[Q] or E_lam[Q]: product over part values i of x_{m_i}[q_i]."""
    if kind not in ("H", "E"):
        raise ValueError("kind must be 'H' or 'E'")
    if sum(lam) > Q.cap:
        raise IndexError(f"|lam| = {sum(lam)} exceeds series cap {Q.cap}")
    out = SymFunc.one()
    base = h if kind == "H" else e
    for part, m in multiplicities(lam).items():
        qi = Q.coeff(part)
        out = out * plethysm(base(m), qi)
        if not out:
            break
    return out


def bracket_sum(
    kind: str,
    Q: Series,
    cap: int | None = None,
    sign: Callable[[tuple], int] | None = None,
) -> Series:
    """sum over partitions of v^l(lam) * (sign) * bracket, as a graded Series.

    The independent route to apply_series: products of small plethysms
    instead of the Newton recursion.
    """
    if cap is None:
        cap = Q.cap
    graded: dict[tuple[int, int], SymFunc] = {}
    parts: dict[int, SymFunc] = {}
    for n in range(cap + 1):
        for lam in partitions_of(n):
            f = higher_bracket(kind, lam, Q)
            if sign is not None:
                f = f.scale(sign(lam))
            if not f:
                continue
            key = (n, len(lam))
            graded[key] = graded.get(key, SymFunc.zero()) + f
            parts[n] = parts.get(n, SymFunc.zero()) + f
    return Series(cap, parts, graded)


def series_plethysm(F: Series, G: Series, cap: int | None = None) -> Series:
    """F composed with G, degree by degree."""
    if cap is None:
        cap = min(F.cap, G.cap)
    if cap > min(F.cap, G.cap):
        raise IndexError(f"cap {cap} exceeds the arguments' caps {F.cap}, {G.cap}")
    return Series.from_symfunc(plethysm(F.total(), G.total(), cap), cap)


def plethystic_inverse(G: Series, cap: int | None = None) -> Series:
    """The series F with F o G = p_1 = G o F up to the cap."""
    if cap is None:
        cap = G.cap
    if cap > G.cap:
        raise IndexError(f"cap {cap} exceeds the argument's cap {G.cap}")
    g1 = G.coeff(1)
    c = g1.coeff((1,))
    if not c or g1 != p(1).scale(c):
        raise ValueError("plethystic inverse needs an invertible degree-1 term c*p_1")
    gtot = G.total()
    acc = SymFunc.zero()  # F_1 + ... + F_{n-1}
    for n in range(1, cap + 1):
        want = p(1) if n == 1 else SymFunc.zero()
        have = plethysm(acc, gtot, n).homogeneous_part(n) if acc else SymFunc.zero()
        resid = want - have
        # resid = F_n[c * p_1], which scales p_lam by c^l(lam); undo that
        fn = SymFunc({lam: v / c ** len(lam) for lam, v in resid.items()})
        acc = acc + fn
    return Series.from_symfunc(acc, cap)


def restrict_ge2(F: Series) -> Series:
    """Zero the degree-1 slot; only legal when that slot is exactly p_1."""
    if F.coeff(1) != p(1):
        raise ValueError("restrict_ge2 requires degree-1 slot p_1")
    parts = {n: F.coeff(n) for n in range(2, F.cap + 1)}
    return Series(F.cap, parts)


# -- product formulas with a formal v marker ------------------------------------
#
# Exponents here are polynomials in v with rational coefficients, stored as
# coefficient tuples.  (1 +- p_m)^(g(v)) expands through the binomial series
# binom(g, k), itself a polynomial in v.


def _vp_trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


def _vp_add(a, b):
    n = max(len(a), len(b))
    return _vp_trim(
        [
            (a[i] if i < len(a) else Fraction(0)) + (b[i] if i < len(b) else Fraction(0))
            for i in range(n)
        ]
    )


def _vp_mul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _vp_trim(out)


def _vp_scale(a, c):
    c = Fraction(c)
    return _vp_trim([x * c for x in a])


def _vp_sub_negv(a):
    """g(v) -> g(-v)."""
    return _vp_trim([(-x if i % 2 else x) for i, x in enumerate(a)])


def _vp_binom(g, k: int):
    """binom(g, k) = g(g-1)...(g-k+1)/k! as a polynomial in v."""
    out = (Fraction(1),)
    for i in range(k):
        out = _vp_mul(out, _vp_add(g, (Fraction(-i),)))
    return _vp_scale(out, Fraction(1, factorial(k)))


def _psi_poly(psi, m: int):
    """f_m as a polynomial in v: coefficient of v^(m/d) is psi(d)/m."""
    from .partitions import divisors

    coeffs = [Fraction(0)] * (m + 1)
    for d in divisors(m):
        coeffs[m // d] += Fraction(psi(d), m)
    return _vp_trim(coeffs)


_PRODUCT_VARIANTS = {
    # variant: (sign inside the base 1 + sign*p_m, exponent builder)
    "sym": (-1, lambda f: _vp_scale(f, -1)),  # (1-p_m)^(-f_m(v))
    "ext": (-1, lambda f: _vp_sub_negv(f)),  # (1-p_m)^(f_m(-v))
    "alt_ext": (1, lambda f: f),  # (1+p_m)^(f_m(v))
    "alt_sym": (1, lambda f: _vp_scale(_vp_sub_negv(f), -1)),  # (1+p_m)^(-f_m(-v))
    "epm": (-1, lambda f: f),  # (1-p_m)^(f_m(v))
    "hpm": (-1, lambda f: _vp_scale(_vp_sub_negv(f), -1)),  # (1-p_m)^(-f_m(-v))
}


def product_form(psi, variant: str, cap: int) -> Series:
    """Expand prod over m of (1 +- p_m)^(+-f_m(+-v)) as a length-graded Series."""
    try:
        inner_sign, expo = _PRODUCT_VARIANTS[variant]
    except KeyError:
        raise ValueError(f"unknown product variant {variant!r}") from None
    graded: dict[tuple[int, int], SymFunc] = {(0, 0): SymFunc.one()}
    for m in range(1, cap + 1):
        g = expo(_psi_poly(psi, m))
        factor: dict[tuple[int, int], SymFunc] = {}
        for k in range(cap // m + 1):
            binom = _vp_binom(g, k)
            mono = p((m,) * k) if k else SymFunc.one()
            if inner_sign == -1 and k % 2:
                mono = -mono
            for j, cv in enumerate(binom):
                if cv:
                    key = (m * k, j)
                    factor[key] = factor.get(key, SymFunc.zero()) + mono.scale(cv)
        new: dict[tuple[int, int], SymFunc] = {}
        for (n1, r1), f1 in graded.items():
            for (n2, r2), f2 in factor.items():
                if n1 + n2 > cap:
                    continue
                key = (n1 + n2, r1 + r2)
                prod = f1 * f2
                if not prod:
                    continue
                acc = new.get(key, SymFunc.zero()) + prod
                new[key] = acc
        graded = {key: f for key, f in new.items() if f}
    parts: dict[int, SymFunc] = {}
    for (n, _), f in graded.items():
        parts[n] = parts.get(n, SymFunc.zero()) + f
    return Series(cap, parts, graded)


# -- convenience sums over restricted partition classes --------------------------


def p_sum_over(n: int, filter: str = "all", sign: Callable[[tuple], int] | None = None) -> SymFunc:
    """sum of (sign) p_lam over partitions of n passing the named filter."""
    out: dict[tuple, Fraction] = {}
    for lam in partitions_of(n, filter):
        out[lam] = Fraction(sign(lam) if sign else 1)
    return SymFunc(out)


# -- the named constructions, sharing one cache per cap ---------------------------


class SeriesContext:
    """Lazy cache of the standard series and outer applications at one cap."""

    def __init__(self, cap: int):
        if cap < 1:
            raise ValueError("cap must be >= 1")
        self.cap = cap
        self._memo: dict = {}

    def _get(self, key, build):
        val = self._memo.get(key)
        if val is None:
            val = build()
            self._memo[key] = val
        return val

    # base families ------------------------------------------------------

    def lie(self) -> Series:
        from .lie_family import lie

        return self._get("lie", lambda: Series.from_function(self.cap, lie))

    def lie2(self) -> Series:
        from .lie_family import lie2

        return self._get("lie2", lambda: Series.from_function(self.cap, lie2))

    def conj(self) -> Series:
        from .lie_family import conj

        return self._get("conj", lambda: Series.from_function(self.cap, conj))

    def psi_family(self, psi) -> Series:
        from .lie_family import f_from_psi

        return self._get(
            ("psi", psi.name),
            lambda: Series.from_function(self.cap, lambda n: f_from_psi(psi, n)),
        )

    def alt_omega(self, name: str) -> Series:
        """sum of (-1)^(n-1) omega(f_n) for the named family."""

        def build():
            base = self.family(name)
            return base.map_by_degree(
                lambda n, f: f.omega().scale((-1) ** ((n - 1) % 2))
            )

        return self._get(("alt_omega", name), build)

    def family(self, name: str) -> Series:
        builders = {
            "lie": self.lie,
            "lie2": self.lie2,
            "conj": self.conj,
            "lie_ge2": lambda: self._get("lie_ge2", lambda: restrict_ge2(self.lie())),
            "lie2_ge2": lambda: self._get("lie2_ge2", lambda: restrict_ge2(self.lie2())),
        }
        if name.endswith("_alt"):
            return self.alt_omega(name[:-4])
        return builders[name]()

    def app(self, kind: str, name: str) -> Series:
        """Cached apply_series(kind, named family)."""
        return self._get((kind, name), lambda: apply_series(kind, self.family(name)))

    def brackets(self, kind: str, name: str, signed: bool = False) -> Series:
        """Cached bracket_sum over the named family, optionally with the
        (-1)^(|lam| - l(lam)) sign."""
        sign = (lambda lam: (-1) ** ((sum(lam) - len(lam)) % 2)) if signed else None
        return self._get(
            ("brackets", kind, name, signed),
            lambda: bracket_sum(kind, self.family(name), sign=sign),
        )

    def product(self, psi, variant: str) -> Series:
        """Cached product_form for the given weight."""
        return self._get(
            ("product", psi.name, variant), lambda: product_form(psi, variant, self.cap)
        )

    # standard-representation generators ------------------------------------

    def kappa(self) -> Series:
        # s_(n-1,1) = h_(n-1) h_1 - h_n, so no character tables are needed
        def build():
            return Series(
                self.cap,
                {n: h(n - 1) * h(1) - h(n) for n in range(2, self.cap + 1)},
            )

        return self._get("kappa", build)

    def omega_kappa(self) -> Series:
        return self._get("omega_kappa", lambda: self.kappa().map(lambda f: f.omega()))

    def iterate_generator(self, gen: Series, depth: int) -> list[Series]:
        """Partial sums of gen + gen o gen + gen o (gen o gen) + ...

        Term j is the j-fold self-plethysm; with the generator supported in
        degrees >= 2, term j starts at degree 2^j, so the partial sums
        stabilize once 2^depth exceeds the cap.
        """
        sums = []
        term = gen
        acc = gen
        for _ in range(depth):
            sums.append(acc)
            term = series_plethysm(gen, term, self.cap)
            acc = acc + term
        return sums

    # single-value constructions ------------------------------------------

    def whitney(self, n: int, k: int) -> SymFunc:
        """Graded piece k of the partition-lattice invariant: omega(e_(n-k)[lie])|_n."""
        if not 0 <= k <= n - 1:
            raise ValueError("whitney needs 0 <= k <= n-1")
        return self.app("E", "lie").graded(n, n - k).omega()

    def vh(self, n: int, k: int) -> SymFunc:
        """h_(n-k)[lie2]|_n."""
        if not 0 <= k <= n - 1:
            raise ValueError("vh needs 0 <= k <= n-1")
        return self.app("H", "lie2").graded(n, n - k)

    def u(self, n: int, k: int) -> SymFunc:
        """Truncated alternating sum vh(n,k) - vh(n,k-1) + ... +- vh(n,0)."""
        out = SymFunc.zero()
        for j in range(k + 1):
            term = self.vh(n, j)
            out = out + (term if (k - j) % 2 == 0 else -term)
        return out

    def beta_rank(self, n: int, k: int) -> SymFunc:
        """Truncated alternating sum of whitney pieces (rank-selected homology)."""
        out = SymFunc.zero()
        for j in range(k + 1):
            term = self.whitney(n, j)
            out = out + (term if (k - j) % 2 == 0 else -term)
        return out

    def delta(self, n: int) -> SymFunc:
        """Injective-words homology: sum of (-1)^k p_1^(n-k) h_k, 0 <= k <= n."""
        if n == 0:
            return SymFunc.one()
        if n == 1:
            return SymFunc.zero()
        out = SymFunc.zero()
        for k in range(n + 1):
            term = p((1,) * (n - k)) * h(k) if n > k else h(k)
            out = out + (term if k % 2 == 0 else -term)
        return out

    def delta_part(self, n: int, k: int) -> SymFunc:
        """e_k[lie2_(>=2)]|_n."""
        return self.app("E", "lie2_ge2").graded(n, k)

    def hodge_part(self, n: int, k: int) -> SymFunc:
        """h_k[lie_(>=2)]|_n."""
        return self.app("H", "lie_ge2").graded(n, k)

    def g_fn(self, n: int) -> SymFunc:
        """Dimension-zero virtual piece: sum of p_lam, parts powers of 2, no 1s."""
        if n == 0:
            return SymFunc.one()
        return p_sum_over(n, "powers_of_two_and_no_1")

    def sigma(self, n: int) -> SymFunc:
        """One-dimensional virtual character sum of e_(n-2i) g_(2i)."""
        out = SymFunc.zero()
        for i in range(0, n // 2 + 1):
            gpart = self.g_fn(2 * i)
            if gpart:
                out = out + e(n - 2 * i) * gpart
        return out

    def tau(self, n: int) -> SymFunc:
        """h_n - h_(n-2) p_2 (= s_(n-2,1,1) - s_(n-2,2) once n >= 4)."""
        if n < 0:
            raise ValueError("tau needs n >= 0")
        out = h(n)
        if n >= 2:
            out = out - h(n - 2) * p(2)
        return out

    def conj_from(self, family: str) -> Series:
        """sum of p_k[lie] over k >= 1, or p_(2k-1)[lie2] over k >= 1."""

        def build():
            cap = self.cap
            if family == "lie":
                ks = range(1, cap + 1)
                base = self.lie()
            elif family == "lie2":
                ks = range(1, cap + 1, 2)
                base = self.lie2()
            else:
                raise ValueError("family must be 'lie' or 'lie2'")
            tot = base.total()
            out = SymFunc.zero()
            for k in ks:
                out = out + plethysm(p(k), tot, cap)
            return Series.from_symfunc(out, cap)

        return self._get(("conj_from", family), build)


# module-level conveniences for one-off computation (CLI paths)


def _fresh_ctx(n: int) -> SeriesContext:
    return SeriesContext(max(n, 1))


def whitney(n: int, k: int, ctx: SeriesContext | None = None) -> SymFunc:
    return (ctx or _fresh_ctx(n)).whitney(n, k)


def vh(n: int, k: int, ctx: SeriesContext | None = None) -> SymFunc:
    return (ctx or _fresh_ctx(n)).vh(n, k)


def u(n: int, k: int, ctx: SeriesContext | None = None) -> SymFunc:
    return (ctx or _fresh_ctx(n)).u(n, k)


def beta_rank(n: int, k: int, ctx: SeriesContext | None = None) -> SymFunc:
    return (ctx or _fresh_ctx(n)).beta_rank(n, k)


def delta(n: int, ctx: SeriesContext | None = None) -> SymFunc:
    return (ctx or _fresh_ctx(n)).delta(n)


def delta_part(n: int, k: int, ctx: SeriesContext | None = None) -> SymFunc:
    return (ctx or _fresh_ctx(n)).delta_part(n, k)


def hodge_part(n: int, k: int, ctx: SeriesContext | None = None) -> SymFunc:
    return (ctx or _fresh_ctx(n)).hodge_part(n, k)


def sigma(n: int, ctx: SeriesContext | None = None) -> SymFunc:
    return (ctx or _fresh_ctx(n)).sigma(n)


def tau(n: int, ctx: SeriesContext | None = None) -> SymFunc:
    return (ctx or _fresh_ctx(n)).tau(n)


def g_fn(n: int, ctx: SeriesContext | None = None) -> SymFunc:
    return (ctx or _fresh_ctx(n)).g_fn(n)


def kappa_iterate(depth: int, cap: int, twisted: bool = False) -> list[Series]:
    """Partial sums of the self-plethysm tower of the standard-rep series.

    twisted=True iterates the sign-twisted generator instead (the variant
    the two-adic family filters through).
    """
    ctx = SeriesContext(cap)
    gen = ctx.omega_kappa() if twisted else ctx.kappa()
    return ctx.iterate_generator(gen, depth)


def conj_from(family: str, cap: int) -> Series:
    return SeriesContext(cap).conj_from(family)
