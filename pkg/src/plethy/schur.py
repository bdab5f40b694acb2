"""Symmetric-group characters and the Schur-basis view.

Character tables are computed lazily per degree and cached for the life of
the process (compute-then-publish, so concurrent readers are safe).  The
recursion itself lives in a kernel module: the compiled one when the
extension built, otherwise the pure-Python twin.  Set PLETHY_PURE=1 to force
the fallback; set PLETHY_CACHE_DIR to persist tables between runs.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import _mn_pure
from .partitions import check_partition, conjugate, format_partition, partitions_of
from .symfunc import SymFunc

try:
    from . import _mn_speed
except ImportError:  # extension not built; the pure kernel covers everything
    _mn_speed = None

if os.environ.get("PLETHY_PURE"):
    _kernel = _mn_pure
else:
    _kernel = _mn_speed if _mn_speed is not None else _mn_pure

# compiled kernel accumulates in int64; route larger degrees to pure python
_SPEED_MAX_N = getattr(_mn_speed, "MAX_N", 0) if _mn_speed is not None else 0

CACHE_ENV = "PLETHY_CACHE_DIR"
_CACHE_VERSION = "v1"


def kernel_name() -> str:
    return _kernel.KERNEL_NAME


def available_kernels() -> dict[str, object]:
    out = {"pure-python": _mn_pure}
    if _mn_speed is not None:
        out["cython"] = _mn_speed
    return out


def _kernel_for(n: int):
    if _kernel is not _mn_pure and n > _SPEED_MAX_N:
        return _mn_pure
    return _kernel


def character(lam: tuple, mu: tuple) -> int:
    """chi^lam(mu) by border-strip recursion; memoized inside the kernel."""
    lam = check_partition(tuple(lam))
    mu = check_partition(tuple(mu))
    if sum(lam) != sum(mu):
        raise ValueError(
            f"size mismatch: {format_partition(lam)} vs {format_partition(mu)}"
        )
    return _kernel_for(sum(lam)).mn_character(lam, mu)


class CharacterTable:
    """All chi^lam(mu) for lam, mu of a fixed degree, in canonical order."""

    __slots__ = ("n", "parts", "_index", "_rows")

    def __init__(self, n: int, rows: list[list[int]]):
        self.n = n
        self.parts = partitions_of(n)
        self._index = {lam: i for i, lam in enumerate(self.parts)}
        self._rows = rows

    def chi(self, lam: tuple, mu: tuple) -> int:
        return self._rows[self._index[lam]][self._index[mu]]

    def row(self, lam: tuple) -> list[int]:
        return list(self._rows[self._index[lam]])

    @classmethod
    def build(cls, n: int) -> "CharacterTable":
        rows = _load_cached(n)
        if rows is None:
            rows = _kernel_for(n).mn_table(partitions_of(n))
            _store_cached(n, rows)
        return cls(n, rows)


def _cache_path(n: int) -> str | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    return os.path.join(root, f"mn-{_CACHE_VERSION}-n{n:02d}.npy")


def _load_cached(n: int) -> list[list[int]] | None:
    path = _cache_path(n)
    if path is None or not os.path.exists(path):
        return None
    import numpy as np

    try:
        arr = np.load(path, allow_pickle=False)
    except Exception:
        return None  # a bad cache file is never fatal
    size = len(partitions_of(n))
    if arr.shape != (size, size) or arr.dtype != np.int64:
        return None
    return [[int(v) for v in row] for row in arr]


def _store_cached(n: int, rows: list[list[int]]) -> None:
    path = _cache_path(n)
    if path is None:
        return
    import numpy as np

    try:
        os.makedirs(os.path.dirname(path), exist_ok=True)
        np.save(path, np.array(rows, dtype=np.int64), allow_pickle=False)
    except OverflowError:
        pass  # values beyond int64 stay in-process only


_tables: dict[int, CharacterTable] = {}
_tables_lock = threading.Lock()


def character_table(n: int) -> CharacterTable:
    table = _tables.get(n)
    if table is None:
        with _tables_lock:
            table = _tables.get(n)
            if table is None:
                table = CharacterTable.build(n)
                _tables[n] = table
    return table


class NotVirtualCharacter(ValueError):
    """Raised when a Schur coefficient fails to be an integer."""

    def __init__(self, lam: tuple, coeff: Fraction):
        self.partition = lam
        self.coeff = coeff
        super().__init__(
            f"not a virtual character: coefficient of s{format_partition(lam)} is {coeff}"
        )


@dataclass(frozen=True)
class SchurExpansion:
    """Integer Schur-basis expansion of a homogeneous virtual character."""

    degree: int
    terms: tuple[tuple[tuple, int], ...]  # ((partition, coeff), ...) canonical order

    def coeff(self, lam: tuple) -> int:
        for mu, c in self.terms:
            if mu == lam:
                return c
        return 0

    def as_dict(self) -> dict[tuple, int]:
        return dict(self.terms)

    def dimension(self) -> int:
        return sum(c * hook_dimension(lam) for lam, c in self.terms)

    def to_dict(self) -> dict:
        return {
            "basis": "s",
            "degree": self.degree,
            "terms": [
                {"partition": list(lam), "coeff": str(c)} for lam, c in self.terms
            ],
        }

    def exponent_str(self) -> str:
        """Cell form used by the printed tables, e.g. (3,1)+2(2^2,1)."""
        from .partitions import exponent_str

        if not self.terms:
            return "0"
        bits = []
        for lam, c in self.terms:
            prefix = "" if c == 1 else str(c)
            bits.append(prefix + exponent_str(lam))
        return "+".join(bits)

    def __str__(self) -> str:
        return self.exponent_str()


def to_schur(f: SymFunc) -> SchurExpansion:
    """Expand a homogeneous p-basis function in the Schur basis.

    Coefficient of s_lam is sum_mu c_mu(f) chi^lam(mu); a non-integer result
    is a hard error flagging an input that is not a virtual character.

    Dense inputs go through the cached per-degree character table.  Sparse
    inputs at high degree skip the full p(n)^2 table and evaluate only the
    characters they touch, which is what makes degree-30-scale positivity
    scans affordable.
    """
    if not f:
        raise ValueError("to_schur needs a nonzero homogeneous function (got 0)")
    n = f.degree()
    coeffs = {mu: c for mu, c in f.items()}
    parts = partitions_of(n)
    sparse = n not in _tables and len(coeffs) * 8 < len(parts)
    if sparse:
        kern = _kernel_for(n)
        chi = lambda lam, mu: kern.mn_character(lam, mu)
    else:
        table = character_table(n)
        chi = table.chi
    out: list[tuple[tuple, int]] = []
    for lam in parts:
        total = Fraction(0)
        for mu, c in coeffs.items():
            total += c * chi(lam, mu)
        if total:
            if total.denominator != 1:
                raise NotVirtualCharacter(lam, total)
            out.append((lam, int(total)))
    return SchurExpansion(n, tuple(out))


@dataclass(frozen=True)
class Positivity:
    """Outcome of a Schur-positivity test; witness is the most negative term."""

    positive: bool
    witness_partition: tuple | None = None
    witness_coeff: int | None = None

    def __bool__(self) -> bool:
        return self.positive


def is_schur_positive(f: SymFunc) -> Positivity:
    if not f:
        return Positivity(True)
    expansion = to_schur(f)
    worst = None
    for lam, c in expansion.terms:
        if c < 0 and (worst is None or c < worst[1]):
            worst = (lam, c)
    if worst is None:
        return Positivity(True)
    return Positivity(False, worst[0], worst[1])


def hook_dimension(lam: tuple) -> int:
    """Number of standard tableaux of shape lam (hook-length formula)."""
    lam = check_partition(tuple(lam))
    if not lam:
        return 1
    conj = conjugate(lam)
    num = factorial(sum(lam))
    for i, row in enumerate(lam):
        for j in range(row):
            num //= (row - j) + (conj[j] - i) - 1
    return num
