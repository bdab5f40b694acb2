# cython: language_level=3, boundscheck=False, wraparound=False
"""Murnaghan-Nakayama character kernel, compiled version.

Same recursion as _mn_pure (border strips via beta numbers, memoized on
(shape, cycle-type suffix)).  Character values are returned as Python ints
but accumulated in C long long, which is safe for the desk-scale degrees
this engine targets (n <= 30); callers should route larger degrees to the
pure kernel.
"""

KERNEL_NAME = "cython"

cdef dict _memo = {}

MAX_N = 30


def clear_memo():
    _memo.clear()


cdef long long _chi(tuple lam, tuple mu):
    if len(mu) == 0:
        return 1 if len(lam) == 0 else 0
    key = (lam, mu)
    cached = _memo.get(key)
    if cached is not None:
        return <long long> cached

    cdef int ell = len(lam)
    cdef int k = mu[0]
    cdef tuple rest = mu[1:]
    cdef long long total = 0
    cdef int i, j, m, ht
    cdef bint skip
    cdef long long b, nb, c
    cdef long long beta[64]
    cdef long long newbeta[64]
    cdef int part
    cdef list parts

    for i in range(ell):
        beta[i] = <long long> (<int> lam[i]) + ell - 1 - i

    for i in range(ell):
        b = beta[i]
        nb = b - k
        if nb < 0:
            continue
        ht = 0
        skip = False
        for j in range(ell):
            c = beta[j]
            if c == nb:
                skip = True
                break
            if nb < c < b:
                ht += 1
        if skip:
            continue
        # rebuild the beta set with b -> nb, kept sorted decreasing
        j = 0
        for m in range(ell):
            if m != i:
                newbeta[j] = beta[m]
                j += 1
        newbeta[ell - 1] = nb
        # insertion: everything before was sorted decreasing; nb may be small
        j = ell - 1
        while j > 0 and newbeta[j - 1] < newbeta[j]:
            newbeta[j - 1], newbeta[j] = newbeta[j], newbeta[j - 1]
            j -= 1
        parts = []
        for m in range(ell):
            part = <int> (newbeta[m] - (ell - 1 - m))
            if part:
                parts.append(part)
        if ht % 2:
            total -= _chi(tuple(parts), rest)
        else:
            total += _chi(tuple(parts), rest)

    _memo[key] = total
    return total


def mn_character(tuple lam, tuple mu):
    """chi^lam evaluated on the class of cycle type mu; |lam| == |mu|."""
    if sum(mu) > MAX_N:
        raise ValueError(f"compiled kernel caps out at n = {MAX_N}")
    if len(lam) > 64:
        raise ValueError("shape has too many parts for the compiled kernel")
    return int(_chi(lam, mu))


def mn_table(tuple parts):
    """Full table [chi^lam(mu)] with rows/cols in the order of parts."""
    return [[mn_character(lam, mu) for mu in parts] for lam in parts]
