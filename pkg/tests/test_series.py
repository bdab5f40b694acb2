from fractions import Fraction

import pytest

from conftest import count_by_cycles, count_derangements
from plethy.lie_family import Psi, lie
from plethy.partitions import partitions_of
from plethy.schur import to_schur
from plethy.series import (
    Series,
    SeriesContext,
    higher_bracket,
    p_sum_over,
    plethystic_inverse,
    product_form,
    restrict_ge2,
    series_plethysm,
)
from plethy.symfunc import SymFunc, e, h, p, plethysm


def geometric_p1(cap):
    return Series(cap, {n: p((1,) * n) if n else SymFunc.one() for n in range(cap + 1)})


def test_series_slots_and_cap():
    S = Series(5, {1: p(1), 3: h(3)})
    assert S.coeff(3) == h(3)
    assert S.coeff(2) == SymFunc.zero()
    with pytest.raises(IndexError):
        S.coeff(6)
    assert S.total() == p(1) + h(3)


def test_series_arithmetic_and_reciprocal():
    cap = 6
    H = Series(cap, {n: h(n) for n in range(cap + 1)})
    Epm = Series(cap, {n: e(n).scale((-1) ** (n % 2)) for n in range(cap + 1)})
    prod = H * Epm
    assert prod.coeff(0) == SymFunc.one()
    for n in range(1, cap + 1):
        assert prod.coeff(n) == SymFunc.zero()
    inv = H.reciprocal()
    for n in range(cap + 1):
        assert inv.coeff(n) == Epm.coeff(n)
    with pytest.raises(ValueError):
        Series(cap, {1: p(1)}).reciprocal()


def test_higher_bracket_examples(ctx8):
    L = ctx8.lie()
    for n in range(1, 6):
        assert higher_bracket("H", (1,) * n, L) == h(n)
    total = SymFunc.zero()
    for lam in partitions_of(4):
        total = total + higher_bracket("H", lam, L)
    assert total == p((1, 1, 1, 1))
    L2 = ctx8.lie2()
    from plethy.lie_family import lie2

    assert higher_bracket("E", (4,), L2) == lie2(4)
    assert higher_bracket("H", (), L) == SymFunc.one()
    with pytest.raises(IndexError):
        higher_bracket("H", (9,), ctx8.lie())


def test_apply_matches_brackets_graded(ctx8):
    for name in ("lie", "lie2"):
        app = ctx8.app("H", name)
        brk = ctx8.brackets("H", name)
        keys = set(app.graded_keys()) | set(brk.graded_keys())
        for n, r in keys:
            assert app.graded(n, r) == brk.graded(n, r), (name, n, r)


def test_signed_kinds(ctx8):
    app = ctx8.app("E", "lie")
    pm = ctx8.app("Epm", "lie")
    for n, r in app.graded_keys():
        assert pm.graded(n, r) == app.graded(n, r).scale((-1) ** (r % 2))


def test_series_plethysm_identity(ctx8):
    # composing with p_1 changes nothing
    L = ctx8.lie()
    P1 = Series(8, {1: p(1)})
    again = series_plethysm(L, P1)
    for n in range(9):
        assert again.coeff(n) == L.coeff(n)


def test_plethystic_inverse_two_sided():
    cap = 8
    G = Series(cap, {n: h(n) for n in range(1, cap + 1)})
    F = plethystic_inverse(G)
    FG = series_plethysm(F, G)
    GF = series_plethysm(G, F)
    for n in range(1, cap + 1):
        want = p(1) if n == 1 else SymFunc.zero()
        assert FG.coeff(n) == want
        assert GF.coeff(n) == want


def test_plethystic_inverse_scaled_leading_term():
    cap = 5
    G = Series(cap, {1: p(1).scale(Fraction(2, 3)), 2: h(2)})
    F = plethystic_inverse(G)
    FG = series_plethysm(F, G)
    for n in range(1, cap + 1):
        assert FG.coeff(n) == (p(1) if n == 1 else SymFunc.zero())


def test_plethystic_inverse_needs_unit():
    with pytest.raises(ValueError):
        plethystic_inverse(Series(4, {2: h(2)}))
    with pytest.raises(ValueError):
        plethystic_inverse(Series(4, {1: h(2) * 0, 2: h(2)}))


def test_caps_never_extend_silently(ctx8):
    # asking for more degrees than the input carries is an error, not zeros
    from plethy.series import apply_series

    with pytest.raises(IndexError):
        apply_series("H", ctx8.lie(), cap=9)
    with pytest.raises(IndexError):
        series_plethysm(ctx8.lie(), ctx8.kappa(), cap=9)
    with pytest.raises(IndexError):
        plethystic_inverse(Series(4, {1: p(1)}), cap=5)


def test_restrict_ge2_guard():
    S = Series(4, {1: p(1), 2: h(2)})
    out = restrict_ge2(S)
    assert out.coeff(1) == SymFunc.zero()
    assert out.coeff(2) == h(2)
    with pytest.raises(ValueError):
        restrict_ge2(Series(4, {1: p(1).scale(2)}))


def test_product_form_ungraded_fold():
    # at psi = mobius the symmetric-power product collapses to 1/(1-p1)
    S = product_form(Psi.mobius(), "sym", 6)
    for n in range(7):
        assert S.coeff(n) == (p((1,) * n) if n else SymFunc.one())
    # totient: all partitions
    S2 = product_form(Psi.totient(), "sym", 6)
    for n in range(1, 7):
        assert S2.coeff(n) == p_sum_over(n)
    # two-adic: partitions into powers of two
    S3 = product_form(Psi.two_adic(), "sym", 8)
    for n in range(1, 9):
        assert S3.coeff(n) == p_sum_over(n, "parts_powers_of_two")


def test_product_form_grading_matches_operator(ctx8):
    A = ctx8.app("H", "lie")
    B = ctx8.product(Psi.mobius(), "sym")
    keys = set(A.graded_keys()) | set(B.graded_keys())
    for n, r in keys:
        assert A.graded(n, r) == B.graded(n, r), (n, r)


def test_telescoping_invariants(ctx8):
    for n in range(2, 9):
        for k in range(n):
            left = ctx8.whitney(n, k)
            right = ctx8.beta_rank(n, k) + (
                ctx8.beta_rank(n, k - 1) if k >= 1 else SymFunc.zero()
            )
            assert left == right, (n, k)
            left2 = ctx8.vh(n, k)
            right2 = ctx8.u(n, k) + (ctx8.u(n, k - 1) if k >= 1 else SymFunc.zero())
            assert left2 == right2, (n, k)


def test_whitney_closed_values(ctx8):
    # rank one: omega(e_(n-1)[lie]|_n) = omega(omega(lie_n)) at the top
    assert to_schur(ctx8.whitney(4, 3)).as_dict() == {(3, 1): 1, (2, 1, 1): 1}
    assert ctx8.whitney(4, 0) == h(4)


def test_graded_dimension_profile(ctx8):
    # dim of the (n, j) slot of H[lie] is the count of permutations with j cycles
    app = ctx8.app("H", "lie")
    for n in range(1, 8):
        for j in range(1, n + 1):
            assert app.graded(n, j).dimension() == count_by_cycles(n, j), (n, j)
    appg = ctx8.app("H", "lie_ge2")
    appe = ctx8.app("E", "lie_ge2")
    appd = ctx8.app("E", "lie2_ge2")
    for n in range(2, 8):
        for j in range(1, n):
            expected = count_derangements(n, j)
            assert appg.graded(n, j).dimension() == expected, (n, j)
            assert appe.graded(n, j).dimension() == expected, (n, j)
            # the two-adic refinement of the injective-words character
            # carries the same cycle-counted derangement dimensions
            assert appd.graded(n, j).dimension() == expected, (n, j)


def test_delta_recurrence_and_dimension(ctx8):
    ctx = SeriesContext(12)
    dims = {0: 1, 1: 0}
    for n in range(2, 13):
        delta_n = ctx.delta(n)
        assert delta_n == p(1) * ctx.delta(n - 1) + h(n).scale((-1) ** (n % 2))
        dims[n] = delta_n.dimension()
        assert dims[n] == n * dims[n - 1] + (-1) ** n
    for n in range(2, 9):
        assert dims[n] == count_derangements(n)


def test_delta_equals_exterior_sum(ctx8):
    app = ctx8.app("E", "lie2_ge2")
    for n in range(2, 9):
        assert app.coeff(n) == ctx8.delta(n)


def test_hodge_vs_two_adic_split_differ_at_four(ctx8):
    # the two refinements agree in total but not piecewise
    for k in (1, 2):
        assert ctx8.delta_part(4, k) != ctx8.hodge_part(4, k).omega()
    total_delta = ctx8.delta_part(4, 1) + ctx8.delta_part(4, 2)
    total_hodge = ctx8.hodge_part(4, 1) + ctx8.hodge_part(4, 2)
    assert total_delta == total_hodge.omega() == ctx8.delta(4)


def test_hodge_part_pieces(ctx8):
    assert to_schur(ctx8.hodge_part(4, 2).omega()).as_dict() == {(2, 2): 1, (4,): 1}
    assert to_schur(ctx8.hodge_part(4, 1).omega()).as_dict() == {(3, 1): 1, (2, 1, 1): 1}
    assert to_schur(ctx8.delta_part(4, 2)).as_dict() == {(3, 1): 1}
    assert to_schur(ctx8.delta_part(4, 1)).as_dict() == {
        (4,): 1,
        (2, 2): 1,
        (2, 1, 1): 1,
    }


def test_sigma_chain(ctx8):
    assert to_schur(ctx8.sigma(4)).as_dict() == {(4,): 2, (3, 1): -1, (2, 2): 1}
    for n in range(2, 11):
        sg = ctx8.sigma(n)
        assert sg.dimension() == 1
        assert sg.partial_p1() == ctx8.sigma(n - 1)


def test_tau_values(ctx8):
    for n in range(4, 9):
        exp = to_schur(ctx8.tau(n)).as_dict()
        assert exp == {(n - 2, 1, 1): 1, (n - 2, 2): -1}
    assert to_schur(ctx8.tau(3)).as_dict() == {(1, 1, 1): 1}
    assert to_schur(ctx8.tau(2)).as_dict() == {(1, 1): 1}


def test_g_fn(ctx8):
    assert ctx8.g_fn(0) == SymFunc.one()
    assert ctx8.g_fn(2) == p(2)
    assert ctx8.g_fn(4) == p(4) + p((2, 2))
    assert ctx8.g_fn(3) == SymFunc.zero()
    for n in range(2, 9):
        g = ctx8.g_fn(n)
        if g:
            assert g.dimension() == 0


def test_kappa_iteration_stabilizes(ctx8):
    gen = ctx8.kappa()
    sums = ctx8.iterate_generator(gen, 4)
    assert sums[-1] == sums[-2]
    lhs = ctx8.family("lie_ge2")
    for n in range(9):
        assert sums[-1].coeff(n) == lhs.coeff(n)


def test_conj_from_series(ctx8):
    S = ctx8.conj_from("lie")
    T = ctx8.conj_from("lie2")
    for n in range(1, 9):
        assert S.coeff(n) == ctx8.conj().coeff(n)
        assert T.coeff(n) == ctx8.conj().coeff(n)


def test_psi_family_series(ctx8):
    from plethy.lie_family import Psi

    fam = ctx8.psi_family(Psi.mobius())
    for n in range(1, 9):
        assert fam.coeff(n) == ctx8.lie().coeff(n)


def test_module_level_wrappers():
    from plethy import series

    assert series.delta(4) == SeriesContext(4).delta(4)
    assert series.whitney(5, 2) == SeriesContext(5).whitney(5, 2)
    assert series.u(6, 2) == SeriesContext(6).u(6, 2)
    assert series.sigma(4) == SeriesContext(4).sigma(4)
    assert series.tau(5) == SeriesContext(5).tau(5)
    assert series.vh(6, 1) == SeriesContext(6).vh(6, 1)
    assert series.beta_rank(5, 2) == SeriesContext(5).beta_rank(5, 2)
    assert series.delta_part(4, 1) == SeriesContext(4).delta_part(4, 1)
    assert series.hodge_part(4, 1) == SeriesContext(4).hodge_part(4, 1)
    assert series.g_fn(4) == SeriesContext(4).g_fn(4)
    sums = series.kappa_iterate(4, 8, twisted=True)
    ctx = SeriesContext(8)
    for n in range(9):
        assert sums[-1].coeff(n) == ctx.family("lie2_ge2").coeff(n)
    assert series.conj_from("lie", 6).coeff(5) == ctx.conj().coeff(5)


def test_omega_commutes_with_odd_power_plethysm():
    from plethy.lie_family import lie

    for k in (1, 3, 5):
        for f in (h(3), lie(4), h(2) * e(2)):
            assert plethysm(f, p(k)).omega() == plethysm(f.omega(), p(k))


def test_graded_multiplication_adds_lengths():
    cap = 4
    A = Series(cap, {1: p(1)}, graded={(1, 1): p(1)})
    B = Series(cap, {2: h(2)}, graded={(2, 3): h(2)})
    C = A * B
    assert C.graded(3, 4) == p(1) * h(2)
    assert C.coeff(3) == p(1) * h(2)
