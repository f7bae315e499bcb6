"""The windowed bar involution."""
import random
from itertools import permutations, product

from bklkit.barinv import (
    BarContext,
    BarTable,
    bar_monomial,
    bar_row_rl,
    bar_table,
    equivariance_defect,
    wedge_bar_row,
)
from bklkit.combinat import SignedSeq
from bklkit.fock import FockVector, Window, hecke_act
from bklkit.scalars import Laurent, ONE, ZERO, Z_QMQINV, q_power


def tie_row(f, k, step):
    """Closed-form bar row of a tied rank-2 index (step -1 for VW, +1 for WV)."""
    a = f[0]
    row = {f: ONE}
    t = 1
    while abs(a + step * t) <= k:
        d = a + step * t
        row[(d, d)] = Z_QMQINV * q_power(-(t - 1)) * ((-1) ** (t - 1))
        t += 1
    return row


def test_rank2_rows_vw():
    k = 5
    ctx = BarContext(Window(SignedSeq.parse("01"), k))
    assert ctx.row((1, 2)) == {(1, 2): ONE}
    assert ctx.row((2, 1)) == {(2, 1): ONE}
    for a in (-2, 0, 3):
        assert ctx.row((a, a)) == tie_row((a, a), k, -1)


def test_rank2_rows_wv():
    k = 5
    ctx = BarContext(Window(SignedSeq.parse("10"), k))
    assert ctx.row((0, 1)) == {(0, 1): ONE}
    for a in (-2, 0, 3):
        assert ctx.row((a, a)) == tie_row((a, a), k, +1)


def test_rank2_row_vv():
    ctx = BarContext(Window(SignedSeq.parse("00"), 4))
    assert ctx.row((1, 2)) == {(1, 2): ONE}
    assert ctx.row((2, 1)) == {(2, 1): ONE, (1, 2): Z_QMQINV}


def hecke_bar_row(bits, k, f):
    """Independent oracle on pure tensor blocks: bar through the Hecke algebra."""
    w = Window(SignedSeq(bits), k)
    vtype = bits[0] == 0
    base = tuple(sorted(f, reverse=not vtype))
    used = [False] * len(f)
    perm = []
    for v in f:
        for idx, bv in enumerate(base):
            if bv == v and not used[idx]:
                used[idx] = True
                perm.append(idx)
                break
    p = list(perm)
    word = []
    for _ in range(sum(1 for i in range(len(p)) for j in range(i) if p[j] > p[i])):
        for j in range(len(p) - 1):
            if p[j] > p[j + 1]:
                p[j], p[j + 1] = p[j + 1], p[j]
                word.append(j)
                break
    word.reverse()
    v = FockVector.monomial(w, base)
    for i in word:
        v = hecke_act(v, i + 1) + v.scale(Z_QMQINV)
    return v.terms


def test_pure_blocks_match_hecke_oracle():
    k = 4
    for bits in ((0, 0, 0), (1, 1, 1), (0, 0, 0, 0), (1, 1, 1, 1)):
        ctx = BarContext(Window(SignedSeq(bits), k))
        for f in permutations(range(1, len(bits) + 1)):
            assert ctx.row(f) == hecke_bar_row(bits, k, f), (bits, f)


def test_single_factor_table_is_identity():
    win = Window(SignedSeq.parse("0"), 3)
    t = bar_table(win)
    for f, row in t.rows.items():
        assert row == {f: ONE}


def test_involution_identity_all_rank_le_3():
    for n in range(1, 4):
        for bits in product((0, 1), repeat=n):
            t = bar_table(Window(SignedSeq(bits), 2))  # raises on defect
            t.check_unitriangular()


def test_involution_identity_geometric_series():
    # the (t,t)-chain on the VW window telescopes to delta
    win = Window(SignedSeq.parse("01"), 3)
    t = bar_table(win)
    assert t.involution_defect() is None


def test_stability_in_k():
    # pi_k of the bigger table equals the smaller table on shared rows
    for bits in ((0, 1), (0, 1, 0)):
        small = BarContext(Window(SignedSeq(bits), 2))
        big = BarContext(Window(SignedSeq(bits), 4))
        for f in Window(SignedSeq(bits), 2).basis():
            brow = {
                g: c for g, c in big.row(f).items() if max(abs(v) for v in g) <= 2
            }
            assert brow == small.row(f), f


def test_tensor_order_independence():
    for bits in ((0, 1), (1, 0), (0, 1, 1), (1, 0, 0), (0, 1, 0, 1)):
        win = Window(SignedSeq(bits), 2)
        ctx = BarContext(win)
        for f in win.basis():
            assert bar_row_rl(win, f) == ctx.row(f), (bits, f)


def test_equivariance_and_k_twist():
    rng = random.Random(9)
    k = 4
    for bits in ((0, 1), (0, 0, 1), (1, 0, 1)):
        ctx = BarContext(Window(SignedSeq(bits), k))
        for _ in range(6):
            f = tuple(rng.randint(-2, 2) for _ in bits)
            for a in range(-2, 2):
                assert equivariance_defect(ctx, f, a) is None
    # psi(K_a x) = K_a^{-1} psi(x): rows stay in one weight class
    ctx = BarContext(Window(SignedSeq.parse("01"), 3))
    from bklkit.combinat import wt_signature

    for f in [(1, 1), (0, 2)]:
        sig = wt_signature(SignedSeq.parse("01"), f)
        for g in ctx.row(f):
            assert wt_signature(SignedSeq.parse("01"), g) == sig


def test_strict_descent():
    from bklkit.combinat import bruhat_leq

    for bits in ((0, 1, 0), (1, 1, 0)):
        b = SignedSeq(bits)
        ctx = BarContext(Window(b, 2))
        for f in Window(b, 2).basis():
            for g in ctx.row(f):
                assert g == f or bruhat_leq(b, g, f)


def test_bar_monomial_public():
    win = Window(SignedSeq.parse("01"), 3)
    v = bar_monomial(win, (1, 1))
    assert v.coeff((1, 1)) == ONE
    assert v.coeff((0, 0)) == Z_QMQINV


def test_wedge_bar_vacuum_reduces_to_tensor():
    # a wedge tail frozen at the vacuum adds nothing to the tensor bar
    b = SignedSeq.parse("01")
    k = 3
    wwin = Window(b, k, ("W", 1))
    ctx = BarContext(wwin.extended())
    tctx = BarContext(Window(SignedSeq.parse("011"), k))
    for f in [(1, 1), (0, 2)]:
        row = wedge_bar_row(wwin, ctx, f + (3,))
        trow = tctx.row(f + (3,))
        kept = {g: c for g, c in trow.items() if g[2] == 3 or True}
        # kw = 1 wedge is literally one more tensor factor
        assert row == kept


def test_wedge_bar_minuscule_identity():
    # pure wedge blocks are bar-fixed
    b = SignedSeq.parse("")
    wwin = Window(b, 3, ("V", 2))
    ctx = BarContext(wwin.extended())
    for idx in wwin.basis():
        assert wedge_bar_row(wwin, ctx, idx) == {idx: ONE}
    wwin2 = Window(b, 2, ("W", 3))
    ctx2 = BarContext(wwin2.extended())
    for idx in wwin2.basis():
        assert wedge_bar_row(wwin2, ctx2, idx) == {idx: ONE}


def test_wedge_bar_table_and_unitriangularity():
    wwin = Window(SignedSeq.parse("0"), 3, ("W", 2))
    t = bar_table(wwin)
    t.check_unitriangular()
    assert t.involution_defect() is None


def test_bar_table_json():
    t = bar_table(Window(SignedSeq.parse("0"), 1))
    data = t.to_json()
    assert data["b"] == "0" and data["k"] == 1
    assert data["rows"]["1"] == {"1": {"0": 1}}


def test_embedded_rank2_pair_with_spectators():
    # one tied mixed pair inside a larger tensor; every other entry is
    # inert (sorted with its own type and out of reach of the tie chain
    # within the window): the row is the rank-2 pattern with spectators
    # riding along
    k = 4
    cases = [
        # (bits, f, active positions, tie value, step)
        ((0, 1, 0), (0, 0, 4), (0, 1), 0, -1),
        ((1, 1, 0), (4, 0, 0), (1, 2), 0, +1),
        ((0, 1, 1), (0, 0, -4), (0, 1), 0, -1),
        ((1, 0, 1), (0, 0, -4), (0, 1), 0, +1),
        ((0, 0, 1, 0), (-4, 1, 1, 4), (1, 2), 1, -1),
    ]
    for bits, f, (i, j), a, step in cases:
        ctx = BarContext(Window(SignedSeq(bits), k))
        expect = {f: ONE}
        t = 1
        while abs(a + step * t) <= k:
            d = a + step * t
            g = list(f)
            g[i] = g[j] = d
            expect[tuple(g)] = Z_QMQINV * q_power(-(t - 1)) * ((-1) ** (t - 1))
            t += 1
        assert ctx.row(f) == expect, (bits, f)
    # a genuinely generic index (no tie, pure parts sorted) is bar-fixed
    ctx = BarContext(Window(SignedSeq((0, 1, 0)), 4))
    assert ctx.row((-2, 3, 1)) == {(-2, 3, 1): ONE}
