"""Index combinatorics: sharp statistics, Bruhat order, dictionaries."""
import random
from itertools import product

import pytest

from bklkit.combinat import (
    SignedSeq,
    WedgeIndex,
    antidominant,
    bruhat_leq,
    conjugate,
    down_moves,
    f_L,
    f_U,
    f_to_weight,
    interval,
    lambda_L,
    lambda_U,
    move_closure_reaches,
    natural_bij,
    sharp,
    shift_one,
    supertrace_weight,
    typical,
    v_tail,
    w_tail,
    weight_to_f,
    weyl_rho,
    wt_signature,
)


def brute_sharp(b, f, a, j):
    return sum(b.sign(i) for i in range(j, len(b) + 1) if f[i - 1] <= a)


def test_sharp_examples():
    b = SignedSeq.parse("01")
    assert sharp(b, (2, 2), 2, 1) == 0
    assert sharp(SignedSeq.parse("0"), (5,), 4, 1) == 0
    b5 = SignedSeq.parse("01010")
    f = (4, 3, 5, 2, 1)
    assert sharp(b5, f, 3, 2) == brute_sharp(b5, f, 3, 2)
    for j in range(1, 6):
        for a in range(-1, 7):
            assert sharp(b5, f, a, j) == brute_sharp(b5, f, a, j)


def test_bruhat_paper_example():
    b = SignedSeq.parse("01010")
    f = (4, 3, 5, 2, 1)
    g = (1, 2, 4, 3, 5)
    assert bruhat_leq(b, g, f)
    assert not bruhat_leq(b, f, g)
    # and no down-move chain reaches it
    assert not move_closure_reaches(b, f, g)


def test_bruhat_reflexive_and_simple():
    b = SignedSeq.parse("01")
    assert bruhat_leq(b, (1, 1), (2, 2))
    for f in product(range(-2, 3), repeat=2):
        assert bruhat_leq(b, f, f)


def test_bruhat_partial_order_random():
    rng = random.Random(0)
    for _ in range(60):
        n = rng.randint(1, 4)
        b = SignedSeq(tuple(rng.randint(0, 1) for _ in range(n)))
        fs = [tuple(rng.randint(-2, 2) for _ in range(n)) for _ in range(3)]
        f, g, h = fs
        if bruhat_leq(b, f, g) and bruhat_leq(b, g, f):
            assert f == g
        if bruhat_leq(b, f, g) and bruhat_leq(b, g, h):
            assert bruhat_leq(b, f, h)


def test_down_moves_examples():
    b = SignedSeq.parse("01")
    assert down_moves(b, (2, 2)) == {(1, 1)}
    assert down_moves(SignedSeq.parse("00"), (1, 2)) == set()


def test_move_closure_soundness():
    rng = random.Random(1)
    for _ in range(40):
        n = rng.randint(2, 4)
        b = SignedSeq(tuple(rng.randint(0, 1) for _ in range(n)))
        f = tuple(rng.randint(-2, 2) for _ in range(n))
        for g in down_moves(b, f):
            assert bruhat_leq(b, g, f) and g != f


def test_move_closure_equals_order_for_extreme_sequences():
    # standard and reversed sequences: closure and order coincide
    for bits in ((0, 0, 1), (1, 0, 0), (0, 0, 1, 1), (1, 1, 0, 0)):
        b = SignedSeq(bits)
        n = len(bits)
        box = [tuple(f) for f in product(range(-2, 3), repeat=n)]
        classes = {}
        for f in box:
            classes.setdefault(wt_signature(b, f), []).append(f)
        for f in box:
            reachable = set()
            frontier = [f]
            bound = max(max(abs(v) for v in f), 2) + 1
            while frontier:
                h = frontier.pop()
                if h in reachable:
                    continue
                reachable.add(h)
                for x in down_moves(b, h):
                    if max(abs(v) for v in x) <= bound:
                        frontier.append(x)
            for g in classes[wt_signature(b, f)]:
                assert (g in reachable) == bruhat_leq(b, g, f), (b, f, g)


def test_interval():
    b = SignedSeq.parse("01")
    assert interval(b, (1, 1), (1, 1)) == [(1, 1)]
    assert set(interval(b, (1, 1), (2, 2))) == {(1, 1), (2, 2)}
    assert set(interval(SignedSeq.parse("00"), (1, 2), (2, 1))) == {(1, 2), (2, 1)}
    with pytest.raises(ValueError):
        interval(SignedSeq.parse("00"), (2, 1), (1, 2))


def test_interval_box_bound():
    b = SignedSeq.parse("010")
    g, f = (0, 0, 1), (1, 1, 1)
    if bruhat_leq(b, g, f):
        for h in interval(b, g, f):
            assert all(abs(v) <= 1 for v in h)


def test_weyl_rho_examples():
    assert weyl_rho(SignedSeq.parse("001")) == (1, 0, 0)
    assert weyl_rho(SignedSeq.parse("0")) == (1,)
    assert weyl_rho(SignedSeq.parse("1")) == (0,)


def test_weyl_rho_characterization_exhaustive():
    # both clauses, every sequence with m+n <= 6
    for n in range(1, 7):
        for bits in product((0, 1), repeat=n):
            b = SignedSeq(bits)
            rho = weyl_rho(b)
            sign = [1 if x == 0 else -1 for x in bits]
            for i in range(n - 1):
                lhs = sign[i] * rho[i] - sign[i + 1] * rho[i + 1]
                rhs2 = sign[i] + sign[i + 1]  # (beta|beta)
                assert 2 * lhs == rhs2, (b, i)
            assert sign[-1] * rho[-1] == (0 if bits[-1] else 1)


def test_weight_dictionary():
    b = SignedSeq.parse("001")
    assert weight_to_f(b, (0, 0, 0)) == (1, 0, 0)
    rng = random.Random(2)
    for _ in range(30):
        n = rng.randint(1, 5)
        b = SignedSeq(tuple(rng.randint(0, 1) for _ in range(n)))
        lam = tuple(rng.randint(-4, 4) for _ in range(n))
        assert f_to_weight(b, weight_to_f(b, lam)) == lam
        # supertrace direction shifts the index by the all-ones vector
        st = supertrace_weight(b)
        shifted = tuple(lam[i] + st[i] for i in range(n))
        assert weight_to_f(b, shifted) == tuple(
            v + 1 for v in weight_to_f(b, lam)
        )


def test_shift_respects_order():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 4)
        b = SignedSeq(tuple(rng.randint(0, 1) for _ in range(n)))
        f = tuple(rng.randint(-2, 2) for _ in range(n))
        g = tuple(rng.randint(-2, 2) for _ in range(n))
        one = shift_one(b)
        fs = tuple(f[i] + one[i] for i in range(n))
        gs = tuple(g[i] + one[i] for i in range(n))
        assert bruhat_leq(b, g, f) == bruhat_leq(b, gs, fs)


def test_adjacent_index_maps():
    f = (0, 3, 5, 1)
    assert f_L(f, 2) == (0, 5, 3, 1)
    assert f_U(f, 2) == (0, 5, 3, 1)
    t = (0, 4, 4, 1)
    assert f_L(t, 2) == (0, 5, 5, 1)
    assert f_U(t, 2) == (0, 3, 3, 1)
    rng = random.Random(4)
    for _ in range(30):
        f = tuple(rng.randint(-3, 3) for _ in range(4))
        assert f_U(f_L(f, 2), 2) == f
        assert f_L(f_U(f, 2), 2) == f


def test_lambda_maps_gl11():
    b = SignedSeq.parse("01")
    assert lambda_L(b, 1, (1, -1)) == (-1, 1)  # swapped coordinates of (1,-1)
    assert lambda_U(b, 1, (1, -1)) == (1, -1)  # lam-2alpha then swap
    assert lambda_L(b, 1, (1, 0)) == (1, 0)
    assert lambda_U(b, 1, (1, 0)) == (1, 0)


def test_lambda_f_compatibility_random():
    rng = random.Random(5)
    count = 0
    while count < 50:
        n = rng.randint(2, 5)
        bits = tuple(rng.randint(0, 1) for _ in range(n))
        b = SignedSeq(bits)
        pos = b.adjacent_positions()
        if not pos:
            continue
        kappa = rng.choice(pos)
        bp = b.swap(kappa)
        lam = tuple(rng.randint(-3, 3) for _ in range(n))
        f = weight_to_f(b, lam)
        assert weight_to_f(bp, lambda_L(b, kappa, lam)) == f_L(f, kappa)
        assert weight_to_f(bp, lambda_U(b, kappa, lam)) == f_U(f, kappa)
        count += 1


def test_partitions_and_tails():
    assert conjugate((2, 1)) == (2, 1)
    assert conjugate((3,)) == (1, 1, 1)
    assert conjugate(()) == ()
    assert v_tail((2, 1), 4) == (2, 0, -2, -3)
    assert w_tail((2, 1), 4) == (-1, 1, 3, 4)


def test_natural_bij():
    vac = WedgeIndex((), "V", ())
    assert natural_bij(vac).parts == ()
    x = WedgeIndex((), "V", (2, 1))
    y = natural_bij(x)
    assert y.side == "W" and y.parts == (2, 1)
    # involution
    assert natural_bij(y) == x
    # disjointness of the two tails covers Z
    n = 12
    vt = set(v_tail((2, 1), n))
    wt = set(w_tail(conjugate((2, 1)), n))
    assert vt & wt == set()
    window = set(range(min(vt), max(wt) + 1))
    assert (vt | wt) >= window - set()


def test_typical_antidominant():
    b = SignedSeq.standard(1, 1)
    lam_typ = f_to_weight(b, (2, 0))
    lam_atyp = f_to_weight(b, (1, 1))
    assert typical(b, lam_typ)
    assert not typical(b, lam_atyp)
    b32 = SignedSeq.standard(3, 2)
    lam = f_to_weight(b32, (0, 3, 5, 4, 2))
    assert antidominant(b32, lam)
    b0 = SignedSeq.standard(2, 0)
    assert typical(b0, f_to_weight(b0, (1, 1)))
    with pytest.raises(ValueError):
        typical(SignedSeq.parse("10"), (0, 0))


def test_signed_seq_utilities():
    b = SignedSeq.parse("0101")
    assert (b.m, b.n) == (2, 2)
    assert b.adjacent_positions() == [1, 3]
    assert b.swap(1) == SignedSeq.parse("1001")
    assert b.is_adjacent(b.swap(3))
    assert not b.is_adjacent(b)
    assert str(SignedSeq.parse("")) == ""
    assert len(list(SignedSeq.all_sequences(2, 1))) == 3
