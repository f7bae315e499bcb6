"""Canonical and dual canonical bases via the triangular algorithm.

A column of the canonical basis solves, inside the finite interval below
its index, the fixed-point system t = R . bar(t) with t unitriangular and
off-diagonal entries in qZ[q]; the dual basis does the same in
q^-1 Z[q^-1].  Windowed columns coincide with the global Brundan-
Kazhdan-Lusztig polynomials on the window, which is what this module
returns, always together with the window it used.

Also here: parabolic N/U coordinates for an adjacent pair of sequences,
the transports that relate the two sequences, truncation comparisons for
q-wedge tails, and the tail-conjugating super-duality transport.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .barinv import BarContext, wedge_bar_row
from .combinat import (
    SignedSeq,
    WedgeIndex,
    bruhat_leq,
    f_L,
    f_U,
    natural_bij,
)
from .fock import Window, _weight_classes
from .scalars import DegreeClass, Laurent, ONE, ZERO

CANONICAL = "canonical"
DUAL = "dual"

WINDOW_MARGIN = 2  # added to m+n when auto-selecting a window level


class TriangularityError(AssertionError):
    """A solved coefficient violated its required degree class."""


@dataclass
class BklColumn:
    window: Window
    f: tuple
    kind: str
    entries: dict  # g -> Laurent, diagonal included

    def coeff(self, g: tuple) -> Laurent:
        return self.entries.get(tuple(g), ZERO)

    def at_q1(self) -> dict:
        return {g: c.ev(1) for g, c in self.entries.items()}

    def to_json(self) -> dict:
        mn = self.window.tensor_len
        wedge = self.window.wedge
        col = []
        for g in sorted(self.entries):
            item = {"g": ",".join(str(v) for v in g[:mn])}
            if wedge:
                item["u"] = ",".join(str(v) for v in g[mn:])
            item["poly"] = self.entries[g].to_json()
            col.append(item)
        out = {
            "b": str(self.window.b),
            "f": ",".join(str(v) for v in self.f[:mn]),
            "kind": self.kind,
            "window": self.window.k,
            "column": col,
        }
        if wedge:
            out["wedge"] = f"{wedge[0]}:{wedge[1]}"
            out["u"] = ",".join(str(v) for v in self.f[mn:])
        return out


class BklEngine:
    """Columns over one window, with bar rows and columns memoized."""

    def __init__(self, window: Window):
        self.window = window
        self.bext = SignedSeq(window.extended_bits())
        self._ctx = BarContext(window if window.wedge is None else window.extended())
        self._wedge_rows: dict = {}
        self._columns: dict = {}

    def bar_row(self, f: tuple) -> dict:
        if self.window.wedge is None:
            return self._ctx.row(f)
        row = self._wedge_rows.get(f)
        if row is None:
            row = wedge_bar_row(self.window, self._ctx, f)
            self._wedge_rows[f] = row
        return row

    def candidates(self, f: tuple) -> list:
        """Down-set of f inside the window, f first, in a linear extension.

        Sorted by a strictly order-monotone statistic (the total of all
        sharp values over the scanned grid), descending, so every element
        appears after everything above it.
        """
        cls = _weight_classes(self.window).get(self.window.signature(f))
        if cls is None or f not in cls:
            raise ValueError(f"index {f} not in window {self.window}")
        down = [g for g in cls if g == f or bruhat_leq(self.bext, g, f)]
        bits = self.bext.bits
        lo = min(min(g) for g in down) - 1
        hi = max(max(g) for g in down)

        def dkey(g):
            tot = 0
            p = len(bits)
            for a in range(lo, hi + 1):
                s = 0
                for j in range(p - 1, -1, -1):
                    if g[j] <= a:
                        s += -1 if bits[j] else 1
                    tot += s
            return tot

        return sorted(down, key=lambda g: (-dkey(g), g))

    def column(self, f: tuple, kind: str, order=None) -> BklColumn:
        f = tuple(f)
        key = (f, kind)
        hit = self._columns.get(key)
        if hit is not None:
            return hit
        cands = self.candidates(f) if order is None else list(order)
        solved: dict = {f: ONE}
        out: dict = {f: ONE}
        for g in cands:
            if g == f:
                continue
            s = ZERO
            for h, th in solved.items():
                rgh = self.bar_row(h).get(g)
                if rgh is not None:
                    s = s + rgh * th.bar()
            if not s:
                continue
            if not s.is_antisymmetric():
                raise TriangularityError(
                    f"inconsistent bar data at g={g}, f={f}: s={s!r}"
                )
            val = s.pos_part() if kind == CANONICAL else s.neg_part()
            want = DegreeClass.IN_qZq if kind == CANONICAL else DegreeClass.IN_qinvZqinv
            if val and val.degree_class() is not want:
                raise TriangularityError(f"degree class violated at g={g}, f={f}")
            if val:
                solved[g] = val
                out[g] = val
        col = BklColumn(self.window, f, kind, out)
        if order is None:
            self._columns[key] = col
        return col

    def table(self, kind: str, fbox: int | None = None) -> dict:
        bound = self.window.k if fbox is None else fbox
        out = {}
        for f in self.window.basis():
            if max((abs(v) for v in f), default=0) <= bound:
                out[f] = self.column(f, kind).entries
        return out


@lru_cache(maxsize=None)
def engine(window: Window) -> BklEngine:
    return BklEngine(window)


def auto_level(b: SignedSeq, f: tuple, wedge_len: int = 0) -> int:
    spread = max((abs(v) for v in f), default=0)
    return spread + len(b) + wedge_len + WINDOW_MARGIN


def bkl(
    b: SignedSeq,
    f: tuple,
    kind: str,
    k: int | None = None,
    check_stability: bool = True,
) -> BklColumn:
    """A BKL column over the tensor window, with auto-selected level.

    check_stability recomputes one window size up and insists the shared
    entries agree; it is cheap insurance and on by default.
    """
    f = tuple(f)
    if kind not in (CANONICAL, DUAL):
        raise ValueError(f"kind must be {CANONICAL!r} or {DUAL!r}")
    k = k if k is not None else auto_level(b, f)
    col = engine(Window(b, k)).column(f, kind)
    if check_stability:
        bigger = engine(Window(b, k + 1)).column(f, kind)
        safe = k
        for g, c in col.entries.items():
            if bigger.entries.get(g, ZERO) != c:
                raise AssertionError(f"window instability at g={g} for f={f}")
        for g, c in bigger.entries.items():
            if max(abs(v) for v in g) <= safe and g not in col.entries:
                raise AssertionError(f"window instability (missing {g}) for f={f}")
    return col


def wedge_bkl(
    b: SignedSeq,
    side: str,
    kw: int,
    f: tuple,
    kind: str,
    k: int | None = None,
) -> BklColumn:
    """A BKL column over a finite q-wedge window (flat index f)."""
    k = k if k is not None else auto_level(b, f, kw)
    win = Window(b, k, (side, kw))
    return engine(win).column(tuple(f), kind)


def wedge_bkl_partition(
    b: SignedSeq,
    idx: WedgeIndex,
    kind: str,
    kw: int | None = None,
    k: int | None = None,
) -> BklColumn:
    """Column for a partition-tailed index, truncated per the tail length."""
    kw = kw if kw is not None else max(len(idx.parts), 1)
    flat = idx.flat(kw)
    return wedge_bkl(b, idx.side, kw, flat, kind, k=k)


def lusztig_solve(table, kind: str) -> "BklTable":
    """Triangular solve against an explicit bar table.

    Same algorithm as the engine columns, driven purely by the rows the
    table carries; exists so a stored/serialized table can be solved
    without recomputing the bar map.
    """
    from .barinv import BarTable as _BarTable

    if not isinstance(table, _BarTable):
        raise TypeError("expected a BarTable")
    window = table.window
    bext = SignedSeq(window.extended_bits())
    entries: dict = {}
    bits = bext.bits
    for f in table.rows:
        cands = [g for g in table.rows if g == f or bruhat_leq(bext, g, f)]
        lo = min(min(g) for g in cands) - 1
        hi = max(max(g) for g in cands)

        def dkey(g):
            tot = 0
            p = len(bits)
            for a in range(lo, hi + 1):
                s = 0
                for j in range(p - 1, -1, -1):
                    if g[j] <= a:
                        s += -1 if bits[j] else 1
                    tot += s
            return tot

        cands.sort(key=lambda g: (-dkey(g), g))
        solved = {f: ONE}
        for g in cands:
            if g == f:
                continue
            s = ZERO
            for h, th in solved.items():
                rgh = table.rows[h].get(g)
                if rgh is not None:
                    s = s + rgh * th.bar()
            if not s:
                continue
            if not s.is_antisymmetric():
                raise TriangularityError(f"inconsistent bar data at g={g}, f={f}")
            val = s.pos_part() if kind == CANONICAL else s.neg_part()
            if val:
                solved[g] = val
                entries[(g, f)] = val
    return BklTable(window, kind, entries)


# ---------------------------------------------------------------------------
# Tensor versus q-wedge comparisons
# ---------------------------------------------------------------------------


def _perms(k: int):
    import itertools

    return list(itertools.permutations(range(k)))


def _inv_count(p) -> int:
    return sum(
        1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j]
    )


def tensor_to_wedge_canonical(
    b: SignedSeq, side: str, kw: int, g: tuple, f: tuple, k: int | None = None
) -> Laurent:
    """Canonical wedge entry from the tensor-level table (alternating sum).

    Evaluates sum over tau of (-q)^{l(w0 tau)} t_{g.tau, f.w0} in the
    extended tensor window and insists it equals the wedge-window entry;
    a mismatch is a hard error.
    """
    k = k if k is not None else auto_level(b, f, kw)
    mn = len(b)
    wwin = Window(b, k, (side, kw))
    ext = wwin.extended()
    f_w0 = f[:mn] + tuple(reversed(f[mn:]))
    col = engine(ext).column(f_w0, CANONICAL)
    lw0 = kw * (kw - 1) // 2
    total = ZERO
    for tau in _perms(kw):
        gt = f[:0] + g[:mn] + tuple(g[mn + tau[i]] for i in range(kw))
        c = col.entries.get(gt)
        if c is None:
            continue
        e = lw0 - _inv_count(tau)  # l(w0 tau)
        total = total + c * Laurent({e: (-1) ** (e % 2)})
    direct = engine(wwin).column(tuple(f), CANONICAL).entries.get(tuple(g), ZERO)
    if total != direct:
        raise AssertionError(
            f"tensor-vs-wedge canonical mismatch at g={g}, f={f}: "
            f"{total!r} != {direct!r}"
        )
    return total


def wedge_vs_tensor_dual(
    b: SignedSeq, side: str, kw: int, g: tuple, f: tuple, k: int | None = None
) -> Laurent:
    """Dual wedge entry equals the tensor entry at the same sorted indices."""
    k = k if k is not None else auto_level(b, f, kw)
    wwin = Window(b, k, (side, kw))
    direct = engine(wwin).column(tuple(f), DUAL).entries.get(tuple(g), ZERO)
    tensor = engine(wwin.extended()).column(tuple(f), DUAL).entries.get(tuple(g), ZERO)
    if direct != tensor:
        raise AssertionError(
            f"wedge-vs-tensor dual mismatch at g={g}, f={f}: {direct!r} != {tensor!r}"
        )
    return direct


# ---------------------------------------------------------------------------
# Parabolic N/U coordinates for an adjacent pair
# ---------------------------------------------------------------------------


def _tied(h: tuple, kappa: int) -> bool:
    return h[kappa - 1] == h[kappa]


def _bump(h: tuple, kappa: int, step: int) -> tuple:
    g = list(h)
    g[kappa - 1] += step
    g[kappa] += step
    return tuple(g)


def column_to_parabolic(
    entries: dict, kappa: int, pair_kind: str, basis: str, k: int
) -> dict:
    """Rewrite an M-coordinate column into N or U coordinates.

    pair_kind "VW" marks a (0,1) pair at kappa, "WV" a (1,0) pair; basis
    "N" produces the dual-side coefficients, "U" the canonical-side ones.
    Entries whose tie chain escapes the window stay exact as long as the
    caller compares them inside a safe sub-box (the suites do).
    """
    up = 1 if pair_kind == "VW" else -1
    out: dict = {}
    if basis == "N":
        # M_h = N_h + q^-1 N_{h bumped down}; collect per N index
        for h, c in entries.items():
            out[h] = out.get(h, ZERO) + c
            if _tied(h, kappa):
                hb = _bump(h, kappa, -up)
                if max(abs(v) for v in hb) <= k:
                    out[hb] = out.get(hb, ZERO) + c * Laurent({-1: 1})
        return {h: c for h, c in out.items() if c}
    # basis == "U": solve m_h = u_h + q u_{h bumped up} down the tie chains.
    # Chains extend below the support to the window edge: a plain monomial
    # expands into a truncated geometric U-series, while honest canonical
    # columns terminate on their own.
    todo = set(entries)
    for h in entries:
        if _tied(h, kappa):
            g = _bump(h, kappa, -up)
            while max(abs(v) for v in g) <= k:
                todo.add(g)
                g = _bump(g, kappa, -up)
    order = sorted(todo, key=lambda h: -up * h[kappa - 1])
    for h in order:
        val = entries.get(h, ZERO)
        if _tied(h, kappa):
            hb = _bump(h, kappa, up)
            prev = out.get(hb)
            if prev is not None:
                val = val - prev * Laurent({1: 1})
        if val:
            out[h] = val
    return out


def _pair_kind(b: SignedSeq, kappa: int) -> str:
    if b.bits[kappa - 1] == 0 and b.bits[kappa] == 1:
        return "VW"
    if b.bits[kappa - 1] == 1 and b.bits[kappa] == 0:
        return "WV"
    raise ValueError(f"no mixed pair at position {kappa} of {b}")


def basis_change_NU(b: SignedSeq, kappa: int, v, direction: str):
    """Rewrite a FockVector between M- and N/U-coordinates at a mixed pair.

    direction is one of "M->N", "N->M", "M->U", "U->M".  The N -> M
    direction expands a window-truncated geometric series; the others are
    finite.  Coefficient dicts are reinterpreted in place (the underlying
    window does not change).
    """
    from .fock import FockVector

    kind = _pair_kind(b, kappa)
    up = 1 if kind == "VW" else -1
    k = v.window.k
    if direction == "M->N":
        return FockVector(v.window, column_to_parabolic(v.terms, kappa, kind, "N", k))
    if direction == "M->U":
        return FockVector(v.window, column_to_parabolic(v.terms, kappa, kind, "U", k))
    out: dict = {}

    def add(h, c):
        s = out.get(h, ZERO) + c
        if s:
            out[h] = s
        else:
            out.pop(h, None)

    if direction == "N->M":
        for h, c in v.terms.items():
            add(h, c)
            if _tied(h, kappa):
                t = 1
                g = _bump(h, kappa, -up)
                while max(abs(x) for x in g) <= k:
                    add(g, c * Laurent({-t: (-1) ** (t % 2)}))
                    t += 1
                    g = _bump(g, kappa, -up)
        return FockVector(v.window, out)
    if direction == "U->M":
        for h, c in v.terms.items():
            add(h, c)
            if _tied(h, kappa):
                g = _bump(h, kappa, -up)
                if max(abs(x) for x in g) <= k:
                    add(g, c * Laurent({1: 1}))
        return FockVector(v.window, out)
    raise ValueError(f"unknown direction {direction!r}")


def check_parabolic_bases(b: SignedSeq, kappa: int, k: int, box: int = 1) -> dict:
    """Degree classes and refined support of every N/U column in a box.

    Returns a small report; violations raise.
    """
    from itertools import product as _product

    n_cols = 0
    for f in _product(range(-box, box + 1), repeat=len(b)):
        parabolic_columns(b, kappa, f, k=k)
        n_cols += 1
    return {"b": str(b), "kappa": kappa, "window": k, "columns": n_cols, "ok": True}


def parabolic_columns(
    b: SignedSeq, kappa: int, f: tuple, k: int | None = None
) -> tuple:
    """(l-check, t-check) columns of f in N and U coordinates.

    Verifies degree classes and the refined support conditions (both
    orders must strictly descend) before returning.
    """
    pair_kind = _pair_kind(b, kappa)
    k = k if k is not None else auto_level(b, f)
    bp = b.swap(kappa)
    eng = engine(Window(b, k))
    lcol = eng.column(tuple(f), DUAL)
    tcol = eng.column(tuple(f), CANONICAL)
    lcheck = column_to_parabolic(lcol.entries, kappa, pair_kind, "N", k)
    tcheck = column_to_parabolic(tcol.entries, kappa, pair_kind, "U", k)
    fwd = f_L if pair_kind == "VW" else f_U
    dual_fwd = f_U if pair_kind == "VW" else f_L
    safe = k - 1
    for g, c in lcheck.items():
        if g == tuple(f) or max(abs(v) for v in g) > safe:
            continue
        if c.degree_class() is not DegreeClass.IN_qinvZqinv:
            raise TriangularityError(f"l-check degree at g={g}, f={f}: {c!r}")
        if not (
            bruhat_leq(b, g, tuple(f)) and bruhat_leq(bp, fwd(g, kappa), fwd(tuple(f), kappa))
        ):
            raise AssertionError(f"refined support violated (dual) at g={g}, f={f}")
    for g, c in tcheck.items():
        if g == tuple(f) or max(abs(v) for v in g) > safe:
            continue
        if c.degree_class() is not DegreeClass.IN_qZq:
            raise TriangularityError(f"t-check degree at g={g}, f={f}: {c!r}")
        if not (
            bruhat_leq(b, g, tuple(f))
            and bruhat_leq(bp, dual_fwd(g, kappa), dual_fwd(tuple(f), kappa))
        ):
            raise AssertionError(f"refined support violated (canonical) at g={g}, f={f}")
    return lcheck, tcheck


def adjacency_transport(
    b: SignedSeq, kappa: int, f: tuple, kind: str, k: int | None = None
) -> dict:
    """Transport a column across the odd swap and verify it from scratch.

    Dual columns relabel N-coordinates by f -> f^L, canonical ones
    U-coordinates by f -> f^U; the receiving side is recomputed
    independently and compared on the safe sub-box.
    """
    if b.bits[kappa - 1] != 0 or b.bits[kappa] != 1:
        raise ValueError("transport starts from the (0,1) side of the pair")
    k = k if k is not None else auto_level(b, f)
    bp = b.swap(kappa)
    f = tuple(f)
    lcheck, tcheck = parabolic_columns(b, kappa, f, k)
    if kind == DUAL:
        src, move = lcheck, f_L
    else:
        src, move = tcheck, f_U
    fp = move(f, kappa)
    lcheck_p, tcheck_p = parabolic_columns(bp, kappa, fp, k)
    dst = lcheck_p if kind == DUAL else tcheck_p
    safe = k - 1
    for g, c in src.items():
        gp = move(g, kappa)
        if max(abs(v) for v in g) > safe or max(abs(v) for v in gp) > safe:
            continue
        if dst.get(gp, ZERO) != c:
            raise AssertionError(
                f"adjacency transport mismatch ({kind}) at g={g}->{gp}, f={f}->{fp}: "
                f"{c!r} != {dst.get(gp, ZERO)!r}"
            )
    for gp, c in dst.items():
        g = (f_U if kind == DUAL else f_L)(gp, kappa)
        if max(abs(v) for v in g) > safe or max(abs(v) for v in gp) > safe:
            continue
        if src.get(g, ZERO) != c:
            raise AssertionError(
                f"adjacency transport mismatch ({kind}, reverse) at {gp}: "
                f"{c!r} != {src.get(g, ZERO)!r}"
            )
    return {move(g, kappa): c for g, c in src.items()}


# ---------------------------------------------------------------------------
# Combinatorial super duality
# ---------------------------------------------------------------------------


def superduality_compare(
    b: SignedSeq,
    fidx: WedgeIndex,
    gidx: WedgeIndex,
    kind: str,
    k: int | None = None,
) -> tuple:
    """Both-sides BKL entries under the tail-conjugating bijection.

    Returns (value_V_side, value_W_side); raises if they differ.  The two
    truncation levels are matched so that every involved partition fits.
    """
    if fidx.side != "V" or gidx.side != "V":
        raise ValueError("compare from the V side; the W side is derived")
    fn, gn = natural_bij(fidx), natural_bij(gidx)
    kwv = max(len(fidx.parts), len(gidx.parts), 1)
    kww = max(len(fn.parts), len(gn.parts), 1)
    fv, gv = fidx.flat(kwv), gidx.flat(kwv)
    fw, gw = fn.flat(kww), gn.flat(kww)
    if k is None:
        spread = max(
            max((abs(v) for v in fv), default=0),
            max((abs(v) for v in gv), default=0),
            max((abs(v) for v in fw), default=0),
            max((abs(v) for v in gw), default=0),
        )
        k = spread + len(b) + WINDOW_MARGIN
    colv = wedge_bkl(b, "V", kwv, fv, kind, k=k)
    colw = wedge_bkl(b, "W", kww, fw, kind, k=k)
    lhs = colv.entries.get(gv, ZERO)
    rhs = colw.entries.get(gw, ZERO)
    if lhs != rhs:
        raise AssertionError(
            f"super duality mismatch ({kind}) at g={gidx}, f={fidx}: {lhs!r} != {rhs!r}"
        )
    return lhs, rhs


def superduality_order_preserved(b: SignedSeq, x: WedgeIndex, y: WedgeIndex, depth: int | None = None) -> bool:
    """Bruhat comparability agrees on the two sides of the bijection."""
    if x.side != "V" or y.side != "V":
        raise ValueError("compare V-side indices")
    n = depth if depth is not None else max(len(x.parts), len(y.parts), 1)
    xn, yn = natural_bij(x), natural_bij(y)
    nn = max(len(xn.parts), len(yn.parts), n)
    bv = SignedSeq(b.bits + (0,) * nn)
    bw = SignedSeq(b.bits + (1,) * nn)
    lhs = bruhat_leq(bv, x.flat(nn), y.flat(nn))
    rhs = bruhat_leq(bw, xn.flat(nn), yn.flat(nn))
    if lhs != rhs:
        raise AssertionError(f"order preservation fails for {x} vs {y}")
    return lhs


# ---------------------------------------------------------------------------
# Truncation comparisons
# ---------------------------------------------------------------------------


def truncation_consistent_tensor(
    b: SignedSeq, f: tuple, kind: str, k: int
) -> bool:
    """Level-(k+1) column restricted to the k-box equals the k-column."""
    small = engine(Window(b, k)).column(tuple(f), kind).entries
    big = engine(Window(b, k + 1)).column(tuple(f), kind).entries
    for g, c in small.items():
        if big.get(g, ZERO) != c:
            raise AssertionError(f"tensor truncation mismatch at {g} for f={f}")
    for g, c in big.items():
        if max(abs(v) for v in g) <= k and small.get(g, ZERO) != c:
            raise AssertionError(f"tensor truncation mismatch at {g} for f={f}")
    return True


def truncation_consistent_wedge(
    b: SignedSeq, side: str, kw: int, f: tuple, kind: str, k: int
) -> bool:
    """Tr of the (kw+1)-level column equals the kw-level column.

    f is a flat index at tail length kw; it is extended by one vacuum
    entry for the bigger space.
    """
    mn = len(b)
    vac = (-kw) if side == "V" else (kw + 1)
    fbig = tuple(f) + (vac,)
    kk = max(k, abs(vac) + 1)
    small = engine(Window(b, kk, (side, kw))).column(tuple(f), kind).entries
    big = engine(Window(b, kk, (side, kw + 1))).column(fbig, kind).entries
    for gbig, c in big.items():
        tail = gbig[mn:]
        if tail[-1] == vac:
            g = gbig[:-1]
            if small.get(g, ZERO) != c:
                raise AssertionError(
                    f"wedge truncation mismatch at {g} for f={f}: "
                    f"{small.get(g, ZERO)!r} != {c!r}"
                )
    for g, c in small.items():
        if big.get(tuple(g) + (vac,), ZERO) != c:
            raise AssertionError(f"wedge truncation missing {g} for f={f}")
    return True


def shift_column_invariant(b: SignedSeq, f: tuple, p: int, kind: str) -> bool:
    """Columns of f and f + p*(1,...,1) agree under the shift relabeling."""
    f = tuple(f)
    fs = tuple(v + p for v in f)
    spread = max(
        max((abs(v) for v in f), default=0), max((abs(v) for v in fs), default=0)
    )
    k = spread + len(b) + WINDOW_MARGIN
    col = engine(Window(b, k)).column(f, kind).entries
    cols = engine(Window(b, k)).column(fs, kind).entries
    safe = k - abs(p)
    for g, c in col.items():
        gs = tuple(v + p for v in g)
        if max(abs(v) for v in g) <= safe and max(abs(v) for v in gs) <= safe:
            if cols.get(gs, ZERO) != c:
                raise AssertionError(f"shift mismatch at g={g}, f={f}, p={p}")
    for gs, c in cols.items():
        g = tuple(v - p for v in gs)
        if max(abs(v) for v in g) <= safe and max(abs(v) for v in gs) <= safe:
            if col.get(g, ZERO) != c:
                raise AssertionError(f"shift mismatch at g={g}, f={f}, p={p}")
    return True


# ---------------------------------------------------------------------------
# Whole-table export
# ---------------------------------------------------------------------------


@dataclass
class BklTable:
    window: Window
    kind: str
    entries: dict  # (g, f) -> Laurent, diagonal implicit 1

    @classmethod
    def over_window(cls, window: Window, kind: str, fbox: int | None = None) -> "BklTable":
        eng = engine(window)
        ent = {}
        for f, col in eng.table(kind, fbox).items():
            for g, c in col.items():
                if g != f:
                    ent[(g, f)] = c
        return cls(window, kind, ent)

    def to_json(self) -> dict:
        def key(x):
            return ",".join(str(v) for v in x)

        return {
            "b": str(self.window.b),
            "k": self.window.k,
            "kind": self.kind,
            "entries": [
                {"g": key(g), "f": key(f), "poly": c.to_json()}
                for (g, f), c in sorted(self.entries.items())
            ],
        }
