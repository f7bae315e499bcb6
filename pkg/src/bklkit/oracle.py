"""Independent validators.

A self-contained Iwahori-Hecke engine computing the classical
Kazhdan-Lusztig basis (normalization matched to this package's q), the
rank-2 closed forms for a mixed pair, and a brute-force solver that
re-derives the bar table of a tiny window from linear constraints alone.
All of it exists to cross-check the main pipeline, not to feed it.
"""
from __future__ import annotations

from itertools import permutations

from .barinv import BarContext
from .combinat import SignedSeq, bruhat_leq
from .fock import FockVector, Window, _act_raw
from .scalars import Laurent, ONE, RationalQ, ZERO, Z_QMQINV, q_power

# ---------------------------------------------------------------------------
# Symmetric group helpers (0-based one-line notation)
# ---------------------------------------------------------------------------


def perm_inversions(p: tuple) -> int:
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def perm_mult(p: tuple, s: tuple) -> tuple:
    """(p s)(i) = p(s(i))."""
    return tuple(p[s[i]] for i in range(len(p)))


def perm_inverse(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def reduced_word(p: tuple) -> list:
    """A reduced word, read left to right, multiplying into p."""
    p = list(p)
    word = []
    for _ in range(perm_inversions(tuple(p))):
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                word.append(i)
                break
    word.reverse()
    return word


def perm_bruhat_leq(u: tuple, w: tuple) -> bool:
    """Dominance criterion for the Bruhat order on permutations."""
    n = len(u)
    for i in range(1, n):
        cu = sorted(u[:i])
        cw = sorted(w[:i])
        # u <= w iff the i-prefix of u, sorted, dominates that of w entrywise
        if any(a > b for a, b in zip(cu, cw)):
            return False
    return True


# ---------------------------------------------------------------------------
# Hecke algebra with (H_i - q^-1)(H_i + q) = 0
# ---------------------------------------------------------------------------


class HeckeElt:
    """Sparse element of the Hecke algebra of S_m."""

    __slots__ = ("m", "c")

    def __init__(self, m: int, c: dict | None = None):
        self.m = m
        self.c = {p: v for p, v in (c or {}).items() if v}

    @classmethod
    def unit(cls, m: int) -> "HeckeElt":
        return cls(m, {tuple(range(m)): ONE})

    def __eq__(self, other):
        return isinstance(other, HeckeElt) and self.m == other.m and self.c == other.c

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        c = dict(self.c)
        for p, v in other.c.items():
            s = c.get(p, ZERO) + v
            if s:
                c[p] = s
            else:
                c.pop(p, None)
        return HeckeElt(self.m, c)

    def scale(self, x: Laurent) -> "HeckeElt":
        return HeckeElt(self.m, {p: v * x for p, v in self.c.items()})

    def times_h(self, i: int) -> "HeckeElt":
        """Right multiplication by H_i (1-based generator index)."""
        out: dict = {}
        i -= 1
        minus_z = Laurent({1: -1, -1: 1})
        for p, v in self.c.items():
            ps = p[:i] + (p[i + 1], p[i]) + p[i + 2 :]
            if p[i] < p[i + 1]:
                out[ps] = out.get(ps, ZERO) + v
            else:
                out[ps] = out.get(ps, ZERO) + v
                out[p] = out.get(p, ZERO) + v * minus_z
        return HeckeElt(self.m, {p: v for p, v in out.items() if v})

    def times_h_inv(self, i: int) -> "HeckeElt":
        """H_i^{-1} = H_i + (q - q^{-1})."""
        return self.times_h(i) + self.scale(Z_QMQINV)

    def bar(self) -> "HeckeElt":
        """bar(sum c_w H_w) = sum bar(c_w) H_{w^{-1}}^{-1}."""
        total = HeckeElt(self.m)
        for w, c in self.c.items():
            elt = HeckeElt.unit(self.m).scale(c.bar())
            for i in reduced_word(w):
                elt = elt.times_h_inv(i + 1)
            total = total + elt
        return total


def kl_basis(m: int, w: tuple) -> HeckeElt:
    """The bar-invariant element H_w + sum over u < w of qZ[q] terms."""
    w = tuple(w)
    row_cache: dict = {}

    def bar_row(x):
        hit = row_cache.get(x)
        if hit is None:
            hit = HeckeElt(m, {x: ONE}).bar().c
            row_cache[x] = hit
        return hit

    cands = [u for u in permutations(range(m)) if perm_bruhat_leq(u, w)]
    cands.sort(key=lambda u: -perm_inversions(u))
    assert cands[0] == w
    solved: dict = {w: ONE}
    for u in cands[1:]:
        s = ZERO
        for h, th in solved.items():
            r = bar_row(h).get(u)
            if r is not None:
                s = s + r * th.bar()
        if not s:
            continue
        if not s.is_antisymmetric():
            raise AssertionError(f"inconsistent Hecke bar data at {u} below {w}")
        val = s.pos_part()
        if val:
            solved[u] = val
    return HeckeElt(m, solved)


def schur_jimbo_match(m: int, base: tuple, k: int) -> bool:
    """Canonical coefficients on a regular orbit match the KL basis.

    base is a strictly increasing tuple; the orbit {base . sigma} inside
    the level-k window plays the role of the regular representation.
    """
    from .canonical import CANONICAL, engine

    b = SignedSeq((0,) * m)
    eng = engine(Window(b, k))
    for w in permutations(range(m)):
        fw = tuple(base[w[i]] for i in range(m))
        col = eng.column(fw, CANONICAL).entries
        heck = kl_basis(m, w).c
        for u in permutations(range(m)):
            fu = tuple(base[u[i]] for i in range(m))
            if col.get(fu, ZERO) != heck.get(u, ZERO):
                raise AssertionError(
                    f"Schur-Jimbo mismatch at u={u}, w={w}: "
                    f"{col.get(fu, ZERO)!r} != {heck.get(u, ZERO)!r}"
                )
    return True


# ---------------------------------------------------------------------------
# Rank-2 closed forms
# ---------------------------------------------------------------------------


def rank2_forms(case: str, f: tuple, k: int) -> tuple:
    """(T_f, L_f) for the mixed rank-2 Fock space, window-truncated.

    case "VW" is the (0,1) sequence (ties expand downward), "WV" the
    (1,0) one (ties expand upward).
    """
    if case not in ("VW", "WV"):
        raise ValueError("case must be VW or WV")
    b = SignedSeq((0, 1) if case == "VW" else (1, 0))
    win = Window(b, k)
    a, c = f
    if a != c:
        m = FockVector.monomial(win, (a, c))
        return (m, FockVector.monomial(win, (a, c)))
    step = -1 if case == "VW" else 1
    tterms = {f: ONE}
    if abs(a + step) <= k:
        tterms[(a + step, a + step)] = Laurent({1: 1})
    lterms = {f: ONE}
    t = 1
    while abs(a + step * t) <= k:
        d = a + step * t
        lterms[(d, d)] = q_power(-t) * ((-1) ** (t % 2))
        t += 1
    return (FockVector(win, tterms), FockVector(win, lterms))


# ---------------------------------------------------------------------------
# Brute-force uniqueness of the bar involution on a tiny window
# ---------------------------------------------------------------------------


def brute_bar_uniqueness(window: Window, max_dim: int = 400) -> dict:
    """Re-derive the bar table from linear constraints and compare.

    Unknowns: the below-diagonal coefficients of an antilinear
    unitriangular map psi.  Constraints: psi(X M_f) = X psi(M_f) for every
    basis index f and every Chevalley generator X = E_a, F_a acting inside
    the window.  The system is solved over Q(q) by Gaussian elimination;
    the run fails if the solution is not unique or differs from the bar
    table computed by the quasi-R-matrix recursion.
    """
    if window.wedge is not None:
        raise ValueError("uniqueness solver works on tensor windows")
    basis = list(window.basis())
    if len(basis) > max_dim:
        raise ValueError(f"window dimension {len(basis)} too large for the solver")
    b = window.b
    ctx = BarContext(window)

    unknowns = []  # (g, f) pairs with g strictly below f
    index = {}
    for f in basis:
        for g in window.weight_class(f):
            if g != f and bruhat_leq(b, g, f):
                index[(g, f)] = len(unknowns)
                unknowns.append((g, f))

    rows = []  # (coeff dict, rhs RationalQ)

    gens = [("E", a) for a in range(-window.k, window.k)] + [
        ("F", a) for a in range(-window.k, window.k)
    ]
    for f in basis:
        for kind, a in gens:
            moved = _act_raw(window, {f: ONE}, kind, a, project=True)
            # lhs: psi(X M_f) = sum_h bar(c_h) psi(M_h)
            # rhs: X psi(M_f) = sum_g psi_{gf} X M_g
            lhs_const: dict = {}
            lhs_lin: dict = {}
            for h, c in moved.items():
                cb = RationalQ(c.bar())
                # psi(M_h) = M_h + sum of unknowns below h
                lhs_const[h] = lhs_const.get(h, RationalQ(ZERO)) + cb
                for g in window.weight_class(h):
                    jj = index.get((g, h))
                    if jj is not None:
                        lhs_lin.setdefault(g, {})
                        lhs_lin[g][jj] = lhs_lin[g].get(jj, RationalQ(ZERO)) + cb
            rhs_const: dict = {}
            rhs_lin: dict = {}
            for h, c in moved.items():
                rhs_const[h] = rhs_const.get(h, RationalQ(ZERO)) + RationalQ(c)
            for g in window.weight_class(f):
                jj = index.get((g, f))
                if jj is None:
                    continue
                moved_g = _act_raw(window, {g: ONE}, kind, a, project=True)
                for h, c in moved_g.items():
                    rhs_lin.setdefault(h, {})
                    rhs_lin[h][jj] = rhs_lin[h].get(jj, RationalQ(ZERO)) + RationalQ(c)
            keys = set(lhs_const) | set(lhs_lin) | set(rhs_const) | set(rhs_lin)
            for hkey in keys:
                coeffs: dict = {}
                for j, v in lhs_lin.get(hkey, {}).items():
                    coeffs[j] = coeffs.get(j, RationalQ(ZERO)) + v
                for j, v in rhs_lin.get(hkey, {}).items():
                    coeffs[j] = coeffs.get(j, RationalQ(ZERO)) - v
                rhs = rhs_const.get(hkey, RationalQ(ZERO)) - lhs_const.get(
                    hkey, RationalQ(ZERO)
                )
                if coeffs or rhs:
                    rows.append((coeffs, rhs))

    # Gaussian elimination over Q(q)
    pivots: dict = {}  # unknown index -> (coeffs, rhs) with that pivot normalized
    for coeffs, rhs in rows:
        coeffs = {j: v for j, v in coeffs.items() if v}
        became_pivot = False
        while coeffs:
            j = min(coeffs)
            if j in pivots:
                pc, pr = pivots[j]
                factor = coeffs.pop(j)
                for jj, v in pc.items():
                    if jj == j:
                        continue
                    w = coeffs.get(jj, RationalQ(ZERO)) - factor * v
                    if w:
                        coeffs[jj] = w
                    else:
                        coeffs.pop(jj, None)
                rhs = rhs - factor * pr
            else:
                inv = coeffs[j].inverse()
                nc = {jj: v * inv for jj, v in coeffs.items()}
                pivots[j] = (nc, rhs * inv)
                became_pivot = True
                coeffs = {}
        if not became_pivot and rhs:
            raise AssertionError("inconsistent constraint system for the bar map")

    # back substitution
    solution: dict = {}
    for j in sorted(pivots, reverse=True):
        pc, pr = pivots[j]
        val = pr
        for jj, v in pc.items():
            if jj != j:
                val = val - v * solution[jj]
        solution[j] = val
    free = [j for j in range(len(unknowns)) if j not in pivots]
    if free:
        raise AssertionError(
            f"bar map underdetermined: {len(free)} free coefficients, e.g. "
            f"{unknowns[free[0]]}"
        )
    mismatches = []
    for (g, f), j in index.items():
        ours = ctx.row(f).get(g, ZERO)
        theirs = solution[j].reduce()
        if ours != theirs:
            mismatches.append((g, f, ours, theirs))
    if mismatches:
        raise AssertionError(f"bar table differs from solved table: {mismatches[:3]}")
    return {"dimension": len(basis), "unknowns": len(unknowns), "unique": True}
