"""Windowed Fock spaces.

A window holds the finite basis of a truncated mixed tensor space: entries
of the tensor part bounded by k, optionally followed by a finite q-wedge
tail (strictly decreasing for the V side, strictly increasing for the W
side).  Vectors are sparse maps from basis indices to Laurent scalars.

Chevalley generators act positionwise through the comultiplication
Delta(E_a) = 1 (x) E_a + E_a (x) K_{a+1,a} and
Delta(F_a) = F_a (x) 1 + K_{a,a+1} (x) F_a, so E twists to the right of the
acting slot and F twists to the left.  The wedge tail acts by the
straightening-free formulas, with the whole tail counting as the rightmost
coproduct slot.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product

from .combinat import SignedSeq, wt_signature
from .scalars import Laurent, ONE, ZERO, gauss_fact, q_power


class WindowOverflowError(ValueError):
    """A generator pushed an index outside the window (and projection was off)."""


@dataclass(frozen=True)
class Window:
    b: SignedSeq
    k: int
    wedge: tuple | None = None  # ("V", kw) or ("W", kw)

    def __post_init__(self):
        if self.k <= 0:
            raise ValueError("window level k must be positive")
        if self.wedge is not None:
            side, kw = self.wedge
            if side not in ("V", "W") or kw < 0:
                raise ValueError(f"bad wedge spec {self.wedge}")

    @property
    def tensor_len(self) -> int:
        return len(self.b)

    @property
    def wedge_len(self) -> int:
        return self.wedge[1] if self.wedge else 0

    @property
    def total_len(self) -> int:
        return self.tensor_len + self.wedge_len

    def extended(self) -> "Window":
        """The pure tensor window the wedge part embeds into."""
        if self.wedge is None:
            return self
        side, kw = self.wedge
        return Window(self.b.extend(0 if side == "V" else 1, kw), self.k)

    def extended_bits(self) -> tuple:
        if self.wedge is None:
            return self.b.bits
        side, kw = self.wedge
        return self.b.bits + ((0 if side == "V" else 1),) * kw

    def valid_index(self, f: tuple) -> bool:
        if len(f) != self.total_len:
            return False
        if any(abs(v) > self.k for v in f):
            return False
        if self.wedge:
            side, kw = self.wedge
            tail = f[self.tensor_len :]
            if side == "V":
                return all(tail[i] > tail[i + 1] for i in range(kw - 1))
            return all(tail[i] < tail[i + 1] for i in range(kw - 1))
        return True

    def basis(self):
        rng = range(-self.k, self.k + 1)
        heads = product(rng, repeat=self.tensor_len)
        if self.wedge is None:
            yield from heads
            return
        side, kw = self.wedge
        tails = [
            tuple(sorted(c, reverse=(side == "V")))
            for c in combinations(rng, kw)
        ]
        for h in product(rng, repeat=self.tensor_len):
            for t in tails:
                yield h + t

    def signature(self, f: tuple) -> tuple:
        return wt_signature(SignedSeq(self.extended_bits()), f)

    def weight_class(self, f: tuple) -> tuple:
        return _weight_classes(self)[self.signature(f)]


@lru_cache(maxsize=None)
def _weight_classes(window: Window) -> dict:
    out: dict = {}
    for f in window.basis():
        out.setdefault(window.signature(f), []).append(f)
    return out


@dataclass
class FockVector:
    window: Window
    terms: dict = field(default_factory=dict)

    @classmethod
    def monomial(cls, window: Window, f: tuple, coeff: Laurent = ONE) -> "FockVector":
        if not window.valid_index(f):
            raise ValueError(f"index {f} not in window")
        return cls(window, {tuple(f): coeff} if coeff else {})

    def __add__(self, other: "FockVector") -> "FockVector":
        if other.window != self.window:
            raise ValueError("window mismatch")
        terms = dict(self.terms)
        for f, c in other.terms.items():
            s = terms.get(f, ZERO) + c
            if s:
                terms[f] = s
            else:
                terms.pop(f, None)
        return FockVector(self.window, terms)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scale(Laurent(-1))

    def scale(self, c: Laurent) -> "FockVector":
        if not c:
            return FockVector(self.window, {})
        return FockVector(self.window, {f: v * c for f, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FockVector)
            and self.window == other.window
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff(self, f: tuple) -> Laurent:
        return self.terms.get(tuple(f), ZERO)

    def to_json(self) -> dict:
        mn = self.window.tensor_len
        wedge = self.window.wedge
        entry = {
            "b": str(self.window.b),
            "k": self.window.k,
            "wedge": f"{wedge[0]}:{wedge[1]}" if wedge else None,
        }
        terms = []
        for f in sorted(self.terms):
            item = {"f": ",".join(str(v) for v in f[:mn])}
            if wedge:
                item["u"] = ",".join(str(v) for v in f[mn:])
            item["poly"] = self.terms[f].to_json()
            terms.append(item)
        return {"window": entry, "terms": terms}


# ---------------------------------------------------------------------------
# Chevalley action
# ---------------------------------------------------------------------------


def _twist_contrib_E(bit: int, e: int, a: int) -> int:
    # K_{a+1,a} exponent on a single slot
    d = (1 if e == a + 1 else 0) - (1 if e == a else 0)
    return d if bit == 0 else -d


def _twist_contrib_F(bit: int, e: int, a: int) -> int:
    # K_{a,a+1} exponent on a single slot
    d = (1 if e == a else 0) - (1 if e == a + 1 else 0)
    return d if bit == 0 else -d


def _act_raw(window: Window, terms: dict, kind: str, a: int, project: bool) -> dict:
    """One application of E_a, F_a, K_a or K_a^-1 on raw term dicts."""
    bits = window.b.bits
    mn = window.tensor_len
    k = window.k
    wedge = window.wedge
    out: dict = {}

    def emit(f, c):
        s = out.get(f, ZERO) + c
        if s:
            out[f] = s
        else:
            out.pop(f, None)

    for f, coef in terms.items():
        head, tail = f[:mn], f[mn:]
        if kind in ("K", "Kinv"):
            expo = 0
            for i, e in enumerate(head):
                d = 1 if e == a else 0
                expo += d if bits[i] == 0 else -d
            if wedge:
                cnt = sum(1 for e in tail if e == a)
                expo += cnt if wedge[0] == "V" else -cnt
            if kind == "Kinv":
                expo = -expo
            emit(f, coef * q_power(expo))
            continue

        if kind == "E":
            # suffix twists: suf[i] = sum of contributions of slots > i
            suf = [0] * (mn + 1)
            tail_tw = 0
            if wedge:
                for e in tail:
                    tail_tw += _twist_contrib_E(0 if wedge[0] == "V" else 1, e, a)
            suf[mn] = tail_tw
            for i in range(mn - 1, -1, -1):
                suf[i] = suf[i + 1] + _twist_contrib_E(bits[i], head[i], a)
            for i in range(mn):
                if bits[i] == 0 and head[i] == a + 1:
                    new = a
                elif bits[i] == 1 and head[i] == a:
                    new = a + 1
                else:
                    continue
                if abs(new) > k:
                    if project:
                        continue
                    raise WindowOverflowError(f"E_{a} leaves window at slot {i}")
                g = f[:i] + (new,) + f[i + 1 : mn] + tail
                emit(g, coef * q_power(suf[i + 1]))
            if wedge:
                side = wedge[0]
                for t, e in enumerate(tail):
                    if side == "V" and e == a + 1:
                        new = a
                    elif side == "W" and e == a:
                        new = a + 1
                    else:
                        continue
                    if abs(new) > k:
                        if project:
                            continue
                        raise WindowOverflowError(f"E_{a} leaves window in tail")
                    nt = tail[:t] + (new,) + tail[t + 1 :]
                    # E lowers a V entry / raises a W entry: check the next slot
                    if side == "V" and (t + 1 < len(nt) and nt[t] <= nt[t + 1]):
                        continue  # repeated entry: wedge term vanishes
                    if side == "W" and (t + 1 < len(nt) and nt[t] >= nt[t + 1]):
                        continue
                    emit(head + nt, coef)
            continue

        # kind == "F"
        pre = [0] * (mn + 1)
        for i in range(mn):
            pre[i + 1] = pre[i] + _twist_contrib_F(bits[i], head[i], a)
        for i in range(mn):
            if bits[i] == 0 and head[i] == a:
                new = a + 1
            elif bits[i] == 1 and head[i] == a + 1:
                new = a
            else:
                continue
            if abs(new) > k:
                if project:
                    continue
                raise WindowOverflowError(f"F_{a} leaves window at slot {i}")
            g = f[:i] + (new,) + f[i + 1 : mn] + tail
            emit(g, coef * q_power(pre[i]))
        if wedge:
            side = wedge[0]
            full_pre = pre[mn]
            for t, e in enumerate(tail):
                if side == "V" and e == a:
                    new = a + 1
                elif side == "W" and e == a + 1:
                    new = a
                else:
                    continue
                if abs(new) > k:
                    if project:
                        continue
                    raise WindowOverflowError(f"F_{a} leaves window in tail")
                nt = tail[:t] + (new,) + tail[t + 1 :]
                # F raises a V entry / lowers a W entry: check the previous slot
                if side == "V" and (t > 0 and nt[t - 1] <= nt[t]):
                    continue
                if side == "W" and (t > 0 and nt[t - 1] >= nt[t]):
                    continue
                emit(head + nt, coef * q_power(full_pre))
    return out


@dataclass(frozen=True)
class ChevalleyGen:
    """E_a, F_a, K_a or K_a^{-1}, with an optional divided power."""

    kind: str  # "E" | "F" | "K" | "Kinv"
    a: int
    r: int = 1

    def __post_init__(self):
        if self.kind not in ("E", "F", "K", "Kinv"):
            raise ValueError(f"unknown generator kind {self.kind}")
        if self.kind in ("K", "Kinv") and self.r != 1:
            raise ValueError("K has no divided powers")
        if self.r < 1:
            raise ValueError("divided power must be positive")


def apply_gen(
    v: FockVector, kind: str, a: int, r: int = 1, project: bool = False
) -> FockVector:
    """Apply E_a^{(r)}, F_a^{(r)}, K_a or K_a^{-1}.

    Divided powers are computed as r-fold products divided exactly by [r]!;
    a failure to divide is a hard error, not a silent rational.
    """
    ChevalleyGen(kind, a, r)  # validates
    terms = v.terms
    for _ in range(r):
        terms = _act_raw(v.window, terms, kind, a, project)
    if r > 1:
        fact = gauss_fact(r)
        terms = {f: c.divexact(fact) for f, c in terms.items()}
    return FockVector(v.window, terms)


def act(gen: ChevalleyGen, v: FockVector, project: bool = False) -> FockVector:
    return apply_gen(v, gen.kind, gen.a, r=gen.r, project=project)


# ---------------------------------------------------------------------------
# Hecke action and q-wedges
# ---------------------------------------------------------------------------


def _hecke_raw(bits: tuple, terms: dict, i: int) -> dict:
    """Right action of H_{i+1} on slots (i, i+1), both of the same type."""
    if bits[i] != bits[i + 1]:
        raise ValueError("Hecke generator needs two slots of equal type")
    vtype = bits[i] == 0
    out: dict = {}

    def emit(f, c):
        s = out.get(f, ZERO) + c
        if s:
            out[f] = s
        else:
            out.pop(f, None)

    zz = Laurent({1: -1, -1: 1})  # -(q - q^-1)
    for f, coef in terms.items():
        x, y = f[i], f[i + 1]
        swapped = f[:i] + (y, x) + f[i + 2 :]
        if x == y:
            emit(f, coef * q_power(-1))
        elif (x < y) == vtype:
            emit(swapped, coef)
        else:
            emit(swapped, coef)
            emit(f, coef * zz)
    return out


def hecke_act(v: FockVector, i: int) -> FockVector:
    """Right action of H_i (1-based) on a pure tensor window."""
    w = v.window
    if w.wedge is not None:
        raise ValueError("Hecke action needs a pure tensor window")
    bits = w.b.bits
    if len(set(bits)) > 1:
        raise ValueError("Hecke action is defined on pure V or pure W windows")
    if not (1 <= i <= len(bits) - 1):
        raise ValueError("Hecke index out of range")
    return FockVector(w, _hecke_raw(bits, v.terms, i - 1))


def _perms_by_length(kw: int):
    """All permutations of range(kw) with (length, parent, letter)."""
    perms = {tuple(range(kw)): (0, None, None)}
    frontier = [tuple(range(kw))]
    while frontier:
        nxt = []
        for p in frontier:
            l = perms[p][0]
            for i in range(kw - 1):
                if p[i] < p[i + 1]:
                    q = p[:i] + (p[i + 1], p[i]) + p[i + 2 :]
                    if q not in perms:
                        perms[q] = (l + 1, p, i)
                        nxt.append(q)
        frontier = nxt
    return perms


def h0_apply(v: FockVector, block_start: int, kw: int) -> FockVector:
    """Right multiplication by H_0 = sum (-q)^{l(s)-l(w0)} H_s on a block."""
    w = v.window
    if w.wedge is not None:
        raise ValueError("h0_apply expects a tensor window")
    bits = w.b.bits
    if kw <= 1:
        return v
    perms = _perms_by_length(kw)
    vecs: dict = {tuple(range(kw)): dict(v.terms)}
    total: dict = {}
    lw0 = kw * (kw - 1) // 2
    for p, (l, parent, letter) in sorted(perms.items(), key=lambda kv: kv[1][0]):
        if parent is not None:
            vecs[p] = _hecke_raw(bits, vecs[parent], block_start + letter)
        sign = q_power(l - lw0) * ((-1) ** ((l - lw0) % 2))
        for f, c in vecs[p].items():
            s = total.get(f, ZERO) + c * sign
            if s:
                total[f] = s
            else:
                total.pop(f, None)
    return FockVector(w, total)


def h0_symmetrize(v: FockVector) -> FockVector:
    """H_0 on the trailing pure block of a tensor window (whole window if pure)."""
    w = v.window
    bits = w.b.bits
    if not bits:
        return v
    last = bits[-1]
    start = len(bits)
    while start > 0 and bits[start - 1] == last:
        start -= 1
    return h0_apply(v, start, len(bits) - start)


def wedge_embed(wwin: Window, idx: tuple) -> FockVector:
    """Embed a wedge basis vector into the extended tensor window.

    The wedge vector indexed by a sorted tail h goes to M_{h.w0} H_0 on the
    trailing block.
    """
    if wwin.wedge is None:
        raise ValueError("window has no wedge part")
    side, kw = wwin.wedge
    if not wwin.valid_index(idx):
        raise ValueError(f"{idx} is not a wedge index of {wwin}")
    ext = wwin.extended()
    mn = wwin.tensor_len
    rev = idx[:mn] + tuple(reversed(idx[mn:]))
    v = FockVector.monomial(ext, rev)
    return h0_apply(v, mn, kw)


def wedge_project(v: FockVector, wwin: Window) -> FockVector:
    """Inverse of wedge_embed on its image: extract sorted-tail coefficients."""
    if wwin.wedge is None:
        raise ValueError("window has no wedge part")
    side, kw = wwin.wedge
    mn = wwin.tensor_len
    out: dict = {}
    for f, c in v.terms.items():
        tail = f[mn:]
        if side == "V":
            ok = all(tail[i] > tail[i + 1] for i in range(kw - 1))
        else:
            ok = all(tail[i] < tail[i + 1] for i in range(kw - 1))
        if ok:
            out[f] = c
    return FockVector(wwin, out)


def wedge_act(v: FockVector, kind: str, a: int, r: int = 1, project: bool = False) -> FockVector:
    """Chevalley action on a wedge window (alias of apply_gen, for clarity)."""
    return apply_gen(v, kind, a, r=r, project=project)


def truncate_wedge_index(idx, kw: int):
    """Finite kw-prefix of a partition-tailed index, or None if killed.

    The index survives exactly when its tail is the vacuum beyond kw,
    i.e. the partition has at most kw parts.
    """
    from .combinat import WedgeIndex

    if not isinstance(idx, WedgeIndex):
        raise TypeError("expected a WedgeIndex")
    if len(idx.parts) > kw:
        return None
    return idx.flat(kw)


def truncate_wedge(vec: dict, side: str, kw: int, window: Window) -> FockVector:
    """Truncate a sparse map {WedgeIndex: Laurent} to a finite wedge window."""
    if window.wedge is None or window.wedge[0] != side or window.wedge[1] != kw:
        raise ValueError("window does not match the requested truncation")
    out: dict = {}
    for idx, c in vec.items():
        flat = truncate_wedge_index(idx, kw) if len(idx.parts) <= kw else None
        if flat is not None and c:
            out[flat] = out.get(flat, ZERO) + c
    return FockVector(window, {f: c for f, c in out.items() if c})
