"""Index-level combinatorics.

0^m1^n-sequences, integer weight functions and the Bruhat ordering attached
to a sequence, down-move chains and interval enumeration, Weyl vectors and
the weight <-> index dictionaries, the adjacent-sequence index maps, and the
partition bookkeeping behind semi-infinite wedge tails.

Positions are 1-based in the public API, mirroring the indexing [m+n];
weight functions are plain int tuples.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

Weight = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class SignedSeq:
    """A 0^m1^n-sequence: m zeros (V slots) and n ones (W slots)."""

    bits: tuple

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("bits must be 0 or 1")

    @classmethod
    def parse(cls, text: str) -> "SignedSeq":
        text = text.strip()
        if text in ("", "-"):
            return cls(())
        return cls(tuple(int(ch) for ch in text))

    @classmethod
    def standard(cls, m: int, n: int) -> "SignedSeq":
        return cls((0,) * m + (1,) * n)

    @classmethod
    def all_sequences(cls, m: int, n: int):
        for ones in combinations(range(m + n), n):
            bits = [0] * (m + n)
            for i in ones:
                bits[i] = 1
            yield cls(tuple(bits))

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    @property
    def m(self) -> int:
        return len(self.bits) - sum(self.bits)

    @property
    def n(self) -> int:
        return sum(self.bits)

    def is_standard(self) -> bool:
        return self.bits == (0,) * self.m + (1,) * self.n

    def sign(self, i: int) -> int:
        """(-1)^{b_i}, 1-based position."""
        return -1 if self.bits[i - 1] else 1

    def adjacent_positions(self):
        """1-based kappa with (b_kappa, b_kappa+1) = (0, 1)."""
        return [
            i + 1
            for i in range(len(self.bits) - 1)
            if self.bits[i] == 0 and self.bits[i + 1] == 1
        ]

    def swap(self, kappa: int) -> "SignedSeq":
        """The adjacent sequence obtained by swapping slots kappa, kappa+1."""
        b = list(self.bits)
        if b[kappa - 1] == b[kappa]:
            raise ValueError("slots are not of mixed type")
        b[kappa - 1], b[kappa] = b[kappa], b[kappa - 1]
        return SignedSeq(tuple(b))

    def is_adjacent(self, other: "SignedSeq") -> bool:
        if len(self) != len(other) or self.m != other.m:
            return False
        diff = [i for i, (x, y) in enumerate(zip(self.bits, other.bits)) if x != y]
        return len(diff) == 2 and diff[1] == diff[0] + 1

    def extend(self, bit: int, count: int) -> "SignedSeq":
        return SignedSeq(self.bits + (bit,) * count)


def sharp(b: SignedSeq, f: Weight, a: int, j: int) -> int:
    """sum over i >= j with f(i) <= a of (-1)^{b_i}  (1-based j)."""
    bits = b.bits
    return sum(
        (-1 if bits[i] else 1) for i in range(j - 1, len(bits)) if f[i] <= a
    )


def wt_signature(b: SignedSeq, f: Weight) -> tuple:
    """Canonical form of the formal weight sum_i (-1)^{b_i} eps_{f(i)}."""
    acc: dict = {}
    for i, v in enumerate(f):
        s = -1 if b.bits[i] else 1
        w = acc.get(v, 0) + s
        if w:
            acc[v] = w
        else:
            acc.pop(v, None)
    return tuple(sorted(acc.items()))


def bruhat_leq(b: SignedSeq, g: Weight, f: Weight) -> bool:
    """g <= f in the Bruhat ordering of type b (sharp characterization)."""
    bits = b.bits
    p = len(bits)
    if len(g) != p or len(f) != p:
        raise ValueError("length mismatch")
    if p == 0:
        return True
    if wt_signature(b, g) != wt_signature(b, f):
        return False
    lo = min(min(g), min(f)) - 1
    hi = max(max(g), max(f))
    for a in range(lo, hi + 1):
        sg = sf = 0
        # suffix scan: sharp(., a, j) built from the right
        for j in range(p, 0, -1):
            s = -1 if bits[j - 1] else 1
            if g[j - 1] <= a:
                sg += s
            if f[j - 1] <= a:
                sf += s
            if j > 1 and sg > sf:
                return False
        if sg != sf:  # j = 1 demands equality
            return False
    return True


def down_moves(b: SignedSeq, f: Weight) -> set:
    """All g with f moving down to g by one elementary move."""
    bits = b.bits
    p = len(bits)
    out = set()
    for i in range(p):
        for j in range(i + 1, p):
            if bits[i] == bits[j]:
                if bits[i] == 0 and f[i] > f[j] or bits[i] == 1 and f[i] < f[j]:
                    g = list(f)
                    g[i], g[j] = g[j], g[i]
                    out.add(tuple(g))
            elif f[i] == f[j]:
                g = list(f)
                g[i] -= 1 if bits[i] == 0 else -1
                g[j] += 1 if bits[j] == 0 else -1
                out.add(tuple(g))
    return out


def move_closure_reaches(b: SignedSeq, f: Weight, g: Weight) -> bool:
    """Diagnostic: is g reachable from f by chains of down moves?

    Strictly weaker than bruhat_leq for general sequences.
    """
    seen = {f}
    frontier = [f]
    bound = max(max(abs(v) for v in f), max(abs(v) for v in g))
    while frontier:
        h = frontier.pop()
        if h == g:
            return True
        for x in down_moves(b, h):
            if x not in seen and all(abs(v) <= bound for v in x):
                seen.add(x)
                frontier.append(x)
    return g in seen


def interval(b: SignedSeq, g: Weight, f: Weight) -> list:
    """All h with g <= h <= f, by right-to-left backtracking.

    Entries of any h in the interval are bounded by the max magnitude
    of the endpoints, which makes the search finite; partial suffixes are
    pruned against the sharp statistics of both endpoints.
    """
    if not bruhat_leq(b, g, f):
        raise ValueError("interval endpoints are not comparable: g must be <= f")
    p = len(b)
    if p == 0:
        return [()]
    bound = max(max(abs(v) for v in f), max(abs(v) for v in g))
    bits = b.bits
    avals = list(range(-bound - 1, bound + 1))

    def suffix_sharp(h: Weight, j: int):
        # sharp(h, a, j) for every scanned a, as a list
        return [
            sum((-1 if bits[i] else 1) for i in range(j - 1, p) if h[i] <= a)
            for a in avals
        ]

    sg = [None] + [suffix_sharp(g, j) for j in range(1, p + 1)]
    sf = [None] + [suffix_sharp(f, j) for j in range(1, p + 1)]

    results = []
    suffix: list = []

    def recurse(j: int, cur: list):
        # cur[idx] = sharp of the chosen suffix h_{j+1..p} at avals[idx]
        if j == 0:
            results.append(tuple(suffix))
            return
        s = -1 if bits[j - 1] else 1
        for v in range(-bound, bound + 1):
            nxt = [
                cur[idx] + (s if v <= a else 0) for idx, a in enumerate(avals)
            ]
            if j > 1:
                ok = all(
                    sg[j][idx] <= nxt[idx] <= sf[j][idx]
                    for idx in range(len(avals))
                )
            else:
                ok = all(nxt[idx] == sf[1][idx] for idx in range(len(avals)))
            if ok:
                suffix.insert(0, v)
                recurse(j - 1, nxt)
                suffix.pop(0)

    recurse(p, [0] * len(avals))
    return results


def shift_one(b: SignedSeq) -> Weight:
    """The all-ones shift vector (sum of (-1)^{b_i} d_i is (1,...,1))."""
    return (1,) * len(b)


# ---------------------------------------------------------------------------
# Weyl vectors and the weight <-> index dictionary
# ---------------------------------------------------------------------------


def weyl_rho(b: SignedSeq) -> Weight:
    """Normalized Weyl vector in b-ordered eps coordinates.

    Characterized by (rho|beta) = (beta|beta)/2 on simple roots and the
    boundary value at the last slot (1 for a V slot, 0 for a W slot).
    """
    p = len(b)
    if p == 0:
        return ()
    rho = [0] * p
    rho[p - 1] = 0 if b.bits[p - 1] else 1
    for i in range(p - 2, -1, -1):
        if b.bits[i] == b.bits[i + 1]:
            rho[i] = rho[i + 1] + 1
        else:
            rho[i] = -rho[i + 1]
    return tuple(rho)


def weight_to_f(b: SignedSeq, lam: Weight) -> Weight:
    """f(i) = (lam + rho_b | eps_i^b), with (eps_i^b|eps_i^b) = (-1)^{b_i}."""
    rho = weyl_rho(b)
    return tuple(
        (lam[i] + rho[i]) * (-1 if b.bits[i] else 1) for i in range(len(b))
    )


def f_to_weight(b: SignedSeq, f: Weight) -> Weight:
    rho = weyl_rho(b)
    return tuple(
        f[i] * (-1 if b.bits[i] else 1) - rho[i] for i in range(len(b))
    )


def supertrace_weight(b: SignedSeq) -> Weight:
    """The supertrace direction in b-ordered coordinates: (-1)^{b_i}."""
    return tuple((-1 if bit else 1) for bit in b.bits)


# ---------------------------------------------------------------------------
# Adjacent sequences: index maps f^L / f^U and weight maps
# ---------------------------------------------------------------------------


def _swap(f: Weight, kappa: int) -> Weight:
    g = list(f)
    g[kappa - 1], g[kappa] = g[kappa], g[kappa - 1]
    return tuple(g)


def f_L(f: Weight, kappa: int) -> Weight:
    """Swap slots kappa, kappa+1, or bump both up when the values tie."""
    if f[kappa - 1] != f[kappa]:
        return _swap(f, kappa)
    g = list(f)
    g[kappa - 1] += 1
    g[kappa] += 1
    return tuple(g)


def f_U(f: Weight, kappa: int) -> Weight:
    """Swap slots kappa, kappa+1, or bump both down when the values tie."""
    if f[kappa - 1] != f[kappa]:
        return _swap(f, kappa)
    g = list(f)
    g[kappa - 1] -= 1
    g[kappa] -= 1
    return tuple(g)


def _check_adjacent(b: SignedSeq, kappa: int):
    if not (1 <= kappa < len(b)) or b.bits[kappa - 1] == b.bits[kappa]:
        raise ValueError(f"sequence {b} has no mixed pair at position {kappa}")


def lambda_L(b: SignedSeq, kappa: int, lam: Weight) -> Weight:
    """Highest-weight map for irreducibles across the odd reflection.

    Input in b coordinates, output in coordinates of the swapped sequence.
    The odd simple root at kappa pairs to +-(lam_kappa + lam_{kappa+1}),
    so the two orientations share the same zero test.
    """
    _check_adjacent(b, kappa)
    pairing = lam[kappa - 1] + lam[kappa]
    mu = list(lam)
    if pairing != 0:
        mu[kappa - 1] -= 1
        mu[kappa] += 1
    return _swap(tuple(mu), kappa)


def lambda_U(b: SignedSeq, kappa: int, lam: Weight) -> Weight:
    """Highest-weight map for tiltings across the odd reflection."""
    _check_adjacent(b, kappa)
    pairing = lam[kappa - 1] + lam[kappa]
    mu = list(lam)
    if pairing == 0:
        mu[kappa - 1] -= 2
        mu[kappa] += 2
    else:
        mu[kappa - 1] -= 1
        mu[kappa] += 1
    return _swap(tuple(mu), kappa)


# ---------------------------------------------------------------------------
# Partitions and semi-infinite wedge tails
# ---------------------------------------------------------------------------


def check_partition(parts: tuple):
    if any(p <= 0 for p in parts) or any(
        parts[i] < parts[i + 1] for i in range(len(parts) - 1)
    ):
        raise ValueError(f"not a partition: {parts}")


def conjugate(parts: tuple) -> tuple:
    check_partition(parts)
    if not parts:
        return ()
    return tuple(
        sum(1 for p in parts if p > i) for i in range(parts[0])
    )


def v_tail(parts: tuple, kw: int) -> tuple:
    """First kw entries of the V-side tail: f(u_i) = lam_i + 1 - i."""
    check_partition(parts)
    return tuple((parts[i] if i < len(parts) else 0) + 1 - (i + 1) for i in range(kw))


def w_tail(parts: tuple, kw: int) -> tuple:
    """First kw entries of the W-side tail: f(u_i) = i - lam_i."""
    check_partition(parts)
    return tuple((i + 1) - (parts[i] if i < len(parts) else 0) for i in range(kw))


def partition_from_v_tail(tail: tuple) -> tuple:
    lam = tuple(tail[i] + i for i in range(len(tail)))
    return tuple(p for p in lam if p > 0)


def partition_from_w_tail(tail: tuple) -> tuple:
    lam = tuple((i + 1) - tail[i] for i in range(len(tail)))
    return tuple(p for p in lam if p > 0)


@dataclass(frozen=True)
class WedgeIndex:
    """Head in Z^{m+n} plus a semi-infinite tail encoded by a partition."""

    head: tuple
    side: str  # "V" or "W"
    parts: tuple

    def __post_init__(self):
        if self.side not in ("V", "W"):
            raise ValueError("side must be V or W")
        check_partition(self.parts)

    def tail(self, kw: int) -> tuple:
        if kw < len(self.parts):
            raise ValueError("truncation shorter than the partition length")
        return v_tail(self.parts, kw) if self.side == "V" else w_tail(self.parts, kw)

    def flat(self, kw: int) -> tuple:
        return self.head + self.tail(kw)


def natural_bij(x: WedgeIndex) -> WedgeIndex:
    """The tail-conjugating bijection between V-side and W-side indices."""
    return WedgeIndex(x.head, "W" if x.side == "V" else "V", conjugate(x.parts))


# ---------------------------------------------------------------------------
# Typicality predicates (standard sequence only)
# ---------------------------------------------------------------------------


def _require_standard(b: SignedSeq):
    if not b.is_standard():
        raise ValueError("predicate is defined for the standard sequence only")


def typical(b: SignedSeq, lam: Weight) -> bool:
    _require_standard(b)
    f = weight_to_f(b, lam)
    m = b.m
    return all(f[i] != f[j] for i in range(m) for j in range(m, len(b)))


def antidominant(b: SignedSeq, lam: Weight) -> bool:
    _require_standard(b)
    f = weight_to_f(b, lam)
    m = b.m
    return all(f[i] <= f[i + 1] for i in range(m - 1)) and all(
        f[j] >= f[j + 1] for j in range(m, len(b) - 1)
    )


# ---------------------------------------------------------------------------
# Text encodings
# ---------------------------------------------------------------------------


def parse_weight(text: str) -> Weight:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(v) for v in text.split(","))


def format_weight(f: Weight) -> str:
    return ",".join(str(v) for v in f)

