"""The q=1 layer: irreducible and tilting characters in Verma characters.

For a Borel chosen by a 0^m1^n-sequence, the multiplicity of a Verma
character in an irreducible (resp. tilting) character is the value at q=1
of a dual-canonical (resp. canonical) coefficient, read through the
weight <-> index dictionary.  Dual columns can have infinite support, so
every expansion carries the window it was computed in.
"""
from __future__ import annotations

from dataclasses import dataclass

from .canonical import CANONICAL, DUAL, auto_level, bkl
from .combinat import (
    SignedSeq,
    f_to_weight,
    format_weight,
    lambda_L,
    lambda_U,
    weight_to_f,
)

IRREDUCIBLE = "irreducible"
TILTING = "tilting"


@dataclass
class CharacterExpansion:
    b: SignedSeq
    kind: str
    lam: tuple
    window: int
    terms: dict  # mu (weight tuple in b coordinates) -> int multiplicity

    def mult(self, mu: tuple) -> int:
        return self.terms.get(tuple(mu), 0)

    def to_json(self) -> dict:
        return {
            "b": str(self.b),
            "lambda": format_weight(self.lam),
            "kind": self.kind,
            "window": self.window,
            "terms": [
                {"mu": format_weight(mu), "mult": self.terms[mu]}
                for mu in sorted(self.terms)
            ],
        }


def _expansion(b: SignedSeq, lam: tuple, kind: str, k: int | None) -> CharacterExpansion:
    lam = tuple(lam)
    f = weight_to_f(b, lam)
    k = k if k is not None else auto_level(b, f)
    col = bkl(b, f, DUAL if kind == IRREDUCIBLE else CANONICAL, k=k, check_stability=False)
    terms = {}
    for g, c in col.entries.items():
        v = c.ev(1)
        if v:
            terms[f_to_weight(b, g)] = v
    return CharacterExpansion(b, kind, lam, k, terms)


def irreducible_character(b: SignedSeq, lam: tuple, k: int | None = None) -> CharacterExpansion:
    """[L_b(lam)] = sum of ell(1) [M_b(mu)], within the reported window."""
    return _expansion(b, lam, IRREDUCIBLE, k)


def tilting_character(b: SignedSeq, lam: tuple, k: int | None = None) -> CharacterExpansion:
    """[T_b(lam)] = sum of t(1) [M_b(mu)], within the reported window."""
    return _expansion(b, lam, TILTING, k)


def _swap_weight(mu: tuple, kappa: int) -> tuple:
    g = list(mu)
    g[kappa - 1], g[kappa] = g[kappa], g[kappa - 1]
    return tuple(g)


def _verma_dict_to_parabolic(mdict: dict, kappa: int, tie_bump: int, k: int) -> dict:
    """Telescope a q=1 Verma-coefficient dict into parabolic-N coefficients.

    mdict maps f-indices to integers; a tied index contributes to itself
    and to its bump (down for a (0,1) pair, up for a (1,0) pair).  The
    parabolic characters are linearly independent, so two Verma dicts
    define the same formal character exactly when these agree.
    """
    out: dict = {}
    for h, mult in mdict.items():
        out[h] = out.get(h, 0) + mult
        if h[kappa - 1] == h[kappa]:
            hb = list(h)
            hb[kappa - 1] += tie_bump
            hb[kappa] += tie_bump
            hb = tuple(hb)
            if max(abs(v) for v in hb) <= k:
                out[hb] = out.get(hb, 0) + mult
    return {h: v for h, v in out.items() if v}


def odd_reflection_check(b: SignedSeq, kappa: int, lam: tuple, k: int | None = None):
    """A character computed on both sides of an odd reflection must agree.

    Every Verma of the first Borel is rewritten as a Verma of the second
    (index level: a swap of the two distinguished slots).  The rewritten
    expansion and the direct expansion at the reflected highest weight are
    infinite alternating sums that agree as formal characters, so both are
    telescoped into parabolic-N coefficients, where comparison is finite
    and exact on the safe part of the window.  Mismatch raises.
    """
    if b.bits[kappa - 1] == b.bits[kappa]:
        raise ValueError(f"{b} has no mixed pair at {kappa}")
    bp = b.swap(kappa)
    lam = tuple(lam)
    f = weight_to_f(b, lam)
    k = k if k is not None else auto_level(b, f) + 1
    tie_bump = 1 if bp.bits[kappa - 1] == 1 else -1  # (1,0) ties bump up
    for kind, move in ((IRREDUCIBLE, lambda_L), (TILTING, lambda_U)):
        here = _expansion(b, lam, kind, k)
        lam_p = move(b, kappa, lam)
        there = _expansion(bp, lam_p, kind, k)
        rewritten = {}
        for mu, mult in here.terms.items():
            rewritten[_swap_weight(weight_to_f(b, mu), kappa)] = mult
        direct = {weight_to_f(bp, mu): mult for mu, mult in there.terms.items()}
        na = _verma_dict_to_parabolic(rewritten, kappa, tie_bump, k)
        nb = _verma_dict_to_parabolic(direct, kappa, tie_bump, k)
        safe = k - 1
        for h in set(na) | set(nb):
            if max(abs(v) for v in h) > safe:
                continue
            if na.get(h, 0) != nb.get(h, 0):
                raise AssertionError(
                    f"odd reflection mismatch for {kind} at lam={lam}, b={b}, "
                    f"kappa={kappa}, index {h}: {na.get(h, 0)} vs {nb.get(h, 0)}"
                )
    return True
