"""Pairwise coprime decomposition of a finite family of polynomials.

Only products, exact quotients and gcds are used; nothing is factored into
irreducibles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import InvalidInput
from .upoly import UniPoly, upoly_gcd


@dataclass(frozen=True)
class CoprimeFactorization:
    """``inputs[k] == units[k] * prod(p ** exps[k] for p, exps in factors)``."""

    inputs: tuple
    factors: tuple  # of (UniPoly, tuple[int, ...]) pairs, one exponent per input
    units: tuple

    @property
    def polys(self) -> tuple:
        return tuple(p for p, _ in self.factors)

    def exponent(self, factor_index: int, input_index: int) -> int:
        return self.factors[factor_index][1][input_index]

    def rebuild(self, k: int) -> UniPoly:
        out = UniPoly.const(self.units[k])
        for p, exps in self.factors:
            out = out * p ** exps[k]
        return out


def _split_power(g: UniPoly, p: UniPoly):
    """Largest ``c`` with ``p**c | g`` and the cofactor."""
    c = 0
    while True:
        q, r = g.divmod(p)
        if not r.is_zero():
            return c, g
        g = q
        c += 1


def coprime_factorization(polys: Sequence[UniPoly]) -> CoprimeFactorization:
    polys = tuple(polys)
    if any(g.is_zero() for g in polys):
        raise InvalidInput("coprime factorization of a family containing 0")
    current = list(polys)
    found = []
    while True:
        nonconst = [g for g in current if not g.is_constant()]
        if not nonconst:
            break
        p = nonconst[-1].monic()
        while True:
            exps, rest, refined = [], [], None
            for g in current:
                c, h = _split_power(g, p)
                q = upoly_gcd(p, h)
                if not q.is_constant():
                    refined = q
                    break
                exps.append(c)
                rest.append(h)
            if refined is None:
                break
            p = refined
        found.append((p.primitive(), tuple(exps)))
        current = rest

    found.sort(key=lambda item: item[0].sort_key())
    units = []
    for k, g in enumerate(polys):
        prod = UniPoly.const(1)
        for p, exps in found:
            prod = prod * p ** exps[k]
        units.append(g.exact_div(prod).lead)
    return CoprimeFactorization(polys, tuple(found), tuple(Fraction(u) for u in units))
