"""Elements of the group ring ``ℚ[Pic] = ℚ[t_1^±, ..., t_k^±]``."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .sparse import SparsePoly, parse_terms


def variable_names(k: int) -> tuple[str, ...]:
    return ("t",) if k == 1 else tuple(f"t{j + 1}" for j in range(k))


class LaurentElement(SparsePoly):
    """Laurent polynomial; the monomial ``t^q`` is the class of the twist by ``q``."""

    __slots__ = ()
    allow_negative = True

    @classmethod
    def t(cls, q: Sequence[int], c=1) -> LaurentElement:
        return cls.monomial(tuple(q), c)

    @classmethod
    def parse(cls, text: str, k: int) -> LaurentElement:
        names = variable_names(k)
        aliases = {"t1": "t"} if k == 1 else {}
        return cls(k, parse_terms(text, names, aliases=aliases, allow_negative=True))

    @property
    def k(self) -> int:
        return self.nvars

    def augmentation(self) -> Fraction:
        """Value at ``t = (1, ..., 1)``."""
        return sum(self._terms.values(), Fraction(0))

    def is_polynomial(self) -> bool:
        return all(x >= 0 for e in self._terms for x in e)

    def normalize(self, order="grlex") -> tuple[LaurentElement, LaurentElement]:
        """Split off a monomial unit: returns ``(unit, g)`` with ``self == unit * g``.

        ``g`` is a polynomial not divisible by any ``t_j``, with coprime
        integer coefficients and a positive leading coefficient.
        """
        if self.is_zero():
            return LaurentElement.constant(self.k, 1), self
        shift = tuple(min(e[j] for e in self._terms) for j in range(self.k))
        den = lcm(*(c.denominator for c in self._terms.values()))
        content = gcd(*(int(c * den) for c in self._terms.values()))
        scale = Fraction(den, content)
        g = LaurentElement(
            self.k,
            {tuple(x - s for x, s in zip(e, shift)): c * scale for e, c in self._terms.items()},
        )
        if g.leading(order)[1] < 0:
            g, scale = -g, -scale
        return LaurentElement.t(shift, 1 / scale), g

    def normalized(self, order="grlex") -> LaurentElement:
        return self.normalize(order)[1]

    def __str__(self) -> str:
        return self.format(variable_names(self.k))

    def __repr__(self) -> str:
        return f"LaurentElement({self})"
