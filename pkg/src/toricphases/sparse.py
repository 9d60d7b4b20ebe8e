"""Sparse polynomials with rational coefficients, and a small expression parser."""

from __future__ import annotations

import ast
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .errors import ParseError

Exponent = tuple  # tuple[int, ...]

ORDERS: dict[str, Callable[[Exponent], tuple]] = {
    "lex": lambda e: tuple(e),
    "grlex": lambda e: (sum(e), tuple(e)),
    "grevlex": lambda e: (sum(e), tuple(-x for x in reversed(e))),
}


def order_key(order: str | Callable) -> Callable[[Exponent], tuple]:
    if callable(order):
        return order
    try:
        return ORDERS[order]
    except KeyError:
        raise ValueError(f"unknown term order {order!r}; choose from {sorted(ORDERS)}") from None


def _clean(terms: Mapping) -> dict:
    return {e: Fraction(c) for e, c in terms.items() if c != 0}


def add_terms(a: Mapping, b: Mapping, scale=1) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + scale * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def mul_terms(a: Mapping, b: Mapping) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


class SparsePoly:
    """Immutable mapping ``exponent tuple -> Fraction`` with ring arithmetic.

    Subclasses decide whether negative exponents are allowed and carry any
    extra context through :meth:`_new`.
    """

    __slots__ = ("nvars", "_terms", "_hash")
    allow_negative = False

    def __init__(self, nvars: int, terms: Mapping | None = None):
        self.nvars = nvars
        terms = _clean(terms or {})
        for e in terms:
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
            if not self.allow_negative and any(x < 0 for x in e):
                raise ValueError(f"negative exponent {e} in a polynomial")
        self._terms = terms
        self._hash = None

    def _new(self, terms):
        return type(self)(self.nvars, terms)

    # construction helpers
    @classmethod
    def constant(cls, nvars: int, c=1):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exponent: Sequence[int], c=1):
        return cls(len(exponent), {tuple(exponent): c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def _coerce(self, other):
        if isinstance(other, SparsePoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other._terms
        if isinstance(other, (int, Fraction)):
            return _clean({(0,) * self.nvars: other})
        return NotImplemented

    def __add__(self, other):
        t = self._coerce(other)
        if t is NotImplemented:
            return t
        return self._new(add_terms(self._terms, t))

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        t = self._coerce(other)
        if t is NotImplemented:
            return t
        return self._new(add_terms(self._terms, t, -1))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        t = self._coerce(other)
        if t is NotImplemented:
            return t
        return self._new(mul_terms(self._terms, t))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) == 1 and self.allow_negative:
                (e, c), = self._terms.items()
                return self._new({tuple(k * x for x in e): Fraction(1) / Fraction(c) ** (-k)})
            raise ValueError("negative power of a non-monomial")
        out = self._new({(0,) * self.nvars: 1})
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        t = self._coerce(other)
        if t is NotImplemented:
            return NotImplemented
        return self._terms == t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def leading(self, order="grlex") -> tuple[Exponent, Fraction]:
        key = order_key(order)
        e = max(self._terms, key=key)
        return e, self._terms[e]

    def sorted_terms(self, order="grlex"):
        key = order_key(order)
        return sorted(self._terms.items(), key=lambda ec: key(ec[0]), reverse=True)

    def evaluate(self, point: Sequence):
        total = Fraction(0)
        for e, c in self._terms.items():
            v = Fraction(c)
            for x, k in zip(point, e):
                v *= Fraction(x) ** k
            total += v
        return total

    def format(self, names: Sequence[str], order="grlex") -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms(order):
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k != 0
            )
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            parts.append(("-" if c < 0 else "+", body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


_ALLOWED_BIN = (ast.Add, ast.Sub, ast.Mult, ast.Pow)


def parse_terms(text: str, names: Sequence[str], *, aliases: Mapping[str, str] | None = None,
                allow_negative: bool = False, field: str | None = None) -> dict:
    """Parse an integer-coefficient polynomial expression into a term dict.

    Grammar: variables from ``names``, integers, ``+ - *``, ``^`` (or
    ``**``) with integer exponents, and parentheses.
    """
    aliases = dict(aliases or {})
    index = {n: i for i, n in enumerate(names)}
    nv = len(names)
    try:
        tree = ast.parse(text.replace("^", "**").strip(), mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse polynomial {text!r}: {exc.msg}", field=field) from None

    def const_int(node):
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return node.value
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = const_int(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        raise ParseError(f"exponent must be an integer literal in {text!r}", field=field)

    def ev(node) -> dict:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return _clean({(0,) * nv: node.value})
        if isinstance(node, ast.Name):
            name = aliases.get(node.id, node.id)
            if name not in index:
                raise ParseError(f"unknown variable {node.id!r} in {text!r}", field=field)
            return {tuple(int(i == index[name]) for i in range(nv)): Fraction(1)}
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return {e: -c for e, c in v.items()} if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and isinstance(node.op, _ALLOWED_BIN):
            if isinstance(node.op, ast.Pow):
                base, k = ev(node.left), const_int(node.right)
                if k < 0:
                    if not allow_negative or len(base) != 1:
                        raise ParseError(f"negative power not allowed in {text!r}", field=field)
                    (e, c), = base.items()
                    return {tuple(k * x for x in e): Fraction(1) / c ** (-k)}
                out = {(0,) * nv: Fraction(1)}
                for _ in range(k):
                    out = mul_terms(out, base)
                return out
            left, right = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return add_terms(left, right)
            if isinstance(node.op, ast.Sub):
                return add_terms(left, right, -1)
            return mul_terms(left, right)
        raise ParseError(f"unsupported syntax in {text!r}", field=field)

    return ev(tree)


def monomials_of_degree(degrees: Sequence[Sequence[int]], target: Sequence[int],
                        limit: int = 100_000) -> list[tuple[int, ...]]:
    """Exponent vectors ``e >= 0`` with ``Σ e_i deg_i = target``.

    Requires a covector positive on every variable degree, so the set is
    finite; variables of degree zero are not allowed.
    """
    nv = len(degrees)
    if nv == 0:
        return [()] if not any(target) else []
    k = len(target)
    cands = [tuple(sum(col) for col in zip(*degrees)), (1,) * k]
    cands += [tuple(int(i == j) for j in range(k)) for i in range(k)]
    cands += [tuple(-x for x in c) for c in list(cands)]
    c = next((c for c in cands if all(sum(a * b for a, b in zip(c, d)) > 0 for d in degrees)), None)
    if c is None:
        raise ValueError("grading is not positive; monomials of a fixed degree are infinite")
    dot = lambda v: sum(a * b for a, b in zip(c, v))  # noqa: E731
    out: list[tuple[int, ...]] = []

    def rec(i, rest, acc):
        if len(out) > limit:
            raise ValueError("too many monomials")
        if i == nv:
            if not any(rest):
                out.append(tuple(acc))
            return
        top = dot(rest) // dot(degrees[i]) if dot(rest) >= 0 else -1
        for e in range(top, -1, -1):
            rec(i + 1, tuple(r - e * d for r, d in zip(rest, degrees[i])), acc + [e])

    rec(0, tuple(target), [])
    return out

