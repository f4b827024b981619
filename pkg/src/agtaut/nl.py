"""Tautological projections of Noether-Lefschetz and product cycles.

The projection of the locus of abelian varieties with a u-dimensional
abelian subvariety of induced polarization type delta = (d_1 | ... | d_u)
is a rational multiple of the projection of the plain product locus.  The
multiplier is

    c = prod_k d_k^(2u - 4k + 2)
        * prod_{1 <= i < j <= u} prod_{p | d_j / d_i}
              (1 - p^(-2(j-i))) / (1 - p^(-2(j-i+1)))
        * d^(2(g-u) + 1)
        * prod_{j=1}^{u} prod_{p | d_j} (1 - p^(-2(j + g - 2u)))

with d = d_1 ... d_u and all products over primes.  The two displayed
specializations (u = 1 and u = 2) are implemented as separate code paths
purely to cross-check this constant.

The elliptic-homomorphism ("tilde") cycles are related to the plain ones by
the unit-triangular divisor-sum transform with kernel sigma_1(d / dhat);
packaging their projections into a q-series yields the weight-2g Eisenstein
series, normalized here with constant term 1 and q-coefficients
-(4g / B_2g) sigma_{2g-1}(d).

Only u = 1 and u = 2 product-cycle projections are supported; larger u is
out of scope and rejected.

Convention at u = g/2: the product and NL cycles are the plain pushforward
of the fundamental class, with no division by the automorphism swapping
the two equal-dimensional factors; no coefficient adjustment is applied
anywhere in this module.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import List, Sequence, Tuple

from .arith import abs_bernoulli, bernoulli, divisors, factorize, sigma
from .linalg import Matrix, invert
from .ring import LambdaPolynomial, TautClass, multiply, reduce


class PolarizationType:
    """Divisibility chain (d_1 | d_2 | ... | d_u) of positive integers."""

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[int]):
        entries = tuple(int(d) for d in entries)
        if not entries:
            raise ValueError("polarization type must have at least one entry")
        if any(d < 1 for d in entries):
            raise ValueError(f"entries must be positive, got {entries}")
        for a, b in zip(entries, entries[1:]):
            if b % a != 0:
                raise ValueError(
                    f"invalid polarization type {entries}: each entry must "
                    f"divide the next ({a} does not divide {b})"
                )
        self.entries = entries

    @property
    def u(self) -> int:
        return len(self.entries)

    @property
    def product(self) -> int:
        result = 1
        for d in self.entries:
            result *= d
        return result

    def complementary(self, g: int) -> "PolarizationType":
        """Type induced on the complementary subvariety: (1^(g-2u), d_1, ..., d_u)."""
        if 2 * self.u > g:
            raise ValueError(f"type {self.entries} too long for genus {g}")
        return PolarizationType((1,) * (g - 2 * self.u) + self.entries)

    def double(self, g: int) -> "PolarizationType":
        """(1^(g-2u), d_1, d_1, ..., d_u, d_u)."""
        if 2 * self.u > g:
            raise ValueError(f"type {self.entries} too long for genus {g}")
        doubled: Tuple[int, ...] = ()
        for d in self.entries:
            doubled += (d, d)
        return PolarizationType((1,) * (g - 2 * self.u) + doubled)

    def padded(self, length: int) -> "PolarizationType":
        """Left-pad with 1 entries up to the given length."""
        if self.u > length:
            raise ValueError(f"type {self.entries} longer than {length}")
        return PolarizationType((1,) * (length - self.u) + self.entries)

    def p_part(self, p: int) -> "PolarizationType":
        """Entrywise p-power part; again a divisibility chain."""
        parts = []
        for d in self.entries:
            e = 0
            while d % p == 0:
                d //= p
                e += 1
            parts.append(p**e)
        return PolarizationType(parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolarizationType) and self.entries == other.entries

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __repr__(self) -> str:
        return f"PolarizationType({list(self.entries)})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


def _as_type(delta) -> PolarizationType:
    if isinstance(delta, PolarizationType):
        return delta
    if isinstance(delta, int):
        return PolarizationType((delta,))
    return PolarizationType(delta)


class QSeries:
    """Truncated power series in q with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        if not coeffs:
            raise ValueError("a q-series stores at least the constant term")
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, d: int) -> Fraction:
        if not 0 <= d <= self.order:
            raise ValueError(f"coefficient index {d} outside [0, {self.order}]")
        return self.coeffs[d]

    def __eq__(self, other) -> bool:
        return isinstance(other, QSeries) and self.coeffs == other.coeffs

    def __str__(self) -> str:
        bits = [str(self.coeffs[0])]
        for d in range(1, self.order + 1):
            c = self.coeffs[d]
            if c == 0:
                continue
            power = "q" if d == 1 else f"q^{d}"
            if c < 0:
                bits.append(f"- {-c} {power}")
            else:
                bits.append(f"+ {c} {power}")
        return " ".join(bits)

    def __repr__(self) -> str:
        return f"QSeries(order={self.order}, {self})"

    def to_json_dict(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: dict) -> "QSeries":
        series = cls([Fraction(c) for c in data["coeffs"]])
        if series.order != int(data["order"]):
            raise ValueError("stored order does not match coefficient count")
        return series

    @classmethod
    def from_json(cls, text: str) -> "QSeries":
        return cls.from_json_dict(json.loads(text))


# -- product cycles and NL projections ------------------------------------


def taut_product_cycle(g: int, u: int) -> TautClass:
    """Projection of the product locus of u- and (g-u)-dimensional factors.

    Only u = 1 and u = 2 carry closed formulas; anything else is out of
    scope and rejected.
    """
    if u < 1 or 2 * u > g:
        raise ValueError(f"product cycle requires 1 <= u <= g/2, got u={u}, g={g}")
    if u == 1:
        coeff = Fraction(g) / (6 * abs_bernoulli(2 * g))
        return TautClass.monomial(g, (g - 1,), coeff)
    if u == 2:
        coeff = Fraction(g * (g - 1)) / (
            360 * abs_bernoulli(2 * g) * abs_bernoulli(2 * g - 2)
        )
        return TautClass.monomial(g, (g - 3, g - 1), coeff)
    raise ValueError(f"product cycle with u={u} is out of scope (u <= 2 only)")


def nl_constant(g: int, delta) -> Fraction:
    """Multiplier relating the NL projection to the product-cycle projection."""
    delta = _as_type(delta)
    u = delta.u
    if 2 * u > g:
        raise ValueError(f"type {delta} too long for genus {g}")
    c = Fraction(1)
    for k, d_k in enumerate(delta.entries, start=1):
        c *= Fraction(d_k) ** (2 * u - 4 * k + 2)
    for i in range(1, u + 1):
        for j in range(i + 1, u + 1):
            ratio = delta.entries[j - 1] // delta.entries[i - 1]
            for p in factorize(ratio).primes():
                c *= (1 - Fraction(p) ** (-2 * (j - i))) / (
                    1 - Fraction(p) ** (-2 * (j - i + 1))
                )
    c *= Fraction(delta.product) ** (2 * (g - u) + 1)
    for j in range(1, u + 1):
        for p in factorize(delta.entries[j - 1]).primes():
            c *= 1 - Fraction(p) ** (-2 * (j + g - 2 * u))
    return c


def taut_nl(g: int, delta) -> TautClass:
    """Projection of the NL cycle of type delta: constant times product cycle."""
    delta = _as_type(delta)
    return nl_constant(g, delta) * taut_product_cycle(g, delta.u)


def taut_nl_d_special(g: int, d: int) -> TautClass:
    """The displayed u = 1 projection, computed without nl_constant:

    (g d^(2g-1) / (6 |B_2g|)) prod_{p | d} (1 - p^(2-2g)) lambda_{g-1}.
    """
    if g < 2 or d < 1:
        raise ValueError(f"requires g >= 2 and d >= 1, got ({g}, {d})")
    coeff = Fraction(g) * Fraction(d) ** (2 * g - 1) / (6 * abs_bernoulli(2 * g))
    for p in factorize(d).primes():
        coeff *= 1 - Fraction(p) ** (2 - 2 * g)
    return TautClass.monomial(g, (g - 1,), coeff)


def taut_nl_pair_special(g: int, d1: int, d2: int) -> TautClass:
    """The displayed u = 2 projection, computed without nl_constant."""
    if g < 4:
        raise ValueError(f"pair projection requires g >= 4, got {g}")
    if d1 < 1 or d2 % d1 != 0:
        raise ValueError(f"requires d1 | d2, got ({d1}, {d2})")
    coeff = (
        Fraction(g * (g - 1))
        * Fraction(d1) ** (2 * g - 1)
        * Fraction(d2) ** (2 * g - 5)
        / (360 * abs_bernoulli(2 * g) * abs_bernoulli(2 * g - 2))
    )
    for p in factorize(d1).primes():
        coeff *= 1 - Fraction(p) ** (6 - 2 * g)
    for p in factorize(d2).primes():
        coeff *= 1 - Fraction(p) ** (4 - 2 * g)
    for p in factorize(d2 // d1).primes():
        coeff *= (1 - Fraction(p) ** (-2)) / (1 - Fraction(p) ** (-4))
    return TautClass.monomial(g, (g - 3, g - 1), coeff)


# -- tilde cycles and the Eisenstein identity ------------------------------


def tilde_to_plain(g: int, D: int) -> Matrix:
    """Basis change expressing each tilde cycle as a divisor sum of plain
    cycles, d in [1, D]: M[d, dhat] = sigma_1(d / dhat) when dhat | d,
    else 0.  Unit diagonal, lower triangular."""
    if D < 1:
        raise ValueError(f"D must be >= 1, got {D}")
    matrix = [[Fraction(0)] * D for _ in range(D)]
    for d in range(1, D + 1):
        for dhat in divisors(d):
            matrix[d - 1][dhat - 1] = sigma(1, d // dhat)
    return matrix


def plain_to_tilde(g: int, D: int) -> Matrix:
    """Exact inverse of tilde_to_plain; the roundtrip is the identity."""
    return invert(tilde_to_plain(g, D))


def taut_nl_tilde(g: int, d: int) -> TautClass:
    """Projection of the degree-d elliptic-homomorphism cycle.

    For d >= 1 this is computed along two independent routes, the divisor
    sum over plain cycles and the closed form
    (g sigma_{2g-1}(d) / (6 |B_2g|)) lambda_{g-1}; their equality is
    asserted on every call.  The d = 0 class is the convention
    ((-1)^g / 24) lambda_{g-1}.
    """
    if g < 2 or d < 0:
        raise ValueError(f"requires g >= 2 and d >= 0, got ({g}, {d})")
    if d == 0:
        return TautClass.monomial(g, (g - 1,), Fraction((-1) ** g, 24))
    total = TautClass.zero(g)
    for dhat in divisors(d):
        total = total + sigma(1, d // dhat) * taut_nl_d_special(g, dhat)
    closed = TautClass.monomial(
        g, (g - 1,), Fraction(g) * sigma(2 * g - 1, d) / (6 * abs_bernoulli(2 * g))
    )
    if total != closed:
        raise AssertionError(
            f"tilde routes disagree at (g={g}, d={d}): "
            f"divisor sum {total} vs closed form {closed}"
        )
    return closed


def eisenstein_series(g: int, D: int) -> QSeries:
    """Weight-2g Eisenstein series, truncated at q^D.

    Normalized with constant term 1; the q^d coefficient is
    -(4g / B_2g) sigma_{2g-1}(d).  With sign(B_2g) = (-1)^(g+1) this is
    exactly 24 (-1)^g times the lambda_{g-1} coefficient of the projected
    degree-d tilde cycle.
    """
    if g < 2 or D < 0:
        raise ValueError(f"requires g >= 2 and D >= 0, got ({g}, {D})")
    lead = Fraction(-4 * g) / bernoulli(2 * g)
    coeffs = [Fraction(1)]
    for d in range(1, D + 1):
        coeffs.append(lead * sigma(2 * g - 1, d))
    return QSeries(coeffs)


# -- formal expressions and the projection calculus ------------------------

Symbol = Tuple[str, tuple]

_NL_KINDS = ("NL", "NLt", "P")

_TOKEN_SYMBOL = re.compile(r"^(NL|NLt|P|L)\(([0-9,\s]*)\)$")
_TOKEN_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def _make_symbol(kind: str, args: Tuple[int, ...], g: int) -> Symbol:
    if kind == "NL":
        delta = PolarizationType(args)
        if 2 * delta.u > g:
            raise ValueError(f"NL type {delta} too long for genus {g}")
        return ("NL", delta.entries)
    if kind == "NLt":
        if len(args) != 1 or args[0] < 0:
            raise ValueError(f"NLt takes a single degree >= 0, got {args}")
        return ("NLt", args)
    if kind == "P":
        if len(args) != 1:
            raise ValueError(f"P takes a single factor dimension, got {args}")
        u = args[0]
        if u < 1 or 2 * u > g:
            raise ValueError(f"product cycle requires 1 <= u <= g/2, got u={u}")
        return ("P", args)
    if kind == "L":
        if any(not 1 <= i <= g for i in args):
            raise ValueError(f"lambda indices {args} not within [1, {g}]")
        return ("L", tuple(sorted(args)))
    raise ValueError(f"unknown symbol kind {kind!r}")


class NLExpression:
    """Q-linear combination of cycle symbols, with at most pairwise products.

    Terms are (coefficient, symbols) with one or two symbols each.  Products
    of three or more symbols are rejected: only pairwise vanishing of
    NL-supported cycles is proved, and the API stays honest about it.
    """

    __slots__ = ("g", "terms")

    def __init__(self, g: int, terms: Sequence[Tuple[Fraction, Tuple[Symbol, ...]]]):
        if g < 2:
            raise ValueError(f"genus must be >= 2, got {g}")
        self.g = g
        clean: List[Tuple[Fraction, Tuple[Symbol, ...]]] = []
        for coeff, symbols in terms:
            symbols = tuple(symbols)
            if not 1 <= len(symbols) <= 2:
                raise ValueError(
                    f"terms must have one or two symbols, got {len(symbols)} "
                    f"(products of three or more symbols are rejected)"
                )
            for kind, args in symbols:
                _make_symbol(kind, tuple(args), g)
            clean.append((Fraction(coeff), symbols))
        self.terms = tuple(clean)

    def __repr__(self) -> str:
        return f"NLExpression(g={self.g}, terms={list(self.terms)})"


def parse_expression(g: int, text: str) -> NLExpression:
    """Parse the tiny expression grammar.

    Terms are joined by '+'; each term is an optional rational coefficient
    'a/b *' followed by a symbol, with at most a single '*' between two
    symbols.  Symbols: NL(d1,d2,...), NLt(d), P(u), L(i,j,...).
    """
    terms = []
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError("empty term in expression")
        pieces = [piece.strip() for piece in chunk.split("*")]
        coeff = Fraction(1)
        if _TOKEN_RATIONAL.match(pieces[0]):
            try:
                coeff = Fraction(pieces[0])
            except ZeroDivisionError as exc:
                raise ValueError(f"zero denominator in coefficient {pieces[0]!r}") from exc
            pieces = pieces[1:]
        if not 1 <= len(pieces) <= 2:
            raise ValueError(
                f"term {chunk!r} must contain one or two symbols "
                f"(a single '*' between two symbols)"
            )
        symbols = []
        for piece in pieces:
            match = _TOKEN_SYMBOL.match(piece)
            if not match:
                raise ValueError(f"cannot parse symbol {piece!r}")
            kind, argtext = match.groups()
            args = tuple(int(a) for a in argtext.split(",") if a.strip())
            symbols.append(_make_symbol(kind, args, g))
        terms.append((coeff, tuple(symbols)))
    return NLExpression(g, terms)


def _project_symbol(g: int, symbol: Symbol) -> TautClass:
    kind, args = symbol
    if kind == "NL":
        return taut_nl(g, PolarizationType(args))
    if kind == "NLt":
        return taut_nl_tilde(g, args[0])
    if kind == "P":
        return taut_product_cycle(g, args[0])
    if kind == "L":
        return reduce(LambdaPolynomial.monomial(g, args))
    raise ValueError(f"unknown symbol kind {kind!r}")


def taut_projection(expression: NLExpression) -> TautClass:
    """Linear extension of the projection over an expression.

    A product of two NL-supported symbols projects to 0; a lambda monomial
    multiplies through the projection of its partner in the ring.
    """
    g = expression.g
    result = TautClass.zero(g)
    for coeff, symbols in expression.terms:
        if len(symbols) == 1:
            value = _project_symbol(g, symbols[0])
        else:
            kinds = [kind for kind, _ in symbols]
            nl_count = sum(kind in _NL_KINDS for kind in kinds)
            if nl_count == 2:
                value = TautClass.zero(g)
            elif nl_count == 1:
                lam = symbols[0] if kinds[0] == "L" else symbols[1]
                other = symbols[1] if kinds[0] == "L" else symbols[0]
                value = multiply(_project_symbol(g, lam), _project_symbol(g, other))
            else:
                value = multiply(
                    _project_symbol(g, symbols[0]), _project_symbol(g, symbols[1])
                )
        result = result + coeff * value
    return result
