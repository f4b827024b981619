"""The tautological ring of the moduli of principally polarized abelian varieties.

The ring in genus g is Q[lambda_1, ..., lambda_g] modulo the ideal generated
by lambda_g and the homogeneous parts of c(E) c(E^v) - 1, where
c(E) = 1 + lambda_1 + ... + lambda_g.  Additively it has the square-free
monomials lambda_S, S a subset of {1, ..., g-1}, as a basis; the top graded
piece sits in degree g(g-1)/2 and is spanned by lambda_1 ... lambda_{g-1}.

Two independent implementations of the normal form live here:

* ``reduce``: rewriting.  The degree-2k part of the defining relation,
  modulo lambda_g, lets a squared factor be eliminated:

      lambda_k^2  ->  2 * sum_{m=1}^{min(k, g-1-k)} (-1)^(m+1)
                          lambda_{k-m} lambda_{k+m}

  (lambda_0 = 1).  Each rewrite strictly increases the sum of squared
  indices at fixed weight, so the process terminates.

* ``oracle_reduce``: linear algebra.  Enumerate all monomials of the given
  weight, span the ideal slice explicitly, row-reduce over exact rationals
  and express the input in the square-free basis.  Deliberately shares no
  code with the rewriting path.

The socle pairing implemented here is normalized so that the socle monomial
lambda_1 ... lambda_{g-1} pairs with 1 to 1.  This is proportional to the
geometric integral pairing, which is all that perfection checks require;
no absolute normalization is supplied.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple

from .linalg import is_nonsingular, rref

# The oracle enumerates all monomials of a weight, which grows quickly.
ORACLE_GENUS_CAP = 6

ExponentVector = Tuple[int, ...]
IndexTuple = Tuple[int, ...]


def _as_coeff(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class LambdaPolynomial:
    """Element of Q[lambda_1, ..., lambda_g], sparse over exponent vectors.

    Exponent vectors have length g; entry i-1 is the exponent of lambda_i.
    Generators with index > g do not exist and are rejected at construction.
    """

    __slots__ = ("g", "terms")

    def __init__(self, g: int, terms: Dict[ExponentVector, Fraction]):
        if g < 1:
            raise ValueError(f"genus must be >= 1, got {g}")
        self.g = g
        clean: Dict[ExponentVector, Fraction] = {}
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if len(exps) != g:
                raise ValueError(f"exponent vector {exps} has length != g = {g}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            coeff = _as_coeff(coeff)
            if coeff != 0:
                clean[exps] = clean.get(exps, Fraction(0)) + coeff
                if clean[exps] == 0:
                    del clean[exps]
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, g: int) -> "LambdaPolynomial":
        return cls(g, {})

    @classmethod
    def one(cls, g: int) -> "LambdaPolynomial":
        return cls(g, {(0,) * g: Fraction(1)})

    @classmethod
    def generator(cls, g: int, i: int) -> "LambdaPolynomial":
        """lambda_i as a polynomial; requires 1 <= i <= g."""
        if not 1 <= i <= g:
            raise ValueError(f"lambda_{i} does not exist in genus {g}")
        exps = [0] * g
        exps[i - 1] = 1
        return cls(g, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, g: int, indices: Iterable[int], coeff=1) -> "LambdaPolynomial":
        """Product of lambda_i over an index multiset (repeats allowed)."""
        exps = [0] * g
        for i in indices:
            if not 1 <= i <= g:
                raise ValueError(f"lambda_{i} does not exist in genus {g}")
            exps[i - 1] += 1
        return cls(g, {tuple(exps): _as_coeff(coeff)})

    # -- arithmetic -----------------------------------------------------

    def _check_genus(self, other: "LambdaPolynomial") -> None:
        if self.g != other.g:
            raise ValueError(f"genus mismatch: {self.g} vs {other.g}")

    def __add__(self, other: "LambdaPolynomial") -> "LambdaPolynomial":
        self._check_genus(other)
        merged = dict(self.terms)
        for exps, coeff in other.terms.items():
            merged[exps] = merged.get(exps, Fraction(0)) + coeff
        return LambdaPolynomial(self.g, merged)

    def __sub__(self, other: "LambdaPolynomial") -> "LambdaPolynomial":
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, LambdaPolynomial):
            self._check_genus(other)
            product: Dict[ExponentVector, Fraction] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    product[e] = product.get(e, Fraction(0)) + c1 * c2
            return LambdaPolynomial(self.g, product)
        coeff = _as_coeff(other)
        return LambdaPolynomial(self.g, {e: c * coeff for e, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LambdaPolynomial)
            and self.g == other.g
            and self.terms == other.terms
        )

    def is_zero(self) -> bool:
        return not self.terms

    def weights(self) -> Tuple[int, ...]:
        return tuple(sorted({_weight(e) for e in self.terms}))

    def homogeneous_part(self, w: int) -> "LambdaPolynomial":
        return LambdaPolynomial(
            self.g, {e: c for e, c in self.terms.items() if _weight(e) == w}
        )

    def __repr__(self) -> str:
        if not self.terms:
            return f"LambdaPolynomial(g={self.g}, 0)"
        bits = []
        for exps in sorted(self.terms):
            mono = "*".join(
                f"L{i + 1}^{e}" if e > 1 else f"L{i + 1}"
                for i, e in enumerate(exps)
                if e
            )
            bits.append(f"{self.terms[exps]}*{mono or '1'}")
        return f"LambdaPolynomial(g={self.g}, {' + '.join(bits)})"


def _weight(exps: ExponentVector) -> int:
    return sum((i + 1) * e for i, e in enumerate(exps))


def total_chern(g: int) -> LambdaPolynomial:
    """1 + lambda_1 + ... + lambda_g."""
    poly = LambdaPolynomial.one(g)
    for i in range(1, g + 1):
        poly = poly + LambdaPolynomial.generator(g, i)
    return poly


def total_chern_dual(g: int) -> LambdaPolynomial:
    """1 - lambda_1 + lambda_2 - ... + (-1)^g lambda_g."""
    poly = LambdaPolynomial.one(g)
    for i in range(1, g + 1):
        poly = poly + (-1) ** i * LambdaPolynomial.generator(g, i)
    return poly


def relation(k: int, g: int) -> LambdaPolynomial:
    """Ideal generator eliminating lambda_k^2 in genus g.

    The degree-2k homogeneous part of c(E) c(E^v) - 1, reduced modulo the
    generators lambda_i with i >= g, equals (up to sign)

        lambda_k^2 - 2 sum_{m=1}^{min(k, g-1-k)} (-1)^(m+1)
                         lambda_{k-m} lambda_{k+m}.
    """
    if not 1 <= k <= g - 1:
        raise ValueError(f"relation index k={k} out of range [1, {g - 1}]")
    terms: Dict[ExponentVector, Fraction] = {}
    square = [0] * g
    square[k - 1] = 2
    terms[tuple(square)] = Fraction(1)
    for m in range(1, min(k, g - 1 - k) + 1):
        exps = [0] * g
        exps[k + m - 1] += 1
        if k - m >= 1:
            exps[k - m - 1] += 1
        terms[tuple(exps)] = Fraction(-2 * (-1) ** (m + 1))
    return LambdaPolynomial(g, terms)


@lru_cache(maxsize=None)
def _reduce_monomial(g: int, exps: ExponentVector) -> Tuple[Tuple[IndexTuple, Fraction], ...]:
    """Normal form of a single monomial, as ((indices, coeff), ...).

    Deletes lambda_g, then eliminates the squared factor of smallest index.
    Recursion terminates: a rewrite replaces the pair (k, k) by (k-m, k+m),
    raising the sum of squared indices by 2m^2 > 0, and that sum is bounded
    at fixed weight.
    """
    if exps[g - 1] > 0:
        return ()
    square_index = 0
    for i in range(g - 1):
        if exps[i] >= 2:
            square_index = i + 1
            break
    if square_index == 0:
        indices = tuple(i + 1 for i in range(g - 1) if exps[i])
        return ((indices, Fraction(1)),)
    k = square_index
    collected: Dict[IndexTuple, Fraction] = {}
    for m in range(1, min(k, g - 1 - k) + 1):
        child = list(exps)
        child[k - 1] -= 2
        child[k + m - 1] += 1
        if k - m >= 1:
            child[k - m - 1] += 1
        coeff = Fraction(2 * (-1) ** (m + 1))
        for indices, c in _reduce_monomial(g, tuple(child)):
            collected[indices] = collected.get(indices, Fraction(0)) + coeff * c
    return tuple(sorted((i, c) for i, c in collected.items() if c != 0))


class TautClass:
    """Ring element in the square-free basis: index sets S in {1, ..., g-1}."""

    __slots__ = ("g", "terms")

    def __init__(self, g: int, terms: Dict[IndexTuple, Fraction]):
        if g < 1:
            raise ValueError(f"genus must be >= 1, got {g}")
        self.g = g
        clean: Dict[IndexTuple, Fraction] = {}
        for indices, coeff in terms.items():
            indices = tuple(indices)
            if any(not 1 <= i <= g - 1 for i in indices):
                raise ValueError(f"indices {indices} not within [1, {g - 1}]")
            if any(a >= b for a, b in zip(indices, indices[1:])):
                raise ValueError(f"indices {indices} not strictly increasing")
            coeff = _as_coeff(coeff)
            if coeff != 0:
                clean[indices] = clean.get(indices, Fraction(0)) + coeff
                if clean[indices] == 0:
                    del clean[indices]
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, g: int) -> "TautClass":
        return cls(g, {})

    @classmethod
    def one(cls, g: int) -> "TautClass":
        return cls(g, {(): Fraction(1)})

    @classmethod
    def monomial(cls, g: int, indices: Iterable[int], coeff=1) -> "TautClass":
        return cls(g, {tuple(sorted(indices)): _as_coeff(coeff)})

    def to_polynomial(self) -> LambdaPolynomial:
        terms: Dict[ExponentVector, Fraction] = {}
        for indices, coeff in self.terms.items():
            exps = [0] * self.g
            for i in indices:
                exps[i - 1] = 1
            terms[tuple(exps)] = coeff
        return LambdaPolynomial(self.g, terms)

    # -- arithmetic -----------------------------------------------------

    def _check_genus(self, other: "TautClass") -> None:
        if self.g != other.g:
            raise ValueError(f"genus mismatch: {self.g} vs {other.g}")

    def __add__(self, other: "TautClass") -> "TautClass":
        self._check_genus(other)
        merged = dict(self.terms)
        for indices, coeff in other.terms.items():
            merged[indices] = merged.get(indices, Fraction(0)) + coeff
        return TautClass(self.g, merged)

    def __sub__(self, other: "TautClass") -> "TautClass":
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, TautClass):
            return multiply(self, other)
        coeff = _as_coeff(other)
        return TautClass(self.g, {s: c * coeff for s, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TautClass)
            and self.g == other.g
            and self.terms == other.terms
        )

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, indices: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(sorted(indices)), Fraction(0))

    def degrees(self) -> Tuple[int, ...]:
        return tuple(sorted({sum(s) for s in self.terms}))

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def _sorted_terms(self) -> List[Tuple[IndexTuple, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for indices, coeff in self._sorted_terms():
            if indices:
                bits.append(f"{coeff} * L({','.join(map(str, indices))})")
            else:
                bits.append(str(coeff))
        return " + ".join(bits)

    def __repr__(self) -> str:
        return f"TautClass(g={self.g}, {self})"

    # -- serialization --------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "g": self.g,
            "terms": [
                {"indices": list(indices), "coeff": str(coeff)}
                for indices, coeff in self._sorted_terms()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: dict) -> "TautClass":
        terms = {
            tuple(item["indices"]): Fraction(item["coeff"]) for item in data["terms"]
        }
        return cls(int(data["g"]), terms)

    @classmethod
    def from_json(cls, text: str) -> "TautClass":
        return cls.from_json_dict(json.loads(text))


def reduce(p: LambdaPolynomial) -> TautClass:
    """Normal form of a polynomial in the square-free basis."""
    result: Dict[IndexTuple, Fraction] = {}
    for exps, coeff in p.terms.items():
        for indices, c in _reduce_monomial(p.g, exps):
            result[indices] = result.get(indices, Fraction(0)) + coeff * c
    return TautClass(p.g, result)


def multiply(a: TautClass, b: TautClass) -> TautClass:
    """Ring product: multiply the polynomial lifts, then reduce."""
    a._check_genus(b)
    result: Dict[IndexTuple, Fraction] = {}
    for s, cs in a.terms.items():
        for t, ct in b.terms.items():
            exps = [0] * a.g
            for i in s:
                exps[i - 1] += 1
            for i in t:
                exps[i - 1] += 1
            for indices, c in _reduce_monomial(a.g, tuple(exps)):
                result[indices] = result.get(indices, Fraction(0)) + cs * ct * c
    return TautClass(a.g, result)


def top_degree(g: int) -> int:
    return g * (g - 1) // 2


@lru_cache(maxsize=None)
def graded_dimension(g: int, k: int) -> int:
    """Number of subsets of {1, ..., g-1} with element sum k."""
    if k < 0:
        raise ValueError(f"degree must be >= 0, got {k}")
    counts = [1] + [0] * k
    for i in range(1, g):
        for s in range(k, i - 1, -1):
            counts[s] += counts[s - i]
    return counts[k]


@lru_cache(maxsize=None)
def basis_sets(g: int, k: int) -> Tuple[IndexTuple, ...]:
    """Degree-k basis index sets, sorted, for stable matrix layouts."""
    found: List[IndexTuple] = []

    def build(start: int, remaining: int, acc: Tuple[int, ...]) -> None:
        if remaining == 0:
            found.append(acc)
            return
        for i in range(start, g):
            if i > remaining:
                break
            build(i + 1, remaining - i, acc + (i,))

    build(1, k, ())
    return tuple(sorted(found))


def socle_pair(a: TautClass, b: TautClass) -> Fraction:
    """Pairing normalized so lambda_1 ... lambda_{g-1} pairs with 1 to 1.

    Returns the coefficient of the full index set in the product; pairs of
    classes with non-complementary degrees automatically pair to 0.
    """
    a._check_genus(b)
    full = tuple(range(1, a.g))
    return multiply(a, b).coefficient(full)


class PairingMatrix:
    """Socle pairing between complementary graded pieces."""

    __slots__ = ("g", "k", "rows", "cols", "entries")

    def __init__(self, g, k, rows, cols, entries):
        if len(rows) != len(cols):
            raise ValueError("pairing matrix must be square")
        self.g = g
        self.k = k
        self.rows = rows
        self.cols = cols
        self.entries = entries

    def is_nonsingular(self) -> bool:
        if not self.rows:
            # Degree out of range on both sides: vacuously perfect.
            return True
        return is_nonsingular([list(r) for r in self.entries])

    def to_json_dict(self) -> dict:
        return {
            "g": self.g,
            "k": self.k,
            "rows": [list(s) for s in self.rows],
            "cols": [list(s) for s in self.cols],
            "entries": [[str(x) for x in row] for row in self.entries],
            "nonsingular": self.is_nonsingular(),
        }


def pairing_matrix(g: int, k: int) -> PairingMatrix:
    if not 0 <= k <= top_degree(g):
        raise ValueError(f"degree k={k} outside [0, {top_degree(g)}]")
    rows = basis_sets(g, k)
    cols = basis_sets(g, top_degree(g) - k)
    entries = [
        [socle_pair(TautClass.monomial(g, r), TautClass.monomial(g, c)) for c in cols]
        for r in rows
    ]
    return PairingMatrix(g, k, rows, cols, entries)


# -- linear algebra oracle ----------------------------------------------


@lru_cache(maxsize=None)
def monomials_of_weight(g: int, w: int) -> Tuple[ExponentVector, ...]:
    """All exponent vectors in g variables of weight w (lambda_i weighs i)."""
    found: List[ExponentVector] = []

    def build(i: int, remaining: int, acc: Tuple[int, ...]) -> None:
        if i == g:
            if remaining == 0:
                found.append(acc)
            return
        weight = i + 1
        for e in range(remaining // weight + 1):
            build(i + 1, remaining - weight * e, acc + (e,))

    build(0, w, ())
    return tuple(sorted(found))


def _is_basis_monomial(g: int, exps: ExponentVector) -> bool:
    return exps[g - 1] == 0 and all(e <= 1 for e in exps)


@lru_cache(maxsize=None)
def _ideal_slice_rref(g: int, w: int):
    """Row-reduced weight-w slice of the ideal, columns ordered with the
    square-free basis monomials last.  Returns (columns, pivot rows map)."""
    mons = monomials_of_weight(g, w)
    non_basis = [m for m in mons if not _is_basis_monomial(g, m)]
    basis = [m for m in mons if _is_basis_monomial(g, m)]
    columns = non_basis + basis
    col_index = {m: j for j, m in enumerate(columns)}

    generators: List[Dict[ExponentVector, Fraction]] = []
    for k in range(1, g):
        rel = relation(k, g)
        for m in monomials_of_weight(g, w - 2 * k):
            product: Dict[ExponentVector, Fraction] = {}
            for e, c in rel.terms.items():
                key = tuple(a + b for a, b in zip(e, m))
                product[key] = product.get(key, Fraction(0)) + c
            generators.append(product)
    lambda_g_exps = tuple([0] * (g - 1) + [1])
    for m in monomials_of_weight(g, w - g):
        key = tuple(a + b for a, b in zip(lambda_g_exps, m))
        generators.append({key: Fraction(1)})

    rows = []
    for gen in generators:
        row = [Fraction(0)] * len(columns)
        for e, c in gen.items():
            row[col_index[e]] = c
        rows.append(row)
    if rows:
        reduced, pivots = rref(rows)
    else:
        reduced, pivots = [], []
    n_non_basis = len(non_basis)
    for p in pivots:
        if p >= n_non_basis:
            raise RuntimeError(
                f"square-free monomials are linearly dependent modulo the ideal "
                f"slice at (g={g}, w={w}); the presentation would be inconsistent"
            )
    pivot_rows = {p: reduced[i] for i, p in enumerate(pivots)}
    return columns, col_index, n_non_basis, pivot_rows


def oracle_reduce(p: LambdaPolynomial) -> TautClass:
    """Normal form via exact linear algebra in the graded slice.

    Independent of the rewriting path.  Requires a homogeneous input of
    weight at most g(g-1)/2 and genus at most ORACLE_GENUS_CAP.
    """
    g = p.g
    if g > ORACLE_GENUS_CAP:
        raise ValueError(f"oracle capped at genus {ORACLE_GENUS_CAP}, got {g}")
    if p.is_zero():
        return TautClass.zero(g)
    weights = p.weights()
    if len(weights) != 1:
        raise ValueError(f"oracle requires a homogeneous input, weights {weights}")
    w = weights[0]
    if w > top_degree(g):
        raise ValueError(f"weight {w} exceeds the socle degree {top_degree(g)}")

    columns, col_index, n_non_basis, pivot_rows = _ideal_slice_rref(g, w)
    vector = [Fraction(0)] * len(columns)
    for e, c in p.terms.items():
        vector[col_index[e]] += c
    for pivot, row in sorted(pivot_rows.items()):
        factor = vector[pivot]
        if factor != 0:
            vector = [x - factor * y for x, y in zip(vector, row)]
    for j in range(n_non_basis):
        if vector[j] != 0:
            raise RuntimeError(
                f"square-free monomials fail to span the quotient at "
                f"(g={g}, w={w}); the presentation would be inconsistent"
            )
    terms: Dict[IndexTuple, Fraction] = {}
    for j in range(n_non_basis, len(columns)):
        if vector[j] != 0:
            exps = columns[j]
            indices = tuple(i + 1 for i in range(g - 1) if exps[i])
            terms[indices] = vector[j]
    return TautClass(g, terms)
