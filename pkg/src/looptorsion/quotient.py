"""Degreewise abelian-group structure of quotients by two-sided ideals.

For a homogeneous relation set over g generators, the degree-n piece of
the two-sided ideal is spanned by every product (left word) * relation *
(right word) whose degrees sum to n.  The quotient in that degree is
determined by the Smith normal form of the resulting integer matrix:
free rank plus elementary divisors.

All matrices, Smith forms, and modular ranks are memoized per relation
set and degree, since the verification suites revisit them repeatedly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import numtheory, snf
from .freealg import Element, word_rank
from .presentation import RelationSet, coeff_sequence


@dataclass
class DegreeMatrix:
    """Sparse presentation matrix for one degree of the quotient."""

    degree: int
    num_gens: int
    rows: list[dict[int, int]]
    descriptors: list[tuple[tuple, str, tuple]]  # (left word, relation tag, right word)

    @property
    def ncols(self) -> int:
        return self.num_gens**self.degree


@dataclass(frozen=True)
class GradedPiece:
    """One degree of the quotient as an abelian group."""

    degree: int
    free_rank: int
    divisors: tuple[int, ...]  # invariant factors > 1, each dividing the next


_matrix_cache: dict = {}
_snf_cache: dict = {}
_modrank_cache: dict = {}


def ideal_spanning_matrix(rels: RelationSet, n: int) -> DegreeMatrix:
    """All (left, relation, right) expansions in degree n, deduplicated."""
    key = (rels, n)
    cached = _matrix_cache.get(key)
    if cached is not None:
        return cached
    g = rels.num_gens
    rows: list[dict[int, int]] = []
    descriptors = []
    seen = set()
    for rel in rels.relations:
        d = rel.degree
        if d > n:
            continue
        terms = [(word_rank(wd, g), coeff) for wd, coeff in sorted(rel.element.terms.items())]
        for i in range(n - d + 1):
            j = n - d - i
            gj = g**j
            gdj = g ** (d + j)
            shifted = [(rank * gj, coeff) for rank, coeff in terms]
            for lrank, lword in enumerate(product(range(g), repeat=i)):
                base_l = lrank * gdj
                for rrank, rword in enumerate(product(range(g), repeat=j)):
                    off = base_l + rrank
                    row = {off + rank: coeff for rank, coeff in shifted}
                    sig = tuple(sorted(row.items()))
                    if sig in seen:
                        continue
                    seen.add(sig)
                    rows.append(row)
                    descriptors.append((lword, rel.tag, rword))
    matrix = DegreeMatrix(n, g, rows, descriptors)
    _matrix_cache[key] = matrix
    return matrix


def smith_invariants(rels: RelationSet, n: int) -> tuple[list[int], int]:
    """Cached Smith normal form (invariant factors, rank) in degree n."""
    key = (rels, n)
    cached = _snf_cache.get(key)
    if cached is None:
        matrix = ideal_spanning_matrix(rels, n)
        cached = _snf_cache[key] = snf.smith_normal_form(matrix.rows, matrix.ncols)
    return cached


def graded_piece(rels: RelationSet, n: int) -> GradedPiece:
    """Free rank and elementary divisors of the quotient in degree n."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    invs, rank = smith_invariants(rels, n)
    return GradedPiece(n, rels.num_gens**n - rank, tuple(d for d in invs if d > 1))


def dimension(rels: RelationSet, n: int, field) -> int:
    """Dimension of the degree-n piece over Q (field "Q") or over F_p.

    The rational dimension comes from the exact integer elimination; the
    modular one from an independent Gaussian elimination mod p, so their
    comparison genuinely cross-checks the Smith form.
    """
    if field == "Q":
        return graded_piece(rels, n).free_rank
    p = int(field)
    key = (rels, n, p)
    rank = _modrank_cache.get(key)
    if rank is None:
        matrix = ideal_spanning_matrix(rels, n)
        rank = _modrank_cache[key] = snf.rank_mod_p(matrix.rows, matrix.ncols, p)
    return rels.num_gens**n - rank


def element_order(e: Element, rels: RelationSet, n: int):
    """Smallest b >= 1 with b*e inside the degree-n ideal lattice.

    Returns None when no multiple of e lands in the lattice (infinite
    order in the quotient); returns 1 exactly when e itself lies in the
    ideal's degree-n piece.
    """
    if not e.is_zero() and e.degree() != n:
        raise ValueError(f"element has degree {e.degree()}, expected {n}")
    if e.is_zero():
        return 1
    matrix = ideal_spanning_matrix(rels, n)
    vector = {word_rank(wd, rels.num_gens): c for wd, c in e.terms.items()}
    return snf.order_in_quotient(matrix.rows, vector)


@dataclass
class TorsionReport:
    params_text: str
    convention: str
    degrees: list[GradedPiece]
    computed_primes: list[int]
    predicted_primes: list[int]
    agree: bool
    warnings: list[str]

    def to_json(self) -> dict:
        return {
            "params": self.params_text,
            "convention": self.convention,
            "degrees": [
                {"n": p.degree, "free_rank": p.free_rank, "divisors": list(p.divisors)}
                for p in self.degrees
            ],
            "computed_primes": self.computed_primes,
            "predicted_primes": self.predicted_primes,
            "agree": self.agree,
            "warnings": self.warnings,
        }


def torsion_primes_up_to(rels: RelationSet, max_degree: int, seq=None) -> TorsionReport:
    """Compare computed torsion primes against the recurrence prediction.

    Computed: prime factors of every elementary divisor in degrees up to
    max_degree.  Predicted: primes dividing some nonzero a_m with
    2 <= m <= max_degree - 1 (the relation a_m * rho(4, m+1) is expected
    to leave rho(4, m+1) with order a_m in degree m + 1).
    """
    if max_degree < 2:
        raise ValueError("max_degree must be at least 2")
    if seq is None:
        seq = coeff_sequence(rels.params, max(max_degree - 1, 2))
    pieces = [graded_piece(rels, n) for n in range(max_degree + 1)]
    computed: set[int] = set()
    for piece in pieces:
        for d in piece.divisors:
            computed.update(numtheory.factorize(d))
    predicted: set[int] = set()
    warnings = list(rels.warnings)
    for m, am, _ in seq:
        if not 2 <= m <= max_degree - 1:
            continue
        if am == 0:
            msg = f"a_{m} = 0 in range: torsion prediction for degree {m + 1} is void"
            if msg not in warnings:
                warnings.append(msg)
            continue
        predicted.update(numtheory.factorize(am))
    return TorsionReport(
        params_text=str(rels.params),
        convention=rels.convention,
        degrees=pieces,
        computed_primes=sorted(computed),
        predicted_primes=sorted(predicted),
        agree=sorted(computed) == sorted(predicted),
        warnings=warnings,
    )
