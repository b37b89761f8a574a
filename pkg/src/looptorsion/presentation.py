"""Relation families presenting the two graded algebras under study.

Six integer parameters (a, b, c, d, a2, b2) drive everything:

* an affine integer recurrence producing coefficient pairs (a_m, b_m);
* iterated-bracket elements sigma, rho, tau in the inner algebra on
  u1..u4, v, w;
* the relation family S = {tau_m} u {a_m * rho_{4,m+1}} presenting the
  inner algebra E as a quotient of the free algebra;
* thirteen quadratic relations presenting the full 8-generator algebra
  AX, which the `action` module identifies degreewise with a twisted
  tensor product of Z<x1,x2> and E.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .freealg import (
    DEFAULT_CONVENTION,
    Element,
    U1,
    U2,
    U3,
    U4,
    V,
    W,
    X1,
    X2,
    bracket,
    format_element,
    parse_element,
    GENERATOR_NAMES,
)

E_NUM_GENS = 6
AX_NUM_GENS = 8


@dataclass(frozen=True)
class Params:
    """The six integers parameterizing the construction."""

    a: int
    b: int
    c: int
    d: int
    a2: int
    b2: int

    def as_tuple(self) -> tuple[int, ...]:
        return (self.a, self.b, self.c, self.d, self.a2, self.b2)

    def __str__(self):
        return "a={} b={} c={} d={} a2={} b2={}".format(*self.as_tuple())


#: The instance whose torsion primes are governed by 2 + 3^m: with these
#: values the recurrence below has the closed form a_m = 2 + 3^m,
#: b_m = 2 + 3^(m-1).
THEOREM1_PARAMS = Params(a=0, b=4, c=-3, d=1, a2=11, b2=5)


def coeff_sequence(params: Params, max_m: int) -> list[tuple[int, int, int]]:
    """Rows (m, a_m, b_m) for m = 2..max_m, evaluated exactly.

    Seeded by (a2, b2); for m >= 3,
    a_m = a + b*a_{m-1} + c*b_{m-1} and b_m = d*a_{m-1}.
    """
    if max_m < 2:
        raise ValueError("max_m must be at least 2")
    am, bm = params.a2, params.b2
    rows = [(2, am, bm)]
    for m in range(3, max_m + 1):
        am, bm = params.a + params.b * am + params.c * bm, params.d * am
        rows.append((m, am, bm))
    return rows


@lru_cache(maxsize=None)
def sigma(i: int, m: int, convention: str = DEFAULT_CONVENTION) -> Element:
    """Iterated bracket with v: sigma(i,1) = u_i, sigma(i,m+1) = [sigma(i,m), v]."""
    if not 1 <= i <= 4:
        raise ValueError("i must be in 1..4")
    if m < 1:
        raise ValueError("m must be at least 1")
    if m == 1:
        return Element.gen(i - 1)
    return bracket(sigma(i, m - 1, convention), Element.gen(V), convention)


def rho(i: int, m: int, convention: str = DEFAULT_CONVENTION) -> Element:
    """One bracket with w on top of sigma: rho(i,m) = [sigma(i,m-1), w]."""
    if m < 2:
        raise ValueError("m must be at least 2")
    return bracket(sigma(i, m - 1, convention), Element.gen(W), convention)


def tau(m: int, params: Params, convention: str = DEFAULT_CONVENTION) -> Element:
    """tau_m = rho(1,m) + a_m*rho(2,m) + b_m*rho(3,m)."""
    if m < 2:
        raise ValueError("m must be at least 2")
    _, am, bm = coeff_sequence(params, m)[-1]
    return rho(1, m, convention) + rho(2, m, convention) * am + rho(3, m, convention) * bm


@dataclass(frozen=True)
class Relation:
    tag: str
    element: Element
    degree: int


@dataclass(frozen=True)
class RelationSet:
    """Homogeneous relations over the first num_gens generators.

    Every relation carries a provenance tag so torsion found downstream
    can be traced back to the relation family that produced it.
    """

    num_gens: int
    params: Params
    convention: str
    relations: tuple[Relation, ...]
    warnings: tuple[str, ...] = field(default=())

    def max_degree(self) -> int:
        return max((r.degree for r in self.relations), default=0)


def relation_set_E(params: Params, maxdeg: int, convention: str = DEFAULT_CONVENTION) -> RelationSet:
    """The family S presenting the inner algebra, truncated at maxdeg.

    Contains tau_m for 2 <= m <= maxdeg and a_m * rho(4, m+1) for
    3 <= m+1 <= maxdeg.  When a_m = 0 the rho relation is the zero
    element; it is omitted and a warning recorded, since the torsion
    prediction for that index no longer applies.
    """
    if maxdeg < 2:
        raise ValueError("maxdeg must be at least 2")
    seq = {m: (am, bm) for m, am, bm in coeff_sequence(params, maxdeg)}
    rels = []
    warnings = []
    for m in range(2, maxdeg + 1):
        rels.append(Relation(f"tau_{m}", tau(m, params, convention), m))
    for m in range(2, maxdeg):
        am = seq[m][0]
        if am == 0:
            warnings.append(
                f"a_{m} = 0: relation a_{m}*rho_{{4,{m + 1}}} is zero and was omitted; "
                f"no torsion is predicted in degree {m + 1} from it"
            )
            continue
        rels.append(Relation(f"a_{m}*rho_{{4,{m + 1}}}", rho(4, m + 1, convention) * am, m + 1))
    return RelationSet(E_NUM_GENS, params, convention, tuple(rels), tuple(warnings))


def relation_set_AX(params: Params, convention: str = DEFAULT_CONVENTION) -> RelationSet:
    """The thirteen quadratic relations presenting the full algebra."""
    a, b, c, d, a2, b2 = params.as_tuple()
    u1, u2, u3, u4 = (Element.gen(g) for g in (U1, U2, U3, U4))
    v = Element.gen(V)
    w = Element.gen(W)
    x1 = Element.gen(X1)
    x2 = Element.gen(X2)

    def br(f, g):
        return bracket(f, g, convention)

    elems = [
        br(x1, u1) - br(u1, v) - br(u2, v) * a,
        br(x1, u2) - br(u2, v) * b - br(u3, v) * d,
        br(x1, u3) - br(u2, v) * c,
        br(x1, u4),
        br(x1, v),
        br(x1, w),
        br(x2, u1),
        br(x2, u3),
        br(x2, u4),
        br(x2, v),
        br(x2, w),
        br(x2, u2) - br(u4, v),
        br(u1, w) + br(u2, w) * a2 + br(u3, w) * b2,
    ]
    rels = tuple(Relation(f"AX_{k}", e, 2) for k, e in enumerate(elems, start=1))
    return RelationSet(AX_NUM_GENS, params, convention, rels)


def format_relation_set(rels: RelationSet) -> str:
    """Plain-text export: a header line, then one relation per line.

    The header records generator names, parameters, sign convention and
    the provenance tags in order; body lines use the element text format.
    """
    names = " ".join(GENERATOR_NAMES[: rels.num_gens])
    tags = "; ".join(r.tag for r in rels.relations)  # tags may contain commas
    header = f"# generators: {names} | params: {rels.params} | convention: {rels.convention} | tags: {tags}"
    lines = [header]
    lines.extend(format_element(r.element) for r in rels.relations)
    return "\n".join(lines) + "\n"


def parse_relation_set(text: str) -> RelationSet:
    """Inverse of format_relation_set."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("# generators:"):
        raise ValueError("missing relation-set header")
    head = lines[0][1:].strip()
    fields = dict(part.strip().split(": ", 1) for part in head.split(" | "))
    names = fields["generators"].split()
    num_gens = len(names)
    pvals = dict(kv.split("=") for kv in fields["params"].split())
    params = Params(**{k: int(v) for k, v in pvals.items()})
    convention = fields["convention"]
    tags = fields["tags"].split("; ") if fields["tags"] else []
    if len(tags) != len(lines) - 1:
        raise ValueError("tag count does not match relation count")
    rels = []
    for tag, line in zip(tags, lines[1:]):
        elem = parse_element(line, num_gens)
        rels.append(Relation(tag, elem, elem.degree()))
    return RelationSet(num_gens, params, convention, tuple(rels))
