"""The derivation action of x1, x2 and the twisted-tensor identification.

x1 and x2 act on the inner algebra by derivations determined by their
values on generators.  The action is engineered so that x1 sends tau_m
to tau_{m+1} and x2 sends tau_m to a_m * rho(4, m+1), which is why the
relation ideal is preserved.  At the level of graded abelian groups this
identifies the full algebra with the free algebra on x1, x2 tensored
with the inner algebra, giving the dimension identity

    dim AX_n = sum over i+j=n of 2^i * dim E_j

over any coefficient field, along with the matching identity for
elementary-divisor multisets over the integers.

The bracket sign convention is nowhere pinned down by the construction
itself, so `select_convention` runs the consistency suite under both
conventions and reports which survive; that report is the authority for
the package default.
"""

from __future__ import annotations

from .freealg import (
    CONVENTIONS,
    GRADED,
    UNGRADED,
    Element,
    U1,
    U2,
    U3,
    U4,
    V,
    X1,
    X2,
    bracket,
)
from .presentation import (
    Params,
    RelationSet,
    THEOREM1_PARAMS,
    relation_set_AX,
    relation_set_E,
)
from .quotient import dimension, element_order, graded_piece

_X_NAMES = {X1: "x1", X2: "x2"}


class DerivationSpec:
    """Generator images of the two derivations on the inner algebra.

    `images` maps (x, generator) to a degree-2 element; a custom mapping
    may be supplied to probe corrupted actions.
    """

    def __init__(self, params: Params, convention: str, images=None):
        if convention not in CONVENTIONS:
            raise ValueError(f"unknown sign convention {convention!r}")
        self.params = params
        self.convention = convention
        self.images = dict(images) if images is not None else _generator_images(params, convention)

    def image(self, x: int, gen: int) -> Element:
        return self.images[(x, gen)]

    def replaced(self, x: int, gen: int, element: Element) -> "DerivationSpec":
        """Copy of this spec with one generator image overridden."""
        images = dict(self.images)
        images[(x, gen)] = element
        return DerivationSpec(self.params, self.convention, images)


def _generator_images(params: Params, convention: str) -> dict:
    def br(i, j):
        return bracket(Element.gen(i), Element.gen(j), convention)

    zero = Element.zero()
    images = {(x, g): zero for x in (X1, X2) for g in range(6)}
    images[(X1, U1)] = br(U1, V) + br(U2, V) * params.a
    images[(X1, U2)] = br(U2, V) * params.b + br(U3, V) * params.d
    images[(X1, U3)] = br(U2, V) * params.c
    images[(X2, U2)] = br(U4, V)
    return images


def act(x, f: Element, spec: DerivationSpec) -> Element:
    """Apply a derivation to a homogeneous element by the Leibniz rule.

    graded:   x*(fg) = (x*f) g + (-1)^{|f|} f (x*g);
    ungraded: x*(fg) = (x*f) g + f (x*g).
    """
    if isinstance(x, str):
        x = {"x1": X1, "x2": X2}[x]
    if x not in (X1, X2):
        raise ValueError("the acting generator must be x1 or x2")
    if not f.is_homogeneous():
        raise ValueError("the action is defined degreewise; element is not homogeneous")
    graded = spec.convention == GRADED
    out: dict = {}
    for word, coeff in f.terms.items():
        for k, g in enumerate(word):
            img = spec.images[(x, g)]
            if not img.terms:
                continue
            c = -coeff if (graded and k % 2 == 1) else coeff
            prefix = word[:k]
            suffix = word[k + 1 :]
            for iw, ic in img.terms.items():
                w = prefix + iw + suffix
                s = out.get(w, 0) + c * ic
                if s:
                    out[w] = s
                else:
                    del out[w]
    return Element(out)


def check_preserves_ideal(spec: DerivationSpec, rels: RelationSet, maxdeg: int | None = None) -> dict:
    """Whether x1 and x2 map each relation into the ideal, integrally.

    For every relation s of degree <= maxdeg - 1 and each derivation,
    tests membership of the image in the integer row span of the ideal
    in degree deg(s) + 1 (order 1 in the quotient).  Membership over the
    integers, not just the rationals, is what makes the induced action
    on the quotient well defined over Z.
    """
    if maxdeg is None:
        maxdeg = rels.max_degree()
    if maxdeg < 2:
        raise ValueError("maxdeg must be at least 2")
    checks = []
    ok = True
    for rel in rels.relations:
        if rel.degree > maxdeg - 1:
            continue
        for x in (X1, X2):
            img = act(x, rel.element, spec)
            member = img.is_zero() or element_order(img, rels, rel.degree + 1) == 1
            ok = ok and member
            checks.append(
                {"x": _X_NAMES[x], "relation": rel.tag, "degree": rel.degree + 1, "in_ideal": member}
            )
    return {"convention": spec.convention, "checks": checks, "ok": ok}


def semi_tensor_dimension_check(params: Params, field, max_degree: int, convention: str) -> dict:
    """Degreewise comparison of the full algebra with Z<x1,x2> (x) E.

    Verifies dim AX_n = sum_{i+j=n} 2^i dim E_j over the given field for
    n <= max_degree, and the integer-level identity matching the
    elementary-divisor multisets on both sides.
    """
    rels_ax = relation_set_AX(params, convention)
    rels_e = relation_set_E(params, max(max_degree, 2), convention)
    dims_e = [dimension(rels_e, j, field) for j in range(max_degree + 1)]
    degrees = []
    ok = True
    for n in range(max_degree + 1):
        ax_dim = dimension(rels_ax, n, field)
        expected = sum((1 << i) * dims_e[n - i] for i in range(n + 1))
        ax_div = sorted(graded_piece(rels_ax, n).divisors)
        expected_div: list[int] = []
        for i in range(n + 1):
            expected_div.extend((1 << i) * list(graded_piece(rels_e, n - i).divisors))
        expected_div.sort()
        dims_ok = ax_dim == expected
        div_ok = ax_div == expected_div
        ok = ok and dims_ok and div_ok
        degrees.append(
            {
                "n": n,
                "ax_dim": ax_dim,
                "expected_dim": expected,
                "dims_ok": dims_ok,
                "ax_divisors": ax_div,
                "expected_divisors": expected_div,
                "divisors_ok": div_ok,
            }
        )
    return {"convention": convention, "field": str(field), "degrees": degrees, "ok": ok}


def select_convention(params: Params = THEOREM1_PARAMS, max_degree: int = 4, fields=("Q", 5, 11, 13)) -> dict:
    """Run the consistency suite under both conventions and pick a default.

    A convention passes when the derivations preserve the ideal for all
    relations of degree < max_degree and the twisted-tensor dimension and
    divisor identities hold over every requested field up to max_degree.
    The graded convention is preferred as the default when both pass.
    """
    entries = []
    passing = []
    for convention in CONVENTIONS:
        rels_e = relation_set_E(params, max_degree, convention)
        preserves = check_preserves_ideal(DerivationSpec(params, convention), rels_e, max_degree)
        semi = [semi_tensor_dimension_check(params, f, max_degree, convention) for f in fields]
        ok = preserves["ok"] and all(s["ok"] for s in semi)
        if ok:
            passing.append(convention)
        entries.append(
            {
                "convention": convention,
                "preserves_J": preserves["checks"],
                "semi_tensor": semi,
                "ok": ok,
            }
        )
    selected = GRADED if GRADED in passing else (UNGRADED if passing else None)
    return {"conventions": entries, "passing": passing, "selected_default": selected}
