from __future__ import annotations

import random

import pytest

from looptorsion.freealg import (
    Element,
    GRADED,
    UNGRADED,
    U1,
    U2,
    V,
    W,
    bracket,
    format_element,
    multiply,
    parse_element,
    word_rank,
    words_of_degree,
)


def random_element(rng, num_gens=3, max_degree=2, nterms=3) -> Element:
    terms = {}
    for _ in range(nterms):
        n = rng.randint(0, max_degree)
        word = tuple(rng.randrange(num_gens) for _ in range(n))
        terms[word] = rng.randint(-4, 4)
    return Element(terms)


def random_homogeneous(rng, degree, num_gens=3, nterms=3) -> Element:
    terms = {}
    for _ in range(nterms):
        word = tuple(rng.randrange(num_gens) for _ in range(degree))
        terms[word] = rng.randint(-4, 4)
    return Element(terms)


def test_words_of_degree_counts():
    assert words_of_degree(0, 6) == [()]
    assert len(words_of_degree(2, 6)) == 36
    assert len(words_of_degree(3, 8)) == 512


def test_words_of_degree_is_lexicographic():
    ws = words_of_degree(2, 3)
    assert ws == sorted(ws)
    assert ws[0] == (0, 0) and ws[-1] == (2, 2)
    assert all(word_rank(w, 3) == i for i, w in enumerate(ws))


def test_words_of_degree_rejects_negative():
    with pytest.raises(ValueError):
        words_of_degree(-1, 6)


def test_multiply_examples():
    u1, v, w = Element.gen(U1), Element.gen(V), Element.gen(W)
    assert multiply(u1, v) == Element({(U1, V): 1})
    f = u1 + v * 2
    assert multiply(f, Element.unit()) == f
    assert multiply(u1 + Element.gen(U2), w) == Element({(U1, W): 1, (U2, W): 1})


def test_multiply_degree_adds():
    u1, v = Element.gen(U1), Element.gen(V)
    assert (u1 * v * v).degree() == 3


def test_bracket_examples():
    u1, v = Element.gen(U1), Element.gen(V)
    assert bracket(u1, v, GRADED) == Element({(U1, V): 1, (V, U1): 1})
    assert bracket(u1, v, UNGRADED) == Element({(U1, V): 1, (V, U1): -1})
    f = u1 + v * 3
    assert bracket(f, f, UNGRADED).is_zero()


def test_bracket_rejects_inhomogeneous():
    f = Element.gen(U1) + Element.unit()
    with pytest.raises(ValueError):
        bracket(f, Element.gen(V))


def test_bracket_unknown_convention():
    with pytest.raises(ValueError):
        bracket(Element.gen(U1), Element.gen(V), "sideways")


def test_multiply_associative_and_unital():
    rng = random.Random(7)
    for _ in range(40):
        f, g, h = (random_element(rng) for _ in range(3))
        assert (f * g) * h == f * (g * h)
        assert f * Element.unit() == f == Element.unit() * f


def test_multiply_distributes():
    rng = random.Random(11)
    for _ in range(40):
        f, g, h = (random_element(rng) for _ in range(3))
        assert f * (g + h) == f * g + f * h


def test_bracket_symmetry_laws():
    rng = random.Random(13)
    for _ in range(50):
        df, dg = rng.randint(0, 2), rng.randint(0, 2)
        f = random_homogeneous(rng, df)
        g = random_homogeneous(rng, dg)
        assert (bracket(f, g, UNGRADED) + bracket(g, f, UNGRADED)).is_zero()
        sign = -1 if (df * dg) % 2 else 1
        assert (bracket(f, g, GRADED) + bracket(g, f, GRADED) * sign).is_zero()


def test_zero_coefficients_never_stored():
    e = Element({(0,): 2}) + Element({(0,): -2})
    assert e.is_zero() and e.terms == {}
    assert (Element.gen(U1) * 0).is_zero()


def test_format_examples():
    e = Element({(U2, V): -3, (V, U2): 3})
    assert format_element(e) == "-3*u2.v + 3*v.u2"
    assert format_element(Element.zero()) == "0"
    assert format_element(Element.unit() * 7) == "7*1"


def test_format_orders_terms_length_lex():
    e = Element({(V,): 1, (U1, U1): 1, (U1,): 1})
    assert format_element(e) == "1*u1 + 1*v + 1*u1.u1"


def test_parse_round_trip():
    rng = random.Random(17)
    for _ in range(60):
        e = random_element(rng, num_gens=8, max_degree=3)
        assert parse_element(format_element(e)) == e
        assert format_element(parse_element(format_element(e))) == format_element(e)


def test_parse_rejects_out_of_context_generator():
    with pytest.raises(ValueError):
        parse_element("1*x1.u1", num_gens=6)


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_element("3 u1")
