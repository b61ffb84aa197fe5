import itertools
import json
import random

import pytest

from oracles import random_web
from sl3bracket.canon import canonical_form
from sl3bracket.corpus import braid_closure
from sl3bracket.diagram import state_web, states
from sl3bracket.web import (Web, WebError, circle_web, components, cube, disjoint_union,
                            find_bigons, find_squares, heawood, is_valid, k33, ladder,
                            mobius_kantor, theta, validate, web_girth)


def test_validate_examples():
    validate(circle_web(1))
    validate(theta())
    bad = Web({0}, {1, 2}, [(0, 1), (0, 2)])
    with pytest.raises(WebError) as exc:
        validate(bad)
    assert exc.value.kind == "degree"
    assert not is_valid(bad)


@pytest.mark.parametrize("web, kind", [
    (Web({0}, {1}, [(0, 1)] * 3, -1), "circles"),
    (Web({0}, {0}, [(0, 0)] * 3), "part"),
    (Web({0}, {1}, [(1, 0)] * 3), "orientation"),
    (Web({0, 2}, {1}, [(0, 1)] * 3), "degree"),
])
def test_validate_error_kinds(web, kind):
    with pytest.raises(WebError) as exc:
        validate(web)
    assert exc.value.kind == kind


def test_bigons():
    assert len(find_bigons(theta())) == 3
    assert find_bigons(heawood()) == []
    assert find_bigons(circle_web()) == []
    assert len(find_bigons(ladder())) == 2


def _brute_four_cycles(w):
    out = set()
    es = set(w.edges)
    for s1, s2 in itertools.combinations(sorted(w.sources), 2):
        for t1, t2 in itertools.combinations(sorted(w.sinks), 2):
            if all(e in es for e in ((s1, t1), (s1, t2), (s2, t1), (s2, t2))):
                out.add(frozenset((s1, s2, t1, t2)))
    return out


def test_squares():
    sites = find_squares(k33())
    assert len(sites) == 9 == len(_brute_four_cycles(k33()))
    assert find_squares(theta()) == []
    assert find_squares(heawood()) == []
    assert len(find_squares(cube())) == 6


def test_squares_match_brute_force_on_random_webs():
    rng = random.Random(5)
    for _ in range(200):
        w = random_web(rng, rng.randint(1, 7))
        got = {frozenset(s.cycle) for s in find_squares(w)}
        assert got == _brute_four_cycles(w)
        assert len(got) == len(find_squares(w))
        for s in find_squares(w):
            s1, t1, s2, t2 = s.cycle
            assert [w.edges[i] for i in s.edges] == [(s1, t1), (s2, t1), (s2, t2), (s1, t2)]


def test_components_examples():
    parts, c = components(disjoint_union(theta(), circle_web()))
    assert c == 1 and len(parts) == 1 and canonical_form(parts[0]) == canonical_form(theta())
    assert components(Web()) == ([], 0)
    parts, c = components(disjoint_union(theta(), theta()))
    assert c == 0 and len(parts) == 2


def test_disjoint_union_examples():
    assert disjoint_union(k33(), Web()) == k33()
    assert disjoint_union(circle_web(), circle_web()).circles == 2
    u = disjoint_union(theta(), circle_web())
    validate(u)
    assert (u.num_vertices(), len(u.edges), u.circles) == (2, 3, 1)


def test_girth_examples():
    assert web_girth(theta()) == 2
    assert web_girth(k33()) == 4
    assert web_girth(heawood()) == 6
    assert web_girth(mobius_kantor()) == 6
    assert web_girth(cube()) == 4
    with pytest.raises(WebError):
        web_girth(circle_web())


def test_named_webs_valid():
    for w in (theta(), k33(), heawood(), mobius_kantor(), ladder(), cube()):
        validate(w)
        assert 3 * len(w.sources) == len(w.edges) == 3 * len(w.sinks)
    assert heawood().num_vertices() == 14
    assert mobius_kantor().num_vertices() == 16


def test_json_round_trip_and_dot():
    w = disjoint_union(heawood(), circle_web(2))
    assert Web.from_json(json.dumps(w.to_json())) == w
    dot = theta().to_dot()
    assert dot.startswith("digraph") and dot.count("0 -> 1") == 3
    with pytest.raises(WebError):
        Web.from_json({"sources": [0], "sinks": [1], "edges": [[0, "x"]]})


def test_random_web_invariants():
    rng = random.Random(11)
    for _ in range(300):
        w = random_web(rng, rng.randint(1, 10), rng.randrange(3))
        validate(w)
        assert 3 * len(w.sources) == len(w.edges) == 3 * len(w.sinks)
        g = web_girth(w)
        assert g == float("inf") or g % 2 == 0


def test_union_then_components_round_trip():
    rng = random.Random(12)
    for _ in range(100):
        a = random_web(rng, rng.randint(1, 5), rng.randrange(2))
        b = random_web(rng, rng.randint(1, 5), rng.randrange(2))
        key = lambda w: sorted(canonical_form(p) for p in components(w)[0])
        u = disjoint_union(a, b)
        assert key(u) == sorted(key(a) + key(b))
        assert components(u)[1] == a.circles + b.circles


def test_planar_state_webs_have_girth_at_most_four():
    rng = random.Random(13)
    checked = 0
    for _ in range(40):
        strands = rng.randint(2, 4)
        word = [rng.choice([1, -1]) * rng.randint(1, strands - 1)
                for _ in range(rng.randint(1, 7))]
        code = braid_closure(word, strands)
        for s in states(code):
            w = state_web(code, s)
            validate(w)
            if w.num_vertices():
                assert web_girth(w) <= 4
                checked += 1
    assert checked > 100
