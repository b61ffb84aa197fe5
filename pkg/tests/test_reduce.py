import random

import pytest

from oracles import GADGETS, gadget_web, random_web
from sl3bracket.algebra import (ONE, LaurentPoly, ModuleElement, bigon_value, loop_value,
                                make_monomial, me_is_scalar, me_mul)
from sl3bracket.canon import canonical_form, is_isomorphic
from sl3bracket.corpus import VIRTUAL_TREFOIL, braid_closure
from sl3bracket.diagram import parse_gauss, state_web, states, unoriented_state_web
from sl3bracket.reduce import (Reducer, ReductionStrategy, StaleSite, expand,
                               expansion_to_element, normal_form, reduce_bigon,
                               resolve_square, strip_circles)
from sl3bracket.web import (BigonSite, SquareSite, Web, WebError, circle_web, cube,
                            disjoint_union, find_bigons, find_squares, heawood, k33, ladder,
                            mobius_kantor, theta, validate)

A = LaurentPoly.monomial
LOOP, BIGON = loop_value(), bigon_value()


def test_bigon_on_theta():
    for site in find_bigons(theta()):
        coeff, rest = reduce_bigon(theta(), site)
        assert coeff == BIGON
        assert rest == circle_web(1)


def test_virtual_trefoil_kus_bigon():
    w = unoriented_state_web(parse_gauss(VIRTUAL_TREFOIL))
    assert w.num_vertices() == 4
    assert is_isomorphic(w, ladder())
    site = find_bigons(w)[0]
    _, rest = reduce_bigon(w, site)
    validate(rest)
    assert rest.num_vertices() == 2


def test_square_on_k33():
    for site in find_squares(k33()):
        results = resolve_square(k33(), site)
        assert [c for c, _ in results] == [ONE, ONE]
        for _, r in results:
            validate(r)
            assert r.num_vertices() == 2


def test_closed_square():
    w = ladder()
    (site,) = find_squares(w)
    circles = sorted(r.circles for _, r in resolve_square(w, site))
    assert circles == [1, 2]
    assert all(r.num_vertices() == 0 for _, r in resolve_square(w, site))


def test_vertex_counts_drop():
    rng = random.Random(3)
    for _ in range(200):
        w = random_web(rng, rng.randint(2, 8))
        for site in find_bigons(w):
            assert reduce_bigon(w, site)[1].num_vertices() == w.num_vertices() - 2
        for site in find_squares(w):
            for _, r in resolve_square(w, site):
                validate(r)
                assert r.num_vertices() == w.num_vertices() - 4


def test_square_pairings_join_sink_side_to_source_side():
    # every new edge must start at a surviving source and end at a surviving sink
    rng = random.Random(4)
    for _ in range(200):
        w = random_web(rng, rng.randint(3, 8))
        for site in find_squares(w):
            for _, r in resolve_square(w, site):
                assert all(s in r.sources and t in r.sinks for s, t in r.edges)


def test_stale_and_degenerate_sites():
    w = k33()
    with pytest.raises(StaleSite):
        reduce_bigon(w, BigonSite(0, 3, (0, 1)))
    with pytest.raises(WebError) as exc:
        resolve_square(w, SquareSite((0, 3, 0, 4), (0, 0, 1, 1)))
    assert exc.value.kind == "degenerate-square"
    with pytest.raises(StaleSite):
        resolve_square(w, SquareSite((0, 3, 1, 4), (0, 3, 4, 2)))


def test_strip_circles():
    assert strip_circles(circle_web(1)) == (LOOP, Web())
    assert strip_circles(theta()) == (ONE, theta())
    assert strip_circles(circle_web(2)) == (LOOP * LOOP, Web())


def test_normal_form_examples():
    assert normal_form(circle_web()) == ModuleElement.scalar(LOOP)
    assert normal_form(theta()) == ModuleElement.scalar(BIGON * LOOP)
    h = make_monomial([canonical_form(heawood())])
    assert normal_form(heawood()) == ModuleElement.of(h, ONE)
    assert normal_form(mobius_kantor()).monomials() == [make_monomial([canonical_form(mobius_kantor())])]
    assert normal_form(ladder()) == ModuleElement.scalar(LOOP * LOOP + LOOP)
    assert normal_form(ladder()) == ModuleElement.scalar(BIGON * BIGON * LOOP)
    assert normal_form(Web()) == ModuleElement.scalar(ONE)


def test_k33_value():
    # one square splits K33 into two webs on two vertices each; both are
    # theta-like after bigon collapse, giving 2 * B * L
    assert normal_form(k33()) == ModuleElement.scalar(2 * BIGON * LOOP)
    assert normal_form(cube()) == normal_form(cube(), ReductionStrategy(9))


def test_strategies_agree_on_gadgets():
    rng = random.Random(6)
    for name in GADGETS:
        for extra in range(4):
            w = gadget_web(rng, name, extra)
            validate(w)
            ref = normal_form(w)
            for seed in range(6):
                assert normal_form(w, ReductionStrategy.seeded(seed)) == ref, name


def test_reducer_matches_worklist():
    rng = random.Random(7)
    red = Reducer()
    for _ in range(150):
        w = random_web(rng, rng.randint(1, 9), rng.randrange(2))
        assert expansion_to_element(red.expand(w)) == normal_form(w)
        for a in (1, -1):
            assert expansion_to_element(red.expand(w), a) == expansion_to_element(expand(w), a)


def test_multiplicativity():
    rng = random.Random(8)
    for _ in range(60):
        a = random_web(rng, rng.randint(1, 6), rng.randrange(2))
        b = random_web(rng, rng.randint(1, 6))
        assert normal_form(disjoint_union(a, b)) == me_mul(normal_form(a), normal_form(b))


def test_trace_reports_every_rule():
    steps = []
    normal_form(disjoint_union(theta(), circle_web()), trace=lambda *x: steps.append(x))
    rules = [s[0] for s in steps]
    assert rules.count("bigon") == 1 and rules.count("loop") == 2
    assert all(len(s) == 3 for s in steps)


def test_seeded_strategy_is_reproducible():
    w = cube()
    runs = []
    for _ in range(2):
        steps = []
        normal_form(w, ReductionStrategy(42), trace=lambda r, s, c: steps.append((r, s)))
        runs.append(steps)
    assert runs[0] == runs[1]


def test_planar_states_collapse_to_scalars():
    rng = random.Random(9)
    for _ in range(30):
        strands = rng.randint(2, 4)
        word = [rng.choice([1, -1]) * rng.randint(1, strands - 1)
                for _ in range(rng.randint(1, 8))]
        code = braid_closure(word, strands)
        for s in states(code):
            assert me_is_scalar(normal_form(state_web(code, s)))


def test_intermediate_webs_stay_valid():
    rng = random.Random(10)
    for _ in range(60):
        work = [random_web(rng, rng.randint(2, 9))]
        while work:
            w = work.pop()
            validate(w)
            sites = find_bigons(w) + find_squares(w)
            if not sites:
                continue
            site = rng.choice(sites)
            if isinstance(site, BigonSite):
                work.append(reduce_bigon(w, site)[1])
            else:
                work.extend(r for _, r in resolve_square(w, site))
