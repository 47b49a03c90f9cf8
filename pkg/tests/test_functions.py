import random
from fractions import Fraction

import pytest

from coarsewedge.ordinals import OMEGA, OMEGA1, OMEGA2, parse_ordinal
from coarsewedge.functions import (
    FunctionError,
    adjoint,
    atomic_measure,
    dirac,
    evaluate,
    format_function,
    format_measure,
    in_induced_D,
    indicator,
    linear_combine,
    pair,
    parse_function,
    parse_measure,
    project,
    step_function,
    sup_norm,
)
from coarsewedge.space import (
    ROOT,
    PointAddr,
    build_space,
    make_admissible,
    parse_atoms,
    segment,
    seg_point,
)

P = parse_ordinal
F = Fraction


@pytest.fixture(scope="module")
def T():
    return segment(OMEGA2)


def g(T, text):
    return indicator(T, seg_point(T, P(text)))


def test_indicator_and_evaluate(T):
    one = indicator(T, ROOT)
    assert evaluate(one, seg_point(T, OMEGA1)) == 1
    f = linear_combine([(F(3), g(T, "1")), (F(-1), g(T, "w+1"))])
    assert evaluate(f, ROOT) == 0
    assert evaluate(f, seg_point(T, OMEGA)) == 3
    assert evaluate(f, seg_point(T, P("w+2"))) == 2
    assert linear_combine([(F(1), f), (F(-1), f)]).is_zero()
    with pytest.raises(FunctionError):
        indicator(T, seg_point(T, OMEGA))  # limit-height generator


def test_sup_norm(T):
    assert sup_norm(linear_combine([(F(1), g(T, "1")), (F(-1), g(T, "1"))])) == 0
    assert sup_norm(g(T, "5")) == 1
    f = linear_combine([(F(3), indicator(T, ROOT)), (F(-5), g(T, "w+1"))])
    assert sup_norm(f) == 3
    assert evaluate(f, seg_point(T, P("w+1"))) == -2


def test_project_examples(T):
    f = linear_combine([(F(3), g(T, "1")), (F(-1), g(T, "w+1"))])
    A = make_admissible(T, parse_atoms(T, "[e1@1, e1@w*2]"))
    assert project(T, A, f) == f
    root_only = make_admissible(T, [])
    assert project(T, root_only, g(T, "1")).is_zero()
    B = make_admissible(T, parse_atoms(T, "[e1@w1+1]"))
    assert project(T, B, g(T, "1")) == g(T, "w1+1")


def test_adjoint_examples(T):
    root_only = make_admissible(T, [])
    assert adjoint(T, root_only, dirac(T, seg_point(T, OMEGA))) == dirac(T, ROOT)
    A = make_admissible(T, parse_atoms(T, "[e1@1, e1@3]"))
    mu = parse_measure(T, "d(e1@5) - d(e1@6)")
    assert adjoint(T, A, mu).is_zero()
    inside = parse_measure(T, "d(e1@2) - 2*d(e1@3)")
    assert adjoint(T, A, inside) == inside


def test_pair_and_duality(T):
    assert pair(g(T, "1"), parse_measure(T, "d(root) - d(e1@5)")) == -1
    rng = random.Random(1)
    offsets = ["1", "2", "5", "w+1", "w*2+1", "w1+1", "w1+5"]
    sets = ["[e1@1, e1@w]", "[e1@1, e1@3]; [e1@w1+1]", "[e1@5, e1@w1]", ""]
    for _ in range(60):
        f = linear_combine(
            [(F(rng.randint(-3, 3)), g(T, rng.choice(offsets))) for _ in range(3)]
            + [(F(1), indicator(T, ROOT))]
        )
        mu = atomic_measure(
            T,
            [
                (seg_point(T, P(rng.choice(offsets + ["w", "w1"]))), F(rng.randint(-2, 2)))
                for _ in range(3)
            ],
        )
        A = make_admissible(T, parse_atoms(T, rng.choice(sets)))
        assert pair(project(T, A, f), mu) == pair(f, adjoint(T, A, mu))
        assert sup_norm(project(T, A, f)) <= sup_norm(f)
        assert adjoint(T, A, mu).total_variation() <= mu.total_variation()


def test_in_induced_D(T):
    assert in_induced_D(T, parse_measure(T, "d(e1@5) - d(e1@4)")) == (True, None)
    ok, witness = in_induced_D(T, dirac(T, seg_point(T, OMEGA1)))
    assert not ok and witness == seg_point(T, OMEGA1)
    assert in_induced_D(T, dirac(T, seg_point(T, OMEGA)))[0]


def test_literal_roundtrip(T):
    f = parse_function(T, "3*g(e1@1) - g(e1@w+1)")
    assert parse_function(T, format_function(f)) == f
    mu = parse_measure(T, "2*d(e1@w+5) - d(e1@3)")
    assert parse_measure(T, format_measure(mu)) == mu
    assert format_function(step_function(T, [])) == "0"


def test_tau_additivity():
    U = build_space(
        {
            "edges": [
                {"id": "e1", "parent": "root", "child": "b", "length": "w+1"},
                {"id": "e2", "parent": "b", "length": "5"},
                {"id": "e3", "parent": "b", "length": "5"},
            ]
        }
    )
    xs = [PointAddr("e2", "", P("1")), PointAddr("e3", "", P("1"))]
    f = linear_combine([(F(1), indicator(U, x)) for x in xs])
    mu = atomic_measure(
        U,
        [
            (PointAddr("e2", "", P("3")), F(2)),
            (PointAddr("e1", "", P("2")), F(7)),
            (PointAddr("e3", "", P("5")), F(-1)),
        ],
    )
    assert pair(f, mu) == sum(pair(indicator(U, x), mu) for x in xs)
