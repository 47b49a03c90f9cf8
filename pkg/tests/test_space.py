import pytest

from coarsewedge.ordinals import (
    ALEPH0,
    ALEPH1,
    ALEPH2,
    OMEGA,
    OMEGA1,
    OMEGA2,
    ZERO,
    CardClass,
    CofClass,
    parse_ordinal,
    successor,
)
from coarsewedge.space import (
    ANON,
    ROOT,
    AdmissibilityError,
    PointAddr,
    SpaceError,
    Valdivia,
    build_space,
    classify,
    format_atoms,
    format_point,
    height,
    ims_count,
    intersect_admissible,
    is_countable_member,
    is_subset,
    least_above,
    make_admissible,
    parse_atoms,
    parse_point,
    point_cofinality,
    reorder_to_r1,
    retract,
    segment,
    seg_point,
    set_weight,
    sigma_continuity_ok,
    tree_height,
    union_admissible,
    valdivia_sufficient,
    wedge,
    weight,
)

P = parse_ordinal


def two_branch_tree(first_len="w", child_len="5"):
    """root --e1(first_len)--> b, with child edges e2, e3 of child_len."""
    return build_space(
        {
            "edges": [
                {"id": "e1", "parent": "root", "child": "b", "length": first_len},
                {"id": "e2", "parent": "b", "length": child_len},
                {"id": "e3", "parent": "b", "length": child_len},
            ]
        }
    )


def bundle_tree(mult="w"):
    return build_space(
        {
            "edges": [
                {"id": "e1", "parent": "root", "child": "b", "length": "w1"},
                {"id": "e2", "parent": "b", "length": "w", "multiplicity": mult,
                 "copies": ["c1", "c2"]},
            ]
        }
    )


# -- construction -------------------------------------------------------------


def test_build_examples():
    T = segment(OMEGA2)
    assert weight(T) == ALEPH2
    T2 = two_branch_tree()
    assert set(T2.edges) == {"e1", "e2", "e3"}
    T3 = build_space({"edges": [{"id": "e1", "parent": "root", "length": "w",
                                 "multiplicity": "w"}]})
    assert ims_count(T3, ROOT) == ALEPH0


def test_build_rejections():
    with pytest.raises(SpaceError):
        segment(ZERO)
    with pytest.raises(SpaceError):
        build_space({"edges": [{"id": "e1", "parent": "root", "length": "0"}]})
    with pytest.raises(SpaceError):  # cycle / unknown parent
        build_space({"edges": [{"id": "e1", "parent": "x", "child": "x", "length": "1"}]})
    with pytest.raises(SpaceError):  # bundle with a subtree
        build_space({"edges": [
            {"id": "e1", "parent": "root", "child": "b", "length": "1", "multiplicity": 2},
            {"id": "e2", "parent": "b", "length": "1"},
        ]})


def test_seg_literal():
    T = build_space("seg:w1*2+5")
    assert tree_height(T) == successor(P("w1*2+5"))


# -- heights, wedge, order ----------------------------------------------------


def test_height_examples():
    T = two_branch_tree(first_len="w1", child_len="w")
    assert height(T, ROOT) == ZERO
    assert height(T, PointAddr("e1", "", P("3"))) == P("3")
    assert height(T, PointAddr("e2", "", OMEGA)) == P("w1 + w")


def test_wedge_examples():
    T = two_branch_tree()
    p = PointAddr("e2", "", P("1"))
    q = PointAddr("e3", "", P("1"))
    b = PointAddr("e1", "", OMEGA)  # the branch node b is the top of e1
    assert wedge(T, p, q) == b
    assert wedge(T, PointAddr("e1", "", P("3")), p) == PointAddr("e1", "", P("3"))
    assert wedge(T, p, p) == p
    U = bundle_tree()
    assert wedge(U, PointAddr("e2", "c1", P("4")), PointAddr("e2", "c2", P("9"))) == \
        PointAddr("e1", "", OMEGA1)
    assert wedge(U, PointAddr("e2", ANON, P("2")), PointAddr("e2", "c1", P("2"))) == \
        PointAddr("e1", "", OMEGA1)


def test_ims_and_cofinality():
    T = two_branch_tree()
    assert ims_count(T, PointAddr("e1", "", P("2"))) == CardClass.finite(1)
    assert ims_count(T, PointAddr("e1", "", OMEGA)) == CardClass.finite(2)
    assert ims_count(T, PointAddr("e2", "", P("5"))) == CardClass.finite(0)
    assert point_cofinality(T, ROOT) == CofClass.Zero
    assert point_cofinality(T, PointAddr("e1", "", OMEGA)) == CofClass.Omega
    U = segment(OMEGA2)
    assert point_cofinality(U, seg_point(U, OMEGA1)) == CofClass.Omega1


# -- classification and reorder ------------------------------------------------


def test_classify_examples():
    assert classify(segment(OMEGA2)) == classify(segment(OMEGA2))
    assert classify(segment(OMEGA2)).is_r1_tree
    T = two_branch_tree(first_len="w1")
    c = classify(T)
    assert c.is_r_tree and not c.is_r1_tree
    U = bundle_tree("w")
    cu = classify(U)
    assert not cu.is_r_tree and not cu.is_r1_tree
    V = two_branch_tree(first_len="w")  # countable-cf branch: no violation
    assert classify(V).is_r1_tree


def test_reorder_examples():
    V = two_branch_tree(first_len="w")
    assert reorder_to_r1(V).edges.keys() == V.edges.keys()
    T = two_branch_tree(first_len="w1", child_len="5")
    R = reorder_to_r1(T)
    assert classify(R).is_r1_tree
    assert weight(R) == weight(T) == CardClass.finite(11) + ALEPH1
    # chain of length 2 then two remainders of length 4 hanging above it
    chain = R.edges["b__r"]
    assert chain.length == P("2")
    rests = [e for e in R.edges.values() if e.parent == "b__m"]
    assert sorted((e.length for e in rests), key=str) == [P("4"), P("4")]
    with pytest.raises(SpaceError):
        reorder_to_r1(bundle_tree("w"))


# -- admissible sets ------------------------------------------------------------


def test_make_admissible_examples():
    T = segment(OMEGA2)
    A = make_admissible(T, [(seg_point(T, P("1")), seg_point(T, OMEGA1))])
    assert A.contains(seg_point(T, OMEGA))
    assert not A.contains(seg_point(T, P("w1 + 1")))
    assert A.contains(ROOT)
    with pytest.raises(AdmissibilityError):
        make_admissible(T, [(seg_point(T, OMEGA), seg_point(T, P("w*2")))])


def test_make_admissible_wedge_closure():
    T = two_branch_tree(first_len="w+1")  # branch node at isolated height w+1
    c1 = PointAddr("e2", "", P("1"))
    c2 = PointAddr("e3", "", P("1"))
    with pytest.raises(AdmissibilityError):
        make_admissible(T, [(c1, c1), (c2, c2)])
    A = make_admissible(T, [(c1, c1), (c2, c2)], auto_close=True)
    assert A.contains(PointAddr("e1", "", P("w+1")))
    U = two_branch_tree(first_len="w")  # limit-height branch: closure impossible
    with pytest.raises(AdmissibilityError):
        make_admissible(U, [(c1, c1), (c2, c2)], auto_close=True)


def test_retract_examples():
    T = segment(OMEGA2)
    A = make_admissible(T, [(seg_point(T, P("1")), seg_point(T, OMEGA1))])
    assert retract(T, A, seg_point(T, P("w1 + 1"))) == seg_point(T, OMEGA1)
    assert retract(T, A, seg_point(T, OMEGA)) == seg_point(T, OMEGA)
    empty = make_admissible(T, [])
    assert retract(T, empty, seg_point(T, P("w*2"))) == ROOT
    # on a tree: atom on a sibling edge is ignored
    U = two_branch_tree()
    B = make_admissible(U, [(PointAddr("e2", "", P("1")), PointAddr("e2", "", P("3")))])
    assert retract(U, B, PointAddr("e3", "", P("4"))) == ROOT
    assert retract(U, B, PointAddr("e2", "", P("5"))) == PointAddr("e2", "", P("3"))


def test_union_intersect():
    T = segment(OMEGA2)
    mk = lambda lo, hi: make_admissible(T, [(seg_point(T, P(lo)), seg_point(T, P(hi)))])
    A = mk("1", "w")
    B = mk("5", "w*2")
    I = intersect_admissible(A, B)
    assert I.atoms == mk("5", "w").atoms
    U = union_admissible(A, B)
    assert U.atoms == mk("1", "w*2").atoms
    assert union_admissible(A, A) == A
    assert intersect_admissible(A, make_admissible(T, [])).atoms == ()
    assert is_subset(I, A) and is_subset(I, B) and not is_subset(B, A)


def test_weight_examples():
    T = segment(OMEGA2)
    A = make_admissible(T, [(seg_point(T, P("1")), seg_point(T, OMEGA))])
    assert set_weight(T, A) == ALEPH0
    assert is_countable_member(T, A)
    B = make_admissible(T, [(seg_point(T, P("1")), seg_point(T, OMEGA1))])
    assert set_weight(T, B) == ALEPH1
    assert not is_countable_member(T, B)


def test_sigma_continuity():
    T = segment(OMEGA2)
    A = make_admissible(T, [(seg_point(T, P("1")), seg_point(T, OMEGA1))])
    ok, witness = sigma_continuity_ok(T, A)
    assert not ok and witness == seg_point(T, OMEGA1)
    B = make_admissible(T, [(seg_point(T, P("1")), seg_point(T, P("w1 + 1")))])
    assert sigma_continuity_ok(T, B) == (True, None)
    assert sigma_continuity_ok(T, make_admissible(T, [])) == (True, None)


def test_valdivia():
    assert valdivia_sufficient(segment(OMEGA1)) == Valdivia.YES
    assert valdivia_sufficient(segment(OMEGA2)) == Valdivia.HYPOTHESIS_FAILS
    T = two_branch_tree(first_len="w1", child_len="w1")  # ht = w1*2 + 1
    assert valdivia_sufficient(T) == Valdivia.YES
    U = two_branch_tree(first_len="w2", child_len="5")
    assert valdivia_sufficient(U) == Valdivia.HYPOTHESIS_FAILS
    V = two_branch_tree(first_len="w1*3", child_len="5")
    assert valdivia_sufficient(V) == Valdivia.YES  # finitely many R-points per edge
    W = two_branch_tree(first_len="w1", child_len="w^(w1+1)")  # edges of length w1*w
    assert valdivia_sufficient(W) == Valdivia.NO_DECISION


# -- literals -------------------------------------------------------------------


def test_point_literals():
    T = bundle_tree()
    p = parse_point(T, "e2[c1]@w")
    assert p == PointAddr("e2", "c1", OMEGA)
    assert parse_point(T, format_point(p)) == p
    assert parse_point(T, "root") == ROOT
    assert parse_point(T, "e1@3") == PointAddr("e1", "", P("3"))
    with pytest.raises(SpaceError):
        parse_point(T, "e9@1")


def test_atom_literals():
    T = segment(OMEGA2)
    atoms = parse_atoms(T, "[e1@1, e1@w1]; [e1@w1+2]")
    A = make_admissible(T, atoms)
    assert format_atoms(A) == "[e1@1, e1@w1]; [e1@w1 + 2]"
    reparsed = make_admissible(T, parse_atoms(T, format_atoms(A)))
    assert reparsed == A


def test_least_above():
    T = segment(OMEGA2)
    A = make_admissible(T, parse_atoms(T, "[e1@w1+1]"))
    assert least_above(T, A, seg_point(T, P("1"))) == seg_point(T, P("w1+1"))
    assert least_above(T, A, seg_point(T, P("w1+2"))) is None
    B = make_admissible(T, parse_atoms(T, "[e1@1, e1@w]"))
    assert least_above(T, B, seg_point(T, P("5"))) == seg_point(T, P("5"))
