import random
from itertools import combinations

import pytest
from hypothesis import given, settings

from anndiag import (EM, H1, H2, DanglingEndpoint, Diagram, Edge, Family,
                     NodeKind, ShapeClass, Slope, SlopePair, Strictness,
                     TooManyNodes, ViolationCode, are_isomorphic,
                     canonical_form, ell, family_diagram, k1, k2, shape_of,
                     validate_diagram)
from gen import diagrams, enumerate_diagrams, permuted_copy, random_diagram
from gen import labels as labels_strategy
from oracle import brute_force_isomorphic

U = NodeKind.UNKNOWN
PAIR = SlopePair(Slope(1, 2), Slope(2, 1))


def stick(label):
    return Diagram((U, U), (Edge(0, 1, label),))


class TestConstruction:
    def test_stores_verbatim(self):
        d = Diagram((U, U), (Edge(1, 0, H1),))
        assert d.edges[0].a == 1 and d.edges[0].b == 0

    def test_empty_diagram_is_valid(self):
        d = Diagram()
        assert d.nodes == () and d.edges == ()

    def test_dangling_endpoint(self):
        with pytest.raises(DanglingEndpoint):
            Diagram((U, U), (Edge(0, 3, H1),))

    def test_edges_require_nodes(self):
        with pytest.raises(DanglingEndpoint):
            Diagram((), (Edge(0, 0, H1),))

    def test_node_bound(self):
        Diagram((U,) * 16, ())
        with pytest.raises(TooManyNodes):
            Diagram((U,) * 17, ())


class TestShape:
    def test_circle(self):
        assert shape_of(Diagram((U, U), (Edge(0, 1, H2),))) is ShapeClass.CIRCLE
        assert shape_of(Diagram((U,), (Edge(0, 0, H2),))) is ShapeClass.CIRCLE

    def test_circle_stick(self):
        d = Diagram((U, U, U), (Edge(0, 1, H2), Edge(1, 2, k2(Slope(2, 1)))))
        assert shape_of(d) is ShapeClass.CIRCLE_STICK
        d = Diagram((U, U), (Edge(0, 1, k1(Slope(1, 2))), Edge(0, 1, H2)))
        assert shape_of(d) is ShapeClass.CIRCLE_STICK

    def test_theta(self):
        d = Diagram((U, U), (Edge(0, 1, ell(PAIR)), Edge(0, 1, H2),
                             Edge(0, 1, H2)))
        assert shape_of(d) is ShapeClass.THETA

    def test_stick(self):
        assert shape_of(stick(k1(Slope(4, 3)))) is ShapeClass.STICK
        assert shape_of(stick(H1)) is ShapeClass.STICK

    def test_label_multiset_takes_precedence_over_stick(self):
        # A single h2 edge between two nodes is the circle shape, not a stick.
        assert shape_of(stick(H2)) is ShapeClass.CIRCLE

    def test_other(self):
        assert shape_of(Diagram((U,), (Edge(0, 0, H1),))) is ShapeClass.OTHER
        assert shape_of(Diagram()) is ShapeClass.OTHER
        two_h2 = Diagram((U, U), (Edge(0, 1, H2), Edge(0, 1, H2)))
        assert shape_of(two_h2) is ShapeClass.OTHER


class TestCanonicalForm:
    def test_node_order_irrelevant(self):
        d1 = Diagram((NodeKind.FIBERED, NodeKind.SIMPLE),
                     (Edge(0, 1, k1(Slope(4, 3))),))
        d2 = Diagram((NodeKind.SIMPLE, NodeKind.FIBERED),
                     (Edge(1, 0, k1(Slope(4, 3))),))
        assert canonical_form(d1) == canonical_form(d2)

    def test_labels_distinguish(self):
        a = Diagram((U,), (Edge(0, 0, H1),))
        b = Diagram((U,), (Edge(0, 0, H2),))
        assert canonical_form(a) != canonical_form(b)

    def test_node_kinds_distinguish(self):
        a = Diagram((NodeKind.FIBERED,), (Edge(0, 0, H1),))
        b = Diagram((NodeKind.UNKNOWN,), (Edge(0, 0, H1),))
        assert canonical_form(a) != canonical_form(b)

    def test_motto_members_differ(self):
        k_1 = canonical_form(family_diagram(Family.MOTTO, 1))
        k_2 = canonical_form(family_diagram(Family.MOTTO, 2))
        assert k_1 != k_2

    def test_bound(self):
        with pytest.raises(TooManyNodes):
            canonical_form(Diagram((U,) * 16 + (U,), ()))

    @settings(max_examples=150)
    @given(diagrams())
    def test_permutation_invariance(self, d):
        rng = random.Random(canonical_form(d))
        assert canonical_form(permuted_copy(rng, d)) == canonical_form(d)

    def test_deterministic_bytes(self):
        d = Diagram((U, U), (Edge(0, 1, k1(Slope(4, 3))),))
        assert canonical_form(d) == b"uu|0.1.k1(4/3)"


class TestIsomorphism:
    @settings(max_examples=200)
    @given(diagrams(), diagrams())
    def test_agrees_with_permutation_search(self, d1, d2):
        assert are_isomorphic(d1, d2) == brute_force_isomorphic(d1, d2)

    @settings(max_examples=100)
    @given(diagrams())
    def test_permuted_copies_are_isomorphic(self, d):
        rng = random.Random(len(d.edges))
        copy = permuted_copy(rng, d)
        assert are_isomorphic(d, copy)
        assert brute_force_isomorphic(d, copy)

    def test_equivalence_relation_on_small_universe(self):
        universe = list(enumerate_diagrams(max_nodes=2, max_edges=1))
        keys = [canonical_form(d) for d in universe]
        for d in universe:
            assert are_isomorphic(d, d)
        for (i, d1), (j, d2) in combinations(enumerate(universe), 2):
            assert are_isomorphic(d1, d2) == are_isomorphic(d2, d1)
            assert are_isomorphic(d1, d2) == (keys[i] == keys[j])
        # Key equality is transitive, so isomorphism is too; spot-check the
        # grouping against the oracle.
        rng = random.Random(7)
        for _ in range(300):
            i, j = rng.randrange(len(universe)), rng.randrange(len(universe))
            assert (keys[i] == keys[j]) == brute_force_isomorphic(
                universe[i], universe[j])


class TestValidation:
    def test_em_excludes_non_separating(self):
        d = Diagram((U, U), (Edge(0, 1, EM), Edge(0, 0, ell(PAIR))))
        result = validate_diagram(d)
        assert ViolationCode.EM_WITH_NON_SEPARATING in {
            v.code for v in result.violations}

    def test_em_with_separating_companion_is_fine(self):
        d = Diagram((U, U, U), (Edge(0, 1, EM), Edge(1, 2, k2(Slope(1, 2)))))
        assert validate_diagram(d).ok

    def test_stick_must_be_k1_non_integral(self):
        assert validate_diagram(stick(k1(Slope(4, 3)))).ok
        for lab in (H1, EM, k2(Slope(4, 3)), ell(PAIR)):
            result = validate_diagram(stick(lab))
            assert ViolationCode.STICK_MUST_BE_K1 in {
                v.code for v in result.violations}

    def test_stick_with_integral_k1_rejected(self):
        result = validate_diagram(stick(k1(Slope(3, 1))))
        got = {v.code for v in result.violations}
        assert ViolationCode.STICK_MUST_BE_K1 in got
        assert ViolationCode.NON_INTEGRAL_REQUIRED in got

    def test_label_violations_carry_edge_positions(self):
        d = Diagram((U, U, U), (Edge(0, 1, H2), Edge(1, 2, k2(Slope(2, 1)))))
        strict = validate_diagram(d, Strictness.STRICT)
        assert [v.where for v in strict.violations] == ["edge 1"]
        assert validate_diagram(d, Strictness.LENIENT).ok

    def test_warnings_propagate(self):
        d = Diagram((U,), (Edge(0, 0, ell()),))
        result = validate_diagram(d)
        assert result.ok
        assert [w.where for w in result.warnings] == ["edge 0"]

    @given(labels_strategy)
    def test_g2_soundness(self, lab):
        # Any stick-shaped diagram that validates carries exactly one k1
        # label with a finite non-integral slope.
        d = stick(lab)
        if shape_of(d) is ShapeClass.STICK and validate_diagram(d).ok:
            assert lab.kind.value == "k1"
            assert not lab.slope.is_infinite and not lab.slope.is_integral
