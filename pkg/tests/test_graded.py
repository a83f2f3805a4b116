import pytest

from bracketlab.graded import (
    FiniteUnitsGrading,
    FormalSum,
    GradedComplex,
    HomologyTable,
    InfiniteCyclicGrading,
    cohomology,
    evaluate_formal_sum,
    integer_rank,
    merge_invariant_factors,
    smith_normal_form,
    snf_diagonal,
)
from bracketlab.rings import ZModRing


class TestSNF:
    def test_diagonalization(self):
        m = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
        d, p, q = smith_normal_form(m)
        assert snf_diagonal(m) == [2, 2, 156]

    def test_rank(self):
        assert integer_rank([[1, 2], [2, 4]]) == 1
        assert integer_rank([[0, 0], [0, 0]]) == 0
        assert integer_rank([[1, 0], [0, 3]]) == 2

    def test_divisibility_chain(self):
        diag = snf_diagonal([[2, 0], [0, 3]])
        assert diag == [1, 6]

    def test_merge_invariant_factors(self):
        assert merge_invariant_factors([[2], [2]]) == [2, 2]
        assert merge_invariant_factors([[2], [4]]) == [2, 4]
        assert merge_invariant_factors([[6], [4]]) == [2, 12]
        assert merge_invariant_factors([]) == []


class TestFormalSum:
    def test_add_and_cancel(self):
        g = InfiniteCyclicGrading()
        s = FormalSum(g, {1: 1, -1: 1})
        t = FormalSum(g, {1: -1})
        assert (s + t).terms == {-1: 1}
        assert (s + (-s)).terms == {}

    def test_scale_degree(self):
        g = InfiniteCyclicGrading()
        s = FormalSum(g, {0: 1, 2: 3})
        assert s.scale_degree(5).terms == {5: 1, 7: 3}

    def test_evaluate_in_ring(self):
        ring = ZModRing(7)
        g = FiniteUnitsGrading(ring)
        s = FormalSum(g, {3: 2, 5: 1})
        assert evaluate_formal_sum(s, ring) == (2 * 3 + 5) % 7


class TestCohomology:
    def test_two_term_complex_with_torsion(self):
        # 0 -> Z --(2)--> Z -> 0 concentrated in one degree.
        g = InfiniteCyclicGrading()
        c = GradedComplex(
            grading=g,
            degrees={0: [0], 1: [0]},
            differentials={0: [[2]]},
        )
        table = cohomology(c)
        assert table.as_dict() == {(1, 0): (0, (2,))}

    def test_identity_map_is_acyclic(self):
        g = InfiniteCyclicGrading()
        c = GradedComplex(grading=g, degrees={0: [0], 1: [0]}, differentials={0: [[1]]})
        assert cohomology(c).entries == ()

    def test_degree_violation_detected(self):
        g = InfiniteCyclicGrading()
        c = GradedComplex(grading=g, degrees={0: [0], 1: [5]}, differentials={0: [[1]]})
        with pytest.raises(ValueError):
            c.validate()

    def test_non_complex_detected(self):
        g = InfiniteCyclicGrading()
        c = GradedComplex(
            grading=g,
            degrees={0: [0], 1: [0], 2: [0]},
            differentials={0: [[1]], 1: [[1]]},
        )
        with pytest.raises(ValueError):
            c.validate()

    def test_euler_characteristic(self):
        g = InfiniteCyclicGrading()
        c = GradedComplex(
            grading=g,
            degrees={0: [1, 1], 1: [1]},
            differentials={0: [[0, 0]]},
        )
        chi_complex = c.euler_characteristic()
        chi_homology = cohomology(c).euler_characteristic()
        assert chi_complex == chi_homology


class TestHomologyTable:
    def test_sorted_and_sparse(self):
        g = InfiniteCyclicGrading()
        table = HomologyTable.from_dict(g, {(1, 3): (1, ()), (0, 1): (2, ()), (2, 5): (0, ())})
        assert [key for key, _, _ in table.entries] == [(0, 1), (1, 3)]

    def test_json_degree_rendering(self):
        ring = ZModRing(5)
        g = FiniteUnitsGrading(ring)
        table = HomologyTable.from_dict(g, {(0, 3): (1, (2,))})
        assert table.to_json()["entries"] == [
            {"i": 0, "degree": "3", "rank": 1, "torsion": [2]}
        ]
