import pytest

from wellcovered import FieldSpec, InputError
from wellcovered.families import turan_block_sizes
from wellcovered.formulas import (
    f_blowup,
    f_crown,
    f_cycle,
    f_gear,
    f_lex,
    f_lex_blowup,
    f_multi_blowup,
    f_multipartite,
    f_path,
    f_turan,
    f_union,
    kron_rank_case,
)

Q = FieldSpec(0)


class TestUnion:
    def test_values(self):
        assert f_union(1, 1).value == 2
        assert f_union(0, 5).value == 5

    def test_negative_rejected(self):
        with pytest.raises(InputError):
            f_union(-1, 0)


class TestCrown:
    def test_dividing_cases(self):
        assert f_crown(4, FieldSpec(2)).value == 4
        assert f_crown(5, FieldSpec(3)).value == 5
        for p in (2, 3, 5, 7):
            assert f_crown(2 + p, FieldSpec(p)).value == 2 + p

    def test_non_dividing_cases(self):
        assert f_crown(5, Q).value == 4
        assert f_crown(4, FieldSpec(3)).value == 3

    def test_conditions_recorded(self):
        assert f_crown(4, FieldSpec(2)).conditions
        assert f_crown(4, FieldSpec(2)).source == "crown"

    def test_below_range_rejected(self):
        with pytest.raises(InputError):
            f_crown(2, Q)


class TestMultipartite:
    def test_values(self):
        assert f_multipartite([1]).value == 1
        assert f_multipartite([1, 1, 1]).value == 1
        assert f_multipartite([2, 2]).value == 3
        assert f_multipartite([3, 2, 2]).value == 5

    def test_bad_sizes(self):
        with pytest.raises(InputError):
            f_multipartite([])
        with pytest.raises(InputError):
            f_multipartite([1, 0])


class TestTuran:
    def test_divisible_reduction(self):
        assert f_turan(6, 3).value == 6 - 2

    def test_remainder_case(self):
        assert f_turan(7, 3).value == 5

    def test_single_block(self):
        assert f_turan(5, 1).value == 5

    def test_all_singletons(self):
        assert f_turan(6, 6).value == 1

    def test_matches_multipartite_on_its_block_sizes(self):
        for n in range(1, 13):
            for r in range(1, n + 1):
                assert f_turan(n, r).value == f_multipartite(turan_block_sizes(n, r)).value

    def test_range_errors(self):
        with pytest.raises(InputError):
            f_turan(5, 0)
        with pytest.raises(InputError):
            f_turan(5, 6)


class TestPathAndCycle:
    def test_paths(self):
        assert [f_path(n).value for n in range(1, 7)] == [1, 1, 2, 2, 2, 2]

    def test_path_zero_rejected(self):
        with pytest.raises(InputError):
            f_path(0)

    def test_cycles(self):
        want = {3: 1, 4: 3, 5: 1, 6: 2, 7: 1, 8: 0, 9: 0, 12: 0}
        for n, v in want.items():
            assert f_cycle(n).value == v

    def test_cycle_below_three_rejected(self):
        with pytest.raises(InputError):
            f_cycle(2)


class TestGear:
    def test_values(self):
        assert f_gear(3).value == 3
        assert f_gear(4).value == 0
        assert f_gear(6).value == 0

    def test_below_range(self):
        with pytest.raises(InputError):
            f_gear(2)


class TestBlowups:
    def test_single_blowup(self):
        assert f_blowup(3, 1).value == 3
        assert f_blowup(1, 2).value == 2
        assert f_blowup(3, 3).value == 5

    def test_blowup_errors(self):
        with pytest.raises(InputError):
            f_blowup(1, 0)
        with pytest.raises(InputError):
            f_blowup(-1, 1)

    def test_multi_blowup(self):
        assert f_multi_blowup(2, 3, [1, 1, 1]).value == 2
        assert f_multi_blowup(1, 2, [2, 2]).value == 3
        assert f_multi_blowup(1, 3, [2, 2, 2]).value == f_multipartite([2, 2, 2]).value

    def test_multi_blowup_errors(self):
        with pytest.raises(InputError):
            f_multi_blowup(1, 2, [1])
        with pytest.raises(InputError):
            f_multi_blowup(1, 2, [1, 0])

    def test_lex_blowup(self):
        assert f_lex_blowup(5, 4, 1).value == 5
        assert f_lex_blowup(3, 4, 2).value == 7
        assert f_lex_blowup(1, 3, 3).value == 7

    def test_lex_blowup_errors(self):
        with pytest.raises(InputError):
            f_lex_blowup(1, 3, 0)


class TestLex:
    def test_designed_pairs(self):
        # both factors K_2
        assert f_lex(2, 2, 1, 1, 2, 2).value == 1
        # K_2 with the two-vertex edgeless graph
        assert f_lex(2, 2, 1, 2, 1, 2).value == 3
        # C_4 with the two-vertex edgeless graph
        assert f_lex(4, 2, 3, 2, 1, 2).value == 7

    def test_no_case_applies(self):
        # conditions fail: plain nb + am - nm
        pred = f_lex(5, 5, 2, 2, 9, 9)
        assert pred.value == 2 * 5 + 5 * 2 - 4 and not pred.conditions

    def test_case_conditions_recorded(self):
        pred = f_lex(2, 2, 1, 2, 1, 2)
        assert len(pred.conditions) == 2

    def test_range_errors(self):
        with pytest.raises(InputError):
            f_lex(0, 2, 0, 1, 1, 1)
        with pytest.raises(InputError):
            f_lex(2, 2, 3, 1, 1, 1)
        with pytest.raises(InputError):
            f_lex(2, 2, 1, 1, 0, 1)


class TestKronRankCase:
    def test_four_cases(self):
        assert kron_rank_case(2, 3, True, True) == 6
        assert kron_rank_case(2, 3, True, False) == 8
        assert kron_rank_case(2, 3, False, True) == 9
        assert kron_rank_case(2, 3, False, False) == 11

    def test_negative_rejected(self):
        with pytest.raises(InputError):
            kron_rank_case(-1, 0, True, True)


def test_consistency_lattice():
    # k blocks of size t: the multipartite, multi-blowup and edgeless-factor
    # predictors must agree (the base graph is complete, dimension 1)
    for k in range(1, 7):
        for t in range(1, 7):
            a = f_multipartite([t] * k).value
            b = f_multi_blowup(1, k, [t] * k).value
            c = f_lex_blowup(1, k, t).value
            assert a == b == c


def test_zero_cycle_dimension_coincides_with_losing_well_coveredness():
    from wellcovered import cycle, is_well_covered

    for n in range(8, 13):
        assert f_cycle(n).value == 0
        assert not is_well_covered(cycle(n))
