import pytest

from octachar.partitions import Partition, parse_partition, partitions_of
from octachar.characters import mn_character
from octachar.hyperoctahedral import bipartitions_of
from octachar.verify import (
    basechange_image_matches_support,
    build_table,
    dimension_match,
    main_theorem_sweep,
    sign_census,
    w0_class,
)


def P(text):
    return parse_partition(text)


class TestW0:
    def test_values(self):
        assert w0_class(8) == Partition([2, 2, 2, 2])
        assert w0_class(9) == Partition([2, 2, 2, 2, 1])

    def test_rejects_tiny(self):
        with pytest.raises(ValueError):
            w0_class(1)


class TestBuildTable:
    def test_n1(self):
        result = build_table(1)
        assert len(result.rows) == 2
        assert {(r.lambda_even, r.lambda_odd) for r in result.rows} == {
            (P("[1^2]"), P("[1^3]")),
            (P("[2]"), P("[3]")),
        }
        assert result.excluded_even == ()
        assert result.excluded_odd == (P("[2,1]"),)

    def test_n4_highlights(self):
        result = build_table(4)
        assert len(result.rows) == 20
        by_even = {r.lambda_even: r for r in result.rows}
        row = by_even[P("[2^2,1^4]")]
        assert row.theta_even == 4
        assert row.theta_odd == -4
        assert row.lambda_odd == P("[3,1^6]")
        assert row.bn_dim == 4
        assert row.sign == 1

    def test_rows_sorted_and_consistent(self):
        result = build_table(3)
        evens = [r.lambda_even for r in result.rows]
        assert evens == sorted(evens)
        for row in result.rows:
            assert abs(row.theta_even) == row.bn_dim
            assert abs(row.theta_odd) == row.bn_dim
            assert row.theta_even == row.sign * row.bn_dim

    def test_exclusions_partition_everything(self):
        result = build_table(3)
        table_evens = {r.lambda_even for r in result.rows}
        assert table_evens | set(result.excluded_even) == set(partitions_of(6))
        assert not table_evens & set(result.excluded_even)
        table_odds = {r.lambda_odd for r in result.rows}
        assert table_odds | set(result.excluded_odd) == set(partitions_of(7))
        assert not table_odds & set(result.excluded_odd)


class TestCensus:
    def test_m2(self):
        census = sign_census(2)
        assert (census.num_positive, census.num_negative, census.num_zero) == (1, 1, 0)
        assert census.total == 2

    def test_total_is_partition_count(self):
        for m in (5, 8, 11):
            census = sign_census(m)
            assert census.total == sum(1 for _ in partitions_of(m))

    def test_matches_direct_recount(self):
        census = sign_census(9)
        w = w0_class(9)
        values = [mn_character(lam, w) for lam in partitions_of(9)]
        assert census.num_positive == sum(1 for v in values if v > 0)
        assert census.num_negative == sum(1 for v in values if v < 0)

    def test_parallel_agrees(self):
        assert sign_census(10, jobs=2) == sign_census(10)


class TestDimensionMatch:
    def test_small(self):
        for n in range(1, 6):
            assert dimension_match(n, "even")
            assert dimension_match(n, "odd")

    def test_bad_target(self):
        with pytest.raises(ValueError):
            dimension_match(3, "diagonal")


class TestMainTheoremSweep:
    def test_n1_counts(self):
        report = main_theorem_sweep(1, oracle_max=1)
        # 2 bipartitions x (1 even class + 1 odd class)
        assert report.checked == 4
        assert report.ok

    def test_n3(self):
        report = main_theorem_sweep(3, oracle_max=2)
        assert report.ok
        assert report.checked == sum(
            sum(1 for _ in bipartitions_of(n)) * 2 * sum(1 for _ in partitions_of(n))
            for n in (1, 2, 3)
        )
        assert report.oracle_checked > 0

    def test_parallel_agrees(self):
        serial = main_theorem_sweep(2, oracle_max=2)
        parallel = main_theorem_sweep(2, oracle_max=2, jobs=2)
        assert (serial.checked, serial.oracle_checked, serial.failures) == (
            parallel.checked,
            parallel.oracle_checked,
            parallel.failures,
        )


class TestImageCharacterization:
    def test_up_to_six(self):
        for n in range(1, 7):
            assert basechange_image_matches_support(n, "even")
            assert basechange_image_matches_support(n, "odd")
