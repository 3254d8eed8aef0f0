import io
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from onomast.errors import ContractViolationError, FormatError
from onomast.extract import HumanEntityRecord, Sex
from onomast.gender_table import (
    GenderTable,
    SexCounts,
    TableBuildStats,
    accumulate,
    iter_scores,
    merge_tables,
    score,
)


def rec(qid, sex, *names):
    return HumanEntityRecord(qid, sex, frozenset(names))


class TestScore:
    @pytest.mark.parametrize(
        "male,female,expected",
        [(10, 0, Fraction(1)), (0, 3, Fraction(0)), (3, 1, Fraction(3, 4))],
    )
    def test_examples(self, male, female, expected):
        assert score(SexCounts(male, female)) == expected

    def test_zero_total_rejected(self):
        with pytest.raises(ContractViolationError):
            score(SexCounts(0, 0))

    def test_endpoints_are_exact(self):
        assert score(SexCounts(7, 0)) == 1
        assert score(SexCounts(0, 7)) == 0

    @given(
        st.integers(min_value=0, max_value=10**6),
        st.integers(min_value=0, max_value=10**6),
        st.integers(min_value=1, max_value=1000),
    )
    def test_scale_invariance(self, male, female, k):
        if male + female == 0:
            return
        assert score(SexCounts(k * male, k * female)) == score(SexCounts(male, female))


class TestAccumulate:
    def test_direct_count(self):
        table = accumulate([rec("E1", Sex.MALE, "douglas"), rec("E2", Sex.FEMALE, "douglas")])
        assert table.counts == {"douglas": SexCounts(1, 1)}

    def test_multi_name_entity(self):
        table = accumulate([rec("E1", Sex.MALE, "jean", "pierre")])
        assert table.counts == {"jean": SexCounts(1, 0), "pierre": SexCounts(1, 0)}

    def test_raw_variants_cleaning_to_same_name_count_once(self):
        table = accumulate([rec("E1", Sex.MALE, "José", "Jose")])
        assert table.counts == {"jose": SexCounts(1, 0)}

    def test_empty_cleaning_names_skipped_and_counted(self):
        stats = TableBuildStats()
        table = accumulate([rec("E1", Sex.FEMALE, "J.", "Ada")], stats=stats)
        assert table.counts == {"ada": SexCounts(0, 1)}
        assert stats.names_skipped_empty == 1
        assert stats.entities_seen == 1

    def test_initials_cap_forwarded(self):
        table = accumulate([rec("E1", Sex.MALE, "EVA")], initials_max_len=0)
        assert table.counts == {}


def _random_records(rng, n):
    names = ["ada", "bo b", "carl", "dee", "emma", "finn"]
    out = []
    for i in range(n):
        chosen = rng.sample(names, rng.randint(1, 3))
        out.append(rec(f"E{i}", rng.choice([Sex.MALE, Sex.FEMALE]), *chosen))
    return out


class TestMergeAlgebra:
    def test_sum_and_identity(self):
        a = GenderTable({"a": SexCounts(1, 0)})
        b = GenderTable({"a": SexCounts(0, 2)})
        assert merge_tables(a, b).counts == {"a": SexCounts(1, 2)}
        assert merge_tables(a, GenderTable()).counts == a.counts
        assert merge_tables(GenderTable(), a).counts == a.counts

    def test_commutative_associative_on_random_tables(self):
        rng = random.Random(13)
        for _ in range(30):
            t1 = accumulate(_random_records(rng, rng.randint(0, 40)))
            t2 = accumulate(_random_records(rng, rng.randint(0, 40)))
            t3 = accumulate(_random_records(rng, rng.randint(0, 40)))
            assert merge_tables(t1, t2).counts == merge_tables(t2, t1).counts
            left = merge_tables(merge_tables(t1, t2), t3)
            right = merge_tables(t1, merge_tables(t2, t3))
            assert left.counts == right.counts

    def test_accumulate_distributes_over_concat(self):
        rng = random.Random(19)
        for _ in range(30):
            records = _random_records(rng, rng.randint(0, 60))
            cut = rng.randint(0, len(records))
            whole = accumulate(records)
            split = merge_tables(accumulate(records[:cut]), accumulate(records[cut:]))
            assert whole.counts == split.counts


class TestPersistence:
    def test_round_trip(self):
        table = GenderTable(
            {"ada": SexCounts(0, 2), "bo": SexCounts(3, 1)},
            {"source": "mini.nt", "entities": "3"},
        )
        buf = io.StringIO()
        table.save(buf)
        text = buf.getvalue()
        assert text.startswith("# format_version: 1\n")
        assert "ada\t0\t2\n" in text
        loaded = GenderTable.load(io.StringIO(text))
        assert loaded.counts == table.counts
        assert loaded.meta["source"] == "mini.nt"
        assert loaded.meta["entities"] == "3"

    def test_rows_sorted_by_name(self):
        table = GenderTable({"zed": SexCounts(1, 0), "ada": SexCounts(1, 0)})
        buf = io.StringIO()
        table.save(buf)
        rows = [l for l in buf.getvalue().splitlines() if not l.startswith("#")]
        assert rows == sorted(rows)

    @pytest.mark.parametrize(
        "line",
        ["name\t1", "name\tx\t1", "name\t-1\t2", "name\t0\t0"],
    )
    def test_rejects_bad_rows(self, line):
        with pytest.raises(FormatError):
            GenderTable.load([line])

    def test_rejects_duplicate_names(self):
        with pytest.raises(FormatError):
            GenderTable.load(["a\t1\t0", "a\t0\t1"])


def test_iter_scores_sorted():
    table = GenderTable({"zed": SexCounts(1, 0), "ada": SexCounts(1, 3)})
    rows = list(iter_scores(table))
    assert [r[0] for r in rows] == ["ada", "zed"]
    assert rows[0][2] == Fraction(1, 4)
