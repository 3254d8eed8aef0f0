import io
import math
import random
from fractions import Fraction

import pytest

from onomast.analytics import (
    SpectrumPoint,
    as_fraction,
    cumulative_difference,
    cumulative_share,
    report,
    spectrum,
    table_spectrum,
    top_share,
    transform_axes,
    write_analysis_tsv,
)
from onomast.errors import ContractViolationError
from onomast.gender_table import GenderTable, SexCounts
from onomast.merge import RoleAggregate


def pt(g, types=1, tokens=1, articles=None, citations=0):
    if articles is None:
        articles = tokens
    return SpectrumPoint(as_fraction(g), types, tokens, articles, citations)


def agg(names, tokens, citations):
    return RoleAggregate(set(names), tokens, tokens, citations)


class TestSpectrum:
    def test_sorted_by_fraction(self):
        dataset = {
            Fraction(1, 2): agg(["a"], 3, 7),
            Fraction(0): agg(["b", "c"], 2, 1),
        }
        points = spectrum(dataset)
        assert [p.g for p in points] == [Fraction(0), Fraction(1, 2)]
        assert points[0].types == 2

    def test_reduced_fractions_land_on_one_point(self):
        assert Fraction(2, 6) == Fraction(1, 3)  # dict keying collapses them
        dataset = {}
        for g in (Fraction(1, 3), Fraction(2, 6)):
            a = dataset.setdefault(g, agg([], 0, 0))
            a.tokens += 1
            a.articles += 1
        points = spectrum(dataset)
        assert len(points) == 1
        assert points[0].tokens == 2

    def test_empty(self):
        assert spectrum({}) == []


class TestCumulativeShare:
    def test_two_equal_points(self):
        points = [pt(0, tokens=2), pt(1, tokens=2)]
        shares = cumulative_share(points, "tokens")
        assert [s for _, s in shares] == [Fraction(1, 2), Fraction(1)]

    def test_single_point(self):
        assert cumulative_share([pt(0, tokens=5)], "tokens") == [(Fraction(0), Fraction(1))]

    def test_hand_summed(self):
        points = [pt(0, tokens=1), pt("0.5", tokens=1), pt(1, tokens=2)]
        shares = [s for _, s in cumulative_share(points, "tokens")]
        assert shares == [Fraction(1, 4), Fraction(1, 2), Fraction(1)]

    def test_zero_total_rejected(self):
        with pytest.raises(ContractViolationError):
            cumulative_share([pt(0, citations=0)], "citations")
        with pytest.raises(ContractViolationError):
            cumulative_share([], "tokens")

    def test_unknown_measure_rejected(self):
        with pytest.raises(ContractViolationError):
            cumulative_share([pt(0)], "age")


class TestCumulativeDifference:
    def test_hand_computed(self):
        points = [pt(0, tokens=2, citations=1), pt(1, tokens=2, citations=3)]
        diff = cumulative_difference(points)
        assert diff == [(Fraction(0), Fraction(-1, 4)), (Fraction(1), Fraction(0))]

    def test_proportional_is_identically_zero(self):
        points = [
            pt(0, tokens=2, citations=6),
            pt("0.25", tokens=5, citations=15),
            pt(1, tokens=3, citations=9),
        ]
        assert all(d == 0 for _, d in cumulative_difference(points))

    def test_single_point(self):
        assert cumulative_difference([pt(0, tokens=1, citations=9)]) == [
            (Fraction(0), Fraction(0))
        ]

    def test_accepts_role_dataset(self):
        dataset = {Fraction(0): agg(["a"], 1, 1)}
        assert cumulative_difference(dataset) == [(Fraction(0), Fraction(0))]

    def test_last_point_exactly_zero(self):
        rng = random.Random(3)
        points = [
            pt(Fraction(i, 17), tokens=rng.randint(1, 9), citations=rng.randint(0, 99))
            for i in range(18)
        ]
        diff = cumulative_difference(points)
        assert diff[-1][1] == 0


class TestTopShare:
    def test_interior_mass(self):
        assert top_share([pt("0.5", tokens=9)], "tokens", "0.005") == 0

    def test_endpoint_mass(self):
        points = [pt(0, tokens=3), pt(1, tokens=5)]
        assert top_share(points, "tokens", "0.005") == 1

    def test_hand_counted(self):
        points = [pt(0), pt("0.004"), pt("0.5"), pt(1)]
        assert top_share(points, "tokens", "0.005") == Fraction(3, 4)

    def test_boundary_is_strict(self):
        points = [pt("0.005", tokens=1), pt("0.5", tokens=1)]
        assert top_share(points, "tokens", "0.005") == 0
        points = [pt("0.995", tokens=1), pt("0.5", tokens=1)]
        assert top_share(points, "tokens", "0.005") == 0

    def test_monotone_in_alpha(self):
        rng = random.Random(11)
        points = [
            pt(Fraction(rng.randint(0, 1000), 1000), tokens=rng.randint(1, 5))
            for _ in range(60)
        ]
        alphas = [Fraction(1, 1000), Fraction(1, 200), Fraction(1, 20), Fraction(49, 100)]
        shares = [top_share(points, "tokens", a) for a in alphas]
        assert shares == sorted(shares)

    @pytest.mark.parametrize("alpha", ["0", "0.5", "0.7", "-0.1"])
    def test_alpha_domain(self, alpha):
        with pytest.raises(ContractViolationError):
            top_share([pt(0)], "tokens", alpha)

    def test_float_alpha_means_decimal(self):
        # 0.005 the float must behave as 1/200 exactly
        points = [pt(Fraction(1, 200), tokens=1), pt(1, tokens=1)]
        assert top_share(points, "tokens", 0.005) == Fraction(1, 2)


class TestTransformAxes:
    def test_fixed_points(self):
        out = transform_axes([(0, 0), (0.5, 0.25), (1, 1)])
        xs = [x for x, _ in out]
        assert xs[0] == 0
        assert abs(xs[1] - 0.5) < 1e-12
        assert xs[2] == 1
        assert out[1][1] == 0.5

    def test_strictly_monotone(self):
        xs = [i / 100 for i in range(101)]
        out = transform_axes([(x, x) for x in xs])
        tx = [x for x, _ in out]
        assert all(b > a for a, b in zip(tx, tx[1:]))

    @pytest.mark.parametrize("x,y", [(-0.1, 0), (1.1, 0), (0.5, -1)])
    def test_domain_errors(self, x, y):
        with pytest.raises(ContractViolationError):
            transform_axes([(x, y)])


class TestTableSpectrum:
    def test_counts_types_and_entity_name_pairs(self):
        table = GenderTable(
            {
                "ada": SexCounts(0, 4),
                "bea": SexCounts(0, 1),
                "carl": SexCounts(3, 1),
            }
        )
        points = table_spectrum(table)
        assert [p.g for p in points] == [Fraction(0), Fraction(3, 4)]
        assert points[0].types == 2  # ada and bea
        assert points[0].tokens == 5  # 4 + 1 entity-name pairs
        assert points[1].tokens == 4


class TestReport:
    def _two_name_dataset(self):
        # name "fem" at g=0: 1 type, 2 tokens, citations 2
        # name "mas" at g=1: 1 type, 2 tokens, citations 6
        return {
            Fraction(0): agg(["fem"], 2, 2),
            Fraction(1): agg(["mas"], 2, 6),
        }

    def test_two_name_fixture_hand_checked(self):
        summary = report({"first": self._two_name_dataset()}, alpha="0.005")
        role = summary["roles"]["first"]
        assert role["totals"] == {"types": 2, "tokens": 4, "articles": 4, "citations": 8}
        assert role["top_gendered_share"] == {
            "types": "1",
            "tokens": "1",
            "articles": "1",
        }
        # only g=1 clears the 9999/10000 threshold: 1 of 2 types
        assert role["masculine_pole_type_share"] == "0.5"
        # D(0) = 2/8 - 2/4 = -1/4; D(1) = 0
        assert role["difference_min"] == "-0.25"
        assert role["difference_max"] == "0"
        assert summary["alpha"] == "1/200"

    def test_requires_nonempty(self):
        with pytest.raises(ContractViolationError):
            report({})
        with pytest.raises(ContractViolationError):
            report({"first": {}})

    def test_wikidata_section(self):
        table = GenderTable({"ada": SexCounts(0, 1), "mas": SexCounts(9999, 1)})
        points = table_spectrum(table)
        summary = report(
            {"first": self._two_name_dataset()}, table_points=points
        )
        wikidata = summary["wikidata"]
        assert wikidata["token_counting"] == "entity_name_pairs"
        assert wikidata["totals"] == {"types": 2, "entity_name_pairs": 10001}
        assert wikidata["masculine_pole_type_share"] == "0.5"


class TestAnalysisTsv:
    def test_exact_bytes_no_transform(self):
        points = [pt(0, types=1, tokens=2, citations=1), pt(1, types=1, tokens=2, citations=3)]
        buf = io.StringIO()
        write_analysis_tsv(points, "first", buf, transform="none")
        assert buf.getvalue() == (
            "# format_version: 1\n"
            "# role: first\n"
            "# transform: none\n"
            "g_float\tg_transformed\ttypes\ttokens\tcitations\t"
            "cum_type_share\tcum_token_share\tcum_citation_share\tD\n"
            "0\t0\t1\t2\t1\t0.5\t0.5\t0.25\t-0.25\n"
            "1\t1\t1\t2\t3\t1\t1\t1\t0\n"
        )

    def test_paper_transform_changes_x_only(self):
        points = [pt("0.25", tokens=1, citations=1)]
        buf = io.StringIO()
        write_analysis_tsv(points, "x", buf, transform="paper")
        row = buf.getvalue().splitlines()[-1].split("\t")
        assert row[0] == "0.25"
        expected_x = math.asin(math.sqrt(0.25)) / (math.pi / 2)
        assert row[1] == format(expected_x, ".12g")

    def test_empty_dataset_header_only(self):
        buf = io.StringIO()
        write_analysis_tsv([], "middle", buf)
        lines = buf.getvalue().splitlines()
        assert lines[-1].startswith("g_float\t")
        assert len(lines) == 4

    def test_bad_transform_rejected(self):
        with pytest.raises(ContractViolationError):
            write_analysis_tsv([pt(0)], "x", io.StringIO(), transform="log")


class TestGridUnion:
    def _step_share(self, points, measure, g):
        total = sum(getattr(p, measure) for p in points)
        covered = sum(getattr(p, measure) for p in points if p.g <= g)
        return Fraction(covered, total)

    def test_difference_matches_step_function_evaluation(self):
        rng = random.Random(23)
        for _ in range(25):
            n = rng.randint(1, 40)
            gs = sorted(
                {Fraction(rng.randint(0, 500), 500) for _ in range(n)}
            )
            points = [
                pt(g, tokens=rng.randint(1, 9), citations=rng.randint(0, 50))
                for g in gs
            ]
            if sum(p.citations for p in points) == 0:
                points[-1] = pt(gs[-1], tokens=points[-1].tokens, citations=1)
            diff = cumulative_difference(points)
            for g, d in diff:
                expected = self._step_share(points, "citations", g) - self._step_share(
                    points, "articles", g
                )
                assert d == expected
