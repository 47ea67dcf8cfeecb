import pytest

from lvweights import (
    ModularContext,
    ScatterRecord,
    SearchBox,
    closed_family,
    count_distinguished,
    default_bound,
    distinguished_depth,
    enumerate_distinguished,
    generate_family_set,
    reverse_negate,
    scatter_records,
    write_scatter_csv,
    write_scatter_svg,
)


class TestDefaultBound:
    def test_values(self):
        assert default_bound(4, 2, 5) == 18
        assert default_bound(2, 0, 5) == 0
        assert default_bound(3, 1, 7) == 2

    def test_matches_staircase_top(self):
        from lvweights import rho_family

        for n, k, p in [(4, 2, 5), (5, 3, 7), (8, 2, 11)]:
            w = rho_family(n, k, ModularContext(p))
            assert default_bound(n, k, p) == w[0]


class TestSearchBox:
    def test_rejects_small_prime(self):
        with pytest.raises(ValueError):
            SearchBox(5, 1, 10, 5)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            SearchBox(2, -1, 10, 5)


class TestEnumerate:
    def test_n2(self):
        got = enumerate_distinguished(SearchBox(2, 2, 10, 5))
        assert got == [(6, -6), (1, -1), (0, 0)]

    def test_n3(self):
        got = enumerate_distinguished(SearchBox(3, 1, 10, 5))
        assert got == [(2, 0, -2), (1, 0, -1), (0, 0, 0)]

    def test_n4(self):
        got = enumerate_distinguished(SearchBox(4, 1, 20, 5))
        assert got == [
            (3, 1, -1, -3),
            (2, 0, 0, -2),
            (1, 1, -1, -1),
            (1, 0, 0, -1),
            (0, 0, 0, 0),
        ]

    def test_trivial_lengths(self):
        assert enumerate_distinguished(SearchBox(0, 2, 5, 5)) == [()]
        assert enumerate_distinguished(SearchBox(1, 2, 5, 5)) == [(0,)]

    def test_members_verified_distinguished(self):
        ctx = ModularContext(7)
        for w in enumerate_distinguished(SearchBox(4, 2, 50, 7)):
            d = distinguished_depth(w, ctx, 2)
            assert d is not None and d <= 2

    @pytest.mark.parametrize("n,k,p", [(2, 3, 7), (3, 2, 5), (4, 2, 5),
                                       (4, 2, 7), (5, 2, 7)])
    def test_agrees_with_recursion(self, n, k, p):
        box = SearchBox(n, k, default_bound(n, k, p), p)
        assert len(enumerate_distinguished(box)) == count_distinguished(n, k)

    def test_parallel_matches_sequential(self):
        box = SearchBox(4, 2, default_bound(4, 2, 7), 7)
        seq = enumerate_distinguished(box, jobs=1)
        par = enumerate_distinguished(box, jobs=2)
        assert seq == par


class TestClosedFamily:
    def test_n4_first_family(self):
        ctx = ModularContext(5)
        w = closed_family(4, "F1", (1,), ctx)
        assert w == (3, 1, -1, -3)
        assert distinguished_depth(w, ctx, 5) == 1

    def test_n3_second_family(self):
        ctx = ModularContext(11)
        w = closed_family(3, "B", (0,), ctx)
        assert w == (1, 0, -1)
        assert distinguished_depth(w, ctx, 5) == 1

    def test_n2_zero(self):
        for p in (5, 11):
            assert closed_family(2, "A", (0,), ModularContext(p)) == (0, 0)

    def test_rejects_unknown_family(self):
        with pytest.raises(ValueError):
            closed_family(4, "F9", (1,), ModularContext(5))

    def test_rejects_invalid_params(self):
        with pytest.raises(ValueError):
            closed_family(4, "F4", (0, 1), ModularContext(5))

    def test_rejects_wrong_arity(self):
        with pytest.raises(ValueError, match="parameter"):
            closed_family(4, "F1", (1, 5), ModularContext(5))
        with pytest.raises(ValueError, match="parameter"):
            closed_family(4, "F3", (1,), ModularContext(5))

    def test_f4_parity_split(self):
        ctx = ModularContext(5)
        # Hand-evaluate the two parity branches at k = 0.
        assert closed_family(4, "F4", (2, 0), ctx) == (4, 3, -3, -4)
        assert closed_family(4, "F4", (1, 0), ctx) == (1, 1, -1, -1)


class TestGenerateFamilySet:
    def test_n2(self):
        ctx = ModularContext(5)
        assert generate_family_set(2, ctx, 2) == [(6, -6), (1, -1), (0, 0)]

    def test_n3_zero_budget(self):
        assert generate_family_set(3, ModularContext(11), 0) == [(0, 0, 0)]

    def test_n4_large_budget_count(self):
        got = generate_family_set(4, ModularContext(5), 20)
        assert len(got) == 20**2 + 3 * 20 + 1

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_matches_count_formula(self, n):
        ctx = ModularContext(7)
        for k in range(6):
            assert len(generate_family_set(n, ctx, k)) == count_distinguished(
                n, k
            ), (n, k)

    @pytest.mark.parametrize("n,k", [(2, 3), (3, 3), (4, 3)])
    def test_matches_enumeration(self, n, k):
        # Family completeness: where the scan is feasible the two agree.
        p = 7
        fam = generate_family_set(n, ModularContext(p), k)
        box = SearchBox(n, k, default_bound(n, k, p), p)
        assert fam == enumerate_distinguished(box)

    def test_members_antisymmetric(self):
        for w in generate_family_set(4, ModularContext(5), 8):
            assert reverse_negate(w) == w


class TestScatter:
    def test_single_family_member(self):
        ctx = ModularContext(5)
        recs = scatter_records([(3, 1, -1, -3)], ctx, cap=5)
        assert recs == [ScatterRecord((3, 1), 1)]

    def test_zero_weight(self):
        recs = scatter_records([(0, 0, 0, 0)], ModularContext(5), cap=5)
        assert recs == [ScatterRecord((0, 0), 0)]

    def test_scaled_staircase(self):
        recs = scatter_records([(18, 6, -6, -18)], ModularContext(5), cap=5)
        assert recs == [ScatterRecord((18, 6), 2)]

    def test_rejects_non_distinguished(self):
        with pytest.raises(ValueError, match="not distinguished"):
            scatter_records([(1, 0)], ModularContext(5), cap=5)

    def test_record_validation(self):
        with pytest.raises(ValueError):
            ScatterRecord((1, 2), 0)
        with pytest.raises(ValueError):
            ScatterRecord((2, -1), 0)

    def test_csv(self, tmp_path):
        path = tmp_path / "pts.csv"
        recs = [ScatterRecord((0, 0), 0), ScatterRecord((3, 1), 1)]
        write_scatter_csv(recs, path)
        assert path.read_text() == "x1,x2,depth\n3,1,1\n0,0,0\n"

    def test_csv_header_only(self, tmp_path):
        path = tmp_path / "empty.csv"
        write_scatter_csv([], path, ncoords=2)
        assert path.read_text() == "x1,x2,depth\n"

    def test_csv_single_zero_row(self, tmp_path):
        path = tmp_path / "one.csv"
        write_scatter_csv([ScatterRecord((0, 0), 0)], path)
        assert path.read_text().splitlines()[1] == "0,0,0"

    def test_svg_deterministic(self, tmp_path):
        ctx = ModularContext(5)
        recs = scatter_records(
            generate_family_set(4, ctx, 4), ctx, cap=4
        )
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        write_scatter_svg(recs, a, p=5)
        write_scatter_svg(recs, b, p=5)
        assert a.read_bytes() == b.read_bytes()
        text = a.read_text()
        assert text.startswith("<svg")
        assert "log base 5" in text
        assert text.count("<circle") == len(recs)
