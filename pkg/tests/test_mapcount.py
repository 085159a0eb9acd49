from fractions import Fraction

import pytest

from orbicyclic.mapcount import (
    MissingMapDataError,
    RootedMapTable,
    dart_pair_oracle,
    default_table,
    planar_rooted_count,
    rooted_map_count,
    theta,
)
from orbicyclic.orbifold import OrbifoldSignature, enumerate_orbifolds_via_harvey

PLANAR = [2, 9, 54, 378, 2916, 24057, 208494, 1876446]
TORUS = [0, 1, 20, 307, 4280, 56914, 736568, 9370183]
GENUS2 = [0, 0, 0, 21, 966, 27954, 650076, 13271982]
GENUS3 = [0, 0, 0, 0, 0, 1485, 113256, 5008230]

THETA0 = [2, 4, 14, 57, 312, 2071, 15030, 117735]
THETA1 = [0, 1, 6, 46, 452, 4852, 52972, 587047]
THETA2 = [0, 0, 0, 4, 106, 2382, 46680, 830848]


class TestPlanarClosedForm:
    def test_sequence(self):
        assert [planar_rooted_count(n) for n in range(1, 9)] == PLANAR
        assert planar_rooted_count(0) == 1


class TestTable:
    def test_packaged_values(self):
        table = default_table()
        for n in range(1, 9):
            assert table[(1, n)] == TORUS[n - 1]
            assert table[(2, n)] == GENUS2[n - 1]
            assert table[(3, n)] == GENUS3[n - 1]
        assert (0, 12) in table
        assert (4, 1) not in table
        assert len(table) == 49

    def test_validation(self):
        RootedMapTable({(0, 0): 1, (0, 1): 2, (1, 2): 1})
        with pytest.raises(ValueError):
            RootedMapTable({(0, 1): 3})  # closed form gives 2
        with pytest.raises(ValueError):
            RootedMapTable({(1, 0): 0})  # no zero-edge rows off the sphere
        with pytest.raises(ValueError):
            RootedMapTable({(1, 2): -1})
        with pytest.raises(ValueError):
            RootedMapTable({(-1, 2): 5})

    def test_from_csv_rejects_malformed(self, tmp_path):
        bad_rows = ["1,2", "1,2,x", "0,1,2\n0,1,2"]
        for i, body in enumerate(bad_rows):
            path = tmp_path / f"bad{i}.csv"
            path.write_text("genus,edges,count\n" + body + "\n")
            with pytest.raises(ValueError):
                RootedMapTable.from_csv(path)

    def test_from_csv_header_optional(self, tmp_path):
        path = tmp_path / "bare.csv"
        path.write_text("0,0,1\n0,1,2\n")
        assert RootedMapTable.from_csv(path)[(0, 1)] == 2


class TestRootedMapCount:
    def test_conventions(self):
        assert rooted_map_count(0, 0) == 1
        assert rooted_map_count(1, 0) == 0
        assert rooted_map_count(2, -1) == 0
        assert rooted_map_count(1, Fraction(3, 2)) == 0
        assert rooted_map_count(0, Fraction(4, 2)) == 9
        with pytest.raises(ValueError):
            rooted_map_count(-1, 2)

    def test_missing_data(self):
        with pytest.raises(MissingMapDataError):
            rooted_map_count(4, 8)
        with pytest.raises(LookupError):
            rooted_map_count(1, 13)

    def test_table_override(self):
        table = RootedMapTable({(5, 1): 7})
        assert rooted_map_count(5, 1, table) == 7
        with pytest.raises(MissingMapDataError):
            rooted_map_count(1, 1, table)


class TestTheta:
    def test_sequences(self):
        assert [theta(0, n) for n in range(1, 9)] == THETA0
        assert [theta(1, n) for n in range(1, 9)] == THETA1
        assert [theta(2, n) for n in range(1, 9)] == THETA2

    def test_sparse_high_genus(self):
        # genus 4 needs at least 8 edges; small n dies in the multinomial,
        # not in the table
        assert theta(4, 2) == 0
        with pytest.raises(MissingMapDataError):
            theta(4, 8)

    def test_errors(self):
        with pytest.raises(ValueError):
            theta(0, 0)
        with pytest.raises(ValueError):
            theta(-1, 2)

    def test_enumerator_route_matches(self):
        for gamma in range(0, 3):
            for n in range(1, 7):
                assert theta(gamma, n) == theta(
                    gamma, n, enumerator=enumerate_orbifolds_via_harvey
                )

    def test_trivial_group_term_only(self):
        # restricting the sum to ell = 1 counts each rooted quotient map once
        def only_trivial(gamma, ell):
            if ell == 1:
                return [OrbifoldSignature(gamma, ())]
            return []

        assert theta(0, 3, enumerator=only_trivial) == planar_rooted_count(3) // 6


class TestDartPairOracle:
    def test_single_edge(self):
        assert dart_pair_oracle(0, 1) == (2, 2)
        assert dart_pair_oracle(1, 1) == (0, 0)

    def test_rooted_totals_by_genus(self):
        assert dart_pair_oracle(0, 2)[0] == 9
        assert dart_pair_oracle(1, 2)[0] == 1
        assert dart_pair_oracle(0, 3)[0] == 54
        assert dart_pair_oracle(1, 3)[0] == 20

    def test_unrooted_matches_theta(self):
        for gamma in range(0, 3):
            for n in range(1, 4):
                assert dart_pair_oracle(gamma, n)[1] == theta(gamma, n)

    def test_guard(self):
        with pytest.raises(ValueError):
            dart_pair_oracle(0, 4)
        with pytest.raises(ValueError):
            dart_pair_oracle(0, 0)


def test_theta_integrality_and_rooted_sandwich():
    for gamma in range(0, 3):
        for n in range(1, 9):
            unrooted = theta(gamma, n)
            rooted = rooted_map_count(gamma, n)
            assert unrooted * 2 * n >= rooted
            assert unrooted <= rooted or rooted == 0
