import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clusterchar.character import cf_cluster_char, cluster_char
from clusterchar.laurent import Family, x, y
from clusterchar.mutation import cluster_variables_up_to, initial_seed, mutate, seeds_up_to
from clusterchar.quiver import (
    affine_a2_quiver,
    catalog_module,
    preinjective,
    preprojective,
)


class TestInitialSeed:
    def test_kronecker_matrix(self, kronecker):
        seed = initial_seed(kronecker, principal=True)
        assert seed.principal_part() == ((0, 2), (-2, 0))
        assert seed.coefficient_part() == ((1, 0), (0, 1))

    def test_cluster_is_initial_variables(self, kronecker):
        seed = initial_seed(kronecker, principal=False)
        assert seed.cluster == (x(1), x(2))
        assert seed.exchange_matrix == ((0, 2), (-2, 0))

    def test_affine_a2_matrix(self, affine_a2):
        seed = initial_seed(affine_a2, principal=False)
        assert seed.exchange_matrix == ((0, 1, 1), (-1, 0, 1), (-1, -1, 0))


class TestExchange:
    def test_first_exchange_coefficient_free(self, kronecker):
        seed = mutate(initial_seed(kronecker, principal=False), 0)
        assert seed.cluster[0] == (x(2) ** 2 + 1).exact_div(x(1))

    def test_first_exchange_principal(self, kronecker):
        seed = mutate(initial_seed(kronecker, principal=True), 0)
        assert seed.cluster[0] == (y(1) * x(2) ** 2 + 1).exact_div(x(1))

    def test_involution(self, kronecker):
        seed = initial_seed(kronecker, principal=True)
        assert mutate(mutate(seed, 0), 0) == seed
        assert mutate(mutate(seed, 1), 1) == seed

    @given(seq=st.lists(st.integers(0, 2), max_size=4))
    @settings(max_examples=40, deadline=None)
    def test_involution_along_orbits(self, seq):
        seed = initial_seed(affine_a2_quiver(), principal=True)
        for k in seq:
            seed = mutate(seed, k)
        for k in (0, 1, 2):
            assert mutate(mutate(seed, k), k) == seed

    def test_out_of_range(self, kronecker):
        with pytest.raises(IndexError):
            mutate(initial_seed(kronecker, principal=False), 5)


class TestLaurentPhenomenon:
    @pytest.mark.parametrize("principal", [False, True])
    def test_kronecker_depth_six(self, kronecker, principal):
        for v in cluster_variables_up_to(kronecker, 6, principal=principal):
            assert v.min_family_exponent(Family.Y) >= 0
            assert v.is_subtraction_free()

    @pytest.mark.parametrize("principal", [False, True])
    def test_affine_a2_depth_six(self, affine_a2, principal):
        for v in cluster_variables_up_to(affine_a2, 6, principal=principal):
            assert v.min_family_exponent(Family.Y) >= 0
            assert v.is_subtraction_free()


class TestVariableSets:
    def test_depth_zero(self, kronecker):
        assert cluster_variables_up_to(kronecker, 0) == [x(1), x(2)]

    def test_depth_one_kronecker(self, kronecker):
        got = cluster_variables_up_to(kronecker, 1, principal=False)
        assert (x(2) ** 2 + 1).exact_div(x(1)) in got
        assert (x(1) ** 2 + 1).exact_div(x(2)) in got
        assert len(got) == 4

    def test_deduplication_by_polynomial(self, kronecker):
        # depth-2 sequences revisit seeds; variables must not repeat
        got = cluster_variables_up_to(kronecker, 3, principal=False)
        assert len(got) == len(set(got))

    def test_seed_iteration_is_deterministic(self, affine_a2):
        a = [s.cluster for s in seeds_up_to(affine_a2, 3, principal=False)]
        b = [s.cluster for s in seeds_up_to(affine_a2, 3, principal=False)]
        assert a == b


class TestCharacterAgreement:
    def test_coefficient_free_first_six(self, kronecker):
        variables = set(cluster_variables_up_to(kronecker, 3, principal=False))
        for k in range(3):
            assert cf_cluster_char(catalog_module(preprojective(k))) in variables
            assert cf_cluster_char(catalog_module(preinjective(k))) in variables

    def test_principal_first_four(self, kronecker):
        variables = set(cluster_variables_up_to(kronecker, 2, principal=True))
        for k in range(2):
            assert cluster_char(catalog_module(preprojective(k))) in variables
            assert cluster_char(catalog_module(preinjective(k))) in variables
