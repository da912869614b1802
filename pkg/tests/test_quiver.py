import pytest
from hypothesis import given
from hypothesis import strategies as st

from clusterchar.errors import (
    DimensionMismatch,
    InvalidArgument,
    InvalidParams,
    QuiverMismatch,
)
from clusterchar.quiver import (
    IntRep,
    ModuleFamily,
    Quiver,
    a21_homogeneous,
    a21_tube,
    catalog_module,
    direct_sum,
    dual_rep,
    euler_form,
    homogeneous,
    module_from_json,
    preinjective,
    preprojective,
    quasi_factors,
    quiver_from_json,
    tau_translate,
    unit_vector,
    zero_rep,
)


class TestQuiverValidation:
    def test_rejects_directed_two_cycle(self):
        with pytest.raises(InvalidArgument):
            Quiver(("1", "2"), (("1", "2"), ("2", "1")))

    def test_rejects_loop(self):
        with pytest.raises(InvalidArgument):
            Quiver(("1",), (("1", "1"),))

    def test_rejects_disconnected(self):
        with pytest.raises(InvalidArgument):
            Quiver(("1", "2", "3"), (("1", "2"),))

    def test_rejects_unknown_vertex(self):
        with pytest.raises(InvalidArgument):
            Quiver(("1", "2"), (("1", "3"),))

    def test_topological_order_ends_at_sink(self, affine_a2):
        order = affine_a2.topological_order()
        last = order[-1]
        assert all(s != last for s, _ in affine_a2.arrow_indices())

    def test_opposite_reverses(self, kronecker):
        opp = kronecker.opposite()
        assert opp.arrows == (("2", "1"), ("2", "1"))


class TestEulerForm:
    def test_spec_examples(self, kronecker):
        assert euler_form(kronecker, (1, 0), (0, 1)) == -2
        assert euler_form(kronecker, (1, 1), (1, 1)) == 0
        for i in range(2):
            e = unit_vector(kronecker, i)
            assert euler_form(kronecker, e, e) == 1

    def test_unit_diagonal_on_affine(self, affine_a2):
        for i in range(3):
            e = unit_vector(affine_a2, i)
            assert euler_form(affine_a2, e, e) == 1

    def test_dimension_mismatch(self, kronecker):
        with pytest.raises(DimensionMismatch):
            euler_form(kronecker, (1, 0, 0), (0, 1))

    @given(
        d1=st.tuples(*[st.integers(0, 5)] * 2),
        d2=st.tuples(*[st.integers(0, 5)] * 2),
        e=st.tuples(*[st.integers(0, 5)] * 2),
    )
    def test_bilinear(self, d1, d2, e):
        from clusterchar.quiver import kronecker_quiver

        kq = kronecker_quiver()
        s = tuple(a + b for a, b in zip(d1, d2))
        assert euler_form(kq, s, e) == euler_form(kq, d1, e) + euler_form(kq, d2, e)
        assert euler_form(kq, e, s) == euler_form(kq, e, d1) + euler_form(kq, e, d2)


class TestCatalog:
    def test_homogeneous_matrices(self):
        rep = catalog_module(homogeneous(1, 1))
        assert rep.dim == (1, 1)
        assert rep.matrices == (((1,),), ((1,),))
        rep2 = catalog_module(homogeneous(2, 0))
        assert rep2.dim == (2, 2)
        assert rep2.matrices[0] == ((1, 0), (0, 1))
        assert rep2.matrices[1] == ((0, 1), (0, 0))

    def test_preprojective_shapes(self):
        rep = catalog_module(preprojective(1))
        assert rep.dim == (2, 1)
        assert rep.matrices == (((1, 0),), ((0, 1),))
        assert catalog_module(preprojective(0)).dim == (1, 0)

    def test_preinjective_shapes(self):
        rep = catalog_module(preinjective(1))
        assert rep.dim == (1, 2)
        assert rep.matrices == (((1,), (0,)), ((0,), (1,)))

    def test_tube_quasi_simples(self):
        r1 = catalog_module(a21_tube(1, 1))
        r2 = catalog_module(a21_tube(2, 1))
        assert r1.dim == (1, 0, 1)
        assert r2.dim == (0, 1, 0)

    def test_tube_dims_sum_quasi_factors(self):
        for fam in [a21_tube(1, 3), a21_tube(2, 4), homogeneous(3, 1), a21_homogeneous(2, 1)]:
            rep = catalog_module(fam)
            total = [0] * len(rep.dim)
            for g in quasi_factors(fam):
                for i, v in enumerate(catalog_module(g).dim):
                    total[i] += v
            assert tuple(total) == rep.dim

    def test_tau_swaps_tube_index(self):
        assert tau_translate(a21_tube(1, 3)) == a21_tube(2, 3)
        assert tau_translate(homogeneous(2, 1)) == homogeneous(2, 1)
        with pytest.raises(InvalidParams):
            tau_translate(preprojective(1))

    def test_invalid_params(self):
        with pytest.raises(InvalidParams):
            ModuleFamily("affineA21_tube", n=2, index=3)
        with pytest.raises(InvalidParams):
            ModuleFamily("kronecker_homogeneous", n=0)
        with pytest.raises(InvalidParams):
            ModuleFamily("no_such_family")

    def test_excluded_primes_from_spectrum(self):
        rep = catalog_module(homogeneous(1, 6))
        assert rep.excluded_primes() == {2, 3}
        both = direct_sum(catalog_module(homogeneous(1, 1)), catalog_module(homogeneous(1, 3)))
        assert both.excluded_primes() == {2, 3}  # 3 and the difference 2


class TestIntRep:
    def test_shape_validation(self, kronecker):
        with pytest.raises(DimensionMismatch):
            IntRep(kronecker, (1, 1), (((1,),),))  # one matrix missing
        with pytest.raises(DimensionMismatch):
            IntRep(kronecker, (1, 1), (((1, 1),), ((1,),)))  # wrong width

    def test_direct_sum_block_structure(self):
        a = catalog_module(homogeneous(1, 1))
        b = catalog_module(homogeneous(1, 2))
        s = direct_sum(a, b)
        assert s.dim == (2, 2)
        assert s.matrices[1] == ((1, 0), (0, 2))

    def test_direct_sum_with_zero(self, kronecker):
        a = catalog_module(preprojective(1))
        z = zero_rep(kronecker)
        s = direct_sum(a, z)
        assert s.dim == a.dim
        assert s.matrices == a.matrices

    def test_quiver_mismatch(self, affine_a2):
        with pytest.raises(QuiverMismatch):
            direct_sum(catalog_module(homogeneous(1, 1)), zero_rep(affine_a2))

    def test_dual_is_involutive(self):
        rep = catalog_module(a21_tube(1, 2))
        back = dual_rep(dual_rep(rep))
        assert back.dim == rep.dim
        assert back.matrices == rep.matrices
        assert back.quiver.arrows == rep.quiver.arrows


class TestJson:
    def test_quiver_round_trip(self, kronecker):
        obj = kronecker.to_json_obj()
        assert quiver_from_json(obj) == kronecker

    def test_module_family_json(self):
        rep = module_from_json({"family": "kronecker_homogeneous", "params": {"n": 2, "point": 1}})
        assert rep == catalog_module(homogeneous(2, 1))

    def test_module_explicit_json(self, kronecker):
        obj = {
            "quiver": kronecker.to_json_obj(),
            "dim": {"1": 1, "2": 1},
            "matrices": {"0": [[1]], "1": [[1]]},
        }
        rep = module_from_json(obj)
        assert rep.dim == (1, 1)

    def test_malformed_module(self):
        with pytest.raises(InvalidArgument):
            module_from_json({"dim": {"1": 1}})
