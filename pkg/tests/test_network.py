from fractions import Fraction
import math

import pytest

from acimpedance.errors import NetworkValidationError, PoleError
from acimpedance.exact import LAM, RationalFunction, ratfunc
from acimpedance.network import (RAW, RLC, RawWeight, admittance, build_network, gradient,
                                 laplacian_apply, vertex_weight)


def resistor_path():
    return build_network(None, [("a0", "x", RLC(R=1)), ("x", "a1", RLC(R=1))], "a0", "a1")


class TestRLC:
    def test_admittances(self):
        assert admittance(RLC(R=1)) == RationalFunction.one()
        assert admittance(RLC.from_rlc(C=1)) == LAM
        assert admittance(RLC.from_rlc(L=1)) == LAM.inverse()
        assert admittance(RLC.from_rlc(1, 1, 1)) == ratfunc([0, 1], [1, 1, 1])

    def test_capacitance_is_inverse_elastance(self):
        e = RLC.from_rlc(C="1/4")
        assert e.D == 4
        assert e.C == Fraction(1, 4)
        assert RLC(R=1).C == math.inf
        assert RLC.from_rlc(R=1, C="inf").D == 0

    @pytest.mark.parametrize("kwargs", [dict(), dict(R=0, L=0, C=None)])
    def test_all_zero_rejected(self, kwargs):
        with pytest.raises(NetworkValidationError):
            RLC.from_rlc(**kwargs)

    @pytest.mark.parametrize("kwargs", [dict(R=-1), dict(L="-1/2"), dict(C=0), dict(C=-2)])
    def test_negative_or_zero_capacitance_rejected(self, kwargs):
        with pytest.raises(NetworkValidationError):
            RLC.from_rlc(**kwargs)

    def test_every_rlc_admittance_is_positive(self):
        values = [0, Fraction(1, 3), 1, 7]
        for R in values:
            for L in values:
                for D in values:
                    if R or L or D:
                        assert admittance(RLC(R, L, D)).is_positive()


class TestBuild:
    def test_resistor_path(self):
        net = resistor_path()
        assert net.vertices == ("a0", "x", "a1")
        assert net.interior == ("x",)
        assert vertex_weight(net, "x") == 2

    def test_parallel_edges_merge(self):
        net = build_network(None, [("a0", "a1", RLC(R=1)), ("a1", "a0", RLC(R=1))], "a0", "a1")
        assert net.weight("a0", "a1") == 2
        assert len(net.edges) == 2

    def test_merged_zero_weight_is_dropped(self):
        edges = [("a0", "a1", RLC(R=1)), ("a0", "x", RawWeight(LAM)), ("x", "a0", RawWeight(-LAM)),
                 ("x", "a1", RLC(R=1))]
        net = build_network(None, edges, "a0", "a1", mode=RAW)
        assert "x" not in net.weights["a0"]

    @pytest.mark.parametrize("edges, a0, a1", [
        ([("a0", "a0", RLC(R=1)), ("a0", "a1", RLC(R=1))], "a0", "a1"),
        ([("a0", "a1", RLC(R=1))], "a0", "a0"),
        ([("a0", "x", RLC(R=1)), ("y", "a1", RLC(R=1))], "a0", "a1"),
        ([], "a0", "a1"),
    ])
    def test_invalid_graphs(self, edges, a0, a1):
        with pytest.raises(NetworkValidationError):
            build_network(None, edges, a0, a1)

    def test_raw_weight_needs_raw_mode(self):
        edges = [("a0", "a1", RawWeight(LAM))]
        with pytest.raises(NetworkValidationError):
            build_network(None, edges, "a0", "a1")
        assert build_network(None, edges, "a0", "a1", mode=RAW).all_positive

    def test_zero_raw_weight_rejected(self):
        with pytest.raises(NetworkValidationError):
            RawWeight(RationalFunction.zero())

    def test_minus_lambda_weights_flagged(self, examples):
        net = examples["minus_lambda"]
        bad = {frozenset((x, y)) for x, y, _ in net.nonpositive_edges()}
        assert bad == {frozenset(("y", "a0")), frozenset(("x", "a1"))}

    def test_declared_vertices_keep_order_and_terminals_must_exist(self):
        net = build_network(["a1", "x", "a0"], [("a0", "x", RLC(R=1)), ("x", "a1", RLC(R=1))], "a0", "a1")
        assert net.vertices == ("a1", "x", "a0")
        with pytest.raises(NetworkValidationError):
            build_network(["a0", "x"], [("a0", "x", RLC(R=1))], "a0", "a1")

    def test_rc_rl_flags(self, examples):
        assert examples["resistors"].is_rc and examples["resistors"].is_rl
        assert not examples["nontrivial"].is_rc
        assert not examples["non_pos_w"].is_rlc


class TestLaplacian:
    def test_constant_function(self, examples):
        net = examples["solutions"]
        f = {x: RationalFunction.constant(3) for x in net.vertices}
        assert all(val == 0 for val in laplacian_apply(net, f).values())

    def test_hand_computed_path(self):
        net = resistor_path()
        lap = laplacian_apply(net, {"a0": 0, "x": 1, "a1": 0}, lam=2j)
        assert lap["x"] == -2
        assert lap["a0"] == 1

    def test_vertex_weight_of_z(self, examples):
        assert vertex_weight(examples["complex_omega"], "z") == ratfunc([1, 0, 1], [0, 1])

    def test_closed_form_solution_is_harmonic_at_2i(self, examples):
        net = examples["nontrivial"]
        den = ratfunc([1, 3, 1, 1])
        v = {"a0": RationalFunction.zero(), "a1": RationalFunction.one(),
             "x": ratfunc([0, 1, 1, 1]) / den, "y": ratfunc([1, 2]) / den}
        vc = {k: val(2j) for k, val in v.items()}
        lap = laplacian_apply(net, vc, lam=2j)
        assert abs(lap["x"]) < 1e-12 and abs(lap["y"]) < 1e-12

    def test_pole_propagates(self, examples):
        with pytest.raises(PoleError):
            laplacian_apply(examples["nontrivial"], {x: 0j for x in "a0 a1 x y".split()}, lam=0j)

    def test_gradient_is_antisymmetric(self):
        f = {"a": 2, "b": 5}
        assert gradient(f, "a", "b") == -gradient(f, "b", "a") == 3

    def test_weights_symmetric(self, examples):
        for net in examples.values():
            for x in net.vertices:
                for y, w in net.weights[x].items():
                    assert net.weights[y][x] == w
