from fractions import Fraction
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from acimpedance.exact import LAM, RationalFunction, ratfunc
from acimpedance.impedance import (INF, compare, effective_complex, effective_symbolic, energy_complex,
                                   energy_symbolic, is_infinite, omega_grid, sweep)
from acimpedance.network import RAW, RLC, RawWeight, build_network
from acimpedance.solver import SolutionClass

from sp_oracle import matches_oracle, tree_edges

SQRT2 = math.sqrt(2)
SQRT3 = math.sqrt(3)


def close(a, b, rel=1e-8):
    return abs(a - b) <= rel * max(1.0, abs(b))


def resistor_path():
    return build_network(None, [("a0", "x", RLC(R=1)), ("x", "a1", RLC(R=1))], "a0", "a1")


class TestSymbolic:
    def test_nontrivial(self, examples):
        res = effective_symbolic(examples["nontrivial"])
        assert res.Z == ratfunc([1, 3, 1, 1], [1, 2, 3])
        assert res.P == res.Z.inverse()

    def test_complex_omega(self, examples):
        assert effective_symbolic(examples["complex_omega"]).Z == ratfunc([1, 0, 1], [1, 1, 1])

    def test_solutions(self, examples):
        assert effective_symbolic(examples["solutions"]).Z == ratfunc([1, 1, 3, 3], [1, 2, 5, 1, 1])

    def test_non_pos_w_is_one(self, examples):
        assert effective_symbolic(examples["non_pos_w"]).Z == 1

    def test_resistors(self, examples):
        assert effective_symbolic(examples["resistors"]).Z == 2

    def test_impedance_is_positive(self, examples):
        for name in ("nontrivial", "solutions", "complex_omega", "non_pos_w", "resistors"):
            res = effective_symbolic(examples[name])
            assert res.Z.is_positive() and res.P.is_positive()


class TestComplex:
    def test_solutions_multiple(self, examples):
        r = effective_complex(examples["solutions"], 1j * SQRT2)
        assert r.cls is SolutionClass.MULTIPLE
        assert close(r.Z, 1 + 1j * SQRT2)

    def test_solutions_none(self, examples):
        r = effective_complex(examples["solutions"], 1j / SQRT3)
        assert r.cls is SolutionClass.NONE
        assert r.Z == 0 and is_infinite(r.P)

    def test_complex_omega_at_minus_one(self, examples):
        r = effective_complex(examples["complex_omega"], -1)
        assert r.cls is SolutionClass.MULTIPLE
        assert close(r.Z, -2 / 3)

    def test_nontrivial_at_one(self, examples):
        r = effective_complex(examples["nontrivial"], 1j)
        assert r.cls is SolutionClass.MULTIPLE
        assert close(r.Z, 0.5 - 0.5j)

    def test_zero_admittance_reported_as_infinite(self):
        # v(x) = 1/2, so P = 1/2 * 1 + 1 * (-1/2) = 0
        half = RationalFunction.constant(Fraction(-1, 2))
        edges = [("a0", "x", RawWeight(RationalFunction.one())), ("x", "a1", RawWeight(RationalFunction.one())),
                 ("a0", "a1", RawWeight(half))]
        r = effective_complex(build_network(None, edges, "a0", "a1", mode=RAW), 1j)
        assert r.cls is SolutionClass.UNIQUE
        assert r.Z == INF and r.note == "zero admittance"


class TestEnergy:
    def test_path_energy_is_half(self):
        net = resistor_path()
        v = {"a0": 0j, "x": 0.5 + 0j, "a1": 1 + 0j}
        assert energy_complex(net, v, 1j) == pytest.approx(0.5)
        sym = effective_symbolic(net)
        assert energy_symbolic(net, sym.solution.values) == Fraction(1, 2) == sym.P

    def test_nontrivial_at_2i(self, examples):
        net = examples["nontrivial"]
        r = effective_complex(net, 2j)
        assert r.cls is SolutionClass.UNIQUE
        assert abs(energy_complex(net, r.outcome.particular, 2j) - r.P) <= 1e-9 * max(1, abs(r.P))

    def test_nontrivial_symbolic_conservation(self, examples):
        net = examples["nontrivial"]
        res = effective_symbolic(net)
        assert energy_symbolic(net, res.solution.values) == res.P

    def test_constant_function(self, examples):
        net = examples["solutions"]
        assert energy_complex(net, {x: 3 + 1j for x in net.vertices}, 1j) == 0
        assert energy_symbolic(net, {x: LAM for x in net.vertices}) == 0

    def test_competitor_has_more_energy(self, examples):
        net = examples["nontrivial"]
        v = effective_symbolic(net).solution.values
        f = dict(v)
        f["x"] = f["x"] + RationalFunction.constant(Fraction(1, 3))
        assert energy_symbolic(net, f) > energy_symbolic(net, v)


class TestCompare:
    def test_nontrivial_agrees_at_i(self, examples):
        rep = compare(examples["nontrivial"], 1j)
        assert rep.agree and rep.note == "singular-multiple"
        assert close(rep.Z1, 0.5 - 0.5j) and close(rep.Z2, 0.5 - 0.5j)

    def test_complex_omega_at_i_agrees_at_zero(self, examples):
        rep = compare(examples["complex_omega"], 1j)
        assert rep.agree
        assert abs(rep.Z1) <= 1e-8 and abs(rep.Z2) <= 1e-8

    def test_complex_omega_disagrees_at_minus_one(self, examples):
        rep = compare(examples["complex_omega"], -1)
        assert not rep.agree
        assert close(rep.Z1, -2 / 3) and close(rep.Z2, 2)

    def test_non_pos_w_disagrees_at_i(self, examples):
        rep = compare(examples["non_pos_w"], 1j)
        assert not rep.agree and rep.cls is SolutionClass.NONE
        assert rep.Z1 == 0 and close(rep.Z2, 1)
        assert rep.note == "singular-none"

    def test_generic_point(self, examples):
        rep = compare(examples["solutions"], 0.9j)
        assert rep.agree and rep.note == "generic"

    def test_no_symbolic_for_non_positive_weights(self, examples):
        rep = compare(examples["minus_lambda"], 1j)
        assert rep.Z2 is None and not rep.agree and rep.note == "no-symbolic"

    def test_pole_of_symbolic(self, examples):
        rep = compare(examples["nontrivial"], -1 / 3 + 1j * SQRT2 / 3)
        # a root of 3 lam^2 + 2 lam + 1 is a pole of Z2
        assert rep.note == "pole" and rep.Z2 is None


class TestSweep:
    def test_resistors_flat(self):
        rows = sweep(resistor_path(), 0.1, 10, 7, log=True)
        assert len(rows) == 7
        assert all(close(r.result.Z, 2) for r in rows)

    def test_solutions_grid_hits_singular_point(self, examples):
        rows = sweep(examples["solutions"], SQRT2 / 2, SQRT2, 2)
        last = rows[-1]
        assert last.omega == SQRT2
        assert last.result.cls is SolutionClass.MULTIPLE
        assert close(last.result.Z, 1 + 1j * SQRT2)

    def test_nontrivial_at_one(self, examples):
        rows = sweep(examples["nontrivial"], 1, 1, 1)
        assert close(rows[0].result.Z, 0.5 - 0.5j)

    def test_pole_rows_continue(self):
        net = build_network(None, [("a0", "a1", RawWeight(ratfunc([1], [1, 0, 1])))], "a0", "a1", mode=RAW)
        rows = sweep(net, 0.5, 1.5, 3)
        assert [r.status for r in rows] == ["ok", "pole", "ok"]
        assert rows[1].cls == "pole"

    def test_grid(self):
        assert omega_grid(1, 3, 3) == [1, 2, 3]
        g = omega_grid(1, 100, 3, log=True)
        assert g[0] == 1 and g[2] == 100 and g[1] == pytest.approx(10)
        for bad in ((0, 1, 3), (2, 1, 3), (1, 2, 0)):
            with pytest.raises(ValueError):
                omega_grid(*bad)


# -- series/parallel oracle -----------------------------------------------------------

values = st.sampled_from([Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3)])
rlc_triples = st.tuples(values, values, values).filter(any)


@st.composite
def sp_trees(draw, leaves=None):
    if leaves is None:
        leaves = draw(st.integers(1, 4))
    if leaves == 1:
        return ("edge", draw(rlc_triples))
    k = draw(st.integers(1, leaves - 1))
    op = draw(st.sampled_from(["series", "parallel"]))
    return (op, draw(sp_trees(k)), draw(sp_trees(leaves - k)))


@given(sp_trees())
def test_series_parallel_oracle(tree):
    assert matches_oracle(tree)


def test_series_parallel_known():
    r = ("edge", (1, 0, 0))
    c = ("edge", (0, 0, 1))
    l = ("edge", (0, 1, 0))
    assert matches_oracle(("series", r, r))
    assert matches_oracle(("parallel", ("series", r, l), c))
    net = build_network(None, tree_edges(("parallel", ("series", r, l), c), "a0", "a1"),
                        "a0", "a1")
    # (1 + lam) || 1/lam = (1 + lam)/(lam^2 + lam + 1)
    assert effective_symbolic(net).Z == ratfunc([1, 1], [1, 1, 1])
