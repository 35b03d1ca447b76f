"""Effective impedance of finite RLC networks.

The Dirichlet problem on a two-terminal network is solved either at one
complex frequency ``lam`` or once and for all over the ordered field of real
rational functions in ``lam``.  The two answers agree away from the singular
frequencies, which :func:`singular_frequencies` locates.

>>> from acimpedance import load_example, effective_symbolic
>>> print(effective_symbolic(load_example("complex_omega")).Z)
(lam^2 + 1)/(lam^2 + lam + 1)
"""

from .errors import (ConvergenceError, ImpedanceError, NetlistSyntaxError, NetworkValidationError,
                     NonPositiveWeightError, PoleError)
from .exact import LAM, Polynomial, RationalFunction, poly_gcd, ratfunc, squarefree_decomposition
from .impedance import (INF, ComparisonReport, ComplexImpedanceResult, SweepRow, SymbolicImpedanceResult,
                        compare, effective_complex, effective_symbolic, energy_complex, energy_symbolic,
                        sweep)
from .netlist import (EXAMPLE_NAMES, example_path, load_example, load_netlist, parse_netlist,
                      render_netlist)
from .network import RAW, RLC, STRICT, Network, RawWeight, build_network, laplacian_apply
from .roots import poly_roots
from .solver import (SolutionClass, assemble, determinant_symbolic, gauss_solve, singular_frequencies,
                     solve_complex, solve_symbolic)

__all__ = [
    "ConvergenceError", "ImpedanceError", "NetlistSyntaxError", "NetworkValidationError",
    "NonPositiveWeightError", "PoleError",
    "LAM", "Polynomial", "RationalFunction", "poly_gcd", "ratfunc", "squarefree_decomposition",
    "INF", "ComparisonReport", "ComplexImpedanceResult", "SweepRow", "SymbolicImpedanceResult",
    "compare", "effective_complex", "effective_symbolic", "energy_complex", "energy_symbolic", "sweep",
    "EXAMPLE_NAMES", "example_path", "load_example", "load_netlist", "parse_netlist", "render_netlist",
    "RAW", "RLC", "STRICT", "Network", "RawWeight", "build_network", "laplacian_apply",
    "poly_roots",
    "SolutionClass", "assemble", "determinant_symbolic", "gauss_solve", "singular_frequencies",
    "solve_complex", "solve_symbolic",
]
