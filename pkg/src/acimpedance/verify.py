"""Executable checks of the identities and inequalities satisfied by networks.

Every check returns a :class:`CheckReport`; nothing here raises on a failed
property.  Checks over rational functions are exact.  Checks over the complex
numbers compare against ``tol * scale`` where ``scale`` is the sum of the
magnitudes of the terms involved, and put the residual in the witness.

Random instances are drawn from :class:`random.Random` seeded by the caller,
so a report's ``seed`` reproduces it.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence

from .errors import PoleError
from .exact import LAM, RationalFunction, sign_of_quadratic_form
from .impedance import (effective_complex, effective_symbolic, energy_complex, energy_symbolic,
                        is_infinite)
from .network import RLC, Network, build_network, laplacian_apply
from .solver import SolutionClass, singular_frequencies, solve_complex, solve_symbolic

PASS = "pass"
FAIL = "fail"
SKIP = "skip"

GREEN_TOL = 1e-9
CONSERVATION_TOL = 1e-8
CRAMER_TOL = 1e-8
SIGN_TOL = 1e-10

#: Random physical frequencies drawn per network by :func:`run_all`.
PHYSICAL_POINTS = 5

#: RLC parameter values used for random networks.
PARAM_VALUES = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(5))


@dataclass
class CheckReport:
    name: str
    instance: str
    status: str
    witness: str = ""
    seed: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def line(self) -> str:
        parts = [f"check={self.name}", f"status={self.status}", f"instance={self.instance}"]
        if self.seed is not None:
            parts.append(f"seed={self.seed}")
        if self.witness:
            parts.append(f"witness={self.witness.replace(' ', '_')}")
        return " ".join(parts)


def _describe(net: Network) -> str:
    return net.name or f"{len(net.vertices)}v{len(net.edges)}e"


# -- random instances -------------------------------------------------------

def random_rlc(rng: random.Random, kind: str = "rlc") -> RLC:
    """Random edge from :data:`PARAM_VALUES`; ``kind`` is ``rlc``, ``rc`` or ``rl``."""
    while True:
        R = rng.choice(PARAM_VALUES)
        L = Fraction(0) if kind == "rc" else rng.choice(PARAM_VALUES)
        D = Fraction(0) if kind == "rl" else rng.choice(PARAM_VALUES)
        if R or L or D:
            return RLC(R, L, D)


def random_network(rng: random.Random, n_vertices: Optional[int] = None, kind: str = "rlc",
                   extra_edges: Optional[int] = None, name: Optional[str] = None) -> Network:
    """Random connected strict network: a random spanning tree plus extra edges."""
    n = n_vertices if n_vertices is not None else rng.randint(4, 8)
    labels = [f"v{i}" for i in range(n)]
    edges = []
    present = set()
    order = labels[:]
    rng.shuffle(order)
    for i in range(1, n):
        x, y = order[i], order[rng.randrange(i)]
        edges.append((x, y, random_rlc(rng, kind)))
        present.add(frozenset((x, y)))
    if extra_edges is None:
        extra_edges = rng.randint(0, n)
    for _ in range(extra_edges):
        x, y = rng.sample(labels, 2)
        if frozenset((x, y)) in present:
            continue
        present.add(frozenset((x, y)))
        edges.append((x, y, random_rlc(rng, kind)))
    a0, a1 = rng.sample(labels, 2)
    return build_network(labels, edges, a0, a1, name=name)


def random_ratfunc(rng: random.Random, degree: int = 1, magnitude: int = 3) -> RationalFunction:
    """Small random rational function with numerator and denominator of degree <= ``degree``."""
    num = [rng.randint(-magnitude, magnitude) for _ in range(degree + 1)]
    den = [rng.randint(1, magnitude)] + [rng.randint(0, magnitude) for _ in range(degree)]
    return RationalFunction(num, den)


def random_complex(rng: random.Random) -> complex:
    return complex(rng.gauss(0, 1), rng.gauss(0, 1))


def random_physical_lambda(rng: random.Random, lo: float = 0.1, hi: float = 10.0) -> complex:
    return 1j * math.exp(rng.uniform(math.log(lo), math.log(hi)))


def random_subset(rng: random.Random, vertices: Sequence, proper: bool = True) -> list:
    """Random non-empty subset; with ``proper`` its complement is non-empty too."""
    k = rng.randint(1, len(vertices) - 1 if proper else len(vertices))
    return rng.sample(list(vertices), k)


# -- Green's formula ------------------------------------------------------------

def _green_sides(net, f, g, omega, weights, lap, zero):
    inside = set(omega)
    lhs = zero
    for x in omega:
        lhs = lhs + lap[x] * g[x]
    interior = zero
    boundary = zero
    mags = 0.0
    for x in omega:
        for y, r in weights[x].items():
            grad_f = f[y] - f[x]
            if y in inside:
                t = grad_f * (g[y] - g[x]) * r
                interior = interior + t
            else:
                t = grad_f * g[x] * r
                boundary = boundary + t
            if not isinstance(t, RationalFunction):
                mags += abs(t)
    for x in omega:
        if not isinstance(lap[x], RationalFunction):
            mags += abs(lap[x] * g[x])
    rhs = boundary - interior / 2
    return lhs, rhs, mags


def check_green(net: Network, f: Mapping, g: Mapping, omega: Iterable, lam: Optional[complex] = None,
                tol: float = GREEN_TOL, seed: Optional[int] = None) -> CheckReport:
    """Summation by parts on ``omega``, including the boundary term.

    ``sum_{x in omega} (Delta f)(x) g(x)
    = -1/2 sum_{x,y in omega} (grad f)(grad g) rho + sum_{x in omega, y not in omega} (grad f) g(x) rho``
    """
    omega = list(omega)
    if not omega:
        raise ValueError("omega must be non-empty")
    name = "green" if lam is None else "green-complex"
    inst = _describe(net) + (f"@{_fmt(lam)}" if lam is not None else "") + f" |omega|={len(omega)}"
    if lam is None:
        weights = net.weights
        lap = laplacian_apply(net, f)
        lhs, rhs, _ = _green_sides(net, f, g, omega, weights, lap, RationalFunction.zero())
        if lhs == rhs:
            return CheckReport(name, inst, PASS, seed=seed)
        return CheckReport(name, inst, FAIL, f"lhs={lhs} rhs={rhs}", seed)
    weights = net.evaluate(lam)
    lap = laplacian_apply(net, f, lam)
    lhs, rhs, scale = _green_sides(net, f, g, omega, weights, lap, 0j)
    resid = abs(lhs - rhs)
    status = PASS if resid <= tol * max(scale, 1e-300) else FAIL
    return CheckReport(name, inst, status, f"residual={resid:.3e} scale={scale:.3e}", seed)


def check_sum_laplacian(net: Network, f: Mapping, lam: Optional[complex] = None,
                        tol: float = GREEN_TOL, seed: Optional[int] = None) -> CheckReport:
    """The Laplacian of any function sums to zero over all vertices."""
    lap = laplacian_apply(net, f, lam)
    name = "sum-laplacian" if lam is None else "sum-laplacian-complex"
    inst = _describe(net) + (f"@{_fmt(lam)}" if lam is not None else "")
    if lam is None:
        total = RationalFunction.zero()
        for x in net.vertices:
            total = total + lap[x]
        return CheckReport(name, inst, PASS if total.is_zero() else FAIL,
                           "" if total.is_zero() else f"sum={total}", seed)
    weights = net.evaluate(lam)
    total = sum(lap.values(), 0j)
    scale = sum(abs((f[y] - f[x]) * r) for x in net.vertices for y, r in weights[x].items())
    resid = abs(total)
    status = PASS if resid <= tol * max(scale, 1e-300) else FAIL
    return CheckReport(name, inst, status, f"residual={resid:.3e} scale={scale:.3e}", seed)


# -- ordered-field checks ---------------------------------------------------------

def check_max_principle(net: Network, u: Mapping[object, RationalFunction], B: Iterable,
                        seed: Optional[int] = None) -> CheckReport:
    """Max (min) over the complement of ``B`` is bounded by the max (min) over ``B``.

    Applies to ``u`` subharmonic (``Delta u >= 0``) or superharmonic
    (``Delta u <= 0``) on ``V \\ B``; anything else is reported as ``skip``.
    """
    B = list(B)
    rest = [x for x in net.vertices if x not in set(B)]
    inst = f"{_describe(net)} |B|={len(B)}"
    if not B or not rest:
        raise ValueError("B and its complement must both be non-empty")
    lap = laplacian_apply(net, u)
    signs = [lap[x].sign() for x in rest]
    sub = all(s >= 0 for s in signs)
    sup = all(s <= 0 for s in signs)
    if not (sub or sup):
        return CheckReport("max-principle", inst, SKIP, "neither sub- nor superharmonic", seed)
    problems = []
    if sub:
        m_in, m_b = max(u[x] for x in rest), max(u[x] for x in B)
        if m_in > m_b:
            problems.append(f"max_rest={m_in} > max_B={m_b}")
    if sup:
        m_in, m_b = min(u[x] for x in rest), min(u[x] for x in B)
        if m_in < m_b:
            problems.append(f"min_rest={m_in} < min_B={m_b}")
    if problems:
        return CheckReport("max-principle", inst, FAIL, "; ".join(problems), seed)
    return CheckReport("max-principle", inst, PASS, seed=seed)


def check_unit_bounds(net: Network, v: Mapping[object, RationalFunction],
                      seed: Optional[int] = None) -> CheckReport:
    """``0 <= v(x) <= 1`` at every vertex, in the order of rational functions."""
    zero, one = RationalFunction.zero(), RationalFunction.one()
    bad = [x for x in net.vertices if v[x] < zero or v[x] > one]
    if bad:
        return CheckReport("unit-bounds", _describe(net), FAIL,
                           f"{bad[0]}={v[bad[0]]}", seed)
    return CheckReport("unit-bounds", _describe(net), PASS, seed=seed)


def check_conservation_symbolic(net: Network, seed: Optional[int] = None) -> CheckReport:
    """Energy of the Dirichlet solution equals the effective admittance, exactly."""
    res = effective_symbolic(net)
    e = energy_symbolic(net, res.solution.values)
    inst = _describe(net)
    if e == res.P:
        return CheckReport("conservation", inst, PASS, seed=seed)
    return CheckReport("conservation", inst, FAIL, f"energy={e} P={res.P}", seed)


def check_conservation_complex(net: Network, lam: complex, tol: float = CONSERVATION_TOL,
                               seed: Optional[int] = None) -> CheckReport:
    """``1/2 sum |grad v|^2 rho(lam) = P`` for a complex solution (if one exists)."""
    res = effective_complex(net, lam)
    inst = f"{_describe(net)}@{_fmt(lam)}"
    if res.cls is SolutionClass.NONE:
        return CheckReport("conservation-complex", inst, SKIP, "no solution", seed)
    v = res.outcome.particular
    e = energy_complex(net, v, lam)
    weights = net.evaluate(lam)
    scale = sum(abs(v[y] - v[x]) ** 2 * abs(r) for x in net.vertices for y, r in weights[x].items()) / 2
    resid = abs(e - res.P)
    # relative to |P|; the energy scale stands in only when P vanishes
    bound = tol * (abs(res.P) if res.P else max(scale, 1e-300))
    status = PASS if resid <= bound else FAIL
    return CheckReport("conservation-complex", inst, status,
                       f"residual={resid:.3e} P={_fmt(res.P)}", seed)


def thomson_competitors(net: Network, v: Mapping, trials: int, rng: random.Random) -> List[Dict]:
    """Functions with ``f(a0) = 0`` and ``f(a1) = 1``.

    A mix of: ``v`` itself, ``v`` plus a multiple of an interior indicator,
    ``v`` plus a random small perturbation, and independent random functions.
    """
    interior = list(net.interior)
    bumps = [RationalFunction.one(), RationalFunction.constant(Fraction(-1, 2)), LAM, -LAM,
             LAM.inverse(), RationalFunction.constant(Fraction(1, 7))]
    out = [dict(v)]
    for k in range(1, trials):
        f = dict(v)
        if interior:
            mode = k % 3
            if mode == 0:
                x = rng.choice(interior)
                f[x] = f[x] + rng.choice(bumps)
            elif mode == 1:
                for x in interior:
                    if rng.random() < 0.5:
                        f[x] = f[x] + random_ratfunc(rng, degree=rng.randint(0, 1))
            else:
                for x in interior:
                    f[x] = random_ratfunc(rng, degree=rng.randint(0, 1))
        out.append(f)
    return out


def check_thomson(net: Network, trials: int = 100, seed: int = 0) -> CheckReport:
    """The Dirichlet solution minimizes the energy among functions with its boundary values.

    Equality must occur exactly when the competitor equals the solution.
    """
    inst = _describe(net)
    rng = random.Random(seed)
    v = solve_symbolic(net).values
    e_v = energy_symbolic(net, v)
    pairs = list(net.edge_pairs())
    minus_v = [-(d * d * r) if d else None for d, r in ((v[y] - v[x], r) for x, y, r in pairs)]
    for i, f in enumerate(thomson_competitors(net, v, trials, rng)):
        # sign of energy(f) - energy(v) over the edges where f and v differ;
        # the sum itself is never reduced
        terms = []
        for (x, y, r), mv in zip(pairs, minus_v):
            if f[x] is v[x] and f[y] is v[y]:
                continue
            terms.append((f[y], f[x], r))
            if mv is not None:
                terms.append(mv)
        c = sign_of_quadratic_form(terms)
        same = all(f[x] == v[x] for x in net.vertices)
        if c < 0 or (c == 0) != same:
            e_f = energy_symbolic(net, f)
            return CheckReport("thomson", inst, FAIL,
                               f"trial={i} energy_f={e_f} energy_v={e_v} f_equals_v={same}", seed)
    return CheckReport("thomson", inst, PASS, f"trials={trials}", seed)


# -- complex-side sign and agreement checks -------------------------------------------

def check_signs(net: Network, omegas: Iterable[float], tol: float = SIGN_TOL,
                seed: Optional[int] = None) -> CheckReport:
    """``Re Z >= 0`` at ``lam = i*omega``; ``Im Z <= 0`` for RC and ``>= 0`` for RL networks."""
    inst = _describe(net)
    if not net.is_rlc:
        return CheckReport("signs", inst, SKIP, "raw weights", seed)
    rc, rl = net.is_rc, net.is_rl
    for omega in omegas:
        lam = 1j * omega
        try:
            Z = effective_complex(net, lam).Z
        except PoleError:
            continue
        if is_infinite(Z):
            continue
        scale = max(1.0, abs(Z))
        if Z.real < -tol * scale:
            return CheckReport("signs", inst, FAIL, f"omega={omega!r} Z={_fmt(Z)} Re<0", seed)
        if rc and Z.imag > tol * scale:
            return CheckReport("signs", inst, FAIL, f"omega={omega!r} Z={_fmt(Z)} RC with Im>0", seed)
        if rl and Z.imag < -tol * scale:
            return CheckReport("signs", inst, FAIL, f"omega={omega!r} Z={_fmt(Z)} RL with Im<0", seed)
    kind = "rc" if rc else "rl" if rl else "rlc"
    return CheckReport("signs", inst, PASS, f"kind={kind}", seed)


def check_solution_choice(net: Network, lam: complex, trials: int = 5, tol: float = CONSERVATION_TOL,
                          seed: int = 0) -> CheckReport:
    """In the multiple-solution case every solution yields the same admittance."""
    inst = f"{_describe(net)}@{_fmt(lam)}"
    outcome = solve_complex(net, lam)
    if outcome.cls is not SolutionClass.MULTIPLE:
        return CheckReport("solution-choice", inst, SKIP, f"class={outcome.cls}", seed)
    rng = random.Random(seed)
    weights = net.evaluate(lam)

    def admittance(v):
        return sum((v[x] * r for x, r in weights[net.a0].items()), 0j)

    p0 = admittance(outcome.particular)
    for _ in range(trials):
        t = [random_complex(rng) * 10 for _ in outcome.nullspace]
        p = admittance(outcome.member(t))
        if abs(p - p0) > tol * (abs(p0) if p0 else 1.0):
            return CheckReport("solution-choice", inst, FAIL, f"P0={_fmt(p0)} P={_fmt(p)}", seed)
    return CheckReport("solution-choice", inst, PASS, f"P={_fmt(p0)}", seed)


def safe_physical_lambdas(net: Network, count: int, rng: random.Random, margin: float = 1e-2,
                          singular=None) -> List[complex]:
    """``count`` random ``i*omega`` kept at relative distance ``margin`` from singular points."""
    if singular is None:
        singular = singular_frequencies(net)
    bad = [s.value for s in singular.frequencies]
    out = []
    while len(out) < count:
        lam = random_physical_lambda(rng)
        if any(abs(lam - z) <= margin * max(1.0, abs(z)) for z in bad):
            continue
        if net.admittance_poles_at(lam, 1e-6):
            continue
        out.append(lam)
    return out


def check_cramer(net: Network, count: int = 20, tol: float = CRAMER_TOL, seed: int = 0,
                 symbolic=None, singular=None) -> CheckReport:
    """Away from singular points both impedances coincide at random physical ``lam``."""
    inst = _describe(net)
    rng = random.Random(seed)
    if symbolic is None:
        symbolic = effective_symbolic(net)
    worst = 0.0
    for lam in safe_physical_lambdas(net, count, rng, singular=singular):
        r = effective_complex(net, lam)
        z2 = symbolic.Z(lam)
        if r.cls is not SolutionClass.UNIQUE:
            return CheckReport("cramer", inst, FAIL, f"lam={_fmt(lam)} class={r.cls}", seed)
        err = abs(r.Z - z2) / max(1.0, abs(z2))
        worst = max(worst, err)
        if err > tol:
            return CheckReport("cramer", inst, FAIL, f"lam={_fmt(lam)} Z1={_fmt(r.Z)} Z2={_fmt(z2)}", seed)
    return CheckReport("cramer", inst, PASS, f"max_rel_err={worst:.3e}", seed)


# -- orchestration --------------------------------------------------------------------------

def run_all(net: Network, seed: int = 0, trials: int = 100) -> List[CheckReport]:
    """Every check on one network with default trial counts.

    Checks needing positive weights are reported as ``skip`` when the
    network has a non-positive weight.  Reports are ordered by check name.
    """
    rng = random.Random(seed)
    reports = []
    V = list(net.vertices)
    positive = net.all_positive

    # complex side: any weights
    lams = []
    for _ in range(PHYSICAL_POINTS):
        lam = random_physical_lambda(rng)
        if not net.admittance_poles_at(lam, 1e-6):
            lams.append(lam)
    for lam in lams:
        f = {x: random_complex(rng) for x in V}
        g = {x: random_complex(rng) for x in V}
        reports.append(check_green(net, f, g, random_subset(rng, V), lam, seed=seed))
        reports.append(check_green(net, f, g, V, lam, seed=seed))
        reports.append(check_sum_laplacian(net, f, lam, seed=seed))

    # symbolic Green holds over any field, positivity not needed
    f = {x: random_ratfunc(rng) for x in V}
    g = {x: random_ratfunc(rng) for x in V}
    reports.append(check_green(net, f, g, random_subset(rng, V), seed=seed))
    reports.append(check_green(net, f, g, V, seed=seed))
    reports.append(check_sum_laplacian(net, f, seed=seed))

    if not positive:
        note = "non-positive weight: ordered-field checks do not apply"
        for name in ("conservation", "max-principle", "unit-bounds", "thomson", "cramer"):
            reports.append(CheckReport(name, _describe(net), SKIP, note, seed))
    else:
        sym = effective_symbolic(net)
        v = sym.solution.values
        reports.append(check_unit_bounds(net, v, seed=seed))
        reports.append(check_max_principle(net, v, [net.a0, net.a1], seed=seed))
        B = random_subset(rng, V)
        bvals = {b: random_ratfunc(rng, degree=1) for b in B}
        u = solve_symbolic(net, boundary=bvals).values
        reports.append(check_max_principle(net, u, B, seed=seed))
        reports.append(check_conservation_symbolic(net, seed=seed))
        reports.append(check_thomson(net, trials=trials, seed=seed))
        singular = singular_frequencies(net)
        reports.append(check_cramer(net, seed=seed, symbolic=sym, singular=singular))
        for s in singular.frequencies:
            if s.physical:
                reports.append(check_solution_choice(net, s.value, seed=seed))
    for lam in lams:
        reports.append(check_conservation_complex(net, lam, seed=seed))
    reports.append(check_signs(net, [abs(l) for l in lams] + [0.5, 1.0, 2.0], seed=seed))
    reports.sort(key=lambda r: r.name)
    return reports


def _fmt(z) -> str:
    if z is None:
        return "none"
    z = complex(z)
    return f"{z.real:.6g}{z.imag:+.6g}i"
