"""Randomized verification suites over exact instances.

Each suite draws `cases` seeded instances, checks one theorem on each, and
returns a report dict:

    {"suite", "seed", "cases", "passed", "skipped_unknown", "failures"}

A case passes, fails (appended to failures as a short description), or is
skipped when a value involved is Unknown / uncertified — skips are counted,
never silently folded into passes.  Reports are deterministic functions of
(suite, seed, cases).
"""

from __future__ import annotations

import random

from .aq import AqElement, degrees, sigma_divide, to_z_form, z_divide
from .cohomology import cohomology, euler_form
from .duality import dual_certificate, double_dual_check, good_dual
from .errors import UnknownSuite
from .modules import (
    Good,
    MatrixModule,
    Torsion,
    Unknown,
    dual,
    rank_A,
    rank_S,
    rigidity_check,
    torsion_tensor_rank_check,
)
from .samples import (
    rand_aq,
    rand_good,
    rand_module,
    rand_sigma_good,
    rand_sigma_matrix,
    rand_torsion,
)


class _Tally:
    def __init__(self, name, seed, cases):
        self.report = {
            "suite": name,
            "seed": seed,
            "cases": cases,
            "passed": 0,
            "skipped_unknown": 0,
            "failures": [],
        }

    def ok(self):
        self.report["passed"] += 1

    def skip(self):
        self.report["skipped_unknown"] += 1

    def fail(self, ci, msg):
        self.report["failures"].append(f"case {ci}: {msg}")


def _is_unknown(*values) -> bool:
    return any(isinstance(v, Unknown) for v in values)


def _division_case(rng, ci, tally):
    a = rand_aq(rng, 3, 2)
    b = rand_aq(rng, 2, 2)
    z_mode = ci % 2 == 1
    bottom = (ci // 2) % 2 == 1
    da, db = degrees(a), degrees(b)
    key = (lambda d: d.deg_z) if z_mode else (lambda d: d.deg_sigma)
    r, w = (a, b) if key(da) >= key(db) else (b, a)
    dw = degrees(w)
    if z_mode:
        g, h, rem = z_divide(r, w, bottom=bottom)
        lhs = AqElement.from_sigma_poly(g) * r
        small = rem.is_zero() or degrees(rem).deg_z < dw.deg_z
    else:
        g, h, rem = sigma_divide(r, w, bottom=bottom)
        lhs = AqElement.from_laurent(g) * r
        small = rem.is_zero() or degrees(rem).deg_sigma < dw.deg_sigma
    if lhs != h * w + rem:
        tally.fail(ci, f"identity broken for r={r}, w={w}")
        return
    if not small:
        tally.fail(ci, f"remainder too large for r={r}, w={w}")
        return
    if z_mode:
        zf_w = to_z_form(w)
        extreme = zf_w[min(zf_w) if bottom else max(zf_w)]
    else:
        sup = w.sigma_support()
        extreme = w.coefficient(sup[0] if bottom else sup[-1])
    if extreme.is_unit() and not g.is_unit():
        tally.fail(ci, f"unit cofactor expected for w={w}")
        return
    tally.ok()


def _riemann_roch_case(rng, ci, tally):
    M = rand_module(rng, "lltg")
    rep = cohomology(M)
    rk = rank_S(M)
    if _is_unknown(rep.h0, rep.h1, rep.chi, rk) or not rep.certified:
        tally.skip()
        return
    if rep.h0 - rep.h1 != rep.chi or rep.chi != -rk:
        tally.fail(ci, f"h0-h1={rep.h0 - rep.h1} chi={rep.chi} rank_S={rk} for {M!r}")
        return
    tally.ok()


def _serre_case(rng, ci, tally):
    M = rand_module(rng, "lltg")
    Md = dual(M)
    a, b = cohomology(M), cohomology(Md)
    if (
        _is_unknown(a.h0, a.h1, b.h0, b.h1)
        or not a.certified
        or not b.certified
    ):
        tally.skip()
        return
    if a.h0 != b.h0 or a.h1 != b.h1:
        tally.fail(
            ci,
            f"(h0,h1)={a.h0, a.h1} vs dual (h0,h1)={b.h0, b.h1} for {M!r}",
        )
        return
    tally.ok()


def _euler_symmetry_case(rng, ci, tally, bounds=None):
    M = rand_module(rng, "lltg")
    N = rand_module(rng, "lltg")
    x = euler_form(M, N, bounds)
    y = euler_form(N, M, bounds)
    if _is_unknown(x, y):
        tally.skip()
        return
    if x != y:
        tally.fail(ci, f"chi(M,N)={x} chi(N,M)={y} for {M!r}, {N!r}")
        return
    tally.ok()


def _chi_rank_case(rng, ci, tally, bounds=None):
    M = rand_module(rng, "ltgm")
    if isinstance(M, MatrixModule) and M.T.n > 2:
        M = rand_torsion(rng)
    rep = cohomology(M)
    rk = rank_S(M, bounds) if isinstance(M, MatrixModule) else rank_S(M)
    if _is_unknown(rep.chi, rep.h0, rk) or not rep.certified:
        tally.skip()
        return
    if rep.chi != -rk:
        tally.fail(ci, f"chi={rep.chi} rank_S={rk} for {M!r}")
        return
    if rep.h0 > rank_A(M):
        tally.fail(ci, f"h0={rep.h0} exceeds rank_A={rank_A(M)} for {M!r}")
        return
    if (rep.chi == 0) != (rk == 0):
        tally.fail(ci, f"chi={rep.chi} but rank_S={rk} for {M!r}")
        return
    tally.ok()


def _tensor_rank_case(rng, ci, tally, bounds=None):
    if rng.random() < 0.5:
        N = rand_module(rng, "l")
    else:
        N = Good(rand_sigma_good(rng, t_max=1))
    M = rand_torsion(rng, max_blocks=1, max_size=2)
    lhs, rhs = torsion_tensor_rank_check(N, M, bounds)
    if _is_unknown(lhs):
        tally.skip()
        return
    if lhs != rhs:
        tally.fail(ci, f"search rank {lhs} != closed form {rhs} for {N!r} x {M!r}")
        return
    tally.ok()


def _duality_case(rng, ci, tally):
    p = rand_sigma_good(rng, t_max=3)
    r, D = good_dual(p)
    dp, dr = degrees(p), degrees(r)
    if dr.deg_z != dp.deg_z or dr.z_good != dp.z_good:
        tally.fail(ci, f"degree data not preserved for p={p}")
        return
    if rank_A(D) != dp.deg_sigma or rank_S(D) != dp.deg_z:
        tally.fail(ci, f"dual ranks off for p={p}")
        return
    if not dual_certificate(p, extra=3):
        tally.fail(ci, f"pairing certificate failed for p={p}")
        return
    if not double_dual_check(p):
        tally.fail(ci, f"double dual failed for p={p}")
        return
    tally.ok()


def _rigidity_case(rng, ci, tally):
    roll = rng.random()
    if roll < 0.4:
        M = MatrixModule(rand_sigma_matrix(rng, n_max=3))
    else:
        M = rand_module(rng, "ltg")
    if not rigidity_check(M):
        tally.fail(ci, f"rigidity failed for {M!r}")
        return
    tally.ok()


_SUITES = {
    "division": _division_case,
    "riemann_roch": _riemann_roch_case,
    "serre": _serre_case,
    "euler_symmetry": _euler_symmetry_case,
    "chi_rank": _chi_rank_case,
    "tensor_rank": _tensor_rank_case,
    "duality_rank": _duality_case,
    "rigidity": _rigidity_case,
}


def suite_names():
    return sorted(_SUITES)


_BOUNDED = {"euler_symmetry", "chi_rank", "tensor_rank"}


def verify_suite(name: str, cases: int = 100, seed: int = 0, bounds=None) -> dict:
    """Run one named suite and return its report dict."""
    if name not in _SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {suite_names()}")
    rng = random.Random(seed)
    tally = _Tally(name, seed, cases)
    case = _SUITES[name]
    for ci in range(cases):
        if name in _BOUNDED:
            case(rng, ci, tally, bounds)
        else:
            case(rng, ci, tally)
    return tally.report
