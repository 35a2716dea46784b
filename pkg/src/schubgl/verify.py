"""Verification grids tying the closed formulas to the wedge model.

Every suite returns a ``SuiteResult`` with the number of cells checked and
the failing cells.  ``run_suites`` is what ``schubgl verify`` calls.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Callable

from .exactpoly import LaurentWindow, Poly
from .fermion import (WedgeElement, b, b_series, contract, delta_elementary, delta_leibniz,
                      scalar_series_times, series_wedge, sigma_coefficient, sigma_ops, to_schur, wedge)
from .partitions import Partition, add_ones, enumerate_box, partitions_of, remove_part
from .schubert_ops import (GlMatrix, act_elementary, act_matrix, action_box_form, action_first_form,
                           action_second_form, gamma, gamma_star)
from .symfunc import SchurExpansion, hseq, parse_element, project, project_series, reduce_mod, schur_poly, straighten


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, label: str) -> None:
        self.checked += 1
        if not cond:
            self.failures.append(label)


@dataclass(frozen=True)
class GridParams:
    max_r: int = 3
    max_n: int = 6
    max_deg: int = 6
    seed: int = 20240611
    samples: int = 200


def _basis(lam, r, n=None) -> SchurExpansion:
    return SchurExpansion.basis(lam, r, n)


def _wedge_const(u: WedgeElement) -> LaurentWindow:
    return LaurentWindow({(0, 0): u}, WedgeElement.zero(u.r), (0, None, None, 0))


# -- suites --------------------------------------------------------------------

def suite_partitions(p: GridParams) -> SuiteResult:
    res = SuiteResult("partitions")
    for r in range(p.max_r + 1):
        for c in range(p.max_n - r + 1):
            box = enumerate_box(r, c)
            res.check(len(box) == comb(r + c, r), f"|box({r},{c})| = {len(box)}")
            res.check(len(set(box)) == len(box), f"box({r},{c}) has repeats")
            for lam in box:
                for i in range(1, r + 1):
                    mu = remove_part(lam, i)
                    res.check(len(mu) <= max(r - 1, 0) and (not mu or mu[0] <= c),
                              f"remove_part({lam},{i}) = {mu} left the box")
                if r:
                    res.check(add_ones(lam, r).weight() == lam.weight() + r, f"add_ones({lam},{r})")
    return res


def _random_poly(rng: random.Random, r: int, terms: int = 4, max_exp: int = 3) -> Poly:
    return Poly(r, {tuple(rng.randint(0, max_exp) for _ in range(r)): rng.randint(-9, 9)
                    for _ in range(terms)})


def suite_ring(p: GridParams) -> SuiteResult:
    res = SuiteResult("ring axioms")
    rng = random.Random(p.seed)
    for _ in range(p.samples):
        r = rng.randint(1, p.max_r)
        a, b_, c = (_random_poly(rng, r) for _ in range(3))
        res.check((a * b_) * c == a * (b_ * c), f"associativity {a}, {b_}, {c}")
        res.check(a * (b_ + c) == a * b_ + a * c, f"distributivity {a}, {b_}, {c}")
        res.check(a * b_ == b_ * a, f"commutativity {a}, {b_}")
    return res


def suite_straighten(p: GridParams) -> SuiteResult:
    res = SuiteResult("straightening")
    for r in range(1, p.max_r + 1):
        for d in range(p.max_deg + 1):
            for lam in partitions_of(d, r):
                s = schur_poly(lam, r)
                res.check(s.is_homogeneous() and (not s or s.degrees() == {d}), f"Delta_{lam} degree")
                res.check(straighten(s, r) == _basis(lam, r), f"straighten(Delta_{lam}) r={r}")
    rng = random.Random(p.seed + 1)
    for _ in range(p.samples // 4):
        r = rng.randint(1, p.max_r)
        n = rng.randint(r + 1, p.max_n + 1)
        x, y = (_random_poly(rng, r, terms=3, max_exp=2) for _ in range(2))
        # product in B_{r,n} two ways: reduce-then-multiply vs multiply-then-reduce
        direct = reduce_mod(x * y, r, n)
        staged = reduce_mod(reduce_mod(x, r, n) * reduce_mod(y, r, n), r, n)
        res.check(direct == staged, f"projection not multiplicative on {x}, {y} (r={r}, n={n})")
    return res


def suite_two_forms(p: GridParams) -> SuiteResult:
    res = SuiteResult("two closed forms agree")
    top = p.max_deg
    for r in range(1, p.max_r + 1):
        for d in range(p.max_deg + 1):
            for lam in partitions_of(d, r):
                a = action_first_form(lam, r, top, top)
                s = action_second_form(lam, r, top, top)
                for i in range(top + 1):
                    for j in range(top + 1):
                        res.check(a.coeff(i, -j) == s.coeff(i, -j), f"r={r} lam={lam} (i,j)=({i},{j})")
    return res


def oracle_box_action(i: int, j: int, lam, r: int, n: int) -> SchurExpansion:
    return project(to_schur(delta_elementary(i, j, WedgeElement.basis(lam, r))), n)


def suite_oracle(p: GridParams) -> SuiteResult:
    res = SuiteResult("closed form vs wedge model")
    for r in range(1, p.max_r + 1):
        for n in range(r, p.max_n + 1):
            for lam in enumerate_box(r, n - r):
                x = _basis(lam, r, n)
                for i in range(n):
                    for j in range(n):
                        got = act_elementary(i, j, x)
                        want = oracle_box_action(i, j, lam, r, n)
                        res.check(got == want, f"r={r} n={n} lam={lam} E_({i},{j}): {got} vs {want}")
    return res


def _closed_apply(i: int, j: int, x: SchurExpansion) -> SchurExpansion:
    return act_elementary(i, j, x)


def _oracle_apply(i: int, j: int, u: WedgeElement) -> WedgeElement:
    return delta_elementary(i, j, u)


def suite_lie(p: GridParams) -> SuiteResult:
    res = SuiteResult("Lie homomorphism")
    rng = random.Random(p.seed + 2)
    r, n = 3, 6
    box = enumerate_box(r, n - r)
    for _ in range(p.samples):
        i, j, k, l = (rng.randint(0, n - 1) for _ in range(4))
        lam = rng.choice(box)
        rhs_matrix = GlMatrix.elementary(i, j, n).bracket(GlMatrix.elementary(k, l, n))

        x = _basis(lam, r, n)
        lhs = _closed_apply(i, j, _closed_apply(k, l, x)) - _closed_apply(k, l, _closed_apply(i, j, x))
        rhs = act_matrix(rhs_matrix, x)
        res.check(lhs == rhs, f"closed form [E_{i}{j}, E_{k}{l}] on {lam}")

        u = WedgeElement.basis(lam, r)
        lhs_w = _oracle_apply(i, j, _oracle_apply(k, l, u)) - _oracle_apply(k, l, _oracle_apply(i, j, u))
        rhs_w = delta_leibniz(rhs_matrix.entries, u)
        res.check(lhs_w == rhs_w, f"wedge model [E_{i}{j}, E_{k}{l}] on {lam}")
    return res


def _sigma_i_series(i: int, u: LaurentWindow) -> LaurentWindow:
    return LaurentWindow({k: sigma_coefficient(i, v) for k, v in u.entries.items()},
                         u.zero, u.window)


def suite_structural(p: GridParams) -> SuiteResult:
    res = SuiteResult("structural lemmas")
    rng = random.Random(p.seed + 3)

    # Clifford relations
    for _ in range(p.samples // 2):
        deg = rng.randint(0, 3)
        u = WedgeElement.zero(deg)
        for _ in range(3):
            u = u + WedgeElement(deg, {tuple(rng.sample(range(9), deg)): rng.randint(-5, 5)})
        for i in range(9):
            for j in range(9):
                lhs = wedge(b(i), contract(j, u)) + contract(j, wedge(b(i), u))
                want = u if i == j else WedgeElement.zero(deg)
                res.check(lhs == want, f"Clifford i={i} j={j} u={u}")

    # Leibniz route vs contraction route
    for r in range(1, 4):
        for lam in enumerate_box(r, 3):
            u = WedgeElement.basis(lam, r)
            for i in range(7):
                for j in range(7):
                    res.check(delta_elementary(i, j, u) == delta_leibniz({(i, j): 1}, u),
                              f"Leibniz r={r} lam={lam} ({i},{j})")

    # b_0 ^ sigbar_+(z)[b]_lam = z^r sigbar_-(z)([b]_{lam+(1^r)} ^ b_0)
    order = 6
    for r in range(1, 4):
        for lam in enumerate_box(r, 3):
            lhs = series_wedge(_wedge_const(b(0)), sigma_ops("bar+", order, WedgeElement.basis(lam, r)))
            shifted = wedge(WedgeElement.basis(add_ones(lam, r), r), b(0))
            rhs = sigma_ops("bar-", order, shifted).shift(r, 0)
            res.check(lhs.agrees_with(rhs), f"b_0 ^ sigbar_+ identity r={r} lam={lam}")

    # sigma_-(w) sigma_+(z) b_0 = i_{w,z}(w/(w-z)) sigma_+(z) sigbar_-(w) b_0
    for k in range(5):
        lhs = sigma_ops("-", k, sigma_ops("+", k, b(0)), var="w")
        for inner in ("bar-", "-"):
            rhs = scalar_series_times(LaurentWindow.geometric(k),
                                      sigma_ops("+", k, sigma_ops(inner, k, b(0), var="w")))
            res.check(lhs.agrees_with(rhs), f"commutation rule on b_0, order {k}, {inner}")

    # sigma_-(w) b_{m+i} = sigma_i sigma_-(w) b_m + w^-(m+1) sigma_-(w) b_{i-1}
    for m in range(6):
        for i in range(1, 6):
            lhs = sigma_ops("-", m + i, b(m + i), var="w")
            rhs = (_sigma_i_series(i, sigma_ops("-", m, b(m), var="w"))
                   + sigma_ops("-", i, b(i - 1), var="w").shift(0, -(m + 1)))
            res.check(lhs.agrees_with(rhs), f"shift lemma m={m} i={i}")

    # sigma_-(w) sigma_+(z) b_m = sigma_+(z) sigma_-(w) b_m
    #                             + w^-m i_{w,z}(z/(w-z)) sigma_+(z) sigma_-(w) b_0
    order = 5
    for m in range(5):
        lhs = sigma_ops("-", order + m, sigma_ops("+", order, b(m)), var="w")
        first = sigma_ops("+", order, sigma_ops("-", order, b(m), var="w"))
        tail = scalar_series_times(LaurentWindow.geometric(order, start=1),
                                   sigma_ops("+", order, sigma_ops("-", order, b(0), var="w"))).shift(0, -m)
        res.check(lhs.agrees_with(first + tail), f"commutation rule on b_{m}")

    # sigma_-(w) sigma_+(z) [b]^{r+1}_lam = i_{w,z}(w/(w-z)) sigma_+(z) sigma_-(w) [b]^{r+1}_lam
    order = 4
    for r in range(0, 3):
        for lam in enumerate_box(r, 2):
            u = WedgeElement.basis(lam, r + 1)
            depth = max(max(u.terms)) + order
            lhs = sigma_ops("-", depth, sigma_ops("+", order, u), var="w")
            rhs = scalar_series_times(LaurentWindow.geometric(order),
                                      sigma_ops("+", order, sigma_ops("-", depth, u, var="w")))
            res.check(lhs.agrees_with(rhs), f"commutation rule on [b]^{r + 1}_{lam}")

    # sigbar_-(w)(beta_0 -| [b]^{r+1}_lam) = w^-r sigbar_+(w)[b]^r_lam
    for r in range(1, 4):
        for lam in enumerate_box(r, 3):
            lhs = sigma_ops("bar-", 2, contract(0, WedgeElement.basis(lam, r + 1)), var="w")
            rhs = sigma_ops("bar+", 2, WedgeElement.basis(lam, r), var="w").shift(0, -r)
            res.check(lhs.agrees_with(rhs) and rhs.agrees_with(lhs), f"contraction lemma r={r} lam={lam}")

    # integration by parts: sigma_+(z)u ^ v = sigma_+(z)(u ^ sigbar_+(z) v)
    order = 5
    for i in range(4):
        for lam in enumerate_box(2, 2):
            u, v = b(i), WedgeElement.basis(lam, 2)
            lhs = series_wedge(sigma_ops("+", order, u), _wedge_const(v))
            rhs = sigma_ops("+", order, series_wedge(_wedge_const(u), sigma_ops("bar+", order, v)))
            res.check(lhs.agrees_with(rhs), f"integration by parts b_{i}, {lam}")

    # module structure: sigma_i [b]^r_lam corresponds to h_i Delta_lam(H_r)
    for r in range(1, 4):
        H = hseq(r)
        for lam in enumerate_box(r, 3):
            for i in range(5):
                lhs = to_schur(sigma_coefficient(i, WedgeElement.basis(lam, r)))
                rhs = straighten(H[i] * schur_poly(lam, r), r)
                res.check(lhs == rhs, f"h_{i} * Delta_{lam} vs sigma_{i}, r={r}")
    return res


def _support(lam: Partition, r: int) -> set[int]:
    parts = lam.padded(r)
    return {parts[k] + r - 1 - k for k in range(r)}


def suite_grading(p: GridParams) -> SuiteResult:
    res = SuiteResult("grading and support")
    for r in range(1, p.max_r + 1):
        for n in range(r, p.max_n + 1):
            for lam in enumerate_box(r, n - r):
                for i in range(n):
                    for j in range(n):
                        out = act_elementary(i, j, _basis(lam, r, n))
                        d = lam.weight() + i - j
                        res.check(out.degrees() <= {d}, f"degree r={r} n={n} lam={lam} ({i},{j})")
                        if j not in _support(lam, r):
                            res.check(not out, f"support r={r} n={n} lam={lam} ({i},{j})")
        for d in range(p.max_deg + 1):
            for lam in partitions_of(d, r):
                for i in range(p.max_deg + 1):
                    for j in range(p.max_deg + 1):
                        out = act_elementary(i, j, _basis(lam, r))
                        res.check(out.degrees() <= {d + i - j}, f"degree r={r} lam={lam} ({i},{j})")
                        if j not in _support(lam, r):
                            res.check(not out, f"support r={r} lam={lam} ({i},{j})")
    return res


def suite_box_commutation(p: GridParams) -> SuiteResult:
    res = SuiteResult("box action = projected action")
    for r in range(1, p.max_r + 1):
        for n in range(r, p.max_n + 1):
            for lam in enumerate_box(r, n - r):
                for i in range(n):
                    for j in range(n):
                        boxed = act_elementary(i, j, _basis(lam, r, n))
                        via = project(act_elementary(i, j, _basis(lam, r)), n)
                        res.check(boxed == via, f"r={r} n={n} lam={lam} ({i},{j})")
    return res


def oracle_gamma(lam, r: int, z_max: int) -> LaurentWindow:
    """``z^-r b(z) ^ [b]^r_lam`` read in B_{r+1}."""
    u = series_wedge(b_series(z_max + r), _wedge_const(WedgeElement.basis(lam, r))).shift(-r, 0)
    return LaurentWindow({k: to_schur(v).to_poly() for k, v in u.entries.items()},
                         Poly.zero(r + 1), u.window)


def oracle_gamma_star(lam, r: int) -> LaurentWindow:
    """``w^r beta(w) -| [b]^r_lam`` read in B_{r-1}; ``beta(w) = sum beta_j w^(-j-1)``."""
    u = WedgeElement.basis(lam, r)
    top = max(max(u.terms), default=0)
    entries = {(0, r - j - 1): to_schur(contract(j, u)).to_poly() for j in range(top + 1)}
    return LaurentWindow(entries, Poly.zero(r - 1))


def suite_vertex_operators(p: GridParams) -> SuiteResult:
    res = SuiteResult("vertex operators vs wedge model")
    for r in range(0, p.max_r + 1):
        for lam in enumerate_box(r, 3):
            g = gamma(_basis(lam, r), p.max_deg)
            res.check(g.agrees_with(oracle_gamma(lam, r, p.max_deg)), f"gamma r={r} lam={lam}")
            if r:
                res.check(gamma_star(_basis(lam, r)) == oracle_gamma_star(lam, r), f"gamma_star r={r} lam={lam}")
    return res


# -- the B_{2,4} example with two conflicting printed versions ---------------------

DISPLAYS = {
    "introduction": {(0, -2): "-h2", (1, -2): "-h1*h2", (2, -2): "h2^2",
                     (0, -3): "-h1", (1, -3): "-(h1^2-h2)", (3, -3): "h2^2"},
    "worked example": {(0, -2): "h2", (1, -2): "h1*h2", (2, -2): "h2^2",
                       (0, -3): "-h1", (1, -3): "-(h1^2-h2)", (2, -3): "h2^2"},
}


def example_series(r: int = 2, n: int = 4, lam=(2, 2), span: int = 3) -> dict[str, LaurentWindow]:
    """``E(z,w)_n Delta_lam(H_{r,n})`` through ``z^span, w^-span`` by three routes."""
    lam = Partition(lam)
    zero = Poly.zero(r)
    first = project_series(action_first_form(lam, r, span + lam.weight() + r), n, r)
    first = first.restrict(z_max=span, w_min=-span)
    box = action_box_form(lam, r, n).restrict(z_max=span, w_min=-span)
    u = WedgeElement.basis(lam, r)
    entries = {}
    for i in range(min(n, span + 1)):
        for j in range(min(n, span + 1)):
            x = project(to_schur(delta_elementary(i, j, u)), n)
            if x:
                entries[i, -j] = x.to_poly()
    wedge_route = LaurentWindow(entries, zero, (0, span, -span, 0))
    return {"first form": first, "box form": box, "wedge model": wedge_route}


def resolve_displays(r: int = 2, n: int = 4, span: int = 3) -> dict:
    """Compare the computed series with both printed versions.

    Returns the computed coefficients, every mismatch per display, which
    display is right on the coefficients where the two differ only by sign,
    and which displays match verbatim.
    """
    routes = example_series(r, n, span=span)
    ref = routes["wedge model"]
    agree = all(ref.agrees_with(s) and s.agrees_with(ref) for s in routes.values())
    printed = {name: {k: reduce_mod(parse_element(v, r), r, n) for k, v in d.items()}
               for name, d in DISPLAYS.items()}
    keys = {(i, -j) for i in range(span + 1) for j in range(span + 1)}
    mismatches = {}
    for name, d in printed.items():
        mismatches[name] = sorted(k for k in keys if ref.coeff(*k) != d.get(k, Poly.zero(r)))
    a, b_ = printed.values()
    sign_keys = sorted(k for k in set(a) & set(b_) if a[k] == -b_[k] and a[k])
    sign_winner = [name for name, d in printed.items() if all(ref.coeff(*k) == d[k] for k in sign_keys)]
    return {
        "routes_agree": agree,
        "computed": {k: str(straighten(v, r)) for k, v in ref.items()},
        "mismatches": mismatches,
        "sign_keys": sign_keys,
        "sign_winner": sign_winner,
        "verbatim_match": [name for name, m in mismatches.items() if not m],
    }


def suite_displays(p: GridParams) -> SuiteResult:
    res = SuiteResult("B_(2,4) example")
    report = resolve_displays()
    res.check(report["routes_agree"], "first form, box form and wedge model disagree")
    res.check(len(report["sign_winner"]) == 1, f"sign resolution ambiguous: {report['sign_winner']}")
    return res


SUITES: dict[str, Callable[[GridParams], SuiteResult]] = {
    "partitions": suite_partitions,
    "ring": suite_ring,
    "straighten": suite_straighten,
    "two-forms": suite_two_forms,
    "oracle": suite_oracle,
    "lie": suite_lie,
    "structural": suite_structural,
    "grading": suite_grading,
    "box": suite_box_commutation,
    "vertex": suite_vertex_operators,
    "displays": suite_displays,
}


def _run_one(args: tuple[str, GridParams]) -> SuiteResult:
    name, params = args
    return SUITES[name](params)


def run_suites(params: GridParams, names: list[str] | None = None, workers: int = 1) -> list[SuiteResult]:
    names = list(SUITES) if not names else names
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    jobs = [(name, params) for name in names]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_one, jobs))
    return [_run_one(job) for job in jobs]
