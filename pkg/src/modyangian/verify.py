"""Named verification suites.  Each suite returns Check records in a fixed order."""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import central, gauss, graded
from .algebra import CommutativeAlgebra, PrecisionError, commutator, pth_power
from .gauss import DRINFELD_RELATIONS, gauss_data, verify_drinfeld_relations
from .graded import current_algebra, leading_term, loop_degree, p_centre_gen, zr
from .pbw import apply_permutation, apply_transpose, transposition, yangian
from .report import Check, Report, compare, compare_series, summarize
from .serieslab import (
    _with_constant,
    compositions,
    distinct_rearrangements,
    gamma_coeff,
    indeterminate_series,
    is_optimal,
    stepped_degree_sequence,
    newton_check,
    partitions,
    power_sum_eval,
    series_typeI,
    series_typeII,
    series_typeIII,
    series_typeIV,
    typeII_closed_form,
    typeIII_closed_form,
)
from .series import T_matrix, generator_series, mul, shift_arg
from .shift import InadmissibleSuperscript, InvalidShiftMatrix, ShiftMatrix, graded_closure_violations, shifted_E, shifted_F

SUITES = ("drinfeld", "gauss-identities", "center", "graded", "serieslab", "shifted")


@dataclass
class Config:
    n: int = 2
    p: int = 2
    trunc: int = 8
    smax: int = 4
    sigma: ShiftMatrix | None = None
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.trunc < 1:
            raise ValueError("trunc must be at least 1")
        if self.smax < 1:
            raise ValueError("smax must be at least 1")
        yangian(self.n, self.p)  # validates p
        if self.sigma is None:
            self.sigma = ShiftMatrix.from_diagonals([1] * (self.n - 1), [0] * (self.n - 1))
        if self.sigma.n != self.n:
            raise ValueError(f"shift matrix is {self.sigma.n}x{self.sigma.n}, expected n={self.n}")

    def to_json(self):
        return {
            "n": self.n,
            "p": self.p,
            "trunc": self.trunc,
            "smax": self.smax,
            "sigma": {"upper": self.sigma.upper(), "lower": self.sigma.lower()},
            "seed": self.seed,
        }


def _ok(name, params, cond, witness=None):
    return Check(name, params, bool(cond), None if cond else witness)


def _central_check(name, params, x, smax):
    rep = central.certify_central(x, smax)
    bad = rep.failures()
    return Check(name, params, not bad, bad[0].witness if bad else None)


def _degree_at_most(x, d):
    return not x or loop_degree(x) <= d


# -- drinfeld ------------------------------------------------------------------


def suite_drinfeld(cfg: Config):
    R = min(4, cfg.trunc)
    instances = verify_drinfeld_relations(cfg.n, cfg.p, R, cfg.trunc)
    out = []
    for name in DRINFELD_RELATIONS:
        group = [c for c in instances if c.name == name]
        if group:
            out.append(summarize(f"drinfeld.{name}", {"R": R}, group))
    return out


# -- gauss-identities ----------------------------------------------------------


def _two_variable(A, B, r, s):
    """u^{-r} v^{-s} coefficient of (u - v)[A(u), B(v)]."""
    return commutator(A[r + 1], B[s]) - commutator(A[r], B[s + 1])


def suite_gauss_identities(cfg: Config):
    n, p, N = cfg.n, cfg.p, cfg.trunc
    g = gauss_data(n, p, N)
    alg = g.alg
    out = []
    Fm, Dm, Em = g.matrices()
    recon = Fm * (Dm * Em)
    out.append(
        summarize(
            "gauss.reconstruction",
            {},
            [compare_series("entry", {"a": a, "b": b}, recon[a, b], g.T[a, b]) for a in range(1, n + 1) for b in range(1, n + 1)],
        )
    )
    qd = [compare_series("D", {"i": i}, gauss.quasideterminant_D(alg, i, N), g.D[i]) for i in range(1, n + 1)]
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            qd.append(compare_series("E", {"i": i, "j": j}, gauss.quasideterminant_E(alg, i, j, N), g.E[(i, j)]))
            qd.append(compare_series("F", {"i": i, "j": j}, gauss.quasideterminant_F(alg, i, j, N), g.F[(i, j)]))
    out.append(summarize("gauss.quasideterminants", {}, qd))
    out.append(
        summarize(
            "gauss.first_coefficients",
            {},
            [compare("D1", {"i": i}, g.Dc(i, 1), alg.gen(i, i, 1)) for i in range(1, n + 1)]
            + [compare("E1", {"j": j}, g.E[(j - 1, j)].coeffs[1], alg.gen(j - 1, j, 1)) for j in range(2, n + 1)],
        )
    )
    rmax = min(3, N)
    roots, tau = [], []
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            for r in range(1, rmax + 1):
                ps = {"i": i, "j": j, "r": r}
                e, f = g.higher_root_E(i, j, r), g.higher_root_F(i, j, r)
                roots.append(compare("E", ps, e, g.E[(i, j)].coeffs[r]))
                roots.append(compare("F", ps, f, g.F[(i, j)].coeffs[r]))
                tau.append(compare("tau", ps, apply_transpose(e), f))
    if roots:
        out.append(summarize("gauss.higher_roots_match_factorization", {"rmax": rmax}, roots))
        out.append(summarize("gauss.transpose_swaps_E_and_F", {"rmax": rmax}, tau))
    if n < 2:
        return out

    perm = []
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            w = transposition(n, i + 1, j)
            for r in range(1, min(N, 4) + 1):
                ps = {"i": i, "j": j, "r": r}
                perm.append(compare("E", ps, apply_permutation(g.Ec(i, r), w), g.E[(i, j)].coeffs[r]))
                perm.append(compare("F", ps, apply_permutation(g.Fc(i, r), w), g.F[(i, j)].coeffs[r]))
    out.append(summarize("gauss.permutation_maps_Ei_to_Eij", {}, perm))

    out.append(
        summarize(
            "gauss.H_constant_term",
            {},
            [compare("H0", {"i": i}, g.H_series(i).coeffs[0], alg.scalar(-1)) for i in range(1, n)],
        )
    )

    # two-variable identities, coefficient by coefficient
    Rm = min(N - 1, 4)
    groups = {k: [] for k in ("EF", "EE", "ED", "ED~next", "ED~", "EDnext")}
    for i in range(1, n):
        E = g.E_series(i).coeffs
        F = g.F_series(i).coeffs
        Di, Dn = g.D[i].coeffs, g.D[i + 1].coeffs
        Dti, Dtn = g.Dt[i].coeffs, g.Dt[i + 1].coeffs
        G = mul(g.D[i + 1], g.Dt[i]).coeffs
        E2 = mul(g.E_series(i), g.E_series(i)).coeffs
        DE = mul(g.D[i], g.E_series(i)).coeffs
        EDtn = mul(g.E_series(i), g.Dt[i + 1]).coeffs
        EDti = mul(g.E_series(i), g.Dt[i]).coeffs
        DnE = mul(g.D[i + 1], g.E_series(i)).coeffs
        for r in range(Rm + 1):
            for s in range(Rm + 1):
                ps = {"i": i, "r": r, "s": s}
                d_r, d_s = int(r == 0), int(s == 0)
                rhs = G[r].scale(d_s) - G[s].scale(d_r)
                groups["EF"].append(compare("EF", ps, _two_variable(E, F, r, s), rhs))
                rhs = E2[s].scale(d_r) - E[s] * E[r] - E[r] * E[s] + E2[r].scale(d_s)
                groups["EE"].append(compare("EE", ps, _two_variable(E, E, r, s), rhs))
                rhs = Di[s] * E[r] - DE[s].scale(d_r)
                groups["ED"].append(compare("ED", ps, _two_variable(E, Di, r, s), rhs))
                rhs = E[r] * Dtn[s] - EDtn[s].scale(d_r)
                groups["ED~next"].append(compare("ED~next", ps, _two_variable(E, Dtn, r, s), rhs))
                rhs = EDti[s].scale(d_r) - E[r] * Dti[s]
                groups["ED~"].append(compare("ED~", ps, _two_variable(E, Dti, r, s), rhs))
                rhs = DnE[s].scale(d_r) - Dn[s] * E[r]
                groups["EDnext"].append(compare("EDnext", ps, _two_variable(E, Dn, r, s), rhs))
    for k, v in groups.items():
        out.append(summarize(f"gauss.two_variable_{k}", {"R": Rm}, v))

    shifts = []
    commute_char2 = []
    for i in range(1, n):
        E = g.E_series(i)
        Em1, Ep1 = shift_arg(E, 1), shift_arg(E, -1)
        Di, Dn, Dti, Dtn = g.D[i], g.D[i + 1], g.Dt[i], g.Dt[i + 1]
        H = g.H_series(i)
        ps = {"i": i}
        shifts.append(compare_series("E(u-1)D(u)=D(u)E(u)", ps, mul(Em1, Di), mul(Di, E)))
        shifts.append(compare_series("D~(u)E(u-1)=E(u)D~(u)", ps, mul(Dti, Em1), mul(E, Dti)))
        shifts.append(compare_series("Dnext(u)E(u)=E(u+1)Dnext(u)", ps, mul(Dn, E), mul(Ep1, Dn)))
        shifts.append(compare_series("E(u)D~next(u)=D~next(u)E(u+1)", ps, mul(E, Dtn), mul(Dtn, Ep1)))
        shifts.append(compare_series("H(u)E(u-1)=E(u+1)H(u)", ps, mul(H, Em1), mul(Ep1, H)))
        if p == 2:
            for r in range(1, min(N, 4) + 1):
                for s in range(1, min(N, 4) + 1):
                    commute_char2.append(
                        compare("[H,E]", {"i": i, "r": r, "s": s}, commutator(H.coeffs[r], E.coeffs[s]), alg.zero())
                    )
    out.append(summarize("gauss.shifted_argument_identities", {}, shifts))
    if commute_char2:
        out.append(summarize("gauss.char2_H_commutes_with_E", {}, commute_char2))
    return out


# -- center --------------------------------------------------------------------


def suite_center(cfg: Config):
    n, p, N, smax = cfg.n, cfg.p, cfg.trunc, cfg.smax
    alg = yangian(n, p)
    g = gauss_data(n, p, N)
    out = []
    rtop = min(N, 2 * p + 2)

    C = central.C_product(n, p, N)
    out.append(compare_series("center.qdet_equals_C_product", {}, central.qdet(n, p, N), C))
    out.append(
        compare(
            "center.C_first_coefficient",
            {},
            C.coeffs[1],
            sum((alg.gen(i, i, 1) for i in range(1, n + 1)), alg.zero()),
        )
    )
    out.append(
        summarize(
            "center.C_central",
            {"smax": smax},
            [_central_check("C", {"r": r}, C.coeffs[r], smax) for r in range(1, min(5, N) + 1)],
        )
    )

    checks, vanish = [], []
    for i in range(1, n + 1):
        B = central.B_series(n, p, i, N)
        checks += [_central_check("B", {"i": i, "r": r}, B.coeffs[r], smax) for r in range(1, rtop + 1)]
        vanish += [compare("B", {"i": i, "r": r}, B.coeffs[r], alg.zero()) for r in range(1, min(p, N + 1))]
    out.append(summarize("center.B_central", {"smax": smax}, checks))
    if vanish:
        out.append(summarize("center.B_vanishes_below_p", {}, vanish))

    BC = central.BC_series(n, p, N)  # raises if the two products disagree
    out.append(Check("center.BC_two_products_agree", {}, True))
    out.append(
        summarize(
            "center.BC_central",
            {"smax": smax},
            [_central_check("BC", {"r": r}, BC.coeffs[r], smax) for r in range(1, rtop + 1)],
        )
    )
    if p > 1 and N >= 1:
        out.append(
            summarize(
                "center.BC_vanishes_below_p",
                {},
                [compare("BC", {"r": r}, BC.coeffs[r], alg.zero()) for r in range(1, min(p, N + 1))],
            )
        )

    S_checks, S_vanish = [], []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            S = central.S_series(n, p, i, j, N)
            S_checks += [_central_check("S", {"i": i, "j": j, "r": r}, S.coeffs[r], smax) for r in range(1, rtop + 1)]
            S_vanish += [compare("S", {"i": i, "j": j, "r": r}, S.coeffs[r], alg.zero()) for r in range(1, min(p, N + 1))]
    out.append(summarize("center.S_central", {"smax": smax}, S_checks))
    if S_vanish:
        out.append(summarize("center.S_vanishes_below_p", {}, S_vanish))
    out.append(compare_series("center.S11_equals_B1", {}, central.S_series(n, p, 1, 1, N), central.B_series(n, p, 1, N)))

    if n >= 2:
        out.append(
            compare_series(
                "center.S12_equals_B1_P12",
                {},
                central.S_series(n, p, 1, 2, N),
                mul(central.B_series(n, p, 1, N), central.P_series(n, p, 1, 2, N)),
            )
        )
        PQ, PQv, powers, p_low = [], [], [], []
        struct = []
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                P = central.P_series(n, p, i, j, N)
                Q = central.Q_series(n, p, i, j, N)
                for r in range(1, rtop + 1):
                    PQ.append(_central_check("P", {"i": i, "j": j, "r": r}, P.coeffs[r], smax))
                    PQ.append(_central_check("Q", {"i": i, "j": j, "r": r}, Q.coeffs[r], smax))
                for r in range(1, min(p, N + 1)):
                    PQv.append(compare("P", {"i": i, "j": j, "r": r}, P.coeffs[r], alg.zero()))
                if p <= N:
                    p_low.append(compare("P_p", {"i": i, "j": j}, P.coeffs[p], pth_power(g.E[(i, j)].coeffs[1])))
                for r in range(1, min(3, N) + 1):
                    powers.append(_central_check("E^p", {"i": i, "j": j, "r": r}, pth_power(g.higher_root_E(i, j, r)), smax))
                    powers.append(_central_check("F^p", {"i": i, "j": j, "r": r}, pth_power(g.higher_root_F(i, j, r)), smax))
                for r in range(p, N + 1):
                    x = P.coeffs[r]
                    if r % p == 0:
                        x = x - pth_power(g.E[(i, j)].coeffs[r // p])
                    struct.append(_ok("P", {"i": i, "j": j, "r": r}, _degree_at_most(x, r - p - 1), f"loop degree {loop_degree(x) if x else None}"))
        out.append(summarize("center.PQ_central", {"smax": smax}, PQ))
        if PQv:
            out.append(summarize("center.P_vanishes_below_p", {}, PQv))
        if p_low:
            out.append(summarize("center.P_at_p_is_pth_power", {}, p_low))
        out.append(summarize("center.root_pth_powers_central", {"smax": smax}, powers))
        if struct:
            out.append(summarize("center.P_loop_degree_structure", {}, struct))
        if p > 2 and p + 1 <= N:
            out.append(
                summarize(
                    "center.P_vanishes_at_p_plus_1",
                    {},
                    [compare("P", {"i": i}, central.P_series(n, p, i, i + 1, N).coeffs[p + 1], alg.zero()) for i in range(1, n)],
                )
            )

        A_checks = []
        for i in range(1, n):
            A = central.A_series(n, p, i, N)  # raises on mismatch with -B_{i+1} B_i^{-1}
            A_checks.append(compare("A0", {"i": i}, A.coeffs[0], alg.scalar((-1) ** p)))
            A_checks += [_central_check("A", {"i": i, "r": r}, A.coeffs[r], smax) for r in range(1, rtop + 1)]
        out.append(Check("center.A_two_expressions_agree", {}, True))
        out.append(summarize("center.A_central", {"smax": smax}, A_checks))

        x = alg.gen(1, 2, 1)
        rep = central.certify_central(x, smax)
        fails = rep.failures()
        want = alg.gen(1, 1, 1) - alg.gen(2, 2, 1)
        hit = [c for c in fails if c.params == {"k": 2, "l": 1, "s": 1}]
        good = bool(fails) and bool(hit) and commutator(x, alg.gen(2, 1, 1)) == want
        out.append(_ok("center.negative_control_T12", {}, good, "T[1,2,1] was not rejected with the expected witness"))

    tail = []
    for i in range(1, n + 1):
        B = central.B_series(n, p, i, N)
        for r in range(p + 1, N + 1):
            if r % p:
                tail.append(_ok("B", {"i": i, "r": r}, _degree_at_most(B.coeffs[r], r - p - 1), "loop degree too high"))
    if tail:
        out.append(summarize("center.B_loop_degree_tail", {}, tail))
    out.append(_ok("center.one_is_central", {}, central.certify_central(alg.one(), smax).ok))
    return out


# -- graded --------------------------------------------------------------------


def _lt(name, params, x, d, want):
    try:
        got = leading_term(x, d)
    except ValueError as exc:
        return Check(name, params, False, str(exc))
    return compare(name, params, got, want)


def _overshoot(name, params, x, d):
    try:
        leading_term(x, d - 1)
    except ValueError:
        return Check(name, params, True)
    return Check(name, params, False, f"no error at degree {d - 1}")


def suite_graded(cfg: Config):
    n, p, N = cfg.n, cfg.p, cfg.trunc
    ug = current_algebra(n, p)
    alg = yangian(n, p)
    g = gauss_data(n, p, N)
    rng = random.Random(cfg.seed)
    out = []

    out.append(compare("graded.bracket_e11_e12", {}, commutator(ug.e(1, 1, 0), ug.e(1, min(2, n), 0)), ug.e(1, 2, 0) if n >= 2 else ug.zero()))
    labels = [(i, j, r) for i in range(1, n + 1) for j in range(1, n + 1) for r in range(3)]
    assoc = []
    for k in range(60):
        a, b, c = (ug.e(*rng.choice(labels)) for _ in range(3))
        assoc.append(compare("assoc", {"k": k}, (a * b) * c, a * (b * c)))
    out.append(summarize("graded.ug_associativity", {"seed": cfg.seed}, assoc))
    zc = []
    for r in range(3):
        z = zr(n, p, r)
        for lab in labels:
            zc.append(compare("z", {"r": r, "gen": list(lab)}, commutator(z, ug.e(*lab)), ug.zero()))
    out.append(summarize("graded.z_central", {}, zc))

    ld = [compare("T", {"i": i, "j": j, "r": r}, loop_degree(alg.gen(i, j, r)), r - 1) for i, j, r in alg.generators(3)]
    ld.append(compare("one", {}, loop_degree(alg.one()), 0))
    gens = alg.generators(min(3, N))
    for k in range(30):
        a, b = alg.gen(*rng.choice(gens)), alg.gen(*rng.choice(gens))
        x = a * b + alg.gen(*rng.choice(gens))
        y = a - b
        if x and y and x * y:
            ld.append(_ok("product", {"k": k}, loop_degree(x * y) <= loop_degree(x) + loop_degree(y)))
    out.append(summarize("graded.loop_degree", {}, ld))

    hom = []
    for k in range(30):
        x = alg.gen(*rng.choice(gens)) * alg.gen(*rng.choice(gens))
        y = alg.gen(*rng.choice(gens))
        d, e = loop_degree(x), loop_degree(y)
        lhs = leading_term(x * y, d + e)
        if lhs:
            hom.append(compare("hom", {"k": k}, lhs, leading_term(x, d) * leading_term(y, e)))
    out.append(summarize("graded.leading_term_multiplicative", {"seed": cfg.seed}, hom))

    C = central.C_product(n, p, N)
    lt = []
    for r in range(0, min(4, N - 1) + 1):
        lt.append(_lt("C", {"r": r}, C.coeffs[r + 1], r, zr(n, p, r)))
        if r > 0:
            lt.append(_overshoot("C_overshoot", {"r": r}, C.coeffs[r + 1], r))
    out.append(summarize("graded.C_leading_terms", {}, lt))

    lt = []
    for r in (1, 2):
        if r * p > N:
            continue
        d = r * p - p
        for i in range(1, n + 1):
            B = central.B_series(n, p, i, N)
            want = ug.e(i, i, r - 1) ** p - ug.e(i, i, d)
            lt.append(_lt("B", {"i": i, "r": r}, B.coeffs[r * p], d, want))
            for j in range(1, n + 1):
                S = central.S_series(n, p, i, j, N)
                want = p_centre_gen(n, p, i, j, r - 1) if d == (r - 1) * p else None
                want = ug.e(i, j, r - 1) ** p - (ug.e(i, j, d) if i == j else ug.zero())
                lt.append(_lt("S", {"i": i, "j": j, "r": r}, S.coeffs[r * p], d, want))
        for i in range(1, n):
            A = central.A_series(n, p, i, N)
            h1 = ug.e(i, i, r - 1) - ug.e(i + 1, i + 1, r - 1)
            h2 = ug.e(i, i, d) - ug.e(i + 1, i + 1, d)
            lt.append(_lt("A", {"i": i, "r": r}, A.coeffs[r * p], d, h1 ** p - h2))
        BC = central.BC_series(n, p, N)
        lt.append(_lt("BC", {"r": r}, BC.coeffs[r * p], d, zr(n, p, r - 1) ** p - zr(n, p, d)))
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                ep = pth_power(g.higher_root_E(i, j, r))
                fp = pth_power(g.higher_root_F(i, j, r))
                lt.append(_lt("E^p", {"i": i, "j": j, "r": r}, ep, d, ug.e(i, j, r - 1) ** p))
                lt.append(_lt("F^p", {"i": i, "j": j, "r": r}, fp, d, ug.e(j, i, r - 1) ** p))
    if lt:
        out.append(summarize("graded.p_centre_leading_terms", {}, lt))

    lt = []
    for i in range(1, n):
        H = g.H_series(i)
        for r in (1, 2):
            if r + 1 <= N:
                lt.append(_lt("H", {"i": i, "r": r}, H.coeffs[r + 1], r, ug.e(i, i, r) - ug.e(i + 1, i + 1, r)))
        for j in range(i + 1, n + 1):
            for r in range(1, min(3, N) + 1):
                lt.append(_lt("E", {"i": i, "j": j, "r": r}, g.higher_root_E(i, j, r), r - 1, ug.e(i, j, r - 1)))
                lt.append(_lt("F", {"i": i, "j": j, "r": r}, g.higher_root_F(i, j, r), r - 1, ug.e(j, i, r - 1)))
    if lt:
        out.append(summarize("graded.drinfeld_leading_terms", {}, lt))
    return out


# -- serieslab -----------------------------------------------------------------


def _E1_series(p, trunc):
    return gauss_data(2, p, trunc).E_series(1)


def golden_typeI_p2():
    """Reference table: E_1(u)^2 in Y_2 over GF(2) against sums of squares."""
    X = _E1_series(2, 8)
    XI = series_typeI(X)
    x = X.coeffs
    sq = lambda k: x[k] * x[k]  # noqa: E731
    zero = X.alg.zero()
    table = {
        0: zero,
        1: zero,
        2: sq(1),
        3: sq(1),
        4: sq(2) + sq(1),
        5: sq(1),
        6: sq(3) + sq(2) + sq(1),
        7: sq(3) + sq(1),
        8: sq(4) + sq(2) + sq(1),
    }
    return [compare("typeI_p2", {"r": r}, XI.coeffs[r], want) for r, want in table.items()]


def golden_typeIII(p):
    """Hand-computed type III coefficients with X = D_1(u) = T_11(u)."""
    alg = yangian(2, p)
    X = generator_series(alg, 1, 1, 6)
    XIII = series_typeIII(X)
    x = X.coeffs
    c = XIII.coeffs
    zero = alg.zero()
    if p == 2:
        x3_2 = x[1] * x[1] + x[1]
        x3_4 = x[2] * x[2] + x[3] + x[1] * x[2] + x[2] + x3_2
        table = {
            1: zero,
            2: x3_2,
            3: x3_2,
            5: x3_2,
            4: x3_4,
            6: x[3] * x[3] + x[5] + x[1] * x[3] + x[1] * x[4] + x[2] * x[3] + x[3] + x3_4,
        }
    elif p == 3:
        cube = x[1] ** 3 - x[1]
        table = {
            1: zero,
            2: zero,
            4: zero,
            3: cube,
            5: cube,
            6: x[2] ** 3 - x[4] + x[1] * x[3] - x[1] * x[1] * x[2] + x[2] - x[2] * x[2],
        }
    else:
        raise ValueError("golden tables exist for p = 2 and p = 3")
    return [compare(f"typeIII_p{p}", {"r": r}, c[r], want) for r, want in sorted(table.items())]


def boundary_checks(n, p, rmax):
    """Type I/III/IV coefficient structure through rmax, with X = E_1(u) or D_1(u)."""
    out = []
    alg = yangian(n, p)
    D = generator_series(alg, 1, 1, rmax)
    III, IV = series_typeIII(D), series_typeIV(D)
    x = D.coeffs
    for r in range(1, rmax + 1):
        ps = {"p": p, "r": r}
        if r < p:
            out.append(compare("III_vanish", ps, III.coeffs[r], alg.zero()))
            out.append(compare("IV_vanish", ps, IV.coeffs[r], alg.zero()))
        elif r == p:
            out.append(compare("III_at_p", ps, III.coeffs[r], x[1] ** p - x[1]))
            out.append(compare("IV_at_p", ps, IV.coeffs[r], x[1] ** p))
        elif r % p == 0:
            rest3 = III.coeffs[r] - x[r // p] ** p + x[r - p + 1]
            rest4 = IV.coeffs[r] - x[r // p] ** p
            out.append(_ok("III_top", ps, _degree_at_most(rest3, r - p - 1), "loop degree too high"))
            out.append(_ok("IV_top", ps, _degree_at_most(rest4, r - p - 1), "loop degree too high"))
            out.append(_ok("III_filtered", ps, _degree_at_most(III.coeffs[r], r - p), "loop degree too high"))
        else:
            out.append(_ok("III_low", ps, _degree_at_most(III.coeffs[r], r - p - 1), "loop degree too high"))
            out.append(_ok("IV_low", ps, _degree_at_most(IV.coeffs[r], r - p - 1), "loop degree too high"))
    if n >= 2:
        E = gauss_data(n, p, rmax).E_series(1)
        I = series_typeI(E)
        for r in range(1, rmax + 1):
            ps = {"p": p, "r": r}
            if r < p:
                out.append(compare("I_vanish", ps, I.coeffs[r], alg.zero()))
            elif r == p:
                out.append(compare("I_at_p", ps, I.coeffs[r], E.coeffs[1] ** p))
            elif r % p == 0:
                out.append(_ok("I_top", ps, _degree_at_most(I.coeffs[r] - E.coeffs[r // p] ** p, r - p - 1), "loop degree too high"))
            else:
                out.append(_ok("I_low", ps, _degree_at_most(I.coeffs[r], r - p - 1), "loop degree too high"))
    return out


def typeI_p_plus_1(p):
    X = _E1_series(p, p + 1)
    return compare("typeI_p_plus_1", {"p": p}, series_typeI(X).coeffs[p + 1], X.alg.zero())


def gamma_band_checks(p, rmax):
    out = []
    pts = list(range(p))
    for r in range(rmax + 1):
        for s in range(r + 1):
            for mu in partitions(p, s):
                gval = int(gamma_coeff(r, mu, pts, p))
                ps = {"p": p, "r": r, "mu": list(mu)}
                if s == 0:
                    out.append(compare("empty", ps, gval, int(r == 0)))
                elif s == r:
                    want = 1 if len(set(mu)) == 1 else 0
                    out.append(compare("full", ps, gval, want))
                elif 0 < r - s < p - 1:
                    out.append(compare("band", ps, gval, 0))
    return out


def closed_form_checks(p, rmax):
    out = []
    A = CommutativeAlgebra(p)
    X = indeterminate_series(A, rmax, constant=1)
    III = series_typeIII(X)
    out += [compare("typeIII_closed", {"p": p, "r": r}, typeIII_closed_form(X, r), III.coeffs[r]) for r in range(rmax + 1)]
    A2 = CommutativeAlgebra(p, arity=2)
    for m in (2, 3):
        Xs = [indeterminate_series(A2, min(rmax, 6), tag=i, constant=1) for i in range(1, m + 1)]
        II = series_typeII(Xs)
        out += [compare("typeII_closed", {"p": p, "n": m, "r": r}, typeII_closed_form(Xs, r), II.coeffs[r]) for r in range(min(rmax, 6) + 1)]
    return out


def optimality_checks(ms=(1, 2, 3), kmax=10, n=3):
    out = []
    for m in ms:
        d = stepped_degree_sequence(m)
        for k in range(2, kmax + 1):
            out.append(_ok("stepped", {"m": m, "r": m * k}, is_optimal(m * k, d, n)))
    out.append(_ok("r2", {}, is_optimal(2, lambda r: max(r - 1, 0), 2)))
    out.append(_ok("zero_sequence", {}, not is_optimal(5, lambda r: 0, 2)))
    return out


def power_sum_checks(primes=(3, 5, 7)):
    out = []
    for p in primes:
        pts = list(range(p))
        for l in range(1, p - 1):
            out.append(compare("pi", {"p": p, "l": l}, int(power_sum_eval(l, pts, p)), 0))
        out.append(compare("pi_p_minus_1", {"p": p}, int(power_sum_eval(p - 1, pts, p)), p - 1))
    return out


def suite_serieslab(cfg: Config):
    n, p, N = cfg.n, cfg.p, cfg.trunc
    out = []
    out.append(summarize("serieslab.golden_typeI_p2", {}, golden_typeI_p2()))
    out.append(summarize("serieslab.golden_typeIII_p2", {}, golden_typeIII(2)))
    out.append(summarize("serieslab.golden_typeIII_p3", {}, golden_typeIII(3)))
    out.append(summarize("serieslab.typeI_vanishes_at_p_plus_1", {}, [typeI_p_plus_1(q) for q in (3, 5)]))
    out.append(summarize("serieslab.boundary_coefficients", {"rmax": max(N, 3 * p)}, boundary_checks(max(n, 2), p, max(N, 3 * p))))
    for q in sorted({2, 3, p}):
        out.append(summarize("serieslab.gamma_band", {"p": q}, gamma_band_checks(q, 8)))
        out.append(summarize("serieslab.closed_forms", {"p": q}, closed_form_checks(q, 8)))
    out.append(summarize("serieslab.optimality", {}, optimality_checks()))
    out.append(summarize("serieslab.power_sums", {}, power_sum_checks()))
    out.append(
        summarize(
            "serieslab.newton",
            {"seed": cfg.seed},
            [_ok("newton", {"p": q, "k": k}, newton_check(k, q, seed=cfg.seed)) for q in (3, 5) for k in range(1, q)],
        )
    )
    return out


# -- shifted -------------------------------------------------------------------


def suite_shifted(cfg: Config):
    n, p, N, smax = cfg.n, cfg.p, cfg.trunc, cfg.smax
    sigma = cfg.sigma
    ug = current_algebra(n, p)
    g = gauss_data(n, p, N)
    out = []

    rejected = False
    try:
        ShiftMatrix([[0, 1, 1], [0, 0, 1], [0, 0, 0]])
    except InvalidShiftMatrix:
        rejected = True
    out.append(_ok("shifted.invalid_matrix_rejected", {}, rejected, "non-additive matrix accepted"))
    out.append(
        _ok(
            "shifted.transpose_swaps_diagonals",
            {},
            sigma.transpose() == ShiftMatrix.from_diagonals(sigma.lower(), sigma.upper()),
        )
    )
    out.append(
        _ok(
            "shifted.from_diagonals_roundtrip",
            {},
            ShiftMatrix.from_diagonals(sigma.upper(), sigma.lower()) == sigma
            and ShiftMatrix.from_json(sigma.to_json()) == sigma,
        )
    )
    bad = graded_closure_violations(sigma, 4)
    out.append(_ok("shifted.graded_closure", {"rmax": 4}, not bad, f"{bad[:1]}"))
    if n < 2:
        return out

    zero = ShiftMatrix.zero(n)
    collapse = []
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            for r in range(1, min(3, N) + 1):
                ps = {"i": i, "j": j, "r": r}
                collapse.append(compare("E", ps, shifted_E(g, i, j, r, zero), g.higher_root_E(i, j, r)))
                collapse.append(compare("F", ps, shifted_F(g, i, j, r, zero), g.higher_root_F(i, j, r)))
    out.append(summarize("shifted.zero_shift_collapses", {}, collapse))

    errs = []
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            for fn, s in ((shifted_E, sigma(i, j)), (shifted_F, sigma(j, i))):
                raised = False
                try:
                    fn(g, i, j, s, sigma)
                except InadmissibleSuperscript:
                    raised = True
                errs.append(_ok(fn.__name__, {"i": i, "j": j, "r": s}, raised, "no error below the shift"))
    out.append(summarize("shifted.inadmissible_rejected", {}, errs))

    lt, cert = [], []
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            for kind, fn, s, (a, b) in (("E", shifted_E, sigma(i, j), (i, j)), ("F", shifted_F, sigma(j, i), (j, i))):
                for r in range(s, s + 2):
                    if r + 1 > N:
                        continue
                    x = fn(g, i, j, r + 1, sigma)
                    ps = {"kind": kind, "i": i, "j": j, "r": r + 1}
                    lt.append(_lt("gr", ps, x, r, ug.e(a, b, r)))
                    xp = pth_power(x)
                    lt.append(_lt("gr_pth_power", ps, xp, r * p, ug.e(a, b, r) ** p))
                    cert.append(_central_check("pth_power", ps, xp, smax))
    out.append(summarize("shifted.leading_terms", {"sigma": sigma.to_json()["s"]}, lt))
    out.append(summarize("shifted.pth_powers_central", {"smax": smax}, cert))
    return out


RUNNERS = {
    "drinfeld": suite_drinfeld,
    "gauss-identities": suite_gauss_identities,
    "center": suite_center,
    "graded": suite_graded,
    "serieslab": suite_serieslab,
    "shifted": suite_shifted,
}


def run_suite(name: str, cfg: Config) -> Report:
    names = SUITES if name == "all" else (name,)
    for s in names:
        if s not in RUNNERS:
            raise ValueError(f"unknown suite {s!r}")
    rep = Report(dict(cfg.to_json(), suite=name))
    for s in names:
        try:
            rep.extend(RUNNERS[s](cfg))
        except PrecisionError as exc:
            rep.add(Check(f"{s}.precision", {}, False, str(exc)))
        except central.SeriesMismatch as exc:
            rep.add(Check(f"{s}.series_mismatch", {}, False, str(exc)))
    return rep


__all__ = ["Config", "SUITES", "run_suite", "compositions", "distinct_rearrangements", "typeI_p_plus_1", "_with_constant"]
