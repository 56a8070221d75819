"""Check suites shared by the command line and the acceptance tests.

Every check is a ``Check`` record with a residual and a tolerance; a
``SuiteReport`` passes iff all of its checks pass.
"""

import time
from dataclasses import dataclass, field

import numpy as np

from . import so23, sp2r, splitq
from .matcore import dagger, mat_exp


@dataclass
class Check:
    id: str
    description: str
    residual: float
    tolerance: float

    @property
    def passed(self):
        return bool(np.isfinite(self.residual) and self.residual <= self.tolerance)

    def as_dict(self):
        return {"id": self.id, "description": self.description, "residual": float(self.residual),
                "tolerance": float(self.tolerance), "pass": self.passed}


@dataclass
class SuiteReport:
    suite: str
    checks: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def add(self, id, description, residual, tolerance):
        self.checks.append(Check(id, description, float(residual), float(tolerance)))

    def extend(self, other):
        self.checks.extend(other.checks)
        self.wall_time += other.wall_time

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def as_dict(self):
        return {"suite": self.suite, "pass": self.passed, "wall_time": self.wall_time,
                "checks": [c.as_dict() for c in self.checks]}


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.wall_time = time.perf_counter() - t0
        return rep
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@_timed
def exact_suite(tol=1e-14):
    """Integer and half-integer matrix identities; no random input."""
    rep = SuiteReport("exact")
    # multiplication table against both matrix representations
    for rep_name in ("main", "appendixA"):
        worst = 0.0
        for a in splitq.BASIS:
            for b in splitq.BASIS:
                lhs = splitq.sq_matrix_rep(a, rep_name) @ splitq.sq_matrix_rep(b, rep_name)
                rhs = splitq.sq_matrix_rep(a * b, rep_name)
                worst = max(worst, np.abs(lhs - rhs).max())
        rep.add(f"splitq_table_{rep_name}", f"unit products match the {rep_name} matrices", worst, tol)
    assoc = 0.0
    for a in splitq.BASIS:
        for b in splitq.BASIS:
            for c in splitq.BASIS:
                assoc = max(assoc, max(abs(x - y) for x, y in zip(((a * b) * c).c, (a * (b * c)).c)))
    rep.add("splitq_associative", "(ab)c = a(bc) on the units", assoc, tol)
    sym = splitq.thooft_symbols()
    g = np.diag(splitq.METRIC4)
    for rep_name in ("main", "appendixA"):
        q, qb = splitq.quaternion_units(rep_name)
        e1 = e2 = 0.0
        for m in range(4):
            for n in range(4):
                e1 = max(e1, np.abs(q[m] @ qb[n] + q[n] @ qb[m]
                                    - 2 * (m == n) * g[m] * np.eye(2)).max())
                rhs = sum(sym.eta[m, n, i] * g[i] * q[i] for i in range(3))
                e2 = max(e2, np.abs(q[m] @ qb[n] - q[n] @ qb[m] - 2 * rhs).max())
        rep.add(f"q_qbar_symmetric_{rep_name}", "q^m qbar^n + q^n qbar^m = 2 g^mn", e1, tol)
        rep.add(f"q_qbar_antisymmetric_{rep_name}", "antisymmetric part is 2 eta^{mni} q_i", e2, tol)
    cont = np.einsum("mni,mnj->ij", sym.eta, sym.eta_lower)
    rep.add("thooft_eta_eta", "eta^{mni} eta_{mnj} = 4 delta", np.abs(cont - 4 * np.eye(3)).max(), tol)
    cont = np.einsum("mni,mnj->ij", sym.etabar, sym.etabar_lower)
    rep.add("thooft_etabar_etabar", "etabar^{mni} etabar_{mnj} = 4 delta",
            np.abs(cont - 4 * np.eye(3)).max(), tol)
    cont = np.einsum("mni,mnj->ij", sym.eta, sym.etabar_lower)
    rep.add("thooft_eta_etabar", "eta^{mni} etabar_{mnj} = 0", np.abs(cont).max(), tol)
    dual = 0.5 * np.einsum("mnpq,pqi->mni", sym.epsilon, sym.eta)
    rep.add("thooft_self_dual", "eta is self-dual",
            np.abs(dual - sym.eta_lower * g[None, None, :3]).max(), tol)
    dual = 0.5 * np.einsum("mnpq,pqi->mni", sym.epsilon, sym.etabar)
    rep.add("thooft_anti_self_dual", "etabar is anti-self-dual",
            np.abs(dual + sym.etabar_lower * g[None, None, :3]).max(), tol)
    gens = sp2r.su11_generators()
    g3 = np.diag(sp2r.METRIC3)
    tau = np.array(gens.tau)
    eps3 = splitq.levi_civita(3)
    comm = anti = 0.0
    for i in range(3):
        for j in range(3):
            c = tau[i] @ tau[j] - tau[j] @ tau[i]
            rhs = -2j * sum(eps3[i, j, k] * g3[k] * tau[k] for k in range(3))
            comm = max(comm, np.abs(c - rhs).max())
            a = tau[i] @ tau[j] + tau[j] @ tau[i]
            anti = max(anti, np.abs(a - 2 * (i == j) * g3[i] * np.eye(2)).max())
    rep.add("su11_commutator", "[tau^i, tau^j] = -2i eps^{ijk} tau_k", comm, tol)
    rep.add("su11_anticommutator", "{tau^i, tau^j} = 2 g^{ij}", anti, tol)
    comp = np.einsum("i,iab,icd->abcd", g3, tau, tau)
    d = np.eye(2)
    rhs = 2 * np.einsum("ad,bc->abcd", d, d) - np.einsum("ab,cd->abcd", d, d)
    rep.add("su11_completeness", "tau completeness relation", np.abs(comp - rhs).max(), tol)
    tp, tm, t3 = gens.t_plus, gens.t_minus, gens.t3
    rep.add("su11_ladder", "[t3, t+-] = +-t+- and [t+, t-] = -2 t3",
            max(np.abs(t3 @ tp - tp @ t3 - tp).max(), np.abs(t3 @ tm - tm @ t3 + tm).max(),
                np.abs(tp @ tm - tm @ tp + 2 * t3).max()), tol)
    labels = {
        "clifford": "{gamma^a, gamma^b} = 2 g^ab",
        "gamma_pseudo_hermitian": "gamma^dag = k gamma k",
        "sigma_pseudo_hermitian": "sigma^dag = k sigma k",
        "so23_algebra": "so(2,3) commutators of sigma^ab",
        "charge_conjugation": "C sigma C = -sigma^*",
        "mAB_symmetric": "m^ab symmetric",
        "mA_antisymmetric": "m^a antisymmetric",
        "k_equals_i_gamma1_gamma2": "k = i gamma^1 gamma^2",
        "u22_completeness_m": "u(2,2) completeness with m matrices",
        "su22_completeness_k": "su(2,2) completeness with k matrices",
        "u22_completeness_gamma": "completeness with gamma and sigma",
        "kAB_sandwich_algebra": "k^ab k k^cd algebra",
        "mAB_sandwich_algebra": "m^ab E m^cd algebra",
    }
    for key, val in so23.family_residuals(so23.build_family()).items():
        rep.add(f"so23_{key}", labels.get(key, key), val, tol)
    return rep


def random_h22(rng, n, rho_max=2.0):
    """``n`` random ``H22Params`` with theta in [0, pi] and rho in [0, rho_max]."""
    out = []
    for _ in range(n):
        out.append(so23.H22Params(rng.uniform(0, np.pi), rng.uniform(0, rho_max),
                                  rng.uniform(-np.pi, np.pi), rng.uniform(-np.pi, np.pi)))
    return out


def _random_su11(rng):
    return sp2r.su11_element(rng.uniform(-np.pi, np.pi), rng.uniform(-1.5, 1.5),
                             rng.uniform(-np.pi, np.pi))


@_timed
def hopf_suite(samples=200, seed=None, tol=1e-12):
    """Both non-compact Hopf maps on random points, with gauge invariance."""
    rep = SuiteReport("hopf")
    rng = np.random.default_rng(so23.resolve_seed(seed))
    c1 = m1 = g1 = s1 = 0.0
    for _ in range(samples):
        rho, phi, chi = rng.uniform(0, 2), rng.uniform(-np.pi, np.pi), rng.uniform(-np.pi, np.pi)
        g = sp2r.su11_element(phi, rho, chi)
        x = sp2r.hopf1_project(g).as_array()
        c1 = max(c1, abs(-x[0] ** 2 - x[1] ** 2 + x[2] ** 2 - 1))
        polar = np.array([np.sinh(rho) * np.sin(phi), np.sinh(rho) * np.cos(phi), np.cosh(rho)])
        m1 = max(m1, np.abs(x - polar).max())
        u1 = sp2r.su11_element(0.0, 0.0, rng.uniform(-np.pi, np.pi))
        g1 = max(g1, np.abs(sp2r.hopf1_project(g @ u1).as_array() - x).max())
        psi_l, _ = sp2r.hopf1_spinors(x)
        s1 = max(s1, np.abs(psi_l[:, 0] * np.exp(0.5j * (phi + chi)) - g[:, 0]).max())
    rep.add("hopf1_constraint", "x on the upper leaf of H^{2,0}", c1, tol)
    rep.add("hopf1_polar", "x = (sinh rho sin phi, sinh rho cos phi, cosh rho)", m1, tol)
    rep.add("hopf1_gauge", "x invariant under the right U(1)", g1, tol)
    rep.add("hopf1_spinor", "Hopf spinor reproduces the first column up to phase", s1, tol)
    c2 = m2 = g2 = d2 = ch2 = 0.0
    for p in random_h22(rng, samples):
        m = so23.dirac_closed_form(p)
        x = so23.hopf2_project(m).as_array()
        c2 = max(c2, abs(so23.split_norm(x) - 1))
        m2 = max(m2, np.abs(x - p.x).max())
        h = np.zeros((4, 4), dtype=np.complex128)
        h[:2, :2] = _random_su11(rng)
        h[2:, 2:] = _random_su11(rng)
        g2 = max(g2, np.abs(so23.hopf2_coordinates(m @ h) - x).max())
        d2 = max(d2, np.abs(so23.hopf2_coordinates(so23.schwinger_closed_form(p)) - x).max())
        psi_l, psi_r = so23.chiral_spinors(p.rho, p.chi, p.phi)
        ch2 = max(ch2, np.abs(so23.chiral_hopf(psi_l, psi_r) - p.y).max())
    rep.add("hopf2_constraint", "x on H^{2,2}", c2, tol)
    rep.add("hopf2_polar", "x = (sin theta y^m, cos theta)", m2, tol)
    rep.add("hopf2_gauge", "x invariant under right SU(1,1) x SU(1,1)", g2, tol)
    rep.add("hopf2_dirac_vs_schwinger", "both squeeze matrices project to the same point", d2, tol)
    rep.add("chiral_hopf", "chiral Hopf map reproduces y^m", ch2, tol)
    return rep


def decomposition_grid(n_per_axis=4):
    """Regular grid of ``n_per_axis**4`` points away from the Gauss singularity."""
    thetas = np.linspace(0.0, 2.4, n_per_axis)
    rhos = np.linspace(0.0, 1.5, n_per_axis)
    chis = np.linspace(0.0, 2 * np.pi, n_per_axis, endpoint=False)
    phis = np.linspace(0.0, 2 * np.pi, n_per_axis, endpoint=False)
    return [so23.H22Params(t, r, c, f) for t in thetas for r in rhos for c in chis for f in phis]


@_timed
def decomposition_suite(points=None, tol=1e-12):
    """Direct exponential, Euler and Gauss routes to the Dirac squeeze matrix."""
    rep = SuiteReport("decomposition")
    points = decomposition_grid() if points is None else points
    ee = eg = xg = sc = hs = 0.0
    for p in points:
        direct = so23.sp4_dirac_squeeze(p).m
        h, core = so23.euler_decompose(p)
        euler = h @ core @ np.linalg.inv(h)
        u, d, low = so23.gauss_decompose_sp4(p)
        gauss = u @ d @ low
        ee = max(ee, np.abs(direct - euler).max())
        eg = max(eg, np.abs(euler - gauss).max())
        xg = max(xg, np.abs(direct - gauss).max())
        sc = max(sc, np.abs(direct - so23.dirac_closed_form(p)).max())
        hs = max(hs, np.abs(h @ core - so23.schwinger_closed_form(p)).max())
    n = len(points)
    rep.add("exp_vs_euler", f"direct exponential vs Euler product ({n} points)", ee, tol)
    rep.add("euler_vs_gauss", f"Euler product vs Gauss product ({n} points)", eg, tol)
    rep.add("exp_vs_gauss", f"direct exponential vs Gauss product ({n} points)", xg, tol)
    rep.add("exp_vs_closed", f"direct exponential vs polar closed form ({n} points)", sc, tol)
    rep.add("schwinger_closed", f"H core vs Schwinger closed form ({n} points)", hs, tol)
    return rep


@_timed
def random_matrix_suite(samples=50, seed=None, tol=1e-12):
    """Randomized group-level identities of the squeeze matrices."""
    rep = SuiteReport("random_matrix")
    rng = np.random.default_rng(so23.resolve_seed(seed))
    fam = so23.build_family()
    pu = rel = h43 = spin = sp2 = gauss2 = 0.0
    for p in random_h22(rng, samples, rho_max=1.5):
        m = so23.dirac_closed_form(p)
        mm = so23.schwinger_closed_form(p)
        scale = np.abs(m).max() ** 2
        pu = max(pu, so23.pseudo_unitarity_residual(m) / scale,
                 so23.pseudo_unitarity_residual(mm) / scale)
        h = so23.h_closed_form(p.rho, p.chi, p.phi)
        rel = max(rel, np.abs(m @ h - mm).max())
        g = so23.h43_element(p.rho, p.chi, p.phi, p.theta, p.rho, p.chi, p.phi)
        g0 = so23.h43_element(p.rho, p.chi, p.phi, p.theta, 0.0, 0.0, 0.0)
        h43 = max(h43, np.abs(g - m).max(), np.abs(g0 - mm).max())
        s = so23.hopf_spinor_matrix(p)
        spin = max(spin, np.abs(s - m).max(), np.abs(dagger(s) @ fam.k @ s - fam.k).max() / scale)
        q = sp2r.Sp2SqueezeParams(rng.uniform(0, 2), rng.uniform(-np.pi, np.pi))
        gen = sp2r.su11_generators()
        direct = mat_exp(-q.xi * gen.t_plus + np.conj(q.xi) * gen.t_minus)
        sp2 = max(sp2, np.abs(direct - sp2r.sp2_dirac_squeeze(q)).max())
        gauss2 = max(gauss2, np.abs(sp2r.faithful_product(*sp2r.gauss_params_sp2(q, "dirac"))
                                    - sp2r.sp2_dirac_squeeze(q)).max())
    rep.add("sp4_pseudo_unitary", "M^dag k M = k and det M = 1", pu, tol)
    rep.add("dirac_schwinger_relation", "Schwinger matrix = Dirac matrix times fibre H", rel, tol)
    rep.add("h43_reduction", "H^{4,3} element reduces to both squeeze matrices", h43, tol)
    rep.add("hopf_spinor_matrix", "Hopf spinor matrix equals M and preserves k", spin, tol)
    rep.add("sp2_exp_vs_closed", "exp(-xi T+ + xi^* T-) in 2x2 equals M(rho, phi)", sp2, tol)
    rep.add("sp2_gauss", "Gauss product reproduces M(rho, phi)", gauss2, tol)
    return rep


@_timed
def symplectic_suite(samples=50, seed=None, tol=1e-11, modes=(1, 2)):
    """Bogoliubov and dimension checks of ``so23.symplectic_checks``."""
    rep = SuiteReport("symplectic")
    for n in modes:
        r = so23.symplectic_checks(n, samples, seed)
        for key, val in r.residuals.items():
            rep.add(f"n{n}_{key}", key.replace("_", " "), val, tol)
        dims = r.dimensions
        for kind in ("boson", "fermion"):
            exp = dims[f"{kind}_expected"]
            miss = max(abs(dims[f"{kind}_algebra_dim"] - exp), abs(dims[f"{kind}_params"] - exp),
                       abs(dims[f"{kind}_param_rank"] - exp))
            rep.add(f"n{n}_{kind}_dimension", f"{kind} generator count equals {exp}", miss, 0.0)
    return rep


def identities_report(samples=50, seed=None, tol=None):
    """Everything ``cmd_identities`` runs; random suites are skipped for ``samples == 0``."""
    total = SuiteReport("identities")
    total.extend(exact_suite() if tol is None else exact_suite(tol))
    total.extend(decomposition_suite() if tol is None else decomposition_suite(tol=max(tol, 1e-12)))
    if samples > 0:
        kw = {} if tol is None else {"tol": max(tol, 1e-12)}
        total.extend(hopf_suite(samples, seed, **kw))
        total.extend(random_matrix_suite(samples, seed, **kw))
        kw = {} if tol is None else {"tol": max(tol, 1e-11)}
        total.extend(symplectic_suite(samples, seed, **kw))
    return total
