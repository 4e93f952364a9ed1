"""Named identity verifiers behind the command-line `verify` command.

Every verifier returns a list of report dicts with the shape
{"identity", "instance", "degree_checked", "status", "lhs_minus_rhs"?}
so the front end can emit them as JSON lines.
"""

from .bivar import BivarPoly
from . import partitions as pt
from .schur import SchurExpansion
from .series import schur_polynomial
from .determinants import bialternant_G, jacobi_trudi_g, f_alpha_beta_det
from .identities import (
    canonical_recursion,
    schur_expand_G,
    schur_expand_g,
    verify_pieri,
)
from .operators import verify_relations
from . import permutations as pm
from .tableaux import enum_g_rbt


def _report(identity, instance, degree, ok, diff=None):
    rep = {
        "identity": identity,
        "instance": instance,
        "degree_checked": degree,
        "status": "pass" if ok else "fail",
    }
    if not ok and diff is not None:
        rep["lhs_minus_rhs"] = str(diff)
    return rep


def check_pieri_g_type1(max_weight=4, deg=None, max_k=3):
    reports = []
    for k in range(1, max_k + 1):
        for lam in pt.partitions_up_to(max_weight):
            for kind in ("g-type1-row", "g-type1-col"):
                reports.append(verify_pieri(kind, k, lam, None))
    return reports


def check_omega_duality(max_weight=4, deg=6):
    reports = []
    for lam in pt.partitions_up_to(max_weight):
        lhs = schur_expand_G(lam, deg).omega()
        rhs = schur_expand_G(pt.conjugate(lam), deg).bar()
        reports.append(
            _report("omega-duality-G", {"partition": list(lam)}, deg, lhs == rhs, lhs - rhs)
        )
        lhs = schur_expand_g(lam).omega()
        rhs = schur_expand_g(pt.conjugate(lam)).bar()
        reports.append(
            _report("omega-duality-g", {"partition": list(lam)}, None, lhs == rhs, lhs - rhs)
        )
    return reports


def check_hall_duality(max_weight=4, deg=6):
    reports = []
    for lam in pt.partitions_up_to(max_weight):
        g_lam = schur_expand_g(lam)
        for mu in pt.partitions_up_to(max_weight):
            pairing = g_lam.hall_inner(schur_expand_G(mu, deg).negate_params())
            want = BivarPoly.one() if lam == mu else BivarPoly.zero()
            reports.append(
                _report(
                    "hall-duality",
                    {"g": list(lam), "G": list(mu)},
                    deg,
                    pairing == want,
                    pairing - want,
                )
            )
    return reports


def check_jt_g(max_weight=5, deg=None, rbt_weight=4):
    """Determinant route vs connection-coefficient route vs tableau route."""
    reports = []
    for lam in pt.partitions_up_to(max_weight):
        if not lam:
            continue
        via_det = jacobi_trudi_g(lam, "h")
        coeffs = {}
        for nu in pt.partitions_up_to(pt.weight(lam)):
            if pt.contains(lam, nu):
                c = f_alpha_beta_det(lam, nu)
                if c:
                    coeffs[nu] = c
        via_f = SchurExpansion(coeffs)
        ok = via_det == via_f
        diff = via_det - via_f
        if ok and pt.weight(lam) <= rbt_weight:
            via_rbt = enum_g_rbt(lam, (), max(len(lam), 1)).to_schur().truncate(None)
            via_rbt = SchurExpansion(via_rbt.coeffs)
            ok = via_rbt == via_det
            diff = via_rbt - via_det
        reports.append(_report("jt-g", {"partition": list(lam)}, None, ok, diff))
    return reports


def check_schur_positive(max_weight=6, deg=None):
    reports = []
    for lam in pt.partitions_up_to(max_weight):
        bad = [
            (nu, str(c))
            for nu, c in schur_expand_g(lam).coeffs.items()
            if not c.has_nonnegative_coeffs()
        ]
        reports.append(
            _report(
                "schur-positive",
                {"partition": list(lam)},
                None,
                not bad,
                bad or None,
            )
        )
    return reports


def check_canonical_basis(max_weight=8, deg=None):
    reports = []
    try:
        rec = canonical_recursion(max_weight)
    except ArithmeticError as err:
        return [_report("canonical-basis", {"k_max": max_weight}, None, False, str(err))]
    from .bivar import ALPHA

    for k in range(1, max_weight + 1):
        want = SchurExpansion.zero()
        for i in range(1, k + 1):
            want = want + SchurExpansion.h(i, ALPHA ** (k - i) * pt.binom(k - 1, i - 1))
        ok = rec["C"][k] == want and rec["p"][(k, k)] == BivarPoly.one()
        # the conjugate side must reproduce the column generators exactly
        conj_ok = all(rec["p_conj"][(k, i)].is_zero() for i in range(1, k))
        reports.append(
            _report("canonical-basis", {"k": k}, None, ok and conj_ok)
        )
    return reports


def check_stable_limit(max_weight=4, deg=5):
    """Grassmannian stable limits against the bialternant."""
    reports = []
    for w in pm.all_permutations(4):
        if not pm.is_grassmannian(w):
            continue
        lam = pm.grassmannian_shape(w)
        got = pm.stable_G_w(w, 3, deg)
        want = bialternant_G(lam, 3, deg)
        reports.append(
            _report(
                "stable-limit",
                {"w": list(w), "partition": list(lam)},
                deg,
                got == want,
                got - want,
            )
        )
    return reports


def check_relations(max_weight=5, deg=None):
    report = verify_relations(max_weight, max_weight)
    return [
        _report("relations", {"family": name, "max_size": max_weight}, None, not fails, fails[:5] or None)
        for name, fails in report.items()
    ]


def check_cauchy(max_weight=4, deg=4):
    """Truncated two-alphabet Cauchy identity in 2 + 2 variables."""
    n1 = n2 = 2
    lhs = {}
    for lam in pt.partitions_up_to(deg):
        g_side = schur_expand_g(lam)
        G_side = schur_expand_G(lam, deg).negate_params()
        gx = {}
        for nu, c in g_side.coeffs.items():
            for e, m in schur_polynomial(nu, n1, deg).terms.items():
                prev = gx.get(e, BivarPoly.zero()) + c * m
                if prev:
                    gx[e] = prev
                elif e in gx:
                    del gx[e]
        Gy = {}
        for nu, c in G_side.coeffs.items():
            for e, m in schur_polynomial(nu, n2, deg).terms.items():
                prev = Gy.get(e, BivarPoly.zero()) + c * m
                if prev:
                    Gy[e] = prev
                elif e in Gy:
                    del Gy[e]
        for e1, c1 in gx.items():
            for e2, c2 in Gy.items():
                key = (e1, e2)
                prev = lhs.get(key, BivarPoly.zero()) + c1 * c2
                if prev:
                    lhs[key] = prev
                elif key in lhs:
                    del lhs[key]
    # right side: prod 1/(1 - x_i y_j) truncated at bidegree (deg, deg)
    rhs = {((0, 0), (0, 0)): BivarPoly.one()}
    for i in range(n1):
        for j in range(n2):
            new = {}
            for (e1, e2), c in rhs.items():
                m = 0
                while sum(e1) + m <= deg and sum(e2) + m <= deg:
                    f1 = list(e1)
                    f2 = list(e2)
                    f1[i] += m
                    f2[j] += m
                    key = (tuple(f1), tuple(f2))
                    prev = new.get(key, BivarPoly.zero()) + c
                    if prev:
                        new[key] = prev
                    elif key in new:
                        del new[key]
                    m += 1
            rhs = new
    diff = dict(lhs)
    for key, c in rhs.items():
        s = diff.get(key, BivarPoly.zero()) - c
        if s:
            diff[key] = s
        elif key in diff:
            del diff[key]
    ok = not diff
    return [
        _report(
            "cauchy",
            {"x_vars": n1, "y_vars": n2},
            deg,
            ok,
            sorted(str(k) for k in diff)[:4] or None,
        )
    ]


REGISTRY = {
    "pieri-g-type1": check_pieri_g_type1,
    "omega-duality": check_omega_duality,
    "hall-duality": check_hall_duality,
    "jt-g": check_jt_g,
    "schur-positive": check_schur_positive,
    "canonical-basis": check_canonical_basis,
    "stable-limit": check_stable_limit,
    "relations": check_relations,
    "cauchy": check_cauchy,
}
