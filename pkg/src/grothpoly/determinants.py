"""Determinantal formulas: bialternant, Jacobi-Trudi, and coefficient dets.

All matrices here are small (side <= number of parts), so determinants are
expanded by minors with memoization; entries live in whatever exact ring
supports +, -, * (coefficient polynomials, truncated series, or Schur
expansions).
"""

from .bivar import BivarPoly, ALPHA, BETA, A_PLUS_B
from . import partitions as pt
from .schur import SchurExpansion
from .series import (
    TruncatedSeries,
    divide_by_vandermonde,
    ek_polynomial,
    hk_polynomial,
)


def det_ring(matrix, one):
    """Determinant by first-row expansion with memoized minors.

    ``one`` is the multiplicative identity of the entry ring, returned for
    the empty matrix.  Entries only need +, -, *.
    """
    n = len(matrix)
    full = (1 << n) - 1
    memo = {}

    def minor(row, colmask):
        if row == n:
            return one
        key = (row, colmask)
        found = memo.get(key)
        if found is not None:
            return found
        result = None
        sign = 1
        for j in range(n):
            bit = 1 << j
            if not (colmask & bit):
                continue
            term = matrix[row][j] * minor(row + 1, colmask & ~bit)
            if sign < 0:
                term = -term
            result = term if result is None else result + term
            sign = -sign
        memo[key] = result
        return result

    return minor(0, full)


# -- bialternant ---------------------------------------------------------


def _bialternant_entry(i, lam_j, j, n, cutoff):
    """x_i^(lam_j + n - j) (1 + b x_i)^(j-1) / (1 - a x_i)^(lam_j), truncated.

    Row index i and column index j are 1-based as in the defining formula.
    """
    base = lam_j + n - j
    coeffs = {}  # power of x_i -> BivarPoly
    for s in range(0, j):  # (1 + b x)^(j-1)
        c1 = BivarPoly.term(pt.binom(j - 1, s), 0, s)
        if not c1:
            continue
        for m in range(0, cutoff - base - s + 1):  # geometric in a
            c2 = BivarPoly.term(pt.binom(lam_j - 1 + m, m), m, 0)
            if not c2:
                continue
            p = base + s + m
            if p > cutoff:
                continue
            coeffs[p] = coeffs.get(p, BivarPoly.zero()) + c1 * c2
    terms = {}
    for p, c in coeffs.items():
        exps = [0] * n
        exps[i - 1] = p
        terms[tuple(exps)] = c
    return TruncatedSeries(n, cutoff, terms)


def bialternant_G(lam, n, cutoff):
    """The canonical deformed function of lam in n variables, degree <= cutoff.

    Computed as the defining ratio of determinants; the numerator carries an
    over-truncation margin of n(n-1)/2 so that the exact division by the
    Vandermonde is faithful through the requested cutoff.
    """
    lam = pt.normalize(lam)
    if n < 1:
        raise ValueError("need at least one variable")
    if len(lam) > n:
        return TruncatedSeries.zero(n, cutoff)
    if not lam and n == 1:
        return TruncatedSeries.one(n, cutoff)
    margin = n * (n - 1) // 2
    num_cutoff = cutoff + margin
    matrix = [
        [_bialternant_entry(i, pt.part(lam, j - 1), j, n, num_cutoff) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    numerator = det_ring(matrix, TruncatedSeries.one(n, num_cutoff))
    return divide_by_vandermonde(numerator, cutoff)


# -- Jacobi-Trudi for the G functions -------------------------------------


def jacobi_trudi_G(lam, n, cutoff, basis="h"):
    """Determinantal form of the G function in n variables.

    basis="h": n x n determinant with entries
        sum_k (a+b)^k C(i-1, k) h_(lam_i - i + j + k)(x/(1 - a x)).
    basis="e": size-l(lam') determinant with entries
        sum_k C(lam'_i - 1 + k, k) (a+b)^k e_(lam'_i - i + j + k)(x/(1 - a x)).
    Both agree with the bialternant.
    """
    lam = pt.normalize(lam)
    if len(lam) > n:
        return TruncatedSeries.zero(n, cutoff)
    one = TruncatedSeries.one(n, cutoff)
    if basis == "h":
        hs = {}

        def h_sub(m):
            if m not in hs:
                hs[m] = hk_polynomial(m, n, cutoff).substitute_rational(ALPHA)
            return hs[m]

        matrix = []
        for i in range(1, n + 1):
            row = []
            for j in range(1, n + 1):
                p = pt.part(lam, i - 1) - i + j
                entry = TruncatedSeries.zero(n, cutoff)
                for k in range(0, i):
                    c = pt.binom(i - 1, k)
                    if c and p + k >= 0:
                        entry = entry + h_sub(p + k).scale(A_PLUS_B**k * c)
                row.append(entry)
            matrix.append(row)
        return det_ring(matrix, one)
    if basis == "e":
        conj = pt.conjugate(lam)
        ell = len(conj)
        if ell == 0:
            return one
        es = {}

        def e_sub(m):
            if m not in es:
                es[m] = ek_polynomial(m, n, cutoff).substitute_rational(ALPHA)
            return es[m]

        matrix = []
        for i in range(1, ell + 1):
            row = []
            for j in range(1, ell + 1):
                p = conj[i - 1] - i + j
                entry = TruncatedSeries.zero(n, cutoff)
                for k in range(0, n - p + 1):  # e_m = 0 for m > n
                    if p + k < 0:
                        continue
                    c = pt.binom(conj[i - 1] - 1 + k, k)
                    if c:
                        entry = entry + e_sub(p + k).scale(A_PLUS_B**k * c)
                row.append(entry)
            matrix.append(row)
        return det_ring(matrix, one)
    raise ValueError("basis must be 'h' or 'e'")


# -- coefficient determinants ---------------------------------------------


def _inv_power_coeff(r, m, c):
    """[t^m] of (1 - c t)^(-r) for any integer r, as a BivarPoly."""
    return c**m * pt.gbinom(r - 1 + m, m)


def ftilde_coeff(i, p, q):
    """Entry of the signed-grid determinant for the expansion coefficients.

    Defined by the generating series
        sum_{k>=0} ftilde(i, q+k, q) t^k = (1-(a+b)t)^(1-i) (1-a t)^(-(q+1)).
    Rows with i = 1 carry no (a+b) factor.
    """
    deg = p - q
    if deg < 0:
        return BivarPoly.zero()
    total = BivarPoly.zero()
    for m1 in range(deg + 1):
        c1 = _inv_power_coeff(i - 1, m1, A_PLUS_B)
        if c1:
            c2 = _inv_power_coeff(q + 1, deg - m1, ALPHA)
            if c2:
                total = total + c1 * c2
    return total


def f_positive_coeff(i, p, q, d=None):
    """Positive closed form for the single-pair path weight of the f matrix.

    p = mu_i - i and q = nu_j - j.  The source sits at (-p, 1-i); the sink
    at (-q, q) when q >= 0 and at (-q, -1) when q < 0 (sinks on the right
    half-plane are pushed down to the axis, which keeps the endpoint
    configuration nonpermutable so the determinant counts disjoint path
    systems).  The d argument is accepted for interface symmetry; the case
    split is equivalent to comparing the indices with the diagonal count.
    """
    if p < q:
        return BivarPoly.zero()
    total = BivarPoly.zero()
    if q >= 0:
        # both endpoints in the left half-plane: p - q right steps, k of
        # them below the axis on i - 1 levels, the rest on q + 1 levels
        for k in range(p - q + 1):
            n_low = pt.binom(k + i - 2, k)
            n_high = pt.binom(p - k, q)
            if n_low and n_high:
                total = total + A_PLUS_B**k * ALPHA ** (p - q - k) * (n_low * n_high)
        return total
    if p >= 0:
        # sink at (-q, -1): p left-half steps (all sub-axis) and -q right
        # steps of which the first k fall under the anti-diagonal
        for k in range(0, -q + 1):
            chains = pt.binom(p + i - 1, p + k)
            tail = pt.binom(-q - 1, -q - k)
            if chains and tail:
                total = total + A_PLUS_B ** (p + k) * BETA ** (-q - k) * (chains * tail)
        return total
    # source already on the right half-plane: p - q right steps there
    if i == 1:
        return total  # source row y = 0 cannot reach the sink row y = -1
    for k in range(p - q + 1):
        chains = pt.binom(p + i - 1, k)
        if not chains:
            continue
        if k == 0:
            levels = min(-p, i - 1)  # suffix floor is the source row itself
            tail = pt.binom(p - q + levels - 1, p - q)
        else:
            tail = pt.binom(-q - 1, p - q - k)
        if tail:
            total = total + A_PLUS_B**k * BETA ** (p - q - k) * (chains * tail)
    return total


def f_alpha_beta_det(mu, nu, entries="f"):
    """The connection coefficient of the dual polynomials as a determinant.

    entries="f" uses the positive closed form, entries="ftilde" the signed
    one; the two must agree.
    """
    mu, nu = pt.normalize(mu), pt.normalize(nu)
    ell = len(mu)
    if ell == 0:
        return BivarPoly.one() if not nu else BivarPoly.zero()
    d = pt.diagonal_count(nu)
    if entries == "f":
        entry = lambda i, pp, qq: f_positive_coeff(i, pp, qq, d)
    elif entries == "ftilde":
        entry = lambda i, pp, qq: ftilde_coeff(i, pp, qq)
    else:
        raise ValueError("entries must be 'f' or 'ftilde'")
    matrix = [
        [entry(i, mu[i - 1] - i, pt.part(nu, j - 1) - j) for j in range(1, ell + 1)]
        for i in range(1, ell + 1)
    ]
    return det_ring(matrix, BivarPoly.one())


def elegant_count_det(mu, nu):
    """Number of skew fillings with row-bounded entries, as a determinant."""
    mu, nu = pt.normalize(mu), pt.normalize(nu)
    if not pt.contains(mu, nu):
        return 0
    ell = len(mu)
    if ell == 0:
        return 1
    matrix = [
        [
            pt.binom(
                mu[i - 1] - pt.part(nu, j - 1) + j - 2,
                mu[i - 1] - i - pt.part(nu, j - 1) + j,
            )
            for j in range(1, ell + 1)
        ]
        for i in range(1, ell + 1)
    ]
    return det_ring(matrix, 1)


def _arm_block_det(lam, nu, d):
    """det[ C(lam_i - i, lam_i - i - nu_j + j) ] over the diagonal block."""
    if d == 0:
        return 1
    matrix = [
        [
            pt.binom(
                pt.part(lam, i - 1) - i,
                pt.part(lam, i - 1) - i - pt.part(nu, j - 1) + j,
            )
            for j in range(1, d + 1)
        ]
        for i in range(1, d + 1)
    ]
    return det_ring(matrix, 1)


def dual_hook_det(lam, nu):
    """Two-region filling count as a product of two binomial determinants.

    The block above the diagonal is det[C(lam_i - i, lam_i - i - nu_j + j)]
    over the common diagonal count d; the block below is the same
    determinant for the conjugate pair.  Zero by convention when the
    diagonal counts differ.
    """
    lam, nu = pt.normalize(lam), pt.normalize(nu)
    d = pt.diagonal_count(lam)
    if d != pt.diagonal_count(nu):
        return 0
    return _arm_block_det(lam, nu, d) * _arm_block_det(
        pt.conjugate(lam), pt.conjugate(nu), d
    )


# -- Cauchy-Binet composition ----------------------------------------------


def skew_family_det(family, outer, inner, t):
    """det[ family(i, outer_i - i, inner_j - j) ] over a t x t window."""
    matrix = [
        [
            BivarPoly.coerce(family(i, pt.part(outer, i - 1) - i, pt.part(inner, j - 1) - j))
            for j in range(1, t + 1)
        ]
        for i in range(1, t + 1)
    ]
    return det_ring(matrix, BivarPoly.one())


def cauchy_binet_compose(a_family, b_family, lam, nu, t, k_range):
    """Composite determinant det[c] with c^(i,j)_(p,q) = sum_k a^(i)_(p,k) b^(j)_(k,q).

    Families are callables (superscript, p, q) -> coefficient; k runs over
    the closed range k_range.  Equals the middle-partition sum of products
    of the two skew determinants.
    """
    kmin, kmax = k_range

    def composite(i, j, p, q):
        total = BivarPoly.zero()
        for k in range(kmin, kmax + 1):
            av = BivarPoly.coerce(a_family(i, p, k))
            if av:
                bv = BivarPoly.coerce(b_family(j, k, q))
                if bv:
                    total = total + av * bv
        return total

    matrix = [
        [
            composite(i, j, pt.part(lam, i - 1) - i, pt.part(nu, j - 1) - j)
            for j in range(1, t + 1)
        ]
        for i in range(1, t + 1)
    ]
    return det_ring(matrix, BivarPoly.one())


def middle_partition_sum(a_family, b_family, lam, nu, t, max_weight):
    """Brute-force sum over middle partitions of products of skew dets."""
    total = BivarPoly.zero()
    for mu in pt.partitions_up_to(max_weight, max_length=t):
        fa = skew_family_det(a_family, lam, mu, t)
        if fa:
            fb = skew_family_det(b_family, mu, nu, t)
            if fb:
                total = total + fa * fb
    return total


def e_substituted_det_G(lam, cutoff):
    """Schur expansion of the G function from the elementary-entry determinant.

    Entries are sum_k C(lam'_i - 1 + k, k) (a+b)^k e_(lam'_i - i + j + k)
    evaluated at the row-deformed variables, expanded directly in the Schur
    basis; independent of the connection-coefficient route.
    """
    from .schur import e_substituted

    lam = pt.normalize(lam)
    conj = pt.conjugate(lam)
    ell = len(conj)
    one = SchurExpansion.one(cutoff)
    if ell == 0:
        return one
    cache = {}

    def e_sub(m):
        if m not in cache:
            cache[m] = e_substituted(m, ALPHA, cutoff)
        return cache[m]

    matrix = []
    for i in range(1, ell + 1):
        row = []
        for j in range(1, ell + 1):
            p = conj[i - 1] - i + j
            entry = SchurExpansion.zero(cutoff)
            for k in range(0, cutoff - p + 1):
                if p + k < 0:
                    continue
                c = pt.binom(conj[i - 1] - 1 + k, k)
                if c:
                    entry = entry + e_sub(p + k).scale(A_PLUS_B**k * c)
            row.append(entry)
        matrix.append(row)
    return det_ring(matrix, one)


# -- Jacobi-Trudi for the dual polynomials ----------------------------------


def _det_combo(entry_rows, kind):
    """Determinant of a matrix whose entries are h- or e-combinations.

    entry_rows[i][j] is a list of (degree, coefficient); minors are expanded
    along rows and multiplied in via the Pieri rule, which keeps the whole
    computation in the Schur basis.
    """
    n = len(entry_rows)
    memo = {}

    def minor(row, colmask):
        if row == n:
            return SchurExpansion.one()
        key = (row, colmask)
        found = memo.get(key)
        if found is not None:
            return found
        result = SchurExpansion.zero()
        sign = 1
        for j in range(n):
            bit = 1 << j
            if not (colmask & bit):
                continue
            sub = minor(row + 1, colmask & ~bit)
            if sub:
                acc = SchurExpansion.zero()
                for m, c in entry_rows[row][j]:
                    if kind == "h":
                        acc = acc + sub.multiply_h(m, c)
                    else:
                        acc = acc + sub.multiply_e(m, c)
                result = result + (acc if sign > 0 else -acc)
            sign = -sign
        memo[key] = result
        return result

    return minor(0, (1 << n) - 1)


def jacobi_trudi_g(lam, basis="h"):
    """Exact Schur expansion of a dual polynomial from its determinant.

    basis="h" returns the (a, b) dual polynomial of lam; basis="e" runs the
    conjugate determinant with elementary entries, which produces the dual
    polynomial with the two parameters exchanged.
    """
    lam = pt.normalize(lam)
    if basis == "h":
        rows = lam
    elif basis == "e":
        rows = pt.conjugate(lam)
    else:
        raise ValueError("basis must be 'h' or 'e'")
    ell = len(rows)
    if ell == 0:
        return SchurExpansion.one()
    entry_rows = []
    for i in range(1, ell + 1):
        p = rows[i - 1] - i
        row = []
        for j in range(1, ell + 1):
            combo = []
            for k in range(-j, p + 1):
                c = ftilde_coeff(i, p, k)
                if c:
                    combo.append((k + j, c))
            row.append(combo)
        entry_rows.append(row)
    return _det_combo(entry_rows, "h" if basis == "h" else "e")


def refined_g_jt(lam, t_values, n, cutoff=None):
    """Refined dual Jacobi-Trudi with row-indexed deformation parameters.

    Entry (i, j) is sum_k e_k(t_1..t_(lam'_i - 1)) e_(lam'_i - i + j - k)(x);
    t_values supplies the parameters as coefficients (ints or polynomials).
    With all parameters zero this is the classical conjugate Jacobi-Trudi.
    """
    lam = pt.normalize(lam)
    conj = pt.conjugate(lam)
    ell = len(conj)
    if cutoff is None:
        cutoff = pt.weight(lam)
    if ell == 0:
        return TruncatedSeries.one(n, cutoff)
    if len(t_values) < max(conj[0] - 1, 0):
        raise ValueError("need at least %d deformation parameters" % (conj[0] - 1))
    t_values = [BivarPoly.coerce(t) for t in t_values]
    matrix = []
    for i in range(1, ell + 1):
        m = conj[i - 1]
        tslice = t_values[: m - 1]
        row = []
        for j in range(1, ell + 1):
            entry = TruncatedSeries.zero(n, cutoff)
            for k in range(0, m):
                ek_t = _elementary_in_values(tslice, k)
                if ek_t:
                    deg = m - i + j - k
                    entry = entry + ek_polynomial(deg, n, cutoff).scale(ek_t)
            row.append(entry)
        matrix.append(row)
    return det_ring(matrix, TruncatedSeries.one(n, cutoff))


def _elementary_in_values(values, k):
    """e_k of a finite list of coefficient values."""
    if k == 0:
        return BivarPoly.one()
    if k > len(values):
        return BivarPoly.zero()
    total = BivarPoly.zero()
    from itertools import combinations

    for combo in combinations(values, k):
        prod = BivarPoly.one()
        for v in combo:
            prod = prod * v
        total = total + prod
    return total
