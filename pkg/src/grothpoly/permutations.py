"""Permutation-indexed polynomials via isobaric divided differences.

Polynomials in x_1..x_m over Z[a, b] are dicts {exponent tuple: BivarPoly}.
The divided difference acts termwise through the two-variable closed form,
so no polynomial division is ever performed.
"""

from itertools import permutations as iter_permutations

from .bivar import BivarPoly, ALPHA, A_PLUS_B
from . import partitions as pt
from .series import TruncatedSeries
from .schur import SchurExpansion


# -- permutation utilities ----------------------------------------------------


def validate_permutation(w):
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError("%r is not a permutation in one-line notation" % (w,))
    return w


def inverse(w):
    out = [0] * len(w)
    for i, v in enumerate(w):
        out[v - 1] = i + 1
    return tuple(out)


def length(w):
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def longest_element(n):
    return tuple(range(n, 0, -1))


def multiply(u, v):
    """(u v)(i) = u(v(i))."""
    return tuple(u[v[i] - 1] for i in range(len(u)))


def descents(w):
    return [i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]]


def is_grassmannian(w):
    return len(descents(w)) <= 1


def grassmannian_shape(w):
    """The partition indexed by a single-descent permutation."""
    des = descents(w)
    if len(des) > 1:
        raise ValueError("%r has more than one descent" % (w,))
    if not des:
        return ()
    d = des[0]
    return pt.normalize(tuple(w[d - i] - (d + 1 - i) for i in range(1, d + 1)))


def shift_permutation(w, m):
    """1^m x w: fix 1..m and shift the rest."""
    return tuple(range(1, m + 1)) + tuple(v + m for v in w)


def reduced_word(w):
    """Deterministic reduced word, peeling the leftmost descent on the right."""
    w = tuple(w)
    letters = []
    while True:
        des = descents(w)
        if not des:
            break
        i = des[0]
        letters.append(i)
        w = w[: i - 1] + (w[i], w[i - 1]) + w[i + 1 :]
    return list(reversed(letters))


def reduced_word_rightmost(w):
    """Alternative reduced word from the rightmost descent (for cross-checks)."""
    w = tuple(w)
    letters = []
    while True:
        des = descents(w)
        if not des:
            break
        i = des[-1]
        letters.append(i)
        w = w[: i - 1] + (w[i], w[i - 1]) + w[i + 1 :]
    return list(reversed(letters))


def all_permutations(n):
    return [tuple(p) for p in iter_permutations(range(1, n + 1))]


# -- polynomials and operators -------------------------------------------------


def poly_monomial(exps, coeff=1):
    return {tuple(exps): BivarPoly.coerce(coeff)}


def poly_add(p, q):
    out = dict(p)
    for e, c in q.items():
        s = out.get(e, BivarPoly.zero()) + c
        if s:
            out[e] = s
        elif e in out:
            del out[e]
    return out


def poly_scale(p, c):
    c = BivarPoly.coerce(c)
    return {e: v * c for e, v in p.items()} if c else {}


def poly_mul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            key = tuple(x + y for x, y in zip(e1, e2))
            s = out.get(key, BivarPoly.zero()) + c1 * c2
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out


def _divided_difference_monomial(exps, i):
    """Termwise divided difference (x^p y^q - x^q y^p)/(x - y) on slots i, i+1."""
    p, q = exps[i], exps[i + 1]
    if p == q:
        return []
    out = []
    if p > q:
        sign = 1
        lo, hi = q, p
    else:
        sign = -1
        lo, hi = p, q
    for s in range(lo, hi):
        e = list(exps)
        e[i], e[i + 1] = s, lo + hi - 1 - s
        out.append((tuple(e), sign))
    return out


def pi_operator(i, poly, deformed=True):
    """Isobaric divided difference: f -> dd_i((1 + c x_(i+1)) f).

    The multiplier constant c is (a + b) for the deformed operator and -1
    for the classical one; i is 1-based and needs i+1 variable slots.
    """
    c = A_PLUS_B if deformed else BivarPoly.const(-1)
    out = {}
    for exps, coeff in poly.items():
        lifted = list(exps)
        lifted[i] += 1
        for e, sign in _divided_difference_monomial(exps, i - 1):
            s = out.get(e, BivarPoly.zero()) + (coeff if sign > 0 else -coeff)
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        shifted = coeff * c
        if shifted:
            for e, sign in _divided_difference_monomial(tuple(lifted), i - 1):
                s = out.get(e, BivarPoly.zero()) + (shifted if sign > 0 else -shifted)
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
    return out


def staircase_monomial(n):
    return poly_monomial(tuple(n - 1 - i for i in range(n)))


def grothendieck_poly(w, deformed=True, word=None):
    """Apply the operator word for w^(-1) w_0 to the staircase monomial."""
    w = validate_permutation(w)
    n = len(w)
    u = multiply(inverse(w), longest_element(n))
    if word is None:
        word = reduced_word(u)
    poly = staircase_monomial(n)
    for i in reversed(word):
        poly = pi_operator(i, poly, deformed)
    return poly


def poly_truncate_vars(poly, nvars, cutoff):
    """Set variables beyond nvars to zero and drop degrees above the cutoff."""
    terms = {}
    for exps, c in poly.items():
        if any(e for e in exps[nvars:]):
            continue
        head = exps[:nvars] + (0,) * max(0, nvars - len(exps))
        if sum(head) <= cutoff:
            terms[head] = c
    return TruncatedSeries(nvars, cutoff, terms)


def stable_G_w(w, nvars, cutoff, max_extra=None):
    """Stable limit of the deformed polynomials, then the row deformation.

    Shifts by 1^m for growing m until two consecutive truncations agree,
    substitutes x -> x/(1 - a x), and returns the truncated series.
    Raises if the limit fails to settle within the allowed shifts.
    """
    w = validate_permutation(w)
    if max_extra is None:
        max_extra = cutoff + len(w)
    prev = None
    for m in range(0, max_extra + 1):
        poly = grothendieck_poly(shift_permutation(w, m), deformed=True)
        cur = poly_truncate_vars(poly, nvars, cutoff)
        if prev is not None and cur == prev:
            return cur.substitute_rational(ALPHA)
        prev = cur
    raise ArithmeticError("stable limit did not settle for %r" % (w,))


def stable_G_w_schur(w, nvars, cutoff):
    """Schur expansion of the stable limit (faithful to length nvars)."""
    return stable_G_w(w, nvars, cutoff).to_schur()


def expand_G_w_in_G_basis(w, cutoff):
    """Triangular expansion of the permutation function over the G family.

    Uses as many variables as the cutoff so every partition key of weight
    <= cutoff is visible; returns {partition: coefficient}.
    """
    from .identities import schur_expand_G

    w = validate_permutation(w)
    remaining = stable_G_w_schur(w, cutoff, cutoff)
    out = {}
    for wgt in range(cutoff + 1):
        for lam in pt.partitions_of(wgt):
            c = remaining.coefficient(lam)
            if c:
                out[lam] = c
                remaining = remaining - schur_expand_G(lam, cutoff).scale(c)
    if remaining:
        raise ArithmeticError("G-family elimination left a residue for %r" % (w,))
    return out
