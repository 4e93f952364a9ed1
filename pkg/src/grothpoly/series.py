"""Truncated multivariate power series over Z[a, b].

A TruncatedSeries holds the part of a power series in x_1..x_n of total
degree <= cutoff.  All arithmetic is exact below the cutoff; products
re-truncate at the minimum cutoff of the operands.
"""

from itertools import combinations, combinations_with_replacement

from .bivar import BivarPoly
from . import partitions as pt
from .schur import SchurExpansion


class NonDivisibleError(ArithmeticError):
    """Raised when an exact division of series fails; signals an engine bug."""


class TruncatedSeries:

    __slots__ = ("nvars", "cutoff", "terms")

    def __init__(self, nvars, cutoff, terms=None):
        clean = {}
        if terms:
            for exps, c in terms.items():
                c = BivarPoly.coerce(c)
                if not c:
                    continue
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise ValueError("exponent vector %r has wrong arity" % (exps,))
                if sum(exps) <= cutoff:
                    clean[exps] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "cutoff", cutoff)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def constant(c, nvars, cutoff):
        return TruncatedSeries(nvars, cutoff, {(0,) * nvars: BivarPoly.coerce(c)})

    @staticmethod
    def one(nvars, cutoff):
        return TruncatedSeries.constant(1, nvars, cutoff)

    @staticmethod
    def zero(nvars, cutoff):
        return TruncatedSeries(nvars, cutoff)

    @staticmethod
    def variable(i, nvars, cutoff):
        exps = [0] * nvars
        exps[i] = 1
        return TruncatedSeries(nvars, cutoff, {tuple(exps): BivarPoly.one()})

    @staticmethod
    def geometric(i, c, nvars, cutoff):
        """x_i/(1 - c x_i) = x_i + c x_i^2 + c^2 x_i^3 + ... truncated."""
        c = BivarPoly.coerce(c)
        terms = {}
        for m in range(1, cutoff + 1):
            exps = [0] * nvars
            exps[i] = m
            coeff = c ** (m - 1)
            if coeff:
                terms[tuple(exps)] = coeff
        return TruncatedSeries(nvars, cutoff, terms)

    # -- ring operations ---------------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("mixed variable counts")
        return min(self.cutoff, other.cutoff)

    def __add__(self, other):
        if isinstance(other, (int, BivarPoly)):
            other = TruncatedSeries.constant(other, self.nvars, self.cutoff)
        cutoff = self._check(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps, BivarPoly.zero()) + c
            if s:
                terms[exps] = s
            elif exps in terms:
                del terms[exps]
        return TruncatedSeries(self.nvars, cutoff, terms)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(
            self.nvars, self.cutoff, {e: -c for e, c in self.terms.items()}
        )

    def __sub__(self, other):
        if isinstance(other, (int, BivarPoly)):
            other = TruncatedSeries.constant(other, self.nvars, self.cutoff)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, BivarPoly)):
            return self.scale(other)
        cutoff = self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            if d1 > cutoff:
                continue
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) > cutoff:
                    continue
                key = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(key, BivarPoly.zero()) + c1 * c2
                if s:
                    terms[key] = s
                elif key in terms:
                    del terms[key]
        return TruncatedSeries(self.nvars, cutoff, terms)

    __rmul__ = __mul__

    def scale(self, c):
        c = BivarPoly.coerce(c)
        return TruncatedSeries(
            self.nvars, self.cutoff, {e: v * c for e, v in self.terms.items()}
        )

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __bool__(self):
        return bool(self.terms)

    def truncate(self, cutoff):
        return TruncatedSeries(self.nvars, min(self.cutoff, cutoff), self.terms)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), BivarPoly.zero())

    def set_last_var_zero(self):
        """Drop the last variable (stability checks)."""
        terms = {e[:-1]: c for e, c in self.terms.items() if e[-1] == 0}
        return TruncatedSeries(self.nvars - 1, self.cutoff, terms)

    def max_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    # -- substitution -------------------------------------------------------

    def substitute_rational(self, c):
        """Apply x_i -> x_i/(1 - c x_i) in every variable.

        c = a gives the row deformation, c = -b the column one; c = 0 is the
        identity.  The geometric expansion is truncated at the cutoff.
        """
        c = BivarPoly.coerce(c)
        if c.is_zero():
            return self
        out = {}
        for exps, coeff in self.terms.items():
            base = sum(exps)
            # distribute extra powers over the variables that appear
            slots = [i for i, e in enumerate(exps) if e]
            budget = self.cutoff - base

            def spread(k, remaining, extra):
                if k == len(slots):
                    key = tuple(
                        e + (extra[slots.index(i)] if i in slots else 0)
                        for i, e in enumerate(exps)
                    )
                    mult = BivarPoly.one()
                    for pos, m in zip(slots, extra):
                        mult = mult * (c**m) * pt.binom(exps[pos] - 1 + m, m)
                    val = coeff * mult
                    if val:
                        s = out.get(key, BivarPoly.zero()) + val
                        if s:
                            out[key] = s
                        elif key in out:
                            del out[key]
                    return
                for m in range(remaining + 1):
                    spread(k + 1, remaining - m, extra + [m])

            spread(0, budget, [])
        return TruncatedSeries(self.nvars, self.cutoff, out)

    # -- symmetry and Schur conversion ---------------------------------------

    def is_symmetric(self):
        """Full check against all adjacent-transposition images."""
        for k in range(self.nvars - 1):
            for exps, c in self.terms.items():
                swapped = list(exps)
                swapped[k], swapped[k + 1] = swapped[k + 1], swapped[k]
                if self.terms.get(tuple(swapped), BivarPoly.zero()) != c:
                    return False
        return True

    def to_schur(self):
        """Expand a symmetric series in the Schur basis by monomial peeling.

        Coefficients are exact for keys of weight <= cutoff and length <=
        nvars; longer partitions are invisible in this many variables.
        Raises on non-symmetric input or a non-vanishing residue.
        """
        if not self.is_symmetric():
            raise ValueError("series is not symmetric")
        by_degree = {}
        for exps, c in self.terms.items():
            by_degree.setdefault(sum(exps), {})[exps] = c
        coeffs = {}
        for d in sorted(by_degree):
            comp = by_degree[d]
            while comp:
                cands = [e for e in comp if _is_weakly_decreasing(e)]
                if not cands:
                    raise NonDivisibleError("non-zero residue while peeling")
                lead = max(cands)
                c = comp[lead]
                lam = pt.normalize(lead)
                coeffs[lam] = c
                for exps, mult in _ssyt_monomials(lam, self.nvars).items():
                    s = comp.get(exps, BivarPoly.zero()) - c * mult
                    if s:
                        comp[exps] = s
                    else:
                        comp.pop(exps, None)
        return SchurExpansion(coeffs, self.cutoff)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=lambda e: (sum(e), e)):
            c = self.terms[exps]
            mono = "*".join(
                ("x%d" % (i + 1) if e == 1 else "x%d^%d" % (i + 1, e))
                for i, e in enumerate(exps)
                if e
            )
            if self.nvars == 1:
                mono = mono.replace("x1", "x")
            if not mono:
                parts.append("(%s)" % c if len(c.terms) > 1 else str(c))
            elif c == 1:
                parts.append(mono)
            elif len(c.terms) == 1:
                parts.append("%s*%s" % (c, mono))
            else:
                parts.append("(%s)*%s" % (c, mono))
        return " + ".join(parts)

    __repr__ = __str__


def _is_weakly_decreasing(exps):
    return all(exps[i] >= exps[i + 1] for i in range(len(exps) - 1))


_SSYT_CACHE = {}


def _ssyt_monomials(lam, nvars):
    """Monomial expansion of s_lam(x_1..x_nvars): {exponent vector: count}."""
    key = (lam, nvars)
    cached = _SSYT_CACHE.get(key)
    if cached is not None:
        return cached
    out = {}
    if len(lam) <= nvars:
        cells = [(r, c) for r in range(len(lam)) for c in range(lam[r])]
        filling = {}

        def rec(idx, content):
            if idx == len(cells):
                out[tuple(content)] = out.get(tuple(content), 0) + 1
                return
            r, c = cells[idx]
            lo = filling.get((r, c - 1), 1)
            above = filling.get((r - 1, c))
            if above is not None and above + 1 > lo:
                lo = above + 1
            for v in range(lo, nvars + 1):
                filling[(r, c)] = v
                content[v - 1] += 1
                rec(idx + 1, content)
                content[v - 1] -= 1
                del filling[(r, c)]

        rec(0, [0] * nvars)
    _SSYT_CACHE[key] = out
    return out


def schur_polynomial(lam, nvars, cutoff):
    """s_lam(x_1..x_n) as a truncated series; zero if lam has too many rows."""
    lam = pt.normalize(lam)
    if len(lam) > nvars or pt.weight(lam) > cutoff:
        return TruncatedSeries.zero(nvars, cutoff)
    terms = {e: BivarPoly.const(m) for e, m in _ssyt_monomials(lam, nvars).items()}
    return TruncatedSeries(nvars, cutoff, terms)


def hk_polynomial(k, nvars, cutoff):
    """h_k(x_1..x_n), exact homogeneous polynomial (zero above the cutoff)."""
    if k < 0:
        return TruncatedSeries.zero(nvars, cutoff)
    if k == 0:
        return TruncatedSeries.one(nvars, cutoff)
    if k > cutoff:
        return TruncatedSeries.zero(nvars, cutoff)
    terms = {}
    for combo in combinations_with_replacement(range(nvars), k):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        terms[tuple(exps)] = BivarPoly.one()
    return TruncatedSeries(nvars, cutoff, terms)


def ek_polynomial(k, nvars, cutoff):
    """e_k(x_1..x_n), exact homogeneous polynomial (zero for k > nvars)."""
    if k < 0 or k > nvars:
        return TruncatedSeries.zero(nvars, cutoff)
    if k == 0:
        return TruncatedSeries.one(nvars, cutoff)
    if k > cutoff:
        return TruncatedSeries.zero(nvars, cutoff)
    terms = {}
    for combo in combinations(range(nvars), k):
        exps = [0] * nvars
        for i in combo:
            exps[i] = 1
        terms[tuple(exps)] = BivarPoly.one()
    return TruncatedSeries(nvars, cutoff, terms)


def divide_by_linear_difference(series, i, j, complete):
    """Exact division by (x_i - x_j), valid through total degree complete-1.

    The numerator must be divisible; a residue at degree <= complete raises
    NonDivisibleError.
    """
    layers = {}
    top = 0
    for exps, c in series.terms.items():
        k = exps[i]
        rest = list(exps)
        rest[i] = 0
        layers.setdefault(k, {})[tuple(rest)] = c
        top = max(top, k)
    quotient = {}
    carry = {}  # Q_k as {exps-with-x_i-zero: coeff}
    for k in range(top, 0, -1):
        newq = dict(layers.get(k, {}))
        for exps, c in carry.items():
            lifted = list(exps)
            lifted[j] += 1
            key = tuple(lifted)
            s = newq.get(key, BivarPoly.zero()) + c
            if s:
                newq[key] = s
            elif key in newq:
                del newq[key]
        for exps, c in newq.items():
            full = list(exps)
            full[i] = k - 1
            quotient[tuple(full)] = c
        carry = newq
    residue = dict(layers.get(0, {}))
    for exps, c in carry.items():
        lifted = list(exps)
        lifted[j] += 1
        key = tuple(lifted)
        s = residue.get(key, BivarPoly.zero()) + c
        if s:
            residue[key] = s
        elif key in residue:
            del residue[key]
    for exps, c in residue.items():
        if sum(exps) <= complete and c:
            raise NonDivisibleError("series not divisible by x%d - x%d" % (i + 1, j + 1))
    return TruncatedSeries(series.nvars, series.cutoff, quotient).truncate(complete - 1)


def divide_by_vandermonde(series, final_cutoff):
    """Divide by prod_{i<j} (x_i - x_j); the input must be skew-symmetric.

    The numerator should carry an over-truncation margin of n(n-1)/2 above
    final_cutoff so that the quotient is complete through final_cutoff.
    """
    n = series.nvars
    complete = series.cutoff
    out = series
    for i in range(n):
        for j in range(i + 1, n):
            out = divide_by_linear_difference(out, i, j, complete)
            complete -= 1
    if complete < final_cutoff:
        raise ValueError("numerator cutoff leaves quotient short of target")
    return out.truncate(final_cutoff)
