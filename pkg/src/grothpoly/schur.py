"""Schur-basis arithmetic over Z[a, b].

A SchurExpansion is a finite map {partition: BivarPoly}.  An expansion with
``cutoff=None`` is exact; ``cutoff=D`` marks the truncation of an infinite
element of the completion of the symmetric-function ring, faithful on all
keys of weight <= D.  Operations propagate the minimum of the cutoffs.
"""

from .bivar import BivarPoly, A_PLUS_B
from . import partitions as pt


def _min_cutoff(c1, c2):
    if c1 is None:
        return c2
    if c2 is None:
        return c1
    return min(c1, c2)


class SchurExpansion:

    __slots__ = ("coeffs", "cutoff")

    def __init__(self, coeffs=None, cutoff=None):
        clean = {}
        if coeffs:
            for lam, c in coeffs.items():
                c = BivarPoly.coerce(c)
                if c and (cutoff is None or pt.weight(lam) <= cutoff):
                    clean[tuple(lam)] = c
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "cutoff", cutoff)

    def __setattr__(self, name, value):
        raise AttributeError("SchurExpansion is immutable")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def basis(lam, coeff=1, cutoff=None):
        return SchurExpansion({tuple(lam): BivarPoly.coerce(coeff)}, cutoff)

    @staticmethod
    def one(cutoff=None):
        return SchurExpansion.basis((), 1, cutoff)

    @staticmethod
    def zero(cutoff=None):
        return SchurExpansion({}, cutoff)

    @staticmethod
    def h(k, coeff=1):
        """The complete homogeneous generator h_k = s_(k)."""
        if k < 0:
            return SchurExpansion()
        return SchurExpansion.basis((k,) if k else (), coeff)

    @staticmethod
    def e(k, coeff=1):
        """The elementary generator e_k = s_(1^k)."""
        if k < 0:
            return SchurExpansion()
        return SchurExpansion.basis((1,) * k, coeff)

    # -- linear structure -------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = SchurExpansion.one().scale(other)
        cutoff = _min_cutoff(self.cutoff, other.cutoff)
        coeffs = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            s = coeffs.get(lam, BivarPoly.zero()) + c
            if s:
                coeffs[lam] = s
            elif lam in coeffs:
                del coeffs[lam]
        return SchurExpansion(coeffs, cutoff)

    __radd__ = __add__

    def __neg__(self):
        return SchurExpansion({lam: -c for lam, c in self.coeffs.items()}, self.cutoff)

    def __sub__(self, other):
        if isinstance(other, int):
            other = SchurExpansion.one().scale(other)
        return self + (-other)

    def scale(self, c):
        c = BivarPoly.coerce(c)
        return SchurExpansion({lam: v * c for lam, v in self.coeffs.items()}, self.cutoff)

    def __eq__(self, other):
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __bool__(self):
        return bool(self.coeffs)

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    # -- products ---------------------------------------------------------

    def __mul__(self, other):
        """Product via Littlewood-Richardson coefficients."""
        if isinstance(other, (int, BivarPoly)):
            return self.scale(other)
        cutoff = _min_cutoff(self.cutoff, other.cutoff)
        coeffs = {}
        for lam, cl in self.coeffs.items():
            wl = pt.weight(lam)
            for mu, cm in other.coeffs.items():
                w = wl + pt.weight(mu)
                if cutoff is not None and w > cutoff:
                    continue
                c = cl * cm
                for nu in pt.supersets_with_weight(lam, w):
                    m = pt.lr_coefficient(lam, mu, nu)
                    if m:
                        s = coeffs.get(nu, BivarPoly.zero()) + c * m
                        if s:
                            coeffs[nu] = s
                        elif nu in coeffs:
                            del coeffs[nu]
        return SchurExpansion(coeffs, cutoff)

    __rmul__ = __mul__

    def multiply_h(self, k, coeff=1):
        """Multiply by h_k via the Pieri rule (horizontal strips)."""
        if k == 0:
            return self.scale(coeff)
        coeff = BivarPoly.coerce(coeff)
        coeffs = {}
        for lam, c in self.coeffs.items():
            if self.cutoff is not None and pt.weight(lam) + k > self.cutoff:
                continue
            cc = c * coeff
            for mu in pt.add_horizontal_strips(lam, k):
                s = coeffs.get(mu, BivarPoly.zero()) + cc
                if s:
                    coeffs[mu] = s
                elif mu in coeffs:
                    del coeffs[mu]
        return SchurExpansion(coeffs, self.cutoff)

    def multiply_e(self, k, coeff=1):
        """Multiply by e_k via the Pieri rule (vertical strips)."""
        if k == 0:
            return self.scale(coeff)
        coeff = BivarPoly.coerce(coeff)
        coeffs = {}
        for lam, c in self.coeffs.items():
            if self.cutoff is not None and pt.weight(lam) + k > self.cutoff:
                continue
            cc = c * coeff
            for mu in pt.add_vertical_strips(lam, k):
                s = coeffs.get(mu, BivarPoly.zero()) + cc
                if s:
                    coeffs[mu] = s
                elif mu in coeffs:
                    del coeffs[mu]
        return SchurExpansion(coeffs, self.cutoff)

    # -- involutions and specializations ----------------------------------

    def omega(self):
        """Conjugate every key; the standard involution on the Schur basis."""
        return SchurExpansion(
            {pt.conjugate(lam): c for lam, c in self.coeffs.items()}, self.cutoff
        )

    def bar(self):
        """Swap the two parameters in every coefficient."""
        return SchurExpansion(
            {lam: c.swap_params() for lam, c in self.coeffs.items()}, self.cutoff
        )

    def negate_params(self):
        return SchurExpansion(
            {lam: c.negate_params() for lam, c in self.coeffs.items()}, self.cutoff
        )

    def negate_x(self):
        """Substitute x -> -x: s_lam(-x) = (-1)^|lam| s_lam'(x)."""
        return SchurExpansion(
            {
                pt.conjugate(lam): (c if pt.weight(lam) % 2 == 0 else -c)
                for lam, c in self.coeffs.items()
            },
            self.cutoff,
        )

    def coefficient(self, lam):
        return self.coeffs.get(tuple(lam), BivarPoly.zero())

    def truncate(self, cutoff):
        return SchurExpansion(self.coeffs, _min_cutoff(self.cutoff, cutoff))

    def restrict(self, max_weight=None, max_length=None):
        """Keep only keys within the given bounds (for comparisons)."""
        coeffs = {
            lam: c
            for lam, c in self.coeffs.items()
            if (max_weight is None or pt.weight(lam) <= max_weight)
            and (max_length is None or len(lam) <= max_length)
        }
        return SchurExpansion(coeffs, self.cutoff)

    def support(self):
        return sorted(self.coeffs, key=_display_key)

    def max_weight(self):
        return max((pt.weight(lam) for lam in self.coeffs), default=0)

    def evaluate_ones(self, n, alpha, beta):
        """Exact value at x = 1^n with the parameters specialized."""
        total = 0
        for lam, c in self.coeffs.items():
            total += c.evaluate(alpha, beta) * pt.hook_content_eval(lam, n)
        return total

    def evaluate_neg_ones(self, n, alpha, beta):
        """Exact value at x = (-1)^n with the parameters specialized."""
        total = 0
        for lam, c in self.coeffs.items():
            sign = -1 if pt.weight(lam) % 2 else 1
            total += sign * c.evaluate(alpha, beta) * pt.hook_content_eval(lam, n)
        return total

    # -- pairing ------------------------------------------------------------

    def hall_inner(self, other):
        """Hall inner product; the left factor must be exact (no cutoff)."""
        if self.cutoff is not None:
            raise ValueError("left argument of the Hall pairing must be exact")
        total = BivarPoly.zero()
        for lam, c in self.coeffs.items():
            d = other.coeffs.get(lam)
            if d is not None:
                total = total + c * d
        return total

    # -- rendering ------------------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for lam in self.support():
            c = self.coeffs[lam]
            sym = "s[%s]" % pt.format_partition(lam) if lam else "1"
            if c == 1:
                parts.append(sym)
            elif len(c.terms) == 1:
                if lam:
                    parts.append("%s*%s" % (c, sym))
                else:
                    parts.append(str(c))
            else:
                if lam:
                    parts.append("(%s)*%s" % (c, sym))
                else:
                    parts.append("(%s)" % c)
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self):
        return {
            "coeffs": [
                {"partition": list(lam), "poly": self.coeffs[lam].to_json()}
                for lam in self.support()
            ],
            "cutoff": self.cutoff,
        }

    @staticmethod
    def from_json(data):
        coeffs = {
            tuple(entry["partition"]): BivarPoly.from_json(entry["poly"])
            for entry in data["coeffs"]
        }
        return SchurExpansion(coeffs, data.get("cutoff"))


def _display_key(lam):
    return (pt.weight(lam), tuple(-p for p in lam))


def hook_product(j, m):
    """e_j * h_m as an exact expansion (Pieri for a column times a row)."""
    if j < 0 or m < 0:
        return SchurExpansion()
    if j == 0:
        return SchurExpansion.h(m)
    if m == 0:
        return SchurExpansion.e(j)
    coeffs = {(m,) + (1,) * j: BivarPoly.one(), (m + 1,) + (1,) * (j - 1): BivarPoly.one()}
    return SchurExpansion(coeffs)


def h_substituted(k, c, cutoff):
    """h_k(x/(1 - c x)) as a truncated expansion, for c in Z[a, b].

    From prod 1/(1 - t x_i/(1 - c x_i)) = E(-c) H(c + t):
    h_k(x/(1-cx)) = sum_{j, m >= k} (-c)^j C(m, k) c^(m-k) e_j h_m.
    """
    c = BivarPoly.coerce(c)
    out = SchurExpansion.zero(cutoff)
    for j in range(0, cutoff + 1):
        cj = (-c) ** j
        if j and not cj and c.is_zero():
            break
        for m in range(k, cutoff - j + 1):
            w = pt.binom(m, k) * cj * c ** (m - k)
            if w:
                out = out + hook_product(j, m).scale(w).truncate(cutoff)
    return out


def e_substituted(k, c, cutoff):
    """e_k(x/(1 - c x)) as a truncated expansion, for c in Z[a, b].

    From prod (1 + t x_i/(1 - c x_i)) = E(t - c) H(c):
    e_k(x/(1-cx)) = sum_{j >= k, m} C(j, k) (-c)^(j-k) c^m e_j h_m.
    """
    c = BivarPoly.coerce(c)
    out = SchurExpansion.zero(cutoff)
    for j in range(k, cutoff + 1):
        w1 = pt.binom(j, k) * (-c) ** (j - k)
        if not w1:
            continue
        for m in range(0, cutoff - j + 1):
            w = w1 * c**m
            if w:
                out = out + hook_product(j, m).scale(w).truncate(cutoff)
    return out


def canonical_h_element(k, g_row_expansions, cutoff):
    """The deformed complete generator built from single-row expansions.

    g_row_expansions maps i -> expansion of the row element of index i;
    index 0 contributes the constant 1.  The element of index k is
    row(k) + (a+b) row(k+1), with row(0) meaning 1.
    """
    base = SchurExpansion.one(cutoff) if k == 0 else g_row_expansions[k]
    return base + g_row_expansions[k + 1].scale(A_PLUS_B)
