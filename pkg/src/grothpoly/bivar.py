"""Exact bivariate polynomials in the deformation parameters.

Everything in this library is computed over Z[a, b] where the two generic
parameters are rendered ``a`` and ``b`` in text output.  Coefficients are
Python ints, so arithmetic is exact at any size.
"""

from fractions import Fraction


class BivarPoly:
    """A polynomial in two parameters with integer coefficients.

    Terms are stored as ``{(i, j): c}`` for ``c * a^i * b^j``; zero
    coefficients are never stored.  Instances are immutable: every operation
    returns a fresh polynomial, so values can be shared freely between
    threads and used as dictionary values.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, c in terms.items():
                if c:
                    i, j = key
                    clean[(int(i), int(j))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BivarPoly is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero():
        return _ZERO

    @staticmethod
    def one():
        return _ONE

    @staticmethod
    def const(c):
        if c == 0:
            return _ZERO
        return BivarPoly({(0, 0): int(c)})

    @staticmethod
    def alpha():
        return _ALPHA

    @staticmethod
    def beta():
        return _BETA

    @staticmethod
    def term(c, i, j):
        return BivarPoly({(i, j): c})

    @staticmethod
    def coerce(x):
        if isinstance(x, BivarPoly):
            return x
        if isinstance(x, int):
            return BivarPoly.const(x)
        raise TypeError("cannot coerce %r to BivarPoly" % (x,))

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        other = BivarPoly.coerce(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        terms = dict(self.terms)
        for key, c in other.terms.items():
            s = terms.get(key, 0) + c
            if s:
                terms[key] = s
            else:
                del terms[key]
        out = BivarPoly.__new__(BivarPoly)
        object.__setattr__(out, "terms", terms)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = BivarPoly.__new__(BivarPoly)
        object.__setattr__(out, "terms", {k: -c for k, c in self.terms.items()})
        return out

    def __sub__(self, other):
        return self + (-BivarPoly.coerce(other))

    def __rsub__(self, other):
        return BivarPoly.coerce(other) + (-self)

    def __mul__(self, other):
        other = BivarPoly.coerce(other)
        if not self.terms or not other.terms:
            return _ZERO
        terms = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                s = terms.get(key, 0) + c1 * c2
                if s:
                    terms[key] = s
                elif key in terms:
                    del terms[key]
        out = BivarPoly.__new__(BivarPoly)
        object.__setattr__(out, "terms", terms)
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = BivarPoly.const(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- queries and maps ----------------------------------------------

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree in (a, b); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(i + j for i, j in self.terms)

    def coefficient(self, i, j):
        return self.terms.get((i, j), 0)

    def swap_params(self):
        """The bar involution: exchange the two parameters."""
        return BivarPoly({(j, i): c for (i, j), c in self.terms.items()})

    def negate_params(self):
        """Substitute (a, b) -> (-a, -b)."""
        return BivarPoly(
            {(i, j): (c if (i + j) % 2 == 0 else -c) for (i, j), c in self.terms.items()}
        )

    def substitute(self, a_value, b_value):
        """Exact polynomial substitution of both parameters."""
        a_value = BivarPoly.coerce(a_value)
        b_value = BivarPoly.coerce(b_value)
        total = _ZERO
        for (i, j), c in self.terms.items():
            total = total + BivarPoly.const(c) * a_value**i * b_value**j
        return total

    def evaluate(self, a, b):
        """Exact evaluation; accepts ints or Fractions."""
        total = Fraction(0) if isinstance(a, Fraction) or isinstance(b, Fraction) else 0
        for (i, j), c in self.terms.items():
            total += c * a**i * b**j
        return total

    def has_nonnegative_coeffs(self):
        return all(c >= 0 for c in self.terms.values())

    def in_alpha_gt_beta(self):
        """True iff every term has the a-exponent strictly above the b-exponent."""
        return all(i > j for (i, j) in self.terms)

    def in_alpha_ge_beta(self):
        return all(i >= j for (i, j) in self.terms)

    def has_free_term(self):
        """True iff some term is (a*b)^i with i >= 1."""
        return any(i == j and i >= 1 for (i, j) in self.terms)

    def split_alpha_beta(self):
        """Split into (a>b part, a=b part, a<b part)."""
        gt, eq, lt = {}, {}, {}
        for (i, j), c in self.terms.items():
            (gt if i > j else eq if i == j else lt)[(i, j)] = c
        return BivarPoly(gt), BivarPoly(eq), BivarPoly(lt)

    # -- text format: sum of "c*a^i*b^j" --------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, key=lambda k: (k[0] + k[1], k[1], k[0])):
            c = self.terms[(i, j)]
            factors = []
            if abs(c) != 1 or (i == 0 and j == 0):
                factors.append(str(abs(c)))
            if i:
                factors.append("a" if i == 1 else "a^%d" % i)
            if j:
                factors.append("b" if j == 1 else "b^%d" % j)
            text = "*".join(factors)
            if not parts:
                parts.append(text if c > 0 else "-" + text)
            else:
                parts.append(("+ " if c > 0 else "- ") + text)
        return " ".join(parts)

    __repr__ = __str__

    @staticmethod
    def parse(text):
        """Parse the text format produced by __str__ (e.g. "2*a^2*b - 3")."""
        text = text.strip().replace("-", "+-")
        result = _ZERO
        for chunk in text.split("+"):
            chunk = chunk.strip()
            if not chunk:
                continue
            sign = 1
            if chunk.startswith("-"):
                sign = -1
                chunk = chunk[1:].strip()
            coeff, i, j = 1, 0, 0
            for factor in chunk.split("*"):
                factor = factor.strip()
                if not factor:
                    continue
                if factor[0] == "a":
                    i = int(factor[2:]) if "^" in factor else 1
                elif factor[0] == "b":
                    j = int(factor[2:]) if "^" in factor else 1
                else:
                    coeff = int(factor)
            result = result + BivarPoly.term(sign * coeff, i, j)
        return result

    def to_json(self):
        """Triples [i, j, "c"] sorted by exponent; coefficients as strings."""
        return [[i, j, str(c)] for (i, j), c in sorted(self.terms.items())]

    @staticmethod
    def from_json(data):
        return BivarPoly({(int(i), int(j)): int(c) for i, j, c in data})


_ZERO = BivarPoly()
_ONE = BivarPoly({(0, 0): 1})
_ALPHA = BivarPoly({(1, 0): 1})
_BETA = BivarPoly({(0, 1): 1})

ZERO = _ZERO
ONE = _ONE
ALPHA = _ALPHA
BETA = _BETA
A_PLUS_B = _ALPHA + _BETA
