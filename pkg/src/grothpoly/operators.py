"""Column box operators, their deformation, and the operator series.

Vectors over partitions are plain dicts {partition: coefficient}; the
coefficient ring varies (polynomials for relation checks, truncated series
for the skew series evaluation), so the helpers are generic over anything
with +, *, and truthiness.
"""

from .bivar import BivarPoly, ALPHA, A_PLUS_B
from . import partitions as pt
from .series import TruncatedSeries


def column_height(lam, i):
    """Number of cells in column i (1-based)."""
    return sum(1 for p in lam if p >= i)


def add_box_in_column(lam, i):
    """lam plus a box in column i, or None when illegal."""
    r = column_height(lam, i)
    if pt.part(lam, r) != i - 1:
        return None
    grown = list(lam) + [0]
    grown[r] = i
    return pt.normalize(grown)


def remove_box_in_column(lam, i):
    """lam minus a box in column i, or None when illegal."""
    r = column_height(lam, i) - 1
    if r < 0 or pt.part(lam, r) != i:
        return None
    shrunk = list(lam)
    shrunk[r] = i - 1
    return pt.normalize(shrunk)


def _accumulate(vec, lam, coeff):
    s = vec.get(lam)
    s = coeff if s is None else s + coeff
    if s:
        vec[lam] = s
    elif lam in vec:
        del vec[lam]


def apply_u(i, vec):
    out = {}
    for lam, c in vec.items():
        grown = add_box_in_column(lam, i)
        if grown is not None:
            _accumulate(out, grown, c)
    return out


def apply_d(i, vec):
    out = {}
    for lam, c in vec.items():
        shrunk = remove_box_in_column(lam, i)
        if shrunk is not None:
            _accumulate(out, shrunk, c)
    return out


def apply_ud(i, vec):
    """u_i d_i: identity on shapes with a removable box in column i, else 0."""
    out = {}
    for lam, c in vec.items():
        if remove_box_in_column(lam, i) is not None:
            _accumulate(out, lam, c)
    return out


def apply_deformed(i, vec):
    """u_i (1 + (a+b) d_i) - a, linearly extended."""
    out = {}
    for lam, c in vec.items():
        grown = add_box_in_column(lam, i)
        if grown is not None:
            _accumulate(out, grown, c)
        if remove_box_in_column(lam, i) is not None:
            _accumulate(out, lam, c * A_PLUS_B)
        _accumulate(out, lam, c * (-ALPHA))
    return out


def _apply_growth(i, vec):
    """u_i (1 + (a+b) d_i): the shape-growing part of the deformed operator."""
    out = {}
    for lam, c in vec.items():
        grown = add_box_in_column(lam, i)
        if grown is not None:
            _accumulate(out, grown, c)
        if remove_box_in_column(lam, i) is not None:
            _accumulate(out, lam, c * A_PLUS_B)
    return out


def apply_C_series(state, var, nvars, cutoff, max_col):
    """One factor of the ascending operator series in the given variable.

    state maps partitions to truncated-series coefficients; the geometric
    multiplier x/(1 - a x) is applied with every operator use.
    """
    geom = TruncatedSeries.geometric(var, ALPHA, nvars, cutoff)
    for i in range(1, max_col + 1):
        new_state = dict(state)
        for lam, coeff in state.items():
            if i > pt.part(lam, 0) + 1:
                continue
            scaled = coeff * geom
            if not scaled:
                continue
            for target, c in _apply_growth(i, {lam: BivarPoly.one()}).items():
                _accumulate(new_state, target, scaled.scale(c) if isinstance(c, BivarPoly) else scaled * c)
        state = new_state
    return state


def apply_D_series(state, var, nvars, cutoff, max_col):
    """One factor of the descending geometric operator series.

    Uses the multiplier x/(1 + a x) and iterates the growth operator until
    the degree budget is exhausted, highest column first.
    """
    geom = TruncatedSeries.geometric(var, -ALPHA, nvars, cutoff)
    for i in range(max_col, 0, -1):
        new_state = dict(state)
        layer = state
        while True:
            grown = {}
            for lam, coeff in layer.items():
                if i > pt.part(lam, 0) + 1:
                    continue
                scaled = coeff * geom
                if not scaled:
                    continue
                for target, c in _apply_growth(i, {lam: BivarPoly.one()}).items():
                    _accumulate(grown, target, scaled.scale(c))
            if not grown:
                break
            for target, coeff in grown.items():
                _accumulate(new_state, target, coeff)
            layer = grown
        state = new_state
    return state


def skew_G_series(outer, inner, nvars, cutoff):
    """The skew G function from the ascending operator series.

    Equals the bialternant when inner is empty; for a proper base shape the
    boundary factors of the deformation stay in, which is what makes the
    skew family multiplicative.
    """
    outer, inner = pt.normalize(outer), pt.normalize(inner)
    if not pt.contains(outer, inner):
        return TruncatedSeries.zero(nvars, cutoff)
    max_col = pt.part(inner, 0) + cutoff + 1
    state = {inner: TruncatedSeries.one(nvars, cutoff)}
    for var in range(nvars):
        state = apply_C_series(state, var, nvars, cutoff, max_col)
    return state.get(outer, TruncatedSeries.zero(nvars, cutoff))


def skew_G_dual_series(outer, inner, nvars, cutoff):
    """The descending-series companion; computes the conjugate-parameter dual."""
    outer, inner = pt.normalize(outer), pt.normalize(inner)
    if not pt.contains(outer, inner):
        return TruncatedSeries.zero(nvars, cutoff)
    max_col = pt.part(inner, 0) + cutoff + 1
    state = {inner: TruncatedSeries.one(nvars, cutoff)}
    for var in range(nvars):
        state = apply_D_series(state, var, nvars, cutoff, max_col)
    return state.get(outer, TruncatedSeries.zero(nvars, cutoff))


def branching_coeff_G(outer, inner):
    """Single-variable branching factor for a horizontal strip outer/inner.

    Returns (numerator coefficients {power: poly}, denominator exponent e)
    meaning num(x) / (1 - a x)^e; None when outer/inner is not a horizontal
    strip.  The numerator is x^|outer/inner| (1 + b x)^r with r counting the
    rows of inner / (outer minus its first row).
    """
    outer, inner = pt.normalize(outer), pt.normalize(inner)
    if not pt.is_horizontal_strip(outer, inner):
        return None
    size = pt.skew_size(outer, inner)
    bar = pt.drop_first_row(outer)
    r = pt.skew_stats(inner, bar)[0]
    num = {}
    for s in range(r + 1):
        num[size + s] = BivarPoly.term(pt.binom(r, s), 0, s)
    return num, size + r


def branching_series_G(outer, inner, cutoff):
    """The branching factor as a single-variable truncated series."""
    data = branching_coeff_G(outer, inner)
    if data is None:
        return TruncatedSeries.zero(1, cutoff)
    num, e = data
    terms = {}
    for power, c in num.items():
        for m in range(cutoff - power + 1):
            mult = pt.binom(e - 1 + m, m)
            if mult:
                key = (power + m,)
                prev = terms.get(key, BivarPoly.zero())
                terms[key] = prev + c * BivarPoly.term(mult, m, 0)
    return TruncatedSeries(1, cutoff, terms)


# -- relation verification ---------------------------------------------------


def _compose(ops):
    def run(vec):
        for op in reversed(ops):
            vec = op(vec)
        return vec

    return run


def _u(i):
    return lambda vec: apply_u(i, vec)


def _d(i):
    return lambda vec: apply_d(i, vec)


def _w(i):
    return lambda vec: apply_deformed(i, vec)


def verify_relations(max_size, max_col):
    """Check the operator relations on all small basis partitions.

    Returns a report dict with one entry per relation family; each lists
    the violations found (empty lists mean the relation holds on the
    tested range).
    """
    basis = [
        lam
        for lam in pt.partitions_up_to(max_size)
        if not lam or lam[0] <= max_col
    ]

    def equal_on_basis(left, right):
        bad = []
        for lam in basis:
            if left({lam: BivarPoly.one()}) != right({lam: BivarPoly.one()}):
                bad.append(lam)
        return bad

    report = {}
    cols = range(1, max_col + 1)
    fails = []
    for i in cols:
        for j in cols:
            if abs(i - j) >= 2:
                lhs = _compose([_u(i), _u(j)])
                rhs = _compose([_u(j), _u(i)])
                fails += [(i, j, lam) for lam in equal_on_basis(lhs, rhs)]
    report["distant-commutation"] = fails

    fails = []
    for i in cols:
        if i + 1 > max_col:
            continue
        lhs = _compose([_u(i + 1), _u(i), _u(i)])
        rhs = _compose([_u(i), _u(i + 1), _u(i)])
        fails += [(i, "uu", lam) for lam in equal_on_basis(lhs, rhs)]
        lhs = _compose([_u(i + 1), _u(i), _u(i + 1)])
        rhs = _compose([_u(i + 1), _u(i + 1), _u(i)])
        fails += [(i, "uuu", lam) for lam in equal_on_basis(lhs, rhs)]
    report["local-knuth"] = fails

    fails = []
    for i in cols:
        for j in cols:
            if i != j:
                lhs = _compose([_d(j), _u(i)])
                rhs = _compose([_u(i), _d(j)])
                fails += [(i, j, lam) for lam in equal_on_basis(lhs, rhs)]
    for i in cols:
        if i + 1 <= max_col:
            lhs = _compose([_d(i + 1), _u(i + 1)])
            rhs = _compose([_u(i), _d(i)])
            fails += [(i, "du=ud", lam) for lam in equal_on_basis(lhs, rhs)]
    lhs = _compose([_d(1), _u(1)])
    fails += [(1, "du=1", lam) for lam in equal_on_basis(lhs, lambda v: dict(v))]
    report["conjugate-duality"] = fails

    def ud(i):
        return lambda vec: apply_ud(i, vec)

    def du(i):
        return _compose([_u(i), _d(i)])

    fails = []
    for i in cols:
        pairs = []
        if i - 1 >= 1:
            pairs.append((ud(i), ud(i - 1)))
            if i + 1 <= max_col:
                pairs.append((_compose([_u(i + 1), _d(i + 1)]), ud(i - 1)))
        pairs.append((ud(i), du(i)))
        if i + 1 <= max_col:
            pairs.append((ud(i), _compose([_u(i + 1), _u(i)])))
        for a, b in pairs:
            lhs = _compose([a, b])
            rhs = _compose([b, a])
            fails += [(i, lam) for lam in equal_on_basis(lhs, rhs)]
    report["projector-commutation"] = fails

    fails = []
    for i in cols:
        for j in cols:
            if abs(i - j) >= 2:
                lhs = _compose([_w(i), _w(j)])
                rhs = _compose([_w(j), _w(i)])
                fails += [(i, j, lam) for lam in equal_on_basis(lhs, rhs)]
        if i + 1 <= max_col:
            # [w_(i+1) w_i, w_i + w_(i+1)] = 0
            prod = _compose([_w(i + 1), _w(i)])

            def lin(vec, i=i):
                out = {}
                for lam, c in apply_deformed(i, vec).items():
                    _accumulate(out, lam, c)
                for lam, c in apply_deformed(i + 1, vec).items():
                    _accumulate(out, lam, c)
                return out

            lhs = _compose([prod, lin])
            rhs = _compose([lin, prod])
            fails += [(i, "degenerate-hecke", lam) for lam in equal_on_basis(lhs, rhs)]
    report["deformed-relations"] = fails
    return report
