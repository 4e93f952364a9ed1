"""Exhaustive weighted tableau and lattice-path enumeration.

Every family here is an independent oracle for one of the algebraic
pipelines: hook-valued (and set/multiset-valued) tableaux for the G series,
rim border tableaux for the dual polynomials, elegant and dual hook fillings
and nonintersecting path systems for the connection coefficients.
"""

from .bivar import BivarPoly, ALPHA, BETA, A_PLUS_B
from . import partitions as pt
from .series import TruncatedSeries


# -- hook-valued, set-valued, multiset-valued tableaux ----------------------


def hook_weight_and_content(cells):
    """Weight and entry multiset of an explicit hook filling.

    cells maps (row, col) -> (corner, arm tuple, leg tuple); the weight is
    a^(total arm length) b^(total leg length).
    """
    a = sum(len(arm) for (_, arm, _) in cells.values())
    b = sum(len(leg) for (_, _, leg) in cells.values())
    content = {}
    for corner, arm, leg in cells.values():
        for v in (corner,) + tuple(arm) + tuple(leg):
            content[v] = content.get(v, 0) + 1
    return BivarPoly.term(1, a, b), content


def is_valid_hook_tableau(lam, cells):
    """Check hook validity per cell and the weak/strict order between cells."""
    lam = pt.normalize(lam)
    expected = {(r, c) for r in range(len(lam)) for c in range(lam[r])}
    if set(cells) != expected:
        return False
    for corner, arm, leg in cells.values():
        if any(arm[i] > arm[i + 1] for i in range(len(arm) - 1)):
            return False
        if any(leg[i] >= leg[i + 1] for i in range(len(leg) - 1)):
            return False
        if arm and arm[0] < corner:
            return False
        if leg and leg[0] <= corner:
            return False
    for (r, c), (corner, arm, leg) in cells.items():
        top = max((corner,) + tuple(arm) + tuple(leg))
        right = cells.get((r, c + 1))
        if right is not None and top > right[0]:  # min of a hook is its corner
            return False
        below = cells.get((r + 1, c))
        if below is not None and top >= below[0]:
            return False
    return True


def iter_hook_tableaux(lam, n, max_entries, family="hook"):
    """Yield (cells, weight, content) over the requested tableau family.

    family "hook": cells hold hook fillings, weight a^arms b^legs.
    family "set": single-column hooks only (sets), weight b^(extra entries).
    family "multiset": single-row hooks, weight (a+b)^(distinct-1) a^(copies).
    Entries are bounded by n and the total entry count by max_entries.
    """
    lam = pt.normalize(lam)
    cells = pt.skew_cells(lam, ())
    filling = {}

    def cell_options(r, c, budget):
        lo = 1
        left = filling.get((r, c - 1))
        if left is not None:
            lo = max(lo, left[3])
        above = filling.get((r - 1, c))
        if above is not None:
            lo = max(lo, above[3] + 1)
        for corner in range(lo, n + 1):
            if family == "set":
                # strictly increasing set, all in one column
                def grow_set(prefix, top):
                    yield prefix
                    if len(prefix) - 1 < budget:
                        for v in range(top + 1, n + 1):
                            yield from grow_set(prefix + (v,), v)

                for body in grow_set((corner,), corner):
                    legs = body[1:]
                    yield (corner, (), legs, body[-1])
            elif family == "multiset":
                def grow_mset(prefix, top):
                    yield prefix
                    if len(prefix) - 1 < budget:
                        for v in range(top, n + 1):
                            yield from grow_mset(prefix + (v,), v)

                for body in grow_mset((corner,), corner):
                    yield (corner, body[1:], (), body[-1])
            else:
                def grow_arm(arm, top):
                    yield arm
                    if len(arm) + 1 <= budget:
                        for v in range(top, n + 1):
                            yield from grow_arm(arm + (v,), v)

                for arm in grow_arm((), corner):
                    room = budget - len(arm)

                    def grow_leg(leg, top):
                        yield leg
                        if len(leg) + 1 <= room:
                            for v in range(top + 1, n + 1):
                                yield from grow_leg(leg + (v,), v)

                    for leg in grow_leg((), corner):
                        top = max((corner,) + arm + leg)
                        yield (corner, arm, leg, top)

    results = []

    def rec(idx, used):
        if idx == len(cells):
            flat = {
                pos: (corner, arm, leg)
                for pos, (corner, arm, leg, _) in filling.items()
            }
            weight, content = _family_weight(flat, family)
            results.append((dict(flat), weight, content))
            return
        r, c = cells[idx]
        remaining = len(cells) - idx - 1
        budget = max_entries - used - remaining - 1  # extras beyond the corner
        if budget < 0:
            return
        for option in cell_options(r, c, budget):
            filling[(r, c)] = option
            size = 1 + len(option[1]) + len(option[2])
            rec(idx + 1, used + size)
            del filling[(r, c)]

    rec(0, 0)
    return results


def _family_weight(flat, family):
    if family == "hook":
        return hook_weight_and_content(flat)
    content = {}
    weight = BivarPoly.one()
    for corner, arm, leg in flat.values():
        body = (corner,) + tuple(arm) + tuple(leg)
        for v in body:
            content[v] = content.get(v, 0) + 1
        if family == "set":
            weight = weight * BETA ** (len(body) - 1)
        else:
            distinct = len(set(body))
            weight = weight * A_PLUS_B ** (distinct - 1) * ALPHA ** (len(body) - distinct)
    return weight, content


def enum_G_tableaux(lam, family, n, max_entries):
    """Tableau generating series for the G function, truncated by entry count."""
    out = TruncatedSeries.zero(n, max_entries)
    terms = {}
    for _, weight, content in iter_hook_tableaux(lam, n, max_entries, family):
        exps = [0] * n
        for v, k in content.items():
            exps[v - 1] = k
        key = tuple(exps)
        s = terms.get(key, BivarPoly.zero()) + weight
        if s:
            terms[key] = s
        elif key in terms:
            del terms[key]
    return out + TruncatedSeries(n, max_entries, terms)


# -- reverse plane partitions and rim border tableaux -----------------------


def iter_rpp(outer, inner, n):
    """All fillings of outer/inner weakly increasing in rows and columns."""
    cells = pt.skew_cells(outer, inner)
    filling = {}
    results = []

    def rec(idx):
        if idx == len(cells):
            results.append(dict(filling))
            return
        r, c = cells[idx]
        lo = max(filling.get((r, c - 1), 1), filling.get((r - 1, c), 1))
        for v in range(lo, n + 1):
            filling[(r, c)] = v
            rec(idx + 1)
            del filling[(r, c)]

    rec(0)
    return results


def value_regions(filling):
    """Split a filling into {value: set of cells}."""
    regions = {}
    for cell, v in filling.items():
        regions.setdefault(v, set()).add(cell)
    return regions


def border_of(region):
    """Cells with no same-value cell one step up-left on their diagonal."""
    return {(r, c) for (r, c) in region if (r - 1, c - 1) not in region}


def _components(cellset):
    seen = set()
    comps = []
    for cell in sorted(cellset):
        if cell in seen:
            continue
        comp = set()
        stack = [cell]
        seen.add(cell)
        while stack:
            r, c = stack.pop()
            comp.add((r, c))
            for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                if nb in cellset and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        comps.append(comp)
    return comps


def _adjacency_counts(comp):
    horiz = sum(1 for (r, c) in comp if (r, c + 1) in comp)
    vert = sum(1 for (r, c) in comp if (r + 1, c) in comp)
    return horiz, vert


def rbt_series(outer, inner, n):
    """Generating polynomial of all rim border tableaux on outer/inner.

    For each weakly increasing filling, the borders of equal-value regions
    are split into ribbons by cutting any subset of their horizontal
    adjacencies; a ribbon of width w and height h weighs a^(w-1) b^(h-1),
    interior cells weigh (a+b), and the monomial counts ribbons per value.
    The cut choices are summed in closed form per border component.
    """
    cutoff = pt.skew_size(outer, inner)
    total = TruncatedSeries.zero(n, cutoff)
    for filling in iter_rpp(outer, inner, n):
        contrib = TruncatedSeries.one(n, cutoff)
        for v, region in value_regions(filling).items():
            border = border_of(region)
            inner_count = len(region) - len(border)
            contrib = contrib.scale(A_PLUS_B**inner_count)
            xv = TruncatedSeries.variable(v - 1, n, cutoff)
            for comp in _components(border):
                horiz, vert = _adjacency_counts(comp)
                factor = xv.scale(BETA**vert)
                for _ in range(horiz):
                    factor = factor * (xv + ALPHA)
                contrib = contrib * factor
        total = total + contrib
    return total


def iter_rbt(outer, inner, n):
    """Yield (filling, ribbons, weight, content) for every rim border tableau.

    ribbons is a list of (value, frozenset of cells); weight carries
    a^wt b^ht (a+b)^interior and content counts ribbons per value.
    """
    for filling in iter_rpp(outer, inner, n):
        per_value = []
        interior = 0
        for v, region in sorted(value_regions(filling).items()):
            border = border_of(region)
            interior += len(region) - len(border)
            comps = _components(border)
            per_value.append((v, comps))

        def decompositions(comps_list, acc):
            if not comps_list:
                yield list(acc)
                return
            (v, comps), rest = comps_list[0], comps_list[1:]
            cuts_spaces = []
            for comp in comps:
                hadj = sorted(
                    (r, c) for (r, c) in comp if (r, c + 1) in comp
                )
                cuts_spaces.append((comp, hadj))

            def per_comp(idx, ribbons):
                if idx == len(cuts_spaces):
                    yield from decompositions(rest, acc + [(v, list(ribbons))])
                    return
                comp, hadj = cuts_spaces[idx]
                for mask in range(1 << len(hadj)):
                    cuts = {hadj[t] for t in range(len(hadj)) if mask >> t & 1}
                    pieces = _cut_component(comp, cuts)
                    ribbons.extend(pieces)
                    yield from per_comp(idx + 1, ribbons)
                    del ribbons[len(ribbons) - len(pieces):]

            yield from per_comp(0, [])

        for decomposition in decompositions(per_value, []):
            wt = ht = 0
            ribbons = []
            content = {}
            for v, pieces in decomposition:
                for piece in pieces:
                    rows = len({r for r, _ in piece})
                    cols = len({c for _, c in piece})
                    wt += cols - 1
                    ht += rows - 1
                    ribbons.append((v, frozenset(piece)))
                    content[v] = content.get(v, 0) + 1
            weight = BivarPoly.term(1, wt, ht) * A_PLUS_B**interior
            yield filling, ribbons, weight, content


def _cut_component(comp, cuts):
    """Split a border component at the given horizontal adjacencies."""
    remaining = set(comp)
    pieces = []
    while remaining:
        start = min(remaining)
        piece = set()
        stack = [start]
        remaining.discard(start)
        while stack:
            r, c = stack.pop()
            piece.add((r, c))
            for nb in ((r + 1, c), (r - 1, c)):
                if nb in remaining:
                    remaining.discard(nb)
                    stack.append(nb)
            if (r, c + 1) in remaining and (r, c) not in cuts:
                remaining.discard((r, c + 1))
                stack.append((r, c + 1))
            if (r, c - 1) in remaining and (r, c - 1) not in cuts:
                remaining.discard((r, c - 1))
                stack.append((r, c - 1))
        pieces.append(frozenset(piece))
    return pieces


def enum_g_rbt(outer, inner, n):
    """Rim-border generating polynomial; the combinatorial dual-g oracle."""
    return rbt_series(pt.normalize(outer), pt.normalize(inner), n)


def rbt_single_variable(outer, inner):
    """Closed-form single-letter generating function b^(r-b)(a+b)^i z^b (z+a)^(c-b).

    Returned as {power of z: coefficient}; zero map if the shapes are not
    nested.
    """
    outer, inner = pt.normalize(outer), pt.normalize(inner)
    if not pt.contains(outer, inner):
        return {}
    if outer == inner:
        return {0: BivarPoly.one()}
    r, c, b, i = pt.skew_stats(outer, inner)
    base = BETA ** (r - b) * A_PLUS_B**i
    out = {}
    for k in range(c - b + 1):  # expand (z + a)^(c-b)
        coeff = base * ALPHA ** (c - b - k) * pt.binom(c - b, k)
        if coeff:
            out[b + k] = coeff
    return out


# -- rim tableaux (the a+b = 0 family) --------------------------------------


def iter_no_square_rpp(lam, n):
    """Weakly increasing fillings with no 2x2 block of equal entries."""
    for filling in iter_rpp(lam, (), n):
        ok = True
        for (r, c), v in filling.items():
            if (
                filling.get((r + 1, c)) == v
                and filling.get((r, c + 1)) == v
                and filling.get((r + 1, c + 1)) == v
            ):
                ok = False
                break
        if ok:
            yield filling


def enum_rim_tableaux(lam, n):
    """Signed ribbon-tiling series; equals the dual-g oracle at b = -a.

    Each equal-letter region is tiled by ribbons cut only at horizontal
    adjacencies; a ribbon weighs (-1)^(height-1) a^(size-1).
    """
    lam = pt.normalize(lam)
    cutoff = pt.weight(lam)
    total = TruncatedSeries.zero(n, cutoff)
    minus_alpha = -ALPHA
    for filling in iter_no_square_rpp(lam, n):
        contrib = TruncatedSeries.one(n, cutoff)
        for v, region in value_regions(filling).items():
            xv = TruncatedSeries.variable(v - 1, n, cutoff)
            for comp in _components(region):
                horiz, vert = _adjacency_counts(comp)
                factor = xv.scale(minus_alpha**vert)
                for _ in range(horiz):
                    factor = factor * (xv + ALPHA)
                contrib = contrib * factor
        total = total + contrib
    return total


# -- elegant and dual hook tableaux ------------------------------------------


def iter_elegant(mu, nu):
    """SSYT of mu/nu whose row-i entries lie in [1, i-1] (1-based rows)."""
    mu, nu = pt.normalize(mu), pt.normalize(nu)
    if not pt.contains(mu, nu):
        return
    cells = pt.skew_cells(mu, nu)
    if any(r == 0 for r, _ in cells):
        return
    filling = {}

    def rec(idx):
        if idx == len(cells):
            yield dict(filling)
            return
        r, c = cells[idx]
        lo = filling.get((r, c - 1), 1)
        above = filling.get((r - 1, c))
        if above is not None:
            lo = max(lo, above + 1)
        for v in range(lo, r + 1):  # entries in row r+1 bounded by r
            filling[(r, c)] = v
            yield from rec(idx + 1)
            del filling[(r, c)]

    yield from rec(0)


def enum_elegant(mu, nu):
    return sum(1 for _ in iter_elegant(mu, nu))


def enum_elegant_weighted(mu, nu, t_values):
    """Sum of prod t_v over elegant fillings, t supplied as coefficients."""
    mu = pt.normalize(mu)
    t_values = [BivarPoly.coerce(t) for t in t_values]
    total = BivarPoly.zero()
    for filling in iter_elegant(mu, nu):
        prod = BivarPoly.one()
        for v in filling.values():
            prod = prod * t_values[v - 1]
        total = total + prod
    return total


def iter_dual_hook(lam, nu):
    """Two-region fillings counted by the single binomial determinant.

    The regions of lam/nu are the first b rows (entries from
    {0, -1, ..., i - lam_i + 1}, strictly decreasing along rows, weakly
    decreasing down columns) and the first b columns (entries from
    {1, ..., lam'_j - 1}, strictly increasing down columns, weakly
    increasing along rows), where b is the common diagonal count.
    """
    lam, nu = pt.normalize(lam), pt.normalize(nu)
    if not pt.contains(lam, nu):
        return
    b = pt.diagonal_count(lam)
    if b != pt.diagonal_count(nu):
        return
    cells = pt.skew_cells(lam, nu)
    arm_cells = sorted((r, c) for (r, c) in cells if r < b)
    leg_cells = sorted(((r, c) for (r, c) in cells if r >= b), key=lambda rc: (rc[1], rc[0]))
    conj = pt.conjugate(lam)

    def rec_arm(idx, filling):
        if idx == len(arm_cells):
            yield dict(filling)
            return
        r, c = arm_cells[idx]
        hi = 0
        left = filling.get((r, c - 1))
        if left is not None:
            hi = min(hi, left - 1)
        above = filling.get((r - 1, c))
        if above is not None:
            hi = min(hi, above)
        lo = (r + 1) - lam[r] + 1  # row-i entries bounded below by i - lam_i + 1
        for v in range(lo, hi + 1):
            filling[(r, c)] = v
            yield from rec_arm(idx + 1, filling)
            del filling[(r, c)]

    def rec_leg(idx, filling):
        if idx == len(leg_cells):
            yield dict(filling)
            return
        r, c = leg_cells[idx]
        lo = 1
        above = filling.get((r - 1, c))
        if above is not None and r - 1 >= b:
            lo = max(lo, above + 1)
        left = filling.get((r, c - 1))
        if left is not None:
            lo = max(lo, left)
        hi = conj[c] - 1  # column entries bounded by lam'_j - 1
        for v in range(lo, hi + 1):
            filling[(r, c)] = v
            yield from rec_leg(idx + 1, filling)
            del filling[(r, c)]

    for arm in rec_arm(0, {}):
        for leg in rec_leg(0, dict(arm)):
            yield {cell: leg[cell] for cell in cells}


def enum_dual_hook(lam, nu):
    return sum(1 for _ in iter_dual_hook(lam, nu))


def enum_row_col_strict(lam, n):
    """Fillings from {1..n} strictly increasing along rows and columns."""
    lam = pt.normalize(lam)
    cells = pt.skew_cells(lam, ())
    count = 0
    filling = {}

    def rec(idx):
        nonlocal count
        if idx == len(cells):
            count += 1
            return
        r, c = cells[idx]
        lo = 1
        if (r, c - 1) in filling:
            lo = max(lo, filling[(r, c - 1)] + 1)
        if (r - 1, c) in filling:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, n + 1):
            filling[(r, c)] = v
            rec(idx + 1)
            del filling[(r, c)]

    rec(0)
    return count


def ssyt_row_weighted_series(lam, n):
    """Generating series over SSYT with weight prod x_i^(rows with i) (x_i + a)^(extra).

    The single-parameter specialization of the dual polynomials at b = 0.
    """
    lam = pt.normalize(lam)
    cutoff = pt.weight(lam)
    total = TruncatedSeries.zero(n, cutoff)
    for filling in iter_rpp(lam, (), n):
        # SSYT: strict down columns
        if any(filling.get((r + 1, c)) == v for (r, c), v in filling.items()):
            continue
        contrib = TruncatedSeries.one(n, cutoff)
        for v, region in value_regions(filling).items():
            rows = len({r for r, _ in region})
            xv = TruncatedSeries.variable(v - 1, n, cutoff)
            factor = xv
            for _ in range(rows - 1):
                factor = factor * xv
            for _ in range(len(region) - rows):
                factor = factor * (xv + ALPHA)
            contrib = contrib * factor
        total = total + contrib
    return total


# -- nonintersecting lattice paths ------------------------------------------


def grid_endpoints(mu, nu, grid):
    """Sources and sinks for the path model of the skew pair mu/nu."""
    mu, nu = pt.normalize(mu), pt.normalize(nu)
    ell = len(mu)
    d = pt.diagonal_count(nu)
    sources, sinks = [], []
    for i in range(1, ell + 1):
        nui = pt.part(nu, i - 1)
        if grid == "type1":
            # source row: 1 - min(i, mu_i); the min form also covers rows
            # whose part exceeds the index, where sources must not sink
            # below the staircase
            sources.append((i - mu[i - 1], 1 - min(i, mu[i - 1])))
            if i <= d:
                sinks.append((i - nui, nui - i))
            else:
                sinks.append((i - nui, i - nui - 1))
        elif grid == "type2":
            sources.append((i - mu[i - 1], 1 - i))
            if i <= d:
                sinks.append((i - nui, nui - i))
            else:
                sinks.append((i - nui, -1))
        else:
            raise ValueError("grid must be 'type1' or 'type2'")
    return sources, sinks


def grid_steps(grid, x, y):
    """Legal steps out of (x, y) with their weights."""
    steps = [((x, y + 1), BivarPoly.one())]
    if grid == "type1":
        if x < 0:
            steps.append(((x + 1, y), ALPHA if y >= 0 else A_PLUS_B))
        else:
            steps.append(((x + 1, y + 1), BETA if y >= 0 else A_PLUS_B))
    else:
        if x < 0:
            steps.append(((x + 1, y), ALPHA if y >= 0 else A_PLUS_B))
        else:
            steps.append(((x + 1, y), BETA if y >= -x else A_PLUS_B))
    return steps


def paths_between(grid, source, sink):
    """All weighted monotone paths from source to sink on the given grid."""
    results = []

    def rec(pos, weight, trail):
        if pos == sink:
            results.append((tuple(trail), weight))
            return
        x, y = pos
        for (nx, ny), w in grid_steps(grid, x, y):
            if nx > sink[0] or ny > sink[1]:
                continue
            trail.append((nx, ny))
            rec((nx, ny), weight * w, trail)
            trail.pop()

    rec(source, BivarPoly.one(), [source])
    return results


def path_weight(grid, path):
    """Weight of an explicit vertex path; raises on an illegal step."""
    weight = BivarPoly.one()
    for (x, y), nxt in zip(path, path[1:]):
        for step, w in grid_steps(grid, x, y):
            if step == nxt:
                weight = weight * w
                break
        else:
            raise ValueError("illegal step %r -> %r" % ((x, y), nxt))
    return weight


def pair_path_weight(grid, source, sink):
    """Total weight of all paths between one source and one sink."""
    total = BivarPoly.zero()
    for _, w in paths_between(grid, source, sink):
        total = total + w
    return total


def enum_path_systems(mu, nu, grid):
    """Total weight of vertex-disjoint path systems joining sources to sinks."""
    mu, nu = pt.normalize(mu), pt.normalize(nu)
    if not pt.contains(mu, nu):
        return BivarPoly.zero()
    if not mu:
        return BivarPoly.one()
    sources, sinks = grid_endpoints(mu, nu, grid)
    candidate_paths = [paths_between(grid, a, b) for a, b in zip(sources, sinks)]
    total = BivarPoly.zero()

    def rec(i, used, weight):
        nonlocal total
        if i == len(candidate_paths):
            total = total + weight
            return
        for trail, w in candidate_paths[i]:
            vertices = set(trail)
            if vertices & used:
                continue
            rec(i + 1, used | vertices, weight * w)

    rec(0, set(), BivarPoly.one())
    return total
