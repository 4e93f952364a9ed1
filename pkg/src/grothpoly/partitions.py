"""Integer partitions, skew shapes, and Littlewood-Richardson numbers.

Partitions are plain tuples of weakly decreasing positive ints; the empty
partition is ``()``.  Cells are 0-indexed pairs (row, col).
"""

from functools import lru_cache
from math import comb


def binom(n, k):
    """Binomial with the path-counting convention.

    Zero whenever k < 0 or (n < 0 and k > 0) or k > n >= 0; C(n, 0) = 1 for
    every n.  This is the convention the determinantal counting formulas
    need (an empty path always counts once).
    """
    if k < 0:
        return 0
    if k == 0:
        return 1
    if n < 0 or k > n:
        return 0
    return comb(n, k)


def gbinom(n, k):
    """Generalized binomial: C(n, k) = n(n-1)...(n-k+1)/k! for any integer n."""
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= n - i
    den = 1
    for i in range(1, k + 1):
        den *= i
    return num // den


def normalize(parts):
    parts = tuple(p for p in parts if p != 0)
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("not weakly decreasing: %r" % (parts,))
    if parts and parts[-1] < 0:
        raise ValueError("negative part in %r" % (parts,))
    return parts


def weight(lam):
    return sum(lam)


def part(lam, i):
    """The i-th part (0-indexed), zero beyond the length."""
    return lam[i] if i < len(lam) else 0


def conjugate(lam):
    """Transpose the Young diagram."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


def contains(outer, inner):
    """Cellwise containment inner subseteq outer."""
    return len(inner) <= len(outer) and all(
        inner[i] <= outer[i] for i in range(len(inner))
    )


def diagonal_count(lam):
    """Number of cells on the main diagonal."""
    return sum(1 for i, p in enumerate(lam) if p >= i + 1)


def drop_first_row(lam):
    return lam[1:]


def skew_cells(outer, inner):
    if not contains(outer, inner):
        raise ValueError("%r does not contain %r" % (outer, inner))
    return [
        (r, c)
        for r in range(len(outer))
        for c in range(part(inner, r), outer[r])
    ]


def skew_size(outer, inner):
    return weight(outer) - weight(inner)


def skew_stats(outer, inner):
    """(rows, cols, components, inner-boxes) of the skew shape outer/inner.

    Components are taken under edge adjacency; the inner-box count is
    ``|shape| - cols - rows + components``.
    """
    cells = skew_cells(outer, inner)
    if not cells:
        return (0, 0, 0, 0)
    rows = len({r for r, _ in cells})
    cols = len({c for _, c in cells})
    cellset = set(cells)
    seen = set()
    comps = 0
    for cell in cells:
        if cell in seen:
            continue
        comps += 1
        stack = [cell]
        seen.add(cell)
        while stack:
            r, c = stack.pop()
            for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                if nb in cellset and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
    inner_boxes = len(cells) - cols - rows + comps
    return (rows, cols, comps, inner_boxes)


def is_horizontal_strip(outer, inner):
    """No column of outer/inner holds two cells."""
    if not contains(outer, inner):
        return False
    return all(part(outer, i + 1) <= part(inner, i) for i in range(len(outer)))


def is_vertical_strip(outer, inner):
    """No row of outer/inner holds two cells."""
    if not contains(outer, inner):
        return False
    return all(outer[i] - part(inner, i) <= 1 for i in range(len(outer)))


# -- iteration ----------------------------------------------------------


def partitions_of(n, max_part=None, max_length=None):
    """All partitions of n, largest part first, in reverse lex order."""
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n
    result = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            result.append(tuple(prefix))
            return
        if len(prefix) == max_length:
            return
        for p in range(min(cap, remaining), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, max_part, [])
    return result


def partitions_up_to(n, max_part=None, max_length=None):
    """All partitions of weight <= n (including the empty one)."""
    out = []
    for w in range(n + 1):
        out.extend(partitions_of(w, max_part=max_part, max_length=max_length))
    return out


def supersets_with_weight(lam, w, max_length=None, max_part=None):
    """Partitions of weight w containing lam."""
    return [mu for mu in partitions_of(w, max_part=max_part, max_length=max_length)
            if contains(mu, lam)]


def add_horizontal_strips(lam, k):
    """Partitions mu with mu/lam a horizontal strip of exactly k cells."""
    result = []

    def rec(i, remaining, prev_mu, prefix):
        if i == len(lam) + 1:
            if remaining == 0:
                result.append(normalize(prefix))
            return
        lo = part(lam, i)
        hi = min(prev_mu, lo + remaining)
        # horizontal strip: mu_i <= lam_{i-1}
        cap = part(lam, i - 1) if i > 0 else hi
        hi = min(hi, cap)
        for mu_i in range(lo, hi + 1):
            prefix.append(mu_i)
            rec(i + 1, remaining - (mu_i - lo), mu_i, prefix)
            prefix.pop()

    rec(0, k, 10**9, [])
    return result


def add_vertical_strips(lam, k):
    return [conjugate(mu) for mu in add_horizontal_strips(conjugate(lam), k)]


# -- Littlewood-Richardson ----------------------------------------------


@lru_cache(maxsize=None)
def lr_coefficient(lam, mu, nu):
    """c^nu_{lam,mu}: LR skew tableaux of shape nu/lam and content mu.

    Counted by direct backtracking over fillings that are semistandard and
    whose reverse reading word is a lattice word.  The cache is only ever
    appended to, so concurrent readers are fine.
    """
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    if weight(lam) + weight(mu) != weight(nu):
        return 0
    if not contains(nu, lam) or not contains(nu, mu):
        return 0
    if not mu:
        return 1
    rows = [(part(lam, r), nu[r]) for r in range(len(nu))]
    nmu = len(mu)
    counts = [0] * (nmu + 1)  # counts[v] = number of v's placed so far
    filling = {}
    total = 0

    def rec(idx, cells):
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        r, c = cells[idx]
        # cells are visited right-to-left, so the right neighbor and the cell
        # above are already placed
        hi = filling.get((r, c + 1), nmu)
        above = filling.get((r - 1, c))
        for v in range(1, hi + 1):
            if above is not None and v <= above:
                continue
            if counts[v] >= mu[v - 1]:
                continue
            # lattice condition on the reverse reading word: when a v is
            # appended, v's seen so far must stay below v-1's seen so far
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            rec(idx + 1, cells)
            del filling[(r, c)]
            counts[v] -= 1

    # reverse reading order: rows top to bottom, right to left
    cells = []
    for r in range(len(nu)):
        lo, hi = rows[r]
        cells.extend((r, c) for c in range(hi - 1, lo - 1, -1))
    rec(0, cells)
    return total


# -- text format ---------------------------------------------------------


def format_partition(lam):
    return "[]" if not lam else ",".join(str(p) for p in lam)


def parse_partition(text):
    text = text.strip()
    if text in ("[]", "", "0"):
        return ()
    return normalize(tuple(int(p) for p in text.split(",")))


def hook_content_eval(lam, n):
    """s_lam(1^n) by the hook-content formula; exact integer."""
    if not lam:
        return 1
    conj = conjugate(lam)
    num = 1
    den = 1
    for i, row in enumerate(lam):
        for j in range(row):
            num *= n + j - i
            den *= row - j + conj[j] - i - 1
    return num // den
