"""Rhombic puzzle enumeration with exact polynomial weights.

The puzzle domain is an n x n (or k x n) grid of vertical rhombus cells
(c, b); a cell carries one of the ten nonzero tensor entries, read as
(upper-right, upper-left, lower-left, lower-right) edge labels.  Shaded cells
carry the difference of the two spectral lines crossing them; all other cells
weigh one.  Frontier dynamic programming sweeps the grid row by row with
memoised frontier states; a plain recursive enumeration of whole fillings
backs the per-puzzle lemma checks and doubles as an independent count.

Boundary conventions (pinned by the product formulae, the delta identities
and the Gr(1,3) example, see the test suite): writing word(p) for the binary
word of a partition in the k x (n-k) rectangle,

  upper-left side   fixed word  -^k +^(n-k)      (index b ascending)
  lower-left side   word(mu)    reversed          (index c ascending)
  lower-right side  word(lambda) reversed         (index b ascending)
  upper-right side  word(nu)    reversed          (index c ascending)

and the shaded cell (c, b) weighs yargs[n-1-c] - zargs[n-1-b].
"""

from __future__ import annotations

from .combinatorics import (
    check_partition, complement_bar, fits_in_box, partition_to_binary,
    partitions_in_box,
)
from .lattice import MINUS, PLUS, R_SHADED, R_UNIT, ZERO
from .poly import Poly, v
from .schur import factorial_schur

_BOUNDARY = (MINUS, PLUS, ZERO)
_CHAR = {"-": MINUS, "+": PLUS}

# cell transitions: (ul, ll) -> [(lr, ur, shaded?)]
_CELL = {}
for _e in sorted(R_UNIT | {R_SHADED}):
    _ur, _ul, _ll, _lr = _e
    _CELL.setdefault((_ul, _ll), []).append((_lr, _ur, _e == R_SHADED))


def boundary_word(parts, k, n):
    """Binary word of a partition as a list of lattice letters."""
    return [_CHAR[ch] for ch in partition_to_binary(parts, k, n)]


class Diamond:
    """A rhombic grid domain with fixed boundary labels.

    width columns c, height rows b; ul/lr are indexed by b, ll/ur by c.
    shaded_weight(c, b) gives the spectral weight of a shaded cell; passing
    None forbids shaded cells altogether.
    """

    def __init__(self, width, height, ul, ll, lr, ur, shaded_weight=None):
        if not (len(ul) == len(lr) == height and len(ll) == len(ur) == width):
            raise ValueError("boundary lengths do not match the grid")
        self.width = width
        self.height = height
        self.ul = list(ul)
        self.ll = list(ll)
        self.lr = list(lr)
        self.ur = list(ur)
        self.shaded_weight = shaded_weight

    def _row_targets(self, lls, b):
        """Map from reachable UR rows to weight, scanning row b."""
        out = {}
        stack = [(0, self.ul[b], (), Poly.const(1))]
        while stack:
            c, ul, urs, wt = stack.pop()
            if c == self.width:
                if ul == self.lr[b]:
                    key = urs
                    out[key] = out.get(key, Poly()) + wt
                continue
            for lr, ur, shaded in _CELL.get((ul, lls[c]), ()):
                if shaded:
                    if self.shaded_weight is None:
                        continue
                    w = self.shaded_weight(c, b)
                    if w.is_zero():
                        continue
                    stack.append((c + 1, lr, urs + (ur,), wt * w))
                else:
                    stack.append((c + 1, lr, urs + (ur,), wt))
        return out

    def weight(self):
        """Total weight over all fillings, by frontier dynamic programming."""
        front = {tuple(self.ll): Poly.const(1)}
        for b in range(self.height):
            nxt = {}
            for lls, amp in front.items():
                for urs, wt in self._row_targets(lls, b).items():
                    nxt[urs] = nxt.get(urs, Poly()) + amp * wt
            front = nxt
            if not front:
                return Poly()
        return front.get(tuple(self.ur), Poly())

    def count(self):
        """Number of fillings (shaded cells governed by shaded_weight)."""
        front = {tuple(self.ll): 1}
        for b in range(self.height):
            nxt = {}
            for lls, amp in front.items():
                stack = [(0, self.ul[b], ())]
                while stack:
                    c, ul, urs = stack.pop()
                    if c == self.width:
                        if ul == self.lr[b]:
                            nxt[urs] = nxt.get(urs, 0) + amp
                        continue
                    for lr, ur, shaded in _CELL.get((ul, lls[c]), ()):
                        if shaded and self.shaded_weight is None:
                            continue
                        stack.append((c + 1, lr, urs + (ur,)))
            front = nxt
        return front.get(tuple(self.ur), 0)

    def configurations(self):
        """Yield (rows, shaded_cells) over all fillings, without memoisation.

        rows[b][c] is the cell entry (ur, ul, ll, lr); shaded_cells lists the
        (c, b) positions of shaded cells.  Zero-weight shaded cells are kept;
        the caller applies weights.
        """
        results = []

        def rows_from(b, lls, rows):
            if b == self.height:
                if list(lls) == list(self.ur):
                    shaded = [(c, bb) for bb, row in enumerate(rows)
                              for c, e in enumerate(row) if e == R_SHADED]
                    results.append((tuple(rows), shaded))
                return
            stack = [(0, self.ul[b], (), ())]
            while stack:
                c, ul, urs, row = stack.pop()
                if c == self.width:
                    if ul == self.lr[b]:
                        rows_from(b + 1, urs, rows + [row])
                    continue
                for lr, ur, shaded in _CELL.get((ul, lls[c]), ()):
                    if shaded and self.shaded_weight is None:
                        continue
                    e = (ur, ul, lls[c], lr)
                    stack.append((c + 1, lr, urs + (ur,), row + (e,)))

        rows_from(0, tuple(self.ll), [])
        return results


# ---------------------------------------------------------------------------
# the Molev-Sagan puzzle and its relatives
# ---------------------------------------------------------------------------

def _default_args(family, n):
    return [v(family, i) for i in range(1, n + 1)]


def _ms_domain(nu, lam, mu, n, k, yargs, zargs):
    for p in (nu, lam, mu):
        if not fits_in_box(p, k, n):
            raise ValueError(f"partition {p} does not fit in {k}x{n - k}")
    fixed = [MINUS] * k + [PLUS] * (n - k)
    ll = boundary_word(mu, k, n)[::-1]
    lr = boundary_word(lam, k, n)[::-1]
    ur = boundary_word(nu, k, n)[::-1]

    def shaded_weight(c, b):
        return yargs[n - 1 - c] - zargs[n - 1 - b]

    return Diamond(n, n, fixed, ll, lr, ur, shaded_weight)


def ms_weight(nu, lam, mu, n, k, yargs=None, zargs=None):
    """The rhombic puzzle weight e^nu_(lam,mu)(y_1..y_n; z_1..z_n)."""
    nu, lam, mu = check_partition(nu), check_partition(lam), check_partition(mu)
    yargs = _default_args("y", n) if yargs is None else list(yargs)
    zargs = _default_args("z", n) if zargs is None else list(zargs)
    return _ms_domain(nu, lam, mu, n, k, yargs, zargs).weight()


def ms_configurations(nu, lam, mu, n, k, yargs=None, zargs=None):
    """Per-puzzle data: yields (rows, factors) with factors the shaded-cell
    weights; puzzles whose weight vanishes identically are dropped."""
    yargs = _default_args("y", n) if yargs is None else list(yargs)
    zargs = _default_args("z", n) if zargs is None else list(zargs)
    dom = _ms_domain(nu, lam, mu, n, k, yargs, zargs)
    for rows, shaded in dom.configurations():
        factors = [yargs[n - 1 - c] - zargs[n - 1 - b] for c, b in shaded]
        if any(f.is_zero() for f in factors):
            continue
        yield rows, factors


def equivariant_weight(nu, mu, lam, n, k, zargs=None):
    """Equivariant structure constant c^nu_(mu,lam)(z_1..z_n).

    Computed through the rhombic puzzle with both spectral families carrying
    the z variables, one of them reversed.
    """
    nu, mu, lam = check_partition(nu), check_partition(mu), check_partition(lam)
    zargs = _default_args("z", n) if zargs is None else list(zargs)
    return ms_weight(complement_bar(mu, k, n), lam, complement_bar(nu, k, n),
                     n, k, yargs=zargs[::-1], zargs=zargs)


def equivariant_puzzles(nu, mu, lam, n, k):
    """Per-puzzle index pairs for c^nu_(mu,lam)(z).

    Yields (rows, pairs) where each pair (i, j) stands for a factor
    z_j - z_i; Graham positivity is the statement j > i throughout.
    """
    zargs = _default_args("z", n)
    dom = _ms_domain(complement_bar(mu, k, n), lam, complement_bar(nu, k, n),
                     n, k, zargs[::-1], zargs)
    for rows, shaded in dom.configurations():
        pairs = [(n - b, c + 1) for c, b in shaded]
        if any(i == j for i, j in pairs):
            continue
        yield rows, pairs


def count_puzzles(lam, mu, nu, k=None, n=None):
    """Number of plain puzzles with lam on the bottom, mu on the left and nu
    on the right side, all words read left to right.

    Shaded cells are forbidden; equals the Littlewood-Richardson coefficient.
    """
    lam, mu, nu = check_partition(lam), check_partition(mu), check_partition(nu)
    if k is None:
        k = max((len(p) for p in (lam, mu, nu)), default=0) or 1
    if n is None:
        n = k + max((p[0] if p else 0 for p in (lam, mu, nu)), default=0)
        n = max(n, k + 1)
    for p in (lam, mu, nu):
        if not fits_in_box(p, k, n):
            raise ValueError(f"partition {p} does not fit in {k}x{n - k}")
    fixed = [MINUS] * k + [PLUS] * (n - k)
    ll = boundary_word(complement_bar(lam, k, n), k, n)[::-1]
    lr = boundary_word(nu, k, n)[::-1]
    ur = boundary_word(complement_bar(mu, k, n), k, n)[::-1]
    return Diamond(n, n, fixed, ll, lr, ur, None).count()


def count_puzzles_enumerated(lam, mu, nu, k, n):
    """Same count by plain recursive enumeration (no frontier merging)."""
    fixed = [MINUS] * k + [PLUS] * (n - k)
    ll = boundary_word(complement_bar(lam, k, n), k, n)[::-1]
    lr = boundary_word(nu, k, n)[::-1]
    ur = boundary_word(complement_bar(mu, k, n), k, n)[::-1]
    return len(Diamond(n, n, fixed, ll, lr, ur, None).configurations())


# ---------------------------------------------------------------------------
# factorial Schur functions as tilings
# ---------------------------------------------------------------------------

def factorial_schur_via_tiling(lam, k, n):
    """Factorial Schur polynomial from the k x n rhombic tiling.

    The shape word sits on one n-side read bottom to top, the k greens enter
    through the adjacent side, the two remaining sides are free of particles;
    shaded cells weigh x_(c+1) - y_(b+1).  Equals the tableau formula.
    """
    lam = check_partition(lam)
    if not fits_in_box(lam, k, n):
        raise ValueError(f"partition {lam} does not fit in {k}x{n - k}")
    ul = boundary_word(lam, k, n)
    ll = [MINUS] * k
    lr = [PLUS] * n
    ur = [ZERO] * k

    def shaded_weight(c, b):
        return v("x", c + 1) - v("y", b + 1)

    return Diamond(k, n, ul, ll, lr, ur, shaded_weight).weight()


# ---------------------------------------------------------------------------
# product formulae
# ---------------------------------------------------------------------------

def _factorial_in(lam, k, n, args, family="y"):
    """Factorial Schur with the second alphabet replaced by given values."""
    p = factorial_schur(lam, k, n)
    return p.substitute({("y", i + 1): args[i] for i in range(n)})


def verify_ms_product(lam, mu, k, n):
    """Product formula: s_lam(x|z) s_mu(x|y) expanded over puzzle weights.

    Requires lam_1 + mu_1 <= n - k.
    """
    lam, mu = check_partition(lam), check_partition(mu)
    width = (lam[0] if lam else 0) + (mu[0] if mu else 0)
    if width > n - k:
        raise ValueError(f"width precondition violated: {width} > {n - k}")
    ys = _default_args("y", n)
    zs = _default_args("z", n)
    lhs = _factorial_in(lam, k, n, zs) * _factorial_in(mu, k, n, ys)
    rhs = Poly()
    for nu in partitions_in_box(k, n):
        coeff = ms_weight(nu, lam, mu, n, k)
        if not coeff.is_zero():
            rhs = rhs + coeff * _factorial_in(nu, k, n, ys)
    return lhs == rhs


def verify_ms_alternate(lam, mu, k, n):
    """Alternate product formula with the reversed-argument coefficients."""
    lam, mu = check_partition(lam), check_partition(mu)
    width = (lam[0] if lam else 0) + (mu[0] if mu else 0)
    if width > n - k:
        raise ValueError(f"width precondition violated: {width} > {n - k}")
    ys = _default_args("y", n)
    zs = _default_args("z", n)
    lhs = _factorial_in(lam, k, n, zs) * _factorial_in(mu, k, n, ys)
    rhs = Poly()
    for nu in partitions_in_box(k, n):
        coeff = ms_weight(complement_bar(mu, k, n), lam,
                          complement_bar(nu, k, n), n, k,
                          yargs=ys[::-1], zargs=zs)
        if not coeff.is_zero():
            rhs = rhs + coeff * _factorial_in(nu, k, n, ys)
    return lhs == rhs


def verify_kt_product(lam, mu, k, n):
    """Equivariant product formula with equal alphabets:
    s_lam(x|z) s_mu(x|z) = sum_nu c^nu_(mu,lam)(z) s_nu(x|z)."""
    lam, mu = check_partition(lam), check_partition(mu)
    zs = _default_args("z", n)
    lhs = _factorial_in(lam, k, n, zs) * _factorial_in(mu, k, n, zs)
    rhs = Poly()
    for nu in partitions_in_box(k, n):
        coeff = equivariant_weight(nu, mu, lam, n, k)
        if not coeff.is_zero():
            rhs = rhs + coeff * _factorial_in(nu, k, n, zs)
    return lhs == rhs


def verify_curious_identity(nu, lam, mu, n, k):
    """e^nu_(lam,mu)(y; z) = e^(bar mu)_(lam, bar nu)(y reversed; z)."""
    ys = _default_args("y", n)
    zs = _default_args("z", n)
    a = ms_weight(nu, lam, mu, n, k)
    b = ms_weight(complement_bar(mu, k, n), lam, complement_bar(nu, k, n),
                  n, k, yargs=ys[::-1], zargs=zs)
    return a == b


# ---------------------------------------------------------------------------
# frozen-region lemmas
# ---------------------------------------------------------------------------

def check_prefrozen(nu, lam, mu, n, k):
    """In every puzzle, cells of the frozen-candidate half never carry an
    empty upper-left edge (the straight-line property of that half)."""
    dom = _ms_domain(check_partition(nu), check_partition(lam),
                     check_partition(mu), n, k,
                     _default_args("y", n), _default_args("z", n))
    for rows, _ in dom.configurations():
        for b in range(n):
            for c in range(n):
                if b + c < n - 1 and rows[b][c][1] == ZERO:
                    return False
    return True


def check_frozen_a(nu, lam, mu, n, k):
    """Specialised puzzles share a frozen half whose diagonal reads mu.

    Under z_(n+1-i) = y_i the surviving fillings agree on every cell of the
    half above the zero-weight diagonal, carry no shaded cell there, and the
    diagonal cells spell the word of mu through their lower-left edges.
    """
    ys = _default_args("y", n)
    zs = ys[::-1]
    dom = _ms_domain(check_partition(nu), check_partition(lam),
                     check_partition(mu), n, k, ys, zs)
    halves = set()
    survivors = 0
    muword = boundary_word(mu, k, n)
    for rows, shaded in dom.configurations():
        factors = [ys[n - 1 - c] - zs[n - 1 - b] for c, b in shaded]
        if any(f.is_zero() for f in factors):
            continue
        survivors += 1
        for c, b in shaded:
            if b + c < n - 1:
                return False
        halves.add(tuple(rows[b][c] for b in range(n) for c in range(n)
                         if b + c < n - 1))
        diag = [PLUS if rows[b][n - 1 - b][2] == PLUS else MINUS
                for b in range(n)]
        if diag != muword:
            return False
    return len(halves) <= 1


def check_frozen_b(nu, mu, n, k):
    """Delta identities for an empty side partition."""
    delta = Poly.const(1 if tuple(mu) == tuple(nu) else 0)
    return (equivariant_weight(nu, (), mu, n, k) == delta
            and equivariant_weight(nu, mu, (), n, k) == delta)
