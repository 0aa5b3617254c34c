"""Schur functions: ordinary, skew, supersymmetric and factorial, plus the
classical Littlewood-Richardson tableau rule used as an independent oracle.

The supersymmetric family is generated by the series
prod_j (1 + x*v_j) / prod_i (1 - x*u_i) through the Jacobi-Trudi determinant;
the factorial family is defined directly by its tableau weight
prod_boxes (x_T - y_(T+c)).
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement

from .combinatorics import check_partition, contains, transpose
from .poly import Poly, det, v


def elementary(a, family, n):
    """Elementary symmetric polynomial e_a in n variables of a family."""
    if a < 0:
        return Poly()
    if a == 0:
        return Poly.const(1)
    total = Poly()
    for subset in combinations(range(1, n + 1), a):
        term = Poly.const(1)
        for i in subset:
            term = term * v(family, i)
        total = total + term
    return total


def complete(b, family, m):
    """Complete homogeneous symmetric polynomial h_b in m variables."""
    if b < 0:
        return Poly()
    if b == 0:
        return Poly.const(1)
    total = Poly()
    for multiset in combinations_with_replacement(range(1, m + 1), b):
        term = Poly.const(1)
        for i in multiset:
            term = term * v(family, i)
        total = total + term
    return total


def super_h(j, m, n):
    """Coefficient of x^j in prod(1 + x*v_i)/prod(1 - x*u_i); zero for j < 0."""
    if j < 0:
        return Poly()
    total = Poly()
    for a in range(min(j, n) + 1):
        total = total + elementary(a, "v", n) * complete(j - a, "u", m)
    return total


def schur_super(lam, mu, m, n):
    """Supersymmetric skew Schur function s_(lam/mu)(u_1..u_m / v_1..v_n).

    Jacobi-Trudi determinant det(h_(lam_j - mu_i + i - j)) of size the number
    of rows of lam.  Returns the zero polynomial unless mu is contained in lam.
    """
    lam, mu = check_partition(lam), check_partition(mu)
    if not contains(lam, mu):
        return Poly()
    ell = len(lam)
    if ell == 0:
        return Poly.const(1)
    mu = mu + (0,) * (ell - len(mu))
    matrix = [[super_h(lam[j] - mu[i] + i - j, m, n) for j in range(ell)]
              for i in range(ell)]
    return det(matrix)


def schur(lam, mu, m, family="u"):
    """Ordinary skew Schur polynomial in m variables of the given family."""
    p = schur_super(lam, mu, m, 0)
    if family == "u":
        return p
    return p.substitute({("u", i): v(family, i) for i in range(1, m + 1)})


# ---------------------------------------------------------------------------
# tableaux
# ---------------------------------------------------------------------------

def ssyt(lam, mu, maxentry):
    """Semistandard fillings of the skew shape lam/mu with entries 1..maxentry.

    Yields fillings as tuples of row tuples, rows weakly increasing left to
    right, columns strictly increasing top to bottom.
    """
    lam, mu = check_partition(lam), check_partition(mu)
    if not contains(lam, mu):
        return
    ell = len(lam)
    mu = mu + (0,) * (ell - len(mu))

    def fill(rows):
        i = len(rows)
        if i == ell:
            yield tuple(rows)
            return
        width = lam[i]
        offset = mu[i]

        def fill_row(row):
            j = offset + len(row)
            if j == width:
                for result in fill(rows + [tuple(row)]):
                    yield result
                return
            lo = 1
            if row:
                lo = max(lo, row[-1])
            if i > 0 and j < lam[i - 1] and j >= mu[i - 1]:
                lo = max(lo, rows[i - 1][j - mu[i - 1]] + 1)
            for entry in range(lo, maxentry + 1):
                for result in fill_row(row + [entry]):
                    yield result

        for result in fill_row([]):
            yield result

    for filling in fill([]):
        yield filling


def ssyt_monomial_sum(lam, mu, m, family="u"):
    """Sum over SSYT of the product of variables, the monomial-expansion oracle."""
    total = Poly()
    for filling in ssyt(lam, mu, m):
        term = Poly.const(1)
        for row in filling:
            for entry in row:
                term = term * v(family, entry)
        total = total + term
    return total


def factorial_schur(lam, k, n):
    """Factorial Schur polynomial s_lam(x_1..x_k | y_1..y_n).

    Sum over SSYT of shape lam with alphabet {1..k}, weight the product over
    boxes of (x_T - y_(T+c)) with c the content of the box; lam must fit in
    the k x (n-k) rectangle so that all y indices stay within 1..n.
    """
    lam = check_partition(lam)
    if len(lam) > k or (lam and lam[0] > n - k):
        raise ValueError(f"partition {lam} does not fit in {k}x{n - k}")
    total = Poly()
    for filling in ssyt(lam, (), k):
        term = Poly.const(1)
        for i, row in enumerate(filling, start=1):
            for j, entry in enumerate(row, start=1):
                term = term * (v("x", entry) - v("y", entry + j - i))
        total = total + term
    return total


# ---------------------------------------------------------------------------
# classical Littlewood-Richardson rule
# ---------------------------------------------------------------------------

def lr_oracle(lam, mu, nu):
    """Littlewood-Richardson coefficient c^lam_(mu,nu) by the tableau rule.

    Counts semistandard fillings of lam/mu with content nu whose reverse
    reading word (rows right to left, top to bottom) is a lattice word.
    Returns 0 when the sizes do not match or mu is not contained in lam.
    """
    lam, mu, nu = check_partition(lam), check_partition(mu), check_partition(nu)
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    if not contains(lam, mu) or not contains(lam, nu):
        return 0
    maxentry = len(nu)
    if maxentry == 0:
        return 1 if lam == mu else 0
    count = 0
    for filling in ssyt(lam, mu, maxentry):
        content = [0] * maxentry
        ok = True
        for row in filling:
            for entry in row:
                content[entry - 1] += 1
        if tuple(content) != nu:
            continue
        seen = [0] * (maxentry + 1)
        for row in filling:
            for entry in reversed(row):
                seen[entry] += 1
                if entry > 1 and seen[entry] > seen[entry - 1]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count
