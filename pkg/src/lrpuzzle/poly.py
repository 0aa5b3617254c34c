"""Exact multivariate polynomial arithmetic over arbitrary-precision integers.

Variables come in five indexed families x, y, z, u, v (x1, x2, ..., v1, ...).
A monomial is a sorted tuple of (variable code, exponent) pairs and a
polynomial is a dict mapping monomials to nonzero integer coefficients, so
equality is structural and all arithmetic is exact.
"""

from __future__ import annotations

import json
from functools import lru_cache

FAMILIES = "xyzuv"

_INDEX_BITS = 20
_INDEX_MASK = (1 << _INDEX_BITS) - 1


def var_code(family, index):
    """Encode (family, index) as an int whose natural order is x<y<z<u<v, then index."""
    if family not in FAMILIES:
        raise ValueError(f"unknown variable family {family!r}")
    if not 1 <= index <= _INDEX_MASK:
        raise ValueError(f"variable index out of range: {index}")
    return (FAMILIES.index(family) << _INDEX_BITS) | index


def var_name(code):
    """Inverse of var_code, as a printable name like 'z2'."""
    return f"{FAMILIES[code >> _INDEX_BITS]}{code & _INDEX_MASK}"


def _mono_mul(m1, m2):
    """Merge two sorted exponent tuples."""
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    n1, n2 = len(m1), len(m2)
    while i < n1 and j < n2:
        c1, e1 = m1[i]
        c2, e2 = m2[j]
        if c1 == c2:
            out.append((c1, e1 + e2))
            i += 1
            j += 1
        elif c1 < c2:
            out.append((c1, e1))
            i += 1
        else:
            out.append((c2, e2))
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def _mono_key(m):
    """Graded lexicographic sort key; ties broken with higher variables dominant."""
    return (sum(e for _, e in m), tuple(sorted(m, reverse=True)))


class Poly:
    """Immutable exact polynomial with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        object.__setattr__(self, "terms", dict(terms) if terms else {})

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @staticmethod
    def const(c):
        return Poly({(): c}) if c else Poly()

    @staticmethod
    def variable(family, index):
        return Poly({((var_code(family, index), 1),): 1})

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(other)
        return NotImplemented

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(): 1}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Poly._coerce(other) + (-self)

    def __mul__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms or not other.terms:
            return Poly()
        # iterate over the smaller factor
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e for _, e in m) for m in self.terms)

    def variables(self):
        """Sorted codes of all variables that occur."""
        seen = set()
        for m in self.terms:
            for c, _ in m:
                seen.add(c)
        return sorted(seen)

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), 0)

    def constant_term(self):
        return self.terms.get((), 0)

    def evaluate(self, assignment):
        """Evaluate at integer points; assignment maps (family, index) -> int.

        Raises KeyError if a variable occurring in the polynomial is missing.
        """
        values = {var_code(f, i): v for (f, i), v in assignment.items()}
        total = 0
        for m, c in self.terms.items():
            term = c
            for code, e in m:
                if code not in values:
                    raise KeyError(f"no value for variable {var_name(code)}")
                term *= values[code] ** e
            total += term
        return total

    def substitute(self, mapping):
        """Substitute polynomials for variables; mapping maps (family, index) -> Poly.

        Variables not mentioned are left alone.
        """
        subs = {var_code(f, i): p for (f, i), p in mapping.items()}
        out = Poly()
        for m, c in self.terms.items():
            term = Poly.const(c)
            for code, e in m:
                if code in subs:
                    term = term * subs[code] ** e
                else:
                    term = term * Poly({((code, e),): 1})
            out = out + term
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=_mono_key, reverse=True):
            c = self.terms[m]
            factors = []
            for code, e in m:
                factors.append(var_name(code) if e == 1 else f"{var_name(code)}^{e}")
            body = "*".join(factors)
            if not body:
                parts.append((c, str(abs(c))))
            elif abs(c) == 1:
                parts.append((c, body))
            else:
                parts.append((c, f"{abs(c)}*{body}"))
        pieces = []
        for i, (c, text) in enumerate(parts):
            if i == 0:
                pieces.append(("-" if c < 0 else "") + text)
            else:
                pieces.append(("- " if c < 0 else "+ ") + text)
        return " ".join(pieces)

    def __repr__(self):
        return f"Poly({self})"

    def to_json(self):
        """List of {coeff, monomial} records; monomial maps name -> exponent."""
        records = []
        for m in sorted(self.terms, key=_mono_key, reverse=True):
            records.append({
                "coeff": self.terms[m],
                "monomial": {var_name(code): e for code, e in m},
            })
        return records

    @staticmethod
    def from_json(records):
        out = Poly()
        for rec in records:
            mono = []
            for name, e in rec["monomial"].items():
                family, index = name[0], int(name[1:])
                mono.append((var_code(family, index), e))
            out = out + Poly({tuple(sorted(mono)): rec["coeff"]})
        return out

    def dumps(self):
        return json.dumps(self.to_json())


ZERO = Poly()
ONE = Poly.const(1)


@lru_cache(maxsize=None)
def v(family, index):
    """Cached variable constructor."""
    return Poly.variable(family, index)


def _leading(p):
    m = max(p.terms, key=_mono_key)
    return m, p.terms[m]


def _mono_divides(m1, m2):
    d1 = dict(m1)
    return all(d1.get(c, 0) >= e for c, e in m2)


def _mono_div(m1, m2):
    d = dict(m1)
    for c, e in m2:
        d[c] -= e
    return tuple(sorted((c, e) for c, e in d.items() if e))


def div_exact(p, q):
    """Exact polynomial division; raises ArithmeticError if q does not divide p."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = p
    quot = Poly()
    qm, qc = _leading(q)
    while not rem.is_zero():
        rm, rc = _leading(rem)
        if rc % qc != 0 or not _mono_divides(rm, qm):
            raise ArithmeticError("inexact polynomial division")
        t = Poly({_mono_div(rm, qm): rc // qc})
        quot = quot + t
        rem = rem - t * q
    return quot


def det(matrix):
    """Determinant of a square matrix of Poly, computed exactly.

    Cofactor expansion with column-subset memoisation up to 6x6, fraction-free
    Bareiss elimination (exact divisions only) for larger matrices.
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError("det requires a square matrix")
    if n == 0:
        return ONE
    rows = [[Poly._coerce(e) for e in row] for row in matrix]
    if n <= 6:
        return _det_cofactor(rows)
    return _det_bareiss(rows)


def _det_cofactor(rows):
    n = len(rows)
    cache = {}

    def minor(i, cols):
        if not cols:
            return ONE
        key = (i, cols)
        if key in cache:
            return cache[key]
        total = Poly()
        for pos, j in enumerate(cols):
            entry = rows[i][j]
            if entry.is_zero():
                continue
            sub = minor(i + 1, cols[:pos] + cols[pos + 1:])
            term = entry * sub
            total = total + term if pos % 2 == 0 else total - term
        cache[key] = total
        return total

    return minor(0, tuple(range(n)))


def _det_bareiss(rows):
    n = len(rows)
    m = [row[:] for row in rows]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = div_exact(num, prev)
        prev = m[k][k]
    result = m[n - 1][n - 1]
    return -result if sign < 0 else result
