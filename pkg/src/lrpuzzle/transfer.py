"""Finite-window transfer matrices on particle words.

The four row operators are contractions of the rhombus tensor along a row of
blocks: the plain steps T+ and T- (no shaded tiles, plain counting) and the
one-parameter families T~+(u), T~-(u) whose far field is the identity.  Free
fermion operators Tf(u) and Tff(u) act on two-letter words directly.  State
vectors are finitely supported maps from words to polynomials.
"""

from __future__ import annotations

from .combinatorics import (
    EMPTY, GREEN, RED, Word, concat, partition_word, split, word_partition,
)
from .lattice import MINUS, PLUS, R_SHADED, R_UNIT
from .poly import Poly

_ENTRIES = sorted(R_UNIT | {R_SHADED})


def _build_table(orientation, spectral):
    """Block transitions (slant, letter) -> [(slant', letter', u-exponent)].

    Orientation 0 reads a block as the tensor entry (slant, in, slant', out),
    orientation 2 as (in, slant', out, slant).  With a spectral parameter the
    shaded entry is kept and each block whose outgoing letter matches the
    operator's drift direction picks up one power of u; without it the shaded
    entry is dropped and all weights are one.
    """
    table = {}
    for e in _ENTRIES:
        if orientation == 0:
            l, g, lp, f = e
        else:
            g, lp, f, l = e
        if spectral is None:
            if e == R_SHADED:
                continue
            expo = 0
        else:
            drift = PLUS if orientation == 0 else MINUS
            expo = (1 if f == drift else 0) - (1 if e == R_SHADED else 0)
        table.setdefault((l, g), []).append((lp, f, expo))
    return table


_TILDE_PLUS = _build_table(0, spectral=True)
_TILDE_MINUS = _build_table(2, spectral=True)
_T_PLUS = _build_table(0, spectral=None)
_T_MINUS = _build_table(2, spectral=None)


def _row_transitions(table, a, b, word, pad=3):
    """All single-row transitions from word: yields (new_word, u_exponent).

    The scan runs over a window padded with sea letters; the window grows
    until no output word touches its fringe, so results are independent of
    the window choice.
    """
    while True:
        lo, hi = word.support()
        if lo > hi:
            lo = hi = word.start
        lo -= 2 * pad
        hi += 2 * pad
        sites = range(lo, hi + 1, 2)
        results = []
        stack = [(lo, a, (), 0)]
        while stack:
            d, slant, letters, expo = stack.pop()
            if d > hi:
                if slant == b:
                    results.append((Word(lo, letters), expo))
                continue
            g = word.letter(d)
            for lp, f, de in table.get((slant, g), ()):
                stack.append((d + 2, lp, letters + (f,), expo + de))
        ok = True
        for w, _ in results:
            s_lo, s_hi = w.support()
            if s_lo <= lo or s_hi >= hi:
                ok = False
                break
        if ok:
            return results
        pad += 2


def _apply_table(vec, table, a, b, u=None):
    out = {}
    powers = {}
    for word, coeff in vec.items():
        for w, expo in _row_transitions(table, a, b, word):
            if u is None:
                weight = coeff
            else:
                if expo not in powers:
                    powers[expo] = u ** expo
                weight = coeff * powers[expo]
            if w in out:
                out[w] = out[w] + weight
            else:
                out[w] = weight
    return {w: c for w, c in out.items() if not (isinstance(c, Poly) and c.is_zero())}


def _as_vector(arg):
    if isinstance(arg, Word):
        return {arg: Poly.const(1)}
    return arg


def apply_t_plus(vec):
    """One plain step with the right half-step relabelling."""
    return _apply_table(_as_vector(vec), _T_PLUS, MINUS, PLUS)


def apply_t_minus(vec):
    """One plain step with the left half-step relabelling."""
    return _apply_table(_as_vector(vec), _T_MINUS, MINUS, PLUS)


def apply_t_squared(vec):
    """The two-row step (composition of the two plain steps)."""
    return apply_t_minus(apply_t_plus(vec))


def apply_tilde_plus(vec, u):
    """The commuting family member that is the identity at infinity and acts
    as Tf(u) on the free sector."""
    return _apply_table(_as_vector(vec), _TILDE_PLUS, MINUS, MINUS, u)


def apply_tilde_minus(vec, u):
    """Mirror family member, acting as Tff(u) on the free sector."""
    return _apply_table(_as_vector(vec), _TILDE_MINUS, PLUS, PLUS, u)


# ---------------------------------------------------------------------------
# free fermion operators
# ---------------------------------------------------------------------------

def _red_run_moves(word):
    """Tf moves: any suffix of each movable red run steps one site right."""
    letters = list(word.letters)
    n = len(letters)
    runs = []
    i = 0
    while i < n:
        if letters[i] == RED:
            j = i
            while j + 1 < n and letters[j + 1] == RED:
                j += 1
            if j + 1 < n:  # a run touching the right padding cannot move
                runs.append((i, j))
            i = j + 1
        else:
            i += 1

    def rec(idx, current, expo):
        if idx == len(runs):
            yield Word(word.start, tuple(current)), expo
            return
        i, j = runs[idx]
        for length in range(j - i + 2):
            if length == 0:
                yield from rec(idx + 1, current, expo)
            else:
                # shift the suffix [j-length+1 .. j] one step right
                moved = list(current)
                moved[j + 1] = RED
                moved[j - length + 1] = GREEN
                yield from rec(idx + 1, moved, expo + length)

    yield from rec(0, letters, 0)


def _green_run_moves(word):
    """Tff moves: any prefix of each green run steps one site left."""
    letters = list(word.letters)
    n = len(letters)
    runs = []
    i = 0
    while i < n:
        if letters[i] == GREEN:
            j = i
            while j + 1 < n and letters[j + 1] == GREEN:
                j += 1
            if i > 0:  # a run touching the left padding cannot move
                runs.append((i, j))
            i = j + 1
        else:
            i += 1

    def rec(idx, current, expo):
        if idx == len(runs):
            yield Word(word.start, tuple(current)), expo
            return
        i, j = runs[idx]
        for length in range(j - i + 2):
            if length == 0:
                yield from rec(idx + 1, current, expo)
            else:
                moved = list(current)
                moved[i - 1] = GREEN
                moved[i + length - 1] = RED
                yield from rec(idx + 1, moved, expo + length)

    yield from rec(0, letters, 0)


def apply_tf(vec, u):
    """Free fermion step: red particles move right by at most one, weight u
    per move; equivalently greens jump left with u per crossing."""
    out = {}
    for word, coeff in _as_vector(vec).items():
        if not word.is_fock():
            raise ValueError("Tf acts on free-fermion words only")
        for w, expo in _red_run_moves(word):
            weight = coeff * u ** expo
            out[w] = out.get(w, Poly()) + weight
    return {w: c for w, c in out.items() if not c.is_zero()}


def apply_tff(vec, u):
    """Mirror free fermion step: greens move left by at most one."""
    out = {}
    for word, coeff in _as_vector(vec).items():
        if not word.is_fock():
            raise ValueError("Tff acts on free-fermion words only")
        for w, expo in _green_run_moves(word):
            weight = coeff * u ** expo
            out[w] = out.get(w, Poly()) + weight
    return {w: c for w, c in out.items() if not c.is_zero()}


# ---------------------------------------------------------------------------
# named operator dispatch
# ---------------------------------------------------------------------------

def apply(kind, vec, u=None):
    """Apply a transfer operator by name: one of T+, T-, T2, T~+, T~-, Tf, Tff."""
    if kind == "T+":
        return apply_t_plus(vec)
    if kind == "T-":
        return apply_t_minus(vec)
    if kind == "T2":
        return apply_t_squared(vec)
    if kind == "T~+":
        return apply_tilde_plus(vec, u)
    if kind == "T~-":
        return apply_tilde_minus(vec, u)
    if kind == "Tf":
        return apply_tf(vec, u)
    if kind == "Tff":
        return apply_tff(vec, u)
    raise ValueError(f"unknown transfer kind {kind!r}")


def vectors_equal(v1, v2):
    if set(v1) != set(v2):
        return False
    return all(v1[w] == v2[w] for w in v1)


# ---------------------------------------------------------------------------
# derived quantities
# ---------------------------------------------------------------------------

def skew_schur_via_transfer(lam, mu, us=(), vs=()):
    """Matrix element of a product of free steps between partition words.

    Equals the supersymmetric skew Schur function of lam/mu in the given
    variable lists.
    """
    vec = {partition_word(lam): Poly.const(1)}
    for upar in us:
        vec = apply_tf(vec, upar)
    for vpar in vs:
        vec = apply_tff(vec, vpar)
    return vec.get(partition_word(mu), Poly())


def coproduct_coeffs(lam, extra_steps=0):
    """Coproduct structure constants of the partition lam.

    Applies the two-row step until all crossings have resolved, splits the
    result through the offset concatenation, and returns the integer map
    (mu, nu) -> coefficient.
    """
    lam = tuple(lam)
    w = partition_word(lam)
    k = max(w.n_plus(), -w.n_minus()) + extra_steps
    vec = {w: Poly.const(1)}
    for _ in range(k):
        vec = apply_t_squared(vec)
    out = {}
    for word, coeff in vec.items():
        fm, fp = split(word, k)
        c = coeff.constant_term()
        if coeff != Poly.const(c):
            raise AssertionError(f"non-constant coproduct coefficient {coeff}")
        out[(word_partition(fm), word_partition(fp))] = c
    return out


def check_commutation(kind_a, kind_b, words, ua=None, ub=None):
    """True if the two operators commute on every given basis word."""
    for w in words:
        ab = apply(kind_a, apply(kind_b, w, ub), ua)
        ba = apply(kind_b, apply(kind_a, w, ua), ub)
        if not vectors_equal(ab, ba):
            return False
    return True
