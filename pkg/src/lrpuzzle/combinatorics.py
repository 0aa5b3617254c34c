"""Partitions, binary boundary words, and particle words on the half-integer line.

Particle configurations live on sites Z+1/2 with letters GREEN (-1), EMPTY (0),
RED (+1), green padding far left and red padding far right.  Words are stored
trimmed, as (start, letters) where start is the doubled coordinate (an odd
integer, twice the site) of the first explicit letter.  Two-letter words (no
EMPTY) form the free-fermion sector and are in bijection with partitions in
their zero-charge subspace.
"""

from __future__ import annotations

from itertools import product

GREEN, EMPTY, RED = -1, 0, 1

LETTER_CHARS = {GREEN: "-", EMPTY: "0", RED: "+"}
CHAR_LETTERS = {"-": GREEN, "0": EMPTY, "+": RED}


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------

def check_partition(parts):
    """Validate and normalise a partition to a tuple of positive parts."""
    parts = tuple(int(p) for p in parts if p)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in partition {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    return parts


def size(parts):
    return sum(parts)


def transpose(parts):
    parts = check_partition(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > i) for i in range(parts[0]))


def contains(outer, inner):
    """True if inner fits inside outer as Young diagrams."""
    outer, inner = check_partition(outer), check_partition(inner)
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def fits_in_box(parts, k, n):
    """True if the diagram fits in the k x (n-k) rectangle."""
    parts = check_partition(parts)
    return len(parts) <= k and (not parts or parts[0] <= n - k)


def partitions_in_box(k, n):
    """All partitions inside the k x (n-k) rectangle."""
    width = n - k
    out = []

    def rec(prefix, maxpart):
        if len(prefix) > k:
            return
        out.append(tuple(p for p in prefix if p))
        if len(prefix) == k:
            return
        for p in range(maxpart, 0, -1):
            rec(prefix + [p], p)

    rec([], width)
    return sorted(set(out), key=lambda q: (sum(q), q))


def partitions_of_size_at_most(n):
    """All partitions with at most n boxes."""
    out = [()]

    def rec(prefix, remaining, maxpart):
        for p in range(min(remaining, maxpart), 0, -1):
            q = prefix + (p,)
            out.append(q)
            rec(q, remaining - p, p)

    rec((), n, n)
    return sorted(set(out), key=lambda q: (sum(q), q))


# ---------------------------------------------------------------------------
# binary boundary words (k '-' letters among n)
# ---------------------------------------------------------------------------

def partition_from_binary(word):
    """Partition traced by a '+-' word: '-' steps up, '+' steps right.

    Reading the word left to right gives the lattice path from the lower left
    corner of the k x (n-k) rectangle, where k is the number of '-' letters.
    """
    word = str(word)
    if any(ch not in "+-" for ch in word):
        raise ValueError(f"binary word must be over '+-': {word!r}")
    ups = [i for i, ch in enumerate(word) if ch == "-"]
    parts = [i - r for r, i in enumerate(ups)]
    return check_partition(reversed(parts))


def partition_to_binary(parts, k, n):
    """Binary word of a partition inside the k x (n-k) rectangle."""
    parts = check_partition(parts)
    if not fits_in_box(parts, k, n):
        raise ValueError(f"partition {parts} does not fit in {k}x{n - k}")
    w = partition_word(parts)
    return "".join(
        "-" if w.letter(d) == GREEN else "+"
        for d in range(-2 * k + 1, 2 * (n - k), 2)
    )


def complement_bar(parts, k, n):
    """Complement inside k x (n-k) after 180-degree rotation (word reversal)."""
    return partition_from_binary(partition_to_binary(parts, k, n)[::-1])


def binary_words(k, n):
    """All '+-' words of length n with k minus letters."""
    out = []
    for bits in product("-+", repeat=n):
        if bits.count("-") == k:
            out.append("".join(bits))
    return out


# ---------------------------------------------------------------------------
# particle words
# ---------------------------------------------------------------------------

class Word:
    """Trimmed particle configuration with green/red padding.

    start is the doubled coordinate of the first explicit letter (odd int);
    the site of letters[i] is (start + 2*i) / 2.  Sites below start are GREEN,
    sites at or above start + 2*len(letters) are RED.
    """

    __slots__ = ("start", "letters")

    def __init__(self, start, letters):
        letters = tuple(letters)
        if start % 2 == 0:
            raise ValueError("start must be an odd doubled coordinate")
        if any(l not in (GREEN, EMPTY, RED) for l in letters):
            raise ValueError(f"bad letters {letters}")
        lo, hi = 0, len(letters)
        while lo < hi and letters[lo] == GREEN:
            lo += 1
        while hi > lo and letters[hi - 1] == RED:
            hi -= 1
        object.__setattr__(self, "start", start + 2 * lo)
        object.__setattr__(self, "letters", letters[lo:hi])

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __eq__(self, other):
        return (isinstance(other, Word) and self.start == other.start
                and self.letters == other.letters)

    def __hash__(self):
        return hash((self.start, self.letters))

    def __repr__(self):
        body = "".join(LETTER_CHARS[l] for l in self.letters)
        return f"Word({self.start}, '{body}')"

    def letter(self, d):
        """Letter at doubled coordinate d (any odd integer)."""
        if d < self.start:
            return GREEN
        i = (d - self.start) // 2
        if i >= len(self.letters):
            return RED
        return self.letters[i]

    def support(self):
        """Doubled coordinates [lo, hi] bounding the explicit letters."""
        if not self.letters:
            return self.start, self.start - 2
        return self.start, self.start + 2 * (len(self.letters) - 1)

    def window(self, lo, hi):
        """Letters over doubled coordinates lo..hi inclusive (both odd)."""
        return tuple(self.letter(d) for d in range(lo, hi + 1, 2))

    def is_fock(self):
        """True if no empty spots occur (free-fermion sector)."""
        return EMPTY not in self.letters

    def charge(self):
        """Sum of letter - sign over all sites (doubled convention on F)."""
        c = 0
        # left padding on positive sites, right padding on negative sites
        if self.start > 1:
            c -= self.start - 1
        end = self.start + 2 * len(self.letters)
        if end < 1:
            c += 1 - end
        for i, l in enumerate(self.letters):
            d = self.start + 2 * i
            c += l - (1 if d > 0 else -1)
        return c

    def emptiness(self):
        return self.letters.count(EMPTY)

    def shift(self, j=1):
        """Apply the shift operator j times (content moves right by j sites)."""
        return Word(self.start + 2 * j, self.letters)

    def n_minus(self):
        """Largest integer N with only green strictly left of N."""
        return (self.start - 1) // 2

    def n_plus(self):
        """Smallest integer N with only red strictly right of N."""
        if not self.letters:
            return (self.start - 1) // 2
        return (self.start + 2 * len(self.letters) - 1) // 2

    def n_minus_zero(self):
        """Position of the leftmost red minus one half, as an integer."""
        for i, l in enumerate(self.letters):
            if l == RED:
                return (self.start + 2 * i - 1) // 2
        return (self.start + 2 * len(self.letters) - 1) // 2

    def n_plus_zero(self):
        """Position of the rightmost green plus one half, as an integer."""
        for i in range(len(self.letters) - 1, -1, -1):
            if self.letters[i] == GREEN:
                return (self.start + 2 * i + 1) // 2
        return (self.start - 1) // 2


VACUUM = Word(1, ())


def word_from_string(start, body):
    """Word from a string over '-0+' starting at doubled coordinate start."""
    return Word(start, tuple(CHAR_LETTERS[ch] for ch in body))


# ---------------------------------------------------------------------------
# partitions <-> zero-charge free-fermion words
# ---------------------------------------------------------------------------

def partition_word(parts):
    """Zero-charge word of a partition: greens sit at sites part_k - k + 1/2."""
    parts = check_partition(parts)
    m = len(parts)
    greens = {2 * (parts[k] - (k + 1)) + 1 for k in range(m)}
    lo = -2 * m - 1
    hi = 2 * parts[0] - 1 if parts else -1
    letters = tuple(GREEN if d in greens or d < -2 * m else RED
                    for d in range(lo, hi + 1, 2))
    return Word(lo, letters)


def word_partition(w):
    """Partition of a zero-charge free-fermion word; inverse of partition_word."""
    if not w.is_fock():
        raise ValueError(f"{w!r} has empty spots")
    if w.charge() != 0:
        raise ValueError(f"{w!r} has nonzero charge {w.charge()}")
    explicit = [w.start + 2 * i for i, l in enumerate(w.letters) if l == GREEN]
    explicit.reverse()
    parts = []
    k = 0
    pad = w.start - 2
    it = iter(explicit)
    while True:
        k += 1
        d = next(it, None)
        if d is None:
            d, pad = pad, pad - 2
        p = (d + 2 * k - 1) // 2
        if p <= 0:
            break
        parts.append(p)
    return check_partition(parts)


# ---------------------------------------------------------------------------
# concatenation
# ---------------------------------------------------------------------------

def concat(fm, fp, k=0):
    """Concatenation of two free-fermion words with offset k.

    Keeps the left of fm shifted by -k (reds become empty) and the right of fp
    shifted by +k (greens become empty).  Requires n_plus(fm) <= k and
    n_minus(fp) >= -k, the domain on which the map is injective.
    """
    if not (fm.is_fock() and fp.is_fock()):
        raise ValueError("concat requires free-fermion words")
    if fm.n_plus() > k:
        raise ValueError(f"concat precondition violated: N+({fm!r}) > {k}")
    if fp.n_minus() < -k:
        raise ValueError(f"concat precondition violated: N-({fp!r}) < {-k}")
    lo = min(-1, 2 * (fm.n_minus() - k) + 1)
    hi = max(1, 2 * (fp.n_plus() + k) - 1)
    letters = []
    for d in range(lo, hi + 1, 2):
        if d < 0:
            l = fm.letter(d + 2 * k)
            letters.append(GREEN if l == GREEN else EMPTY)
        else:
            l = fp.letter(d - 2 * k)
            letters.append(RED if l == RED else EMPTY)
    return Word(lo, letters)


def split(w, k=0):
    """Inverse of concat at offset k; raises if w is not in its image."""
    lo, hi = w.support()
    fm_letters = []
    for d in range(min(lo, -1), 0, 2):
        l = w.letter(d)
        if l == RED:
            raise ValueError(f"{w!r} has a red particle left of zero")
        fm_letters.append(GREEN if l == GREEN else RED)
    fp_letters = []
    for d in range(1, max(hi, 1) + 1, 2):
        l = w.letter(d)
        if l == GREEN:
            raise ValueError(f"{w!r} has a green particle right of zero")
        fp_letters.append(GREEN if l == EMPTY else RED)
    fm = Word(min(lo, -1), fm_letters).shift(k)
    fp = Word(1, fp_letters).shift(-k)
    return fm, fp


def fock_words_in_window(radius):
    """All free-fermion words with explicit letters within |site| < radius."""
    n = 2 * radius
    lo = -2 * radius + 1
    out = []
    for letters in product((GREEN, RED), repeat=n):
        out.append(Word(lo, letters))
    return sorted(set(out), key=lambda w: (w.start, w.letters))


def words_in_window(radius, charge=None):
    """All particle words with explicit letters within |site| < radius.

    Optionally restrict to a fixed charge.
    """
    n = 2 * radius
    lo = -2 * radius + 1
    out = set()
    for letters in product((GREEN, EMPTY, RED), repeat=n):
        w = Word(lo, letters)
        if charge is None or w.charge() == charge:
            out.add(w)
    return sorted(out, key=lambda w: (w.start, w.letters))
