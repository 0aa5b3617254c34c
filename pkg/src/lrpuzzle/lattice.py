"""Edge labels, the rhombus weight tensors, and symbolic Yang-Baxter checks.

Rhombi carry four edge labels from {-, +, 0}; the weight tensor R(x) has unit
entries on nine label patterns, spectral weight x on the shaded pattern
(-,+,-,+), and zero elsewhere.  The same table serves all three rhombus
orientations, read in each orientation's canonical frame; the companion
tensor R*(x) intertwines rhombi of equal orientation.
"""

from __future__ import annotations

from itertools import product

from .poly import Poly, v

MINUS, PLUS, ZERO, ZTILDE = -1, 1, 0, 2
BOUNDARY = (MINUS, PLUS, ZERO)

LABEL_CHARS = {MINUS: "-", PLUS: "+", ZERO: "0", ZTILDE: "~"}

# correspondence with the 0/1-string notation, used only for I/O
KT_NOTATION = {MINUS: "0", PLUS: "1", ZERO: "10", ZTILDE: "01"}

# unit entries of R(x); tuples are (left, bottom, right, top) in the frame of
# the first orientation, and the canonical reading of the two rotated frames
R_UNIT = frozenset({
    (MINUS, MINUS, MINUS, MINUS),
    (MINUS, PLUS, PLUS, ZERO),
    (MINUS, PLUS, ZERO, MINUS),
    (MINUS, ZERO, MINUS, ZERO),
    (PLUS, MINUS, PLUS, MINUS),
    (PLUS, PLUS, PLUS, PLUS),
    (PLUS, ZERO, MINUS, PLUS),
    (ZERO, MINUS, MINUS, PLUS),
    (ZERO, PLUS, ZERO, PLUS),
})
R_SHADED = (MINUS, PLUS, MINUS, PLUS)

# entries of R*(x): unit positions and the three x positions
RSTAR_UNIT = frozenset({
    (MINUS, MINUS, MINUS, MINUS),
    (MINUS, PLUS, PLUS, MINUS),
    (MINUS, ZERO, ZERO, MINUS),
    (PLUS, MINUS, MINUS, PLUS),
    (PLUS, PLUS, PLUS, PLUS),
    (PLUS, ZERO, ZERO, PLUS),
    (ZERO, MINUS, MINUS, ZERO),
    (ZERO, PLUS, PLUS, ZERO),
    (ZERO, ZERO, ZERO, ZERO),
})
RSTAR_X = frozenset({
    (MINUS, PLUS, MINUS, PLUS),
    (MINUS, ZERO, MINUS, ZERO),
    (ZERO, PLUS, ZERO, PLUS),
})

SHADED_KIND = {0: "gamma+", 1: "gamma-", 2: "gamma0"}


class RTensor:
    """Rhombus weight tensor: map from four edge labels to a polynomial.

    The entry table is frame-relative, so the three orientations share it;
    orientation only records which shaded tile pair carries the weight x.
    """

    def __init__(self, units, xentries, x, orientation=None, shaded=None):
        self.units = frozenset(units)
        self.xentries = frozenset(xentries)
        self.x = x
        self.orientation = orientation
        self.shaded = shaded

    def weight(self, i, j, k, l):
        e = (i, j, k, l)
        if e in self.units:
            return Poly.const(1)
        if e in self.xentries:
            return self.x
        return Poly()

    def entries(self):
        """All nonzero entries as (labels, Poly) pairs."""
        out = []
        for e in sorted(self.units):
            out.append((e, Poly.const(1)))
        for e in sorted(self.xentries):
            out.append((e, self.x))
        return out

    def rotation_symmetric(self):
        """Weight invariance under (i,j,k,l) -> (k,l,i,j)."""
        for e in self.units:
            if (e[2], e[3], e[0], e[1]) not in self.units:
                return False
        for e in self.xentries:
            if (e[2], e[3], e[0], e[1]) not in self.xentries:
                return False
        return True


def r_matrix(orientation, x):
    """The rhombus tensor R(x) in one of its three orientations (0, 1, 2).

    Orientation 0 carries the weight x on the gamma+ pair; the 120-degree
    rotations move it to the gamma0 and gamma- pairs.  Entries in the
    canonical frame agree for all three.
    """
    if orientation not in (0, 1, 2):
        raise ValueError("orientation must be 0, 1 or 2")
    return RTensor(R_UNIT, {R_SHADED}, x, orientation,
                   ("gamma+", "gamma0", "gamma-")[orientation])


def r_star_matrix(x):
    """The companion tensor R*(x) intertwining equal-orientation rhombi."""
    return RTensor(RSTAR_UNIT, RSTAR_X, x)


class YbeReport:
    """Outcome of a symbolic Yang-Baxter verification."""

    def __init__(self, name, passed, boundaries, shaded_classes, failures):
        self.name = name
        self.passed = passed
        self.boundaries = boundaries
        self.shaded_classes = shaded_classes
        self.failures = failures

    def to_json(self):
        return {
            "identity": self.name,
            "passed": self.passed,
            "boundaries_checked": self.boundaries,
            "shaded_boundary_classes": self.shaded_classes,
            "failures": self.failures,
        }


def _canonical_class(labels):
    """Cyclic-rotation representative of a boundary word."""
    s = "".join(LABEL_CHARS[c] for c in labels)
    return min(s[i:] + s[:i] for i in range(len(s)))


def _read(tensor, quad):
    """Weight of a pasted rhombus; edges listed counterclockwise from the
    edge following the canonical starting edge."""
    i, j, k, l = quad
    return tensor.weight(j, k, l, i)


def verify_ybe():
    """Exhaustive symbolic check of the hexagon Yang-Baxter identity.

    Three pairwise-rotated rhombi with spectral parameters x, y, z = -x-y tile
    a hexagon in two ways; for every assignment of the six external edges the
    two contractions agree.  Returns a report listing the boundary classes on
    which shaded tiles contribute.
    """
    x, y = v("x", 1), v("y", 1)
    z = Poly() - x - y
    t0, t1, t2 = r_matrix(0, x), r_matrix(1, y), r_matrix(2, z)
    failures = []
    shaded = set()
    for e in product(BOUNDARY, repeat=6):
        e0, e1, e2, e3, e4, e5 = e
        lhs = Poly()
        rhs = Poly()
        saw_shaded = False
        for i0 in BOUNDARY:
            for i2 in BOUNDARY:
                for i4 in BOUNDARY:
                    quads = ((i0, e0, e1, i2), (i2, e2, e3, i4), (i4, e4, e5, i0))
                    term = _read(t0, quads[0]) * _read(t2, quads[1]) * _read(t1, quads[2])
                    if term:
                        lhs = lhs + term
                        saw_shaded |= any(
                            (q[1], q[2], q[3], q[0]) == R_SHADED for q in quads)
        for j1 in BOUNDARY:
            for j3 in BOUNDARY:
                for j5 in BOUNDARY:
                    quads = ((e0, j1, j5, e5), (e2, j3, j1, e1), (e4, j5, j3, e3))
                    term = _read(t2, quads[0]) * _read(t1, quads[1]) * _read(t0, quads[2])
                    if term:
                        rhs = rhs + term
                        saw_shaded |= any(
                            (q[1], q[2], q[3], q[0]) == R_SHADED for q in quads)
        if lhs != rhs:
            failures.append({
                "boundary": "".join(LABEL_CHARS[c] for c in e),
                "difference": str(lhs - rhs),
            })
        if saw_shaded:
            shaded.add(_canonical_class(e))
    return YbeReport("ybe", not failures, 3 ** 6, sorted(shaded), failures)


def verify_ybe_star():
    """Exhaustive symbolic check of the mixed identity with one R*.

    R*_{12}(z-y) R_{13}(z) R_{23}(y) = R_{23}(y) R_{13}(z) R*_{12}(z-y)
    on three label strands, checked entrywise over all 3^6 boundary choices.
    """
    y, z = v("y", 1), v("z", 1)
    x = z - y
    rs = r_star_matrix(x)
    ry = r_matrix(0, y)
    rz = r_matrix(0, z)
    failures = []
    shaded = set()

    for ins in product(BOUNDARY, repeat=3):
        i1, i2, i3 = ins
        for outs in product(BOUNDARY, repeat=3):
            o1, o2, o3 = outs
            lhs = Poly()
            rhs = Poly()
            for a1 in BOUNDARY:
                for a2 in BOUNDARY:
                    for a3 in BOUNDARY:
                        # R* last: strand 3 crosses 2 then 1, then 1-2 swap
                        lhs = lhs + (ry.weight(i2, i3, a2, a3)
                                     * rz.weight(i1, a3, a1, o3)
                                     * rs.weight(a1, a2, o1, o2))
                        # R* first: 1-2 swap, then strand 3 crosses 1 then 2
                        rhs = rhs + (rs.weight(i1, i2, a1, a2)
                                     * rz.weight(a1, i3, o1, a3)
                                     * ry.weight(a2, a3, o2, o3))
            if lhs != rhs:
                failures.append({
                    "boundary": "".join(LABEL_CHARS[c] for c in ins + outs),
                    "difference": str(lhs - rhs),
                })
            elif lhs.degree() > 0:
                shaded.add("".join(LABEL_CHARS[c] for c in ins + outs))
    return YbeReport("ybe-star", not failures, 3 ** 6, sorted(shaded), failures)
