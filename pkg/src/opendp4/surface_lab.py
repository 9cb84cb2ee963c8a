"""Pencils of quadrics in P^4: points, degenerate members, evaluations.

A surface is the base locus of a pencil of integral quadratic forms in
X0..X4; the open surface is its complement of the hyperplane V(X0).
Points are searched by slicing: on each integer tuple (X0..X3) the two
forms become polynomials of degree at most two in X4 and are solved
exactly, which finds every primitive point inside the height box.

Degenerate pencil members are the roots of the binary quintic
det(lambda*M1 + mu*M2) over the doubled Gram matrices (the doubling
scales the quintic by 2^5 and moves no root).  A rank-4 member is a
cone; its vertex is the kernel of its Gram matrix.

Local Brauer evaluations come in three closed forms, built on the
symbols of residue_symbols: a quadratic symbol (t(x), d) over the
rationals, a sum of quadratic symbols over the places of Q(sqrt 5)
above the base place, and minus the invariant of a cyclotomic norm
residue symbol.  An audit evaluates a recipe on every point found,
checks that each point's invariants sum to zero over all places, and
tallies the values at the bad places against the subsample of integral
points; a strict excess of locally realized values is evidence that
strong approximation fails.
"""

import math
import warnings
from collections import namedtuple
from fractions import Fraction

import numpy as np
import sympy
from sympy.ntheory import factorint

from .residue_symbols import (PlaceQ, QuadFieldPlace, artin_cyclotomic,
                              cyclic_symbol_invariant, hilbert_qp,
                              hilbert_sqrt5, rational_places_of,
                              sqrt5_places_of)

# index pairs (i, j), i <= j, of the fifteen quadratic monomials XiXj
MONOMIALS = ((0, 0), (0, 1), (0, 2), (0, 3), (0, 4),
             (1, 1), (1, 2), (1, 3), (1, 4),
             (2, 2), (2, 3), (2, 4),
             (3, 3), (3, 4), (4, 4))

_X4_LINEAR = (4, 8, 11, 13)   # coefficient slots of X0X4, X1X4, X2X4, X3X4
_X4_SQUARE = 14


def form_value(coeffs, x):
    """Value of a 15-coefficient quadratic form at a 5-tuple."""
    return sum(c * x[i] * x[j] for c, (i, j) in zip(coeffs, MONOMIALS))


def doubled_gram(coeffs):
    """The integer symmetric matrix M with x^T M x = 2 * form."""
    m = [[0] * 5 for _ in range(5)]
    for c, (i, j) in zip(coeffs, MONOMIALS):
        if i == j:
            m[i][i] = 2 * int(c)
        else:
            m[i][j] = m[j][i] = int(c)
    return m


def _check_form(coeffs, name):
    coeffs = tuple(int(c) for c in coeffs)
    if len(coeffs) != 15:
        raise ValueError("%s needs 15 coefficients, got %d"
                         % (name, len(coeffs)))
    if not any(coeffs):
        raise ValueError("%s is the zero form" % name)
    return coeffs


def _pencil_quintic_coeffs(q1, q2):
    """Coefficients (a5..a0) of det(lambda*M1 + mu*M2), a_k on
    lambda^k mu^(5-k), by exact interpolation at six nodes."""
    m1 = sympy.Matrix(doubled_gram(q1))
    m2 = sympy.Matrix(doubled_gram(q2))
    nodes = list(range(6))
    values = [int((t * m1 + m2).det()) for t in nodes]
    coeffs = [Fraction(0)] * 6
    for t, val in zip(nodes, values):
        num = Fraction(val)
        lag = [Fraction(1)]
        for s in nodes:
            if s != t:
                num /= t - s
                lag = [a - s * b for a, b in
                       zip(lag + [Fraction(0)], [Fraction(0)] + lag)]
        for k, c in enumerate(lag):
            coeffs[k] += num * c
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise AssertionError("quintic interpolation went non-integral")
        out.append(int(c))
    return tuple(out)        # out[k] multiplies lambda^(5-k): a5 first


class PencilSurface:
    """The base locus of a pencil of two integral quadrics in P^4.

    Holds the 15 coefficients of each form over MONOMIALS.  Rejects
    pencils whose quintic det(lambda*M1 + mu*M2) has a repeated root
    over a closure (counting the root at infinity), since then some
    member drops below rank 4 and the surface is singular.
    """

    __slots__ = ("q1", "q2", "quintic", "fixture_id")

    def __init__(self, q1, q2, fixture_id=None):
        self.q1 = _check_form(q1, "first form")
        self.q2 = _check_form(q2, "second form")
        self.fixture_id = fixture_id
        self.quintic = _pencil_quintic_coeffs(self.q1, self.q2)
        t = sympy.Symbol("t")
        poly = sympy.Poly(sum(c * t ** (5 - k)
                              for k, c in enumerate(self.quintic)), t)
        if 5 - poly.degree() >= 2:
            raise ValueError("pencil is singular: the quintic has a "
                             "repeated root at infinity")
        if sympy.gcd(poly, poly.diff(t)).degree() > 0:
            raise ValueError("pencil is singular: the quintic has a "
                             "repeated root")

    def value1(self, x):
        return form_value(self.q1, x)

    def value2(self, x):
        return form_value(self.q2, x)

    def contains(self, x):
        return self.value1(x) == 0 and self.value2(x) == 0

    def document(self):
        doc = {"kind": "pencil-surface",
               "q1": list(self.q1), "q2": list(self.q2)}
        if self.fixture_id is not None:
            doc["fixture"] = self.fixture_id
        return doc

    @classmethod
    def from_document(cls, doc):
        if doc.get("kind") != "pencil-surface":
            raise ValueError("not a pencil-surface document")
        return cls(doc["q1"], doc["q2"], fixture_id=doc.get("fixture"))

    def __repr__(self):
        tag = "" if self.fixture_id is None else ", fixture %s" % self.fixture_id
        return "PencilSurface(%r, %r%s)" % (self.q1, self.q2, tag)


class RatPoint:
    """A rational projective point as a primitive 5-tuple up to sign.

    Normalized so the first nonzero coordinate is positive; integral
    means X0 = 1 after normalization, i.e. the point is a section of
    the integral model away from the hyperplane.
    """

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != 5:
            raise ValueError("a point has 5 coordinates")
        g = math.gcd(*coords)
        if g == 0:
            raise ValueError("the zero tuple is not a projective point")
        coords = tuple(c // g for c in coords)
        lead = next(c for c in coords if c != 0)
        if lead < 0:
            coords = tuple(-c for c in coords)
        self.coords = coords

    @property
    def is_integral(self):
        return self.coords[0] == 1

    @property
    def on_hyperplane(self):
        return self.coords[0] == 0

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        return isinstance(other, RatPoint) and self.coords == other.coords

    def __lt__(self, other):
        return self.coords < other.coords

    def __hash__(self):
        return hash(("RatPoint", self.coords))

    def __repr__(self):
        return "(" + ":".join(str(c) for c in self.coords) + ")"


def _x4_free(coeffs):
    return (all(coeffs[i] == 0 for i in _X4_LINEAR)
            and coeffs[_X4_SQUARE] == 0)


def _slice_parts(coeffs, x0, x1, x2, x3, sq1, sq2, sq3, p12, p13, p23):
    """(B, A): the X4-free part and the X4 coefficient on a slice grid."""
    c = coeffs
    b = (c[0] * x0 * x0 + c[1] * x0 * x1 + c[2] * x0 * x2 + c[3] * x0 * x3
         + c[5] * sq1 + c[6] * p12 + c[7] * p13
         + c[9] * sq2 + c[10] * p23 + c[12] * sq3)
    a = c[4] * x0 + c[8] * x1 + c[11] * x2 + c[13] * x3
    return b, a


def _quadratic_x4_roots(cc, aa, bb):
    """Integer roots of cc*t^2 + aa*t + bb = 0; None when identically 0."""
    if cc == 0:
        if aa == 0:
            return None if bb == 0 else []
        return [-bb // aa] if bb % aa == 0 else []
    disc = aa * aa - 4 * cc * bb
    if disc < 0:
        return []
    r = math.isqrt(disc)
    if r * r != disc:
        return []
    roots = []
    for s in (r, -r) if r else (0,):
        if (-aa + s) % (2 * cc) == 0:
            roots.append((-aa + s) // (2 * cc))
    return sorted(set(roots))


def _full_enumeration(surface, height):
    found = set()
    rng = range(-height, height + 1)
    for x0 in range(height + 1):
        for x1 in rng:
            for x2 in rng:
                for x3 in rng:
                    for x4 in rng:
                        x = (x0, x1, x2, x3, x4)
                        if any(x) and surface.contains(x):
                            found.add(RatPoint(x))
    return sorted(found)


def find_points(surface, height=60):
    """All primitive rational points with max |coordinate| <= height.

    Slices over (X0..X3) with X0 >= 0 and solves both forms for X4
    exactly; a form quadratic in X4 contributes through the elimination
    of the square term and through exact square roots on the residual
    slices.  Only when neither form involves X4 at all does the search
    fall back to plain enumeration of the whole box.
    """
    height = int(height)
    if height < 1:
        raise ValueError("height must be positive")
    q1, q2 = surface.q1, surface.q2
    if _x4_free(q1) and _x4_free(q2):
        warnings.warn("neither form involves X4; falling back to full "
                      "enumeration, which is slow", stacklevel=2)
        return _full_enumeration(surface, height)

    c1, c2 = q1[_X4_SQUARE], q2[_X4_SQUARE]
    rng = np.arange(-height, height + 1, dtype=np.int64)
    x1g, x2g, x3g = [g.reshape(-1) for g in
                     np.meshgrid(rng, rng, rng, indexing="ij")]
    sq1g, sq2g, sq3g = x1g * x1g, x2g * x2g, x3g * x3g
    p12g, p13g, p23g = x1g * x2g, x1g * x3g, x2g * x3g
    found = set()

    def accept(x0, x1, x2, x3, x4):
        x = (int(x0), int(x1), int(x2), int(x3), int(x4))
        if any(x) and surface.contains(x):
            found.add(RatPoint(x))

    for x0 in range(height + 1):
        b1, a1 = _slice_parts(q1, x0, x1g, x2g, x3g,
                              sq1g, sq2g, sq3g, p12g, p13g, p23g)
        b2, a2 = _slice_parts(q2, x0, x1g, x2g, x3g,
                              sq1g, sq2g, sq3g, p12g, p13g, p23g)
        if c1 == 0:
            al, bl = a1, b1
        elif c2 == 0:
            al, bl = a2, b2
        else:
            al, bl = c2 * a1 - c1 * a2, c2 * b1 - c1 * b2
        live = al != 0
        with np.errstate(divide="ignore", invalid="ignore"):
            exact = live & (bl % np.where(live, al, 1) == 0)
        x4 = np.where(exact, -(bl // np.where(exact, al, 1)), height + 1)
        exact &= np.abs(x4) <= height
        ok = exact & (b1 + a1 * x4 + c1 * x4 * x4 == 0)
        ok &= b2 + a2 * x4 + c2 * x4 * x4 == 0
        for i in np.nonzero(ok)[0]:
            accept(x0, x1g[i], x2g[i], x3g[i], x4[i])
        # slices where the eliminated linear equation is 0 = 0: fall
        # back to the quadratics themselves, one slice at a time
        for i in np.nonzero(~live & (bl == 0))[0]:
            roots = _quadratic_x4_roots(c1, int(a1[i]), int(b1[i]))
            if roots is None:
                roots = _quadratic_x4_roots(c2, int(a2[i]), int(b2[i]))
            if roots is None:
                roots = range(-height, height + 1)
            for x4v in roots:
                if abs(x4v) <= height:
                    accept(x0, x1g[i], x2g[i], x3g[i], x4v)
    return sorted(found)


DegenerateMember = namedtuple("DegenerateMember", "root form rank cusp")

PencilQuintic = namedtuple("PencilQuintic", "coefficients members")


def rank4_discriminant(coeffs):
    """Squarefree discriminant of a rank-4 quadratic form in 5 variables.

    The determinant of any nonsingular principal 4x4 block of the Gram
    matrix, reduced modulo squares; well defined because two such
    blocks describe the same form on the quotient by the kernel.
    """
    m = sympy.Matrix(doubled_gram(coeffs))
    if m.rank() != 4:
        raise ValueError("form does not have rank 4")
    import itertools
    for rows in itertools.combinations(range(5), 4):
        d = m[list(rows), list(rows)].det()
        if d != 0:
            d = int(d)
            out = -1 if d < 0 else 1
            for p, e in factorint(abs(d)).items():
                if e % 2:
                    out *= p
            return out
    raise AssertionError("rank-4 symmetric matrix without a rank-4 "
                         "principal block")


def pencil_quintic(surface):
    """The binary quintic of the pencil and its rational degenerate members.

    Coefficients are (a5..a0) with a_k on lambda^k mu^(5-k).  For every
    rational root (lambda:mu), including (1:0) when the leading
    coefficient vanishes, the member lambda*q1 + mu*q2 is returned with
    its rank and, when the rank is exactly 4, the cone vertex.
    """
    coeffs = surface.quintic
    t = sympy.Symbol("t")
    poly = sympy.Poly(sum(c * t ** (5 - k) for k, c in enumerate(coeffs)), t)
    roots = []
    if poly.degree() < 5:
        roots.append((1, 0))
    _, factors = sympy.factor_list(poly)
    for fac, mult in factors:
        if fac.degree() != 1:
            continue
        if mult > 1:
            raise ValueError("pencil is singular: repeated degenerate member")
        c1, c0 = [int(v) for v in fac.all_coeffs()]
        g = math.gcd(c0, c1)
        lam, mu = -c0 // g, c1 // g
        if lam < 0 or (lam == 0 and mu < 0):
            lam, mu = -lam, -mu
        roots.append((lam, mu))
    members = []
    for lam, mu in sorted(roots, key=lambda r: (r[1] != 0, r)):
        form = tuple(lam * a + mu * b for a, b in zip(surface.q1, surface.q2))
        m = sympy.Matrix(doubled_gram(form))
        rank = m.rank()
        cusp = None
        if rank == 4:
            vec = m.nullspace()[0]
            den = math.lcm(*[sympy.fraction(v)[1] for v in vec])
            cusp = RatPoint([int(v * den) for v in vec])
        members.append(DegenerateMember((lam, mu), form, rank, cusp))
    return PencilQuintic(coeffs, tuple(members))


# ---------------------------------------------------------------------------
# local evaluation recipes

class CyclotomicField:
    """A cyclic symbol field: prime conductor, fixed subgroup, generator.

    The Galois group is (Z/m)* modulo the subgroup; the generator coset
    pins the character that maps it to 1/n for n the quotient order.
    """

    __slots__ = ("conductor", "subgroup", "generator")

    def __init__(self, conductor, subgroup, generator):
        self.conductor = int(conductor)
        self.subgroup = tuple(int(s) for s in subgroup)
        self.generator = int(generator)

    def __repr__(self):
        return ("CyclotomicField(%d, subgroup=%r, generator=%d)"
                % (self.conductor, self.subgroup, self.generator))


ZETA5 = CyclotomicField(5, (1,), 2)
ZETA17_REAL = CyclotomicField(17, (1, 16), 3)


def _linear_over_x0(t, x):
    num = sum(int(c) * xi for c, xi in zip(t, x))
    return Fraction(num, x[0])


def _point_coords(x):
    x = tuple(int(c) for c in x)
    if len(x) != 5:
        raise ValueError("a point has 5 coordinates")
    if x[0] == 0:
        raise ValueError("point lies on the removed hyperplane")
    return x


def ev_2tors_typeI(t, d, x, v):
    """Half the failure of (t(x)/X0, d): 0 or 1/2.

    t is a 5-coefficient linear form, d a nonzero rational; the symbol
    is the quadratic Hilbert symbol at the place v.
    """
    x = _point_coords(x)
    val = _linear_over_x0(t, x)
    if val == 0:
        raise ValueError("the defining function vanishes at this point")
    return Fraction(1, 2) if hilbert_qp(val, d, v) == -1 else Fraction(0)


def ev_2tors_typeII(t, d, x, v):
    """Sum of quadratic symbols of Q(sqrt 5) above the place v.

    t is a pair of 5-coefficient linear forms (the 1 and sqrt-5 parts),
    d a nonzero field element as a pair; each place w above v adds 1/2
    when (t(x)/X0, d) fails at w, and the total is reduced modulo 1.
    """
    x = _point_coords(x)
    val = (_linear_over_x0(t[0], x), _linear_over_x0(t[1], x))
    if val == (0, 0):
        raise ValueError("the defining function vanishes at this point")
    place = PlaceQ.of(v)
    above = (QuadFieldPlace.real_embeddings() if place.is_real
             else QuadFieldPlace.above(place.p))
    total = Fraction(0)
    for w in above:
        if hilbert_sqrt5(val, d, w) == -1:
            total += Fraction(1, 2)
    return total % 1


def ev_4tors_cyclic(fnval, field, v):
    """Minus the invariant of the cyclotomic symbol of a function value.

    fnval is the nonzero rational value of the defining function at the
    point; field fixes conductor, subgroup and generator.  Values lie
    in (1/n)Z/Z for n the order of the generator coset.
    """
    fnval = Fraction(fnval)
    if fnval == 0:
        raise ValueError("the defining function vanishes at this point")
    coset = artin_cyclotomic(fnval, v, field.conductor, field.subgroup)
    inv = cyclic_symbol_invariant(coset, field.generator,
                                  field.conductor, field.subgroup)
    return (-inv) % 1


class ClassRecipe:
    """A Brauer class given by an explicit symbol recipe.

    kind is "2tors-I" (params t: linear form, d: rational), "2tors-II"
    (t: pair of linear forms, d: field element pair) or "4tors-cyclic"
    (numerator: 15-coefficient quadratic form or 5-coefficient linear
    form over X0^deg, field: CyclotomicField).  bad_primes lists the
    finite places tallied by audits.
    """

    __slots__ = ("name", "kind", "bad_primes", "t", "d", "numerator",
                 "field")

    def __init__(self, name, kind, bad_primes, t=None, d=None,
                 numerator=None, field=None):
        if kind not in ("2tors-I", "2tors-II", "4tors-cyclic"):
            raise ValueError("unknown recipe kind: %r" % (kind,))
        self.name = name
        self.kind = kind
        self.bad_primes = tuple(int(p) for p in bad_primes)
        self.t = t
        self.d = d
        self.numerator = numerator
        self.field = field

    def value(self, x):
        """The defining function value at the point; 0 when undefined."""
        x = _point_coords(x)
        if self.kind == "2tors-II":
            return (_linear_over_x0(self.t[0], x),
                    _linear_over_x0(self.t[1], x))
        if self.kind == "2tors-I":
            return _linear_over_x0(self.t, x)
        if len(self.numerator) == 5:
            return _linear_over_x0(self.numerator, x)
        return Fraction(form_value(self.numerator, x), x[0] ** 2)

    def defined_at(self, x):
        val = self.value(x)
        return val != (0, 0) if self.kind == "2tors-II" else val != 0

    def evaluate(self, x, v):
        if self.kind == "2tors-I":
            return ev_2tors_typeI(self.t, self.d, x, v)
        if self.kind == "2tors-II":
            return ev_2tors_typeII(self.t, self.d, x, v)
        return ev_4tors_cyclic(self.value(x), self.field, v)

    def support(self, x):
        """Places where the evaluation at x can be nonzero, plus the
        declared bad places: the reciprocity sum runs over these."""
        val = self.value(x)
        if self.kind == "2tors-I":
            places = rational_places_of(val, self.d)
        elif self.kind == "2tors-II":
            primes = {w.p for w in sqrt5_places_of(val, self.d)
                      if w.p is not None}
            places = ([PlaceQ.real()]
                      + [PlaceQ.finite(p) for p in sorted(primes)])
        else:
            places = rational_places_of(val)
            conductor = PlaceQ.finite(self.field.conductor)
            if conductor not in places:
                places.append(conductor)
        for p in self.bad_primes:
            if PlaceQ.finite(p) not in places:
                places.append(PlaceQ.finite(p))
        return sorted(places, key=lambda p: (not p.is_real, p.p or 0))

    def __repr__(self):
        return "ClassRecipe(%r, %r)" % (self.name, self.kind)


class EvalReport:
    """Outcome of an audit: per-point rows, tallies, and verdicts.

    rows maps each evaluated point to {place: invariant}; every row
    sums to zero modulo 1 over its places unless listed in
    reciprocity_failures.  tallies[place][value] counts the points of
    the Z_p-integral sample (all points at the real place); integral
    tallies count only the X0 = 1 points.  verdicts[place] is True when
    the local sample realizes strictly more values than the integral
    one: evidence against strong approximation.
    """

    __slots__ = ("surface_id", "recipe_name", "height", "points", "rows",
                 "skipped", "hyperplane", "reciprocity_failures",
                 "tallies", "integral_tallies", "verdicts")

    def __init__(self, surface_id, recipe_name, height):
        self.surface_id = surface_id
        self.recipe_name = recipe_name
        self.height = height
        self.points = []
        self.rows = {}
        self.skipped = []
        self.hyperplane = []
        self.reciprocity_failures = []
        self.tallies = {}
        self.integral_tallies = {}
        self.verdicts = {}

    def values_at(self, place, integral_only=False):
        place = PlaceQ.of(place)
        src = self.integral_tallies if integral_only else self.tallies
        return set(src.get(place, {}))

    def summary(self):
        lines = ["surface %s, recipe %s, height %d: %d points "
                 "(%d evaluated, %d skipped, %d on hyperplane)"
                 % (self.surface_id, self.recipe_name, self.height,
                    len(self.points), len(self.rows), len(self.skipped),
                    len(self.hyperplane))]
        if self.reciprocity_failures:
            lines.append("RECIPROCITY FAILURES: %d points"
                         % len(self.reciprocity_failures))
        else:
            lines.append("reciprocity sum 0 at every evaluated point")
        for place in sorted(self.tallies,
                            key=lambda p: (not p.is_real, p.p or 0)):
            tally = self.tallies[place]
            ints = self.integral_tallies[place]
            name = "real" if place.is_real else "p=%d" % place.p
            body = ", ".join("%s: %d" % (v, tally[v]) for v in sorted(tally))
            ibody = ", ".join("%s: %d" % (v, ints[v]) for v in sorted(ints))
            lines.append("  %s  {%s}  integral {%s}%s"
                         % (name, body, ibody or "none",
                            "  [strong approximation violated]"
                            if self.verdicts[place] else ""))
        return "\n".join(lines)


def audit(surface, recipe, height=60, extra_points=()):
    """Evaluate a recipe on every point of the surface inside the box.

    extra_points join the search results after an exact membership
    check.  Points on the removed hyperplane are set aside; points
    where the defining function vanishes are skipped and counted, per
    the contract that no continuity workaround is applied.
    """
    report = EvalReport(surface.fixture_id or "custom", recipe.name,
                        int(height))
    points = set(find_points(surface, height))
    for x in extra_points:
        x = x if isinstance(x, RatPoint) else RatPoint(x)
        if not surface.contains(x.coords):
            raise ValueError("extra point %r is not on the surface" % (x,))
        points.add(x)
    report.points = sorted(points)
    audit_places = [PlaceQ.real()] + [PlaceQ.finite(p)
                                      for p in sorted(set(recipe.bad_primes))]
    tallies = {p: {} for p in audit_places}
    integral = {p: {} for p in audit_places}
    for x in report.points:
        if x.on_hyperplane:
            report.hyperplane.append(x)
            continue
        if not recipe.defined_at(x):
            report.skipped.append(x)
            continue
        row = {v: recipe.evaluate(x, v) for v in recipe.support(x)}
        report.rows[x] = row
        total = sum(row.values()) % 1
        if total != 0:
            report.reciprocity_failures.append((x, total))
        for place in audit_places:
            if not place.is_real and x.coords[0] % place.p == 0:
                continue
            val = row.get(place, Fraction(0))
            tallies[place][val] = tallies[place].get(val, 0) + 1
            if x.is_integral:
                integral[place][val] = integral[place].get(val, 0) + 1
    report.tallies = tallies
    report.integral_tallies = integral
    report.verdicts = {p: set(integral[p]) < set(tallies[p])
                       for p in audit_places}
    return report


# ---------------------------------------------------------------------------
# fixture surfaces

Fixture = namedtuple("Fixture", "surface recipes default_recipe "
                     "listed_points galois_images brauer_torsion")

_FIXTURE_DATA = {
    "ex418": dict(
        q1=(1, 0, 2, 0, -4, 0, -2, -1, 4, -1, 0, 0, 0, 0, 0),
        q2=(0, 0, 0, 0, -2, 0, 0, 0, 1, 0, 1, 0, 0, 0, -2),
        listed=((1, 1, 0, 1, 0), (1, 1, -2, -3, -2), (1, 331, 49, 900, 252)),
        recipes={"tangent": dict(
            kind="2tors-II", bad_primes=(2, 5),
            t=((0, 3, 4, 0, 0), (0, 1, 0, 0, 0)), d=(4, 2))},
        default="tangent",
        galois=([1, 3, -2, 5, -4], [1, 3, 2, 5, 4]),
        torsion=(2,)),
    "ex421": dict(
        q1=(-1, 8, -4, -10, 0, 4, -6, -8, 0, 2, 3, 0, -1, -1, 0),
        q2=(7, 9, 0, 6, 0, 7, 0, 0, 0, 0, 0, 1, 3, 0, 0),
        listed=((1, 0, 2, -1, -2), (1, 1, 2, -1, -10),
                (1, -20, -32, -9, 88), (1, -80, -62, 11, 718)),
        recipes={"quadrilateral": dict(
            kind="4tors-cyclic", bad_primes=(2, 5, 31, 251),
            numerator=(35, 50, -19, -2, 5), field=ZETA5)},
        default="quadrilateral",
        galois=([2, 3, 1, 4, 5], [-1, -3, -2, 5, -4]),
        torsion=(4,)),
    "ex423": dict(
        q1=(1, 0, 0, -1, 0, -1, 1, 1, 0, 0, 1, 0, 1, -1, 0),
        q2=(-1, -1, 0, -1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0),
        listed=((1, -1, 0, 1, -1), (1, 1, 0, -1, -1), (1, 0, 1, 1, 2),
                (1, 2, 0, 1, -1), (1, 0, -2, 1, -1), (1, 0, 0, -1, -3),
                (1, 0, 3, -1, 0), (1, 42, -221, -47, 8),
                (1, 42, 9, -277, -222)),
        recipes={
            "q1": dict(
                kind="4tors-cyclic", bad_primes=(2, 17),
                numerator=(0, 0, 3, -2, 12, -4, 3, -2, 5, 1, 17, -22,
                           15, -13, -1),
                field=ZETA17_REAL),
            "q2": dict(
                kind="4tors-cyclic", bad_primes=(2, 17),
                numerator=(0, 0, 3, -19, -5, -4, 20, 15, 5, 1, 17, 12,
                           15, -13, -1),
                field=ZETA17_REAL)},
        default="q1",
        galois=([-1, 3, 4, 5, -2],),
        torsion=(4,)),
    "ex515": dict(
        q1=(1, 2, 0, -3, 0, 1, 0, -3, 0, -1, 0, -1, 2, -1, 0),
        q2=(-2, -1, 0, 2, 0, -2, 0, 2, 0, 0, 0, 1, -1, 0, 0),
        listed=((1, 1, -1, 2, -1), (1, 15, -5, 4, -71), (1, 20, 15, -6, 74),
                (1, -9, -2, 1, -86), (1, 41, 15, -6, 263),
                (1, 223, -229, 308, -247), (1, 299, -213, 312, -419),
                (1, -96, -53, 22, -434)),
        recipes={"2alpha": dict(
            kind="2tors-I", bad_primes=(3, 5, 7, 19),
            t=(0, 0, 1, 1, 0), d=5)},
        default="2alpha",
        galois=([-1, 3, 4, 5, -2], [1, 4, 3, 2, 5], [1, -2, -3, 4, 5]),
        torsion=(4,)),
}

FIXTURE_IDS = tuple(sorted(_FIXTURE_DATA))


def fixture(fixture_id):
    """The named fixture: surface, recipes, listed points, group data."""
    try:
        data = _FIXTURE_DATA[fixture_id]
    except KeyError:
        raise ValueError("unknown fixture id: %r (known: %s)"
                         % (fixture_id, ", ".join(FIXTURE_IDS)))
    surface = PencilSurface(data["q1"], data["q2"], fixture_id=fixture_id)
    recipes = {name: ClassRecipe("%s/%s" % (fixture_id, name), **args)
               for name, args in data["recipes"].items()}
    listed = tuple(RatPoint(x) for x in data["listed"])
    for x in listed:
        if not surface.contains(x.coords):
            raise AssertionError("listed point %r off the surface" % (x,))
    return Fixture(surface, recipes, data["default"], listed,
                   tuple(tuple(g) for g in data["galois"]),
                   data["torsion"])


def fixture_recipe(fixture_id, name=None):
    fix = fixture(fixture_id)
    name = name or fix.default_recipe
    if name == "default":
        name = fix.default_recipe
    try:
        return fix.recipes[name]
    except KeyError:
        raise ValueError("fixture %s has no recipe %r (known: %s)"
                         % (fixture_id, name, ", ".join(sorted(fix.recipes))))


def fixture_galois_group(fixture_id):
    """The declared index action as a weyl_d5 Subgroup."""
    from . import weyl_d5
    fix = fixture(fixture_id)
    gens = [weyl_d5.SignedPerm.from_images(list(im))
            for im in fix.galois_images]
    return weyl_d5.Subgroup.from_generators(gens)
