"""Signed permutations of five exceptional classes and their lattice cohomology.

The geometric symmetry group acting on the rank-5 lattice

    P = Z<[e1], .., [e4], h>,      h = ([e1] + .. + [e5]) / 2,

consists of the signed permutations of [e1]..[e5] with evenly many sign
changes (order 1920).  This module builds that group once, enumerates its
subgroup conjugacy classes, and computes for any subgroup G the first
cohomology of P: the orbit/splitting bookkeeping, the 2-torsion part on
orbit generators, the full group via mod-4 invariant classes, explicit
cocycle representatives, and the two relabelling shapes of subgroups that
carry 4-torsion.

Elements are indexed 0..1919 against a global multiplication table with
the identity at index 0; subgroups travel as sorted index tuples.  Public
orbit and index arguments are 1-based to match the basis names e1..e5.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import groupkern
from .cohomology import FiniteGroup, GModule, connecting_cocycle
from .exactlinalg import (
    AbHom,
    FinAbGroup,
    IntMatrix,
    LatticeQuotient,
    SmithSolver,
)


class SignedPerm:
    """A signed permutation e_i -> signs[i] * e_{perm[i]} (0-based).

    Only evenly many -1 signs are allowed; these are exactly the signed
    permutations that preserve the half-integral lattice P.

    >>> g = SignedPerm.from_images([2, -1, 3, 4, 5])
    Traceback (most recent call last):
        ...
    ValueError: odd number of sign changes: (1, -1, 1, 1, 1)
    >>> g = SignedPerm.from_images([2, -1, -3, 4, 5])
    >>> g.images()
    [2, -1, -3, 4, 5]
    >>> g.order()
    4
    """

    __slots__ = ("perm", "signs")

    def __init__(self, perm, signs):
        perm = tuple(int(p) for p in perm)
        signs = tuple(int(s) for s in signs)
        if sorted(perm) != [0, 1, 2, 3, 4]:
            raise ValueError("perm must be a permutation of 0..4: %r" % (perm,))
        if len(signs) != 5 or any(s not in (1, -1) for s in signs):
            raise ValueError("signs must be five values +-1: %r" % (signs,))
        if signs.count(-1) % 2:
            raise ValueError("odd number of sign changes: %r" % (signs,))
        self.perm = perm
        self.signs = signs

    @classmethod
    def identity(cls):
        return cls((0, 1, 2, 3, 4), (1, 1, 1, 1, 1))

    @classmethod
    def from_images(cls, images):
        """From five signed 1-based images: [2, -1, ...] is e1->e2, e2->-e1."""
        images = list(images)
        if len(images) != 5:
            raise ValueError("need exactly five images, got %d" % len(images))
        perm, signs = [], []
        for v in images:
            v = int(v)
            if not 1 <= abs(v) <= 5:
                raise ValueError("image out of range: %d" % v)
            perm.append(abs(v) - 1)
            signs.append(1 if v > 0 else -1)
        return cls(perm, signs)

    def images(self):
        """Signed 1-based images of e1..e5 (inverse of from_images)."""
        return [(self.perm[i] + 1) * self.signs[i] for i in range(5)]

    def __mul__(self, other):
        # self * other applies other first
        p = tuple(self.perm[other.perm[i]] for i in range(5))
        s = tuple(other.signs[i] * self.signs[other.perm[i]] for i in range(5))
        return SignedPerm(p, s)

    def inverse(self):
        p = [0] * 5
        s = [1] * 5
        for i in range(5):
            p[self.perm[i]] = i
            s[self.perm[i]] = self.signs[i]
        return SignedPerm(p, s)

    def order(self):
        k = 1
        p = self
        while p.perm != (0, 1, 2, 3, 4) or p.signs != (1, 1, 1, 1, 1):
            p = p * self
            k += 1
        return k

    def matrix_e(self):
        """Action on the e-basis (column i is the image of e_i)."""
        cols = []
        for i in range(5):
            v = [0] * 5
            v[self.perm[i]] = self.signs[i]
            cols.append(v)
        return IntMatrix.from_columns(cols)

    def pic_matrix(self):
        """Action on the integral basis ([e1], .., [e4], h) of P."""
        cols = []
        for j in range(4):
            v = [0] * 5
            v[self.perm[j]] = self.signs[j]
            cols.append([v[i] - v[4] for i in range(4)] + [2 * v[4]])
        # h maps to half the signed sum of the images; doubled e-coords
        # of the image are just the signs carried onto each slot
        d = [0] * 5
        for i in range(5):
            d[self.perm[i]] = self.signs[i]
        cols.append([(d[i] - d[4]) // 2 for i in range(4)] + [d[4]])
        return IntMatrix.from_columns(cols)

    def __eq__(self, other):
        if not isinstance(other, SignedPerm):
            return NotImplemented
        return self.perm == other.perm and self.signs == other.signs

    def __hash__(self):
        return hash((self.perm, self.signs))

    def __repr__(self):
        return "SignedPerm.from_images(%r)" % (self.images(),)


class PicVector:
    """A vector of P with half-integer coordinates over [e1]..[e5].

    Stored doubled; valid vectors have all five coordinates integral or
    all five half-integral.

    >>> h = PicVector((1, 1, 1, 1, 1))
    >>> h.integral_coords()
    (0, 0, 0, 0, 1)
    >>> PicVector((1, 1, 2, 1, 1))
    Traceback (most recent call last):
        ...
    ValueError: coordinates must be all integral or all half-integral: (1, 1, 2, 1, 1)/2
    """

    __slots__ = ("twice",)

    def __init__(self, twice):
        t = tuple(int(c) for c in twice)
        if len(t) != 5:
            raise ValueError("need five coordinates")
        if len({c & 1 for c in t}) != 1:
            raise ValueError(
                "coordinates must be all integral or all half-integral: %r/2"
                % (t,)
            )
        self.twice = t

    @classmethod
    def from_e(cls, coords):
        """From integer e-basis coordinates."""
        return cls(tuple(2 * int(c) for c in coords))

    @classmethod
    def from_integral(cls, b):
        """From coordinates over the integral basis ([e1], .., [e4], h)."""
        b = tuple(int(x) for x in b)
        if len(b) != 5:
            raise ValueError("need five coordinates")
        return cls(tuple(2 * b[i] + b[4] for i in range(4)) + (b[4],))

    def integral_coords(self):
        """Coordinates over the integral basis ([e1], .., [e4], h)."""
        d = self.twice
        return tuple((d[i] - d[4]) // 2 for i in range(4)) + (d[4],)

    def coords(self):
        """The e-basis coordinates as Fractions."""
        return tuple(Fraction(c, 2) for c in self.twice)

    @property
    def is_integral(self):
        return self.twice[0] % 2 == 0

    def apply(self, sp):
        """Image under a signed permutation."""
        out = [0] * 5
        for i in range(5):
            out[sp.perm[i]] = sp.signs[i] * self.twice[i]
        return PicVector(out)

    def __add__(self, other):
        return PicVector(tuple(a + b for a, b in zip(self.twice, other.twice)))

    def __sub__(self, other):
        return PicVector(tuple(a - b for a, b in zip(self.twice, other.twice)))

    def __neg__(self):
        return PicVector(tuple(-a for a in self.twice))

    def __eq__(self, other):
        if not isinstance(other, PicVector):
            return NotImplemented
        return self.twice == other.twice

    def __hash__(self):
        return hash(self.twice)

    def __repr__(self):
        return "PicVector((%s))" % ", ".join(str(c) for c in self.coords())


class _WeylData:
    __slots__ = ("elements", "table", "inv", "index")

    def __init__(self, elements, table, inv, index):
        self.elements = elements
        self.table = table
        self.inv = inv
        self.index = index


@lru_cache(maxsize=1)
def _weyl():
    """Global element list, uint16 multiplication table, inverses, index."""
    elements = []
    for perm in itertools.permutations(range(5)):
        for bits in range(32):
            if bin(bits).count("1") % 2:
                continue
            signs = tuple(-1 if bits >> i & 1 else 1 for i in range(5))
            elements.append(SignedPerm(perm, signs))
    n = len(elements)
    perm_arr = np.array([e.perm for e in elements], dtype=np.int64)
    sign_arr = np.array([e.signs for e in elements], dtype=np.int64)
    pw = np.array([1, 5, 25, 125, 625], dtype=np.int64)
    bw = np.array([1, 2, 4, 8, 16], dtype=np.int64)

    def codes(p, s):
        return (p @ pw) * 32 + ((s < 0) @ bw)

    key = codes(perm_arr, sign_arr)
    order = np.argsort(key)
    skey = key[order]
    table = np.empty((n, n), dtype=np.uint16)
    for gi in range(n):
        pout = perm_arr[gi][perm_arr]
        sout = sign_arr * sign_arr[gi][perm_arr]
        table[gi] = order[np.searchsorted(skey, codes(pout, sout))]
    inv = np.ascontiguousarray(np.argmax(table == 0, axis=1).astype(np.uint16))
    index = {e: i for i, e in enumerate(elements)}
    return _WeylData(elements, table, inv, index)


def _ids_of(gens):
    w = _weyl()
    out = []
    for g in gens:
        if isinstance(g, SignedPerm):
            out.append(w.index[g])
        else:
            out.append(int(g))
    return tuple(out)


def _greedy_gen_ids(elements):
    # smallest generating subset picked by ascending index scan
    w = _weyl()
    have = {0}
    gens = []
    for g in elements:
        if g in have:
            continue
        gens.append(g)
        have = set(groupkern.closure(w.table, tuple(gens)))
        if len(have) == len(elements):
            break
    return tuple(gens)


class Subgroup:
    """A concrete subgroup: sorted global element ids plus generators."""

    __slots__ = ("elements", "generators")

    def __init__(self, elements, generators=()):
        self.elements = tuple(sorted(int(i) for i in elements))
        if not self.elements or self.elements[0] != 0:
            raise ValueError("subgroup must contain the identity (index 0)")
        gens = tuple(int(i) for i in generators)
        if not gens and len(self.elements) > 1:
            gens = _greedy_gen_ids(self.elements)
        self.generators = gens

    @classmethod
    def from_generators(cls, gens):
        ids = _ids_of(gens)
        w = _weyl()
        return cls(groupkern.closure(w.table, ids), ids)

    @property
    def order(self):
        return len(self.elements)

    def signed_perms(self):
        w = _weyl()
        return [w.elements[i] for i in self.elements]

    def generator_perms(self):
        w = _weyl()
        return [w.elements[i] for i in self.generators]

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return "Subgroup(order=%d)" % self.order


class SubgroupClass:
    """One conjugacy class of subgroups: canonical representative plus index.

    elements is the lexicographically least element set among all
    conjugates of the representative; generators is a small generating
    subset of it; index is the position in the global class table.
    """

    __slots__ = ("index", "elements", "generators", "is_maximal")

    def __init__(self, index, elements, generators, is_maximal):
        self.index = index
        self.elements = tuple(elements)
        self.generators = tuple(generators)
        self.is_maximal = is_maximal

    @property
    def order(self):
        return len(self.elements)

    def subgroup(self):
        return Subgroup(self.elements, self.generators)

    def signed_perms(self):
        w = _weyl()
        return [w.elements[i] for i in self.elements]

    def generator_perms(self):
        w = _weyl()
        return [w.elements[i] for i in self.generators]

    def __repr__(self):
        return "SubgroupClass(index=%d, order=%d)" % (self.index, self.order)


def _subgroup_of(g):
    if isinstance(g, Subgroup):
        return g
    if isinstance(g, SubgroupClass):
        return Subgroup(g.elements, g.generators)
    if isinstance(g, FiniteGroup):
        labels = [g.elements[i] for i in g.generators]
        if not all(isinstance(x, SignedPerm) for x in labels):
            raise ValueError("group labels are not signed permutations")
        return Subgroup.from_generators(labels)
    if isinstance(g, SignedPerm):
        return Subgroup.from_generators([g])
    return Subgroup.from_generators(list(g))


@lru_cache(maxsize=1)
def subgroup_conjugacy_classes():
    """All subgroup conjugacy classes, ordered by (order, element set).

    Layered generation: starting from the trivial class, every known
    class representative is extended by one element at a time, one
    candidate per orbit of its normalizer, and each closure is filed
    under its canonical (lex-least conjugate) element set.  A proper
    class is maximal when every extension generates the whole group.
    """
    w = _weyl()
    table, inv = w.table, w.inv
    n = table.shape[0]
    trivial = (0,)
    found = {trivial: ()}
    work = [trivial]
    maximal = {}
    while work:
        key = work.pop()
        if len(key) == n:
            maximal[key] = False
            continue
        members = set(key)
        norm = groupkern.normalizer(table, inv, key)
        reps = groupkern.conj_min_reps(table, inv, norm)
        cands = sorted({int(r) for r in reps} - members)
        all_full = True
        seen_raw = set()
        for g in cands:
            cl = tuple(groupkern.closure(table, found[key] + (g,)))
            if len(cl) < n:
                all_full = False
            if cl in seen_raw:
                continue
            seen_raw.add(cl)
            ck = groupkern.canonical_key(table, inv, cl)
            if ck not in found:
                found[ck] = _greedy_gen_ids(ck)
                work.append(ck)
        maximal[key] = all_full
    ordered = sorted(found, key=lambda t: (len(t), t))
    return tuple(
        SubgroupClass(i, key, found[key], maximal[key])
        for i, key in enumerate(ordered)
    )


@lru_cache(maxsize=1)
def _class_by_key():
    return {c.elements: c for c in subgroup_conjugacy_classes()}


def conjugacy_class_of(g):
    """The census class containing (a conjugate of) the given subgroup."""
    sub = _subgroup_of(g)
    w = _weyl()
    key = groupkern.canonical_key(w.table, w.inv, sub.elements)
    cls = _class_by_key().get(key)
    assert cls is not None, "subgroup missing from the census"
    return cls


def are_conjugate(a, b):
    """Whether two subgroups are conjugate inside the full group."""
    sa, sb = _subgroup_of(a), _subgroup_of(b)
    if sa.order != sb.order:
        return False
    w = _weyl()
    ka = groupkern.canonical_key(w.table, w.inv, sa.elements)
    kb = groupkern.canonical_key(w.table, w.inv, sb.elements)
    return ka == kb


@lru_cache(maxsize=None)
def _finite_group_cached(elements, gens):
    w = _weyl()
    ids = np.asarray(elements, dtype=np.intp)
    sub_table = np.searchsorted(ids, w.table[np.ix_(ids, ids)])
    labels = [w.elements[i] for i in elements]
    gen_pos = [elements.index(g) for g in gens]
    return FiniteGroup(labels, sub_table.tolist(), gen_pos)


def finite_group_of(g):
    """The subgroup as a FiniteGroup with SignedPerm labels."""
    sub = _subgroup_of(g)
    return _finite_group_cached(sub.elements, sub.generators)


@lru_cache(maxsize=None)
def _pic_gmodule_cached(elements, gens):
    fg = _finite_group_cached(elements, gens)
    mats = [fg.elements[i].pic_matrix() for i in fg.generators]
    return GModule(fg, FinAbGroup(5), mats)


def pic_gmodule_of(g):
    """P with the subgroup action, in integral-basis coordinates."""
    sub = _subgroup_of(g)
    return _pic_gmodule_cached(sub.elements, sub.generators)


def full_group():
    """The whole signed-permutation group as a FiniteGroup (order 1920)."""
    gens = [
        SignedPerm((1, 0, 2, 3, 4), (1, 1, 1, 1, 1)),
        SignedPerm((0, 2, 1, 3, 4), (1, 1, 1, 1, 1)),
        SignedPerm((0, 1, 3, 2, 4), (1, 1, 1, 1, 1)),
        SignedPerm((0, 1, 2, 4, 3), (1, 1, 1, 1, 1)),
        SignedPerm((0, 1, 2, 4, 3), (1, 1, 1, -1, -1)),
    ]
    sub = Subgroup.from_generators(gens)
    assert sub.order == 1920, "standard generators must give the full group"
    return finite_group_of(sub)


def s_orbits(g):
    """Orbits of the index action with a split flag per orbit.

    Returns [(orbit, split), ...] with sorted 1-based orbit tuples,
    ordered by smallest member.  An orbit is non-split when the signed
    action eventually carries some e_i of the orbit to -e_i, i.e. the
    signed symbols +-e_j over the orbit form a single orbit of size
    2*len(orbit) instead of two.
    """
    sub = _subgroup_of(g)
    gens = sub.generator_perms()
    out = []
    seen = set()
    for i in range(5):
        if i in seen:
            continue
        reached = {(i, 1)}
        stack = [(i, 1)]
        while stack:
            j, s = stack.pop()
            for sp in gens:
                nxt = (sp.perm[j], s * sp.signs[j])
                if nxt not in reached:
                    reached.add(nxt)
                    stack.append(nxt)
        comp = sorted({j for j, _ in reached})
        seen.update(comp)
        split = (i, -1) not in reached
        out.append((tuple(j + 1 for j in comp), split))
    return out


def _unit(n, j):
    e = [0] * n
    e[j] = 1
    return tuple(e)


class TwoTorsionH1:
    """The 2-torsion of H^1(G, P), presented on index-orbit generators.

    One Z/2 generator per orbit, modulo the sum of all orbit generators
    and every split orbit; class_of_esum maps sums of basis classes
    [e_i] into the group.
    """

    __slots__ = ("orbits", "group", "_quotient")

    def __init__(self, orbits):
        self.orbits = list(orbits)
        k = len(self.orbits)
        eye = [_unit(k, j) for j in range(k)]
        den = [tuple(2 * v for v in e) for e in eye]
        den.append((1,) * k)
        den.extend(eye[j] for j, (_, split) in enumerate(self.orbits) if split)
        self._quotient = LatticeQuotient(k, eye, den)
        self.group = self._quotient.group

    def class_of_orbit(self, j):
        """Class of the j-th orbit generator (0-based position)."""
        return self._quotient.to_class(_unit(len(self.orbits), j))

    def class_of_esum(self, indices):
        """Class of a sum of basis classes [e_i], 1-based, with multiplicity.

        The multiset must have constant parity on every orbit; anything
        else is not an invariant class mod 2.
        """
        counts = [0] * 5
        for i in indices:
            counts[int(i) - 1] += 1
        vec = [0] * len(self.orbits)
        for j, (orb, _) in enumerate(self.orbits):
            pars = {counts[i - 1] % 2 for i in orb}
            if len(pars) > 1:
                raise ValueError(
                    "not invariant mod 2: uneven parity on orbit %r" % (orb,)
                )
            vec[j] = pars.pop()
        return self._quotient.to_class(tuple(vec))


def h1_two_torsion(g):
    """The 2-torsion of H^1(G, P) on orbit generators (a TwoTorsionH1)."""
    return TwoTorsionH1(s_orbits(g))


def invariant_subquotient(gen_matrices, modulus, ambient_n=None):
    """The quotient (M/mM)^G / image(M^G) for the action given on generators.

    Returns a LatticeQuotient over the ambient Z^n: numerator the vectors
    invariant mod m under every generator, denominator the exact
    invariants together with m*Z^n.
    """
    mats = [a if isinstance(a, IntMatrix) else IntMatrix(a) for a in gen_matrices]
    if not mats:
        if ambient_n is None:
            raise ValueError("ambient dimension needed when no generators")
        eye = [_unit(ambient_n, j) for j in range(ambient_n)]
        return LatticeQuotient(ambient_n, eye, eye)
    n = mats[0].rows
    rows = []
    for a in mats:
        if a.rows != n or a.cols != n:
            raise ValueError("generator matrices must be square of equal size")
        for i in range(n):
            rows.append([a.data[i][j] - (1 if i == j else 0) for j in range(n)])
    stacked = IntMatrix(rows)
    r = len(rows)
    aug_rows = [rows[i] + [modulus * (1 if i == k else 0) for k in range(r)]
                for i in range(r)]
    mod_units = [tuple(modulus * v for v in _unit(n, j)) for j in range(n)]
    numer = [tuple(col[:n]) for col in SmithSolver(IntMatrix(aug_rows)).kernel_basis()]
    numer.extend(mod_units)
    denom = [tuple(col) for col in SmithSolver(stacked).kernel_basis()]
    denom.extend(mod_units)
    return LatticeQuotient(n, numer, denom)


class Mod4H1:
    """H^1(G, P) via invariant classes mod 4 over the invariant lattice.

    Representatives are integral-basis vectors; every class is killed
    by 4 (checked at construction).
    """

    __slots__ = ("quotient", "group")

    def __init__(self, gen_matrices):
        self.quotient = invariant_subquotient(gen_matrices, 4, ambient_n=5)
        g = self.quotient.group
        assert g.free_rank == 0 and all(4 % t == 0 for t in g.torsion), (
            "mod-4 class group must be 4-torsion, got %r" % (g,)
        )
        self.group = g

    def rep_of(self, cls):
        """An integral-basis representative of a class."""
        return self.quotient.lift(cls)

    def class_of_vector(self, vec):
        """Class of an integral-basis vector that is invariant mod 4."""
        try:
            return self.quotient.to_class(tuple(int(v) for v in vec))
        except ValueError:
            raise ValueError("representative is not invariant mod 4") from None

    def generator_reps(self):
        return self.quotient.lifts()


@lru_cache(maxsize=None)
def _h1_full_cached(elements, gens):
    w = _weyl()
    return Mod4H1([w.elements[i].pic_matrix() for i in gens])


def h1_full(g):
    """H^1(G, P) with representative lifts (a Mod4H1)."""
    sub = _subgroup_of(g)
    return _h1_full_cached(sub.elements, sub.generators)


def cocycle_of_rep(g, vec):
    """The 1-cocycle sigma -> (sigma(m) - m)/4 for an invariant-mod-4 rep.

    vec is in integral-basis coordinates; raises if its class mod 4 is
    not fixed by the subgroup.
    """
    sub = _subgroup_of(g)
    mod = pic_gmodule_of(sub)
    return connecting_cocycle(mod, 4, tuple(int(v) for v in vec))


def cocycle_of_class(g, x):
    """An explicit 1-cocycle representing the H^1 class x of h1_full(g)."""
    sub = _subgroup_of(g)
    return cocycle_of_rep(sub, h1_full(sub).rep_of(x))


_TAU_TAILS = {
    # (perm[3], perm[4], signs[3], signs[4]) -> power of the 4-cycle tau,
    # tau: e4 -> e5 -> -e4 (and negating e1, e2, e3)
    (3, 4, 1, 1): 0,
    (4, 3, 1, -1): 1,
    (3, 4, -1, -1): 2,
    (4, 3, -1, 1): 3,
}


def _fits_type_one(pairs):
    # positive S3 on {0,1,2} times a power of tau; proper when tau is
    # hit an odd number of times somewhere
    proper = False
    for perm, signs in pairs:
        i = _TAU_TAILS.get((perm[3], perm[4], signs[3], signs[4]))
        if i is None:
            return False
        if perm[0] > 2 or perm[1] > 2 or perm[2] > 2:
            return False
        w = -1 if i % 2 else 1
        if signs[0] != w or signs[1] != w or signs[2] != w:
            return False
        if i % 2:
            proper = True
    return proper


def _fits_type_two(pairs):
    # index 0 fixed, blocks {1,3} and {2,4} preserved or swapped, sign
    # on e1 tracking the swap; proper when some element swaps
    proper = False
    for perm, signs in pairs:
        if perm[0] != 0:
            return False
        img = {perm[1], perm[3]}
        if img == {1, 3}:
            swap = False
        elif img == {2, 4}:
            swap = True
        else:
            return False
        if signs[0] != (-1 if swap else 1):
            return False
        if swap:
            proper = True
    return proper


def classify_4torsion(g):
    """Which 4-torsion shape a conjugate of the subgroup fits.

    Returns 'none', 'typeI', 'typeII' or 'overlap'.  Every index
    relabelling combined with every even sign recoordination is tried,
    i.e. conjugation by each of the 1920 group elements; relabelling
    alone is not enough because the type-I sign pattern only appears
    after twisting some representatives.  Both shapes have at most 64
    elements, so larger subgroups are 'none' without searching.
    """
    sub = _subgroup_of(g)
    if sub.order > 64:
        return "none"
    w = _weyl()
    ids = np.asarray(sub.elements, dtype=np.intp)
    conj = w.table[:, ids].astype(np.intp)
    conj = w.table[conj, np.asarray(w.inv, dtype=np.intp)[:, None]]
    conj.sort(axis=1)
    one = two = False
    for row in np.unique(conj, axis=0):
        rel = [(w.elements[i].perm, w.elements[i].signs) for i in row]
        if not one and _fits_type_one(rel):
            one = True
        if not two and _fits_type_two(rel):
            two = True
        if one and two:
            return "overlap"
    if one:
        return "typeI"
    if two:
        return "typeII"
    return "none"


def typeI_nontrivial(g, i):
    """Whether the singleton orbit {i} (1-based) carries a sign flip.

    Raises when {i} is not an orbit of the index action.
    """
    for orbit, split in s_orbits(g):
        if orbit == (i,):
            return not split
    raise ValueError("{%d} is not an orbit of the index action" % i)


def restriction_table(g, gsub):
    """Matrix of restriction H^1(big) -> H^1(small) on chosen generators.

    Returns an AbHom from h1_full(g).group to h1_full(gsub).group; the
    columns are the classes of the big group's generator representatives
    inside the small group's description.
    """
    big = _subgroup_of(g)
    small = _subgroup_of(gsub)
    if not set(small.elements) <= set(big.elements):
        raise ValueError("second argument is not a subgroup of the first")
    hb = h1_full(big)
    hs = h1_full(small)
    cols = [list(hs.class_of_vector(rep)) for rep in hb.generator_reps()]
    mat = IntMatrix.from_columns(cols, rows=hs.group.ngens)
    return AbHom(hb.group, hs.group, mat)


def parse_group_text(text):
    """Parse generator lines like "[2, -1, -3, 4, 5]" into SignedPerms.

    Entry k is the signed 1-based image of e_k; '#' starts a comment and
    blank lines are skipped.  Every line must be a permutation with
    evenly many minus signs (odd ones do not preserve the lattice P).
    """
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not (line.startswith("[") and line.endswith("]")):
            raise ValueError("line %d: expected a bracketed image list" % lineno)
        try:
            images = [int(p) for p in line[1:-1].split(",")]
        except ValueError:
            raise ValueError("line %d: images must be integers" % lineno) from None
        try:
            gens.append(SignedPerm.from_images(images))
        except ValueError as exc:
            raise ValueError("line %d: %s" % (lineno, exc)) from None
    return gens


def format_group_text(gens):
    """Inverse of parse_group_text."""
    return "".join(
        "[%s]\n" % ", ".join(str(v) for v in g.images()) for g in gens
    )


if __name__ == "__main__":
    import doctest

    doctest.testmod()
