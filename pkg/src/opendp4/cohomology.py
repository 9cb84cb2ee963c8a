"""Finite-group cohomology on explicit modules: H0, H1, H2 membership.

Groups are small (multiplication tables in memory), modules are
FinAbGroups with an action given by one integer matrix per generator,
and cochains are normalized (they vanish when any argument is the
identity).  H1 is computed from the 1-cochain complex by propagating
generator values along a spanning tree of the Cayley graph, so the
space of unknowns stays at |generators| * rank instead of |G| * rank.
H2 is never materialized: only coboundary membership is solved, which
is all the local-invariant comparison needs.

Multiplicative modules (values in the unit group of a field or ring)
are handled by this same machinery written additively: "+" is the
product, integer scaling is exponentiation, and a discrete logarithm
is taken once at the boundary.  That convention is fixed here and
relied on everywhere downstream.
"""

import math
import random

from .exactlinalg import (
    AbHom,
    FinAbGroup,
    IntMatrix,
    LatticeQuotient,
    SmithSolver,
    cokernel,
    kernel,
    relation_columns,
)


class FiniteGroup:
    """A finite group as a multiplication table.

    elements[0] must be the identity; table[i][j] is the index of
    elements[i] * elements[j]; generators index into elements and must
    generate the whole group.
    """

    def __init__(self, elements, table, generators):
        self.elements = list(elements)
        n = len(self.elements)
        self.table = tuple(tuple(row) for row in table)
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise ValueError("table shape does not match element count")
        for i in range(n):
            if self.table[0][i] != i or self.table[i][0] != i:
                raise ValueError("elements[0] is not the identity")
        self._inv = [None] * n
        for i in range(n):
            for j in range(n):
                if self.table[i][j] == 0:
                    self._inv[i] = j
                    break
            if self._inv[i] is None:
                raise ValueError("element %d has no inverse" % i)
        self.generators = tuple(generators)
        if n > 1 and not self.generators:
            raise ValueError("nontrivial group needs generators")
        if self._closure(self.generators) != set(range(n)):
            raise ValueError("generators do not generate")
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != n:
            raise ValueError("duplicate elements")

    @classmethod
    def from_mul(cls, elements, mul, generators):
        """Build a table group from labels and a multiplication callable.

        The identity is located and moved to the front.
        """
        elements = list(elements)
        ident = None
        for e in elements:
            if all(mul(e, x) == x for x in elements):
                ident = e
                break
        if ident is None:
            raise ValueError("no identity element found")
        elements.remove(ident)
        elements.insert(0, ident)
        index = {e: i for i, e in enumerate(elements)}
        table = [[index[mul(a, b)] for b in elements] for a in elements]
        gens = [index[g] for g in generators]
        return cls(elements, table, gens)

    @property
    def order(self):
        return len(self.elements)

    def mul(self, i, j):
        return self.table[i][j]

    def inv(self, i):
        return self._inv[i]

    def index_of(self, label):
        return self._index[label]

    def _closure(self, gens):
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for s in frontier:
                for g in gens:
                    t = self.table[s][g]
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
            frontier = nxt
        return seen

    def spot_check_associativity(self, trials=50, seed=0):
        rng = random.Random(seed)
        n = self.order
        for _ in range(trials):
            a, b, c = (rng.randrange(n) for _ in range(3))
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise ValueError("table is not associative at (%d,%d,%d)"
                                 % (a, b, c))

    def subgroup(self, labels):
        """The subgroup on the given element labels.

        Returns (FiniteGroup, embedding) where embedding[i] is the
        parent index of the i-th subgroup element.  Raises ValueError
        if the labels are not closed under multiplication.
        """
        idx = sorted(self._index[e] for e in labels)
        if not idx or idx[0] != 0:
            idx = [0] + [i for i in idx if i != 0]
        pos = {p: q for q, p in enumerate(idx)}
        table = []
        for p in idx:
            row = []
            for q in idx:
                t = self.table[p][q]
                if t not in pos:
                    raise ValueError("labels are not closed under product")
                row.append(pos[t])
            table.append(row)
        gens = _greedy_generators(table)
        sub = FiniteGroup([self.elements[p] for p in idx], table, gens)
        return sub, idx

    def embedding_of(self, sub):
        """Parent indices of sub's elements; error if not a subgroup.

        Validates that sub's multiplication agrees with this group's.
        """
        try:
            embed = [self._index[e] for e in sub.elements]
        except KeyError:
            raise ValueError("not a subgroup: unknown element")
        for i in range(sub.order):
            for j in range(sub.order):
                if self.table[embed[i]][embed[j]] != embed[sub.table[i][j]]:
                    raise ValueError("not a subgroup: products disagree")
        return embed


def _greedy_generators(table):
    n = len(table)
    if n == 1:
        return []
    gens = []
    seen = {0}
    for cand in range(1, n):
        if cand in seen:
            continue
        gens.append(cand)
        frontier = list(seen)
        while frontier:
            nxt = []
            for s in frontier:
                for g in gens:
                    t = table[s][g]
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
            frontier = nxt
        if len(seen) == n:
            break
    return gens


class GModule:
    """A FinAbGroup with a left action of a FiniteGroup.

    gen_matrices[k] is the action of group.generators[k] on base
    generators (columns are images).  Action matrices of arbitrary
    elements are derived lazily along the Cayley graph; whenever an
    element is reached along two different generator words, the two
    matrices are compared modulo the base relations.
    """

    def __init__(self, group, base, gen_matrices):
        self.group = group
        self.base = base
        mats = []
        for a in gen_matrices:
            if not isinstance(a, IntMatrix):
                a = IntMatrix(a)
            hom = AbHom(base, base, a)
            if not hom.is_well_defined():
                raise ValueError("action matrix does not respect relations")
            mats.append(a)
        if len(mats) != len(group.generators):
            raise ValueError("need one matrix per group generator")
        self.gen_matrices = mats
        self._mats = None
        self._tree = None
        for a in mats:
            if not _is_invertible_over(base, a):
                raise ValueError("action matrix is not invertible over base")

    def _ensure_tables(self):
        if self._mats is not None:
            return
        n = self.group.order
        nb = self.base.ngens
        ident = IntMatrix.identity(nb)
        mats = [None] * n
        tree = [None] * n
        mats[0] = ident
        order = [0]
        frontier = [0]
        while frontier:
            nxt = []
            for s in frontier:
                for k, g in enumerate(self.group.generators):
                    t = self.group.mul(s, g)
                    prod = mats[s].mul(self.gen_matrices[k])
                    if mats[t] is None:
                        mats[t] = prod
                        tree[t] = (s, k)
                        order.append(t)
                        nxt.append(t)
                    else:
                        _check_equal_mod_relations(self.base, mats[t], prod)
            frontier = nxt
        if any(m is None for m in mats):
            raise ValueError("generators do not generate the group")
        self._mats = mats
        self._tree = tree
        self._order = order

    def matrix_of(self, i):
        self._ensure_tables()
        return self._mats[i]

    def act(self, i, x):
        return self.base.reduce(self.matrix_of(i).apply(x))

    def check_random_words(self, trials=20, seed=0, length=6):
        """Random generator words: product of matrices must match the

        matrix of the product element (mod relations).
        """
        rng = random.Random(seed)
        gens = self.group.generators
        if not gens:
            return
        for _ in range(trials):
            word = [rng.randrange(len(gens)) for _ in range(length)]
            elem = 0
            mat = IntMatrix.identity(self.base.ngens)
            for k in word:
                elem = self.group.mul(elem, gens[k])
                mat = mat.mul(self.gen_matrices[k])
            _check_equal_mod_relations(self.base, self.matrix_of(elem), mat)

    def restrict_to(self, sub):
        """The same base as a module over a subgroup."""
        embed = self.group.embedding_of(sub)
        mats = [self.matrix_of(embed[g]) for g in sub.generators]
        return GModule(sub, self.base, mats)


def _is_invertible_over(base, a):
    hom = AbHom(base, base, a)
    g, _ = cokernel(hom)
    if not g.is_trivial():
        return False
    k, _ = kernel(hom)
    return k.is_trivial()


def _check_equal_mod_relations(base, m1, m2):
    for j in range(base.ngens):
        d = tuple(a - b for a, b in zip(m1.column(j), m2.column(j)))
        if base.reduce(d) != base.zero():
            raise ValueError("inconsistent action along two generator words")


class Cochain1:
    """Normalized 1-cochain: one base element per group element."""

    __slots__ = ("module", "values")

    def __init__(self, module, values):
        if len(values) != module.group.order:
            raise ValueError("need one value per group element")
        vals = tuple(module.base.reduce(v) for v in values)
        if vals[0] != module.base.zero():
            raise ValueError("cochain not normalized at the identity")
        self.module = module
        self.values = vals

    def __call__(self, i):
        return self.values[i]

    def is_cocycle(self):
        """phi(s t) = phi(s) + s.phi(t) for all pairs."""
        g = self.module.group
        base = self.module.base
        for s in range(g.order):
            ms = self.module.matrix_of(s)
            for t in range(g.order):
                lhs = self.values[g.mul(s, t)]
                rhs = base.reduce(
                    tuple(a + b for a, b in
                          zip(self.values[s], ms.apply(self.values[t])))
                )
                if lhs != rhs:
                    return False
        return True

    def add(self, other):
        base = self.module.base
        return Cochain1(
            self.module,
            [base.add(a, b) for a, b in zip(self.values, other.values)],
        )

    def scale(self, k):
        base = self.module.base
        return Cochain1(self.module, [base.scale(k, v) for v in self.values])


class Cochain2:
    """Normalized 2-cochain: a base element per ordered pair."""

    __slots__ = ("module", "values")

    def __init__(self, module, values):
        n = module.group.order
        if len(values) != n or any(len(row) != n for row in values):
            raise ValueError("need an n x n value table")
        vals = tuple(
            tuple(module.base.reduce(v) for v in row) for row in values
        )
        zero = module.base.zero()
        for i in range(n):
            if vals[0][i] != zero or vals[i][0] != zero:
                raise ValueError("cochain not normalized at the identity")
        self.module = module
        self.values = vals

    def __call__(self, i, j):
        return self.values[i][j]

    def cocycle_defect(self):
        """First triple violating the 2-cocycle identity, or None.

        The identity reads s.c(t,u) - c(st,u) + c(s,tu) - c(s,t) = 0.
        """
        g = self.module.group
        base = self.module.base
        n = g.order
        for s in range(n):
            ms = self.module.matrix_of(s)
            for t in range(n):
                st = g.mul(s, t)
                cst = self.values[s][t]
                for u in range(n):
                    acted = ms.apply(self.values[t][u])
                    total = tuple(
                        a - b + c - d
                        for a, b, c, d in zip(
                            acted,
                            self.values[st][u],
                            self.values[s][g.mul(t, u)],
                            cst,
                        )
                    )
                    if base.reduce(total) != base.zero():
                        return (s, t, u)
        return None

    def is_cocycle(self):
        return self.cocycle_defect() is None

    def sub_scaled(self, other, m):
        """self - m * other, entrywise."""
        base = self.module.base
        return Cochain2(
            self.module,
            [[base.reduce(tuple(a - m * b for a, b in zip(x, y)))
              for x, y in zip(r1, r2)]
             for r1, r2 in zip(self.values, other.values)],
        )


def coboundary(c):
    """The 2-coboundary of a 1-cochain: (s,t) -> s.c(t) - c(st) + c(s)."""
    module = c.module
    g = module.group
    base = module.base
    n = g.order
    values = []
    for s in range(n):
        ms = module.matrix_of(s)
        row = []
        for t in range(n):
            acted = ms.apply(c.values[t])
            row.append(
                base.reduce(
                    tuple(a - b + d for a, b, d in
                          zip(acted, c.values[g.mul(s, t)], c.values[s]))
                )
            )
        values.append(row)
    out = Cochain2(module, values)
    assert out.cocycle_defect() is None
    return out


def invariants(m):
    """The fixed subgroup of the action, with its inclusion into base.

    >>> g = FiniteGroup.from_mul([0, 1], lambda a, b: (a + b) % 2, [1])
    >>> mod = GModule(g, FinAbGroup(1), [[[-1]]])
    >>> grp, _ = invariants(mod)
    >>> grp
    FinAbGroup<0>
    """
    base = m.base
    nb = base.ngens
    rel = relation_columns(base)
    cols = [[] for _ in range(nb)]
    aug_extra = []
    nblocks = len(m.gen_matrices)
    for k, a in enumerate(m.gen_matrices):
        for j in range(nb):
            col = list(a.column(j))
            col[j] -= 1
            cols[j].extend(col)
        for r in rel:
            aug_extra.append(
                [0] * (k * nb) + list(r) + [0] * ((nblocks - 1 - k) * nb)
            )
    total_rows = nblocks * nb
    all_cols = [tuple(c) for c in cols] + [tuple(c) for c in aug_extra]
    if total_rows == 0:
        gens = [tuple(int(i == j) for i in range(nb)) for j in range(nb)]
    else:
        solver = SmithSolver(IntMatrix.from_columns(all_cols, rows=total_rows))
        gens = [vec[:nb] for vec in solver.kernel_basis()]
    quot = LatticeQuotient(nb, gens, rel)
    inc = AbHom(
        quot.group, base,
        IntMatrix.from_columns(quot.lifts(), rows=nb),
    )
    return quot.group, inc


class H1Cochain:
    """H1 of a GModule via generator-value propagation.

    The unknowns are the cocycle values on the group generators; a
    breadth-first sweep of the Cayley graph turns every revisited
    element into a linear constraint, and the resulting solution
    lattice modulo coboundaries is the cohomology group.  class_of and
    cocycle_of convert between Cochain1 objects and coordinate tuples
    over .group.
    """

    def __init__(self, module):
        g = module.group
        if g.order > 64:
            raise ValueError(
                "group of order %d is too large for the cochain route "
                "(limit 64); use the orbit formulas instead" % g.order
            )
        module._ensure_tables()
        self.module = module
        base = module.base
        nb = base.ngens
        gens = g.generators
        nunk = len(gens) * nb
        self._nunk = nunk
        ident = IntMatrix.identity(nb)

        # value matrices E[t] with phi(t) = E[t] . v, v the unknowns
        e_blocks = {0: _zero_rows(nb, nunk)}
        constraints = []
        frontier = [0]
        while frontier:
            nxt = []
            for s in frontier:
                ms = module.matrix_of(s)
                for k in range(len(gens)):
                    t = g.mul(s, gens[k])
                    block = _add_rows(
                        e_blocks[s],
                        _shift_cols(ms, k * nb, nunk),
                    )
                    if t not in e_blocks:
                        e_blocks[t] = block
                        nxt.append(t)
                    else:
                        diff = _sub_rows(e_blocks[t], block)
                        if any(any(row) for row in diff):
                            constraints.append(diff)
            frontier = nxt
        self._e_blocks = e_blocks

        mods = [0] * base.free_rank + list(base.torsion)
        free_rows = []
        tors_rows = []
        for blk in constraints:
            for i, row in enumerate(blk):
                if mods[i] == 0:
                    free_rows.append(row)
                else:
                    tors_rows.append((row, mods[i]))

        if free_rows:
            solver = SmithSolver(IntMatrix(free_rows, cols=nunk))
            v0 = solver.kernel_basis()
        else:
            v0 = [tuple(int(i == j) for i in range(nunk))
                  for j in range(nunk)]
        if tors_rows and v0:
            biggest = max(d for _, d in tors_rows)
            w = [
                [(biggest // d) * sum(r * c for r, c in zip(row, col))
                 for col in v0]
                for row, d in tors_rows
            ]
            wsolver = SmithSolver(IntMatrix(w, cols=len(v0)))
            zgens = []
            for j in range(len(v0)):
                if j < wsolver.rank:
                    scale = biggest // math.gcd(wsolver.diag[j], biggest)
                else:
                    scale = 1
                zgens.append(tuple(
                    scale * wsolver.v[r][j] for r in range(len(v0))
                ))
            z1 = [
                tuple(sum(z[c] * v0[c][r] for c in range(len(v0)))
                      for r in range(nunk))
                for z in zgens
            ]
        else:
            z1 = list(v0)

        ambient_rel = []
        for k in range(len(gens)):
            for r in relation_columns(base):
                col = [0] * nunk
                for i, x in enumerate(r):
                    col[k * nb + i] = x
                ambient_rel.append(tuple(col))

        cob = []
        for j in range(nb):
            col = []
            for k in range(len(gens)):
                mk = module.gen_matrices[k]
                col.extend(
                    mk[i, j] - int(i == j) for i in range(nb)
                )
            cob.append(tuple(col))

        self._quot = LatticeQuotient(
            nunk, z1 + ambient_rel, cob + ambient_rel
        )
        self.group = self._quot.group

    def class_of(self, c):
        """Coordinates of a 1-cocycle's class over .group."""
        if c.module is not self.module:
            raise ValueError("cochain belongs to a different module")
        if not c.is_cocycle():
            raise ValueError("not a 1-cocycle")
        v = []
        for k in self.module.group.generators:
            v.extend(c.values[k])
        return self._quot.to_class(tuple(v))

    def cocycle_of(self, cls):
        """A representative 1-cocycle for a class."""
        v = self._quot.lift(cls)
        g = self.module.group
        base = self.module.base
        values = [
            base.reduce(tuple(
                sum(row[c] * v[c] for c in range(self._nunk))
                for row in self._e_blocks[t]
            ))
            for t in range(g.order)
        ]
        return Cochain1(self.module, values)


def h1_cochain(m):
    """H1(G, base) from the 1-cochain complex; |G| <= 64.

    Returns an H1Cochain whose .group is the cohomology group and which
    converts cocycles to classes and back.
    """
    return H1Cochain(m)


def _zero_rows(rows, cols):
    return [[0] * cols for _ in range(rows)]


def _add_rows(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _sub_rows(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _shift_cols(mat, offset, total):
    out = []
    for i in range(mat.rows):
        row = [0] * total
        for j in range(mat.cols):
            row[offset + j] = mat[i, j]
        out.append(row)
    return out


class _CoboundarySolver:
    """Factored linear system "delta(psi) = rhs" for one module.

    Unknowns are psi(g) for g != identity.  Free base coordinates give
    exact equations; torsion coordinates give congruences, scaled to
    the largest modulus (the invariant-factor chain makes every modulus
    divide the largest).
    """

    def __init__(self, module):
        module._ensure_tables()
        self.module = module
        g = module.group
        base = module.base
        n = g.order
        nb = base.ngens
        self._nunk = (n - 1) * nb
        mods = [0] * base.free_rank + list(base.torsion)

        def cols_of(elem):
            return None if elem == 0 else (elem - 1) * nb

        free_rows = []
        tors_rows = []
        self._pairs = []
        for s in range(1, n):
            ms = module.matrix_of(s)
            for t in range(1, n):
                st = g.mul(s, t)
                rows = _zero_rows(nb, self._nunk)
                off = cols_of(t)
                for i in range(nb):
                    for j in range(nb):
                        rows[i][off + j] += ms[i, j]
                off = cols_of(st)
                if off is not None:
                    for i in range(nb):
                        rows[i][off + i] -= 1
                off = cols_of(s)
                for i in range(nb):
                    rows[i][off + i] += 1
                self._pairs.append((s, t))
                for i in range(nb):
                    if mods[i] == 0:
                        free_rows.append((rows[i], (s, t, i)))
                    else:
                        tors_rows.append((rows[i], mods[i], (s, t, i)))

        self._free_meta = [meta for _, meta in free_rows]
        self._tors_meta = [meta for _, _m, meta in tors_rows]
        if free_rows:
            self._fsolver = SmithSolver(
                IntMatrix([r for r, _ in free_rows], cols=self._nunk)
            )
            self._v0 = self._fsolver.kernel_basis()
        else:
            self._fsolver = None
            self._v0 = [tuple(int(i == j) for i in range(self._nunk))
                        for j in range(self._nunk)]
        self._tors = [(row, m) for row, m, _ in tors_rows]
        if self._tors:
            self._bigmod = max(m for _, m in self._tors)
            w = [
                [(self._bigmod // m) * sum(r * c for r, c in zip(row, col))
                 for col in self._v0]
                for row, m in self._tors
            ]
            self._wsolver = SmithSolver(IntMatrix(w, cols=len(self._v0)))
        else:
            self._bigmod = None
            self._wsolver = None

    def rhs_of(self, c2):
        free = [c2.values[s][t][i] for (s, t, i) in self._free_meta]
        tors = [c2.values[s][t][i] for (s, t, i) in self._tors_meta]
        return free, tors

    def solvable(self, c2):
        """Is c2 a coboundary?"""
        free, tors = self.rhs_of(c2)
        if self._fsolver is not None:
            part = self._fsolver.solve(free)
            if part is None:
                return False
        else:
            part = (0,) * self._nunk
        if not self._tors:
            return True
        big = self._bigmod
        resid = []
        for (row, m), t in zip(self._tors, tors):
            val = t - sum(r * p for r, p in zip(row, part))
            resid.append((big // m) * val)
        # solve W y = resid (mod big)
        ty = self._wsolver._transform_rhs(resid)
        rank = self._wsolver.rank
        for i in range(rank):
            if ty[i] % math.gcd(self._wsolver.diag[i], big) != 0:
                return False
        for i in range(rank, len(resid)):
            if ty[i] % big != 0:
                return False
        return True


def is_coboundary(c2):
    """Whether a 2-cocycle is the coboundary of some 1-cochain."""
    defect = c2.cocycle_defect()
    if defect is not None:
        raise ValueError(
            "2-cocycle identity violated at triple %r" % (defect,)
        )
    return _CoboundarySolver(c2.module).solvable(c2)


def h2_class_compare(m, c1, c2):
    """Smallest k >= 0 with c1 - k*c2 a coboundary, or None.

    Both inputs must satisfy the 2-cocycle identity; the search range
    0 .. |G|-1 is complete because |G| kills H2.  None means the class
    of c1 lies outside the cyclic subgroup generated by the class of
    c2 ("independent").
    """
    if m.group.order > 64:
        raise ValueError("group too large (limit 64)")
    for c in (c1, c2):
        defect = c.cocycle_defect()
        if defect is not None:
            raise ValueError(
                "2-cocycle identity violated at triple %r" % (defect,)
            )
    solver = _CoboundarySolver(m)
    for k in range(m.group.order):
        if solver.solvable(c1.sub_scaled(c2, k)):
            return k
    return None


def restrict(m, sub, x):
    """Restriction of the H1 class x to a subgroup.

    sub must consist of elements of m's group (error otherwise); x is a
    class tuple over h1_cochain(m).group.  Returns the class tuple over
    h1_cochain of the restricted module.
    """
    h1 = h1_cochain(m)
    phi = h1.cocycle_of(x)
    embed = m.group.embedding_of(sub)
    sub_module = m.restrict_to(sub)
    sub_phi = Cochain1(sub_module, [phi.values[e] for e in embed])
    return h1_cochain(sub_module).class_of(sub_phi)


def corestrict_2tors(m, sub, x):
    """Norm map on mod-2 invariant representatives, for index 2.

    x is a base vector, invariant under sub modulo 2; the result is
    sum of r.x over coset representatives, i.e. x + t.x for any t
    outside sub.  Under the mod-2 connecting map this realizes the
    corestriction on 2-torsion H1 classes.  The base must be free so
    that mod-2 vectors have unambiguous coordinates.
    """
    base = m.base
    if base.torsion:
        raise ValueError("base must be a free module")
    embed = m.group.embedding_of(sub)
    if m.group.order != 2 * sub.order:
        raise ValueError(
            "subgroup has index %d, need 2"
            % (m.group.order // max(sub.order, 1),)
        )
    inside = set(embed)
    for e in inside:
        acted = m.matrix_of(e).apply(x)
        if any((a - b) % 2 for a, b in zip(acted, x)):
            raise ValueError("representative is not invariant mod 2")
    t = next(i for i in range(m.group.order) if i not in inside)
    tx = m.matrix_of(t).apply(x)
    return tuple((a + b) % 2 for a, b in zip(x, tx))


def connecting_cocycle(m, n, x):
    """Connecting map of 0 -> M -n-> M -> M/n -> 0 on an invariant rep.

    x is an integer vector whose class mod n is G-invariant; the result
    is the 1-cocycle sigma -> (sigma.x - x)/n.  The base must be free.
    """
    base = m.base
    if base.torsion:
        raise ValueError("base must be a free module")
    g = m.group
    values = []
    for s in range(g.order):
        diff = tuple(a - b for a, b in zip(m.matrix_of(s).apply(x), x))
        if any(d % n for d in diff):
            raise ValueError("representative is not invariant mod %d" % n)
        values.append(tuple(d // n for d in diff))
    return Cochain1(m, values)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
