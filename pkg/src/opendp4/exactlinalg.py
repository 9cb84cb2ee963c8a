"""Exact linear algebra over Z: Smith form, kernels, cokernels, solving.

Everything here works with arbitrary-precision Python integers; no
floating point is used anywhere in the package.  Finitely generated
abelian groups are kept in invariant-factor form (free rank plus a
divisibility chain d_1 | d_2 | ...), and group elements are coefficient
vectors over the chosen generators, free coordinates first.

The Smith normal form uses a deterministic pivot rule (smallest absolute
value, then lowest row-major index), so every derived object - kernels,
particular solutions, quotient presentations - is reproducible.
"""

from fractions import Fraction


class IntMatrix:
    """Immutable integer matrix.

    >>> m = IntMatrix([[2, 4], [6, 8]])
    >>> m.rows, m.cols
    (2, 2)
    >>> m.mul(IntMatrix.identity(2)) == m
    True
    """

    __slots__ = ("data", "rows", "cols")

    def __init__(self, rows, cols=None):
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ValueError("ragged matrix")
        self.data = data
        self.rows = len(data)
        # cols only matters for 0-row matrices, where it is unrecoverable
        self.cols = len(data[0]) if data else (cols or 0)

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows, cols):
        if rows == 0:
            return cls([], cols=cols)
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, cols, rows=None):
        if not cols:
            return cls.zero(rows or 0, 0)
        height = len(cols[0])
        if height == 0:
            return cls([], cols=len(cols))
        return cls([[col[i] for col in cols] for i in range(height)])

    def column(self, j):
        return tuple(self.data[i][j] for i in range(self.rows))

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def __getitem__(self, key):
        i, j = key
        return self.data[i][j]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        return "IntMatrix(%r)" % (list(map(list, self.data)),)

    def mul(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        bt = [other.column(j) for j in range(other.cols)]
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt]
             for row in self.data],
            cols=other.cols,
        )

    def apply(self, vec):
        """Matrix times column vector, returned as a tuple."""
        if len(vec) != self.cols:
            raise ValueError("length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.data)

    def add(self, other):
        return IntMatrix(
            [[a + b for a, b in zip(ra, rb)]
             for ra, rb in zip(self.data, other.data)]
        )

    def sub(self, other):
        return IntMatrix(
            [[a - b for a, b in zip(ra, rb)]
             for ra, rb in zip(self.data, other.data)]
        )

    def neg(self):
        return IntMatrix([[-a for a in row] for row in self.data])

    def transpose(self):
        return IntMatrix(list(zip(*self.data)) if self.data else [])

    def hstack(self, other):
        if self.rows != other.rows:
            raise ValueError("row mismatch")
        return IntMatrix(
            [list(ra) + list(rb) for ra, rb in zip(self.data, other.data)]
        )

    def is_zero(self):
        return all(all(x == 0 for x in row) for row in self.data)

    def inverse_unimodular(self):
        """Inverse of a matrix with determinant +-1 (exact, integer)."""
        n = self.rows
        if n != self.cols:
            raise ValueError("not square")
        a = [[Fraction(x) for x in row] for row in self.data]
        inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = next((i for i in range(col, n) if a[i][col] != 0), None)
            if piv is None:
                raise ValueError("singular matrix")
            a[col], a[piv] = a[piv], a[col]
            inv[col], inv[piv] = inv[piv], inv[col]
            f = a[col][col]
            a[col] = [x / f for x in a[col]]
            inv[col] = [x / f for x in inv[col]]
            for i in range(n):
                if i != col and a[i][col] != 0:
                    g = a[i][col]
                    a[i] = [x - g * y for x, y in zip(a[i], a[col])]
                    inv[i] = [x - g * y for x, y in zip(inv[i], inv[col])]
        out = []
        for row in inv:
            if any(x.denominator != 1 for x in row):
                raise ValueError("matrix is not unimodular")
            out.append([int(x) for x in row])
        return IntMatrix(out)


class FinAbGroup:
    """A finitely generated abelian group in invariant-factor form.

    Elements are integer tuples of length free_rank + len(torsion); the
    free coordinates come first, each torsion coordinate is reduced
    modulo its factor.  The torsion chain satisfies d_1 | d_2 | ...,
    every d_i >= 2.

    >>> g = FinAbGroup(1, (2, 4))
    >>> g.reduce((3, 5, -1))
    (3, 1, 3)
    >>> g.order() is None
    True
    >>> FinAbGroup(0, (2, 2)).order()
    4
    """

    __slots__ = ("free_rank", "torsion")

    def __init__(self, free_rank, torsion=()):
        torsion = tuple(int(d) for d in torsion)
        if free_rank < 0:
            raise ValueError("negative free rank")
        for d in torsion:
            if d < 2:
                raise ValueError("invariant factors must be >= 2")
        for a, b in zip(torsion, torsion[1:]):
            if b % a != 0:
                raise ValueError("broken divisibility chain")
        self.free_rank = free_rank
        self.torsion = torsion

    @property
    def ngens(self):
        return self.free_rank + len(self.torsion)

    def zero(self):
        return (0,) * self.ngens

    def reduce(self, vec):
        if len(vec) != self.ngens:
            raise ValueError("length mismatch")
        free = tuple(int(x) for x in vec[: self.free_rank])
        tors = tuple(
            int(x) % d for x, d in zip(vec[self.free_rank:], self.torsion)
        )
        return free + tors

    def add(self, a, b):
        return self.reduce(tuple(x + y for x, y in zip(a, b)))

    def scale(self, k, a):
        return self.reduce(tuple(k * x for x in a))

    def neg(self, a):
        return self.scale(-1, a)

    def order(self):
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def exponent(self):
        if self.free_rank:
            return None
        return self.torsion[-1] if self.torsion else 1

    def elements(self):
        """All elements of a finite group (small groups only)."""
        if self.free_rank:
            raise ValueError("infinite group")
        out = [()]
        for d in self.torsion:
            out = [e + (x,) for e in out for x in range(d)]
        return out

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def __eq__(self, other):
        return (
            isinstance(other, FinAbGroup)
            and self.free_rank == other.free_rank
            and self.torsion == other.torsion
        )

    def __hash__(self):
        return hash((self.free_rank, self.torsion))

    def __repr__(self):
        parts = ["Z"] * self.free_rank + ["Z/%d" % d for d in self.torsion]
        return "FinAbGroup<%s>" % (" + ".join(parts) if parts else "0")


class AbHom:
    """Homomorphism between FinAbGroups, as a matrix on generators.

    The matrix acts on column vectors: (h.apply(x))_i = sum_j m_ij x_j.
    """

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source, target, matrix):
        if not isinstance(matrix, IntMatrix):
            matrix = IntMatrix(matrix)
        if matrix.rows != target.ngens or matrix.cols != source.ngens:
            raise ValueError(
                "matrix shape %dx%d does not map %d gens to %d gens"
                % (matrix.rows, matrix.cols, source.ngens, target.ngens)
            )
        self.source = source
        self.target = target
        self.matrix = matrix

    def apply(self, x):
        return self.target.reduce(self.matrix.apply(self.source.reduce(x)))

    def is_well_defined(self):
        """Do the source relations map into the target relations?"""
        for j, d in enumerate(self.source.torsion):
            col = self.matrix.column(self.source.free_rank + j)
            image = tuple(d * x for x in col)
            if self.target.reduce(image) != self.target.zero():
                return False
        return True

    def compose(self, inner):
        """self after inner."""
        return AbHom(inner.source, self.target, self.matrix.mul(inner.matrix))


def relation_columns(group):
    """Torsion relations of a FinAbGroup as integer columns."""
    cols = []
    n = group.ngens
    for j, d in enumerate(group.torsion):
        col = [0] * n
        col[group.free_rank + j] = d
        cols.append(col)
    return cols


def _find_pivot(a, k, rows, cols):
    best = None
    for i in range(k, rows):
        ai = a[i]
        for j in range(k, cols):
            x = ai[j]
            if x != 0:
                ax = -x if x < 0 else x
                if best is None or ax < best[0]:
                    best = (ax, i, j)
                    if ax == 1:
                        return best[1], best[2]
    return None if best is None else (best[1], best[2])


def _snf_core(mat, want_u, want_v):
    """Diagonalize a copy of mat; returns (diag_list, a, u, v, rank).

    u and v are lists of lists (or None); u * mat * v has the diagonal.
    The divisibility chain is enforced and diagonal entries are >= 0.
    """
    a = [list(row) for row in mat]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = [[int(i == j) for j in range(rows)] for i in range(rows)] if want_u else None
    v = [[int(i == j) for j in range(cols)] for i in range(cols)] if want_v else None
    k = 0
    limit = min(rows, cols)
    while k < limit:
        piv = _find_pivot(a, k, rows, cols)
        if piv is None:
            break
        while True:
            i, j = piv
            if i != k:
                a[k], a[i] = a[i], a[k]
                if want_u:
                    u[k], u[i] = u[i], u[k]
            if j != k:
                for row in a:
                    row[k], row[j] = row[j], row[k]
                if want_v:
                    for row in v:
                        row[k], row[j] = row[j], row[k]
            pivot = a[k][k]
            dirty = False
            for i in range(k + 1, rows):
                x = a[i][k]
                if x != 0:
                    q = x // pivot
                    if q:
                        ak = a[k]
                        a[i] = [y - q * z for y, z in zip(a[i], ak)]
                        if want_u:
                            uk = u[k]
                            u[i] = [y - q * z for y, z in zip(u[i], uk)]
                    if a[i][k] != 0:
                        dirty = True
            for j in range(k + 1, cols):
                x = a[k][j]
                if x != 0:
                    q = x // pivot
                    if q:
                        for row in a:
                            row[j] -= q * row[k]
                        if want_v:
                            for row in v:
                                row[j] -= q * row[k]
                    if a[k][j] != 0:
                        dirty = True
            if dirty:
                piv = _find_pivot(a, k, rows, cols)
                continue
            # pivot must divide the rest of the block for the chain
            offender = None
            for i in range(k + 1, rows):
                ai = a[i]
                for j in range(k + 1, cols):
                    if ai[j] % pivot != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            ao = a[offender]
            a[k] = [y + z for y, z in zip(a[k], ao)]
            if want_u:
                uo = u[offender]
                u[k] = [y + z for y, z in zip(u[k], uo)]
            piv = (k, k)
        if a[k][k] < 0:
            a[k] = [-x for x in a[k]]
            if want_u:
                u[k] = [-x for x in u[k]]
        k += 1
    diag = [a[i][i] for i in range(min(rows, cols))]
    rank = sum(1 for d in diag if d != 0)
    return diag, a, u, v, rank


def smith_normal_form(m):
    """Smith normal form with transforms: returns (s, u, v), u*m*v = s.

    The diagonal of s is a divisibility chain of nonnegative integers;
    u and v are unimodular.

    >>> s, u, v = smith_normal_form(IntMatrix([[2, 4], [6, 8]]))
    >>> [s[i, i] for i in range(2)]
    [2, 4]
    >>> u.mul(IntMatrix([[2, 4], [6, 8]])).mul(v) == s
    True
    """
    if not isinstance(m, IntMatrix):
        m = IntMatrix(m)
    diag, a, u, v, _rank = _snf_core(m.data, True, True)
    return IntMatrix(a), IntMatrix(u), IntMatrix(v)


class SmithSolver:
    """Factored form of one matrix, reused for many solves.

    Solves m x = y over Z, exposes an integer kernel basis, and reports
    the cokernel structure.  Row operations are replayed on each right
    hand side instead of storing the full left transform.
    """

    def __init__(self, m):
        cols_hint = m.cols if isinstance(m, IntMatrix) else None
        if isinstance(m, IntMatrix):
            m = m.data
        self._rows = len(m)
        if self._rows:
            self._cols = len(m[0])
        else:
            self._cols = cols_hint or 0
        self._oplog = []
        diag, _a, _u, v, rank = self._factor([list(r) for r in m])
        self.diag = diag
        self.rank = rank
        self.v = v

    def _factor(self, a):
        rows, cols = self._rows, self._cols
        log = self._oplog
        v = [[int(i == j) for j in range(cols)] for i in range(cols)]
        k = 0
        limit = min(rows, cols)
        while k < limit:
            piv = _find_pivot(a, k, rows, cols)
            if piv is None:
                break
            while True:
                i, j = piv
                if i != k:
                    a[k], a[i] = a[i], a[k]
                    log.append(("swap", k, i))
                if j != k:
                    for row in a:
                        row[k], row[j] = row[j], row[k]
                    for row in v:
                        row[k], row[j] = row[j], row[k]
                pivot = a[k][k]
                dirty = False
                for i in range(k + 1, rows):
                    x = a[i][k]
                    if x != 0:
                        q = x // pivot
                        if q:
                            ak = a[k]
                            a[i] = [y - q * z for y, z in zip(a[i], ak)]
                            log.append(("addmul", i, k, -q))
                        if a[i][k] != 0:
                            dirty = True
                for j in range(k + 1, cols):
                    x = a[k][j]
                    if x != 0:
                        q = x // pivot
                        if q:
                            for row in a:
                                row[j] -= q * row[k]
                            for row in v:
                                row[j] -= q * row[k]
                        if a[k][j] != 0:
                            dirty = True
                if dirty:
                    piv = _find_pivot(a, k, rows, cols)
                    continue
                offender = None
                for i in range(k + 1, rows):
                    ai = a[i]
                    for j in range(k + 1, cols):
                        if ai[j] % pivot != 0:
                            offender = i
                            break
                    if offender is not None:
                        break
                if offender is None:
                    break
                ao = a[offender]
                a[k] = [y + z for y, z in zip(a[k], ao)]
                log.append(("addmul", k, offender, 1))
                piv = (k, k)
            if a[k][k] < 0:
                a[k] = [-x for x in a[k]]
                log.append(("neg", k, 0))
            k += 1
        diag = [a[i][i] for i in range(min(rows, cols))]
        rank = sum(1 for d in diag if d != 0)
        return diag, a, None, v, rank

    def _transform_rhs(self, y):
        y = list(y)
        for op, i, j, *rest in self._oplog:
            if op == "swap":
                y[i], y[j] = y[j], y[i]
            elif op == "addmul":
                y[i] += rest[0] * y[j]
            else:
                y[i] = -y[i]
        return y

    def solve(self, y):
        """A particular integer solution of m x = y, or None."""
        if len(y) != self._rows:
            raise ValueError("length mismatch")
        ty = self._transform_rhs(y)
        z = [0] * self._cols
        for i in range(self.rank):
            d = self.diag[i]
            if ty[i] % d != 0:
                return None
            z[i] = ty[i] // d
        for i in range(self.rank, self._rows):
            if ty[i] != 0:
                return None
        return tuple(
            sum(self.v[r][c] * z[c] for c in range(self._cols))
            for r in range(self._cols)
        )

    def kernel_basis(self):
        """Columns of v past the rank: a basis of the integer kernel."""
        return [
            tuple(self.v[r][c] for r in range(self._cols))
            for c in range(self.rank, self._cols)
        ]

    def cokernel_invariants(self):
        """(free_rank, torsion chain) of Z^rows / column span."""
        tors = tuple(d for d in self.diag if d > 1)
        return self._rows - self.rank, tors


def _augmented(h):
    cols = [h.matrix.column(j) for j in range(h.matrix.cols)]
    cols += relation_columns(h.target)
    return IntMatrix.from_columns(cols, rows=h.target.ngens)


def solve(h, y):
    """x in the source with h(x) = y, or None when y is not in the image.

    A None return signals a non-cocycle or otherwise inconsistent input
    upstream; callers decide whether that is an error.
    """
    y = h.target.reduce(y)
    solver = SmithSolver(_augmented(h))
    x = solver.solve(list(y))
    if x is None:
        return None
    return h.source.reduce(x[: h.source.ngens])


def cokernel(h):
    """Cokernel of h in invariant-factor form, with the projection.

    >>> z = FinAbGroup(1)
    >>> g, proj = cokernel(AbHom(z, z, [[4]]))
    >>> g
    FinAbGroup<Z/4>
    """
    aug = _augmented(h)
    n = h.target.ngens
    diag, _a, u, _v, rank = _snf_core(aug.data, True, False)
    free_rows = [i for i in range(n) if i >= rank]
    tors_rows = [i for i in range(rank) if diag[i] > 1]
    group = FinAbGroup(len(free_rows), tuple(diag[i] for i in tors_rows))
    proj_rows = [u[i] for i in free_rows] + [u[i] for i in tors_rows]
    proj = AbHom(h.target, group, IntMatrix(proj_rows, cols=n))
    return group, proj


def kernel(h):
    """Kernel of h as a group with its inclusion into the source.

    >>> z2 = FinAbGroup(2)
    >>> g, inc = kernel(AbHom(z2, z2, [[0, 0], [0, 0]]))
    >>> g
    FinAbGroup<Z + Z>
    """
    aug = _augmented(h)
    solver = SmithSolver(aug)
    gens = [vec[: h.source.ngens] for vec in solver.kernel_basis()]
    quot = LatticeQuotient(
        h.source.ngens, gens, relation_columns(h.source)
    )
    inc = AbHom(quot.group, h.source, IntMatrix.from_columns(quot.lifts())
                if quot.group.ngens else IntMatrix.zero(h.source.ngens, 0))
    return quot.group, inc


def column_echelon_basis(n, gens):
    """A triangular basis of the lattice in Z^n spanned by gens.

    Returns a list of column vectors (possibly empty).  Deterministic.
    """
    cols = [list(g) for g in gens if any(g)]
    basis = []
    for row in range(n):
        if not cols:
            break
        live = [c for c in cols if c[row] != 0]
        while len(live) > 1:
            live.sort(key=lambda c: abs(c[row]))
            piv = live[0]
            for c in live[1:]:
                q = c[row] // piv[row]
                for r in range(n):
                    c[r] -= q * piv[r]
            live = [c for c in live if c[row] != 0]
        if live:
            piv = live[0]
            if piv[row] < 0:
                piv[:] = [-x for x in piv]
            basis.append(tuple(piv))
            cols = [c for c in cols if c is not piv and any(c)]
    return basis


class LatticeQuotient:
    """A quotient L / L0 of lattices inside an ambient Z^n.

    numerator_gens span L, denominator_gens span L0 (must lie in L).
    Exposes the quotient as a FinAbGroup plus exact maps both ways:
    to_class sends an ambient vector in L to its class, lift returns a
    representative ambient vector for a class.
    """

    def __init__(self, ambient_n, numerator_gens, denominator_gens):
        self.n = ambient_n
        basis = column_echelon_basis(ambient_n, list(numerator_gens))
        self._basis = basis
        r = len(basis)
        if r == 0:
            self.group = FinAbGroup(0, ())
            self._u = self._uinv = None
            self._layout = []
            return
        bmat = IntMatrix.from_columns(basis)
        self._bsolver = SmithSolver(bmat)
        coords = []
        for d in denominator_gens:
            w = self._bsolver.solve(list(d))
            if w is None:
                raise ValueError("denominator outside the numerator lattice")
            coords.append(w)
        if coords:
            cmat = IntMatrix.from_columns(coords)
        else:
            cmat = IntMatrix.zero(r, 0)
        diag, _a, u, _v, rank = _snf_core(cmat.data, True, False)
        free_rows = [i for i in range(r) if i >= rank]
        tors_rows = [i for i in range(rank) if diag[i] > 1]
        self.group = FinAbGroup(
            len(free_rows), tuple(diag[i] for i in tors_rows)
        )
        self._u = IntMatrix(u)
        self._uinv = self._u.inverse_unimodular()
        self._layout = free_rows + tors_rows

    def basis(self):
        return list(self._basis)

    def contains(self, vec):
        if not self._basis:
            return not any(vec)
        return self._bsolver.solve(list(vec)) is not None

    def to_class(self, vec):
        """Class of an ambient vector that lies in the numerator lattice."""
        if not self._basis:
            if any(vec):
                raise ValueError("vector outside the lattice")
            return self.group.zero()
        w = self._bsolver.solve(list(vec))
        if w is None:
            raise ValueError("vector outside the lattice")
        c = self._u.apply(w)
        return self.group.reduce(tuple(c[i] for i in self._layout))

    def lift(self, cls):
        """An ambient representative of a class."""
        cls = self.group.reduce(cls)
        if not self._basis:
            return (0,) * self.n
        r = len(self._basis)
        assembled = [0] * r
        for pos, i in enumerate(self._layout):
            assembled[i] = cls[pos]
        w = self._uinv.apply(assembled)
        out = [0] * self.n
        for c, b in zip(w, self._basis):
            for i in range(self.n):
                out[i] += c * b[i]
        return tuple(out)

    def lifts(self):
        """Ambient representatives of the generators, as columns."""
        out = []
        for i in range(self.group.ngens):
            e = [0] * self.group.ngens
            e[i] = 1
            out.append(self.lift(tuple(e)))
        return out


if __name__ == "__main__":
    import doctest

    doctest.testmod()
