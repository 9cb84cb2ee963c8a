"""The sixteen-line configuration of an open quartic del Pezzo surface.

Synthetic blown-up-plane model: the sixteen lines are the exceptional
curves E1..E5, the strict transforms Lij of the lines through two of
the five centres, and the conic C through all five.  Classes live in
the rank-6 lattice over (L, E1..E5) with L.L = 1, Ei.Ej = -delta and
L.Ei = 0.  Every quadrilateral of lines sums to the hyperplane class,
so the open surface's lattice is the rank-5 cokernel of the incidence
map q sending a quadrilateral to the formal sum of its four lines.

Signed permutations act through five-sign words: a line corresponds to
the word with +1 exactly on {i, j} (for Lij), -1 only at i (for Ei), or
all -1 (for C); the element (perm, signs) moves letter j of a word to
slot perm[j], flipped by signs[j].
"""

import itertools
from functools import lru_cache

import numpy as np

from . import weyl_d5
from .cohomology import Cochain1, GModule
from .exactlinalg import FinAbGroup, IntMatrix, smith_normal_form


class LineLabel:
    """One of the sixteen lines.

    class_vector is over the basis (L, E1..E5); sign_vector is the
    five-sign word the signed permutations act on.
    """

    __slots__ = ("name", "class_vector", "sign_vector")

    def __init__(self, name, class_vector, sign_vector):
        self.name = name
        self.class_vector = tuple(int(v) for v in class_vector)
        self.sign_vector = tuple(int(v) for v in sign_vector)

    def __repr__(self):
        return "<line %s>" % self.name


def _build_lines():
    lines = []
    for i in range(5):
        cv = [0] * 6
        cv[1 + i] = 1
        sv = [1] * 5
        sv[i] = -1
        lines.append(LineLabel("E%d" % (i + 1), cv, sv))
    for i, j in itertools.combinations(range(5), 2):
        cv = [1] + [0] * 5
        cv[1 + i] = cv[1 + j] = -1
        sv = [-1] * 5
        sv[i] = sv[j] = 1
        lines.append(LineLabel("L%d%d" % (i + 1, j + 1), cv, sv))
    lines.append(LineLabel("C", (2, -1, -1, -1, -1, -1), (-1,) * 5))
    return tuple(lines)


LINES = _build_lines()
LINE_INDEX = {line.name: k for k, line in enumerate(LINES)}
_SIGN_INDEX = {line.sign_vector: k for k, line in enumerate(LINES)}


def line_index(x):
    """Index of a line given by position, name or LineLabel."""
    if isinstance(x, LineLabel):
        return LINE_INDEX[x.name]
    if isinstance(x, str):
        if x not in LINE_INDEX:
            raise ValueError("unknown line name: %r" % (x,))
        return LINE_INDEX[x]
    k = int(x)
    if not 0 <= k < len(LINES):
        raise ValueError("line index out of range: %r" % (x,))
    return k


def incidence(a, b):
    """Intersection number of two distinct lines, always 0 or 1.

    The pairing of the blowup lattice: positive on the L coordinate,
    negative definite on the exceptional part.  Self-pairings are the
    constant -1 and are excluded here.
    """
    i, j = line_index(a), line_index(b)
    if i == j:
        raise ValueError("incidence needs two distinct lines")
    u = LINES[i].class_vector
    v = LINES[j].class_vector
    return u[0] * v[0] - sum(u[k] * v[k] for k in range(1, 6))


def _cycle_order(combo, pair):
    """Arrange four mutually-linked lines into their unique cycle.

    Starts at the least index and walks toward its smaller neighbour,
    so the result is canonical for a given four-element set.
    """
    neighbours = {a: [b for b in combo if b != a and pair[a][b]] for a in combo}
    if any(len(v) != 2 for v in neighbours.values()):
        raise AssertionError("four-incidence quadruple is not a cycle: %r" % (combo,))
    order = [combo[0], min(neighbours[combo[0]])]
    while len(order) < 4:
        a, prev = order[-1], order[-2]
        order.append(next(b for b in neighbours[a] if b != prev))
    return tuple(order)


class _CokerData:
    """Fixed tables of the quadrilateral complex and its cokernel.

    q (and its numpy twin qn) is the 16 x 40 incidence matrix; pr and
    sec split the cokernel, so pr @ qn = 0, pr @ sec = I5 and w solves
    qn @ (w @ b) = b for every b in the column span.
    """

    __slots__ = ("quads", "q", "qn", "supports", "pr", "sec", "w")

    def __init__(self, quads, q, qn, supports, pr, sec, w):
        self.quads = quads
        self.q = q
        self.qn = qn
        self.supports = supports
        self.pr = pr
        self.sec = sec
        self.w = w


@lru_cache(maxsize=1)
def _coker():
    pair = [[0 if i == j else incidence(i, j) for j in range(16)]
            for i in range(16)]
    quads = []
    for combo in itertools.combinations(range(16), 4):
        ones = sum(pair[a][b] for a, b in itertools.combinations(combo, 2))
        if ones == 4:
            quads.append(_cycle_order(combo, pair))
    qn = np.zeros((16, len(quads)), dtype=np.int64)
    for col, quad in enumerate(quads):
        for k in quad:
            qn[k, col] = 1
    q = IntMatrix(qn.tolist())
    s, u, v = smith_normal_form(q)
    diag = [s[k, k] for k in range(16)]
    rank = sum(1 for d in diag if d != 0)
    if any(d != 1 for d in diag[:rank]) or 16 - rank != 5:
        raise AssertionError("quadrilateral cokernel is not free of rank 5")
    un = np.array(u.data, dtype=np.int64)
    vn = np.array(v.data, dtype=np.int64)
    pr = un[rank:, :]
    sec = np.array(u.inverse_unimodular().data, dtype=np.int64)[:, rank:]
    w = vn[:, :rank] @ un[:rank, :]
    supports = {frozenset(quad): col for col, quad in enumerate(quads)}
    return _CokerData(tuple(quads), q, qn, supports, pr, sec, w)


def quadrilaterals():
    """The forty quadruples of cyclically meeting lines and their matrix.

    A quadruple qualifies when exactly four of its six intersection
    numbers equal 1; members come back in cycle order starting at the
    least index.  The matrix holds one 0/1 column per quadrilateral.
    """
    data = _coker()
    return data.quads, data.q


def divisor_to_class(vec):
    """Cokernel coordinates of a formal sum of lines (a length-16 vector)."""
    v = np.asarray(vec, dtype=np.int64)
    if v.shape != (16,):
        raise ValueError("need one coefficient per line")
    return tuple(int(c) for c in _coker().pr @ v)


def class_to_divisor(vec):
    """A formal sum of lines representing cokernel coordinates."""
    v = np.asarray(vec, dtype=np.int64)
    if v.shape != (5,):
        raise ValueError("need a length-5 class vector")
    return tuple(int(c) for c in _coker().sec @ v)


def line_perm_of(sp):
    """The 16-line permutation of one signed permutation."""
    out = [0] * 16
    for idx, line in enumerate(LINES):
        word = [0] * 5
        for j in range(5):
            word[sp.perm[j]] = sp.signs[j] * line.sign_vector[j]
        out[idx] = _SIGN_INDEX[tuple(word)]
    return tuple(out)


class LineAction:
    """Permutations of the sixteen lines under one subgroup.

    perms[k] is the image table of the k-th subgroup element in sorted
    id order: perms[k][i] is where line i goes.
    """

    __slots__ = ("subgroup", "perms", "generator_positions")

    def __init__(self, subgroup, perms, generator_positions):
        self.subgroup = subgroup
        self.perms = tuple(tuple(p) for p in perms)
        self.generator_positions = tuple(generator_positions)

    @property
    def order(self):
        return len(self.perms)

    def generator_perms(self):
        return [self.perms[k] for k in self.generator_positions]

    def __repr__(self):
        return "LineAction(order=%d)" % self.order


def line_action_from_signed(g):
    """Line permutations of a subgroup (any weyl_d5 subgroup handle)."""
    sub = weyl_d5._subgroup_of(g)
    perms = tuple(line_perm_of(sp) for sp in sub.signed_perms())
    gen_pos = tuple(sub.elements.index(i) for i in sub.generators)
    return LineAction(sub, perms, gen_pos)


def _check_preserves_quads(perm):
    data = _coker()
    for quad in data.quads:
        if frozenset(perm[k] for k in quad) not in data.supports:
            raise ValueError("line action does not preserve the "
                             "quadrilateral set")


def _coker_matrix(perm):
    """The 5 x 5 cokernel action of one line permutation."""
    data = _coker()
    p = np.zeros((16, 16), dtype=np.int64)
    for j, k in enumerate(perm):
        p[k, j] = 1
    return data.pr @ p @ data.sec


def pic_from_lines(act):
    """The open surface's lattice as a G-module built from the lines.

    The cokernel of the quadrilateral matrix with the line permutations
    pushed through the fixed splitting; the base is free of rank 5.
    Raises when a generator fails to preserve the quadrilateral set.
    """
    for perm in act.generator_perms():
        _check_preserves_quads(perm)
    fg = weyl_d5.finite_group_of(act.subgroup)
    mats = [IntMatrix(_coker_matrix(act.perms[k]).tolist())
            for k in fg.generators]
    return GModule(fg, FinAbGroup(5), mats)


def h1_from_lines(g):
    """H1 of the line-route lattice, as mod-4 classes over Z^5.

    Accepts a LineAction or any weyl_d5 subgroup handle.  The result
    matches weyl_d5.h1_full on every subgroup; computing it from the
    quadrilateral cokernel instead of the abstract lattice is the
    cross-check between the two constructions.
    """
    act = g if isinstance(g, LineAction) else line_action_from_signed(g)
    for perm in act.generator_perms():
        _check_preserves_quads(perm)
    mats = [IntMatrix(_coker_matrix(p).tolist()) for p in act.generator_perms()]
    return weyl_d5.invariant_subquotient(mats, 4, ambient_n=5)


def _inverse_perms(act):
    perms = np.array(act.perms, dtype=np.intp)
    inv = np.empty_like(perms)
    inv[np.arange(len(perms))[:, None], perms] = np.arange(16)[None, :]
    return inv


def _local_table(sub):
    w = weyl_d5._weyl()
    ids = np.asarray(sub.elements, dtype=np.intp)
    return np.searchsorted(ids, w.table[np.ix_(ids, ids)]).astype(np.intp)


def cocycle_from_invariant(act, vec):
    """The 1-cocycle sigma -> (sigma.x - x) / 4 of a mod-4 invariant x.

    vec is a length-5 representative in cokernel coordinates (as handed
    out by h1_from_lines(...).lift).  Returns an (order, 5) array, one
    value per subgroup element in sorted id order.
    """
    data = _coker()
    x = np.asarray(vec, dtype=np.int64)
    if x.shape != (5,):
        raise ValueError("need a length-5 representative")
    y = data.sec @ x
    moved = y[_inverse_perms(act)]
    num = moved @ data.pr.T - x[None, :]
    if (num % 4).any():
        raise ValueError("representative is not invariant mod 4")
    return num // 4


def lift_cocycle_to_divisors(act, phi):
    """Divisor-valued lift psi of the coboundary of a lattice 1-cocycle.

    phi assigns a cokernel 5-vector to every subgroup element, either
    as a Cochain1 over pic_from_lines(act) or as an (order, 5) array in
    the same element order.  With phi~ the fixed divisor lift of phi,
    the result satisfies q.psi = delta(phi~) entry for entry.
    """
    if isinstance(phi, Cochain1):
        values = np.array([list(v) for v in phi.values], dtype=np.int64)
    else:
        values = np.array(phi, dtype=np.int64)
    n = act.order
    if values.shape != (n, 5):
        raise ValueError("need one length-5 value per subgroup element")
    for perm in act.generator_perms():
        _check_preserves_quads(perm)
    data = _coker()
    mul = _local_table(act.subgroup)
    f = values @ data.sec.T
    moved = f[:, _inverse_perms(act)].transpose(1, 0, 2)
    if not np.array_equal(values[mul], values[:, None, :] + moved @ data.pr.T):
        raise ValueError("phi is not a 1-cocycle into the line-route lattice")
    boundary = moved - f[mul] + f[:, None, :]
    psi = boundary @ data.w.T
    if not np.array_equal(psi @ data.qn.T, boundary):
        raise AssertionError("divisor lift failed to reproduce the coboundary")
    return DivisorLift(act, psi, boundary)


class DivisorLift:
    """psi: G x G -> Z^40 together with the coboundary it lifts.

    values[s, t] is the exponent vector of the rational function of the
    pair (s, t); boundary[s, t] is that function's divisor, written in
    line coordinates.
    """

    __slots__ = ("action", "values", "boundary")

    def __init__(self, action, values, boundary):
        self.action = action
        self.values = values
        self.boundary = boundary

    def verify_lift(self):
        """q.psi == the stored coboundary, entry for entry."""
        return bool(np.array_equal(self.values @ _coker().qn.T, self.boundary))

    def quad_perms(self):
        """The permutation of the forty quadrilaterals per element."""
        data = _coker()
        n = self.action.order
        out = np.empty((n, len(data.quads)), dtype=np.intp)
        for s in range(n):
            perm = self.action.perms[s]
            for col, quad in enumerate(data.quads):
                out[s, col] = data.supports[frozenset(perm[k] for k in quad)]
        return out

    def verify_coboundary_divisor(self):
        """The formal coboundary of psi maps to the zero divisor.

        delta(psi)(s, t, u) is a Z^40 vector; pushing it through q must
        give 0 for every triple.  Blocked over the first argument so
        the largest groups stay within a few dozen megabytes.
        """
        data = _coker()
        n = self.action.order
        mul = _local_table(self.action.subgroup)
        psi = self.values
        perm40 = self.quad_perms()
        qt = np.ascontiguousarray(data.qn.T)
        pushed = psi @ qt
        for s in range(n):
            # sigma.psi(t, u) pushed through q, as one reassociated product
            term = psi @ qt[perm40[s]]
            term -= pushed[mul[s]]
            term += pushed[s][mul]
            term -= pushed[s][:, None, :]
            if term.any():
                return False
        return True

    def document(self, base_class=None):
        """JSON-ready form: pair keys "s,t" to 40-entry exponent vectors.

        All-zero vectors are omitted; the context (element images, line
        names, quadrilaterals) rides along so the file stands alone.
        """
        act = self.action
        doc = {
            "kind": "divisor-cochain",
            "order": act.order,
            "generators": [sp.images() for sp in act.subgroup.generator_perms()],
            "elements": [sp.images() for sp in act.subgroup.signed_perms()],
            "lines": [line.name for line in LINES],
            "quadrilaterals": [[LINES[k].name for k in quad]
                               for quad in _coker().quads],
            "values": {},
        }
        if base_class is not None:
            doc["base_class"] = [int(v) for v in base_class]
        for s in range(act.order):
            for t in range(act.order):
                row = self.values[s, t]
                if row.any():
                    doc["values"]["%d,%d" % (s, t)] = [int(e) for e in row]
        return doc


def normalize_at_point(values, base_values):
    """Divide function values by the values at a base point, pairwise.

    Both arguments map the same keys (pairs of group elements) to field
    elements; the result maps each key to values[key] / base_values[key].
    When the underlying functions form a 2-cochain whose coboundary is
    constant, the rescaled family satisfies the exact 2-cocycle identity:
    the constant defect cancels in the ratio.
    """
    out = {}
    for key, val in values.items():
        base = base_values.get(key)
        if base is None or base == 0:
            raise ValueError("value at the base point is zero or undefined "
                             "for %r; choose another base point" % (key,))
        out[key] = val / base
    return out
