"""Local invariants of 2-cocycle classes from finite residue data.

The tame machine works for a Galois extension of non-archimedean local
fields whose group has 2-power order and whose residue characteristic
is odd.  Everything it consumes is combinatorial: valuations, discrete
logarithms in the residue field, the inertia subgroup and a Frobenius.
The input class is compared against a standard 2-cocycle of known
invariant 1/f inside H2 of the module (valuation, residue unit), so the
answer is a multiple of 1/f; extensions with residue degree below 4 are
first pushed up by the unramified degree-4 extension, which needs no
new field arithmetic because the uniformiser stays a uniformiser.

When the residue characteristic divides the group order, residue units
no longer see enough of the unit filtration, so the comparison happens
over O_l / m^n for a finite precision n instead.  The unit group of
that ring is computed exactly (Teichmueller part plus one generator per
step of the unit filtration), and a guard detects when n is too small
for the standard class to keep its order; results are stable once two
consecutive precisions agree.
"""

import math
from collections import namedtuple
from fractions import Fraction

from sympy.ntheory import factorint, isprime

from .cohomology import (
    Cochain2,
    FiniteGroup,
    GModule,
    h2_class_compare,
    is_coboundary,
)
from .exactlinalg import FinAbGroup, IntMatrix, smith_normal_form


class InsufficientPrecision(ValueError):
    """The ring precision is too small to decide the invariant."""


def _is_power_of_two(n):
    return n >= 1 and n & (n - 1) == 0


def _pow_fn(one, mul, base, k):
    if k < 0:
        raise ValueError("negative power needs an explicit inverse")
    out = one
    b = base
    while k:
        if k & 1:
            out = mul(out, b)
        b = mul(b, b)
        k >>= 1
    return out


def bsgs_dlog(one, mul, base, target, order):
    """Discrete logarithm by baby-step giant-step in a cyclic group.

    base must have the given order; elements must be hashable.  Raises
    ValueError when the target lies outside the span of the base.
    """
    m = math.isqrt(order - 1) + 1 if order > 1 else 1
    baby = {}
    cur = one
    for j in range(m):
        baby.setdefault(cur, j)
        cur = mul(cur, base)
    step = _pow_fn(one, mul, base, (order - m % order) % order)
    g = target
    for i in range(m + 1):
        if g in baby:
            return (i * m + baby[g]) % order
        g = mul(g, step)
    raise ValueError("discrete log: target is not a power of the base")


class LocalExtensionData:
    """Combinatorial residue data of a Galois extension of local fields.

    group is the Galois group as a multiplication table; inertia lists
    the element indices of the inertia subgroup; frobenius is an element
    whose coset generates the residue extension; q_base is the residue
    field size of the ground field; ex maps every element to the power
    of frobenius its coset equals; dlog_pi holds, per group generator
    g, the residue discrete log of g(pi_l)/pi_l; dlog_base is the one
    of pi / pi_l^e.  Both logs live in Z/(q - 1) with q = q_base^f.
    """

    __slots__ = ("group", "inertia", "frobenius", "q_base", "f", "e",
                 "ex", "dlog_pi", "dlog_base")

    def __init__(self, group, inertia, frobenius, q_base, ex,
                 dlog_pi, dlog_base):
        n = group.order
        inertia = tuple(sorted(set(int(i) for i in inertia)))
        if not inertia or inertia[0] != 0:
            raise ValueError("inertia must contain the identity")
        iner = set(inertia)
        for a in inertia:
            for b in inertia:
                if group.mul(a, b) not in iner:
                    raise ValueError("inertia is not closed under product")
        for g in range(n):
            gi = group.inv(g)
            for h in inertia:
                if group.mul(group.mul(g, h), gi) not in iner:
                    raise ValueError("inertia is not a normal subgroup")
        e = len(inertia)
        if n % e:
            raise ValueError("inertia order does not divide the group order")
        f = n // e
        ex = tuple(int(x) for x in ex)
        if len(ex) != n:
            raise ValueError("ex needs one value per group element")
        if any(not 0 <= x < f for x in ex):
            raise ValueError("ex values must lie in 0..f-1")
        if ex[frobenius] != 1 % f:
            raise ValueError("ex(frobenius) must be 1")
        # ex must read off the frobenius coset: Frob^{ex(g)} = g mod E
        pw = 0
        for g in range(n):
            k = ex[g]
            pw = 0
            for _ in range(k):
                pw = group.mul(pw, frobenius)
            if group.mul(group.inv(pw), g) not in iner:
                raise ValueError("ex(%d) does not match the frobenius coset"
                                 % g)
        q_base = int(q_base)
        if q_base < 2:
            raise ValueError("residue field size must be at least 2")
        q = q_base ** f
        if len(dlog_pi) != len(group.generators):
            raise ValueError("dlog_pi needs one value per group generator")
        self.group = group
        self.inertia = inertia
        self.frobenius = int(frobenius)
        self.q_base = q_base
        self.f = f
        self.e = e
        self.ex = ex
        self.dlog_pi = tuple(int(d) % (q - 1) if q > 2 else 0
                             for d in dlog_pi)
        self.dlog_base = int(dlog_base) % (q - 1) if q > 2 else 0

    @classmethod
    def from_components(cls, group, inertia, frobenius, q_base,
                        dlog_pi, dlog_base):
        """Build the datum computing ex from inertia cosets."""
        n = group.order
        iner = set(int(i) for i in inertia)
        e = len(iner)
        if n % e:
            raise ValueError("inertia order does not divide the group order")
        f = n // e
        ex = [None] * n
        pw = 0
        for k in range(f):
            for h in iner:
                g = group.mul(pw, h)
                if ex[g] is not None and ex[g] != k:
                    raise ValueError("frobenius cosets are inconsistent")
                ex[g] = k
            pw = group.mul(pw, frobenius)
        if any(x is None for x in ex):
            raise ValueError(
                "frobenius does not generate the residue extension")
        return cls(group, inertia, frobenius, q_base, ex,
                   dlog_pi, dlog_base)

    @property
    def q(self):
        return self.q_base ** self.f

    def document(self, ring=None):
        """Serializable description (same family as the divisor-cochain
        documents: explicit order, generators and a sparse value map).
        A ring argument embeds the wild-path ring presentation."""
        g = self.group
        doc = {
            "kind": "local-extension",
            "order": g.order,
            "table": [list(row) for row in g.table],
            "generators": list(g.generators),
            "inertia": list(self.inertia),
            "frobenius": self.frobenius,
            "q_base": self.q_base,
            "ex": list(self.ex),
            "dlog_pi": list(self.dlog_pi),
            "dlog_base": self.dlog_base,
        }
        if ring is not None:
            doc["ring"] = ring.document()
        return doc

    @classmethod
    def from_document(cls, doc):
        if doc.get("kind") != "local-extension":
            raise ValueError("not a local-extension document")
        n = int(doc["order"])
        group = FiniteGroup(list(range(n)), doc["table"], doc["generators"])
        return cls(group, doc["inertia"], doc["frobenius"], doc["q_base"],
                   doc["ex"], doc["dlog_pi"], doc["dlog_base"])


class LocalCocycle:
    """Valuation and unit data of a 2-cocycle with values in l*.

    Entries are stored sparsely per (s, t) pair of element indices; a
    missing pair means the trivial value.  Tame entries are pairs
    (valuation, unit dlog); wild entries are (valuation, unit lift)
    with the lift a pair (x-coefficients, pi-coefficients or None) of
    exact rationals, so the same cocycle can be re-read at any ring
    precision.
    """

    __slots__ = ("order", "entries")

    def __init__(self, order, entries):
        self.order = int(order)
        clean = {}
        for (s, t), entry in entries.items():
            s, t = int(s), int(t)
            if not (0 <= s < order and 0 <= t < order):
                raise ValueError("entry index out of range")
            v, unit = entry
            if s == 0 or t == 0:
                if v != 0 or (unit not in (0, None) and not _is_one(unit)):
                    raise ValueError("cocycle not normalized at the identity")
                continue
            clean[(s, t)] = (int(v), _clean_unit(unit))
        self.entries = clean

    @property
    def kind(self):
        for _, unit in self.entries.values():
            if isinstance(unit, int):
                return "tame"
            return "wild"
        return "tame"

    def entry(self, s, t):
        if s == 0 or t == 0:
            return (0, 0 if self.kind == "tame" else None)
        default = (0, 0 if self.kind == "tame" else None)
        return self.entries.get((s, t), default)

    def add(self, other):
        """Pointwise product of classes; tame entries only."""
        if self.kind != "tame" or other.kind != "tame":
            raise ValueError("addition is defined for tame entries only")
        if self.order != other.order:
            raise ValueError("orders differ")
        out = {}
        for key in set(self.entries) | set(other.entries):
            v1, d1 = self.entries.get(key, (0, 0))
            v2, d2 = other.entries.get(key, (0, 0))
            out[key] = (v1 + v2, d1 + d2)
        return LocalCocycle(self.order, out)

    def document(self):
        values = {}
        for (s, t), (v, unit) in sorted(self.entries.items()):
            if isinstance(unit, int):
                if (v, unit) == (0, 0):
                    continue
                values["%d,%d" % (s, t)] = [v, unit]
            else:
                a, b = unit if unit is not None else ((1,), None)
                values["%d,%d" % (s, t)] = [
                    v,
                    [_frac_str(x) for x in a],
                    None if b is None else [_frac_str(x) for x in b],
                ]
        return {"kind": "local-cocycle", "order": self.order,
                "values": values}

    @classmethod
    def from_document(cls, doc):
        if doc.get("kind") != "local-cocycle":
            raise ValueError("not a local-cocycle document")
        entries = {}
        for key, val in doc.get("values", {}).items():
            s, t = (int(x) for x in key.split(","))
            if len(val) == 2:
                entries[(s, t)] = (int(val[0]), int(val[1]))
            else:
                v, a, b = val
                entries[(s, t)] = (int(v), (
                    tuple(_parse_frac(x) for x in a),
                    None if b is None else tuple(_parse_frac(x) for x in b),
                ))
        return cls(doc["order"], entries)


def _is_one(unit):
    if not isinstance(unit, tuple) or len(unit) != 2:
        return False
    a, b = unit
    if any(Fraction(x) != (1 if i == 0 else 0) for i, x in enumerate(a)):
        return False
    return b is None or all(Fraction(x) == 0 for x in b)


def _clean_unit(unit):
    if unit is None or isinstance(unit, int):
        return unit
    a, b = unit
    a = tuple(Fraction(x) for x in a)
    b = None if b is None else tuple(Fraction(x) for x in b)
    return (a, b)


def _frac_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else str(x)


def _parse_frac(s):
    if isinstance(s, str) and "/" in s:
        num, den = s.split("/")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def tame_module(data):
    """The module (valuation, residue unit dlog) as a G-module.

    The base is Z + Z/(q-1); generator g acts by fixing the valuation,
    multiplying the unit by (g(pi_l)/pi_l)^valuation and raising it to
    the residue power q_base^{ex(g)}.
    """
    q = data.q
    base = FinAbGroup(1, (q - 1,))
    mats = []
    for k, g in enumerate(data.group.generators):
        mats.append(IntMatrix([
            [1, 0],
            [data.dlog_pi[k], pow(data.q_base, data.ex[g], q - 1)],
        ]))
    return GModule(data.group, base, mats)


def standard_cocycle(data, ring=None):
    """The standard 2-cocycle of invariant 1/f, in LocalCocycle form.

    The value at (s, t) is the base uniformiser pi = pi_l^e * (pi/pi_l^e)
    whenever the residue degrees of s and t wrap past f, else 1.  With
    a ring the unit part is an exact lift instead of a dlog.
    """
    if ring is None:
        carry = (data.e, data.dlog_base)
    else:
        v, lift = ring.split_lift((ring.p,), None)
        if v != data.e:
            raise ValueError(
                "ring ramification does not match the extension data")
        carry = (data.e, lift)
    n = data.group.order
    entries = {}
    for s in range(1, n):
        for t in range(1, n):
            if data.ex[s] + data.ex[t] >= data.f:
                entries[(s, t)] = carry
    return LocalCocycle(n, entries)


def _tame_cochain(module, data, c):
    q = data.q
    n = data.group.order
    values = []
    for s in range(n):
        row = []
        for t in range(n):
            v, d = c.entry(s, t)
            if not isinstance(d, int):
                raise ValueError("tame entries need integer unit dlogs")
            row.append((v, d % (q - 1)))
        values.append(row)
    return Cochain2(module, values)


def _scaled(module, c2, k):
    zero = Cochain2(
        module,
        [[module.base.zero()] * module.group.order
         for _ in range(module.group.order)],
    )
    return zero.sub_scaled(c2, -k)


def invariant_tame(data, c):
    """The invariant in (1/f)Z/Z of a tame 2-cocycle class.

    Preconditions: the group order is a power of 2, the residue field
    is odd, f >= 4 (apply extend_unramified_4 first otherwise), and the
    class is annihilated by 4.
    """
    if not _is_power_of_two(data.group.order):
        raise ValueError("group order must be a power of 2")
    if data.q % 2 == 0:
        raise ValueError("tame machine needs odd residue characteristic")
    if data.f < 4:
        raise ValueError(
            "residue degree %d is below 4; apply extend_unramified_4 first"
            % data.f)
    module = tame_module(data)
    phi = _tame_cochain(module, data, c)
    defect = phi.cocycle_defect()
    if defect is not None:
        raise ValueError(
            "input is not a 2-cocycle (identity fails at %r)" % (defect,))
    st = _tame_cochain(module, data, standard_cocycle(data))
    if st.cocycle_defect() is not None:
        raise ValueError(
            "extension data is inconsistent: the standard cocycle fails "
            "the 2-cocycle identity")
    m = h2_class_compare(module, phi, st)
    if m is None:
        # diagnose: a multiple of st always compares, so either the
        # 4-torsion precondition fails or the data does not describe
        # the extension the cocycle came from
        if not is_coboundary(_scaled(module, phi, 4)):
            raise ValueError("class is not annihilated by 4")
        raise ValueError(
            "no multiplier relates the class to the standard cocycle; "
            "a precondition is violated")
    return Fraction(m % data.f, data.f)


def extend_unramified_4(data, c):
    """Push an f in {1, 2} datum up the unramified degree-4 extension.

    Returns (data', c') with f' = 4 and the same invariant; f >= 4
    inputs are returned unchanged.  The group becomes G x Z/4 for f = 1
    and the kernel of (g, j) -> ex(g) - j mod 2 for f = 2; the cocycle
    is composed with the projection; residue dlogs are rescaled by
    (q' - 1)/(q - 1).
    """
    if data.f >= 4:
        return data, c
    g = data.group
    n = g.order
    if data.f == 1:
        members = [(i, j) for i in range(n) for j in range(4)]
    else:
        members = [(i, j) for i in range(n) for j in range(4)
                   if (data.ex[i] - j) % 2 == 0]

    def mul(a, b):
        return (g.mul(a[0], b[0]), (a[1] + b[1]) % 4)

    extra = (0, 1) if data.f == 1 else (0, 2)
    gen_labels = [(i, data.ex[i] % 2 if data.f == 2 else 0)
                  for i in g.generators]
    gen_labels.append(extra)
    group2 = FiniteGroup.from_mul(members, mul, gen_labels)
    inertia2 = [group2.index_of((i, 0)) for i in data.inertia]
    frobenius2 = group2.index_of((data.frobenius, 1 % 4))

    q, q2 = data.q, data.q_base ** 4
    scale = (q2 - 1) // (q - 1)
    dlog_pi2 = [scale * data.dlog_pi[k] for k in range(len(g.generators))]
    dlog_pi2.append(0)
    data2 = LocalExtensionData.from_components(
        group2, inertia2, frobenius2, data.q_base,
        dlog_pi2, scale * data.dlog_base)

    wild = c.kind == "wild"
    entries = {}
    for s2 in range(1, group2.order):
        for t2 in range(1, group2.order):
            s, t = group2.elements[s2][0], group2.elements[t2][0]
            v, unit = c.entry(s, t)
            if wild:
                if v == 0 and unit is None:
                    continue
                entries[(s2, t2)] = (v, unit)
            elif (v, unit) != (0, 0):
                entries[(s2, t2)] = (v, scale * unit)
    return data2, LocalCocycle(group2.order, entries)


def cocycle_from_cyclic_algebra(data, value, generator=None):
    """The 2-cocycle of the cyclic algebra with the given value.

    The group must be cyclic over the chosen generator (default the
    frobenius); the cocycle is value at (sigma^i, sigma^j) when
    i + j >= |G| and trivial otherwise.  value is a (valuation, unit)
    entry in the same shape LocalCocycle stores.
    """
    g = data.group
    if generator is None:
        generator = data.frobenius
    pos = {0: 0}
    cur = 0
    for i in range(1, g.order):
        cur = g.mul(cur, generator)
        if cur in pos:
            break
        pos[cur] = i
    if len(pos) != g.order:
        raise ValueError("group is not cyclic over the chosen generator")
    n = g.order
    entries = {}
    for s, i in pos.items():
        for t, j in pos.items():
            if i + j >= n and s and t:
                entries[(s, t)] = value
    return LocalCocycle(n, entries)


# ---------------------------------------------------------------------------
# finite quotients of rings of integers, for residue characteristic
# dividing the group order

_UNRAMIFIED_POLYS = {1: (1,), 2: (1, 1), 4: (1, 1, 0, 0)}
# x^f = -(low part): f = 2 means x^2 = -1 - x, f = 4 means x^4 = -1 - x
_SIZE_BOUND = 2 ** 24


class LocalRing:
    """O_l / m^precision for a local field with small residue data.

    The unramified part is Z_p[x]/(h) with h a fixed lift of an
    irreducible polynomial (tabulated for residue characteristic 2 up
    to degree 4; degree 1 works for every p).  An optional Eisenstein
    step pi^2 = B pi + C (p | B, v_p(C) = 1) gives ramification index
    2.  Elements are coefficient tuples; exact rational lifts can be
    split into valuation and unit exactly, so precision changes are
    loss-free.  actions optionally records, per group generator, a pair
    (frobenius power, conjugate pi) defining its ring automorphism.
    """

    def __init__(self, p, f, precision, eisenstein=None, actions=None):
        if not isprime(p):
            raise ValueError("residue characteristic must be prime")
        if f not in _UNRAMIFIED_POLYS:
            raise ValueError("unramified degree %r is not tabulated" % (f,))
        if f > 1 and p != 2:
            raise ValueError(
                "unramified degrees above 1 are tabulated for residue "
                "characteristic 2 only")
        self.p = int(p)
        self.f = int(f)
        self.precision = int(precision)
        if self.precision < 1:
            raise ValueError("precision must be at least 1")
        if eisenstein is not None:
            b, cc = (int(x) for x in eisenstein)
            if b % p:
                raise ValueError("Eisenstein middle coefficient "
                                 "must be divisible by p")
            if cc % p != 0 or (cc // p) % p == 0:
                raise ValueError("Eisenstein constant must have valuation 1")
            eisenstein = (b, cc)
        self.eisenstein = eisenstein
        self.e = 1 if eisenstein is None else 2
        self.q = self.p ** self.f
        if self.q ** self.precision > _SIZE_BOUND:
            raise ValueError("ring exceeds the 2^24 size bound")
        n = self.precision
        if self.e == 1:
            self._mod_a = self.p ** n
            self._mod_b = None
        else:
            self._mod_a = self.p ** ((n + 1) // 2)
            self._mod_b = self.p ** (n // 2)
        self.actions = None if actions is None else tuple(
            (int(k), bool(cj)) for k, cj in actions)
        self._red = _UNRAMIFIED_POLYS[self.f]
        self._teich = None
        self._roots = None

    def with_precision(self, n):
        return LocalRing(self.p, self.f, n, self.eisenstein, self.actions)

    def coefficient_moduli(self):
        """Moduli of the two coefficient vectors (second is None when
        unramified); the element count is the product of f powers."""
        return (self._mod_a, self._mod_b)

    # -- element plumbing ---------------------------------------------------

    def _coerce_poly(self, coeffs, mod):
        if mod == 1:
            return (0,) * self.f
        out = []
        for i in range(self.f):
            c = Fraction(coeffs[i]) if i < len(coeffs) else Fraction(0)
            if c.denominator % self.p == 0:
                raise ValueError("coefficient is not p-integral")
            out.append(c.numerator * pow(c.denominator, -1, mod) % mod)
        return tuple(out)

    def element(self, a_coeffs, b_coeffs=None):
        """Reduce exact coefficients to a ring element."""
        a = self._coerce_poly(a_coeffs, self._mod_a)
        if self.e == 1:
            if b_coeffs is not None and any(Fraction(x) for x in b_coeffs):
                raise ValueError("unramified ring has no pi coordinate")
            return (a, None)
        b = self._coerce_poly(b_coeffs or (), self._mod_b)
        return (a, b)

    def one(self):
        return self.element((1,))

    def zero(self):
        return self.element(())

    def from_int(self, c):
        return self.element((c,))

    def _pmul(self, x, y, mod):
        f = self.f
        if mod == 1:
            return (0,) * f
        if f == 1:
            return (x[0] * y[0] % mod,)
        prod = [0] * (2 * f - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] += xi * yj
        for k in range(2 * f - 2, f - 1, -1):
            ck = prod[k]
            if ck:
                prod[k] = 0
                for i, r in enumerate(self._red):
                    prod[k - f + i] -= ck * r
        return tuple(v % mod for v in prod[:f])

    def _padd(self, x, y, mod):
        return tuple((a + b) % mod for a, b in zip(x, y))

    def _pscale(self, c, x, mod):
        return tuple(c * a % mod for a in x)

    def add(self, u, v):
        a = self._padd(u[0], v[0], self._mod_a)
        if self.e == 1:
            return (a, None)
        return (a, self._padd(u[1], v[1], self._mod_b))

    def neg(self, u):
        a = self._pscale(-1, u[0], self._mod_a)
        if self.e == 1:
            return (a, None)
        return (a, self._pscale(-1, u[1], self._mod_b))

    def mul(self, u, v):
        if self.e == 1:
            return (self._pmul(u[0], v[0], self._mod_a), None)
        bb, cc = self.eisenstein
        ac = self._pmul(u[0], v[0], self._mod_a)
        bd = self._pmul(u[1], v[1], self._mod_a)
        a = self._padd(ac, self._pscale(cc, bd, self._mod_a), self._mod_a)
        cross = self._padd(
            self._pmul(u[0], v[1], self._mod_a),
            self._pmul(u[1], v[0], self._mod_a),
            self._mod_a,
        )
        b = self._padd(cross, self._pscale(bb, bd, self._mod_a), self._mod_a)
        return (a, tuple(x % self._mod_b for x in b))

    def pow(self, u, k):
        if k < 0:
            return self.pow(self.inv(u), -k)
        return _pow_fn(self.one(), self.mul, u, k)

    def unit_order(self):
        return (self.q - 1) * self.q ** (self.precision - 1)

    def inv(self, u):
        if not self.is_unit(u):
            raise ValueError("not a unit in the ring")
        return self.pow(u, self.unit_order() - 1)

    def eq(self, u, v):
        return u == v

    def residue(self, u):
        return tuple(c % self.p for c in u[0])

    def is_unit(self, u):
        return any(self.residue(u))

    def pi(self):
        if self.e == 1:
            return self.from_int(self.p)
        return (self.element(())[0], self._coerce_poly((1,), self._mod_b))

    # -- exact rational lifts ----------------------------------------------

    def split_exact(self, a_coeffs, b_coeffs=None):
        """Exact (valuation, unit element) of a rational lift.

        Arithmetic happens over the rationals, so no precision is lost
        before the final reduction; zero raises ValueError.
        """
        v, a, b = self._split_lift(a_coeffs, b_coeffs)
        return v, self.element(a, b)

    def split_lift(self, a_coeffs, b_coeffs=None):
        """Exact (valuation, unit lift) of a rational lift.

        The unit lift is a coefficient pair usable at any precision,
        the shape LocalCocycle stores for wild entries.
        """
        v, a, b = self._split_lift(a_coeffs, b_coeffs)
        return v, (tuple(a), None if b is None else tuple(b))

    def _split_lift(self, a_coeffs, b_coeffs):
        f = self.f
        a = [Fraction(a_coeffs[i]) if i < len(a_coeffs) else Fraction(0)
             for i in range(f)]
        b = None
        if self.e == 2:
            b = [Fraction(b_coeffs[i])
                 if b_coeffs is not None and i < len(b_coeffs)
                 else Fraction(0) for i in range(f)]
        elif b_coeffs is not None and any(Fraction(x) for x in b_coeffs):
            raise ValueError("unramified ring has no pi coordinate")

        def min_val(poly):
            vals = [_frac_val(c, self.p) for c in poly if c != 0]
            return min(vals) if vals else None

        mva = min_val(a)
        if self.e == 1:
            if mva is None:
                raise ValueError("zero has no valuation")
            scale = Fraction(self.p) ** mva
            return mva, [c / scale for c in a], None
        mvb = min_val(b)
        if mva is None and mvb is None:
            raise ValueError("zero has no valuation")
        v = min(2 * mva if mva is not None else 10 ** 9,
                2 * mvb + 1 if mvb is not None else 10 ** 9)
        bb, cc = self.eisenstein
        for _ in range(max(v, 0)):
            a, b = ([x - Fraction(bb, cc) * y for x, y in zip(b, a)],
                    [y / cc for y in a])
        for _ in range(max(-v, 0)):
            # multiply by pi: (a + b pi) pi = C b + (a + B b) pi
            a, b = ([cc * y for y in b],
                    [x + bb * y for x, y in zip(a, b)])
        return v, a, b

    # -- Frobenius and Galois action ----------------------------------------

    def _frobenius_roots(self):
        if self._roots is not None:
            return self._roots
        mod = self._mod_a
        f = self.f
        x = tuple(int(i == 1) for i in range(f))
        if f == 1:
            self._roots = [x]
            return self._roots
        h_coeffs = tuple(self._red) + (1,)
        hp_coeffs = tuple(i * h_coeffs[i] for i in range(1, f + 1))
        # Hensel-lift the root of h congruent to x^p
        r = _pow_fn(tuple(int(i == 0) for i in range(f)),
                    lambda u, v: self._pmul(u, v, mod), x, self.p)
        for _ in range(max(mod.bit_length(), 4)):
            hr = self._apoly_eval(h_coeffs, r, mod)
            if not any(hr):
                break
            hpr = self._apoly_eval(hp_coeffs, r, mod)
            inv = self._poly_inverse(hpr, mod)
            r = tuple((a - b) % mod for a, b in
                      zip(r, self._pmul(hr, inv, mod)))
        assert not any(self._apoly_eval(h_coeffs, r, mod)), \
            "Frobenius root did not lift"
        roots = [x, r]
        while len(roots) < f:
            prev = roots[-1]
            roots.append(self._apoly_eval(prev, r, mod))
        self._roots = roots
        return roots

    def _poly_inverse(self, u, mod):
        # Newton lift of the residue-field inverse
        c = tuple(x % self.p for x in u)
        inv = self._ffield_inv(c)
        k = self.p
        while k < mod:
            k = min(k * k, mod)
            prod = self._pmul(u, inv, k)
            two_minus = tuple((int(i == 0) * 2 - prod[i]) % k
                              for i in range(self.f))
            inv = self._pmul(inv, two_minus, k)
        return tuple(x % mod for x in inv)

    def _ffield_inv(self, c):
        return _pow_fn(
            tuple(int(i == 0) for i in range(self.f)),
            lambda x, y: self._pmul(x, y, self.p),
            c, self.q - 2,
        ) if self.q > 2 else c

    def frobenius(self, u, k=1):
        k %= self.f
        if k == 0:
            return u
        root = self._frobenius_roots()[k]
        a = self._apoly_eval(u[0], root, self._mod_a)
        if self.e == 1:
            return (a, None)
        b = self._apoly_eval(u[1], root, self._mod_a)
        return (a, tuple(x % self._mod_b for x in b))

    def _apoly_eval(self, coeffs, at, mod):
        out = (0,) * self.f
        for c in reversed(coeffs):
            out = self._pmul(out, at, mod)
            out = tuple((a + (c if i == 0 else 0)) % mod
                        for i, a in enumerate(out))
        return out

    def action(self, spec, u):
        """Apply the automorphism (frobenius power, conjugate pi)."""
        k, conj = spec
        out = self.frobenius(u, k)
        if not conj:
            return out
        if self.e == 1:
            raise ValueError("unramified ring has no pi conjugation")
        bb, _ = self.eisenstein
        a, b = out
        a = self._padd(a, self._pscale(bb, b, self._mod_a), self._mod_a)
        return (a, self._pscale(-1, b, self._mod_b))

    def pi_ratio(self, spec):
        """The unit sigma(pi)/pi for the automorphism spec."""
        if not spec[1]:
            return self.one()
        bb, _ = self.eisenstein
        v, unit = self.split_exact((bb,), (-1,))
        assert v == 1, "conjugate of pi lost its valuation"
        return unit

    def document(self):
        return {
            "p": self.p, "f": self.f, "precision": self.precision,
            "eisenstein": list(self.eisenstein) if self.eisenstein else None,
            "actions": [list(a) for a in self.actions]
            if self.actions else None,
        }

    @classmethod
    def from_document(cls, doc):
        return cls(doc["p"], doc["f"], doc["precision"],
                   doc.get("eisenstein"),
                   doc.get("actions"))


def _frac_val(x, p):
    x = Fraction(x)
    v = 0
    n = x.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = x.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


class UnitGroup:
    """(O_l/m^n)* in invariant-factor form with a dlog map.

    pr sends a unit to its coordinate vector over .group and raises
    ValueError on non-units; generator_lifts holds one ring element per
    invariant factor.
    """

    def __init__(self, ring):
        self.ring = ring
        q, p, n, f = ring.q, ring.p, ring.precision, ring.f
        gens = []
        self._teich_pows = None
        if q > 2:
            t = self._teichmuller()
            gens.append(t)
            pows = {}
            cur = ring.one()
            for i in range(q - 1):
                pows[ring.residue(cur)] = i
                cur = ring.mul(cur, t)
            self._teich_pows = pows
            self._teich_inv = ring.pow(t, q - 2)
        self._layer_index = {}
        for j in range(1, n):
            for k in range(f):
                self._layer_index[(j, k)] = len(gens)
                gens.append(self._layer_gen(j, k))
        self._gens = gens
        self._gen_invs = [ring.pow(g, ring.unit_order() - 1) for g in gens]
        kk = len(gens)
        if kk == 0:
            self.group = FinAbGroup(0, ())
            self._umat = None
            self._keep = []
            self.generator_lifts = []
            return
        cols = []
        if q > 2:
            col = [0] * kk
            col[0] = q - 1
            cols.append(col)
        for (j, k), idx in sorted(self._layer_index.items(),
                                  key=lambda kv: kv[1]):
            d = self._raw_pr(ring.pow(gens[idx], p))
            col = [-x for x in d]
            col[idx] += p
            cols.append(col)
        rel = IntMatrix.from_columns(cols, rows=kk)
        s, u, _ = smith_normal_form(rel)
        diag = [s[i, i] for i in range(kk)]
        total = 1
        for d in diag:
            total *= abs(d)
        assert total == ring.unit_order(), \
            "unit relation lattice has the wrong index"
        self._umat = u
        self._keep = [i for i in range(kk) if abs(diag[i]) > 1]
        self._moduli = [abs(diag[i]) for i in self._keep]
        self.group = FinAbGroup(0, tuple(self._moduli))
        uinv = u.inverse_unimodular()
        lifts = []
        for i in self._keep:
            acc = ring.one()
            for r in range(kk):
                k = uinv[r, i]
                if k:
                    base = gens[r] if k > 0 else self._gen_invs[r]
                    acc = ring.mul(acc, ring.pow(base, abs(k)))
            lifts.append(acc)
        self.generator_lifts = lifts

    def _teichmuller(self):
        ring = self.ring
        q = ring.q
        fac = factorint(q - 1)
        best = None
        for code in range(1, q):
            coeffs = []
            c = code
            for _ in range(ring.f):
                coeffs.append(c % ring.p)
                c //= ring.p
            cand = tuple(coeffs)
            ok = True
            for ell in fac:
                power = _pow_fn(
                    tuple(int(i == 0) for i in range(ring.f)),
                    lambda x, y: ring._pmul(x, y, ring.p),
                    cand, (q - 1) // ell)
                if power == tuple(int(i == 0) for i in range(ring.f)):
                    ok = False
                    break
            if ok:
                best = cand
                break
        assert best is not None, "no primitive residue element found"
        t = ring.element(best)
        for _ in range(64):
            nxt = ring.pow(t, q)
            if nxt == t:
                return t
            t = nxt
        raise AssertionError("Teichmueller lift did not converge")

    def _layer_gen(self, j, k):
        ring = self.ring
        xk = ring.element(tuple(int(i == k) for i in range(ring.f)))
        out = ring.one()
        pij = _pow_fn(ring.one(), ring.mul, ring.pi(), j)
        return ring.add(out, ring.mul(pij, xk))

    def _div_pi_int(self, u):
        """Divide a multiple of pi by pi, with integer arithmetic.

        The quotient is exact modulo one layer less of precision; only
        its residue is consumed, one filtration layer at a time.
        """
        ring = self.ring
        p = ring.p
        if any(c % p for c in u[0]):
            raise AssertionError("element is not divisible by pi")
        if ring.e == 1:
            return (tuple((c // p) % ring._mod_a for c in u[0]), None)
        # (a + b pi)/pi = (b - (B/C) a) + (a/C) pi with a = p a'
        bb, cc = ring.eisenstein
        cu_inv = pow(cc // p, -1, ring._mod_a)
        a, b = u
        ap = tuple(c // p for c in a)
        new_a = tuple((x - y * bb * cu_inv) % ring._mod_a
                      for x, y in zip(b, ap))
        new_b = tuple((y * cu_inv) % ring._mod_b if ring._mod_b > 1 else 0
                      for y in ap)
        return (new_a, new_b)

    def _raw_pr(self, u):
        ring = self.ring
        if not ring.is_unit(u):
            raise ValueError("pr is only defined on units")
        vec = [0] * len(self._gens)
        if self._teich_pows is not None:
            i = self._teich_pows[ring.residue(u)]
            vec[0] = i
            if i:
                u = ring.mul(u, ring.pow(self._teich_inv, i))
        one = ring.one()
        for j in range(1, ring.precision):
            if u == one:
                break
            w = ring.add(u, ring.neg(one))
            for _ in range(j):
                w = self._div_pi_int(w)
            res = ring.residue(w)
            for k, c in enumerate(res):
                if c:
                    idx = self._layer_index[(j, k)]
                    vec[idx] = c
                    u = ring.mul(u, ring.pow(self._gen_invs[idx], c))
        assert u == one, "unit dlog peeling did not terminate"
        return vec

    def pr(self, u):
        """Coordinates of a unit over .group; ValueError on non-units."""
        if not self._keep:
            if not self.ring.is_unit(u):
                raise ValueError("pr is only defined on units")
            return ()
        raw = self._raw_pr(u)
        vec = self._umat.apply(raw)
        return tuple(vec[i] % m for i, m in zip(self._keep, self._moduli))


def unit_group_local_ring(ring):
    """The unit group of O_l/m^n with its partial dlog map.

    Returns a UnitGroup whose .group is the invariant-factor form, with
    .pr defined exactly on units and .generator_lifts giving one ring
    element per factor.  The ring size bound (2^24) is enforced by the
    LocalRing constructor.
    """
    return UnitGroup(ring)


WildInvariant = namedtuple("WildInvariant", ["value", "n"])


def invariant_wild(data, ring, c, n=None, auto_retry=True, max_n=9):
    """Invariant of a 2-cocycle class at residue characteristic p | |G|.

    The comparison module is (valuation, unit of O_l/m^n); the guard of
    the finite-precision method (the standard class must not collapse
    to 2-torsion) raises InsufficientPrecision, and with auto_retry the
    computation re-runs at n+1 up to max_n, returning a WildInvariant
    with the n actually used.
    """
    if not _is_power_of_two(data.group.order):
        raise ValueError("group order must be a power of 2")
    if data.f < 4:
        raise ValueError(
            "residue degree %d is below 4; extend the datum first" % data.f)
    if data.q != ring.q:
        raise ValueError("ring residue field does not match the data")
    if ring.e != data.e:
        raise ValueError("ring ramification does not match the data")
    if ring.actions is None or \
            len(ring.actions) != len(data.group.generators):
        raise ValueError("ring needs one automorphism per group generator")
    if n is None:
        n = ring.precision
    cap = max_n
    while ring.q ** cap > _SIZE_BOUND:
        cap -= 1
    while True:
        try:
            value = _invariant_wild_once(data, ring.with_precision(n), c)
            return WildInvariant(value, n)
        except InsufficientPrecision:
            if not auto_retry or n >= cap:
                raise
            n += 1


def _invariant_wild_once(data, ring, c):
    units = unit_group_local_ring(ring)
    base = FinAbGroup(1, units.group.torsion)
    nb = base.ngens
    mats = []
    for k in range(len(data.group.generators)):
        spec = ring.actions[k]
        first = (1,) + units.pr(ring.pi_ratio(spec))
        cols = [first]
        for lift in units.generator_lifts:
            cols.append((0,) + units.pr(ring.action(spec, lift)))
        mats.append(IntMatrix.from_columns(cols, rows=nb))
    module = GModule(data.group, base, mats)

    def to_vec(v, unit_lift):
        if not unit_lift:
            u = ring.one()
        elif isinstance(unit_lift, int):
            raise ValueError("wild entries need unit lifts, not dlogs")
        else:
            u = ring.element(unit_lift[0], unit_lift[1])
        if not ring.is_unit(u):
            raise ValueError("unit part of a cocycle value is not a unit")
        return (v,) + units.pr(u)

    ng = data.group.order
    st_c = standard_cocycle(data, ring)
    st = Cochain2(module, [[to_vec(*st_c.entry(s, t)) for t in range(ng)]
                           for s in range(ng)])
    if st.cocycle_defect() is not None:
        raise ValueError(
            "extension data is inconsistent: the standard cocycle fails "
            "the 2-cocycle identity")
    phi = Cochain2(module, [[to_vec(*c.entry(s, t)) for t in range(ng)]
                            for s in range(ng)])
    defect = phi.cocycle_defect()
    if defect is not None:
        raise ValueError(
            "input is not a 2-cocycle (identity fails at %r)" % (defect,))
    if is_coboundary(_scaled(module, st, 2)):
        raise InsufficientPrecision(
            "a larger value of n has to be chosen: the standard class "
            "degenerates at n=%d" % ring.precision)
    m = h2_class_compare(module, phi, st)
    if m is None:
        if not is_coboundary(_scaled(module, phi, 4)):
            raise InsufficientPrecision(
                "class is not 4-torsion at n=%d; increase n or check the "
                "preconditions" % ring.precision)
        raise InsufficientPrecision(
            "no multiplier relates the class to the standard cocycle at "
            "n=%d; increase n or check the preconditions" % ring.precision)
    return Fraction(m % data.f, data.f)


# ---------------------------------------------------------------------------
# synthetic data constructors (bridge fixtures)

def unramified_data(q_base, f, twist=0):
    """Residue data of the unramified degree-f extension.

    The group is Z/f generated by the Frobenius; twist replaces the
    uniformiser pi by u^twist pi, which moves the dlogs but must not
    move any invariant.
    """
    group = FiniteGroup.from_mul(
        list(range(f)), lambda a, b: (a + b) % f, [1] if f > 1 else [])
    q = q_base ** f
    dlog_pi = [twist * (q_base - 1) % (q - 1)] if f > 1 else []
    return LocalExtensionData.from_components(
        group, [0], 1 % f, q_base, dlog_pi, -twist % (q - 1))


def tame_ramified_data(q_base, e, f, root_index=1, twist=0):
    """Residue data of a tame abelian extension with ramification e.

    Needs e | q_base - 1 (the e-th roots of unity must already live in
    the ground field).  The group is Z/f x Z/e with the Frobenius
    generating the first factor; the inertia generator multiplies the
    uniformiser by a primitive e-th root of unity (its dlog is
    root_index * (q-1)/e).
    """
    if (q_base - 1) % e:
        raise ValueError("tame abelian fixture needs e | q_base - 1")
    elems = [(i, j) for i in range(f) for j in range(e)]
    group = FiniteGroup.from_mul(
        elems, lambda a, b: ((a[0] + b[0]) % f, (a[1] + b[1]) % e),
        ([(1, 0)] if f > 1 else []) + ([(0, 1)] if e > 1 else []))
    q = q_base ** f
    inertia = [group.index_of((0, j)) for j in range(e)]
    dlog_pi = []
    if f > 1:
        dlog_pi.append(twist * (q_base - 1) % (q - 1))
    if e > 1:
        if math.gcd(root_index, e) != 1:
            raise ValueError("root_index must be prime to e")
        dlog_pi.append(root_index * (q - 1) // e % (q - 1))
    return LocalExtensionData.from_components(
        group, inertia, group.index_of((1 % f, 0)), q_base,
        dlog_pi, -e * twist % (q - 1))


def _fp2_primitive(p, nonsquare):
    """Smallest primitive element of F_p[s]/(s^2 - nonsquare)."""
    one = (1, 0)
    q = p * p

    def mul(x, y):
        return ((x[0] * y[0] + nonsquare * x[1] * y[1]) % p,
                (x[0] * y[1] + x[1] * y[0]) % p)

    fac = factorint(q - 1)
    for code in range(2, q):
        cand = (code % p, code // p)
        if all(_pow_fn(one, mul, cand, (q - 1) // ell) != one for ell in fac):
            return cand, mul
    raise AssertionError("no primitive element found")


def _fp_primitive(p):
    fac = factorint(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // ell, p) != 1 for ell in fac):
            return g
    raise AssertionError("no primitive root found")


def quadratic_symbol_data(a, b, p):
    """Residue data and cyclic-algebra cocycle matching (a, b)_p, p odd.

    The extension is Q_p(sqrt b); the cocycle is the one of the cyclic
    algebra with value a, so its invariant is 0 exactly when the
    Hilbert symbol is +1.  Returns (data, cocycle); feed them through
    extend_unramified_4 and invariant_tame.
    """
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("symbol needs nonzero arguments")
    alpha, ua = _split_unit_frac(a, p)
    beta, ub = _split_unit_frac(b, p)
    ua_res = ua.numerator * pow(ua.denominator, -1, p) % p
    ub_res = ub.numerator * pow(ub.denominator, -1, p) % p
    if beta % 2 == 0 and pow(ub_res, (p - 1) // 2, p) == 1:
        # split algebra: sqrt(b) is already in the field
        group = FiniteGroup.from_mul([0], lambda x, y: 0, [])
        data = LocalExtensionData.from_components(group, [0], 0, p, [], 0)
        return data, LocalCocycle(1, {})
    if beta % 2 == 0:
        data = unramified_data(p, 2)
        gen, mul = _fp2_primitive(p, ub_res)
        d = bsgs_dlog((1, 0), mul, gen, (ua_res, 0), p * p - 1)
        return data, cocycle_from_cyclic_algebra(data, (alpha, d))
    # ramified: pi_l^2 = p * ub, totally ramified quadratic
    group = FiniteGroup.from_mul([0, 1], lambda x, y: (x + y) % 2, [1])
    g0 = _fp_primitive(p)
    dlog_ub = bsgs_dlog(1, lambda x, y: x * y % p, g0, ub_res, p - 1)
    data = LocalExtensionData.from_components(
        group, [0, 1], 0, p, [(p - 1) // 2], -dlog_ub % (p - 1))
    dlog_ua = bsgs_dlog(1, lambda x, y: x * y % p, g0, ua_res, p - 1)
    value = (2 * alpha, (dlog_ua - alpha * dlog_ub) % (p - 1))
    return data, cocycle_from_cyclic_algebra(data, value, generator=1)


def quadratic_algebra_invariant(a, b, p):
    """Invariant of the quadratic cyclic algebra (a, b) over Q_p, p odd."""
    data, c = quadratic_symbol_data(a, b, p)
    if data.group.order == 1:
        return Fraction(0)
    return invariant_tame(*extend_unramified_4(data, c))


def two_adic_symbol_setup(a, b, precision=4):
    """Data, ring and cocycle for the quadratic algebra (a, b) over Q_2.

    The extension Q_2(sqrt b) is extended by the unramified degree-4
    field; the ring presents its integers at the given precision with
    the Galois action attached.  Returns (data, ring, cocycle), ready
    for invariant_wild.
    """
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("symbol needs nonzero arguments")
    beta, ubf = _split_unit_frac(b, 2)
    u8 = ubf.numerator * pow(ubf.denominator, -1, 8) % 8
    alpha, uaf = _split_unit_frac(a, 2)
    if beta % 2 == 0 and u8 == 1:
        d = None  # split: sqrt(b) in Q_2
    elif beta % 2 == 0 and u8 == 5:
        d = 5     # the unramified quadratic extension
    elif beta % 2 == 0:
        d = u8 if u8 % 4 == 3 else u8 - 8   # odd-unit class, ramified
    else:
        d = 2 * u8 if u8 < 4 else 2 * (u8 - 8)  # even class, ramified
    if d is None:
        group = FiniteGroup.from_mul([0], lambda x, y: 0, [])
        data0 = LocalExtensionData.from_components(group, [0], 0, 2, [], 0)
        c0 = LocalCocycle(1, {})
        data, c = extend_unramified_4(data0, c0)
        ring = LocalRing(2, 4, precision, None, actions=[(1, False)])
        return data, ring, c
    if d == 5:
        data0 = unramified_data(2, 2)
        c0 = cocycle_from_cyclic_algebra(data0, (alpha, ((uaf,), None)))
        data, c = extend_unramified_4(data0, c0)
        ring = LocalRing(2, 4, precision, None,
                         actions=[(1, False), (2, False)])
        return data, ring, c
    group = FiniteGroup.from_mul([0, 1], lambda x, y: (x + y) % 2, [1])
    data0 = LocalExtensionData.from_components(group, [0, 1], 0, 2, [0], 0)
    eis = (2, d - 1) if d % 4 == 3 else (0, d)
    ring = LocalRing(2, 4, precision, eis,
                     actions=[(0, True), (1, False)])
    v, lift = ring.split_lift((a,), None)
    c0 = cocycle_from_cyclic_algebra(data0, (v, lift), generator=1)
    data, c = extend_unramified_4(data0, c0)
    return data, ring, c


def _split_unit_frac(x, p):
    v = _frac_val(x, p)
    return v, x / Fraction(p) ** v


def extension_from_document(doc):
    """Parse a local-extension document into (data, ring or None)."""
    data = LocalExtensionData.from_document(doc)
    ring = None
    if doc.get("ring") is not None:
        ring = LocalRing.from_document(doc["ring"])
    return data, ring
