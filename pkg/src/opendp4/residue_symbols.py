"""Closed-form local symbols over the rationals and over Q(sqrt 5).

Quadratic Hilbert symbols at every place of Q, Hilbert symbols at every
place of the real quadratic field of discriminant 5, and the cyclotomic
Artin maps of prime conductor.  Odd residue characteristic goes through
the tame formulas in the residue field; the places above 2 are decided
by a bounded search for a primitive zero of z^2 - a x^2 - b y^2, whose
sufficient precision (2^5 for coefficient valuations at most 1) comes
from the quadratic Hensel bound.  Real places test signs exactly.

Elements of Q(sqrt 5) are (rational, rational) pairs over the basis
(1, sqrt 5).  At the inert place above 2 the integers are Z2[phi] with
phi the golden ratio, so pairs are rebased to (1, phi) there.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np
from sympy.ntheory import factorint, isprime, sqrt_mod


class PlaceQ:
    """A place of the rationals: a finite prime or the real place."""

    __slots__ = ("p",)

    def __init__(self, p):
        if p is not None:
            p = int(p)
            if not isprime(p):
                raise ValueError("not a prime: %r" % (p,))
        self.p = p

    @classmethod
    def real(cls):
        return cls(None)

    @classmethod
    def finite(cls, p):
        return cls(p)

    @classmethod
    def of(cls, v):
        """Coerce an int, the string "real" or a PlaceQ to a PlaceQ."""
        if isinstance(v, PlaceQ):
            return v
        if v == "real" or v is None:
            return cls(None)
        return cls(v)

    @property
    def is_real(self):
        return self.p is None

    def __eq__(self, other):
        return isinstance(other, PlaceQ) and self.p == other.p

    def __hash__(self):
        return hash(("PlaceQ", self.p))

    def __repr__(self):
        return "PlaceQ.real()" if self.is_real else "PlaceQ.finite(%d)" % self.p


def _vp(x, p):
    """Valuation of a nonzero Fraction at p."""
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


def _split_unit(x, p):
    """x = p^v * u with u a p-unit; returns (v, u)."""
    v = _vp(x, p)
    return v, x / Fraction(p) ** v


def _mod_frac(x, m):
    """A fraction with denominator prime to m, reduced modulo m."""
    return x.numerator * pow(x.denominator, -1, m) % m


def legendre(a, p):
    """Legendre symbol of a p-unit rational at an odd prime."""
    r = _mod_frac(Fraction(a), p)
    if r == 0:
        raise ValueError("not a unit at %d: %r" % (p, a))
    return 1 if pow(r, (p - 1) // 2, p) == 1 else -1


_SQ32 = {z * z % 32 for z in range(32)}
_SQ32_ODD = {z * z % 32 for z in range(1, 32, 2)}


@lru_cache(maxsize=None)
def _hilbert_two(alpha, u, beta, w):
    """Primitive-zero search for (a, b)_2, a = 2^alpha u, b = 2^beta w.

    A primitive zero of z^2 - a x^2 - b y^2 modulo 2^5 lifts 2-adically
    (the worst partial derivative has valuation 2), and every 2-adic
    zero reduces to one, so the search is an exact decision.
    """
    a = 2 ** alpha * u
    b = 2 ** beta * w
    for x in range(32):
        ax2 = a * x * x % 32
        for y in range(32):
            t = (ax2 + b * y * y) % 32
            if (x | y) & 1:
                if t in _SQ32:
                    return 1
            elif t in _SQ32_ODD:
                return 1
    return -1


def hilbert_qp(a, b, v):
    """Quadratic Hilbert symbol of two nonzero rationals at one place.

    +1 exactly when b is a norm from the quadratic extension by sqrt(a)
    of the completion; the symbol only depends on square classes.
    """
    place = PlaceQ.of(v)
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("hilbert symbol needs nonzero arguments")
    if place.is_real:
        return -1 if a < 0 and b < 0 else 1
    p = place.p
    alpha, u = _split_unit(a, p)
    beta, w = _split_unit(b, p)
    if p == 2:
        return _hilbert_two(alpha % 2, _mod_frac(u, 8),
                            beta % 2, _mod_frac(w, 8))
    sign = 1
    if alpha * beta % 2 and (p - 1) // 2 % 2:
        sign = -sign
    if beta % 2:
        sign *= legendre(u, p)
    if alpha % 2:
        sign *= legendre(w, p)
    return sign


def hilbert_real(a, b):
    """The real Hilbert symbol: -1 exactly when both arguments are negative."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("hilbert symbol needs nonzero arguments")
    return -1 if a < 0 and b < 0 else 1


def rational_places_of(*values):
    """The real place, 2, and every prime dividing a value's numerator
    or denominator: a superset of the places where symbols in the given
    values can be nontrivial."""
    primes = {2}
    for val in values:
        f = Fraction(val)
        if f == 0:
            raise ValueError("places of zero are undefined")
        primes.update(factorint(abs(f.numerator)))
        primes.update(factorint(f.denominator))
    return [PlaceQ.real()] + [PlaceQ.finite(p) for p in sorted(primes)]


class QuadFieldPlace:
    """A place of the real quadratic field of discriminant 5.

    kind is "split" (p = +-1 mod 5, two factors), "inert" (p = +-2
    mod 5, including 2), "ramified" (p = 5) or "real" (two embeddings).
    factor picks the factor or embedding: for split places factor 0
    completes along the canonical square root of 5 modulo p and factor
    1 along its negative; for real places factor 0 sends sqrt 5 to the
    positive root.
    """

    __slots__ = ("kind", "p", "factor")

    def __init__(self, kind, p=None, factor=0):
        if kind not in ("split", "inert", "ramified", "real"):
            raise ValueError("unknown place kind: %r" % (kind,))
        if kind == "real":
            if factor not in (0, 1):
                raise ValueError("real embeddings are 0 and 1")
            p = None
        else:
            p = int(p)
            if not isprime(p):
                raise ValueError("not a prime: %r" % (p,))
            expected = ("ramified" if p == 5 else
                        "split" if p % 5 in (1, 4) else "inert")
            if kind != expected:
                raise ValueError("%d is %s in the field, not %s"
                                 % (p, expected, kind))
            if kind == "split":
                if factor not in (0, 1):
                    raise ValueError("split factors are 0 and 1")
            elif factor != 0:
                raise ValueError("only one place above %d" % p)
        self.kind = kind
        self.p = p
        self.factor = factor

    @classmethod
    def above(cls, p):
        """The places of the field above a rational prime."""
        if p == 5:
            return [cls("ramified", 5)]
        if p % 5 in (1, 4):
            return [cls("split", p, 0), cls("split", p, 1)]
        return [cls("inert", p)]

    @classmethod
    def real_embeddings(cls):
        return [cls("real", factor=0), cls("real", factor=1)]

    def __eq__(self, other):
        return (isinstance(other, QuadFieldPlace)
                and (self.kind, self.p, self.factor)
                == (other.kind, other.p, other.factor))

    def __hash__(self):
        return hash(("QuadFieldPlace", self.kind, self.p, self.factor))

    def __repr__(self):
        if self.kind == "real":
            return "QuadFieldPlace('real', factor=%d)" % self.factor
        if self.kind == "split":
            return "QuadFieldPlace('split', %d, factor=%d)" % (self.p, self.factor)
        return "QuadFieldPlace(%r, %d)" % (self.kind, self.p)


def sqrt5_pair(x):
    """Coerce a rational or a coordinate pair to (Fraction, Fraction)."""
    if isinstance(x, tuple):
        if len(x) != 2:
            raise ValueError("a field element is a pair over (1, sqrt 5)")
        return (Fraction(x[0]), Fraction(x[1]))
    return (Fraction(x), Fraction(0))


def sqrt5_mul(a, b):
    """Product of two elements given as pairs over (1, sqrt 5)."""
    (x, y), (z, w) = sqrt5_pair(a), sqrt5_pair(b)
    return (x * z + 5 * y * w, x * w + y * z)


def sqrt5_norm(a):
    """Norm to the rationals: (x + y sqrt 5)(x - y sqrt 5)."""
    x, y = sqrt5_pair(a)
    return x * x - 5 * y * y


def sqrt5_inv(a):
    """Multiplicative inverse of a nonzero pair."""
    x, y = sqrt5_pair(a)
    n = x * x - 5 * y * y
    if n == 0:
        raise ZeroDivisionError("inverse of zero")
    return (x / n, -y / n)


def sqrt5_sign(a, embedding):
    """Exact sign of x + y sqrt 5 under one real embedding (0 or 1)."""
    x, y = sqrt5_pair(a)
    if embedding == 1:
        y = -y
    if x == 0 and y == 0:
        raise ValueError("sign of zero")
    if x == 0:
        return 1 if y > 0 else -1
    if y == 0 or (x > 0) == (y > 0):
        return 1 if x > 0 else -1
    return (1 if x > 0 else -1) if x * x > 5 * y * y else (1 if y > 0 else -1)


@lru_cache(maxsize=None)
def _sqrt5_root_mod(p, k):
    """The canonical square root of 5 modulo p^k at a split prime."""
    r = int(sqrt_mod(5, p))
    mod = p
    while mod < p ** k:
        mod = min(mod * mod, p ** k)
        r = (r + 5 * pow(r, -1, mod)) * pow(2, -1, mod) % mod
    return r


def _split_place_data(pair, place):
    """(valuation, unit residue mod p) of a pair at a split place."""
    p = place.p
    x, y = pair
    low = min(_vp(x, p) if x else 0, _vp(y, p) if y else 0)
    if low < 0:
        scale = Fraction(p) ** (2 * ((-low + 1) // 2))
        x, y = x * scale, y * scale  # an even shift keeps the class
    norm_val = _vp(x * x - 5 * y * y, p)
    k = norm_val + 1
    r = _sqrt5_root_mod(p, k)
    if place.factor == 1:
        r = p ** k - r
    t = _mod_frac(x + y * r, p ** k)
    if t == 0:
        raise AssertionError("valuation above the norm bound at %r" % (place,))
    v = 0
    while t % p == 0:
        t //= p
        v += 1
    return v, t % p


def _inert_residue(pair, p, v):
    """The residue-field image of pair / p^v at an odd inert place."""
    x, y = pair
    scale = Fraction(p) ** v
    return (_mod_frac(x / scale, p), _mod_frac(y / scale, p))


def _fp2_chi(res, p):
    """Quadratic character of F_{p^2} = F_p[s]/(s^2 - 5) at a unit."""
    c, d = res
    out = (1, 0)
    base = (c % p, d % p)
    e = (p * p - 1) // 2
    while e:
        if e & 1:
            out = ((out[0] * base[0] + 5 * out[1] * base[1]) % p,
                   (out[0] * base[1] + out[1] * base[0]) % p)
        base = ((base[0] * base[0] + 5 * base[1] * base[1]) % p,
                (2 * base[0] * base[1]) % p)
        e >>= 1
    if out == (1, 0):
        return 1
    if out == (p - 1, 0):
        return -1
    raise ValueError("not a unit in the residue field")


@lru_cache(maxsize=1)
def _golden_tables():
    """Arithmetic of Z2[phi] / 32, elements indexed c0 + 32*c1."""
    idx = np.arange(1024)
    c0, c1 = idx % 32, idx // 32
    # (p + q phi)(r + s phi) = pr + qs + (ps + qr + qs) phi
    norm_odd = (c0 * c0 + c0 * c1 - c1 * c1) % 2 == 1
    sq0 = (c0 * c0 + c1 * c1) % 32
    sq1 = (2 * c0 * c1 + c1 * c1) % 32
    squares = sq0 + 32 * sq1
    return c0, c1, norm_odd, squares


def _golden_mul_scalar(e, c0, c1):
    """Multiply every table element by a fixed element, over (1, phi)."""
    p, q = e
    r0 = (p * c0 + q * c1) % 32
    r1 = (p * c1 + q * c0 + q * c1) % 32
    return r0, r1


@lru_cache(maxsize=None)
def _hilbert_golden(alpha, a0, a1, beta, b0, b1):
    """Primitive-zero search in Z2[phi] modulo 32.

    a = 2^alpha (a0 + a1 phi), b likewise with unit cofactors; the same
    Hensel bound as over Z2 makes a primitive zero modulo 2^5 decisive.
    """
    c0, c1, unit, squares = _golden_tables()
    za = (2 ** alpha * a0 % 32, 2 ** alpha * a1 % 32)
    zb = (2 ** beta * b0 % 32, 2 ** beta * b1 % 32)
    sq0, sq1 = squares % 32, squares // 32
    ax0, ax1 = _golden_mul_scalar(za, sq0, sq1)   # a x^2 for every x
    by0, by1 = _golden_mul_scalar(zb, sq0, sq1)   # b y^2 for every y
    by_any = np.zeros(1024, dtype=bool)
    by_unit = np.zeros(1024, dtype=bool)
    by_any[by0 + 32 * by1] = True
    by_unit[(by0 + 32 * by1)[unit]] = True
    # z^2 - a x^2 over all (z, x) pairs, as flat indices
    d0 = (sq0[:, None] - ax0[None, :]) % 32
    d1 = (sq1[:, None] - ax1[None, :]) % 32
    flat = d0 + 32 * d1
    free = unit[:, None] | unit[None, :]          # z or x already a unit
    if (by_any[flat] & free).any() or by_unit[flat].any():
        return 1
    return -1


def _golden_unit_mod8(pair, v):
    """phi-basis residue mod 8 of pair / 2^v at the inert place above 2."""
    x, y = pair
    scale = Fraction(2) ** v
    c = (x - y) / scale
    d = 2 * y / scale
    c8, d8 = _mod_frac(c, 8), _mod_frac(d, 8)
    if (c8 * c8 + c8 * d8 - d8 * d8) % 2 == 0:
        raise AssertionError("normalized element is not a unit above 2")
    return c8, d8


def hilbert_sqrt5(a, b, w):
    """Quadratic Hilbert symbol over a completion of Q(sqrt 5).

    a and b are nonzero field elements as pairs over (1, sqrt 5) (bare
    rationals are accepted); w is a QuadFieldPlace.
    """
    pa, pb = sqrt5_pair(a), sqrt5_pair(b)
    if pa == (0, 0) or pb == (0, 0):
        raise ValueError("hilbert symbol needs nonzero arguments")
    if w.kind == "real":
        return (-1 if sqrt5_sign(pa, w.factor) < 0
                and sqrt5_sign(pb, w.factor) < 0 else 1)
    if w.kind == "ramified":
        va, ua = _ramified_data(pa)
        vb, ub = _ramified_data(pb)
        sign = 1  # (q - 1)/2 = 2 is even, so no (-1)^{v v'} factor
        if vb % 2:
            sign *= 1 if pow(ua, 2, 5) == 1 else -1
        if va % 2:
            sign *= 1 if pow(ub, 2, 5) == 1 else -1
        return sign
    if w.kind == "split":
        va, ua = _split_place_data(pa, w)
        vb, ub = _split_place_data(pb, w)
        p = w.p
        sign = 1
        if va * vb % 2 and (p - 1) // 2 % 2:
            sign = -sign
        if vb % 2:
            sign *= 1 if pow(ua, (p - 1) // 2, p) == 1 else -1
        if va % 2:
            sign *= 1 if pow(ub, (p - 1) // 2, p) == 1 else -1
        return sign
    p = w.p
    if p == 2:
        va = _vp(sqrt5_norm(pa), 2) // 2
        vb = _vp(sqrt5_norm(pb), 2) // 2
        a8 = _golden_unit_mod8(pa, va)
        b8 = _golden_unit_mod8(pb, vb)
        return _hilbert_golden(va % 2, a8[0], a8[1], vb % 2, b8[0], b8[1])
    va = min(_vp(pa[0], p) if pa[0] else 10 ** 9,
             _vp(pa[1], p) if pa[1] else 10 ** 9)
    vb = min(_vp(pb[0], p) if pb[0] else 10 ** 9,
             _vp(pb[1], p) if pb[1] else 10 ** 9)
    sign = 1  # (p^2 - 1)/2 is even for every odd p
    if vb % 2:
        sign *= _fp2_chi(_inert_residue(pa, p, va), p)
    if va % 2:
        sign *= _fp2_chi(_inert_residue(pb, p, vb), p)
    return sign


def _ramified_data(pair):
    """(valuation along sqrt 5, unit residue mod 5) at the prime above 5."""
    x, y = pair
    v = min(2 * _vp(x, 5) if x else 10 ** 9,
            2 * _vp(y, 5) + 1 if y else 10 ** 9)
    for _ in range(v):        # divide out sqrt 5
        x, y = y, x / 5
    for _ in range(-v):       # or multiply it back in
        x, y = 5 * y, x
    return v, _mod_frac(x, 5)


def sqrt5_places_of(*values):
    """Both real embeddings plus every finite place where one of the
    values could fail to be a unit.

    Norm primes alone are not enough: at a split prime the two local
    valuations can cancel in the norm (any pi / conjugate(pi) has norm
    a unit), so primes of the coordinate denominators are included too.
    """
    primes = {2, 5}
    for val in values:
        x, y = sqrt5_pair(val)
        n = x * x - 5 * y * y
        if n == 0:
            raise ValueError("places of zero are undefined")
        primes.update(factorint(abs(n.numerator)))
        primes.update(factorint(n.denominator))
        primes.update(factorint(x.denominator))
        primes.update(factorint(y.denominator))
    places = QuadFieldPlace.real_embeddings()
    for p in sorted(primes):
        places.extend(QuadFieldPlace.above(p))
    return places


def _subgroup_closure(m, subgroup):
    h = {int(x) % m for x in subgroup}
    h.add(1)
    for x in h:
        if gcd(x, m) != 1:
            raise ValueError("%d is not a unit modulo %d" % (x, m))
    for x in list(h):
        for y in list(h):
            if x * y % m not in h:
                raise ValueError("subgroup is not closed under multiplication")
    return frozenset(h)


def _coset_rep(x, m, h):
    return min(x * g % m for g in h)


def artin_cyclotomic(a, v, m, subgroup=(1,)):
    """Local Artin image of a nonzero rational in (Z/m)* mod a subgroup.

    m is an odd prime conductor.  At a finite place p with p != m the
    image is the class of p^{v_p(a)}; at p = m it is the inverse of the
    unit part of a (so the uniformiser maps to the identity, which is
    the normalization global reciprocity forces); at the real place it
    is the sign.  Returns the least positive representative of the
    coset modulo the subgroup.
    """
    if not isprime(m) or m == 2:
        raise ValueError("conductor must be an odd prime")
    h = _subgroup_closure(m, subgroup)
    a = Fraction(a)
    if a == 0:
        raise ValueError("artin symbol of zero")
    place = PlaceQ.of(v)
    if place.is_real:
        rep = 1 if a > 0 else m - 1
    elif place.p == m:
        _, u = _split_unit(a, m)
        rep = pow(_mod_frac(u, m), -1, m)
    else:
        rep = pow(place.p % m, _vp(a, place.p), m)
    return _coset_rep(rep, m, h)


def cyclic_symbol_invariant(coset, generator, m, subgroup=(1,)):
    """Position of a coset along a chosen generator, as i/n modulo 1.

    n is the order of the generator in (Z/m)* mod the subgroup.  Raises
    when the coset lies outside the cyclic group the generator spans.
    """
    h = _subgroup_closure(m, subgroup)
    gen = int(generator) % m
    if gcd(gen, m) != 1:
        raise ValueError("generator must be a unit modulo %d" % m)
    target = _coset_rep(int(coset) % m, m, h)
    x, i = 1, 0
    reps = {}
    while True:
        rep = _coset_rep(x, m, h)
        if rep in reps:
            break
        reps[rep] = i
        x = x * gen % m
        i += 1
    n = len(reps)
    if target not in reps:
        raise ValueError("coset is not a power of the chosen generator")
    return Fraction(reps[target], n)
