"""Exact scalars: finite fields F_q and cyclotomic numbers in Q(zeta_m).

Field elements are encoded as integers in [0, q): the polynomial
c_0 + c_1 x + ... + c_{e-1} x^{e-1} in the power basis of the modulus is
stored as sum(c_i * p**i).  Cyclotomic numbers carry exact rational
coefficients with respect to the basis 1, zeta, ..., zeta^(d-1) where d is
the degree of the m-th cyclotomic polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

# ---------------------------------------------------------------------------
# finite fields


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# standard irreducible moduli (coefficients low degree first) for q <= 64;
# prime fields always use the modulus x.
STANDARD_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 4, 1),
    (7, 2): (3, 6, 1),
}

_TABLE_LIMIT = 512  # precompute q x q arithmetic tables up to this size


def _poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mulmod(a, b, modulus, p):
    """(a * b) mod modulus over F_p; coefficient lists, low degree first."""
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_divmod(out, modulus, p)[1]


def _poly_divmod(a, b, p):
    a = list(a)
    deg_b = len(_poly_trim(b)) - 1
    b = _poly_trim(b)
    inv_lead = pow(b[-1], p - 2, p)
    quot = [0] * max(len(a) - deg_b, 0)
    while True:
        a = _poly_trim(a)
        if len(a) - 1 < deg_b:
            break
        shift = len(a) - 1 - deg_b
        factor = (a[-1] * inv_lead) % p
        quot[shift] = factor
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * bi) % p
    return quot, a


def _poly_gcd(a, b, p):
    a, b = _poly_trim(a), _poly_trim(b)
    while b:
        a, b = b, _poly_trim(_poly_divmod(a, b, p)[1])
    return a


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return [(x - y) % p for x, y in zip(a, b)]


def _poly_powmod(base, exp, modulus, p):
    result = [1]
    base = _poly_divmod(base, modulus, p)[1]
    while exp:
        if exp & 1:
            result = _poly_mulmod(result, base, modulus, p)
        base = _poly_mulmod(base, base, modulus, p)
        exp >>= 1
    return result


def _is_irreducible(modulus, p):
    coeffs = _poly_trim(modulus)
    e = len(coeffs) - 1
    if e < 1 or coeffs[-1] == 0:
        return False
    if e == 1:
        return True
    if e <= 3:
        # a degree 2 or 3 polynomial is irreducible iff it has no root
        return all(
            sum(c * pow(x, i, p) for i, c in enumerate(coeffs)) % p != 0
            for x in range(p)
        )
    # x^(p^e) == x mod f, and no factor of degree dividing a maximal
    # proper divisor of e
    x = [0, 1]
    if _poly_trim(_poly_sub(_poly_powmod(x, p**e, coeffs, p), x, p)):
        return False
    for ell in {d for d in range(2, e + 1) if e % d == 0 and is_prime(d)}:
        probe = _poly_powmod(x, p ** (e // ell), coeffs, p)
        diff = _poly_sub(probe, x, p)
        g = _poly_trim(_poly_gcd(diff, coeffs, p))
        if len(g) - 1 != 0:
            return False
    return True


class Field:
    """The finite field F_q with q = p**e elements, exact arithmetic on
    integer encodings."""

    def __init__(self, p, e=1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if e < 1:
            raise ValueError("e must be >= 1")
        q = p**e
        if modulus is None:
            if e == 1:
                modulus = (0, 1)
            elif (p, e) in STANDARD_MODULI:
                modulus = STANDARD_MODULI[(p, e)]
            else:
                raise ValueError(
                    f"no built-in modulus for q = {q}; supply one explicitly")
        modulus = tuple(c % p for c in modulus)
        if len(_poly_trim(modulus)) - 1 != e:
            raise ValueError("modulus degree must equal e")
        if not _is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.e = e
        self.q = q
        self.modulus = modulus
        self._mul_table = None
        self._inv_table = None
        self._trace_table = None
        if e > 1 and q <= _TABLE_LIMIT:
            self._build_tables()

    # -- encoding helpers

    def _decode(self, a):
        c = []
        for _ in range(self.e):
            a, r = divmod(a, self.p)
            c.append(r)
        return c

    def _encode(self, coeffs):
        a = 0
        for c in reversed(coeffs[: self.e]):
            a = a * self.p + (c % self.p)
        return a

    def _build_tables(self):
        q, p = self.q, self.p
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            ca = self._decode(a)
            for b in range(a, q):
                cb = self._decode(b)
                prod = self._encode(
                    _poly_mulmod(ca, cb, self.modulus, p) + [0] * self.e)
                mul[a][b] = prod
                mul[b][a] = prod
        self._mul_table = mul
        inv = [0] * q
        for a in range(1, q):
            inv[a] = next(b for b in range(1, q) if mul[a][b] == 1)
        self._inv_table = inv

    # -- arithmetic on encodings

    def add(self, a, b):
        if self.e == 1:
            return (a + b) % self.p
        return self._encode(
            [x + y for x, y in zip(self._decode(a), self._decode(b))])

    def neg(self, a):
        if self.e == 1:
            return (-a) % self.p
        return self._encode([-x for x in self._decode(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.e == 1:
            return (a * b) % self.p
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._encode(
            _poly_mulmod(self._decode(a), self._decode(b), self.modulus, self.p)
            + [0] * self.e)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_q")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k):
        result, base = 1, a
        k = int(k)
        if k < 0:
            base = self.inv(a)
            k = -k
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def from_int(self, k):
        """Embed the rational integer k via k * 1."""
        return k % self.p

    def trace(self, a):
        """Absolute trace F_q -> F_p, returned as an integer in [0, p)."""
        if self.e == 1:
            return a % self.p
        if self._trace_table is None:
            table = []
            for x in range(self.q):
                t, y = 0, x
                for _ in range(self.e):
                    t = self.add(t, y)
                    y = self.pow(y, self.p)
                table.append(t)
            self._trace_table = table
        return self._trace_table[a]

    def element(self, rep):
        return FieldElement(self, rep % self.q if self.e == 1 else rep)

    def elements(self):
        return [FieldElement(self, a) for a in range(self.q)]

    def units(self):
        return [FieldElement(self, a) for a in range(1, self.q)]

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    def prime_basis(self):
        """Encodings of the F_p-basis 1, x, ..., x^(e-1) of F_q."""
        return [self.p**i for i in range(self.e)]

    def __eq__(self, other):
        return (isinstance(other, Field)
                and (self.p, self.e, self.modulus) ==
                    (other.p, other.e, other.modulus))

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        return f"Field(p={self.p}, e={self.e})"


@lru_cache(maxsize=None)
def _cached_field(p, e, modulus):
    return Field(p, e, modulus)


def field_make(p, e=1, modulus=None):
    """Construct (and cache) the field F_{p^e} with a verified modulus."""
    return _cached_field(p, e, tuple(modulus) if modulus is not None else None)


class FieldElement:
    """An element of a Field; thin wrapper over the integer encoding."""

    __slots__ = ("field", "rep")

    def __init__(self, field, rep):
        if not 0 <= rep < field.q:
            raise ValueError(f"encoding {rep} out of range for q={field.q}")
        self.field = field
        self.rep = rep

    def _check(self, other):
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise TypeError("field mismatch")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.add(self.rep, other.rep))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.rep, other.rep))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.rep, other.rep))

    def __truediv__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.div(self.rep, other.rep))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.rep))

    def __pow__(self, k):
        return FieldElement(self.field, self.field.pow(self.rep, k))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.rep))

    def __bool__(self):
        return self.rep != 0

    def __eq__(self, other):
        return (isinstance(other, FieldElement)
                and self.field == other.field and self.rep == other.rep)

    def __hash__(self):
        return hash((self.field, self.rep))

    def __repr__(self):
        return f"FieldElement({self.rep} in F_{self.field.q})"


# ---------------------------------------------------------------------------
# cyclotomic numbers


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Monic integer coefficients of Phi_m, low degree first."""
    if m < 1:
        raise ValueError("conductor must be >= 1")
    # x^m - 1 divided by Phi_d for all proper divisors d of m
    num = [0] * (m + 1)
    num[0], num[m] = -1, 1
    for d in range(1, m):
        if m % d == 0:
            phi_d = cyclotomic_polynomial(d)
            num = _zpoly_exact_div(num, list(phi_d))
    return tuple(num)


def _zpoly_exact_div(a, b):
    """Exact division of integer polynomials (low degree first)."""
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for shift in range(len(a) - len(b), -1, -1):
        coef = a[shift + len(b) - 1] // b[-1]
        out[shift] = coef
        if coef:
            for i, bi in enumerate(b):
                a[shift + i] -= coef * bi
    assert not any(a), "non-exact polynomial division"
    return out


@lru_cache(maxsize=None)
def _phi_degree(m):
    return len(cyclotomic_polynomial(m)) - 1


def _reduce_mod_phi(m, raw):
    """Reduce the coefficient list raw (powers of zeta_m) mod Phi_m."""
    phi = cyclotomic_polynomial(m)
    d = len(phi) - 1
    raw = list(raw) + [Fraction(0)] * max(0, d - len(raw))
    for k in range(len(raw) - 1, d - 1, -1):
        c = raw[k]
        if c:
            raw[k] = Fraction(0)
            for i in range(d):
                raw[k - d + i] -= c * phi[i]
    return tuple(raw[:d])


class CyclotomicNumber:
    """An exact element of Q(zeta_m), reduced mod the m-th cyclotomic
    polynomial; equality is coefficient-wise after conductor promotion."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m, coeffs):
        self.m = m
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        if len(self.coeffs) != _phi_degree(m):
            raise ValueError("coefficient vector has wrong length")

    @classmethod
    def rational(cls, value, m=1):
        raw = [Fraction(value)] + [Fraction(0)] * max(0, _phi_degree(m) - 1)
        return cls(m, _reduce_mod_phi(m, raw))

    @classmethod
    def zeta(cls, m, k=1):
        k %= m
        raw = [Fraction(0)] * (k + 1)
        raw[k] = Fraction(1)
        return cls(m, _reduce_mod_phi(m, raw))

    @classmethod
    def zero(cls, m=1):
        return cls.rational(0, m)

    @classmethod
    def one(cls, m=1):
        return cls.rational(1, m)

    def promote(self, big_m):
        if big_m == self.m:
            return self
        if big_m % self.m != 0:
            raise ValueError("can only promote to a multiple conductor")
        step = big_m // self.m
        raw = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1)
        for i, c in enumerate(self.coeffs):
            raw[i * step] = c
        return CyclotomicNumber(big_m, _reduce_mod_phi(big_m, raw))

    def _pair(self, other):
        if not isinstance(other, CyclotomicNumber):
            other = CyclotomicNumber.rational(other)
        m = lcm(self.m, other.m)
        return self.promote(m), other.promote(m)

    def __add__(self, other):
        a, b = self._pair(other)
        return CyclotomicNumber(a.m, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._pair(other)
        return CyclotomicNumber(a.m, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CyclotomicNumber(self.m, [-x for x in self.coeffs])

    def __mul__(self, other):
        a, b = self._pair(other)
        raw = [Fraction(0)] * (2 * len(a.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        raw[i + j] += x * y
        return CyclotomicNumber(a.m, _reduce_mod_phi(a.m, raw))

    __rmul__ = __mul__

    def scale(self, rational):
        f = Fraction(rational)
        return CyclotomicNumber(self.m, [c * f for c in self.coeffs])

    def __pow__(self, k):
        result = CyclotomicNumber.one(self.m)
        base = self
        for _ in range(int(k)):
            result = result * base
        return result

    def galois(self, t):
        """Image under zeta_m -> zeta_m**t; t must be coprime to m."""
        if gcd(t, self.m) != 1:
            raise ValueError(f"t = {t} is not coprime to m = {self.m}")
        raw = [Fraction(0)] * self.m
        for i, c in enumerate(self.coeffs):
            raw[(i * t) % self.m] += c
        return CyclotomicNumber(self.m, _reduce_mod_phi(self.m, raw))

    def conjugate(self):
        if self.m <= 2:
            return self
        return self.galois(self.m - 1)

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("not a rational number")
        return self.coeffs[0]

    def __eq__(self, other):
        try:
            a, b = self._pair(other)
        except (TypeError, ValueError):
            return NotImplemented
        return a.coeffs == b.coeffs

    __hash__ = None

    def __repr__(self):
        return f"CyclotomicNumber(m={self.m}, coeffs={list(self.coeffs)})"


def cyclo_make(m):
    """Return descriptor data (Phi_m and degree) for Q(zeta_m)."""
    return {"m": m, "phi": cyclotomic_polynomial(m), "degree": _phi_degree(m)}


def galois_apply(a, t):
    return a.galois(t)


def _prime_power_split(m):
    if m == 1:
        return None
    p = next(d for d in range(2, m + 1) if m % d == 0)
    k = 0
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise ValueError("conductor is not a prime power")
    return p, k


def in_subfield(a, i):
    """True iff a lies in Q(zeta_{p^i}); the conductor of a must be a
    prime power p^k with i <= k.  Decided by the Galois test with
    zeta -> zeta^(1 + p^i)."""
    split = _prime_power_split(a.m)
    if split is None:
        return True
    p, k = split
    if i < 0 or i > k:
        raise ValueError(f"need 0 <= i <= {k}")
    if i == 0:
        return a.is_rational()
    if i >= k:
        return True
    return a.galois(1 + p**i) == a


def root_of_unity_order(a):
    """Multiplicative order of a as a root of unity, or None."""
    if a.is_zero():
        return None
    power = a
    for d in range(1, 2 * a.m + 1):
        if power == 1:
            return d
        power = power * a
    return None


class AdditiveCharacter:
    """The fixed nontrivial character x -> zeta_p^Tr(x) of F_q^+."""

    def __init__(self, field):
        self.field = field
        p = field.p
        self._powers = [CyclotomicNumber.zeta(p, t) for t in range(p)]
        self.conductor = p

    def __call__(self, x):
        rep = x.rep if isinstance(x, FieldElement) else x
        return self._powers[self.field.trace(rep)]


def additive_character(field):
    return AdditiveCharacter(field)
