"""Exact class-function machinery on enumerated algebra groups: the basis
functions theta_lambda, Kirillov functions, supercharacters, the induced
characters xi_lambda, Frobenius induction/restriction, inner products,
duals of abelian groups, and field-of-values analysis."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm

from .algebra import DEFAULT_CAP, CapExceeded, NilAlgebra, trunc_exp
from .chain import ChainResult, chain_compute
from .duals import orbit
from .scalars import (AdditiveCharacter, CyclotomicNumber, in_subfield,
                      root_of_unity_order)


class GroupTable:
    """A fully enumerated algebra group with canonical element order and
    cached inverses."""

    def __init__(self, algebra, elements):
        self.algebra = algebra
        self.elements = list(elements)
        self.index = {g.key(): i for i, g in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate group elements")
        self._inverses = None
        self._mul_table = None
        self.theta = AdditiveCharacter(algebra.field)

    @classmethod
    def from_algebra(cls, algebra, cap=DEFAULT_CAP):
        return cls(algebra, algebra.enumerate_group(cap))

    @classmethod
    def from_subspace(cls, algebra, subspace, cap=DEFAULT_CAP):
        """The algebra subgroup 1 + subspace; the subspace must be closed
        under products."""
        sub = NilAlgebra.from_subspace(subspace, algebra.field)
        table = cls(sub, sub.enumerate_group(cap))
        return table

    @property
    def size(self):
        return len(self.elements)

    def identity_index(self):
        return self.index[()]

    def inverses(self):
        if self._inverses is None:
            self._inverses = [g.inverse() for g in self.elements]
        return self._inverses

    def contains(self, g):
        return g.key() in self.index

    def mul_table(self):
        """index x index -> index of the product; built once on demand."""
        if self._mul_table is None:
            table = []
            for g in self.elements:
                row = [self.index[(g * h).key()] for h in self.elements]
                table.append(row)
            self._mul_table = table
        return self._mul_table

    def is_abelian(self):
        basis = self.algebra.basis()
        return all((u @ v) == (v @ u) for u in basis for v in basis)

    def __repr__(self):
        return f"GroupTable(size={self.size})"


class ClassFunction:
    """An exact complex-valued function on an enumerated group, stored as a
    full value table of cyclotomic numbers."""

    __slots__ = ("group", "values")

    def __init__(self, group, values):
        self.group = group
        self.values = tuple(values)
        if len(self.values) != group.size:
            raise ValueError("value table has wrong length")

    @classmethod
    def from_evaluator(cls, group, fn):
        return cls(group, [fn(g) for g in group.elements])

    def __call__(self, g):
        return self.values[self.group.index[g.key()]]

    @property
    def degree(self):
        return self.values[self.group.identity_index()]

    def __add__(self, other):
        self._same(other)
        return ClassFunction(self.group,
                             [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._same(other)
        return ClassFunction(self.group,
                             [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        self._same(other)
        return ClassFunction(self.group,
                             [a * b for a, b in zip(self.values, other.values)])

    def scale(self, rational):
        return ClassFunction(self.group, [v.scale(rational) for v in self.values])

    def conjugate(self):
        return ClassFunction(self.group, [v.conjugate() for v in self.values])

    def _same(self, other):
        if other.group is not self.group:
            raise ValueError("class functions live on different group tables")

    def inner(self, other):
        """<f, g> = (1/|G|) sum f(x) conj(g(x)); exact."""
        self._same(other)
        acc = CyclotomicNumber.zero()
        for a, b in zip(self.values, other.values):
            acc = acc + a * b.conjugate()
        return acc.scale(Fraction(1, self.group.size))

    def is_constant_on_conjugacy_samples(self, samples=60, seed=7):
        import random
        rng = random.Random(seed)
        for _ in range(samples):
            g = rng.choice(self.group.elements)
            x = rng.choice(self.group.elements)
            if self(g) != self(x * g * x.inverse()):
                return False
        return True

    def __eq__(self, other):
        return (isinstance(other, ClassFunction)
                and self.group is other.group
                and all(a == b for a, b in zip(self.values, other.values)))

    __hash__ = None


def inner_product(f, g):
    return f.inner(g)


# ---------------------------------------------------------------------------
# the basic families of functions


def theta_lambda(group, lam):
    """theta_lambda(g) = theta(lambda(g - 1)); a degree-one function."""
    th = group.theta
    return ClassFunction(group,
                         [th(lam.evaluate_group(g)) for g in group.elements])


def _orbit_sum(group, functionals, scale):
    th = group.theta
    values = []
    for g in group.elements:
        total = CyclotomicNumber.zero(th.conductor)
        for mu in functionals:
            total = total + th(mu.evaluate_group(g))
        values.append(total.scale(scale))
    return ClassFunction(group, values)


def kirillov(group, lam, cap=DEFAULT_CAP):
    """psi_lambda = |orbit|^(-1/2) * sum of theta_mu over the coadjoint
    orbit of lambda; table mode."""
    orb = orbit(lam, "coadjoint", cap)
    size = len(orb)
    root = isqrt(size)
    assert root * root == size, "coadjoint orbit size is not a perfect square"
    return _orbit_sum(group, orb, Fraction(1, root))


def exp_kirillov(group, lam, cap=DEFAULT_CAP):
    """psi^Exp_lambda(Exp X) = psi_lambda(1 + X)."""
    psi = kirillov(group, lam, cap)
    values = [None] * group.size
    for g in group.elements:
        target = trunc_exp(g.body)  # psi^Exp(Exp(x)) = psi(1 + x)
        values[group.index[target.key()]] = psi(g)
    assert all(v is not None for v in values)
    return ClassFunction(group, values)


def supercharacter(group, lam, cap=DEFAULT_CAP):
    """chi_lambda = (|G lam| / |G lam G|) * sum of theta_mu over the
    two-sided orbit."""
    left_size = len(orbit(lam, "left", cap))
    two = orbit(lam, "two-sided", cap)
    return _orbit_sum(group, two, Fraction(left_size, len(two)))


def xi_set(group, lam, s_bar, cap=DEFAULT_CAP):
    """Xi = {g lam s g^{-1} : g in G, s in S_bar} as a list of functionals."""
    from .duals import act_left, act_right
    s_elements = list(
        NilAlgebra.from_subspace(s_bar, group.algebra.field).enumerate_group(cap))
    seen = {}
    for g in group.elements:
        ginv = g.inverse()
        for s in s_elements:
            moved = act_left(g, act_right(lam, s * ginv))
            seen.setdefault(moved.key(), moved)
            if len(seen) > cap:
                raise CapExceeded("Xi enumeration exceeds cap")
    return [seen[k] for k in sorted(seen)]


@dataclass
class XiData:
    """Structural data for the induced character attached to lam, plus a
    value table when the group is small enough to enumerate."""

    chain: ChainResult
    degree_exponent: int
    norm_exponent: int
    table: object = None  # ClassFunction | None

    @property
    def is_irreducible(self):
        return self.norm_exponent == 0


def xi(algebra, lam, group=None, cap=DEFAULT_CAP):
    """Structural report (always) and exact table (when group is given and
    the subgroup fits the cap) for the character induced from the linear
    character theta_lambda of the terminal subgroup 1 + l_bar."""
    ch = chain_compute(algebra, lam)
    data = XiData(chain=ch,
                  degree_exponent=ch.degree_exponent,
                  norm_exponent=ch.norm_exponent)
    if group is not None:
        try:
            lgroup = GroupTable.from_subspace(algebra, ch.l_bar, cap)
        except CapExceeded:
            return data
        theta_on_l = theta_lambda(lgroup, lam)
        data.table = induce(theta_on_l, group)
    return data


# ---------------------------------------------------------------------------
# induction and restriction


def induce(f, group):
    """Ind_H^G f(g) = (1/|H|) sum over x in G with x g x^{-1} in H of
    f(x g x^{-1})."""
    sub = f.group
    inverses = group.inverses()
    values = []
    abelian_shortcut = group.is_abelian()
    for g in group.elements:
        if abelian_shortcut:
            if sub.contains(g):
                values.append(f(g).scale(Fraction(group.size, sub.size)))
            else:
                values.append(CyclotomicNumber.zero())
            continue
        acc = CyclotomicNumber.zero()
        hit = False
        for x, xinv in zip(group.elements, inverses):
            moved = x * g * xinv
            if sub.contains(moved):
                acc = acc + f(moved)
                hit = True
        values.append(acc.scale(Fraction(1, sub.size)) if hit else acc)
    return ClassFunction(group, values)


def restrict(f, subgroup):
    return ClassFunction(subgroup, [f(g) for g in subgroup.elements])


# ---------------------------------------------------------------------------
# duals of abelian algebra groups


@dataclass
class AbelianDual:
    """The complete character group of an abelian algebra group."""

    group: GroupTable
    characters: list  # of ClassFunction
    exponents: list   # per character: tuple of exponents of zeta_M
    modulus: int      # M = group exponent
    structure: list   # invariant factors, largest first

    def __len__(self):
        return len(self.characters)


def abelian_dual(group, cap=DEFAULT_CAP):
    """Characters of an abelian group via a power-normal form: generators
    are extracted greedily by maximal relative order, every element gets a
    normal-form exponent vector, and characters are built by solving
    z^m = chi(relation) stepwise."""
    if not group.is_abelian():
        raise ValueError("group is not abelian")
    identity = group.elements[group.identity_index()]
    norm_form = {identity.key(): ()}
    reps = {identity.key(): identity}
    gens, rel_orders, rel_words = [], [], []
    while len(norm_form) < group.size:
        best, best_m, best_word = None, 0, None
        for g in group.elements:
            if g.key() in norm_form:
                continue
            m, h = 1, g
            while h.key() not in norm_form:
                h = h * g
                m += 1
            if m > best_m:
                best, best_m, best_word = g, m, norm_form[h.key()]
        g, m = best, best_m
        new_norm = {}
        new_reps = {}
        power = identity
        for k in range(m):
            for key, vec in norm_form.items():
                elt = reps[key] * power
                new_norm[elt.key()] = vec + (k,)
                new_reps[elt.key()] = elt
            power = power * g
        norm_form, reps = new_norm, new_reps
        gens.append(g)
        rel_orders.append(m)
        rel_words.append(best_word)
    modulus = 1
    for g in gens:
        modulus = lcm(modulus, g.order())
    # assignments of exponents t_i of zeta_M to generators
    assignments = [()]
    for i, m in enumerate(rel_orders):
        word = rel_words[i] + (0,) * (i - len(rel_words[i]))
        new_assignments = []
        for partial in assignments:
            c = sum(w * t for w, t in zip(word, partial)) % modulus
            assert c % m == 0, "relation has no compatible character value"
            base = c // m
            step = modulus // m
            for j in range(m):
                new_assignments.append(partial + ((base + j * step) % modulus,))
        assignments = new_assignments
    assert len(assignments) == group.size, "dual is incomplete"
    zeta_powers = [CyclotomicNumber.zeta(modulus, t) for t in range(modulus)]
    characters = []
    exponents = []
    for ts in assignments:
        table_exp = []
        for g in group.elements:
            vec = norm_form[g.key()]
            table_exp.append(sum(v * t for v, t in zip(vec, ts)) % modulus)
        exponents.append(tuple(table_exp))
        characters.append(
            ClassFunction(group, [zeta_powers[e] for e in table_exp]))
    order = sorted(range(len(characters)), key=lambda i: exponents[i])
    return AbelianDual(group=group,
                       characters=[characters[i] for i in order],
                       exponents=[exponents[i] for i in order],
                       modulus=modulus,
                       structure=rel_orders)


def constituents_of_induced_linear(dual, subgroup, f_on_subgroup):
    """The linear characters of the ambient abelian group restricting to the
    given linear character of the subgroup; these are exactly the
    constituents of its induction."""
    out = []
    for psi in dual.characters:
        if all(psi(h) == f_on_subgroup(h) for h in subgroup.elements):
            out.append(psi)
    return out


# ---------------------------------------------------------------------------
# linearity tests and fields of values


def _value_exponents(f):
    """Express every table value as zeta_M^t for a common M, or None."""
    modulus = 1
    for v in f.values:
        d = root_of_unity_order(v)
        if d is None:
            return None, None
        modulus = lcm(modulus, d)
    powers = [CyclotomicNumber.zeta(modulus, t) for t in range(modulus)]
    exps = []
    for v in f.values:
        for t, w in enumerate(powers):
            if v == w:
                exps.append(t)
                break
        else:
            return None, None
    return exps, modulus


def homomorphism_defect(f):
    """A pair (g, h) with f(gh) != f(g) f(h), or None; exhaustive over all
    pairs.  Root-of-unity valued tables are checked in exponent arithmetic."""
    group = f.group
    exps, modulus = _value_exponents(f)
    if exps is not None:
        mul = group.mul_table()
        size = group.size
        for i in range(size):
            ei = exps[i]
            row = mul[i]
            for j in range(size):
                if (ei + exps[j] - exps[row[j]]) % modulus:
                    return group.elements[i], group.elements[j]
        return None
    for g in group.elements:
        fg = f(g)
        for h in group.elements:
            if f(g * h) != fg * f(h):
                return g, h
    return None


def is_character_linear(f):
    """A degree-one class function on an abelian group is a character iff
    it is multiplicative."""
    if not f.group.is_abelian():
        raise ValueError("linearity test requires an abelian group")
    if f.degree != CyclotomicNumber.one():
        return False
    return homomorphism_defect(f) is None


@dataclass(frozen=True)
class FieldOfValues:
    """conductor = lcm of the multiplicative orders of the values;
    min_level = least i with all values inside Q(zeta_{p^i})."""

    p: int
    conductor: int
    min_level: int


def field_of_values(f):
    """Analyze the value field of a function whose values are roots of
    unity with prime-power conductor."""
    orders = []
    max_m = 1
    for v in f.values:
        d = root_of_unity_order(v)
        if d is None:
            raise ValueError("value is not a root of unity")
        orders.append(d)
        max_m = lcm(max_m, v.m)
    conductor = 1
    for d in orders:
        conductor = lcm(conductor, d)
    primes = {p for p in range(2, conductor + 1)
              if conductor % p == 0 and all(p % r for r in range(2, p))}
    if len(primes) > 1:
        raise ValueError("values do not have prime-power conductor")
    if not primes:
        return FieldOfValues(p=0, conductor=1, min_level=0)
    p = primes.pop()
    k = 0
    c = conductor
    while c % p == 0:
        c //= p
        k += 1
    level = 0
    while level <= k:
        if all(_in_level(v, p, level) for v in f.values):
            break
        level += 1
    return FieldOfValues(p=p, conductor=conductor, min_level=level)


def _in_level(value, p, level):
    if value.is_rational():
        return True
    if level == 0:
        return False
    if (p**level) % value.m == 0:
        return True
    return in_subfield(value, level)


def kirillov_equals_theta_on_abelian(group, lam):
    """On an abelian algebra group the coadjoint orbit is a singleton, so
    psi_lambda = theta_lambda; returns the common table."""
    orb = orbit(lam, "coadjoint")
    assert len(orb) == 1
    return theta_lambda(group, lam)
