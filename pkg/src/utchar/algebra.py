"""Pattern algebras u_{n,P}(q), their nilpotent matrices, the algebra
groups 1 + X, canonical subspaces, and the truncated exponential.

Subspaces are kept in reduced row-echelon form over the row-major ordering
of the pattern positions, so equal subspaces compare equal structurally.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .scalars import FieldElement

DEFAULT_CAP = 1 << 22


class CapExceeded(RuntimeError):
    """An enumeration would exceed the configured cap."""


class Pattern:
    """A set of strictly upper triangular positions (i, j), 1-based."""

    __slots__ = ("n", "positions", "order", "index")

    def __init__(self, n, positions):
        positions = frozenset((int(i), int(j)) for i, j in positions)
        for i, j in positions:
            if not 1 <= i < j <= n:
                raise ValueError(f"position {(i, j)} out of range for n={n}")
        self.n = n
        self.positions = positions
        self.order = tuple(sorted(positions))  # row-major
        self.index = {pos: k for k, pos in enumerate(self.order)}

    @classmethod
    def full(cls, n):
        return cls(n, [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)])

    def is_closed(self):
        pos = self.positions
        return all((i, k) in pos
                   for (i, j) in pos for (j2, k) in pos if j2 == j)

    def __contains__(self, pos):
        return pos in self.positions

    def __len__(self):
        return len(self.positions)

    def __eq__(self, other):
        return (isinstance(other, Pattern)
                and self.n == other.n and self.positions == other.positions)

    def __hash__(self):
        return hash((self.n, self.positions))

    def __repr__(self):
        return f"Pattern(n={self.n}, {len(self.positions)} positions)"


def pattern_is_closed(pattern):
    return pattern.is_closed()


class NilMatrix:
    """A strictly upper triangular matrix supported on a pattern; entries
    are stored as nonzero field-element encodings."""

    __slots__ = ("pattern", "field", "entries", "_rows")

    def __init__(self, pattern, field, entries):
        clean = {}
        for pos, c in entries.items():
            if pos not in pattern.positions:
                raise ValueError(f"entry at {pos} outside the pattern")
            c = c.rep if isinstance(c, FieldElement) else int(c)
            if c:
                clean[pos] = c
        self.pattern = pattern
        self.field = field
        self.entries = clean
        self._rows = None

    @classmethod
    def zero(cls, pattern, field):
        return cls(pattern, field, {})

    @classmethod
    def elementary(cls, pattern, field, i, j, c=1):
        return cls(pattern, field, {(i, j): c})

    def rows(self):
        if self._rows is None:
            rows = {}
            for (i, j), c in self.entries.items():
                rows.setdefault(i, []).append((j, c))
            self._rows = rows
        return self._rows

    def _same(self, other):
        if self.pattern != other.pattern or self.field != other.field:
            raise ValueError("pattern/field mismatch")

    def __add__(self, other):
        self._same(other)
        f = self.field
        out = dict(self.entries)
        for pos, c in other.entries.items():
            s = f.add(out.get(pos, 0), c)
            if s:
                out[pos] = s
            else:
                out.pop(pos, None)
        return NilMatrix(self.pattern, self.field, out)

    def __neg__(self):
        f = self.field
        return NilMatrix(self.pattern, self.field,
                         {pos: f.neg(c) for pos, c in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = c.rep if isinstance(c, FieldElement) else int(c)
        f = self.field
        return NilMatrix(self.pattern, self.field,
                         {pos: f.mul(c, v) for pos, v in self.entries.items()})

    def __matmul__(self, other):
        self._same(other)
        f = self.field
        out = {}
        rows = other.rows()
        for (i, k), a in self.entries.items():
            for j, b in rows.get(k, ()):
                pos = (i, j)
                s = f.add(out.get(pos, 0), f.mul(a, b))
                if s:
                    out[pos] = s
                else:
                    out.pop(pos, None)
        return NilMatrix(self.pattern, self.field, out)

    def power(self, k):
        result = None
        for _ in range(k):
            result = self if result is None else result @ self
        if result is None:
            raise ValueError("power(0) of a nilpotent matrix is not nilpotent")
        return result

    def is_zero(self):
        return not self.entries

    def coeff(self, i, j):
        return self.entries.get((i, j), 0)

    def key(self):
        return tuple(sorted(self.entries.items()))

    def vector(self):
        """Sparse coordinates over the row-major position order."""
        idx = self.pattern.index
        return {idx[pos]: c for pos, c in self.entries.items()}

    @classmethod
    def from_vector(cls, pattern, field, vec):
        order = pattern.order
        return cls(pattern, field, {order[k]: c for k, c in vec.items() if c})

    def __eq__(self, other):
        return (isinstance(other, NilMatrix)
                and self.pattern == other.pattern
                and self.field == other.field
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.pattern.n, self.field.q, self.key()))

    def __repr__(self):
        return f"NilMatrix({dict(sorted(self.entries.items()))})"


class GroupElement:
    """An element 1 + X of the algebra group attached to a pattern algebra."""

    __slots__ = ("body",)

    def __init__(self, body):
        self.body = body

    @classmethod
    def identity(cls, pattern, field):
        return cls(NilMatrix.zero(pattern, field))

    @classmethod
    def one_plus(cls, matrix):
        return cls(matrix)

    def __mul__(self, other):
        x, y = self.body, other.body
        return GroupElement(x + y + (x @ y))

    def inverse(self):
        # (1+X)^(-1) = 1 - X + X^2 - X^3 + ...
        x = self.body
        acc = -x
        term = -x
        while not term.is_zero():
            term = -(term @ x)
            acc = acc + term
        return GroupElement(acc)

    def conjugate(self, other):
        """other * self * other^(-1)."""
        return other * self * other.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = GroupElement.identity(self.body.pattern, self.body.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def order(self):
        k = 1
        g = self
        while not g.body.is_zero():
            g = g * self
            k += 1
        return k

    def entry(self, i, j):
        """Matrix entry of 1 + X."""
        if i == j:
            return 1
        return self.body.coeff(i, j)

    def is_identity(self):
        return self.body.is_zero()

    def key(self):
        return self.body.key()

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.body == other.body

    def __hash__(self):
        return hash(self.body)

    def __repr__(self):
        return f"GroupElement(1 + {dict(sorted(self.body.entries.items()))})"


# ---------------------------------------------------------------------------
# sparse linear algebra over F_q; rows are dicts {column index: encoding}


def _row_sub_scaled(row, factor, other, field):
    """row - factor * other, sparse."""
    out = dict(row)
    for c, v in other.items():
        s = field.sub(out.get(c, 0), field.mul(factor, v))
        if s:
            out[c] = s
        else:
            out.pop(c, None)
    return out


def rref(rows, field):
    """Reduced row echelon form; returns rows sorted by pivot column.

    Pivot rows are kept fully inter-reduced: each pivot row is zero at
    every other pivot column.
    """
    pivots = {}
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            hits = [c for c in row if c in pivots]
            if not hits:
                break
            c = min(hits)
            row = _row_sub_scaled(row, row[c], pivots[c], field)
        if not row:
            continue
        c = min(row)
        inv = field.inv(row[c])
        row = {k: field.mul(inv, v) for k, v in row.items()}
        for c2 in list(pivots):
            prow = pivots[c2]
            if c in prow:
                pivots[c2] = _row_sub_scaled(prow, prow[c], row, field)
        pivots[c] = row
    return [pivots[c] for c in sorted(pivots)]


def residue(vec, rows, field):
    """Reduce vec against echelon rows; zero residue means membership."""
    vec = {c: v for c, v in vec.items() if v}
    by_pivot = {min(r): r for r in rows}
    while vec:
        c = min(vec)
        if c not in by_pivot:
            return vec
        vec = _row_sub_scaled(vec, vec[c], by_pivot[c], field)
    return vec


def left_kernel(rows, width, field):
    """Coefficient vectors c with sum_a c[a] * rows[a] = 0.

    Columns 0..width-1 are the matrix columns; row a is tagged with the
    augmented column width + a so the eliminated combinations survive.
    """
    tagged = []
    for a, row in enumerate(rows):
        t = {c: v for c, v in row.items() if v}
        t[width + a] = 1
        tagged.append(t)
    reduced = rref(tagged, field)
    out = []
    for row in reduced:
        if min(row) >= width:
            out.append({c - width: v for c, v in row.items()})
    return out


class Subspace:
    """An F_q-subspace of a pattern coordinate space in canonical reduced
    row-echelon form."""

    __slots__ = ("pattern", "field", "rows", "pivots", "_mats")

    def __init__(self, pattern, field, rows):
        self.pattern = pattern
        self.field = field
        self.rows = tuple(tuple(sorted(r.items())) for r in rows)
        self.pivots = tuple(r[0][0] for r in self.rows)
        self._mats = None

    @classmethod
    def from_vectors(cls, pattern, field, vectors):
        return cls(pattern, field, rref(list(vectors), field))

    @classmethod
    def from_matrices(cls, pattern, field, mats):
        return cls.from_vectors(pattern, field, [m.vector() for m in mats])

    @classmethod
    def zero(cls, pattern, field):
        return cls(pattern, field, [])

    @classmethod
    def full(cls, pattern, field):
        return cls(pattern, field,
                   [{k: 1} for k in range(len(pattern.order))])

    @property
    def dim(self):
        return len(self.rows)

    def row_dicts(self):
        return [dict(r) for r in self.rows]

    def basis_matrices(self):
        if self._mats is None:
            self._mats = tuple(
                NilMatrix.from_vector(self.pattern, self.field, dict(r))
                for r in self.rows)
        return self._mats

    def contains_vector(self, vec):
        return not residue(vec, self.row_dicts(), self.field)

    def contains(self, mat):
        return self.contains_vector(mat.vector())

    def coordinates(self, mat):
        """Coefficients of mat over the echelon basis, or None."""
        vec = {c: v for c, v in mat.vector().items() if v}
        f = self.field
        coeffs = {}
        by_pivot = {r[0][0]: dict(r) for r in self.rows}
        pivot_pos = {r[0][0]: a for a, r in enumerate(self.rows)}
        while vec:
            c = min(vec)
            if c not in by_pivot:
                return None
            coeffs[pivot_pos[c]] = vec[c]
            vec = _row_sub_scaled(vec, vec[c], by_pivot[c], f)
        return [coeffs.get(a, 0) for a in range(self.dim)]

    def is_subspace_of(self, other):
        rows = other.row_dicts()
        return all(not residue(dict(r), rows, self.field) for r in self.rows)

    def sum_with(self, other):
        return Subspace.from_vectors(
            self.pattern, self.field,
            self.row_dicts() + other.row_dicts())

    def intersection_dim(self, other):
        return self.dim + other.dim - self.sum_with(other).dim

    def restrict_to_zero(self, coords):
        """The subspace of vectors vanishing on the given coordinates."""
        cols = sorted(set(coords))
        col_pos = {c: k for k, c in enumerate(cols)}
        basis_rows = self.row_dicts()
        mrows = []
        for rdict in basis_rows:
            mrows.append({col_pos[c]: v for c, v in rdict.items()
                          if c in col_pos})
        combos = left_kernel(mrows, len(cols), self.field)
        f = self.field
        vectors = []
        for combo in combos:
            vec = {}
            for a, ca in combo.items():
                for c, v in basis_rows[a].items():
                    s = f.add(vec.get(c, 0), f.mul(ca, v))
                    if s:
                        vec[c] = s
                    else:
                        vec.pop(c, None)
            vectors.append(vec)
        return Subspace.from_vectors(self.pattern, self.field, vectors)

    def enumerate_matrices(self, cap=DEFAULT_CAP):
        q = self.field.q
        if q**self.dim > cap:
            raise CapExceeded(f"{q}^{self.dim} elements exceeds cap {cap}")
        mats = self.basis_matrices()
        for coeffs in itertools.product(range(q), repeat=self.dim):
            acc = NilMatrix.zero(self.pattern, self.field)
            for c, m in zip(coeffs, mats):
                if c:
                    acc = acc + m.scale(c)
            yield acc

    def __eq__(self, other):
        return (isinstance(other, Subspace)
                and self.pattern == other.pattern
                and self.field == other.field
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.pattern.n, self.field.q, self.rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {len(self.pattern.order)})"


def solution_space(pattern, field, constraint_rows):
    """Kernel of the linear constraints (rows over position coordinates)."""
    width = len(pattern.order)
    reduced = rref(list(constraint_rows), field)
    pivot_cols = {min(r) for r in reduced}
    free_cols = [c for c in range(width) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        vec = {fc: 1}
        for r in reduced:
            coeff = r.get(fc, 0)
            if coeff:
                vec[min(r)] = field.neg(coeff)
        basis.append(vec)
    return Subspace.from_vectors(pattern, field, basis)


# ---------------------------------------------------------------------------
# nilpotent algebras with a distinguished basis


class NilAlgebra:
    """A nilpotent associative algebra realized inside a pattern coordinate
    space: either the pattern algebra itself or a subalgebra given by an
    echelon basis."""

    __slots__ = ("pattern", "field", "span", "is_pattern", "_basis")

    def __init__(self, pattern, field, span, is_pattern):
        self.pattern = pattern
        self.field = field
        self.span = span
        self.is_pattern = is_pattern
        self._basis = None

    @classmethod
    def pattern_algebra(cls, pattern, field):
        if not pattern.is_closed():
            raise ValueError("pattern is not closed")
        return cls(pattern, field, Subspace.full(pattern, field), True)

    @classmethod
    def from_subspace(cls, span, field, check=True):
        alg = cls(span.pattern, field, span, False)
        if check and not alg.is_closed_under_products():
            raise ValueError("subspace is not closed under products")
        return alg

    @property
    def dim(self):
        return self.span.dim

    @property
    def size(self):
        return self.field.q**self.span.dim

    def basis(self):
        if self._basis is None:
            if self.is_pattern:
                self._basis = tuple(
                    NilMatrix.elementary(self.pattern, self.field, i, j)
                    for i, j in self.pattern.order)
            else:
                self._basis = self.span.basis_matrices()
        return self._basis

    def is_closed_under_products(self):
        basis = self.basis()
        return all(self.span.contains(u @ v) for u in basis for v in basis)

    def is_commutative(self):
        basis = self.basis()
        return all((u @ v) == (v @ u) for u in basis for v in basis)

    def contains(self, mat):
        return self.span.contains(mat)

    def coordinates(self, mat):
        if self.is_pattern:
            idx = self.pattern.index
            out = [0] * len(self.pattern.order)
            for pos, c in mat.entries.items():
                out[idx[pos]] = c
            return out
        coords = self.span.coordinates(mat)
        if coords is None:
            raise ValueError("matrix lies outside the algebra")
        return coords

    def from_coordinates(self, coeffs):
        basis = self.basis()
        acc = NilMatrix.zero(self.pattern, self.field)
        for c, m in zip(coeffs, basis):
            if c:
                acc = acc + m.scale(c)
        return acc

    def identity(self):
        return GroupElement.identity(self.pattern, self.field)

    def enumerate_group(self, cap=DEFAULT_CAP):
        """All q^dim elements of 1 + algebra, in deterministic order."""
        if self.size > cap:
            raise CapExceeded(f"group of size {self.size} exceeds cap {cap}")
        for mat in self.span.enumerate_matrices(cap):
            yield GroupElement(mat)

    def group_generators(self):
        """1 + t*u for basis matrices u and t over an F_p-basis of F_q."""
        out = []
        for u in self.basis():
            for t in self.field.prime_basis():
                out.append(GroupElement(u.scale(t)))
        return out

    def __repr__(self):
        kind = "pattern" if self.is_pattern else "subspace"
        return f"NilAlgebra({kind}, dim={self.dim}, q={self.field.q})"


def enumerate_group(algebra, cap=DEFAULT_CAP):
    return algebra.enumerate_group(cap)


# ---------------------------------------------------------------------------
# truncated exponential / logarithm


def trunc_exp(mat):
    """Exp(X) = 1 + X + X^2/2! + ... + X^(p-1)/(p-1)!."""
    field = mat.field
    p = field.p
    acc = NilMatrix.zero(mat.pattern, field)
    term = None
    fact = 1
    for k in range(1, p):
        term = mat if term is None else term @ mat
        if term.is_zero():
            break
        fact = (fact * k) % p
        acc = acc + term.scale(field.inv(field.from_int(fact)))
    return GroupElement(acc)


def trunc_log(g):
    """Exact inverse of trunc_exp by fixed-point iteration."""
    y = g.body
    x = y
    for _ in range(g.body.pattern.n + 1):
        correction = trunc_exp(x).body - x  # Exp(x) - 1 - x
        x_next = y - correction
        if x_next == x:
            break
        x = x_next
    return x


# ---------------------------------------------------------------------------
# ideals, subalgebras, quotients


def ideal_check(sub, ambient):
    """Classify sub inside the ambient algebra by basis products.

    Returns one of "two-sided-ideal", "right-ideal", "subalgebra", "none".
    ambient may be a NilAlgebra or a Subspace (treated as an algebra basis).
    """
    amb_basis = ambient.basis() if isinstance(ambient, NilAlgebra) \
        else ambient.basis_matrices()
    sub_basis = sub.basis_matrices()
    right = all(sub.contains(u @ v) for u in sub_basis for v in amb_basis)
    left = all(sub.contains(v @ u) for u in sub_basis for v in amb_basis)
    if right and left:
        return "two-sided-ideal"
    if right:
        return "right-ideal"
    if all(sub.contains(u @ v) for u in sub_basis for v in sub_basis):
        return "subalgebra"
    return "none"


@dataclass(frozen=True)
class Projection:
    """The projection maps of a vector-space splitting ambient = sub + ideal
    with sub a subalgebra and ideal a two-sided ideal."""

    sub: Subspace
    ideal: Subspace

    def project_matrix(self, mat):
        coords = _split_coordinates(self.sub, self.ideal, mat)
        acc = NilMatrix.zero(mat.pattern, mat.field)
        for c, m in zip(coords[: self.sub.dim], self.sub.basis_matrices()):
            if c:
                acc = acc + m.scale(c)
        return acc

    def project_group(self, g):
        return GroupElement(self.project_matrix(g.body))


def _split_coordinates(sub, ideal, mat):
    field = sub.field
    rows = []
    for r in sub.rows:
        rows.append(dict(r))
    for r in ideal.rows:
        rows.append(dict(r))
    width = len(sub.pattern.order)
    target = mat.vector()
    # solve sum c_a rows[a] = target by elimination with an augmented column
    tagged = []
    for a, row in enumerate(rows):
        t = dict(row)
        t[width + a] = 1
        tagged.append(t)
    reduced = rref(tagged, field)
    vec = {c: v for c, v in target.items() if v}
    coeffs = [0] * len(rows)
    by_pivot = {min(r): r for r in reduced}
    while vec:
        c = min(vec)
        prow = by_pivot.get(c)
        if prow is None or c >= width:
            raise ValueError("matrix is outside the direct sum")
        factor = vec[c]
        vec = _row_sub_scaled(vec, factor, {k: v for k, v in prow.items()
                                            if k < width}, field)
        for k, v in prow.items():
            if k >= width:
                coeffs[k - width] = field.add(coeffs[k - width],
                                              field.mul(factor, v))
    return coeffs


def quotient_project(ambient, sub, ideal):
    """Projection onto the subalgebra along the ideal; requires
    ambient = sub (+) ideal as vector spaces."""
    ambient_span = ambient.span if isinstance(ambient, NilAlgebra) else ambient
    if sub.sum_with(ideal).dim != sub.dim + ideal.dim:
        raise ValueError("decomposition is not direct")
    if sub.sum_with(ideal) != ambient_span:
        raise ValueError("sub + ideal does not span the ambient space")
    if ideal_check(ideal, ambient_span) != "two-sided-ideal":
        raise ValueError("complement is not a two-sided ideal")
    NilAlgebra.from_subspace(sub, sub.field)  # validates closure
    return Projection(sub, ideal)
