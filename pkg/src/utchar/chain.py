"""The alternating left-kernel chain of subspaces attached to a functional,
its stabilization, and the combinatorial fast path for quasi-monomial
functionals on pattern algebras."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Subspace, ideal_check, left_kernel
from .duals import Functional, is_quasi_monomial


@dataclass
class ChainResult:
    """The ascending/descending chain 0 = l^0 <= l^1 <= ... <= s^1 <= s^0
    with its stabilization data and derived exponents."""

    algebra: object
    functional: Functional
    l_list: list
    s_list: list
    d: int

    @property
    def l_bar(self):
        return self.l_list[-1]

    @property
    def s_bar(self):
        return self.s_list[-1]

    @property
    def degree_exponent(self):
        """dim n - dim l_bar; the degree of the induced character is
        q to this exponent."""
        return self.algebra.dim - self.l_bar.dim

    @property
    def norm_exponent(self):
        """dim s_bar - dim l_bar; the norm of the induced character is
        q to this exponent."""
        return self.s_bar.dim - self.l_bar.dim

    @property
    def chi_degree_exponent(self):
        return self.algebra.dim - self.l_list[1].dim

    @property
    def chi_norm_exponent(self):
        return self.s_list[1].dim - self.l_list[1].dim

    def validate(self):
        """Assert the chain containments and the subalgebra/ideal laws."""
        for i in range(len(self.l_list) - 1):
            assert self.l_list[i].is_subspace_of(self.l_list[i + 1])
        for i in range(len(self.s_list) - 1):
            assert self.s_list[i + 1].is_subspace_of(self.s_list[i])
        assert self.l_bar.is_subspace_of(self.s_bar)
        for i in range(1, len(self.s_list)):
            assert ideal_check(self.s_list[i], self.s_list[i - 1]) in (
                "subalgebra", "right-ideal", "two-sided-ideal")
            assert ideal_check(self.l_list[i], self.s_list[i - 1]) in (
                "right-ideal", "two-sided-ideal")
            assert ideal_check(self.l_list[i], self.s_list[i]) == \
                "two-sided-ideal"
        return True


def _restricted_left_kernel(lam, left_space, right_space):
    """{X in left_space : lam(X Y) = 0 for all Y in right_space} as a
    canonical subspace."""
    algebra = lam.algebra
    field = algebra.field
    lmats = left_space.basis_matrices()
    rmats = right_space.basis_matrices()
    rows = []
    for u in lmats:
        row = {}
        for c, w in enumerate(rmats):
            v = lam.evaluate(u @ w)
            if v:
                row[c] = v
        rows.append(row)
    coeff_vectors = left_kernel(rows, len(rmats), field)
    vectors = []
    for coeffs in coeff_vectors:
        vec = {}
        for a, ca in coeffs.items():
            for col, v in lmats[a].vector().items():
                s = field.add(vec.get(col, 0), field.mul(ca, v))
                if s:
                    vec[col] = s
                else:
                    vec.pop(col, None)
        vectors.append(vec)
    return Subspace.from_vectors(algebra.pattern, field, vectors)


def chain_compute(algebra, lam, validate=False):
    """Run the inductive kernel chain for lam on the algebra until the
    descending side stabilizes."""
    field = algebra.field
    s_list = [algebra.span]
    l_list = [Subspace.zero(algebra.pattern, field)]
    for _ in range(algebra.dim + 1):
        s_prev = s_list[-1]
        l_next = _restricted_left_kernel(lam, s_prev, s_prev)
        s_next = _restricted_left_kernel(lam, s_prev, l_next)
        l_list.append(l_next)
        s_list.append(s_next)
        if s_next == s_prev:
            break
    else:
        raise AssertionError("chain failed to stabilize")
    result = ChainResult(algebra, lam, l_list, s_list, len(s_list) - 1)
    if validate:
        result.validate()
    return result


# ---------------------------------------------------------------------------
# quasi-monomial fast path


@dataclass(frozen=True)
class QuasimonomialKernels:
    """First chain step computed combinatorially: the obstructed position
    sets, the cut-out subspaces, and the affine description of the right
    orbit."""

    perp_l: frozenset
    perp_s: frozenset
    l1: Subspace
    s1: Subspace
    base: Functional
    right_orbit_positions: frozenset  # lam G = lam + span{e*_pos}

    def right_orbit_size(self):
        return self.base.algebra.field.q ** len(self.right_orbit_positions)


def quasimonomial_kernels(algebra, lam):
    """Combinatorial kernels for a quasi-monomial functional on a pattern
    algebra: perp_l collects positions (i, j) such that some lambda_ik != 0
    with (j, k) in the pattern; perp_s additionally requires (j, k) outside
    perp_l."""
    if not algebra.is_pattern:
        raise ValueError("fast path requires a pattern algebra")
    if not is_quasi_monomial(lam):
        raise ValueError("functional is not quasi-monomial")
    pos = algebra.pattern.positions
    row_entry = {i: k for (i, k) in lam.entries()}
    perp_l = frozenset(
        (i, j) for (i, j) in pos
        if i in row_entry and (j, row_entry[i]) in pos)
    perp_s = frozenset(
        (i, j) for (i, j) in perp_l
        if (j, row_entry[i]) not in perp_l)
    field = algebra.field
    index = algebra.pattern.index

    def cut(excluded):
        vecs = [{index[p]: 1} for p in algebra.pattern.order
                if p not in excluded]
        return Subspace.from_vectors(algebra.pattern, field, vecs)

    return QuasimonomialKernels(
        perp_l=perp_l,
        perp_s=perp_s,
        l1=cut(perp_l),
        s1=cut(perp_s),
        base=lam,
        right_orbit_positions=perp_l,
    )


def quasimonomial_irreducible(algebra, lam, validate=False):
    """Verify l_bar = s_bar for a quasi-monomial functional; returns the
    chain together with the verdict (expected True on closed patterns)."""
    fast = quasimonomial_kernels(algebra, lam)
    chain = chain_compute(algebra, lam, validate=validate)
    assert chain.l_list[1] == fast.l1 and chain.s_list[1] == fast.s1, \
        "fast path disagrees with the kernel chain"
    return chain.l_bar == chain.s_bar, chain
