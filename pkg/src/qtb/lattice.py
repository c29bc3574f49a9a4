"""Exact integer-lattice arithmetic over Z^n.

Row-style Hermite normal form with positive pivots and entries above each
pivot reduced into [0, pivot), so equal lattices have identical basis
matrices.  Smith normal form tracks the unimodular transforms needed for
adapted bases and saturations.
"""

from dataclasses import dataclass

from .errors import DimensionMismatch, NotSublattice


def _hnf_rows(rows):
    """Row HNF with transform: returns (hnf_rows, U) with U @ rows = hnf."""
    m = len(rows)
    work = [list(r) for r in rows]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    n = len(rows[0]) if rows else 0
    row = 0
    for col in range(n):
        piv = None
        for i in range(row, m):
            if work[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        work[row], work[piv] = work[piv], work[row]
        u[row], u[piv] = u[piv], u[row]
        # clear below via gcd steps
        for i in range(row + 1, m):
            while work[i][col] != 0:
                q = work[row][col] // work[i][col]
                work[row] = [a - q * b for a, b in zip(work[row], work[i])]
                u[row] = [a - q * b for a, b in zip(u[row], u[i])]
                work[row], work[i] = work[i], work[row]
                u[row], u[i] = u[i], u[row]
        if work[row][col] < 0:
            work[row] = [-a for a in work[row]]
            u[row] = [-a for a in u[row]]
        for i in range(row):
            q = work[i][col] // work[row][col]
            if q:
                work[i] = [a - q * b for a, b in zip(work[i], work[row])]
                u[i] = [a - q * b for a, b in zip(u[i], u[row])]
        row += 1
    return [r for r in work[:row]], work, u, row


@dataclass(frozen=True)
class Lattice:
    """A sublattice of Z^n held by its canonical HNF basis."""

    ambient_dim: int
    basis: tuple

    @property
    def rank(self):
        return len(self.basis)

    def __repr__(self):
        rows = ",".join("(" + ",".join(str(x) for x in r) + ")" for r in self.basis)
        return f"Lattice(n={self.ambient_dim}, rows=[{rows}])"

    def contains(self, vec):
        return member_solve(self, vec) is not None

    def is_sublattice_of(self, other):
        return all(other.contains(r) for r in self.basis)


def hnf_basis(rows, n):
    """Canonical lattice spanned by the given integer rows in Z^n."""
    rows = [tuple(r) for r in rows]
    for r in rows:
        if len(r) != n:
            raise DimensionMismatch(f"row {r} does not have length {n}")
    if not rows:
        return Lattice(n, ())
    hnf, _, _, _ = _hnf_rows(rows)
    return Lattice(n, tuple(tuple(r) for r in hnf))


def zero_lattice(n):
    return Lattice(n, ())


def full_lattice(n):
    return Lattice(n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def _pivot_cols(basis):
    cols = []
    for r in basis:
        for j, x in enumerate(r):
            if x != 0:
                cols.append(j)
                break
    return cols


def member_solve(lat, vec):
    """Integer coefficients expressing vec over the HNF basis, or None."""
    vec = list(vec)
    if len(vec) != lat.ambient_dim:
        raise DimensionMismatch(
            f"vector length {len(vec)} vs ambient dimension {lat.ambient_dim}")
    coeffs = []
    for row, col in zip(lat.basis, _pivot_cols(lat.basis)):
        piv = row[col]
        if vec[col] % piv != 0:
            return None
        m = vec[col] // piv
        coeffs.append(m)
        if m:
            vec = [a - m * b for a, b in zip(vec, row)]
    return tuple(coeffs) if not any(vec) else None


def coset_rep(lat, vec):
    """Canonical representative of vec + L via floor reduction by pivots."""
    vec = list(vec)
    if len(vec) != lat.ambient_dim:
        raise DimensionMismatch(
            f"vector length {len(vec)} vs ambient dimension {lat.ambient_dim}")
    for row, col in zip(lat.basis, _pivot_cols(lat.basis)):
        m = vec[col] // row[col]
        if m:
            vec = [a - m * b for a, b in zip(vec, row)]
    return tuple(vec)


def solve_in_rows(rows, n, vec):
    """Integer solution x with x @ rows = vec, or None (rows need not be HNF)."""
    if not rows:
        return () if not any(vec) else None
    hnf, _, u, rank = _hnf_rows([tuple(r) for r in rows])
    lat = Lattice(n, tuple(tuple(r) for r in hnf))
    c = member_solve(lat, vec)
    if c is None:
        return None
    out = [0] * len(rows)
    for ci, urow in zip(c, u[:rank]):
        for j, uj in enumerate(urow):
            out[j] += ci * uj
    return tuple(out)


def smith_normal_form(mat, rows, cols):
    """Return (d, U, V, Vinv) with U @ mat @ V diagonal, d the diagonal.

    Divisibility d[0] | d[1] | ... holds and diagonal entries are nonnegative.
    """
    a = [list(r) for r in mat]
    U = [[int(i == j) for j in range(rows)] for i in range(rows)]
    V = [[int(i == j) for j in range(cols)] for i in range(cols)]
    Vinv = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def row_op(i, j, q):  # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        U[i] = [x - q * y for x, y in zip(U[i], U[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in a:
            r[i] -= q * r[j]
        for r in V:
            r[i] -= q * r[j]
        Vinv[j] = [x + q * y for x, y in zip(Vinv[j], Vinv[i])]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    t = 0
    while t < min(rows, cols):
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0:
                    if piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]]):
                        piv = (i, j)
        if piv is None:
            break
        row_swap(t, piv[0])
        col_swap(t, piv[1])
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_op(i, t, q)
                    if a[i][t]:
                        row_swap(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_op(j, t, q)
                    if a[t][j]:
                        col_swap(t, j)
                        dirty = True
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    # enforce divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(min(rows, cols) - 1):
            di, dj = a[i][i], a[i + 1][i + 1]
            if di and dj % di != 0:
                # standard fixup: add col i+1 to col i, re-eliminate the block
                col_op(i, i + 1, -1)
                _egcd_reduce(a, U, V, Vinv, i, rows, cols)
                changed = True
    d = [a[i][i] for i in range(min(rows, cols))]
    return d, U, V, Vinv


def _egcd_reduce(a, U, V, Vinv, t, rows, cols):
    """Re-clear the 2x2 block after a divisibility fixup at position t."""

    def row_op(i, j, q):
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        U[i] = [x - q * y for x, y in zip(U[i], U[j])]

    def col_op(i, j, q):
        for r in a:
            r[i] -= q * r[j]
        for r in V:
            r[i] -= q * r[j]
        Vinv[j] = [x + q * y for x, y in zip(Vinv[j], Vinv[i])]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    dirty = True
    while dirty:
        dirty = False
        for i in range(t + 1, rows):
            if a[i][t]:
                q = a[i][t] // a[t][t] if a[t][t] else 0
                row_op(i, t, q)
                if a[i][t]:
                    row_swap(t, i)
                    dirty = True
        for j in range(t + 1, cols):
            if a[t][j]:
                q = a[t][j] // a[t][t] if a[t][t] else 0
                col_op(j, t, q)
                if a[t][j]:
                    col_swap(t, j)
                    dirty = True
    if a[t][t] < 0:
        a[t] = [-x for x in a[t]]
        U[t] = [-x for x in U[t]]
    return True


@dataclass(frozen=True)
class AdaptedBasisReport:
    """SNF-adapted basis data for a finite (or mixed) lattice quotient."""

    sup_basis: tuple
    invariant_factors: tuple
    free_rank: int

    @property
    def torsion_order(self):
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out


def adapted_basis(sub, sup):
    """Basis (f_i) of sup and factors (d_i) with (d_i f_i) a basis of sub."""
    if not sub.is_sublattice_of(sup):
        raise NotSublattice("adapted_basis: first lattice not inside second")
    if sub.rank == 0:
        return AdaptedBasisReport(sup.basis, (), sup.rank)
    coords = [member_solve(sup, r) for r in sub.basis]
    d, U, V, Vinv = smith_normal_form(coords, sub.rank, sup.rank)
    # rows of Vinv @ sup.basis give the adapted basis of sup
    f = []
    for i in range(sup.rank):
        row = [0] * sup.ambient_dim
        for j, vj in enumerate(Vinv[i]):
            if vj:
                row = [x + vj * y for x, y in zip(row, sup.basis[j])]
        f.append(tuple(row))
    factors = tuple(d[: sub.rank])
    assert all(x > 0 for x in factors), "sublattice of equal rank has positive factors"
    return AdaptedBasisReport(tuple(f), factors, sup.rank - sub.rank)


def saturate(sub, ambient, mode="full", p=None):
    """Saturation closures of sub inside ambient.

    mode "full": alpha with k*alpha in sub for some k >= 1.
    mode "p-part": alpha with p^l * alpha in sub.
    mode "prime-to-p": the largest intermediate lattice of index prime to p.
    """
    if mode != "full" and (p is None or p < 2):
        raise ValueError("p-part and prime-to-p modes need a prime p")
    rep = adapted_basis(sub, ambient)
    rows = []
    for i, d in enumerate(rep.invariant_factors):
        f = rep.sup_basis[i]
        if mode == "full":
            scale = 1
        elif mode == "p-part":
            scale = d
            while scale % p == 0:
                scale //= p
        elif mode == "prime-to-p":
            scale = 1
            dd = d
            while dd % p == 0:
                scale *= p
                dd //= p
        else:
            raise ValueError(f"unknown saturation mode {mode!r}")
        rows.append(tuple(x * scale for x in f))
    return hnf_basis(rows, sub.ambient_dim)


def integer_kernel(rows, n):
    """Basis of {x in Z^len(rows) : x @ rows = 0}; rows are length-n vectors."""
    if not rows:
        return []
    _, work, u, rank = _hnf_rows([tuple(r) for r in rows])
    return [tuple(r) for r in u[rank:]]


def kernel_of_columns(mat_rows, n_vars):
    """Basis of {alpha in Z^n_vars : mat @ alpha = 0} for integer rows."""
    cols = [tuple(r[j] for r in mat_rows) for j in range(n_vars)]
    if not mat_rows:
        return [tuple(int(i == j) for j in range(n_vars)) for i in range(n_vars)]
    ker = integer_kernel(cols, len(mat_rows))
    return ker


def congruence_kernel(exact_rows, torsion_rows, moduli, n):
    """Integer solutions of exact_rows @ a = 0 and torsion_rows @ a = 0 mod m.

    Implemented by adjoining m * e_i slack columns and projecting the kernel.
    """
    rows = []
    n_slack = len(torsion_rows)
    for r in exact_rows:
        rows.append(tuple(r) + (0,) * n_slack)
    for i, (r, m) in enumerate(zip(torsion_rows, moduli)):
        slack = [0] * n_slack
        slack[i] = m
        rows.append(tuple(r) + tuple(slack))
    ker = kernel_of_columns(rows, n + n_slack) if rows else \
        [tuple(int(i == j) for j in range(n)) for i in range(n)]
    projected = [k[:n] for k in ker]
    return hnf_basis(projected, n)
