"""Quantum torus context: q-matrix, the 2-cocycle d, center lattice, c-scalars.

The cocycle d(alpha, beta) = prod_{i>j} q_ij^(alpha_i beta_j) satisfies
x^alpha x^beta = d(alpha, beta) x^(alpha+beta).  The center lattice Gamma_Z is
the integer kernel of the commutation pairing, solved exactly from the
explicit exponent data of the q entries; its HNF basis is fixed once and all
c-values are taken relative to that choice.
"""

from fractions import Fraction

from .errors import (DimensionMismatch, NotCentral, UnsupportedScalar,
                     ZeroCoefficient)
from .gf import GFBackend, GFElem
from .lattice import congruence_kernel, member_solve
from .scalars import CharZeroBackend, ToricScalar

_DLOG_LIMIT = 1 << 20


class QMatrix:
    """Multiplicatively skew-symmetric matrix of toric scalars."""

    def __init__(self, backend, n, upper):
        """upper maps (i, j) with 1 <= i < j <= n to the scalar q_ij."""
        self.backend = backend
        self.n = n
        one = _one(backend)
        self.entries = [[one for _ in range(n)] for _ in range(n)]
        for (i, j), val in upper.items():
            if not 1 <= i < j <= n:
                raise DimensionMismatch(f"q[{i}][{j}] is not an upper-triangle entry")
            self.entries[i - 1][j - 1] = val
            self.entries[j - 1][i - 1] = val.inv()

    def q(self, i, j):
        """Entry q_ij with 1-based indices."""
        return self.entries[i - 1][j - 1]

    def is_trivial(self):
        one = _one(self.backend)
        return all(self.entries[i][j] == one
                   for i in range(self.n) for j in range(self.n))

    def submatrix(self, indices):
        """QMatrix on the 1-based index subset, in ascending order."""
        idx = sorted(indices)
        upper = {}
        for a, i in enumerate(idx, start=1):
            for b, j in enumerate(idx, start=1):
                if a < b:
                    upper[(a, b)] = self.q(i, j)
        return QMatrix(self.backend, len(idx), upper)


def _one(backend):
    return backend.one() if isinstance(backend, GFBackend) else backend.toric_one()


def d_value(q, alpha, beta):
    """The cocycle scalar with x^alpha x^beta = d(alpha,beta) x^(alpha+beta)."""
    if len(alpha) != q.n or len(beta) != q.n:
        raise DimensionMismatch("exponent vectors must have length n")
    out = _one(q.backend)
    for i in range(2, q.n + 1):
        ai = alpha[i - 1]
        if not ai:
            continue
        for j in range(1, i):
            bj = beta[j - 1]
            if bj:
                out = out * q.q(i, j).pow(ai * bj)
    return out


def commutator(q, alpha, beta):
    """kappa(alpha,beta) = d(alpha,beta)/d(beta,alpha); x^a x^b = kappa x^b x^a."""
    return d_value(q, alpha, beta) * d_value(q, beta, alpha).inv()


def monomial_mul(q, a, b):
    """(lam, alpha) * (mu, beta) = (lam mu d(alpha,beta), alpha + beta)."""
    (lam, alpha), (mu, beta) = a, b
    if _is_zero_coeff(lam) or _is_zero_coeff(mu):
        raise ZeroCoefficient("monomials need nonzero coefficients")
    return (lam * mu * d_value(q, alpha, beta),
            tuple(x + y for x, y in zip(alpha, beta)))


def monomial_inv(q, a):
    """(lam, alpha)^(-1) = (lam^(-1) d(alpha,alpha), -alpha)."""
    lam, alpha = a
    if _is_zero_coeff(lam):
        raise ZeroCoefficient("monomials need nonzero coefficients")
    return (lam.inv() * d_value(q, alpha, alpha), tuple(-x for x in alpha))


def monomial_pow(q, a, k):
    """(lam, alpha)^k using (x^a)^m = d(a,a)^(m(m-1)/2) x^(ma)."""
    lam, alpha = a
    if k == 0:
        return (_one(q.backend), (0,) * q.n)
    if k < 0:
        return monomial_pow(q, monomial_inv(q, a), -k)
    daa = d_value(q, alpha, alpha)
    coeff = lam.pow(k) * daa.pow(k * (k - 1) // 2)
    return (coeff, tuple(k * x for x in alpha))


def _is_zero_coeff(c):
    return hasattr(c, "is_zero") and c.is_zero() and not isinstance(c, ToricScalar)


class TorusContext:
    """A quantum torus with its fixed center basis and c-value cache."""

    def __init__(self, qmatrix):
        self.q = qmatrix
        self.n = qmatrix.n
        self.backend = qmatrix.backend
        self.gamma_z = _center_lattice(qmatrix)
        self.center_basis = self.gamma_z.basis
        self._c_cache = {}

    def d(self, alpha, beta):
        return d_value(self.q, alpha, beta)

    def is_central(self, alpha):
        return member_solve(self.gamma_z, alpha) is not None

    def c(self, gamma):
        """Scalar with (x^b1)^m1 ... (x^br)^mr = c(gamma) x^gamma."""
        gamma = tuple(gamma)
        if gamma in self._c_cache:
            return self._c_cache[gamma]
        coeffs = member_solve(self.gamma_z, gamma)
        if coeffs is None:
            raise NotCentral(f"{gamma} is not in the center lattice")
        acc = (_one(self.backend), (0,) * self.n)
        for m, row in zip(coeffs, self.center_basis):
            if m:
                acc = monomial_mul(self.q, acc, monomial_pow(self.q, (_one(self.backend), row), m))
        assert acc[1] == gamma
        self._c_cache[gamma] = acc[0]
        return acc[0]

    def field_one(self):
        return self.backend.one()

    def subcontext(self, indices):
        """Context for the quantum torus on the 1-based variable subset."""
        return TorusContext(self.q.submatrix(indices))


def gamma_z(qmatrix):
    """TorusContext with the center lattice of the given q-matrix."""
    return TorusContext(qmatrix)


def _center_lattice(qmatrix):
    n, backend = qmatrix.n, qmatrix.backend
    if isinstance(backend, CharZeroBackend):
        return _center_char0(qmatrix)
    return _center_gf(qmatrix)


def _center_char0(qmatrix):
    n = qmatrix.n
    backend = qmatrix.backend
    # centrality of x^alpha: for each i, prod_j q_ij^(alpha_j) = 1
    free_axes = set()
    for i in range(n):
        for j in range(n):
            ent = qmatrix.entries[i][j]
            for p, _ in ent.primes:
                free_axes.add(("p", p))
            for idx, f in enumerate(ent.params):
                if f:
                    free_axes.add(("t", idx))
    free_axes = sorted(free_axes)
    exact_rows, torsion_rows, moduli = [], [], []
    for i in range(n):
        for axis in free_axes:
            row = []
            for j in range(n):
                ent = qmatrix.entries[i][j]
                if axis[0] == "p":
                    e = dict(ent.primes).get(axis[1], Fraction(0))
                else:
                    e = ent.params[axis[1]]
                row.append(e)
            if any(row):
                den = 1
                for e in row:
                    den = den * e.denominator // _gcd(den, e.denominator)
                exact_rows.append(tuple(int(e * den) for e in row))
        zrow = [qmatrix.entries[i][j].zeta for j in range(n)]
        if any(zrow):
            den = 1
            for e in zrow:
                den = den * e.denominator // _gcd(den, e.denominator)
            torsion_rows.append(tuple(int(e * den) for e in zrow))
            moduli.append(den)
    return congruence_kernel(exact_rows, torsion_rows, moduli, n)


def _center_gf(qmatrix):
    n = qmatrix.n
    backend = qmatrix.backend
    m = 1
    for i in range(n):
        for j in range(n):
            d = qmatrix.entries[i][j].deg
            m = m * d // _gcd(m, d)
    order = backend.p ** m - 1
    if backend.p ** m > _DLOG_LIMIT:
        raise UnsupportedScalar(
            f"q entries generate GF({backend.p}^{m}), too large for discrete logs")
    from .gf import _dlog
    F = backend._tower.field(m)
    gen = F.gen()
    torsion_rows, moduli = [], []
    for i in range(n):
        row = []
        for j in range(n):
            ent = qmatrix.entries[i][j]
            lifted = backend._tower.embed(ent.coeffs, ent.deg, m)
            row.append(_dlog(F, gen, lifted, order))
        if any(row):
            torsion_rows.append(tuple(row))
            moduli.append(order)
    return congruence_kernel([], torsion_rows, moduli, n)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# free-module elements of T_q (and A_q): exponent -> coefficient maps


def element_add(f, g):
    out = dict(f)
    for k, c in g.items():
        s = out[k] + c if k in out else c
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


def element_neg(f):
    return {k: -c for k, c in f.items()}


def element_scale(f, s):
    if s.is_zero():
        return {}
    return {k: c * s for k, c in f.items()}


def element_mul(ctx, f, g):
    out = {}
    for a, ca in f.items():
        for b, cb in g.items():
            d = ctx.d(a, b)
            key = tuple(x + y for x, y in zip(a, b))
            term = ca * cb * _to_field(ctx, d)
            if key in out:
                term = out[key] + term
            if term.is_zero():
                out.pop(key, None)
            else:
                out[key] = term
    return out


def element_equal(f, g):
    if set(f) != set(g):
        return False
    return all(f[k] == g[k] for k in f)


def _to_field(ctx, scalar):
    if isinstance(scalar, ToricScalar):
        return scalar.to_field()
    return scalar


def monomial_element(ctx, coeff, alpha):
    c = _to_field(ctx, coeff)
    return {} if c.is_zero() else {tuple(alpha): c}
