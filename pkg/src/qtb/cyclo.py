"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored as polynomials of degree < phi(N) in a fixed primitive
N-th root of unity, reduced modulo the N-th cyclotomic polynomial.  The
conductor N is per-value and grows by lcm under arithmetic; values whose
vector is constant collapse to conductor 1 eagerly, full minimal-conductor
reduction happens in reduced(), which printing and hashing rely on.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd


def factor_int(n):
    """Trial-division factorization, returns {prime: exponent}."""
    if n <= 0:
        raise ValueError("factor_int expects a positive integer")
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@lru_cache(maxsize=None)
def euler_phi(n):
    out = n
    for p in factor_int(n):
        out = out // p * (p - 1)
    return out


def _poly_mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod_int(a, b):
    # b monic; exact integer division is all we need for cyclotomics
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    q = [0] * max(da - db + 1, 1)
    while da >= db and any(a):
        c = a[da]
        if c:
            q[da - db] = c
            for j in range(db + 1):
                a[da - db + j] -= c * b[j]
        da -= 1
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return q, a


@lru_cache(maxsize=None)
def cyclotomic(n):
    """Coefficients (ascending) of the n-th cyclotomic polynomial."""
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod_int(num, list(cyclotomic(d)))
            assert rem == [0], "cyclotomic division must be exact"
    return tuple(num)


def _rem_mod_cyclo(vec, n):
    """Reduce a Fraction coefficient list modulo cyclotomic(n)."""
    mod = cyclotomic(n)
    deg = len(mod) - 1
    v = list(vec)
    for i in range(len(v) - 1, deg - 1, -1):
        c = v[i]
        if c:
            for j in range(deg + 1):
                v[i - deg + j] -= c * mod[j]
        v.pop()
    while len(v) < deg:
        v.append(Fraction(0))
    return v[:deg]


class CycRat:
    """An element of Q(zeta_N) for the per-value conductor N."""

    __slots__ = ("n", "v")

    def __init__(self, n, v):
        self.n = n
        self.v = tuple(v)

    @staticmethod
    def from_rational(q):
        return CycRat(1, (Fraction(q),))

    @staticmethod
    def zero():
        return CycRat(1, (Fraction(0),))

    @staticmethod
    def one():
        return CycRat(1, (Fraction(1),))

    @staticmethod
    def zeta_power(q):
        """zeta^q for a rational exponent q taken modulo 1."""
        q = Fraction(q) % 1
        n = q.denominator
        if n == 1:
            return CycRat.from_rational(1)
        vec = [Fraction(0)] * (q.numerator + 1)
        vec[q.numerator] = Fraction(1)
        return _make(n, _rem_mod_cyclo(vec, n))

    def is_zero(self):
        return all(c == 0 for c in self.v)

    def is_rational(self):
        return self.n == 1

    def rational_value(self):
        if self.n != 1:
            raise ValueError("not reduced to a rational")
        return self.v[0]

    def _lift(self, m):
        """Rewrite in Q(zeta_m) for n | m via zeta_n = zeta_m^(m/n)."""
        if m == self.n:
            return list(self.v)
        step = m // self.n
        out = [Fraction(0)] * ((len(self.v) - 1) * step + 1)
        for i, c in enumerate(self.v):
            if c:
                out[i * step] += c
        return _rem_mod_cyclo(out, m)

    def __add__(self, other):
        m = self.n * other.n // gcd(self.n, other.n)
        a, b = self._lift(m), other._lift(m)
        return _make(m, [x + y for x, y in zip(a, b)])

    def __sub__(self, other):
        m = self.n * other.n // gcd(self.n, other.n)
        a, b = self._lift(m), other._lift(m)
        return _make(m, [x - y for x, y in zip(a, b)])

    def __neg__(self):
        return CycRat(self.n, tuple(-c for c in self.v))

    def __mul__(self, other):
        m = self.n * other.n // gcd(self.n, other.n)
        a, b = self._lift(m), other._lift(m)
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return _make(m, _rem_mod_cyclo(prod, m))

    def scale(self, q):
        q = Fraction(q)
        return _make(self.n, [c * q for c in self.v])

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic")
        if self.n == 1:
            return CycRat(1, (1 / self.v[0],))
        # extended Euclid against the cyclotomic polynomial
        mod = [Fraction(c) for c in cyclotomic(self.n)]
        r0, r1 = mod, list(self.v)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(c != 0 for c in r1):
            q, r = _frac_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _frac_sub(s0, _frac_mul(q, s1))
        lead = r0[_deg(r0)]
        if _deg(r0) != 0:
            raise ZeroDivisionError("element not invertible mod cyclotomic")
        inv_vec = [c / lead for c in s0]
        return _make(self.n, _rem_mod_cyclo(inv_vec, self.n))

    def pow(self, k):
        if k < 0:
            return self.inv().pow(-k)
        out = CycRat.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, CycRat):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        n, v = self.reduced()
        return hash((n, v))

    def reduced(self):
        """Minimal-conductor form (m, coeff tuple), canonical for printing."""
        n, v = self.n, list(self.v)
        changed = True
        while changed and n > 1:
            changed = False
            for m in sorted(d for d in range(1, n) if n % d == 0):
                sol = _subfield_coords(v, n, m)
                if sol is not None:
                    n, v = m, sol
                    changed = True
                    break
        return n, tuple(v)

    def __repr__(self):
        n, v = self.reduced()
        if n == 1:
            return str(v[0])
        terms = []
        for i, c in enumerate(v):
            if c:
                terms.append(f"{c}*z^{i}/{n}" if i else str(c))
        return " + ".join(terms) if terms else "0"


def _make(n, vec):
    vec = list(vec)
    if n > 1 and all(c == 0 for c in vec[1:]):
        return CycRat(1, (vec[0],))
    return CycRat(n, tuple(vec))


def _deg(p):
    for i in range(len(p) - 1, -1, -1):
        if p[i] != 0:
            return i
    return 0


def _frac_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _frac_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return out


def _frac_divmod(a, b):
    a = list(a)
    db = _deg(b)
    lead = b[db]
    q = [Fraction(0)] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            f = c / lead
            q[i - db] = f
            for j in range(db + 1):
                a[i - db + j] -= f * b[j]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return q, a


def _subfield_coords(vec, n, m):
    """Coordinates of vec (in Q(zeta_n)) over Q(zeta_m), or None.

    Solves sum_j a_j * zeta_n^(j n/m) = vec by exact Gaussian elimination.
    """
    if n % m != 0:
        return None
    dim_n, dim_m = euler_phi(n), euler_phi(m)
    basis = []
    step = n // m
    for j in range(dim_m):
        col = [Fraction(0)] * (j * step + 1)
        col[j * step] = Fraction(1)
        basis.append(_rem_mod_cyclo(col, n))
    # solve basis^T a = vec
    rows = [[basis[j][i] for j in range(dim_m)] + [vec[i]] for i in range(dim_n)]
    piv_cols = []
    r = 0
    for c in range(dim_m):
        piv = next((i for i in range(r, dim_n) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(dim_n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, dim_n):
        if rows[i][dim_m] != 0:
            return None
    sol = [Fraction(0)] * dim_m
    for i, c in enumerate(piv_cols):
        sol[c] = rows[i][dim_m]
    return sol
