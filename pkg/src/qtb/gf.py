"""Finite field towers GF(p^m) with coherent subfield embeddings.

Each prime gets one deterministic tower.  The degree-m modulus is the minimal
polynomial of the first norm-compatible generator found in a fixed
enumeration, so its residue class x is a multiplicative generator and the
embeddings GF(p^d) -> GF(p^m), g_d -> x^((p^m-1)/(p^d-1)), commute across the
whole divisor lattice.  Elements always store their minimal subfield degree.
"""

from math import gcd

from .cyclo import factor_int
from .errors import RootUnavailable


def _poly_trim(a):
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


class _Field:
    """GF(p^m) as F_p[x]/modulus, coefficient tuples in ascending degree."""

    def __init__(self, p, m, modulus):
        self.p = p
        self.m = m
        self.modulus = tuple(modulus)  # monic, length m+1
        self.order = p ** m

    def zero(self):
        return (0,) * self.m

    def one(self):
        return (1,) + (0,) * (self.m - 1)

    def gen(self):
        if self.m == 1:
            return ((-self.modulus[0]) % self.p,)
        return (0, 1) + (0,) * (self.m - 2)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        p, m = self.p, self.m
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] = (prod[i + j] + x * y) % p
        mod = self.modulus
        for i in range(2 * m - 2, m - 1, -1):
            c = prod[i]
            if c:
                for j in range(m + 1):
                    prod[i - m + j] = (prod[i - m + j] - c * mod[j]) % p
        return tuple(prod[:m])

    def pow(self, a, k):
        if k < 0:
            return self.pow(self.inv(a), -k)
        out = self.one()
        base = a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero in GF")
        # extended Euclid in F_p[x]
        p = self.p
        r0, r1 = list(self.modulus), _poly_trim(list(a))
        s0, s1 = [0], [1]
        while any(r1):
            q, r = self._polydiv(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_trim(self._polysub(s0, self._polymul(q, s1)))
        lead_inv = pow(r0[-1], p - 2, p)
        out = [(c * lead_inv) % p for c in s0]
        out = (out + [0] * self.m)[: self.m]
        return tuple(out)

    def _polymul(self, a, b):
        p = self.p
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = (out[i + j] + x * y) % p
        return out

    def _polysub(self, a, b):
        p = self.p
        out = [0] * max(len(a), len(b))
        for i, x in enumerate(a):
            out[i] = x % p
        for i, x in enumerate(b):
            out[i] = (out[i] - x) % p
        return out

    def _polydiv(self, a, b):
        p = self.p
        a = list(a)
        db = len(_poly_trim(list(b))) - 1
        lead_inv = pow(b[db], p - 2, p)
        q = [0] * max(len(a) - db, 1)
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i] % p
            if c:
                f = (c * lead_inv) % p
                q[i - db] = f
                for j in range(db + 1):
                    a[i - db + j] = (a[i - db + j] - f * b[j]) % p
        return q, _poly_trim(a)

    def elements(self):
        """All elements in lexicographic coefficient order."""
        p, m = self.p, self.m
        for idx in range(self.order):
            coeffs = []
            v = idx
            for _ in range(m):
                coeffs.append(v % p)
                v //= p
            yield tuple(coeffs)


def _gf_poly_irreducible(p, coeffs):
    """Rabin test for a monic polynomial over F_p given ascending coeffs."""
    m = len(coeffs) - 1
    fld = _Field(p, m, coeffs)
    x = (0, 1) + (0,) * (m - 2) if m >= 2 else ((-coeffs[0]) % p,)
    if m == 1:
        return True
    xq = x
    for _ in range(m):
        xq = fld.pow(xq, p)
    if xq != x:
        return False
    for q in factor_int(m):
        d = m // q
        xd = x
        for _ in range(d):
            xd = fld.pow(xd, p)
        # gcd(x^(p^d) - x, f) must be 1
        diff = _poly_trim(list(fld.sub(xd, x)))
        if not any(diff):
            return False
        g = _poly_gcd_fp(p, list(coeffs), diff)
        if len(g) > 1:
            return False
    return True


def _poly_gcd_fp(p, a, b):
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while any(b):
        fld = _Field(p, max(len(a), len(b)), [0] * max(len(a), len(b)) + [1])
        _, r = fld._polydiv(a, b)
        a, b = b, r
    return _poly_trim(a)


class _Tower:
    """All GF(p^m) arithmetic for one prime, with compatible moduli."""

    def __init__(self, p):
        self.p = p
        self.moduli = {}
        self.fields = {}
        self.emb_pows = {}
        self._min_solvers = {}

    def field(self, m):
        if m not in self.fields:
            self.fields[m] = _Field(self.p, m, self.modulus(m))
        return self.fields[m]

    def modulus(self, m):
        if m in self.moduli:
            return self.moduli[m]
        p = self.p
        for d in range(1, m):
            if m % d == 0:
                self.modulus(d)
        if m == 1:
            g = self._least_primitive_root()
            self.moduli[1] = ((-g) % p, 1)
            return self.moduli[1]
        helper = self._first_irreducible(m)
        H = _Field(p, m, helper)
        order = p ** m - 1
        order_factors = list(factor_int(order))
        gamma0 = self._find_generator(H, order, order_factors)
        maximal = [m // q for q in factor_int(m)]
        k = 1
        while True:
            if gcd(k, order) == 1:
                gamma = H.pow(gamma0, k)
                if all(self._is_root(H, self.moduli[d], H.pow(gamma, order // (p ** d - 1)))
                       for d in maximal):
                    break
            k += 1
        self.moduli[m] = self._minpoly(H, gamma, m)
        return self.moduli[m]

    def _least_primitive_root(self):
        p = self.p
        if p == 2:
            return 1
        fac = list(factor_int(p - 1))
        for g in range(2, p):
            if all(pow(g, (p - 1) // q, p) != 1 for q in fac):
                return g
        raise RuntimeError("no primitive root found")

    def _first_irreducible(self, m):
        p = self.p
        count = p ** m
        for idx in range(count):
            coeffs = []
            v = idx
            for _ in range(m):
                coeffs.append(v % p)
                v //= p
            coeffs.append(1)
            if _gf_poly_irreducible(p, tuple(coeffs)):
                return tuple(coeffs)
        raise RuntimeError("no irreducible polynomial found")

    def _find_generator(self, H, order, order_factors):
        for el in H.elements():
            if not any(el):
                continue
            if all(H.pow(el, order // q) != H.one() for q in order_factors):
                return el
        raise RuntimeError("no multiplicative generator found")

    @staticmethod
    def _is_root(H, poly, el):
        acc = H.zero()
        for c in reversed(poly):
            acc = H.mul(acc, el)
            if c:
                acc = H.add(acc, (c,) + (0,) * (H.m - 1))
        return not any(acc)

    def _minpoly(self, H, gamma, m):
        # product of (X - gamma^(p^t)) for t < m, coefficients land in F_p
        p = self.p
        poly = [H.one()]
        conj = gamma
        for _ in range(m):
            new = [H.zero()] * (len(poly) + 1)
            for i, c in enumerate(poly):
                new[i + 1] = H.add(new[i + 1], c)
                new[i] = H.sub(new[i], H.mul(c, conj))
            poly = new
            conj = H.pow(conj, p)
        out = []
        for c in poly:
            assert not any(c[1:]), "minimal polynomial must have prime-field coefficients"
            out.append(c[0] % p)
        return tuple(out)

    def embed(self, a, d, m):
        """Lift coefficients a from GF(p^d) into GF(p^m), d | m."""
        if d == m:
            return a
        key = (d, m)
        F = self.field(m)
        if key not in self.emb_pows:
            img = F.pow(F.gen(), (self.p ** m - 1) // (self.p ** d - 1))
            pows = [F.one()]
            for _ in range(d - 1):
                pows.append(F.mul(pows[-1], img))
            self.emb_pows[key] = pows
        out = F.zero()
        for coeff, basis in zip(a, self.emb_pows[key]):
            if coeff:
                out = F.add(out, tuple((coeff * c) % self.p for c in basis))
        return out

    def minimize(self, a, m):
        """Return (d, coeffs) for the smallest subfield containing a."""
        F = self.field(m)
        for d in sorted(x for x in range(1, m + 1) if m % x == 0):
            if d == m:
                return m, a
            if F.pow(a, self.p ** d) == a:
                coords = self._subfield_coords(a, d, m)
                if coords is not None:
                    return d, coords
        return m, a

    def _subfield_coords(self, a, d, m):
        key = (d, m)
        self.embed(self.field(d).one(), d, m)  # ensure emb_pows cached
        basis = self.emb_pows[(d, m)]
        p = self.p
        # solve sum_j c_j basis[j] = a over F_p
        rows = [[basis[j][i] for j in range(d)] + [a[i]] for i in range(m)]
        piv_cols, r = [], 0
        for c in range(d):
            piv = next((i for i in range(r, m) if rows[i][c] % p), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = pow(rows[r][c], p - 2, p)
            rows[r] = [(x * inv) % p for x in rows[r]]
            for i in range(m):
                if i != r and rows[i][c] % p:
                    f = rows[i][c]
                    rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
            piv_cols.append(c)
            r += 1
        for i in range(r, m):
            if rows[i][d] % p:
                return None
        sol = [0] * d
        for i, c in enumerate(piv_cols):
            sol[c] = rows[i][d]
        return tuple(sol)


_TOWERS = {}


def tower(p):
    if p not in _TOWERS:
        _TOWERS[p] = _Tower(p)
    return _TOWERS[p]


class GFElem:
    """Element of the algebraic closure of F_p, stored at minimal degree.

    Doubles as both the field-element and the (nonzero) toric-scalar type of
    the characteristic-p backend.
    """

    __slots__ = ("backend", "deg", "coeffs")

    def __init__(self, backend, deg, coeffs):
        self.backend = backend
        self.deg = deg
        self.coeffs = tuple(c % backend.p for c in coeffs)

    def _norm(self):
        d, c = self.backend._tower.minimize(self.coeffs, self.deg)
        return GFElem(self.backend, d, c)

    def is_zero(self):
        return not any(self.coeffs)

    def _common(self, other):
        bk = self.backend
        if bk != other.backend:
            from .errors import MixedBackend
            raise MixedBackend("mixing distinct GF backends")
        m = self.deg * other.deg // gcd(self.deg, other.deg)
        if m > bk.degree_bound:
            raise RootUnavailable(f"extension degree {m} exceeds bound {bk.degree_bound}")
        tw = bk._tower
        return (bk, tw.field(m), m,
                tw.embed(self.coeffs, self.deg, m),
                tw.embed(other.coeffs, other.deg, m))

    def __add__(self, other):
        other = self.backend.coerce(other)
        bk, F, m, a, b = self._common(other)
        return GFElem(bk, m, F.add(a, b))._norm()

    def __sub__(self, other):
        other = self.backend.coerce(other)
        bk, F, m, a, b = self._common(other)
        return GFElem(bk, m, F.sub(a, b))._norm()

    def __neg__(self):
        F = self.backend._tower.field(self.deg)
        return GFElem(self.backend, self.deg, F.neg(self.coeffs))

    def __mul__(self, other):
        other = self.backend.coerce(other)
        bk, F, m, a, b = self._common(other)
        return GFElem(bk, m, F.mul(a, b))._norm()

    def inv(self):
        F = self.backend._tower.field(self.deg)
        return GFElem(self.backend, self.deg, F.inv(self.coeffs))

    inverse = inv

    def pow(self, k):
        F = self.backend._tower.field(self.deg)
        if k < 0:
            return GFElem(self.backend, self.deg, F.pow(F.inv(self.coeffs), -k))._norm()
        return GFElem(self.backend, self.deg, F.pow(self.coeffs, k))._norm()

    __pow__ = pow

    def mul_order(self):
        if self.is_zero():
            raise ZeroDivisionError("order of zero")
        n = self.backend.p ** self.deg - 1
        order = n
        F = self.backend._tower.field(self.deg)
        for q in factor_int(n):
            while order % q == 0 and F.pow(self.coeffs, order // q) == F.one():
                order //= q
        return order

    def __eq__(self, other):
        if not isinstance(other, GFElem):
            if isinstance(other, int):
                other = self.backend.coerce(other)
            else:
                return NotImplemented
        return (self.backend == other.backend and self.deg == other.deg
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.backend.p, self.deg, self.coeffs))

    def __repr__(self):
        return f"GF({self.backend.p}^{self.deg}):{list(self.coeffs)}"

    def sort_key(self):
        return (self.deg, self.coeffs)


class GFBackend:
    """Characteristic-p coefficient backend, one shared tower per prime."""

    char = "p"

    def __init__(self, p, degree_bound=12):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError("p must be prime")
        self.p = p
        self.degree_bound = degree_bound
        self._tower = tower(p)

    def __eq__(self, other):
        return isinstance(other, GFBackend) and other.p == self.p

    def __hash__(self):
        return hash(("gf", self.p))

    def coerce(self, x):
        if isinstance(x, GFElem):
            return x
        if isinstance(x, int):
            return GFElem(self, 1, (x % self.p,))
        raise TypeError(f"cannot coerce {x!r} into GF({self.p})")

    def zero(self):
        return GFElem(self, 1, (0,))

    def one(self):
        return GFElem(self, 1, (1,))

    def rational(self, num, den=1):
        if den % self.p == 0:
            raise ZeroDivisionError("denominator divisible by p")
        return self.coerce(num) * self.coerce(den).inv() if den != 1 else self.coerce(num)

    def from_poly(self, coeffs, m):
        """Element from generator-polynomial coefficients in GF(p^m)."""
        if m > self.degree_bound:
            raise RootUnavailable(f"degree {m} exceeds bound {self.degree_bound}")
        F = self._tower.field(m)
        acc = F.zero()
        g = F.gen()
        for i, c in enumerate(coeffs):
            if c % self.p:
                acc = F.add(acc, F.mul(F.pow(g, i), ((c % self.p),) + (0,) * (m - 1)))
        return GFElem(self, m, acc)._norm()

    def generator(self, m):
        F = self._tower.field(m)
        return GFElem(self, m, F.gen())._norm() if m == 1 else GFElem(self, m, F.gen())

    def root_of_unity(self, n):
        if n == 1:
            return self.one()
        if n % self.p == 0:
            raise RootUnavailable(f"no primitive {n}-th root of unity in characteristic {self.p}")
        m = 1
        while (self.p ** m - 1) % n != 0:
            m += 1
            if m > self.degree_bound:
                raise RootUnavailable(
                    f"order-{n} root needs degree > {self.degree_bound} over GF({self.p})")
        F = self._tower.field(m)
        el = GFElem(self, m, F.pow(F.gen(), (self.p ** m - 1) // n))
        return el._norm()

    def nth_roots(self, x, n):
        """All n-th roots of the nonzero element x within the degree bound."""
        if x.is_zero():
            raise ZeroDivisionError("roots of zero")
        if n == 1:
            return [x]
        p = self.p
        l = 0
        n_prime = n
        while n_prime % p == 0:
            n_prime //= p
            l += 1
        y = x
        for _ in range(l):
            # unique p-th root in GF(p^d): inverse Frobenius
            y = y.pow(p ** (y.deg - 1)) if y.deg > 1 else y
        if n_prime == 1:
            return [y._norm()]
        y = y._norm()
        o = y.mul_order()
        m = None
        for cand in range(y.deg, self.degree_bound + 1, y.deg):
            # all n'-th roots live in GF(p^m) iff n' | p^m - 1 and o | (p^m-1)/n'
            if (p ** cand - 1) % (n_prime * o) == 0:
                m = cand
                break
        if m is None:
            raise RootUnavailable(
                f"{n}-th roots need degree > {self.degree_bound} over GF({p})")
        F = self._tower.field(m)
        M = p ** m - 1
        lifted = self._tower.embed(y.coeffs, y.deg, m)
        j = _dlog(F, F.gen(), lifted, M)
        # ord(y) divides M/n' forces n' | j
        assert j % n_prime == 0
        z0 = F.pow(F.gen(), (j // n_prime) % M)
        omega = F.pow(F.gen(), M // n_prime)
        roots = []
        cur = z0
        for _ in range(n_prime):
            roots.append(GFElem(self, m, cur)._norm())
            cur = F.mul(cur, omega)
        roots.sort(key=lambda e: e.sort_key())
        return roots


def _dlog(F, base, target, order):
    """Discrete log via Pohlig-Hellman with baby-step giant-step pieces."""
    residues = []
    moduli = []
    for q, e in factor_int(order).items():
        qe = q ** e
        h = F.pow(base, order // qe)
        t = F.pow(target, order // qe)
        x = 0
        gamma = F.pow(h, q ** (e - 1))  # order q
        for k in range(e):
            exp = order // qe * (q ** (e - 1 - k))
            rhs = F.pow(F.mul(t, F.inv(F.pow(h, x))), q ** (e - 1 - k))
            d = _dlog_prime(F, gamma, rhs, q)
            x += d * (q ** k)
        residues.append(x)
        moduli.append(qe)
    return _crt(residues, moduli)


def _dlog_prime(F, g, h, q):
    if q < 4096:
        cur = F.one()
        for i in range(q):
            if cur == h:
                return i
            cur = F.mul(cur, g)
        raise ValueError("dlog not found")
    m = int(q ** 0.5) + 1
    table = {}
    cur = F.one()
    for j in range(m):
        table.setdefault(cur, j)
        cur = F.mul(cur, g)
    factor = F.inv(F.pow(g, m))
    cur = h
    for i in range(m):
        if cur in table:
            return (i * m + table[cur]) % q
        cur = F.mul(cur, factor)
    raise ValueError("dlog not found")


def _crt(residues, moduli):
    x, m = 0, 1
    for r, q in zip(residues, moduli):
        g, s, _ = _egcd(m, q)
        assert g == 1
        x = (x + (r - x) * s % q * m) % (m * q)
        m *= q
    return x


def _egcd(a, b):
    if b == 0:
        return a, 1, 0
    g, s, t = _egcd(b, a % b)
    return g, t, s - (a // b) * t
