"""The coefficient field K and its distinguished multiplicative subgroup.

Characteristic zero: a toric scalar is one monomial

    zeta^(a/N) * prod_p p^(e_p) * prod_i t_i^(f_i)

with rational exponents (zeta exponent modulo 1, positive-rational part as a
prime-exponent map, free parameters t_1..t_s).  A field element is a quotient
of finite sums of such monomials; the coefficient of each irrational monomial
key is an exact cyclotomic rational.  Zero testing treats distinct fractional
prime powers as independent of the cyclotomic part (see strict_roots for the
mode that refuses to create them).

Characteristic p: both roles are played by gf.GFElem (see gf.py).
"""

from fractions import Fraction

from .cyclo import CycRat, factor_int
from .errors import MixedBackend, RootUnavailable
from .gf import GFBackend, GFElem

__all__ = [
    "CharZeroBackend", "GFBackend", "ToricScalar", "FieldElem", "GFElem",
    "normalize", "nth_roots", "root_of_unity",
]


class CharZeroBackend:
    """Cyclotomic rationals with free multiplicative parameters t_1..t_s."""

    char = "0"

    def __init__(self, num_params=0, strict_roots=False):
        self.num_params = num_params
        self.strict_roots = strict_roots

    def __eq__(self, other):
        return isinstance(other, CharZeroBackend) and other.num_params == self.num_params

    def __hash__(self):
        return hash(("char0", self.num_params))

    # toric constructors -------------------------------------------------

    def toric_one(self):
        return ToricScalar(self, 0, (), (Fraction(0),) * self.num_params)

    def toric_rational(self, q):
        q = Fraction(q)
        if q == 0:
            raise ZeroDivisionError("toric scalars are nonzero")
        zeta = Fraction(0)
        if q < 0:
            zeta, q = Fraction(1, 2), -q
        primes = {}
        for p, e in factor_int(q.numerator).items():
            primes[p] = primes.get(p, 0) + e
        for p, e in factor_int(q.denominator).items():
            primes[p] = primes.get(p, 0) - e
        return ToricScalar(self, zeta,
                           tuple(sorted((p, Fraction(e)) for p, e in primes.items() if e)),
                           (Fraction(0),) * self.num_params)

    def toric_zeta(self, q):
        """zeta^q for rational q, the fixed compatible root-of-unity tower."""
        return ToricScalar(self, Fraction(q) % 1, (),
                           (Fraction(0),) * self.num_params)

    def toric_param(self, idx, exp=1):
        if not 1 <= idx <= self.num_params:
            raise ValueError(f"parameter index t{idx} out of range (s={self.num_params})")
        exps = [Fraction(0)] * self.num_params
        exps[idx - 1] = Fraction(exp)
        return ToricScalar(self, Fraction(0), (), tuple(exps))

    def toric_prime_power(self, p, exp):
        if p < 2 or factor_int(p) != {p: 1}:
            raise ValueError(f"{p} is not prime")
        exp = Fraction(exp)
        return ToricScalar(self, Fraction(0), ((p, exp),) if exp else (),
                           (Fraction(0),) * self.num_params)

    # field constructors -------------------------------------------------

    def zero(self):
        return FieldElem(self, {}, {_unit_key(self): CycRat.one()})

    def one(self):
        return self.rational(1)

    def rational(self, num, den=1):
        q = Fraction(num, den)
        return FieldElem(self, {_unit_key(self): CycRat.from_rational(q)} if q else {},
                         {_unit_key(self): CycRat.one()})

    def coerce(self, x):
        if isinstance(x, FieldElem):
            if x.backend != self:
                raise MixedBackend("field elements from different backends")
            return x
        if isinstance(x, ToricScalar):
            return x.to_field()
        if isinstance(x, (int, Fraction)):
            return self.rational(x)
        raise TypeError(f"cannot coerce {x!r} into the characteristic-zero field")


def _unit_key(backend):
    return ((), (Fraction(0),) * backend.num_params)


class ToricScalar:
    """A single nonzero monomial of the toric subgroup (char 0)."""

    __slots__ = ("backend", "zeta", "primes", "params")

    def __init__(self, backend, zeta, primes, params):
        self.backend = backend
        self.zeta = Fraction(zeta) % 1
        self.primes = tuple(sorted((p, Fraction(e)) for p, e in primes if e))
        self.params = tuple(Fraction(f) for f in params)

    def _check(self, other):
        if self.backend != other.backend:
            raise MixedBackend("toric scalars from different backends")

    def __mul__(self, other):
        if isinstance(other, int):
            other = self.backend.toric_rational(other)
        self._check(other)
        primes = dict(self.primes)
        for p, e in other.primes:
            primes[p] = primes.get(p, 0) + e
        return ToricScalar(self.backend, self.zeta + other.zeta,
                           tuple(primes.items()),
                           tuple(a + b for a, b in zip(self.params, other.params)))

    def inv(self):
        return ToricScalar(self.backend, -self.zeta,
                           tuple((p, -e) for p, e in self.primes),
                           tuple(-f for f in self.params))

    inverse = inv

    def pow(self, k):
        k = Fraction(k)
        return ToricScalar(self.backend, self.zeta * k,
                           tuple((p, e * k) for p, e in self.primes),
                           tuple(f * k for f in self.params))

    __pow__ = pow

    def __eq__(self, other):
        if not isinstance(other, ToricScalar):
            return NotImplemented
        return (self.backend == other.backend and self.zeta == other.zeta
                and self.primes == other.primes and self.params == other.params)

    def __hash__(self):
        return hash((self.zeta, self.primes, self.params))

    def is_one(self):
        return self.zeta == 0 and not self.primes and not any(self.params)

    def to_field(self):
        coeff = CycRat.zeta_power(self.zeta)
        rat = Fraction(1)
        fprimes = []
        for p, e in self.primes:
            whole = e.numerator // e.denominator
            frac = e - whole
            rat *= Fraction(p) ** whole
            if frac:
                fprimes.append((p, frac))
        key = (tuple(fprimes), self.params)
        return FieldElem(self.backend, {key: coeff.scale(rat)},
                         {_unit_key(self.backend): CycRat.one()})

    def sort_key(self):
        return (self.params, self.primes, self.zeta)

    def __repr__(self):
        from .literals import format_scalar
        return format_scalar(self.to_field())


def _key_mul(backend, k1, k2):
    """Multiply two irrational-monomial keys, returning (key, rational carry)."""
    carry = Fraction(1)
    primes = dict(k1[0])
    for p, e in k2[0]:
        primes[p] = primes.get(p, Fraction(0)) + e
    fp = []
    for p in sorted(primes):
        e = primes[p]
        whole = e.numerator // e.denominator
        frac = e - whole
        if whole:
            carry *= Fraction(p) ** whole
        if frac:
            fp.append((p, frac))
    params = tuple(a + b for a, b in zip(k1[1], k2[1]))
    return (tuple(fp), params), carry


def _key_inv(k):
    carry = Fraction(1)
    fp = []
    for p, e in k[0]:
        # p^-e = p^(1-e) / p with 1-e in (0,1)
        fp.append((p, 1 - e))
        carry /= p
    return (tuple(fp), tuple(-f for f in k[1])), carry


def _terms_mul(backend, t1, t2):
    out = {}
    for k1, c1 in t1.items():
        for k2, c2 in t2.items():
            k, carry = _key_mul(backend, k1, k2)
            c = c1 * c2
            if carry != 1:
                c = c.scale(carry)
            if k in out:
                out[k] = out[k] + c
            else:
                out[k] = c
    return {k: c for k, c in out.items() if not c.is_zero()}


def _terms_add(t1, t2, sign=1):
    out = dict(t1)
    for k, c in t2.items():
        c2 = c if sign == 1 else -c
        out[k] = out[k] + c2 if k in out else c2
    return {k: c for k, c in out.items() if not c.is_zero()}


def _term_key_order(item):
    (fp, params), _ = item
    return (params, fp)


class FieldElem:
    """Element of the char-0 field: a normalized quotient of term sums."""

    __slots__ = ("backend", "num", "den")

    def __init__(self, backend, num, den):
        self.backend = backend
        num = {k: c for k, c in num.items() if not c.is_zero()}
        den = {k: c for k, c in den.items() if not c.is_zero()}
        if not den:
            raise ZeroDivisionError("zero denominator")
        if len(den) == 1:
            ((dk, dc),) = den.items()
            unit = _unit_key(backend)
            if dk != unit or dc != CycRat.one():
                ik, icarry = _key_inv(dk)
                idc = dc.inv().scale(icarry)
                new = {}
                for k, c in num.items():
                    nk, carry = _key_mul(backend, k, ik)
                    new[nk] = (c * idc).scale(carry) if carry != 1 else c * idc
                num, den = new, {unit: CycRat.one()}
        elif len(num) == len(den):
            # fold num/den when they are proportional (covers f/f -> 1)
            ratio = None
            for k in den:
                if k not in num:
                    ratio = None
                    break
                r = num[k] * den[k].inv()
                if ratio is None:
                    ratio = r
                elif r != ratio:
                    ratio = None
                    break
            if ratio is not None:
                unit = _unit_key(backend)
                num, den = ({unit: ratio} if not ratio.is_zero() else {}), {unit: CycRat.one()}
            else:
                num, den = self._lead_normalize(backend, num, den)
        else:
            num, den = self._lead_normalize(backend, num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _lead_normalize(backend, num, den):
        # leading-term normalization keeps multi-term fractions canonical-ish
        lead_k = max(den, key=lambda k: (k[1], k[0]))
        lead_c = den[lead_k]
        ik, icarry = _key_inv(lead_k)
        ilc = lead_c.inv().scale(icarry)

        def _div(terms):
            out = {}
            for k, c in terms.items():
                nk, carry = _key_mul(backend, k, ik)
                out[nk] = (c * ilc).scale(carry) if carry != 1 else c * ilc
            return out

        return _div(num), _div(den)

    # ------------------------------------------------------------------

    def _check(self, other):
        if self.backend != other.backend:
            raise MixedBackend("field elements from different backends")

    def is_zero(self):
        return not self.num

    def _coerce(self, other):
        return self.backend.coerce(other)

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        bk = self.backend
        if self.den == other.den:
            return FieldElem(bk, _terms_add(self.num, other.num), dict(self.den))
        num = _terms_add(_terms_mul(bk, self.num, other.den),
                         _terms_mul(bk, other.num, self.den))
        return FieldElem(bk, num, _terms_mul(bk, self.den, other.den))

    def __sub__(self, other):
        other = self._coerce(other)
        return self + (-other)

    def __neg__(self):
        return FieldElem(self.backend, {k: -c for k, c in self.num.items()},
                         dict(self.den))

    def __mul__(self, other):
        other = self._coerce(other)
        self._check(other)
        bk = self.backend
        return FieldElem(bk, _terms_mul(bk, self.num, other.num),
                         _terms_mul(bk, self.den, other.den))

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return FieldElem(self.backend, dict(self.den), dict(self.num))

    inverse = inv

    def pow(self, k):
        if k < 0:
            return self.inv().pow(-k)
        out = self.backend.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    __pow__ = pow

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, ToricScalar)):
            other = self._coerce(other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        if self.backend != other.backend:
            return False
        bk = self.backend
        diff = _terms_add(_terms_mul(bk, self.num, other.den),
                          _terms_mul(bk, other.num, self.den), sign=-1)
        return not diff

    def __hash__(self):
        items = tuple(sorted(((k, c.reduced()) for k, c in self.num.items()),
                             key=lambda it: (it[0][1], it[0][0])))
        ditems = tuple(sorted(((k, c.reduced()) for k, c in self.den.items()),
                              key=lambda it: (it[0][1], it[0][0])))
        return hash((items, ditems))

    def is_polynomial(self):
        return self.den == {_unit_key(self.backend): CycRat.one()}

    def as_toric(self):
        """The toric scalar equal to this element, or None."""
        if len(self.num) != 1 or not self.is_polynomial():
            return None
        ((key, coeff),) = self.num.items()
        n, vec = coeff.reduced()
        nz = [(i, c) for i, c in enumerate(vec) if c]
        if len(nz) != 1:
            return None
        i, c = nz[0]
        zeta = Fraction(i, n)
        if c < 0:
            zeta += Fraction(1, 2)
            c = -c
        primes = {p: e for p, e in key[0]}
        for p, e in factor_int(c.numerator).items():
            primes[p] = primes.get(p, Fraction(0)) + e
        for p, e in factor_int(c.denominator).items():
            primes[p] = primes.get(p, Fraction(0)) - e
        return ToricScalar(self.backend, zeta, tuple(primes.items()), key[1])

    def as_rational(self):
        t = self.as_toric() if not self.is_zero() else None
        if self.is_zero():
            return Fraction(0)
        if t is None or t.params != (Fraction(0),) * self.backend.num_params:
            return None
        if t.zeta not in (Fraction(0), Fraction(1, 2)):
            return None
        q = Fraction(1) if t.zeta == 0 else Fraction(-1)
        for p, e in t.primes:
            if e.denominator != 1:
                return None
            q *= Fraction(p) ** e
        return q

    def __repr__(self):
        from .literals import format_scalar
        return format_scalar(self)


# ---------------------------------------------------------------------------
# backend-generic operations


def normalize(x):
    """Canonical form; FieldElems are kept normalized, so this re-verifies."""
    if isinstance(x, GFElem):
        return x._norm()
    if isinstance(x, FieldElem):
        return FieldElem(x.backend, x.num, x.den)
    if isinstance(x, ToricScalar):
        return ToricScalar(x.backend, x.zeta, x.primes, x.params)
    raise TypeError(f"cannot normalize {x!r}")


def nth_roots(x, n):
    """All n-th roots of the toric scalar x, canonically ordered.

    Characteristic zero returns exactly n roots; characteristic p returns the
    roots in the smallest implemented extension (a single root when n is a
    power of p).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if isinstance(x, GFElem):
        return x.backend.nth_roots(x, n)
    if not isinstance(x, ToricScalar):
        raise TypeError("nth_roots expects a toric scalar")
    bk = x.backend
    if bk.strict_roots and any((e / n).denominator != 1 for _, e in x.primes):
        raise RootUnavailable("strict mode refuses fractional prime exponents")
    base = x.pow(Fraction(1, n))
    return [ToricScalar(bk, base.zeta + Fraction(k, n), base.primes, base.params)
            for k in range(n)]


def root_of_unity(backend, n):
    """A canonical primitive n-th root of unity in the given backend."""
    if n < 1:
        raise ValueError("n must be positive")
    if isinstance(backend, GFBackend):
        return backend.root_of_unity(n)
    return backend.toric_zeta(Fraction(1, n))
