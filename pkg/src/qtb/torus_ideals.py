"""Binomial ideals of the quantum torus via partial characters.

A proper binomial ideal is I(L, rho) = < x^a - c(a)^(-1) rho(a) | a in L >
for a sublattice L of the center lattice and a homomorphism rho: L -> K^x.
The (L, rho) label is canonical, so ideal equality is label equality.
"""

import itertools

from .errors import NotInCenter, RootUnavailable, ZeroBinomial, ZeroValue
from .gf import GFBackend
from .lattice import (Lattice, adapted_basis, coset_rep, full_lattice,
                      hnf_basis, integer_kernel, member_solve, saturate,
                      solve_in_rows, zero_lattice)
from .scalars import nth_roots
from .torus_core import _to_field, element_add


class PartialCharacter:
    """A sublattice L of Gamma_Z with values on its HNF basis rows."""

    def __init__(self, ctx, lat, values):
        if not lat.is_sublattice_of(ctx.gamma_z):
            raise NotInCenter("character lattice must lie in the center lattice")
        values = tuple(_to_field(ctx, v) for v in values)
        if len(values) != lat.rank:
            raise ZeroValue(f"need {lat.rank} values, got {len(values)}")
        if any(v.is_zero() for v in values):
            raise ZeroValue("character values must be nonzero")
        self.ctx = ctx
        self.lattice = lat
        self.values = values

    def __call__(self, gamma):
        coeffs = member_solve(self.lattice, gamma)
        if coeffs is None:
            raise ValueError(f"{gamma} is not in the character lattice")
        out = self.ctx.field_one()
        for m, v in zip(coeffs, self.values):
            if m:
                out = out * v.pow(m)
        return out

    def __eq__(self, other):
        return (isinstance(other, PartialCharacter) and self.lattice == other.lattice
                and all(a == b for a, b in zip(self.values, other.values)))

    def __repr__(self):
        return f"PartialCharacter({self.lattice!r}, {self.values!r})"


class TorusBinomialIdeal:
    """Either the whole ring or the proper ideal labeled by (L, rho)."""

    def __init__(self, ctx, character=None, whole=False):
        self.ctx = ctx
        self.character = character
        self.whole = whole

    @property
    def lattice(self):
        return self.character.lattice if self.character else None

    def is_whole(self):
        return self.whole

    def is_zero_ideal(self):
        return not self.whole and self.character.lattice.rank == 0

    def __eq__(self, other):
        if not isinstance(other, TorusBinomialIdeal):
            return NotImplemented
        if self.whole or other.whole:
            return self.whole == other.whole
        return self.character == other.character

    def __repr__(self):
        if self.whole:
            return "TorusBinomialIdeal(unit-ideal)"
        return f"TorusBinomialIdeal({self.character!r})"


def whole_ring(ctx):
    return TorusBinomialIdeal(ctx, whole=True)


def make_ideal(ctx, lat, values):
    """The proper ideal I(L, rho) from basis-row values on the HNF basis."""
    return TorusBinomialIdeal(ctx, PartialCharacter(ctx, lat, values))


def zero_ideal(ctx):
    return make_ideal(ctx, zero_lattice(ctx.n), ())


def regular_generators(ideal):
    """Generators x^b - c(b)^(-1) rho(b) over the HNF basis rows of L.

    The listed order is a regular sequence.  Each generator is returned as an
    exponent -> coefficient element map.
    """
    ctx = ideal.ctx
    char = ideal.character
    gens = []
    zero = (0,) * ctx.n
    for row, val in zip(char.lattice.basis, char.values):
        coeff = _to_field(ctx, ctx.c(row).inv()) * val
        gens.append({tuple(row): ctx.field_one(), zero: -coeff})
    return gens


def from_generators(ctx, binomials):
    """Recognize the binomial ideal generated by (lam, alpha, mu, beta) pairs.

    Returns the whole ring when a generator is a unit, some exponent
    difference leaves the center lattice, or the derived character values are
    inconsistent.
    """
    gammas, rho_values = [], []
    for lam, alpha, mu, beta in binomials:
        lam, mu = _to_field(ctx, lam), _to_field(ctx, mu)
        alpha, beta = tuple(alpha), tuple(beta)
        if lam.is_zero() and mu.is_zero():
            raise ZeroBinomial("zero generator")
        if alpha == beta:
            if (lam + mu).is_zero():
                raise ZeroBinomial("generator cancels to zero")
            return whole_ring(ctx)  # nonzero scalar multiple of a unit
        if lam.is_zero() or mu.is_zero():
            return whole_ring(ctx)  # monomials are units in T_q
        gamma = tuple(a - b for a, b in zip(alpha, beta))
        if not ctx.is_central(gamma):
            return whole_ring(ctx)
        nu = -(lam.inv()) * _to_field(ctx, ctx.d(gamma, beta)) * mu
        gammas.append(gamma)
        rho_values.append(_to_field(ctx, ctx.c(gamma)) * nu)
    if not gammas:
        return zero_ideal(ctx)
    # consistency: every integer relation among the gammas must map to 1
    for rel in integer_kernel(gammas, ctx.n):
        acc = ctx.field_one()
        for k, v in zip(rel, rho_values):
            if k:
                acc = acc * v.pow(k)
        if not (acc - ctx.field_one()).is_zero():
            return whole_ring(ctx)
    lat = hnf_basis(gammas, ctx.n)
    values = []
    for row in lat.basis:
        combo = solve_in_rows(gammas, ctx.n, row)
        acc = ctx.field_one()
        for k, v in zip(combo, rho_values):
            if k:
                acc = acc * v.pow(k)
        values.append(acc)
    return make_ideal(ctx, lat, values)


def normal_form(ideal, f):
    """Unique normal form of the element map f modulo the ideal."""
    if ideal.is_whole():
        return {}
    ctx = ideal.ctx
    char = ideal.character
    lat = char.lattice
    out = {}
    for gamma, coeff in f.items():
        sigma = coset_rep(lat, gamma)
        alpha = tuple(g - s for g, s in zip(gamma, sigma))
        if any(alpha):
            scalar = (_to_field(ctx, ctx.d(sigma, alpha).inv())
                      * _to_field(ctx, ctx.c(alpha).inv()) * char(alpha))
            coeff = coeff * scalar
        cur = out.get(sigma)
        coeff = coeff if cur is None else cur + coeff
        if coeff.is_zero():
            out.pop(sigma, None)
        else:
            out[sigma] = coeff
    return out


def contains(ideal, f):
    return not normal_form(ideal, f)


def radical(ideal):
    """Radical: identity in characteristic 0, unique p-part extension else."""
    if ideal.is_whole():
        return ideal
    ctx = ideal.ctx
    if not isinstance(ctx.backend, GFBackend):
        return ideal
    p = ctx.backend.p
    char = ideal.character
    target = saturate(char.lattice, ctx.gamma_z, "p-part", p)
    if target == char.lattice:
        return ideal
    values = []
    for row in target.basis:
        l, scaled = 0, tuple(row)
        while member_solve(char.lattice, scaled) is None:
            l += 1
            scaled = tuple(p * x for x in scaled)
        base = char(scaled)
        root = nth_roots(base, p ** l)
        values.append(root[0])
    return make_ideal(ctx, target, values)


def character_extensions(ideal, target):
    """All extensions of the ideal's character to the saturation target.

    Characteristic 0 enumerates every root combination; characteristic p
    factors through the prime-to-p part first and finishes with unique
    Frobenius roots.  Extensions are returned in lexicographic root order.
    """
    ctx = ideal.ctx
    char = ideal.character
    if isinstance(ctx.backend, GFBackend):
        p = ctx.backend.p
        mid = saturate(char.lattice, target, "prime-to-p", p)
        stage1 = _enumerate_extensions(ctx, char, mid)
        out = []
        for ext in stage1:
            out.append(radical(TorusBinomialIdeal(ctx, ext)).character
                       if mid != target else ext)
        # the p-part finish must land exactly on the target lattice
        return [e for e in out if e.lattice == target]
    return _enumerate_extensions(ctx, char, target)


def _enumerate_extensions(ctx, char, target):
    rep = adapted_basis(char.lattice, target)
    factors = rep.invariant_factors
    f_rows = rep.sup_basis[: len(factors)]
    root_lists = []
    for d, f in zip(factors, f_rows):
        base = char(tuple(d * x for x in f))
        toric = base if isinstance(ctx.backend, GFBackend) else base.as_toric()
        if toric is None:
            raise RootUnavailable("character value is not toric, cannot take roots")
        root_lists.append(nth_roots(toric, d))
    exts = []
    for combo in itertools.product(*root_lists):
        values = []
        ok = True
        for row in target.basis:
            coeffs = solve_in_rows([tuple(f) for f in f_rows], ctx.n, row)
            if coeffs is None:
                ok = False
                break
            acc = ctx.field_one()
            for k, w in zip(coeffs, combo):
                if k:
                    acc = acc * _to_field(ctx, w).pow(k)
            values.append(acc)
        if ok:
            exts.append(PartialCharacter(ctx, target, values))
    return exts


def min_assoc_primes(ideal):
    """Minimal primes of I(L, rho), equal to its associated primes.

    Every returned ideal is prime, has height rank L, and their count is the
    torsion order of Gamma_Z/L (its prime-to-p part in characteristic p).
    """
    ctx = ideal.ctx
    char = ideal.character
    target = saturate(char.lattice, ctx.gamma_z, "full")
    return [TorusBinomialIdeal(ctx, ext) for ext in character_extensions(ideal, target)]


class ClassifyReport:
    def __init__(self, is_prime, is_completely_prime, is_maximal, is_primitive, height):
        self.is_prime = is_prime
        self.is_completely_prime = is_completely_prime
        self.is_maximal = is_maximal
        self.is_primitive = is_primitive
        self.height = height

    def __repr__(self):
        return ("ClassifyReport(prime={0.is_prime}, completely_prime="
                "{0.is_completely_prime}, maximal={0.is_maximal}, primitive="
                "{0.is_primitive}, height={0.height})".format(self))


def classify(ideal):
    """Primality and primitivity of a proper ideal, algebraically closed semantics."""
    ctx = ideal.ctx
    lat = ideal.character.lattice
    is_prime = saturate(lat, ctx.gamma_z, "full") == lat
    is_cp = saturate(lat, full_lattice(ctx.n), "full") == lat
    is_max = lat == ctx.gamma_z
    return ClassifyReport(is_prime, is_cp, is_max, is_max, lat.rank)


def ideal_equal_by_membership(a, b):
    """Two-way generator membership, an equality check independent of labels."""
    if a.is_whole() or b.is_whole():
        return a.is_whole() == b.is_whole()
    return (all(contains(b, g) for g in regular_generators(a))
            and all(contains(a, g) for g in regular_generators(b)))
