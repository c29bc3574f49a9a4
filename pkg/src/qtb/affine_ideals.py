"""Binomial ideals of the quantum affine space A_q.

The workhorse is a Buchberger-style completion specialized to binomials: each
rule rewrites x^beta to nu * x^gamma (or to 0) and reductions carry the exact
cocycle scalars, so every S-pair and every right-multiplication discrepancy
stays a binomial.  Leads strictly decrease in the fixed lexicographic order
(block orders for elimination), Dickson's lemma bounds the rule set, and the
inter-reduced confluent system is the canonical form of the ideal.
"""

import itertools
from collections import deque

from .errors import BoundExceeded, ZeroBinomial
from .lattice import zero_lattice
from .torus_core import (QMatrix, TorusContext, _to_field, element_add,
                         element_mul)
from . import torus_ideals as TI


class LexOrder:
    cache_key = "lex"

    @staticmethod
    def key(alpha):
        return alpha


class BlockOrder:
    """Variables at the 0-based dominant indices are eliminated first."""

    def __init__(self, dominant, n):
        self.dominant = tuple(sorted(dominant))
        self.rest = tuple(i for i in range(n) if i not in set(self.dominant))
        self.cache_key = ("block", self.dominant)

    def key(self, alpha):
        return (tuple(alpha[i] for i in self.dominant),
                tuple(alpha[i] for i in self.rest))


LEX = LexOrder()


def _divides(lead, mono):
    return all(a <= b for a, b in zip(lead, mono))


class Rule:
    """x^lead -> coeff * x^tail, or x^lead -> 0 when tail is None."""

    __slots__ = ("lead", "coeff", "tail")

    def __init__(self, lead, coeff, tail):
        self.lead = lead
        self.coeff = coeff
        self.tail = tail

    def is_monomial(self):
        return self.tail is None

    def as_element(self, ctx):
        if self.tail is None:
            return {self.lead: ctx.field_one()}
        return {self.lead: ctx.field_one(), self.tail: -self.coeff}

    def __repr__(self):
        if self.tail is None:
            return f"{self.lead} -> 0"
        return f"{self.lead} -> {self.coeff!r} * {self.tail}"


class RewriteSystem:
    """A confluent inter-reduced rule set for one binomial ideal."""

    def __init__(self, ctx, order, rules):
        self.ctx = ctx
        self.order = order
        self.rules = sorted(rules, key=lambda r: order.key(r.lead))

    def reduce(self, f):
        return _reduce(self.ctx, self.order, self.rules, dict(f))

    def monomial_rules(self):
        return [r for r in self.rules if r.is_monomial()]

    def binomial_rules(self):
        return [r for r in self.rules if not r.is_monomial()]

    def __repr__(self):
        return f"RewriteSystem({len(self.rules)} rules)"


def _reduce(ctx, order, rules, f):
    """Full left-reduction of an element map to its unique normal form."""
    key = order.key
    while True:
        target = None
        for mono in f:
            for rule in rules:
                if _divides(rule.lead, mono):
                    if target is None or key(mono) > key(target[0]):
                        target = (mono, rule)
                    break
        if target is None:
            return f
        mono, rule = target
        coeff = f.pop(mono)
        if rule.is_monomial():
            continue
        eps = tuple(a - b for a, b in zip(mono, rule.lead))
        scalar = rule.coeff
        if any(eps):
            scalar = (_to_field(ctx, ctx.d(eps, rule.lead).inv()) * scalar
                      * _to_field(ctx, ctx.d(eps, rule.tail)))
        new_mono = tuple(a + b for a, b in zip(eps, rule.tail))
        new_coeff = coeff * scalar
        if new_mono in f:
            new_coeff = f[new_mono] + new_coeff
        if new_coeff.is_zero():
            f.pop(new_mono, None)
        else:
            f[new_mono] = new_coeff


def _element_to_rule(ctx, order, f):
    """Orient a reduced element (at most two terms) into a rule."""
    items = sorted(f.items(), key=lambda kv: order.key(kv[0]), reverse=True)
    if len(items) == 1:
        (lead, _), = items
        return Rule(lead, None, None)
    if len(items) != 2:
        raise ZeroBinomial("completion produced a non-binomial element")
    (lead, lc), (tail, tc) = items
    return Rule(lead, -(lc.inv()) * tc, tail)


def complete(ctx, generators, order=LEX):
    """Confluent binomial rewrite system for the two-sided ideal.

    S-pairs overlap at componentwise maxima of leads; additionally every rule
    is multiplied by each variable on the right, which accounts for the
    monomials that two-sided twisting can create.
    """
    agenda = deque()
    for g in generators:
        g = {k: v for k, v in g.items() if not v.is_zero()}
        if not g:
            continue
        if len(g) > 2:
            raise ZeroBinomial("generators must be binomials")
        agenda.append(dict(g))
    rules = []
    one = ctx.field_one()
    unit_vecs = [tuple(int(i == j) for j in range(ctx.n)) for i in range(ctx.n)]

    def push_consequences(new_rule, others):
        for other in others:
            mu = tuple(max(a, b) for a, b in zip(new_rule.lead, other.lead))
            s = element_add(_one_step_image(ctx, mu, new_rule, one),
                            {k: -v for k, v in _one_step_image(ctx, mu, other, one).items()})
            if s:
                agenda.append(s)
        if not new_rule.is_monomial():
            g = new_rule.as_element(ctx)
            for e in unit_vecs:
                agenda.append(element_mul(ctx, g, {e: one}))

    while agenda:
        el = agenda.popleft()
        el = _reduce(ctx, order, rules, dict(el))
        if not el:
            continue
        rule = _element_to_rule(ctx, order, el)
        keep = []
        for r in rules:
            if _divides(rule.lead, r.lead):
                agenda.append(r.as_element(ctx))
            elif r.tail is not None and _divides(rule.lead, r.tail):
                agenda.append(r.as_element(ctx))
            else:
                keep.append(r)
        rules = keep
        push_consequences(rule, rules)
        rules.append(rule)
    return RewriteSystem(ctx, order, rules)


def _one_step_image(ctx, mono, rule, one):
    """Image of x^mono after one application of the rule (empty if killed)."""
    eps = tuple(a - b for a, b in zip(mono, rule.lead))
    if rule.is_monomial():
        return {}
    scalar = rule.coeff
    if any(eps):
        scalar = (_to_field(ctx, ctx.d(eps, rule.lead).inv()) * scalar
                  * _to_field(ctx, ctx.d(eps, rule.tail)))
    return {tuple(a + b for a, b in zip(eps, rule.tail)): scalar}


class AffineBinomialIdeal:
    """A binomial ideal of A_q held by generators, completed on demand."""

    def __init__(self, ctx, generators):
        self.ctx = ctx
        self.generators = [dict(g) for g in generators if any(not v.is_zero() for v in g.values())]
        self._systems = {}
        self.stratum = None
        self.character = None

    def system(self, order=LEX):
        key = order.cache_key
        if key not in self._systems:
            self._systems[key] = complete(self.ctx, self.generators, order)
        return self._systems[key]

    def normal_form(self, f):
        return self.system().reduce(f)

    def contains(self, f):
        return not self.system().reduce(f)

    def is_whole(self):
        one = {(0,) * self.ctx.n: self.ctx.field_one()}
        return self.contains(one)

    def is_zero_ideal(self):
        return not self.generators

    def canonical_binomials(self):
        """The inter-reduced rule list as binomial elements, sorted by lead."""
        return [r.as_element(self.ctx) for r in self.system().rules]

    def __eq__(self, other):
        if not isinstance(other, AffineBinomialIdeal):
            return NotImplemented
        return ideal_equal(self, other)

    def __repr__(self):
        return f"AffineBinomialIdeal({len(self.generators)} generators, n={self.ctx.n})"


def unit_ideal(ctx):
    return AffineBinomialIdeal(ctx, [{(0,) * ctx.n: ctx.field_one()}])


def ideal_sum(a, *rest):
    gens = list(a.generators)
    for b in rest:
        gens.extend(b.generators)
    return AffineBinomialIdeal(a.ctx, gens)


def ideal_equal(a, b):
    ga = all(b.contains(g) for g in a.generators)
    gb = all(a.contains(g) for g in b.generators)
    return ga and gb


def normal_form_affine(system, f):
    return system.reduce(f)


def contains_affine(ideal, f):
    return ideal.contains(f)


def contains_monomial(ideal):
    """True iff some monomial lies in the ideal (a monomial rule survives)."""
    return bool(ideal.system().monomial_rules())


def binomial_element(ctx, lam, alpha, mu, beta):
    out = {}
    lam, mu = _to_field(ctx, lam), _to_field(ctx, mu)
    alpha, beta = tuple(alpha), tuple(beta)
    if not lam.is_zero():
        out[alpha] = lam
    if not mu.is_zero():
        out[beta] = out[beta] + mu if beta in out else mu
    return {k: v for k, v in out.items() if not v.is_zero()}


# ---------------------------------------------------------------------------
# elimination and projections


def eliminate(ideal, keep):
    """Contraction to the subring on the 1-based variable subset keep."""
    ctx = ideal.ctx
    keep = tuple(sorted(keep))
    if keep == tuple(range(1, ctx.n + 1)):
        return AffineBinomialIdeal(ctx, ideal.generators)
    dominant = [i for i in range(ctx.n) if (i + 1) not in set(keep)]
    order = BlockOrder(dominant, ctx.n)
    system = ideal.system(order)
    subctx = ctx.subcontext(keep)
    idx = [k - 1 for k in keep]
    gens = []
    for r in system.rules:
        if all(r.lead[i] == 0 for i in dominant):
            lead = tuple(r.lead[i] for i in idx)
            if r.is_monomial():
                gens.append({lead: subctx.field_one()})
            else:
                tail = tuple(r.tail[i] for i in idx)
                gens.append({lead: subctx.field_one(), tail: -r.coeff})
    return AffineBinomialIdeal(subctx, gens)


def project_vars(ideal, keep):
    """pi_J: kill the variables outside keep, land in the subring on keep."""
    ctx = ideal.ctx
    keep = tuple(sorted(keep))
    subctx = ctx.subcontext(keep)
    idx = [k - 1 for k in keep]
    outside = [i for i in range(ctx.n) if (i + 1) not in set(keep)]
    gens = []
    for g in ideal.generators:
        h = {}
        for mono, coeff in g.items():
            if any(mono[i] for i in outside):
                continue
            key = tuple(mono[i] for i in idx)
            h[key] = h[key] + coeff if key in h else coeff
        h = {k: v for k, v in h.items() if not v.is_zero()}
        if h:
            gens.append(h)
    return AffineBinomialIdeal(subctx, gens)


def lift_elements(ctx, sub_gens, keep):
    """Embed element maps from the subring on keep back into ctx."""
    idx = [k - 1 for k in sorted(keep)]
    out = []
    for g in sub_gens:
        h = {}
        for mono, coeff in g.items():
            full = [0] * ctx.n
            for pos, e in zip(idx, mono):
                full[pos] = e
            h[tuple(full)] = coeff
        out.append(h)
    return out


# ---------------------------------------------------------------------------
# contraction of torus ideals and the x-closure


def _plus_minus(alpha):
    plus = tuple(max(a, 0) for a in alpha)
    minus = tuple(-min(a, 0) for a in alpha)
    return plus, minus


def character_binomial(ctx, char, alpha):
    """x^(a+) - c(a)^(-1) d(a, a_-)^(-1) rho(a) x^(a_-) for alpha in L."""
    plus, minus = _plus_minus(alpha)
    scalar = (_to_field(ctx, ctx.c(alpha).inv())
              * _to_field(ctx, ctx.d(alpha, minus).inv()) * char(alpha))
    return {plus: ctx.field_one(), minus: -scalar} if any(minus) or any(plus) \
        else {}


def _strip_common(ctx, rule):
    """Strip the common variable part from a binomial rule, or None."""
    if rule.is_monomial():
        return None
    delta = tuple(min(a, b) for a, b in zip(rule.lead, rule.tail))
    if not any(delta):
        return None
    bp = tuple(a - d for a, d in zip(rule.lead, delta))
    gp = tuple(a - d for a, d in zip(rule.tail, delta))
    nu = (rule.coeff * _to_field(ctx, ctx.d(bp, delta))
          * _to_field(ctx, ctx.d(gp, delta).inv()))
    return {bp: ctx.field_one(), gp: -nu}


def contract_from_torus(ctx, char, sample_bound=None, max_rounds=60):
    """Finite generating set of I(L, rho) intersected with A_q.

    Iterates completion plus common-variable stripping to a fixpoint, then
    certifies membership of every sampled lattice binomial, feeding failures
    back in.  Raises BoundExceeded if the loop does not stabilize.
    """
    lat = char.lattice
    if lat.rank == 0:
        return AffineBinomialIdeal(ctx, [])
    gens = [character_binomial(ctx, char, row) for row in lat.basis]
    samples = _lattice_sample(lat, sample_bound)
    ideal = AffineBinomialIdeal(ctx, gens)
    for _ in range(max_rounds):
        progress = False
        system = ideal.system()
        assert not system.monomial_rules(), "contractions are monomial-free"
        for rule in system.binomial_rules():
            stripped = _strip_common(ctx, rule)
            if stripped and not ideal.contains(stripped):
                gens.append(stripped)
                progress = True
        if not progress:
            for alpha in samples:
                cand = character_binomial(ctx, char, alpha)
                if cand and not ideal.contains(cand):
                    gens.append(cand)
                    progress = True
        if not progress:
            out = AffineBinomialIdeal(ctx, ideal.canonical_binomials())
            out.character = char
            return out
        ideal = AffineBinomialIdeal(ctx, gens)
    raise BoundExceeded("contraction did not stabilize within the round bound")


def _lattice_sample(lat, sample_bound, combo_cap=20000):
    if lat.rank == 0:
        return []
    max_entry = max(abs(x) for row in lat.basis for x in row)
    bound = sample_bound if sample_bound is not None else 2 * max_entry
    mb = bound + 1
    while (2 * mb + 1) ** lat.rank > combo_cap and mb > 1:
        mb -= 1
    out = []
    for combo in itertools.product(range(-mb, mb + 1), repeat=lat.rank):
        if not any(combo):
            continue
        alpha = [0] * lat.ambient_dim
        for m, row in zip(combo, lat.basis):
            if m:
                alpha = [a + m * b for a, b in zip(alpha, row)]
        if all(abs(a) <= bound for a in alpha):
            out.append(tuple(alpha))
    return out


def saturate_x(ideal, cert_power=24):
    """The x-closure (I : x_bullet) with its partial character.

    Returns (unit ideal, None) when the ideal contains a monomial; otherwise
    localizes to the torus, recognizes (L, rho) and contracts back, then
    certifies that some right monomial multiple of each closure generator
    falls back into the ideal.
    """
    ctx = ideal.ctx
    if ideal.is_zero_ideal():
        return AffineBinomialIdeal(ctx, []), _trivial_character(ctx)
    if contains_monomial(ideal):
        return unit_ideal(ctx), None
    torus_gens = []
    for g in ideal.generators:
        items = list(g.items())
        assert len(items) == 2, "monomial generators imply contains_monomial"
        (a, la), (b, mb) = items
        torus_gens.append((la, a, mb, b))
    torus_ideal = TI.from_generators(ctx, torus_gens)
    assert not torus_ideal.is_whole(), "monomial-free ideals localize properly"
    char = torus_ideal.character
    closure = contract_from_torus(ctx, char)
    one = ctx.field_one()
    for g in closure.generators:
        ok = False
        power = {(0,) * ctx.n: one}
        step = {(1,) * ctx.n: one}
        for _ in range(cert_power + 1):
            if ideal.contains(element_mul(ctx, g, power)):
                ok = True
                break
            power = element_mul(ctx, power, step)
        if not ok:
            raise BoundExceeded("x-closure certificate not found within bound")
    closure.character = char
    return closure, char


def _trivial_character(ctx):
    return TI.PartialCharacter(ctx, zero_lattice(ctx.n), [])


# ---------------------------------------------------------------------------
# special intersections (monoid bookkeeping plus the central-variable trick)


def _monomial_up_set_intersection(base, mono_ideals, slack=2):
    """Minimal exponents alpha with x^alpha in base + J_i for every i.

    Degree-bounded scan per the stabilization policy: the bound is the
    maximal generator degree plus the variable count (plus slack layers used
    only to certify that nothing new appears).
    """
    ctx = base.ctx
    n = ctx.n
    if n == 0:
        return []
    sums = [ideal_sum(base, J) for J in mono_ideals]
    systems = [s.system() for s in sums]
    degs = [sum(k) for g in base.generators for k in g] or [0]
    for J in mono_ideals:
        degs.extend(sum(k) for g in J.generators for k in g)
    bound = max(degs) + n
    mins = []
    one = ctx.field_one()
    for d in range(0, bound + slack + 1):
        for alpha in _compositions(d, n):
            if any(_divides(m, alpha) for m in mins):
                continue
            if all(not sys.reduce({alpha: one}) for sys in systems):
                if d > bound:
                    raise BoundExceeded(
                        "monomial intersection did not stabilize at the degree bound")
                mins.append(alpha)
    return mins


def _compositions(total, n):
    if n == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, n - 1):
            yield (head,) + rest


def _extend_context(ctx):
    """Adjoin one central variable t as the last letter."""
    upper = {}
    for i in range(1, ctx.n + 1):
        for j in range(i + 1, ctx.n + 1):
            upper[(i, j)] = ctx.q.q(i, j)
    one = ctx.q.q(1, 1) if ctx.n else None
    if one is None:
        from .torus_core import _one
        one = _one(ctx.backend)
    for i in range(1, ctx.n + 1):
        upper[(i, ctx.n + 1)] = one
    return TorusContext(QMatrix(ctx.backend, ctx.n + 1, upper))


def intersect_special(ideal, other, monomial_ideals=()):
    """(I + I') intersected with every I + J_i for monomial ideals J_i."""
    ctx = ideal.ctx
    mono_ideals = [J for J in monomial_ideals]
    if mono_ideals:
        mins = _monomial_up_set_intersection(ideal, mono_ideals)
        J = AffineBinomialIdeal(ctx, [{m: ctx.field_one()} for m in mins])
    else:
        J = None
    if other is None or other.is_whole():
        if J is None:
            return AffineBinomialIdeal(ctx, ideal.generators)
        return ideal_sum(ideal, J)
    if J is None:
        return ideal_sum(ideal, other)
    # central-variable trick: I[t] + t I'[t] + (1-t) J[t], then eliminate t
    ctx_t = _extend_context(ctx)
    one = ctx_t.field_one()
    t = tuple([0] * ctx.n + [1])
    gens_t = []
    for g in ideal.generators:
        gens_t.append({k + (0,): v for k, v in g.items()})
    for g in other.generators:
        lifted = {k + (0,): v for k, v in g.items()}
        gens_t.append(element_mul(ctx_t, {t: one}, lifted))
    for g in J.generators:
        lifted = {k + (0,): v for k, v in g.items()}
        one_minus_t = {(0,) * (ctx.n + 1): one, t: -one}
        gens_t.append(element_mul(ctx_t, one_minus_t, lifted))
    big = AffineBinomialIdeal(ctx_t, gens_t)
    sub = eliminate(big, range(1, ctx.n + 1))
    # re-ground the eliminated ideal in the original context
    return AffineBinomialIdeal(ctx, [dict(g) for g in sub.generators])


# ---------------------------------------------------------------------------
# radicals


def radical_affine(ideal, _depth=0):
    """The prime radical, itself binomial (perfect base fields only).

    Recursion: grow the ideal by radicals of its variable sections, take the
    torus-side radical of the x-closure, turn each I + <x_i> into a radical
    binomial part plus monomials, and reassemble with intersect_special.
    """
    ctx = ideal.ctx
    n = ctx.n
    if n == 0 or ideal.is_whole():
        return AffineBinomialIdeal(ctx, ideal.generators)
    gens = [dict(g) for g in ideal.generators]
    current = AffineBinomialIdeal(ctx, gens)
    for _ in range(40):
        # grow by radicals of the variable sections (they lie inside sqrt I)
        grown = False
        for i in range(1, n + 1):
            keep = tuple(j for j in range(1, n + 1) if j != i)
            section = eliminate(current, keep)
            rad_section = radical_affine(section, _depth + 1)
            lifted = lift_elements(ctx, rad_section.generators, keep)
            for g in lifted:
                if not current.contains(g):
                    gens.append(g)
                    grown = True
            if grown:
                current = AffineBinomialIdeal(ctx, gens)
        if not grown:
            break
    else:
        raise BoundExceeded("radical growth loop did not stabilize")
    if contains_monomial(current):
        clos_part = None
    else:
        _, char = saturate_x(current)
        rad_torus = TI.radical(TI.TorusBinomialIdeal(ctx, char))
        clos_part = contract_from_torus(ctx, rad_torus.character)
    mono_parts = []
    for i in range(1, n + 1):
        keep = tuple(j for j in range(1, n + 1) if j != i)
        section = eliminate(current, keep)  # radical by the growth loop
        m_gens = _section_monomials(current, i, keep)
        n_i = _radical_binomial_plus_monomial(section, m_gens, _depth + 1)
        lifted = lift_elements(ctx, [{m: ctx.field_one()} for m in n_i], keep)
        e_i = tuple(int(k == i - 1) for k in range(n))
        mono = AffineBinomialIdeal(ctx, lifted + [{e_i: ctx.field_one()}])
        mono_parts.append(mono)
    out = intersect_special(current, clos_part, mono_parts)
    return AffineBinomialIdeal(ctx, out.canonical_binomials())


def _section_monomials(ideal, i, keep):
    """Monomial exponents of pi_i(generators), in the subring on keep."""
    idx = [k - 1 for k in keep]
    pos = i - 1
    out = []
    for g in ideal.generators:
        live = [(m, c) for m, c in g.items() if m[pos] == 0]
        if len(live) == 1 and len(g) > len(live):
            out.append(tuple(live[0][0][k] for k in idx))
        elif len(live) == 1 and len(g) == 1:
            out.append(tuple(live[0][0][k] for k in idx))
    return out


def min_primes_affine(ideal):
    """All primes minimal over the ideal, each tagged with its stratum.

    For every variable subset J the ideal is projected onto A_q[J], closed
    under the remaining variables, and the torus minimal primes are pulled
    back as I_{J,A}(L', rho'); non-containing and non-minimal candidates are
    discarded.
    """
    ctx = ideal.ctx
    n = ctx.n
    one = ctx.field_one()
    candidates = []
    for bits in itertools.product((0, 1), repeat=n):
        keep = tuple(i + 1 for i in range(n) if bits[i])
        proj = project_vars(ideal, keep)
        if proj.is_whole():
            continue
        if contains_monomial(proj):
            continue
        _, char = saturate_x(proj)
        sub_primes = TI.min_assoc_primes(TI.TorusBinomialIdeal(proj.ctx, char))
        for P in sub_primes:
            contraction = contract_from_torus(proj.ctx, P.character)
            lifted = lift_elements(ctx, contraction.generators, keep)
            for j in range(1, n + 1):
                if j not in keep:
                    e = tuple(int(k == j - 1) for k in range(n))
                    lifted.append({e: one})
            cand = AffineBinomialIdeal(ctx, lifted)
            cand.stratum = keep
            cand.character = P.character
            candidates.append(cand)
    candidates = [P for P in candidates
                  if all(P.contains(g) for g in ideal.generators)]
    out = []
    for P in candidates:
        keep_it = True
        for Q in candidates:
            if Q is P:
                continue
            q_in_p = all(P.contains(g) for g in Q.generators)
            p_in_q = all(Q.contains(g) for g in P.generators)
            if q_in_p and not p_in_q:
                keep_it = False  # Q is strictly smaller
                break
            if q_in_p and p_in_q and candidates.index(Q) < candidates.index(P):
                keep_it = False  # duplicate, keep the first
                break
        if keep_it:
            out.append(P)
    return out


class AffineClassifyReport:
    def __init__(self, is_prime, is_completely_prime, is_primitive, stratum, character):
        self.is_prime = is_prime
        self.is_completely_prime = is_completely_prime
        self.is_primitive = is_primitive
        self.stratum = stratum
        self.character = character

    def __repr__(self):
        return ("AffineClassifyReport(prime={0.is_prime}, completely_prime="
                "{0.is_completely_prime}, primitive={0.is_primitive}, "
                "stratum={0.stratum})".format(self))


def classify_affine(ideal):
    """Prime / completely prime / primitive classification via strata."""
    ctx = ideal.ctx
    n = ctx.n
    one = ctx.field_one()
    stratum = tuple(j for j in range(1, n + 1)
                    if not ideal.contains({tuple(int(k == j - 1) for k in range(n)): one}))
    proj = project_vars(ideal, stratum)
    if proj.is_whole() or contains_monomial(proj):
        return AffineClassifyReport(False, False, False, stratum, None)
    closure, char = saturate_x(proj)
    closed = all(proj.contains(g) for g in closure.generators)
    if not closed:
        return AffineClassifyReport(False, False, False, stratum, char)
    subctx = proj.ctx
    from .lattice import full_lattice, saturate as _sat
    lat = char.lattice
    prime = _sat(lat, subctx.gamma_z, "full") == lat
    cprime = _sat(lat, full_lattice(subctx.n), "full") == lat
    primitive = prime and lat == subctx.gamma_z
    return AffineClassifyReport(prime, cprime, primitive, stratum, char)


def congruence_classes(ideal, degree_bound):
    """Partition of the exponent box by the monoid congruence of the quotient.

    Returns (classes, zero_class): classes maps each normal-form exponent to
    the sorted list of exponents whose monomials are scalar multiples of it.
    """
    ctx = ideal.ctx
    system = ideal.system()
    one = ctx.field_one()
    classes = {}
    zero = []
    for d in range(degree_bound + 1):
        for alpha in _compositions(d, ctx.n) if ctx.n else [()]:
            nf = system.reduce({alpha: one})
            if not nf:
                zero.append(alpha)
            else:
                (key, _), = nf.items()
                classes.setdefault(key, []).append(alpha)
    return {k: sorted(v) for k, v in classes.items()}, sorted(zero)


def _radical_binomial_plus_monomial(b_ideal, mono_exponents, _depth=0):
    """Monomial exponents N with sqrt(B + M) = B + <x^N>, B radical binomial."""
    ctx = b_ideal.ctx
    n = ctx.n
    one = ctx.field_one()
    mono_exponents = [tuple(m) for m in mono_exponents]
    live = [m for m in mono_exponents if not b_ideal.contains({m: one})]
    if not live:
        return []
    if n == 0:
        return [()]
    mono_parts = []
    for i in range(1, n + 1):
        keep = tuple(j for j in range(1, n + 1) if j != i)
        idx = [k - 1 for k in keep]
        b_section = eliminate(b_ideal, keep)
        m_prime = [tuple(m[k] for k in idx) for m in live if m[i - 1] == 0]
        m_second = _section_monomials(b_ideal, i, keep)
        n_i = _radical_binomial_plus_monomial(b_section, m_prime + m_second, _depth + 1)
        lifted = lift_elements(ctx, [{m: one} for m in n_i], keep)
        e_i = tuple(int(k == i - 1) for k in range(n))
        mono_parts.append(AffineBinomialIdeal(ctx, lifted + [{e_i: one}]))
    mins = _monomial_up_set_intersection(b_ideal, mono_parts)
    return mins
