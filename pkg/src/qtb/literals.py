"""Scalar and element literals: one grammar for input and canonical output.

Characteristic-zero scalar terms follow  rational ( "*" part )*  with parts
z^a/b (root-of-unity tower), p<prime>^a[/b], t<idx>^a[/b]; the leading
rational may be omitted when parts are present.  Sums join terms with + and -;
a genuine quotient prints as (num)/(den).  GF literals are polynomials in the
generator g, prefixed deg<m>: when the element does not lie in the prime
field.  Ring elements are sums of  coef*x^(e1,...,en)  terms.
"""

import re
from fractions import Fraction

from .errors import ParseError
from .gf import GFBackend, GFElem
from .scalars import CharZeroBackend, FieldElem, ToricScalar

_PART = re.compile(
    r"z\^(?P<znum>-?\d+)/(?P<zden>\d+)"
    r"|t(?P<tidx>\d+)\^(?P<tnum>-?\d+)(?:/(?P<tden>\d+))?"
    r"|p(?P<pp>\d+)\^(?P<pnum>-?\d+)(?:/(?P<pden>\d+))?"
    r"|(?P<rnum>\d+)(?:/(?P<rden>\d+))?"
    r"|g(?:\^(?P<gexp>\d+))?"
)


def _split_top(text, seps):
    """Split on separators at paren depth zero, keeping separators.

    A '+' or '-' immediately after '^', '*', '/' or '(' is part of the factor
    (an exponent sign), not a separator.
    """
    parts, buf, depth = [], "", 0
    prev = ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        sep_here = depth == 0 and ch in seps and prev not in {"^", "*", "/", "("}
        if ch == ")" and depth == 0:
            sep_here = False
        if sep_here:
            if buf.strip():
                parts.append(buf)
            parts.append(ch)
            buf = ""
        else:
            buf += ch
        if not ch.isspace():
            prev = ch
    if buf.strip():
        parts.append(buf)
    return parts


def parse_scalar(text, backend):
    """Parse a scalar literal into a FieldElem / GFElem of the backend."""
    text = text.strip()
    if isinstance(backend, GFBackend):
        return _parse_gf(text, backend)
    m = re.fullmatch(r"\((?P<num>.*)\)\s*/\s*\((?P<den>.*)\)", text)
    if m:
        num = parse_scalar(m.group("num"), backend)
        den = parse_scalar(m.group("den"), backend)
        return num * den.inv()
    if text.startswith("(") and text.endswith(")"):
        depth, wraps = 0, True
        for i, ch in enumerate(text):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0 and i < len(text) - 1:
                wraps = False
                break
        if wraps:
            return parse_scalar(text[1:-1], backend)
    total = backend.zero()
    sign = 1
    for piece in _split_top(text, "+-"):
        piece = piece.strip()
        if piece == "+":
            sign = 1
            continue
        if piece == "-":
            sign = -1
            continue
        term = _parse_term(piece, backend)
        total = total + term if sign == 1 else total - term
        sign = 1
    return total


def _parse_term(piece, backend):
    value = backend.one()
    seen_any = False
    for factor in piece.split("*"):
        factor = factor.strip()
        if not factor:
            raise ParseError([f"empty factor in scalar term {piece!r}"])
        m = _PART.fullmatch(factor)
        if not m:
            raise ParseError([f"bad scalar factor {factor!r}"])
        seen_any = True
        if m.group("znum") is not None:
            q = Fraction(int(m.group("znum")), int(m.group("zden")))
            value = value * backend.toric_zeta(q).to_field()
        elif m.group("tidx") is not None:
            e = Fraction(int(m.group("tnum")), int(m.group("tden") or 1))
            value = value * backend.toric_param(int(m.group("tidx")), e).to_field()
        elif m.group("pp") is not None:
            e = Fraction(int(m.group("pnum")), int(m.group("pden") or 1))
            value = value * backend.toric_prime_power(int(m.group("pp")), e).to_field()
        elif m.group("rnum") is not None:
            value = value * backend.rational(int(m.group("rnum")), int(m.group("rden") or 1))
        else:
            raise ParseError([f"parameter/root factor {factor!r} not valid here"])
    if not seen_any:
        raise ParseError([f"empty scalar term {piece!r}"])
    return value


def _parse_gf(text, backend):
    deg = 1
    m = re.match(r"deg(\d+):", text)
    if m:
        deg = int(m.group(1))
        text = text[m.end():]
    total = backend.zero()
    sign = 1
    for piece in _split_top(text, "+-"):
        piece = piece.strip()
        if piece == "+":
            sign = 1
            continue
        if piece == "-":
            sign = -1
            continue
        coeff, gexp = 1, 0
        for factor in piece.split("*"):
            factor = factor.strip()
            fm = _PART.fullmatch(factor)
            if not fm:
                raise ParseError([f"bad GF factor {factor!r}"])
            if fm.group("rnum") is not None:
                coeff *= int(fm.group("rnum"))
                if fm.group("rden"):
                    raise ParseError(["GF literals take integer coefficients"])
            elif factor.startswith("g"):
                gexp += int(fm.group("gexp") or 1)
            else:
                raise ParseError([f"factor {factor!r} not valid in GF literal"])
        coeffs = [0] * (gexp + 1)
        coeffs[gexp] = coeff
        term = backend.from_poly(coeffs, max(deg, 1 if gexp == 0 else deg))
        total = total + term if sign == 1 else total - term
    return total


# ---------------------------------------------------------------------------
# printing


def _fmt_fraction(q):
    return str(q) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _flat_terms(elem):
    """Expand a polynomial term map into printable (rational, parts) tuples."""
    rows = []
    for key in sorted(elem, key=lambda k: (k[1], k[0]), reverse=True):
        n, vec = elem[key].reduced()
        for i, c in enumerate(vec):
            if not c:
                continue
            parts = []
            if i:
                parts.append(f"z^{i}/{n}")
            for p, e in key[0]:
                parts.append(f"p{p}^{_fmt_fraction(e)}")
            for idx, f in enumerate(key[1], start=1):
                if f:
                    parts.append(f"t{idx}^{_fmt_fraction(f)}")
            rows.append((c, parts))
    return rows


def _join_terms(rows):
    if not rows:
        return "0"
    out = []
    for c, parts in rows:
        mag = -c if c < 0 else c
        body = "*".join(parts)
        if not parts:
            body = _fmt_fraction(mag)
        elif mag != 1:
            body = f"{_fmt_fraction(mag)}*{body}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(out)


def format_scalar(x):
    if isinstance(x, ToricScalar):
        x = x.to_field()
    if isinstance(x, GFElem):
        if x.deg == 1:
            return str(x.coeffs[0])
        body = []
        for i in range(x.deg - 1, -1, -1):
            c = x.coeffs[i]
            if not c:
                continue
            if i == 0:
                body.append(str(c))
            else:
                pow_txt = "g" if i == 1 else f"g^{i}"
                body.append(pow_txt if c == 1 else f"{c}*{pow_txt}")
        return f"deg{x.deg}:" + "+".join(body)
    if not isinstance(x, FieldElem):
        raise TypeError(f"cannot format {x!r}")
    if x.is_polynomial():
        return _join_terms(_flat_terms(x.num))
    return f"({_join_terms(_flat_terms(x.num))})/({_join_terms(_flat_terms(x.den))})"


# ---------------------------------------------------------------------------
# ring-element literals: sums of coef*x^(e1,...,en)


_EXPVEC = re.compile(r"x\^\((?P<body>[^)]*)\)")


def parse_exponent_vector(text, n):
    m = _EXPVEC.fullmatch(text.strip())
    if not m:
        raise ParseError([f"bad monomial {text!r}"])
    body = m.group("body").strip()
    entries = [int(e.strip()) for e in body.split(",")] if body else []
    if len(entries) != n:
        raise ParseError([f"monomial {text!r} has {len(entries)} exponents, expected {n}"])
    return tuple(entries)


def parse_element(text, backend, n):
    """Parse a sum of coef*x^(..) terms into an exponent -> coefficient map."""
    out = {}
    sign = 1
    for piece in _split_top(text, "+-"):
        piece = piece.strip()
        if piece == "+":
            sign = 1
            continue
        if piece == "-":
            sign = -1
            continue
        mono = None
        coeff_factors = []
        for factor in _split_top(piece, "*"):
            factor = factor.strip()
            if factor == "*":
                continue
            if _EXPVEC.fullmatch(factor):
                if mono is not None:
                    raise ParseError([f"two monomials in one term: {piece!r}"])
                mono = parse_exponent_vector(factor, n)
            else:
                coeff_factors.append(factor)
        if mono is None:
            mono = (0,) * n
        coeff = parse_scalar("*".join(coeff_factors), backend) if coeff_factors \
            else backend.one()
        coeff = coeff if sign == 1 else -coeff
        if mono in out:
            out[mono] = out[mono] + coeff
        else:
            out[mono] = coeff
        sign = 1
    return {k: c for k, c in out.items() if not c.is_zero()}


def format_exponent_vector(alpha):
    return "x^(" + ",".join(str(a) for a in alpha) + ")"


def format_element(terms):
    """Canonical text for an exponent -> coefficient map (descending lex)."""
    if not terms:
        return "0"
    out = []
    for alpha in sorted(terms, reverse=True):
        c = terms[alpha]
        txt = format_scalar(c)
        neg = txt.startswith("-") and " " not in txt
        if neg:
            txt = txt[1:]
        if " " in txt or (txt.startswith("deg") and ("+" in txt or "-" in txt)):
            body = f"({txt})*{format_exponent_vector(alpha)}"
        else:
            body = f"{txt}*{format_exponent_vector(alpha)}"
        if not out:
            out.append(body if not neg else f"-{body}")
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)
