"""Sparse polynomials over the nonnegative integers, in one or two variables.

A polynomial is a map from exponents to positive integer coefficients; the
zero polynomial is the empty map.  Exponents are plain Python naturals, so
a value like 2**label stays exact no matter how large the label is.  The
``bits`` module translates between an exponent and its set of binary digit
positions when the bit-level view is needed.

Univariate terms are keyed by the x-exponent, bivariate terms by an
(x-exponent, y-exponent) pair.  Text form follows the grammar

    poly  := term (" + " term)*
    term  := coeff | mono | coeff "*" mono
    mono  := var ("^" nat)? ("*" var ("^" nat)?)?

with terms rendered in strictly decreasing exponent order (bivariate:
lexicographic on the (x, y) exponent pair) and "0" for the zero polynomial.
``parse_poly`` accepts the same grammar back, is lenient about whitespace,
and merges duplicate monomials.
"""

from __future__ import annotations

import re
from math import gcd
from types import MappingProxyType

from .errors import BitWidthError, PolyParseError


def _clean_terms(items, arity):
    terms = {}
    for exp, coeff in items:
        if arity == 1:
            ok = isinstance(exp, int) and not isinstance(exp, bool) and exp >= 0
        else:
            ok = (
                isinstance(exp, tuple)
                and len(exp) == 2
                and all(isinstance(e, int) and not isinstance(e, bool) and e >= 0 for e in exp)
            )
        if not ok:
            raise ValueError(f"bad exponent {exp!r} for a {arity}-variable polynomial")
        if not isinstance(coeff, int) or isinstance(coeff, bool):
            raise ValueError(f"coefficient must be an integer, got {coeff!r}")
        if coeff < 0:
            raise ValueError(f"coefficient must be nonnegative, got {coeff}")
        if coeff:
            terms[exp] = terms.get(exp, 0) + coeff
    # Descending exponent order; iteration order is then canonical everywhere.
    return dict(sorted(terms.items(), reverse=True))


class Poly1:
    """Polynomial in x alone: {exponent: coefficient}, coefficients > 0."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        items = terms.items() if hasattr(terms, "items") else terms
        self._terms = _clean_terms(items, 1)

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    @property
    def degree(self):
        """Largest exponent; -1 for the zero polynomial."""
        return max(self._terms) if self._terms else -1

    def constant_coeff(self):
        return self._terms.get(0, 0)

    def is_constant(self):
        return self.degree <= 0

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        return isinstance(other, Poly1) and self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __add__(self, other):
        if not isinstance(other, Poly1):
            return NotImplemented
        return add(self, other)

    def __mul__(self, other):
        if not isinstance(other, Poly1):
            return NotImplemented
        return mul(self, other)

    def __call__(self, t):
        return evaluate(self, t)

    def render(self):
        return render(self)

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Poly1({render(self)!r})"


class Poly2:
    """Polynomial in x and y: {(x-exponent, y-exponent): coefficient}."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        items = terms.items() if hasattr(terms, "items") else terms
        self._terms = _clean_terms(items, 2)

    @classmethod
    def monomial(cls, xexp, yexp, coeff=1):
        return cls({(xexp, yexp): coeff})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    @property
    def degrees(self):
        """(max x-exponent, max y-exponent); (-1, -1) for zero."""
        if not self._terms:
            return (-1, -1)
        return (max(i for i, _ in self._terms), max(j for _, j in self._terms))

    def constant_coeff(self):
        return self._terms.get((0, 0), 0)

    def is_constant(self):
        return all(e == (0, 0) for e in self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        return isinstance(other, Poly2) and self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __add__(self, other):
        if not isinstance(other, Poly2):
            return NotImplemented
        return add(self, other)

    def __mul__(self, other):
        if not isinstance(other, Poly2):
            return NotImplemented
        return mul(self, other)

    def __call__(self, tx, ty):
        return evaluate2(self, tx, ty)

    def render(self):
        return render(self)

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Poly2({render(self)!r})"


def _check_width(poly, width):
    if width is None:
        return poly
    for exp, coeff in poly.terms.items():
        parts = (exp,) if isinstance(exp, int) else exp
        for e in parts:
            if e.bit_length() > width:
                raise BitWidthError(f"exponent needs {e.bit_length()} bits, width is {width}")
        if coeff.bit_length() > width:
            raise BitWidthError(f"coefficient needs {coeff.bit_length()} bits, width is {width}")
    return poly


def _same_arity(p, q):
    if type(p) is not type(q):
        raise TypeError(f"mixed polynomial arities: {type(p).__name__} and {type(q).__name__}")


def add(p, q, width=None):
    """Sum in the same semiring; optional bit-width bound on the result."""
    _same_arity(p, q)
    out = dict(p.terms)
    for exp, coeff in q.terms.items():
        out[exp] = out.get(exp, 0) + coeff
    return _check_width(type(p)(out), width)


def mul(p, q, width=None):
    """Product in the same semiring; optional bit-width bound on the result."""
    _same_arity(p, q)
    out = {}
    if isinstance(p, Poly1):
        for e1, c1 in p.terms.items():
            for e2, c2 in q.terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
    else:
        for (i1, j1), c1 in p.terms.items():
            for (i2, j2), c2 in q.terms.items():
                e = (i1 + i2, j1 + j2)
                out[e] = out.get(e, 0) + c1 * c2
    return _check_width(type(p)(out), width)


def evaluate(p, t, width=None):
    """Value of a one-variable polynomial at a natural t."""
    if not isinstance(p, Poly1):
        raise TypeError("evaluate takes a one-variable polynomial; use evaluate2")
    val = sum(c * t**e for e, c in p.terms.items())
    if width is not None and val.bit_length() > width:
        raise BitWidthError(f"value needs {val.bit_length()} bits, width is {width}")
    return val


def evaluate2(p, tx, ty, width=None):
    """Value of a two-variable polynomial at naturals (tx, ty)."""
    if not isinstance(p, Poly2):
        raise TypeError("evaluate2 takes a two-variable polynomial")
    val = sum(c * tx**i * ty**j for (i, j), c in p.terms.items())
    if width is not None and val.bit_length() > width:
        raise BitWidthError(f"value needs {val.bit_length()} bits, width is {width}")
    return val


def lift(p: Poly1) -> Poly2:
    """Embed N[x] into N[x,y]: every term gets y-exponent 0."""
    if isinstance(p, Poly2):
        return p
    return Poly2({(e, 0): c for e, c in p.terms.items()})


def content(p) -> int:
    """Greatest common divisor of the coefficients; 0 for the zero polynomial."""
    g = 0
    for c in p.terms.values():
        g = gcd(g, c)
    return g


def poly_key(p):
    """Total-order key: the term list in descending exponent order.

    Comparing keys compares term lists lexicographically by (exponent,
    coefficient), which is the tie-break order used for canonical forms.
    """
    return tuple(p.terms.items())


# ---------------------------------------------------------------------------
# Long division.

def _divide_terms(r, q, divides, sub, combine):
    qlead = max(q)
    qc = q[qlead]
    quo = {}
    while r:
        rlead = max(r)
        if not divides(qlead, rlead):
            return None
        rc = r[rlead]
        if rc % qc:
            return None
        c = rc // qc
        e = sub(rlead, qlead)
        quo[e] = c
        for eq, cq in q.items():
            k = combine(e, eq)
            nv = r.get(k, 0) - c * cq
            if nv:
                r[k] = nv
            else:
                r.pop(k, None)
    if any(v < 0 for v in quo.values()):
        return None
    return quo


def divide_exact(p, q):
    """Quotient r with q * r == p, staying in the same semiring, else None.

    Plain long division over the integers under the canonical monomial order
    (degree for one variable, lexicographic x-then-y for two).  The quotient
    over the integers is unique, so p is divisible in the nonnegative world
    exactly when the remainder vanishes and no quotient coefficient is
    negative.  Dividing by the zero polynomial raises ZeroDivisionError.
    """
    _same_arity(p, q)
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    if isinstance(p, Poly1):
        quo = _divide_terms(
            dict(p.terms), dict(q.terms),
            divides=lambda qe, re: qe <= re,
            sub=lambda a, b: a - b,
            combine=lambda a, b: a + b,
        )
        return None if quo is None else Poly1(quo)
    quo = _divide_terms(
        dict(p.terms), dict(q.terms),
        divides=lambda qe, re: qe[0] <= re[0] and qe[1] <= re[1],
        sub=lambda a, b: (a[0] - b[0], a[1] - b[1]),
        combine=lambda a, b: (a[0] + b[0], a[1] + b[1]),
    )
    return None if quo is None else Poly2(quo)


# ---------------------------------------------------------------------------
# Text form.

def _mono_x(e):
    return "x" if e == 1 else f"x^{e}"


def _mono_y(e):
    return "y" if e == 1 else f"y^{e}"


def render(p) -> str:
    """Canonical text: terms joined by " + ", descending exponent order."""
    parts = []
    if isinstance(p, Poly1):
        for e, c in p.terms.items():
            if e == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(_mono_x(e))
            else:
                parts.append(f"{c}*{_mono_x(e)}")
    else:
        for (i, j), c in p.terms.items():
            mono = "*".join(
                ([_mono_x(i)] if i else []) + ([_mono_y(j)] if j else [])
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
    return " + ".join(parts) if parts else "0"


_TOKEN = re.compile(r"\s*(\d+|[xy^*+]|\S)")


def _tokens(text):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break  # only trailing whitespace left
        out.append((m.group(1), m.start(1)))
        pos = m.end()
    return out


def _fail_token(tok, pos, expected):
    if tok == "-":
        raise PolyParseError(
            "'-' is not allowed: coefficients are nonnegative", pos
        )
    raise PolyParseError(f"expected {expected}, found {tok!r}", pos)


def _parse_exponent(toks, i, pos_caret):
    if i >= len(toks):
        raise PolyParseError("expected exponent after '^'", pos_caret + 1)
    tok, pos = toks[i]
    if not tok.isdigit():
        _fail_token(tok, pos, "exponent")
    return int(tok), i + 1


def _parse_term(toks, i):
    tok, pos = toks[i]
    coeff = 1
    xe = ye = 0
    saw_y = False
    if tok.isdigit():
        coeff = int(tok)
        i += 1
        if i < len(toks) and toks[i][0] == "*":
            if i + 1 >= len(toks):
                raise PolyParseError("expected variable after '*'", toks[i][1] + 1)
            if toks[i + 1][0] not in ("x", "y"):
                _fail_token(toks[i + 1][0], toks[i + 1][1], "variable after '*'")
            i += 1
        else:
            return (coeff, 0, 0, False), i  # bare coefficient term
        tok, pos = toks[i]
    if tok not in ("x", "y"):
        _fail_token(tok, pos, "coefficient or variable")
    while True:
        var, pos = toks[i]
        i += 1
        e = 1
        if i < len(toks) and toks[i][0] == "^":
            e, i = _parse_exponent(toks, i + 1, toks[i][1])
        if var == "x":
            xe += e
        else:
            ye += e
            saw_y = True
        if i < len(toks) and toks[i][0] == "*" and i + 1 < len(toks) and toks[i + 1][0] in ("x", "y"):
            i += 1
            continue
        break
    return (coeff, xe, ye, saw_y), i


def parse_poly(text: str):
    """Parse polynomial text; Poly2 when y occurs, Poly1 otherwise.

    Whitespace around tokens is ignored; everything else is strict.  Errors
    carry the 0-based character position in ``.position``.
    """
    toks = _tokens(text)
    if not toks:
        raise PolyParseError("empty polynomial", 0)
    terms = []
    bivariate = False
    i = 0
    while True:
        (coeff, xe, ye, saw_y), i = _parse_term(toks, i)
        bivariate = bivariate or saw_y
        terms.append((coeff, xe, ye))
        if i == len(toks):
            break
        tok, pos = toks[i]
        if tok != "+":
            _fail_token(tok, pos, "'+' or end of input")
        i += 1
        if i == len(toks):
            raise PolyParseError("dangling '+'", pos)
    if bivariate:
        return Poly2([((xe, ye), c) for c, xe, ye in terms])
    return Poly1([(xe, c) for c, xe, ye in terms])


def parse_poly1(text: str) -> Poly1:
    """Parse strictly one-variable text; reject anything mentioning y."""
    p = parse_poly(text)
    if isinstance(p, Poly2):
        raise PolyParseError("expected a one-variable polynomial", text.find("y"))
    return p


def parse_poly2(text: str) -> Poly2:
    """Parse as a two-variable polynomial, lifting pure-x input."""
    return lift(parse_poly(text))
