"""Exact multivariate polynomials in x, y, z, t and weighted generators a1, a2, ...

A polynomial is a mapping from monomials to exact rational coefficients.
Monomials are stored as sorted tuples of (variable, exponent) pairs under the
fixed variable order x > y > z > t > a1 > a2 > ...; that order also drives the
canonical graded-lexicographic serialisation, so printing and JSON output are
deterministic.

Two gradings matter downstream:

- the *letter degree* counts exponents of x, y, z, t only; truncation of
  group-law buds and log series is always by letter degree;
- the *weight* of a generator a_i is i, so a monomial's weight is the weighted
  exponent sum over the a_i.

Coefficients are Fractions, stored as plain ints whenever the denominator is 1
(integer arithmetic is much faster and the group-law tower is integral).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Coefficient = Union[int, Fraction]
Monomial = tuple[tuple[str, int], ...]

LETTERS = ("x", "y", "z", "t")

_GENERATOR_RE = re.compile(r"^a([1-9][0-9]*)$")


def var_key(name: str) -> tuple[int, int]:
    """Sort key realising the variable order x > y > z > t > a1 > a2 > ..."""
    if name in LETTERS:
        return (LETTERS.index(name), 0)
    m = _GENERATOR_RE.match(name)
    if m is None:
        raise ValueError(f"unknown variable {name!r}")
    return (len(LETTERS), int(m.group(1)))


def generator_name(i: int) -> str:
    if i < 1:
        raise ValueError("generator indices start at 1")
    return f"a{i}"


def generator_index(name: str) -> int | None:
    """Index i for a generator name 'a<i>', or None for a letter."""
    m = _GENERATOR_RE.match(name)
    return int(m.group(1)) if m else None


def _norm_coef(c: Coefficient) -> Coefficient:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps: dict[str, int] = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items(), key=lambda p: var_key(p[0])))


def mono_letter_degree(m: Monomial) -> int:
    return sum(e for v, e in m if v in LETTERS)


def mono_weight(m: Monomial) -> int:
    w = 0
    for v, e in m:
        i = generator_index(v)
        if i is not None:
            w += i * e
    return w


def mono_total_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _mono_sort_key(m: Monomial):
    # Graded lexicographic: by total degree, then earlier/larger variables first.
    return (mono_total_degree(m), tuple((var_key(v), -e) for v, e in m))


class GradedPolynomial:
    """Immutable exact polynomial over x, y, z, t and the generators a_i."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Coefficient] | Iterable[tuple[Monomial, Coefficient]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Coefficient] = {}
        for mono, coef in items:
            c = acc.get(mono, 0) + Fraction(coef)
            if c == 0:
                acc.pop(mono, None)
            else:
                acc[mono] = _norm_coef(c)
        self._terms = acc

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> GradedPolynomial:
        return cls()

    @classmethod
    def one(cls) -> GradedPolynomial:
        return cls({(): 1})

    @classmethod
    def constant(cls, c: Coefficient) -> GradedPolynomial:
        return cls({(): c})

    @classmethod
    def variable(cls, name: str) -> GradedPolynomial:
        var_key(name)  # validates
        return cls({((name, 1),): 1})

    @classmethod
    def generator(cls, i: int) -> GradedPolynomial:
        return cls.variable(generator_name(i))

    # -- inspection ---------------------------------------------------------

    def items(self) -> Iterator[tuple[Monomial, Coefficient]]:
        return iter(self._terms.items())

    def sorted_terms(self) -> list[tuple[Monomial, Coefficient]]:
        return sorted(self._terms.items(), key=lambda kv: _mono_sort_key(kv[0]))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def letter_degree(self) -> int:
        """Max total degree in x, y, z, t across terms (0 for the zero polynomial)."""
        return max((mono_letter_degree(m) for m in self._terms), default=0)

    def total_degree(self) -> int:
        return max((mono_total_degree(m) for m in self._terms), default=0)

    def coefficient(self, mono: Monomial) -> Coefficient:
        return self._terms.get(mono, 0)

    def constant_term(self) -> Coefficient:
        return self._terms.get((), 0)

    def variables(self) -> set[str]:
        return {v for m in self._terms for v, _ in m}

    def generators(self) -> set[int]:
        out = set()
        for v in self.variables():
            i = generator_index(v)
            if i is not None:
                out.add(i)
        return out

    def letter_coefficient(self, degrees: Mapping[str, int]) -> GradedPolynomial:
        """Coefficient of the given letter powers, as a polynomial in the a_i.

        letter_coefficient({'x': 1, 'y': 2}) of f returns the a-polynomial
        multiplying x*y^2, with letters not mentioned required absent.
        """
        want = {v: e for v, e in degrees.items() if e}
        out: dict[Monomial, Coefficient] = {}
        for mono, coef in self._terms.items():
            letters = {v: e for v, e in mono if v in LETTERS}
            if letters == want:
                rest = tuple((v, e) for v, e in mono if v not in LETTERS)
                out[rest] = coef
        return GradedPolynomial(out)

    def by_power(self, var: str) -> dict[int, GradedPolynomial]:
        """Split into {k: coefficient of var^k}; coefficients keep all other variables."""
        buckets: dict[int, dict[Monomial, Coefficient]] = {}
        for mono, coef in self._terms.items():
            k = 0
            rest = []
            for v, e in mono:
                if v == var:
                    k = e
                else:
                    rest.append((v, e))
            buckets.setdefault(k, {})[tuple(rest)] = coef
        return {k: GradedPolynomial(d) for k, d in buckets.items()}

    def is_weight_homogeneous(self) -> bool:
        """Check the bud grading: every term's a-weight equals its letter degree minus 1."""
        return all(mono_weight(m) == mono_letter_degree(m) - 1 for m in self._terms)

    # -- arithmetic ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GradedPolynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({(): _norm_coef(Fraction(other))} if other != 0 else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset((m, Fraction(c)) for m, c in self._terms.items()))

    def __neg__(self) -> GradedPolynomial:
        return GradedPolynomial({m: -c for m, c in self._terms.items()})

    def __add__(self, other) -> GradedPolynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for mono, coef in other._terms.items():
            c = out.get(mono, 0) + coef
            if c == 0:
                out.pop(mono, None)
            else:
                out[mono] = _norm_coef(c)
        return _wrap(out)

    __radd__ = __add__

    def __sub__(self, other) -> GradedPolynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> GradedPolynomial:
        return _coerce(other) + (-self)

    def __mul__(self, other) -> GradedPolynomial:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return GradedPolynomial()
            c0 = _norm_coef(Fraction(other))
            return _wrap({m: _norm_coef(c * c0) for m, c in self._terms.items()})
        if isinstance(other, GradedPolynomial):
            return self.mul_truncated(other, None)
        return NotImplemented

    __rmul__ = __mul__

    def mul_truncated(self, other: GradedPolynomial, max_letter_degree: int | None) -> GradedPolynomial:
        """Product, discarding terms whose letter degree exceeds the bound."""
        out: dict[Monomial, Coefficient] = {}
        bound = max_letter_degree
        for m1, c1 in self._terms.items():
            d1 = mono_letter_degree(m1)
            if bound is not None and d1 > bound:
                continue
            for m2, c2 in other._terms.items():
                if bound is not None and d1 + mono_letter_degree(m2) > bound:
                    continue
                mono = mono_mul(m1, m2)
                c = out.get(mono, 0) + c1 * c2
                if c == 0:
                    out.pop(mono, None)
                else:
                    out[mono] = c
        return _wrap({m: _norm_coef(c) for m, c in out.items()})

    def __pow__(self, k: int) -> GradedPolynomial:
        return self.pow_truncated(k, None)

    def pow_truncated(self, k: int, max_letter_degree: int | None) -> GradedPolynomial:
        if k < 0:
            raise ValueError("negative exponent")
        result = GradedPolynomial.one()
        base = self
        while k:
            if k & 1:
                result = result.mul_truncated(base, max_letter_degree)
            k >>= 1
            if k:
                base = base.mul_truncated(base, max_letter_degree)
        return result

    def truncated(self, max_letter_degree: int) -> GradedPolynomial:
        return _wrap({m: c for m, c in self._terms.items() if mono_letter_degree(m) <= max_letter_degree})

    def derivative(self, var: str) -> GradedPolynomial:
        out: dict[Monomial, Coefficient] = {}
        for mono, coef in self._terms.items():
            for idx, (v, e) in enumerate(mono):
                if v == var:
                    rest = mono[:idx] + ((v, e - 1),) * (e > 1) + mono[idx + 1:]
                    out[rest] = _norm_coef(out.get(rest, 0) + coef * e)
                    break
        return _wrap(out)

    def subs(self, mapping: Mapping[str, GradedPolynomial | Coefficient],
             max_letter_degree: int | None = None) -> GradedPolynomial:
        """Simultaneous substitution of variables by polynomials or constants.

        Unmapped variables stay themselves.  Powers of each substituted value
        are cached across terms, and all products truncate eagerly when a
        letter-degree bound is given.
        """
        values: dict[str, GradedPolynomial] = {}
        for v, val in mapping.items():
            var_key(v)
            values[v] = val if isinstance(val, GradedPolynomial) else GradedPolynomial.constant(val)
        powers: dict[str, list[GradedPolynomial]] = {v: [GradedPolynomial.one(), p] for v, p in values.items()}

        def power_of(v: str, e: int) -> GradedPolynomial:
            cache = powers[v]
            while len(cache) <= e:
                cache.append(cache[-1].mul_truncated(cache[1], max_letter_degree))
            return cache[e]

        total = GradedPolynomial()
        for mono, coef in self._terms.items():
            term = GradedPolynomial.constant(coef)
            for v, e in mono:
                if v in values:
                    term = term.mul_truncated(power_of(v, e), max_letter_degree)
                else:
                    term = term.mul_truncated(GradedPolynomial({((v, e),): 1}), max_letter_degree)
                if term.is_zero:
                    break
            total = total + term
        if max_letter_degree is not None:
            total = total.truncated(max_letter_degree)
        return total

    # -- serialisation ------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"GradedPolynomial({format_poly(self)!r})"


def _wrap(terms: dict[Monomial, Coefficient]) -> GradedPolynomial:
    p = GradedPolynomial.__new__(GradedPolynomial)
    p._terms = terms
    return p


def _coerce(value) -> GradedPolynomial:
    if isinstance(value, GradedPolynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return GradedPolynomial.constant(value) if value != 0 else GradedPolynomial()
    return NotImplemented


# -- text format -------------------------------------------------------------
#
# Canonical sorted sum, e.g. "x + y + a1*x*y" or "t - 1/2*a1*t^2"; rationals
# print as p/q, exponents as var^k.


def _format_mono(mono: Monomial) -> str:
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in mono)


def format_poly(p: GradedPolynomial) -> str:
    terms = p.sorted_terms()
    if not terms:
        return "0"
    parts: list[str] = []
    for idx, (mono, coef) in enumerate(terms):
        c = Fraction(coef)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = _format_mono(mono)
        else:
            body = f"{mag}*{_format_mono(mono)}"
        if idx == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[a-zA-Z][a-zA-Z0-9]*)|(?P<op>[-+*^()]))")


def parse_poly(text: str) -> GradedPolynomial:
    """Parse the canonical text format (sums of rational-coefficient monomials)."""
    if not text.strip():
        raise ValueError("empty polynomial text")
    tokens: list[str] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise ValueError(f"cannot tokenise polynomial at {text[pos:]!r}")
            break
        tokens.append(m.group(m.lastgroup))
        pos = m.end()

    i = 0

    def peek() -> str | None:
        return tokens[i] if i < len(tokens) else None

    def take() -> str:
        nonlocal i
        tok = tokens[i]
        i += 1
        return tok

    def parse_factor() -> tuple[Monomial, Coefficient]:
        tok = take()
        if re.fullmatch(r"\d+(/\d+)?", tok):
            return (), Fraction(tok)
        var_key(tok)  # validates the name
        exp = 1
        if peek() == "^":
            take()
            exp_tok = take()
            if not exp_tok.isdigit():
                raise ValueError("exponent must be a nonnegative integer")
            exp = int(exp_tok)
        return (((tok, exp),) if exp else ()), 1

    def parse_term() -> tuple[Monomial, Coefficient]:
        mono, coef = parse_factor()
        while peek() == "*":
            take()
            m2, c2 = parse_factor()
            mono = mono_mul(mono, m2)
            coef = coef * c2
        return mono, coef

    result: dict[Monomial, Coefficient] = {}
    sign = 1
    first = True
    while i < len(tokens):
        tok = peek()
        if tok == "+":
            take()
            sign = 1
        elif tok == "-":
            take()
            sign = -1
        elif first:
            sign = 1
        else:
            raise ValueError(f"expected '+' or '-' before {tok!r}")
        mono, coef = parse_term()
        c = result.get(mono, 0) + sign * Fraction(coef)
        if c == 0:
            result.pop(mono, None)
        else:
            result[mono] = c
        first = False
    return GradedPolynomial(result)


def poly_to_json_obj(p: GradedPolynomial, degree: int | None = None) -> dict:
    terms = [
        {"mono": {v: e for v, e in mono}, "coef": str(Fraction(coef))}
        for mono, coef in p.sorted_terms()
    ]
    return {"degree": p.letter_degree() if degree is None else degree, "terms": terms}


def poly_from_json_obj(obj: Mapping) -> GradedPolynomial:
    terms: dict[Monomial, Coefficient] = {}
    for entry in obj["terms"]:
        mono = tuple(sorted(((v, int(e)) for v, e in entry["mono"].items() if int(e)),
                            key=lambda pair: var_key(pair[0])))
        terms[mono] = terms.get(mono, 0) + Fraction(entry["coef"])
    return GradedPolynomial(terms)
