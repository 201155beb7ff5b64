"""Exact sparse multivariate polynomials in t_0, ..., t_n.

Coefficients are Python ints where possible and ``fractions.Fraction``
otherwise, so integer-only computations never pay for rational arithmetic.
Terms are kept in canonical sparse form (no zero coefficients), which makes
equality a plain dict comparison.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from .errors import DimensionError, InvalidDivisorError, InvalidWeightError, InvariantViolation

Monomial = tuple[int, ...]
Coeff = int | Fraction


def _norm(c: Rational) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, (int, Fraction)):
        return c
    return Fraction(c)


def _div(c: Coeff, a: Coeff) -> Coeff:
    if isinstance(c, int) and isinstance(a, int) and c % a == 0:
        return c // a
    return _norm(Fraction(c) / a)


def _mono_key(m: Monomial) -> tuple[int, Monomial]:
    # graded lex, t0 > t1 > ... ; callers sort with reverse=True
    return (sum(m), m)


class Polynomial:
    """Immutable polynomial with exact rational coefficients."""

    __slots__ = ("_terms", "_nvars", "_hash")

    def __init__(self, terms: Mapping[Monomial, Rational] | None = None, nvars: int = 1):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        clean: dict[Monomial, Coeff] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != nvars or any(e < 0 for e in mono):
                raise DimensionError(f"bad exponent vector {mono} for {nvars} variables")
            c = _norm(c)
            if c:
                clean[mono] = clean.get(mono, 0) + c
                if not clean[mono]:
                    del clean[mono]
        self._terms = clean
        self._nvars = nvars
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Coeff], nvars: int) -> Polynomial:
        # trusted constructor: terms already canonical
        obj = object.__new__(cls)
        obj._terms = terms
        obj._nvars = nvars
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, c: Rational, nvars: int) -> Polynomial:
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def var(cls, i: int, nvars: int) -> Polynomial:
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        mono = [0] * nvars
        mono[i] = 1
        return cls._raw({tuple(mono): 1}, nvars)

    @classmethod
    def linear(cls, coeffs: Sequence[Rational]) -> Polynomial:
        """The polynomial sum(coeffs[i] * t_i)."""
        nv = len(coeffs)
        terms = {}
        for i, a in enumerate(coeffs):
            mono = [0] * nv
            mono[i] = 1
            terms[tuple(mono)] = a
        return cls(terms, nv)

    # -- inspection ---------------------------------------------------------

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> Mapping[Monomial, Coeff]:
        return dict(self._terms)

    def items(self) -> list[tuple[Monomial, Coeff]]:
        """Terms in canonical (graded lex, descending) order."""
        return sorted(self._terms.items(), key=lambda kv: _mono_key(kv[0]), reverse=True)

    def coefficient(self, mono: Monomial) -> Coeff:
        return self._terms.get(tuple(mono), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {sum(m) for m in self._terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return d is None or degs == {d}

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def constant_value(self) -> Coeff:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((0,) * self._nvars, 0)

    def support(self) -> frozenset[int]:
        """Indices of variables that actually occur."""
        used = set()
        for m in self._terms:
            used.update(i for i, e in enumerate(m) if e)
        return frozenset(used)

    def leading(self) -> tuple[Monomial, Coeff]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self._terms, key=_mono_key)
        return mono, self._terms[mono]

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: Polynomial) -> None:
        if self._nvars != other._nvars:
            raise DimensionError(f"{self._nvars} vs {other._nvars} variables")

    def _coerce(self, other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self._nvars)
        return None

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _norm(s)
            else:
                out.pop(m, None)
        return Polynomial._raw(out, self._nvars)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({m: -c for m, c in self._terms.items()}, self._nvars)

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, c: Rational) -> Polynomial:
        c = _norm(c)
        if not c:
            return Polynomial.zero(self._nvars)
        return Polynomial._raw({m: _norm(v * c) for m, v in self._terms.items()}, self._nvars)

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out: dict[Monomial, Coeff] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw({m: _norm(c) for m, c in out.items() if c}, self._nvars)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(1, self._nvars)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._nvars == other._nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Polynomial.constant(other, self._nvars)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    # -- substitutions ------------------------------------------------------

    def swap(self, j: int) -> Polynomial:
        """Exchange t_j and t_{j+1}."""
        if not 0 <= j < self._nvars - 1:
            raise IndexError(f"swap index {j} out of range for {self._nvars} variables")
        out = {}
        for m, c in self._terms.items():
            lst = list(m)
            lst[j], lst[j + 1] = lst[j + 1], lst[j]
            out[tuple(lst)] = c
        return Polynomial._raw(out, self._nvars)

    def scale_variables(self, factors: Sequence[Rational]) -> Polynomial:
        """Substitute t_i -> factors[i] * t_i."""
        if len(factors) != self._nvars:
            raise DimensionError(f"{len(factors)} factors for {self._nvars} variables")
        out = {}
        for m, c in self._terms.items():
            for f, e in zip(factors, m):
                if e:
                    c = c * f**e
            c = _norm(c)
            if c:
                out[m] = c
        return Polynomial._raw(out, self._nvars)

    def substitute(self, images: Sequence[Polynomial]) -> Polynomial:
        """Ring homomorphism t_i -> images[i]; images may live in another ring."""
        if len(images) != self._nvars:
            raise DimensionError(f"{len(images)} images for {self._nvars} variables")
        if self._nvars == 0:
            target = 0
        else:
            target = images[0].nvars
        if any(im.nvars != target for im in images):
            raise DimensionError("images must share one ring")
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(i: int, e: int) -> Polynomial:
            key = (i, e)
            if key not in powers:
                powers[key] = images[i] if e == 1 else power(i, e - 1) * images[i]
            return powers[key]

        acc: dict[Monomial, Coeff] = {}
        one = Polynomial.constant(1, target)
        for m, c in self._terms.items():
            term = one
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            for mm, cc in term._terms.items():
                acc[mm] = acc.get(mm, 0) + c * cc
        return Polynomial._raw({m: _norm(c) for m, c in acc.items() if c}, target)

    def partial(self, i: int) -> Polynomial:
        out = {}
        for m, c in self._terms.items():
            if m[i]:
                lst = list(m)
                lst[i] -= 1
                out[tuple(lst)] = c * m[i]
        return Polynomial._raw(out, self._nvars)

    # -- serialization ------------------------------------------------------

    def to_text(self, var: str = "t") -> str:
        if not self._terms:
            return "0"
        pieces = []
        for idx, (m, c) in enumerate(self.items()):
            neg = c < 0
            a = -c if neg else c
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(f"{var}{i}")
                elif e > 1:
                    factors.append(f"{var}{i}^{e}")
            if not factors:
                body = str(a)
            elif a == 1:
                body = "*".join(factors)
            else:
                body = f"{a}*" + "*".join(factors)
            if idx == 0:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r}, nvars={self._nvars})"

    def to_json(self) -> list[dict]:
        return [{"coeff": str(c), "exps": list(m)} for m, c in self.items()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping], nvars: int) -> Polynomial:
        terms: dict[Monomial, Coeff] = {}
        for entry in data:
            mono = tuple(int(e) for e in entry["exps"])
            c = _norm(Fraction(str(entry["coeff"])))
            terms[mono] = terms.get(mono, 0) + c
        return cls(terms, nvars)

    _TERM = re.compile(r"([+-]?)([^+-]+)")

    @classmethod
    def parse(cls, text: str, nvars: int, var: str = "t") -> Polynomial:
        """Parse the output of :meth:`to_text` (no parentheses)."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        terms: dict[Monomial, Coeff] = {}
        pos = 0
        for match in cls._TERM.finditer(s):
            if match.start() != pos:
                raise ValueError(f"cannot parse {text!r}")
            pos = match.end()
            sign = -1 if match.group(1) == "-" else 1
            coeff: Coeff = sign
            mono = [0] * nvars
            for factor in match.group(2).split("*"):
                if factor.startswith(var):
                    name, _, exp = factor.partition("^")
                    idx = int(name[len(var):])
                    if not 0 <= idx < nvars:
                        raise ValueError(f"variable {name} out of range")
                    mono[idx] += int(exp) if exp else 1
                else:
                    coeff = coeff * Fraction(factor)
            key = tuple(mono)
            terms[key] = terms.get(key, 0) + _norm(coeff)
        if pos != len(s):
            raise ValueError(f"cannot parse {text!r}")
        return cls(terms, nvars)


@dataclass(frozen=True)
class LinearForm:
    """The linear form sum(coefficients[i] * t_i) with integer coefficients."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(a) for a in self.coefficients))

    @property
    def nvars(self) -> int:
        return len(self.coefficients)

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def content(self) -> int:
        return reduce(gcd, (abs(a) for a in self.coefficients if a), 0)

    def primitive_part(self) -> LinearForm:
        c = self.content()
        if c == 0:
            raise InvalidDivisorError("zero form has no primitive part")
        return LinearForm(tuple(a // c for a in self.coefficients))

    def to_polynomial(self) -> Polynomial:
        return Polynomial.linear(self.coefficients)

    def __str__(self) -> str:
        return self.to_polynomial().to_text()


# -- module-level operations --------------------------------------------------

_ARITH = {
    "add": lambda p, q: p + q,
    "sub": lambda p, q: p - q,
    "mul": lambda p, q: p * q,
}


def poly_arith(p: Polynomial, q, op: str) -> Polynomial:
    """Apply ``op`` in {add, sub, mul, scale}; for ``scale`` q is a rational."""
    if op == "scale":
        return p.scale(q)
    try:
        fn = _ARITH[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    if not isinstance(q, Polynomial):
        raise TypeError("q must be a Polynomial")
    if p.nvars != q.nvars:
        raise DimensionError(f"{p.nvars} vs {q.nvars} variables")
    return fn(p, q)


def swap_vars(p: Polynomial, j: int) -> Polynomial:
    return p.swap(j)


def exact_div_linear(p: Polynomial, form: LinearForm | Sequence[int], ring: str = "rationals") -> Polynomial | None:
    """Quotient ``p / form`` if ``form`` divides ``p`` in ``ring``, else None.

    Division is carried out over the rationals by eliminating the first
    variable that appears in ``form``; in ``"integers"`` mode the quotient is
    additionally required to have integer coefficients. Non-primitive forms
    such as 2*t0 - 2*t1 are handled as given, not replaced by their
    primitive part, since that would enlarge the integral ideal.
    """
    if ring not in ("rationals", "integers"):
        raise ValueError(f"unknown ring {ring!r}")
    coeffs = form.coefficients if isinstance(form, LinearForm) else tuple(form)
    if len(coeffs) != p.nvars:
        raise DimensionError(f"form has {len(coeffs)} coefficients, polynomial {p.nvars} variables")
    if not any(coeffs):
        raise InvalidDivisorError("division by the zero linear form")

    v = next(i for i, a in enumerate(coeffs) if a)
    lead = coeffs[v]
    rest = [(u, b) for u, b in enumerate(coeffs) if b and u != v]
    unit = [tuple(1 if w == u else 0 for w in range(p.nvars)) for u in range(p.nvars)]

    work = dict(p._terms)
    quot: dict[Monomial, Coeff] = {}
    top = max((m[v] for m in work), default=0)
    for d in range(top, 0, -1):
        layer = [m for m in work if m[v] == d]
        for m in layer:
            c = work.pop(m)
            qm = m[:v] + (d - 1,) + m[v + 1:]
            qc = _div(c, lead)
            quot[qm] = _norm(quot.get(qm, 0) + qc)
            for u, b in rest:
                nm = tuple(x + y for x, y in zip(qm, unit[u]))
                val = work.get(nm, 0) - qc * b
                if val:
                    work[nm] = _norm(val)
                else:
                    work.pop(nm, None)
    if work:
        return None
    q = Polynomial._raw({m: c for m, c in quot.items() if c}, p.nvars)
    if ring == "integers" and not q.is_integral():
        return None
    return q


def divided_difference(p: Polynomial, j: int) -> Polynomial:
    """(s_j p - p) / (t_j - t_{j+1})."""
    num = p.swap(j) - p
    form = [0] * p.nvars
    form[j], form[j + 1] = 1, -1
    q = exact_div_linear(num, form)
    if q is None:
        raise InvariantViolation(f"s_{j}p - p not divisible by t{j} - t{j + 1}")
    return q


def scale_vars(p: Polynomial, weights: Sequence[int]) -> Polynomial:
    """Substitute t_i -> weights[i] * t_i for positive integer weights."""
    if any(int(w) != w or w < 1 for w in weights):
        raise InvalidWeightError(f"weights must be positive integers, got {list(weights)}")
    return p.scale_variables([int(w) for w in weights])


def is_translation_invariant(p: Polynomial) -> bool:
    # invariance under t_i -> t_i + c is annihilation by the sum of partials
    total = Polynomial.zero(p.nvars)
    for i in range(p.nvars):
        total = total + p.partial(i)
    return total.is_zero()


def to_alpha_basis(p: Polynomial) -> Polynomial | None:
    """Rewrite ``p`` in alpha_i = t_i - t_{i+1}, or None if impossible.

    The result has ``p.nvars - 1`` variables. Only polynomials invariant
    under simultaneous translation of all t_i admit such a form.
    """
    if not is_translation_invariant(p):
        return None
    n = p.nvars - 1
    images = []
    for i in range(n + 1):
        images.append(Polynomial.linear([1 if m >= i else 0 for m in range(n)]))
    if n == 0:
        return Polynomial({(): p.constant_value()}, 0)
    return p.substitute(images)


def from_alpha_basis(q: Polynomial) -> Polynomial:
    """Inverse of :func:`to_alpha_basis`: alpha_i -> t_i - t_{i+1}."""
    nv = q.nvars + 1
    images = []
    for i in range(q.nvars):
        coeffs = [0] * nv
        coeffs[i], coeffs[i + 1] = 1, -1
        images.append(Polynomial.linear(coeffs))
    if not images:
        return Polynomial.constant(q.constant_value() if q else 0, nv)
    return q.substitute(images)


def is_nonneg_in_alpha(q: Polynomial) -> bool:
    return all(c >= 0 for c in q.terms.values())
