import sympy
from hypothesis import strategies as st

from eqproj.polyring import Polynomial


def poly(text: str, nvars: int) -> Polynomial:
    return Polynomial.parse(text, nvars)


def to_sympy(p: Polynomial):
    ts = sympy.symbols(f"t0:{p.nvars}")
    return sum((sympy.Rational(c) * sympy.prod([v**e for v, e in zip(ts, m)]) for m, c in p.terms.items()), sympy.Integer(0))


@st.composite
def polynomials(draw, nvars: int, max_degree: int = 5, max_terms: int = 6, rational: bool = False):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        mono = draw(st.lists(st.integers(0, max_degree), min_size=nvars, max_size=nvars))
        while sum(mono) > max_degree:
            k = max(range(nvars), key=lambda i: mono[i])
            mono[k] -= 1
        if rational:
            c = draw(st.fractions(min_value=-5, max_value=5, max_denominator=4))
        else:
            c = draw(st.integers(-6, 6))
        terms[tuple(mono)] = c
    return Polynomial(terms, nvars)
