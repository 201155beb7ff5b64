"""Canonical classes: Schubert classes of P^n and their weighted multiples."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import combinations
from math import gcd, lcm, prod
from typing import Sequence

from .errors import InvariantViolation
from .gkm import GkmGraph, LocalizedClass, weight_vector
from .polyring import Polynomial


def _check_degree(i: int, n: int) -> None:
    if n < 0:
        raise ValueError(f"dimension must be nonnegative, got {n}")
    if not 0 <= i <= n:
        raise IndexError(f"degree {i} out of range 0..{n}")


@lru_cache(maxsize=None)
def schubert_class(i: int, n: int) -> LocalizedClass:
    """p_i with p_i(x_k) = prod_{j<i} (t_j - t_k) for k >= i, zero below."""
    _check_degree(i, n)
    nv = n + 1
    parts = []
    for k in range(nv):
        if k < i:
            parts.append(Polynomial.zero(nv))
            continue
        part = Polynomial.constant(1, nv)
        for j in range(i):
            coeffs = [0] * nv
            coeffs[j] += 1
            coeffs[k] -= 1
            part = part * Polynomial.linear(coeffs)
        parts.append(part)
    return LocalizedClass(tuple(parts))


def kawasaki_constant(i: int, lam: Sequence[int]) -> int:
    """lcm over (i+1)-subsets of the subset product divided by the subset gcd."""
    lam = weight_vector(lam)
    _check_degree(i, len(lam) - 1)
    return reduce(
        lcm,
        (prod(sub) // reduce(gcd, sub) for sub in combinations(lam, i + 1)),
        1,
    )


def weighted_canonical_class(i: int, lam: Sequence[int], certify: bool = True) -> LocalizedClass:
    """kappa_i * prod_{j<i} (t_j/lam_j - t_k/lam_k) at x_k for k >= i.

    With ``certify`` the result must have integer coefficients, otherwise
    :class:`InvariantViolation` is raised. ``certify=False`` returns the
    rational class as is, for identities that hold over the rationals.
    """
    lam = weight_vector(lam)
    n = len(lam) - 1
    _check_degree(i, n)
    kappa = kawasaki_constant(i, lam)
    native = [Fraction(1, w) for w in lam]
    cls = schubert_class(i, n).map(lambda p: p.scale_variables(native).scale(kappa))
    if certify and not cls.is_integral():
        bad = next(k for k, p in enumerate(cls.parts) if not p.is_integral())
        raise InvariantViolation(
            f"weighted class i={i}, lambda={list(lam)}, kappa={kappa} is not integral at x{bad}: {cls.parts[bad]}"
        )
    return cls


def expected_multiplier(i: int, lam: Sequence[int]) -> Fraction:
    """kappa_i divided by prod_{j<i} lcm(lam_j, lam_i).

    This is the constant in front of the product of incoming edge weights
    (for the action with mu = 1) at x_i of the weighted canonical class.
    """
    lam = weight_vector(lam)
    return Fraction(kawasaki_constant(i, lam), prod(lcm(lam[j], lam[i]) for j in range(i)))


@dataclass
class AxiomVerdict:
    homogeneous: bool
    vanishing: bool
    leading: bool
    multiplier: Fraction | int | None

    @property
    def ok(self) -> bool:
        return self.homogeneous and self.vanishing and self.leading

    def __bool__(self) -> bool:
        return self.ok


def verify_canonical_axioms(c: LocalizedClass, i: int, g: GkmGraph) -> AxiomVerdict:
    """Check homogeneity, vanishing below x_i and the integral leading condition.

    ``multiplier`` is the constant relating c(x_i) to the product of incoming
    edge weights whenever c(x_i) is a scalar multiple of it, integral or not;
    the leading axiom additionally requires that scalar to be a nonzero integer.
    """
    _check_degree(i, c.n)
    homogeneous = c.is_homogeneous(i)
    vanishing = all(c.parts[j].is_zero() for j in range(i))

    base = Polynomial.constant(1, c.n + 1)
    for j in range(i):
        base = base * g.weight(j, i).to_polynomial()
    target = c.parts[i]
    multiplier = None
    if target.is_zero():
        multiplier = 0
    else:
        mono, coeff = base.leading()
        ratio = Fraction(target.coefficient(mono)) / coeff
        if ratio and base.scale(ratio) == target:
            multiplier = int(ratio) if ratio.denominator == 1 else ratio
    leading = isinstance(multiplier, int) and multiplier != 0
    return AxiomVerdict(homogeneous, vanishing, leading, multiplier)
