"""Equivariant structure constants of P^n and of weighted projective space.

Two independent routes compute c_{ij}^k in p_i p_j = sum_k c_{ij}^k p_k:

* :func:`struct_const_closed` applies divided differences
  d_{k-1} ... d_{j+1} d_j to p_i(x_j);
* :func:`struct_consts_oracle` localizes the product at x_0, x_1, ... in
  turn and solves the resulting triangular system by exact division.

The oracle never calls a divided difference, so agreement between the two
is a genuine check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .canonical import kawasaki_constant, schubert_class, weighted_canonical_class
from .errors import InvariantViolation, NotRepresentableError
from .gkm import LocalizedClass, weight_vector
from .polyring import Polynomial, divided_difference, exact_div_linear, is_nonneg_in_alpha, to_alpha_basis


def _check_indices(i: int, j: int, n: int, k: int | None = None) -> tuple[int, int]:
    if n < 0:
        raise ValueError(f"dimension must be nonnegative, got {n}")
    for name, v in (("i", i), ("j", j)) + ((("k", k),) if k is not None else ()):
        if not 0 <= v <= n:
            raise IndexError(f"{name} = {v} out of range 0..{n}")
    return (i, j) if i <= j else (j, i)


def nonzero_band(i: int, j: int, n: int) -> range:
    """Values of k for which c_{ij}^k may be nonzero (i <= j)."""
    return range(j, min(i + j, n) + 1)


@lru_cache(maxsize=None)
def closed_row(i: int, j: int, n: int) -> tuple[Polynomial, ...]:
    """All c_{ij}^k, k = 0..n, by iterated divided differences."""
    i, j = _check_indices(i, j, n)
    nv = n + 1
    row = [Polynomial.zero(nv)] * nv
    current = schubert_class(i, n).parts[j]
    row[j] = current
    for k in range(j + 1, min(i + j, n) + 1):
        current = divided_difference(current, k - 1)
        row[k] = current
    return tuple(row)


def struct_const_closed(i: int, j: int, k: int, n: int) -> Polynomial:
    """c_{ij}^k = d_{k-1} ... d_j p_i(x_j) inside the band, zero outside."""
    i, j = _check_indices(i, j, n, k)
    return closed_row(i, j, n)[k]


def _divide_by_leading_localization(num: Polynomial, k: int, n: int) -> Polynomial:
    # p_k(x_k) = prod_{m<k} (t_m - t_k); strip the factors one at a time
    nv = n + 1
    q = num
    for m in range(k):
        form = [0] * nv
        form[m], form[k] = 1, -1
        nq = exact_div_linear(q, form)
        if nq is None:
            raise InvariantViolation(f"localization solve: numerator at x{k} not divisible by t{m} - t{k}")
        q = nq
    return q


@lru_cache(maxsize=None)
def struct_consts_oracle(i: int, j: int, n: int) -> tuple[Polynomial, ...]:
    """All c_{ij}^k, k = 0..n, by the triangular localization solve."""
    i, j = _check_indices(i, j, n)
    pi, pj = schubert_class(i, n), schubert_class(j, n)
    basis = [schubert_class(k, n) for k in range(n + 1)]
    coeffs: list[Polynomial] = []
    for k in range(n + 1):
        num = pi.parts[k] * pj.parts[k]
        for m, c in enumerate(coeffs):
            if c:
                num = num - c * basis[m].parts[k]
        c = _divide_by_leading_localization(num, k, n)
        if not c.is_integral():
            raise InvariantViolation(f"oracle coefficient c_{i}{j}^{k} is not integral")
        coeffs.append(c)
    return tuple(coeffs)


class StructureTable:
    """Structure constants of P^n stored on the triangle i <= j."""

    def __init__(self, n: int, entries: dict[tuple[int, int, int], Polynomial]):
        self.n = n
        self.entries = entries

    @classmethod
    def compute(cls, n: int, method: str = "closed", pairs: Sequence[tuple[int, int]] | None = None) -> StructureTable:
        if method == "closed":
            row_fn = closed_row
        elif method == "oracle":
            row_fn = struct_consts_oracle
        else:
            raise ValueError(f"unknown method {method!r}")
        if pairs is None:
            pairs = [(i, j) for i in range(n + 1) for j in range(i, n + 1)]
        entries = {}
        for i, j in pairs:
            i, j = _check_indices(i, j, n)
            for k, c in enumerate(row_fn(i, j, n)):
                entries[(i, j, k)] = c
        return cls(n, entries)

    def __getitem__(self, key: tuple[int, int, int]) -> Polynomial:
        i, j, k = key
        if i > j:
            i, j = j, i
        return self.entries[(i, j, k)]

    def __contains__(self, key) -> bool:
        i, j, k = key
        return (min(i, j), max(i, j), k) in self.entries

    def pairs(self) -> list[tuple[int, int]]:
        return sorted({(i, j) for i, j, _ in self.entries})

    def row(self, i: int, j: int) -> list[Polynomial]:
        return [self[i, j, k] for k in range(self.n + 1)]

    def with_entry(self, key: tuple[int, int, int], value: Polynomial) -> StructureTable:
        i, j, k = key
        entries = dict(self.entries)
        entries[(min(i, j), max(i, j), k)] = value
        return StructureTable(self.n, entries)

    def __iter__(self) -> Iterator[tuple[tuple[int, int, int], Polynomial]]:
        return iter(sorted(self.entries.items()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, StructureTable):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries


@dataclass
class ExpansionVerdict:
    ok: bool
    failing_point: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def expand(coeffs: Sequence[Polynomial], basis: Sequence[LocalizedClass]) -> LocalizedClass:
    """sum_k coeffs[k] * basis[k] as a localized class."""
    n = basis[0].n
    total = LocalizedClass.zero(n)
    for c, b in zip(coeffs, basis):
        if c:
            total = total + b * c
    return total


def verify_expansion(i: int, j: int, table: StructureTable, n: int | None = None) -> ExpansionVerdict:
    """Check p_i p_j == sum_k c_{ij}^k p_k at every fixed point."""
    n = table.n if n is None else n
    if (i, j, 0) not in table:
        raise KeyError(f"table does not cover ({i}, {j})")
    basis = [schubert_class(k, n) for k in range(n + 1)]
    lhs = basis[i] * basis[j]
    rhs = expand(table.row(i, j), basis)
    for x, (a, b) in enumerate(zip(lhs.parts, rhs.parts)):
        if a != b:
            return ExpansionVerdict(False, x)
    return ExpansionVerdict(True)


@dataclass
class PositivityCertificate:
    polynomial: Polynomial
    alpha: Polynomial
    nonneg: bool
    coefficients: list[tuple[tuple[int, ...], int | Fraction]] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.nonneg


def positivity_certificate(c: Polynomial) -> PositivityCertificate:
    alpha = to_alpha_basis(c)
    if alpha is None:
        raise NotRepresentableError(f"{c} is not translation invariant")
    return PositivityCertificate(c, alpha, is_nonneg_in_alpha(alpha), alpha.items())


@dataclass(frozen=True)
class WeightedConstant:
    """Weighted structure constant in image and native coordinates."""

    i: int
    j: int
    k: int
    lam: tuple[int, ...]
    image: Polynomial
    native: Polynomial

    @property
    def image_integral(self) -> bool:
        return self.image.is_integral()

    @property
    def native_integral(self) -> bool:
        return self.native.is_integral()


@lru_cache(maxsize=None)
def weighted_struct_row(i: int, j: int, lam: tuple[int, ...]) -> tuple[WeightedConstant, ...]:
    """All weighted constants for p_i^lam p_j^lam, both expansions verified."""
    lam = weight_vector(lam)
    n = len(lam) - 1
    i, j = _check_indices(i, j, n)
    kappa = [kawasaki_constant(k, lam) for k in range(n + 1)]
    base = closed_row(i, j, n)
    image = [c.scale(Fraction(kappa[i] * kappa[j], kappa[k])) for k, c in enumerate(base)]
    native_factors = [Fraction(1, w) for w in lam]
    native = [c.scale_variables(native_factors) for c in image]

    scaled = [schubert_class(k, n).scale(kappa[k]) for k in range(n + 1)]
    if scaled[i] * scaled[j] != expand(image, scaled):
        raise InvariantViolation(f"image-coordinate expansion fails for ({i}, {j}), lambda={list(lam)}")
    weighted = [weighted_canonical_class(k, lam, certify=False) for k in range(n + 1)]
    if weighted[i] * weighted[j] != expand(native, weighted):
        raise InvariantViolation(f"native-coordinate expansion fails for ({i}, {j}), lambda={list(lam)}")

    return tuple(WeightedConstant(i, j, k, lam, image[k], native[k]) for k in range(n + 1))


def weighted_struct_const(i: int, j: int, k: int, lam: Sequence[int]) -> WeightedConstant:
    lam = weight_vector(lam)
    _check_indices(i, j, len(lam) - 1, k)
    return weighted_struct_row(i, j, lam)[k]
