"""GKM data for weighted projective space under a weighted torus action.

Fixed points x_0..x_n, one edge per pair i < j, and the divisibility test
that cuts the equivariant cohomology out of a direct sum of polynomial rings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, Mapping, Sequence

from .errors import DimensionError, InvalidWeightError
from .polyring import LinearForm, Polynomial, exact_div_linear


def weight_vector(entries: Iterable[int], name: str = "lambda") -> tuple[int, ...]:
    """Validate a weight (or action) vector of positive integers."""
    vec = tuple(entries)
    if len(vec) < 1:
        raise InvalidWeightError(f"{name} must be nonempty")
    for e in vec:
        if isinstance(e, bool) or int(e) != e or e < 1:
            raise InvalidWeightError(f"{name} entries must be positive integers, got {list(vec)}")
    return tuple(int(e) for e in vec)


def edge_weight(i: int, j: int, lam: Sequence[int], mu: Sequence[int]) -> LinearForm:
    """Weight of the orbit joining x_i and x_j, for i < j."""
    if len(lam) != len(mu):
        raise DimensionError("lambda and mu must have equal length")
    if not 0 <= i < j < len(lam):
        raise IndexError(f"edge ({i}, {j}) needs 0 <= i < j <= {len(lam) - 1}")
    m = lcm(lam[i], lam[j])
    coeffs = [0] * len(lam)
    coeffs[i] = m // lam[i] * mu[i]
    coeffs[j] = -(m // lam[j] * mu[j])
    return LinearForm(tuple(coeffs))


@dataclass(frozen=True)
class GkmGraph:
    lam: tuple[int, ...]
    mu: tuple[int, ...]
    edge_weights: Mapping[tuple[int, int], LinearForm] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        lam = weight_vector(self.lam, "lambda")
        mu = weight_vector(self.mu, "mu")
        if len(lam) != len(mu):
            raise DimensionError(f"lambda has length {len(lam)}, mu has length {len(mu)}")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        weights = {(i, j): edge_weight(i, j, lam, mu) for i, j in combinations(range(len(lam)), 2)}
        object.__setattr__(self, "edge_weights", weights)

    @classmethod
    def unit(cls, n: int) -> GkmGraph:
        return cls((1,) * (n + 1), (1,) * (n + 1))

    @classmethod
    def build(cls, lam: Sequence[int] | None = None, mu: Sequence[int] | None = None, n: int | None = None) -> GkmGraph:
        """Fill missing vectors with ones; ``n`` is inferred when omitted."""
        size = None
        for vec in (lam, mu):
            if vec is not None:
                size = len(vec)
        if size is None:
            if n is None:
                raise ValueError("need n, lambda or mu")
            size = n + 1
        if n is not None and n + 1 != size:
            raise DimensionError(f"n = {n} but vectors have length {size}")
        return cls(tuple(lam) if lam else (1,) * size, tuple(mu) if mu else (1,) * size)

    @property
    def n(self) -> int:
        return len(self.lam) - 1

    def weight(self, i: int, j: int) -> LinearForm:
        if i > j:
            i, j = j, i
        return self.edge_weights[(i, j)]

    def is_unit_action(self) -> bool:
        return all(m == 1 for m in self.mu)

    def to_json(self) -> dict:
        return {"n": self.n, "lambda": list(self.lam), "mu": list(self.mu)}

    @classmethod
    def from_json(cls, data: Mapping) -> GkmGraph:
        return cls.build(data.get("lambda"), data.get("mu"), data.get("n"))


@dataclass(frozen=True)
class LocalizedClass:
    """A tuple of polynomials, one per fixed point."""

    parts: tuple[Polynomial, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise DimensionError("a class needs at least one part")
        nv = len(parts)
        for p in parts:
            if p.nvars != nv:
                raise DimensionError(f"part has {p.nvars} variables, expected {nv}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return len(self.parts) - 1

    def __getitem__(self, k: int) -> Polynomial:
        return self.parts[k]

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    @classmethod
    def constant(cls, c, n: int) -> LocalizedClass:
        return cls(tuple(Polynomial.constant(c, n + 1) for _ in range(n + 1)))

    @classmethod
    def zero(cls, n: int) -> LocalizedClass:
        return cls.constant(0, n)

    def _check(self, other: LocalizedClass) -> None:
        if self.n != other.n:
            raise DimensionError(f"classes on P^{self.n} and P^{other.n}")

    def __add__(self, other: LocalizedClass) -> LocalizedClass:
        self._check(other)
        return LocalizedClass(tuple(a + b for a, b in zip(self.parts, other.parts)))

    def __sub__(self, other: LocalizedClass) -> LocalizedClass:
        self._check(other)
        return LocalizedClass(tuple(a - b for a, b in zip(self.parts, other.parts)))

    def __mul__(self, other) -> LocalizedClass:
        if isinstance(other, LocalizedClass):
            self._check(other)
            return LocalizedClass(tuple(a * b for a, b in zip(self.parts, other.parts)))
        if isinstance(other, (int, Fraction, Polynomial)):
            return LocalizedClass(tuple(a * other for a in self.parts))
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, c) -> LocalizedClass:
        return self * c

    def map(self, fn) -> LocalizedClass:
        return LocalizedClass(tuple(fn(p) for p in self.parts))

    def is_homogeneous(self, d: int) -> bool:
        return all(p.is_homogeneous(d) for p in self.parts if p)

    def is_integral(self) -> bool:
        return all(p.is_integral() for p in self.parts)

    def to_json(self) -> dict:
        return {"n": self.n, "parts": [p.to_json() for p in self.parts]}

    @classmethod
    def from_json(cls, data: Mapping) -> LocalizedClass:
        n = int(data["n"])
        parts = data["parts"]
        if len(parts) != n + 1:
            raise DimensionError(f"n = {n} but {len(parts)} parts given")
        return cls(tuple(Polynomial.from_json(p, n + 1) for p in parts))


def class_arith(a: LocalizedClass, b, op: str) -> LocalizedClass:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    raise ValueError(f"unknown operation {op!r}")


@dataclass
class GkmVerdict:
    member: bool
    failing_edge: tuple[int, int] | None = None
    reason: str | None = None
    quotients: dict[tuple[int, int], Polynomial] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.member


def is_gkm_member(c: LocalizedClass, g: GkmGraph, ring: str = "integers") -> GkmVerdict:
    """Check every edge condition; the verdict carries the quotients as witnesses."""
    if ring not in ("integers", "rationals"):
        raise ValueError(f"unknown ring {ring!r}")
    if c.n != g.n:
        raise DimensionError(f"class on P^{c.n}, graph on P^{g.n}")
    if ring == "integers":
        for k, p in enumerate(c.parts):
            if not p.is_integral():
                return GkmVerdict(False, reason=f"non-integral part at x{k}")
    quotients = {}
    for (i, j), form in g.edge_weights.items():
        q = exact_div_linear(c.parts[i] - c.parts[j], form, ring)
        if q is None:
            return GkmVerdict(False, failing_edge=(i, j), reason=f"x{i} - x{j} not divisible by {form}")
        quotients[(i, j)] = q
    return GkmVerdict(True, quotients=quotients)
