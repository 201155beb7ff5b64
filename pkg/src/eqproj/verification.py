"""End-to-end checks of the main identities at a configurable scale.

Each ``check_*`` function returns a :class:`CheckResult`; none of them
raise on a mathematical failure, they record it. The CLI ``verify``
subcommand and the acceptance tests both drive these functions.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from math import lcm
from typing import Callable

from .canonical import (
    expected_multiplier,
    kawasaki_constant,
    schubert_class,
    verify_canonical_axioms,
    weighted_canonical_class,
)
from .errors import InvariantViolation
from .gkm import GkmGraph, LocalizedClass, is_gkm_member
from .polyring import Polynomial, divided_difference, scale_vars, to_alpha_basis
from .structconst import (
    StructureTable,
    closed_row,
    nonzero_band,
    positivity_certificate,
    struct_const_closed,
    struct_consts_oracle,
    verify_expansion,
    weighted_struct_row,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}: {self.detail} ({self.seconds:.2f}s)"


def _timed(name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    start = time.perf_counter()
    try:
        passed, detail = fn()
    except InvariantViolation as exc:
        passed, detail = False, f"invariant violation: {exc}"
    return CheckResult(name, passed, detail, time.perf_counter() - start)


def _pairs(n: int):
    return ((i, j) for i in range(n + 1) for j in range(i, n + 1))


# -- random generators --------------------------------------------------------


def random_polynomial(rng: random.Random, nvars: int, max_degree: int = 5, max_terms: int = 6, coeff: int = 5) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        d = rng.randint(0, max_degree)
        mono = [0] * nvars
        for _ in range(d):
            mono[rng.randrange(nvars)] += 1
        terms[tuple(mono)] = rng.randint(-coeff, coeff)
    return Polynomial(terms, nvars)


def random_member(rng: random.Random, n: int, max_degree: int = 2) -> LocalizedClass:
    """A random Z[t]-combination of Schubert classes of P^n."""
    total = LocalizedClass.zero(n)
    for k in range(n + 1):
        coeff = random_polynomial(rng, n + 1, max_degree=max_degree, max_terms=2, coeff=3)
        if coeff:
            total = total + schubert_class(k, n) * coeff
    return total


# -- the checks ---------------------------------------------------------------


def check_oracle_equivalence(max_n: int = 8) -> CheckResult:
    def run():
        count = 0
        for n in range(max_n + 1):
            for i, j in _pairs(n):
                closed, oracle = closed_row(i, j, n), struct_consts_oracle(i, j, n)
                for k in range(n + 1):
                    if closed[k] != oracle[k]:
                        return False, f"mismatch at n={n}, (i,j,k)=({i},{j},{k}): {closed[k]} vs {oracle[k]}"
                    count += 1
        return True, f"{count} entries agree for n <= {max_n}"

    return _timed("oracle equivalence", run)


def check_expansion_identity(max_n: int = 8) -> CheckResult:
    def run():
        rows = 0
        for n in range(max_n + 1):
            table = StructureTable.compute(n)
            for i, j in _pairs(n):
                verdict = verify_expansion(i, j, table, n)
                if not verdict:
                    return False, f"n={n}, (i,j)=({i},{j}) fails at x{verdict.failing_point}"
                rows += 1
        return True, f"{rows} products p_i p_j reproduced exactly for n <= {max_n}"

    return _timed("expansion identity", run)


def check_named_values(max_n: int = 8) -> CheckResult:
    def run():
        def t(n, coeffs):
            return Polynomial.linear(coeffs + [0] * (n + 1 - len(coeffs)))

        one2, one4 = Polynomial.constant(1, 3), Polynomial.constant(1, 5)
        if struct_const_closed(1, 1, 1, 2) != t(2, [1, -1]) or struct_const_closed(1, 1, 2, 2) != one2:
            return False, "c_11^1 / c_11^2 on P^2"
        c223 = struct_const_closed(2, 2, 3, 4)
        if c223 != t(4, [1, 1, -1, -1]) or to_alpha_basis(c223) != Polynomial.linear([1, 2, 1, 0]):
            return False, f"c_22^3 on P^4 is {c223}"
        if struct_const_closed(2, 2, 4, 4) != one4:
            return False, "c_22^4 on P^4"
        checked = 0
        for n in range(1, max_n + 1):
            for j in range(1, n):
                expect = [0] * (n + 1)
                expect[0], expect[j] = 1, -1
                if struct_const_closed(1, j, j, n) != Polynomial.linear(expect):
                    return False, f"c_1{j}^{j} on P^{n}"
                if struct_const_closed(1, j, j + 1, n) != Polynomial.constant(1, n + 1):
                    return False, f"c_1{j}^{j + 1} on P^{n}"
                checked += 1
        return True, f"P^2, P^4 values and {checked} Chevalley-Monk cases"

    return _timed("named values", run)


def check_positivity(max_n: int = 8) -> CheckResult:
    def run():
        count = 0
        for n in range(max_n + 1):
            for i, j in _pairs(n):
                row = closed_row(i, j, n)
                for k in nonzero_band(i, j, n):
                    cert = positivity_certificate(row[k])
                    if not cert.nonneg:
                        return False, f"n={n}, c_{i}{j}^{k} = {cert.alpha.to_text('a')}"
                    count += 1
        return True, f"{count} constants nonnegative in alpha coordinates"

    return _timed("positivity", run)


def check_kawasaki(trials: int = 300, max_entry: int = 30, max_n: int = 6, seed: int = 0) -> CheckResult:
    def run():
        if [kawasaki_constant(i, (1, 2, 3)) for i in range(3)] != [1, 6, 6]:
            return False, "lambda = (1,2,3)"
        for n in range(max_n + 1):
            if any(kawasaki_constant(i, (1,) * (n + 1)) != 1 for i in range(n + 1)):
                return False, f"unit weights, n={n}"
        rng = random.Random(seed)
        for _ in range(trials):
            n = rng.randint(1, max_n)
            lam = [rng.randint(1, max_entry) for _ in range(n + 1)]
            # kappa_0 = 1 always; the divisibility concerns degrees with a factor
            for i in range(1, n + 1):
                kappa = kawasaki_constant(i, lam)
                for a, b in itertools.combinations_with_replacement(range(n + 1), 2):
                    if kappa % lcm(lam[a], lam[b]):
                        return False, f"lcm(lam_{a}, lam_{b}) does not divide kappa_{i} for lambda={lam}"
        return True, f"named values and divisibility for {trials} random weight vectors"

    return _timed("Kawasaki constants", run)


def weighted_sample(max_entry: int = 10, max_n: int = 4, exhaustive_entry: int = 4, extra: int = 200, seed: int = 1) -> list[tuple[int, ...]]:
    """All vectors with entries <= exhaustive_entry, plus random larger ones."""
    sample = []
    for n in range(1, max_n + 1):
        sample.extend(itertools.product(range(1, exhaustive_entry + 1), repeat=n + 1))
    if max_entry <= exhaustive_entry:
        return sample
    rng = random.Random(seed)
    seen = set(sample)
    added = 0
    while added < extra:
        lam = tuple(rng.randint(1, max_entry) for _ in range(rng.randint(2, max_n + 1)))
        if lam not in seen:
            seen.add(lam)
            sample.append(lam)
            added += 1
    return sample


def weighted_class_failures(lam: tuple[int, ...]) -> list[str]:
    """Reasons the weighted canonical classes for ``lam`` violate a requirement."""
    n = len(lam) - 1
    graph = GkmGraph(lam, (1,) * (n + 1))
    problems = []
    for i in range(n + 1):
        kappa = kawasaki_constant(i, lam)
        cls = weighted_canonical_class(i, lam, certify=False)
        if not cls.is_integral():
            problems.append(f"i={i}: not integral")
        axioms = verify_canonical_axioms(cls, i, graph)
        if not (axioms.ok and axioms.multiplier == expected_multiplier(i, lam)):
            problems.append(f"i={i}: axioms {axioms}")
        if not is_gkm_member(cls, graph, "integers"):
            problems.append(f"i={i}: not an integral GKM member")
        pulled = cls.map(lambda p: scale_vars(p, lam))
        if pulled != schubert_class(i, n).scale(kappa):
            problems.append(f"i={i}: pullback differs from kappa * p_i")
    return problems


def check_weighted_classes(max_entry: int = 10, max_n: int = 4, exhaustive_entry: int = 4, min_sample: int = 500) -> CheckResult:
    def run():
        sample = weighted_sample(max_entry, max_n, exhaustive_entry, extra=200)
        if len(sample) < min_sample:
            return False, f"sample of {len(sample)} below {min_sample}"
        bad = []
        for lam in sample:
            problems = weighted_class_failures(lam)
            if problems:
                bad.append((lam, problems))
        if bad:
            lam, problems = bad[0]
            return False, f"{len(bad)}/{len(sample)} weight vectors fail; first lambda={list(lam)}: {problems[0]}"
        return True, f"{len(sample)} weight vectors, all classes integral, canonical and GKM"

    return _timed("weighted canonical classes", run)


def check_weighted_struct(max_n: int = 5, max_entry: int = 6, exhaustive_n: int = 2, per_n: int = 60, seed: int = 2) -> CheckResult:
    def run():
        rng = random.Random(seed)
        vectors = []
        for n in range(0, max_n + 1):
            if n <= exhaustive_n:
                vectors.extend(itertools.product(range(1, max_entry + 1), repeat=n + 1))
            else:
                vectors.append((max_entry,) * (n + 1))
                vectors.extend(tuple(rng.randint(1, max_entry) for _ in range(n + 1)) for _ in range(per_n))
        for lam in vectors:
            for i, j in _pairs(len(lam) - 1):
                weighted_struct_row(i, j, lam)  # raises on a failed identity
        return True, f"image and native expansions hold for {len(vectors)} weight vectors"

    return _timed("weighted structure constants", run)


def check_operator_properties(trials: int = 500, max_vars: int = 6, max_degree: int = 5, seed: int = 3) -> CheckResult:
    def run():
        rng = random.Random(seed)
        for trial in range(trials):
            nv = rng.randint(2, max_vars)
            j = rng.randrange(nv - 1)
            p = random_polynomial(rng, nv, max_degree)
            q = random_polynomial(rng, nv, max_degree)
            dp = divided_difference(p, j)
            if divided_difference(dp, j):
                return False, f"d_{j} d_{j} p != 0 for p = {p}"
            lhs = divided_difference(p * q, j)
            rhs = dp * q + p.swap(j) * divided_difference(q, j)
            if lhs != rhs:
                return False, f"twisted Leibniz fails for p = {p}, q = {q}, j = {j}"
            if p.swap(j).swap(j) != p:
                return False, f"s_{j} is not an involution on {p}"
        for trial in range(trials):
            n = rng.randint(1, 4)
            graph = GkmGraph.unit(n)
            a, b = random_member(rng, n), random_member(rng, n)
            for c, what in ((a + b, "sum"), (a * b, "product")):
                if not is_gkm_member(c, graph, "integers"):
                    return False, f"GKM {what} closure fails on P^{n}"
        return True, f"{trials} operator trials and {trials} closure trials"

    return _timed("operator properties", run)


def check_schubert_lemma(max_n: int = 10) -> CheckResult:
    def run():
        count = 0
        for n in range(max_n + 1):
            graph = GkmGraph.unit(n)
            for i in range(n + 1):
                cls = schubert_class(i, n)
                if not is_gkm_member(cls, graph, "integers"):
                    return False, f"p_{i} on P^{n} not a GKM member"
                if any(cls.parts[k] for k in range(i)):
                    return False, f"p_{i} on P^{n} does not vanish below x{i}"
                if not cls.is_homogeneous(i):
                    return False, f"p_{i} on P^{n} not homogeneous"
                count += 1
        return True, f"{count} Schubert classes for n <= {max_n}"

    return _timed("Schubert class lemma", run)


def run_all(max_n: int = 8) -> list[CheckResult]:
    """Every check, with dimensions capped at ``max_n``."""
    return [
        check_oracle_equivalence(max_n),
        check_expansion_identity(max_n),
        check_named_values(max_n),
        check_positivity(max_n),
        check_kawasaki(max_n=min(6, max_n)),
        check_weighted_classes(max_n=min(4, max_n), min_sample=500 if max_n >= 4 else 0),
        check_weighted_struct(max_n=min(5, max_n)),
        check_operator_properties(),
        check_schubert_lemma(10 if max_n >= 8 else max_n),
    ]
