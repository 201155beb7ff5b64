"""Exit criteria, run at full scale; one PASS/FAIL line per criterion.

All checks are exact symbolic comparisons (zero tolerance). Criteria 1 and 5
also carry wall-clock budgets. Run with ``pytest -s tests/test_acceptance.py``
to see the summary lines.
"""

import pytest

from eqproj import verification as v

CRITERIA = [
    ("1 oracle equivalence", lambda: v.check_oracle_equivalence(max_n=8), 60.0),
    ("2 expansion identity", lambda: v.check_expansion_identity(max_n=8), None),
    ("3 named values", lambda: v.check_named_values(max_n=8), None),
    ("4 positivity", lambda: v.check_positivity(max_n=8), None),
    ("5 Kawasaki constants", lambda: v.check_kawasaki(trials=300, max_entry=30, max_n=6), 30.0),
    (
        "6 weighted canonical classes",
        lambda: v.check_weighted_classes(max_entry=10, max_n=4, exhaustive_entry=4, min_sample=500),
        None,
    ),
    ("7 weighted structure constants", lambda: v.check_weighted_struct(max_n=5, max_entry=6, exhaustive_n=3, per_n=100), None),
    ("8 operator properties", lambda: v.check_operator_properties(trials=500, max_vars=6, max_degree=5), None),
    ("9 Schubert class lemma", lambda: v.check_schubert_lemma(max_n=10), None),
]


@pytest.mark.parametrize("label, check, budget", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(label, check, budget):
    result = check()
    within = budget is None or result.seconds < budget
    passed = result.passed and within
    note = "" if within else f" [over {budget:.0f}s budget]"
    print(f"\n{'PASS' if passed else 'FAIL'} criterion {label}: {result.detail} ({result.seconds:.2f}s){note}")
    assert result.passed, result.detail
    assert within, f"took {result.seconds:.1f}s, budget {budget}s"
