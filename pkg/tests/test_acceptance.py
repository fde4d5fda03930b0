"""The ten acceptance criteria, in exact arithmetic and against their time budgets.

Each criterion runs its suites with default samples and seed 0, then checks
the stated counts against the case details.  One PASS/FAIL line per
criterion is printed (visible with ``pytest -s`` or via
``scripts/run_acceptance.py``).
"""

import sys
import time

import pytest

from jpgeom.suites import SuiteConfig, run_suite

# (suites, budget in seconds, {case name: expected detail values})
CRITERIA = {
    1: (
        ["thm1.6"],
        2,
        {
            "sl2/F_5:inner-flag-count": {"found": 6},
            "sl2/F_5:transversal-pair-count": {"found": 30},
            "sl2/F_5:round-trip": {"pairs": 30, "failures": 0},
            "sl2/F_5:affine-chart-bijection": {"flags": 6, "failures": 0},
        },
    ),
    2: (
        ["thm1.12"],
        30,
        {
            "sl2/F_5:flag-orbit-size": {"found": 6},
            "sl3/F_5:flag-orbit-size": {"found": 31},
            "sl2/F_5:P+capP-=H": {"failures": 0},
            "sl2/F_5:P-capU-trivial": {"failures": 0},
            "sl2/F_5:omega-decompose": {"failures": 0},
        },
    ),
    3: (["thm2.8"], 10, {}),
    4: (
        ["prop2.5", "prop2.6"],
        10,
        {
            "sl2/Q:trivialization-homomorphism": {"pairs": 9},
            "sl3/Q:trivialization-homomorphism": {"pairs": 64},
            "sl3/Q:cocycles": {"triples": 200, "failures": 0},
        },
    ),
    5: (
        ["jordan-identities", "symmetry-principle", "quasi-inverse"],
        10,
        {
            "rect12/F_5:exhaustive": {"pairs": 625, "failures": 0},
            "sl3/Q:sampled": {"samples": 500, "failures": 0},
            "scalar/F_5:tkk-oracle": {"total": 25, "failures": 0},
            "scalar/F_5:closed-form": {"failures": 0},
        },
    ),
    6: (["reflection"], 10, {"sl2/F_5:closed": {"points": 30}, "sl2/F_5:S4-minus-identity": {"failures": 0}}),
    7: (
        ["selfdual"],
        5,
        {
            "sl2/F_5:status": {"witnesses": 4},
            "trivial/F_5:status": {"status": "no"},
            "rect12/F_5:status": {"status": "no"},
        },
    ),
    8: (["thm6.6"], 10, {"sl2z/F_5:orbit-sizes": {"algebra": 6, "inner": 6}}),
    9: (
        ["centext", "thm7.10"],
        20,
        {
            "trivial/F_5:dims": {"total": 4, "kernel": 1},
            "trivial/Q:dims": {"total": 4, "kernel": 1},
            "ex7.12/F_5:grading-orbits": {"hat": 25, "base": 25},
        },
    ),
    10: (
        ["grassmann"],
        60,
        {
            "k1m2/F_5:submodule-count": {"found": 8},
            "k1m2/F_5:projector-count": {"projectors": 32, "transversal_pairs": 32},
            "k1m2/F_5:diagram-commutes": {"projectors": 32, "failures": 0},
            "k1m2/F_5:elementary-group-order": {"order": 120},
            "projective-line/F_5": {"orbit": 6, "e2": 3},
        },
    ),
}

# stated as "20 defined cases of 25"; see test_criterion_5_defined_count
QUASI_INVERSE_DEFINED = 20


def evaluate(n: int):
    suites, budget, expected = CRITERIA[n]
    start = time.perf_counter()
    cases = {}
    problems = []
    for s in suites:
        report = run_suite(s, SuiteConfig(seed=0))
        for c in report.cases:
            cases[c.name] = c
            if c.status != "pass":
                problems.append(f"{s}:{c.name} {c.status}")
    elapsed = time.perf_counter() - start
    for name, want in expected.items():
        got = cases.get(name)
        if got is None:
            problems.append(f"missing case {name}")
            continue
        for key, value in want.items():
            if got.details.get(key) != value:
                problems.append(f"{name}: {key}={got.details.get(key)!r}, expected {value!r}")
    if elapsed >= budget:
        problems.append(f"took {elapsed:.2f}s, budget {budget}s")
    return problems, elapsed, budget, cases


def _line(n, problems, elapsed, budget):
    status = "PASS" if not problems else "FAIL"
    text = f"criterion {n:2d}: {status} ({elapsed:.2f}s / {budget}s)"
    if problems:
        text += " " + "; ".join(problems)
    return text


def stated_count_problems(n, cases):
    """Checks that cannot hold as stated; reported but kept out of the pass/fail assertion."""
    if n != 5:
        return []
    defined = cases["scalar/F_5:tkk-oracle"].details["defined"]
    if defined == QUASI_INVERSE_DEFINED:
        return []
    return [f"defined quasi-inverse cases {defined}, stated {QUASI_INVERSE_DEFINED}"]


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    problems, elapsed, budget, cases = evaluate(n)
    with capsys.disabled():
        print("\n" + _line(n, problems + stated_count_problems(n, cases), elapsed, budget), end="")
    assert not problems


@pytest.mark.xfail(
    strict=True,
    reason="1 - xy vanishes for the 4 pairs with xy = 1 in F_5, so 21 of 25 inputs are quasi-invertible",
)
def test_criterion_5_defined_count():
    report = run_suite("quasi-inverse", SuiteConfig(seed=0))
    case = next(c for c in report.cases if c.name == "scalar/F_5:tkk-oracle")
    assert case.details["defined"] == QUASI_INVERSE_DEFINED


def main() -> int:
    failed = 0
    for n in sorted(CRITERIA):
        problems, elapsed, budget, cases = evaluate(n)
        problems += stated_count_problems(n, cases)
        failed += bool(problems)
        print(_line(n, problems, elapsed, budget))
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
