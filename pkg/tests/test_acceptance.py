"""The seventeen acceptance criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` (the lines appear in the
terminal summary) or ``python tests/test_acceptance.py``.
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cliffordtwist.bits import rho
from cliffordtwist.process import GradedAlgebraSpec, alternativity_check, condition_ii_witness, process_once
from cliffordtwist.scalars import ONE
from cliffordtwist.verify import SuiteConfig, run_suite, suite_assoc_alt

from oracles import octonion_cochain

REPORT: list[str] = []


def _octonion_parents():
    F = octonion_cochain()
    rho_grading = lambda x: -ONE if rho(x) & 1 else ONE
    return [GradedAlgebraSpec(3, F, rho_grading), GradedAlgebraSpec(3, F, lambda x: ONE)]


def _alternativity():
    res = suite_assoc_alt(SuiteConfig(), extra_parents=_octonion_parents())
    if not res.ok:
        return False, f"assoc-alt failed: {res.witness}"
    graded, trivial = _octonion_parents()
    w_ii = condition_ii_witness(graded)
    alt_graded, w_alt = alternativity_check(process_once(graded, -1))
    alt_trivial, _ = alternativity_check(process_once(trivial, -1))
    ok = w_ii is not None and not alt_graded and w_alt is not None and alt_trivial
    return ok, f"{res.cases} cases; octonion double: condition (ii) fails at {w_ii}, witness {w_alt}"


def _suites(*names):
    def check():
        notes = []
        for name in names:
            res = run_suite(name, SuiteConfig())
            notes.append(f"{name} {res.cases} cases")
            if not res.ok:
                return False, f"{name} failed: {res.witness}"
        return True, ", ".join(notes)

    return check


CRITERIA = [
    (1, "cocycle identity, n <= 6, all sign signatures", _suites("cocycle")),
    (2, "generator relations, n <= 8", _suites("relations")),
    (3, "small-case tables", _suites("small-tables")),
    (4, "braided commutativity and the commute/anticommute dichotomy", _suites("braided-commutativity")),
    (5, "order-reversal anti-involution", _suites("theta")),
    (6, "grading automorphism, inner for even n, top-blade square", _suites("sigma", "inner-grading")),
    (7, "inverses, lambda norm, adjoint action", _suites("inverse", "lambda", "adjoint")),
    (8, "super tensor structure constants", _suites("super-tensor")),
    (9, "process from the ground field and single steps", _suites("process")),
    (10, "closed associator and braiding forms", _suites("closed-forms")),
    (11, "associativity preserved, alternativity verdicts", _alternativity),
    (12, "periodicity map, twist and sign flip", _suites("periodicity")),
    (13, "classification over Q(i)", _suites("classify")),
    (14, "spinor representation", _suites("spinor")),
    (15, "odd extension", _suites("odd-extension")),
    (16, "representation ladder", _suites("rep-ladder")),
    (17, "Dirac operator", _suites("dirac")),
]


def _run(k, title, check):
    try:
        ok, note = check()
    except Exception as exc:  # report, then let the test fail
        ok, note = False, f"{type(exc).__name__}: {exc}"
    line = f"{'PASS' if ok else 'FAIL'} criterion {k}: {title} ({note})"
    print(line)
    return ok, line


@pytest.mark.parametrize("k,title,check", CRITERIA, ids=[f"criterion-{k}" for k, _, _ in CRITERIA])
def test_criterion(k, title, check):
    ok, line = _run(k, title, check)
    REPORT.append(line)
    assert ok, line


if __name__ == "__main__":
    results = [_run(*c)[0] for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
