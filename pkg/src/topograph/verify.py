"""Cross-verification suites tying the five structures together.

Each suite enumerates a window of the tree and checks one family of
identities, counting successes per named check and recording the first
counterexample verbatim.  Suites never assert; they return a VerifyReport,
and the CLI turns a failing report into exit code 1.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .cftree import (
    compare_gap,
    left_companion,
    markov_cf,
    markov_irrationality,
    periodic_value,
    qi_compare,
    qi_satisfies,
)
from .cohn import verify_cohn_index
from .errors import DomainError
from .markov import (
    MARKOV_SEED_LEFT,
    MARKOV_SEED_RIGHT,
    NodeRelations,
    check_relations,
    markov_triple_at,
    springborn_mediant,
)
from .rational import (
    cf_concat,
    cf_eval,
    cf_expand_even,
    convergent_matrix,
    farey_mediant,
    format_fraction,
)
from .tree import enumerate_tree, mirror

DEFAULT_A_VALUES = (-2, -1, 0, 1, 2, 3)
COMPANION_COORDINATES = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(2, 5))
COMPANION_MAX_REPEAT = 8
HOMOMORPHISM_CASES = 400
RNG_SEED = 0x5EED


@dataclass
class VerifyReport:
    suite: str
    depth: int
    params: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    failures: int = 0
    first_counterexample: Optional[dict] = None
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def record(self, name: str, passed: bool, path: str = "-", detail: str = ""):
        if passed:
            self.checks[name] = self.checks.get(name, 0) + 1
        else:
            self.failures += 1
            if self.first_counterexample is None:
                self.first_counterexample = {"check": name, "path": path, "detail": detail}


def _enumerate_all(depth: int, parallel: bool):
    """Positionally aligned enumerations of the Farey, Markov, and word trees."""
    farey = list(enumerate_tree(Fraction(0), Fraction(1), farey_mediant, depth,
                                parallel=parallel))
    markov = list(enumerate_tree(MARKOV_SEED_LEFT, MARKOV_SEED_RIGHT,
                                 springborn_mediant, depth, parallel=parallel))
    return farey, markov


def _word_by_path(depth: int, parallel: bool):
    """Map from fraction-tree path to word, undoing the mirror addressing."""
    words = enumerate_tree((2, 2), (1, 1), cf_concat, depth, parallel=parallel)
    return {mirror(n.path): n.value for n in words}


# ============================================================
# suites
# ============================================================

def suite_relations(depth: int, a_values, parallel: bool) -> VerifyReport:
    """Bilinear identities around every interior node of the fraction tree."""
    report = VerifyReport("relations", depth)
    nodes = {
        n.path: n
        for n in enumerate_tree(MARKOV_SEED_LEFT, MARKOV_SEED_RIGHT,
                                springborn_mediant, depth + 1, parallel=parallel)
    }
    for path, node in nodes.items():
        if len(path) > depth:
            continue
        rel = NodeRelations(
            parent_left=node.left,
            parent_right=node.right,
            node=node.value,
            child_right=nodes[path + "R"].value,
            child_left=nodes[path + "L"].value,
        )
        for check in check_relations(rel).checks:
            report.record(check.name, check.passed, path or "-", check.detail)
        q1, q2, q3 = (node.left.denominator, node.right.denominator,
                      node.value.denominator)
        report.record("markov-equation",
                      q1 * q1 + q2 * q2 + q3 * q3 == 3 * q1 * q2 * q3,
                      path or "-", f"denominators {(q1, q2, q3)}")
    return report


def suite_index(depth: int, a_values, parallel: bool) -> VerifyReport:
    """Cohn matrix structure and the index identity, for each parameter a."""
    report = VerifyReport("index", depth, params={"a_values": list(a_values)})
    result = verify_cohn_index(depth, a_values, parallel=parallel)
    report.checks = dict(result.checks)
    report.failures = result.failures
    if result.first_counterexample is not None:
        report.first_counterexample = result.first_counterexample
    return report


def suite_words(depth: int, a_values, parallel: bool) -> VerifyReport:
    """Word tree vs direct expansion: same letters, same value, every node."""
    report = VerifyReport("words", depth)
    farey, markov = _enumerate_all(depth, parallel)
    words = _word_by_path(depth, parallel)
    for fnode, mnode in zip(farey, markov):
        word = words[fnode.path]
        target = 2 + mnode.value
        expanded = cf_expand_even(target)
        report.record("letters", word == expanded, fnode.path or "-",
                      f"tree gives {word}, expansion gives {expanded}")
        report.record("value", cf_eval(word) == target, fnode.path or "-",
                      f"word evaluates to {format_fraction(cf_eval(word))}, "
                      f"expected {format_fraction(target)}")
    return report


def suite_periodization(depth: int, a_values, parallel: bool) -> VerifyReport:
    """Periodized word equals the closed-form irrational, node by node."""
    report = VerifyReport("periodization", depth)
    farey, markov = _enumerate_all(depth, parallel)
    words = _word_by_path(depth, parallel)
    for fnode, mnode in zip(farey, markov):
        word = words[fnode.path]
        got = periodic_value(word)
        want = markov_irrationality(mnode.value)
        report.record("closed-form", got == want, fnode.path or "-",
                      f"periodization {got}, formula {want}")
        m = convergent_matrix(word)
        report.record("quadratic", qi_satisfies(want, m.e21, m.e22 - m.e11, -m.e12),
                      fnode.path or "-", "closed form fails the fixed-point quadratic")
    return report


def suite_companions(depth: int, a_values, parallel: bool) -> VerifyReport:
    """Repeated words approach the periodization from above, monotonically."""
    report = VerifyReport("companions", depth,
                          params={"coordinates": [format_fraction(t) for t in COMPANION_COORDINATES],
                                  "max_repeat": COMPANION_MAX_REPEAT})
    for t in COMPANION_COORDINATES:
        word = markov_cf(t)
        target = periodic_value(word)
        base = convergent_matrix(word)
        prev = None
        for m in range(1, COMPANION_MAX_REPEAT + 1):
            approx = left_companion(t, m)
            label = f"t={format_fraction(t)}, m={m}"
            report.record("above", qi_compare(approx, target) == 1, "-",
                          f"{label}: approximant not above the limit")
            report.record("power", convergent_matrix(word * m) == base ** m, "-",
                          f"{label}: convergent matrix is not the m-th power")
            if prev is not None:
                report.record("closer", compare_gap(approx, prev, target) == -1, "-",
                              f"{label}: gap did not shrink")
            prev = approx
    return report


def suite_monotonicity(depth: int, a_values, parallel: bool) -> VerifyReport:
    """The coordinate-to-fraction map is a strictly increasing bijection."""
    report = VerifyReport("monotonicity", depth)
    farey, markov = _enumerate_all(depth, parallel)
    pairs = [(fnode.value, mnode.value) for fnode, mnode in zip(farey, markov)]
    pairs.append((Fraction(0), MARKOV_SEED_LEFT))
    pairs.append((Fraction(1), MARKOV_SEED_RIGHT))
    pairs.sort()
    for (t1, v1), (t2, v2) in zip(pairs, pairs[1:]):
        report.record("increasing", v1 < v2, "-",
                      f"{format_fraction(v1)} at t={format_fraction(t1)} not below "
                      f"{format_fraction(v2)} at t={format_fraction(t2)}")
    for t, v in pairs:
        report.record("range", 0 <= v <= Fraction(1, 2), "-",
                      f"{format_fraction(v)} outside [0, 1/2]")
    return report


def suite_distinctness(depth: int, a_values, parallel: bool) -> VerifyReport:
    """Markov numbers from the enumeration window are pairwise distinct.

    Distinctness of tree values for all depths is an open conjecture; this
    confirms it holds on the enumerated window, and doubles as a cross-check
    that three routes to the numbers (mediant denominators, Vieta walking,
    direct combine) agree on a sample of nodes.
    """
    report = VerifyReport("distinctness", depth)
    nodes = list(enumerate_tree(MARKOV_SEED_LEFT, MARKOV_SEED_RIGHT,
                                springborn_mediant, depth, parallel=parallel))
    seen: dict = {}
    for node in nodes:
        q = node.value.denominator
        report.record("distinct", q not in seen, node.path or "-",
                      f"Markov number {q} repeats at {seen.get(q)} and {node.path or '-'}")
        seen.setdefault(q, node.path or "-")
    rng = random.Random(RNG_SEED)
    sample = rng.sample(nodes, min(40, len(nodes)))
    for node in sample:
        triple = markov_triple_at(node.path)
        report.record("triple-route",
                      triple.as_tuple() == (node.left.denominator,
                                            node.right.denominator,
                                            node.value.denominator),
                      node.path or "-",
                      f"Vieta walk gives {triple.as_tuple()}")
    return report


def suite_homomorphism(depth: int, a_values, parallel: bool) -> VerifyReport:
    """Concatenation-to-product homomorphism and determinant parity, randomized."""
    report = VerifyReport("homomorphism", depth,
                          params={"cases": HOMOMORPHISM_CASES, "seed": RNG_SEED})
    rng = random.Random(RNG_SEED)

    def random_word(even: bool) -> tuple:
        n = rng.randrange(1, 13)
        if even != (n % 2 == 0):
            n += 1
        return tuple(rng.randrange(1, 10) for _ in range(n))

    for case in range(HOMOMORPHISM_CASES):
        u, v = random_word(even=True), random_word(even=True)
        report.record("product",
                      convergent_matrix(cf_concat(u, v))
                      == convergent_matrix(u) @ convergent_matrix(v),
                      "-", f"case {case}: words {u} and {v}")
        w = random_word(even=bool(case % 2))
        report.record("parity", convergent_matrix(w).det() == (-1) ** len(w),
                      "-", f"case {case}: word {w}")
    return report


SUITES: dict = {
    "relations": suite_relations,
    "index": suite_index,
    "words": suite_words,
    "periodization": suite_periodization,
    "companions": suite_companions,
    "monotonicity": suite_monotonicity,
    "distinctness": suite_distinctness,
    "homomorphism": suite_homomorphism,
}


def run_suites(
    names,
    depth: int,
    a_values=DEFAULT_A_VALUES,
    *,
    parallel: bool = False,
) -> list:
    """Run the named suites (in listed order) and return their reports."""
    reports = []
    for name in names:
        if name not in SUITES:
            raise DomainError(
                f"unknown suite {name!r}; expected one of {', '.join(SUITES)}"
            )
        started = time.perf_counter()
        report = SUITES[name](depth, a_values, parallel)
        report.wall_time = time.perf_counter() - started
        reports.append(report)
    return reports


def format_report(report: VerifyReport) -> str:
    status = "PASS" if report.ok else "FAIL"
    checked = sum(report.checks.values()) + report.failures
    line = (f"{report.suite}: {status}  depth={report.depth}  "
            f"checks={checked}  failures={report.failures}  "
            f"time={report.wall_time:.2f}s")
    if report.first_counterexample is not None:
        ce = report.first_counterexample
        line += (f"\n  first counterexample: {ce.get('check')} at "
                 f"{ce.get('path', '-')}: {ce.get('detail', '')}")
    return line
