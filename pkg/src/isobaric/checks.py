"""Verification suites run by ``isobaric verify``.

Each suite returns a list of ``(name, ok, detail)`` rows.  Sizes scale with
``n_max`` so a quick run and the full run share code.
"""

import random
from fractions import Fraction

from .kernel import classify, scan
from .lattice import intersection_nodes, string_lattice_union
from .operators import OperatorSpec, apply_D, apply_tail, domino_check, is_in_kernel
from .poly import IsobaricPolynomial, add, partial_derivative, scalar_mul
from .sampling import random_kernel_pair, random_weight
from .strings import decompose, expand_string, generator_of, verify_string_theorem
from .weights import (
    fibonacci_poly,
    fibonacci_recurrence_oracle,
    hook_reflect,
    lucas_poly,
    weight_form,
    wip,
)


def _row(name, failures, checked):
    if failures:
        return (name, False, f"{len(failures)}/{checked} failed, first: {failures[0]}")
    return (name, True, f"{checked} checked")


def suite_weights(n_max):
    F = Fraction
    cases = {
        (1, 0, 1): {1: F(1), 3: F(1)},
        (0, 2, 0): {2: F(1)},
        (1, 2, 2): {1: F(6), 2: F(12), 3: F(12)},
    }
    bad = [a for a, want in cases.items() if weight_form(a) != want]
    return [_row("weight formula spot values", bad, len(cases))]


def suite_fibonacci(n_max):
    golden = IsobaricPolynomial(4, 4, {(4, 0, 0, 0): 1, (2, 1, 0, 0): 3, (0, 2, 0, 0): 1,
                                       (1, 0, 1, 0): 2, (0, 0, 0, 1): 1})
    rows = [("F_4 golden value", fibonacci_poly(4, 4) == golden, "t_1^4 + 3t_1^2t_2 + ...")]
    bad, count = [], 0
    for k in range(1, 9):
        for n in range(1, n_max + 1):
            count += 1
            if fibonacci_poly(n, k) != fibonacci_recurrence_oracle(n, k):
                bad.append((n, k))
    rows.append(_row("F_n equals the linear recurrence", bad, count))
    return rows


def suite_kernel_sequences(n_max):
    bad_f, bad_g, count = [], [], 0
    for k in range(2, 9):
        for n in range(1, n_max + 1):
            count += 1
            if not is_in_kernel(OperatorSpec.classic(2, k), fibonacci_poly(n, k)):
                bad_f.append((n, k))
            if not is_in_kernel(OperatorSpec.classic(1, k), lucas_poly(n, k)):
                bad_g.append((n, k))
    return [_row("T_2 kills F_n", bad_f, count), _row("T_1 kills G_n", bad_g, count)]


def suite_strings(n_max):
    bad, disagree, count = [], [], 0
    for k in range(2, 7):
        for n in range(2, n_max + 1):
            for m, seq in ((2, fibonacci_poly(n, k)), (1, lucas_poly(n, k))):
                spec = OperatorSpec.classic(m, k)
                for ws in decompose(seq):
                    count += 1
                    direct = is_in_kernel(spec, ws.polynomial())
                    domino = domino_check(ws.family, ws.coeffs, spec)
                    if direct != domino:
                        disagree.append((n, k, m, ws.family.generator))
                    if not direct:
                        bad.append((n, k, m, ws.family.generator))
    return [_row("strings of F (m=2) and G (m=1) are killed", bad, count),
            _row("domino check agrees with direct application", disagree, count)]


def suite_hooks(n_max):
    bad = []
    top = min(n_max, 10)
    for n in range(1, top + 1):
        for k in (n, max(2, n - 2)):
            acc = IsobaricPolynomial.zero(n, k)
            for r in range(n):
                acc = add(acc, scalar_mul((-1) ** r, hook_reflect(n, r, k)))
            if acc != lucas_poly(n, k):
                bad.append((n, k))
    return [_row("G_n is the alternating sum of hook reflects", bad, 2 * top)]


def suite_prop41(n_max):
    k, N = 5, 8
    rows = []
    r1 = classify(OperatorSpec.classic(1, k), k, N)
    ok1 = r1.classification == "codim1" and all(2 * v[1] == v[2] for v in r1.nullspace)
    rows.append(("m=1 kernel is the family 2w1 = w2", ok1, r1.classification))
    r2 = classify(OperatorSpec.classic(2, k), k, N)
    ok2 = r2.classification == "line" and r2.nullspace[0].entries[:k] == (1,) * k
    rows.append(("m=2 kernel is the unit-weight line", ok2, r2.classification))
    others = [m for m in (-3, -2, -1, 0, 3, 4, 5) if classify(OperatorSpec.classic(m, k), k, N).nontrivial]
    rows.append(_row("other m give a trivial kernel", others, 7))
    return rows


def suite_scan(n_max):
    want = [((1, 1, 1, 1), 1), ((1, 1, 1, 1), 2)]
    rows = []
    for N in (8, 10):
        reports = scan([-1, 0, 1, 2], range(-2, 4), 4, N)
        found = sorted((tuple(r.spec.a), r.spec.m) for r in reports)
        rows.append((f"generalized operators, N={N}: nontrivial only at a=1, m in {{1,2}}", found == want,
                     f"{len(found)} nontrivial, e.g. {[(list(map(int, a)), int(m)) for a, m in found[:3]]}"))
    return rows


def suite_string_equivalence(n_max, seed=0, samples=500):
    rng = random.Random(seed)
    bad = []
    for i in range(samples):
        p, spec = random_kernel_pair(rng, n_max=min(n_max, 10))
        if not verify_string_theorem(p, spec):
            bad.append(i)
    return [_row("kernel membership iff every string is killed", bad, samples)]


def suite_lattice(n_max, seed=0):
    fam = expand_string((0, 2, 1))
    ex = intersection_nodes(fam)
    rows = [("intersection nodes of the (0,2,1) string",
             set(ex) == {(2, 0, 1), (0, 1, 1)} and len(ex) == 2, str(ex))]
    rng = random.Random(seed)
    bad_string, bad_contain, count = [], [], 0
    for n in range(3, n_max + 1):
        for k in range(2, 6):
            p = wip(n, k, random_weight(rng, min(n, k)))
            for m in (1, 2, 3):
                spec = OperatorSpec.classic(m, k)
                for ws in decompose(p):
                    count += 1
                    f = ws.family
                    union = string_lattice_union(f).nodes
                    q = ws.polynomial()
                    for img in (apply_D(q, 1, 1), apply_tail(spec, q)):
                        if not set(img.support()) <= union:
                            bad_contain.append((n, k, f.generator))
                    if len(f) >= 2:
                        nodes = intersection_nodes(f)
                        inner = expand_string(generator_of(nodes[0]))
                        if set(nodes) != set(inner.elements) or inner.degree != n - 2:
                            bad_string.append((n, k, f.generator))
    rows.append(_row("intersection nodes form a string of degree n-2", bad_string, count))
    rows.append(_row("operator images stay in the string lattice", bad_contain, 2 * count))
    return rows


def suite_derivative(n_max):
    literal, scaled, count = [], [], 0
    for n in range(2, n_max + 1):
        for k in range(2, 7):
            g = lucas_poly(n, k)
            for j in range(1, min(n - 1, k) + 1):
                count += 1
                d = partial_derivative(g, j)
                f = fibonacci_poly(n - j, k)
                if d != f:
                    literal.append((n, k, j))
                if d != scalar_mul(n, f):
                    scaled.append((n, k, j))
    return [_row("dG_n/dt_j == F_(n-j)", literal, count),
            _row("dG_n/dt_j == n F_(n-j)", scaled, count)]


def suite_module(n_max, seed=0):
    rng = random.Random(seed)
    bad_lin, bad_int = [], []
    for i in range(200):
        n, k = rng.randint(1, min(n_max, 8)), rng.randint(1, 5)
        w1, w2 = random_weight(rng, min(n, k)), random_weight(rng, min(n, k))
        c = Fraction(rng.randint(-7, 7), rng.randint(1, 5))
        if wip(n, k, w1 + w2) != wip(n, k, w1) + wip(n, k, w2) or wip(n, k, w1.scale(c)) != c * wip(n, k, w1):
            bad_lin.append(i)
    for i in range(200):
        n, k = rng.randint(1, n_max), rng.randint(1, 6)
        p = wip(n, k, random_weight(rng, min(n, k), integer=True))
        if any(c.denominator != 1 for _, c in p):
            bad_int.append(i)
    return [_row("WIPs are linear in the weights", bad_lin, 200),
            _row("integer weights give integer coefficients", bad_int, 200)]


SUITES = {
    "thm31": [suite_kernel_sequences],
    "thm32": [suite_strings],
    "thm22": [suite_hooks],
    "prop41": [suite_prop41],
    "thm43": [suite_scan],
    "thm45": [suite_string_equivalence],
    "lattice": [suite_lattice],
}
SUITES["all"] = [
    suite_weights,
    suite_fibonacci,
    suite_kernel_sequences,
    suite_strings,
    suite_hooks,
    suite_prop41,
    suite_scan,
    suite_string_equivalence,
    suite_lattice,
    suite_derivative,
    suite_module,
]


def run_suite(name, n_max=12):
    rows = []
    for fn in SUITES[name]:
        rows.extend(fn(n_max))
    return rows
