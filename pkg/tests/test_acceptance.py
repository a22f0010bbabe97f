"""Acceptance checklist: twelve numbered criteria the package commits to,
each with a stated runtime budget. One verdict line per criterion is printed
in the terminal summary (see conftest).

Criterion 3 is asserted literally and is expected to FAIL: the exhaustive
claim is false for alpha inside a proper intermediate subfield. The test
characterizes the failing set exactly and reports it; the restricted claim
(alpha generating the full extension) is verified to hold everywhere.
"""

import itertools
import json
import math
import time

import numpy as np
import pytest

from conftest import record_criterion
from ffwitness import charsum, cli, construct, field, nt, poly
from ffwitness.field import clear_field_cache, get_embedding, make_field, mult_order

import contextlib
import io


def odd_prime_powers(lo, hi):
    return [q for q in nt.prime_powers_in(lo, hi) if q % 2 == 1]


def run_cli(argv):
    out = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
        code = cli.main(argv)
    return code, out.getvalue()


def test_criterion_01_square_and_nonsquare_shifts():
    # every odd prime power 7 <= q <= 49, exhaustively
    t0 = time.monotonic()
    qs = odd_prime_powers(7, 49)
    results = {q: construct.coulter_kosick_check(q) for q in qs}
    elapsed = time.monotonic() - t0
    ok = all(results.values()) and elapsed < 60
    print(record_criterion(1, ok, f"{len(qs)} fields, {elapsed:.1f}s"))
    assert elapsed < 60
    assert all(results.values()), {q: r for q, r in results.items() if not r}


def test_criterion_02_pipeline_certificates_h2_d2():
    t0 = time.monotonic()
    problems = []
    qs = odd_prime_powers(7, 121)
    for q in qs:
        p, k = nt.is_prime_power(q)
        rep = construct.construct_pipeline(p, k, 2, 2)
        big = make_field(p, 2 * k)
        if rep.spec.alpha_index != big.generator_index:
            problems.append((q, "alpha is not the minimal primitive element"))
        if not rep.verified:
            problems.append((q, "certificate missing or wrong"))
        g = math.gcd(rep.spec.t, q - 1)
        if rep.cardinality != 1 + (q - 1) // g:
            problems.append((q, "cardinality formula"))
        if g == nt.m_of_h(q, 2) and rep.cardinality != 1 + (q - 1) // nt.m_of_h(q, 2):
            problems.append((q, "m(2) cardinality clause"))
    elapsed = time.monotonic() - t0
    ok = not problems and elapsed < 60
    print(record_criterion(2, ok, f"{len(qs)} fields, {elapsed:.1f}s"))
    assert elapsed < 60
    assert not problems, problems


def test_criterion_03_coset_witness_exhaustive():
    # claim under test: for every prime power q <= 31, every 2 <= h <= isqrt(q)
    # with q**h <= 10**6 and every d >= 2 dividing q**h - 1, the coset
    # alpha - F_q contains a non-d-th power for EVERY alpha outside F_q.
    # Equivalent form: gcd of coset discrete logs is 1 for every such alpha.
    t0 = time.monotonic()
    literal_failures = []
    characterized = True
    cells = 0
    for q in nt.prime_powers_in(2, 31):
        for h in range(2, math.isqrt(q) + 1):
            if q**h > 10**6:
                continue
            cells += 1
            g = construct.coset_power_gcds(q, h, 1)
            base = construct.base_image_mask(q, h)
            bad = (g != 1) & ~base
            if not bad.any():
                continue
            p, k = nt.is_prime_power(q)
            big = make_field(p, k * h)
            inter = np.zeros(big.Q, dtype=bool)
            for j in range(2, h):
                if h % j == 0:
                    sub = make_field(p, k * j)
                    inter[list(get_embedding(sub, big).image_indices())] = True
            if not np.array_equal(bad, inter & ~base):
                characterized = False
            literal_failures.append((q, h, int(bad.sum())))
    clear_field_cache()
    elapsed = time.monotonic() - t0
    ok = not literal_failures and elapsed < 300
    detail = (
        f"{cells} (q,h) cells, {elapsed:.1f}s; literal claim false in "
        f"{len(literal_failures)} cells at h=4, failing alphas are exactly the "
        f"proper intermediate subfield F_q2 minus F_q; restricted claim "
        f"(alpha generating the extension) holds in all cells"
        if literal_failures
        else f"{cells} (q,h) cells, {elapsed:.1f}s"
    )
    print(record_criterion(3, ok, detail))
    assert elapsed < 300
    # the restricted statement holds everywhere and the failure set is exact
    assert characterized
    if literal_failures:
        inventory = ", ".join(f"q={q} h={h}: {n} alphas" for q, h, n in literal_failures)
        pytest.fail(
            "the exhaustive coset claim is false as stated: for alpha in the "
            "intermediate subfield F_{q^2} of F_{q^4} the whole coset "
            "alpha - F_q lies inside F_{q^2}, so every member is a d-th power "
            "for d = gcd contributions of (q^4-1)/(q^2-1) = q^2+1 (d = 2 for "
            "odd q, d = 257 for q = 16) and no witness exists. Failing cells: "
            + inventory
            + ". For alpha generating F_{q^h} the claim holds exhaustively."
        )


def test_criterion_04_binomial_criterion_is_exact():
    t0 = time.monotonic()
    mismatches = []
    total = 0
    for q in nt.prime_powers_in(2, 27):
        p, k = nt.is_prime_power(q)
        fd = make_field(p, k)
        for t in range(2, 13):
            for a in range(1, q):
                total += 1
                verdict, _ = poly.binomial_irreducible_check(t, fd.element(a))
                brute = poly.is_irreducible(poly.Polynomial.binomial(fd, t, a))
                if verdict != brute:
                    mismatches.append((q, t, a))
    elapsed = time.monotonic() - t0
    ok = not mismatches and elapsed < 60
    print(record_criterion(4, ok, f"{total} binomials, {elapsed:.1f}s"))
    assert elapsed < 60
    assert not mismatches, mismatches[:10]


def test_criterion_05_composition_sufficiency():
    t0 = time.monotonic()
    violations = []
    affirmed = 0
    checked = 0
    for q in (3, 5, 7, 9):
        p, k = nt.is_prime_power(q)
        fd = make_field(p, k)
        irreducibles = [poly.Polynomial(fd, (c0, 1)) for c0 in range(1, q)]
        for c0 in range(1, q):
            for c1 in range(q):
                f = poly.Polynomial(fd, (c0, c1, 1))
                if poly.is_irreducible(f):
                    irreducibles.append(f)
        for f in irreducibles:
            for t in range(1, 9):
                checked += 1
                verdict, _ = poly.composed_irreducible_check(f, t)
                if verdict:
                    affirmed += 1
                    if not poly.is_irreducible(f.compose_power(t)):
                        violations.append((q, f.coeffs, t))
    elapsed = time.monotonic() - t0
    ok = not violations and affirmed > 0 and elapsed < 60
    print(record_criterion(
        5, ok, f"{checked} pairs, {affirmed} affirmed, {elapsed:.1f}s"
    ))
    assert elapsed < 60
    assert affirmed > 0
    assert not violations, violations[:10]


def test_criterion_06_weil_audit_seeded():
    t0 = time.monotonic()
    problems = []
    small_bounds = {}
    for q in (101, 103, 121):
        rows = charsum.weil_audit_instances(q, 2, 200, max_degree=3, seed=0)
        applicable = [r for r in rows if r.result.applicable is True]
        if len(applicable) != 200:
            problems.append((q, f"expected 200 applicable rows, got {len(applicable)}"))
        for r in applicable:
            if not r.ok:
                problems.append((q, r.f.coeffs, abs(r.result.value), r.result.bound))
        small_bounds[q] = sum(1 for r in applicable if r.result.bound < q)
        if small_bounds[q] < 20:
            problems.append((q, f"only {small_bounds[q]} rows with bound < q"))
    elapsed = time.monotonic() - t0
    ok = not problems and elapsed < 120
    print(record_criterion(
        6, ok,
        f"600 applicable rows, bound<q counts {sorted(small_bounds.values())}, "
        f"{elapsed:.1f}s",
    ))
    assert elapsed < 120
    assert not problems, problems[:10]


def test_criterion_07_r_free_indicator_identity():
    t0 = time.monotonic()
    failures = []
    checked = 0
    for Q in nt.prime_powers_in(2, 121):
        p, k = nt.is_prime_power(Q)
        fd = make_field(p, k)
        divisors = nt.factorize(Q - 1).divisors() if Q > 2 else [1]
        for a in range(1, Q):
            el = fd.element(a)
            for r in divisors:
                checked += 1
                got = charsum.r_free_indicator_sum(el, r)
                want = r / nt.phi(r) if charsum.is_r_free(el, r) else 0.0
                if abs(got - want) > 1e-9 * nt.tau(r) * r:
                    failures.append((Q, a, r, got, want))
    elapsed = time.monotonic() - t0
    ok = not failures and elapsed < 60
    print(record_criterion(7, ok, f"{checked} triples, {elapsed:.1f}s"))
    assert elapsed < 60
    assert not failures, failures[:10]


def test_criterion_08_primitive_counts_vs_lower_bound():
    t0 = time.monotonic()
    problems = []
    audits_true = 0
    tau_holds = 0
    alphas = 0
    for q in (7, 9, 11, 13):
        p, k = nt.is_prime_power(q)
        big = make_field(p, 2 * k)
        base_img = set(get_embedding(make_field(p, k), big).image_indices())
        for t in (1, 2):
            for a in range(big.Q):
                if a in base_img:
                    continue
                alphas += 1
                rep = construct.primitive_set_search(q, 2, t, alpha_index=a)
                if rep.n_lower is None:
                    problems.append((q, t, a, "lower bound not reported"))
                    continue
                if rep.tau_condition:
                    tau_holds += 1
                    if rep.n_actual < math.ceil(rep.n_lower):
                        problems.append((q, t, a, "count below guaranteed bound"))
                if construct.primitive_weil_audit(q, 2, t, a) is True:
                    audits_true += 1
                    if rep.n_lower > rep.n_actual + 1e-9:
                        problems.append((q, t, a, "bound exceeds exact count"))
    elapsed = time.monotonic() - t0
    ok = not problems and audits_true > 0 and elapsed < 120
    print(record_criterion(
        8, ok,
        f"{alphas} alphas, audit passed {audits_true}, tau condition held "
        f"{tau_holds}, {elapsed:.1f}s",
    ))
    assert elapsed < 120
    assert audits_true > 0
    assert not problems, problems[:10]


def test_criterion_09_artin_schreier_shifts():
    t0 = time.monotonic()
    results = {p: construct.hm_artin_schreier_check(p) for p in (3, 5, 7)}
    elapsed = time.monotonic() - t0
    ok = all(results.values()) and elapsed < 120
    print(record_criterion(9, ok, f"p in (3, 5, 7), {elapsed:.1f}s"))
    assert elapsed < 120
    assert all(results.values()), results


def naive_irreducible(f):
    # no roots, and for degree 4 no monic quadratic divisor either
    fd = f.field
    n = f.degree()
    for a in range(fd.Q):
        if f.eval_idx(a) == 0:
            return False
    if n <= 3:
        return True
    assert n == 4
    for tail in itertools.product(range(fd.Q), repeat=2):
        g = poly.Polynomial(fd, tail + (1,))
        if (f % g).is_zero():
            return False
    return True


def test_criterion_10_constant_witness_search():
    t0 = time.monotonic()
    problems = []
    grid = [(q, kk, l) for q in (2, 3, 4, 5) for kk in (2, 3) for l in (2, 3, 4)]
    for q, kk, l in grid:
        w = construct.mn_conjecture_search(q, kk, l)
        if w is None:
            problems.append((q, kk, l, "no witness found"))
            continue
        big = w.field
        p, k = nt.is_prime_power(q)
        assert big.Q == q**kk
        if w.degree() != l or w.coeffs[-1] != 1:
            problems.append((q, kk, l, "not monic of the right degree"))
        if not naive_irreducible(w):
            problems.append((q, kk, l, "witness is reducible"))
        img = set(get_embedding(make_field(p, k), big).image_indices())
        if any(c not in img for c in w.coeffs[1:-1]):
            problems.append((q, kk, l, "middle coefficients leave the base"))
        c0 = big.element(w.coeffs[0])
        K = k * kk
        for rr in nt.factorize(K).prime_divisors():
            if field.frobenius(c0, K // rr) == c0:
                problems.append((q, kk, l, "constant lies in a proper subfield"))
    elapsed = time.monotonic() - t0
    ok = not problems and elapsed < 120
    print(record_criterion(10, ok, f"{len(grid)} cells, all witnessed, {elapsed:.1f}s"))
    assert elapsed < 120
    assert not problems, problems


def test_criterion_11_subgroup_bound_tabulation():
    t0 = time.monotonic()
    rows = construct.audit_bounds_rows(10**4, h=2)
    bad_sqrt = [r["q"] for r in rows if not r["sqrt_ok"]]
    log2_violations = [r["q"] for r in rows if not r["log2_claim_ok"]]
    elapsed = time.monotonic() - t0
    ok = not bad_sqrt and 17 in log2_violations and elapsed < 30
    print(record_criterion(
        11, ok,
        f"{len(rows)} odd prime powers, {len(log2_violations)} log2 flags "
        f"(17 included), {elapsed:.1f}s",
    ))
    assert elapsed < 30
    assert not bad_sqrt, bad_sqrt[:10]
    # the log2 comparison is tabulated, never asserted; q = 17 must be flagged
    assert 17 in log2_violations


def test_criterion_12_reports_are_byte_deterministic():
    t0 = time.monotonic()
    outputs = []
    for argv in (
        ["construct", "--p", "3", "--k", "4", "--h", "2", "--d", "2"],
        ["audit-weil", "--q-list", "101", "--m", "2", "--count", "25",
         "--seed", "5", "--format", "csv"],
        ["survey", "--q-min", "7", "--q-max", "31", "--format", "csv"],
    ):
        code1, out1 = run_cli(argv)
        clear_field_cache()
        code2, out2 = run_cli(argv)
        outputs.append((argv[0], code1 == code2, out1 == out2, len(out1)))
    elapsed = time.monotonic() - t0
    ok = all(c and o for _, c, o, _ in outputs)
    print(record_criterion(
        12, ok, f"construct/audit-weil/survey reruns byte-identical, {elapsed:.1f}s"
    ))
    assert ok, outputs
    blob = json.loads(run_cli(["construct", "--p", "3", "--k", "4", "--h", "2", "--d", "2"])[1])
    assert blob["verified"] is True
