"""Explicit small subsets of an extension field that provably contain a
non-d-th-power or a primitive element, with certificates found by direct
search, plus exhaustive desk checks of the neighboring statements."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import nt
from .charsum import characters_of_order, incomplete_char_sum
from .field import (
    CapExceeded,
    FieldDescriptor,
    FieldElement,
    field_from_json,
    get_embedding,
    is_dth_power,
    make_field,
)
from .poly import Polynomial, is_irreducible


@dataclass(frozen=True)
class ConstructionSpec:
    """Parameters of one set construction S = {alpha - x**t : x in GF(q)}
    inside GF(q**h). d is the power-freeness target (None in primitive mode),
    r the prime that t is a power of (None when t was forced), e the
    multiplicative order of alpha."""

    p: int
    k: int
    h: int
    d: int | None
    t: int
    r: int | None
    alpha_index: int
    e: int

    @property
    def q(self) -> int:
        return self.p**self.k

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "h": self.h,
            "d": self.d,
            "t": self.t,
            "r": self.r,
            "alpha": self.alpha_index,
            "e": self.e,
        }


@dataclass(frozen=True)
class ConstructionReport:
    spec: ConstructionSpec
    conditions: tuple[bool, bool, bool, bool]
    guaranteed: bool
    set_indices: tuple[int, ...]
    cardinality: int
    certificate: int | None
    verified: bool
    mode: str  # "non_dth_power" | "primitive"
    t_strict: int
    m_h: int
    big_field: dict
    base_field: dict
    n_actual: int | None = None
    n_lower: float | None = None
    tau_condition: bool | None = None

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "conditions": list(self.conditions),
            "guaranteed": self.guaranteed,
            "set_indices": list(self.set_indices),
            "cardinality": self.cardinality,
            "certificate": self.certificate,
            "verified": self.verified,
            "mode": self.mode,
            "t_strict": self.t_strict,
            "m_h": self.m_h,
            "big_field": self.big_field,
            "base_field": self.base_field,
            "n_actual": self.n_actual,
            "n_lower": self.n_lower,
            "tau_condition": self.tau_condition,
        }


# ---------------------------------------------------------------------------
# the set construction


def build_set(alpha: FieldElement, t: int, base: FieldDescriptor) -> set[FieldElement]:
    """S = {alpha - x**t : x in the embedded base field}; the cardinality is
    always 1 + (q-1)/gcd(t, q-1)."""
    if t < 1:
        raise ValueError("t must be >= 1")
    B = alpha.field
    emb = get_embedding(base, B)
    if B.has_tables:
        points = np.array(emb.image_indices(), dtype=np.int64)
        powered = B.pow_vec(points, t)
        vals = B.sub_vec(np.full(points.shape, alpha.idx, dtype=np.int64), powered)
        return {FieldElement(B, int(v)) for v in np.unique(vals)}
    out = set()
    for x in range(base.Q):
        xt = B.pow_idx(emb.map_idx(x), t)
        out.add(FieldElement(B, B.sub_idx(alpha.idx, xt)))
    return out


def theorem_conditions_check(spec: ConstructionSpec) -> tuple[bool, bool, bool, bool]:
    """The four arithmetic conditions under which the construction is
    guaranteed to contain a non-d-th power for every d | q**h - 1, d > 1:
    (1) gcd(t, (q**h - 1)/e) == 1, (2) every prime of t divides e,
    (3) q**h = 1 mod 4 whenever 4 | t, (4) t*h <= sqrt(q), the last compared
    exactly as t**2 * h**2 <= q."""
    q = spec.q
    qh = q**spec.h
    c1 = math.gcd(spec.t, (qh - 1) // spec.e) == 1
    c2 = all(spec.e % r == 0 for r in nt.factorize(spec.t).prime_divisors())
    c3 = (qh % 4 == 1) if spec.t % 4 == 0 else True
    c4 = spec.t * spec.t * spec.h * spec.h <= q
    return c1, c2, c3, c4


def find_non_dth_power(S, d: int) -> FieldElement | None:
    """First element of S (by index) that is not a d-th power, or None.
    Rejects 0 in S and d not dividing Q-1."""
    members = sorted(S, key=lambda b: b.idx)
    if not members:
        return None
    fd = members[0].field
    if d < 1 or (fd.Q - 1) % d != 0:
        raise ValueError(f"d = {d} must divide Q-1 = {fd.Q - 1}")
    if members[0].idx == 0:
        raise ValueError("0 in S: d-th power status is undefined at zero")
    for beta in members:
        if not is_dth_power(beta, d):
            return beta
    return None


def _strict_t(r: int, h: int, q: int) -> int:
    e = 0
    while (r ** (e + 1) * h) ** 2 < q:
        e += 1
    return r**e


def _default_alpha(big: FieldDescriptor, base_image: set[int]) -> int:
    # the deterministic generator is the minimal-index primitive element and
    # never lies in the embedded base field (its order exceeds q - 1)
    if big.generator_index in base_image:
        raise RuntimeError("generator unexpectedly lies in the base field")
    return big.generator_index


def construct_pipeline(
    p: int,
    k: int,
    h: int,
    d: int,
    *,
    alpha_index: int | None = None,
    t: int | None = None,
    cap: int | None = None,
) -> ConstructionReport:
    """End-to-end construction: pick t from q and h (unless forced), pick
    alpha (minimal primitive unless given), build S = {alpha - x**t}, check
    the four conditions, and certify a non-d-th power by direct search."""
    if h < 2:
        raise ValueError("h must be >= 2 so that alpha can avoid the base field")
    base = make_field(p, k, cap=cap)
    big = make_field(p, k * h, cap=cap)
    q = base.Q
    qh = big.Q
    if d < 1 or (qh - 1) % d != 0:
        raise ValueError(f"d = {d} must divide q**h - 1 = {qh - 1}")
    r: int | None
    if t is None:
        if q >= 3:
            r, t = nt.choose_t(q, h)
        else:
            r, t = None, 1  # q = 2: q-1 = 1 has no prime part
    else:
        if t < 1:
            raise ValueError("forced t must be >= 1")
        r = None
    emb = get_embedding(base, big)
    base_image = set(emb.image_indices())
    if alpha_index is None:
        alpha_index = _default_alpha(big, base_image)
    else:
        if not 0 <= alpha_index < qh:
            raise ValueError(f"alpha index {alpha_index} out of range")
        if alpha_index in base_image:
            raise ValueError("alpha must avoid the embedded base field")
    alpha = FieldElement(big, alpha_index)
    e = big.mult_order_idx(alpha_index)
    spec = ConstructionSpec(p, k, h, d, t, r, alpha_index, e)
    conditions = theorem_conditions_check(spec)
    S = build_set(alpha, t, base)
    expected = 1 + (q - 1) // math.gcd(t, q - 1)
    if len(S) != expected:
        raise RuntimeError(f"set cardinality {len(S)} != {expected}; arithmetic is broken")
    cert = find_non_dth_power(S, d)
    m_h = nt.m_of_h(q, h) if q >= 3 else 1
    t_strict = _strict_t(r, h, q) if r is not None else t
    return ConstructionReport(
        spec=spec,
        conditions=conditions,
        guaranteed=all(conditions) and d > 1,
        set_indices=tuple(sorted(b.idx for b in S)),
        cardinality=len(S),
        certificate=cert.idx if cert is not None else None,
        verified=cert is not None,
        mode="non_dth_power",
        t_strict=t_strict,
        m_h=m_h,
        big_field=big.to_json(),
        base_field=base.to_json(),
    )


# ---------------------------------------------------------------------------
# vectorized whole-field scans


def coset_power_gcds(q: int, h: int, t: int, *, cap: int | None = None) -> np.ndarray:
    """For every alpha in GF(q**h), the gcd of q**h - 1 with the discrete logs
    of all members of {alpha - x**t : x in GF(q)}.

    The coset consists entirely of d-th powers iff d divides this gcd, so
    entry 1 certifies a non-d-th power for every d > 1. Entries at alpha in
    the embedded base field (where the coset may contain 0) are not
    meaningful; callers mask them."""
    pk = nt.is_prime_power(q)
    if pk is None:
        raise ValueError(f"{q} is not a prime power")
    p, k = pk
    base = make_field(p, k, cap=cap)
    big = make_field(p, k * h, cap=cap)
    emb = get_embedding(base, big)
    points = np.array(emb.image_indices(), dtype=np.int64)
    powered = np.unique(big.pow_vec(points, t))
    all_idx = big.all_indices()
    g = np.zeros(big.Q, dtype=np.int64)
    for s in powered:
        logs = big.log_vec(big.sub_vec(all_idx, np.int64(s)))
        np.gcd(g, np.where(logs < 0, 0, logs), out=g)
    np.gcd(g, np.int64(big.Q - 1), out=g)
    return g


def base_image_mask(q: int, h: int, *, cap: int | None = None) -> np.ndarray:
    """Boolean mask over GF(q**h) indices marking the embedded GF(q)."""
    p, k = nt.is_prime_power(q)
    base = make_field(p, k, cap=cap)
    big = make_field(p, k * h, cap=cap)
    emb = get_embedding(base, big)
    mask = np.zeros(big.Q, dtype=bool)
    mask[list(emb.image_indices())] = True
    return mask


def alpha_density_scan(q: int, h: int, t: int, d: int, *, cap: int | None = None) -> tuple[int, int, int]:
    """Over all alpha outside the embedded base field: how many satisfy the
    four guarantee conditions (valid), and how many cosets
    {alpha - x**t} actually contain a non-d-th power (certified).

    Returns (valid, certified, total)."""
    p, k = nt.is_prime_power(q)
    base = make_field(p, k, cap=cap)
    big = make_field(p, k * h, cap=cap)
    qh = big.Q
    if d < 1 or (qh - 1) % d != 0:
        raise ValueError(f"d = {d} must divide q**h - 1 = {qh - 1}")
    not_base = ~base_image_mask(q, h, cap=cap)
    all_idx = big.all_indices()
    logs = big.log_vec(all_idx)
    # conditions 1 and 2 vary with alpha through e = ord(alpha)
    orders = (qh - 1) // np.gcd(np.where(logs < 0, 0, logs), qh - 1)
    cof = (qh - 1) // orders
    c1 = np.gcd(np.int64(t), cof) == 1
    c2 = np.ones(qh, dtype=bool)
    for r in nt.factorize(t).prime_divisors():
        c2 &= orders % r == 0
    c3 = (qh % 4 == 1) if t % 4 == 0 else True
    c4 = t * t * h * h <= q
    valid_mask = c1 & c2 & bool(c3) & bool(c4) & not_base & (all_idx != 0)
    g = coset_power_gcds(q, h, t, cap=cap)
    certified_mask = (g % d != 0) & not_base
    total = int(not_base.sum())
    return int(valid_mask.sum()), int(certified_mask.sum()), total


# ---------------------------------------------------------------------------
# neighboring statements, checked exhaustively at desk scale


def coulter_kosick_check(q: int, *, cap: int | None = None) -> bool:
    """For every alpha in GF(q**2) outside GF(q): {alpha - x**2 : x in GF(q)}
    contains both a square and a non-square of GF(q**2). Exhaustive over
    alpha. Requires an odd prime power q >= 7."""
    pk = nt.is_prime_power(q)
    if pk is None or q % 2 == 0 or q < 7:
        raise ValueError("q must be an odd prime power >= 7")
    p, k = pk
    base = make_field(p, k, cap=cap)
    big = make_field(p, 2 * k, cap=cap)
    emb = get_embedding(base, big)
    points = np.array(emb.image_indices(), dtype=np.int64)
    squares = np.unique(big.pow_vec(points, 2))
    all_idx = big.all_indices()
    has_square = np.zeros(big.Q, dtype=bool)
    has_nonsquare = np.zeros(big.Q, dtype=bool)
    for s in squares:
        logs = big.log_vec(big.sub_vec(all_idx, np.int64(s)))
        nz = logs >= 0
        has_square |= nz & (logs % 2 == 0)
        has_nonsquare |= nz & (logs % 2 == 1)
    outside = ~base_image_mask(q, 2, cap=cap)
    return bool(np.all((has_square & has_nonsquare)[outside]))


def _solve_mod_p(rows: list[list[int]], rhs: list[int], p: int) -> list[int] | None:
    """One solution of A x = b over Z_p by Gaussian elimination, free
    variables set to 0; None when inconsistent."""
    n = len(rows)
    m = len(rows[0]) if n else 0
    a = [row[:] + [rhs[i]] for i, row in enumerate(rows)]
    pivots = []
    r = 0
    for c in range(m):
        sel = next((i for i in range(r, n) if a[i][c] % p != 0), None)
        if sel is None:
            continue
        a[r], a[sel] = a[sel], a[r]
        inv = pow(a[r][c], p - 2, p)
        a[r] = [(v * inv) % p for v in a[r]]
        for i in range(n):
            if i != r and a[i][c] % p != 0:
                f = a[i][c]
                a[i] = [(a[i][j] - f * a[r][j]) % p for j in range(m + 1)]
        pivots.append(c)
        r += 1
        if r == n:
            break
    for i in range(r, n):
        if a[i][m] % p != 0:
            return None
    x = [0] * m
    for i, c in enumerate(pivots):
        x[c] = a[i][m] % p
    return x


def hm_artin_schreier_check(p: int, *, cap: int | None = None) -> bool:
    """With a the least non-square of GF(p) and alpha a root of
    x**p - x - a in GF(p**p): every alpha + c, c in GF(p), is a non-square.
    The root is found by solving the Frobenius-minus-identity linear system
    over GF(p)."""
    if not nt.is_prime(p) or p % 2 == 0:
        raise ValueError("p must be an odd prime")
    fp = make_field(p, 1, cap=cap)
    a = next(c for c in range(2, p) if not is_dth_power(FieldElement(fp, c), 2))
    big = make_field(p, p, cap=cap)
    # Frobenius matrix: column i holds the coefficients of (x**i)**p
    cols = [big.coeffs_of(big.pow_idx(big._pp[i], p)) for i in range(p)]
    rows = [[(cols[j][i] - (1 if i == j else 0)) % p for j in range(p)] for i in range(p)]
    sol = _solve_mod_p(rows, [a] + [0] * (p - 1), p)
    if sol is None:
        raise RuntimeError("Artin-Schreier system is inconsistent; field arithmetic is broken")
    alpha_idx = big.index_of(sol)
    # sanity: alpha**p - alpha really is the constant a
    if big.sub_idx(big.pow_idx(alpha_idx, p), alpha_idx) != a:
        raise RuntimeError("Artin-Schreier root check failed; field arithmetic is broken")
    for c in range(p):
        if is_dth_power(FieldElement(big, big.add_idx(alpha_idx, c)), 2):
            return False
    return True


def mn_conjecture_search(
    q: int, kk: int, l: int, *, budget: int = 10**7, cap: int | None = None
) -> Polynomial | None:
    """Search for a monic irreducible f of degree l over GF(q**kk) such that
    f - f(0) has all coefficients in GF(q) and f(0) lies in no proper
    subfield of GF(q**kk).

    Scans f(0) in ascending index order and the GF(q) coefficients in
    ascending embedded-index order (highest-degree coefficient varying
    fastest); returns the first witness, or None when the exhaustive search
    finds none."""
    pk = nt.is_prime_power(q)
    if pk is None:
        raise ValueError(f"{q} is not a prime power")
    if kk < 1 or l < 1:
        raise ValueError("kk and l must be >= 1")
    p, k0 = pk
    K = k0 * kk
    if q**kk * q ** (l - 1) > budget:
        raise CapExceeded(f"candidate count q**kk * q**(l-1) exceeds budget {budget}")
    big = make_field(p, K, cap=cap)
    sub = make_field(p, k0, cap=cap)
    emb = get_embedding(sub, big)
    mid_choices = sorted(emb.image_indices())
    max_proper = [K // rr for rr in nt.factorize(K).prime_divisors()]
    for c0 in range(big.Q):
        if any(big.pow_idx(c0, p**s) == c0 for s in max_proper):
            continue  # f(0) falls in a proper subfield
        for mids in itertools.product(mid_choices, repeat=l - 1):
            f = Polynomial(big, (c0, *mids, 1))
            if is_irreducible(f):
                return f
    return None


# ---------------------------------------------------------------------------
# primitive-element constructions


def primitive_lower_bound(q: int, n: int, t: int) -> tuple[float, bool]:
    """The character-sum lower bound on the number of primitive elements hit
    by {alpha - x**t : x in GF(q)} inside GF(q**n), together with the
    divisor-count condition that makes it positive:

        N >= phi(q**n - 1)/(q**n - 1) * (q - (tau(q**n - 1) - 1)*(n*t - 1)*sqrt(q))

    The condition tau(q**n - 1) < sqrt(q)/(n*t - 1) + 1 is evaluated exactly
    as (tau - 1)**2 * (n*t - 1)**2 < q (vacuously true when n*t == 1)."""
    if nt.is_prime_power(q) is None:
        raise ValueError(f"{q} is not a prime power")
    if n < 1 or t < 1:
        raise ValueError("n and t must be >= 1")
    qn = q**n
    tau_ = nt.tau(qn - 1)
    phi_ = nt.phi(qn - 1)
    nt1 = n * t - 1
    n_lower = phi_ / (qn - 1) * (q - (tau_ - 1) * nt1 * math.sqrt(q))
    cond = True if nt1 == 0 else (tau_ - 1) ** 2 * nt1**2 < q
    return n_lower, cond


def primitive_set_search(
    q: int, n: int, t: int, alpha_index: int | None = None, *, cap: int | None = None
) -> ConstructionReport:
    """Count and certify primitive elements of GF(q**n) inside
    S = {alpha - x**t : x in GF(q)}."""
    pk = nt.is_prime_power(q)
    if pk is None:
        raise ValueError(f"{q} is not a prime power")
    if n < 2:
        raise ValueError("n must be >= 2 so that alpha can avoid the base field")
    if t < 1:
        raise ValueError("t must be >= 1")
    p, k0 = pk
    base = make_field(p, k0, cap=cap)
    big = make_field(p, k0 * n, cap=cap)
    qn = big.Q
    emb = get_embedding(base, big)
    base_image = set(emb.image_indices())
    if alpha_index is None:
        alpha_index = _default_alpha(big, base_image)
    else:
        if not 0 <= alpha_index < qn:
            raise ValueError(f"alpha index {alpha_index} out of range")
        if alpha_index in base_image:
            raise ValueError("alpha must avoid the embedded base field")
    alpha = FieldElement(big, alpha_index)
    e = big.mult_order_idx(alpha_index)
    spec = ConstructionSpec(p, k0, n, None, t, None, alpha_index, e)
    conditions = theorem_conditions_check(spec)
    S = build_set(alpha, t, base)
    expected = 1 + (base.Q - 1) // math.gcd(t, base.Q - 1)
    if len(S) != expected:
        raise RuntimeError(f"set cardinality {len(S)} != {expected}; arithmetic is broken")
    members = sorted(b.idx for b in S)
    qn1 = qn - 1
    prim = [m for m in members if m != 0 and math.gcd(big.log_idx(m), qn1) == 1]
    n_lower, tau_cond = primitive_lower_bound(q, n, t)
    cert = prim[0] if prim else None
    return ConstructionReport(
        spec=spec,
        conditions=conditions,
        guaranteed=(e == qn1) and all(conditions[:3]) and tau_cond,
        set_indices=tuple(members),
        cardinality=len(members),
        certificate=cert,
        verified=cert is not None,
        mode="primitive",
        t_strict=t,
        m_h=nt.m_of_h(q, n) if q >= 3 else 1,
        big_field=big.to_json(),
        base_field=base.to_json(),
        n_actual=len(prim),
        n_lower=n_lower,
        tau_condition=tau_cond,
    )


def primitive_weil_audit(
    q: int, n: int, t: int, alpha_index: int, *, cap: int | None = None
) -> bool | None:
    """Audit every character involved in the primitive lower bound: for each
    nontrivial chi of squarefree order dividing q**n - 1, the sum of
    chi(alpha - x**t) over GF(q) must be applicable and within its bound.
    Returns True / False / None (None when some applicability is unknown)."""
    p, k0 = nt.is_prime_power(q)
    base = make_field(p, k0, cap=cap)
    big = make_field(p, k0 * n, cap=cap)
    f = Polynomial.binomial(big, t, FieldElement(big, alpha_index)).scale(big.neg_idx(1))
    # f = alpha - x**t
    unknown = False
    for dd in nt.factorize(big.Q - 1).divisors():
        if dd == 1 or nt.moebius(dd) == 0:
            continue
        for chi in characters_of_order(big, dd):
            res = incomplete_char_sum(chi, f, base, cap=cap)
            if res.applicable is True:
                if abs(res.value) > res.bound + 1e-6:
                    return False
            else:
                unknown = True
    return None if unknown else True


# ---------------------------------------------------------------------------
# survey and audit tabulation


def survey_rows(
    q_min: int, q_max: int, h: int, d: int, *, cap: int | None = None
) -> list[dict]:
    """One pipeline run per prime power in [q_min, q_max]; rows where d does
    not divide q**h - 1 or the field exceeds the cap are recorded, not
    dropped."""
    rows = []
    for q in nt.prime_powers_in(q_min, q_max):
        p, k = nt.is_prime_power(q)
        row: dict = {"q": q, "h": h, "d": d}
        try:
            if (q**h - 1) % d != 0:
                row["status"] = "skipped: d does not divide q**h - 1"
            else:
                rep = construct_pipeline(p, k, h, d, cap=cap)
                m_h = rep.m_h
                fl = (q - 1).bit_length() - 1
                row.update(
                    {
                        "r": rep.spec.r,
                        "t": rep.spec.t,
                        "t_strict": rep.t_strict,
                        "set_size": rep.cardinality,
                        "m_h": m_h,
                        "cond1": rep.conditions[0],
                        "cond2": rep.conditions[1],
                        "cond3": rep.conditions[2],
                        "cond4": rep.conditions[3],
                        "guaranteed": rep.guaranteed,
                        "certified": rep.verified,
                        "floor_log2_qm1": fl,
                        "sqrt_q": f"{math.sqrt(q):.6f}",
                        "log2_claim_ok": fl <= m_h,
                        "status": "ok",
                    }
                )
        except CapExceeded as exc:
            row["status"] = f"cap: {exc}"
        except ValueError as exc:
            row["status"] = f"error: {exc}"
        rows.append(row)
    return rows


def audit_bounds_rows(q_max: int, h: int = 2) -> list[dict]:
    """For every odd prime power 3 <= q <= q_max: M(h), the assertion
    M(h) < sqrt(q) (exact integer comparison), and the tabulated-only claim
    floor(log2(q-1)) <= M(h) with its violations."""
    rows = []
    for q in nt.prime_powers_in(3, q_max):
        if q % 2 == 0:
            continue
        m_h = nt.m_of_h(q, h)
        fl = (q - 1).bit_length() - 1
        rows.append(
            {
                "q": q,
                "m_h": m_h,
                "floor_log2_qm1": fl,
                "sqrt_ok": m_h * m_h < q,
                "log2_claim_ok": fl <= m_h,
            }
        )
    return rows


# ---------------------------------------------------------------------------
# report re-verification


def verify_report(report: dict, *, cap: int | None = None) -> tuple[bool, list[str]]:
    """Recompute a saved report from its spec: rebuild both fields (refusing
    descriptor drift), rebuild S, re-run the conditions and the certificate.
    Returns (ok, problems)."""
    problems: list[str] = []
    try:
        big = field_from_json(report["big_field"], cap=cap)
        base = field_from_json(report["base_field"], cap=cap)
    except (ValueError, CapExceeded) as exc:
        return False, [f"field rebuild failed: {exc}"]
    sp = report["spec"]
    spec = ConstructionSpec(
        p=sp["p"], k=sp["k"], h=sp["h"], d=sp["d"], t=sp["t"], r=sp["r"],
        alpha_index=sp["alpha"], e=sp["e"],
    )
    if big.p != spec.p or big.k != spec.k * spec.h:
        problems.append("big field does not match the stored construction parameters")
    if base.p != spec.p or base.k != spec.k:
        problems.append("base field does not match the stored construction parameters")
    if problems:
        return False, problems
    alpha = FieldElement(big, spec.alpha_index)
    if big.mult_order_idx(spec.alpha_index) != spec.e:
        problems.append("stored order e does not match alpha")
    S = build_set(alpha, spec.t, base)
    got = tuple(sorted(b.idx for b in S))
    if got != tuple(report["set_indices"]):
        problems.append("recomputed set differs from stored set_indices")
    if len(got) != report["cardinality"]:
        problems.append("stored cardinality is wrong")
    conds = theorem_conditions_check(spec)
    if list(conds) != [bool(c) for c in report["conditions"]]:
        problems.append("recomputed conditions differ")
    cert = report["certificate"]
    if report["mode"] == "non_dth_power":
        found = find_non_dth_power(S, spec.d)
        if (found.idx if found is not None else None) != cert:
            problems.append("recomputed certificate differs")
        if report["verified"] != (found is not None):
            problems.append("verified flag is inconsistent")
    elif report["mode"] == "primitive":
        qn1 = big.Q - 1
        prim = [m for m in got if m != 0 and math.gcd(big.log_idx(m), qn1) == 1]
        if (prim[0] if prim else None) != cert:
            problems.append("recomputed certificate differs")
        if report.get("n_actual") != len(prim):
            problems.append("recomputed primitive count differs")
        if report["verified"] != bool(prim):
            problems.append("verified flag is inconsistent")
    else:
        problems.append(f"unknown mode {report['mode']!r}")
    return not problems, problems
