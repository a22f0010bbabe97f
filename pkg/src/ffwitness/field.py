"""Finite fields GF(p**k) in the polynomial basis.

The modulus and the generator are chosen deterministically (minimal index
encoding), so two fields built from the same (p, k) are identical. An element
is stored as its index sum(c_i * p**i); arithmetic goes through discrete
exp/log tables when they are present and through polynomial arithmetic
otherwise. Descriptors are immutable after construction and safe to share
across threads.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import nt

DEFAULT_CAP = 1 << 22
_LUT_CAP = 256
_EAGER_EMBED_CAP = 1 << 16
_TABLE_BLOCK = 4096


class CapExceeded(Exception):
    """A field or enumeration size exceeds the configured cap."""


class MissingLogTable(Exception):
    """The operation needs a discrete-log table this field was built without."""


# ---------------------------------------------------------------------------
# polynomial arithmetic over Z_p on plain int tuples (constant term first),
# used to pick the modulus and to run fields that have no log tables


def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fp_trim(out)


def _fp_mod(a: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    # mod is monic
    out = list(a)
    dm = len(mod) - 1
    for i in range(len(out) - 1, dm - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(dm):
                out[i - dm + j] = (out[i - dm + j] - c * mod[j]) % p
    return _fp_trim(out)


def _fp_powmod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    acc = _fp_mod(base, mod, p)
    while e:
        if e & 1:
            result = _fp_mod(_fp_mul(result, acc, p), mod, p)
        acc = _fp_mod(_fp_mul(acc, acc, p), mod, p)
        e >>= 1
    return result


def _fp_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        inv = pow(b[-1], p - 2, p)
        monic = [(c * inv) % p for c in b]
        a, b = b, _fp_mod(a, monic, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def _fp_is_irreducible(f: Sequence[int], p: int) -> bool:
    # no irreducible factor of degree <= deg(f)/2  <=>  f is irreducible
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    inv = pow(f[-1], p - 2, p)
    f = [(c * inv) % p for c in f]
    h = [0, 1]
    for _ in range(n // 2):
        h = _fp_powmod(h, p, f, p)
        diff = list(h)
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        if len(_fp_gcd(f, _fp_trim(diff), p)) != 1:
            return False
    return True


# ---------------------------------------------------------------------------


class FieldDescriptor:
    """Immutable description of GF(p**k) plus its arithmetic tables."""

    __slots__ = (
        "p", "k", "Q", "modulus", "generator_index", "_key", "_red_rows",
        "_exp", "_log", "_pp", "_pp_np", "_add_lut", "_mul_lut",
    )

    def __init__(self, p: int, k: int, cap: int, tables: bool):
        Q = p**k
        if Q > cap:
            raise CapExceeded(f"field size {p}**{k} = {Q} exceeds cap {cap}")
        self.p = p
        self.k = k
        self.Q = Q
        self._pp = tuple(p**i for i in range(k + 1))
        self._pp_np = np.array(self._pp[:k], dtype=np.int64)
        self.modulus = self._find_modulus()
        self._key = (p, k, self.modulus)
        self._red_rows = self._reduction_rows()
        self._exp = None
        self._log = None
        self._add_lut = None
        self._mul_lut = None
        self.generator_index = self._find_generator()
        if tables:
            self._build_tables()
        if Q <= _LUT_CAP:
            self._build_luts()

    # -- construction ------------------------------------------------------

    def _find_modulus(self) -> tuple[int, ...]:
        # minimal index encoding of the non-leading coefficient vector
        p, k = self.p, self.k
        for a in range(self.Q):
            coeffs = self._decode(a) + (1,)
            if _fp_is_irreducible(coeffs, p):
                return coeffs
        raise RuntimeError(f"no irreducible of degree {k} over GF({p})")  # unreachable

    def _reduction_rows(self) -> tuple[tuple[int, ...], ...]:
        # row d-k holds the coefficients of x**d mod modulus, d = k .. 2k-2
        p, k = self.p, self.k
        rows = []
        cur = [(-c) % p for c in self.modulus[:k]]
        for _ in range(k - 1):
            rows.append(tuple(cur))
            cur = [0] + cur[: k - 1] if k > 1 else [0]
            top = rows[-1][k - 1] if k > 1 else 0
            if k > 1 and top:
                base = rows[0]
                cur = [(cur[i] + top * base[i]) % p for i in range(k)]
            cur = cur[:k]
        return tuple(rows)

    def _find_generator(self) -> int:
        if self.Q == 2:
            return 1
        primes = nt.factorize(self.Q - 1).prime_divisors()
        cofactors = [(self.Q - 1) // r for r in primes]
        for idx in range(2, self.Q):
            if all(self._pow_poly(idx, c) != 1 for c in cofactors):
                return idx
        raise RuntimeError("no generator found")  # unreachable for a field

    def _build_tables(self) -> None:
        p, k, Q = self.p, self.k, self.Q
        Qm1 = Q - 1
        # multiplication-by-generator matrix: column j = coeffs of g * x**j
        g = self._decode(self.generator_index)
        M = np.zeros((k, k), dtype=np.int64)
        for j in range(k):
            col = _fp_mod(_fp_mul(g, [0] * j + [1], p), list(self.modulus), p)
            for i, c in enumerate(col):
                M[i, j] = c
        B = min(_TABLE_BLOCK, Qm1)
        block = np.zeros((B, k), dtype=np.int64)
        cur = np.zeros(k, dtype=np.int64)
        cur[0] = 1
        for i in range(B):
            block[i] = cur
            cur = (M @ cur) % p
        exp = np.empty(Qm1, dtype=np.int64)
        exp[:B] = block @ self._pp_np
        if Qm1 > B:
            MBt = np.eye(k, dtype=np.int64)
            base = M.copy()
            e = B
            while e:  # M**B mod p, then transposed
                if e & 1:
                    MBt = (MBt @ base) % p
                base = (base @ base) % p
                e >>= 1
            MBt = MBt.T
            pos = B
            while pos < Qm1:
                block = (block @ MBt) % p
                n = min(B, Qm1 - pos)
                exp[pos : pos + n] = block[:n] @ self._pp_np
                pos += n
        if exp[0] != 1 or np.unique(exp).size != Qm1:
            raise RuntimeError("exp table is not a bijection; generator is wrong")
        log = np.full(Q, -1, dtype=np.int64)
        log[exp] = np.arange(Qm1, dtype=np.int64)
        exp.flags.writeable = False
        log.flags.writeable = False
        self._exp = exp
        self._log = log

    def _build_luts(self) -> None:
        Q = self.Q
        self._add_lut = [[self._add_digits(a, b) for b in range(Q)] for a in range(Q)]
        if self._exp is not None:
            exp, log, Qm1 = self._exp, self._log, Q - 1
            self._mul_lut = [
                [0 if a == 0 or b == 0 else int(exp[(log[a] + log[b]) % Qm1]) for b in range(Q)]
                for a in range(Q)
            ]
        else:
            self._mul_lut = [[self._mul_poly(a, b) for b in range(Q)] for a in range(Q)]

    # -- index codec -------------------------------------------------------

    def _decode(self, idx: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.k):
            idx, c = divmod(idx, p)
            out.append(c)
        return tuple(out)

    def coeffs_of(self, idx: int) -> tuple[int, ...]:
        """Coefficient vector (constant first) of the element with this index."""
        if not 0 <= idx < self.Q:
            raise ValueError(f"index {idx} out of range for GF({self.Q})")
        return self._decode(idx)

    def index_of(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.k:
            raise ValueError("coefficient vector longer than the degree")
        p = self.p
        return sum((c % p) * self._pp[i] for i, c in enumerate(coeffs))

    # -- scalar ops in index space ------------------------------------------

    def _add_digits(self, a: int, b: int) -> int:
        p = self.p
        da, db = self._decode(a), self._decode(b)
        return self.index_of([(x + y) % p for x, y in zip(da, db)])

    def add_idx(self, a: int, b: int) -> int:
        if self._add_lut is not None:
            return self._add_lut[a][b]
        if self.p == 2:
            return a ^ b
        return self._add_digits(a, b)

    def neg_idx(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.index_of([(-c) % self.p for c in self._decode(a)])

    def sub_idx(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add_idx(a, self.neg_idx(b))

    def _mul_poly(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        da, db = self._decode(a), self._decode(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        out = prod[:k]
        for d in range(k, 2 * k - 1):
            c = prod[d]
            if c:
                row = self._red_rows[d - k]
                for i in range(k):
                    out[i] = (out[i] + c * row[i]) % p
        return self.index_of(out)

    def mul_idx(self, a: int, b: int) -> int:
        if self._mul_lut is not None:
            return self._mul_lut[a][b]
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return int(self._exp[(self._log[a] + self._log[b]) % (self.Q - 1)])
        return self._mul_poly(a, b)

    def _pow_poly(self, a: int, e: int) -> int:
        result = 1
        acc = a
        while e:
            if e & 1:
                result = self._mul_poly(result, acc) if self._mul_lut is None else self._mul_lut[result][acc]
            acc = self._mul_poly(acc, acc) if self._mul_lut is None else self._mul_lut[acc][acc]
            e >>= 1
        return result

    def pow_idx(self, a: int, e: int) -> int:
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise ZeroDivisionError("zero to a negative power")
        e %= self.Q - 1
        if self._exp is not None:
            return int(self._exp[(int(self._log[a]) * e) % (self.Q - 1)])
        return self._pow_poly(a, e)

    def inv_idx(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._exp is not None:
            return int(self._exp[(self.Q - 1 - int(self._log[a])) % (self.Q - 1)])
        return self._pow_poly(a, self.Q - 2)

    def log_idx(self, a: int) -> int:
        if a == 0:
            raise ValueError("discrete log of zero")
        if self._log is None:
            raise MissingLogTable(f"GF({self.Q}) was built without log tables")
        return int(self._log[a])

    def mult_order_idx(self, a: int) -> int:
        if a == 0:
            raise ValueError("multiplicative order of zero")
        Qm1 = self.Q - 1
        if self._log is not None:
            return Qm1 // math.gcd(int(self._log[a]), Qm1)
        e = Qm1
        for r, _ in nt.factorize(Qm1).factors:
            while e % r == 0 and self.pow_idx(a, e // r) == 1:
                e //= r
        return e

    # -- vector ops on numpy int64 index arrays ------------------------------

    def all_indices(self) -> np.ndarray:
        return np.arange(self.Q, dtype=np.int64)

    def digits_vec(self, v: np.ndarray) -> np.ndarray:
        return (v[..., None] // self._pp_np) % self.p

    def encode_vec(self, digits: np.ndarray) -> np.ndarray:
        return digits @ self._pp_np

    def add_vec(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return u ^ v
        return self.encode_vec((self.digits_vec(u) + self.digits_vec(v)) % self.p)

    def neg_vec(self, v: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return v
        return self.encode_vec((-self.digits_vec(v)) % self.p)

    def sub_vec(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return u ^ v
        return self.add_vec(u, self.neg_vec(v))

    def _require_tables(self) -> None:
        if self._exp is None:
            raise MissingLogTable(f"GF({self.Q}) was built without log tables")

    def log_vec(self, v: np.ndarray) -> np.ndarray:
        """Discrete logs; positions holding zero come back as -1."""
        self._require_tables()
        return self._log[v]

    def mul_vec(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        self._require_tables()
        u, v = np.broadcast_arrays(u, v)
        out = np.zeros(u.shape, dtype=np.int64)
        mask = (u != 0) & (v != 0)
        out[mask] = self._exp[(self._log[u[mask]] + self._log[v[mask]]) % (self.Q - 1)]
        return out

    def pow_vec(self, v: np.ndarray, e: int) -> np.ndarray:
        self._require_tables()
        mask = v != 0
        if e < 0 and not mask.all():
            raise ZeroDivisionError("zero to a negative power")
        zero_val = 1 if e == 0 else 0
        e %= self.Q - 1
        out = np.zeros(v.shape, dtype=np.int64)
        out[mask] = self._exp[(self._log[v[mask]] * e) % (self.Q - 1)]
        out[~mask] = zero_val
        return out

    def eval_poly_vec(self, coeff_indices: Sequence[int], points: np.ndarray) -> np.ndarray:
        """Horner evaluation of a polynomial (coefficient indices, constant
        first) at a vector of element indices."""
        if not coeff_indices:
            return np.zeros(points.shape, dtype=np.int64)
        acc = np.full(points.shape, coeff_indices[-1], dtype=np.int64)
        for c in reversed(coeff_indices[:-1]):
            acc = self.mul_vec(acc, points)
            if c:
                acc = self.add_vec(acc, np.array(c, dtype=np.int64))
        return acc

    # -- element handles -----------------------------------------------------

    @property
    def has_tables(self) -> bool:
        return self._exp is not None

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def generator(self) -> "FieldElement":
        return FieldElement(self, self.generator_index)

    def element(self, x: "int | FieldElement") -> "FieldElement":
        if isinstance(x, FieldElement):
            if x.field._key != self._key:
                raise ValueError("element belongs to a different field")
            return x
        if not 0 <= x < self.Q:
            raise ValueError(f"index {x} out of range for GF({self.Q})")
        return FieldElement(self, x)

    def from_coeffs(self, coeffs: Sequence[int]) -> "FieldElement":
        return FieldElement(self, self.index_of(coeffs))

    def elements(self) -> Iterator["FieldElement"]:
        for idx in range(self.Q):
            yield FieldElement(self, idx)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "modulus": list(self.modulus),
            "generator": self.generator_index,
        }

    def __repr__(self) -> str:
        return f"GF({self.p}**{self.k})"


class FieldElement:
    """An element of a FieldDescriptor, stored as its index."""

    __slots__ = ("field", "idx")

    def __init__(self, field: FieldDescriptor, idx: int):
        self.field = field
        self.idx = idx

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs_of(self.idx)

    def is_zero(self) -> bool:
        return self.idx == 0

    def _coerce(self, other) -> "FieldElement":
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine a field element with {type(other).__name__}")
        if other.field._key != self.field._key:
            raise ValueError("mixed-field operands")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, self.field.add_idx(self.idx, other.idx))

    def __sub__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, self.field.sub_idx(self.idx, other.idx))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_idx(self.idx))

    def __mul__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, self.field.mul_idx(self.idx, other.idx))

    def __truediv__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, self.field.mul_idx(self.idx, self.field.inv_idx(other.idx)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow_idx(self.idx, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv_idx(self.idx))

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field._key == other.field._key and self.idx == other.idx

    def __hash__(self):
        return hash((self.field._key, self.idx))

    def __bool__(self):
        return self.idx != 0

    def __repr__(self):
        return f"GF({self.field.Q})[{self.idx}]"


# ---------------------------------------------------------------------------
# construction cache and the cross-field maps


_FIELD_CACHE: dict = {}
_EMBED_CACHE: dict = {}
_CACHE_HOOKS: list = []


def register_cache_hook(fn) -> None:
    """Register a callable invoked by clear_field_cache (for dependent caches)."""
    _CACHE_HOOKS.append(fn)


def clear_field_cache() -> None:
    """Drop all cached descriptors, embeddings, and dependent caches."""
    _FIELD_CACHE.clear()
    _EMBED_CACHE.clear()
    for fn in _CACHE_HOOKS:
        fn()


def make_field(p: int, k: int, *, cap: int | None = None, tables: bool | None = None) -> FieldDescriptor:
    """Build (or fetch from cache) GF(p**k) with the deterministic modulus and
    generator. Raises CapExceeded when p**k exceeds the cap (default 2**22).

    tables=None builds exp/log tables whenever the field fits the cap;
    tables=False forces the polynomial-arithmetic fallback.
    """
    if cap is None:
        cap = DEFAULT_CAP
    if k < 1:
        raise ValueError(f"extension degree must be >= 1, got {k}")
    if not nt.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p**k > cap:
        raise CapExceeded(f"field size {p}**{k} exceeds cap {cap}")
    want_tables = tables if tables is not None else True
    key = (p, k, want_tables)
    got = _FIELD_CACHE.get(key)
    if got is None:
        got = FieldDescriptor(p, k, cap, want_tables)
        _FIELD_CACHE[key] = got
    return got


def field_from_json(desc: dict, *, cap: int | None = None) -> FieldDescriptor:
    """Rebuild a field from its serialized descriptor, refusing descriptor
    drift: the stored modulus and generator must match the deterministic
    construction."""
    fd = make_field(int(desc["p"]), int(desc["k"]), cap=cap)
    if list(fd.modulus) != list(desc["modulus"]) or fd.generator_index != int(desc["generator"]):
        raise ValueError("descriptor drift: stored field does not match deterministic construction")
    return fd


class _Embedding:
    """The canonical embedding GF(p**m) -> GF(p**k) (m | k) sending the
    subfield's generator-of-arithmetic x to the minimal-index root of the
    subfield modulus."""

    __slots__ = ("src", "target", "root_idx", "power_idx", "_image", "_preimage")

    def __init__(self, src: FieldDescriptor, target: FieldDescriptor):
        self.src = src
        self.target = target
        roots = _roots_of_subfield_modulus(src, target)
        if not roots:
            raise RuntimeError("subfield modulus has no root in the extension")
        self.root_idx = min(roots)
        powers = [1]
        for _ in range(src.k - 1):
            powers.append(target.mul_idx(powers[-1], self.root_idx))
        self.power_idx = tuple(powers)
        self._image = None
        self._preimage = None
        if src.Q <= _EAGER_EMBED_CAP:
            image = [self._map_idx(a) for a in range(src.Q)]
            self._image = tuple(image)
            self._preimage = {t: s for s, t in enumerate(image)}

    def _map_idx(self, a: int) -> int:
        out = 0
        for i, c in enumerate(self.src._decode(a)):
            if c:
                out = self.target.add_idx(out, self.target.mul_idx(c, self.power_idx[i]))
        return out

    def map_idx(self, a: int) -> int:
        if self._image is not None:
            return self._image[a]
        return self._map_idx(a)

    def preimage_idx(self, t: int) -> int:
        if self._preimage is None:
            raise CapExceeded("subfield too large for an eager preimage map")
        try:
            return self._preimage[t]
        except KeyError:
            raise ValueError("element is not in the embedded subfield") from None

    def image_indices(self) -> tuple[int, ...]:
        if self._image is None:
            raise CapExceeded("subfield too large for an eager image map")
        return self._image


def _roots_of_subfield_modulus(src: FieldDescriptor, target: FieldDescriptor) -> list[int]:
    # prime-field coefficients c are the constant elements with index c
    coeffs = [c % target.p for c in src.modulus]
    if target.has_tables:
        vals = target.eval_poly_vec(coeffs, target.all_indices())
        return [int(i) for i in np.nonzero(vals == 0)[0]]
    out = []
    for a in range(target.Q):
        acc = 0
        for c in reversed(coeffs):
            acc = target.add_idx(target.mul_idx(acc, a), c)
        if acc == 0:
            out.append(a)
    return out


def get_embedding(src: FieldDescriptor, target: FieldDescriptor) -> _Embedding:
    if src.p != target.p:
        raise ValueError("fields have different characteristic")
    if target.k % src.k != 0:
        raise ValueError(f"GF({src.Q}) does not embed in GF({target.Q}): {src.k} does not divide {target.k}")
    key = (id(src), id(target))
    got = _EMBED_CACHE.get(key)
    if got is None:
        got = _Embedding(src, target)
        _EMBED_CACHE[key] = got
    return got


# ---------------------------------------------------------------------------
# named operations on elements


def embed(a: FieldElement, target: FieldDescriptor) -> FieldElement:
    """Image of a under the canonical embedding of its field into target."""
    emb = get_embedding(a.field, target)
    return FieldElement(target, emb.map_idx(a.idx))


def mult_order(beta: FieldElement) -> int:
    """Multiplicative order of a nonzero element."""
    return beta.field.mult_order_idx(beta.idx)


def discrete_log(beta: FieldElement) -> int:
    """j with generator**j == beta. Needs log tables; rejects zero."""
    return beta.field.log_idx(beta.idx)


def is_dth_power(beta: FieldElement, d: int) -> bool:
    """Whether beta is a d-th power in the multiplicative group.

    beta = g**j is a d-th power iff gcd(d, Q-1) divides j, equivalently
    beta**((Q-1)/gcd(d, Q-1)) == 1. Rejects zero and d < 1.
    """
    if beta.idx == 0:
        raise ValueError("zero input: d-th power status is defined on the unit group")
    if d < 1:
        raise ValueError("d must be >= 1")
    fd = beta.field
    g = math.gcd(d, fd.Q - 1)
    if fd._log is not None:
        return fd.log_idx(beta.idx) % g == 0
    return fd.pow_idx(beta.idx, (fd.Q - 1) // g) == 1


def frobenius(beta: FieldElement, times: int = 1) -> FieldElement:
    """beta**(p**times), the power-of-Frobenius map."""
    if times < 0:
        raise ValueError("times must be >= 0")
    return beta ** pow(beta.field.p, times, beta.field.Q - 1) if beta.idx != 0 else beta.field.zero


def norm_to_subfield(beta: FieldElement, m: int) -> FieldElement:
    """Norm from GF(p**k) down to GF(p**m), m | k, re-expressed as an element
    of the standalone GF(p**m): beta**((p**k - 1)/(p**m - 1)) lands in the
    embedded subfield; return its preimage."""
    fd = beta.field
    if m < 1 or fd.k % m != 0:
        raise ValueError(f"{m} does not divide the extension degree {fd.k}")
    sub = make_field(fd.p, m, cap=max(DEFAULT_CAP, fd.p**m))
    if beta.idx == 0:
        return sub.zero
    n_exp = (fd.Q - 1) // (sub.Q - 1)
    gamma = fd.pow_idx(beta.idx, n_exp)
    emb = get_embedding(sub, fd)
    return FieldElement(sub, emb.preimage_idx(gamma))
