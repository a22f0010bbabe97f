"""Polynomials over a constructed field, plus the irreducibility machinery:
the distinct-degree test, the binomial criterion, composition with x**t,
value sets, squarefree degree, and root finding in extensions."""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from . import nt
from .field import CapExceeded, FieldDescriptor, FieldElement, embed, get_embedding, mult_order


class Polynomial:
    """Dense polynomial with coefficients in one field, constant term first.

    Coefficients are stored as element indices; the zero polynomial has an
    empty tuple and degree -1. Instances are immutable and hashable.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, fd: FieldDescriptor, coeffs: Iterable[int | FieldElement]):
        idxs = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field._key != fd._key:
                    raise ValueError("mixed-field coefficients")
                idxs.append(c.idx)
            else:
                if not 0 <= c < fd.Q:
                    raise ValueError(f"coefficient index {c} out of range for GF({fd.Q})")
                idxs.append(int(c))
        while idxs and idxs[-1] == 0:
            idxs.pop()
        self.field = fd
        self.coeffs = tuple(idxs)

    # -- constructors --------------------------------------------------------

    @classmethod
    def x(cls, fd: FieldDescriptor) -> "Polynomial":
        return cls(fd, (0, 1))

    @classmethod
    def constant(cls, fd: FieldDescriptor, c: int | FieldElement) -> "Polynomial":
        return cls(fd, (c,))

    @classmethod
    def binomial(cls, fd: FieldDescriptor, t: int, a: int | FieldElement) -> "Polynomial":
        """x**t - a."""
        if t < 1:
            raise ValueError("binomial degree must be >= 1")
        a_idx = a.idx if isinstance(a, FieldElement) else int(a)
        return cls(fd, [fd.neg_idx(a_idx)] + [0] * (t - 1) + [1])

    # -- basics ---------------------------------------------------------------

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def coefficients(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, c) for c in self.coeffs)

    def leading_idx(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> "Polynomial":
        if self.is_zero():
            raise ValueError("cannot normalize the zero polynomial")
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        inv = self.field.inv_idx(lead)
        return Polynomial(self.field, [self.field.mul_idx(c, inv) for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field._key == other.field._key and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field._key, self.coeffs))

    def __repr__(self):
        return f"Polynomial(GF({self.field.Q}), {list(self.coeffs)})"

    # -- ring operations -------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if not isinstance(other, Polynomial):
            raise TypeError("expected a Polynomial")
        if other.field._key != self.field._key:
            raise ValueError("mixed-field operands")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        fd = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = fd.add_idx(out[i], c)
        return Polynomial(fd, out)

    def __neg__(self) -> "Polynomial":
        fd = self.field
        return Polynomial(fd, [fd.neg_idx(c) for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        fd = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial(fd, ())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = fd.add_idx(out[i + j], fd.mul_idx(x, y))
        return Polynomial(fd, out)

    def scale(self, c: int | FieldElement) -> "Polynomial":
        fd = self.field
        c_idx = c.idx if isinstance(c, FieldElement) else int(c)
        return Polynomial(fd, [fd.mul_idx(x, c_idx) for x in self.coeffs])

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        fd = self.field
        rem = list(self.coeffs)
        db = other.degree()
        inv_lead = fd.inv_idx(other.coeffs[-1])
        quo = [0] * max(0, len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c:
                q = fd.mul_idx(c, inv_lead)
                quo[i - db] = q
                for j in range(db + 1):
                    rem[i - db + j] = fd.sub_idx(rem[i - db + j], fd.mul_idx(q, other.coeffs[j]))
        return Polynomial(fd, quo), Polynomial(fd, rem)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Monic greatest common divisor."""
        self._check(other)
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def derivative(self) -> "Polynomial":
        fd = self.field
        p = fd.p
        out = []
        for i in range(1, len(self.coeffs)):
            scalar = i % p
            out.append(fd.mul_idx(self.coeffs[i], scalar) if scalar else 0)
        return Polynomial(fd, out)

    def compose_power(self, t: int) -> "Polynomial":
        """f(x**t)."""
        if t < 1:
            raise ValueError("t must be >= 1")
        out = [0] * (self.degree() * t + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * t] = c
        return Polynomial(self.field, out)

    # -- evaluation -------------------------------------------------------------

    def eval_idx(self, a: int) -> int:
        fd = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = fd.add_idx(fd.mul_idx(acc, a), c)
        return acc

    def __call__(self, a: int | FieldElement) -> FieldElement:
        a_idx = a.idx if isinstance(a, FieldElement) else int(a)
        return FieldElement(self.field, self.eval_idx(a_idx))

    # -- serialization ------------------------------------------------------------

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "coeffs": list(self.coeffs)}


def poly_powmod(base: Polynomial, e: int, mod: Polynomial) -> Polynomial:
    """base**e mod mod, by binary powering."""
    if e < 0:
        raise ValueError("negative exponent")
    result = Polynomial(mod.field, (1,))
    acc = base % mod
    while e:
        if e & 1:
            result = (result * acc) % mod
        acc = (acc * acc) % mod
        e >>= 1
    return result


def is_irreducible(f: Polynomial) -> bool:
    """Distinct-degree irreducibility test.

    f of degree n is irreducible iff it shares no factor with x**(Q**i) - x
    for i = 1 .. n//2: any proper factorization contains an irreducible
    factor of degree at most n//2, and those are exactly the divisors of the
    x**(Q**i) - x chain. Requires degree >= 1.
    """
    n = f.degree()
    if n < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    if n == 1:
        return True
    fm = f.monic()
    fd = f.field
    x = Polynomial.x(fd)
    h = x
    for _ in range(n // 2):
        h = poly_powmod(h, fd.Q, fm)
        if fm.gcd(h - x).degree() > 0:
            return False
    return True


def binomial_irreducible_check(t: int, a: FieldElement) -> tuple[bool, tuple[bool, bool, bool]]:
    """Irreducibility of x**t - a over the field of a, decided arithmetically.

    With e the multiplicative order of a and Q the field cardinality, x**t - a
    is irreducible iff (1) gcd(t, (Q-1)/e) == 1, (2) every prime of t divides
    e, and (3) Q % 4 == 1 whenever 4 | t. Requires t >= 2 and a != 0.
    """
    if t < 2:
        raise ValueError("binomial criterion needs t >= 2")
    if a.idx == 0:
        raise ValueError("x**t is never irreducible for t >= 2; need a != 0")
    Q = a.field.Q
    e = mult_order(a)
    c1 = math.gcd(t, (Q - 1) // e) == 1
    c2 = all(e % r == 0 for r in nt.factorize(t).prime_divisors())
    c3 = (Q % 4 == 1) if t % 4 == 0 else True
    return c1 and c2 and c3, (c1, c2, c3)


def composed_irreducible_check(f: Polynomial, t: int) -> tuple[bool, tuple[bool, bool, bool]]:
    """Sufficient conditions for f(x**t) to stay irreducible, given f
    irreducible of degree n over GF(Q).

    With e the order of a root of f (computed as the order of x in
    GF(Q)[x]/(f), a field of cardinality Q**n), the conditions mirror the
    binomial criterion with Q**n in place of Q. t == 1 is allowed and the
    verdict is then vacuously true. Raises on a reducible f and on f with a
    zero constant term (the root 0 has no multiplicative order).
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if not is_irreducible(f):
        raise ValueError("f must be irreducible")
    if f.coeffs[0] == 0:
        # f is then a scalar multiple of x and its root 0 has no order
        raise ValueError("f must have a nonzero constant term")
    fd = f.field
    n = f.degree()
    Qn = fd.Q**n
    fm = f.monic()
    # order of x modulo f by exponent descent from Q**n - 1
    one = Polynomial(fd, (1,))
    e = Qn - 1
    for r, _ in nt.factorize(Qn - 1).factors:
        while e % r == 0 and poly_powmod(Polynomial.x(fd), e // r, fm) == one:
            e //= r
    c1 = math.gcd(t, (Qn - 1) // e) == 1
    c2 = all(e % r == 0 for r in nt.factorize(t).prime_divisors())
    c3 = (Qn % 4 == 1) if t % 4 == 0 else True
    return c1 and c2 and c3, (c1, c2, c3)


def value_set(f: Polynomial) -> set[FieldElement]:
    """The image {f(a) : a in the field}, by full enumeration."""
    fd = f.field
    if fd.has_tables:
        vals = fd.eval_poly_vec(f.coeffs, fd.all_indices())
        return {FieldElement(fd, int(v)) for v in np.unique(vals)}
    return {FieldElement(fd, f.eval_idx(a)) for a in range(fd.Q)}


def pth_root_poly(f: Polynomial) -> Polynomial:
    """For f with zero derivative, the g with g(x)**p == f(x).

    Such an f has nonzero coefficients only at exponents divisible by p, and
    the coefficient p-th root is c -> c**(Q/p)."""
    fd = f.field
    p = fd.p
    root_exp = fd.Q // p
    out = []
    for i, c in enumerate(f.coeffs):
        if i % p == 0:
            out.append(fd.pow_idx(c, root_exp) if c else 0)
        elif c != 0:
            raise ValueError("polynomial is not a p-th power")
    return Polynomial(fd, out)


def squarefree_part(f: Polynomial) -> Polynomial:
    """The monic product of the distinct irreducible factors of f."""
    if f.degree() < 0:
        raise ValueError("zero polynomial")
    if f.degree() == 0:
        return Polynomial(f.field, (1,))
    f = f.monic()
    d = f.derivative()
    if d.is_zero():
        return squarefree_part(pth_root_poly(f))
    g = f.gcd(d)
    w = f // g  # product of factors with multiplicity not divisible by p
    # factors of g that vanish in w have multiplicity divisible by p
    rest = g
    while True:
        c = rest.gcd(w)
        if c.degree() == 0:
            break
        rest = rest // c
    if rest.degree() == 0:
        return w
    return w * squarefree_part(pth_root_poly(rest))


def squarefree_part_degree(f: Polynomial) -> int:
    """Degree of the largest squarefree divisor of f."""
    return squarefree_part(f).degree()


def roots_in_extension(f: Polynomial, ext: FieldDescriptor) -> list[tuple[FieldElement, int]]:
    """Roots of f in the extension field with multiplicities, sorted by
    element index. The coefficient field must embed in ext."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    emb = get_embedding(f.field, ext)
    lifted = [emb.map_idx(c) for c in f.coeffs]
    if ext.has_tables:
        vals = ext.eval_poly_vec(lifted, ext.all_indices())
        root_idxs = [int(i) for i in np.nonzero(vals == 0)[0]]
    else:
        g = Polynomial(ext, lifted)
        root_idxs = [a for a in range(ext.Q) if g.eval_idx(a) == 0]
    g = Polynomial(ext, lifted)
    out = []
    for r in root_idxs:
        lin = Polynomial(ext, (ext.neg_idx(r), 1))
        mult = 0
        cur = g
        while True:
            quo, rem = divmod(cur, lin)
            if not rem.is_zero():
                break
            mult += 1
            cur = quo
        out.append((FieldElement(ext, r), mult))
    return out
