"""Exact arithmetic in GF(p^e).

Elements are encoded as integers in ``[0, q)``: the base-p digits of the
integer are the coefficients of the polynomial representative, constant term
first.  So ``0`` and ``1`` are the field's zero and one, the prime subfield is
``{0, ..., p-1}``, and the natural order on integers gives the element order
``0 < 1 < alpha_2 < ...`` used for lexicographic vector orderings.

The modulus of GF(p^e) is the lexicographically smallest monic irreducible
polynomial of degree e, comparing coefficient lists from the constant term
upward.  Fields are cached per ``(p, e)`` so repeated construction yields the
very same object.

All hot-path methods on :class:`Field` take and return plain integers;
:class:`FieldElement` wraps them for readable user code.
"""

from __future__ import annotations

import functools
import itertools
from collections.abc import Iterator, Sequence

from bsymbol import limits

Poly = tuple[int, ...]  # coefficients over GF(p), constant term first


class FieldMismatchError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split a prime power ``q = p**e`` into ``(p, e)``."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(d for d in itertools.count(2) if q % d == 0)
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, e


def _factor(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over GF(p) -------------------------------------------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``m`` over GF(p)."""
    a = _trim(list(a))
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1]
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial factorization: no monic divisor of degree ``1..deg/2``."""
    poly = _trim(list(poly))
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not poly_mod(poly, (*low, 1), p):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> Poly:
    # itertools.product walks the constant coefficient slowest, which is the
    # low-to-high lexicographic order on coefficient lists
    for low in itertools.product(range(p), repeat=e):
        cand = (*low, 1)
        if is_irreducible(cand, p):
            return cand
    raise AssertionError("an irreducible polynomial exists for every degree")


# -- fields -----------------------------------------------------------------


class Field:
    """GF(p^e) with integer-encoded elements. Construct through :func:`field_new`."""

    def __init__(self, p: int, e: int, modulus: Poly) -> None:
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = tuple(modulus)
        q = self.q
        self._pw = [p**i for i in range(e)]

        self.generator = self._find_generator()
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = exp[i + q - 1] = x
            log[x] = i
            x = self._slow_mul(x, self.generator)
        self._exp = exp
        self._log = log

        if p == 2:
            self._add_table = None
            self._neg_table = list(range(q))
        elif e == 1:
            self._add_table = None
            self._neg_table = [(-a) % p for a in range(q)]
        else:
            self._add_table = [self._digit_add(a, b) for a in range(q) for b in range(q)] if q <= 256 else None
            self._neg_table = [self.from_digits([(-d) % p for d in self.digits(a)]) for a in range(q)]

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"

    def __reduce__(self):
        return (field_new, (self.p, self.e))

    # -- encoding

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            a, d = divmod(a, self.p)
            out.append(d)
        return out

    def from_digits(self, ds: Sequence[int]) -> int:
        return sum(d * w for d, w in zip(ds, self._pw))

    def __call__(self, value: int) -> FieldElement:
        value = int(value)
        if not 0 <= value < self.q:
            raise ValueError(f"{value} is not an element repr of {self}")
        return FieldElement(self, value)

    def elements(self) -> Iterator[FieldElement]:
        return (FieldElement(self, a) for a in range(self.q))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    # -- integer-level arithmetic

    def _digit_add(self, a: int, b: int) -> int:
        return self.from_digits([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def _slow_mul(self, a: int, b: int) -> int:
        prod = poly_mul(self.digits(a), self.digits(b), self.p)
        return self.from_digits(poly_mod(prod, self.modulus, self.p))

    def _find_generator(self) -> int:
        if self.q == 2:
            return 1
        order = self.q - 1
        primes = _factor(order)

        def power(a: int, k: int) -> int:
            out = 1
            while k:
                if k & 1:
                    out = self._slow_mul(out, a)
                a = self._slow_mul(a, a)
                k >>= 1
            return out

        for g in range(2, self.q):
            if all(power(g, order // r) != 1 for r in primes):
                return g
        raise AssertionError("multiplicative group of a finite field is cyclic")

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % self.p
        if self._add_table is not None:
            return self._add_table[a * self.q + b]
        return self._digit_add(a, b)

    def neg(self, a: int) -> int:
        return self._neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg_table[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero inverse")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("zero inverse")
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    # -- subfields

    def is_subfield_degree(self, m: int) -> bool:
        return m >= 1 and self.e % m == 0

    def subfield(self, m: int) -> tuple[Field, tuple[int, ...]]:
        """The subfield GF(p^m) and its embedding into this field.

        The embedding sends the generator ``x`` of GF(p^m) to the smallest-repr
        root of its modulus inside this field; the returned tuple maps each
        subfield repr to its image repr.
        """
        return _embedding(self, m)


@functools.cache
def field_new(p: int, e: int = 1) -> Field:
    """The field GF(p^e) with its canonical modulus."""
    if not is_prime(p):
        raise ValueError(f"not prime: {p}")
    if e < 1:
        raise ValueError(f"bad exponent: {e}")
    limits.check(f"GF({p}^{e})", p**e, "field_order")
    return Field(p, e, smallest_irreducible(p, e))


def gf(q: int) -> Field:
    """Shorthand: the field of order ``q``."""
    return field_new(*prime_power(q))


@functools.cache
def _embedding(ext: Field, m: int) -> tuple[Field, tuple[int, ...]]:
    if not ext.is_subfield_degree(m):
        raise ValueError(f"not a subfield: GF({ext.p}^{m}) in {ext}")
    sub = field_new(ext.p, m)
    if m == ext.e:
        return sub, tuple(range(ext.q))

    def evaluate(poly: Sequence[int], x: int) -> int:
        acc = 0
        for c in reversed(poly):
            acc = ext.add(ext.mul(acc, x), c)
        return acc

    root = next(x for x in range(ext.q) if evaluate(sub.modulus, x) == 0)
    image = tuple(evaluate(sub.digits(a), root) for a in range(sub.q))
    return sub, image


def trace(ext: Field, base: Field, x: int | FieldElement) -> FieldElement:
    """Trace of ``x`` from ``ext`` down to the subfield ``base``.

    Computes ``sum(x ** (|base| ** i) for i < [ext : base])`` in ``ext`` and
    re-expresses the result as an element of ``base``.
    """
    if isinstance(x, FieldElement):
        if x.field is not ext:
            raise FieldMismatchError("field mismatch")
        x = x.value
    if base.p != ext.p or not ext.is_subfield_degree(base.e):
        raise ValueError(f"not a subfield: {base} in {ext}")
    return FieldElement(base, trace_repr(ext, base.e, x))


def trace_repr(ext: Field, m: int, x: int) -> int:
    """Integer-level trace from ``ext`` to its degree-``m`` subfield."""
    sub, image = ext.subfield(m)
    degree = ext.e // m
    acc, y = 0, x
    for _ in range(degree):
        acc = ext.add(acc, y)
        y = ext.pow(y, sub.q)
    return _preimage(ext, m)[acc]


@functools.cache
def _preimage(ext: Field, m: int) -> dict[int, int]:
    _, image = ext.subfield(m)
    return {v: a for a, v in enumerate(image)}


class FieldElement:
    """An element of a :class:`Field`; supports ``+ - * / **`` and ``~`` for inverse."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int) -> None:
        self.field = field
        self.value = value

    def _other(self, other: FieldElement | int) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise FieldMismatchError("field mismatch")
            return other.value
        if isinstance(other, int):
            return self.field(other).value
        return NotImplemented

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __invert__(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def inverse(self) -> FieldElement:
        return ~self

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.value, k))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field is other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.e, self.value))

    def __int__(self) -> int:
        return self.value

    __index__ = __int__

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.field!r}({self.value})"


_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
    "inv": lambda a, b: ~a,
    "neg": lambda a, b: -a,
}


def arith(a: FieldElement, b: FieldElement | None, op: str) -> FieldElement:
    """Dispatch one of ``add sub mul div inv neg``; unary ops ignore ``b``."""
    if op not in _OPS:
        raise ValueError(f"unknown op {op!r}")
    if b is not None and b.field is not a.field:
        raise FieldMismatchError("field mismatch")
    return _OPS[op](a, b)
