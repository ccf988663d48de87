"""Exact arithmetic in the finite field GF(p^e).

Elements are coefficient vectors (c_0, ..., c_{e-1}) over Z_p in the
polynomial basis 1, b, b^2, ... where b is a root of the defining modulus.
The integer encoding enc(a) = sum c_i * p^i is a bijection onto [0, p^e);
every canonical choice made here (defining modulus, primitive element,
element ordering) minimizes this encoding, so all downstream constructions
are bit-reproducible.

Size bounds: p < 2^31 and e <= 16.  Coefficient arithmetic is done with
Python integers, so q = p^e itself may exceed machine word size.
"""
from __future__ import annotations

import functools
from typing import Iterable, Sequence

from . import errors

MAX_PRIME = 2**31
MAX_DEGREE = 16

# Fields with q below this bound get log/exp tables for multiplication.
_LOG_TABLE_MAX = 4096
# Fields with q below this bound additionally get dense numpy operation
# tables (used by the batched linear algebra in fmatrix/lincode).
_NP_TABLE_MAX = 1024

# Deterministic Miller-Rabin witnesses, valid for all n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for b in _MR_BASES:
        if n == b:
            return True
        if n % b == 0:
            return False
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Dense polynomial helpers over Z_p.  Coefficients are plain lists, lowest
# degree first, with trailing zeros trimmed ([] is the zero polynomial).
# ---------------------------------------------------------------------------

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    """a mod f, where f is monic."""
    a = list(a)
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(df):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return _ptrim(a)


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        # reduce a mod b after making b monic
        lead_inv = pow(b[-1], p - 2, p)
        bm = [(c * lead_inv) % p for c in b]
        a, b = b, _pmod(a, bm, p)
    return a


def _ppowmod(a: Sequence[int], n: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, f, p)
    while n:
        if n & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        n >>= 1
    return result


def _is_irreducible(tail: Sequence[int], p: int, e: int) -> bool:
    """Rabin test for the monic polynomial x^e + tail (tail = c_0..c_{e-1})."""
    f = list(tail) + [1]
    if e == 1:
        return True
    x = [0, 1]
    # x^(p^e) must equal x mod f
    if _ppowmod(x, p**e, f, p) != x:
        return False
    for r in _prime_factors(e):
        h = _ppowmod(x, p ** (e // r), f, p)
        # gcd(x^(p^(e/r)) - x, f) must be trivial
        width = max(len(h), 2)
        diff = _ptrim([((h[i] if i < len(h) else 0)
                        - (x[i] if i < 2 else 0)) % p for i in range(width)])
        if len(_pgcd(f, diff, p)) != 1:
            return False
    return True


def _min_irreducible_tail(p: int, e: int) -> tuple[int, ...]:
    """Non-leading coefficients of the enc-minimal monic irreducible of degree e."""
    if e == 1:
        return (0,)  # the polynomial x
    for enc in range(p**e):
        tail, v = [], enc
        for _ in range(e):
            tail.append(v % p)
            v //= p
        if _is_irreducible(tail, p, e):
            return tuple(tail)
    raise errors.UnsupportedSize(f"no irreducible polynomial found for p={p}, e={e}")


# ---------------------------------------------------------------------------
# FieldSpec / Element
# ---------------------------------------------------------------------------

class FieldSpec:
    """The finite field GF(p^e) with a fixed defining modulus.

    Immutable after construction; all arithmetic helpers are pure.  Prefer
    :func:`field_new`, which caches instances and always selects the
    canonical (enc-minimal) modulus.
    """

    __slots__ = ("p", "e", "q", "modulus", "_xpow", "_log", "_exp",
                 "_cache", "_primitive", "_vec")

    def __init__(self, p: int, e: int, modulus: Sequence[int] | None = None):
        if not isinstance(p, int) or not is_prime(p):
            raise errors.NonPrime(f"p={p} is not prime")
        if not isinstance(e, int) or e < 1:
            raise errors.UnsupportedSize(f"e={e} must be a positive integer")
        if p >= MAX_PRIME or e > MAX_DEGREE:
            raise errors.UnsupportedSize(
                f"GF({p}^{e}) exceeds supported bounds (p < 2^31, e <= 16)")
        self.p = p
        self.e = e
        self.q = p**e
        if modulus is None:
            modulus = _min_irreducible_tail(p, e)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != e:
                raise errors.UnsupportedSize(
                    f"modulus must list the {e} non-leading coefficients")
            if not _is_irreducible(modulus, p, e):
                raise errors.UnsupportedSize(
                    f"x^{e} + {list(modulus)} is not irreducible over GF({p})")
        self.modulus = tuple(modulus)
        # reduction table: _xpow[i] = coefficients of x^(e+i) mod modulus
        xpow = []
        if e > 1:
            cur = tuple((-c) % p for c in self.modulus)  # x^e
            xpow.append(cur)
            for _ in range(e - 2):
                shifted = (0,) + cur[:-1]
                top = cur[-1]
                cur = tuple((s + top * r) % p
                            for s, r in zip(shifted, xpow[0]))
                xpow.append(cur)
        self._xpow = tuple(xpow)
        self._cache: dict[int, "Element"] = {}
        self._primitive: Element | None = None
        self._vec = None
        self._log = self._exp = None
        if 2 < self.q <= _LOG_TABLE_MAX:
            self._build_log_tables()

    # -- identity / ordering ------------------------------------------------

    def __eq__(self, other):
        return (self is other or
                (isinstance(other, FieldSpec) and self.p == other.p
                 and self.e == other.e and self.modulus == other.modulus))

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        return f"FieldSpec({self.text!r})"

    @property
    def label(self) -> str:
        """Short name of the field, e.g. '13' or '3^3'."""
        return str(self.p) if self.e == 1 else f"{self.p}^{self.e}"

    @property
    def text(self) -> str:
        """Canonical text form, e.g. '3^3;mod=1,2,0'."""
        return f"{self.label};mod={','.join(map(str, self.modulus))}"

    @classmethod
    def from_text(cls, text: str) -> "FieldSpec":
        head, _, mod = text.partition(";mod=")
        p, _, e = head.partition("^")
        spec = cls(int(p), int(e) if e else 1,
                   tuple(int(c) for c in mod.split(",")) if mod else None)
        return spec

    # -- element construction ----------------------------------------------

    def element(self, value) -> "Element":
        """Element from an enc integer, a coefficient sequence, or an Element."""
        if isinstance(value, Element):
            if value.field != self:
                raise errors.FieldMismatch(f"{value!r} is not in {self!r}")
            return value
        if isinstance(value, int):
            enc = value % self.q
            cached = self._cache.get(enc)
            if cached is not None:
                return cached
            coeffs, v = [], enc
            for _ in range(self.e):
                coeffs.append(v % self.p)
                v //= self.p
            el = Element(self, tuple(coeffs))
            if self.q <= _LOG_TABLE_MAX:
                self._cache[enc] = el
            return el
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) != self.e:
            raise errors.LengthMismatch(
                f"expected {self.e} coefficients, got {len(coeffs)}")
        return self.element(sum(c * self.p**i for i, c in enumerate(coeffs)))

    @property
    def zero(self) -> "Element":
        return self.element(0)

    @property
    def one(self) -> "Element":
        return self.element(1)

    def elements(self):
        """All q elements in increasing enc order."""
        return [self.element(i) for i in range(self.q)]

    # -- coefficient-level arithmetic ----------------------------------------

    def _add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def _mul(self, a, b):
        p, e = self.p, self.e
        if e == 1:
            return ((a[0] * b[0]) % p,)
        t = [0] * (2 * e - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    t[i + j] = (t[i + j] + ai * bj) % p
        for i in range(2 * e - 2, e - 1, -1):
            c = t[i]
            if c:
                red = self._xpow[i - e]
                for j in range(e):
                    t[j] = (t[j] + c * red[j]) % p
        return tuple(t[:e])

    def _pow(self, a, n: int):
        if not any(a):
            if n == 0:
                return self.one.coeffs  # 0^0 = 1 convention
            if n < 0:
                raise errors.DivisionByZero("0 has no inverse")
            return a
        n %= self.q - 1 if self.q > 1 else 1
        result = self.one.coeffs
        base = a
        while n:
            if n & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            n >>= 1
        return result

    def _inv(self, a):
        if not any(a):
            raise errors.DivisionByZero("0 has no inverse")
        return self._pow(a, self.q - 2)

    # -- acceleration tables --------------------------------------------------

    def _build_log_tables(self):
        g = self.primitive_element()
        q = self.q
        exp = [0] * (q - 1)
        log = [0] * q
        cur = self.one.coeffs
        gco = g.coeffs
        for i in range(q - 1):
            enc = self._enc(cur)
            exp[i] = enc
            log[enc] = i
            cur = self._mul(cur, gco)
        self._exp, self._log = exp, log

    def _enc(self, coeffs) -> int:
        enc, m = 0, 1
        for c in coeffs:
            enc += c * m
            m *= self.p
        return enc

    def primitive_element(self) -> "Element":
        """The enc-minimal generator of the multiplicative group."""
        if self._primitive is not None:
            return self._primitive
        if self.q == 2:
            self._primitive = self.one
            return self._primitive
        order_factors = _prime_factors(self.q - 1)
        for enc in range(1, self.q):
            a = self.element(enc)
            if all((a ** ((self.q - 1) // r)).enc != 1 for r in order_factors):
                self._primitive = a
                return a
        raise errors.UnsupportedSize("no primitive element found")  # unreachable

    def vec_ops(self):
        """Numpy-vectorized enc arithmetic, or None for fields too large.

        Returned object has add/sub/mul/inv callables operating on integer
        numpy arrays of enc values.  Built once, cached; results never depend
        on whether this accelerator is used.
        """
        if self.q > _NP_TABLE_MAX:
            return None
        if self._vec is None:
            self._vec = _VecOps(self)
        return self._vec


class _VecOps:
    """Dense numpy operation tables for one small field."""

    __slots__ = ("prime", "p", "add_t", "neg_t", "mul_t", "inv_t")

    def __init__(self, field: FieldSpec):
        import numpy as np
        q, p = field.q, field.p
        self.prime = field.e == 1
        self.p = p
        if self.prime:
            self.add_t = self.neg_t = self.mul_t = None
            self.inv_t = np.array([0] + [pow(i, p - 2, p) for i in range(1, p)],
                                  dtype=np.int64)
        else:
            idx = np.arange(q, dtype=np.int64)
            digits = []
            v = idx.copy()
            for _ in range(field.e):
                digits.append(v % p)
                v //= p
            # enc-level addition is digitwise addition mod p
            add = np.zeros((q, q), dtype=np.int64)
            m = 1
            for d in digits:
                add += ((d[:, None] + d[None, :]) % p) * m
                m *= p
            self.add_t = add
            neg = np.zeros(q, dtype=np.int64)
            m = 1
            for d in digits:
                neg += ((-d) % p) * m
                m *= p
            self.neg_t = neg
            log = np.array(field._log, dtype=np.int64)
            exp = np.array(field._exp, dtype=np.int64)
            mul = exp[(log[:, None] + log[None, :]) % (q - 1)]
            mul[0, :] = 0
            mul[:, 0] = 0
            self.mul_t = mul
            inv = exp[(-log) % (q - 1)]
            inv[0] = 0
            self.inv_t = inv

    def add(self, a, b):
        if self.prime:
            return (a + b) % self.p
        import numpy as np
        a, b = np.broadcast_arrays(a, b)
        return self.add_t[a, b]

    def sub(self, a, b):
        if self.prime:
            return (a - b) % self.p
        return self.add(a, self.neg_t[b])

    def mul(self, a, b):
        if self.prime:
            return (a * b) % self.p
        import numpy as np
        a, b = np.broadcast_arrays(a, b)
        return self.mul_t[a, b]

    def inv(self, a):
        return self.inv_t[a]


class Element:
    """An element of a :class:`FieldSpec`, immutable and hashable."""

    __slots__ = ("field", "coeffs", "enc")

    def __init__(self, field: FieldSpec, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs
        self.enc = field._enc(coeffs)

    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            if other.field != self.field:
                raise errors.FieldMismatch(
                    f"elements of {self.field.label} and {other.field.label}")
            return other
        if isinstance(other, int):
            return self.field.element(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.field.element(self.field._enc(self.field._add(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.field.element(self.field._enc(self.field._sub(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return self.field.element(self.field._enc(self.field._neg(self.coeffs)))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        f = self.field
        if f._log is not None:
            if self.enc == 0 or o.enc == 0:
                return f.element(0)
            return f.element(f._exp[(f._log[self.enc] + f._log[o.enc]) % (f.q - 1)])
        return f.element(f._enc(f._mul(self.coeffs, o.coeffs)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def inverse(self) -> "Element":
        f = self.field
        if self.enc == 0:
            raise errors.DivisionByZero("0 has no inverse")
        if f._log is not None:
            return f.element(f._exp[(-f._log[self.enc]) % (f.q - 1)])
        return f.element(f._enc(f._inv(self.coeffs)))

    def __pow__(self, n: int):
        f = self.field
        if self.enc == 0:
            if n == 0:
                return f.one  # 0^0 = 1 convention (constant row of evaluation maps)
            if n < 0:
                raise errors.DivisionByZero("0 has no inverse")
            return self
        if f._log is not None:
            return f.element(f._exp[(f._log[self.enc] * n) % (f.q - 1)])
        return f.element(f._enc(f._pow(self.coeffs, n)))

    def __bool__(self):
        return self.enc != 0

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.field == other.field and self.enc == other.enc
        if isinstance(other, int):
            return self.enc == other % self.field.q
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.enc))

    def __int__(self):
        return self.enc

    def __repr__(self):
        return f"<{self.enc} in GF({self.field.label})>"

    def __str__(self):
        return str(self.enc)


# ---------------------------------------------------------------------------
# Module-level operations
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def field_new(p: int, e: int) -> FieldSpec:
    """GF(p^e) with the canonical enc-minimal defining modulus."""
    return FieldSpec(p, e)


def frobenius(a: Element, s: int) -> Element:
    """a^(p^s).  s is reduced mod e, so s = e acts as the identity."""
    f = a.field
    s %= f.e
    if s == 0:
        return a
    return a ** (f.p**s)


def galois_form(x: Sequence[Element], y: Sequence[Element], s: int) -> Element:
    """The twisted bilinear form sum_i x_i * y_i^(p^s).

    s = 0 is the Euclidean inner product; s = e/2 (e even) the Hermitian one.
    """
    if len(x) != len(y):
        raise errors.LengthMismatch(f"lengths {len(x)} and {len(y)} differ")
    if not x:
        raise errors.LengthMismatch("empty vectors")
    f = x[0].field
    acc = f.zero
    for xi, yi in zip(x, y):
        if xi.field != f or yi.field != f:
            raise errors.FieldMismatch("mixed fields in form arguments")
        acc = acc + xi * frobenius(yi, s)
    return acc


def primitive_element(field: FieldSpec) -> Element:
    return field.primitive_element()


def enumerate_elements(field: FieldSpec) -> list[Element]:
    return field.elements()
