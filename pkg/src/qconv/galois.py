"""Exact arithmetic in small prime-power fields GF(p^m).

Elements are represented as integers in [0, p^m): the base-p digits of the
integer are the coefficients (low to high) of the residue polynomial modulo
a fixed monic irreducible of degree m.  A field object owns discrete
log/antilog tables, so multiplication and inversion are table lookups; all
element-wise operations accept plain ints or numpy arrays of codes.

The modulus for each (p, m) comes from a fixed table: the lexicographically
smallest monic irreducible of degree m over F_p for which x is a generator
of the multiplicative group.  Fixing the table keeps element labels stable
across runs, which the golden-file tests rely on.  Fields are capped at
2^16 elements.

Fields, elements, and extension pairs are immutable after construction and
safe to share across threads.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

SIZE_CAP = 1 << 16

_VERIFY_SEED = 20240611

# Smallest monic irreducible over F_p with x primitive, coefficients low to
# high.  Regenerated and cross-checked by tests/test_galois.py.
MODULUS_TABLE: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (2, 10): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (2, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 12): (1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1),
    (2, 13): (1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 14): (1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 15): (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 16): (1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 1, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 1, 0, 0, 0, 0, 1),
    (3, 7): (1, 2, 1, 0, 0, 0, 0, 1),
    (3, 8): (2, 0, 0, 1, 0, 0, 0, 0, 1),
    (3, 9): (1, 0, 1, 2, 0, 0, 0, 0, 0, 1),
    (3, 10): (2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (5, 1): (2, 1),
    (5, 2): (2, 1, 1),
    (5, 3): (2, 3, 0, 1),
    (5, 4): (2, 2, 1, 0, 1),
    (5, 5): (2, 4, 0, 0, 0, 1),
    (5, 6): (2, 1, 0, 0, 0, 0, 1),
    (7, 1): (2, 1),
    (7, 2): (3, 1, 1),
    (7, 3): (2, 3, 0, 1),
    (7, 4): (5, 3, 1, 0, 1),
    (7, 5): (4, 1, 0, 0, 0, 1),
    (11, 1): (3, 1),
    (11, 2): (7, 1, 1),
    (11, 3): (4, 1, 0, 1),
    (11, 4): (2, 1, 0, 0, 1),
    (13, 1): (2, 1),
    (13, 2): (2, 1, 1),
    (13, 3): (6, 1, 0, 1),
    (13, 4): (2, 1, 1, 0, 1),
}


class FieldError(ValueError):
    """Invalid field construction or element operation."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    a = list(a)
    b = _poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    r = a
    while len(_poly_trim(r)) - 1 >= db:
        r = _poly_trim(r)
        c = (r[-1] * inv_lead) % p
        sh = len(r) - 1 - db
        q[sh] = c
        for i, bc in enumerate(b):
            r[sh + i] = (r[sh + i] - c * bc) % p
    return _poly_trim(q), _poly_trim(r)


def _monic_polys(degree: int, p: int) -> Iterator[list[int]]:
    for code in range(p**degree):
        coeffs = []
        x = code
        for _ in range(degree):
            coeffs.append(x % p)
            x //= p
        yield coeffs + [1]


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= m/2."""
    m = len(modulus) - 1
    if m < 1 or modulus[-1] != 1:
        return False
    if m == 1:
        return True
    if modulus[0] == 0:
        return False
    for d in range(1, m // 2 + 1):
        for f in _monic_polys(d, p):
            if not _poly_divmod(modulus, f, p)[1]:
                return False
    return True


class Field:
    """The finite field GF(p^m) with a fixed modulus polynomial.

    Acts both as the serializable field descriptor (p, m, modulus) and as
    the arithmetic context: every operation takes and returns integer codes
    (or numpy arrays of codes).  Use :meth:`from_codes` / :class:`FieldElement`
    for the wrapped object layer.
    """

    def __init__(self, p: int, m: int, modulus: Sequence[int] | None = None):
        if not _is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if m < 1:
            raise FieldError("extension degree must be >= 1")
        q = p**m
        if q > SIZE_CAP:
            raise FieldError(f"field size {q} exceeds cap {SIZE_CAP}")
        if modulus is None:
            try:
                modulus = MODULUS_TABLE[(p, m)]
            except KeyError:
                modulus = tuple(_search_modulus(p, m))
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree m")
        if not is_irreducible(modulus, p):
            raise FieldError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.m = m
        self.q = q
        self.modulus = modulus
        self._build_tables()

    # -- construction -------------------------------------------------

    def _build_tables(self) -> None:
        p, m, q = self.p, self.m, self.q
        digits = np.zeros((q, m), dtype=np.int64)
        codes = np.arange(q)
        for i in range(m):
            digits[:, i] = codes % p
            codes = codes // p
        self._digits = digits
        self._pow_p = p ** np.arange(m, dtype=np.int64)

        cache = _cache_path(p, m, self.modulus)
        if cache is not None and os.path.exists(cache):
            data = np.load(cache)
            self._exp, self._log = data["exp"], data["log"]
            self.generator = int(self._exp[1]) if q > 2 else 1
            return

        gen = self._find_generator()
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        val = 1
        for i in range(q - 1):
            exp[i] = val
            val = self._mul_raw(val, gen)
        if val != 1:
            raise FieldError("generator order check failed")
        exp[q - 1 :] = exp[: q - 1]
        log = np.full(q, -1, dtype=np.int64)
        log[exp[: q - 1]] = np.arange(q - 1)
        if np.any(log[1:] < 0):
            raise FieldError("log table incomplete; generator not primitive")
        self._exp, self._log = exp, log
        self.generator = gen
        if cache is not None:
            try:
                np.savez(cache, exp=exp, log=log)
            except OSError:
                pass

    def _mul_raw(self, a: int, b: int) -> int:
        """Table-free product of two codes, used only while bootstrapping."""
        p, m = self.p, self.m
        da = self._int_digits(a)
        db = self._int_digits(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        _, rem = _poly_divmod(prod, self.modulus, p)
        return self._code_of(rem)

    def _int_digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def _code_of(self, coeffs: Sequence[int]) -> int:
        return int(sum(int(c) % self.p * self.p**i for i, c in enumerate(coeffs)))

    def _find_generator(self) -> int:
        if self.q == 2:
            return 1
        n = self.q - 1
        primes = list(factorize(n))
        for g in range(2, self.q):
            if self._raw_pow(g, n) != 1:
                continue
            if all(self._raw_pow(g, n // f) != 1 for f in primes):
                return g
        raise FieldError("no generator found")

    def _raw_pow(self, a: int, e: int) -> int:
        out = 1
        while e:
            if e & 1:
                out = self._mul_raw(out, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return out

    # -- element-wise arithmetic on codes ------------------------------

    def add(self, a, b):
        if self.p == 2:
            return a ^ b if np.isscalar(a) and np.isscalar(b) else np.bitwise_xor(a, b)
        s = (self._digits[a] + self._digits[b]) % self.p
        out = s @ self._pow_p
        return int(out) if np.isscalar(a) and np.isscalar(b) else out

    def neg(self, a):
        if self.p == 2:
            return a
        s = (-self._digits[a]) % self.p
        out = s @ self._pow_p
        return int(out) if np.isscalar(a) else out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if np.isscalar(a) and np.isscalar(b):
            if a == 0 or b == 0:
                return 0
            return int(self._exp[self._log[a] + self._log[b]])
        a = np.asarray(a)
        b = np.asarray(b)
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a):
        if np.isscalar(a):
            if a == 0:
                raise ZeroDivisionError("inversion of zero field element")
            return int(self._exp[self.q - 1 - self._log[a]])
        a = np.asarray(a)
        if np.any(a == 0):
            raise ZeroDivisionError("inversion of zero field element")
        return self._exp[self.q - 1 - self._log[a]]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if np.isscalar(a):
            if a == 0:
                if e == 0:
                    return 1
                if e < 0:
                    raise ZeroDivisionError("negative power of zero")
                return 0
            return int(self._exp[(self._log[a] * e) % (self.q - 1)])
        a = np.asarray(a)
        out = self._exp[(self._log[a] * e) % (self.q - 1)]
        if e == 0:
            return np.ones_like(a)
        zero_out = np.zeros_like(a) if e > 0 else None
        if zero_out is None and np.any(a == 0):
            raise ZeroDivisionError("negative power of zero")
        return np.where(a == 0, 0, out) if e > 0 else out

    def dot(self, u, v):
        """Inner product of two code vectors."""
        prods = self.mul(np.asarray(u), np.asarray(v))
        return self.sum(prods)

    def sum(self, arr, axis=None):
        arr = np.asarray(arr)
        if self.p == 2:
            return int(np.bitwise_xor.reduce(arr.ravel())) if axis is None else np.bitwise_xor.reduce(arr, axis=axis)
        if axis is None:
            d = self._digits[arr.ravel()].sum(axis=0) % self.p
            return int(d @ self._pow_p)
        d = self._digits[arr].sum(axis=axis) % self.p
        return d @ self._pow_p

    def frobenius(self, a, i: int = 1):
        """a^(p^i)."""
        return self.pow(a, self.p**i)

    def absolute_trace(self, a) -> int:
        """Trace to the prime field: a + a^p + ... + a^(p^(m-1)); returns a
        value in [0, p)."""
        acc = a
        x = a
        for _ in range(self.m - 1):
            x = self.pow(x, self.p)
            acc = self.add(acc, x)
        acc = int(acc)
        if acc >= self.p:
            raise FieldError("trace fell outside the prime field")
        return acc

    def order_of(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        n = self.q - 1
        lg = int(self._log[a])
        import math

        return n // math.gcd(n, lg)

    # -- element objects ----------------------------------------------

    def element(self, coeffs: Iterable[int] | int) -> "FieldElement":
        if isinstance(coeffs, (int, np.integer)):
            code = int(coeffs)
        else:
            coeffs = list(coeffs)
            if len(coeffs) > self.m:
                raise FieldError("too many coefficients")
            code = self._code_of(coeffs)
        if not 0 <= code < self.q:
            raise FieldError(f"code {code} out of range for GF({self.q})")
        return FieldElement(self, code)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def gen(self) -> "FieldElement":
        return FieldElement(self, self.generator)

    def elements(self) -> Iterator["FieldElement"]:
        return (FieldElement(self, c) for c in range(self.q))

    def coeffs_of(self, code: int) -> tuple[int, ...]:
        return tuple(int(d) for d in self._digits[code])

    # -- identity / serialization --------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @staticmethod
    def from_json(obj: dict) -> "Field":
        return field(int(obj["p"]), int(obj["m"]), tuple(obj["modulus"]))


def _search_modulus(p: int, m: int) -> list[int]:
    """Deterministic fallback for (p, m) pairs missing from the table."""
    for mod in _monic_polys(m, p):
        if is_irreducible(mod, p):
            return mod
    raise FieldError("no irreducible polynomial found")


def _cache_path(p: int, m: int, modulus: tuple[int, ...]) -> str | None:
    root = os.environ.get("QCONV_CACHE_DIR")
    if not root:
        return None
    os.makedirs(root, exist_ok=True)
    tag = "-".join(str(c) for c in modulus)
    return os.path.join(root, f"gf_{p}_{m}_{tag}.npz")


@lru_cache(maxsize=None)
def _field_cached(p: int, m: int, modulus: tuple[int, ...]) -> Field:
    return Field(p, m, modulus)


def field(p: int, m: int, modulus: Sequence[int] | None = None) -> Field:
    """Shared field instances, keyed by (p, m, modulus)."""
    if modulus is None:
        modulus = MODULUS_TABLE.get((p, m))
        if modulus is None:
            modulus = tuple(_search_modulus(p, m))
    return _field_cached(p, m, tuple(int(c) for c in modulus))


class FieldElement:
    """A single element of a :class:`Field`; immutable."""

    __slots__ = ("field", "code")

    def __init__(self, fld: Field, code: int):
        object.__setattr__(self, "field", fld)
        object.__setattr__(self, "code", int(code))

    def __setattr__(self, *a):
        raise AttributeError("FieldElement is immutable")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs_of(self.code)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("elements belong to different fields")
            return other.code
        if isinstance(other, (int, np.integer)) and 0 <= other < self.field.p:
            return int(other)
        raise FieldError(f"cannot coerce {other!r} into {self.field!r}")

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.code, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.code, self._coerce(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.code, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.code, self._coerce(other)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.code, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.code))

    def trace(self) -> int:
        return self.field.absolute_trace(self.code)

    def order(self) -> int:
        return self.field.order_of(self.code)

    def __bool__(self) -> bool:
        return self.code != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, (int, np.integer)) and 0 <= other < self.field.p:
            return self.code == int(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.code))

    def __repr__(self) -> str:
        return f"{self.field!r}:{self.code}"

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def absolute_trace(x: FieldElement) -> int:
    """Absolute trace of x down to the prime field, as an integer in [0, p)."""
    return x.trace()


def primitive_element(fld: Field) -> FieldElement:
    """Smallest element (in code order) of multiplicative order q - 1."""
    n = fld.q - 1
    for code in range(1, fld.q):
        if fld.order_of(code) == n:
            return FieldElement(fld, code)
    raise FieldError("no primitive element")  # unreachable in a field


def primitive_nth_root(fld: Field, n: int) -> FieldElement:
    """Deterministic primitive n-th root of unity.

    Requires n | q - 1.  The root is prim^((q-1)/n) for the smallest
    primitive element prim, so repeated runs agree element-for-element.
    """
    if n < 1:
        raise FieldError("n must be positive")
    if (fld.q - 1) % n != 0:
        raise FieldError(f"{n} does not divide field order minus one ({fld.q - 1})")
    root = primitive_element(fld) ** ((fld.q - 1) // n)
    if fld.order_of(root.code) != n:
        raise FieldError("root order check failed")
    return root


class ExtensionPair:
    """A base field F_q together with its quadratic extension F_{q^2}.

    Carries the embedding F_q -> F_{q^2} (the smallest root of the base
    modulus inside the extension) and the q-power Frobenius that fixes
    exactly the embedded copy.  Verified at construction: the embedding is
    a ring homomorphism (exhaustively for q <= 256, else on 1000 seeded
    random pairs) and Frobenius fixes its image.
    """

    def __init__(self, base: Field, ext: Field):
        if ext.p != base.p or ext.m != 2 * base.m:
            raise FieldError("extension must be the quadratic extension of base")
        self.base = base
        self.ext = ext
        self.q = base.q
        root = self._embedding_root()
        powers = np.zeros(base.m, dtype=np.int64)
        acc = 1
        for i in range(base.m):
            powers[i] = acc
            acc = ext.mul(acc, root)
        digits = base._digits  # (q, m) base-p digit rows
        embed = np.zeros(base.q, dtype=np.int64)
        for c in range(base.q):
            terms = [ext.mul(int(powers[i]), int(d)) for i, d in enumerate(digits[c])]
            v = 0
            for t in terms:
                v = ext.add(v, t)
            embed[c] = v
        self.embed_table = embed
        section = np.full(ext.q, -1, dtype=np.int64)
        section[embed] = np.arange(base.q)
        self.section_table = section
        self.frob_table = ext.pow(np.arange(ext.q), self.q)
        self._verify()

    def _embedding_root(self) -> int:
        ext, base = self.ext, self.base
        codes = np.arange(ext.q)
        acc = np.zeros(ext.q, dtype=np.int64)
        for c in reversed(base.modulus):  # Horner
            acc = ext.mul(acc, codes)
            acc = ext.add(acc, ext.mul(int(c) % ext.p, np.ones(ext.q, dtype=np.int64)))
        roots = np.flatnonzero(acc == 0)
        if roots.size == 0:
            raise FieldError("base modulus has no root in the extension")
        return int(roots[0])

    def _verify(self) -> None:
        base, ext = self.base, self.ext
        emb = self.embed_table
        if len(np.unique(emb)) != base.q:
            raise FieldError("embedding is not injective")
        if emb[0] != 0 or emb[1] != 1:
            raise FieldError("embedding must fix 0 and 1")
        if base.q <= 256:
            a = np.repeat(np.arange(base.q), base.q)
            b = np.tile(np.arange(base.q), base.q)
        else:
            rng = np.random.default_rng(_VERIFY_SEED)
            a = rng.integers(0, base.q, size=1000)
            b = rng.integers(0, base.q, size=1000)
        if np.any(emb[base.add(a, b)] != ext.add(emb[a], emb[b])):
            raise FieldError("embedding does not preserve addition")
        if np.any(emb[base.mul(a, b)] != ext.mul(emb[a], emb[b])):
            raise FieldError("embedding does not preserve multiplication")
        if np.any(self.frob_table[emb] != emb):
            raise FieldError("Frobenius does not fix the embedded base field")

    def embed(self, x: FieldElement) -> FieldElement:
        if x.field != self.base:
            raise FieldError("embed expects a base-field element")
        return FieldElement(self.ext, int(self.embed_table[x.code]))

    def in_base(self, code: int) -> bool:
        return self.section_table[code] >= 0

    def section(self, code: int) -> int:
        c = int(self.section_table[code])
        if c < 0:
            raise FieldError("element is not in the embedded base field")
        return c

    def frobenius_q(self, x):
        """x^q on extension elements (codes, arrays, or FieldElement)."""
        if isinstance(x, FieldElement):
            if x.field != self.ext:
                raise FieldError("frobenius_q expects an extension element")
            return FieldElement(self.ext, int(self.frob_table[x.code]))
        return self.frob_table[x]

    def conj_matrix(self, arr: np.ndarray) -> np.ndarray:
        """Entrywise q-power of a code matrix over the extension field."""
        return self.frob_table[arr]

    def __repr__(self) -> str:
        return f"ExtensionPair(GF({self.base.q}) < GF({self.ext.q}))"


@lru_cache(maxsize=None)
def extension_pair(p: int, m: int) -> ExtensionPair:
    """The pair GF(p^m) < GF(p^(2m)) with table moduli."""
    return ExtensionPair(field(p, m), field(p, 2 * m))


def pair_for_square(q2: int) -> ExtensionPair:
    """Extension pair whose top field has q2 elements (q2 a perfect square)."""
    fs = factorize(q2)
    if len(fs) != 1:
        raise FieldError(f"{q2} is not a prime power")
    (p, e), = fs.items()
    if e % 2:
        raise FieldError(f"{q2} is not the square of a prime power")
    return extension_pair(p, e // 2)


def normal_basis_pair(pair: ExtensionPair) -> tuple[FieldElement, FieldElement]:
    """Smallest normal basis (beta, beta^q) of F_{q^2} over F_q.

    Scans extension elements in code order for the first beta that is
    F_q-independent of beta^q and for which beta^(2q) - beta^2 (the
    denominator of the trace-alternating form) is invertible.
    """
    ext = pair.ext
    in_base = pair.section_table >= 0
    for code in range(1, ext.q):
        bq = int(pair.frob_table[code])
        if bq == code:
            continue
        # independence over F_q: beta^q / beta outside the embedded base
        ratio = ext.div(bq, code)
        if in_base[ratio]:
            continue
        denom = ext.sub(ext.pow(bq, 2), ext.pow(code, 2))
        if denom == 0:
            continue
        return FieldElement(ext, code), FieldElement(ext, bq)
    raise FieldError("no normal basis found")  # unreachable


def field_from_json(obj) -> Field:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return Field.from_json(obj)
