"""Exact arithmetic in finite coefficient rings: F_p, F_{p^f}, and Z/p^n.

Elements are plain Python values: ints in [0, p^n) for prime fields and
Z/p^n, coefficient tuples of length f for extension fields.  All arithmetic
is exact; nothing here ever touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence


class RingError(Exception):
    """Base class for ring construction/usage errors."""


class CompositeModulus(RingError):
    """Raised when the requested characteristic is not prime."""


class ReducibleModulus(RingError):
    """Raised when a supplied extension-field modulus factors over F_p."""


class NotAField(RingError):
    """Raised when a field-only operation is applied to Z/p^n with n > 1."""


def is_prime(p: int) -> bool:
    """Trial-division primality test (desk scale, p < 2^20)."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# Polynomial helpers over F_p (dense lists, low degree first).
# ---------------------------------------------------------------------------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m, over F_p."""
    a = [c % p for c in a]
    _poly_trim(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1]
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _poly_trim(a)
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        inv = pow(b[-1], -1, p)
        monic = [(c * inv) % p for c in b]
        a, b = b, _poly_mod(a, monic, p)
    return a


def _poly_powmod_x(exp: int, m: list[int], p: int) -> list[int]:
    """X^exp modulo the monic polynomial m, by square and multiply."""
    result = [1]
    base = _poly_mod([0, 1], m, p)
    while exp:
        if exp & 1:
            result = _poly_mod(_poly_mul(result, base, p), m, p)
        base = _poly_mod(_poly_mul(base, base, p), m, p)
        exp >>= 1
    return result


def _is_irreducible(m: list[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over F_p.

    Degree <= 3: no roots suffices.  Degree >= 4: additionally require
    gcd(X^{p^k} - X, m) = 1 for all k <= deg/2 (no low-degree factors).
    """
    deg = len(m) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for a in range(p):
        acc = 0
        for c in reversed(m):
            acc = (acc * a + c) % p
        if acc == 0:
            return False
    if deg <= 3:
        return True
    for k in range(1, deg // 2 + 1):
        xq = _poly_powmod_x(p**k, m, p)
        diff = list(xq)
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(list(m), _poly_trim(diff), p)
        if len(g) - 1 >= 1:
            return False
    return True


def smallest_irreducible(p: int, f: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree f over F_p.

    Candidates are ordered by their coefficient counter
    c_0 + c_1 p + ... + c_{f-1} p^{f-1}.  Returns the full coefficient
    tuple (c_0, ..., c_{f-1}, 1), low degree first.
    """
    for counter in range(p**f):
        coeffs = []
        k = counter
        for _ in range(f):
            coeffs.append(k % p)
            k //= p
        m = coeffs + [1]
        if _is_irreducible(m, p):
            return tuple(m)
    raise RingError(f"no irreducible of degree {f} over F_{p}")  # unreachable


# ---------------------------------------------------------------------------
# Ring classes.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Ring:
    """Common interface; see subclasses for element representations."""

    p: int

    @property
    def kind(self) -> str:
        raise NotImplementedError

    # cap = largest observable valuation (1 for fields, n for Z/p^n)
    @property
    def cap(self) -> int:
        return 1

    @property
    def residue_log(self) -> int:
        """log_p of the residue-field cardinality (f for F_{p^f})."""
        return 1

    def cardinality(self) -> int:
        raise NotImplementedError

    def residue_cardinality(self) -> int:
        return self.p**self.residue_log


@dataclass(frozen=True)
class PrimeField(Ring):
    """F_p; elements are ints in [0, p)."""

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise CompositeModulus(f"{self.p} is not prime")

    @property
    def kind(self) -> str:
        return "PrimeField"

    def cardinality(self) -> int:
        return self.p

    zero = 0
    one = 1

    def from_int(self, k: int) -> int:
        return k % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def is_zero(self, a: int) -> bool:
        return a == 0

    def is_unit(self, a: int) -> bool:
        return a % self.p != 0

    def inv(self, a: int) -> int:
        return pow(a, -1, self.p)

    def valuation(self, a: int) -> int:
        return 0 if a % self.p else 1

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def units(self) -> Iterator[int]:
        return iter(range(1, self.p))


@dataclass(frozen=True)
class PadicQuotient(Ring):
    """Z/p^n; elements are ints in [0, p^n)."""

    n: int = 1

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise CompositeModulus(f"{self.p} is not prime")
        if self.n < 1:
            raise RingError("exponent must be >= 1")
        object.__setattr__(self, "_m", self.p**self.n)

    @property
    def kind(self) -> str:
        return "PadicQuotient"

    @property
    def cap(self) -> int:
        return self.n

    def cardinality(self) -> int:
        return self._m

    zero = 0
    one = 1

    def from_int(self, k: int) -> int:
        return k % self._m

    def add(self, a: int, b: int) -> int:
        return (a + b) % self._m

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self._m

    def neg(self, a: int) -> int:
        return (-a) % self._m

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self._m

    def is_zero(self, a: int) -> bool:
        return a % self._m == 0

    def is_unit(self, a: int) -> bool:
        return a % self.p != 0

    def inv(self, a: int) -> int:
        if not self.is_unit(a):
            raise RingError(f"{a} is not a unit in Z/{self._m}")
        return pow(a, -1, self._m)

    def valuation(self, a: int) -> int:
        a %= self._m
        if a == 0:
            return self.n
        v = 0
        while a % self.p == 0:
            a //= self.p
            v += 1
        return v

    def elements(self) -> Iterator[int]:
        return iter(range(self._m))

    def units(self) -> Iterator[int]:
        return (a for a in range(self._m) if a % self.p)


@dataclass(frozen=True)
class ExtField(Ring):
    """F_{p^f}; elements are coefficient tuples of length f (low degree first)."""

    f: int = 1
    modulus: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise CompositeModulus(f"{self.p} is not prime")
        if self.f < 1:
            raise RingError("extension degree must be >= 1")
        mod = self.modulus
        if not mod:
            mod = smallest_irreducible(self.p, self.f)
            object.__setattr__(self, "modulus", mod)
        mod_list = [c % self.p for c in mod]
        if len(mod_list) != self.f + 1 or mod_list[-1] != 1:
            raise ReducibleModulus("modulus must be monic of the stated degree")
        if not _is_irreducible(mod_list, self.p):
            raise ReducibleModulus(f"{mod} is reducible over F_{self.p}")

    @property
    def kind(self) -> str:
        return "ExtField"

    @property
    def residue_log(self) -> int:
        return self.f

    def cardinality(self) -> int:
        return self.p**self.f

    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * self.f

    @property
    def one(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.f - 1)

    def from_int(self, k: int) -> tuple[int, ...]:
        return (k % self.p,) + (0,) * (self.f - 1)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        prod = _poly_mul(a, b, self.p)
        red = _poly_mod(prod, list(self.modulus), self.p)
        red += [0] * (self.f - len(red))
        return tuple(red)

    def is_zero(self, a) -> bool:
        return all(c % self.p == 0 for c in a)

    def is_unit(self, a) -> bool:
        return not self.is_zero(a)

    def inv(self, a):
        if self.is_zero(a):
            raise RingError("zero is not invertible")
        # a^(q-2) = a^{-1} in F_q
        result = self.one
        base = a
        exp = self.cardinality() - 2
        while exp:
            if exp & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            exp >>= 1
        return result

    def valuation(self, a) -> int:
        return 0 if not self.is_zero(a) else 1

    def elements(self) -> Iterator[tuple[int, ...]]:
        def gen():
            for counter in range(self.p**self.f):
                k = counter
                coeffs = []
                for _ in range(self.f):
                    coeffs.append(k % self.p)
                    k //= self.p
                yield tuple(coeffs)

        return gen()

    def units(self) -> Iterator[tuple[int, ...]]:
        return (a for a in self.elements() if not self.is_zero(a))


def make_ring(kind: str, p: int, f_or_n: int = 1,
              modulus: Sequence[int] | None = None) -> Ring:
    """Construct a validated coefficient ring.

    kind is one of "PrimeField", "ExtField", "PadicQuotient".  For
    extension fields, a missing modulus defaults to the lexicographically
    smallest monic irreducible of the requested degree.
    """
    if kind in ("PrimeField", "field"):
        return PrimeField(p)
    if kind in ("PadicQuotient", "padic"):
        return PadicQuotient(p, f_or_n)
    if kind in ("ExtField", "ext"):
        return ExtField(p, f_or_n, tuple(modulus) if modulus else ())
    raise RingError(f"unknown ring kind {kind!r}")


def count_roots(coeffs: Sequence[int], ring: Ring) -> int:
    """Number of roots of an integer-coefficient polynomial in a finite field.

    coeffs are low degree first.  Exhaustive evaluation over the field.
    """
    if ring.cap != 1:
        raise NotAField("root counting requires a field")
    count = 0
    for a in ring.elements():
        acc = ring.zero
        for c in reversed(list(coeffs)):
            acc = ring.add(ring.mul(acc, a), ring.from_int(c))
        if ring.is_zero(acc):
            count += 1
    return count
