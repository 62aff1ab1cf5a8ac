"""Exact arithmetic over two principal ideal domains.

Supported rings:

  * the rational integers, backed by Python's arbitrary-precision ``int``;
  * ``PolyModP(p)``, univariate polynomials over the prime field Z/pZ,
    backed by tuples of residues in ascending degree order.

Every element is carried as a :class:`RingValue`, a thin wrapper that tags
an opaque payload with the ring it lives in.  Mixing values from different
rings raises :class:`RingMismatchError` instead of producing garbage.

Gcds are always returned as *canonical associates*: nonnegative integers,
monic polynomials.  By convention ``gcd(0, 0) == 0`` and every element
divides zero, so a gcd accumulated over an empty or all-zero collection
degrades gracefully instead of raising.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence


class RingMismatchError(TypeError):
    """Raised when an operation mixes values from different rings."""


class ExactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


class RingValue:
    """An immutable element of one of the supported rings.

    Supports ``+``, ``-``, ``*``, unary ``-`` and ``**`` with a nonnegative
    integer exponent.  Equality and hashing compare the ring and the payload,
    so values are usable as dict keys and in sets.
    """

    __slots__ = ("ring", "payload")

    def __init__(self, ring: "Ring", payload):
        self.ring = ring
        self.payload = payload

    def is_zero(self) -> bool:
        return self.ring.is_zero(self.payload)

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.payload)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other: "RingValue") -> "RingValue":
        ring = _common_ring(self, other)
        return RingValue(ring, ring.add(self.payload, other.payload))

    def __sub__(self, other: "RingValue") -> "RingValue":
        ring = _common_ring(self, other)
        return RingValue(ring, ring.add(self.payload, ring.neg(other.payload)))

    def __mul__(self, other: "RingValue") -> "RingValue":
        ring = _common_ring(self, other)
        return RingValue(ring, ring.mul(self.payload, other.payload))

    def __neg__(self) -> "RingValue":
        return RingValue(self.ring, self.ring.neg(self.payload))

    def __pow__(self, exponent: int) -> "RingValue":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = self.ring.one
        base = self
        for _ in range(exponent):
            out = out * base
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingValue):
            return NotImplemented
        return self.ring == other.ring and self.payload == other.payload

    def __hash__(self) -> int:
        return hash((self.ring, self.payload))

    def __str__(self) -> str:
        return self.ring.render(self.payload)

    def __repr__(self) -> str:
        return f"{self.ring.name}({self.ring.render(self.payload)})"


def _common_ring(a: RingValue, b: RingValue) -> "Ring":
    if a.ring != b.ring:
        raise RingMismatchError(
            f"cannot combine values from {a.ring.name} and {b.ring.name}"
        )
    return a.ring


class Ring:
    """Interface shared by the supported PIDs.

    Subclasses implement arithmetic on raw payloads; calling the ring
    coerces native Python data into a :class:`RingValue`.
    """

    name: str = "ring"

    # -- payload arithmetic, provided by subclasses --------------------

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def divmod(self, a, b):
        """Euclidean division of a by b != 0, returning (quotient, remainder)."""
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        raise NotImplementedError

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def canonicalizing_unit(self, a):
        """A unit u with u*a canonical; the identity when a == 0."""
        raise NotImplementedError

    def unit_inverse(self, u):
        raise NotImplementedError

    def size(self, a) -> int:
        """A nonnegative measure of a (bit length or degree), used for caps."""
        raise NotImplementedError

    def coerce(self, value):
        """Convert native Python data into a payload."""
        raise NotImplementedError

    def render(self, a) -> str:
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    # -- derived operations ---------------------------------------------

    def canonical(self, a):
        return self.mul(self.canonicalizing_unit(a), a)

    def gcd(self, a, b):
        """Canonical gcd of two payloads, by the Euclidean algorithm."""
        while not self.is_zero(b):
            a, b = b, self.divmod(a, b)[1]
        return self.canonical(a)

    # -- RingValue construction -----------------------------------------

    def __call__(self, value) -> RingValue:
        if isinstance(value, RingValue):
            if value.ring != self:
                raise RingMismatchError(
                    f"value from {value.ring.name} passed to {self.name}"
                )
            return value
        return RingValue(self, self.coerce(value))

    @property
    def zero(self) -> RingValue:
        return RingValue(self, self.coerce(0))

    @property
    def one(self) -> RingValue:
        return RingValue(self, self.coerce(1))

    def _key(self):
        return (type(self),)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ring):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return self.name


class IntegerRing(Ring):
    """The rational integers; canonical associates are nonnegative."""

    name = "ZZ"

    def add(self, a: int, b: int) -> int:
        return a + b

    def neg(self, a: int) -> int:
        return -a

    def mul(self, a: int, b: int) -> int:
        return a * b

    def divmod(self, a: int, b: int):
        if b == 0:
            raise ExactDivisionError("division by zero")
        return divmod(a, b)

    def is_zero(self, a: int) -> bool:
        return a == 0

    def is_unit(self, a: int) -> bool:
        return a == 1 or a == -1

    def canonicalizing_unit(self, a: int) -> int:
        return -1 if a < 0 else 1

    def unit_inverse(self, u: int) -> int:
        return u

    def size(self, a: int) -> int:
        return a.bit_length()

    def gcd(self, a: int, b: int) -> int:
        return math.gcd(a, b)

    def coerce(self, value) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"cannot coerce {value!r} into {self.name}")
        return value

    def render(self, a: int) -> str:
        return str(a)

    def parse(self, text: str) -> int:
        try:
            return int(text, 10)
        except ValueError:
            raise ValueError(f"not an integer literal: {text!r}") from None


#: The ring of rational integers, shared by everyone.
ZZ = IntegerRing()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PolyModP(Ring):
    """Univariate polynomials over Z/pZ for a prime p < 2**16.

    Payloads are tuples of coefficients in [0, p), lowest degree first,
    with no trailing zeros; the empty tuple is the zero polynomial.
    Canonical associates are monic.
    """

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool):
            raise TypeError("modulus must be an int")
        if not 2 <= p < 2**16:
            raise ValueError(f"modulus out of range: {p}")
        if not _is_prime(p):
            raise ValueError(f"modulus is not prime: {p}")
        self.p = p

    @property
    def name(self) -> str:
        return f"GF({self.p})[x]"

    def _key(self):
        return (type(self), self.p)

    def _trim(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        n = len(coeffs)
        while n and coeffs[n - 1] == 0:
            n -= 1
        return tuple(coeffs[:n])

    def add(self, a, b):
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.p
        return self._trim(out)

    def neg(self, a):
        return tuple((self.p - c) % self.p for c in a)

    def mul(self, a, b):
        if not a or not b:
            return ()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] = (out[i + j] + ca * cb) % self.p
        return self._trim(out)

    def divmod(self, a, b):
        if not b:
            raise ExactDivisionError("division by zero polynomial")
        p = self.p
        rem = list(a)
        quo = [0] * max(len(a) - len(b) + 1, 0)
        inv_lead = pow(b[-1], -1, p)
        for shift in range(len(rem) - len(b), -1, -1):
            factor = (rem[shift + len(b) - 1] * inv_lead) % p
            if factor == 0:
                continue
            quo[shift] = factor
            for j, cb in enumerate(b):
                rem[shift + j] = (rem[shift + j] - factor * cb) % p
        return self._trim(quo), self._trim(rem)

    def is_zero(self, a) -> bool:
        return not a

    def is_unit(self, a) -> bool:
        return len(a) == 1

    def canonicalizing_unit(self, a):
        if not a:
            return (1,)
        return (pow(a[-1], -1, self.p),)

    def unit_inverse(self, u):
        return (pow(u[0], -1, self.p),)

    def size(self, a) -> int:
        return len(a) - 1 if a else 0

    def coerce(self, value):
        if isinstance(value, bool):
            raise TypeError(f"cannot coerce {value!r} into {self.name}")
        if isinstance(value, int):
            return self._trim((value % self.p,))
        if isinstance(value, (list, tuple)):
            return self._trim([int(c) % self.p for c in value])
        raise TypeError(f"cannot coerce {value!r} into {self.name}")

    def render(self, a) -> str:
        if not a:
            return "[0]"
        return "[" + ",".join(str(c) for c in a) + "]"

    def parse(self, text: str):
        body = text.strip()
        if not body.startswith("[") or not body.endswith("]"):
            raise ValueError(f"not a polynomial literal: {text!r}")
        inner = body[1:-1].strip()
        if not inner:
            return ()
        coeffs = []
        for part in inner.split(","):
            part = part.strip()
            try:
                coeffs.append(int(part, 10))
            except ValueError:
                raise ValueError(
                    f"bad coefficient {part!r} in polynomial literal {text!r}"
                ) from None
        return self.coerce(coeffs)


# -- module-level operations on RingValue ----------------------------------


def canonical(a: RingValue) -> RingValue:
    """The canonical associate of a (nonnegative / monic)."""
    return RingValue(a.ring, a.ring.canonical(a.payload))


def gcd(a: RingValue, b: RingValue) -> RingValue:
    """Canonical gcd; gcd(0, b) is canonical(b) and gcd(0, 0) is 0."""
    ring = _common_ring(a, b)
    return RingValue(ring, ring.gcd(a.payload, b.payload))


def gcd_all(values: Iterable[RingValue], ring: Ring) -> RingValue:
    """Canonical gcd of an iterable, 0 when it is empty or all zero."""
    out = ring.zero
    for v in values:
        out = gcd(out, v)
        if out.is_unit():
            break
    return out


def extended_gcd(a: RingValue, b: RingValue):
    """Solve the Bezout identity with cofactors of the gcd.

    Returns (d, p, q, s, t) with d the canonical gcd of (a, b) and

        a*p + b*q == d,    a == s*d,    b == -t*d.

    Undefined (raises ValueError) when both inputs are zero.
    """
    ring = _common_ring(a, b)
    if a.is_zero() and b.is_zero():
        raise ValueError("extended gcd of (0, 0) is undefined")
    one, zero = ring.coerce(1), ring.coerce(0)
    r0, x0, y0 = a.payload, one, zero
    r1, x1, y1 = b.payload, zero, one
    while not ring.is_zero(r1):
        quot, rem = ring.divmod(r0, r1)
        r0, r1 = r1, rem
        x0, x1 = x1, ring.add(x0, ring.neg(ring.mul(quot, x1)))
        y0, y1 = y1, ring.add(y0, ring.neg(ring.mul(quot, y1)))
    u = ring.canonicalizing_unit(r0)
    d = ring.mul(u, r0)
    p = ring.mul(u, x0)
    q = ring.mul(u, y0)
    s = ring.divmod(a.payload, d)[0]
    t = ring.neg(ring.divmod(b.payload, d)[0])
    return tuple(RingValue(ring, v) for v in (d, p, q, s, t))


def exact_div(a: RingValue, b: RingValue) -> RingValue:
    """a / b when b divides a exactly; ExactDivisionError otherwise."""
    ring = _common_ring(a, b)
    if b.is_zero():
        raise ExactDivisionError("division by zero")
    quot, rem = ring.divmod(a.payload, b.payload)
    if not ring.is_zero(rem):
        raise ExactDivisionError(
            f"{ring.render(b.payload)} does not divide {ring.render(a.payload)}"
        )
    return RingValue(ring, quot)


def divides(a: RingValue, b: RingValue) -> bool:
    """Whether a divides b; everything divides 0, only 0 is divided by 0."""
    ring = _common_ring(a, b)
    if b.is_zero():
        return True
    if a.is_zero():
        return False
    return ring.is_zero(ring.divmod(b.payload, a.payload)[1])
