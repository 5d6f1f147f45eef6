"""Exact scalar arithmetic: the rationals and prime fields GF(p).

Scalars are plain Python values (``fractions.Fraction`` over Q, ints in
``[0, p)`` over GF(p)); a :class:`Field` object supplies the operations.
Everything is exact, there is no floating point anywhere in the engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class FieldError(ValueError):
    pass


def _is_prime(p: int) -> bool:
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


@dataclass(frozen=True)
class Field:
    """A field specification: kind 'Q' (rationals) or 'GF' with a prime p."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.p is not None:
                raise FieldError("rationals take no modulus")
        elif self.kind == "GF":
            if self.p is None or not _is_prime(self.p):
                raise FieldError(f"GF modulus must be prime, got {self.p}")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    # -- constants -----------------------------------------------------
    @property
    def zero(self):
        return Fraction(0) if self.kind == "Q" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "Q" else 1

    def of_int(self, n: int):
        return Fraction(n) if self.kind == "Q" else n % self.p

    # -- arithmetic ----------------------------------------------------
    def add(self, a, b):
        return a + b if self.kind == "Q" else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.kind == "Q" else (a - b) % self.p

    def neg(self, a):
        return -a if self.kind == "Q" else (-a) % self.p

    def mul(self, a, b):
        return a * b if self.kind == "Q" else (a * b) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.kind == "Q":
            return 1 / a
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return not a

    # -- serialization -------------------------------------------------
    def to_str(self, a) -> str:
        if self.kind == "Q":
            return str(a)  # "p/q" in lowest terms, or an integer string
        return str(a)

    def parse(self, s) -> object:
        if isinstance(s, int):
            return self.of_int(s)
        if self.kind == "Q":
            return Fraction(s)
        v = int(s)
        if not 0 <= v < self.p:
            raise FieldError(f"GF({self.p}) scalar out of range: {s}")
        return v

    def spec(self) -> dict:
        return {"kind": "Q"} if self.kind == "Q" else {"kind": "GF", "p": self.p}

    @staticmethod
    def from_spec(spec: dict) -> "Field":
        if spec.get("kind") == "Q":
            return QQ
        if spec.get("kind") == "GF":
            return Field("GF", int(spec["p"]))
        raise FieldError(f"bad field spec {spec!r}")


QQ = Field("Q")


def GF(p: int) -> Field:
    return Field("GF", p)
