"""Coefficient field descriptions: the rationals or a prime field GF(p)."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedFieldError

# Modular arithmetic keeps products of int64 entries below 2**62.
MAX_PRIME = 2**31


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
class FieldSpec:
    """A coefficient field: characteristic 0 means Q, a prime p means GF(p)."""

    char: int = 0

    def __post_init__(self) -> None:
        if self.char == 0:
            return
        if not (2 <= self.char < MAX_PRIME) or not _is_prime(self.char):
            raise UnsupportedFieldError(
                f"field characteristic must be 0 or a prime below 2^31, got {self.char}"
            )

    @property
    def is_rational(self) -> bool:
        return self.char == 0

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse the CLI field syntax: q | f2 | f3 | fp:<p>."""
        t = text.strip().lower()
        if t == "q":
            return cls(0)
        if t == "f2":
            return cls(2)
        if t == "f3":
            return cls(3)
        if t.startswith("fp:"):
            try:
                p = int(t[3:])
            except ValueError as exc:
                raise UnsupportedFieldError(f"bad field syntax: {text!r}") from exc
            return cls(p)
        raise UnsupportedFieldError(f"bad field syntax: {text!r} (expected q, f2, f3 or fp:<p>)")

    def __str__(self) -> str:
        if self.char == 0:
            return "q"
        if self.char in (2, 3):
            return f"f{self.char}"
        return f"fp:{self.char}"


QQ = FieldSpec(0)
GF2 = FieldSpec(2)
GF3 = FieldSpec(3)
