"""Finitely generated abelian group descriptors and reduction to Z or Z_n.

A group is Z^alpha x prod Z_{n_i}^{beta_i}.  For tension-continuity only
the exponent matters: the lcm of the torsion moduli, infinite when a free
factor is present.  Group elements never live here; after reduction all
arithmetic is integers (mod n or plain).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

INFINITY = math.inf

Exponent = Union[int, float]  # positive int, or math.inf


@dataclass(frozen=True)
class GroupSpec:
    free_rank: int
    torsion: tuple[tuple[int, int], ...]  # (modulus n_i >= 2, multiplicity >= 1)

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be >= 0")
        for n, b in self.torsion:
            if n < 2:
                raise ValueError(f"torsion modulus must be >= 2, got {n}")
            if b < 1:
                raise ValueError(f"torsion multiplicity must be >= 1, got {b}")

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        for n, b in self.torsion:
            parts.append(f"Z_{n}" if b == 1 else f"Z_{n}^{b}")
        return "x".join(parts) if parts else "Z_1"

    def times(self, other: "GroupSpec") -> "GroupSpec":
        return GroupSpec(self.free_rank + other.free_rank, self.torsion + other.torsion)


TRIVIAL = GroupSpec(0, ())
Z = GroupSpec(1, ())


def Zn(n: int, power: int = 1) -> GroupSpec:
    if n == 1:
        return TRIVIAL
    return GroupSpec(0, ((n, power),))


_FACTOR = re.compile(r"^Z(?:_(\d+))?(?:\^(\d+))?$")


def parse_group(text: str) -> GroupSpec:
    """Parse the CLI syntax: `Z`, `Z_n`, products with `x`, powers with `^`."""
    free = 0
    torsion = []
    for factor in text.strip().split("x"):
        m = _FACTOR.match(factor.strip())
        if not m:
            raise ValueError(f"cannot parse group factor {factor!r}")
        mod, power = m.group(1), int(m.group(2) or 1)
        if mod is None:
            free += power
        else:
            n = int(mod)
            if n < 1:
                raise ValueError(f"bad modulus {n}")
            if n > 1:
                torsion.append((n, power))
    return GroupSpec(free, tuple(torsion))


def exponent(spec: GroupSpec) -> Exponent:
    """lcm of the torsion moduli; infinity with a free factor; 1 when trivial."""
    if spec.free_rank > 0:
        return INFINITY
    out = 1
    for n, _b in spec.torsion:
        out = math.lcm(out, n)
    return out


@dataclass(frozen=True)
class Cyclic:
    """Reduced coefficient group: Z when modulus is None, else Z_modulus."""

    modulus: int | None

    def __post_init__(self):
        if self.modulus is not None and self.modulus < 1:
            raise ValueError("modulus must be >= 1")

    def __str__(self) -> str:
        return "Z" if self.modulus is None else f"Z_{self.modulus}"

    def is_zero(self, value: int) -> bool:
        if self.modulus is None:
            return value == 0
        return value % self.modulus == 0

    def normalize(self, value: int) -> int:
        if self.modulus is None:
            return value
        return value % self.modulus


CYCLIC_Z = Cyclic(None)


def reduce_group(spec: GroupSpec | Cyclic | str) -> Cyclic:
    """Collapse a group spec to the one cyclic group with the same TT behaviour."""
    if isinstance(spec, Cyclic):
        return spec
    if isinstance(spec, str):
        spec = parse_group(spec)
    e = exponent(spec)
    if e is INFINITY:
        return CYCLIC_Z
    return Cyclic(int(e))


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError("need n >= 1")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]
