"""Exact arithmetic in finite commutative rings with unity.

Two kinds of rings are supported: Z/nZ, and a single polynomial quotient
(Z/nZ)[t]/(p(t)) with unit leading coefficient.  Elements are plain Python
values (an int for Z/nZ, a coefficient tuple for quotients) so they hash,
compare, and serialize without wrapper objects; the ring object owns all
arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Optional


class RingError(ValueError):
    """Raised for malformed ring descriptors or out-of-ring elements."""


class Ring:
    """Common interface for the two concrete ring kinds."""

    zero = None
    one = None

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def elements(self) -> list:
        raise NotImplementedError

    def try_invert(self, a):
        raise NotImplementedError

    def sort_key(self, a):
        """Total order on canonical representations (for deterministic output)."""
        raise NotImplementedError

    def contains(self, a) -> bool:
        raise NotImplementedError

    def power(self, a, k: int):
        """a**k for any integer k; negative k requires a to be a unit."""
        if k < 0:
            inv = self.try_invert(a)
            if inv is None:
                raise RingError(f"negative power of non-unit {a!r}")
            a, k = inv, -k
        result = self.one
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def int_mul(self, c: int, a):
        """c*a with c an ordinary integer."""
        if c < 0:
            return self.neg(self.int_mul(-c, a))
        result = self.zero
        for _ in range(c):
            result = self.add(result, a)
        return result

    def is_unit(self, a) -> bool:
        return self.try_invert(a) is not None

    def units(self) -> list:
        return [a for a in self.elements() if self.is_unit(a)]

    def element_to_json(self, a):
        raise NotImplementedError

    def element_from_json(self, data):
        raise NotImplementedError

    def element_str(self, a) -> str:
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError


class ZModRing(Ring):
    """The ring Z/nZ with canonical representatives 0..n-1."""

    def __init__(self, n: int):
        if n < 2:
            raise RingError(f"modulus must be >= 2, got {n}")
        self.n = n
        self.zero = 0
        self.one = 1 % n

    def add(self, a, b):
        return (a + b) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def elements(self):
        return list(range(self.n))

    def try_invert(self, a):
        if gcd(a, self.n) != 1:
            return None
        return pow(a, -1, self.n)

    def sort_key(self, a):
        return a

    def contains(self, a):
        return isinstance(a, int) and 0 <= a < self.n

    def element_to_json(self, a):
        return a

    def element_from_json(self, data):
        if not isinstance(data, int):
            raise RingError(f"expected integer element, got {data!r}")
        return data % self.n

    def element_str(self, a):
        return str(a)

    def to_json(self):
        return {"kind": "zmod", "n": self.n}

    def __repr__(self):
        return f"ZModRing({self.n})"

    def __eq__(self, other):
        return isinstance(other, ZModRing) and other.n == self.n

    def __hash__(self):
        return hash(("zmod", self.n))


class PolyQuotientRing(Ring):
    """(Z/nZ)[t]/(p(t)) as coefficient tuples of length deg(p).

    Coefficients are stored constant term first.  The leading coefficient of
    the modulus must be a unit of Z/nZ so that reduction terminates.
    """

    def __init__(self, base_n: int, modulus: Iterable[int]):
        self.base = ZModRing(base_n)
        mod = [c % base_n for c in modulus]
        while mod and mod[-1] == 0:
            mod.pop()
        if len(mod) < 2:
            raise RingError("modulus polynomial must have degree >= 1")
        lead_inv = self.base.try_invert(mod[-1])
        if lead_inv is None:
            raise RingError("leading coefficient of modulus must be a unit")
        self.modulus = tuple(mod)
        self.degree = len(mod) - 1
        self._lead_inv = lead_inv
        self.zero = (0,) * self.degree
        self.one = tuple([1 % base_n] + [0] * (self.degree - 1))

    def _reduce(self, coeffs: list) -> tuple:
        n = self.base.n
        coeffs = [c % n for c in coeffs]
        for i in range(len(coeffs) - 1, self.degree - 1, -1):
            if coeffs[i] == 0:
                continue
            factor = (coeffs[i] * self._lead_inv) % n
            shift = i - self.degree
            for j, m in enumerate(self.modulus):
                coeffs[shift + j] = (coeffs[shift + j] - factor * m) % n
        coeffs = coeffs[: self.degree]
        coeffs += [0] * (self.degree - len(coeffs))
        return tuple(coeffs)

    def add(self, a, b):
        n = self.base.n
        return tuple((x + y) % n for x, y in zip(a, b))

    def mul(self, a, b):
        prod = [0] * (2 * self.degree - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                prod[i + j] += x * y
        return self._reduce(prod)

    def neg(self, a):
        n = self.base.n
        return tuple((-x) % n for x in a)

    def elements(self):
        return [tuple(c) for c in itertools.product(range(self.base.n), repeat=self.degree)]

    def try_invert(self, a):
        # Brute force; rings at play are small (|R| <= a few hundred).
        for b in self.elements():
            if self.mul(a, b) == self.one:
                return b
        return None

    def sort_key(self, a):
        return a

    def contains(self, a):
        return (
            isinstance(a, tuple)
            and len(a) == self.degree
            and all(isinstance(c, int) and 0 <= c < self.base.n for c in a)
        )

    def element_to_json(self, a):
        return list(a)

    def element_from_json(self, data):
        if isinstance(data, int):
            data = [data]
        if not isinstance(data, list) or not all(isinstance(c, int) for c in data):
            raise RingError(f"expected coefficient list, got {data!r}")
        return self._reduce(list(data))

    def element_str(self, a):
        terms = []
        for i, c in enumerate(a):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = "t" if i == 1 else f"t^{i}"
                terms.append(var if c == 1 else f"{c}{var}")
        return " + ".join(terms) if terms else "0"

    def to_json(self):
        return {"kind": "poly_quotient", "base_n": self.base.n, "modulus": list(self.modulus)}

    def __repr__(self):
        return f"PolyQuotientRing({self.base.n}, {list(self.modulus)})"

    def __eq__(self, other):
        return (
            isinstance(other, PolyQuotientRing)
            and other.base.n == self.base.n
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("poly_quotient", self.base.n, self.modulus))


def ring_make(desc: dict) -> Ring:
    """Build a ring from a JSON-style descriptor.

    ``{"kind": "zmod", "n": 5}`` or
    ``{"kind": "poly_quotient", "base_n": 2, "modulus": [1, 1, 0, 1]}``
    (coefficient list, constant term first).
    """
    kind = desc.get("kind")
    if kind == "zmod":
        return ZModRing(int(desc["n"]))
    if kind == "poly_quotient":
        return PolyQuotientRing(int(desc["base_n"]), [int(c) for c in desc["modulus"]])
    raise RingError(f"unknown ring kind {kind!r}")


@dataclass(frozen=True)
class UnitSubgroup:
    """A multiplicative subgroup of R^x, closed under product and inverse."""

    ring: Ring
    elements: frozenset
    generators: tuple = ()

    def __contains__(self, a):
        return a in self.elements

    def __len__(self):
        return len(self.elements)

    def sorted_elements(self) -> list:
        return sorted(self.elements, key=self.ring.sort_key)

    def to_json(self):
        return [self.ring.element_to_json(g) for g in self.sorted_elements()]


def subgroup_generate(ring: Ring, gens: Iterable) -> UnitSubgroup:
    """Smallest subgroup of R^x containing ``gens`` (closure iteration)."""
    gens = list(gens)
    for g in gens:
        if not ring.is_unit(g):
            raise RingError(f"generator {g!r} is not a unit")
    elems = {ring.one}
    frontier = list(elems)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = ring.mul(a, g)
                if b not in elems:
                    elems.add(b)
                    nxt.append(b)
        frontier = nxt
    # A finite multiplicatively closed set of units contains all inverses.
    return UnitSubgroup(ring=ring, elements=frozenset(elems), generators=tuple(gens))


@dataclass(frozen=True)
class Coset:
    """A coset aG of a unit subgroup, identified by its minimal representative."""

    subgroup: UnitSubgroup
    representative: object = field(compare=False)

    @property
    def canonical(self):
        ring = self.subgroup.ring
        return min(
            (ring.mul(self.representative, g) for g in self.subgroup.elements),
            key=ring.sort_key,
        )

    def __eq__(self, other):
        return (
            isinstance(other, Coset)
            and self.subgroup.elements == other.subgroup.elements
            and self.canonical == other.canonical
        )

    def __hash__(self):
        return hash(self.canonical)

    def mul(self, other: "Coset") -> "Coset":
        ring = self.subgroup.ring
        return Coset(self.subgroup, ring.mul(self.representative, other.representative))

    def inv(self) -> "Coset":
        ring = self.subgroup.ring
        return Coset(self.subgroup, ring.try_invert(self.representative))

    def to_json(self):
        return self.subgroup.ring.element_to_json(self.canonical)


def quotient_cosets(group: UnitSubgroup) -> list:
    """Partition R^x into cosets of ``group``, minimal representatives first."""
    ring = group.ring
    seen = set()
    cosets = []
    for u in sorted(ring.units(), key=ring.sort_key):
        if u in seen:
            continue
        coset = Coset(group, u)
        for g in group.elements:
            seen.add(ring.mul(u, g))
        cosets.append(coset)
    return cosets
