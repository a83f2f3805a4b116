"""Graded free modules, cochain complexes, and integer cohomology.

Complexes live over a grading group that is either the unit group of a
finite ring (degrees are ring units) or the infinite cyclic group (degrees
are integer exponents).  Differentials are integer matrices on expanded
Z-bases; cohomology is computed degreewise by Smith normal form over Z with
arbitrary-precision integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .rings import Ring


# ---------------------------------------------------------------------------
# Smith normal form


def smith_normal_form(m: List[List[int]]) -> Tuple[list, list, list]:
    """Return (U, S, V) with U*m*V = S diagonal, d1 | d2 | ..., U,V unimodular.

    Pivots on the minimal nonzero absolute value to limit coefficient growth;
    all arithmetic is exact Python integers.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    S = [list(row) for row in m]
    U = [[int(i == j) for j in range(rows)] for i in range(rows)]
    V = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):  # row dst += c * row src
        S[dst] = [a + c * b for a, b in zip(S[dst], S[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, c):
        for row in S:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    def negate_row(i):
        S[i] = [-a for a in S[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while t < min(rows, cols):
        # Find the minimal-absolute-value nonzero pivot in the trailing block.
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = abs(S[i][j])
                if v and (best is None or v < best):
                    best, pivot = v, (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            # Clear column t.
            dirty = False
            for i in range(t + 1, rows):
                if S[i][t]:
                    q = S[i][t] // S[t][t]
                    add_row(t, i, -q)
                    if S[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if S[t][j]:
                    q = S[t][j] // S[t][t]
                    add_col(t, j, -q)
                    if S[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # Enforce divisibility of the remaining block by the pivot.
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if S[i][j] % S[t][t]:
                        offender = (i, j)
                        break
                if offender:
                    break
            if offender is None:
                break
            add_row(offender[0], t, 1)
        if S[t][t] < 0:
            negate_row(t)
        t += 1
    return U, S, V


def snf_diagonal(m: List[List[int]]) -> List[int]:
    """The nonzero invariant factors of an integer matrix."""
    if not m or not m[0]:
        return []
    _, S, _ = smith_normal_form(m)
    return [S[i][i] for i in range(min(len(S), len(S[0]))) if S[i][i]]


def integer_rank(m: List[List[int]]) -> int:
    return len(snf_diagonal(m))


def merge_invariant_factors(lists: List[List[int]]) -> List[int]:
    """Invariant factors of a direct sum given the factors of each summand.

    Buckets prime powers per prime, pairing the largest powers together so
    the result is again a divisibility chain d1 | d2 | ...
    """
    by_prime: Dict[int, List[int]] = {}
    for factors in lists:
        for d in factors:
            n = d
            p = 2
            while n > 1:
                if n % p == 0:
                    e = 0
                    while n % p == 0:
                        n //= p
                        e += 1
                    by_prime.setdefault(p, []).append(e)
                p += 1 if p == 2 else 2
    if not by_prime:
        return []
    for exps in by_prime.values():
        exps.sort(reverse=True)
    depth = max(len(v) for v in by_prime.values())
    chain = []
    for k in range(depth):
        d = 1
        for p, exps in by_prime.items():
            if k < len(exps):
                d *= p ** exps[k]
        chain.append(d)
    chain.reverse()
    return chain


# ---------------------------------------------------------------------------
# Grading groups and formal sums


class GradingGroup:
    """Degrees with multiplication; either ring units or integer exponents."""

    def mul(self, a, b):
        raise NotImplementedError

    def sort_key(self, a):
        raise NotImplementedError

    def degree_to_json(self, a):
        raise NotImplementedError


class FiniteUnitsGrading(GradingGroup):
    def __init__(self, ring: Ring):
        self.ring = ring
        self.identity = ring.one

    def mul(self, a, b):
        return self.ring.mul(a, b)

    def sort_key(self, a):
        return self.ring.sort_key(a)

    def degree_to_json(self, a):
        return self.ring.element_str(a)


class InfiniteCyclicGrading(GradingGroup):
    """Written multiplicatively as powers of q; elements are integer exponents."""

    identity = 0

    def mul(self, a: int, b: int) -> int:
        return a + b

    def sort_key(self, a: int):
        return a

    def degree_to_json(self, a: int):
        return a


class FormalSum:
    """Finite formal integer combination of grading elements."""

    def __init__(self, grading: GradingGroup, terms: Optional[dict] = None):
        self.grading = grading
        self.terms = {d: c for d, c in (terms or {}).items() if c}

    def add_term(self, degree, coeff: int):
        c = self.terms.get(degree, 0) + coeff
        if c:
            self.terms[degree] = c
        else:
            self.terms.pop(degree, None)

    def __add__(self, other: "FormalSum") -> "FormalSum":
        out = FormalSum(self.grading, dict(self.terms))
        for d, c in other.terms.items():
            out.add_term(d, c)
        return out

    def scale_degree(self, h) -> "FormalSum":
        """Multiply every degree by the group element h."""
        return FormalSum(
            self.grading, {self.grading.mul(h, d): c for d, c in self.terms.items()}
        )

    def __eq__(self, other):
        return isinstance(other, FormalSum) and self.terms == other.terms

    def __neg__(self):
        return FormalSum(self.grading, {d: -c for d, c in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: self.grading.sort_key(kv[0]))

    def to_json(self):
        return [[self.grading.degree_to_json(d), c] for d, c in self.sorted_terms()]

    def __repr__(self):
        return f"FormalSum({dict(self.sorted_terms())!r})"


def evaluate_formal_sum(s: FormalSum, ring: Ring):
    """Collapse a formal sum of ring units to a single ring element."""
    if not isinstance(s.grading, FiniteUnitsGrading) or s.grading.ring != ring:
        raise ValueError("formal sum is not graded by the units of this ring")
    total = ring.zero
    for d, c in s.terms.items():
        total = ring.add(total, ring.int_mul(c, d))
    return total


# ---------------------------------------------------------------------------
# Complexes and cohomology


@dataclass
class GradedComplex:
    """A cochain complex of graded free Z-modules on expanded bases.

    ``degrees[i]`` lists the degree of each basis element of C^i (already
    including any global grading shift); ``differentials[i]`` is the integer
    matrix of d^i: C^i -> C^{i+1} with rows indexed by C^{i+1}.
    Indices are the shifted (cohomological) indices.
    """

    grading: GradingGroup
    degrees: Dict[int, list]
    differentials: Dict[int, List[List[int]]]

    def indices(self) -> List[int]:
        return sorted(self.degrees)

    def differential(self, i: int) -> List[List[int]]:
        if i in self.differentials:
            return self.differentials[i]
        rows = len(self.degrees.get(i + 1, []))
        cols = len(self.degrees.get(i, []))
        return [[0] * cols for _ in range(rows)]

    def validate(self):
        """Check d(i+1) o d(i) = 0 and degree preservation; raise on failure."""
        for i in self.indices():
            d = self.differential(i)
            src = self.degrees[i]
            tgt = self.degrees.get(i + 1, [])
            for r, row in enumerate(d):
                for c, v in enumerate(row):
                    if v and tgt[r] != src[c]:
                        raise ValueError(
                            f"differential d^{i} not degree-preserving at entry ({r},{c})"
                        )
            d2 = self.differential(i + 1)
            if d and d2:
                for r in range(len(d2)):
                    for c in range(len(d[0]) if d else 0):
                        acc = sum(d2[r][k] * d[k][c] for k in range(len(d)))
                        if acc:
                            raise ValueError(f"d o d != 0 at index {i}, entry ({r},{c})")

    def gdim(self, i: int) -> FormalSum:
        s = FormalSum(self.grading)
        for deg in self.degrees.get(i, []):
            s.add_term(deg, 1)
        return s

    def euler_characteristic(self) -> FormalSum:
        total = FormalSum(self.grading)
        for i in self.indices():
            g = self.gdim(i)
            total = total + (g if i % 2 == 0 else -g)
        return total


@dataclass(frozen=True)
class HomologyTable:
    """Per-(index, degree) cohomology: free rank plus torsion invariant factors."""

    grading: GradingGroup = field(compare=False)
    entries: tuple  # sorted tuple of ((i, degree), rank, torsion-tuple)

    @classmethod
    def from_dict(cls, grading, data: dict) -> "HomologyTable":
        items = [
            ((i, d), rank, tuple(tors))
            for (i, d), (rank, tors) in data.items()
            if rank or tors
        ]
        items.sort(key=lambda e: (e[0][0], grading.sort_key(e[0][1])))
        return cls(grading, tuple(items))

    def as_dict(self) -> dict:
        return {key: (rank, tors) for key, rank, tors in self.entries}

    def euler_characteristic(self) -> FormalSum:
        s = FormalSum(self.grading)
        for (i, d), rank, _ in self.entries:
            s.add_term(d, rank if i % 2 == 0 else -rank)
        return s

    def to_json(self):
        return {
            "entries": [
                {
                    "i": i,
                    "degree": self.grading.degree_to_json(d),
                    "rank": rank,
                    "torsion": list(tors),
                }
                for (i, d), rank, tors in self.entries
            ]
        }


def cohomology(c: GradedComplex, validate: bool = True) -> HomologyTable:
    """Cohomology of a degree-preserving complex, blockwise by degree.

    For each (index i, degree h): the degree-h block of d^i gives the kernel
    dimension, the degree-h block of d^{i-1} the image rank and torsion.
    Torsion equals the nontrivial invariant factors of the incoming block
    because integer kernels are pure sublattices (direct summands).
    """
    if validate:
        c.validate()
    entries = {}
    for i in c.indices():
        degs = c.degrees[i]
        classes = {}
        for pos, d in enumerate(degs):
            classes.setdefault(d, []).append(pos)
        for h, positions in classes.items():
            out_block = _block(c.differential(i), None, positions)
            in_matrix = c.differentials.get(i - 1)
            in_block = [in_matrix[p] for p in positions] if in_matrix else []
            rank_out = integer_rank(out_block) if out_block else 0
            in_factors = snf_diagonal(in_block)
            rank_in = len(in_factors)
            free_rank = len(positions) - rank_out - rank_in
            torsion = tuple(d for d in in_factors if d > 1)
            if free_rank or torsion:
                entries[(i, h)] = (free_rank, torsion)
    return HomologyTable.from_dict(c.grading, entries)


def _block(matrix: List[List[int]], rows, cols) -> List[List[int]]:
    """Submatrix with the given column positions (all rows)."""
    if not matrix:
        return []
    if cols is not None:
        return [[row[j] for j in cols] for row in matrix]
    return matrix
