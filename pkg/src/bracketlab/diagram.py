"""Oriented link diagrams as PD-style combinatorial data.

A diagram is a list of crossings, each naming its four incident edges by
label, plus a count of crossing-free circles.  Every edge label must occur
exactly once as an output and once as an input across all crossings.

Conventions (crossings rotated so both strands point downward):

* positive crossing: under-strand enters NW, over-strand enters NE;
  over-strand exits SW, under-strand exits SE;
* negative crossing: mirror image (over enters NW, under enters NE).

Smoothings pair the four edge ends either "vertically" (under_in-over_out
and over_in-under_out) or "horizontally" (under_in-over_in and
under_out-over_out).  Bit 0 selects the vertical smoothing at a positive
crossing and the horizontal one at a negative crossing, so that bit 0 always
carries the A-type skein coefficient and bit 1 the B-type one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple


class DiagramError(ValueError):
    """Raised for malformed PD data."""


@dataclass(frozen=True)
class CrossingRecord:
    sign: int
    under_in: int
    over_in: int
    under_out: int
    over_out: int

    def to_json(self):
        return {
            "sign": self.sign,
            "under_in": self.under_in,
            "over_in": self.over_in,
            "under_out": self.under_out,
            "over_out": self.over_out,
        }


class OrientedDiagram:
    """A closed oriented link diagram."""

    def __init__(self, crossings: Sequence[CrossingRecord], free_circles: int = 0):
        self.crossings = tuple(crossings)
        self.free_circles = int(free_circles)
        self._validate()
        edges = sorted({lbl for c in self.crossings for lbl in self._edge_labels(c)})
        top = max(edges) if edges else 0
        self.edges = edges
        self.free_circle_arcs = tuple(range(top + 1, top + 1 + self.free_circles))
        self.n_plus = sum(1 for c in self.crossings if c.sign == 1)
        self.n_minus = sum(1 for c in self.crossings if c.sign == -1)

    @staticmethod
    def _edge_labels(c: CrossingRecord):
        return (c.under_in, c.over_in, c.under_out, c.over_out)

    def _validate(self):
        incoming: Dict[int, int] = {}
        outgoing: Dict[int, int] = {}
        for idx, c in enumerate(self.crossings):
            if c.sign not in (1, -1):
                raise DiagramError(f"crossing {idx}: bad sign {c.sign!r}")
            for label, bucket in (
                (c.under_in, incoming),
                (c.over_in, incoming),
                (c.under_out, outgoing),
                (c.over_out, outgoing),
            ):
                if not isinstance(label, int) or label < 1:
                    raise DiagramError(f"crossing {idx}: bad edge label {label!r}")
                if label in bucket:
                    raise DiagramError(f"edge {label} used twice as {'input' if bucket is incoming else 'output'}")
                bucket[label] = idx
        if set(incoming) != set(outgoing):
            dangling = set(incoming) ^ set(outgoing)
            raise DiagramError(f"dangling edge labels: {sorted(dangling)}")
        if self.free_circles < 0:
            raise DiagramError("free_circles must be >= 0")

    @property
    def writhe(self) -> int:
        return self.n_plus - self.n_minus

    def arcs(self) -> List[int]:
        """All colorable arcs: crossing edges plus one arc per free circle."""
        return self.edges + list(self.free_circle_arcs)

    def components(self) -> List[Tuple[int, ...]]:
        """Link components as cyclic edge sequences (plus free circles)."""
        succ = {}
        for c in self.crossings:
            succ[c.under_in] = c.under_out
            succ[c.over_in] = c.over_out
        comps = []
        seen = set()
        for start in self.edges:
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            cur = succ[start]
            while cur != start:
                cycle.append(cur)
                seen.add(cur)
                cur = succ[cur]
            comps.append(tuple(cycle))
        comps.extend((arc,) for arc in self.free_circle_arcs)
        return comps

    def linking_number(self, comp_a: int, comp_b: int) -> int:
        """Half the signed count of crossings between two components."""
        comps = self.components()
        in_a, in_b = set(comps[comp_a]), set(comps[comp_b])
        total = 0
        for c in self.crossings:
            if (c.under_in in in_a and c.over_in in in_b) or (
                c.under_in in in_b and c.over_in in in_a
            ):
                total += c.sign
        if total % 2:
            raise DiagramError("odd inter-component crossing sum")
        return total // 2

    def to_json(self):
        return {
            "crossings": [c.to_json() for c in self.crossings],
            "free_circles": self.free_circles,
        }

    def __eq__(self, other):
        return (
            isinstance(other, OrientedDiagram)
            and self.crossings == other.crossings
            and self.free_circles == other.free_circles
        )

    def __hash__(self):
        return hash((self.crossings, self.free_circles))


def parse_diagram(data) -> OrientedDiagram:
    """Parse diagram JSON (text or already-decoded dict)."""
    if isinstance(data, str):
        data = json.loads(data)
    crossings = []
    for c in data.get("crossings", []):
        try:
            crossings.append(
                CrossingRecord(
                    sign=c["sign"],
                    under_in=c["under_in"],
                    over_in=c["over_in"],
                    under_out=c["under_out"],
                    over_out=c["over_out"],
                )
            )
        except KeyError as exc:
            raise DiagramError(f"crossing record missing field {exc}") from None
    return OrientedDiagram(crossings, data.get("free_circles", 0))


def _pairings(crossing: CrossingRecord, bit: int) -> List[Tuple[int, int]]:
    """The two edge pairs produced by resolving one crossing.

    Vertical keeps the strands side by side ( )( ), horizontal joins top to
    top and bottom to bottom.  See the module docstring for the bit.
    """
    vertical = bit == 0 if crossing.sign == 1 else bit == 1
    if vertical:
        return [(crossing.under_in, crossing.over_out), (crossing.over_in, crossing.under_out)]
    return [(crossing.under_in, crossing.over_in), (crossing.under_out, crossing.over_out)]


@dataclass(frozen=True)
class SmoothingState:
    resolution: Tuple[int, ...]
    circles: Tuple[Tuple[int, ...], ...]  # each circle = sorted edge labels

    @property
    def weight(self) -> int:
        return sum(self.resolution)

    @property
    def num_circles(self) -> int:
        return len(self.circles)


def resolve_state(D: OrientedDiagram, bits: Sequence[int]) -> SmoothingState:
    """Resolve every crossing per ``bits`` and group edges into circles."""
    bits = tuple(int(b) for b in bits)
    if len(bits) != len(D.crossings):
        raise DiagramError(f"expected {len(D.crossings)} bits, got {len(bits)}")
    parent: Dict[int, int] = {e: e for e in D.arcs()}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for crossing, bit in zip(D.crossings, bits):
        for a, b in _pairings(crossing, bit):
            union(a, b)
    groups: Dict[int, List[int]] = {}
    for e in D.arcs():
        groups.setdefault(find(e), []).append(e)
    circles = tuple(sorted((tuple(sorted(g)) for g in groups.values()), key=lambda c: c[0]))
    return SmoothingState(resolution=bits, circles=circles)


@dataclass(frozen=True)
class CubeEdge:
    """An edge of the smoothing cube: two states differing in one bit (0->1)."""

    from_state: SmoothingState
    to_state: SmoothingState
    changed_crossing: int
    kind: str  # "merge" or "split"
    sign: int  # (-1)^(number of 1-bits before the changed position)


def cube_edges(D: OrientedDiagram) -> List[CubeEdge]:
    """All n * 2^(n-1) cube edges with merge/split kind and cube sign."""
    import itertools

    n = len(D.crossings)
    states = {
        bits: resolve_state(D, bits) for bits in itertools.product((0, 1), repeat=n)
    }
    edges = []
    for bits, state in states.items():
        for pos in range(n):
            if bits[pos] == 1:
                continue
            to_bits = bits[:pos] + (1,) + bits[pos + 1 :]
            to_state = states[to_bits]
            delta = to_state.num_circles - state.num_circles
            if delta == -1:
                kind = "merge"
            elif delta == 1:
                kind = "split"
            else:
                raise DiagramError(
                    f"adjacent states {bits}->{to_bits} differ by {delta} circles"
                )
            sign = -1 if sum(bits[:pos]) % 2 else 1
            edges.append(CubeEdge(state, to_state, pos, kind, sign))
    return edges


def trace_circles(D: OrientedDiagram, bits: Sequence[int]) -> int:
    """Circle count by explicitly walking edge-end pairings.

    Independent cross-check of the union-find in :func:`resolve_state`.  The
    walk distinguishes the two ends of each edge (its output slot and input
    slot), so edges looping back to the same crossing are handled correctly.
    """
    bits = tuple(int(b) for b in bits)
    if len(bits) != len(D.crossings):
        raise DiagramError(f"expected {len(D.crossings)} bits, got {len(bits)}")
    # Slots are (crossing index, role). A smoothing mates the four slots of a
    # crossing in two pairs.
    slot_in: Dict[int, tuple] = {}
    slot_out: Dict[int, tuple] = {}
    mate: Dict[tuple, tuple] = {}
    edge_at: Dict[tuple, int] = {}
    for idx, (crossing, bit) in enumerate(zip(D.crossings, bits)):
        slot_in[crossing.under_in] = (idx, "under_in")
        slot_in[crossing.over_in] = (idx, "over_in")
        slot_out[crossing.under_out] = (idx, "under_out")
        slot_out[crossing.over_out] = (idx, "over_out")
        for role, edge in (
            ("under_in", crossing.under_in),
            ("over_in", crossing.over_in),
            ("under_out", crossing.under_out),
            ("over_out", crossing.over_out),
        ):
            edge_at[(idx, role)] = edge
        vertical = bit == 0 if crossing.sign == 1 else bit == 1
        if vertical:
            pairs = [("under_in", "over_out"), ("over_in", "under_out")]
        else:
            pairs = [("under_in", "over_in"), ("under_out", "over_out")]
        for a, b in pairs:
            mate[(idx, a)] = (idx, b)
            mate[(idx, b)] = (idx, a)

    visited = set()
    count = 0
    for start in D.edges:
        if start in visited:
            continue
        count += 1
        # State: (edge, going_forward); forward = from output slot to input slot.
        edge, forward = start, True
        while True:
            visited.add(edge)
            slot = slot_in[edge] if forward else slot_out[edge]
            nxt_slot = mate[slot]
            edge = edge_at[nxt_slot]
            # Arriving at an output slot means we stand at the new edge's tail
            # and walk it forward; an input slot means we walk it backward.
            forward = nxt_slot[1].endswith("_out")
            if edge == start and forward:
                break
    return count + D.free_circles
