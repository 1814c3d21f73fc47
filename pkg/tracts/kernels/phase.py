"""
Phase Hyperfield
Rational-turn points of the unit circle with open-arc hyperaddition
"""
import re
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from errors import ParseError
from tracts.core import Region, Tract, TractValue, register

HALF = Fraction(1, 2)
_PHASE = re.compile(r"^ph:(\d+)(?:/(\d+))?$")


def turn(q) -> Fraction:
    return Fraction(q) % 1


def max_gap(directions: Sequence[Fraction]) -> Fraction:
    """Largest circular gap between consecutive distinct directions"""
    ordered = sorted(set(directions))
    gaps = [b - a for a, b in zip(ordered, ordered[1:])]
    gaps.append(ordered[0] + 1 - ordered[-1])
    return max(gaps)


class PhaseRegion(Region):
    """
    Finite union of points and open arcs, plus optionally zero.
    An arc (start, length) is the open set of turns start + t for 0 < t < length;
    length 1 is the circle minus one point.
    """

    def __init__(self, tract: "PhaseHyperfield", points: Iterable[Fraction] = (),
                 arcs: Iterable[Tuple[Fraction, Fraction]] = (), zero: bool = False, full: bool = False):
        self.tract = tract
        self.points = frozenset(points)
        self.arcs = frozenset((turn(s), Fraction(l)) for s, l in arcs)
        self.zero = zero
        self.full = full

    def contains(self, z: TractValue) -> bool:
        if z.is_zero:
            return self.zero
        if self.full or z.payload in self.points:
            return True
        return any(0 < (z.payload - s) % 1 < l for s, l in self.arcs)

    def is_singleton(self) -> bool:
        if self.full or self.arcs:
            return False
        return len(self.points) + (1 if self.zero else 0) == 1

    def _nonempty_nonzero(self) -> bool:
        return self.full or bool(self.points) or bool(self.arcs)

    def mul(self, other: Region) -> Region:
        assert isinstance(other, PhaseRegion)
        zero = (self.zero and (other.zero or other._nonempty_nonzero())) or (other.zero and self._nonempty_nonzero())
        if (self.full and other._nonempty_nonzero()) or (other.full and self._nonempty_nonzero()):
            return PhaseRegion(self.tract, zero=zero, full=True)
        points = [turn(p + q) for p in self.points for q in other.points]
        arcs = [(s + p, l) for p in self.points for s, l in other.arcs]
        arcs += [(s + p, l) for p in other.points for s, l in self.arcs]
        for s1, l1 in self.arcs:
            for s2, l2 in other.arcs:
                if l1 + l2 > 1:
                    return PhaseRegion(self.tract, zero=zero, full=True)
                arcs.append((s1 + s2, l1 + l2))
        return PhaseRegion(self.tract, points, arcs, zero)

    def critical_points(self) -> List[TractValue]:
        marks = set(self.points)
        for s, l in self.arcs:
            marks.add(s)
            marks.add(turn(s + l))
        values = [TractValue(self.tract, m) for m in sorted(marks)]
        if self.zero:
            values.append(self.tract.zero)
        return values

    def __repr__(self) -> str:
        parts = ["0"] if self.zero else []
        if self.full:
            parts.append("S1")
        parts += [f"ph:{p}" for p in sorted(self.points)]
        parts += [f"arc(ph:{s}, +{l})" for s, l in sorted(self.arcs)]
        return "{" + ", ".join(parts) + "}"


class PhaseHyperfield(Tract):
    """
    ℙ restricted to rational turns; payload q ∈ [0, 1) stands for e^{2πiq}.
    A formal sum is null iff its unit vectors admit a strictly positive
    combination equal to zero.
    """
    kind = "phase"
    involution = "conjugation"

    def _one(self):
        return Fraction(0)

    def _epsilon(self):
        return HALF

    def _mul(self, p, q):
        return (p + q) % 1

    def _inv(self, p):
        return (-p) % 1

    def _conj(self, p):
        return (-p) % 1

    def _is_null(self, payloads: List[Fraction]) -> bool:
        directions = set(payloads)
        if len(directions) == 1:
            return False
        if len(directions) == 2:
            a, b = directions
            return (a - b) % 1 == HALF
        return max_gap(list(directions)) < HALF

    def _format(self, p: Fraction) -> str:
        return f"ph:{p.numerator}" if p.denominator == 1 else f"ph:{p.numerator}/{p.denominator}"

    def _parse(self, text: str):
        if text == "1":
            return Fraction(0)
        if text in ("-1", "−1"):
            return HALF
        match = _PHASE.match(text)
        if not match:
            raise ParseError(f"invalid phase value {text!r}; expected ph:p/q")
        q = Fraction(int(match.group(1)), int(match.group(2) or 1))
        if q >= 1:
            raise ParseError(f"phase {text!r} is outside [0, 1)")
        return q

    def binary_sum(self, x: TractValue, y: TractValue) -> Region:
        if x.is_zero and y.is_zero:
            return PhaseRegion(self, zero=True)
        if x.is_zero or y.is_zero:
            return PhaseRegion(self, [(y if x.is_zero else x).payload])
        if x == y:
            return PhaseRegion(self, [x.payload])
        d = (y.payload - x.payload) % 1
        if d == HALF:
            return PhaseRegion(self, [x.payload, y.payload], zero=True)
        if d < HALF:
            return PhaseRegion(self, arcs=[(x.payload, d)])
        return PhaseRegion(self, arcs=[(y.payload, 1 - d)])

    def candidates(self, points: Sequence[TractValue]) -> List[TractValue]:
        marks = {v.payload for v in points if not v.is_zero}
        marks |= {turn(m + HALF) for m in marks}
        if not marks:
            marks = {Fraction(0), HALF}
        ordered = sorted(marks)
        mids = [(a + b) / 2 for a, b in zip(ordered, ordered[1:])]
        mids.append(turn((ordered[-1] + ordered[0] + 1) / 2))
        return [TractValue(self, q) for q in sorted(marks | set(mids))] + [self.zero]

    def _parse_sample_spec(self, spec: str) -> Optional[List[TractValue]]:
        if not spec.startswith("roots:"):
            return None
        try:
            n = int(spec[len("roots:"):])
        except ValueError:
            raise ParseError(f"invalid sample spec {spec!r}", position="--sample")
        return [TractValue(self, q) for q in roots_of_unity(n)]


def roots_of_unity(n: int) -> List[Fraction]:
    """n-th roots of unity as turns k/n, k = 0..n-1"""
    if n < 1:
        raise ParseError(f"roots:{n} needs n >= 1", position="--sample")
    return [Fraction(k, n) for k in range(n)]


PHASE = PhaseHyperfield()

register("phase")(lambda descriptor: PHASE)
