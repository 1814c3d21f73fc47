"""
Tract Properties
Stringency, double distributivity and the Pathetic Cancellation family, checked over finite samples
"""
import logging
from typing import Iterator, List, Optional, Sequence, Tuple

from models import PropertyVerdict
from tracts.core import Tract, TractValue, hypersum_contains, is_null

logger = logging.getLogger(__name__)

Quintuple = Tuple[TractValue, TractValue, TractValue, TractValue, TractValue]


def _resolve(t: Tract, sample: Optional[Sequence[TractValue]], spec: Optional[str]) -> List[TractValue]:
    if sample is None:
        return t.sample(spec)
    return [v for v in sample if not v.is_zero]


def _verdict(check: str, t: Tract, values: List[TractValue], spec: Optional[str],
             witness: Optional[Tuple] = None, clause: Optional[str] = None) -> PropertyVerdict:
    return PropertyVerdict(
        check=check,
        tract=t.name,
        holds=witness is None,
        witness=witness,
        clause=clause,
        sample_size=len(values),
        sample=spec,
    )


def check_stringent(t: Tract, sample: Optional[Sequence[TractValue]] = None, spec: Optional[str] = None) -> PropertyVerdict:
    """a ⊞ b is a singleton whenever a ≠ -b"""
    values = _resolve(t, sample, spec)
    for a in values:
        for b in values:
            if b == -a:
                continue
            if not t.binary_sum(a, b).is_singleton():
                return _verdict("stringent", t, values, spec, (a, b))
    return _verdict("stringent", t, values, spec)


def pathetic_violations(t: Tract, sample: Optional[Sequence[TractValue]] = None, spec: Optional[str] = None) -> Iterator[Quintuple]:
    """
    Every quintuple (a, b, x, y, z) of the sample meeting the four null-sum and
    four commutation hypotheses with xb - ay - z not null, in lexicographic
    sample order.
    """
    values = _resolve(t, sample, spec)
    one = t.one
    xs = {a: [x for x in values if is_null([one, a, -x]) and a * x == x * a] for a in values}
    ys = {b: [y for y in values if is_null([-one, b, -y]) and b * y == y * b] for b in values}
    for a in values:
        if not xs[a]:
            continue
        for b in values:
            if not ys[b]:
                continue
            zs = [z for z in values
                  if is_null([a, b, -z]) and a.inv() * z * b.inv() == b.inv() * z * a.inv()]
            if not zs:
                continue
            for x in xs[a]:
                for y in ys[b]:
                    for z in zs:
                        if not is_null([x, y, -z]):
                            continue
                        if x.inv() * z * y.inv() != y.inv() * z * x.inv():
                            continue
                        if not is_null([x * b, -(a * y), -z]):
                            yield (a, b, x, y, z)


def check_pathetic_cancellation(t: Tract, sample: Optional[Sequence[TractValue]] = None, spec: Optional[str] = None) -> PropertyVerdict:
    values = _resolve(t, sample, spec)
    logger.info("pathetic cancellation over %s with %d sample values", t.name, len(values))
    witness = next(pathetic_violations(t, values), None)
    return _verdict("pathetic-cancellation", t, values, spec, witness)


def _strong_pc_configurations(t: Tract, values: List[TractValue]):
    one = t.one
    ys = {b: [y for y in values if hypersum_contains([-one, b], y)] for b in values}
    for a in values:
        xs = [x for x in values if hypersum_contains([one, a], x)]
        for b in values:
            for x in xs:
                for y in ys[b]:
                    yield a, b, x, y


def _strong_pc_regions(t: Tract, a, b, x, y):
    xy = t.binary_sum(x, y)
    ab = t.binary_sum(a, b)
    w = t.binary_sum(x * b, -(a * y))
    points = xy.critical_points() + ab.critical_points() + w.critical_points()
    return xy, ab, w, t.candidates(points)


def check_intersection_equalities(t: Tract, sample: Optional[Sequence[TractValue]] = None, spec: Optional[str] = None) -> PropertyVerdict:
    """(x⊞y)∩(a⊞b) = (x⊞y)∩(xb⊞-ay) = (a⊞b)∩(xb⊞-ay) for x ∈ 1⊞a, y ∈ -1⊞b"""
    values = _resolve(t, sample, spec)
    for a, b, x, y in _strong_pc_configurations(t, values):
        xy, ab, w, candidates = _strong_pc_regions(t, a, b, x, y)
        for z in candidates:
            in_xy, in_ab, in_w = xy.contains(z), ab.contains(z), w.contains(z)
            if not ((in_xy and in_ab) == (in_xy and in_w) == (in_ab and in_w)):
                return _verdict("intersection-equalities", t, values, spec, (a, b, x, y, z))
    return _verdict("intersection-equalities", t, values, spec)


def check_pp_multi(t: Tract, sample: Optional[Sequence[TractValue]] = None, spec: Optional[str] = None) -> PropertyVerdict:
    """1 ⊞ -1 ⊞ 1 ⊞ -1 = 1 ⊞ -1, decided by membership"""
    values = _resolve(t, sample, spec)
    one = t.one
    pair = t.binary_sum(one, -one)
    for z in t.candidates(pair.critical_points() + values) + values:
        if hypersum_contains([one, -one, one, -one], z) != pair.contains(z):
            return _verdict("pp-multi", t, values, spec, (z,))
    return _verdict("pp-multi", t, values, spec)


def check_strong_pc(t: Tract, sample: Optional[Sequence[TractValue]] = None, spec: Optional[str] = None) -> PropertyVerdict:
    """
    (x⊞y) ∩ (a⊞b) ⊆ xb ⊞ -ay for every sampled a, b and x ∈ 1⊞a, y ∈ -1⊞b.
    The intersection equalities and the 1⊞-1 identity are checked after the
    inclusion; the clause of the first failure is named in the verdict.
    """
    values = _resolve(t, sample, spec)
    logger.info("strong pathetic cancellation over %s with %d sample values", t.name, len(values))
    for a, b, x, y in _strong_pc_configurations(t, values):
        xy, ab, w, candidates = _strong_pc_regions(t, a, b, x, y)
        for z in candidates:
            if xy.contains(z) and ab.contains(z) and not w.contains(z):
                return _verdict("strong-pc", t, values, spec, (a, b, x, y, z), clause="inclusion")
    equalities = check_intersection_equalities(t, values)
    if not equalities.holds:
        return _verdict("strong-pc", t, values, spec, equalities.witness, clause="intersection-equalities")
    multi = check_pp_multi(t, values)
    if not multi.holds:
        return _verdict("strong-pc", t, values, spec, multi.witness, clause="pp-multi")
    return _verdict("strong-pc", t, values, spec)


def check_doubly_distributive(t: Tract, sample: Optional[Sequence[TractValue]] = None, spec: Optional[str] = None) -> PropertyVerdict:
    """(a⊞b)(c⊞d) = ac ⊞ ad ⊞ bc ⊞ bd on every sampled quadruple"""
    values = _resolve(t, sample, spec)
    for a in values:
        for b in values:
            left_factor = t.binary_sum(a, b)
            for c in values:
                for d in values:
                    product = left_factor.mul(t.binary_sum(c, d))
                    terms = [a * c, a * d, b * c, b * d]
                    extra = terms + [-v for v in terms]
                    for z in t.candidates(product.critical_points() + extra):
                        if product.contains(z) != hypersum_contains(terms, z):
                            return _verdict("doubly-distributive", t, values, spec, (a, b, c, d))
    return _verdict("doubly-distributive", t, values, spec)


PROPERTY_CHECKS = {
    "stringent": check_stringent,
    "pathetic-cancellation": check_pathetic_cancellation,
    "strong-pc": check_strong_pc,
    "doubly-distributive": check_doubly_distributive,
    "pp-multi": check_pp_multi,
}
