"""
Prime Fields
GF(p) as a tract: N_G is the set of formal sums that vanish mod p
"""
from typing import List

from errors import ParseError, TractDomainError
from tracts.core import Tract, register


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


class PrimeField(Tract):
    kind = "gfp"

    def __init__(self, p: int):
        if not is_prime(p):
            raise TractDomainError(f"GF(p) needs a prime, got {p}")
        self.p = p

    @property
    def key(self):
        return (self.kind, self.p)

    @property
    def name(self) -> str:
        return f"GF({self.p})"

    def _one(self):
        return 1

    def _epsilon(self):
        return self.p - 1

    def _mul(self, a, b):
        return (a * b) % self.p

    def _inv(self, a):
        return pow(a, self.p - 2, self.p)

    def _is_null(self, payloads: List[int]) -> bool:
        return sum(payloads) % self.p == 0

    def _format(self, a) -> str:
        return str(a)

    def _parse(self, text: str):
        try:
            residue = int(text.replace("−", "-")) % self.p
        except ValueError:
            raise ParseError(f"invalid GF({self.p}) value {text!r}")
        if residue == 0:
            raise ParseError(f"{text!r} is zero in GF({self.p}); write 0")
        return residue

    def _carrier(self):
        return list(range(1, self.p))

    def descriptor(self):
        return {"kind": self.kind, "p": self.p}


def _build(descriptor):
    if "p" not in descriptor:
        raise ParseError("gfp descriptor needs p", position="tract.p")
    return PrimeField(int(descriptor["p"]))


register("gfp")(_build)
