"""
Sign and Krasner Hyperfields
The hyperfields 𝕊 = {0, 1, -1} and 𝕂 = {0, 1}
"""
from typing import List

from errors import ParseError
from tracts.core import Tract, register


class SignHyperfield(Tract):
    """Oriented matroids: x ⊞ x = {x}, 1 ⊞ -1 = 𝕊"""
    kind = "sign"

    def _one(self):
        return 1

    def _epsilon(self):
        return -1

    def _mul(self, p, q):
        return p * q

    def _inv(self, p):
        return p

    def _is_null(self, payloads: List[int]) -> bool:
        return 1 in payloads and -1 in payloads

    def _format(self, p) -> str:
        return str(p)

    def _parse(self, text: str):
        if text in ("1", "+1", "+"):
            return 1
        if text in ("-1", "−1", "-"):
            return -1
        raise ParseError(f"invalid sign value {text!r}")

    def _carrier(self):
        return [1, -1]


class KrasnerHyperfield(Tract):
    """Matroids: 1 ⊞ 1 = {0, 1}"""
    kind = "krasner"

    def _one(self):
        return 1

    def _epsilon(self):
        return 1

    def _mul(self, p, q):
        return 1

    def _inv(self, p):
        return 1

    def _is_null(self, payloads: List[int]) -> bool:
        return len(payloads) != 1

    def _format(self, p) -> str:
        return "1"

    def _parse(self, text: str):
        if text == "1":
            return 1
        raise ParseError(f"invalid Krasner value {text!r}")

    def _carrier(self):
        return [1]


SIGN = SignHyperfield()
KRASNER = KrasnerHyperfield()

register("sign")(lambda descriptor: SIGN)
register("krasner")(lambda descriptor: KRASNER)
