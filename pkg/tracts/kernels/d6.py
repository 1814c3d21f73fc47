"""
Dihedral Hyperfield
The dihedral group of order 6 with x ⊞ x = F and x ⊞ y = F∖{0} for x ≠ y
"""
import re
from typing import List, Tuple

from errors import ParseError
from tracts.core import Tract, register

_WORD = re.compile(r"^(r2|r)?(s)?$")


class DihedralHyperfield(Tract):
    """
    Payload (i, j) is the word r^i s^j with s r s = r^-1.
    Every element is its own negative, so a two-term sum is null iff the terms agree
    and any longer sum is null.
    """
    kind = "d6"

    def _one(self):
        return (0, 0)

    def _epsilon(self):
        return (0, 0)

    def _mul(self, p: Tuple[int, int], q: Tuple[int, int]):
        i, j = p
        k, l = q
        return ((i + (-k if j else k)) % 3, (j + l) % 2)

    def _inv(self, p):
        i, j = p
        return p if j else ((-i) % 3, 0)

    def _is_null(self, payloads: List[Tuple[int, int]]) -> bool:
        if len(payloads) == 1:
            return False
        if len(payloads) == 2:
            return payloads[0] == payloads[1]
        return True

    def _format(self, p) -> str:
        i, j = p
        if (i, j) == (0, 0):
            return "1"
        return ("" if i == 0 else "r" if i == 1 else "r2") + ("s" if j else "")

    def _parse(self, text: str):
        if text == "1":
            return (0, 0)
        match = _WORD.match(text)
        if not match or not text:
            raise ParseError(f"invalid D6 word {text!r}")
        i = {None: 0, "r": 1, "r2": 2}[match.group(1)]
        return (i, 1 if match.group(2) else 0)

    def _carrier(self):
        return [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)]


D6 = DihedralHyperfield()

register("d6")(lambda descriptor: D6)
