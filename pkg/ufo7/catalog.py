"""Relation catalogs of the double, as data.

Each identity reads `lhs = sum of coeff(q) * word`; words are space separated tokens in the letters
E1 E2 E12 E112 E11212, their F counterparts and the group elements g1 g2 s1 s2, each with an optional
integer power (`E12^2`, `s1^-1`). Operators compose left to right like written products.
"""
import re
from dataclasses import dataclass
from typing import Callable, List, Tuple

from ufo7.cyclotomic import ONE, CycNum, qint, zeta

z = zeta

Coefficient = Callable[["BraidingData"], CycNum]  # noqa: F821

_TOKEN = re.compile(r"^(E1|E2|E12|E112|E11212|F1|F2|F12|F112|F11212|g1|g2|s1|s2)(?:\^(-?\d+))?$")


def parse_word(text: str) -> List[Tuple[str, int]]:
    out = []
    for token in text.split():
        match = _TOKEN.match(token)
        if match is None:
            raise ValueError(f"Unknown token {token!r} in word {text!r}.")
        name, power = match.group(1), int(match.group(2) or 1)
        if power < 0 and name[0] in "EF":
            raise ValueError(f"Negative power of {name} in word {text!r}.")
        out.append((name, power))
    return out


def _one(q):
    return ONE


def _neg(q):
    return -ONE


@dataclass(frozen=True)
class Identity:
    lhs: str
    rhs: Tuple[Tuple[Coefficient, str], ...]
    group: str
    text: str = "0"
    trusted: bool = False
    note: str = ""

    @property
    def label(self) -> str:
        return f"{self.lhs} = {self.text}"

    def transposed(self) -> "Identity":
        """The same identity with E and F exchanged and q12 replaced by q21."""

        def swap(word):
            return " ".join(("F" + t[1:]) if t.startswith("E") else t for t in word.split())

        def dual(coeff):
            return lambda q: coeff(q.transposed())

        return Identity(
            swap(self.lhs),
            tuple((dual(c), swap(w)) for c, w in self.rhs),
            "F-analogue",
            swap(self.text).replace("q12", "q21"),
        )


@dataclass
class IdentityCheck:
    name: str
    group: str
    passed: bool
    residual: int = 0
    trusted: bool = False
    lhs: str = ""
    rhs: str = ""
    note: str = ""


DEFINING_E = [
    Identity("E1^3", (), "defining", trusted=True),
    Identity("E2^2", (), "defining", trusted=True),
    Identity(
        "E11212 E12", ((lambda q: q.q12 * z(10), "E12 E11212"),), "defining", "q12 z^10 E12 E11212", trusted=True
    ),
    Identity("E112^3", (), "defining", trusted=True),
    Identity("E11212^2", (), "defining", trusted=True),
    Identity("E12^4", (), "defining", trusted=True),
]

DEFINING_F = [
    Identity("F1^3", (), "defining", trusted=True, note="printed as F1^2 = 0"),
    Identity("F2^2", (), "defining", trusted=True),
    Identity("F11212 F12", ((lambda q: q.q21 * z(4), "F12 F11212"),), "defining", "q21 z^4 F12 F11212"),
    Identity("F112^3", (), "defining", trusted=True),
    Identity("F11212^2", (), "defining", trusted=True),
    Identity("F12^4", (), "defining", trusted=True),
]

# E_k F_i - F_i E_k = delta_ik (g_i - s_i^-1)
EF_RELATIONS = [
    Identity("E1 F1", ((_one, "F1 E1"), (_one, "g1"), (_neg, "s1^-1")), "EF", "F1 E1 + g1 - s1^-1", trusted=True),
    Identity("E2 F2", ((_one, "F2 E2"), (_one, "g2"), (_neg, "s2^-1")), "EF", "F2 E2 + g2 - s2^-1", trusted=True),
    Identity("E1 F2", ((_one, "F2 E1"),), "EF", "F2 E1", trusted=True),
    Identity("E2 F1", ((_one, "F1 E2"),), "EF", "F1 E2", trusted=True),
]

E_STRAIGHTENING = [
    Identity("E1 E112", ((lambda q: q.q12 * z(8), "E112 E1"),), "E-catalog", "q12 z^8 E112 E1"),
    Identity(
        "E112 E2",
        ((lambda q: -q.q12**2, "E2 E112"), (lambda q: q.q12 * z(8), "E12^2")),
        "E-catalog",
        "-q12^2 E2 E112 + q12 z^8 E12^2",
    ),
    Identity(
        "E1 E11212",
        ((lambda q: q.q12**2, "E11212 E1"), (lambda q: q.q12 * z(7) * (1 + z(1)), "E112^2")),
        "E-catalog",
        "q12^2 E11212 E1 + q12 z^7 (1+z) E112^2",
    ),
    Identity(
        "E1 E12^2",
        (
            (_one, "E11212"),
            (lambda q: q.q12 * z(1) * (1 + z(3)), "E12 E112"),
            (lambda q: q.q12**2 * z(8), "E12^2 E1"),
        ),
        "E-catalog",
        "E11212 + q12 z (1+z^3) E12 E112 + q12^2 z^8 E12^2 E1",
    ),
    Identity(
        "E1 E12^3",
        (
            (lambda q: q.q12 * z(10), "E12 E11212"),
            (lambda q: q.q12**2 * z(5), "E12^2 E112"),
            (lambda q: q.q12**3, "E12^3 E1"),
        ),
        "E-catalog",
        "q12 z^10 E12 E11212 + q12^2 z^5 E12^2 E112 + q12^3 E12^3 E1",
        note="holds with q12 z on E12 E11212",
    ),
    Identity(
        "E1^2 E2",
        ((_one, "E112"), (lambda q: q.q12**2 * z(2), "E12 E1"), (lambda q: q.q12**2, "E2 E1^2")),
        "E-catalog",
        "E112 + q12^2 z^2 E12 E1 + q12^2 E2 E1^2",
        note="holds for q12 != 1 with q12 z^2 on E12 E1",
    ),
    Identity(
        "E1^2 E12",
        ((lambda q: -q.q12**2, "E112 E1"), (lambda q: q.q12**2 * z(8), "E12 E1^2")),
        "E-catalog",
        "-q12^2 E112 E1 + q12^2 z^8 E12 E1^2",
        note="holds for q12 != 1 with -q12 on E112 E1",
    ),
    Identity(
        "E112 E12^2",
        ((lambda q: -q.q12 * z(4) * (1 + z(3)), "E12 E11212"), (lambda q: q.q12**2 * z(2), "E12^2 E112")),
        "E-catalog",
        "-q12 z^4 (1+z^3) E12 E11212 + q12^2 z^2 E12^2 E112",
    ),
    Identity(
        "E112 E12^3",
        ((lambda q: q.q12**2 * z(11), "E12^2 E11212"), (lambda q: q.q12**3 * z(3), "E12^3 E112")),
        "E-catalog",
        "q12^2 z^11 E12^2 E11212 + q12^3 z^3 E12^3 E112",
    ),
    Identity("E11212 E12", ((lambda q: q.q12 * z(10), "E12 E11212"),), "E-catalog", "q12 z^10 E12 E11212"),
    Identity("E112 E11212", ((lambda q: q.q12 * z(9), "E11212 E112"),), "E-catalog", "q12 z^9 E11212 E112"),
    Identity(
        "E11212 E2",
        ((lambda q: q.q12**3, "E2 E11212"), (lambda q: q.q12**2 * z(2) * (1 + z(1)), "E12^3")),
        "E-catalog",
        "q12^3 E2 E11212 + q12^2 z^2 (1+z) E12^3",
    ),
    Identity("E12 E2", ((lambda q: -q.q12, "E2 E12"),), "E-catalog", "-q12 E2 E12"),
]

F_STRAIGHTENING = [identity.transposed() for identity in E_STRAIGHTENING]

CROSS_RELATIONS = [
    Identity(
        "F1 E12",
        ((_one, "E12 F1"), (lambda q: q.q12 * (z(1) - 1), "E2 s1^-1")),
        "cross",
        "E12 F1 + q12 (z-1) E2 s1^-1",
    ),
    Identity(
        "F1 E112",
        ((_one, "E112 F1"), (lambda q: q.q12 * z(8) * (1 + z(3)), "E12 s1^-1")),
        "cross",
        "E112 F1 + q12 z^8 (1+z^3) E12 s1^-1",
    ),
    Identity(
        "F1 E11212",
        ((_one, "E11212 F1"), (lambda q: q.q12**2 * (z(5) - 1), "E12^2 s1^-1")),
        "cross",
        "E11212 F1 + q12^2 (z^5-1) E12^2 s1^-1",
    ),
    Identity(
        "F1 E112^2",
        (
            (_one, "E112^2 F1"),
            (lambda q: -q.q12 * (1 + z(3)), "E11212 s1^-1"),
            (lambda q: -q.q12 * (1 + z(3)) * z(4), "E112 E12 s1^-1"),
        ),
        "cross",
        "E112^2 F1 - q12 (1+z^3) (E11212 s1^-1 + z^4 E112 E12 s1^-1)",
    ),
    Identity(
        "F1 E12^2",
        ((_one, "E12^2 F1"), (lambda q: q.q12**2 * qint(3, z(5)), "E2 E12 s1^-1")),
        "cross",
        "E12^2 F1 + q12^2 (3)_{z^5} E2 E12 s1^-1",
    ),
    Identity(
        "F1 E12^3",
        ((_one, "E12^3 F1"), (lambda q: q.q12**3 * z(3) * (z(1) - 1), "E2 E12^2 s1^-1")),
        "cross",
        "E12^3 F1 + q12^3 z^3 (z-1) E2 E12^2 s1^-1",
        note="first term printed as E12^2 F1",
    ),
    Identity("F2 E12", ((_one, "E12 F2"), (lambda q: z(11) - 1, "E1 g2")), "cross", "E12 F2 + (z^11-1) E1 g2"),
    Identity(
        "F2 E112", ((_one, "E112 F2"), (lambda q: -qint(3, z(7)), "E1^2 g2")), "cross", "E112 F2 - (3)_{z^7} E1^2 g2"
    ),
    Identity("F2 E11212", ((_one, "E11212 F2"), (_neg, "E112 E1 g2")), "cross", "E11212 F2 - E112 E1 g2"),
    Identity(
        "F2 E12^2",
        (
            (_one, "E12^2 F2"),
            (lambda q: q.q21 * (1 + z(5)), "E112 g2"),
            (lambda q: -qint(3, z(7)), "E12 E1 g2"),
        ),
        "cross",
        "E12^2 F2 + q21 (1+z^5) E112 g2 - (3)_{z^7} E12 E1 g2",
    ),
    Identity(
        "F2 E112^2",
        ((_one, "E112^2 F2"), (lambda q: qint(3, z(7)) * z(4), "E112 E1^2 g2")),
        "cross",
        "E112^2 F2 + (3)_{z^7} z^4 E112 E1^2 g2",
    ),
    Identity(
        "F2 E12^3",
        (
            (_one, "E12^3 F2"),
            (lambda q: z(8) * (1 - z(1)), "E12^2 E1 g2"),
            (lambda q: -z(8) * (1 - z(1)) * q.q21 * z(3), "E12 E112 g2"),
            (lambda q: z(8) * (1 - z(1)) * q.q21**2 * z(3), "E11212 g2"),
        ),
        "cross",
        "E12^3 F2 + z^8 (1-z) (E12^2 E1 g2 - q21 z^3 E12 E112 g2 + q21^2 z^3 E11212 g2)",
    ),
    Identity(
        "F11212 E11212",
        ((_one, "E11212 F11212"), (_one, "s1^-3 s2^-2"), (_neg, "g1^3 g2^2")),
        "cross",
        "E11212 F11212 + s1^-3 s2^-2 - g1^3 g2^2",
    ),
    Identity("F12 E2", ((_one, "E2 F12"), (lambda q: 1 - z(11), "F1 s2^-1")), "cross", "E2 F12 + (1-z^11) F1 s2^-1"),
    Identity(
        "F12 E12",
        ((_one, "E12 F12"), (_one, "s1^-1 s2^-1"), (_neg, "g1 g2")),
        "cross",
        "E12 F12 + s1^-1 s2^-1 - g1 g2",
    ),
    Identity(
        "F12 E112",
        ((_one, "E112 F12"), (lambda q: z(3) * qint(3, z(7)), "E1 g1 g2")),
        "cross",
        "E112 F12 + z^3 (3)_{z^7} E1 g1 g2",
    ),
    Identity(
        "F12 E112^2",
        ((_one, "E112^2 F12"), (lambda q: z(11) * qint(3, z(7)), "E112 E1 g1 g2")),
        "cross",
        "E112^2 F12 + z^11 (3)_{z^7} E112 E1 g1 g2",
    ),
    Identity(
        "F12 E1", ((_one, "E1 F12"), (lambda q: q.q21 * (1 - z(1)), "F2 g1")), "cross", "E1 F12 + q21 (1-z) F2 g1"
    ),
    Identity(
        "F12 E11212", ((_one, "E11212 F12"), (lambda q: z(11), "E112 g1 g2")), "cross", "E11212 F12 + z^11 E112 g1 g2"
    ),
    Identity(
        "F112 E112",
        ((_one, "E112 F112"), (_one, "s1^-2 s2^-1"), (_neg, "g1^2 g2")),
        "cross",
        "E112 F112 + s1^-2 s2^-1 - g1^2 g2",
    ),
    Identity("F112 E2", ((_one, "E2 F112"), (lambda q: z(1) - 1, "F1^2 s2^-1")), "cross", "E2 F112 + (z-1) F1^2 s2^-1"),
]

ALL_IDENTITIES = DEFINING_E + DEFINING_F + EF_RELATIONS + E_STRAIGHTENING + F_STRAIGHTENING + CROSS_RELATIONS
