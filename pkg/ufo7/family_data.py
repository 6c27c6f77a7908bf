"""Per-family bases of L(lambda) and the action tables of the four eleven-dimensional families.

A basis member is ("m", (a, b, c, d, e)) for m~_{a,b,c,d,e} or ("n", (a, b, c, d, e)) for n~_{a,b,c,d,e}.
"""
from typing import Callable, Dict, FrozenSet, Tuple

from ufo7.algebra import ALL_EXPONENTS
from ufo7.cyclotomic import ONE, qint, zeta

z = zeta

Member = Tuple[str, Tuple[int, int, int, int, int]]


def m_set(pred: Callable[..., bool] = lambda a, b, c, d, e: True) -> FrozenSet[Member]:
    return frozenset(("m", tuple(e)) for e in ALL_EXPONENTS if pred(*e))


def n_set(pred: Callable[..., bool] = lambda a, b, c, d, e: True) -> FrozenSet[Member]:
    return frozenset(("n", tuple(e)) for e in ALL_EXPONENTS if pred(*e))


def m(label: str) -> FrozenSet[Member]:
    return frozenset([("m", tuple(int(x) for x in label))])


def n(label: str) -> FrozenSet[Member]:
    return frozenset([("n", tuple(int(x) for x in label))])


def ms(*labels) -> FrozenSet[Member]:
    return frozenset().union(*(m(label) for label in labels))


def ns(*labels) -> FrozenSet[Member]:
    return frozenset().union(*(n(label) for label in labels))


_B25 = m_set(lambda a, b, c, d, e: d == 0)
_B27 = n_set(lambda a, b, c, d, e: b == 0)
_B31 = n_set(lambda a, b, c, d, e: a <= 1 and b <= 1 and c <= 1)
_B35 = n_set(lambda a, b, c, d, e: b <= 2)

FAMILY_BASES: Dict[int, FrozenSet[Member]] = {
    1: m_set(),
    2: m_set(lambda a, b, c, d, e: e == 0),
    3: m_set(lambda a, b, c, d, e: e <= 1),
    4: m_set(lambda a, b, c, d, e: d == 0),
    5: m_set(lambda a, b, c, d, e: d <= 1),
    6: m_set(lambda a, b, c, d, e: c == 0),
    7: n_set(lambda a, b, c, d, e: b == 0),
    8: n_set(lambda a, b, c, d, e: b <= 1),
    9: n_set(lambda a, b, c, d, e: b <= 2),
    10: n_set(lambda a, b, c, d, e: a == 0),
    11: m_set(lambda a, b, c, d, e: b <= 1 and c == 0 and e == 0) - m("11000"),
    12: m_set(lambda a, b, c, d, e: b <= 1 and c == 0 and d <= 1 and e == 0) | ms("01100", "10110", "00110"),
    13: (
        m_set(lambda a, b, c, d, e: b <= 2 and c == 0 and e == 0)
        | m_set(lambda a, b, c, d, e: b == 0 and c == 1 and d == 0 and e == 0)
        | m_set(lambda a, b, c, d, e: a == 0 and b == 3 and c == 0 and d >= 1 and e == 0)
        | m("13010")
    ),
    14: (m_set(lambda a, b, c, d, e: c == 0 and e == 0) | ms("00100", "00120")) - m("13020"),
    15: m_set(lambda a, b, c, d, e: e == 0)
    - m_set(lambda a, b, c, d, e: c == 1 and b >= 2 and e == 0 and (a, b, d) != (0, 2, 2)),
    16: m_set(lambda a, b, c, d, e: e == 0)
    - (m_set(lambda a, b, c, d, e: b == 3 and d >= 1 and e == 0) | ms("12120", "02120", "12020")),
    17: m_set(lambda a, b, c, d, e: e == 0) - m("13120"),
    # printed as m_{3,0,0,0,1}, which is not a monomial; m_{0,3,0,0,1} is the one of degree (4,3)
    18: (
        m_set(lambda a, b, c, d, e: a <= 1 and b <= 1 and c == 1 and d == 0 and e == 1)
        | m_set(lambda a, b, c, d, e: a == 0 and c == 0 and d == 0 and e <= 1)
        | m("10000")
    )
    - ms("11101", "03001"),
    19: (
        m_set(lambda a, b, c, d, e: a == 0 and c == 0 and e <= 1)
        | m_set(lambda a, b, c, d, e: a == 1 and b <= 1 and c == 0 and d == 0 and e <= 1)
        | m_set(lambda a, b, c, d, e: a == 0 and b >= 1 and c == 1 and d == 0 and e == 0)
        | m_set(lambda a, b, c, d, e: a == 1 and b >= 2 and c == 0 and d == 0 and e == 1)
        | ms("10011", "00110")
    ),
    20: m_set(lambda a, b, c, d, e: e <= 1)
    - (m_set(lambda a, b, c, d, e: a == 1 and c == 1 and e <= 1 and (b, d, e) != (2, 2, 1)) | ms("10021", "13000")),
    21: (
        m_set(lambda a, b, c, d, e: b <= 1 and e <= 1)
        | m_set(lambda a, b, c, d, e: b == 2 and d == 0 and e <= 1)
        | m_set(lambda a, b, c, d, e: a == 1 and b == 3 and c == 0 and d == 0 and e <= 1)
        | ms("03101", "13101", "02010")
    ),
    22: m_set(lambda a, b, c, d, e: d <= 1 and e <= 1)
    - (
        m_set(lambda a, b, c, d, e: c == 1 and d == 0 and e == 0)
        | m("13111")
        | m_set(lambda a, b, c, d, e: b >= 1 and c == 1 and d == 1 and e == 0)
    ),
    23: (
        m_set(lambda a, b, c, d, e: c == 0 and e <= 1)
        | m_set(lambda a, b, c, d, e: b <= 1 and c == 1 and d == 0 and e == 0)
        | ms("02100", "13100")
    )
    - (m_set(lambda a, b, c, d, e: a == 1 and b <= 2 and c == 0 and d == 1 and e <= 1) | m("02020")),
    24: m_set(lambda a, b, c, d, e: e <= 1)
    - (
        m_set(lambda a, b, c, d, e: b == 3 and d == 2 and e <= 1)
        | m_set(lambda a, b, c, d, e: a == 1 and b == 3 and d == 1 and e == 1)
        | m("03111")
    ),
    25: _B25
    - (
        m_set(lambda a, b, c, d, e: a == 0 and b == 3 and c == 0 and d == 0 and e <= 1)
        | m_set(lambda a, b, c, d, e: a == 1 and b == 3 and d == 0)
        | m_set(lambda a, b, c, d, e: a == 1 and b == 2 and c == 1 and d == 0)
    ),
    26: (m_set(lambda a, b, c, d, e: a == 0 and d == 0) | ms("10000", "10002")) - m("03100"),
    27: _B27 - n("00122"),
    28: _B27
    - (
        n_set(lambda a, b, c, d, e: a == 0 and b == 0 and c == 1 and d == 1)
        | n_set(lambda a, b, c, d, e: a == 0 and b == 0 and d == 2)
        | n_set(lambda a, b, c, d, e: a == 1 and b == 0 and c == 1 and d == 2 and e >= 1)
    ),
    29: _B25 - m("13100"),
    30: _B25 - m_set(lambda a, b, c, d, e: a == 1 and b >= 2 and d == 0 and (b, c, e) != (3, 1, 2)),
    31: _B31
    - (
        n_set(lambda a, b, c, d, e: a == 0 and b == 0 and c == 0 and d == 2 and e <= 1)
        | n_set(lambda a, b, c, d, e: a == 0 and b == 0 and c == 1 and d >= 1)
        | n_set(lambda a, b, c, d, e: a == 0 and b == 1 and c == 1 and d == 2)
    ),
    32: _B31 - (n_set(lambda a, b, c, d, e: b <= 1 and c == 1 and d >= 1 and e == 2) | ns("00102", "10102", "10022")),
    33: (m_set(lambda a, b, c, d, e: d <= 1 and b <= 2) | m("13000")) - ms("00100", "12012"),
    34: (
        n_set(lambda a, b, c, d, e: d <= 1 and b <= 2)
        | n_set(lambda a, b, c, d, e: a == 0 and b == 0 and c == 0 and d == 2)
    )
    - (n_set(lambda a, b, c, d, e: a == 0 and b == 0 and c == 1 and d == 0) | n("01110")),
    35: _B35
    - (
        n_set(lambda a, b, c, d, e: a == 0 and b <= 2 and d == 2)
        | ns("12122", "10022")
        | n_set(lambda a, b, c, d, e: a == 1 and b == 0 and c == 1 and d == 2)
    ),
    36: (
        n_set(lambda a, b, c, d, e: a == 0 and c == 0)
        | n_set(lambda a, b, c, d, e: a == 0 and b == 0 and c == 1 and d == 2)
        | n_set(lambda a, b, c, d, e: a == 0 and b == 0 and c == 1 and d == 0)
    )
    - (
        n_set(lambda a, b, c, d, e: a == 0 and b == 1 and c == 0 and d == 1)
        | n_set(lambda a, b, c, d, e: a == 0 and b == 2 and c == 0 and d == 2)
        | n("01002")
    ),
    37: (
        n_set(lambda a, b, c, d, e: a == 0 and c == 0)
        | n("00100")
        | n_set(lambda a, b, c, d, e: a == 0 and b == 3 and c == 1 and d == 0)
    )
    - n_set(lambda a, b, c, d, e: a == 0 and b == 3 and c == 0 and d == 2),
    38: n_set(lambda a, b, c, d, e: a == 0 and b <= 1 and d == 0) - n("01102"),
    39: n_set(lambda a, b, c, d, e: a == 0)
    - (
        n_set(lambda a, b, c, d, e: a == 0 and b == 3 and d == 2)
        | n_set(lambda a, b, c, d, e: a == 0 and b == 2 and c == 1 and d == 2)
        | n_set(lambda a, b, c, d, e: a == 0 and b == 2 and c == 0 and d == 2 and e >= 1)
    ),
    40: (
        n_set(lambda a, b, c, d, e: a == 0 and d == 0)
        | n_set(lambda a, b, c, d, e: a == 0 and b <= 1 and d == 1)
        | n_set(lambda a, b, c, d, e: a == 0 and b == 3 and c == 0 and d == 2 and e <= 1)
    )
    - n_set(lambda a, b, c, d, e: a == 0 and b == 3 and c == 1 and d == 0),
    41: (
        n_set(lambda a, b, c, d, e: a == 0 and b <= 2 and e == 0)
        | n_set(lambda a, b, c, d, e: a == 0 and b <= 1 and e >= 1)
    )
    - (n_set(lambda a, b, c, d, e: a == 0 and b == 1 and d >= 1 and e == 2) | n("00122")),
    42: n_set(lambda a, b, c, d, e: a == 0) - n("03122"),
    43: n_set(lambda a, b, c, d, e: a == 0 and e <= 1)
    - (
        n("02120")
        | n_set(lambda a, b, c, d, e: a == 0 and b >= 1 and e == 1)
        | n_set(lambda a, b, c, d, e: a == 0 and b == 3 and d >= 1 and e == 0)
    ),
    44: (n_set(lambda a, b, c, d, e: a == 0 and c == 0 and e <= 1) | n("00002")) - ns("03011", "03021"),
    45: n_set(lambda a, b, c, d, e: a == 0)
    - (
        n_set(lambda a, b, c, d, e: a == 0 and b >= 1 and d == 2)
        | n_set(lambda a, b, c, d, e: a == 0 and b == 0 and c == 1 and d == 2)
        | ns("00102", "03112")
    ),
    46: (n_set(lambda a, b, c, d, e: a == 0 and d <= 1) | ns("01020", "03120")) - ns("01102", "03001", "01101"),
    47: m("00000"),
}


# Tables of the eleven-dimensional families. Each row maps an operator to zero, a label, or
# (coefficient(q), label). The F columns carry the printed prefactor: the entry is prefactor * F_i w.


class ActionTable:
    def __init__(self, family: int, vectors: Dict[str, Member], prefactors: Dict[str, str], rows: Dict[str, tuple]):
        self.family = family
        self.vectors = vectors
        self.prefactors = prefactors
        self.rows = rows

    @staticmethod
    def degree(label: str) -> Tuple[int, int]:
        i, j = label[1:].split(",")
        return int(i), int(j)

    def entries(self):
        """(row label, operator, coefficient function or None, target label or None)."""
        for label, row in self.rows.items():
            for op, entry in zip(("E1", "E2", "F1", "F2"), row):
                if entry == 0:
                    yield label, op, None, None
                elif isinstance(entry, str):
                    yield label, op, (lambda q: ONE), entry
                else:
                    yield label, op, entry[0], entry[1]


ACTION_TABLES = {
    11: ActionTable(
        11,
        {
            "v0,0": ("m", (0, 0, 0, 0, 0)),
            "v0,1": ("m", (1, 0, 0, 0, 0)),
            "v1,1": ("m", (0, 1, 0, 0, 0)),
            "v2,1": ("m", (0, 0, 0, 1, 0)),
            "v2,2": ("m", (1, 0, 0, 1, 0)),
            "v3,2": ("m", (0, 1, 0, 1, 0)),
            "v4,2": ("m", (0, 0, 0, 2, 0)),
            "v3,3": ("m", (1, 1, 0, 1, 0)),
            "v4,3": ("m", (1, 0, 0, 2, 0)),
            "v5,3": ("m", (0, 1, 0, 2, 0)),
            "v5,4": ("m", (1, 1, 0, 2, 0)),
        },
        {"F1": "g1^-1", "F2": "g2^-1"},
        {
            "v0,0": (0, "v0,1", 0, 0),
            "v0,1": ("v1,1", 0, 0, (lambda q: z(11) - 1, "v0,0")),
            "v1,1": ("v2,1", 0, (lambda q: q.q12 * (z(1) - 1), "v0,1"), 0),
            "v2,1": (0, "v2,2", (lambda q: q.q12 * z(8) * (1 + z(3)), "v1,1"), 0),
            "v2,2": ("v3,2", 0, 0, (lambda q: q.q21**2 * (1 - z(1)), "v2,1")),
            "v3,2": ("v4,2", "v3,3", (lambda q: q.q12**2 * (z(2) - 1), "v2,2"), 0),
            "v4,2": (0, "v4,3", (lambda q: 2 * q.q12**2 * (z(2) - 1), "v3,2"), 0),
            "v3,3": (
                (lambda q: q.q12 * z(8) * (z(3) - 1) / 2, "v4,3"),
                0,
                0,
                (lambda q: q.q21**3 * (z(2) - 1), "v3,2"),
            ),
            "v4,3": (
                "v5,3",
                0,
                (lambda q: 2 * q.q12**2 * (z(2) - 1), "v3,3"),
                (lambda q: q.q21**4 * (z(3) - 1), "v4,2"),
            ),
            "v5,3": (0, "v5,4", (lambda q: q.q12**3 * z(8) * (1 - z(11)), "v4,3"), 0),
            "v5,4": (0, 0, 0, (lambda q: q.q21**5 * (z(11) + 1), "v5,3")),
        },
    ),
    12: ActionTable(
        12,
        {
            "v0,0": ("m", (0, 0, 0, 0, 0)),
            "v0,1": ("m", (1, 0, 0, 0, 0)),
            "v1,1": ("m", (0, 1, 0, 0, 0)),
            "v2,1": ("m", (0, 0, 0, 1, 0)),
            "v2,2": ("m", (1, 0, 0, 1, 0)),
            "v1,2": ("m", (1, 1, 0, 0, 0)),
            "v3,2": ("m", (0, 1, 0, 1, 0)),
            "v3,3": ("m", (1, 1, 0, 1, 0)),
            "v4,3": ("m", (0, 1, 1, 0, 0)),
            "v5,3": ("m", (0, 0, 1, 1, 0)),
            "v5,4": ("m", (1, 0, 1, 1, 0)),
        },
        {"F1": "g1^-1", "F2": "g2^-1"},
        {
            "v0,0": (0, "v0,1", 0, 0),
            "v0,1": ("v1,1", 0, 0, (lambda q: z(10) + 1, "v0,0")),
            "v1,1": ("v2,1", "v1,2", (lambda q: q.q12 * (z(1) - 1), "v0,1"), 0),
            "v2,1": (0, "v2,2", (lambda q: q.q12 * z(8) * (1 + z(3)), "v1,1"), 0),
            "v1,2": (
                (lambda q: z(11) * (1 + z(3)) * q.q12, "v2,2"),
                0,
                0,
                (lambda q: q.q21 * (1 + z(3)) * z(4), "v1,1"),
            ),
            "v2,2": (
                "v3,2",
                0,
                (lambda q: q.q12 * (z(3) + 1) * z(8), "v1,2"),
                (lambda q: -q.q21**2, "v2,1"),
            ),
            "v3,2": (0, "v3,3", (lambda q: q.q12**2 * z(10), "v2,2"), 0),
            "v3,3": (0, 0, 0, (lambda q: q.q21**3 * z(3) * (1 - z(1)), "v3,2")),
            "v4,3": ((lambda q: z(9) * q.q12, "v5,3"), 0, (lambda q: q.q12**4 * z(1) * qint(3, z(11)), "v3,3"), 0),
            "v5,3": (0, "v5,4", (lambda q: -q.q12**2 * (1 + z(3)), "v4,3"), 0),
            "v5,4": (0, 0, 0, (lambda q: q.q21**5 * (1 - z(1)) * z(4), "v5,3")),
        },
    ),
    18: ActionTable(
        18,
        {
            "v0,0": ("m", (0, 0, 0, 0, 0)),
            "v1,0": ("m", (0, 0, 0, 0, 1)),
            "v0,1": ("m", (1, 0, 0, 0, 0)),
            "v1,1": ("m", (0, 1, 0, 0, 0)),
            "v2,1": ("m", (0, 1, 0, 0, 1)),
            "v2,2": ("m", (0, 2, 0, 0, 0)),
            "v3,2": ("m", (0, 2, 0, 0, 1)),
            "v4,2": ("m", (0, 0, 1, 0, 1)),
            "v3,3": ("m", (0, 3, 0, 0, 0)),
            "v4,3": ("m", (1, 0, 1, 0, 1)),
            "v5,3": ("m", (0, 1, 1, 0, 1)),
        },
        {"F1": "s1", "F2": "g2^-1"},
        {
            "v0,0": ("v1,0", "v0,1", 0, 0),
            "v1,0": (0, (lambda q: q.q21 * z(9) * qint(4, z(1)), "v1,1"), (lambda q: 1 + z(2), "v0,0"), 0),
            "v0,1": ((lambda q: z(8) * qint(4, z(1)), "v1,1"), 0, 0, (lambda q: z(7) - 1, "v0,0")),
            "v1,1": (
                (lambda q: q.q12 * z(4) * qint(4, z(7)) / 3, "v2,1"),
                0,
                (lambda q: q.q12 * (z(1) - 1), "v0,1"),
                (lambda q: z(11) - 1, "v1,0"),
            ),
            "v2,1": (0, (lambda q: q.q21**2 * z(10) * qint(4, z(1)), "v2,2"), (lambda q: 1 - z(4), "v1,1"), 0),
            "v2,2": (
                (lambda q: 1 - z(4), "v3,2"),
                0,
                0,
                (lambda q: -(1 + z(2)) * qint(3, z(7)) / 3, "v2,1"),
            ),
            "v3,2": (
                "v4,2",
                (lambda q: q.q12 * z(10) * qint(4, z(1)), "v3,3"),
                (lambda q: z(10) * qint(4, z(1)), "v2,2"),
                0,
            ),
            "v4,2": (0, "v4,3", (lambda q: q.q12**2 * z(1) * (z(1) + 1), "v3,2"), 0),
            "v3,3": (
                (lambda q: q.q12**4 * z(7) * qint(4, z(1)) / 3, "v4,3"),
                0,
                0,
                (lambda q: (z(8) - 1) / 3, "v3,2"),
            ),
            "v4,3": (
                "v5,3",
                0,
                (lambda q: q.q12**3 * (z(11) + 1) * qint(4, z(1)) ** 2, "v3,3"),
                (lambda q: q.q21**4 * (z(11) - 1), "v4,2"),
            ),
            "v5,3": (0, 0, (lambda q: q.q12**3 * z(4), "v4,3"), 0),
        },
    ),
    38: ActionTable(
        38,
        {
            "v0,0": ("n", (0, 0, 0, 0, 0)),
            "v1,1": ("n", (0, 1, 0, 0, 0)),
            "v3,2": ("n", (0, 0, 1, 0, 0)),
            "v4,3": ("n", (0, 1, 1, 0, 0)),
            "v1,0": ("n", (0, 0, 0, 0, 1)),
            "v2,1": ("n", (0, 1, 0, 0, 1)),
            "v4,2": ("n", (0, 0, 1, 0, 1)),
            "v5,3": ("n", (0, 1, 1, 0, 1)),
            "v2,0": ("n", (0, 0, 0, 0, 2)),
            "v3,1": ("n", (0, 1, 0, 0, 2)),
            "v5,2": ("n", (0, 0, 1, 0, 2)),
        },
        {"F1": "g1^-1", "F2": "g2^-1"},
        {
            "v0,0": ("v1,0", 0, 0, 0),
            "v1,0": ("v2,0", (lambda q: z(7) * q.q21, "v1,1"), (lambda q: 1 - z(3), "v0,0"), 0),
            "v2,0": (0, (lambda q: z(8) * q.q21**2 * (1 + z(3)), "v2,1"), (lambda q: z(7) * (1 + z(1)), "v1,0"), 0),
            "v1,1": ("v2,1", 0, 0, (lambda q: z(11) - 1, "v1,0")),
            "v2,1": ("v3,1", 0, (lambda q: q.q12 * z(8), "v1,1"), (lambda q: z(11) - 1, "v2,0")),
            "v3,1": (0, (lambda q: q.q21**2 * z(1), "v3,2"), (lambda q: q.q12 * z(2), "v2,1"), 0),
            # printed target v4,3 has the wrong degree for E1 from (3,2)
            "v3,2": ("v4,3", 0, 0, (lambda q: q.q21 * z(11) * (1 - z(3)), "v3,1")),
            "v4,2": (
                "v5,2",
                (lambda q: q.q21**2 * z(10), "v4,3"),
                (lambda q: q.q12**2 * (z(11) - 1), "v3,2"),
                0,
            ),
            "v5,2": (
                0,
                (lambda q: q.q21**3 * qint(3, z(1)), "v5,3"),
                (lambda q: q.q12**2 * z(8) * (1 + z(1)), "v4,2"),
                0,
            ),
            "v4,3": ("v5,3", 0, 0, (lambda q: q.q21**2 * z(10) * qint(3, z(11)), "v4,2")),
            "v5,3": (
                0,
                0,
                (lambda q: q.q12**3 * z(8) * (1 + z(2)), "v4,3"),
                (lambda q: q.q21**2 * z(10) * qint(3, z(11)), "v5,2"),
            ),
        },
    ),
}


# Printed entries that disagree with the action on L(lambda), with the value the action gives.
# (row, operator) -> (coefficient(q), label), same layout and prefactors as the table rows.
CORRECTED_ENTRIES: Dict[int, Dict[Tuple[str, str], tuple]] = {
    11: {
        ("v5,4", "F2"): (lambda q: q.q21**5 * (2 + z(8)), "v5,3"),
    },
    12: {
        ("v0,1", "F2"): (lambda q: z(8) - 1, "v0,0"),
        ("v1,2", "F2"): (lambda q: q.q21 * (1 + z(3)), "v1,1"),
        ("v2,2", "F2"): (lambda q: q.q21**2 * z(2), "v2,1"),
        ("v3,3", "E1"): (lambda q: q.q21 * z(4), "v4,3"),
        ("v3,3", "F2"): (lambda q: q.q21**3 * z(5) * (z(1) - 1), "v3,2"),
        ("v4,3", "F1"): (lambda q: q.q12**4 * (1 + z(3)), "v3,3"),
        ("v5,3", "F1"): (lambda q: q.q12**2 * z(4) * (1 - z(1)), "v4,3"),
        ("v5,4", "F2"): (lambda q: q.q21**5 * (1 - z(1)), "v5,3"),
    },
    18: {
        ("v0,1", "E1"): (lambda q: 2 + z(1) - 2 * z(2) - 2 * z(3), "v1,1"),
        ("v2,1", "E2"): (lambda q: q.q21**2 * (1 + z(1)) * (z(2) - 2), "v2,2"),
        ("v2,2", "E1"): (lambda q: q.q12**2 * (1 - z(1)) * (2 - z(2)) / 3, "v3,2"),
        ("v3,2", "E2"): (lambda q: q.q21**3 * ((1 + z(1)) ** 2 - z(3)), "v3,3"),
        ("v3,3", "E1"): (lambda q: q.q12**4 * (2 * z(2) - 1) / 3, "v4,3"),
        ("v3,3", "F2"): (lambda q: (z(1) + z(2) - 2 - 2 * z(3)) / 3, "v3,2"),
        ("v4,2", "F1"): (lambda q: q.q12**2 * z(2), "v3,2"),
        ("v4,3", "F1"): (lambda q: q.q21 * ((1 + z(1)) ** 2 - z(3)), "v3,3"),
        ("v5,3", "F1"): (lambda q: q.q12**3 * z(1) * (1 + z(3)), "v4,3"),
    },
    38: {
        ("v1,0", "F1"): (lambda q: z(9) - 1, "v0,0"),
        ("v2,0", "E2"): (lambda q: -q.q21**2 * z(1) * (1 + z(1)), "v2,1"),
        ("v3,2", "E1"): (lambda q: ONE, "v4,2"),
        ("v4,3", "F2"): (lambda q: q.q21**2 * (z(8) - 1), "v4,2"),
        ("v5,2", "E2"): (lambda q: q.q21**3 * (2 + z(1) - z(2) - 2 * z(3)) / 3, "v5,3"),
        ("v5,3", "F2"): (lambda q: q.q21**2 * (z(8) - 1), "v5,2"),
    },
}
