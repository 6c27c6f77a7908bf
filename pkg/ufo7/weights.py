"""Weights of the Verma modules: the five Shapovalov conditions and the 47 families."""
from dataclasses import dataclass, field
from typing import Callable, Dict, List, NamedTuple, Optional, Tuple

import pandas as pd
from transformers.utils import logging

from ufo7.algebra import BraidingData
from ufo7.cyclotomic import ONE, ZETA_POWERS, CycNum, cyc, parse, zeta
from ufo7.utils import Constants

logger = logging.get_logger(__name__)

z = zeta

S1 = (ONE, z(8))
S2 = (-ONE, z(10))
S3 = (z(1), z(4), z(7))

N_FAMILIES = 47


class WeightError(ValueError):
    pass


class ClassificationError(ValueError):
    pass


@dataclass(frozen=True)
class WeightParams:
    """The values lambda(g1), lambda(g2), lambda(s1), lambda(s2) of a character, plus the braiding."""

    lg1: CycNum
    lg2: CycNum
    ls1: CycNum = ONE
    ls2: CycNum = ONE
    q: BraidingData = field(default_factory=BraidingData)

    def __post_init__(self):
        for name in ("lg1", "lg2", "ls1", "ls2"):
            value = cyc(getattr(self, name))
            if not value:
                raise WeightError(f"{name} must be nonzero.")
            object.__setattr__(self, name, value)

    @classmethod
    def from_lambda(cls, l1, l2, q: Optional[BraidingData] = None, ls1=ONE, ls2=ONE) -> "WeightParams":
        l1, l2, ls1, ls2 = cyc(l1), cyc(l2), cyc(ls1), cyc(ls2)
        if not ls1 or not ls2:
            raise WeightError("lambda(s1) and lambda(s2) must be nonzero.")
        return cls(l1 / ls1, l2 / ls2, ls1, ls2, q or BraidingData())

    @property
    def l1(self) -> CycNum:
        return self.lg1 * self.ls1

    @property
    def l2(self) -> CycNum:
        return self.lg2 * self.ls2

    def to_dict(self) -> dict:
        return {
            "lg1": str(self.lg1),
            "lg2": str(self.lg2),
            "ls1": str(self.ls1),
            "ls2": str(self.ls2),
            "q12": str(self.q.q12),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "WeightParams":
        return cls(
            parse(d["lg1"]), parse(d["lg2"]), parse(d["ls1"]), parse(d["ls2"]), BraidingData(parse(d["q12"]))
        )


@dataclass(frozen=True, order=True)
class FamilyId:
    index: int

    def __post_init__(self):
        if not 1 <= self.index <= N_FAMILIES:
            raise WeightError(f"Family index must lie in 1..{N_FAMILIES}, got {self.index}.")

    @property
    def family_class(self) -> int:
        if self.index == 1:
            return 0
        if self.index <= 10:
            return 1
        return 2

    def __int__(self) -> int:
        return self.index

    def __str__(self) -> str:
        return f"I{self.index}"


class Table1Row(NamedTuple):
    family: FamilyId
    dim: int
    max_degree: Tuple[int, int]
    phi_family: FamilyId


def table1_rows() -> List[Table1Row]:
    return [
        Table1Row(
            FamilyId(int(f)),
            int(row["dim"]),
            (int(row["max_b1"]), int(row["max_b2"])),
            FamilyId(int(row["phi"])),
        )
        for f, row in Constants.TABLE1.iterrows()
    ]


def conditions(l1: CycNum, l2: CycNum) -> Tuple[bool, bool, bool, bool, bool]:
    l1, l2 = cyc(l1), cyc(l2)
    return (
        l1 in S1,
        l1**2 * l2 in S2,
        l1**3 * l2**2 == -1,
        l1 * l2 in S3,
        l2 == 1,
    )


# class C1: (condition index, value of the tested quantity) -> family
_CLASS1 = {
    (0, ONE): 2,
    (0, z(8)): 3,
    (1, -ONE): 4,
    (1, z(10)): 5,
    (3, z(1)): 7,
    (3, z(4)): 8,
    (3, z(7)): 9,
}


def _condition_value(index: int, l1: CycNum, l2: CycNum) -> Optional[CycNum]:
    return {0: l1, 1: l1**2 * l2, 3: l1 * l2}.get(index)


def classify(l1: CycNum, l2: CycNum) -> FamilyId:
    l1, l2 = cyc(l1), cyc(l2)
    if not l1 or not l2:
        raise WeightError("lambda1 and lambda2 must be nonzero.")

    satisfied = [i for i, c in enumerate(conditions(l1, l2)) if c]
    if not satisfied:
        return FamilyId(1)

    if len(satisfied) == 1:
        index = satisfied[0]
        if index == 2:
            return FamilyId(6)
        if index == 4:
            return FamilyId(10)
        return FamilyId(_CLASS1[(index, _condition_value(index, l1, l2))])

    if len(satisfied) == 2:
        key = (l1.zeta_log(), l2.zeta_log())
        if key in Constants.POINT_FAMILIES:
            return FamilyId(int(Constants.POINT_FAMILIES[key]))

    raise ClassificationError(f"No family matches ({l1}, {l2}) with conditions {satisfied}.")


def _not_in(x: CycNum, *powers) -> bool:
    return all(x != z(p) for p in powers)


# The point-free descriptions of the class C1 families
SIMPLIFIED_PREDICATES: Dict[int, Callable[[CycNum, CycNum], bool]] = {
    2: lambda l1, l2: l1 == 1 and _not_in(l2, 0, 1, 4, 7, 3, 9, 6, 10),
    3: lambda l1, l2: l1 == z(8) and _not_in(l2, 0, 6, 2, 3, 5, 8, 9, 11),
    4: lambda l1, l2: l1**2 * l2 == -1 and _not_in(l1, 0, 6, 8, 10, 4, 2),
    5: lambda l1, l2: l1**2 * l2 == z(10) and _not_in(l1, 0, 6, 8, 10, 4, 2),
    6: lambda l1, l2: l1**3 * l2**2 == -1 and _not_in(l1, 0, 6, 8, 10, 4, 2),
    7: lambda l1, l2: l1 * l2 == z(1) and _not_in(l1, 0, 8, 1, 4, 9),
    8: lambda l1, l2: l1 * l2 == z(4) and _not_in(l1, 0, 8, 4, 2, 6, 10),
    9: lambda l1, l2: l1 * l2 == z(7) and _not_in(l1, 0, 8, 7, 4, 11),
    10: lambda l1, l2: l1.zeta_log() is None and l2 == 1,
}


def family_predicate(f: int, l1: CycNum, l2: CycNum, simplified: bool = True) -> bool:
    """Whether (l1, l2) satisfies the defining predicate of family f.

    The simplified forms describe class C1 families without listing the excluded points; the raw form
    counts the five conditions.
    """
    f = int(f)
    l1, l2 = cyc(l1), cyc(l2)
    if simplified and f in SIMPLIFIED_PREDICATES:
        return SIMPLIFIED_PREDICATES[f](l1, l2)
    if FamilyId(f).family_class == 2:
        row = Constants.FAMILIES.loc[f]
        return l1 == parse(row["lambda1"]) and l2 == parse(row["lambda2"])
    try:
        return int(classify(l1, l2)) == f
    except ClassificationError:
        return False


def predicate_overlaps(pairs) -> List[dict]:
    """Pairs whose simplified class C1 predicates select families other than the classifier's."""
    out = []
    for l1, l2 in pairs:
        family = int(classify(l1, l2))
        matched = sorted(f for f in SIMPLIFIED_PREDICATES if SIMPLIFIED_PREDICATES[f](cyc(l1), cyc(l2)))
        extra = [f for f in matched if f != family]
        if extra:
            logger.debug(f"({l1}, {l2}) lies in I{family} but also satisfies the predicates of {extra}")
            out.append({"lambda1": str(l1), "lambda2": str(l2), "family": family, "simplified_matches": extra})
    return out


def family_matches(l1: CycNum, l2: CycNum) -> List[int]:
    """Families 2..47 whose defining predicate holds at (l1, l2): simplified forms for class C1, points for C2."""
    return [f for f in range(2, N_FAMILIES + 1) if family_predicate(f, l1, l2)]


def family_counts(pairs) -> Dict[int, int]:
    """How many pairs satisfy each family's defining predicate, with I1 taking the remainder.

    A pair on two predicates is counted in both, and a pair the simplified forms exclude from every family
    falls into the remainder. The Z/12 count table is tallied this way.
    """
    pairs = list(pairs)
    counts = {f: 0 for f in range(1, N_FAMILIES + 1)}
    for l1, l2 in pairs:
        for f in family_matches(l1, l2):
            counts[f] += 1
    counts[1] = len(pairs) - sum(counts.values())
    return counts


def root_pairs() -> List[Tuple[CycNum, CycNum]]:
    return [(a, b) for a in ZETA_POWERS for b in ZETA_POWERS]


def shapovalov(l1: CycNum, l2: CycNum) -> CycNum:
    l1, l2 = cyc(l1), cyc(l2)
    if not l1 or not l2:
        raise WeightError("lambda1 and lambda2 must be nonzero.")
    u1, u2 = l1.inv(), l2.inv()
    factors = [
        z(4) * u1 - z(4),
        z(4) * u1 - z(8),
        z(2) * u1**2 * u2 - z(8),
        z(2) * u1**2 * u2 - z(4),
        u1**3 * u2**2 + 1,
        z(10) * u1 * u2 - z(9),
        z(10) * u1 * u2 + 1,
        z(10) * u1 * u2 - z(3),
        u2 - 1,
    ]
    out = ONE
    for factor in factors:
        out = out * factor
    return out


def representative(f: int) -> WeightParams:
    row = Constants.FAMILIES.loc[int(FamilyId(int(f)))]
    return WeightParams.from_lambda(parse(row["lambda1"]), parse(row["lambda2"]), BraidingData())


def shift(l1: CycNum, l2: CycNum, a: int, b: int) -> Tuple[CycNum, CycNum]:
    """(lambda1, lambda2) of chi1^a chi2^b lambda."""
    return cyc(l1) * z(8 * a + 11 * b), cyc(l2) * z(11 * a)


def corollary_shift(f: int) -> Optional[Tuple[int, int, int]]:
    """(a, b, target family) with N(lambda) = L(chi1^a chi2^b lambda) for a class C1 family."""
    row = Constants.FAMILIES.loc[int(f)]
    if pd.isna(row["shift_a"]):
        return None
    return int(row["shift_a"]), int(row["shift_b"]), int(row["shift_family"])


def z12_character(i: int, j: int) -> WeightParams:
    """The character lambda(g2) = z^i, lambda(chi) = z^j of Z/12 x Z/12, where g1 = g2^8, s1 = chi^11, s2 = chi^6."""
    return WeightParams(z(8 * i), z(i), z(11 * j), z(6 * j), BraidingData(ONE))
