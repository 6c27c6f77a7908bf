"""The Verma module M(lambda) on the 144 PBW1 monomials."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, NamedTuple, Optional

import numpy as np
from transformers.utils import logging

from ufo7 import linalg
from ufo7.algebra import (
    ALL_EXPONENTS,
    ALPHA,
    DEGREE_INDEX,
    DEGREES,
    EXPONENT_INDEX,
    ROOT_VECTOR_DEFINITIONS,
    BraidingData,
    Degree,
    PBWExponents,
    add_degree,
    nichols_realization,
    rewrite_system,
    sub_degree,
)
from ufo7.catalog import ALL_IDENTITIES, IdentityCheck, parse_word
from ufo7.cyclotomic import ONE, CycNum, zeta
from ufo7.weights import WeightParams

logger = logging.get_logger(__name__)

GENERATORS = ("g1", "g2", "s1", "s2")
DIM = len(ALL_EXPONENTS)
TOP_INDEX = EXPONENT_INDEX[PBWExponents()]

ModuleVector = np.ndarray


def group_scalar(gen: str, beta: Degree, p: WeightParams) -> CycNum:
    """The scalar by which a group generator acts on M(lambda)_beta."""
    q = p.q
    b1, b2 = beta
    if gen == "g1":
        return p.lg1 * q.q11**b1 * q.q12**b2
    if gen == "g2":
        return p.lg2 * q.q21**b1 * q.q22**b2
    if gen == "s1":
        return p.ls1 * q.q11**b1 * q.q21**b2
    if gen == "s2":
        return p.ls2 * q.q12**b1 * q.q22**b2
    raise ValueError(f"Unknown group generator {gen!r}.")


class GradedOperator:
    """A degree-homogeneous operator on M(lambda), stored as one block per source degree."""

    def __init__(self, shift: Degree, blocks: Optional[Dict[Degree, np.ndarray]] = None):
        self.shift = shift
        self.blocks = {
            deg: block
            for deg, block in (blocks or {}).items()
            if deg in DEGREE_INDEX and add_degree(deg, shift) in DEGREE_INDEX
        }

    @classmethod
    def identity(cls) -> GradedOperator:
        return cls((0, 0), {deg: linalg.identity(len(idx)) for deg, idx in DEGREE_INDEX.items()})

    @classmethod
    def diagonal(cls, scalar: Callable[[Degree], CycNum]) -> GradedOperator:
        return cls((0, 0), {deg: linalg.identity(len(idx)) * scalar(deg) for deg, idx in DEGREE_INDEX.items()})

    def block(self, deg: Degree) -> np.ndarray:
        if deg in self.blocks:
            return self.blocks[deg]
        target = add_degree(deg, self.shift)
        return linalg.zeros(len(DEGREE_INDEX.get(target, [])), len(DEGREE_INDEX.get(deg, [])))

    def __matmul__(self, other: GradedOperator) -> GradedOperator:
        blocks = {}
        for deg, inner in other.blocks.items():
            middle = add_degree(deg, other.shift)
            if middle in self.blocks:
                blocks[deg] = linalg.matmul(self.blocks[middle], inner)
        return GradedOperator(add_degree(self.shift, other.shift), blocks)

    def __add__(self, other: GradedOperator) -> GradedOperator:
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.shift != other.shift:
            raise ValueError(f"Cannot add operators of degrees {self.shift} and {other.shift}.")
        blocks = dict(self.blocks)
        for deg, block in other.blocks.items():
            blocks[deg] = blocks[deg] + block if deg in blocks else block
        return GradedOperator(self.shift, blocks)

    def __neg__(self) -> GradedOperator:
        return GradedOperator(self.shift, {deg: -block for deg, block in self.blocks.items()})

    def __sub__(self, other: GradedOperator) -> GradedOperator:
        return self + (-other)

    def __mul__(self, scalar) -> GradedOperator:
        return GradedOperator(self.shift, {deg: block * scalar for deg, block in self.blocks.items()})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> GradedOperator:
        out = GradedOperator.identity()
        for _ in range(n):
            out = out @ self
        return out

    def nonzero_count(self) -> int:
        return sum(linalg.count_nonzero(block) for block in self.blocks.values())

    def is_zero(self) -> bool:
        return all(linalg.is_zero(block) for block in self.blocks.values())

    def apply(self, vector: ModuleVector) -> ModuleVector:
        out = linalg.zero_vector(DIM)
        for deg, block in self.blocks.items():
            src = DEGREE_INDEX[deg]
            out[DEGREE_INDEX[add_degree(deg, self.shift)]] += linalg.matmul(block, vector[src])
        return out

    def dense(self) -> np.ndarray:
        out = linalg.zeros(DIM, DIM)
        for deg, block in self.blocks.items():
            out[np.ix_(DEGREE_INDEX[add_degree(deg, self.shift)], DEGREE_INDEX[deg])] = block
        return out


@lru_cache(maxsize=None)
def _raising(q: BraidingData, i: int) -> GradedOperator:
    algebra = nichols_realization(q)
    blocks = {}
    for deg in DEGREES:
        target = add_degree(deg, ALPHA[i])
        if target in DEGREE_INDEX:
            change = linalg.matmul(algebra.lmul(i, deg), algebra.pbw_matrix(deg))
            blocks[deg] = linalg.matmul(algebra.pbw_inverse(target), change)
    return GradedOperator(ALPHA[i], blocks)


class VermaModule:
    def __init__(self, params: WeightParams):
        self.params = params
        self.q = params.q
        self.algebra = nichols_realization(params.q)
        self._ops: Dict[str, GradedOperator] = {}

        for i in (1, 2):
            self._ops[f"E{i}"] = _raising(self.q, i)
            self._ops[f"F{i}"] = self._lowering(i)

    def _lowering(self, i: int) -> GradedOperator:
        # F_i(E_k y) = E_k F_i(y) - delta_ik (g_i - s_i^-1)(y), F_i v = 0, on the derivation basis
        algebra = self.algebra
        word_blocks: Dict[Degree, np.ndarray] = {(0, 0): linalg.zeros(0, 1)}

        for deg in DEGREES:
            if deg == (0, 0):
                continue
            target = sub_degree(deg, ALPHA[i])
            block = linalg.zeros(algebra.dim(target), algebra.dim(deg))
            if algebra.dim(target):
                for col, (k, j) in enumerate(algebra.origins[deg]):
                    src = sub_degree(deg, ALPHA[k])
                    below = sub_degree(src, ALPHA[i])
                    column = linalg.zero_vector(algebra.dim(target))
                    if algebra.dim(below):
                        column = column + linalg.matmul(algebra.lmul(k, below), word_blocks[src][:, j])
                    if k == i:
                        scalar = group_scalar(f"g{i}", src, self.params) - group_scalar(f"s{i}", src, self.params).inv()
                        column[j] = column[j] - scalar
                    block[:, col] = column
            word_blocks[deg] = block

        blocks = {}
        for deg in DEGREES:
            target = sub_degree(deg, ALPHA[i])
            if target in DEGREE_INDEX:
                change = linalg.matmul(word_blocks[deg], algebra.pbw_matrix(deg))
                blocks[deg] = linalg.matmul(algebra.pbw_inverse(target), change)
        return GradedOperator((-ALPHA[i][0], -ALPHA[i][1]), blocks)

    @property
    def dim(self) -> int:
        return DIM

    @property
    def degree_index(self) -> Dict[Degree, List[int]]:
        return DEGREE_INDEX

    def letter(self, name: str) -> GradedOperator:
        if name not in self._ops:
            if name in GENERATORS:
                self._ops[name] = GradedOperator.diagonal(lambda deg: group_scalar(name, deg, self.params))
            elif name[0] == "E" and name in ROOT_VECTOR_DEFINITIONS:
                x, y, c = ROOT_VECTOR_DEFINITIONS[name]
                self._ops[name] = self.letter(x) @ self.letter(y) - c(self.q) * (self.letter(y) @ self.letter(x))
            elif name[0] == "F" and "E" + name[1:] in ROOT_VECTOR_DEFINITIONS:
                x, y, c = ROOT_VECTOR_DEFINITIONS["E" + name[1:]]
                fx, fy = "F" + x[1:], "F" + y[1:]
                dual = c(self.q.transposed())
                self._ops[name] = self.letter(fx) @ self.letter(fy) - dual * (self.letter(fy) @ self.letter(fx))
            else:
                raise ValueError(f"Unknown operator {name!r}.")
        return self._ops[name]

    def operator(self, word: str) -> GradedOperator:
        """The operator of a written product such as 'F1^2 E112 E1^2' or 's1^-1 s2^-1'."""
        out = GradedOperator.identity()
        for name, power in parse_word(word):
            if power < 0:
                inverse = GradedOperator.diagonal(lambda deg, name=name: group_scalar(name, deg, self.params).inv())
                out = out @ inverse ** (-power)
            else:
                out = out @ self.letter(name) ** power
        return out

    def matrix(self, name: str) -> np.ndarray:
        return self.operator(name).dense()

    @property
    def E1(self) -> np.ndarray:
        return self.matrix("E1")

    @property
    def E2(self) -> np.ndarray:
        return self.matrix("E2")

    @property
    def F1(self) -> np.ndarray:
        return self.matrix("F1")

    @property
    def F2(self) -> np.ndarray:
        return self.matrix("F2")

    @property
    def top(self) -> ModuleVector:
        out = linalg.zero_vector(DIM)
        out[TOP_INDEX] = ONE
        return out

    def apply(self, word: str, vector: Optional[ModuleVector] = None) -> ModuleVector:
        return self.operator(word).apply(self.top if vector is None else vector)


def build_verma(p: WeightParams) -> VermaModule:
    return VermaModule(p)


def vector_degree(vector: ModuleVector) -> Optional[Degree]:
    """The degree of a homogeneous nonzero vector, None for zero; raises on mixed degrees."""
    degrees = {ALL_EXPONENTS[i].degree for i, x in enumerate(vector) if x != 0}
    if len(degrees) > 1:
        raise ValueError(f"Vector is supported on several degrees: {sorted(degrees)}.")
    return degrees.pop() if degrees else None


def pbw_vector(a: int, b: int, c: int, d: int, e: int, order: str = "PBW1", m: Optional[VermaModule] = None):
    """m~_{a,b,c,d,e} = E2^a E12^b E11212^c E112^d E1^e v, or n~_{a,b,c,d,e} = E1^e E112^d E11212^c E12^b E2^a v."""
    exponents = PBWExponents(a, b, c, d, e)
    if not exponents.is_legal:
        return linalg.zero_vector(DIM)
    if order == "PBW1":
        out = linalg.zero_vector(DIM)
        out[EXPONENT_INDEX[exponents]] = ONE
        return out
    if order == "PBW2":
        q = m.q if m is not None else BraidingData()
        return rewrite_system(q).straighten(exponents.pbw2_word).to_vector()
    raise ValueError(f"Unknown PBW order {order!r}.")


class SingularKind(NamedTuple):
    name: str
    word: Optional[str]
    pbw: Optional[tuple]
    hypothesis: Callable[[CycNum, CycNum], bool]
    description: str


SINGULAR_KINDS = {
    kind.name: kind
    for kind in [
        SingularKind("E112", "F1^2 E112 E1^2", None, lambda l1, l2: l1**2 * l2 == -1, "l1^2 l2 = -1"),
        SingularKind("E112^2", "F1^2 E112^2 E1^2", None, lambda l1, l2: l1**2 * l2 == zeta(10), "l1^2 l2 = z^10"),
        SingularKind(
            "l1^3l2^2",
            "F1^2 F112^2 E11212 E112^2 E1^2",
            None,
            lambda l1, l2: l1**3 * l2**2 == -1,
            "l1^3 l2^2 = -1",
        ),
        SingularKind("E12", "F2 E2 E12", None, lambda l1, l2: l1 * l2 == zeta(1), "l1 l2 = z"),
        SingularKind("E12^2", "F2 E2 E12^2", None, lambda l1, l2: l1 * l2 == zeta(4), "l1 l2 = z^4"),
        SingularKind("E12^3", "F2 E2 E12^3", None, lambda l1, l2: l1 * l2 == zeta(7), "l1 l2 = z^7"),
        SingularKind("W1", None, ("PBW1", (0, 0, 0, 0, 1)), lambda l1, l2: l1 == 1, "l1 = 1"),
        SingularKind("W2", None, ("PBW1", (0, 0, 0, 0, 2)), lambda l1, l2: l1 == zeta(8), "l1 = z^8"),
        SingularKind("W", None, ("PBW2", (1, 0, 0, 0, 0)), lambda l1, l2: l2 == 1, "l2 = 1"),
    ]
}


def singular_vector(kind: str, m: VermaModule) -> ModuleVector:
    if kind not in SINGULAR_KINDS:
        raise ValueError(f"Unknown singular vector kind {kind!r}; expected one of {list(SINGULAR_KINDS)}.")
    singular = SINGULAR_KINDS[kind]
    if singular.word is not None:
        return m.apply(singular.word)
    order, exponents = singular.pbw
    return pbw_vector(*exponents, order=order, m=m)


def is_singular(vector: ModuleVector, m: VermaModule) -> bool:
    return linalg.is_zero(m.operator("F1").apply(vector)) and linalg.is_zero(m.operator("F2").apply(vector))


@dataclass
class RelationReport:
    params: dict
    checks: List[IdentityCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks if check.trusted)

    @property
    def failed(self) -> List[IdentityCheck]:
        return [check for check in self.checks if not check.passed]


def verify_relations(p: WeightParams, m: Optional[VermaModule] = None) -> RelationReport:
    m = m or build_verma(p)
    report = RelationReport(p.to_dict())

    for identity in ALL_IDENTITIES:
        residual = m.operator(identity.lhs)
        for coeff, word in identity.rhs:
            residual = residual - coeff(p.q) * m.operator(word)
        count = residual.nonzero_count()
        report.checks.append(
            IdentityCheck(identity.label, identity.group, count == 0, count, identity.trusted, note=identity.note)
        )

    for word in ("E1^2", "F1^2"):
        count = m.operator(word).nonzero_count()
        report.checks.append(IdentityCheck(f"{word} != 0", "nonvanishing", count > 0, count, True))

    for word in ("F1", "F2"):
        image = m.operator(word).apply(m.top)
        report.checks.append(IdentityCheck(f"{word} v = 0", "highest-weight", linalg.is_zero(image), 0, True))

    for check in report.failed:
        level = logger.warning if check.trusted else logger.info
        level(f"[{check.group}] {check.name}: residual has {check.residual} nonzero entries")

    return report
