"""The positive part of the double: the Nichols algebra B(V) of type ufo(7).

B(V) is realized degree by degree through the skew derivations d_1, d_2: an element of nonzero degree is
zero iff both derivations kill it. Left multiplication by E_1, E_2 and the root vectors is then a family of
exact per-degree matrices, the PBW monomials give the change of basis to PBW coordinates, and the
straightening rules are read off from products of root vectors.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from transformers.utils import logging

from ufo7 import linalg
from ufo7.catalog import E_STRAIGHTENING, IdentityCheck, parse_word
from ufo7.cyclotomic import ONE, ZERO, CycNum, zeta

logger = logging.get_logger(__name__)

Degree = Tuple[int, int]

ALPHA = {1: (1, 0), 2: (0, 1)}
TOP_DEGREE = (12, 8)
MAX_REWRITE_STEPS = 200_000


def add_degree(a: Degree, b: Degree) -> Degree:
    return (a[0] + b[0], a[1] + b[1])


def sub_degree(a: Degree, b: Degree) -> Degree:
    return (a[0] - b[0], a[1] - b[1])


def in_grid(deg: Degree) -> bool:
    return 0 <= deg[0] <= TOP_DEGREE[0] and 0 <= deg[1] <= TOP_DEGREE[1]


def degree_key(deg: Degree):
    return (deg[0] + deg[1], deg[0])


@dataclass(frozen=True)
class BraidingData:
    q12: CycNum = ONE

    def __post_init__(self):
        if not self.q12:
            raise ValueError("q12 must be nonzero.")

    @property
    def q11(self) -> CycNum:
        return zeta(4)

    @property
    def q22(self) -> CycNum:
        return -ONE

    @property
    def q21(self) -> CycNum:
        return zeta(11) / self.q12

    def q(self, i: int, j: int) -> CycNum:
        return {(1, 1): self.q11, (1, 2): self.q12, (2, 1): self.q21, (2, 2): self.q22}[(i, j)]

    def chi(self, j: int, deg: Degree) -> CycNum:
        """The scalar picked up by E_j passing to the right of an element of degree deg."""
        return self.q(j, 1) ** deg[0] * self.q(j, 2) ** deg[1]

    def bicharacter(self, beta: Degree, gamma: Degree) -> CycNum:
        out = ONE
        for i in (1, 2):
            for j in (1, 2):
                out = out * self.q(i, j) ** (beta[i - 1] * gamma[j - 1])
        return out

    def transposed(self) -> BraidingData:
        """The braiding matrix of the negative part: q_ij -> q_ji."""
        return BraidingData(self.q21)


@dataclass(frozen=True)
class RootLetter:
    name: str
    degree: Degree
    height: int


# PBW1 reading order, left to right
ROOT_LETTERS = (
    RootLetter("E2", (0, 1), 2),
    RootLetter("E12", (1, 1), 4),
    RootLetter("E11212", (3, 2), 2),
    RootLetter("E112", (2, 1), 3),
    RootLetter("E1", (1, 0), 3),
)
LETTERS = {letter.name: letter for letter in ROOT_LETTERS}
LETTER_RANK = {letter.name: i for i, letter in enumerate(ROOT_LETTERS)}

# X = Y*Z - c * Z*Y
ROOT_VECTOR_DEFINITIONS = {
    "E12": ("E1", "E2", lambda q: q.q12),
    "E112": ("E1", "E12", lambda q: q.q12 * zeta(4)),
    "E11212": ("E112", "E12", lambda q: q.q12 * zeta(1)),
}


class PBWExponents(NamedTuple):
    a2: int = 0
    a12: int = 0
    a11212: int = 0
    a112: int = 0
    a1: int = 0

    @property
    def degree(self) -> Degree:
        b1 = b2 = 0
        for exponent, letter in zip(self, ROOT_LETTERS):
            b1 += exponent * letter.degree[0]
            b2 += exponent * letter.degree[1]
        return (b1, b2)

    @property
    def is_legal(self) -> bool:
        return all(0 <= exponent < letter.height for exponent, letter in zip(self, ROOT_LETTERS))

    @property
    def word(self) -> Tuple[str, ...]:
        """E2^a2 E12^a12 E11212^a11212 E112^a112 E1^a1 as a word in root letters."""
        return tuple(letter.name for exponent, letter in zip(self, ROOT_LETTERS) for _ in range(exponent))

    @property
    def pbw2_word(self) -> Tuple[str, ...]:
        """E1^a1 E112^a112 E11212^a11212 E12^a12 E2^a2."""
        return tuple(
            letter.name for exponent, letter in reversed(list(zip(self, ROOT_LETTERS))) for _ in range(exponent)
        )

    def label(self) -> str:
        return "".join(str(x) for x in self)


ALL_EXPONENTS = [
    PBWExponents(*t) for t in itertools.product(*(range(letter.height) for letter in ROOT_LETTERS))
]
EXPONENT_INDEX = {e: i for i, e in enumerate(ALL_EXPONENTS)}

EXPONENTS_BY_DEGREE: Dict[Degree, List[PBWExponents]] = {}
for _e in ALL_EXPONENTS:
    EXPONENTS_BY_DEGREE.setdefault(_e.degree, []).append(_e)
DEGREES = sorted(EXPONENTS_BY_DEGREE, key=degree_key)
DEGREE_INDEX = {deg: [EXPONENT_INDEX[e] for e in exps] for deg, exps in EXPONENTS_BY_DEGREE.items()}


def graded_dimension() -> Dict[Degree, int]:
    return {deg: len(exps) for deg, exps in EXPONENTS_BY_DEGREE.items()}


class NicholsAlgebra:
    """B(V) for a fixed braiding, on a basis of products E_i * (basis element of lower degree)."""

    def __init__(self, q: BraidingData):
        self.q = q
        self.dims: Dict[Degree, int] = {(0, 0): 1}
        # origins[deg][k] = (i, j): basis element k is E_i times basis element j of deg - alpha_i
        self.origins: Dict[Degree, List[Tuple[int, int]]] = {(0, 0): []}
        self._lmul: Dict[Tuple[int, Degree], np.ndarray] = {}
        self._deriv: Dict[Tuple[int, Degree], np.ndarray] = {}
        self._letter_ops: Dict[Tuple[str, Degree], np.ndarray] = {}
        self._pbw: Dict[Degree, np.ndarray] = {}
        self._pbw_inv: Dict[Degree, np.ndarray] = {}

        self._build()
        self._build_pbw()

    def dim(self, deg: Degree) -> int:
        return self.dims.get(deg, 0)

    def lmul(self, i: int, deg: Degree) -> np.ndarray:
        """Left multiplication by E_i from degree deg, as a dim(deg + alpha_i) x dim(deg) matrix."""
        target = add_degree(deg, ALPHA[i])
        if (i, deg) in self._lmul:
            return self._lmul[(i, deg)]
        return linalg.zeros(self.dim(target), self.dim(deg))

    def deriv(self, j: int, deg: Degree) -> np.ndarray:
        target = sub_degree(deg, ALPHA[j])
        if (j, deg) in self._deriv:
            return self._deriv[(j, deg)]
        return linalg.zeros(self.dim(target), self.dim(deg))

    def _derivation_image(self, i: int, src: Degree, j: int) -> List[CycNum]:
        # d_k(E_i y) = E_i d_k(y) + delta_ik chi_k(deg y) y
        deg = add_degree(src, ALPHA[i])
        image = []
        for k in (1, 2):
            target = sub_degree(deg, ALPHA[k])
            part = linalg.zero_vector(self.dim(target))
            below = sub_degree(src, ALPHA[k])
            if self.dim(below) > 0 and self.dim(target) > 0:
                part = part + linalg.matmul(self.lmul(i, below), self.deriv(k, src)[:, j])
            if i == k:
                part[j] = part[j] + self.q.chi(k, src)
            image.extend(part)
        return image

    def _build(self):
        box = [(b1, b2) for b1 in range(TOP_DEGREE[0] + 2) for b2 in range(TOP_DEGREE[1] + 2)]
        for deg in sorted(box, key=degree_key):
            if deg == (0, 0):
                continue

            candidates = []
            images = []
            for i in (1, 2):
                src = sub_degree(deg, ALPHA[i])
                for j in range(self.dim(src)):
                    candidates.append((i, j))
                    images.append(self._derivation_image(i, src, j))

            widths = [self.dim(sub_degree(deg, ALPHA[k])) for k in (1, 2)]
            rows = linalg.as_matrix(images, sum(widths))
            kept = linalg.independent_rows(rows) if candidates else []

            self.dims[deg] = len(kept)
            self.origins[deg] = [candidates[c] for c in kept]
            if not kept:
                continue

            basis = rows[kept]
            coords = linalg.solve(basis.T, rows.T)
            if coords is None:
                raise RuntimeError(f"Derivation images at degree {deg} are not spanned by the chosen basis.")

            for i in (1, 2):
                cols = [c for c, (ci, _) in enumerate(candidates) if ci == i]
                if cols:
                    self._lmul[(i, sub_degree(deg, ALPHA[i]))] = coords[:, cols]

            offset = 0
            for k, width in zip((1, 2), widths):
                self._deriv[(k, deg)] = basis[:, offset : offset + width].T
                offset += width

        total = sum(self.dims.values())
        outside = {deg: d for deg, d in self.dims.items() if d and not in_grid(deg)}
        if total != len(ALL_EXPONENTS) or outside:
            raise RuntimeError(f"B(V) has dimension {total} with components {outside} beyond {TOP_DEGREE}.")
        logger.debug(f"B(V) realized for q12={self.q.q12}: {len([d for d in self.dims.values() if d])} degrees")

    def letter_op(self, name: str, deg: Degree) -> np.ndarray:
        """Left multiplication by a root vector, from degree deg."""
        key = (name, deg)
        if key not in self._letter_ops:
            if name == "E1":
                op = self.lmul(1, deg)
            elif name == "E2":
                op = self.lmul(2, deg)
            else:
                x, y, c = ROOT_VECTOR_DEFINITIONS[name]
                op = self.word_op((x, y), deg) - self.word_op((y, x), deg) * c(self.q)
            self._letter_ops[key] = op
        return self._letter_ops[key]

    def word_op(self, word: Sequence[str], deg: Degree) -> np.ndarray:
        op = linalg.identity(self.dim(deg))
        current = deg
        for name in reversed(word):
            op = linalg.matmul(self.letter_op(name, current), op)
            current = add_degree(current, LETTERS[name].degree)
        return op

    def word_vector(self, word: Sequence[str]) -> Tuple[Degree, np.ndarray]:
        """The product of a word of root letters, in the derivation basis."""
        deg = (0, 0)
        for name in word:
            deg = add_degree(deg, LETTERS[name].degree)
        return deg, self.word_op(word, (0, 0))[:, 0] if self.dim(deg) else linalg.zero_vector(0)

    def _build_pbw(self):
        for deg, exps in EXPONENTS_BY_DEGREE.items():
            if len(exps) != self.dim(deg):
                raise RuntimeError(f"{len(exps)} PBW monomials in degree {deg}, but dim B(V) = {self.dim(deg)}.")
            columns = [self.word_vector(e.word)[1] for e in exps]
            matrix = linalg.as_matrix(columns).T
            try:
                self._pbw_inv[deg] = linalg.inverse(matrix)
            except ZeroDivisionError:
                raise RuntimeError(f"PBW monomials of degree {deg} are linearly dependent.")
            self._pbw[deg] = matrix

    def pbw_matrix(self, deg: Degree) -> np.ndarray:
        return self._pbw.get(deg, linalg.zeros(0, 0))

    def pbw_inverse(self, deg: Degree) -> np.ndarray:
        return self._pbw_inv.get(deg, linalg.zeros(0, 0))

    def to_pbw(self, deg: Degree, vector: np.ndarray) -> AlgebraElement:
        if self.dim(deg) == 0:
            return AlgebraElement({}, self.q)
        coords = linalg.matmul(self.pbw_inverse(deg), vector)
        return AlgebraElement(dict(zip(EXPONENTS_BY_DEGREE[deg], coords)), self.q)


@lru_cache(maxsize=None)
def nichols_realization(q: BraidingData) -> NicholsAlgebra:
    return NicholsAlgebra(q)


class AlgebraElement:
    """An element of U+ in PBW1 normal form."""

    __slots__ = ("terms", "q")

    def __init__(self, terms: Optional[Dict[PBWExponents, CycNum]] = None, q: Optional[BraidingData] = None):
        self.terms = {PBWExponents(*e): c for e, c in (terms or {}).items() if c != 0}
        self.q = q or BraidingData()

    @classmethod
    def one(cls, q: Optional[BraidingData] = None) -> AlgebraElement:
        return cls({PBWExponents(): ONE}, q)

    @classmethod
    def monomial(cls, e: Sequence[int], q: Optional[BraidingData] = None, coeff: CycNum = ONE) -> AlgebraElement:
        e = PBWExponents(*e)
        if not e.is_legal:
            return cls({}, q)
        return cls({e: coeff}, q)

    @property
    def degrees(self) -> set:
        return {e.degree for e in self.terms}

    @property
    def is_homogeneous(self) -> bool:
        return len(self.degrees) <= 1

    def coefficient(self, e: Sequence[int]) -> CycNum:
        return self.terms.get(PBWExponents(*e), ZERO)

    def to_vector(self) -> np.ndarray:
        out = linalg.zero_vector(len(ALL_EXPONENTS))
        for e, c in self.terms.items():
            out[EXPONENT_INDEX[e]] = c
        return out

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, ZERO) + c
        return AlgebraElement(terms, self.q)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement({e: -c for e, c in self.terms.items()}, self.q)

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def __mul__(self, other) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return AlgebraElement({e: c * other for e, c in self.terms.items()}, self.q)

    def __rmul__(self, other) -> AlgebraElement:
        return AlgebraElement({e: other * c for e, c in self.terms.items()}, self.q)

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgebraElement):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = [f"({c})*m{e.label()}" for e, c in sorted(self.terms.items(), key=lambda t: EXPONENT_INDEX[t[0]])]
        return " + ".join(parts)

    __repr__ = __str__


class RewriteSystem:
    """Adjacent-swap and nilpotency rules on words of root letters.

    Normal words are non-decreasing in the PBW1 order E2 < E12 < E11212 < E112 < E1 with every run
    shorter than the letter's height.
    """

    STRATEGIES = ("leftmost", "rightmost")

    def __init__(self, q: BraidingData):
        self.q = q
        self.algebra = nichols_realization(q)
        self.rules: Dict[Tuple[str, str], AlgebraElement] = {}
        for x, y in itertools.permutations(LETTERS, 2):
            if LETTER_RANK[x] > LETTER_RANK[y]:
                deg, vector = self.algebra.word_vector((x, y))
                self.rules[(x, y)] = self.algebra.to_pbw(deg, vector)
        self._memo: Dict[Tuple[Tuple[str, ...], str], AlgebraElement] = {}

    @staticmethod
    def is_normal(word: Sequence[str]) -> bool:
        for x, y in zip(word, word[1:]):
            if LETTER_RANK[x] > LETTER_RANK[y]:
                return False
        return all(word.count(name) < letter.height for name, letter in LETTERS.items())

    @staticmethod
    def exponents(word: Sequence[str]) -> PBWExponents:
        return PBWExponents(*(word.count(letter.name) for letter in ROOT_LETTERS))

    def find_redex(self, word: Sequence[str], strategy: str = "leftmost"):
        positions = range(len(word)) if strategy == "leftmost" else reversed(range(len(word)))
        for p in positions:
            if p + 1 < len(word) and LETTER_RANK[word[p]] > LETTER_RANK[word[p + 1]]:
                return ("swap", p)
            height = LETTERS[word[p]].height
            if p + height <= len(word) and all(x == word[p] for x in word[p : p + height]):
                return ("nil", p)
        return None

    def rewrite_once(self, word: Tuple[str, ...], strategy: str = "leftmost") -> List[Tuple[Tuple[str, ...], CycNum]]:
        kind, p = self.find_redex(word, strategy)
        if kind == "nil":
            return []
        rhs = self.rules[(word[p], word[p + 1])]
        return [(word[:p] + e.word + word[p + 2 :], c) for e, c in rhs.terms.items()]

    def straighten(self, word: Sequence[str], strategy: str = "leftmost") -> AlgebraElement:
        word = tuple(word)
        for name in word:
            if name not in LETTERS:
                raise ValueError(f"Unknown root letter {name!r}.")
        if strategy not in self.STRATEGIES:
            raise ValueError(f"Unknown strategy {strategy!r}.")

        key = (word, strategy)
        if key in self._memo:
            return self._memo[key]

        pending = {word: ONE}
        result: Dict[PBWExponents, CycNum] = {}
        steps = 0
        while pending:
            w, c = pending.popitem()
            if c == 0:
                continue
            if self.is_normal(w):
                e = self.exponents(w)
                result[e] = result.get(e, ZERO) + c
                continue

            steps += 1
            if steps > MAX_REWRITE_STEPS:
                raise RuntimeError(f"Straightening {' '.join(word)} did not terminate.")
            for w2, c2 in self.rewrite_once(w, strategy):
                pending[w2] = pending.get(w2, ZERO) + c * c2

        out = AlgebraElement(result, self.q)
        self._memo[key] = out
        return out


@lru_cache(maxsize=None)
def rewrite_system(q: BraidingData) -> RewriteSystem:
    return RewriteSystem(q)


def straighten(word: Sequence[str], q: Optional[BraidingData] = None) -> AlgebraElement:
    return rewrite_system(q or BraidingData()).straighten(word)


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    system = rewrite_system(x.q)
    out = AlgebraElement({}, x.q)
    for e, c in x.terms.items():
        for f, d in y.terms.items():
            out = out + system.straighten(e.word + f.word) * (c * d)
    return out


def pbw2_to_pbw1(e: Sequence[int], q: Optional[BraidingData] = None) -> AlgebraElement:
    e = PBWExponents(*e)
    if not e.is_legal:
        return AlgebraElement({}, q)
    return straighten(e.pbw2_word, q)


def _concat(a: Dict[tuple, CycNum], b: Dict[tuple, CycNum]) -> Dict[tuple, CycNum]:
    out = {}
    for u, c in a.items():
        for w, d in b.items():
            out[u + w] = out.get(u + w, ZERO) + c * d
    return out


def _expand_letter(name: str, q: BraidingData) -> Dict[tuple, CycNum]:
    if name in ("E1", "E2"):
        return {(name,): ONE}
    x, y, c = ROOT_VECTOR_DEFINITIONS[name]
    out = _concat(_expand_letter(x, q), _expand_letter(y, q))
    for w, d in _concat(_expand_letter(y, q), _expand_letter(x, q)).items():
        out[w] = out.get(w, ZERO) - c(q) * d
    return out


def expand_root_word(e: Sequence[int], q: Optional[BraidingData] = None) -> List[Tuple[Tuple[str, ...], CycNum]]:
    """A PBW monomial written as a combination of words in E1, E2."""
    q = q or BraidingData()
    out = {(): ONE}
    for name in PBWExponents(*e).word:
        out = _concat(out, _expand_letter(name, q))
    return sorted((w, c) for w, c in out.items() if c != 0)


def expand_word(text: str) -> Tuple[str, ...]:
    """'E1 E12^2' -> ('E1', 'E12', 'E12')."""
    return tuple(name for name, power in parse_word(text) for _ in range(power))


def evaluate_terms(terms, q: BraidingData) -> AlgebraElement:
    system = rewrite_system(q)
    out = AlgebraElement({}, q)
    for coeff, word in terms:
        out = out + system.straighten(expand_word(word)) * coeff(q)
    return out


@dataclass
class ConfluenceMismatch:
    word: Tuple[str, ...]
    leftmost: str
    rightmost: str


@dataclass
class ConfluenceReport:
    checked: int = 0
    mismatches: List[ConfluenceMismatch] = field(default_factory=list)
    catalog: List[IdentityCheck] = field(default_factory=list)
    swap_rules: List[IdentityCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches and all(check.passed for check in self.swap_rules)


def words_up_to(length: int, alphabet: Iterable[str] = ("E1", "E2")) -> List[Tuple[str, ...]]:
    alphabet = list(alphabet)
    return [w for n in range(length + 1) for w in itertools.product(alphabet, repeat=n)]


def check_confluence(
    sample_words: Optional[Iterable[Sequence[str]]] = None, q: Optional[BraidingData] = None, length: int = 4
):
    """Straightens every word up to the given length in E1, E2 and every catalog left-hand side both ways, and
    checks the derived swap rules against their printed forms."""
    q = q or BraidingData()
    system = rewrite_system(q)
    if sample_words is None:
        sample_words = words_up_to(length) + [expand_word(identity.lhs) for identity in E_STRAIGHTENING]

    report = ConfluenceReport()
    for word in sample_words:
        word = tuple(word)
        left = system.straighten(word, "leftmost")
        right = system.straighten(word, "rightmost")
        report.checked += 1
        if left != right:
            report.mismatches.append(ConfluenceMismatch(word, str(left), str(right)))

    for identity in E_STRAIGHTENING:
        lhs = system.straighten(expand_word(identity.lhs))
        rhs = evaluate_terms(identity.rhs, q)
        check = IdentityCheck(
            identity.label, identity.group, lhs == rhs, lhs=str(lhs), rhs=str(rhs), note=identity.note
        )
        if not check.passed:
            logger.warning(f"catalog identity {identity.label} does not hold for q12={q.q12}")
        report.catalog.append(check)

    report.swap_rules = check_swap_rules(q)
    for check in report.swap_rules:
        if not check.passed:
            logger.warning(f"derived swap rule {check.name} disagrees with its printed form: {check.lhs}")
    return report


def check_swap_rules(q: Optional[BraidingData] = None) -> List[IdentityCheck]:
    """Each derived adjacent swap against its printed form: the root vector definitions and the single-swap
    identities of the straightening catalog.
    """
    q = q or BraidingData()
    system = rewrite_system(q)

    printed = {}
    for name, (x, y, c) in ROOT_VECTOR_DEFINITIONS.items():
        printed[(x, y)] = (f"{x} {y} = {name} + c {y} {x}", ((lambda q: ONE, name), (c, f"{y} {x}")))
    for identity in E_STRAIGHTENING:
        word = parse_word(identity.lhs)
        if len(word) == 2 and all(power == 1 for _, power in word):
            printed[(word[0][0], word[1][0])] = (identity.label, identity.rhs)

    checks = []
    for (x, y), derived in sorted(system.rules.items()):
        if (x, y) not in printed:
            checks.append(IdentityCheck(f"{x} {y}", "swap rule", False, rhs=str(derived), note="no printed form"))
            continue
        label, rhs = printed[(x, y)]
        expected = evaluate_terms(rhs, q)
        checks.append(IdentityCheck(label, "swap rule", derived == expected, lhs=str(derived), rhs=str(expected)))
    return checks


def dump_rules(q: Optional[BraidingData] = None) -> dict:
    system = rewrite_system(q or BraidingData())
    swaps = {
        f"{x} {y}": {e.label(): str(c) for e, c in rhs.terms.items()} for (x, y), rhs in sorted(system.rules.items())
    }
    nilpotency = {letter.name: letter.height for letter in ROOT_LETTERS}
    return {
        "q12": str(system.q.q12),
        "order": [letter.name for letter in ROOT_LETTERS],
        "swaps": swaps,
        "nil": nilpotency,
    }
