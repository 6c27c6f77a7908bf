"""The maximal submodule N(lambda), the simple quotient L(lambda) and the per-family checks."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np
from tqdm.auto import tqdm
from transformers.utils import logging

from ufo7 import linalg
from ufo7.algebra import (
    ALL_EXPONENTS,
    ALPHA,
    DEGREE_INDEX,
    DEGREES,
    TOP_DEGREE,
    BraidingData,
    Degree,
    PBWExponents,
    add_degree,
    degree_key,
    sub_degree,
)
from ufo7.catalog import parse_word
from ufo7.cyclotomic import ONE, CycNum, format_cyc, parse, qint, zeta
from ufo7.family_data import ACTION_TABLES, CORRECTED_ENTRIES, FAMILY_BASES
from ufo7.utils import Constants, cached_json
from ufo7.verma import (
    SINGULAR_KINDS,
    ModuleVector,
    VermaModule,
    build_verma,
    group_scalar,
    is_singular,
    pbw_vector,
    singular_vector,
    vector_degree,
)
from ufo7.weights import (
    WeightParams,
    classify,
    corollary_shift,
    family_counts,
    family_matches,
    representative,
    shift,
    table1_rows,
    z12_character,
)

logger = logging.get_logger(__name__)

GENERATOR_WORDS = ("E1", "E2", "F1", "F2")


class GradedSubspace:
    """A graded subspace of M(lambda): per degree, an echelonized basis in local coordinates."""

    def __init__(self, basis: Optional[Dict[Degree, np.ndarray]] = None, quotient: Optional[Dict] = None):
        self.basis = {deg: b for deg, b in (basis or {}).items() if b.shape[0] > 0}
        # rows spanning the annihilator: Q @ x == 0 iff x lies in the subspace
        self.quotient = quotient

    @classmethod
    def from_vectors(cls, vectors: Iterable[ModuleVector]) -> GradedSubspace:
        space = cls()
        for vector in vectors:
            space.add(vector)
        return space

    def add(self, vector: ModuleVector) -> bool:
        """Adds a homogeneous vector; returns whether the subspace grew."""
        deg = vector_degree(vector)
        if deg is None or self.contains(vector):
            return False
        local = vector[DEGREE_INDEX[deg]].reshape(1, -1)
        current = self.basis.get(deg, linalg.zeros(0, local.shape[1]))
        self.basis[deg] = linalg.rref(np.vstack([current, local]))[0]
        self.quotient = None
        return True

    def dim(self, deg: Degree) -> int:
        return self.basis[deg].shape[0] if deg in self.basis else 0

    def dims(self) -> Dict[Degree, int]:
        return {deg: b.shape[0] for deg, b in self.basis.items()}

    @property
    def total_dim(self) -> int:
        return sum(self.dims().values())

    def contains(self, vector: ModuleVector) -> bool:
        for deg, idx in DEGREE_INDEX.items():
            local = vector[idx]
            if linalg.is_zero(local):
                continue
            basis = self.basis.get(deg, linalg.zeros(0, len(idx)))
            if not linalg.in_span(basis, local):
                return False
        return True

    def is_invariant(self, op) -> bool:
        for deg, basis in self.basis.items():
            if deg not in op.blocks:
                continue
            images = linalg.matmul(op.blocks[deg], basis.T).T
            if linalg.is_zero(images):
                continue
            target = add_degree(deg, op.shift)
            target_basis = self.basis.get(target, linalg.zeros(0, images.shape[1]))
            if linalg.rank(np.vstack([target_basis, images])) > target_basis.shape[0]:
                return False
        return True


def maximal_submodule(m: VermaModule) -> GradedSubspace:
    """N(lambda), by N_0 = 0 and N_beta = {x : F_i x in N_(beta - alpha_i), i = 1, 2}."""
    quotient = {(0, 0): linalg.identity(1)}
    for deg in DEGREES:
        if deg == (0, 0):
            continue
        parts = []
        for i in (1, 2):
            target = sub_degree(deg, ALPHA[i])
            if target in DEGREE_INDEX:
                parts.append(linalg.matmul(quotient[target], m.letter(f"F{i}").block(deg)))
        stacked = np.vstack(parts) if parts else linalg.zeros(0, len(DEGREE_INDEX[deg]))
        quotient[deg] = linalg.rref(stacked)[0]

    N = GradedSubspace({deg: linalg.kernel(q) for deg, q in quotient.items()}, quotient)

    if N.dim((0, 0)):
        raise RuntimeError("N(lambda) contains the highest weight vector.")
    for name in GENERATOR_WORDS:
        if not N.is_invariant(m.letter(name)):
            raise RuntimeError(f"N(lambda) is not stable under {name}.")
    return N


def generated_submodule(m: VermaModule, vectors: Iterable[ModuleVector]) -> GradedSubspace:
    space = GradedSubspace()
    frontier = [v for v in vectors if space.add(v)]
    while frontier:
        new = []
        for vector in frontier:
            for name in GENERATOR_WORDS:
                image = m.letter(name).apply(vector)
                if space.add(image):
                    new.append(image)
        frontier = new
    return space


def cyclic_intersects_top(m: VermaModule, vector: ModuleVector) -> bool:
    """Whether U.vector contains v_lambda."""
    return generated_submodule(m, [vector]).dim((0, 0)) > 0


def project(N: GradedSubspace, vector: ModuleVector, deg: Degree) -> np.ndarray:
    """Coordinates of the image of a degree-deg vector in L(lambda)_deg."""
    return linalg.matmul(N.quotient[deg], vector[DEGREE_INDEX[deg]])


@dataclass
class SimpleReport:
    family: int
    dim: int
    graded_dims: Dict[Degree, int]
    max_degree: Degree
    hw_weight: Tuple[CycNum, CycNum]
    phi_family: int
    lambda1: CycNum = ONE
    lambda2: CycNum = ONE

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "dim": self.dim,
            "graded_dims": [[b1, b2, d] for (b1, b2), d in sorted(self.graded_dims.items())],
            "max_degree": list(self.max_degree),
            "hw_weight": [format_cyc(x) for x in self.hw_weight],
            "phi_family": self.phi_family,
            "lambda1": format_cyc(self.lambda1),
            "lambda2": format_cyc(self.lambda2),
        }

    @classmethod
    def from_dict(cls, d: dict) -> SimpleReport:
        graded = {(b1, b2): dim for b1, b2, dim in d["graded_dims"]}
        return cls(
            d["family"],
            d["dim"],
            graded,
            tuple(d["max_degree"]),
            tuple(parse(x) for x in d["hw_weight"]),
            d["phi_family"],
            parse(d["lambda1"]),
            parse(d["lambda2"]),
        )


def simple_report(p: WeightParams, m: Optional[VermaModule] = None, N: Optional[GradedSubspace] = None):
    m = m or build_verma(p)
    N = N or maximal_submodule(m)

    graded = {deg: q.shape[0] for deg, q in N.quotient.items() if q.shape[0]}
    top = max(graded, key=degree_key)
    if any(deg[0] > top[0] or deg[1] > top[1] for deg in graded):
        raise RuntimeError(f"L(lambda) has no unique maximal degree: {sorted(graded)}.")

    mu1 = group_scalar("g1", top, p) * group_scalar("s1", top, p)
    mu2 = group_scalar("g2", top, p) * group_scalar("s2", top, p)

    return SimpleReport(
        family=int(classify(p.l1, p.l2)),
        dim=sum(graded.values()),
        graded_dims=graded,
        max_degree=top,
        hw_weight=(mu1, mu2),
        phi_family=int(classify(mu1.inv(), mu2.inv())),
        lambda1=p.l1,
        lambda2=p.l2,
    )


def hilbert(report: SimpleReport) -> List[List[int]]:
    """Graded dimensions as rows b2 = 0..8 of columns b1 = 0..12."""
    return [
        [report.graded_dims.get((b1, b2), 0) for b1 in range(TOP_DEGREE[0] + 1)] for b2 in range(TOP_DEGREE[1] + 1)
    ]


def top_vector(N: GradedSubspace) -> ModuleVector:
    """A PBW monomial of the maximal degree of L(lambda) that survives in the quotient."""
    graded = {deg: q.shape[0] for deg, q in N.quotient.items() if q.shape[0]}
    top = max(graded, key=degree_key)
    q_top = N.quotient[top]
    k = next(k for k in range(q_top.shape[1]) if not linalg.is_zero(q_top[:, k]))
    vector = linalg.zero_vector(len(ALL_EXPONENTS))
    vector[DEGREE_INDEX[top][k]] = ONE
    return vector


def check_top_is_simple(m: VermaModule, N: GradedSubspace) -> bool:
    graded = {deg: q.shape[0] for deg, q in N.quotient.items() if q.shape[0]}
    top = max(graded, key=degree_key)
    if graded[top] != 1:
        return False

    vector = top_vector(N)

    for i in (1, 2):
        target = add_degree(top, ALPHA[i])
        if target in DEGREE_INDEX and not linalg.is_zero(project(N, m.letter(f"E{i}").apply(vector), target)):
            return False
    return True


def member_vector(member, m: VermaModule) -> ModuleVector:
    order, exponents = member
    return pbw_vector(*exponents, order="PBW1" if order == "m" else "PBW2", m=m)


def member_label(member) -> str:
    order, exponents = member
    return order + "".join(str(x) for x in exponents)


@dataclass
class FamilyBasisReport:
    family: int
    count: int
    rank: int
    dim: int
    dependent: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.count == self.rank == self.dim


def check_family_basis(f: int, m: VermaModule, N: GradedSubspace) -> FamilyBasisReport:
    members = sorted(FAMILY_BASES[int(f)])
    by_degree: Dict[Degree, list] = {}
    for member in members:
        by_degree.setdefault(PBWExponents(*member[1]).degree, []).append(member)

    rank = 0
    dependent = []
    for deg, group in sorted(by_degree.items(), key=lambda t: degree_key(t[0])):
        width = N.quotient[deg].shape[0]
        rows = linalg.as_matrix([project(N, member_vector(member, m), deg) for member in group], width)
        kept = linalg.independent_rows(rows) if rows.shape[1] else []
        rank += len(kept)
        dependent.extend(member_label(member) for i, member in enumerate(group) if i not in kept)

    dim = sum(q.shape[0] for q in N.quotient.values())
    return FamilyBasisReport(int(f), len(members), rank, dim, dependent)


@dataclass
class TableEntryCheck:
    row: str
    operator: str
    expected: str
    actual: str
    passed: bool
    note: str = ""
    corrected: Optional[bool] = None


@dataclass
class ActionTableReport:
    family: int
    entries: List[TableEntryCheck] = field(default_factory=list)
    degree_errors: List[str] = field(default_factory=list)
    basis_rank: int = 0
    graded_dims_match: bool = False

    @property
    def matched(self) -> int:
        return sum(entry.passed for entry in self.entries)

    @property
    def mismatches(self) -> List[TableEntryCheck]:
        return [entry for entry in self.entries if not entry.passed]

    @property
    def unexplained(self) -> List[TableEntryCheck]:
        """Mismatches with no corrected entry, or whose corrected entry fails too."""
        return [entry for entry in self.mismatches if not entry.corrected]


def _prefactor(word: str, p: WeightParams) -> CycNum:
    out = ONE
    for name, power in parse_word(word):
        out = out * group_scalar(name, (0, 0), p) ** power
    return out


def _entry_holds(table, N: GradedSubspace, vectors, image: ModuleVector, deg: Degree, coeff, target, q) -> bool:
    if target is not None and table.degree(target) != deg:
        return False
    if deg not in DEGREE_INDEX:
        return coeff is None
    residual = image if coeff is None else image - vectors[target] * coeff(q)
    return linalg.is_zero(project(N, residual, deg))


def check_action_table(f: int, m: VermaModule, N: GradedSubspace) -> ActionTableReport:
    """Every printed entry of the family's action table against the action on L(lambda).

    Entries listed in CORRECTED_ENTRIES are checked a second time with the corrected coefficient.
    """
    table = ACTION_TABLES[int(f)]
    corrections = CORRECTED_ENTRIES.get(int(f), {})
    p = m.params
    report = ActionTableReport(int(f))

    vectors = {label: member_vector(member, m) for label, member in table.vectors.items()}
    for label, member in table.vectors.items():
        actual = PBWExponents(*member[1]).degree
        if actual != table.degree(label):
            report.degree_errors.append(f"{label} = {member_label(member)} has degree {actual}")

    graded = {deg: q.shape[0] for deg, q in N.quotient.items() if q.shape[0]}
    report.graded_dims_match = graded == {table.degree(label): 1 for label in table.vectors}
    report.basis_rank = sum(
        1 for label, v in vectors.items() if not linalg.is_zero(project(N, v, table.degree(label)))
    )
    by_degree = {table.degree(label): label for label in table.vectors}

    for label, op, coeff, target in table.entries():
        deg = add_degree(table.degree(label), m.letter(op).shift)
        image = m.letter(op).apply(vectors[label])
        if op in table.prefactors:
            image = image * _prefactor(table.prefactors[op], p)

        expected = f"{format_cyc(coeff(p.q))}*{target}" if coeff is not None else "0"
        actual = "0"
        if deg in DEGREE_INDEX and deg in graded:
            actual_proj = project(N, image, deg)
            if not linalg.is_zero(actual_proj):
                basis_label = by_degree.get(deg)
                ref = project(N, vectors[basis_label], deg) if basis_label else None
                if ref is None or linalg.is_zero(ref):
                    actual = "nonzero"
                else:
                    k = next(i for i, x in enumerate(ref) if x != 0)
                    actual = f"{format_cyc(actual_proj[k] / ref[k])}*{basis_label}"

        note = ""
        if target is not None and table.degree(target) != deg:
            note = f"{target} does not have degree {deg}"
        passed = _entry_holds(table, N, vectors, image, deg, coeff, target, p.q)

        corrected = None
        if (label, op) in corrections:
            entry = corrections[(label, op)]
            fixed_coeff, fixed_target = (None, None) if entry == 0 else entry
            corrected = _entry_holds(table, N, vectors, image, deg, fixed_coeff, fixed_target, p.q)
        report.entries.append(TableEntryCheck(label, op, expected, actual, passed, note, corrected))

    for entry in report.unexplained:
        logger.info(f"table I{f}: {entry.operator}.{entry.row} expected {entry.expected}, got {entry.actual}")
    return report


@dataclass
class CorollaryReport:
    family: int
    shift: Tuple[int, int]
    dim_N: int
    shifted_dim: int
    shifted_family: int
    expected_family: int

    @property
    def passed(self) -> bool:
        return self.dim_N == self.shifted_dim and self.shifted_family == self.expected_family


def class1_corollary_check(f: int, q: Optional[BraidingData] = None) -> CorollaryReport:
    a, b, expected = corollary_shift(f)
    base = representative(f)
    p = WeightParams.from_lambda(base.l1, base.l2, q)
    m = build_verma(p)
    N = maximal_submodule(m)

    l1, l2 = shift(p.l1, p.l2, a, b)
    shifted = simple_report(WeightParams.from_lambda(l1, l2, q))
    return CorollaryReport(int(f), (a, b), N.total_dim, shifted.dim, shifted.family, expected)


@dataclass
class SubmoduleCheck:
    kind: str
    hypothesis: bool
    closed: bool

    @property
    def consistent(self) -> bool:
        return self.hypothesis == self.closed


W_SPANS = {
    "W1": ("PBW1", lambda a, b, c, d, e: e >= 1),
    "W2": ("PBW1", lambda a, b, c, d, e: e == 2),
    "W": ("PBW2", lambda a, b, c, d, e: a == 1),
}


def w_subspace(kind: str, m: VermaModule) -> GradedSubspace:
    order, pred = W_SPANS[kind]
    return GradedSubspace.from_vectors(pbw_vector(*e, order=order, m=m) for e in ALL_EXPONENTS if pred(*e))


def submodule_iff_check(kind: str, m: VermaModule) -> SubmoduleCheck:
    """W1 is a submodule iff l1 = 1, W2 iff l1 = z^8, W iff l2 = 1."""
    space = w_subspace(kind, m)
    closed = all(space.is_invariant(m.letter(name)) for name in GENERATOR_WORDS)
    hypothesis = SINGULAR_KINDS[kind].hypothesis(m.params.l1, m.params.l2)
    return SubmoduleCheck(kind, hypothesis, closed)


def lemma_coefficient_report(m: VermaModule) -> dict:
    """F1 m~_{a,b,c,d,i} against l(s1^-1) (i)_{z^4} (z^{8(i-1)} - l1) m~_{a,b,c,d,i-1} mod W_i, and
    F2 n~_{1,b,c,d,e} against l(s2^-1) (1 - l2) n~_{0,b,c,d,e} mod W."""
    p = m.params
    f1, f2 = m.letter("F1"), m.letter("F2")
    out = {}

    for i, kind in ((1, "W1"), (2, "W2")):
        coeff = p.ls1.inv() * qint(i, zeta(4)) * (zeta(8 * (i - 1)) - p.l1)
        passed = total = 0
        for e in ALL_EXPONENTS:
            if e.a1 != i:
                continue
            image = f1.apply(pbw_vector(*e, m=m))
            expected = pbw_vector(e.a2, e.a12, e.a11212, e.a112, i - 1, m=m) * coeff
            residual = image - expected
            total += 1
            passed += all(residual[k] == 0 for k, f in enumerate(ALL_EXPONENTS) if f.a1 < i)
        out[f"F1 on {kind}"] = {"passed": passed, "total": total}

    space = w_subspace("W", m)
    coeff = p.ls2.inv() * (1 - p.l2)
    passed = total = 0
    for e in ALL_EXPONENTS:
        if e.a2 != 1:
            continue
        image = f2.apply(pbw_vector(*e, order="PBW2", m=m))
        expected = pbw_vector(0, e.a12, e.a11212, e.a112, e.a1, order="PBW2", m=m) * coeff
        total += 1
        passed += space.contains(image - expected)
    out["F2 on W"] = {"passed": passed, "total": total}
    return out


# weights on which each singular vector is expected to be singular
SINGULAR_FAMILIES = {
    "E112": 4,
    "E112^2": 5,
    "l1^3l2^2": 6,
    "E12": 7,
    "E12^2": 8,
    "E12^3": 9,
    "W1": 2,
    "W2": 3,
    "W": 10,
}


def singular_vector_report(kind: str, q: Optional[BraidingData] = None) -> dict:
    rep = representative(SINGULAR_FAMILIES[kind])
    m = build_verma(WeightParams.from_lambda(rep.l1, rep.l2, q))
    w = singular_vector(kind, m)
    control = build_verma(WeightParams.from_lambda(2, 3, q))
    return {
        "kind": kind,
        "family": SINGULAR_FAMILIES[kind],
        "nonzero": not linalg.is_zero(w),
        "singular": is_singular(w, m),
        "avoids_top": not cyclic_intersects_top(m, w) if not linalg.is_zero(w) else True,
        "control_singular": is_singular(singular_vector(kind, control), control),
    }


def family_summary(f: int, q12: str = "1", use_cache: bool = False, cache_dir: Optional[str] = None) -> dict:
    p = representative(f)
    p = WeightParams.from_lambda(p.l1, p.l2, BraidingData(parse(q12)))
    if not use_cache:
        return simple_report(p).to_dict()
    return cached_json("simple", p.to_dict(), lambda: simple_report(p).to_dict(), cache_dir)


def _family_summary_args(args):
    return family_summary(*args)


def run_parallel(fn, items: List, jobs: int = 1, desc: str = "", verbose: bool = False) -> List:
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(tqdm(pool.map(fn, items), total=len(items), desc=desc, disable=not verbose))
    return [fn(item) for item in tqdm(items, desc=desc, disable=not verbose)]


def table1(
    families: Optional[Iterable[int]] = None,
    q12: str = "1",
    jobs: int = 1,
    use_cache: bool = False,
    verbose: bool = False,
    cache_dir: Optional[str] = None,
) -> List[dict]:
    """Computed (dim, max degree, phi) of each family's representative against the stored table."""
    expected = {int(row.family): row for row in table1_rows()}
    families = sorted(int(f) for f in (families or expected))

    items = [(f, q12, use_cache, cache_dir) for f in families]
    summaries = run_parallel(_family_summary_args, items, jobs, "table1", verbose)
    computed = {str(f): s for f, s in zip(families, summaries)}

    rows = []
    for f in families:
        summary = computed[str(f)]
        row = expected[f]
        rows.append(
            {
                "family": f,
                "dim": summary["dim"],
                "max_degree": summary["max_degree"],
                "phi_family": summary["phi_family"],
                "expected_dim": row.dim,
                "expected_max_degree": list(row.max_degree),
                "expected_phi_family": int(row.phi_family),
                "classified": summary["family"],
                "passed": summary["dim"] == row.dim
                and tuple(summary["max_degree"]) == row.max_degree
                and summary["phi_family"] == int(row.phi_family)
                and summary["family"] == f,
            }
        )
    return rows


def _family_dim(args) -> int:
    f, use_cache, cache_dir = args
    return family_summary(f, use_cache=use_cache, cache_dir=cache_dir)["dim"]


def example_z12(
    compute: bool = True,
    jobs: int = 1,
    verbose: bool = False,
    use_cache: bool = False,
    cache_dir: Optional[str] = None,
) -> dict:
    """Dimensions of the 144 simple modules of the double over Z/12 x Z/12.

    Characters are counted per family with `family_counts`. With `compute`, the dimension of each nonempty
    family is that of its representative's simple module; otherwise it is read from Table 1.
    """
    characters = [z12_character(i, j) for i in range(Constants.ORDER) for j in range(Constants.ORDER)]
    pairs = [(p.l1, p.l2) for p in characters]
    tally = family_counts(pairs)
    families = [f for f, c in tally.items() if c > 0]

    if compute:
        items = [(f, use_cache, cache_dir) for f in families]
        dims = dict(zip(families, run_parallel(_family_dim, items, jobs, "z12", verbose)))
    else:
        table = {int(row.family): row.dim for row in table1_rows()}
        dims = {f: table[f] for f in families}

    counts: Dict[int, int] = {}
    for f in families:
        counts[dims[f]] = counts.get(dims[f], 0) + tally[f]
    expected = {int(d): int(row["count"]) for d, row in Constants.Z12_COUNTS.iterrows()}

    shared = []
    for l1, l2 in pairs:
        matched = family_matches(l1, l2)
        if len(matched) > 1:
            logger.debug(f"({l1}, {l2}) is counted in {', '.join(f'I{f}' for f in matched)}")
            shared.append({"lambda1": format_cyc(l1), "lambda2": format_cyc(l2), "families": matched})

    return {
        "counts": {str(d): c for d, c in sorted(counts.items(), reverse=True)},
        "expected": {str(d): c for d, c in sorted(expected.items(), reverse=True)},
        "family_counts": {str(f): c for f, c in tally.items() if c > 0},
        "empty_families": [f for f, c in tally.items() if c == 0],
        "shared_characters": shared,
        "passed": counts == expected,
        "computed": compute,
    }
