import json
import sys
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

import numpy as np
import pandas as pd
from tqdm.auto import tqdm
from transformers import HfArgumentParser
from transformers.utils import logging

from ufo7.algebra import BraidingData, check_confluence, dump_rules
from ufo7.cyclotomic import ZETA_POWERS, cyc, format_cyc, parse
from ufo7.rank1 import Rank1Params, rank1_dim, rank1_lowest_weight_check, rank1_oracle
from ufo7.simple import (
    SINGULAR_FAMILIES,
    SimpleReport,
    example_z12,
    hilbert,
    simple_report,
    singular_vector_report,
    submodule_iff_check,
    table1,
)
from ufo7.utils import cached_json
from ufo7.verma import build_verma, verify_relations
from ufo7.weights import (
    N_FAMILIES,
    SIMPLIFIED_PREDICATES,
    FamilyId,
    WeightParams,
    classify,
    conditions,
    corollary_shift,
    predicate_overlaps,
    representative,
    root_pairs,
    shapovalov,
)

logger = logging.get_logger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

CONDITION_NAMES = ("l1 in S1", "l1^2 l2 in S2", "l1^3 l2^2 = -1", "l1 l2 in S3", "l2 = 1")


@dataclass
class RunArgs:
    format: str = field(default="md", metadata={"choices": ["md", "csv", "json"]})
    cache_dir: Optional[str] = field(default=None, metadata={"aliases": ["--cache"]})
    jobs: int = 1
    verbose: bool = False


@dataclass
class ClassifyArgs:
    l1: str
    l2: str


@dataclass
class SimpleArgs:
    family: Optional[int] = None
    l1: Optional[str] = None
    l2: Optional[str] = None
    ls1: str = "1"
    ls2: str = "1"
    q12: str = "1"


@dataclass
class Table1Args:
    check: bool = False
    families: List[int] = None
    q12: str = "1"


@dataclass
class VerifyArgs:
    q12: str = "1"
    weights: int = 2
    seed: int = 0
    word_length: int = 4
    dump_rules: Optional[str] = None


@dataclass
class ExampleZ12Args:
    compute: bool = field(
        default=True,
        metadata={"help": "Build one representative per counted family; with --compute false, dims come from Table 1."},
    )


@dataclass
class Rank1Args:
    N: int
    q: str
    lam: str
    lg: Optional[str] = None
    ls: Optional[str] = None
    oracle: bool = False


@dataclass
class HilbertArgs:
    family: int
    q12: str = "1"


@dataclass
class FamiliesArgs:
    family_class: Optional[int] = None


def to_json(obj) -> str:
    return json.dumps(obj, indent=4, sort_keys=True)


def _cell(value) -> str:
    if isinstance(value, (list, tuple)):
        return "(" + ",".join(str(x) for x in value) + ")"
    return str(value)


def markdown_table(records: List[dict], columns: Dict[str, str]) -> str:
    """columns maps record keys to headers."""
    lines = [
        "| " + " | ".join(columns.values()) + " |",
        "|" + "|".join("---" for _ in columns) + "|",
    ]
    for record in records:
        lines.append("| " + " | ".join(_cell(record[key]) for key in columns) + " |")
    return "\n".join(lines)


def emit(obj, records: List[dict], columns: Dict[str, str], run_args: RunArgs, footer: str = ""):
    if run_args.format == "json":
        print(to_json(obj))
    elif run_args.format == "csv":
        frame = pd.DataFrame([{key: _cell(r[key]) for key in columns} for r in records], columns=list(columns))
        print(frame.to_csv(index=False), end="")
    else:
        print(markdown_table(records, columns))
        if footer:
            print()
            print(footer)


def cmd_classify(args: ClassifyArgs, run_args: RunArgs) -> int:
    l1, l2 = parse(args.l1), parse(args.l2)
    family = classify(l1, l2)
    flags = conditions(l1, l2)
    simplified = sorted(f for f, pred in SIMPLIFIED_PREDICATES.items() if pred(l1, l2))

    result = {
        "lambda1": format_cyc(l1),
        "lambda2": format_cyc(l2),
        "family": int(family),
        "family_class": family.family_class,
        "conditions": dict(zip(CONDITION_NAMES, flags)),
        "shapovalov": format_cyc(shapovalov(l1, l2)),
        "simplified_predicates": simplified,
    }
    record = dict(result, family=str(family), conditions=[int(c) for c in flags])
    columns = {
        "lambda1": "lambda1",
        "lambda2": "lambda2",
        "family": "Family",
        "family_class": "Class",
        "conditions": "Conditions",
        "shapovalov": "Sh",
    }
    emit(result, [record], columns, run_args)
    return EXIT_OK


def _simple_params(args) -> WeightParams:
    q = BraidingData(parse(args.q12))
    if args.family is not None:
        base = representative(args.family)
        return WeightParams.from_lambda(base.l1, base.l2, q, parse(args.ls1), parse(args.ls2))
    if args.l1 is None or args.l2 is None:
        raise ValueError("Pass either --family or both --l1 and --l2.")
    return WeightParams.from_lambda(parse(args.l1), parse(args.l2), q, parse(args.ls1), parse(args.ls2))


def _simple(p: WeightParams, run_args: RunArgs) -> SimpleReport:
    if run_args.cache_dir is None:
        return simple_report(p)
    d = cached_json("simple", p.to_dict(), lambda: simple_report(p).to_dict(), run_args.cache_dir)
    return SimpleReport.from_dict(d)


TABLE1_COLUMNS = {"family": "Family", "dim": "dim L(lambda)", "max_degree": "max degree", "phi_family": "L(lambda)^phi"}


def _table1_record(d: dict) -> dict:
    return dict(d, family=f"I{d['family']}", phi_family=f"I{d['phi_family']}")


def cmd_simple(args: SimpleArgs, run_args: RunArgs) -> int:
    report = _simple(_simple_params(args), run_args).to_dict()
    graded = ", ".join(f"({b1},{b2}): {d}" for b1, b2, d in report["graded_dims"])
    emit(report, [_table1_record(report)], TABLE1_COLUMNS, run_args, footer=f"graded dims: {graded}")
    return EXIT_OK


def cmd_table1(args: Table1Args, run_args: RunArgs) -> int:
    rows = table1(
        args.families,
        q12=format_cyc(parse(args.q12)),
        jobs=run_args.jobs,
        use_cache=run_args.cache_dir is not None,
        verbose=run_args.verbose,
        cache_dir=run_args.cache_dir,
    )
    matched = sum(row["passed"] for row in rows)
    records = [dict(_table1_record(row), status="ok" if row["passed"] else "MISMATCH") for row in rows]
    emit(rows, records, dict(TABLE1_COLUMNS, status="status"), run_args, footer=f"{matched}/{len(rows)} match")

    if args.check and matched != len(rows):
        logger.warning(f"{len(rows) - matched} rows of Table 1 do not match")
        return EXIT_MISMATCH
    return EXIT_OK


WEIGHT_POOL = list(ZETA_POWERS) + [cyc(2), cyc(3), cyc(Fraction(-1, 4))]


def sample_weights(n: int, q: BraidingData, seed: int = 0) -> List[WeightParams]:
    """Family 1's representative followed by n - 1 seeded draws from the roots of unity and a few rationals."""
    rng = np.random.default_rng(seed)
    base = representative(1)
    out = [WeightParams(base.lg1, base.lg2, base.ls1, base.ls2, q)]
    while len(out) < n:
        lg1, lg2, ls1, ls2 = (WEIGHT_POOL[i] for i in rng.integers(len(WEIGHT_POOL), size=4))
        out.append(WeightParams(lg1, lg2, ls1, ls2, q))
    return out


# weights where the span is a submodule, and one where it is not
SUBMODULE_WEIGHTS = {"W1": ("1", "2"), "W2": ("z^8", "2"), "W": ("2", "1")}


def verify(args: VerifyArgs, run_args: RunArgs) -> dict:
    q = BraidingData(parse(args.q12))

    aggregated = defaultdict(lambda: {"passed": 0, "total": 0})
    for p in tqdm(sample_weights(args.weights, q, args.seed), desc="weights", disable=not run_args.verbose):
        for check in verify_relations(p).checks:
            entry = aggregated[check.name]
            entry.update(group=check.group, trusted=check.trusted, note=check.note)
            entry["passed"] += check.passed
            entry["total"] += 1

    confluence = check_confluence(q=q, length=args.word_length)
    singular = [singular_vector_report(kind, q) for kind in SINGULAR_FAMILIES]

    submodules = []
    for kind, hit in SUBMODULE_WEIGHTS.items():
        for l1, l2 in (hit, ("2", "3")):
            check = submodule_iff_check(kind, build_verma(WeightParams.from_lambda(parse(l1), parse(l2), q)))
            submodules.append(
                {"kind": kind, "lambda1": l1, "lambda2": l2, "hypothesis": check.hypothesis, "closed": check.closed}
            )

    relations_ok = all(e["passed"] == e["total"] for e in aggregated.values() if e["trusted"])
    singular_ok = all(r["nonzero"] and r["singular"] and r["avoids_top"] for r in singular)
    submodules_ok = all(r["hypothesis"] == r["closed"] for r in submodules)

    return {
        "q12": format_cyc(q.q12),
        "relations": dict(sorted(aggregated.items())),
        "confluence": {
            "checked": confluence.checked,
            "mismatches": [" ".join(m.word) for m in confluence.mismatches],
            "catalog": {c.name: c.passed for c in confluence.catalog},
            "swap_rules": {c.name: c.passed for c in confluence.swap_rules},
        },
        "singular_vectors": singular,
        "submodules": submodules,
        "predicate_overlaps": predicate_overlaps(root_pairs()),
        "passed": relations_ok and confluence.passed and singular_ok and submodules_ok,
    }


def cmd_verify(args: VerifyArgs, run_args: RunArgs) -> int:
    if args.weights < 1:
        raise ValueError("--weights must be at least 1.")
    if args.dump_rules is not None:
        with open(args.dump_rules, "w") as f:
            json.dump(dump_rules(BraidingData(parse(args.q12))), f, indent=4, sort_keys=True)

    result = verify(args, run_args)
    records = [
        {
            "name": name,
            "group": e["group"],
            "trusted": "yes" if e["trusted"] else "no",
            "result": f"{e['passed']}/{e['total']}",
            "note": e["note"],
        }
        for name, e in result["relations"].items()
    ]
    confluence = result["confluence"]
    catalog_failed = [name for name, ok in confluence["catalog"].items() if not ok]
    footer = "\n".join(
        [
            f"confluence: {confluence['checked']} words, {len(confluence['mismatches'])} mismatches",
            f"straightening catalog entries not holding: {', '.join(catalog_failed) or 'none'}",
            f"derived swap rules matching their printed form: "
            f"{sum(confluence['swap_rules'].values())}/{len(confluence['swap_rules'])}",
            "singular vectors: "
            + ", ".join(f"{r['kind']}={'ok' if r['singular'] else 'FAIL'}" for r in result["singular_vectors"]),
            "submodule tests: "
            + ", ".join(
                f"{r['kind']}@({r['lambda1']},{r['lambda2']})={'ok' if r['hypothesis'] == r['closed'] else 'FAIL'}"
                for r in result["submodules"]
            ),
            f"passed: {result['passed']}",
        ]
    )
    columns = {"name": "Identity", "group": "Group", "trusted": "Trusted", "result": "Holds", "note": "Note"}
    emit(result, records, columns, run_args, footer=footer)
    return EXIT_OK if result["passed"] else EXIT_MISMATCH


def cmd_example_z12(args: ExampleZ12Args, run_args: RunArgs) -> int:
    result = example_z12(
        compute=args.compute,
        jobs=run_args.jobs,
        verbose=run_args.verbose,
        use_cache=run_args.cache_dir is not None,
        cache_dir=run_args.cache_dir,
    )
    records = [
        {"dim": int(d), "count": c, "expected": result["expected"].get(d, 0)} for d, c in result["counts"].items()
    ]
    empty = ", ".join(f"I{f}" for f in result["empty_families"])
    columns = {"dim": "dim", "count": "count", "expected": "expected"}
    emit(result, records, columns, run_args, footer=f"empty families: {empty}")
    return EXIT_OK if result["passed"] else EXIT_MISMATCH


def cmd_rank1(args: Rank1Args, run_args: RunArgs) -> int:
    p = Rank1Params(
        args.N,
        parse(args.q),
        parse(args.lam),
        None if args.lg is None else parse(args.lg),
        None if args.ls is None else parse(args.ls),
    )
    result = {"N": p.N, "q": format_cyc(p.q), "lam": format_cyc(p.lam), "dim": rank1_dim(p)}
    if args.oracle:
        result["oracle_dim"] = rank1_oracle(p)
        result["agree"] = result["oracle_dim"] == result["dim"]
        result["lowest_weight_nonzero"] = all(rank1_lowest_weight_check(p))

    emit(result, [result], {key: key for key in result}, run_args)
    if args.oracle and not (result["agree"] and result["lowest_weight_nonzero"]):
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_hilbert(args: HilbertArgs, run_args: RunArgs) -> int:
    base = representative(args.family)
    report = _simple(WeightParams.from_lambda(base.l1, base.l2, BraidingData(parse(args.q12))), run_args)
    grid = hilbert(report)

    result = dict(report.to_dict(), grid=grid)
    columns = {"b2": "b2 \\ b1", **{str(b1): str(b1) for b1 in range(len(grid[0]))}}
    records = [{"b2": b2, **{str(b1): d for b1, d in enumerate(row)}} for b2, row in enumerate(grid)]
    emit(result, records, columns, run_args, footer=f"dim L(lambda) = {report.dim}")
    return EXIT_OK


def cmd_families(args: FamiliesArgs, run_args: RunArgs) -> int:
    records = []
    for f in range(1, N_FAMILIES + 1):
        family = FamilyId(f)
        if args.family_class is not None and family.family_class != args.family_class:
            continue
        p = representative(f)
        shifted = corollary_shift(f)
        records.append(
            {
                "family": str(family),
                "family_class": family.family_class,
                "lambda1": format_cyc(p.l1),
                "lambda2": format_cyc(p.l2),
                "classified": str(classify(p.l1, p.l2)),
                "predicate": SIMPLIFIED_PREDICATES[f](p.l1, p.l2) if f in SIMPLIFIED_PREDICATES else "",
                "shift": "" if shifted is None else f"({shifted[0]},{shifted[1]}) -> I{shifted[2]}",
            }
        )
    emit(records, records, {key: key for key in records[0]} if records else {}, run_args)
    return EXIT_OK


COMMANDS: Dict[str, tuple] = {
    "classify": (ClassifyArgs, cmd_classify),
    "simple": (SimpleArgs, cmd_simple),
    "table1": (Table1Args, cmd_table1),
    "verify": (VerifyArgs, cmd_verify),
    "example-z12": (ExampleZ12Args, cmd_example_z12),
    "rank1": (Rank1Args, cmd_rank1),
    "hilbert": (HilbertArgs, cmd_hilbert),
    "families": (FamiliesArgs, cmd_families),
}


def usage() -> str:
    return "usage: python -m ufo7 {" + ",".join(COMMANDS) + "} [options | config.json]"


def parse_command(argv: List[str]):
    """(run args, command args, handler) for argv = [command, *options] or [command, config.json]."""
    if not argv or argv[0] not in COMMANDS:
        raise SystemExit(usage())

    args_class, handler = COMMANDS[argv[0]]
    parser = HfArgumentParser([RunArgs, args_class])
    rest = argv[1:]
    if len(rest) == 1 and rest[0].endswith(".json"):
        run_args, args = parser.parse_json_file(rest[0])
    else:
        run_args, args = parser.parse_args_into_dataclasses(args=rest)
    return run_args, args, handler


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if not argv or argv[0] not in COMMANDS:
        print(usage(), file=sys.stderr)
        return EXIT_USAGE

    run_args, args, handler = parse_command(argv)
    if run_args.verbose:
        logging.set_verbosity_info()

    try:
        return handler(args, run_args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
