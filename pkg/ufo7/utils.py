import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Callable, Optional

import pandas as pd
from cached_property import cached_property
from transformers.utils import logging

logger = logging.get_logger(__name__)


class ConstantsClass:
    ORDER = 12

    @cached_property
    def ROOT_DIR(self):
        return Path(os.path.abspath(os.path.join(os.path.dirname(__file__))))

    @cached_property
    def CACHE_DIR(self):
        CACHE_DIR = Path(os.environ.get("UFO7_CACHE_DIR", self.ROOT_DIR / ".cache"))
        CACHE_DIR.mkdir(parents=True, exist_ok=True)

        return CACHE_DIR

    @cached_property
    def TABLE1(self):
        return pd.read_csv(os.path.join(self.ROOT_DIR, "data", "table1.csv"), index_col=0)

    @cached_property
    def FAMILIES(self):
        return pd.read_csv(
            os.path.join(self.ROOT_DIR, "data", "families.csv"),
            index_col=0,
            dtype={"lambda1": str, "lambda2": str},
        )

    @cached_property
    def Z12_COUNTS(self):
        return pd.read_csv(os.path.join(self.ROOT_DIR, "data", "z12_counts.csv"), index_col=0)

    @cached_property
    def POINT_FAMILIES(self):
        """(log_z lambda1, log_z lambda2) -> family, for the 37 points."""
        from ufo7.cyclotomic import parse

        points = self.FAMILIES[self.FAMILIES["family_class"] == 2]
        return {
            (parse(row["lambda1"]).zeta_log(), parse(row["lambda2"]).zeta_log()): family
            for family, row in points.iterrows()
        }


Constants = ConstantsClass()


def cache_key(kind: str, params: dict) -> str:
    from ufo7 import __version__

    payload = json.dumps({"kind": kind, "params": params, "version": __version__}, sort_keys=True)
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def cached_json(kind: str, params: dict, compute: Callable[[], dict], cache_dir: Optional[Path] = None) -> dict:
    """Loads a report from the cache, or computes and atomically stores it."""
    cache_dir = Path(cache_dir) if cache_dir is not None else Constants.CACHE_DIR
    path = cache_dir / f"{kind}-{cache_key(kind, params)}.json"

    if path.exists():
        try:
            return json.load(open(path))
        except json.JSONDecodeError:
            logger.warning(f"Ignoring corrupt cache entry {path}.")

    result = compute()
    cache_dir.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    with os.fdopen(fd, "w") as f:
        json.dump(result, f, indent=4, sort_keys=True)
    os.replace(tmp, path)

    return result
