import contextlib
import os

# avoid the "None of PyTorch, TensorFlow, etc. have been found" warning.
with contextlib.redirect_stderr(open(os.devnull, "w")):
    import transformers  # noqa

__version__ = "0.1.0"

from ufo7.algebra import BraidingData  # noqa: E402
from ufo7.cyclotomic import CycNum, cyc, parse  # noqa: E402,F401
from ufo7.simple import GradedSubspace, SimpleReport, example_z12, maximal_submodule, simple_report, table1  # noqa
from ufo7.verma import VermaModule, build_verma  # noqa: E402
from ufo7.weights import FamilyId, WeightParams, classify, representative  # noqa: E402


class Ufo7:
    """The Drinfeld double of ufo(7) for one choice of q12, with Verma modules memoized per weight."""

    def __init__(self, q12="1"):
        self.q = BraidingData(cyc(q12))
        self._vermas = {}
        self._submodules = {}

    def weight(self, l1, l2, ls1=1, ls2=1) -> WeightParams:
        return WeightParams.from_lambda(l1, l2, self.q, ls1, ls2)

    def classify(self, l1, l2) -> FamilyId:
        p = self.weight(l1, l2)
        return classify(p.l1, p.l2)

    def verma(self, p: WeightParams) -> VermaModule:
        if p not in self._vermas:
            self._vermas[p] = build_verma(p)
        return self._vermas[p]

    def maximal_submodule(self, p: WeightParams) -> GradedSubspace:
        if p not in self._submodules:
            self._submodules[p] = maximal_submodule(self.verma(p))
        return self._submodules[p]

    def simple(self, p: WeightParams) -> SimpleReport:
        return simple_report(p, self.verma(p), self.maximal_submodule(p))

    def family(self, f: int) -> SimpleReport:
        base = representative(f)
        return self.simple(self.weight(base.l1, base.l2))

    def table1(self, jobs: int = 1, verbose: bool = False):
        return table1(q12=str(self.q.q12), jobs=jobs, verbose=verbose)

    def example_z12(self, compute: bool = True, jobs: int = 1, verbose: bool = False):
        return example_z12(compute=compute, jobs=jobs, verbose=verbose)
