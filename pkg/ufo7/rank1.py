"""The rank-one analogue of u_q(sl2): generators E, F, g, s with E^N = F^N = 0 and q = s(g)."""
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from ufo7 import linalg
from ufo7.cyclotomic import ONE, ZETA_POWERS, CycNum, cyc, qint


class Rank1ParamsError(ValueError):
    pass


@dataclass(frozen=True)
class Rank1Params:
    N: int
    q: CycNum
    lam: CycNum
    lg: Optional[CycNum] = None
    ls: Optional[CycNum] = None

    def __post_init__(self):
        q, lam = cyc(self.q), cyc(self.lam)
        if self.N < 2:
            raise Rank1ParamsError(f"N must be at least 2, got {self.N}.")
        if q.root_of_unity_order() != self.N:
            raise Rank1ParamsError(f"q = {q} is not a primitive root of unity of order {self.N}.")
        if not lam:
            raise Rank1ParamsError("lam must be nonzero.")

        ls = ONE if self.ls is None else cyc(self.ls)
        lg = lam / ls if self.lg is None else cyc(self.lg)
        if not lg or not ls or lg * ls != lam:
            raise Rank1ParamsError(f"lambda(g) = {lg} and lambda(s) = {ls} must be nonzero with product {lam}.")

        object.__setattr__(self, "q", q)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "lg", lg)
        object.__setattr__(self, "ls", ls)


def rank1_roots(N: int) -> List[CycNum]:
    """The primitive N-th roots of unity in Q(z)."""
    return [x for x in ZETA_POWERS if x.root_of_unity_order() == N]


def rank1_dim(p: Rank1Params) -> int:
    for j in range(1, p.N + 1):
        if p.lam == p.q ** (1 - j):
            return j
    return p.N


def f_coefficient(p: Rank1Params, j: int) -> CycNum:
    """F E^j v = c_j E^(j-1) v with c_j = -(j)_q (l(g) - q^(1-j) l(s)^-1)."""
    return -qint(j, p.q) * (p.lg - p.q ** (1 - j) * p.ls.inv())


def verma_matrices(p: Rank1Params):
    """E and F on the basis E^k v, k = 0..N-1."""
    E = linalg.zeros(p.N, p.N)
    F = linalg.zeros(p.N, p.N)
    for k in range(p.N - 1):
        E[k + 1, k] = ONE
    for j in range(1, p.N):
        F[j - 1, j] = f_coefficient(p, j)
    return E, F


def rank1_oracle(p: Rank1Params) -> int:
    """dim of the simple quotient, by the same radical recursion as in rank two."""
    _, F = verma_matrices(p)
    quotient = [linalg.identity(1)]
    for j in range(1, p.N):
        block = linalg.as_matrix([[F[j - 1, j]]])
        quotient.append(linalg.rref(linalg.matmul(quotient[j - 1], block))[0])
    return sum(q.shape[0] for q in quotient)


@dataclass
class Rank1Action:
    dim: int
    E: List[Optional[int]]
    F: List[CycNum]
    g: List[CycNum]
    s: List[CycNum]


def rank1_basis_action(p: Rank1Params) -> Rank1Action:
    """L(lambda) on v_i = E^i v: E v_i = v_(i+1), F v_i = (i)_q (q^(1-i) l(s^-1) - l(g)) v_(i-1)."""
    d = rank1_dim(p)
    return Rank1Action(
        dim=d,
        E=[i + 1 if i + 1 < d else None for i in range(d)],
        F=[qint(i, p.q) * (p.q ** (1 - i) * p.ls.inv() - p.lg) for i in range(d)],
        g=[p.lg * p.q**i for i in range(d)],
        s=[p.ls * p.q**i for i in range(d)],
    )


def rank1_lowest_weight_check(p: Rank1Params) -> List[CycNum]:
    """a_i with F^i E^i v = a_i v for i < dim L; all of them are nonzero."""
    out = [ONE]
    for i in range(1, rank1_dim(p)):
        out.append(out[-1] * f_coefficient(p, i))
    return out


def rank1_radical_vector(p: Rank1Params) -> np.ndarray:
    """E v_(d-1) = E^d v in Verma coordinates; it lies in the radical when d < N."""
    d = rank1_dim(p)
    out = linalg.zero_vector(p.N)
    if d < p.N:
        out[d] = ONE
    return out
