"""The alcove involution phi(lam) = gamma - w1(lam) and the simple current gamma.

gamma = ((ell-2k)/2, ..., (ell-2k)/2) is the unique alcove label of maximal
length; tensoring with V_gamma permutes the simple objects by phi, and phi
flips every character at most by a sign.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .fusion import AlcoveParams, FusionTable, alcove_enumerate
from .rootdata import Weight, WeylElement


@dataclass(frozen=True)
class InvolutionData:
    """gamma, the coordinate reversal w1, and phi as a permutation of the alcove."""

    alcove: AlcoveParams
    gamma: Weight
    w1: WeylElement
    perm: tuple[int, ...]

    @classmethod
    def build(cls, alcove: AlcoveParams) -> "InvolutionData":
        if alcove.datum.family != "B":
            raise DomainError("the involution is defined on the type B alcove")
        k = alcove.datum.rank
        gamma = Weight((alcove.ell - 2 * k,) * k)
        w1 = WeylElement(tuple(reversed(range(k))), (1,) * k)
        labels = alcove_enumerate(alcove)
        index = {w: i for i, w in enumerate(labels)}
        perm = []
        for lam in labels:
            img = gamma - w1.apply(lam)
            if img not in index:
                raise AssertionError(f"phi({lam}) = {img} escaped the alcove")
            perm.append(index[img])
        perm = tuple(perm)
        if any(perm[perm[i]] != i for i in range(len(perm))):
            raise AssertionError("phi is not an involution")
        if any(perm[i] == i for i in range(len(perm))):
            raise AssertionError("phi has a fixed point")
        return cls(alcove, gamma, w1, perm)

    @property
    def labels(self) -> tuple[Weight, ...]:
        return alcove_enumerate(self.alcove)

    def phi(self, lam: Weight) -> Weight:
        """gamma - w1(lam), defined for alcove labels."""
        labels = self.labels
        try:
            i = labels.index(lam)
        except ValueError:
            raise DomainError(f"{lam} is not in the alcove C_{self.alcove.ell}") from None
        return labels[self.perm[i]]

    def permutation_matrix(self) -> np.ndarray:
        n = len(self.perm)
        P = np.zeros((n, n), dtype=np.int64)
        for i, j in enumerate(self.perm):
            P[j, i] = 1
        return P


def phi(data: InvolutionData, lam: Weight) -> Weight:
    return data.phi(lam)


def verify_simple_current(table: FusionTable, data: InvolutionData) -> bool:
    """V_gamma (x) V_mu = V_phi(mu): N_gamma is phi's permutation matrix, squaring to 1."""
    N_gamma = table.fusion_matrix(data.gamma)
    P = data.permutation_matrix()
    if not np.array_equal(N_gamma, P):
        return False
    return np.array_equal(N_gamma @ N_gamma, np.eye(table.size, dtype=np.int64))


def phi_sign(k: int, q_ell_sign: int) -> int:
    """The sign s with dim(V_phi(lam)) = s * dim(V_lam), from the rank mod 4.

    For q^ell = -1 the sign is + exactly when k = 0, 1 mod 4; for q^ell = +1
    exactly when k = 0, 3 mod 4.
    """
    if q_ell_sign not in (1, -1):
        raise DomainError(f"q_ell_sign must be +-1, got {q_ell_sign}")
    if q_ell_sign == -1:
        return 1 if k % 4 in (0, 1) else -1
    return 1 if k % 4 in (0, 3) else -1
