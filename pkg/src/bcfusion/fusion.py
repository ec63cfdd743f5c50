"""Alcove enumeration, affine Weyl reduction, and fusion coefficients.

The truncated tensor product at an odd root of unity is computed by
Racah-Speiser summation over the weight multiset P(lambda) with each shifted
weight reduced into the alcove under the rho-shifted dot action of the
affine Weyl group.  The two-stage variant (classical decomposition first,
affine antisymmetrization second) is kept as an independent oracle.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import ConfigurationError, DomainError
from .rootdata import RootDatum, Weight, make_root_datum

ReduceCache = dict[tuple[int, ...], tuple[int, tuple[int, ...] | None]]


@dataclass(frozen=True)
class AlcoveParams:
    """A root datum together with an odd level ell defining the alcove C_ell."""

    datum: RootDatum
    ell: int

    def __post_init__(self):
        if self.ell < 3 or self.ell % 2 == 0:
            raise ConfigurationError(f"ell must be an odd integer >= 3, got {self.ell}")
        # the alcove must contain gamma = ((ell-2k)/2, ..., (ell-2k)/2) resp. be nonempty
        if self.datum.family == "B" and self.ell <= 2 * self.datum.rank:
            raise ConfigurationError(
                f"ell={self.ell} too small for B_{self.datum.rank} (need ell > 2k)")
        if self.datum.family == "C" and self.ell <= 2 * self.datum.rank - 1:
            raise ConfigurationError(
                f"ell={self.ell} too small for C_{self.datum.rank}")

    @property
    def rank(self) -> int:
        return self.datum.rank

    @property
    def nondegenerate(self) -> bool:
        """rho + Lambda_1 in C_ell; for B_k this reads 4k < ell."""
        return self.contains(self.datum.rho + self.datum.fundamental_weight_1)

    def _pairing_theta(self, v_doubled: tuple[int, ...]) -> int:
        """<v, theta_check> as an exact integer (v in the weight lattice)."""
        if self.datum.family == "B":
            return v_doubled[0]
        return (v_doubled[0] + v_doubled[1]) // 2

    def contains(self, mu: Weight) -> bool:
        """Whether mu labels a simple object: dominant and <mu+rho, theta_check> < ell."""
        if mu.rank != self.rank or not mu.has_uniform_parity:
            return False
        if self.datum.family == "C" and mu.parity != 1:
            return False
        if not mu.is_dominant:
            return False
        shifted = (mu + self.datum.rho).doubled
        return self._pairing_theta(shifted) < self.ell


def alcove_enumerate(params: AlcoveParams) -> tuple[Weight, ...]:
    """The labels of C_ell in graded lexicographic order on doubled coordinates."""
    return _alcove_enumerate(params.datum.family, params.datum.rank, params.ell)


@lru_cache(maxsize=None)
def _alcove_enumerate(family: str, rank: int, ell: int) -> tuple[Weight, ...]:
    params = AlcoveParams(make_root_datum(family, rank), ell)
    out = []
    parities = (0, 1) if family == "B" else (0,)
    # cap on the doubled first coordinate from <mu+rho, theta_check> < ell
    cap = ell - 2 * rank if family == "B" else 2 * ell - 4 * rank
    for par in parities:
        for tup in _dominant_tuples(rank, par, cap):
            w = Weight(tup)
            if params.contains(w):
                out.append(w)
    out.sort(key=lambda w: (sum(w.doubled), w.doubled))
    return tuple(out)


def _dominant_tuples(rank: int, parity: int, cap: int):
    """Weakly decreasing nonnegative doubled tuples of fixed parity, first entry <= cap."""
    def rec(prefix: tuple[int, ...], top: int):
        if len(prefix) == rank:
            yield prefix
            return
        for x in range(top - (top - parity) % 2, parity - 1, -2):
            yield from rec(prefix + (x,), x)
    yield from rec((), cap)


def affine_reduce(params: AlcoveParams, xi: Weight) -> tuple[Weight | None, int]:
    """Reduce xi into C_ell under the dot action of the affine Weyl group.

    Returns (label, sign) where sign is the signature of the reducing
    element (the affine reflection counts -1), or (None, 0) when xi + rho
    lies on a reflection hyperplane.
    """
    if xi.rank != params.rank:
        raise DomainError(f"expected rank {params.rank}, got {xi.rank}")
    sign, lab = _reduce_doubled(params, tuple(a + b for a, b in zip(xi.doubled, params.datum.rho.doubled)))
    return (None, 0) if sign == 0 else (Weight(lab), sign)


def _reduce_doubled(params: AlcoveParams, v: tuple[int, ...]) -> tuple[int, tuple[int, ...] | None]:
    """Core reduction of the already rho-shifted vector v (doubled coords)."""
    ell, family = params.ell, params.datum.family
    rho = params.datum.rho.doubled
    sign = 1
    while True:
        # finite Weyl reduction: sort absolute values, descending
        w = sorted((abs(x) for x in v), reverse=True)
        if w[-1] == 0 or any(w[i] == w[i + 1] for i in range(len(w) - 1)):
            return 0, None
        neg = sum(1 for x in v if x < 0)
        inv = _inversions(v)
        if (neg + inv) % 2:
            sign = -sign
        pairing = w[0] if family == "B" else (w[0] + w[1]) // 2
        if pairing < ell:
            return sign, tuple(a - b for a, b in zip(w, rho))
        if pairing == ell:
            return 0, None
        # affine reflection t_ell: v += (ell - <v,theta_check>) * theta, doubled
        shift = 2 * (ell - pairing)
        if family == "B":
            v = (w[0] + shift,) + tuple(w[1:])
        else:
            v = (w[0] + shift, w[1] + shift) + tuple(w[2:])
        sign = -sign


def _inversions(v: tuple[int, ...]) -> int:
    """Inversion count of the permutation sorting |v| in descending order."""
    a = [abs(x) for x in v]
    return sum(1 for i in range(len(a)) for j in range(i + 1, len(a)) if a[i] < a[j])


def classical_tensor(datum: RootDatum, lam: Weight, mu: Weight) -> dict[Weight, int]:
    """Decompose V_lam (x) V_mu classically (Racah-Speiser over P(lam))."""
    for w in (lam, mu):
        if not w.is_dominant:
            raise DomainError(f"{w} is not dominant")
    if datum.weyl_dim(lam) > datum.weyl_dim(mu):
        lam, mu = mu, lam
    rho = datum.rho.doubled
    out: dict[tuple[int, ...], int] = {}
    for dom, m in datum.dominant_weight_multiplicities(lam).items():
        for kap in datum.weyl_orbit(dom):
            v = tuple(a + b + c for a, b, c in zip(mu.doubled, kap, rho))
            w = sorted((abs(x) for x in v), reverse=True)
            if w[-1] == 0 or any(w[i] == w[i + 1] for i in range(len(w) - 1)):
                continue
            s = -1 if (sum(1 for x in v if x < 0) + _inversions(v)) % 2 else 1
            lab = tuple(a - b for a, b in zip(w, rho))
            out[lab] = out.get(lab, 0) + s * m
    res = {Weight(lab): c for lab, c in out.items() if c}
    if any(c < 0 for c in res.values()):
        raise AssertionError(f"negative classical multiplicity in {lam} (x) {mu}")
    return res


def fuse(params: AlcoveParams, lam: Weight, mu: Weight,
         _cache: ReduceCache | None = None) -> dict[Weight, int]:
    """Fusion coefficients N_{lam,mu}^: one Racah-Speiser pass with affine reduction."""
    for w in (lam, mu):
        if not params.contains(w):
            raise DomainError(f"{w} is not in the alcove C_{params.ell}")
    datum = params.datum
    if datum.weyl_dim(lam) > datum.weyl_dim(mu):
        lam, mu = mu, lam
    out: dict[tuple[int, ...] | None, int] = {}
    rho = datum.rho.doubled
    cache = _cache if _cache is not None else {}
    for dom, m in datum.dominant_weight_multiplicities(lam).items():
        for kap in datum.weyl_orbit(dom):
            key = tuple(a + b + c for a, b, c in zip(mu.doubled, kap, rho))
            hit = cache.get(key)
            if hit is None:
                hit = _reduce_doubled(params, key)
                cache[key] = hit
            s, lab = hit
            if s:
                out[lab] = out.get(lab, 0) + s * m
    res = {Weight(lab): c for lab, c in out.items() if c}
    if any(c < 0 for c in res.values()):
        raise AssertionError(f"negative fusion coefficient in {lam} (x) {mu}")
    return res


def fuse_two_stage(params: AlcoveParams, lam: Weight, mu: Weight) -> dict[Weight, int]:
    """Oracle path: classical decomposition, then affine antisymmetrization."""
    out: dict[Weight, int] = {}
    for nu, m in classical_tensor(params.datum, lam, mu).items():
        lab, s = affine_reduce(params, nu)
        if s:
            out[lab] = out.get(lab, 0) + s * m
    return {lab: c for lab, c in out.items() if c}


@dataclass(frozen=True)
class FusionTable:
    """All structure constants N_{lam,mu}^{nu} over the alcove, in canonical order."""

    params: AlcoveParams
    labels: tuple[Weight, ...]
    coeffs: np.ndarray = field(repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {w: i for i, w in enumerate(self.labels)})

    @classmethod
    def build(cls, params: AlcoveParams) -> "FusionTable":
        labels = alcove_enumerate(params)
        index = {w: i for i, w in enumerate(labels)}
        n = len(labels)
        dims = [params.datum.weyl_dim(w) for w in labels]
        coeffs = np.zeros((n, n, n), dtype=np.int64)
        cache: ReduceCache = {}
        for i in range(n):
            for j in range(i, n):
                small, big = (i, j) if dims[i] <= dims[j] else (j, i)
                row = fuse(params, labels[small], labels[big], _cache=cache)
                for nu, c in row.items():
                    coeffs[i, j, index[nu]] = c
                if j > i:
                    coeffs[j, i] = coeffs[i, j]
        coeffs.setflags(write=False)
        return cls(params, labels, coeffs)

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, w: Weight) -> int:
        try:
            return self._index[w]
        except KeyError:
            raise DomainError(f"{w} is not an alcove label") from None

    def coefficient(self, lam: Weight, mu: Weight, nu: Weight) -> int:
        return int(self.coeffs[self.index(lam), self.index(mu), self.index(nu)])

    def fusion_matrix(self, lam: Weight) -> np.ndarray:
        """N_lam with rows indexed by the output label: (N_lam)[nu, mu] = N_{lam,mu}^{nu}."""
        return self.coeffs[self.index(lam)].T.copy()

    def to_json_dict(self) -> dict:
        return {
            "family": self.params.datum.family,
            "rank": self.params.datum.rank,
            "ell": self.params.ell,
            "labels": [list(w.doubled) for w in self.labels],
            "N": self.coeffs.tolist(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"), sort_keys=True)

    # -- ring invariants (exact) ---------------------------------------------

    def check_unit(self) -> bool:
        """N_{0,mu}^{nu} = delta_{mu,nu}."""
        unit = self.index(Weight.zero(self.params.rank))
        return bool(np.array_equal(self.coeffs[unit], np.eye(self.size, dtype=np.int64)))

    def check_total_symmetry(self) -> bool:
        """N is invariant under all permutations of its three indices."""
        N = self.coeffs
        return all(np.array_equal(N, N.transpose(p)) for p in ((1, 0, 2), (0, 2, 1), (2, 1, 0)))

    def check_associativity(self) -> bool:
        """N_lam N_mu = sum_sigma N_{lam,mu}^{sigma} N_sigma for all lam, mu.

        Matrix entries stay far below 2**53, so float64 contractions are exact.
        """
        N = self.coeffs.astype(np.float64)
        T = N.transpose(0, 2, 1)  # T[m] = fusion matrix of label m
        for i in range(self.size):
            # lhs[a, m, c] = (T_i T_m)[a, c];  rhs[m, a, c] = sum_s N_{i,m}^s T_s[a, c]
            lhs = np.tensordot(T[i], T, axes=([1], [1]))
            rhs = np.tensordot(N[i], T, axes=([1], [0]))
            if not np.array_equal(lhs.transpose(1, 0, 2), rhs):
                return False
        return True

    def check_sector_grading(self) -> bool:
        """N_{lam,mu}^{nu} = 0 unless p(nu) = p(lam) p(mu)."""
        pars = np.array([w.parity for w in self.labels])
        bad = self.coeffs * (pars[:, None, None] * pars[None, :, None] != pars[None, None, :])
        return not bad.any()


def fusion_matrix(table: FusionTable, lam: Weight) -> np.ndarray:
    return table.fusion_matrix(lam)


def bratteli_endo_dim(table: FusionTable, generator: Weight, n: int) -> tuple[dict[Weight, int], int]:
    """Path counts from the unit into each label after n fusions with ``generator``.

    Returns (counts, total) with total = sum of squared counts, the dimension
    of the centralizer algebra End(generator^(x) n).
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    M = table.fusion_matrix(generator)
    vec = np.zeros(table.size, dtype=np.int64)
    vec[table.index(Weight.zero(table.params.rank))] = 1
    for _ in range(n):
        vec = M @ vec
    counts = {w: int(c) for w, c in zip(table.labels, vec) if c}
    return counts, int((vec * vec).sum())
