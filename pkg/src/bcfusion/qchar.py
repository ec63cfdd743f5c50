"""Quantum integers, q-characters, categorical dimensions, and the positive character.

All character arithmetic is floating point; fusion stays exact on the integer
side.  Evaluation happens at q = exp(z*pi*i/ell) with gcd(z, ell) = 1, so q^2
is a primitive ell-th root of unity and q^ell = (-1)^z.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import CertificationError, DomainError, SingularParameterError
from .fusion import AlcoveParams, FusionTable, alcove_enumerate
from .rootdata import RootDatum, Weight

IMAG_TOL = 1e-9


@dataclass(frozen=True)
class QuantumParams:
    """An alcove together with the exponent z selecting q = exp(z*pi*i/ell)."""

    alcove: AlcoveParams
    z: int

    def __post_init__(self):
        ell = self.alcove.ell
        if not 1 <= self.z <= ell - 1:
            raise DomainError(f"z must lie in [1, {ell - 1}], got {self.z}")
        if math.gcd(self.z, ell) != 1:
            raise DomainError(f"z={self.z} is not coprime to ell={ell}")

    @property
    def ell(self) -> int:
        return self.alcove.ell

    @property
    def datum(self) -> RootDatum:
        return self.alcove.datum

    @property
    def q(self) -> complex:
        return cmath.exp(1j * math.pi * self.z / self.ell)

    @property
    def q_ell_sign(self) -> int:
        """q^ell = (-1)^z."""
        return -1 if self.z % 2 else 1

    def q_power(self, exponent) -> complex:
        """q**exponent for an exact (half-)integer exponent."""
        return cmath.exp(1j * math.pi * self.z * float(exponent) / self.ell)


def admissible_z(ell: int) -> tuple[int, ...]:
    """All z in [1, ell-1] coprime to ell."""
    return tuple(z for z in range(1, ell) if math.gcd(z, ell) == 1)


def quantum_integer(params: QuantumParams, n) -> float:
    """[n] = (q^n - q^-n)/(q - q^-1) = sin(n z pi/ell)/sin(z pi/ell)."""
    x = math.pi * params.z / params.ell
    return math.sin(float(n) * x) / math.sin(x)


def twist_exponent(datum: RootDatum, lam: Weight) -> Fraction:
    """c_lam = <lam + 2 rho, lam>; the twist acts on V_lam by q^{c_lam}."""
    two_rho = Weight(tuple(2 * x for x in datum.rho.doubled))
    return datum.form(lam + two_rho, lam)


# -- alternating Weyl sums -------------------------------------------------

@lru_cache(maxsize=None)
def _weyl_arrays(family: str, rank: int):
    from .rootdata import make_root_datum

    elems = make_root_datum(family, rank).weyl_elements()
    perms = np.array([w.perm for w in elems], dtype=np.intp)
    signs = np.array([w.signs for w in elems], dtype=np.int64)
    eps = np.array([w.sign for w in elems], dtype=np.float64)
    return perms, signs, eps


def _weyl_images(datum: RootDatum, nu: Weight) -> tuple[np.ndarray, np.ndarray]:
    """Doubled coordinates of w(nu) for all w, plus the signature vector."""
    perms, signs, eps = _weyl_arrays(datum.family, datum.rank)
    v = np.asarray(nu.doubled, dtype=np.int64)
    return signs * v[perms], eps


def _pair_exponents(datum: RootDatum, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """<a, b> for doubled coordinate arrays a (n,k) and b (m,k), as floats."""
    prod = rows.astype(np.float64) @ cols.astype(np.float64).T
    return prod / (2.0 if datum.family == "B" else 4.0)


def alternating_sum(params: QuantumParams, v: Weight, nu: Weight) -> complex:
    """sum_w eps(w) q^<w(v), nu>, the numerator of the Weyl character at H_nu."""
    datum = params.datum
    imgs, eps = _weyl_images(datum, nu)
    expo = _pair_exponents(datum, np.asarray([v.doubled]), imgs)[0]
    phases = np.exp(1j * math.pi * params.z / params.ell * expo)
    return complex(phases @ eps)


def chi_numerator(params: QuantumParams, kappa: Weight, nu: Weight) -> complex:
    """Numerator of chi_kappa(H_nu): the alternating sum at kappa + rho."""
    return alternating_sum(params, kappa + params.datum.rho, nu)


def weyl_denominator(params: QuantumParams, nu: Weight) -> float:
    """delta(H_nu) = prod_{alpha > 0} [<alpha, nu>/2] for nu in the root lattice."""
    datum = params.datum
    if not datum.in_root_lattice(nu):
        raise DomainError(f"{nu} is not in the root lattice")
    val = 1.0
    for a in datum.positive_roots:
        val *= quantum_integer(params, datum.form(a, nu) / 2)
    return val


def weyl_denominator_sum(params: QuantumParams, nu: Weight) -> complex:
    """The same denominator as the alternating sum over W (testing route).

    Equals (q - q^-1)^{#positive roots} times the quantum-integer product.
    """
    return alternating_sum(params, params.datum.rho, nu)


def chi(params: QuantumParams, lam: Weight, nu: Weight) -> float:
    """The q-character chi_lam(H_nu) as a real number."""
    return float(chi_vector(params, nu, (lam,))[0])


def chi_vector(params: QuantumParams, nu: Weight, lambdas) -> np.ndarray:
    """chi_lam(H_nu) for many lam at once (one pass over the Weyl group)."""
    datum = params.datum
    if not datum.in_root_lattice(nu):
        raise DomainError(f"{nu} is not in the root lattice")
    imgs, eps = _weyl_images(datum, nu)
    rho = datum.rho
    rows = np.asarray([(lam + rho).doubled for lam in lambdas], dtype=np.int64)
    expo = _pair_exponents(datum, rows, imgs)
    scale = math.pi * params.z / params.ell
    nums = np.exp(1j * scale * expo) @ eps
    den = np.exp(1j * scale * _pair_exponents(datum, np.asarray([rho.doubled]), imgs)[0]) @ eps
    if abs(den) < 1e-12:
        raise SingularParameterError(f"Weyl denominator vanishes at nu={nu}, z={params.z}")
    vals = nums / den
    if np.max(np.abs(vals.imag)) > IMAG_TOL * (1.0 + np.max(np.abs(vals.real))):
        raise AssertionError(f"character at nu={nu} is not real: {vals}")
    return vals.real


def qdim(params: QuantumParams, mu: Weight) -> float:
    """Categorical dimension of V_mu by the q-deformed Weyl product formula."""
    datum = params.datum
    if not mu.is_dominant:
        raise DomainError(f"{mu} is not dominant")
    shifted = mu + datum.rho
    if datum.form(shifted, datum.theta_check) > params.ell:
        raise DomainError(f"{mu} is outside the closed alcove at ell={params.ell}")
    val = 1.0
    for a in datum.positive_roots:
        val *= quantum_integer(params, datum.form(shifted, a)) / quantum_integer(params, datum.form(datum.rho, a))
    return val


def dim_mu(params: QuantumParams, mu: Weight, lam: Weight) -> float:
    """dim^mu(V_lam) = chi_lam(H_{mu+rho}) for half-integral dominant mu."""
    return float(dim_mu_vector(params, mu, (lam,))[0])


def dim_mu_vector(params: QuantumParams, mu: Weight, lambdas) -> np.ndarray:
    if params.datum.family != "B":
        raise DomainError("dim^mu characters are defined on the type B side only")
    if not (mu.is_dominant and mu.has_uniform_parity and mu.parity == -1):
        raise DomainError(f"mu={mu} must be a half-integral dominant weight")
    return chi_vector(params, mu + params.datum.rho, lambdas)


def spin_character_product(params: QuantumParams, lam: Weight) -> float:
    """dim^{Lambda_k}(V_lam) as the coroot product of quantum-integer ratios.

    The alternating sum over W at H_{Lambda_k + rho} factors through the Weyl
    denominator of the dual (type C) root system, which turns the character
    into prod_{coroots} [<lam+rho, alpha_check>] / [<rho, alpha_check>].
    """
    datum = params.datum
    if datum.family != "B":
        raise DomainError("the spin character product is a type B construction")
    shifted = lam + datum.rho
    val = 1.0
    for a in datum.positive_roots:
        num = datum.form_coroot(shifted, a)
        den = datum.form_coroot(datum.rho, a)
        val *= quantum_integer(params, num) / quantum_integer(params, den)
    return val


# -- characters of the fusion ring ----------------------------------------

@dataclass(frozen=True)
class CharacterVector:
    """A character of the fusion ring: one real value per alcove label."""

    labels: tuple[Weight, ...]
    values: dict[Weight, float] = field(compare=False)
    name: str = ""

    def __getitem__(self, w: Weight) -> float:
        return self.values[w]

    def as_array(self) -> np.ndarray:
        return np.array([self.values[w] for w in self.labels])


def character_vector(params: QuantumParams, mu: Weight, name: str = "") -> CharacterVector:
    """The CharacterVector lam -> dim^mu(V_lam) over the alcove."""
    labels = alcove_enumerate(params.alcove)
    vals = dim_mu_vector(params, mu, labels)
    return CharacterVector(labels, dict(zip(labels, map(float, vals))), name or f"dim^{mu}@z={params.z}")


def positive_character(alcove: AlcoveParams) -> CharacterVector:
    """The unique positive character: the spin character evaluated at z = 1."""
    params = QuantumParams(alcove, 1)
    labels = alcove_enumerate(alcove)
    values = {w: spin_character_product(params, w) for w in labels}
    if any(v <= 0 for v in values.values()):
        raise AssertionError("positive character has a nonpositive value; convention bug")
    return CharacterVector(labels, values, "Dim")


def character_law_defect(vec: CharacterVector, table: FusionTable) -> float:
    """max over label pairs of |f(lam)f(mu) - sum_nu N f(nu)| / (1 + |f(lam)f(mu)|)."""
    f = vec.as_array()
    lhs = np.outer(f, f)
    rhs = np.tensordot(table.coeffs.astype(np.float64), f, axes=([2], [0]))
    return float(np.max(np.abs(lhs - rhs) / (1.0 + np.abs(lhs))))


@dataclass(frozen=True)
class PFCertificate:
    """Witness that the positive character is the only positive one."""

    s: int
    positive_count: int
    eigenvalue: float
    eigenvector: dict[Weight, float]


def pf_certify_unique(table: FusionTable) -> PFCertificate:
    """Perron-Frobenius certificate on M = N_spin^s + N_spin^{s+1}.

    Finds the smallest odd s making M entrywise positive, diagonalizes the
    symmetric M, and counts eigenvectors that are strictly positive after
    sign normalization.  Exactly one must remain.
    """
    datum = table.params.datum
    A = table.fusion_matrix(datum.spin_weight if datum.family == "B" else datum.fundamental_weight_1)
    n = table.size
    adj = (A > 0).astype(np.int32)

    def step(pattern: np.ndarray) -> np.ndarray:
        return ((pattern @ adj) > 0).astype(np.int32)

    # cur = positivity pattern of A^s (paths of exactly length s), s odd
    s, cur = 1, adj
    nxt = step(cur)
    found = None
    while s <= 2 * n:
        if (cur | nxt).all():
            found = s
            break
        cur = step(nxt)
        nxt = step(cur)
        s += 2
    if found is None:
        raise CertificationError(f"no odd s <= {2 * n} with N^s + N^(s+1) positive")
    Af = A.astype(np.float64)
    M = np.linalg.matrix_power(Af, found) + np.linalg.matrix_power(Af, found + 1)
    if not (M > 0).all():
        raise AssertionError("positivity pattern disagreed with boolean reachability")
    evals, evecs = np.linalg.eigh(M)
    positive = 0
    pf_vec, pf_val = None, None
    for i in range(n):
        v = evecs[:, i]
        v = v / v[np.argmax(np.abs(v))]
        if (v > 1e-9).all():
            positive += 1
            pf_vec, pf_val = v, float(evals[i])
    if positive != 1:
        raise CertificationError(f"expected exactly one positive eigenvector, found {positive}")
    unit = table.index(Weight.zero(table.params.rank))
    pf_vec = pf_vec / pf_vec[unit]
    return PFCertificate(found, positive, pf_val, dict(zip(table.labels, map(float, pf_vec))))
