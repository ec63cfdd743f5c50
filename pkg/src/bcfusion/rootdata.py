"""Exact root-system data and finite Weyl group operations for types B and C.

Weights are stored through their *doubled* coordinates (every entry is
2*lambda_i), so the half-integral spin weights of type B are exact integers
and all dominance / wall tests are integer comparisons.  The bilinear form
is normalized so that short roots have squared length 2: for B_k this is
twice the Euclidean dot product, for C_r it is the dot product itself.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DimensionMismatchError, DomainError, InvalidRankError

FAMILIES = ("B", "C")


@dataclass(frozen=True)
class Weight:
    """A rank-k vector in doubled coordinates (entry i is 2*lambda_i).

    Lattice weights of type B have uniformly integral or uniformly
    half-integral entries; type C weights are integral.  Vectors that mix
    the two (dual vectors such as the short coroots of B in rank >= 3) are
    representable, but ``parity`` raises for them and lattice-facing
    operations reject them.
    """

    doubled: tuple[int, ...]

    def __post_init__(self):
        if not self.doubled or any(not isinstance(x, int) for x in self.doubled):
            raise DomainError(f"doubled coordinates must be a nonempty tuple of ints, got {self.doubled!r}")

    @classmethod
    def from_entries(cls, entries) -> "Weight":
        """Build from true coordinates (ints, Fractions, or floats equal to n/2)."""
        doubled = []
        for x in entries:
            d = Fraction(x) * 2
            if d.denominator != 1:
                raise DomainError(f"entry {x} is not an integer or half-integer")
            doubled.append(int(d))
        return cls(tuple(doubled))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @property
    def rank(self) -> int:
        return len(self.doubled)

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(d, 2) for d in self.doubled)

    @property
    def has_uniform_parity(self) -> bool:
        return len({d % 2 for d in self.doubled}) == 1

    @property
    def parity(self) -> int:
        """p(lambda): +1 for integral weights, -1 for half-integral ones."""
        pars = {d % 2 for d in self.doubled}
        if len(pars) != 1:
            raise DomainError(f"{self} mixes integral and half-integral entries")
        return 1 if pars == {0} else -1

    @property
    def is_dominant(self) -> bool:
        d = self.doubled
        return all(d[i] >= d[i + 1] for i in range(len(d) - 1)) and d[-1] >= 0

    def __add__(self, other: "Weight") -> "Weight":
        _check_rank(self, other)
        return Weight(tuple(a + b for a, b in zip(self.doubled, other.doubled)))

    def __sub__(self, other: "Weight") -> "Weight":
        _check_rank(self, other)
        return Weight(tuple(a - b for a, b in zip(self.doubled, other.doubled)))

    def __str__(self) -> str:
        return ",".join(str(d // 2) if d % 2 == 0 else f"{d}/2" for d in self.doubled)


def _check_rank(a: Weight, b: Weight) -> None:
    if a.rank != b.rank:
        raise DimensionMismatchError(f"rank mismatch: {a.rank} vs {b.rank}")


@dataclass(frozen=True)
class WeylElement:
    """Signed permutation w acting by (w v)[j] = signs[j] * v[perm[j]]."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    @classmethod
    def identity(cls, rank: int) -> "WeylElement":
        return cls(tuple(range(rank)), (1,) * rank)

    @property
    def rank(self) -> int:
        return len(self.perm)

    @property
    def sign(self) -> int:
        """Signature: parity of the permutation times the product of sign flips."""
        perm = self.perm
        inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
        neg = sum(1 for s in self.signs if s < 0)
        return -1 if (inv + neg) % 2 else 1

    def apply(self, w: Weight) -> Weight:
        if w.rank != self.rank:
            raise DimensionMismatchError(f"rank mismatch: {w.rank} vs {self.rank}")
        return Weight(self.apply_doubled(w.doubled))

    def apply_doubled(self, v: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(s * v[p] for p, s in zip(self.perm, self.signs))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        """Composition self o other (apply ``other`` first)."""
        # (self*other)(v)[j] = s1[j] * (other v)[p1[j]] = s1[j]*s2[p1[j]] * v[p2[p1[j]]]
        perm = tuple(other.perm[p] for p in self.perm)
        signs = tuple(s * other.signs[p] for p, s in zip(self.perm, self.signs))
        return WeylElement(perm, signs)


@dataclass(frozen=True)
class RootDatum:
    """Root data for B_k or C_r with the short-root-normalized form."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"family must be one of {FAMILIES}, got {self.family!r}")
        if self.rank < 2:
            raise InvalidRankError(f"rank must be >= 2, got {self.rank}")

    # -- structural data ----------------------------------------------------

    @property
    def form_scale(self) -> int:
        """form(a, b) = form_scale * dot(a, b); 2 for B, 1 for C."""
        return 2 if self.family == "B" else 1

    @property
    def positive_roots(self) -> tuple[Weight, ...]:
        return _positive_roots(self.family, self.rank)

    @property
    def positive_coroots(self) -> tuple[tuple[Fraction, ...], ...]:
        """Coroots 2a/<a,a> as entry tuples (type B short coroots mix parities)."""
        return tuple(
            tuple(Fraction(2, self.form_doubled(a, a) // 2) * e for e in a.entries)
            for a in self.positive_roots
        )

    @property
    def rho(self) -> Weight:
        """Half the sum of the positive roots."""
        k = self.rank
        if self.family == "B":
            return Weight(tuple(2 * k - 2 * i - 1 for i in range(k)))
        return Weight(tuple(2 * (k - i) for i in range(k)))

    @property
    def theta(self) -> Weight:
        """Highest short root (the odd-ell convention)."""
        k = self.rank
        if self.family == "B":
            return Weight((2,) + (0,) * (k - 1))
        return Weight((2, 2) + (0,) * (k - 2))

    @property
    def theta_check(self) -> Weight:
        """Coroot of theta; equals theta since <theta,theta> = 2."""
        return self.theta

    @property
    def fundamental_weight_1(self) -> Weight:
        """Highest weight of the defining (vector) representation."""
        return Weight((2,) + (0,) * (self.rank - 1))

    @property
    def spin_weight(self) -> Weight:
        """Lambda_k = (1/2, ..., 1/2); only meaningful for family B."""
        return Weight((1,) * self.rank)

    # -- bilinear form ------------------------------------------------------

    def form_doubled(self, a: Weight, b: Weight) -> int:
        """2*<a, b> as an exact integer."""
        if a.rank != self.rank or b.rank != self.rank:
            raise DimensionMismatchError(f"expected rank {self.rank}, got {a.rank} and {b.rank}")
        s = sum(x * y for x, y in zip(a.doubled, b.doubled))
        if self.family == "B":
            return s
        if s % 2:
            raise DomainError(f"form of {a} and {b} is not half-integral for family C")
        return s // 2

    def form(self, a: Weight, b: Weight) -> Fraction:
        """The normalized bilinear form <a, b>."""
        return Fraction(self.form_doubled(a, b), 2)

    def form_coroot(self, v: Weight, root: Weight) -> Fraction:
        """<v, root_check> = 2 form(v, root) / form(root, root)."""
        return Fraction(2 * self.form_doubled(v, root), self.form_doubled(root, root))

    # -- Weyl group ---------------------------------------------------------

    def weyl_elements(self) -> tuple[WeylElement, ...]:
        """All 2^k k! signed permutations (hyperoctahedral Weyl group)."""
        return _weyl_elements(self.rank)

    def dominant_reduce(self, x: Weight) -> tuple[WeylElement, Weight]:
        """Deterministic w with w(x) dominant: stable sort of |entries|, descending.

        Sign flips are counted for entries that start out negative; ties are
        broken by original position, so the signature is reproducible.
        """
        if x.rank != self.rank:
            raise DimensionMismatchError(f"expected rank {self.rank}, got {x.rank}")
        order = sorted(range(self.rank), key=lambda i: (-abs(x.doubled[i]), i))
        signs = tuple(-1 if x.doubled[i] < 0 else 1 for i in order)
        w = WeylElement(tuple(order), signs)
        return w, w.apply(x)

    def weyl_orbit(self, mu: Weight) -> frozenset[tuple[int, ...]]:
        """All distinct images of mu under W, as doubled tuples."""
        if not mu.is_dominant:
            raise DomainError(f"{mu} is not dominant")
        return _orbit(mu.doubled)

    def orbit_size(self, mu: Weight) -> int:
        return len(_orbit(mu.doubled))

    # -- representation data ------------------------------------------------

    def root_coordinates(self, delta: Weight) -> tuple[int, ...] | None:
        """Coefficients of delta in the simple-root basis, or None if not in Q.

        For B the coefficients are the halved partial sums of the doubled
        coordinates; for C the last one carries an extra factor of 2.
        """
        ps, coords = 0, []
        for j, d in enumerate(delta.doubled):
            ps += d
            last = self.family == "C" and j == self.rank - 1
            div = 4 if last else 2
            if ps % div:
                return None
            coords.append(ps // div)
        return tuple(coords)

    def in_root_lattice(self, v: Weight) -> bool:
        coords = self.root_coordinates(v)
        return coords is not None

    def dominant_weight_multiplicities(self, lam: Weight) -> dict[Weight, int]:
        """Freudenthal multiplicities of the dominant weights of V_lam."""
        if not lam.is_dominant:
            raise DomainError(f"{lam} is not dominant")
        if not lam.has_uniform_parity or (self.family == "C" and lam.parity != 1):
            raise DomainError(f"{lam} is not in the weight lattice of {self.family}_{self.rank}")
        raw = _freudenthal(self.family, self.rank, lam.doubled)
        return {Weight(m): c for m, c in raw.items()}

    def weight_multiplicities(self, lam: Weight) -> dict[Weight, int]:
        """Multiplicity of every weight of V_lam (all Weyl images included)."""
        out: dict[Weight, int] = {}
        for mu, c in self.dominant_weight_multiplicities(lam).items():
            for v in _orbit(mu.doubled):
                out[Weight(v)] = c
        return out

    def weyl_dim(self, lam: Weight) -> int:
        """Classical dimension of V_lam by the Weyl dimension formula."""
        if not lam.is_dominant:
            raise DomainError(f"{lam} is not dominant")
        return _weyl_dim(self.family, self.rank, lam.doubled)


@lru_cache(maxsize=None)
def make_root_datum(family: str, rank: int) -> RootDatum:
    """Construct (and memoize) the root datum for B_rank or C_rank."""
    return RootDatum(family, rank)


@lru_cache(maxsize=None)
def _positive_roots(family: str, rank: int) -> tuple[Weight, ...]:
    out = []
    for s in range(rank):
        for t in range(s + 1, rank):
            for sgn in (1, -1):
                v = [0] * rank
                v[s], v[t] = 2, 2 * sgn
                out.append(Weight(tuple(v)))
    short = 2 if family == "B" else 4
    for u in range(rank):
        v = [0] * rank
        v[u] = short
        out.append(Weight(tuple(v)))
    return tuple(out)


@lru_cache(maxsize=None)
def _weyl_elements(rank: int) -> tuple[WeylElement, ...]:
    out = []
    for perm in itertools.permutations(range(rank)):
        for signs in itertools.product((1, -1), repeat=rank):
            out.append(WeylElement(perm, signs))
    return tuple(out)


@lru_cache(maxsize=None)
def _orbit(doubled: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    images = set()
    for p in set(itertools.permutations(doubled)):
        nz = [i for i, x in enumerate(p) if x]
        for signs in itertools.product((1, -1), repeat=len(nz)):
            v = list(p)
            for i, s in zip(nz, signs):
                v[i] = s * v[i]
            images.add(tuple(v))
    return frozenset(images)


def _fd(family: str, a: tuple[int, ...], b: tuple[int, ...]) -> int:
    s = sum(x * y for x, y in zip(a, b))
    return s if family == "B" else s // 2


@lru_cache(maxsize=None)
def _freudenthal(family: str, rank: int, lam: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    datum = make_root_datum(family, rank)
    roots = [r.doubled for r in _positive_roots(family, rank)]
    rho = datum.rho.doubled
    lam_rho = tuple(a + b for a, b in zip(lam, rho))
    top_norm = _fd(family, lam, lam)
    top_casimir = _fd(family, lam_rho, lam_rho)

    doms = _dominant_below(datum, lam)
    # process by increasing height of lam - mu so higher multiplicities exist first
    doms.sort(key=lambda m: sum(datum.root_coordinates(Weight(lam) - Weight(m))))
    mult: dict[tuple[int, ...], int] = {lam: 1}
    for mu in doms:
        if mu == lam:
            continue
        mu_rho = tuple(a + b for a, b in zip(mu, rho))
        denom = top_casimir - _fd(family, mu_rho, mu_rho)
        num = 0
        for a in roots:
            j = 1
            while True:
                w = tuple(x + j * y for x, y in zip(mu, a))
                if _fd(family, w, w) > top_norm:
                    break
                key = tuple(sorted((abs(x) for x in w), reverse=True))
                m = mult.get(key, 0)
                if m:
                    num += 2 * m * _fd(family, w, a)
                j += 1
        if num % denom:
            raise AssertionError(f"Freudenthal recursion not integral at {mu} below {lam}")
        mult[mu] = num // denom
    return mult


def _dominant_below(datum: RootDatum, lam: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Dominant weights mu <= lam in the root order (candidates for P(lam))."""
    par = lam[0] % 2
    rng = range(par, lam[0] + 1, 2)
    out = []
    for tup in itertools.product(rng, repeat=datum.rank):
        if any(tup[i] < tup[i + 1] for i in range(datum.rank - 1)):
            continue
        coords = datum.root_coordinates(Weight(lam) - Weight(tup))
        if coords is not None and all(c >= 0 for c in coords):
            out.append(tup)
    return out


@lru_cache(maxsize=None)
def _weyl_dim(family: str, rank: int, lam: tuple[int, ...]) -> int:
    datum = make_root_datum(family, rank)
    rho = datum.rho.doubled
    lam_rho = tuple(a + b for a, b in zip(lam, rho))
    num = den = 1
    for a in (r.doubled for r in _positive_roots(family, rank)):
        num *= _fd(family, lam_rho, a)
        den *= _fd(family, rho, a)
    if num % den:
        raise AssertionError(f"Weyl dimension formula not integral at {lam}")
    return num // den
