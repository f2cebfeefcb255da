"""Matrix realization of the Lorentz algebra and its little groups.

Four-vectors are column vectors ordered (x, y, z, t) in natural units
(c = 1), with the spacelike-positive interval x^2 + y^2 + z^2 - t^2.
The library provides the six Lorentz generators, the two translation-like
combinations that generate the massless little group, a 3x3 realization
of the Euclidean group of the plane, and the boosted-generator family
whose large-rapidity limit contracts the massive little group into the
massless one.

Generator conventions, entry by entry (all other entries zero):

    J1 = -i in (y,z),  +i in (z,y)      rotation about x
    J2 = +i in (x,z),  -i in (z,x)      rotation about y
    J3 = -i in (x,y),  +i in (y,x)      rotation about z
    K1 = +i in (x,t),  +i in (t,x)      boost along x
    K2 = +i in (y,t),  +i in (t,y)      boost along y
    K3 = +i in (z,t),  +i in (t,z)      boost along z
    N1 = K1 - J2
    N2 = K2 + J1

Rotations act right-handedly: exp(-i theta J3) maps (1, 0, 0, 0) to
(cos theta, sin theta, 0, 0).  exp(-i eta K3) restricted to the (z, t)
block is [[cosh eta, sinh eta], [sinh eta, cosh eta]].  With these
conventions every group element exp(-i theta G) is a real matrix.

The planar generators act on homogeneous coordinates (x, y, 1):

    L  = -i in (x,y), +i in (y,x)       rotation about the origin
    Px = +i in (x,w)                    translation along x
    Py = +i in (y,w)                    translation along y

{J3, N1, N2} and {L, Px, Py} share their structure constants, which is
the sense in which the massless little group is E(2)-like.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

GENERATOR_LABELS = ("J1", "J2", "J3", "K1", "K2", "K3", "N1", "N2")
PLANAR_LABELS = ("L", "Px", "Py")

#: Frobenius-projection coefficient of the contracted-generator limit:
#: the boosted, rescaled J2 family converges to this multiple of N1 (and
#: the partner family to the same multiple of N2).  Pinned numerically
#: against the matrix-exponential oracle before the library was frozen.
CONTRACTION_LIMIT_COEFFICIENT = -0.5


def _levi_civita(i: int, j: int, k: int) -> float:
    return (i - j) * (j - k) * (k - i) / 2.0


def _readonly(m: np.ndarray) -> np.ndarray:
    m = np.ascontiguousarray(m)
    m.flags.writeable = False
    return m


def _build_generators() -> dict[str, np.ndarray]:
    gens: dict[str, np.ndarray] = {}
    for a in (1, 2, 3):
        rot = np.zeros((4, 4), dtype=complex)
        for i in range(3):
            for j in range(3):
                rot[i, j] = -1j * _levi_civita(a, i + 1, j + 1)
        gens[f"J{a}"] = rot
        boost = np.zeros((4, 4), dtype=complex)
        boost[a - 1, 3] = 1j
        boost[3, a - 1] = 1j
        gens[f"K{a}"] = boost
    gens["N1"] = gens["K1"] - gens["J2"]
    gens["N2"] = gens["K2"] + gens["J1"]
    return {label: _readonly(m) for label, m in gens.items()}


def _build_planar() -> dict[str, np.ndarray]:
    ell = np.zeros((3, 3), dtype=complex)
    ell[0, 1] = -1j
    ell[1, 0] = 1j
    px = np.zeros((3, 3), dtype=complex)
    px[0, 2] = 1j
    py = np.zeros((3, 3), dtype=complex)
    py[1, 2] = 1j
    return {"L": _readonly(ell), "Px": _readonly(px), "Py": _readonly(py)}


GENERATOR_MATRICES: Mapping[str, np.ndarray] = _build_generators()
PLANAR_MATRICES: Mapping[str, np.ndarray] = _build_planar()


@dataclass(frozen=True)
class Generator:
    """One of the eight canonical 4x4 generators, keyed by label."""

    label: str
    matrix: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class PlanarGenerator:
    """Rotation or translation generator on the plane, 3x3 homogeneous."""

    label: str
    matrix: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class FourVector:
    """Event or momentum (x, y, z, t), natural units."""

    x: float
    y: float
    z: float
    t: float

    def interval(self) -> float:
        """Minkowski form x^2 + y^2 + z^2 - t^2 (spacelike positive)."""
        return self.x**2 + self.y**2 + self.z**2 - self.t**2

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z, self.t], dtype=float)

    @classmethod
    def from_array(cls, a: Iterable[float]) -> "FourVector":
        x, y, z, t = (float(c) for c in a)
        return cls(x, y, z, t)

    def __add__(self, other: "FourVector") -> "FourVector":
        return FourVector(self.x + other.x, self.y + other.y,
                          self.z + other.z, self.t + other.t)

    def __sub__(self, other: "FourVector") -> "FourVector":
        return FourVector(self.x - other.x, self.y - other.y,
                          self.z - other.z, self.t - other.t)

    def __mul__(self, scale: float) -> "FourVector":
        s = float(scale)
        return FourVector(s * self.x, s * self.y, s * self.z, s * self.t)

    __rmul__ = __mul__


@dataclass(frozen=True)
class GroupElement:
    """Real Lorentz matrix exp(-i theta G) with its provenance."""

    matrix: np.ndarray = field(repr=False)
    generator_label: str = ""
    parameter: float = 0.0

    def transform(self, p: FourVector) -> FourVector:
        return FourVector.from_array(self.matrix @ p.as_array())


def generator(label: str) -> Generator:
    """Canonical generator for one of J1..J3, K1..K3, N1, N2."""
    if label not in GENERATOR_MATRICES:
        raise ValueError(f"unknown generator label {label!r}; "
                         f"expected one of {GENERATOR_LABELS}")
    return Generator(label, GENERATOR_MATRICES[label])


def planar_generator(label: str) -> PlanarGenerator:
    """Canonical plane-group generator L, Px, or Py."""
    if label not in PLANAR_MATRICES:
        raise ValueError(f"unknown planar label {label!r}; "
                         f"expected one of {PLANAR_LABELS}")
    return PlanarGenerator(label, PLANAR_MATRICES[label])


def _as_matrix(g) -> np.ndarray:
    return g.matrix if hasattr(g, "matrix") else np.asarray(g)


def commutator(a, b) -> np.ndarray:
    """ab - ba for two equally sized square matrices (or generators)."""
    ma, mb = _as_matrix(a), _as_matrix(b)
    if ma.shape != mb.shape or ma.ndim != 2 or ma.shape[0] != ma.shape[1]:
        raise ValueError("commutator needs two square matrices of equal shape")
    return ma @ mb - mb @ ma


def matrix_exponential(a: np.ndarray) -> np.ndarray:
    """exp(a) by scaling and squaring with a truncated power series.

    The argument is scaled below norm 1/2, summed to convergence at
    double precision, and squared back up.  Adequate for the small dense
    matrices used here at parameters up to |theta| ~ 20.
    """
    a = np.asarray(a, dtype=complex)
    norm = float(np.abs(a).sum(axis=0).max())
    squarings = max(0, int(math.ceil(math.log2(norm))) + 1) if norm > 0.5 else 0
    scaled = a / (2.0**squarings)
    result = np.eye(a.shape[0], dtype=complex)
    term = np.eye(a.shape[0], dtype=complex)
    for k in range(1, 30):
        term = term @ scaled / k
        result = result + term
        if float(np.abs(term).max()) < 1e-18:
            break
    for _ in range(squarings):
        result = result @ result
    return result


def group_element(g: Generator | str, theta: float) -> GroupElement:
    """Finite transformation exp(-i theta g), returned as a real matrix.

    The imaginary residue of the exponential must vanish to 1e-12 per
    entry (it is identically zero for the canonical generators) and is
    stripped from the result.
    """
    if isinstance(g, str):
        g = generator(g)
    theta = float(theta)
    if not math.isfinite(theta):
        raise ValueError("group parameter must be finite")
    m = matrix_exponential(-1j * theta * g.matrix)
    residue = float(np.abs(m.imag).max())
    if residue > 1e-12:
        raise ValueError(f"group element for {g.label} is not real "
                         f"(imaginary residue {residue:.3e})")
    return GroupElement(_readonly(m.real), g.label, theta)


def leaves_invariant(elem: GroupElement, p: FourVector, tol: float) -> bool:
    """True iff elem moves p by at most tol in the max norm."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    moved = elem.matrix @ p.as_array() - p.as_array()
    return float(np.abs(moved).max()) <= tol


def contracted_generator(eta: float, source: str = "J2") -> np.ndarray:
    """Boosted, rescaled transverse rotation generator.

    For source J2 returns exp(-eta) B J2 B^{-1} and for source J1 the
    same conjugation of J1 with an overall minus sign, where B is the
    z boost of rapidity eta.  The boost is oriented so that the family
    has a large-eta limit inside the massless little-group algebra: the
    two limits are CONTRACTION_LIMIT_COEFFICIENT times N1 and N2, and
    the distance to the limit decays like exp(-2 eta).
    """
    eta = float(eta)
    if eta < 0:
        raise ValueError("contraction rapidity must be nonnegative")
    if source == "J2":
        j, sign = GENERATOR_MATRICES["J2"], 1.0
    elif source == "J1":
        j, sign = GENERATOR_MATRICES["J1"], -1.0
    else:
        raise ValueError(f"contraction source must be 'J1' or 'J2', got {source!r}")
    boost = group_element("K3", eta).matrix
    boost_inv = group_element("K3", -eta).matrix
    return sign * math.exp(-eta) * (boost @ j @ boost_inv)


def contraction_limit(source: str = "J2") -> np.ndarray:
    """Large-rapidity limit matrix of contracted_generator."""
    target = {"J2": "N1", "J1": "N2"}.get(source)
    if target is None:
        raise ValueError(f"contraction source must be 'J1' or 'J2', got {source!r}")
    return CONTRACTION_LIMIT_COEFFICIENT * GENERATOR_MATRICES[target]


def contraction_residual(eta: float, source: str = "J2") -> float:
    """Frobenius distance from contracted_generator(eta) to its limit."""
    return float(np.linalg.norm(contracted_generator(eta, source)
                                - contraction_limit(source)))


def structure_constants(basis: list[np.ndarray]) -> np.ndarray:
    """c[i, j, k] with [A_i, A_j] = sum_k c[i, j, k] A_k.

    Coefficients are extracted by Frobenius projection, so the basis
    elements must be mutually orthogonal under <A, B> = tr(A^H B).
    """
    n = len(basis)
    c = np.zeros((n, n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            comm = commutator(basis[i], basis[j])
            for k in range(n):
                c[i, j, k] = np.vdot(basis[k], comm) / np.vdot(basis[k], basis[k])
    return c


def _relation_rows(gens: Mapping[str, np.ndarray]) -> list[tuple[str, float]]:
    eps = _levi_civita

    def resid(m: np.ndarray) -> float:
        return float(np.abs(m).max())

    rows: list[tuple[str, float]] = []
    for i, j in ((1, 2), (2, 3), (3, 1)):
        k = 6 - i - j
        target = 1j * eps(i, j, k) * gens[f"J{k}"]
        rows.append((f"[J{i} J{j}] = iJ{k}",
                     resid(commutator(gens[f"J{i}"], gens[f"J{j}"]) - target)))
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            if i == j:
                rows.append((f"[J{i} K{j}] = 0",
                             resid(commutator(gens[f"J{i}"], gens[f"K{j}"]))))
            else:
                k = 6 - i - j
                s = eps(i, j, k)
                name = f"[J{i} K{j}] = {'i' if s > 0 else '-i'}K{k}"
                target = 1j * s * gens[f"K{k}"]
                rows.append((name,
                             resid(commutator(gens[f"J{i}"], gens[f"K{j}"]) - target)))
    for i, j in ((1, 2), (2, 3), (3, 1)):
        k = 6 - i - j
        target = -1j * eps(i, j, k) * gens[f"J{k}"]
        rows.append((f"[K{i} K{j}] = -iJ{k}",
                     resid(commutator(gens[f"K{i}"], gens[f"K{j}"]) - target)))
    rows.append(("N1 = K1 - J2", resid(gens["N1"] - (gens["K1"] - gens["J2"]))))
    rows.append(("N2 = K2 + J1", resid(gens["N2"] - (gens["K2"] + gens["J1"]))))
    rows.append(("[N1 N2] = 0", resid(commutator(gens["N1"], gens["N2"]))))
    rows.append(("[J3 N1] = iN2",
                 resid(commutator(gens["J3"], gens["N1"]) - 1j * gens["N2"])))
    rows.append(("[J3 N2] = -iN1",
                 resid(commutator(gens["J3"], gens["N2"]) + 1j * gens["N1"])))
    return rows


def relation_residuals(gens: Mapping[str, np.ndarray] | None = None
                       ) -> list[tuple[str, float]]:
    """Max entrywise residual of every bracket relation of the algebra.

    An alternative generator mapping can be supplied to run the suite
    against perturbed matrices (negative-control self test).
    """
    return _relation_rows(GENERATOR_MATRICES if gens is None else gens)


def planar_commutation_check() -> list[tuple[str, float]]:
    """Plane-group bracket residuals plus the little-group match.

    The final row compares the structure constants of {J3, N1, N2} with
    those of {L, Px, Py}; a zero residual is the statement that the
    massless little group is E(2)-like.
    """
    ell, px, py = (PLANAR_MATRICES[k] for k in PLANAR_LABELS)

    def resid(m: np.ndarray) -> float:
        return float(np.abs(m).max())

    rows = [
        ("[Px Py] = 0", resid(commutator(px, py))),
        ("[L Px] = iPy", resid(commutator(ell, px) - 1j * py)),
        ("[L Py] = -iPx", resid(commutator(ell, py) + 1j * px)),
    ]
    little = [GENERATOR_MATRICES[k] for k in ("J3", "N1", "N2")]
    mismatch = np.abs(structure_constants(little)
                      - structure_constants([ell, px, py])).max()
    rows.append(("structure constants {J3 N1 N2} = {L Px Py}", float(mismatch)))
    return rows
