"""Discrete Schrodinger operators H = -A + Q and their spectra.

The degree matrix is absorbed into the per-vertex potential, so the
operator acting on a vertex function f is (Hf)_i = -sum_{j~i} w_ij f_j
+ q_i f_i.  Diagonalization is full and dense (LAPACK symmetric solver);
sizes here are desk-scale.  Spectral indices in the public API are
1-based: eigenvalue(1) is the ground energy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import (
    ConvergenceFailure,
    DegenerateData,
    DimensionMismatch,
    VerificationError,
)
from .graphs import Graph

# Relative tolerance targets of the dense eigensolver.
EIG_TOL = 1e-12
# An eigenvalue is treated as simple when the gap to its neighbors exceeds
# GAP_TOL times the spectral range; a component is nonzero when it exceeds
# COMP_TOL times the max-norm of the vector.
GAP_TOL = 1e-8
COMP_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class Hamiltonian:
    """Dense symmetric operator together with its provenance.

    ``graph`` is the current factor (surgery replaces it), ``potential``
    the current diagonal, and ``steps`` the compensated edge deletions
    applied since assembly.
    """

    matrix: np.ndarray
    graph: Graph
    potential: np.ndarray
    steps: tuple = ()

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    def norm(self) -> float:
        """Infinity norm, used to scale residual tolerances."""
        return float(np.abs(self.matrix).sum(axis=1).max())

    def apply(self, f: np.ndarray) -> np.ndarray:
        return self.matrix @ f

    def residual(self, f: np.ndarray, lam: float) -> float:
        return float(np.abs(self.matrix @ f - lam * f).max())


def as_potential(g: Graph, q) -> np.ndarray:
    q = np.asarray(q, dtype=float)
    if q.shape != (g.vertex_count,):
        raise DimensionMismatch(
            f"potential has shape {q.shape}, expected ({g.vertex_count},)"
        )
    if not np.all(np.isfinite(q)):
        raise ValueError("potential values must be finite")
    return q


def assemble_hamiltonian(g: Graph, q) -> Hamiltonian:
    """H with H_ii = q_i and H_ij = -w_ij for i ~ j."""
    q = as_potential(g, q)
    n = g.vertex_count
    h = np.zeros((n, n))
    for (i, j), w in zip(g.edges, g.weights):
        h[i, j] = h[j, i] = -w
    h[np.diag_indices(n)] = q
    h.flags.writeable = False
    qc = q.copy()
    qc.flags.writeable = False
    return Hamiltonian(h, g, qc)


def assemble_laplacian(g: Graph) -> Hamiltonian:
    """Weighted graph Laplacian: the operator with q_i set to the degree."""
    degrees = np.array([g.degree(v) for v in range(g.vertex_count)])
    return assemble_hamiltonian(g, degrees)


class Spectrum:
    """Ascending eigenvalues with orthonormal eigenvector columns.

    Sign convention: in each eigenvector the first component of largest
    magnitude is positive.  Accessors take 1-based spectral indices.
    """

    def __init__(self, eigenvalues: np.ndarray, eigenvectors: np.ndarray,
                 hamiltonian: Optional[Hamiltonian] = None):
        self.eigenvalues = eigenvalues
        self.eigenvectors = eigenvectors
        self.hamiltonian = hamiltonian

    @property
    def size(self) -> int:
        return len(self.eigenvalues)

    def eigenvalue(self, n: int) -> float:
        self._check_index(n)
        return float(self.eigenvalues[n - 1])

    def eigenvector(self, n: int) -> np.ndarray:
        self._check_index(n)
        return self.eigenvectors[:, n - 1]

    def _check_index(self, n: int):
        if not 1 <= n <= self.size:
            raise IndexError(f"spectral index {n} outside 1..{self.size}")

    @property
    def spectral_range(self) -> float:
        return float(self.eigenvalues[-1] - self.eigenvalues[0])

    def gap(self, n: int) -> float:
        """Distance from eigenvalue n to the nearest other eigenvalue."""
        self._check_index(n)
        k = n - 1
        gaps = []
        if k > 0:
            gaps.append(self.eigenvalues[k] - self.eigenvalues[k - 1])
        if k < self.size - 1:
            gaps.append(self.eigenvalues[k + 1] - self.eigenvalues[k])
        return float(min(gaps)) if gaps else np.inf

    def min_gap(self) -> float:
        if self.size < 2:
            return np.inf
        return float(np.diff(self.eigenvalues).min())

    def match_eigenvalue(self, value: float, rtol: float = GAP_TOL) -> list[int]:
        """1-based indices of eigenvalues within rtol * spectral_range."""
        tol = rtol * max(self.spectral_range, 1.0)
        hits = np.nonzero(np.abs(self.eigenvalues - value) <= tol)[0]
        return [int(k) + 1 for k in hits]

    def position_of(self, value: float, rtol: float = GAP_TOL) -> int:
        """Unique 1-based position of ``value`` in the spectrum.

        Raises DegenerateData when the value matches no eigenvalue or more
        than one.
        """
        hits = self.match_eigenvalue(value, rtol)
        if len(hits) != 1:
            raise DegenerateData(
                f"value {value} matches spectral positions {hits}"
            )
        return hits[0]


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    out = vectors.copy()
    for k in range(out.shape[1]):
        col = out[:, k]
        lead = int(np.argmax(np.abs(col)))
        if col[lead] < 0:
            out[:, k] = -col
    return out


def eigendecompose(h: Hamiltonian) -> Spectrum:
    """Full diagonalization; validates symmetry, ordering and the strict
    simplicity of the ground energy (guaranteed for connected graphs)."""
    m = h.matrix
    scale = max(float(np.abs(m).max()), 1.0)
    if float(np.abs(m - m.T).max()) > EIG_TOL * scale:
        raise ValueError("matrix is not symmetric")
    try:
        eigenvalues, eigenvectors = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    eigenvectors = _fix_signs(eigenvectors)
    eigenvalues.flags.writeable = False
    eigenvectors.flags.writeable = False
    spectrum = Spectrum(eigenvalues, eigenvectors, h)
    if spectrum.size >= 2 and not eigenvalues[0] < eigenvalues[1]:
        raise VerificationError(
            "ground energy is not strictly below the second eigenvalue; "
            "the operator does not come from a connected graph"
        )
    return spectrum


@dataclass(frozen=True)
class NondegeneracyReport:
    """Outcome of the two non-degeneracy conditions for one eigenpair."""

    n: int
    simple: bool
    nonvanishing: bool
    min_gap: float
    min_component: float
    gap_threshold: float
    component_threshold: float

    @property
    def nondegenerate(self) -> bool:
        return self.simple and self.nonvanishing

    def __bool__(self) -> bool:
        return self.nondegenerate

    def reason(self) -> str:
        if self.nondegenerate:
            return "non-degenerate"
        parts = []
        if not self.simple:
            parts.append(
                f"gap {self.min_gap:.3e} <= {self.gap_threshold:.3e}"
            )
        if not self.nonvanishing:
            parts.append(
                f"component {self.min_component:.3e} <= "
                f"{self.component_threshold:.3e}"
            )
        return "; ".join(parts)


def is_nondegenerate(s: Spectrum, n: int) -> NondegeneracyReport:
    """Check that eigenvalue n is simple and its eigenvector vanishes
    nowhere.  Truthiness of the report gives the boolean answer."""
    s._check_index(n)
    gap_threshold = GAP_TOL * max(s.spectral_range, 1.0)
    vec = s.eigenvector(n)
    vmax = float(np.abs(vec).max())
    comp_threshold = COMP_TOL * vmax
    min_gap = s.gap(n)
    min_component = float(np.abs(vec).min())
    return NondegeneracyReport(
        n=n,
        simple=bool(min_gap > gap_threshold),
        nonvanishing=bool(min_component > comp_threshold),
        min_gap=min_gap,
        min_component=min_component,
        gap_threshold=gap_threshold,
        component_threshold=comp_threshold,
    )


def jitter_potential(g: Graph, q, seed: int, magnitude: float = 1e-3) -> np.ndarray:
    """Explicitly re-randomize a potential to escape degeneracies.

    Degenerate eigenpairs are rejected by the analysis routines rather
    than silently perturbed; callers opt in to jitter with this helper.
    """
    q = as_potential(g, q)
    rng = np.random.default_rng(seed)
    return q + rng.uniform(-magnitude, magnitude, g.vertex_count)
