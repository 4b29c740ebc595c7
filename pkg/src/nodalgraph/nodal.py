"""Nodal domain counting and the Courant-type bounds.

Only the non-degenerate regime is handled: every component of the vector
must be bounded away from zero, so strong and weak domains coincide.
Vectors with near-zero components are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DegenerateEigenpair, VerificationError, ZeroComponent
from .graphs import (
    Graph,
    Partition,
    UnionFind,
    betti,
    partition_from_labels,
    partition_multigraph,
)
from .operators import COMP_TOL, Spectrum, is_nondegenerate


@dataclass(frozen=True, eq=False)
class NodalAnalysis:
    """Sign structure of a nonvanishing vector on a graph.

    nu   - number of nodal domains (maximal same-sign connected subgraphs)
    zeta - number of edges across which the sign flips
    ell  - number of independent cycles lying inside single domains
    """

    signs: np.ndarray
    nu: int
    zeta: int
    ell: int
    partition: Partition
    n: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "nu": self.nu,
            "zeta": self.zeta,
            "ell": self.ell,
            "signs": [int(s) for s in self.signs],
            "n": self.n,
        }


def sign_vector(g: Graph, f) -> np.ndarray:
    """Per-vertex signs of f; raises ZeroComponent if any entry is within
    COMP_TOL * max|f| of zero."""
    f = np.asarray(f, dtype=float)
    if f.shape != (g.vertex_count,):
        raise ValueError("vector length must equal the vertex count")
    fmax = float(np.abs(f).max())
    if fmax == 0.0 or np.abs(f).min() <= COMP_TOL * fmax:
        bad = [int(v) for v in np.nonzero(np.abs(f) <= COMP_TOL * fmax)[0]]
        raise ZeroComponent(f"vector vanishes at vertices {bad}")
    return np.where(f > 0, 1, -1).astype(int)


def analyze_nodal(g: Graph, f, n: Optional[int] = None) -> NodalAnalysis:
    """Count nodal domains, sign-flip edges and in-domain cycles of f.

    The counting identity nu = zeta - beta + ell + 1 is verified before
    returning.  The induced partition is checked to be bipartite (domains
    adjacent across a removed edge carry opposite signs).
    """
    signs = sign_vector(g, f)

    uf = UnionFind(g.vertex_count)
    zeta = 0
    for i, j in g.edges:
        if signs[i] == signs[j]:
            uf.union(i, j)
        else:
            zeta += 1
    labels = [uf.find(v) for v in range(g.vertex_count)]
    partition = partition_from_labels(g, labels)
    nu = partition.nu

    ell = 0
    for k in range(nu):
        vertices = partition.domain_vertices(k)
        in_domain = sum(
            1 for i, j in g.edges
            if signs[i] == signs[j]
            and partition.domain_of[i] == k and partition.domain_of[j] == k
        )
        ell += in_domain - len(vertices) + 1

    if nu != zeta - betti(g) + ell + 1:
        raise VerificationError(
            f"nodal counting identity failed: nu={nu}, zeta={zeta}, "
            f"beta={betti(g)}, ell={ell}"
        )
    for i, j in partition.removed_edges:
        if signs[i] == signs[j]:
            raise VerificationError(
                f"removed edge ({i},{j}) joins same-sign domains"
            )

    signs.flags.writeable = False
    return NodalAnalysis(signs, nu, zeta, ell, partition, n)


def _nondegenerate_eigenpair(s: Spectrum, n: int):
    report = is_nondegenerate(s, n)
    if not report:
        raise DegenerateEigenpair(f"eigenpair {n}: {report.reason()}")
    return s.eigenvalue(n), s.eigenvector(n)


@dataclass(frozen=True)
class CourantBoundsReport:
    """Nodal counts of an eigenvector together with the classical and
    sharpened bounds they must satisfy."""

    n: int
    nu: int
    zeta: int
    beta: int
    ell: int
    lower_classic: int
    lower_sharp: int
    upper: int
    zeta_lower: int
    zeta_upper: int
    courant_sharp: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "nu": self.nu,
            "zeta": self.zeta,
            "beta": self.beta,
            "ell": self.ell,
            "lower_classic": self.lower_classic,
            "lower_sharp": self.lower_sharp,
            "upper": self.upper,
            "zeta_lower": self.zeta_lower,
            "zeta_upper": self.zeta_upper,
            "courant_sharp": self.courant_sharp,
        }


def courant_bounds_report(g: Graph, s: Spectrum, n: int) -> CourantBoundsReport:
    """Nodal counts of eigenvector n with all bounds verified.

    Checks n - beta <= nu_n <= n, the sharpened n - (beta - ell_n) <= nu_n,
    and n - 1 <= zeta_n <= n + (beta - ell_n) - 1.  A violated bound raises
    VerificationError since these hold for every non-degenerate eigenpair.
    """
    _, vec = _nondegenerate_eigenpair(s, n)
    analysis = analyze_nodal(g, vec, n)
    b = betti(g)
    nu, zeta, ell = analysis.nu, analysis.zeta, analysis.ell
    report = CourantBoundsReport(
        n=n,
        nu=nu,
        zeta=zeta,
        beta=b,
        ell=ell,
        lower_classic=n - b,
        lower_sharp=n - (b - ell),
        upper=n,
        zeta_lower=n - 1,
        zeta_upper=n + (b - ell) - 1,
        courant_sharp=(nu == n),
    )
    if not report.lower_classic <= nu <= report.upper:
        raise VerificationError(f"classical bound violated: {report.to_dict()}")
    if not report.lower_sharp <= nu:
        raise VerificationError(f"sharpened bound violated: {report.to_dict()}")
    if not report.zeta_lower <= zeta <= report.zeta_upper:
        raise VerificationError(f"sign-flip bound violated: {report.to_dict()}")
    return report


def nodal_deficiency(g: Graph, s: Spectrum, n: int) -> int:
    """n - nu_n, the number of missing nodal domains; always >= 0."""
    _, vec = _nondegenerate_eigenpair(s, n)
    deficiency = n - analyze_nodal(g, vec, n).nu
    if deficiency < 0:
        raise VerificationError(
            f"negative nodal deficiency {deficiency} at index {n}"
        )
    return deficiency


def nodal_partition(g: Graph, s: Spectrum, n: int) -> Partition:
    """The partition of the graph into nodal domains of eigenvector n."""
    _, vec = _nondegenerate_eigenpair(s, n)
    return analyze_nodal(g, vec, n).partition


def eta_dimension(p: Partition) -> int:
    """Dimension of the local equipartition manifold of a partition,
    computed two independent ways and cross-checked."""
    zeta = len(p.removed_edges)
    via_zeta = zeta - (p.nu - 1)
    ell = 0
    for k in range(p.nu):
        sub, _ = p.domain_subgraph(k)
        ell += betti(sub)
    via_beta = betti(p.parent) - ell
    if via_zeta != via_beta:
        raise VerificationError(
            f"eta mismatch: zeta-route {via_zeta} != beta-route {via_beta}"
        )
    return via_zeta


__all__ = [
    "NodalAnalysis",
    "CourantBoundsReport",
    "analyze_nodal",
    "courant_bounds_report",
    "nodal_deficiency",
    "nodal_partition",
    "eta_dimension",
    "sign_vector",
    "partition_multigraph",
]
