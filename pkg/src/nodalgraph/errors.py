"""Exception types shared across the library."""


class NodalGraphError(Exception):
    """Base class for every library-specific error."""


class DisconnectedGraph(NodalGraphError):
    """Graph construction received a vertex/edge set that is not connected."""


class DisconnectedDomain(NodalGraphError):
    """A label class of a partition does not induce a connected subgraph."""


class DimensionMismatch(NodalGraphError):
    """Array sizes do not match the graph they are paired with."""


class ConvergenceFailure(NodalGraphError):
    """The dense eigensolver failed to converge."""


class DegenerateEigenpair(NodalGraphError):
    """Requested eigenpair is degenerate (repeated eigenvalue or vanishing
    component) and the operation requires a non-degenerate one."""


class ZeroComponent(NodalGraphError):
    """A vector component at a required vertex is numerically zero."""


class Disconnects(NodalGraphError):
    """Deleting the requested edge would disconnect the current factor."""


class AlphaNearZero(NodalGraphError):
    """Edge parameter too close to the singular value alpha = 0."""


class DegenerateBranch(NodalGraphError):
    """Eigenvalue branch is not simple at the requested parameter value."""


class NoCriticalPoint(NodalGraphError):
    """No relevant critical point of the eigenvalue branch was found in the
    search bracket."""


class DegenerateData(NodalGraphError):
    """Bookkeeping input does not identify a unique non-degenerate eigenpair."""


class IntermediateDegeneracy(NodalGraphError):
    """An intermediate factor in an edge-surgery chain produced degenerate
    data; carries the failing edge for diagnosis."""

    def __init__(self, message, edge=None):
        super().__init__(message)
        self.edge = edge


class NotTreePartition(NodalGraphError):
    """Operation requires a partition whose multigraph is a tree."""


class NotEquipartition(NodalGraphError):
    """Parameter vector does not equalize the domain ground energies."""


class EquipartitionNotFound(NodalGraphError):
    """Multi-start search found no equipartition in the negative orthant
    (this does not prove nonexistence)."""


class UniquenessViolation(NodalGraphError):
    """Multi-start search found two distinct negative-orthant equipartitions
    of a tree partition, contradicting the uniqueness theorem."""


class ChartLeft(NodalGraphError):
    """A chart evaluation left the neighbourhood where the local
    parametrization of the equipartition manifold is valid."""


class NotCritical(NodalGraphError):
    """Chart is not centred at a critical point of the equipartition energy."""


class DegenerateHessian(NodalGraphError):
    """Hessian of the equipartition energy has eigenvalues in the degenerate
    band; carries the eigenvalues for diagnosis."""

    def __init__(self, message, eigenvalues=None):
        super().__init__(message)
        self.eigenvalues = eigenvalues


class Disagreement(NodalGraphError):
    """Independent computations of the same quantity disagree; carries the
    full report for diagnosis."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class TooLarge(NodalGraphError):
    """Instance exceeds the size cap of a brute-force oracle."""


class VerificationError(NodalGraphError):
    """A quantity violated an identity or bound that must hold exactly."""
