"""Exception types shared across the package."""


class PerconetError(Exception):
    """Base class for all perconet-specific errors."""


class UnknownNodeError(PerconetError):
    """A node label was not found in the graph."""


class DegenerateGraphError(PerconetError):
    """The graph is too small or too empty for the requested metric."""


class NoFinitePathsError(PerconetError):
    """No ordered node pair is connected by a finite directed path."""


class ConvergenceError(PerconetError):
    """An iterative solver hit its iteration cap without converging."""


class PartitionError(PerconetError):
    """A community assignment does not cover every node of the graph."""


class GenerationError(PerconetError):
    """A synthetic-graph request is infeasible or sampling was exhausted."""


class DataFormatError(PerconetError):
    """An input file does not match the expected schema."""
