"""Exception hierarchy shared by the gridlang modules."""


class GridlangError(Exception):
    """Base class for all library errors."""


class AlphabetError(GridlangError, ValueError):
    """A symbol is outside the alphabet it is supposed to come from."""


class DisconnectedGraphError(GridlangError, ValueError):
    """An operation that needs a connected, non-empty graph got something else."""


class EmbeddingConflict(GridlangError):
    """A graph cannot be laid out on the integer grid as a subgrid.

    ``nodes`` holds the nodes involved in the first conflict found.
    """

    def __init__(self, reason, nodes=()):
        super().__init__(reason)
        self.reason = reason
        self.nodes = tuple(nodes)


class NotAPictureGraph(GridlangError, ValueError):
    pass


class GluingConflict(GridlangError):
    """Gluing a hyperedge would leave the configuration without a subgrid."""


class SearchBoundExceeded(GridlangError):
    """A derivation search ran out of its state budget before closing."""

    def __init__(self, message, explored=0):
        super().__init__(message)
        self.explored = explored


class StrongLoopError(GridlangError):
    def __init__(self, loops):
        cycle = " -> ".join(loops[0].cycle) if loops else "?"
        super().__init__(f"automaton contains a strong loop: {cycle}")
        self.loops = list(loops)


class ReconstructionError(GridlangError):
    """Mask ordering or replay failed for a tiling that should be derivable."""


class FormatError(GridlangError, ValueError):
    """A JSON model file does not follow its schema."""

    def __init__(self, message, location=""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


class InvalidAutomaton(GridlangError, ValueError):
    """An operation that needs a well-formed automaton got one with diagnostics."""

    def __init__(self, diagnostics):
        first = str(diagnostics[0]) if diagnostics else "?"
        super().__init__(f"automaton is not well-formed ({len(diagnostics)} problems; first: {first})")
        self.diagnostics = list(diagnostics)
