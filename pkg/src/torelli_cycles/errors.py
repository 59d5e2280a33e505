"""Exception hierarchy.

Every error raised for bad *mathematical* input derives from
:class:`DomainError`; the command line maps those to exit status 1.
"""


class DomainError(ValueError):
    """Input is well-formed but violates a mathematical precondition."""


class GenusMismatchError(DomainError):
    pass


class GraphError(DomainError):
    """Structurally malformed dual graph (unknown ids, bad label length...)."""


class PreconditionError(DomainError):
    pass


class InfeasibleError(DomainError):
    """No weighting with the requested homology class exists."""
