"""Exception types shared across the package."""


class DomainOverlapError(ValueError):
    """Two permutations that must have disjoint domains share an element."""


class NotAShuffleError(ValueError):
    """A permutation is not an interleaving of the given pair."""


class InfeasibleProfileError(ValueError):
    """No permutation realizes the requested statistic profile."""


class ResourceLimitError(RuntimeError):
    """A verification request exceeds the configured size bound.

    Raised instead of silently truncating the search; the message states
    the bound and how to raise it.
    """
