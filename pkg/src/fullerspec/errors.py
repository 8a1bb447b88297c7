"""Exception types shared across the toolkit."""


class FullerspecError(Exception):
    """Base class for all toolkit errors."""


class InfeasibleN(FullerspecError):
    """Atom count n admits no fullerene (n must be 20 or an even n >= 24)."""

    def __init__(self, n):
        self.n = n
        super().__init__(f"no fullerene exists for n={n} (need n=20 or even n>=24)")


class InvalidSpiral(FullerspecError):
    """A pentagon-position vector cannot be wound into a closed dual.

    This is a normal outcome during enumeration, not a fault.  `step` is
    the 1-based index of the facet at which the winding got stuck.
    """

    def __init__(self, step, reason=""):
        self.step = step
        self.reason = reason
        msg = f"spiral winding failed at facet {step}"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)


class NotSpiralable(FullerspecError):
    """No unwinding of the dual closes; the isomer has no face spiral."""


class ResourceLimit(FullerspecError):
    """The requested computation exceeds a configured size budget."""


class OrderMismatch(FullerspecError):
    """Two adjacency matrices of different order were compared."""


class NoConvergence(FullerspecError):
    """The iterative eigenvalue solver did not reach the tolerance."""


class OddDegreeRejected(FullerspecError):
    """Odd trace powers do not separate isomers; pass allow_odd to override."""


class NoCompleteClusterization(FullerspecError):
    """No key degree within the search bound separates all isomers.

    `evidence` holds a pair of isomer indices sharing every tested key.
    """

    def __init__(self, evidence, message="no complete clusterization exists"):
        self.evidence = evidence
        super().__init__(f"{message}; indistinguishable pair: {evidence}")


class ParseError(FullerspecError):
    """Malformed input file."""


class IndexOutOfRange(FullerspecError):
    """An isomer index refers outside the enumerated range."""


class NegativeEnergy(FullerspecError):
    """Relative energies must be nonnegative."""


class DegenerateInput(FullerspecError):
    """A regression predictor is constant."""


class TransformDomainError(FullerspecError):
    """A log transform was requested for a nonpositive predictor value."""


class IncompleteEnergies(FullerspecError):
    """The stability check needs an energy for every enumerated isomer."""
