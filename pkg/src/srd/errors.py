"""Exceptions shared across the package."""


class InfeasibleParameters(Exception):
    """A parameter tuple fails an exact feasibility condition.

    Raised by spectrum construction (bad multiplicities), parameter
    completion (divisibility failures) and tensor derivation (negative
    entries).  Distinct from ValueError, which is reserved for malformed
    input (wrong shapes, non-binary matrices, broken JSON).
    """


class SpectrumInfeasible(InfeasibleParameters):
    """A fiber's SRG parameters admit no valid eigenvalue multiplicities."""


class CoherenceError(Exception):
    """A colored pair partition violates a coherent-configuration axiom."""


class TypeMismatchError(Exception):
    """A configuration does not have the two-fiber type [3 2; 3]."""
