"""Exception hierarchy.

Every error raised on purpose by the package derives from
``SignedPartitionsError`` so callers (and the CLI) can sort them into
usage, guard and domain failures.
"""


class SignedPartitionsError(Exception):
    """Base class for all package errors."""


# -- partitions ---------------------------------------------------------


class InvalidPartition(SignedPartitionsError, ValueError):
    """Raw input does not describe a signed partition of [+-n]."""


class InvalidElement(InvalidPartition):
    """An element is zero, out of range, or a block is empty."""


class OverlappingBlocks(InvalidPartition):
    """Some element of [+-n] is covered by more than one block."""


class MissingElements(InvalidPartition):
    """Some element of [+-n] is covered by no block."""


class IllegalZeroBlock(InvalidPartition):
    """A block meets its own mirror without being of the form {+-i : i in S}."""


class MultipleSelfMirrored(InvalidPartition):
    """More than one block C with -C == C."""


class UnpairedBlock(InvalidPartition):
    """An expanded block family lists a block without its mirror."""


class MalformedRGS(SignedPartitionsError, ValueError):
    """A growth-string code is out of range or opens a pair negatively."""


class PartitionSyntaxError(SignedPartitionsError, ValueError):
    """Text could not be parsed; ``position`` is the offending offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# -- numbers ------------------------------------------------------------


class OutOfRange(SignedPartitionsError, ValueError):
    """Index pair (n, k) outside 0 <= k <= n."""


class InternalInconsistency(SignedPartitionsError, AssertionError):
    """An exact computation disagreed with itself. Always a bug."""


# -- urn bijection ------------------------------------------------------


class BijectionError(SignedPartitionsError, ValueError):
    """Input violates a precondition of the balls-into-urns bijection."""

    rule = "bijection precondition"


class EvenM(BijectionError):
    rule = "odd-m restriction"


class TooManyPairs(BijectionError):
    rule = "pair bound 2k <= m-1"


class InvalidChoice(BijectionError):
    rule = "urn choice rule"


class NoFreeUrn(BijectionError):
    rule = "free-urn availability"


class InvalidAssignment(BijectionError):
    rule = "assignment range 1 <= f(i) <= m"


class GuardExceeded(SignedPartitionsError):
    """A desk-scale size guard refused the request."""
