"""Exception types shared across the package.

Precondition violations (bad lengths, out-of-range indices, words of the
wrong weight) raise plain ValueError.  The classes below cover failures
that are not caller bugs: malformed transmitted data, guarded problem
sizes, and undecodable received blocks.
"""


class CodingError(Exception):
    """Base class for codec-level failures."""


class DecodeError(CodingError):
    """Prefix or codeword cannot be parsed back to a message."""


class CapacityError(CodingError):
    """Requested computation exceeds a desk-scale guard (use the oracle/closed form instead)."""


class AmbiguousBlockError(DecodeError):
    """Two codebook words are equally near the received block."""


class StreamError(DecodeError):
    """Frame container is truncated or internally inconsistent."""
