"""Exception types shared across the package.

The CLI maps these onto process exit codes: input/construction problems
(GraphInputError) exit 2, query-domain problems (QueryRangeError) exit 3.
"""


class GraphInputError(ValueError):
    """Raised when input data cannot form a valid structure."""


class NotProperError(GraphInputError):
    """Raised when a realization nests and a proper structure was requested.

    Carries the offending vertex pair (outer, inner) in 1-based labels.
    """

    def __init__(self, outer: int, inner: int):
        self.pair = (outer, inner)
        super().__init__(
            f"realization is not proper: interval {outer} strictly contains interval {inner}"
        )


class QueryRangeError(IndexError):
    """Raised when a query argument is outside the structure's domain."""


class SerializationError(GraphInputError):
    """Raised when a binary blob cannot be decoded."""
