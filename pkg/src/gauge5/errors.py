"""Shared exception types.

HypothesisError: a mathematical hypothesis of the requested statement fails
(wrong parity of c, missing spin structure, parameter out of a stated range).
The message always names the failed condition.

CatalogError: the Lie catalog has no row covering the request.
"""


class HypothesisError(ValueError):
    pass


class CatalogError(ValueError):
    pass
