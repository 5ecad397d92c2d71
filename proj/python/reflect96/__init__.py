"""Exact representation theory of the order-96 unitary reflection group
(Shephard-Todd No. 8): character table, tensor-power diagram, centralizer
dimensions, Molien series, and the weight-enumerator / theta-series bridge.

Everything is computed in exact cyclotomic arithmetic; values cross the
boundary as ints or canonical strings.
"""

from reflect96._core import E8_ROWS, Session

__all__ = ["Session", "E8_ROWS", "session"]

_session = None


def session():
    """A shared lazily-constructed Session."""
    global _session
    if _session is None:
        _session = Session()
    return _session
