"""Algebraic manipulation detection codes for leaky storage.

Thin python surface over the C++ core: code construction, encoding and
decoding, ramp secret sharing, and the exhaustive certification oracles.
Decoders return ``None`` for a detected manipulation (REJECT).
"""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import bounds  # noqa: F401
except ImportError:  # in-build-tree layout used by the ctest smoke tests
    from _core import *  # noqa: F401,F403
    from _core import bounds  # noqa: F401

__version__ = "0.1.0"
