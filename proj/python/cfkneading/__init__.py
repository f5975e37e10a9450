"""Exact arithmetic on the continued-fraction and kneading bifurcation sets.

Rationals may be passed as ``Fraction``, ``int`` or strings such as ``"2/5"``;
continued fractions as ``"[0;2,(1)]"`` and binary expansions as ``"0.1(10)"``.
Where a binary value is expected, ``"0.11"`` means 3/4 (binary digits), not
11/100.
Exact rational results come back as ``fractions.Fraction``, enclosures as
``(low, high)`` pairs of fractions.
"""

from ._core import *  # noqa: F401,F403
from ._core import DomainError, ParseError  # noqa: F401
