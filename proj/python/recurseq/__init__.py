"""Exact arithmetic for order-2 linear recurrences and their accelerations."""

from ._recurseq import *  # noqa: F401,F403
from ._recurseq import __doc__  # noqa: F401
