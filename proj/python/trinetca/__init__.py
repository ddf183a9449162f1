"""Colored trinet automata: deterministic writer-driven rewriting of
edge-3-colored cubic graphs, with rule-space classification and the
closed-form verifiers."""

from trinetca._trinetca import *  # noqa: F401,F403
from trinetca._trinetca import __doc__ as _core_doc  # noqa: F401
