"""Numerical toolkit for the Chialvo neuron map."""

from ._core import *  # noqa: F401,F403

__version__ = "0.3.0"
