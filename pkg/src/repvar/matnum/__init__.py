"""Numerical word maps on SL(2,C)^n: evaluation, witnesses, Newton, local ranks."""

from . import _kernels
from .core import *  # noqa: F401,F403
from .core import __all__ as _core_all, fd_jacobian, point_from_json, point_to_json

__all__ = list(_core_all) + ["fd_jacobian", "point_to_json", "point_from_json", "_kernels"]
