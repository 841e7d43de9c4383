"""Exact one- and two-photon scattering off a single two-level impurity
coupled to a one-dimensional waveguide.

Thin re-export of the compiled extension; see the individual docstrings
for the operation surface. Conventions: hbar = 1, unit group velocity,
gamma = coupling**2.
"""

try:
    from ._wqed import *  # noqa: F401,F403
except ImportError:
    # in-tree builds leave the extension next to the build directory
    # rather than inside the package
    from _wqed import *  # noqa: F401,F403

__version__ = "0.1.0"
