"""
rmtsums - Sums of points of random matrix point processes.

Characteristic functions, densities and complex moments of the principal-value
sum X(s) of the Hua-Pickrell limit process and of the inverse-point sum Y(nu)
of the Bessel process, their finite-N matrix models, and numerical
certification of the sigma-Painleve equations they satisfy.
"""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("rmtsums")
except PackageNotFoundError:  # running from a source checkout
    __version__ = "0.0.0+unknown"
