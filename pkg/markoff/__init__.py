"""
Markoff
=======

Markoff is a Python package for exact computations on the Markoff tree.
It provides the decorated tree with its branches and growth sequences, Frobenius and square continued
fractions, T-singularities and T-continuants, limit points and interval covers of the Markoff and
T-spectra, and the census of Markoff numbers below a bound with its Zagier deviations.
"""

from importlib.metadata import PackageNotFoundError, version

from markoff.census import enumerate_markoff, table_gen, zagier_deviation
from markoff.errors import InputError, MarkoffError, VerificationError
from markoff.frobenius import frobenius_cf, reconstruct_triple
from markoff.report import CheckReport
from markoff.tree import MarkoffNode, node_at, node_from_triple, root
from markoff.tsing import square_cf, square_cf_of_node

try:
    __version__ = version("markoff")
except PackageNotFoundError:
    __version__ = "unknown"
