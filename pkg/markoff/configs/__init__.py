from .cantor import CantorConfig
from .census import CensusConfig
from .figures import FiguresConfig
from .frobenius import FrobeniusConfig
from .limits import LimitsConfig
from .regression import RegressionConfig
from .sweep import SweepConfig
from .tree import TreeConfig
from .tsing import TSingConfig
from .verify import VerifyConfig
