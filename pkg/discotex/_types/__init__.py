from discotex._types._grid import CollocationGrid  # noqa: F401
from discotex._types._jets import Jet  # noqa: F401
from discotex._types._jets import JumpSeries  # noqa: F401
from discotex._types._jets import TrigPair  # noqa: F401
from discotex._types._rules import DerivativeStack  # noqa: F401
from discotex._types._rules import HermiteRule  # noqa: F401
from discotex._types._rules import JumpQuadrature  # noqa: F401
from discotex._types._rules import RationalPolynomial  # noqa: F401
from discotex._types._run import EvolutionResult  # noqa: F401
from discotex._types._run import FACTORS  # noqa: F401
from discotex._types._run import QuadRow  # noqa: F401
from discotex._types._run import RunConfig  # noqa: F401
from discotex._types._run import SweepRow  # noqa: F401
from discotex._types._state import Crossing  # noqa: F401
from discotex._types._state import SourceStack  # noqa: F401
from discotex._types._state import State  # noqa: F401
from discotex._types._state import StepOperators  # noqa: F401
from discotex._types._tables import TimeJumpTable  # noqa: F401
