from discotex._hermite._legendre import integrate_discontinuous  # noqa: F401
from discotex._hermite._legendre import legendre_benchmark  # noqa: F401
from discotex._hermite._legendre import legendre_benchmark_precise  # noqa: F401
from discotex._hermite._legendre import legendre_branches  # noqa: F401
from discotex._hermite._legendre import legendre_jumps  # noqa: F401
from discotex._hermite._legendre import legendre_reference  # noqa: F401
from discotex._hermite._oracle import derive_jump_quadrature  # noqa: F401
from discotex._hermite._rules import WEIGHTS  # noqa: F401
from discotex._hermite._rules import closed_form_quadrature  # noqa: F401
from discotex._hermite._rules import get_rule  # noqa: F401
from discotex._hermite._rules import get_transcribed_quadrature  # noqa: F401
from discotex._hermite._rules import jump_correction  # noqa: F401
from discotex._hermite._rules import smooth_step  # noqa: F401
