from discotex._stepper._evolution import evolve  # noqa: F401
from discotex._stepper._evolution import source_bracket  # noqa: F401
from discotex._stepper._evolution import step  # noqa: F401
from discotex._stepper._operators import build_step_operators  # noqa: F401
from discotex._stepper._operators import homogeneous_step  # noqa: F401
from discotex._stepper._operators import implicit_coefficients  # noqa: F401
from discotex._stepper._operators import matrix_polynomial  # noqa: F401
from discotex._stepper._operators import solve_implicit  # noqa: F401
from discotex._stepper._operators import tex_coefficients  # noqa: F401
from discotex._stepper._sources import assemble_sources  # noqa: F401
from discotex._stepper._sources import detect_crossings  # noqa: F401
from discotex._stepper._sources import time_jump_correction  # noqa: F401
from discotex._stepper._sources import upsilon_correction  # noqa: F401
