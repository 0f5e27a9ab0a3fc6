from discotex._harness._bench import run_bench  # noqa: F401
from discotex._harness._evolve import run_evolve  # noqa: F401
from discotex._harness._evolve import write_evolution  # noqa: F401
from discotex._harness._output import format_table  # noqa: F401
from discotex._harness._output import header_lines  # noqa: F401
from discotex._harness._output import write_table  # noqa: F401
from discotex._harness._quad import fit_slope  # noqa: F401
from discotex._harness._quad import quad_rows  # noqa: F401
from discotex._harness._quad import quad_slopes  # noqa: F401
from discotex._harness._quad import run_quad  # noqa: F401
from discotex._harness._quad import slope_floor  # noqa: F401
from discotex._harness._selftest import CHECKS  # noqa: F401
from discotex._harness._selftest import run_selftest  # noqa: F401
from discotex._harness._sweep import run_sweep  # noqa: F401
from discotex._harness._sweep import sweep_rows  # noqa: F401
from discotex._harness._sweep import sweep_slopes  # noqa: F401
