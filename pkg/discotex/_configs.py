import fractions

#: Defaults reproduce the reference evolution: 45 Chebyshev nodes, 19 jumps and
#: 903 steps of 0.00666667 across the window where the particle moves from
#: sigma ~0.782 toward null infinity.
DEFAULT_ORDER = 6
DEFAULT_NODES = 45
DEFAULT_JUMPS = 19
DEFAULT_DT = 0.00666667
DEFAULT_TAU_START = -1.52
DEFAULT_TAU_END = 4.50
DEFAULT_VELOCITY = fractions.Fraction(1, 4)
DEFAULT_THREADS = 1
DEFAULT_SEED = 0

#: Velocity the published time-jump tables were computed for.
PRINTED_TABLE_VELOCITY = fractions.Fraction(1, 4)

#: Hermite orders with tabulated weights.
ORDERS = (2, 4, 6, 8, 10, 12)

#: Highest total time derivative of the g vector the stepper consumes (H12).
MAX_G_DERIVATIVE = 5

#: Legendre benchmark interval and reference value of its integral.
LEGENDRE_INTERVAL = (-0.55, 0.45)
LEGENDRE_CROSSING = 0.0
LEGENDRE_REFERENCE = 0.1125883303464025

#: Significant digits of the extended precision Legendre benchmark and the error
#: below which its slope fits treat differences as round-off.
PRECISE_DIGITS = 50
PRECISE_SLOPE_FLOOR = 1e-40

#: Defaults for the quad command: orders and step counts per doubling.
DEFAULT_QUAD_STEPS = (2, 4, 8, 16, 32, 64)

#: Prefix of environment variables read during config loading.
ENV_PREFIX = "DISCOTEX_"
