from discotex._model._chart import BoostedTrajectory  # noqa: F401
from discotex._model._chart import LinearTrajectory  # noqa: F401
from discotex._model._chart import Trajectory  # noqa: F401
from discotex._model._chart import coordinate_map  # noqa: F401
from discotex._model._chart import gamma_squared  # noqa: F401
from discotex._model._coefficients import OperatorCoefficients  # noqa: F401
from discotex._model._coefficients import PoleRational  # noqa: F401
from discotex._model._coefficients import flat_wave_coefficients  # noqa: F401
from discotex._model._exact import LEFT  # noqa: F401
from discotex._model._exact import RIGHT  # noqa: F401
from discotex._model._exact import branch  # noqa: F401
from discotex._model._exact import exact_pi_tx  # noqa: F401
from discotex._model._exact import exact_psi_tx  # noqa: F401
from discotex._model._exact import exact_spatial_jumps  # noqa: F401
from discotex._model._exact import exact_state  # noqa: F401
from discotex._model._exact import exact_values  # noqa: F401
from discotex._model._exact import seed_jumps  # noqa: F401
from discotex._model._exact import time_jump_pair  # noqa: F401
from discotex._model._system import DEFAULT_LEVELS  # noqa: F401
from discotex._model._system import WaveModel  # noqa: F401
from discotex._model._system import assemble_jump_data  # noqa: F401
from discotex._model._system import build_system_matrix  # noqa: F401
from discotex._model._tables import exact_time_jumps  # noqa: F401
from discotex._model._tables import printed_time_jumps  # noqa: F401
