class SimulationError(Exception):
    """Base error of the simulator.

    ``detail`` is the human readable reason, ``exit_code`` is what the command
    line returns when the error reaches it.
    """

    exit_code = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class InvalidParameterError(SimulationError):
    exit_code = 2


class DegenerateSystemError(SimulationError):
    exit_code = 3


class NonUniqueSteadyStateError(SimulationError):
    exit_code = 3


class SweepPointError(SimulationError):
    exit_code = 3

    def __init__(self, detail: str, t_left: float, t_right: float):
        super().__init__(detail)
        self.t_left = t_left
        self.t_right = t_right


class SuddenDeathNotFoundError(SimulationError):
    exit_code = 3
