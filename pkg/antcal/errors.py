class AntcalError(ValueError):
    """Base class for all calibration toolkit errors. Carries a CLI exit code."""

    exit_code = 2


class MalformedLineError(AntcalError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class MalformedRecordError(AntcalError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class NonMonotonicTimeError(AntcalError):
    pass


class PointCountError(AntcalError):
    pass


class AngleRangeError(AntcalError):
    pass


class OutOfRangeTimeError(AntcalError):
    pass


class PlanOverflowError(AntcalError):
    pass


class InvalidPlanError(AntcalError):
    pass


class NonPositivePowerError(AntcalError):
    pass


class LengthMismatchError(AntcalError):
    pass


class EmptyLogError(AntcalError):
    pass


class SeriesTooShortError(AntcalError):
    pass


class NoMaximaFoundError(AntcalError):
    exit_code = 3


class SpanMismatchError(AntcalError):
    pass


class RankDeficientError(AntcalError):
    pass


class TooFewPairsError(AntcalError):
    pass


class SingularBlockError(AntcalError):
    pass


class InvalidWindowError(AntcalError):
    pass


class ConfigError(AntcalError):
    pass
