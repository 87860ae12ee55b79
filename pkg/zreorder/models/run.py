import enum

class Command(str, enum.Enum):
    VALIDATE = "validate"
    ORBITS = "orbits"
    REORDER = "reorder"
    COLOR = "color"
    CONJUGACY = "conjugacy"
    VERIFY = "verify"

class OutputFormat(str, enum.Enum):
    TEXT = "text"
    STRUCTURED = "structured"

class RunStatus(str, enum.Enum):
    OK = "ok"
    FAILED = "failed"
    REFUSED = "refused"
    INPUT_ERROR = "input_error"
