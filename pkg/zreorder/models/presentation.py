import enum

class Capability(str, enum.Enum):
    FULL_ANALYSIS = "full_analysis"
    EVAL_ONLY = "eval_only"

class Family(str, enum.Enum):
    TRANSLATION = "family_a"
    PAIRED_SHIFT = "family_b"
    OPAQUE = "opaque"

class ExprKind(str, enum.Enum):
    ATOM = "atom"
    PAIRED = "paired"
    INVERSE = "inverse"
    COMPOSE = "compose"
