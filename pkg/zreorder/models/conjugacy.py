import enum

class ConjugacyVerdict(str, enum.Enum):
    CONJUGATE = "conjugate"
    IDENTITY = "identity"
    NOT_CONJUGATE = "not_conjugate"

class RefutationReason(str, enum.Enum):
    PERIODIC_POINTS = "periodic_points"
    INFINITELY_MANY_ORBITS = "infinitely_many_orbits"
