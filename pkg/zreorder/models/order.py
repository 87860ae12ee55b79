import enum

class Comparison(str, enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"

    def flipped(self) -> "Comparison":
        if self is Comparison.LESS:
            return Comparison.GREATER
        if self is Comparison.GREATER:
            return Comparison.LESS
        return self

    @classmethod
    def of(cls, a, b) -> "Comparison":
        """Compare deux valeurs ordonnées (entiers, tuples)."""
        if a < b:
            return cls.LESS
        if a > b:
            return cls.GREATER
        return cls.EQUAL
