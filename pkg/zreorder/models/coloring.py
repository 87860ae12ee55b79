import enum

class Color(str, enum.Enum):
    A = "A"
    B = "B"
