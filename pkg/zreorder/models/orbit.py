import enum

class OrbitKind(str, enum.Enum):
    PERIODIC = "periodic"
    LINE = "line"

class CountKind(str, enum.Enum):
    FINITE = "finite"
    COUNTABLY_INFINITE = "countably_infinite"

class FragmentKind(str, enum.Enum):
    CYCLE = "cycle"
    LINE_FRAGMENT = "line_fragment"
