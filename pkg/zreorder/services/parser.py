import re
from typing import List, Optional

from zreorder.core.config import settings
from zreorder.core.exceptions import PresentationSyntaxError
from zreorder.core.logging import get_logger
from zreorder.schemas.presentation import AtomExpr, BijectionExpr, ComposeExpr, InverseExpr, PairedExpr

logger = get_logger(__name__)

# Au-delà, int() refuse la conversion (limite de l'interpréteur)
MAX_INT_DIGITS = 4000

TOKEN_SPECS = [
    ("comment", r"#[^\n]*"),
    ("whitespace", r"\s+"),
    ("arrow", r"->"),
    ("int", r"[0-9]+"),
    ("ident", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("punct", r"[{}(),;=+\-]"),
]
TOKEN_REGEX = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in TOKEN_SPECS))

# lexème : valeur, type et position dans le texte source
class Lex:
    def __init__(self, pos: int, val: str, type: str, line: int, column: int):
        self.pos = pos
        self.val = val
        self.type = type
        self.line = line
        self.column = column

    def __repr__(self) -> str:
        return f"<{self.type}> {self.val!r} @{self.line}:{self.column}"

    def describe(self) -> str:
        if self.type == "eof":
            return "fin de fichier"
        return repr(self.val)


def _location(text: str, pos: int):
    line = text.count("\n", 0, pos) + 1
    column = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, column


def lexer(text: str) -> List[Lex]:
    """Découpe le texte en lexèmes ; commentaires et blancs sont ignorés."""
    ls = []
    pos = 0
    while pos < len(text):
        m = TOKEN_REGEX.match(text, pos)
        if not m:
            line, column = _location(text, pos)
            raise PresentationSyntaxError(line, column, "un lexème", repr(text[pos]))
        type = m.lastgroup
        val = m.group()
        if type not in ("whitespace", "comment"):
            line, column = _location(text, pos)
            if type == "int" and len(val) > MAX_INT_DIGITS:
                raise PresentationSyntaxError(line, column, f"un entier d'au plus {MAX_INT_DIGITS} chiffres", f"{len(val)} chiffres")
            ls.append(Lex(pos, val, type, line, column))
        pos += len(val)
    line, column = _location(text, len(text))
    ls.append(Lex(len(text), "", "eof", line, column))
    return ls


class Parser:
    """Analyseur descendant récursif du DSL des présentations."""

    def __init__(self, text: str, max_depth: Optional[int] = None):
        self.ls = lexer(text)
        self.index = 0
        self.max_depth = max_depth or settings.MAX_EXPR_DEPTH

    @property
    def current(self) -> Lex:
        return self.ls[self.index]

    def error(self, expected: str) -> PresentationSyntaxError:
        lex = self.current
        return PresentationSyntaxError(lex.line, lex.column, expected, lex.describe())

    def expect(self, val: str) -> Lex:
        lex = self.current
        if lex.val != val or lex.type == "eof":
            raise self.error(repr(val))
        self.index += 1
        return lex

    def parse(self) -> BijectionExpr:
        expr = self.spec(0)
        if self.current.type != "eof":
            raise self.error("fin de fichier")
        return expr

    def spec(self, depth: int) -> BijectionExpr:
        if depth > self.max_depth:
            raise self.error(f"une imbrication d'au plus {self.max_depth} niveaux")
        lex = self.current
        if lex.type != "ident":
            raise self.error("map, paired_shift, paired_shift_inv, inverse ou compose")
        if lex.val == "map":
            self.index += 1
            return self.map_body()
        if lex.val == "paired_shift":
            self.index += 1
            return PairedExpr(direction=1)
        if lex.val == "paired_shift_inv":
            self.index += 1
            return PairedExpr(direction=-1)
        if lex.val == "inverse":
            self.index += 1
            self.expect("(")
            operand = self.spec(depth + 1)
            self.expect(")")
            return InverseExpr(operand=operand)
        if lex.val == "compose":
            self.index += 1
            self.expect("(")
            left = self.spec(depth + 1)
            self.expect(",")
            right = self.spec(depth + 1)
            self.expect(")")
            return ComposeExpr(left=left, right=right)
        raise self.error("map, paired_shift, paired_shift_inv, inverse ou compose")

    def map_body(self) -> AtomExpr:
        self.expect("{")
        tail_up = self.tail("+")
        tail_down = self.tail("-")
        self.expect("patch")
        self.expect("{")
        pairs = []
        if self.current.val != "}":
            pairs.append(self.pair())
            while self.current.val == ",":
                self.index += 1
                pairs.append(self.pair())
        self.expect("}")
        self.expect("}")
        return AtomExpr(pairs=tuple(pairs), tail_up=tail_up, tail_down=tail_down)

    def tail(self, sign: str) -> int:
        self.expect("tail")
        self.expect(sign)
        self.expect("=")
        value = self.integer()
        self.expect(";")
        return value

    def pair(self):
        key = self.integer()
        if self.current.type != "arrow":
            raise self.error("'->'")
        self.index += 1
        return key, self.integer()

    def integer(self) -> int:
        negative = False
        if self.current.val == "-" and self.current.type == "punct":
            negative = True
            self.index += 1
        lex = self.current
        if lex.type != "int":
            raise self.error("un entier")
        self.index += 1
        value = int(lex.val)
        return -value if negative else value


def parse(text: str) -> BijectionExpr:
    """
    Analyse un texte du DSL.

    Args:
        text: Texte de la spécification

    Returns:
        BijectionExpr: Arbre d'expression

    Raises:
        PresentationSyntaxError: Avec ligne, colonne, attendu et trouvé
    """
    expr = Parser(text).parse()
    logger.debug(f"Spécification analysée : {type(expr).__name__}")
    return expr
