from typing import Any, Dict, List, Optional, Sequence, Tuple

EXIT_OK = 0
EXIT_ANALYSIS = 1
EXIT_INPUT = 2

class ZReorderException(Exception):
    """Exception de base pour l'application."""

    exit_code: int = EXIT_ANALYSIS

    def __init__(self, detail: str = "Erreur", **context: Any):
        super().__init__(detail)
        self.detail = detail
        self.context = context

    def to_dict(self) -> Dict[str, Any]:
        """Représentation sérialisable, utilisée par la sortie structurée."""
        return {
            "error": type(self).__name__,
            "detail": self.detail,
            "exit_code": self.exit_code,
            **{key: value for key, value in self.context.items() if value is not None},
        }

class InputException(ZReorderException):
    """Exception pour les entrées invalides (fichier, syntaxe, présentation)."""

    exit_code = EXIT_INPUT

    def __init__(self, detail: str = "Entrée invalide", **context: Any):
        super().__init__(detail, **context)

class AnalysisException(ZReorderException):
    """Exception pour les analyses refusées sur une entrée valide."""

    exit_code = EXIT_ANALYSIS

    def __init__(self, detail: str = "Analyse refusée", **context: Any):
        super().__init__(detail, **context)

# Erreurs d'entrée

class PresentationSyntaxError(InputException):
    """Erreur de syntaxe dans le DSL des présentations."""

    def __init__(self, line: int, column: int, expected: str, found: str):
        super().__init__(
            f"Erreur de syntaxe ligne {line}, colonne {column} : attendu {expected}, trouvé {found}",
            line=line,
            column=column,
            expected=expected,
            found=found,
        )
        self.line = line
        self.column = column
        self.expected = expected
        self.found = found

class InvalidPatch(InputException):
    """Exception pour un patch mal formé (clé dupliquée, trou, valeurs non injectives)."""

    def __init__(self, reason: str, keys: Optional[Sequence[int]] = None):
        super().__init__(f"Patch invalide : {reason}", reason=reason, keys=list(keys) if keys else None)
        self.reason = reason
        self.keys = list(keys) if keys else []

class NotBijective(InputException):
    """Exception pour une présentation qui ne définit pas une bijection de Z."""

    def __init__(
        self,
        reason: str,
        collision: Optional[Tuple[int, int]] = None,
        missing: Optional[int] = None
    ):
        if collision is not None:
            detail = f"Pas une bijection : {collision[0]} et {collision[1]} ont la même image ({reason})"
        elif missing is not None:
            detail = f"Pas une bijection : {missing} n'a pas d'antécédent ({reason})"
        else:
            detail = f"Pas une bijection : {reason}"
        super().__init__(
            detail,
            reason=reason,
            collision=list(collision) if collision is not None else None,
            missing=missing,
        )
        self.reason = reason
        self.collision = collision
        self.missing = missing

class SpecFileException(InputException):
    """Exception pour les erreurs de lecture ou d'écriture de fichiers."""

    def __init__(self, path: str, reason: str):
        super().__init__(f"Erreur de fichier {path} : {reason}", path=str(path), reason=reason)
        self.path = str(path)

class ConfigurationException(InputException):
    """Exception pour les paramètres de ligne de commande invalides."""

    def __init__(self, detail: str = "Configuration invalide"):
        super().__init__(detail)

# Refus d'analyse

class UnsupportedPresentation(AnalysisException):
    """Exception pour les analyses demandées sur une présentation opaque."""

    def __init__(self, operation: str):
        super().__init__(
            f"Présentation non supportée par {operation} : composition mixte, évaluation seule",
            operation=operation,
        )

class PeriodicPointFound(AnalysisException):
    """Exception levée lorsqu'un point périodique interdit la construction demandée."""

    def __init__(self, cycle: List[int]):
        super().__init__(f"Point périodique trouvé, cycle {list(cycle)}", cycle=list(cycle))
        self.cycle = list(cycle)

class CoverInvalid(AnalysisException):
    """Exception pour une famille de recouvrement qui viole une hypothèse du lemme."""

    def __init__(self, violated: int, witness: List[int], reason: str):
        super().__init__(
            f"Recouvrement invalide, propriété ({violated}) violée : {reason} (témoin {witness})",
            violated=violated,
            witness=list(witness),
            reason=reason,
        )
        self.violated = violated
        self.witness = list(witness)

class CoverInsufficient(AnalysisException):
    """Exception levée lorsque l'énumération ne recouvre pas la fenêtre."""

    def __init__(self, point: int):
        super().__init__(f"L'énumération ne recouvre pas le point {point}", point=point)
        self.point = point

class AnalysisLimitExceeded(AnalysisException):
    """Exception pour les analyses dépassant les limites configurées."""

    def __init__(self, what: str, value: int, limit: int):
        super().__init__(
            f"Limite dépassée pour {what} : {value} > {limit}",
            what=what,
            value=value,
            limit=limit,
        )

class InvalidReport(AnalysisException):
    """Exception pour un rapport qui ne se prête pas à la vérification demandée."""

    def __init__(self, detail: str = "Rapport invalide"):
        super().__init__(detail)

class BudgetExceeded(AnalysisException):
    """Erreur interne : le budget d'itérations du moteur d'orbites est épuisé."""

    def __init__(self, budget: int, start: int):
        super().__init__(
            f"Erreur interne : budget de {budget} itérations épuisé depuis {start}",
            budget=budget,
            start=start,
        )
