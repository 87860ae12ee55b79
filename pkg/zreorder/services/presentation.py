import hashlib
from functools import lru_cache
from typing import Tuple, Union

from zreorder.core.config import settings
from zreorder.core.exceptions import BudgetExceeded
from zreorder.core.logging import get_logger
from zreorder.models.presentation import Capability, Family
from zreorder.schemas.presentation import (
    AtomExpr,
    BijectionExpr,
    ComposeExpr,
    InverseExpr,
    PairedExpr,
    PairedShiftPresentation,
    TranslationPresentation,
    ValidatedBijection,
)
from zreorder.services import pairing, translation
from zreorder.services.parser import parse as parse_text

logger = get_logger(__name__)

Normalized = Union[TranslationPresentation, PairedShiftPresentation, BijectionExpr]


@lru_cache(maxsize=1024)
def inverse_translation(p: TranslationPresentation) -> TranslationPresentation:
    return translation.inverse(p)


@lru_cache(maxsize=4096)
def _atom_translation(atom: AtomExpr) -> TranslationPresentation:
    return translation.trim(translation.check_translation(atom.pairs, atom.tail_up, atom.tail_down))


def _as_expr(node: Normalized) -> BijectionExpr:
    if isinstance(node, TranslationPresentation):
        return AtomExpr(pairs=tuple(sorted(node.patch.items())), tail_up=node.tail_up, tail_down=node.tail_down)
    if isinstance(node, PairedShiftPresentation):
        return PairedExpr(direction=node.direction)
    return node


def _normalize(expr: BijectionExpr) -> Normalized:
    if isinstance(expr, AtomExpr):
        return _atom_translation(expr)
    if isinstance(expr, PairedExpr):
        return PairedShiftPresentation(direction=expr.direction)
    if isinstance(expr, InverseExpr):
        operand = _normalize(expr.operand)
        if isinstance(operand, TranslationPresentation):
            return inverse_translation(operand)
        if isinstance(operand, PairedShiftPresentation):
            return PairedShiftPresentation(direction=-operand.direction)
        return InverseExpr(operand=operand)
    left = _normalize(expr.left)
    right = _normalize(expr.right)
    if isinstance(left, TranslationPresentation) and isinstance(right, TranslationPresentation):
        return translation.compose(left, right)
    return ComposeExpr(left=_as_expr(left), right=_as_expr(right))


def _paired_power(direction: int, n: int, m: int) -> int:
    i, k = pairing.pair(n)
    return pairing.unpair(i, k + m * direction)


def _expr_eval(expr: BijectionExpr, n: int, sign: int) -> int:
    if isinstance(expr, AtomExpr):
        p = _atom_translation(expr)
        return translation.evaluate(p if sign > 0 else inverse_translation(p), n)
    if isinstance(expr, PairedExpr):
        return _paired_power(expr.direction, n, sign)
    if isinstance(expr, InverseExpr):
        return _expr_eval(expr.operand, n, -sign)
    if sign > 0:
        return _expr_eval(expr.left, _expr_eval(expr.right, n, 1), 1)
    return _expr_eval(expr.right, _expr_eval(expr.left, n, -1), -1)


def _format_pairs(pairs) -> str:
    inner = ", ".join(f"{key} -> {value}" for key, value in pairs)
    return f"patch {{ {inner} }}" if inner else "patch { }"


class PresentationService:
    @staticmethod
    def parse(text: str) -> BijectionExpr:
        return parse_text(text)

    @staticmethod
    def validate(expr: BijectionExpr) -> ValidatedBijection:
        """
        Valide et normalise un arbre d'expression.

        Args:
            expr: Arbre produit par parse

        Returns:
            ValidatedBijection: Forme canonique et capacité d'analyse

        Raises:
            InvalidPatch: Si un atome a un patch mal formé
            NotBijective: Si un atome n'est pas une bijection
            AnalysisLimitExceeded: Si une composition produit un patch trop large
        """
        node = _normalize(expr)
        if isinstance(node, TranslationPresentation):
            f = ValidatedBijection(capability=Capability.FULL_ANALYSIS, family=Family.TRANSLATION, translation=node)
        elif isinstance(node, PairedShiftPresentation):
            f = ValidatedBijection(capability=Capability.FULL_ANALYSIS, family=Family.PAIRED_SHIFT, paired=node)
        else:
            f = ValidatedBijection(capability=Capability.EVAL_ONLY, family=Family.OPAQUE, expr=node)
        logger.info(f"Présentation validée : {f.family.value} ({f.capability.value})")
        return f

    @staticmethod
    def load(text: str) -> ValidatedBijection:
        return PresentationService.validate(parse_text(text))

    @staticmethod
    def eval(f: ValidatedBijection, n: int) -> int:
        if f.family is Family.TRANSLATION:
            return translation.evaluate(f.translation, n)
        if f.family is Family.PAIRED_SHIFT:
            return _paired_power(f.paired.direction, n, 1)
        return _expr_eval(f.expr, n, 1)

    @staticmethod
    def eval_inverse(f: ValidatedBijection, n: int) -> int:
        if f.family is Family.TRANSLATION:
            return translation.evaluate(inverse_translation(f.translation), n)
        if f.family is Family.PAIRED_SHIFT:
            return _paired_power(f.paired.direction, n, -1)
        return _expr_eval(f.expr, n, -1)

    @staticmethod
    def power(f: ValidatedBijection, x: int, m: int) -> int:
        """
        f^m(x) pour tout m signé.

        Raises:
            BudgetExceeded: Si l'itération dépasse ITERATION_BUDGET (orbite périodique
                parcourue avec un très grand m, ou présentation opaque)
        """
        if f.family is Family.TRANSLATION:
            if m >= 0:
                return translation.advance(f.translation, x, m)
            return translation.advance(inverse_translation(f.translation), x, -m)
        if f.family is Family.PAIRED_SHIFT:
            return _paired_power(f.paired.direction, x, m)
        if abs(m) > settings.ITERATION_BUDGET:
            raise BudgetExceeded(settings.ITERATION_BUDGET, x)
        sign = 1 if m >= 0 else -1
        for _ in range(abs(m)):
            x = _expr_eval(f.expr, x, sign)
        return x

    @staticmethod
    def pair(m: int) -> Tuple[int, int]:
        return pairing.pair(m)

    @staticmethod
    def unpair(i: int, k: int) -> int:
        return pairing.unpair(i, k)

    # Constructeurs

    @staticmethod
    def translation(t: int) -> ValidatedBijection:
        return PresentationService.validate(AtomExpr(pairs=(), tail_up=t, tail_down=t))

    @staticmethod
    def identity() -> ValidatedBijection:
        return PresentationService.translation(0)

    @staticmethod
    def swap(a: int, b: int) -> ValidatedBijection:
        lo, hi = min(a, b), max(a, b)
        pairs = [(n, n) for n in range(lo, hi + 1)]
        pairs[0], pairs[-1] = (lo, hi), (hi, lo)
        return PresentationService.validate(AtomExpr(pairs=tuple(pairs), tail_up=0, tail_down=0))

    @staticmethod
    def paired_shift(direction: int = 1) -> ValidatedBijection:
        return PresentationService.validate(PairedExpr(direction=direction))

    # Rendu

    @staticmethod
    def format_expr(expr: BijectionExpr) -> str:
        """Rend un arbre dans le DSL ; parse(format_expr(e)) == e."""
        if isinstance(expr, AtomExpr):
            return f"map {{ tail+ = {expr.tail_up}; tail- = {expr.tail_down}; {_format_pairs(expr.pairs)} }}"
        if isinstance(expr, PairedExpr):
            return "paired_shift" if expr.direction == 1 else "paired_shift_inv"
        if isinstance(expr, InverseExpr):
            return f"inverse({PresentationService.format_expr(expr.operand)})"
        left = PresentationService.format_expr(expr.left)
        right = PresentationService.format_expr(expr.right)
        return f"compose({left}, {right})"

    @staticmethod
    def format_bijection(f: ValidatedBijection) -> str:
        return PresentationService.format_expr(_as_expr(f.canonical))

    @staticmethod
    def digest(f: ValidatedBijection) -> str:
        return hashlib.sha256(PresentationService.format_bijection(f).encode("utf-8")).hexdigest()
