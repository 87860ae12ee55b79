import random

import pytest

from zreorder.core.exceptions import CoverInvalid, PeriodicPointFound, UnsupportedPresentation
from zreorder.models.order import Comparison
from zreorder.schemas.orbit import CoverFamily
from zreorder.services.presentation import PresentationService
from zreorder.services.reorder import OrderHandle, ReorderService


class SwappedLabels(OrderHandle):
    """Ordre corrompu : les étiquettes de deux points sont échangées."""

    def __init__(self, handle: OrderHandle, a: int, b: int):
        super().__init__(handle.f, handle.cover, handle._assignment)
        self.a, self.b = a, b

    def key(self, x: int):
        if x == self.a:
            return super().key(self.b)
        if x == self.b:
            return super().key(self.a)
        return super().key(x)


# Construction de l'ordre

def test_build_order_translation_by_one(translation):
    """Test que l'ordre d'une translation par 1 est l'ordre naturel."""
    h = ReorderService.build_order(translation(1))
    for x in range(-20, 21):
        assert ReorderService.label(h, x).key() == (0, x, 0)
    assert ReorderService.compare(h, 3, 5) is Comparison.LESS


def test_build_order_translation_by_two(translation):
    """Test les étiquettes et la priorité de alpha."""
    h = ReorderService.build_order(translation(2))
    assert h.label(4).key() == (0, 2, 0)
    assert h.label(-3).key() == (1, -2, 0)
    assert h.compare(4, -3) is Comparison.LESS
    assert h.compare(-3, 4) is Comparison.GREATER
    assert h.compare(7, 7) is Comparison.EQUAL


def test_build_order_refuses_periodic(swap01):
    """Test le refus en présence d'un point périodique."""
    with pytest.raises(PeriodicPointFound) as exc_info:
        ReorderService.build_order(swap01)
    assert exc_info.value.cycle == [0, 1]


def test_build_order_refuses_opaque():
    """Test le refus pour une présentation opaque."""
    f = PresentationService.load("compose(paired_shift, map{tail+=1;tail-=1;patch{}})")
    with pytest.raises(UnsupportedPresentation):
        ReorderService.build_order(f)


def test_build_order_from_canonical_cover(translation):
    """Test que le recouvrement canonique redonne build_order."""
    f = translation(1)
    a = ReorderService.build_order(f)
    b = ReorderService.build_order_from_cover(f, CoverFamily.of([[0]]))
    for x in range(-30, 31):
        assert a.key(x) == b.key(x)


def test_build_order_from_finite_cover(translation):
    """Test un ensemble non singleton : le rang interne suit l'ordre naturel."""
    f = translation(2)
    h = ReorderService.build_order_from_cover(f, CoverFamily.of([[1, 0]]))
    assert [h.label(x).key() for x in range(4)] == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1)]
    assert ReorderService.verify_order(f, h, (-60, 60), 5000).passed


def test_build_order_from_shifted_cover(translation):
    """Test un recouvrement dont le point n'est pas le représentant."""
    h = ReorderService.build_order_from_cover(translation(1), CoverFamily.of([[3]]))
    assert h.label(10).key() == (0, 7, 0)


def test_build_order_from_invalid_cover(translation):
    """Test le rejet d'un recouvrement invalide avec témoin."""
    with pytest.raises(CoverInvalid) as exc_info:
        ReorderService.build_order_from_cover(translation(2), CoverFamily.of([[0, 2], [1]]))
    assert exc_info.value.violated == 1
    assert exc_info.value.witness == [0, 2]
    with pytest.raises(CoverInvalid) as exc_info:
        ReorderService.build_order_from_cover(translation(2), CoverFamily.of([[0]]))
    assert exc_info.value.violated == 3


# Vérification

@pytest.mark.parametrize("t", [1, 2])
def test_verify_order_translations(translation, t):
    """Test la vérification sur [-100, 100]."""
    f = translation(t)
    report = ReorderService.verify_order(f, ReorderService.build_order(f), (-100, 100))
    assert report.passed
    assert report.violation_count == 0
    assert report.checks["transitivity"] > 0


def test_verify_order_detects_swapped_labels(translation):
    """Test qu'un comparateur corrompu est détecté avec une paire témoin."""
    f = translation(1)
    h = SwappedLabels(ReorderService.build_order(f), 0, 5)
    report = ReorderService.verify_order(f, h, (-20, 20), 2000)
    assert not report.passed
    violation = next(v for v in report.violations if v.check == "monotonicity")
    assert len(violation.witness) == 2


def test_order_corpus(corpus, paired_shift):
    """Test l'ordre sur tout le corpus : total, transitif, f strictement croissante sur [-300, 300]."""
    for f in corpus + [paired_shift]:
        h = ReorderService.build_order(f)
        report = ReorderService.verify_order(f, h, (-300, 300), 100_000)
        assert report.passed, report.violations
        assert report.checks["transitivity"] == 100_000


def test_label_shift(corpus):
    """Test que f incrémente exactement le pas de l'étiquette."""
    for f in corpus:
        h = ReorderService.build_order(f)
        for x in range(-100, 101):
            alpha, step, rank = h.key(x)
            assert h.key(PresentationService.eval(f, x)) == (alpha, step + 1, rank)


# Forme normale

def test_normal_form_translation_by_two(translation):
    """Test la forme normale d'une translation par 2."""
    nf = ReorderService.normal_form(translation(2))
    assert nf.k.value == 2
    assert ReorderService.h(nf, 4) == (0, 2)
    assert ReorderService.h(nf, -3) == (1, -2)
    assert ReorderService.h(nf, 6) == (0, 3) == ReorderService.group_add(nf, (0, 2), (0, 1))


def test_normal_form_translation_by_one(translation):
    """Test h(x) = (0, x) pour une translation par 1."""
    nf = ReorderService.normal_form(translation(1))
    assert nf.k.value == 1
    assert all(ReorderService.h(nf, x) == (0, x) for x in range(-50, 51))


def test_normal_form_paired_shift(paired_shift):
    """Test que h est l'appariement pour la famille B."""
    nf = ReorderService.normal_form(paired_shift)
    assert not nf.k.is_finite
    for x in range(-100, 101):
        assert ReorderService.h(nf, x) == PresentationService.pair(x)
        i, k = PresentationService.pair(x)
        assert ReorderService.h(nf, PresentationService.eval(paired_shift, x)) == (i, k + 1)


def test_normal_form_refuses_periodic(swap01):
    """Test le refus en présence d'un point périodique."""
    with pytest.raises(PeriodicPointFound):
        ReorderService.normal_form(swap01)


def test_group_add(translation, paired_shift):
    """Test la loi de groupe composante par composante."""
    finite = ReorderService.normal_form(translation(2))
    infinite = ReorderService.normal_form(paired_shift)
    assert ReorderService.group_add(finite, (1, 5), (1, -2)) == (0, 3)
    assert ReorderService.group_add(finite, (1, 5), (0, 0)) == (1, 5)
    assert ReorderService.group_add(infinite, (3, 1), (-3, -1)) == (0, 0)


def test_normal_form_shift_law(corpus, paired_shift):
    """Test h(f(x)) = h(x) + (0, 1), injectivité et aller-retour pour |x| <= 1000."""
    for f in corpus + [paired_shift]:
        report = ReorderService.verify_normal_form(f, ReorderService.normal_form(f), (-1000, 1000))
        assert report.passed, report.violations


def test_pullback_order_equals_build_order(corpus, paired_shift):
    """Test que l'ordre ramené par h coïncide avec celui de build_order sur [-200, 200]."""
    window = range(-200, 201)
    for f in corpus[:25] + [paired_shift]:
        h = ReorderService.build_order(f)
        nf = ReorderService.normal_form(f)

        def pulled(x):
            i, m = ReorderService.h(nf, x)
            return ReorderService.carrier_rank(nf, i), m

        # Deux ordres totaux stricts coïncident ssi ils trient la fenêtre de la même façon
        assert sorted(window, key=h.key) == sorted(window, key=pulled)

        rng = random.Random(5)
        for _ in range(500):
            x, y = rng.choice(window), rng.choice(window)
            assert ReorderService.pullback_compare(nf, x, y) is h.compare(x, y)
