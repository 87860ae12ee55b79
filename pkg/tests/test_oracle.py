from zreorder.models.order import Comparison
from zreorder.models.orbit import FragmentKind
from zreorder.schemas.verification import VerificationReport
from zreorder.services.oracle import OracleService, ReportBuilder
from zreorder.services.presentation import PresentationService


def _natural(x: int, y: int) -> Comparison:
    return Comparison.of(x, y)


def _rock_paper_scissors(x: int, y: int) -> Comparison:
    """Comparateur cyclique sur les résidus modulo 3."""
    if x == y:
        return Comparison.EQUAL
    if (x - y) % 3 == 0:
        return Comparison.of(x, y)
    return Comparison.LESS if (y - x) % 3 == 1 else Comparison.GREATER


def test_brute_orbits_translation(translation):
    """Test deux fragments d'orbite pour une translation par 2."""
    partition = OracleService.brute_orbits(translation(2), (-4, 4))
    classes = partition.as_sets()
    assert [kind for kind, _ in classes] == [FragmentKind.LINE_FRAGMENT] * 2
    assert {points for _, points in classes} == {frozenset({-4, -2, 0, 2, 4}), frozenset({-3, -1, 1, 3})}


def test_brute_orbits_swap(swap01):
    """Test un 2-cycle et des points fixes."""
    classes = OracleService.brute_orbits(swap01, (-2, 2)).as_sets()
    assert (FragmentKind.CYCLE, frozenset({0, 1})) in classes
    assert len(classes) == 4
    assert all(kind is FragmentKind.CYCLE for kind, _ in classes)


def test_brute_orbits_identity(identity):
    """Test que l'identité donne des singletons cycliques."""
    classes = OracleService.brute_orbits(identity, (0, 3)).as_sets()
    assert classes == [(FragmentKind.CYCLE, frozenset({x})) for x in range(4)]


def test_brute_orbits_line_through_patch():
    """Test qu'une orbite-droite qui traverse le patch reste une seule classe."""
    f = PresentationService.load("map{tail+=1;tail-=1;patch{0->2, 1->3, 2->1}}")
    classes = OracleService.brute_orbits(f, (-5, 5)).as_sets()
    assert len(classes) == 1
    assert classes[0][0] is FragmentKind.LINE_FRAGMENT


def test_brute_orbits_opaque():
    """Test que l'oracle accepte une présentation opaque."""
    f = PresentationService.load("compose(paired_shift, map{tail+=1;tail-=1;patch{}})")
    partition = OracleService.brute_orbits(f, (-6, 6))
    assert sum(len(points) for _, points in partition.as_sets()) == 13


def test_brute_check_total_order_natural():
    """Test que l'ordre naturel passe, triplets exhaustifs et échantillonnés."""
    assert OracleService.brute_check_total_order(_natural, (-10, 10), 100).passed
    report = OracleService.brute_check_total_order(_natural, (-50, 50), 1000)
    assert report.passed
    assert report.checks["transitivity"] == 1000


def test_brute_check_total_order_cyclic():
    """Test qu'un comparateur cyclique échoue avec un triplet témoin."""
    report = OracleService.brute_check_total_order(_rock_paper_scissors, (0, 5), 10)
    assert not report.passed
    witnesses = [v.witness for v in report.violations if v.check == "transitivity"]
    assert witnesses and all(len(w) == 3 for w in witnesses)


def test_brute_check_total_order_incomparable():
    """Test que deux points incomparables sont signalés."""

    def flat(x: int, y: int) -> Comparison:
        return Comparison.EQUAL

    report = OracleService.brute_check_total_order(flat, (0, 2), 10)
    assert not report.passed
    assert any(v.check == "totality" and v.witness == (0, 1) for v in report.violations)


def test_brute_strongly_discrete(translation, swap01):
    """Test la discrétion forte par itération."""
    f = translation(2)
    assert OracleService.brute_strongly_discrete(f, {0, 1}, 50)
    assert not OracleService.brute_strongly_discrete(f, {0, 2}, 50)
    assert OracleService.brute_strongly_discrete(f, set(), 50)
    assert not OracleService.brute_strongly_discrete(swap01, {0}, 5)


def test_brute_check_translation():
    """Test le contrôle de bijectivité indépendant."""
    assert OracleService.brute_check_translation([(0, 1), (1, 0)], 0, 0)[0]
    assert not OracleService.brute_check_translation([(0, 0)], 1, 1)[0]
    assert not OracleService.brute_check_translation([], 1, 2)[0]
    assert not OracleService.brute_check_translation([(0, 1), (0, 2)], 0, 0)[0]


def test_sweep_window_parallel_matches_sequential():
    """Test que le découpage en blocs parallèles ne change pas le bilan."""

    def check(chunk):
        builder = ReportBuilder("parity", chunk)
        for x in range(chunk[0], chunk[1] + 1):
            builder.count("odd")
            if x % 7 == 0:
                builder.fail("odd", (x,))
        return builder.build()

    one = OracleService.sweep_window(check, "parity", (-100, 100), workers=1)
    many = OracleService.sweep_window(check, "parity", (-100, 100), workers=6)
    assert one.checks == many.checks == {"odd": 201}
    assert one.violation_count == many.violation_count == 29
    assert sorted(v.witness for v in one.violations) == sorted(v.witness for v in many.violations)


def test_report_merge_caps_violations():
    """Test la conjonction et le plafond de violations retenues."""
    parts = []
    for i in range(3):
        builder = ReportBuilder("part", (i, i), cap=10)
        for j in range(5):
            builder.fail("c", (i, j))
        parts.append(builder.build())
    merged = VerificationReport.merge("all", (0, 2), parts, cap=4)
    assert merged.violation_count == 15
    assert len(merged.violations) == 4
    assert not merged.passed


def test_check_partition(translation):
    """Test la comparaison de partitions."""
    f = translation(2)
    expected = OracleService.brute_orbits(f, (-6, 6))
    assert OracleService.check_partition(expected, expected).passed
    other = OracleService.brute_orbits(translation(3), (-6, 6))
    assert not OracleService.check_partition(expected, other).passed


def test_check_inverse(corpus, paired_shift):
    """Test l'aller-retour eval / eval_inverse."""
    for f in corpus[:20] + [paired_shift]:
        assert OracleService.check_inverse(f, (-100, 100)).passed
