import pytest

from ddcalc.combinat import IndexedForest, Permutation, all_permutations, forests_of_size, winc_words
from ddcalc.ddpair import (
    DdPairInstance,
    Report,
    apply_extractors,
    corrupted_schubert_instance,
    forest_instance,
    schubert_instance,
    slide_instance,
    verify_code_map,
    verify_creation,
    verify_duality,
)
from ddcalc.families import forest_polynomial, schubert, slide
from ddcalc.operators import INF, PARTIAL, SLIDE_CREATOR
from ddcalc.polyring import parse, x
from ddcalc.suites import SuiteConfig, random_samples

SAMPLES = random_samples(SuiteConfig(seed=3, trials=40), positive=True)


def test_samples_lie_in_positive_part():
    assert len(SAMPLES) == 40
    assert all(f and f.constant_term() == 0 and f.is_homogeneous() for f in SAMPLES)


def test_schubert_creation_passes():
    assert verify_creation(schubert_instance(), SAMPLES).ok


def test_corrupted_instance_fails_on_x2():
    report = verify_creation(corrupted_schubert_instance(), [x(2)])
    assert not report.ok
    assert "-x1 + x2" in report.failures()[0].detail


def test_constant_samples_are_reported():
    report = verify_creation(schubert_instance(), [parse("1 + x1")])
    assert not report.ok


@pytest.mark.parametrize("m", [1, 2, 3, INF])
def test_slide_creation(m):
    assert verify_creation(slide_instance(m), SAMPLES).ok


def test_slide_creators_with_partial():
    inst = DdPairInstance("(partial, B)", PARTIAL, SLIDE_CREATOR)
    assert verify_creation(inst, SAMPLES).ok


def test_schubert_duality_s4():
    report = verify_duality(schubert_instance(), schubert, list(all_permutations(4)), identity=Permutation())
    assert report.ok, report.lines()
    assert len(report.checks) == 3


@pytest.mark.parametrize("m", [1, 2])
def test_forest_duality(m):
    forests = [F for k in range(4) for F in forests_of_size(k, m, max_index=3)]
    report = verify_duality(forest_instance(m), forest_polynomial, forests, identity=IndexedForest((), m))
    assert report.ok, report.lines()


@pytest.mark.parametrize("m", [1, 2, INF])
def test_slide_duality(m):
    words = list(winc_words(3, 3))
    report = verify_duality(slide_instance(m), lambda a: slide(a, m), words, identity=())
    assert report.ok, report.lines()


def test_duality_detects_a_wrong_family():
    def wrong(w):
        return schubert(w) + (x(1) if w.length() == 1 else 0)
    report = verify_duality(schubert_instance(), wrong, list(all_permutations(3)), identity=Permutation())
    assert not report.ok


def test_ct_orthogonality_directly():
    inst = schubert_instance()
    w = Permutation((1, 4, 2, 5, 3))
    assert apply_extractors(inst, (3, 2, 4), schubert(w)).constant_term() == 1
    assert apply_extractors(inst, (3, 4, 2), schubert(w)).constant_term() == 1


def test_code_maps():
    assert verify_code_map(schubert_instance(), list(all_permutations(5))).ok
    for m in (1, 2, 3):
        forests = [F for k in range(5) for F in forests_of_size(k, m, 4)]
        assert verify_code_map(forest_instance(m), forests).ok
    assert verify_code_map(slide_instance(1), list(winc_words(4, 4))).ok


def test_report_lines():
    r = Report("demo")
    r.add("a", True)
    r.add("b", False, "why")
    outer = Report("outer")
    outer.extend(r)
    assert outer.lines() == ["== outer", "[PASS] demo: a", "[FAIL] demo: b: why"]
    assert not outer.ok and len(outer.failures()) == 1
