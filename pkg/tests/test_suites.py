from collections import Counter

import pytest

from vltwist.report import variant_tag
from vltwist.suites import SUITES, Extras, UnknownSuite, run_suite
from vltwist.twist import InadmissibleContext, make_context

EXPECTED_TAGS = {
    "lemma2_3": {"falling", "sign-corrected"},
    "lemma3_1": set(),
    "lemma3_2": {"canonical"},
    "lemma3_3_coproduct": set(),
    "lemma3_3_twist": set(),
    "lemma3_4": {"proof"},
    "theorem2_6": {"shifted-factorial", "weight", "u-inv-conj"},
    "hopf_axioms": {"u-inv-conj", "inverse-twist"},
}


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes_with_defaults(name):
    r = run_suite(name)
    assert r.passed, [c.name for c in r.failures()]
    assert r.checks
    tags = {variant_tag(c.status) for c in r.checks} - {None}
    assert tags == EXPECTED_TAGS[name]
    assert r.params["seed"] == 0


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nope")


def test_inadmissible_context_never_reaches_a_suite():
    with pytest.raises(InadmissibleContext):
        make_context((1, 0), (2, 0), 3)


def test_seed_changes_random_cases():
    a = run_suite("lemma3_1", extras=Extras(seed=1, cases=3))
    b = run_suite("lemma3_1", extras=Extras(seed=2, cases=3))
    assert a.params["cases"] != b.params["cases"]
    assert a.passed and b.passed


def test_second_context():
    ctx = make_context((0, 1), (3, 1), 3)
    for name in ("lemma3_1", "lemma3_4", "theorem2_6"):
        assert run_suite(name, ctx, Extras(cases=4)).passed


def test_check_counts():
    r = run_suite("lemma2_3")
    counts = Counter(c.name.split("[")[0] for c in r.checks)
    assert counts["rising_split"] == 20 and counts["falling_sum"] == 20
