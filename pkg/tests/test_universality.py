import json

import pytest

from tightgonal.polygonal import GonalSet
from tightgonal.sieve import FormVector, truant
from tightgonal.universality import (
    Certificate,
    HypothesisNotVerified,
    RangeViolation,
    Status,
    Verdict,
    construct_lemma123,
    is_new,
    lemma123_shape,
    necessary_conditions,
    validate_certificate,
    verify_tight,
    x_vector,
    y_vector,
)

P3 = GonalSet(3)
GP5 = GonalSet(5, True)
GP7 = GonalSet(7, True)


def test_xy_vectors():
    assert x_vector(3) == FormVector([3, 3, 4, 5])
    assert y_vector(4) == FormVector([4, 5, 6, 7, 8])


def test_necessary_conditions():
    r = necessary_conditions(FormVector([3, 3, 4, 5]), P3, 3)
    assert r.passed and r.patterns == ("x_n",)
    r = necessary_conditions(FormVector([4, 4, 6, 7]), P3, 4)
    assert not r.passed and "5" in r.reason
    r = necessary_conditions(FormVector(range(7, 14)), GP5, 7)
    assert r.passed and r.patterns == ("prefix",)
    assert not necessary_conditions(FormVector(range(7, 14)), GonalSet(5), 7).passed
    assert not necessary_conditions(FormVector([2, 3]), P3, 3).passed


def test_verify_examples():
    assert verify_tight(FormVector([4, 4, 5, 6, 7]), P3, 4, 10**4).status is Status.VERIFIED
    v = verify_tight(FormVector([3, 4, 5, 6]), P3, 3, 10**4)
    assert v.status is Status.FAILED and v.truant == 16 and not v.below_min
    assert verify_tight(FormVector(range(7, 14)), GP5, 7, 10**4).status is Status.VERIFIED


def test_verify_below_min():
    v = verify_tight(FormVector([2, 3, 4, 5]), P3, 3, 100)
    assert v.status is Status.FAILED and v.truant == 2 and v.below_min


def test_verify_rejects_small_bound():
    with pytest.raises(ValueError):
        verify_tight(FormVector([3, 3, 4, 5]), P3, 3, 5)


def test_lemma123_heptagonal():
    vec, cert = construct_lemma123(2, 0, 4, GP7, 11, 10**5)
    assert vec == FormVector([11, 11] + list(range(12, 22)))
    assert cert.kind == "Lemma123" and validate_certificate(cert)


@pytest.mark.parametrize("m", [3, 4, 5])
def test_lemma123_fermat(m):
    n = 2 * m + 3
    vec, cert = construct_lemma123(1, 1, m, GonalSet(m), n, 10**5)
    assert vec == y_vector(n)
    assert validate_certificate(cert)


def test_lemma123_errors():
    with pytest.raises(RangeViolation):
        construct_lemma123(1, 0, 1, P3, 4)
    with pytest.raises(HypothesisNotVerified):
        construct_lemma123(1, 0, 0, P3, 5, 100)


def test_lemma123_conclusion_holds_empirically():
    for e1, e2, e3, S, n in [(2, 0, 4, GP7, 11), (1, 1, 4, GP7, 12), (1, 0, 2, GP5, 7), (1, 1, 3, P3, 9)]:
        vec, cert = construct_lemma123(e1, e2, e3, S, n, 10**4)
        assert truant(vec, S, n, min(10**4 * n, 10**5)) is None


def test_certificate_rejects_tampering():
    _, cert = construct_lemma123(1, 0, 2, GP5, 7, 10**4)
    bad = Certificate.from_dict(dict(cert.to_dict(), e3=1))
    assert not validate_certificate(bad)
    bad = Certificate.from_dict(dict(cert.to_dict(), vector=[7, 8, 9]))
    assert not validate_certificate(bad)
    bad = Certificate.from_dict(dict(cert.to_dict(), n=6, vector=list(range(6, 12))))
    assert not validate_certificate(bad)


def test_bounded_certificate():
    cert = Certificate("BoundedCheck", 3, False, 3, FormVector([3, 3, 4, 5]), bound=10**4)
    assert validate_certificate(cert)
    assert not validate_certificate(Certificate("BoundedCheck", 3, False, 3, FormVector([3, 4, 5, 6]), bound=100))


def test_certified_verdict():
    v = verify_tight(FormVector(range(7, 14)), GP5, 7, 10**4, certify=True, base_bound=10**5)
    assert v.status is Status.CERTIFIED
    assert v.certificate.e3 == 2 and validate_certificate(v.certificate)
    # shape does not match the construction: stays a bounded verdict
    v = verify_tight(FormVector([3, 3, 4, 5]), P3, 3, 10**4, certify=True, base_bound=10**4)
    assert v.status is Status.VERIFIED


def test_lemma123_shape():
    assert lemma123_shape(x_vector(5), 5) == (2, 0)
    assert lemma123_shape(y_vector(5), 5) == (1, 1)
    assert lemma123_shape(FormVector([5, 6, 6, 7, 8, 9]), 5) is None


def test_verdict_json_roundtrip():
    v = verify_tight(FormVector(range(7, 14)), GP5, 7, 10**4, certify=True, base_bound=10**4)
    assert Verdict.from_dict(json.loads(json.dumps(v.to_dict()))) == v
    v = verify_tight(FormVector([3, 4, 5, 6]), P3, 3, 10**3)
    assert Verdict.from_dict(json.loads(json.dumps(v.to_dict()))) == v


def test_is_new_examples():
    assert is_new(FormVector([3, 3, 4, 5]), P3, 3, 10**4).is_new
    rep = is_new(FormVector([3, 3, 4, 5, 6]), P3, 3, 10**4)
    assert not rep.is_new
    assert [r.evidence for r in rep.removals if r.value == 6] == ["still_tight"]
    assert is_new(y_vector(4), P3, 4, 10**4).is_new


def test_is_new_evidence_reproduces():
    a = FormVector([3, 4, 5, 6, 9])
    rep = is_new(a, P3, 3, 10**4)
    assert rep.is_new
    for r in rep.removals:
        b = a.without(r.index)
        v = verify_tight(b, P3, 3, 10**4)
        assert v.status is Status.FAILED and v.truant == r.truant
    assert rep.removals[0].evidence == "min_changed"


def test_verdict_is_deterministic():
    a = FormVector([3, 4, 5, 6, 13])
    assert verify_tight(a, P3, 3, 10**4) == verify_tight(a, P3, 3, 10**4)
