import itertools
import json

import pytest

from zgabor.classify import (FINITE_SUPPORT_NOTE, Witness, WitnessInconsistency, build_witness_window,
                             classify, witness_check)


def test_examples():
    v = classify(1, 5, 3)
    assert not v.frame_exists and v.riesz_sequence_exists
    assert v.dependence_class == "always_independent"

    v = classify(4, 2, 7)
    assert v.frame_exists and not v.riesz_sequence_exists
    assert v.dependence_class == "always_dependent"

    v = classify(2, 3, 5)
    assert not v.frame_exists and v.riesz_sequence_exists
    assert v.dependence_class == "both_possible"

    v = classify(1, 3, 2)
    assert not v.frame_exists and v.riesz_sequence_exists
    assert v.dependence_class == "always_independent"


def test_trivial_triple_has_no_dependent_witness():
    v = classify(1, 1, 1)
    assert v.frame_exists and v.riesz_sequence_exists
    assert v.dependence_class == "always_independent"
    assert not any(w.claim == "dependent" for w in v.witnesses)
    witness_check(v)


def test_support_too_small_for_a_frame():
    v = classify(3, 3, 2)
    assert not v.frame_exists and not v.riesz_sequence_exists
    assert v.dependence_class == "always_dependent"


def test_errors():
    for bad in [(0, 1, 1), (1, -1, 1), (1, 1, 0), (1.5, 1, 1)]:
        with pytest.raises(ValueError):
            classify(*bad)
    with pytest.raises(ValueError):
        build_witness_window(Witness("dependent", "comb", {"M": 1, "K": 2}, 1, 1))


def test_json_shape():
    d = json.loads(json.dumps(classify(4, 2, 7).to_dict()))
    assert d["note"] == FINITE_SUPPORT_NOTE
    assert d["paper_items"] and all(isinstance(s, str) for s in d["paper_items"])
    assert {"claim", "family", "construct"} <= set(d["witnesses"][0])


def test_truth_table_rules():
    for M, N, K in itertools.product(range(1, 7), repeat=3):
        v = classify(M, N, K)
        assert v.frame_exists == (N <= M and K >= N)
        assert v.riesz_sequence_exists == (N >= M and K >= M)
        if M == 1:
            assert v.dependence_class == "always_independent"
        elif N < M or K < M:
            assert v.dependence_class == "always_dependent"
        else:
            assert v.dependence_class == "both_possible"
        # an always-dependent triple never claims Riesz existence
        if v.dependence_class == "always_dependent":
            assert not v.riesz_sequence_exists


@pytest.mark.parametrize("triple", [(4, 2, 7), (2, 3, 5), (3, 3, 3), (3, 3, 5), (2, 1, 1), (5, 5, 6)])
def test_witnesses_check_out(triple):
    report = witness_check(classify(*triple))
    assert report and all(r["passed"] for r in report)


def test_witness_inconsistency_is_reported():
    v = classify(2, 2, 2)
    # a comb with K = 2 is not a frame for (2, 2)
    v.witnesses.append(Witness("frame", "comb", {"M": 2, "K": 2}, 2, 2))
    with pytest.raises(WitnessInconsistency) as e:
        witness_check(v)
    assert any(not r["passed"] for r in e.value.report)
