import json

import pytest
from hypothesis import given, strategies as st

from lexwreath.autgroup import automorphism_group, wreath_embedding_order
from lexwreath.graph import (
    all_graphs, complement, complete, cycle, empty, lex_product, path, regularity, relabel,
)
from lexwreath.spectral import spectral_condition
from lexwreath.verdict import (
    Quantum, Report, SweepLimitError, analyze, classical_condition, quantum_verdict,
    sabidussi_sets, verify_sabidussi,
)

from conftest import graphs


def regular_graphs(max_n):
    return [g for n in range(1, max_n + 1) for g in all_graphs(n) if regularity(g) is not None]


def test_sabidussi_examples():
    assert set(sabidussi_sets(empty(2)).s_pairs) == {(0, 1), (1, 0)}
    for n in range(4, 10):
        assert sabidussi_sets(cycle(n)).t_pairs == ()
    assert set(sabidussi_sets(cycle(4)).s_pairs) == {(0, 2), (2, 0), (1, 3), (3, 1)}


def test_t_pairs_equal_s_of_complement_exhaustive():
    for n in range(1, 7):
        for g in all_graphs(n):
            sets = sabidussi_sets(g)
            assert sets.t_pairs == sabidussi_sets(complement(g)).s_pairs
            assert set(sets.s_pairs) == {(b, a) for a, b in sets.s_pairs}


@pytest.mark.parametrize("x, y, expected", [
    (complete(2), cycle(6), True),
    (empty(2), empty(2), False),
    (complete(2), complete(2), False),
])
def test_classical_condition(x, y, expected):
    assert classical_condition(x, y) == expected


@given(graphs(max_n=5), graphs(max_n=5), st.data())
def test_classical_condition_label_invariant(x, y, data):
    px = data.draw(st.permutations(range(x.vertex_count)))
    py = data.draw(st.permutations(range(y.vertex_count)))
    assert classical_condition(x, y) == classical_condition(relabel(x, px), relabel(y, py))


def test_quantum_examples():
    for y in [cycle(4), complete(3), empty(3), cycle(7), lex_product(complete(2), empty(2))]:
        assert quantum_verdict(cycle(5), y).status == Quantum.HOLDS
    assert quantum_verdict(complete(3), cycle(6)).status == Quantum.HOLDS
    v = quantum_verdict(path(3), complete(2))
    assert v.status == Quantum.NOT_APPLICABLE and "X" in v.reason


def test_quantum_complement_symmetry():
    regs = regular_graphs(5)
    for x in regs:
        for y in regs:
            if y.vertex_count > 4:
                continue
            assert quantum_verdict(x, y) == quantum_verdict(complement(x), complement(y))


def test_spectral_implies_classical():
    regs = regular_graphs(5)
    checked = 0
    for x in regs:
        for y in regs:
            if y.vertex_count > 4:
                continue
            v = spectral_condition(x, y)
            if v.holds:
                checked += 1
                assert classical_condition(x, y)
    assert checked > 0


def test_analyze_k2_c6():
    r = analyze(complete(2), cycle(6))
    assert r.classical_holds and r.quantum == Quantum.HOLDS
    assert r.spectral.applicable and not r.spectral.holds
    assert r.cross_check == {"aut_product_order": "768", "wreath_order": "768", "equal": True}


def test_analyze_e2_e2():
    r = analyze(empty(2), empty(2))
    assert not r.classical_holds and r.quantum == Quantum.FAILS
    assert r.cross_check["aut_product_order"] == "24"
    assert r.cross_check["wreath_order"] == "8"
    assert not r.cross_check["equal"]


@given(graphs(max_n=4))
def test_analyze_single_vertex_x(y):
    r = analyze(empty(1), y)
    assert r.classical_holds
    assert r.cross_check["equal"]


def test_analyze_cross_check_limit():
    r = analyze(cycle(5), cycle(5))
    assert r.cross_check is None and "above aut limit" in r.cross_check_reason
    r = analyze(cycle(5), cycle(5), aut_limit=25)
    assert r.cross_check["equal"]
    assert analyze(cycle(5), cycle(5), with_cross_check=False).cross_check_reason is None


@given(graphs(max_n=4), graphs(max_n=3))
def test_report_invariants_and_roundtrip(x, y):
    r = analyze(x, y, verbose=True)
    both_regular = regularity(x) is not None and regularity(y) is not None
    assert (r.quantum == Quantum.HOLDS) == (both_regular and r.classical_holds)
    assert r.cross_check["equal"] == r.classical_holds
    text = r.to_json()
    again = Report.from_json(text)
    assert again == r
    assert again.to_json() == text
    assert set(json.loads(text)) >= {"x_summary", "y_summary", "sabidussi_y", "classical_holds",
                                     "quantum", "spectral", "cross_check"}


def test_verify_small_sweeps():
    s = verify_sabidussi(3, 3)
    assert s.pairs_checked == 11 * 11 and s.ok
    s = verify_sabidussi(4, 3)
    assert s.pairs_checked == 75 * 11 and s.ok


def test_verify_limits():
    with pytest.raises(SweepLimitError):
        verify_sabidussi(9, 4)
    with pytest.raises(SweepLimitError):
        verify_sabidussi(5, 5)


def test_e2_e2_in_sweep_is_flagged_non_wreath():
    x = y = empty(2)
    assert automorphism_group(lex_product(x, y)).order == 24
    assert wreath_embedding_order(x, y) == 8
    assert not classical_condition(x, y)


def test_verify_parallel_matches_serial():
    assert verify_sabidussi(3, 2, workers=2) == verify_sabidussi(3, 2, workers=1)
