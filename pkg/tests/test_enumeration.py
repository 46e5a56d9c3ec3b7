import json

import pytest

from parkfunc import (
    GuardRangeError,
    all_words,
    count_parking_functions,
    count_prime_parking_functions,
    verify_bijection,
    verify_proposition,
)

PF_COUNTS = {1: 1, 2: 3, 3: 16, 4: 125, 5: 1296}
PPF_COUNTS = {1: 1, 2: 1, 3: 4, 4: 27, 5: 256}


def test_odometer_order():
    assert list(all_words(2, 2)) == [(1, 1), (1, 2), (2, 1), (2, 2)]


@pytest.mark.parametrize("n,expected", sorted(PF_COUNTS.items()))
def test_count_parking_functions(n, expected):
    report = count_parking_functions(n)
    assert report.matching == expected
    assert report.formula_value == (n + 1) ** (n - 1)
    assert report.agrees
    assert report.total_words == n**n


@pytest.mark.parametrize("n,expected", sorted(PPF_COUNTS.items()))
def test_count_prime_parking_functions(n, expected):
    report = count_prime_parking_functions(n)
    assert report.matching == expected
    assert report.formula_value == (n - 1) ** (n - 1)
    assert report.agrees


def test_report_serializes(capsys):
    record = count_parking_functions(3).as_dict()
    assert set(record) == {
        "n", "total_words", "matching", "formula_value", "agrees", "elapsed",
    }
    assert json.loads(json.dumps(record)) == record


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_verify_bijection(n):
    assert verify_bijection(n)


def test_bijection_image_counts():
    # 8 words over [2]^3 land bijectively on 2 shifts x 4 prime words.
    from parkfunc import decompose

    pairs = {decompose(a) for a in all_words(2, 3)}
    assert len(pairs) == 8
    assert {k for k, _ in pairs} == {1, 2}
    assert len({b for _, b in pairs}) == 4


@pytest.mark.parametrize("n", [2, 3, 4])
def test_verify_proposition(n):
    assert verify_proposition(n)


@pytest.mark.parametrize(
    "call",
    [
        lambda: count_parking_functions(9),
        lambda: count_prime_parking_functions(12),
        lambda: verify_bijection(7),
        lambda: verify_proposition(6),
    ],
)
def test_guard_ranges(call):
    with pytest.raises(GuardRangeError):
        call()


def test_guard_is_overridable():
    assert verify_proposition(6, force=True)


def test_nonsense_n_is_invalid_not_guarded():
    with pytest.raises(ValueError) as exc:
        count_parking_functions(0)
    assert not isinstance(exc.value, GuardRangeError)
