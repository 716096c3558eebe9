import pytest

from nscs.errors import InvalidInput, WorkBudgetExceeded
from nscs.survey import survey

from reference import ref_survey


@pytest.mark.parametrize("M, D", [(10, 3), (18, 3), (25, 3), (14, 4), (12, 2), (9, 5)])
def test_survey_matches_brute_force(M, D):
    res = survey(M, D)
    assert (res.total, res.compound, res.arithmetic) == ref_survey(M, D)


def test_small_cases():
    assert survey(3, 3).total == 0
    r = survey(10, 3)
    assert (r.total, r.compound, r.arithmetic) == (26, 1, 9)
    assert survey(5, 1).total == 1


def test_fractions_and_errors():
    r = survey(20, 3)
    assert r.compound_fraction == r.compound / r.total
    with pytest.raises(InvalidInput):
        survey(0, 3)
    with pytest.raises(WorkBudgetExceeded):
        survey(100, 3, budget=10)
