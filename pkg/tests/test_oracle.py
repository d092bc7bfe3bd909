import random

import pytest

from rectangle_forge.core import DimensionMismatch, Labeling, permute
from rectangle_forge.oracle import (
    OddCellCount,
    TooLarge,
    all_matchings,
    brute_classes,
    brute_isomorphic,
    brute_key,
    double_factorial,
    search_isomorphism,
)

from conftest import random_complete, random_partial


@pytest.mark.parametrize("n,m,count", [(2, 2, 3), (2, 3, 15), (3, 4, 10395), (1, 2, 1), (2, 5, 945)])
def test_matching_counts(n, m, count):
    assert count == double_factorial(n * m - 1)
    assert sum(1 for _ in all_matchings(n, m)) == count


def test_matchings_distinct():
    ms = [r.match for r in all_matchings(2, 4)]
    assert len(ms) == len(set(ms)) == 105
    assert all(r.is_complete for r in all_matchings(2, 4))


def test_matching_guards():
    with pytest.raises(OddCellCount):
        list(all_matchings(3, 3))
    with pytest.raises(TooLarge):
        list(all_matchings(3, 6))


def test_isomorphic_examples(diag2, rows2):
    from rectangle_forge.core import Labeling, permute
    assert brute_isomorphic(diag2, permute(diag2, Labeling((1, 0), (0, 1))))
    assert not brute_isomorphic(rows2, diag2)
    with pytest.raises(DimensionMismatch):
        brute_isomorphic(diag2, random_complete(2, 4, random.Random(0)))
    with pytest.raises(TooLarge):
        big = random_complete(3, 10, random.Random(0))
        brute_isomorphic(big, big)


def test_isomorphism_is_equivalence():
    rnd = random.Random(3)
    rs = [random_partial(2, 4, rnd, edges=3) for _ in range(25)]
    for a in rs:
        assert brute_isomorphic(a, a)
        for b in rs:
            ab = brute_isomorphic(a, b)
            assert ab == brute_isomorphic(b, a)
            assert ab == (brute_key(a) == brute_key(b))
            if ab:
                for c in rs:
                    if brute_isomorphic(b, c):
                        assert brute_isomorphic(a, c)


def test_search_isomorphism_agrees_with_brute_force():
    rnd = random.Random(8)
    for _ in range(300):
        n, m = rnd.choice([(2, 4), (3, 4), (4, 3), (3, 3)])
        a = random_partial(n, m, rnd)
        rows, cols = list(range(n)), list(range(m))
        rnd.shuffle(rows)
        rnd.shuffle(cols)
        b = permute(a, Labeling(tuple(rows), tuple(cols))) if rnd.random() < 0.5 else random_partial(n, m, rnd)
        found = search_isomorphism(a, b)
        assert (found is not None) == brute_isomorphic(a, b)
        if found is not None:
            assert permute(a, Labeling(*found)) == b


def test_class_counts():
    # row/column permutations cannot turn a row edge into a column edge
    assert brute_classes(2, 2).classes == 3
    assert brute_classes(2, 2, "structural").classes == 1
    assert brute_classes(2, 2, "domain").classes == 1
    cc = brute_classes(2, 3)
    assert (cc.classes, cc.total) == (5, 15)
    assert cc.to_json() == {"n": 2, "m": 3, "filter": "none", "classes": 5, "total": 15}
    with pytest.raises(ValueError):
        brute_classes(2, 2, "nope")
