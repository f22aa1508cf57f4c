import json

import pytest
from hypothesis import given, strategies as st

from dsplit.dinv import delta
from dsplit.staircase import (
    BifiltGen,
    Staircase,
    StaircaseError,
    consecutive_torus_staircase,
    load_staircase,
    pareto_min,
    paper_tensor,
    tensor,
    tensor_pairs,
    torus_14_15,
    unit_staircase,
    validate,
    whitehead_sum_22,
)
from oracles import T14_15_LISTED, WH22_LISTED, brute_delta, mirror, symmetric_staircases


def dominance_oracle(points):
    pts = set(points)
    return {
        x for x in pts
        if not any(y != x and y[0] <= x[0] and y[1] <= x[1] for y in pts)
    }


class TestPaperLists:
    def test_torus_14_15(self):
        s = torus_14_15()
        assert len(s) == 15
        assert (0, 105) in s and (105, 0) in s
        assert [tuple(g) for g in s] == mirror(T14_15_LISTED)
        assert [g for g in s if g.alpha == g.beta] == [BifiltGen(28, 28)]

    def test_whitehead_sum(self):
        s = whitehead_sum_22()
        assert len(s) == 23
        assert (0, 22) in s and (11, 11) in s
        assert [tuple(g) for g in s] == mirror(WH22_LISTED)
        assert s == Staircase.from_corners(((b, a) for a, b in s))


class TestBuilders:
    def test_consecutive_matches_paper(self):
        assert consecutive_torus_staircase(15) == torus_14_15()
        assert consecutive_torus_staircase(15).generators[5] == (15, 45)

    def test_consecutive_19(self):
        s = consecutive_torus_staircase(19)
        assert len(s) == 19
        assert max(g.beta for g in s) == 171

    @pytest.mark.parametrize("n", [3, 13, 16, 20])
    def test_consecutive_rejects(self, n):
        with pytest.raises(ValueError):
            consecutive_torus_staircase(n)

    def test_unit(self):
        assert unit_staircase(22) == whitehead_sum_22()
        assert unit_staircase(0).generators == ((0, 0),)
        assert [tuple(g) for g in unit_staircase(2)] == [(0, 2), (1, 1), (2, 0)]
        with pytest.raises(ValueError):
            unit_staircase(-1)

    @pytest.mark.parametrize("s", [torus_14_15(), whitehead_sum_22(), unit_staircase(0), unit_staircase(7)]
                             + [consecutive_torus_staircase(n) for n in range(15, 40, 2)])
    def test_builder_invariants(self, s):
        validate(s.generators)
        assert {g.swap() for g in s} == set(s)
        betas = [g.beta for g in s]
        assert betas == sorted(betas, reverse=True) and len(set(betas)) == len(betas)


class TestValidation:
    @pytest.mark.parametrize("gens", [
        [],
        [(0, 2), (2, 1)],             # not symmetric
        [(0, 2), (1, 1), (1, 2), (2, 1), (2, 0)],   # dominated point, not a staircase
        [(-1, 1), (1, -1)],
    ])
    def test_rejects(self, gens):
        with pytest.raises(StaircaseError):
            Staircase(tuple(gens))

    def test_loader(self, tmp_path):
        f = tmp_path / "s.json"
        f.write_text(json.dumps([[0, 3], [1, 1], [3, 0]]))
        assert load_staircase(f).to_pairs() == [[0, 3], [1, 1], [3, 0]]

    @pytest.mark.parametrize("text,msg", [
        ("[[0, 3], [3, 1]]", "symmetric"),
        ("not json", "invalid JSON"),
        ('{"a": 1}', "array"),
        ("[[0, 1, 2]]", "array"),
        ("[]", "at least one"),
    ])
    def test_loader_errors(self, tmp_path, text, msg):
        f = tmp_path / "s.json"
        f.write_text(text)
        with pytest.raises(StaircaseError, match=msg):
            load_staircase(f)

    def test_json_roundtrip(self, tmp_path):
        f = tmp_path / "s.json"
        f.write_text(torus_14_15().to_json())
        assert load_staircase(f) == torus_14_15()


class TestTensor:
    def test_paper_pair_count(self):
        assert len(list(tensor_pairs(torus_14_15(), whitehead_sum_22()))) == 15 * 23 == 345

    def test_paper_contains_diagonal(self):
        assert (39, 39) in paper_tensor()

    def test_matches_brute_force(self, brute_levels):
        assert paper_tensor() == set(brute_levels)

    def test_identity(self):
        s = torus_14_15()
        assert tensor(s, unit_staircase(0)) == s.as_set()

    @given(symmetric_staircases(), symmetric_staircases(), symmetric_staircases())
    def test_commutative_associative(self, a, b, c):
        assert tensor(a, b) == tensor(b, a)
        assert tensor(tensor(a, b), c) == tensor(a, tensor(b, c))

    @given(symmetric_staircases(), symmetric_staircases())
    def test_tensor_swap_symmetric(self, a, b):
        t = tensor(a, b)
        assert {g.swap() for g in t} == t


class TestPareto:
    def test_example(self):
        assert pareto_min([(0, 2), (1, 1), (1, 2)]) == {(0, 2), (1, 1)}

    @given(symmetric_staircases())
    def test_staircase_is_antichain(self, s):
        assert pareto_min(s) == s.as_set()

    @given(st.lists(st.tuples(st.integers(0, 15), st.integers(0, 15)), min_size=1, max_size=30))
    def test_matches_dominance_oracle(self, pts):
        assert pareto_min(pts) == dominance_oracle(pts)

    @given(st.lists(st.tuples(st.integers(0, 30), st.integers(0, 30)), min_size=1, max_size=30),
           st.integers(-40, 40))
    def test_preserves_delta(self, pts, m):
        assert delta(pareto_min(pts), m) == brute_delta(pts, m)

    def test_paper_delta_unchanged(self, brute_levels):
        pruned = pareto_min(paper_tensor())
        assert len(pruned) < len(set(brute_levels))
        for m in range(-112, 113):
            assert delta(pruned, m) == brute_delta(brute_levels, m)
