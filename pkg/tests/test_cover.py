
import pytest
from hypothesis import given, settings

from conftest import covers, oracle_code_of_cover, oracle_nerve_faces, random_cover
from neuralcode import (
    Codeword,
    Cover,
    atoms,
    circle_arc_cover,
    code_of_cover,
    grid_box_cover,
    nerve_equals_delta,
    parse_cover,
    render_cover,
)
from neuralcode.cover import render_atoms
from neuralcode.complex import nerve
from neuralcode.errors import (
    BadArc,
    BadHeader,
    BadPoint,
    BoxOutOfExtent,
    EmptyExtent,
    ZeroSets,
)


def strings(code):
    return set(code.strings())


class TestCodeOfCover:
    def test_interval(self):
        cover = Cover(4, ({1, 2, 3}, {2, 3, 4}))
        assert strings(code_of_cover(cover)) == {"10", "11", "01"}

    def test_uncovered_point_gives_zero_word(self):
        assert strings(code_of_cover(Cover(2, ({1},)))) == {"1", "0"}

    def test_identical_sets(self):
        assert strings(code_of_cover(Cover(5, (range(1, 6), range(1, 6))))) == {"11"}

    def test_zero_sets(self):
        with pytest.raises(ZeroSets):
            code_of_cover(Cover(3, ()))

    @given(covers())
    def test_matches_formula(self, cover):
        code = code_of_cover(cover)
        assert code.words == oracle_code_of_cover(cover)
        assert len(code) <= min(2 ** cover.n, cover.ground_size + 1)

    def test_permutation_equivariance(self, rng):
        for _ in range(200):
            cover = random_cover(rng)
            order = list(range(cover.n))
            rng.shuffle(order)
            permuted = code_of_cover(cover.permuted(order))
            expected = {"".join(w[i] for i in order) for w in code_of_cover(cover).strings()}
            assert strings(permuted) == expected


class TestAtoms:
    def test_interval(self):
        atlas = atoms(Cover(4, ({1, 2, 3}, {2, 3, 4})))
        assert {str(w): set(p) for w, p in atlas.items()} == {"10": {1}, "11": {2, 3}, "01": {4}}
        assert [str(w) for w in atlas] == ["01", "10", "11"]

    def test_single_point(self):
        assert atoms(Cover(1, ({1},))) == {Codeword.from_string("1"): frozenset({1})}

    def test_disjoint(self):
        atlas = atoms(Cover(2, ({1}, {2})))
        assert {str(w): set(p) for w, p in atlas.items()} == {"10": {1}, "01": {2}}

    @given(covers())
    def test_partition(self, cover):
        atlas = atoms(cover)
        seen = set()
        for w, pts in atlas.items():
            assert pts and not (pts & seen)
            seen |= pts
            for p in pts:
                assert w.support == {i for i, u in enumerate(cover.sets, 1) if p in u}
        assert seen == set(range(1, cover.ground_size + 1))
        assert {w.mask for w in atlas} == code_of_cover(cover).words

    def test_render(self):
        assert render_atoms(atoms(Cover(4, ({1, 2, 3}, {2, 3, 4})))) == "01: 4\n10: 1\n11: 2 3\n"


class TestGridBoxes:
    def test_interval(self, interval_cover):
        assert interval_cover == Cover(4, ({1, 2, 3}, {2, 3, 4}))

    def test_disjoint_boxes(self):
        cover = grid_box_cover(1, [(0, 0), (2, 2)], (0, 2))
        assert strings(code_of_cover(cover)) == {"10", "01", "00"}

    def test_squares_sharing_edge(self):
        cover = grid_box_cover(2, [[(0, 1), (0, 1)], [(1, 2), (0, 1)]], [(0, 2), (0, 1)])
        assert cover.ground_size == 6
        from neuralcode import facets

        assert facets(nerve(cover)) == [{1, 2}]

    def test_row_major(self):
        cover = grid_box_cover(2, [[(0, 0), (1, 1)]], [(0, 1), (0, 2)])
        # points (0,0),(0,1),(0,2),(1,0),... -> (0,1) is point 2
        assert cover.sets == (frozenset({2}),)

    def test_three_d(self):
        cover = grid_box_cover(3, [[(0, 1)] * 3, [(1, 1)] * 3], [(0, 1)] * 3)
        assert cover.ground_size == 8
        assert len(cover.sets[0]) == 8 and cover.sets[1] == frozenset({8})

    def test_errors(self):
        with pytest.raises(EmptyExtent):
            grid_box_cover(1, [], (3, 2))
        with pytest.raises(BoxOutOfExtent):
            grid_box_cover(1, [(0, 5)], (0, 3))
        with pytest.raises(BoxOutOfExtent):
            grid_box_cover(2, [[(-1, 0), (0, 0)]], [(0, 3), (0, 3)])


class TestCircle:
    def test_three_arcs(self, circle_cover):
        code = code_of_cover(circle_cover)
        assert strings(code) == {"100", "010", "001", "110", "011", "101"}

    def test_full_arc_rejected(self):
        with pytest.raises(BadArc):
            circle_arc_cover(3, [(0, 3)])
        with pytest.raises(BadArc):
            circle_arc_cover(5, [(0, 0)])
        with pytest.raises(BadArc):
            circle_arc_cover(2, [(0, 1)])

    def test_halves(self):
        assert strings(code_of_cover(circle_arc_cover(4, [(0, 2), (2, 2)]))) == {"10", "01"}

    def test_wraps(self):
        assert circle_arc_cover(5, [(4, 2)]).sets == (frozenset({5, 1}),)


class TestNerveEqualsDelta:
    def test_fixtures(self, interval_cover, circle_cover):
        assert nerve_equals_delta(interval_cover).equal
        report = nerve_equals_delta(circle_cover)
        assert report.equal and report.witness is None

    @given(covers())
    @settings(max_examples=300)
    def test_random(self, cover):
        report = nerve_equals_delta(cover)
        assert report.equal
        assert report.nerve.faces() == oracle_nerve_faces(cover)

    def test_zero_sets(self):
        with pytest.raises(ZeroSets):
            nerve_equals_delta(Cover(2, ()))


class TestCoverFile:
    def test_roundtrip(self, rng):
        for _ in range(100):
            cover = random_cover(rng)
            assert parse_cover(render_cover(cover)) == cover

    def test_format(self):
        text = "# demo\npoints 4 sets 3\n1 2 3\n\n# skipped\n2 3 4\n\n"
        cover = parse_cover(text)
        assert cover == Cover(4, ({1, 2, 3}, set(), {2, 3, 4}))
        assert render_cover(cover) == "points 4 sets 3\n1 2 3\n\n2 3 4\n"

    @pytest.mark.parametrize(
        "text, exc, lineno",
        [
            ("points 4\n1\n", BadHeader, 1),
            ("points x sets 1\n1\n", BadHeader, 1),
            ("points 3 sets 1\n1 5\n", BadPoint, 2),
            ("points 3 sets 1\n2 1\n", BadPoint, 2),
            ("points 3 sets 1\n1 a\n", BadPoint, 2),
            ("points 3 sets 2\n1\n", BadHeader, 2),
            ("points 3 sets 1\n1\n2\n", BadHeader, 3),
            ("# only a comment\n", BadHeader, None),
        ],
    )
    def test_errors(self, text, exc, lineno):
        with pytest.raises(exc) as info:
            parse_cover(text)
        assert info.value.lineno == lineno
