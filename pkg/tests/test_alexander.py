import pytest

from conftest import fixture_text
from doodlekit.alexander import braid
from doodlekit.errors import InvalidGaussData
from doodlekit.gauss import GaussData, closure_gauss, isomorphic, parse_gauss
from doodlekit.words import REAL, parse_word, random_word


def real_count(word):
    return sum(1 for l in word.letters if l.kind == REAL)


class TestBraid:
    def test_free_loops_only(self):
        word = braid(GaussData(0, frozenset(), 2))
        assert word.strands == 2 and word.letters == ()

    def test_empty_diagram_rejected(self):
        with pytest.raises(InvalidGaussData):
            braid(GaussData(0, frozenset(), 0))

    def test_kink(self):
        g = closure_gauss(parse_word("s1", 2))
        word = braid(g)
        assert real_count(word) == 1
        assert word.strands == 2
        assert isomorphic(closure_gauss(word), g) is not None

    def test_two_crossing_example(self):
        g = closure_gauss(parse_word("s1 s2", 3))
        word = braid(g)
        assert real_count(word) == 2
        assert isomorphic(closure_gauss(word), g) is not None

    def test_deterministic(self):
        g = parse_gauss(fixture_text("kishino.gauss"))
        assert braid(g) == braid(g)

    def test_strand_count_formula(self, rng):
        for _ in range(100):
            n = rng.randint(1, 5)
            word = random_word(rng, n, rng.randint(0, 12))
            g = closure_gauss(word)
            if g.crossings == 0 and g.free_loops == 0:
                continue
            out = braid(g)
            winding = sum(1 for frm, to in g.arcs if to.crossing <= frm.crossing)
            assert out.strands == winding + g.free_loops

    def test_roundtrip_random(self, rng):
        for _ in range(150):
            n = rng.randint(1, 5)
            word = random_word(rng, n, rng.randint(0, 15))
            g = closure_gauss(word)
            out = braid(g)
            assert real_count(out) == g.crossings
            assert isomorphic(closure_gauss(out), g) is not None

    def test_roundtrip_kishino(self):
        g = parse_gauss(fixture_text("kishino.gauss"))
        out = braid(g)
        assert real_count(out) == 4
        assert isomorphic(closure_gauss(out), g) is not None

    def test_index_bounds_and_length(self, rng):
        for _ in range(100):
            n = rng.randint(1, 5)
            word = random_word(rng, n, rng.randint(0, 15))
            g = closure_gauss(word)
            out = braid(g)
            m = out.strands
            assert all(1 <= l.index <= m - 1 for l in out.letters)
            assert len(out) <= g.crossings + 2 * len(g.arcs) * m
