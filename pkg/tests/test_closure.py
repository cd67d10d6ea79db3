import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidsurgery.braid import BraidWord, concat, full_twist_word, power
from braidsurgery.closure import axis_linking, components, linking_matrix

from conftest import braid_words


def W(k, *letters):
    return BraidWord(k, letters)


class TestComponents:
    def test_unlink(self):
        assert components(W(3)) == (3, (1, 2, 3), (1, 1, 1))

    def test_hopf(self, hopf):
        m, labels, counts = components(hopf)
        assert (m, counts) == (2, (1, 1))

    def test_trefoil(self, trefoil):
        assert components(trefoil) == (1, (1, 1), (2,))

    def test_labels_by_least_strand(self):
        # strands 2 and 4 form one component, 1 and 3 stay put
        # sigma_2 sigma_3 sigma_2 reverses positions 2..4
        m, labels, counts = components(W(4, 2, 3, 2))
        assert m == 3
        assert labels == (1, 2, 3, 2)
        assert counts == (1, 2, 1)


class TestLinking:
    def test_hopf(self, hopf):
        assert linking_matrix(hopf).linking == ((0, 1), (1, 0))

    def test_negative_hopf(self):
        assert linking_matrix(W(2, -1, -1)).linking == ((0, -1), (-1, 0))

    @pytest.mark.parametrize("k", range(1, 6))
    def test_unlink(self, k):
        info = linking_matrix(W(k))
        assert all(x == 0 for row in info.linking for x in row)

    def test_torus_link_2_4(self):
        assert linking_matrix(W(2, 1, 1, 1, 1)).linking == ((0, 2), (2, 0))

    def test_whitehead_like_zero_linking(self):
        # sigma_1^2 sigma_1^-2 is the unlink as a braid, but linking is computed per word
        assert linking_matrix(W(2, 1, 1, -1, -1)).linking == ((0, 0), (0, 0))

    def test_three_component_full_twist(self):
        # every pair of strands in the full twist on 3 strands links once
        assert linking_matrix(full_twist_word(3)).linking == ((0, 1, 1), (1, 0, 1), (1, 1, 0))

    def test_axis_linking(self, hopf, trefoil):
        assert axis_linking(linking_matrix(hopf)) == (1, 1)
        assert axis_linking(linking_matrix(trefoil)) == (2,)
        assert axis_linking(linking_matrix(W(4))) == (1, 1, 1, 1)


@settings(max_examples=200)
@given(braid_words(max_strands=6, max_length=20), st.integers(0, 3))
def test_full_twist_linking_law(w, n):
    base = linking_matrix(w)
    twisted = linking_matrix(concat(power(full_twist_word(w.strands), n), w))
    assert twisted.strand_to_component == base.strand_to_component
    s = base.strand_counts
    m = base.component_count
    for a in range(m):
        for b in range(m):
            expected = base.linking[a][b] + n * s[a] * s[b] if a != b else 0
            assert twisted.linking[a][b] == expected


@settings(max_examples=200)
@given(braid_words(max_strands=6, max_length=20))
def test_symmetric_and_orientation_flip(w):
    info = linking_matrix(w)
    assert sum(info.strand_counts) == w.strands
    m = info.component_count
    assert all(info.linking[a][b] == info.linking[b][a] for a in range(m) for b in range(m))
    assert all(info.linking[a][a] == 0 for a in range(m))
    # reading the braid upside down reverses every strand; cycles are the same sets
    flipped = linking_matrix(BraidWord(w.strands, w.letters[::-1]))
    assert flipped.strand_to_component == info.strand_to_component
    assert flipped.linking == info.linking
