import pytest

from catseq.chords import ChordDiagram, decode_chords, encode_chords, parse_chords, render_chords
from catseq.core import CatalanError, ParseError, enumerate_sequences, validate

from oracle import matched_pairs


class TestConstructor:
    def test_normalizes_order(self):
        d = ChordDiagram(2, ((2, 3), (4, 1)))
        assert d.chords == ((1, 4), (2, 3))

    def test_rejects_crossing(self):
        with pytest.raises(CatalanError):
            ChordDiagram(2, ((1, 3), (2, 4)))

    def test_rejects_bad_coverage(self):
        with pytest.raises(CatalanError):
            ChordDiagram(2, ((1, 2), (2, 3)))
        with pytest.raises(CatalanError):
            ChordDiagram(1, ((1, 3),))  # point 2 missing, 3 out of pair range
        with pytest.raises(CatalanError):
            ChordDiagram(2, ((1, 2),))


class TestCodec:
    @pytest.mark.parametrize(
        "chords,bits",
        [
            (((1, 2),), "01"),
            (((1, 4), (2, 3)), "0011"),
            (((1, 8), (2, 7), (3, 4), (5, 6)), "00010111"),
        ],
    )
    def test_encode_examples(self, chords, bits):
        assert encode_chords(ChordDiagram(len(chords), chords)).bits == bits

    @pytest.mark.parametrize(
        "bits,chords",
        [
            ("01", ((1, 2),)),
            ("0101", ((1, 2), (3, 4))),
            ("00010111", ((1, 8), (2, 7), (3, 4), (5, 6))),
            ("", ()),
        ],
    )
    def test_decode_examples(self, bits, chords):
        assert decode_chords(validate(bits)).chords == chords

    @pytest.mark.parametrize("n", range(9))
    def test_round_trips(self, n):
        for s in enumerate_sequences(n):
            d = decode_chords(s)
            assert d.n == n
            assert encode_chords(d) == s
            assert decode_chords(encode_chords(d)) == d

    @pytest.mark.parametrize("n", range(9))
    def test_first01_rule_agrees_with_parenthesis_matching(self, n):
        for s in enumerate_sequences(n):
            assert set(decode_chords(s).chords) == matched_pairs(s.bits)

    @pytest.mark.parametrize("n", range(9))
    def test_decoded_diagrams_never_cross(self, n):
        for s in enumerate_sequences(n):
            chords = decode_chords(s).chords
            for i, (a, b) in enumerate(chords):
                assert (b - a) % 2 == 1
                for c, d in chords[i + 1 :]:
                    assert not (a < c < b < d) and not (c < a < d < b)


class TestTextForm:
    def test_render(self):
        d = decode_chords(validate("00010111"))
        assert render_chords(d) == "1-8,2-7,3-4,5-6"
        assert render_chords(ChordDiagram(0, ())) == ""

    def test_parse(self):
        assert parse_chords("1-8,2-7,3-4,5-6").chords == ((1, 8), (2, 7), (3, 4), (5, 6))
        assert parse_chords("").n == 0

    @pytest.mark.parametrize("text", ["1-2,", "1:2", "1-2,3-x", "1-3,2-4", "0-1"])
    def test_parse_rejects(self, text):
        with pytest.raises(ParseError):
            parse_chords(text)
