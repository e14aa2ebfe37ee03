import pytest

from catseq.core import CatalanError, DomainError, enumerate_sequences, validate
from catseq.families import FAMILIES, family_ids, resolve, transcode
from catseq.render import render_dot, render_mountain
from catseq.trees import decode_tree

TOTAL_FAMILIES = [name for name, fam in FAMILIES.items() if fam.total]


class TestRegistry:
    def test_closed_enumeration(self):
        assert family_ids() == [
            "sequence",
            "tree",
            "path",
            "pm",
            "chords",
            "mult",
            "rpn",
            "rpn-paper",
            "polygon",
        ]

    def test_aliases(self):
        assert resolve("ballot") is resolve("pm")
        assert resolve("votes") is resolve("pm")
        assert resolve("mountain") is resolve("sequence")

    def test_unknown_family(self):
        with pytest.raises(CatalanError):
            resolve("frieze")

    def test_only_the_paper_wire_format_is_partial(self):
        assert [name for name, fam in FAMILIES.items() if not fam.total] == ["rpn-paper"]


class TestTranscode:
    def test_examples(self):
        assert transcode("pm", "path", "+++---") == "HHHVVV"
        assert transcode("tree", "chords", "((. (. .)) (. .))") == "1-8,2-7,3-4,5-6"
        assert transcode("sequence", "sequence", "001011") == "001011"

    def test_partial_target_can_reject(self):
        with pytest.raises(DomainError):
            transcode("sequence", "rpn-paper", "010011")
        assert transcode("sequence", "rpn-paper", "00010111") == "aaa*a**"

    def test_parse_failure_propagates(self):
        with pytest.raises(CatalanError):
            transcode("pm", "path", "++x-")

    @pytest.mark.parametrize("n", range(7))
    def test_hub_identity_over_all_total_pairs(self, n):
        for s in enumerate_sequences(n):
            texts = {}
            for name in TOTAL_FAMILIES:
                fam = FAMILIES[name]
                texts[name] = fam.render(fam.decode(s))
            for src in TOTAL_FAMILIES:
                assert transcode(src, src, texts[src]) == texts[src]
                for dst in TOTAL_FAMILIES:
                    there = transcode(src, dst, texts[src])
                    assert there == texts[dst]
                    assert transcode(dst, src, there) == texts[src]

    @pytest.mark.parametrize("n", range(7))
    def test_semilength_is_preserved(self, n):
        for s in enumerate_sequences(n):
            for name in TOTAL_FAMILIES:
                fam = FAMILIES[name]
                assert fam.encode(fam.decode(s)) == s


class TestMountain:
    def test_single_peak(self):
        assert render_mountain(validate("01")) == ["/\\"]

    def test_two_levels(self):
        assert render_mountain(validate("0011")) == [" /\\", "/  \\"]

    def test_flat_ripple(self):
        assert render_mountain(validate("010101")) == ["/\\/\\/\\"]

    def test_empty(self):
        assert render_mountain(validate("")) == []

    def test_fig7(self):
        # altitude profile 0,1,2,3,2,3,2,1,0: glyphs at the band they move through
        assert render_mountain(validate("00010111")) == [
            "  /\\/\\",
            " /    \\",
            "/      \\",
        ]

    @pytest.mark.parametrize("n", range(7))
    def test_glyph_counts_and_width(self, n):
        for s in enumerate_sequences(n):
            lines = render_mountain(s)
            joined = "".join(lines)
            assert joined.count("/") == n and joined.count("\\") == n
            assert all(len(line) <= 2 * n for line in lines)


class TestDot:
    def test_empty_graph(self):
        assert render_dot(None) == "digraph tree {\n}"

    def test_single_node(self):
        assert render_dot(decode_tree(validate("01"))) == "digraph tree {\n  v0;\n}"

    def test_left_left_chain(self):
        assert render_dot(decode_tree(validate("001011"))) == (
            "digraph tree {\n"
            "  v0;\n  v1;\n  v2;\n"
            "  v0 -> v1 [label=L];\n"
            "  v1 -> v2 [label=L];\n"
            "}"
        )

    def test_left_then_right(self):
        assert render_dot(decode_tree(validate("001101"))) == (
            "digraph tree {\n"
            "  v0;\n  v1;\n  v2;\n"
            "  v0 -> v1 [label=L];\n"
            "  v1 -> v2 [label=R];\n"
            "}"
        )

    def test_deterministic(self):
        s = validate("00010111")
        assert render_dot(decode_tree(s)) == render_dot(decode_tree(s))
