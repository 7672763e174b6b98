from fractions import Fraction

import pytest

from wellcovered import InputError
from wellcovered.cli import (
    ReportDocument,
    ReportSection,
    load_graph,
    main,
    parse_family_spec,
    parse_graph_file,
    parse_machine,
    render_machine,
)
from wellcovered.families import FamilySpec, crown, petersen


C4_FILE = "4 4\n0 1\n1 2\n2 3\n3 0\n"


class TestFamilySpecGrammar:
    def test_simple_specs(self):
        assert parse_family_spec("crown:3") == FamilySpec("crown", (3,))
        assert parse_family_spec("kpartite:2,3,4") == FamilySpec("kpartite", (2, 3, 4))
        assert parse_family_spec("turan:7,3") == FamilySpec("turan", (7, 3))
        assert parse_family_spec("petersen") == FamilySpec("petersen")

    def test_malformed(self):
        for bad in ("crown:", "crown:3,", ":3", "crown;3", "Crown:3"):
            with pytest.raises(InputError):
                parse_family_spec(bad)

    def test_unknown_kind(self):
        with pytest.raises(InputError):
            parse_family_spec("moebius:5")


class TestGraphFile:
    def test_c4(self):
        g = parse_graph_file(C4_FILE)
        assert g.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]

    def test_comments_and_blanks(self):
        text = "# a 4-cycle\n\n4 4\n0 1\n# middle\n1 2\n2 3\n3 0\n"
        assert parse_graph_file(text).edge_count == 4

    def test_out_of_range_edge_reports_line(self):
        text = "4 4\n0 1\n1 2\n2 3\n4 4\n"
        with pytest.raises(InputError, match="line 5"):
            parse_graph_file(text)

    def test_self_loop(self):
        with pytest.raises(InputError, match="self-loop"):
            parse_graph_file("2 1\n1 1\n")

    def test_duplicate_edge(self):
        with pytest.raises(InputError, match="duplicate"):
            parse_graph_file("3 2\n0 1\n1 0\n")

    def test_edge_count_mismatch(self):
        with pytest.raises(InputError, match="promises"):
            parse_graph_file("3 2\n0 1\n")

    def test_missing_header(self):
        with pytest.raises(InputError, match="header"):
            parse_graph_file("# nothing\n")

    def test_garbage_line(self):
        with pytest.raises(InputError, match="line 2"):
            parse_graph_file("2 1\n0 1 2\n")


class TestLoadGraph:
    def test_family_spec_wins(self):
        g, desc = load_graph("petersen")
        assert g == petersen() and desc == "petersen"

    def test_file(self, tmp_path):
        p = tmp_path / "c4.txt"
        p.write_text(C4_FILE)
        g, desc = load_graph(str(p))
        assert g.edge_count == 4 and desc == str(p)

    def test_nonsense(self):
        with pytest.raises(InputError):
            load_graph("no-such-thing:1")


class TestMachineFormat:
    def test_round_trip_with_fractional_basis(self):
        doc = ReportDocument(
            graph="crown:3",
            n=6,
            edge_count=6,
            sections=(
                ReportSection(
                    characteristic=0,
                    mis_count=5,
                    diff_rank=4,
                    wcdim=2,
                    sum_rank=5,
                    basis=((Fraction(1, 2), Fraction(-1, 3)), (1, 0)),
                ),
                ReportSection(characteristic=2, mis_count=5, diff_rank=4, wcdim=2),
            ),
        )
        assert parse_machine(render_machine(doc)) == doc

    def test_reject_unknown_key(self):
        with pytest.raises(InputError):
            parse_machine("graph = x\nn = 1\nedge_count = 0\nbogus = 3\n")


class TestComputeCommand:
    def test_petersen(self, capsys):
        assert main(["compute", "petersen"]) == 0
        out = capsys.readouterr().out
        assert "wcdim = 0" in out

    def test_crown_two_characteristics(self, capsys):
        assert main(["compute", "crown:4", "--char", "0", "--char", "2"]) == 0
        out = capsys.readouterr().out
        assert "over Q: wcdim = 3" in out
        assert "over GF(2): wcdim = 4" in out

    def test_cycle6_basis(self, capsys):
        assert main(["compute", "cycle:6", "--basis"]) == 0
        out = capsys.readouterr().out
        assert "wcdim = 2" in out
        assert out.count("basis") == 2

    def test_machine_round_trip_through_engine(self, capsys):
        assert main(["compute", "crown:4", "--char", "0", "--char", "2",
                     "--basis", "--verbose", "--machine"]) == 0
        out = capsys.readouterr().out
        doc = parse_machine(out)
        assert doc.n == 8 and [s.wcdim for s in doc.sections] == [3, 4]

    def test_file_input(self, tmp_path, capsys):
        p = tmp_path / "c4.txt"
        p.write_text(C4_FILE)
        assert main(["compute", str(p)]) == 0
        assert "wcdim = 3" in capsys.readouterr().out

    def test_input_error_exit_code(self, capsys):
        assert main(["compute", "crown:"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_bad_characteristic_exit_code(self, capsys):
        assert main(["compute", "petersen", "--char", "4"]) == 2

    def test_byte_identical_output(self, capsys):
        main(["compute", "gear:4", "--char", "3", "--basis", "--machine"])
        first = capsys.readouterr().out
        main(["compute", "gear:4", "--char", "3", "--basis", "--machine"])
        assert capsys.readouterr().out == first


class TestVerifyCommand:
    def test_union_section_passes(self, capsys):
        assert main(["verify", "union", "--seed", "1", "--trials", "5"]) == 0
        out = capsys.readouterr().out
        assert "0 failed, 0 skipped" in out

    def test_family_crown(self, capsys):
        assert main(["verify", "family", "crown", "--max-n", "9"]) == 0
        out = capsys.readouterr().out
        assert "crown:9" in out and "0 failed" in out

    def test_lex_section_reports_refutations(self, capsys):
        code = main(["verify", "lex", "--seed", "1", "--trials", "10"])
        out = capsys.readouterr().out
        assert code == 1
        assert "FAIL" in out

    def test_machine_output_is_deterministic(self, capsys):
        main(["verify", "blowup", "--seed", "2", "--trials", "3", "--machine"])
        first = capsys.readouterr().out
        main(["verify", "blowup", "--seed", "2", "--trials", "3", "--machine"])
        assert capsys.readouterr().out == first
        assert "verdict = pass" in first

    def test_kind_only_valid_for_family(self, capsys):
        assert main(["verify", "lex", "crown"]) == 2

    def test_unknown_family_kind(self, capsys):
        assert main(["verify", "family", "moebius"]) == 2


def test_families_command_lists_all_kinds(capsys):
    assert main(["families"]) == 0
    out = capsys.readouterr().out
    for kind in ("complete", "empty", "kpartite", "turan", "crown", "path", "cycle", "gear", "petersen"):
        assert kind in out
