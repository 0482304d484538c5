import random
import subprocess
import sys

import pytest

from presuf.cli import (
    main,
    parse_escaped,
    run_bench,
    split_vars,
    write_query_records,
)

from conftest import random_query, random_text


@pytest.fixture
def barbarian(tmp_path):
    path = tmp_path / "text.bin"
    path.write_bytes(b"barbarian")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_mps_golden(barbarian, capsys):
    code, out, err = run(capsys, "count-mps", barbarian,
                         "--fixed", "a", "--vars", "ba,bar,rb")
    assert code == 0 and err == ""
    assert out == "0\t4\n1\t3\n2\t2\n"


def test_list_mps_golden(barbarian, capsys):
    code, out, _ = run(capsys, "list-mps", barbarian,
                       "--fixed", "a", "--vars", "ba,bar,a,ar",
                       "--materialize")
    assert code == 0
    lines = out.splitlines()
    by_query = {}
    for line in lines:
        i, span, shown = line.split("\t")
        a, b = span.split(":")
        assert b"barbarian"[int(a):int(b) + 1].decode() == shown
        by_query.setdefault(int(i), []).append(shown)
    assert by_query[0] == ["ba", "barba", "barbaria", "baria"]
    assert by_query[2] == ["a", "arba", "arbaria", "aria"]
    # per-query output is sorted by start then end
    spans = [tuple(map(int, l.split("\t")[1].split(":")))
             for l in lines if l.startswith("0\t")]
    assert spans == sorted(spans)


def test_spm_modes(barbarian, capsys):
    code, out, _ = run(capsys, "count-spm", barbarian,
                       "--fixed", "ba", "--vars", "a,ian,x")
    assert code == 0
    assert out == "0\t4\n1\t2\n2\t0\n"
    code, out, _ = run(capsys, "list-spm", barbarian,
                       "--fixed", "ba", "--vars", "ian", "--materialize")
    assert code == 0
    assert out == "0\t0:8\tbarbarian\n0\t3:8\tbarian\n"


def test_counts_match_list_sizes(tmp_path, capsys):
    rng = random.Random(41)
    text, letters = random_text(rng, max_len=60)
    path = tmp_path / "t.bin"
    path.write_bytes(text)
    queries = ",".join(
        random_query(rng, text, letters, max_len=4).decode("latin-1")
        for _ in range(4)
    )
    _, counts_out, _ = run(capsys, "count-mps", str(path),
                           "--fixed", "a", "--vars", queries)
    _, list_out, _ = run(capsys, "list-mps", str(path),
                         "--fixed", "a", "--vars", queries)
    counts = {line.split("\t")[0]: int(line.split("\t")[1])
              for line in counts_out.splitlines()}
    sizes = {k: 0 for k in counts}
    for line in list_out.splitlines():
        sizes[line.split("\t")[0]] += 1
    assert counts == sizes


def test_dump(barbarian, capsys):
    code, out, _ = run(capsys, "dump", barbarian, "--suffix", "ba")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "SO: 0 1 0 0 1 0 0 0 0 0"
    assert lines[1] == "CSO: 0 1 1 1 2 2 2 2 2 2"
    assert lines[2] == "NextSO: 1 4 4 4 -1 -1 -1 -1 -1 -1"
    assert lines[3] == "digraph suffix_tree {"
    assert '[label="[3,9] barian$"]' in out
    assert out.rstrip().endswith("}")


def test_dump_empty_text(tmp_path, capsys):
    path = tmp_path / "empty.bin"
    path.write_bytes(b"")
    code, out, _ = run(capsys, "dump", str(path))
    assert code == 0
    assert out.splitlines()[0] == "SO: 0"
    assert out.splitlines()[2] == "NextSO: -1"


def test_queries_file(tmp_path, barbarian, capsys):
    qfile = tmp_path / "queries.txt"
    qfile.write_bytes(b"ba\nbar\n\nrb\n")  # blank line = empty prefix
    code, out, _ = run(capsys, "count-mps", barbarian,
                       "--fixed", "a", "--queries", str(qfile))
    assert code == 0
    assert out == "0\t4\n1\t3\n2\t12\n3\t2\n"


def test_queries_bin(tmp_path, barbarian, capsys):
    qfile = tmp_path / "queries.bin"
    write_query_records(str(qfile), [b"ba", b"", b"rb\nx"])
    code, out, _ = run(capsys, "count-mps", barbarian,
                       "--fixed", "a", "--queries-bin", str(qfile))
    assert code == 0
    assert out == "0\t4\n1\t12\n2\t0\n"


def test_escapes():
    assert parse_escaped(r"a\,b") == b"a,b"
    assert parse_escaped(r"a\nb") == b"a\nb"
    assert parse_escaped(r"\x62\x61") == b"ba"
    assert parse_escaped(r"\\") == b"\\"
    assert parse_escaped("") == b""
    assert split_vars(r"a\,b,c") == [r"a\,b", "c"]
    assert split_vars("") == [""]
    assert split_vars("a,,b") == ["a", "", "b"]


def test_escaped_vars_end_to_end(tmp_path, capsys):
    path = tmp_path / "t.bin"
    path.write_bytes(b"x,y\nx,z")
    code, out, _ = run(capsys, "count-mps", str(path),
                       "--fixed", "", "--vars", r"x\,,\n")
    assert code == 0
    # "x," occurs twice -> substrings x, x,y x,z x,y... counted distinctly
    counts = [int(line.split("\t")[1]) for line in out.splitlines()]
    assert counts[0] > 0 and counts[1] > 0


def test_empty_vars_list(barbarian, capsys):
    code, out, _ = run(capsys, "count-mps", barbarian, "--fixed", "a")
    assert code == 0
    assert out == ""


def test_usage_errors(barbarian, capsys):
    code, _, err = run(capsys, "count-mps")  # missing text path
    assert code == 1 and err != ""
    code, _, err = run(capsys, "frobnicate", barbarian)
    assert code == 1
    code, _, err = run(capsys, "count-mps", barbarian, "--vars", "a",
                       "--queries", "q.txt")
    assert code == 1
    code, _, err = run(capsys, "count-mps", barbarian, "--fixed", "\\q")
    assert code == 1
    code, _, err = run(capsys, "bench", "--sizes", "100,50")
    assert code == 1


def test_io_errors(tmp_path, capsys):
    code, _, err = run(capsys, "count-mps", str(tmp_path / "missing.bin"),
                       "--vars", "a")
    assert code == 2 and err != ""


def test_bench_small(capsys):
    report = run_bench(sizes=(256, 512, 1024), alphabet=2, repeats=1, seed=3)
    assert [r.size for r in report.rows] == [256, 512, 1024]
    assert all(r.seconds >= 0 for r in report.rows)
    assert report.slope is not None
    code, out, _ = run(capsys, "bench", "--sizes", "256,512", "--alphabet", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "size\tseconds\tanswers"
    assert lines[-1].startswith("slope: ")


def test_bench_periodic_generator(capsys):
    from presuf.cli import make_bench_text
    assert make_bench_text(6, 4, 1, 0) == b"aaaaaa"
    assert make_bench_text(5, 4, 2, 0) == b"ababa"
    assert len(make_bench_text(100, 3, 0, 7)) == 100
    assert set(make_bench_text(100, 3, 0, 7)) <= set(b"abc")


def test_module_entry_point(barbarian):
    proc = subprocess.run(
        [sys.executable, "-m", "presuf", "count-mps", barbarian,
         "--fixed", "a", "--vars", "ba,bar,rb"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "0\t4\n1\t3\n2\t2\n"


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
