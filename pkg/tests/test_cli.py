import io

from planturan import graph6
from planturan.cli import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, run

from conftest import k2n


def call(argv, stdin=""):
    out = io.StringIO()
    code = run(argv, out=out, inp=io.StringIO(stdin))
    return code, out.getvalue()


def test_exact_n5():
    code, out = call(["exact", "--n", "5", "--pattern", "2,2", "--threads", "1"])
    assert code == EXIT_OK
    assert "value=9 exact=true" in out.splitlines()
    witnesses = [l.split()[1] for l in out.splitlines() if l.startswith("witness ")]
    assert graph6.decode(witnesses[0]).edge_count == 9


def test_exact_pattern_canonicalized():
    code, out = call(["exact", "--n", "4", "--pattern", "3,1", "--threads", "1"])
    assert code == EXIT_OK
    assert out.splitlines()[0] == "note: pattern 3,1 canonicalized to 1,3"


def test_exact_budget_non_exact():
    code, out = call(["exact", "--n", "8", "--pattern", "2,2", "--threads", "1", "--budget", "5"])
    assert code == EXIT_OK and "exact=false" in out


def test_exact_cache(tmp_path):
    path = str(tmp_path / "cache.tsv")
    argv = ["exact", "--n", "6", "--pattern", "2,2", "--threads", "1", "--cache", path]
    code, first = call(argv)
    code2, second = call(argv)
    assert code == code2 == EXIT_OK
    assert "source=cache" in second
    assert [l for l in first.splitlines() if l.startswith("value=")] == [
        l for l in second.splitlines() if l.startswith("value=")
    ]


def test_construct_icosa():
    code, out = call(["construct", "--family", "icosa"])
    lines = out.splitlines()
    assert code == EXIT_OK
    assert graph6.decode(lines[0]).edge_count == 30
    assert "edges=30" in lines[1] and "planar=true" in lines[1] and "free(3,4)=true" in lines[1]
    assert lines[2] == "degrees 5:12"


def test_construct_large_skips_graph6():
    code, out = call(["construct", "--family", "k2star", "--n", "100"])
    assert code == EXIT_OK and out.startswith("# graph6 unavailable")


def test_construct_bad_n():
    assert call(["construct", "--family", "s35", "--n", "10"])[0] == EXIT_USAGE


def test_verify_free_and_contains():
    text = graph6.encode(k2n(4)) + "\n" + graph6.encode(k2n(4).add_edge(0, 1)) + "\n"
    code, out = call(["verify", "--pattern", "2,2"], text)
    lines = out.splitlines()
    assert lines[0] == "line 1: FREE"
    assert lines[1].startswith("line 2: CONTAINS backbone=")
    assert code == EXIT_VIOLATION


def test_verify_all_free_exit_zero():
    code, out = call(["verify", "--pattern", "2,2"], graph6.encode(k2n(4)) + "\n")
    assert code == EXIT_OK and out == "line 1: FREE\n"


def test_verify_malformed_continues():
    text = "!!!\n" + graph6.encode(k2n(4)) + "\n"
    code, out = call(["verify", "--pattern", "2,2"], text)
    lines = out.splitlines()
    assert lines[0].startswith("line 1: ERROR")
    assert lines[1] == "line 2: FREE"
    assert code == EXIT_USAGE


def test_verify_require_planar():
    wheel = graph6.encode(k2n(3).add_edge(0, 1))
    k5 = "D~{"
    code, out = call(["verify", "--pattern", "3,3", "--require-planar"], k5 + "\n")
    assert out == "line 1: NONPLANAR\n" and code == EXIT_VIOLATION
    assert call(["verify", "--pattern", "3,3", "--require-planar"], wheel + "\n")[0] == EXIT_OK


def test_verify_byte_identical():
    text = "\n".join(graph6.encode(k2n(n).add_edge(0, 1)) for n in range(2, 9)) + "\n"
    outs = {call(["verify", "--pattern", "2,2"], text)[1] for _ in range(5)}
    assert len(outs) == 1


def test_bounds_table_and_records():
    code, out = call(["bounds", "--pattern", "2,2", "--range", "3..6", "--exact-upto", "6", "--threads", "1"])
    assert code == EXIT_OK and out.splitlines()[0].split()[0] == "n"
    code, out = call(["bounds", "--pattern", "3,3", "--range", "5..7", "--exact-upto", "7",
                      "--threads", "1", "--records"])
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "7\t3,3\t15\t12\t15\t15\ttrue"


def test_bounds_bad_range():
    assert call(["bounds", "--pattern", "2,2", "--range", "9..3"])[0] == EXIT_USAGE


def test_lemmas_suite():
    code, out = call(["lemmas", "--suite", "s22-fig2"])
    assert code == EXIT_OK and out.startswith("s22-fig2 PASS")


def test_usage_errors():
    assert call([])[0] == EXIT_USAGE
    assert call(["exact", "--n", "5", "--pattern", "x"])[0] == EXIT_USAGE
    assert call(["exact", "--n", "5", "--pattern", "2,2", "--threads", "0"])[0] == EXIT_USAGE
