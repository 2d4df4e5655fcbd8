import alcs
import pytest


def test_worked_example_query():
    index = alcs.build_index(b"abaab", 0.5, seed=7)
    assert index.n == 5
    assert index.z == 4
    assert index.epsilon == 0.5
    assert index.lengths == [1, 2, 4]

    result = index.query(b"aab")
    assert result.length == 3
    assert (result.p_start, result.p_end) == (1, 3)
    assert result.t_pos == 3
    assert alcs.verify_result(result, b"aab", b"abaab")

    miss = index.query(b"zzz")
    assert miss.length == 0
    assert miss.t_pos is None


def test_algorithms_agree_with_stats():
    text = alcs.generate_corpus(base_len=128, repeats=16, mut_rate=0.01, seed=3)
    index = alcs.build_index(text, 0.25, seed=11)
    pattern = text[200:260] + b"xy"
    naive, naive_stats = index.query_with_stats(pattern, algo="naive")
    pruned, pruned_stats = index.query_with_stats(pattern, algo="pruned")
    assert naive.length == pruned.length
    assert pruned_stats.grid_checks <= naive_stats.grid_checks
    assert pruned_stats.map_lookups > 0
    with pytest.raises(ValueError):
        index.query(b"a", algo="bogus")


def test_exact_lcs():
    answer = alcs.exact_lcs(b"aab", b"abaab")
    assert answer.length == 3
    assert (answer.p_start, answer.p_end) == (1, 3)
    assert (answer.t_start, answer.t_end) == (3, 5)


def test_serialize_roundtrip(tmp_path):
    index = alcs.build_index(b"abaab", 0.5, seed=7)
    blob = index.serialize()
    assert isinstance(blob, bytes)
    assert alcs.Index.deserialize(blob) == index

    path = str(tmp_path / "t.idx")
    index.save(path)
    loaded = alcs.Index.load(path)
    assert loaded == index
    assert loaded.query(b"aab").length == 3


def test_lz77_parse_tuples():
    assert alcs.lz77_parse(b"abaab") == [(1, 1, None), (2, 2, None), (3, 4, 1), (5, 5, 2)]


def test_generate_corpus():
    a = alcs.generate_corpus(base_len=64, repeats=4, mut_rate=0.05, seed=9)
    b = alcs.generate_corpus(base_len=64, repeats=4, mut_rate=0.05, seed=9)
    assert a == b
    assert len(a) == 256
    clean = alcs.generate_corpus(base_len=32, repeats=3, mut_rate=0.0, seed=9)
    assert clean[:32] * 3 == clean


def test_guarantee_on_sample():
    text = alcs.generate_corpus(base_len=256, repeats=8, mut_rate=0.02, seed=5)
    index = alcs.build_index(text, 0.25, seed=2)
    pattern = text[100:160]
    result = index.query(pattern)
    lcs = alcs.exact_lcs(pattern, text)
    assert result.length > 0.75 * lcs.length
    assert alcs.verify_result(result, pattern, text)
