"""Hypothesis property tests for the metric and combination invariants."""

from hypothesis import given, settings, strategies as st

from lexkit.evaluation import combine, confusion, prf
from lexkit.synonyms import SynonymGraph, expand_synonym
from lexkit.words import WordList

words_st = st.lists(
    st.sampled_from([f"w{i}" for i in range(30)]), unique=True)


@st.composite
def triples(draw):
    original = draw(st.lists(st.sampled_from([f"w{i}" for i in range(30)]),
                             min_size=1, max_size=15, unique=True))
    n_seeds = draw(st.integers(min_value=0, max_value=len(original)))
    seeds = original[:n_seeds]
    expanded = draw(st.lists(st.sampled_from([f"w{i}" for i in range(30)]),
                             max_size=20, unique=True))
    return (WordList(original), WordList(seeds),
            WordList(seeds).union(expanded))


@given(triples())
def test_count_identities(triple):
    original, seeds, expanded = triple
    c = confusion(original, seeds, expanded)
    assert c.tp + c.fn == len(original.without(seeds))
    assert c.tp + c.fp == len(expanded.without(seeds))
    assert c.tp_words.as_set() & c.fp_words.as_set() == set()
    assert c.tp_words.as_set() & c.fn_words.as_set() == set()


@given(triples())
def test_metric_ranges_and_f1_mean(triple):
    original, seeds, expanded = triple
    m = prf(confusion(original, seeds, expanded))
    assert 0.0 <= m.precision <= 1.0
    assert 0.0 <= m.recall <= 1.0
    assert min(m.precision, m.recall) - 1e-12 <= m.f1 \
        <= max(m.precision, m.recall) + 1e-12


@given(triples(),
       st.sampled_from([f"w{i}" for i in range(30)] + ["fresh1", "fresh2"]))
def test_monotone_sanity(triple, extra):
    original, seeds, expanded = triple
    base = prf(confusion(original, seeds, expanded))
    grown = expanded.union([extra])
    after = prf(confusion(original, seeds, grown))
    if extra in original.as_set():
        assert after.recall >= base.recall - 1e-12
    elif extra not in seeds.as_set() and extra not in expanded.as_set():
        assert after.precision <= base.precision + 1e-12


@given(st.lists(words_st, min_size=2, max_size=5), words_st)
def test_combine_matches_set_algebra(raw_lexica, raw_seeds):
    seeds = WordList(raw_seeds)
    lexica = [seeds.union(lex) for lex in raw_lexica]
    union = combine(lexica, "union", seeds=seeds)
    inter = combine(lexica, "intersection", seeds=seeds)
    parts = [lex.as_set() - seeds.as_set() for lex in lexica]
    assert union.as_set() == set().union(*parts) | seeds.as_set()
    assert inter.as_set() == set.intersection(*map(set, parts)) | seeds.as_set()
    assert inter.as_set() <= union.as_set()


@st.composite
def graphs_and_seeds(draw):
    n = draw(st.integers(min_value=2, max_value=25))
    edges = draw(st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
        min_size=1, max_size=60))
    seeds = draw(st.lists(st.integers(0, n - 1), min_size=1, max_size=6,
                          unique=True))
    return ([(f"w{a}", f"w{b}") for a, b in edges if a != b],
            WordList([f"w{i}" for i in seeds]))


@settings(max_examples=60)
@given(graphs_and_seeds())
def test_synonym_expansion_equals_brute_force(case):
    edges, seeds = case
    graph = SynonymGraph.from_edges(edges)
    expected = set()
    for s in seeds:
        expected |= set(graph.neighbors(s))
    expected -= seeds.as_set()
    result = expand_synonym(graph, seeds)
    assert result.new_words.as_set() == expected
    assert result.expanded.as_set() == expected | seeds.as_set()
    assert result.expandable == any(s in graph for s in seeds)