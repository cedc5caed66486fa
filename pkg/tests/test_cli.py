"""CLI commands: outputs, exit codes, byte reproducibility."""

import json
from functools import partial

from click.testing import CliRunner

from lexkit.cli import main
from lexkit.colex import load_colex_bundle, expand_colex
from lexkit.evaluation import ExperimentConfig, random_seed_experiment
from lexkit.words import WordList, load_word_list


def run(*args):
    return CliRunner().invoke(main, [str(a) for a in args])


def read_bytes_map(directory):
    return {p.name: p.read_bytes() for p in sorted(directory.iterdir())}


class TestBuildGraph:
    def test_bundle_matches_fixture_oracle(self, dict_dir, tmp_path):
        out = tmp_path / "bundle"
        result = run("build-graph", "--dict-dir", dict_dir, "--out", out)
        assert result.exit_code == 0, result.output
        graph = load_colex_bundle(out)
        # oracle: hand enumeration of the conftest dictionaries at >=2 votes
        expected = {
            ("glad", "happy", 2), ("happy", "merry", 2),
            ("festive", "merry", 2), ("blue", "sad", 3),
            ("chilly", "cold", 2), ("dog", "hound", 2),
        }
        assert set(graph.edge_multiset()) == expected

    def test_rebuild_is_byte_identical(self, dict_dir, tmp_path):
        out1 = tmp_path / "bundle1"
        out2 = tmp_path / "bundle2"
        assert run("build-graph", "--dict-dir", dict_dir,
                   "--out", out1).exit_code == 0
        assert run("build-graph", "--dict-dir", dict_dir,
                   "--out", out2).exit_code == 0
        assert read_bytes_map(out1) == read_bytes_map(out2)

    def test_empty_input_dir_exits_3(self, tmp_path):
        empty = tmp_path / "empty"
        empty.mkdir()
        result = run("build-graph", "--dict-dir", empty,
                     "--out", tmp_path / "bundle")
        assert result.exit_code == 3

    def test_malformed_dictionary_exits_2(self, tmp_path):
        d = tmp_path / "dicts"
        d.mkdir()
        (d / "xx-en.tsv").write_text("no tab here\n")
        result = run("build-graph", "--dict-dir", d,
                     "--out", tmp_path / "bundle")
        assert result.exit_code == 2

    def test_translate_option_adds_language(self, dict_dir, tmp_path):
        trans = tmp_path / "en-de.tsv"
        trans.write_text("merry\tlustig\nhappy\tglücklich\n")
        out = tmp_path / "bundle"
        result = run("build-graph", "--dict-dir", dict_dir,
                     "--translate", trans, "--out", out)
        assert result.exit_code == 0, result.output
        graph = load_colex_bundle(out)
        assert "de" in graph.languages


class TestExpand:
    def test_colex_expansion_matches_module_oracle(self, dict_dir,
                                                   seeds_file, tmp_path):
        bundle = tmp_path / "bundle"
        assert run("build-graph", "--dict-dir", dict_dir,
                   "--out", bundle).exit_code == 0
        out = tmp_path / "expanded.txt"
        result = run("expand", "--method", "colex", "--graph", bundle,
                     "--seeds", seeds_file, "--out", out)
        assert result.exit_code == 0, result.output

        graph = load_colex_bundle(bundle)
        oracle = expand_colex(graph, load_word_list(seeds_file), "en")
        assert load_word_list(out) == oracle.expanded
        sidecar = json.loads((tmp_path / "expanded.txt.json").read_text())
        assert sidecar["expandable"] is True
        assert sidecar["n_expanded"] == len(oracle.expanded)

    def test_all_unmatched_seeds_exit_zero_with_flag(self, edges_file,
                                                     tmp_path):
        seeds = tmp_path / "seeds.txt"
        seeds.write_text("zebra\nxylophone\n")
        out = tmp_path / "expanded.txt"
        result = run("expand", "--method", "synonym", "--edges", edges_file,
                     "--seeds", seeds, "--out", out)
        assert result.exit_code == 0, result.output
        sidecar = json.loads((tmp_path / "expanded.txt.json").read_text())
        assert sidecar["expandable"] is False
        assert sidecar["n_new"] == 0
        assert sorted(sidecar["unmatched_seeds"]) == ["xylophone", "zebra"]

    def test_union_of_saved_expansions(self, tmp_path):
        a = tmp_path / "a.txt"
        b = tmp_path / "b.txt"
        a.write_text("s\nalpha\nbeta\n")
        b.write_text("s\nbeta\ngamma\n")
        seeds = tmp_path / "seeds.txt"
        seeds.write_text("s\n")
        out = tmp_path / "union.txt"
        result = run("expand", "--method", "union", "--inputs", a,
                     "--inputs", b, "--seeds", seeds, "--out", out)
        assert result.exit_code == 0, result.output
        assert load_word_list(out).as_set() == {"s", "alpha", "beta", "gamma"}

    def test_intersection_of_saved_expansions(self, tmp_path):
        a = tmp_path / "a.txt"
        b = tmp_path / "b.txt"
        a.write_text("alpha\nbeta\n")
        b.write_text("beta\ngamma\n")
        out = tmp_path / "inter.txt"
        result = run("expand", "--method", "intersection", "--inputs", a,
                     "--inputs", b, "--out", out)
        assert result.exit_code == 0, result.output
        assert load_word_list(out).as_set() == {"beta"}

    def test_embedding_threshold_via_cli(self, embedding_files, seeds_file,
                                         tmp_path):
        vec_path, ranking_path = embedding_files
        out = tmp_path / "expanded.txt"
        result = run("expand", "--method", "embedding-threshold",
                     "--vectors", vec_path, "--ranking", ranking_path,
                     "--tau", 0.5, "--seeds", seeds_file, "--out", out)
        assert result.exit_code == 0, result.output
        expanded = load_word_list(out)
        assert {"happy", "glad"} <= expanded.as_set()


class TestEval:
    def test_report_equals_scripted_rerun(self, edges_file, gold_file,
                                          tmp_path):
        out = tmp_path / "report.json"
        csv_path = tmp_path / "report.csv"
        result = run("eval", "--method", "synonym", "--edges", edges_file,
                     "--gold", gold_file, "--fraction", 0.3,
                     "--repetitions", 50, "--rng-seed", 11,
                     "--baseline-reps", 100,
                     "--out", out, "--csv", csv_path)
        assert result.exit_code == 0, result.output
        payload = json.loads(out.read_text())
        assert len(payload["reports"]) == 1

        from lexkit.synonyms import expand_synonym, load_synonym_graph
        graph = load_synonym_graph(edges_file)
        gold = load_word_list(gold_file)
        cfg = ExperimentConfig(method="synonym", seed_fraction=0.3,
                               repetitions=50, rng_seed=11,
                               baseline_repetitions=100)
        universe = WordList(sorted(graph.words), name="universe")
        oracle = random_seed_experiment(gold, partial(expand_synonym, graph),
                                        cfg, universe=universe)
        assert payload["reports"][0] == oracle.to_dict()
        assert csv_path.read_text().startswith("method,")

    def test_single_repetition_tiny_list(self, edges_file, tmp_path):
        gold = tmp_path / "tiny.txt"
        gold.write_text("happy\nglad\nmerry\n")
        out = tmp_path / "report.json"
        result = run("eval", "--method", "synonym", "--edges", edges_file,
                     "--gold", gold, "--fraction", 0.9,
                     "--repetitions", 1, "--rng-seed", 0, "--no-baseline",
                     "--out", out)
        assert result.exit_code == 0, result.output
        payload = json.loads(out.read_text())
        records = payload["reports"][0]["records"]
        assert len(records) == 1
        assert records[0]["n_seeds"] == 3  # ceil(0.9 * 3)

    def test_missing_gold_file_exits_2(self, edges_file, tmp_path):
        result = run("eval", "--method", "synonym", "--edges", edges_file,
                     "--gold", tmp_path / "absent.txt", "--fraction", 0.3,
                     "--out", tmp_path / "report.json")
        assert result.exit_code == 2
        assert "error" in result.output

    def test_wildcard_gold_requires_dictionary(self, edges_file, tmp_path):
        gold = tmp_path / "gold.txt"
        gold.write_text("happ*\n")
        result = run("eval", "--method", "synonym", "--edges", edges_file,
                     "--gold", gold, "--fraction", 0.5,
                     "--out", tmp_path / "report.json")
        assert result.exit_code == 2

    def test_wildcard_gold_with_dictionary(self, edges_file, tmp_path):
        gold = tmp_path / "gold.txt"
        gold.write_text("happ*\nglad\n")
        dictionary = tmp_path / "dictionary.txt"
        dictionary.write_text("happy\nhappiness\nsad\n")
        out = tmp_path / "report.json"
        result = run("eval", "--method", "synonym", "--edges", edges_file,
                     "--gold", gold, "--dictionary", dictionary,
                     "--fraction", 0.5, "--repetitions", 2, "--no-baseline",
                     "--rng-seed", 1, "--out", out)
        assert result.exit_code == 0, result.output
        payload = json.loads(out.read_text())
        assert payload["reports"][0]["config"]["n_original"] == 3

    def test_explicit_seeds_mode(self, edges_file, gold_file, seeds_file,
                                 tmp_path):
        out = tmp_path / "report.json"
        result = run("eval", "--method", "synonym", "--edges", edges_file,
                     "--gold", gold_file, "--seeds", seeds_file,
                     "--no-baseline", "--out", out)
        assert result.exit_code == 0, result.output
        payload = json.loads(out.read_text())
        assert payload["reports"][0]["config"]["explicit_seeds"] is True


class TestScore:
    def test_scores_and_correlation(self, corpus_file, tmp_path):
        lexicon = tmp_path / "lexicon.txt"
        lexicon.write_text("happy\nglad\nmerry\njoyful\n")
        reference = tmp_path / "reference.txt"
        reference.write_text("happy\nglad\nmerry\njoyful\nfestive\nsad\n")
        out_scores = tmp_path / "scores.csv"
        out_report = tmp_path / "correlation.json"
        result = run("score", "--corpus", corpus_file, "--lexicon", lexicon,
                     "--reference", reference, "--bootstrap-reps", 200,
                     "--rng-seed", 3, "--out-scores", out_scores,
                     "--out-report", out_report)
        assert result.exit_code == 0, result.output
        lines = out_scores.read_text().splitlines()
        assert lines[0] == "id,score"
        assert len(lines) == 6
        report = json.loads(out_report.read_text())
        assert -1.0 <= report["r"] <= 1.0
        assert report["n_documents"] == 5

    def test_missing_corpus_exits_2(self, tmp_path):
        lexicon = tmp_path / "lexicon.txt"
        lexicon.write_text("happy\n")
        result = run("score", "--corpus", tmp_path / "absent.jsonl",
                     "--lexicon", lexicon,
                     "--out-scores", tmp_path / "scores.csv")
        assert result.exit_code == 2


class TestAnnotateStats:
    def test_adjusted_precision_output(self, tmp_path):
        csv_path = tmp_path / "annotations.csv"
        rows = ["word,rater,label"]
        for i in range(7):
            rows += [f"a{i},r1,relevant", f"a{i},r2,relevant"]
        for i in range(3):
            rows += [f"b{i},r1,relevant", f"b{i},r2,irrelevant"]
        csv_path.write_text("\n".join(rows) + "\n")
        out = tmp_path / "stats.json"
        result = run("annotate-stats", "--annotations", csv_path,
                     "--bootstrap-reps", 1000, "--rng-seed", 0, "--out", out)
        assert result.exit_code == 0, result.output
        payload = json.loads(out.read_text())
        assert payload["adjusted_precision"] == 0.7
        assert "r1|r2" in payload["pairwise_kappa"]


class TestByteReproducibility:
    def test_eval_runs_are_byte_identical(self, edges_file, gold_file,
                                          tmp_path):
        outputs = []
        for tag in ("one", "two"):
            out = tmp_path / f"report-{tag}.json"
            csv_path = tmp_path / f"report-{tag}.csv"
            result = run("eval", "--method", "synonym", "--edges", edges_file,
                         "--gold", gold_file, "--fraction", 0.3,
                         "--fraction", 0.6, "--repetitions", 20,
                         "--rng-seed", 7, "--baseline-reps", 50,
                         "--out", out, "--csv", csv_path)
            assert result.exit_code == 0, result.output
            outputs.append((out.read_bytes(), csv_path.read_bytes()))
        assert outputs[0] == outputs[1]

    def test_expand_runs_are_byte_identical(self, edges_file, seeds_file,
                                            tmp_path):
        blobs = []
        for tag in ("one", "two"):
            out = tmp_path / f"words-{tag}.txt"
            result = run("expand", "--method", "synonym", "--edges",
                         edges_file, "--seeds", seeds_file, "--out", out)
            assert result.exit_code == 0
            blobs.append((out.read_bytes(),
                          (tmp_path / f"words-{tag}.txt.json").read_bytes()))
        assert blobs[0] == blobs[1]

    def test_score_runs_are_byte_identical(self, corpus_file, tmp_path):
        lexicon = tmp_path / "lexicon.txt"
        lexicon.write_text("happy\nglad\nsad\n")
        reference = tmp_path / "reference.txt"
        reference.write_text("happy\nmerry\nsad\nblue\n")
        blobs = []
        for tag in ("one", "two"):
            scores = tmp_path / f"scores-{tag}.csv"
            report = tmp_path / f"corr-{tag}.json"
            result = run("score", "--corpus", corpus_file,
                         "--lexicon", lexicon, "--reference", reference,
                         "--bootstrap-reps", 100, "--rng-seed", 5,
                         "--out-scores", scores, "--out-report", report)
            assert result.exit_code == 0, result.output
            blobs.append((scores.read_bytes(), report.read_bytes()))
        assert blobs[0] == blobs[1]


class TestModeAliasAndSample:
    def test_embedding_mode_flag(self, embedding_files, seeds_file, tmp_path):
        vec_path, ranking_path = embedding_files
        via_mode = tmp_path / "via-mode.txt"
        via_method = tmp_path / "via-method.txt"
        for out, args in ((via_mode, ["--method", "embedding",
                                      "--mode", "centroid"]),
                          (via_method, ["--method", "embedding-centroid"])):
            result = run("expand", *args, "--vectors", vec_path,
                         "--ranking", ranking_path, "--tau", 0.5,
                         "--seeds", seeds_file, "--out", out)
            assert result.exit_code == 0, result.output
        assert via_mode.read_bytes() == via_method.read_bytes()

    def test_embedding_mode_defaults_to_threshold(self, embedding_files,
                                                  seeds_file, tmp_path):
        vec_path, ranking_path = embedding_files
        a = tmp_path / "plain.txt"
        b = tmp_path / "threshold.txt"
        for out, args in ((a, ["--method", "embedding"]),
                          (b, ["--method", "embedding-threshold"])):
            result = run("expand", *args, "--vectors", vec_path,
                         "--ranking", ranking_path, "--seeds", seeds_file,
                         "--out", out)
            assert result.exit_code == 0, result.output
        assert a.read_bytes() == b.read_bytes()

    def test_sample_exports_whole_short_list(self, tmp_path):
        lexicon = tmp_path / "lexicon.txt"
        lexicon.write_text("".join(f"w{i}\n" for i in range(40)))
        out = tmp_path / "sample.txt"
        result = run("sample", "--lexicon", lexicon, "--n", 300,
                     "--out", out)
        assert result.exit_code == 0, result.output
        assert load_word_list(out) == load_word_list(lexicon)

    def test_sample_subsamples_large_list(self, tmp_path):
        lexicon = tmp_path / "lexicon.txt"
        lexicon.write_text("".join(f"w{i}\n" for i in range(3000)))
        out1 = tmp_path / "sample1.txt"
        out2 = tmp_path / "sample2.txt"
        for out in (out1, out2):
            result = run("sample", "--lexicon", lexicon, "--n", 100,
                         "--rng-seed", 5, "--out", out)
            assert result.exit_code == 0, result.output
        assert len(load_word_list(out1)) == 100
        assert out1.read_bytes() == out2.read_bytes()
