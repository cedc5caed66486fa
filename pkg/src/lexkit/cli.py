"""Command-line entry point: build graphs, expand seed lists, run the
evaluation protocol, score corpora, and serve the curation API.

Every command is byte-reproducible under a fixed --rng-seed: output files
carry no timestamps or absolute paths, JSON is dumped with sorted keys, and
all randomness flows from seeded generators.
"""

from __future__ import annotations

import functools
import json
import sys
from pathlib import Path

import click

from .annotations import AnnotationSet, adjusted_precision, cohen_kappa
from .colex import (build_colex_graph, expand_colex,
                    load_bilingual_dictionary, load_colex_bundle,
                    save_colex_bundle, translate_labels)
from .embeddings import (DEFAULT_TAU, DEFAULT_TOP_N, expand_centroid,
                         expand_threshold, load_embeddings)
from .errors import (InvalidPattern, InvalidWord, LexkitError, NoData,
                     ParseError)
from .evaluation import (EvalReport, ExperimentConfig, combine,
                         random_seed_experiment, reports_to_csv,
                         summarize_reports)
from .scoring import (DEFAULT_BOOTSTRAP_REPS, correlate, correlation_report,
                      load_corpus, score_corpus, scores_to_csv)
from .synonyms import expand_synonym, load_synonym_graph
from .words import (WordList, expand_wildcards, load_pattern_list,
                    load_word_list, save_word_list)

EXIT_PARSE = 2
EXIT_NODATA = 3

BASE_METHODS = ("colex", "synonym", "embedding-threshold",
                "embedding-centroid")
COMBINE_METHODS = ("union", "intersection")


def resolve_method(method: str, mode: str | None) -> str:
    """`--method embedding --mode centroid` is spelled out to the canonical
    method id; --mode is ignored elsewhere."""
    if method == "embedding":
        return f"embedding-{mode or 'threshold'}"
    return method


def dump_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def handle_errors(fn):
    """Map toolkit errors onto the documented exit codes."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (ParseError, InvalidWord, InvalidPattern) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_PARSE)
        except FileNotFoundError as exc:
            click.echo(f"error: file not found: {exc.filename or exc}",
                       err=True)
            sys.exit(EXIT_PARSE)
        except NoData as exc:
            click.echo(f"error: no data: {exc}", err=True)
            sys.exit(EXIT_NODATA)
        except LexkitError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(1)

    return wrapper


@click.group()
def main():
    """Lexicon expansion toolkit."""


@main.command("build-graph")
@click.option("--dictionary", "dictionaries", multiple=True,
              type=click.Path(path_type=Path),
              help="Bilingual dictionary TSV (repeatable).")
@click.option("--dict-dir", type=click.Path(path_type=Path),
              help="Directory of *.tsv dictionaries.")
@click.option("--min-languages", default=2, show_default=True, type=int)
@click.option("--pivot", default="en", show_default=True)
@click.option("--translate", "translations", multiple=True,
              type=click.Path(path_type=Path),
              help="pivot->X dictionary TSV used to label the graph in X "
                   "(repeatable).")
@click.option("--out", required=True, type=click.Path(path_type=Path))
@handle_errors
def cmd_build_graph(dictionaries, dict_dir, min_languages, pivot,
                    translations, out):
    """Build a colexification bundle from bilingual dictionaries."""
    paths = list(dictionaries)
    if dict_dir:
        paths.extend(sorted(Path(dict_dir).glob("*.tsv")))
    if not paths:
        raise NoData("no dictionary files given")
    loaded = [load_bilingual_dictionary(p) for p in paths]
    graph = build_colex_graph(loaded, min_languages=min_languages,
                              pivot_lang=pivot)
    for tpath in translations:
        tdict = load_bilingual_dictionary(tpath)
        graph = translate_labels(graph, tdict, tdict.target_lang)
    save_colex_bundle(graph, out)
    click.echo(f"wrote bundle: {len(graph.node_labels)} nodes, "
               f"{len(graph.edges)} edges, languages: "
               f"{', '.join(graph.languages)}")


def _load_resources_for(method, graph, edges, vectors, ranking, top_n):
    """Load exactly what the requested method needs."""
    if method == "colex":
        if not graph:
            raise NoData("--graph bundle required for the colex method")
        return load_colex_bundle(graph)
    if method == "synonym":
        if not edges:
            raise NoData("--edges file required for the synonym method")
        return load_synonym_graph(edges)
    if not vectors or not ranking:
        raise NoData("--vectors and --ranking required for embedding methods")
    ranking_list = load_word_list(ranking)
    return load_embeddings(vectors, ranking_list, top_n=top_n)


def _expander_for(method, resource, lang, tau):
    if method == "colex":
        return lambda seeds: expand_colex(resource, seeds, lang)
    if method == "synonym":
        return lambda seeds: expand_synonym(resource, seeds)
    if method == "embedding-threshold":
        return lambda seeds: expand_threshold(resource, seeds, tau=tau)
    return lambda seeds: expand_centroid(resource, seeds, tau=tau)


def _universe_for(method, resource, lang):
    """The method's candidate universe, for the null baseline."""
    if method == "colex":
        words = sorted(resource.label_maps[lang])
    else:
        words = sorted(resource.words)
    return WordList(words, name="universe")


resource_options = [
    click.option("--graph", type=click.Path(path_type=Path),
                 help="Colex bundle directory."),
    click.option("--lang", default="en", show_default=True,
                 help="Query language for the colex method."),
    click.option("--edges", type=click.Path(path_type=Path),
                 help="Synonym edge-list TSV."),
    click.option("--vectors", type=click.Path(path_type=Path),
                 help="Word vector text file."),
    click.option("--ranking", type=click.Path(path_type=Path),
                 help="Frequency ranking, one word per line."),
    click.option("--top-n", default=DEFAULT_TOP_N, show_default=True,
                 type=int),
    click.option("--tau", default=DEFAULT_TAU, show_default=True, type=float),
]


def with_resource_options(fn):
    for option in reversed(resource_options):
        fn = option(fn)
    return fn


@main.command("expand")
@click.option("--method", required=True,
              type=click.Choice(BASE_METHODS + COMBINE_METHODS
                                + ("embedding",)))
@click.option("--mode", type=click.Choice(["threshold", "centroid"]),
              help="Selects the embedding variant when --method embedding.")
@click.option("--seeds", "seeds_file", type=click.Path(path_type=Path),
              help="Seed word list (required for base methods).")
@click.option("--inputs", multiple=True, type=click.Path(path_type=Path),
              help="Saved expansion word lists (for union/intersection).")
@with_resource_options
@click.option("--out", required=True, type=click.Path(path_type=Path))
@click.option("--sidecar", type=click.Path(path_type=Path),
              help="JSON sidecar path [default: OUT.json].")
@handle_errors
def cmd_expand(method, mode, seeds_file, inputs, graph, lang, edges, vectors,
               ranking, top_n, tau, out, sidecar):
    """Expand a seed list (or combine saved expansions) into a word list."""
    method = resolve_method(method, mode)
    sidecar = sidecar or Path(str(out) + ".json")
    if method in COMBINE_METHODS:
        if len(inputs) < 2:
            raise NoData(f"--method {method} needs at least two --inputs")
        lexica = [load_word_list(p) for p in inputs]
        seeds = load_word_list(seeds_file) if seeds_file else None
        merged = combine(lexica, method, seeds=seeds)
        save_word_list(merged, out)
        meta = {
            "method": method,
            "n_inputs": len(inputs),
            "n_seeds": len(seeds) if seeds else 0,
            "n_expanded": len(merged),
            "n_new": len(merged) - (len(seeds) if seeds else 0),
            "expandable": True,
            "unmatched_seeds": [],
            "params": {},
        }
        Path(sidecar).write_text(dump_json(meta), encoding="utf-8")
        click.echo(f"wrote {len(merged)} words")
        return

    if not seeds_file:
        raise NoData("--seeds is required")
    seeds = load_word_list(seeds_file, name="seeds")
    resource = _load_resources_for(method, graph, edges, vectors, ranking,
                                   top_n)
    expansion = _expander_for(method, resource, lang, tau)(seeds)
    save_word_list(expansion.expanded, out)
    params = {"lang": lang} if method == "colex" else {}
    if method.startswith("embedding"):
        params = {"tau": tau, "top_n": top_n}
    meta = {
        "method": method,
        "n_seeds": len(seeds),
        "n_expanded": len(expansion.expanded),
        "n_new": len(expansion.new_words),
        "expandable": expansion.expandable,
        "unmatched_seeds": list(expansion.unmatched),
        "params": params,
    }
    Path(sidecar).write_text(dump_json(meta), encoding="utf-8")
    click.echo(f"wrote {len(expansion.expanded)} words "
               f"({len(expansion.new_words)} new)")


def _load_gold(gold_path, dictionary_path):
    """Gold lists may carry wildcards; a dictionary de-wildcards them."""
    patterns = load_pattern_list(gold_path)
    starred = [p for p in patterns if p.trailing_star]
    if starred and not dictionary_path:
        raise ParseError(
            f"{len(starred)} wildcard entries need --dictionary to expand",
            path=str(gold_path))
    if starred:
        dictionary = load_word_list(dictionary_path)
        gold, unmatched = expand_wildcards(patterns, dictionary,
                                           name=Path(gold_path).stem)
        if unmatched:
            click.echo(f"note: {len(unmatched)} wildcard pattern(s) "
                       "matched nothing and were dropped", err=True)
        return gold
    return WordList((p.stem for p in patterns), name=Path(gold_path).stem)


@main.command("eval")
@click.option("--method", required=True,
              type=click.Choice(BASE_METHODS + ("embedding",)))
@click.option("--mode", type=click.Choice(["threshold", "centroid"]),
              help="Selects the embedding variant when --method embedding.")
@click.option("--gold", required=True, type=click.Path(path_type=Path),
              help="Gold word list (may contain wildcards).")
@click.option("--dictionary", type=click.Path(path_type=Path),
              help="Dictionary used to de-wildcard the gold list.")
@click.option("--fraction", "fractions", multiple=True, type=float,
              help="Seed fraction(s) in (0,1); repeatable.")
@click.option("--seeds", "seeds_file", type=click.Path(path_type=Path),
              help="Explicit (expert) seed list instead of random fractions.")
@click.option("--repetitions", default=50, show_default=True, type=int)
@click.option("--rng-seed", default=0, show_default=True, type=int)
@click.option("--baseline-reps", default=1000, show_default=True, type=int)
@click.option("--no-baseline", is_flag=True, default=False)
@click.option("--strict-fn", is_flag=True, default=False,
              help="Count unretrieved seeds as false negatives.")
@with_resource_options
@click.option("--out", required=True, type=click.Path(path_type=Path))
@click.option("--csv", "csv_path", type=click.Path(path_type=Path))
@handle_errors
def cmd_eval(method, mode, gold, dictionary, fractions, seeds_file,
             repetitions, rng_seed, baseline_reps, no_baseline, strict_fn,
             graph, lang, edges, vectors, ranking, top_n, tau, out, csv_path):
    """Run the seed-sampling evaluation protocol against a gold list."""
    method = resolve_method(method, mode)
    if not fractions and not seeds_file:
        raise NoData("give --fraction (repeatable) or --seeds")
    gold_list = _load_gold(gold, dictionary)
    resource = _load_resources_for(method, graph, edges, vectors, ranking,
                                   top_n)
    expander = _expander_for(method, resource, lang, tau)
    universe = None if no_baseline else _universe_for(method, resource, lang)

    reports: list[EvalReport] = []
    if seeds_file:
        seed_list = load_word_list(seeds_file, name="seeds")
        cfg = ExperimentConfig(method=method, seed_list=seed_list,
                               rng_seed=rng_seed,
                               baseline_repetitions=baseline_reps,
                               strict_fn=strict_fn)
        reports.append(random_seed_experiment(gold_list, expander, cfg,
                                              universe=universe))
    for fraction in fractions:
        cfg = ExperimentConfig(method=method, seed_fraction=fraction,
                               repetitions=repetitions, rng_seed=rng_seed,
                               baseline_repetitions=baseline_reps,
                               strict_fn=strict_fn)
        reports.append(random_seed_experiment(gold_list, expander, cfg,
                                              universe=universe))

    payload = {"reports": [r.to_dict() for r in reports],
               "summary": summarize_reports(reports)}
    Path(out).write_text(dump_json(payload), encoding="utf-8")
    if csv_path:
        Path(csv_path).write_text(reports_to_csv(reports), encoding="utf-8")
    for report in reports:
        agg = report.aggregates
        label = (f"fraction={report.config['seed_fraction']}"
                 if report.config["seed_fraction"] is not None
                 else f"seeds={report.config['n_seeds']}")
        f1 = agg["f1_mean"]
        outcome = f"f1={f1:.4f}" if f1 is not None else "not expandable"
        click.echo(f"{method} {label}: {outcome}")


@main.command("score")
@click.option("--corpus", required=True, type=click.Path(path_type=Path),
              help="JSON-lines file or directory of .txt documents.")
@click.option("--lexicon", required=True, type=click.Path(path_type=Path))
@click.option("--reference", type=click.Path(path_type=Path),
              help="Reference lexicon to correlate against.")
@click.option("--raw-counts", is_flag=True, default=False)
@click.option("--coefficient", default="pearson", show_default=True,
              type=click.Choice(["pearson", "spearman"]))
@click.option("--bootstrap-reps", default=DEFAULT_BOOTSTRAP_REPS,
              show_default=True, type=int)
@click.option("--rng-seed", default=0, show_default=True, type=int)
@click.option("--out-scores", required=True,
              type=click.Path(path_type=Path))
@click.option("--out-report", type=click.Path(path_type=Path),
              help="Correlation JSON (requires --reference).")
@handle_errors
def cmd_score(corpus, lexicon, reference, raw_counts, coefficient,
              bootstrap_reps, rng_seed, out_scores, out_report):
    """Score documents by lexicon word frequency; optionally correlate."""
    docs = load_corpus(corpus)
    if not docs:
        raise NoData(f"no documents in {corpus}")
    lex = load_word_list(lexicon)
    relative = not raw_counts
    series = score_corpus(docs, lex, relative=relative)
    Path(out_scores).write_text(scores_to_csv(series), encoding="utf-8")
    click.echo(f"scored {len(series)} documents")
    if reference:
        ref_series = score_corpus(docs, load_word_list(reference),
                                  relative=relative)
        r, ci = correlate(series, ref_series, bootstrap_reps=bootstrap_reps,
                          rng_seed=rng_seed, coefficient=coefficient)
        report = correlation_report(r, ci, n_documents=len(series),
                                    coefficient=coefficient,
                                    bootstrap_reps=bootstrap_reps,
                                    rng_seed=rng_seed)
        if out_report:
            Path(out_report).write_text(dump_json(report), encoding="utf-8")
        click.echo(f"{coefficient} r={r:.4f} "
                   f"ci95=[{ci[0]:.4f}, {ci[1]:.4f}]")
    elif out_report:
        raise NoData("--out-report needs --reference")


@main.command("sample")
@click.option("--lexicon", required=True, type=click.Path(path_type=Path),
              help="Expanded word list to draw the annotation sample from.")
@click.option("--n", default=300, show_default=True, type=int)
@click.option("--full-list-threshold", default=2000, show_default=True,
              type=int,
              help="Lists at or under this size are exported whole.")
@click.option("--rng-seed", default=0, show_default=True, type=int)
@click.option("--out", required=True, type=click.Path(path_type=Path))
@handle_errors
def cmd_sample(lexicon, n, full_list_threshold, rng_seed, out):
    """Export the word sample to hand to raters, as a plain word list."""
    from .annotations import sample_for_annotation

    lex = load_word_list(lexicon)
    if len(lex) == 0:
        raise NoData(f"empty lexicon {lexicon}")
    sample = sample_for_annotation(lex, n=n, rng_seed=rng_seed,
                                   full_list_threshold=full_list_threshold)
    save_word_list(sample, out)
    click.echo(f"wrote {len(sample)} of {len(lex)} words for annotation")


@main.command("annotate-stats")
@click.option("--annotations", required=True,
              type=click.Path(path_type=Path),
              help="CSV of word,rater,label rows.")
@click.option("--bootstrap-reps", default=10_000, show_default=True, type=int)
@click.option("--rng-seed", default=0, show_default=True, type=int)
@click.option("--rule", default="unanimous", show_default=True,
              type=click.Choice(["unanimous", "majority"]))
@click.option("--out", type=click.Path(path_type=Path))
@handle_errors
def cmd_annotate_stats(annotations, bootstrap_reps, rng_seed, rule, out):
    """Adjusted precision and pairwise inter-rater agreement."""
    ann = AnnotationSet.load(annotations)
    estimate, ci = adjusted_precision(ann, bootstrap_reps=bootstrap_reps,
                                      rng_seed=rng_seed, rule=rule)
    kappas = {}
    raters = ann.raters()
    for i, a in enumerate(raters):
        for b in raters[i + 1:]:
            la, lb = ann.rater_labels(a), ann.rater_labels(b)
            shared = sorted(set(la) & set(lb))
            if len(shared) < 2:
                continue
            try:
                kappas[f"{a}|{b}"] = cohen_kappa(
                    [la[w] for w in shared], [lb[w] for w in shared])
            except LexkitError:
                continue
    payload = {
        "adjusted_precision": estimate,
        "ci95": [ci[0], ci[1]],
        "n_annotated": len(ann),
        "bootstrap_reps": bootstrap_reps,
        "rng_seed": rng_seed,
        "rule": rule,
        "pairwise_kappa": kappas,
    }
    if out:
        Path(out).write_text(dump_json(payload), encoding="utf-8")
    click.echo(f"adjusted precision {estimate:.4f} "
               f"ci95=[{ci[0]:.4f}, {ci[1]:.4f}] over {len(ann)} words")


@main.command("serve")
@with_resource_options
@click.option("--sessions", "sessions_dir", required=True,
              type=click.Path(path_type=Path),
              help="Directory for the append-only session logs.")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
@handle_errors
def cmd_serve(graph, lang, edges, vectors, ranking, top_n, tau, sessions_dir,
              host, port):
    """Run the local curation API (backend of the review UI)."""
    import uvicorn

    from .service import ExpansionResources, SessionStore, create_app

    resources = ExpansionResources.from_paths(
        graph=graph, default_lang=lang, edges=edges, vectors=vectors,
        ranking=ranking, top_n=top_n, default_tau=tau)
    if not resources.methods():
        raise NoData("no expansion resources could be loaded")
    store = SessionStore(sessions_dir)
    app = create_app(resources, store)
    click.echo(f"serving methods: {', '.join(resources.methods())}")
    uvicorn.run(app, host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
