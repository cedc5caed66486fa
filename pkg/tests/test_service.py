"""Curation service: expansion sessions, decisions, export, persistence."""

import pytest
from fastapi.testclient import TestClient

from lexkit.service import ExpansionResources, SessionStore, create_app
from lexkit.synonyms import SynonymGraph, expand_synonym
from lexkit.words import WordList


@pytest.fixture
def graph():
    return SynonymGraph.from_edges([
        ("happy", "glad"), ("happy", "merry"), ("glad", "joyful"),
        ("sad", "blue"), ("dog", "hound"),
    ])


@pytest.fixture
def store(tmp_path):
    return SessionStore(tmp_path / "sessions")


@pytest.fixture
def client(graph, store):
    resources = ExpansionResources(synonym_graph=graph)
    return TestClient(create_app(resources, store))


def expand(client, seeds, method="synonym", **extra):
    response = client.post("/expand", json={
        "seeds": seeds, "method": method, **extra})
    return response


class TestMethods:
    def test_lists_loaded_methods(self, client):
        payload = client.get("/methods").json()
        assert payload["methods"] == ["synonym"]
        assert payload["defaults"]["tau"] == 0.5

    def test_unavailable_resources_reported(self, graph, store):
        resources = ExpansionResources(
            synonym_graph=graph,
            load_errors={"colex": "bundle missing"})
        client = TestClient(create_app(resources, store))
        payload = client.get("/methods").json()
        assert payload["unavailable"] == {"colex": "bundle missing"}


class TestExpand:
    def test_expansion_matches_module_oracle(self, client, graph):
        response = expand(client, ["happy"])
        assert response.status_code == 200
        payload = response.json()
        oracle = expand_synonym(graph, WordList(["happy"]))
        assert payload["expanded"] == list(oracle.expanded)
        assert payload["new_words"] == list(oracle.new_words)
        assert payload["expandable"] is True
        assert payload["session_id"]

    def test_unknown_method_is_400(self, client):
        response = expand(client, ["happy"], method="telepathy")
        assert response.status_code == 400

    def test_unloaded_resource_is_503(self, client):
        response = expand(client, ["happy"], method="colex")
        assert response.status_code == 503

    def test_invalid_seed_word_is_400(self, client):
        response = expand(client, ["two words"])
        assert response.status_code == 400

    def test_not_expandable_seeds_still_create_session(self, client):
        response = expand(client, ["zebra"])
        assert response.status_code == 200
        payload = response.json()
        assert payload["expandable"] is False
        assert payload["expanded"] == ["zebra"]
        assert payload["unmatched"] == ["zebra"]

    def test_re_expand_in_session_keeps_decisions(self, client):
        first = expand(client, ["happy"]).json()
        sid = first["session_id"]
        assert client.post(f"/session/{sid}/decide",
                           json={"word": "glad",
                                 "decision": "reject"}).status_code == 200
        second = expand(client, ["happy", "sad"], session_id=sid).json()
        assert second["session_id"] == sid
        assert second["decisions"].get("glad") == "reject"
        export = client.get(f"/session/{sid}/export").json()
        assert "glad" not in export["wordlist"].split("\n")

    def test_re_expand_with_unknown_session_is_404(self, client):
        response = expand(client, ["happy"], session_id="nope")
        assert response.status_code == 404


class TestDecideAndExport:
    def test_decide_then_export_excludes_rejected(self, client):
        sid = expand(client, ["happy"]).json()["session_id"]
        client.post(f"/session/{sid}/decide",
                    json={"word": "merry", "decision": "accept"})
        client.post(f"/session/{sid}/decide",
                    json={"word": "glad", "decision": "reject"})
        export = client.get(f"/session/{sid}/export").json()
        words = export["wordlist"].splitlines()
        assert "glad" not in words
        assert "merry" in words
        assert "happy" in words  # pending/seed words stay in
        assert export["counts"] == {"total": 3, "accepted": 1,
                                    "rejected": 1, "pending": 1}
        csv_lines = export["annotations_csv"].splitlines()
        assert csv_lines[0] == "word,rater,label"
        assert "glad,curator,irrelevant" in csv_lines
        assert "merry,curator,relevant" in csv_lines

    def test_decision_latest_wins(self, client):
        sid = expand(client, ["happy"]).json()["session_id"]
        client.post(f"/session/{sid}/decide",
                    json={"word": "glad", "decision": "reject"})
        client.post(f"/session/{sid}/decide",
                    json={"word": "glad", "decision": "accept"})
        export = client.get(f"/session/{sid}/export").json()
        assert "glad" in export["wordlist"].splitlines()

    def test_unknown_session_is_404(self, client):
        assert client.get("/session/ghost/export").status_code == 404
        assert client.post("/session/ghost/decide",
                           json={"word": "x",
                                 "decision": "accept"}).status_code == 404

    def test_bad_decision_is_400(self, client):
        sid = expand(client, ["happy"]).json()["session_id"]
        response = client.post(f"/session/{sid}/decide",
                               json={"word": "glad", "decision": "maybe"})
        assert response.status_code == 400

    def test_non_candidate_word_is_400(self, client):
        sid = expand(client, ["happy"]).json()["session_id"]
        response = client.post(f"/session/{sid}/decide",
                               json={"word": "zebra", "decision": "accept"})
        assert response.status_code == 400


class TestPersistence:
    def test_restart_replays_the_log(self, graph, store, tmp_path):
        resources = ExpansionResources(synonym_graph=graph)
        client = TestClient(create_app(resources, store))
        sid = expand(client, ["happy"]).json()["session_id"]
        client.post(f"/session/{sid}/decide",
                    json={"word": "glad", "decision": "reject"})
        before = client.get(f"/session/{sid}/export").json()

        fresh_store = SessionStore(store.directory)
        fresh_client = TestClient(create_app(resources, fresh_store))
        after = fresh_client.get(f"/session/{sid}/export").json()
        assert after == before

    def test_replay_equals_incremental_state(self, client, store):
        sid = expand(client, ["happy"]).json()["session_id"]
        for word, decision in [("glad", "accept"), ("merry", "reject"),
                               ("glad", "reject")]:
            client.post(f"/session/{sid}/decide",
                        json={"word": word, "decision": decision})
        incremental = store.get(sid)
        replayed = store.replay(sid)
        assert replayed.view() == incremental.view()
        assert replayed.export_wordlist_text() == \
            incremental.export_wordlist_text()


class TestBadParams:
    def test_unparseable_tau_is_400(self, graph, store):
        from lexkit.embeddings import EmbeddingSpace
        import numpy as np
        space = EmbeddingSpace(["happy", "glad"],
                               np.array([[1.0, 0.0], [0.9, 0.1]]))
        resources = ExpansionResources(space=space)
        client = TestClient(create_app(resources, store))
        response = client.post("/expand", json={
            "seeds": ["happy"], "method": "embedding-threshold",
            "params": {"tau": "not-a-number"}})
        assert response.status_code == 400

    def test_out_of_range_tau_is_400(self, graph, store):
        from lexkit.embeddings import EmbeddingSpace
        import numpy as np
        space = EmbeddingSpace(["happy", "glad"],
                               np.array([[1.0, 0.0], [0.9, 0.1]]))
        resources = ExpansionResources(space=space)
        client = TestClient(create_app(resources, store))
        response = client.post("/expand", json={
            "seeds": ["happy"], "method": "embedding-threshold",
            "params": {"tau": 5.0}})
        assert response.status_code == 400
