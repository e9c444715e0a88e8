import json

import pytest
from fastapi.testclient import TestClient

from conftest import GOLDEN_DIR
from kre.server import create_app


@pytest.fixture(scope="module")
def client(fixture_handle):
    return TestClient(create_app(fixture_handle))


class TestInfo:
    def test_metadata(self, client):
        response = client.get("/api/info")
        assert response.status_code == 200
        body = response.json()
        assert body["record_count"] == 500
        assert body["time_range"] == {"start": "2016-07-01T00:00:00Z", "end": "2016-07-06T23:59:00Z"}
        assert body["distinct_keywords"] > 20


class TestMatrixEndpoint:
    def test_default_query_matches_golden(self, client):
        response = client.post("/api/matrix", json={})
        assert response.status_code == 200
        golden = (GOLDEN_DIR / "fixture_default_matrix.json").read_bytes()
        assert response.content == golden

    def test_byte_identical_on_repeat(self, client):
        payload = {"node_count": 10, "sort": {"key": "alphabetical", "direction": "ascending"}}
        first = client.post("/api/matrix", json=payload)
        second = client.post("/api/matrix", json=payload)
        assert first.content == second.content

    def test_validation_error_lists_fields(self, client):
        response = client.post("/api/matrix", json={"node_count": 0, "relation_kind": "nope"})
        assert response.status_code == 400
        body = response.json()
        assert body["error"] == "validation"
        assert len(body["fields"]) == 2

    def test_invalid_json_body(self, client):
        response = client.post(
            "/api/matrix", content=b"{oops", headers={"content-type": "application/json"}
        )
        assert response.status_code == 400

    def test_navigation_query(self, client):
        response = client.post("/api/matrix", json={"navigation": ["eu", "vote"]})
        assert response.status_code == 200
        body = response.json()
        assert 0 < body["record_count"] < 500


class TestTimelineEndpoint:
    def test_six_day_views(self, client):
        response = client.post("/api/timeline", json={"mode": "discrete", "granularity": "day"})
        assert response.status_code == 200
        body = response.json()
        assert body["mode"] == "discrete"
        assert body["granularity"] == "day"
        assert len(body["views"]) == 6

    def test_overlapping_window_annotation(self, client):
        response = client.post("/api/timeline", json={"mode": "overlapping", "granularity": "day"})
        views = response.json()["views"]
        assert views[1]["time_range"] == {
            "start": "2016-07-01T18:00:00Z",
            "end": "2016-07-03T00:00:00Z",
        }

    def test_final_accumulative_equals_matrix_body(self, client):
        timeline = client.post("/api/timeline", json={"mode": "accumulative", "granularity": "day"})
        matrix = client.post("/api/matrix", json={})
        last_view = timeline.json()["views"][-1]
        assert (
            json.dumps(last_view, ensure_ascii=False, separators=(",", ":"))
            == matrix.content.decode("utf-8").rstrip("\n")
        )

    def test_bad_mode_and_granularity(self, client):
        response = client.post("/api/timeline", json={"mode": "rolling", "granularity": "decade"})
        assert response.status_code == 400
        assert len(response.json()["fields"]) == 2

    def test_missing_mode(self, client):
        response = client.post("/api/timeline", json={"granularity": "day"})
        assert response.status_code == 400


class TestTweetsEndpoint:
    def test_paging_consistency(self, client):
        seen = []
        offset = 0
        total = None
        while True:
            response = client.post(
                "/api/tweets",
                json={"target": "all", "offset": offset, "limit": 123},
            )
            assert response.status_code == 200
            page = response.json()
            total = page["total"]
            if not page["items"]:
                break
            seen.extend(item["id"] for item in page["items"])
            offset += 123
        assert total == 500
        assert len(seen) == 500
        assert len(set(seen)) == 500

    def test_keyword_target(self, client):
        response = client.post("/api/tweets", json={"target": {"keyword": "eu"}, "limit": 5})
        page = response.json()
        assert page["total"] > 0
        assert len(page["items"]) <= 5
        for item in page["items"]:
            assert "eu" in item["matched_keywords"]

    def test_absent_keyword_total_zero(self, client):
        response = client.post("/api/tweets", json={"target": {"keyword": "quux"}})
        assert response.status_code == 200
        assert response.json()["total"] == 0

    def test_limit_validated(self, client):
        response = client.post("/api/tweets", json={"limit": 501})
        assert response.status_code == 400

    def test_bad_target(self, client):
        response = client.post("/api/tweets", json={"target": {"row": "eu"}})
        assert response.status_code == 400


class TestServiceNotReady:
    def test_503_without_snapshot(self):
        bare = TestClient(create_app(None))
        for call in (
            lambda: bare.post("/api/matrix", json={}),
            lambda: bare.post("/api/timeline", json={"mode": "discrete", "granularity": "day"}),
            lambda: bare.post("/api/tweets", json={}),
            lambda: bare.get("/api/info"),
        ):
            response = call()
            assert response.status_code == 503
            assert response.json()["error"] == "service-not-ready"
