from __future__ import annotations


def test_health(client):
    r = client.get("/healthz")
    assert r.status_code == 200
    assert r.json() == {"ok": True}


def test_checks(client):
    r = client.get("/checks")
    assert r.status_code == 200
    names = [c["type"] for c in r.json()["checks"]]
    for expected in ["ct-a", "decomposition", "defect-hypothesis", "gd-bounds", "recollement"]:
        assert expected in names


def test_analyze(client, fixture_text):
    r = client.post("/analyze", json={"source": fixture_text("a2.quiv")})
    assert r.status_code == 200
    body = r.json()
    assert body["status"] == "pass"
    assert body["certificates"]["gd"] == 1
    assert body["source"] == "request"


def test_gproj(client, fixture_text):
    r = client.post("/gproj", json={"source": fixture_text("s3.quiv"), "seed": 1})
    assert r.status_code == 200
    body = r.json()
    assert body["tables"]["stable"]["matrix"] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert body["config"]["seed"] == 1


def test_input_errors_are_400(client, fixture_text):
    r = client.post("/analyze", json={"source": fixture_text("bad_syntax.quiv")})
    assert r.status_code == 400
    assert r.json()["detail"]["line"] == 3
    r = client.post("/analyze", json={"source": fixture_text("s3.quiv"), "bound": 0})
    assert r.status_code == 400


def test_unknown_check_is_404(client, fixture_text):
    r = client.post("/verify/nope", json={"source": fixture_text("glued_s3.quiv")})
    assert r.status_code == 404


def test_verification_failure_is_reported(client, fixture_text):
    r = client.post("/verify/defect-hypothesis", json={"source": fixture_text("defect_negative.quiv")})
    assert r.status_code == 200
    body = r.json()
    assert body["status"] == "fail"
    assert body["exit_code"] == 3


def test_ct_a(client, fixture_text):
    r = client.post("/ct-a", json={"source": fixture_text("glued_s3.quiv")})
    assert r.status_code == 200
    assert r.json()["verdicts"][0]["evidence"]["objects"] == 6


def test_requests_carry_elapsed_time(client):
    r = client.get("/healthz")
    assert float(r.headers["X-Elapsed-Ms"]) >= 0.0
