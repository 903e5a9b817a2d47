"""Driving the HTTP API in-process (no port needed).

Run from the repository root:  python3 demos/06_http_service.py
For a real server use:         valgen serve --bind 127.0.0.1:8000
"""

from fastapi.testclient import TestClient

from valgen.service import ServiceConfig, create_app

app = create_app(ServiceConfig())
with TestClient(app) as client:
    print("GET /v1/languages       ->", client.get("/v1/languages").json())
    nouns = client.get("/v1/nouns", params={"lang": "de"}).json()["nouns"]
    print("GET /v1/nouns?lang=de   ->", nouns[:6], "...")

    structures = client.get(
        "/v1/structures", params={"lang": "de", "noun": "Antwort"}
    ).json()["structures"]
    print("GET /v1/structures      ->", [s["pattern_id"] for s in structures])

    body = {
        "language": "de", "lemma": "Antwort",
        "pattern_id": "det+Antwort+gen+N1+auf+acc+N2",
        "packages": {"a": ["belebt.menschlich.organisation.regierungsgebunden"],
                     "b": ["intellektuelles.kommunikation"]},
        "limit": 4,
    }
    payload = client.post("/v1/generate", json=body).json()
    print("POST /v1/generate       ->", payload["stats"])
    for phrase in payload["phrases"]:
        print("   ", phrase["text"], f"(similarity {phrase['scores']['similarity']:.2f})")

    # the export endpoint re-runs the same request and streams bytes
    csv_bytes = client.post("/v1/export", params={"format": "csv"}, json=body).content
    print("\nPOST /v1/export?format=csv ->")
    print(csv_bytes.decode("utf-8"))

    # errors carry {"error", "message"} and a 4xx status
    broken = client.post("/v1/generate", json={"language": "de", "lemma": "Nix",
                                               "pattern_id": "x", "packages": {"a": ["all"]}})
    print("unknown noun ->", broken.status_code, broken.json())
