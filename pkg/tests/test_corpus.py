import json

from bracketlab.corpus import (
    CorpusManifest,
    check_all,
    default_manifest,
    load_corpus_json,
    report_to_json,
)


class TestManifest:
    def test_default_manifest_shape(self):
        m = default_manifest()
        assert {e.name for e in m.diagrams} >= {"unknot", "trefoil", "hopf", "figure_eight"}
        equivalents = {e.name: e.equivalent_to for e in m.diagrams if e.equivalent_to}
        assert equivalents["trefoil_r1"] == "trefoil"
        assert equivalents["hopf_r2"] == "hopf"

    def test_negative_controls_marked(self):
        m = default_manifest()
        expected_fail = {
            e.name
            for section in (m.biquandles, m.brackets, m.cocycles)
            for e in section
            if e.expected_verification == "fail"
        }
        assert expected_fail == {"threeel_broken", "gf8_broken", "ab_broken"}

    def test_all_files_parse(self):
        m = default_manifest()
        for section in (m.diagrams, m.biquandles, m.brackets, m.cocycles):
            for entry in section:
                assert load_corpus_json(entry.file)

    def test_empty_manifest(self):
        empty = CorpusManifest.from_json(
            {"diagrams": [], "biquandles": [], "brackets": [], "cocycles": []}
        )
        results = check_all(empty)
        report = report_to_json(results)
        assert report == {"ok": True, "total": 0, "failed": [], "checks": []}

    def test_report_serializes(self):
        results = check_all(
            CorpusManifest.from_json(
                {
                    "diagrams": [{"name": "unknot", "file": "unknot.json"}],
                    "biquandles": [
                        {
                            "name": "flip",
                            "file": "biquandle_flip.json",
                            "expected_verification": "pass",
                        }
                    ],
                    "brackets": [],
                    "cocycles": [],
                }
            )
        )
        report = report_to_json(results)
        assert report["ok"] is True
        json.dumps(report)  # fully JSON-serializable
