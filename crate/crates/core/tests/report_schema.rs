use cip_core::report::{SolveReport, SOLVE_REPORT_SCHEMA};
use cip_core::solver::{solve, SolveConfig};
use cip_core::Graph;

fn validator() -> jsonschema::Validator {
    let schema: serde_json::Value = serde_json::from_str(SOLVE_REPORT_SCHEMA).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

#[test]
fn reports_validate_and_round_trip() {
    let v = validator();
    let graphs = [(Graph::complete(5), 2), (Graph::empty(3), 0), (Graph::complete(4), 9)];
    for (g, k) in graphs {
        let r = solve(&g, k, &SolveConfig::default());
        let report = SolveReport::new("g", &g, k, Some(0.5), &r);
        let json = serde_json::to_value(&report).unwrap();
        let errors: Vec<String> = v.iter_errors(&json).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{errors:?}");
        let text = serde_json::to_string(&report).unwrap();
        let back: SolveReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
    }
}

#[test]
fn schema_rejects_malformed_reports() {
    let v = validator();
    let r = solve(&Graph::complete(4), 1, &SolveConfig::default());
    let mut json = serde_json::to_value(SolveReport::new("g", &Graph::complete(4), 1, None, &r)).unwrap();
    json["status"] = "finished".into();
    assert!(!v.is_valid(&json));
    json["status"] = "optimal".into();
    json.as_object_mut().unwrap().remove("theta");
    assert!(!v.is_valid(&json));
}
