use m2chow::pipeline::{
    affected_by_claim, check_ids, verify_all, CheckRecord, Claims, Fault, RunConfig, Status,
};

#[test]
fn stated_values_verify() {
    let report = verify_all(&RunConfig::default()).unwrap();
    for c in report.checks.iter().filter(|c| c.status == Status::Fail) {
        eprintln!("{}:\n{}", c.id, c.witness);
    }
    assert!(report.all_passed());
    assert_eq!(report.checks.len(), check_ids().len());
}

#[test]
fn every_claim_is_load_bearing() {
    let claims = Claims::stated();
    let keys: Vec<String> = claims.keys().map(|k| k.to_string()).collect();
    for key in keys {
        let fault = Fault::new(key.clone(), 0, 0);
        let report = verify_all(&RunConfig {
            fault: Some(fault),
            ..RunConfig::default()
        })
        .unwrap();
        let failing = report.failed();
        let allowed = affected_by_claim(&key);
        assert!(!failing.is_empty(), "corrupting {key} went unnoticed");
        for id in &failing {
            assert!(allowed.contains(id), "corrupting {key} broke unrelated check {id}");
        }
    }
}

#[test]
fn selection_and_fail_fast() {
    let report = verify_all(&RunConfig {
        selected: Some(vec!["thm:bg".into(), "kappa".into()]),
        ..RunConfig::default()
    })
    .unwrap();
    let ids: Vec<&str> = report.checks.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(ids, ["thm:bg", "kappa"]);

    let report = verify_all(&RunConfig {
        fail_fast: true,
        fault: Some(Fault::new("bg.ring", 0, 0)),
        ..RunConfig::default()
    })
    .unwrap();
    assert_eq!(report.checks.last().unwrap().status, Status::Fail);
    assert_eq!(report.checks.len(), 1);
}

#[test]
fn rejects_bad_configuration() {
    assert!(verify_all(&RunConfig {
        selected: Some(vec!["no-such-check".into()]),
        ..RunConfig::default()
    })
    .is_err());
    assert!(verify_all(&RunConfig {
        max_degree: 4,
        ..RunConfig::default()
    })
    .is_err());
}

#[test]
fn witnesses_are_deterministic() {
    let config = RunConfig {
        selected: Some(vec!["thm:main".into(), "bielliptic-mod2".into()]),
        ..RunConfig::default()
    };
    let a = verify_all(&config).unwrap().records();
    let b = verify_all(&config).unwrap().records();
    let digests = |r: &[CheckRecord]| r.iter().map(|c| c.witness_digest.clone()).collect::<Vec<_>>();
    assert_eq!(digests(&a), digests(&b));
}

#[test]
fn records_round_trip_through_json() {
    let report = verify_all(&RunConfig {
        selected: Some(vec!["groth".into()]),
        ..RunConfig::default()
    })
    .unwrap();
    let records = report.records();
    let text = serde_json::to_string(&records).unwrap();
    let back: Vec<CheckRecord> = serde_json::from_str(&text).unwrap();
    assert_eq!(back, records);
}
