use super::*;

fn ctx() -> PrecisionContext {
    PrecisionContext::new(30).unwrap()
}

#[test]
fn registry_shape() {
    let reg = registry();
    assert!(reg.len() >= 25, "{}", reg.len());
    assert!(find("eq5.9").is_ok());
    for c in reg {
        assert!(!c.citation.quote.is_empty() && !c.citation.locator.is_empty(), "{}", c.id);
    }
    let mut ids: Vec<_> = reg.iter().map(|c| c.id).collect();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), reg.len(), "duplicate ids");
}

#[test]
fn single_cases_pass() {
    let ctx = ctx();
    let p = Params::new().int("k", 2).real("alpha", "pi").real("beta", "pi");
    assert!(verify("cor5.3", &p, &ctx).unwrap().passed());
    assert!(verify("ex3.2", &Params::new(), &ctx).unwrap().passed());
    let p = Params::new()
        .int("m", 1)
        .int("p", 1)
        .int("q", 2)
        .seq("A", seq_harmonic())
        .seq("B", seq_ones());
    let r = verify("thm3.4", &p, &ctx).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn quadratic_values_all_pass() {
    let rs = suite(Some("quad_values"), &ctx());
    assert_eq!(rs.len(), 8);
    assert!(rs.iter().all(|r| r.passed()));
}

#[test]
fn empty_filter() {
    assert!(suite(Some("nosuch"), &ctx()).is_empty());
}

#[test]
fn restricted_assignment_is_skipped() {
    let p = Params::new().int("k", 2).real("alpha", "pi").real("beta", "2pi");
    let r = verify("cor5.3", &p, &ctx()).unwrap();
    assert!(matches!(r.status, Status::Skipped(_)), "{r}");
    assert!(r.lhs.is_none());
}

#[test]
fn bad_inputs() {
    let ctx = ctx();
    assert!(matches!(verify("nosuch", &Params::new(), &ctx), Err(Error::UnknownIdentity(_))));
    let p = Params::new().int("q", 9);
    assert!(matches!(verify("ex4.5", &p, &ctx), Err(Error::Domain(_))));
    assert!(matches!(verify("ex4.5", &Params::new(), &ctx), Err(Error::Domain(_))));
}

#[test]
fn grid_is_deterministic() {
    let c = find("thm3.2").unwrap();
    assert_eq!(c.grid().len(), 4 * 3 * 3 * 3);
    let a: Vec<String> = c.grid().iter().map(|p| p.to_string()).collect();
    let b: Vec<String> = c.grid().iter().map(|p| p.to_string()).collect();
    assert_eq!(a, b);
}

#[test]
fn report_serializations() {
    let r = &suite(Some("ex3.2"), &ctx())[0];
    let j = r.to_json();
    assert_eq!(j["status"], "PASS");
    let line = j.to_string();
    let back: serde_json::Value = serde_json::from_str(&line).unwrap();
    assert_eq!(back.to_string(), line);
    assert_eq!(r.to_csv().split(',').count(), VerificationReport::CSV_HEADER.split(',').count());
}
