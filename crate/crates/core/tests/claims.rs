use topograph::claims::{self, check_claim, verify_all, Summary, Value, Verdict};
use topograph::{Budget, Error};

fn row<'a>(vs: &'a [claims::ClaimVerdict], id: &str, params: &str) -> &'a claims::ClaimVerdict {
    vs.iter()
        .find(|v| v.claim == id && v.params.to_string() == params)
        .unwrap_or_else(|| panic!("no row {id} {params}"))
}

#[test]
fn verify_small_range() {
    let vs = verify_all(2, 4, Budget::default()).unwrap();
    let s = Summary::tally(&vs);
    assert_eq!(s.inexact, 0);

    let b = row(&vs, "BETA-STATED", "4");
    assert_eq!(
        (&b.predicted, &b.computed, b.verdict),
        (&Value::Int(10), &Value::Int(7), Verdict::Refuted)
    );
    assert_eq!(row(&vs, "BETA-EQ-GAMMA", "3").verdict, Verdict::Confirmed);
    assert_eq!(row(&vs, "BETA-EQ-GAMMA", "4").verdict, Verdict::Confirmed);
    assert_eq!(row(&vs, "ISO-K2", "2").verdict, Verdict::Confirmed);
    assert_eq!(row(&vs, "ISO-K2", "3").verdict, Verdict::NotApplicable);
    assert_eq!(row(&vs, "ISO-CORONA", "3").verdict, Verdict::Confirmed);
    assert_eq!(row(&vs, "GAMMA", "4").verdict, Verdict::Confirmed);
    assert_eq!(row(&vs, "JOIN-GAMMA", "3:3").verdict, Verdict::Refuted);
    assert_eq!(row(&vs, "JOIN-GAMMA", "2:3").verdict, Verdict::Confirmed);
    assert_eq!(row(&vs, "CORONA-GAMMA", "3:2").verdict, Verdict::Refuted);
}

#[test]
fn verdicts_are_sorted_and_deterministic() {
    let a = verify_all(2, 5, Budget::default()).unwrap();
    let b = verify_all(2, 5, Budget::default()).unwrap();
    assert_eq!(a, b);
    let order: Vec<usize> = a
        .iter()
        .map(|v| {
            claims::list_claims()
                .iter()
                .position(|c| c.id == v.claim)
                .unwrap()
        })
        .collect();
    assert!(order.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn every_certificate_validates() {
    for v in verify_all(2, 5, Budget::default()).unwrap() {
        if v.verdict == Verdict::NotApplicable {
            continue;
        }
        let g = v.evidence.graph.build().unwrap();
        for c in &v.evidence.certificates {
            assert!(c.validate(&g), "{} {}: {c:?}", v.claim, v.params);
        }
    }
}

#[test]
fn refutations_carry_certificates() {
    for v in verify_all(2, 5, Budget::default()).unwrap() {
        if v.verdict == Verdict::Refuted {
            assert!(
                !v.evidence.certificates.is_empty(),
                "{} {} has no certificate",
                v.claim,
                v.params
            );
        }
    }
}

#[test]
fn example_and_corollary_rows() {
    let v = check_claim("BETA-EXAMPLE", 5, None, Budget::default()).unwrap();
    assert_eq!(
        (v.computed.clone(), v.verdict),
        (Value::Int(15), Verdict::Confirmed)
    );
    let v = check_claim("BETA-EQ-GAMMA", 3, None, Budget::default()).unwrap();
    assert_eq!(v.predicted.to_string(), "equal");
    assert_eq!(v.computed.to_string(), "equal");
    assert_eq!(v.verdict, Verdict::Confirmed);
}

#[test]
fn bad_requests() {
    assert!(matches!(
        check_claim("NOPE", 3, None, Budget::default()),
        Err(Error::UnknownClaim(_))
    ));
    assert!(matches!(
        verify_all(4, 3, Budget::default()),
        Err(Error::InvalidRange { .. })
    ));
    assert!(matches!(
        verify_all(1, 3, Budget::default()),
        Err(Error::OutOfRange { .. })
    ));
    assert!(matches!(
        verify_all(2, claims::VERIFY_MAX_N + 1, Budget::default()),
        Err(Error::OutOfRange { .. })
    ));
}
