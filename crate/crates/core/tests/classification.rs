use projcurve::classification::*;
use projcurve::{Divisor, MultiPoly};

fn mp(s: &str) -> MultiPoly {
    s.parse().unwrap()
}

#[test]
fn every_named_verifier_succeeds() {
    for name in VERIFIERS {
        let rep = verify_by_name(name).unwrap().unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(rep.name, name);
        assert!(!rep.checks.is_empty());
    }
    assert!(verify_by_name("deg8").is_none());
}

#[test]
fn degree_six_has_two_representatives() {
    let r = verify_deg6_classification().unwrap();
    assert_eq!(r.representatives.len(), 2);
    let mut branch: Vec<usize> = r.representatives.iter().map(|x| x.branch_divisor.degree() as usize).collect();
    branch.sort();
    assert_eq!(branch, vec![0, 2]);
    assert!(r.representatives.iter().all(|x| x.null_degree == 6));
    assert!(r.representatives.iter().any(|x| x.branch_divisor == Divisor::new()));
}

#[test]
fn degree_seven_minors_have_closed_forms() {
    let r = verify_deg7_unbranched_nonexistence().unwrap();
    assert_eq!(r.first_minor, mp("-48*((3*p+q)*b+4*p+2*q)^3"));
    assert_eq!(r.last_minor, mp("-48*((p+3*q)*a+2*p+4*q)^3"));
    assert_eq!(r.middle_minor_cleared, mp("8640*p*q*(p+q)^3"));
    assert!(r.f_at_one.iter().all(MultiPoly::is_zero));
}

#[test]
fn surviving_locus_of_the_two_point_family() {
    let f = [mp("1 + a*z"), mp("z^2"), mp("z^3"), mp("b*z^4 + z^5")];
    let branches = certify_full_rank(&maximal_minors(&symbolic_f2_matrix(&f))).unwrap();
    let surviving: Vec<_> = branches.iter().filter(|b| b.is_surviving()).collect();
    assert_eq!(surviving.len(), 1);
    let mut z = surviving[0].zeros.clone();
    z.sort();
    assert_eq!(z, vec!["a".to_string(), "b".to_string()]);
}

#[test]
fn profile_table() {
    let sols = |d| enumerate_profiles(d).solutions.iter().map(|p| (p.r1, p.r2)).collect::<Vec<_>>();
    assert_eq!(sols(8), vec![(0, 4), (2, 2), (4, 0)]);
    assert!(sols(2).is_empty());
}
