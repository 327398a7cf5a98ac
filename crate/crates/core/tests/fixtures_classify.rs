use subclone::classify::{classify_central, decide_h_regular, CentralType, Decision};
use subclone::fixtures::*;

#[test]
fn upsilon1_type_one() {
    let (kind, c) = classify_central(&upsilon1(), &theta1()).unwrap();
    assert_eq!(kind, CentralType::TypeI);
    assert_eq!(c.decision, Decision::Submaximal);
    assert!(c.witnesses().all(|(_, w)| w.verified));
}

#[test]
fn upsilon2_type_two() {
    let (kind, c) = classify_central(&upsilon2(), &theta2()).unwrap();
    assert_eq!(kind, CentralType::TypeII);
    assert!(c.witnesses().all(|(_, w)| w.verified));
}

#[test]
fn upsilon3_is_weakly_closed_of_order_one() {
    let (kind, c) = classify_central(&upsilon3(), &theta3()).unwrap();
    assert_eq!(kind, CentralType::TypeIII { order: 1, transversal: vec![0, 2, 3] });
    assert_eq!(c.decision, Decision::Submaximal);
    assert!(c.witnesses().all(|(_, w)| w.verified));
}

#[test]
fn upsilon4_order_two() {
    let (kind, c) = classify_central(&upsilon4(), &theta4()).unwrap();
    assert_eq!(kind, CentralType::TypeIII { order: 2, transversal: vec![0, 3, 6] });
    assert!(c.witnesses().all(|(_, w)| w.verified));
}

#[test]
fn upsilon5_order_three() {
    let (kind, c) = classify_central(&upsilon5(), &theta5()).unwrap();
    assert_eq!(kind, CentralType::TypeIII { order: 3, transversal: vec![0, 3, 5, 7] });
    assert!(c.witnesses().all(|(_, w)| w.verified));
}

#[test]
fn regular_examples() {
    for (theta, family) in [(theta6(), family6()), (theta8(), family67())] {
        let c = decide_h_regular(&theta, &family).unwrap();
        assert_eq!(c.decision, Decision::Submaximal);
        assert!(c.witnesses().all(|(_, w)| w.verified));
    }
    let c = decide_h_regular(&theta7(), &family6()).unwrap();
    assert_eq!(c.decision, Decision::NotSubmaximal);
    assert!(c.witnesses().all(|(_, w)| w.verified));
}
