//! Input fixtures shared by the integration tests. Files under `fixtures/` are written by the
//! tool's own writers; `UPDATE_GOLDEN=1` regenerates them.
#![allow(dead_code)]

use std::path::PathBuf;

use subclone::constructions::GroupTable;
use subclone::finite::{Partition, Permutation, Relation};
use subclone::fixtures::*;
use subclone_cli::format::{write_family, write_group, write_partition, write_permutation, write_relation};

pub fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn path(name: &str) -> String {
    dir().join(name).to_string_lossy().into_owned()
}

pub fn updating() -> bool {
    std::env::var_os("UPDATE_GOLDEN").is_some()
}

fn part(k: usize, blocks: &[&[u8]]) -> Partition {
    Partition::new(k, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
}

/// File name and contents of every input fixture.
pub fn input_files() -> Vec<(&'static str, String)> {
    let mut v = vec![
        ("theta1.txt", write_partition("theta1", &theta1())),
        ("theta2.txt", write_partition("theta2", &theta2())),
        ("theta3.txt", write_partition("theta3", &theta3())),
        ("theta4.txt", write_partition("theta4", &theta4())),
        ("theta5.txt", write_partition("theta5", &theta5())),
        ("theta6.txt", write_partition("theta6", &theta6())),
        ("theta7.txt", write_partition("theta7", &theta7())),
        ("theta8.txt", write_partition("theta8", &theta8())),
        ("upsilon1.txt", write_relation("upsilon1", &upsilon1())),
        ("upsilon2.txt", write_relation("upsilon2", &upsilon2())),
        ("upsilon3.txt", write_relation("upsilon3", &upsilon3())),
        ("upsilon4.txt", write_relation("upsilon4", &upsilon4())),
        ("upsilon5.txt", write_relation("upsilon5", &upsilon5())),
        ("upsilon6.txt", write_relation("upsilon6", &upsilon6())),
        ("upsilon7.txt", write_relation("upsilon7", &upsilon7())),
        ("family6.txt", write_family(&[("theta6".into(), theta6())])),
        ("family67.txt", write_family(&[("theta6".into(), theta6()), ("theta7".into(), theta7())])),
        ("e4_pairs.txt", write_partition("pairs", &part(4, &[&[0, 1], &[2, 3]]))),
        ("e4_cross.txt", write_partition("cross", &part(4, &[&[0, 2], &[1, 3]]))),
        ("e4_nested.txt", write_partition("nested", &part(4, &[&[0, 1], &[2], &[3]]))),
        ("e3_split.txt", write_partition("split", &part(3, &[&[0, 1], &[2]]))),
        ("e6_pairs.txt", write_partition("pairs6", &part(6, &[&[0, 1], &[2, 3], &[4, 5]]))),
        ("chain4.txt", write_relation("chain4", &Relation::from_predicate(4, 2, |t| t[0] <= t[1]).unwrap())),
        ("klein.txt", write_group(&GroupTable::elementary(2, 2).unwrap())),
        ("z3.txt", write_group(&GroupTable::cyclic(3).unwrap())),
    ];
    let swap = Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
    let cross = Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap();
    let rot = Permutation::from_cycles(6, &[vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
    v.push(("perm_swap.txt", write_permutation("swap", &swap)));
    v.push(("perm_cross.txt", write_permutation("cross", &cross)));
    v.push(("perm_rot.txt", write_permutation("rot", &rot)));
    v
}

/// A classification golden: report name, θ file, ρ file, optional kind, expected headline and
/// exit code.
pub struct Case {
    pub report: &'static str,
    pub theta: &'static str,
    pub rho: &'static str,
    pub kind: Option<&'static str>,
    pub headline: &'static str,
    pub exit: i32,
}

const fn case(
    report: &'static str,
    theta: &'static str,
    rho: &'static str,
    kind: Option<&'static str>,
    headline: &'static str,
) -> Case {
    Case { report, theta, rho, kind, headline, exit: 0 }
}

/// Decided, but the only certificate is a note.
const fn noted(c: Case) -> Case {
    Case { exit: 1, ..c }
}

pub const CASES: &[Case] = &[
    case("upsilon1", "theta1.txt", "upsilon1.txt", None, "Submaximal, central type I"),
    case("upsilon2", "theta2.txt", "upsilon2.txt", None, "Submaximal, central type II"),
    case("upsilon3", "theta3.txt", "upsilon3.txt", None, "Submaximal, central type III"),
    case("upsilon4", "theta4.txt", "upsilon4.txt", None, "Submaximal, central type III"),
    case("upsilon5", "theta5.txt", "upsilon5.txt", None, "Submaximal, central type III"),
    case("upsilon6", "theta6.txt", "family6.txt", Some("hregular"), "Submaximal, hregular theta-closed"),
    case("upsilon7", "theta8.txt", "family67.txt", None, "Submaximal, hregular theta-closed"),
    case("equiv_product", "e4_pairs.txt", "e4_cross.txt", None, "Submaximal, equiv (b) product"),
    case("equiv_nested", "e4_pairs.txt", "e4_nested.txt", None, "Submaximal, equiv (a) nested"),
    case("perm_swap", "e4_pairs.txt", "perm_swap.txt", None, "Submaximal, perm (a) graph inside theta"),
    case("perm_cross", "e4_pairs.txt", "perm_cross.txt", None, "Submaximal, perm (b) permutes classes"),
    noted(case("perm_rot", "e6_pairs.txt", "perm_rot.txt", None, "NotSubmaximal, perm neither (a) nor (b)")),
    case("order_chain4", "e4_pairs.txt", "chain4.txt", None, "NotSubmaximal, order theta-rho-theta"),
    case("affine_klein", "e4_pairs.txt", "klein.txt", None, "NotSubmaximal, affine alpha1"),
    case("affine_z3", "e3_split.txt", "z3.txt", None, "NotSubmaximal, affine alpha1"),
];
