use proptest::prelude::*;
use subclone::finite::{Partition, Permutation, Relation};
use subclone_cli::format::{parse, write_partition, write_permutation, write_relation, Document};

fn relation() -> impl Strategy<Value = Relation> {
    (2usize..=5, 1usize..=3).prop_flat_map(|(k, h)| {
        prop::collection::vec(any::<bool>(), k.pow(h as u32)).prop_map(move |bits| {
            let mut r = Relation::empty(k, h).unwrap();
            for (rank, b) in bits.into_iter().enumerate() {
                if b {
                    let t = r.unrank(rank);
                    r.insert(&t).unwrap();
                }
            }
            r
        })
    })
}

fn partition() -> impl Strategy<Value = Partition> {
    (2usize..=8).prop_flat_map(|k| prop::collection::vec(0..k, k)).prop_map(|labels| Partition::from_class_map(&labels))
}

proptest! {
    #[test]
    fn relations_reparse(r in relation()) {
        let text = write_relation("r", &r);
        match parse(&text).unwrap() {
            Document::Relation { name, relation } => {
                prop_assert_eq!(name, "r");
                prop_assert_eq!(write_relation("r", &relation), text);
                prop_assert_eq!(relation, r);
            }
            d => prop_assert!(false, "parsed as {}", d.kind()),
        }
    }

    #[test]
    fn partitions_reparse(p in partition()) {
        match parse(&write_partition("p", &p)).unwrap() {
            Document::Partitions(ps) => prop_assert_eq!(ps, vec![("p".to_string(), p)]),
            d => prop_assert!(false, "parsed as {}", d.kind()),
        }
    }

    #[test]
    fn permutations_reparse(images in (2usize..=7).prop_flat_map(|k| Just((0..k as u8).collect::<Vec<_>>()).prop_shuffle())) {
        let pi = Permutation::new(images).unwrap();
        match parse(&write_permutation("pi", &pi)).unwrap() {
            Document::Permutation { k: Some(k), cycles, .. } => {
                prop_assert_eq!(Permutation::from_cycles(k, &cycles).unwrap(), pi);
            }
            d => prop_assert!(false, "parsed as {}", d.kind()),
        }
    }
}
