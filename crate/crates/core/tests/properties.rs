use proptest::prelude::*;
use vrank_core::bijections::{phi, phi_inv};
use vrank_core::oracle::{build_series, Factor, PowerSeries, ProductSpec};
use vrank_core::{Partition, Residue};

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..30, 0..25).prop_map(Partition::new)
}

fn series() -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec(-50i64..50, 16).prop_map(|c| PowerSeries::from_i64(&c))
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in partition()) {
        let c = p.conjugate();
        prop_assert_eq!(c.weight(), p.weight());
        prop_assert_eq!(c.conjugate(), p);
    }

    #[test]
    fn frobenius_round_trip(p in partition()) {
        let f = p.to_frobenius();
        prop_assert_eq!(f.weight(), p.weight());
        prop_assert_eq!(f.to_partition(), p);
    }

    #[test]
    fn text_round_trip(p in partition()) {
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn residue_split_recombines(p in partition()) {
        for r in [Residue::Plus, Residue::Minus] {
            prop_assert_eq!(p.split_by_residue3(r).recombine(), p.clone());
        }
    }

    #[test]
    fn phi_round_trip(p in partition()) {
        prop_assert_eq!(phi_inv(&phi(&p)).unwrap(), p);
    }

    #[test]
    fn multiplication_commutes_and_associates(a in series(), b in series(), c in series()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn product_times_its_inverse_is_one(a in 1usize..6, b in 1usize..6, e in 1i32..4, neg in any::<bool>()) {
        let s = ProductSpec::new()
            .factor(Factor::new(a, b, e, neg))
            .factor(Factor::new(a, b, -e, neg));
        prop_assert_eq!(build_series(&s, 60), PowerSeries::one(60));
        let x = build_series(&ProductSpec::new().factor(Factor::new(a, b, e, neg)), 60);
        let y = build_series(&ProductSpec::new().factor(Factor::new(a, b, -e, neg)), 60);
        prop_assert_eq!(&x * &y, PowerSeries::one(60));
    }
}
