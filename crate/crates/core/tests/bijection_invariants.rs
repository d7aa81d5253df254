use vrank_core::bijections::{
    delta, delta_inv, phi, phi_inv, psi, psi_inv, wright_m, wright_m_inv,
};
use vrank_core::families::{self, FamilyId};
use vrank_core::{Element, Partition};

fn partitions(n: u32) -> Vec<Partition> {
    families::enumerate(&FamilyId::ordinary(), n)
        .unwrap()
        .into_iter()
        .map(|x| x.as_partition().unwrap().clone())
        .collect()
}

fn is_staircase(p: &Partition) -> bool {
    p.parts()
        .iter()
        .rev()
        .enumerate()
        .all(|(i, &x)| x as usize == i + 1)
}

#[test]
fn phi_is_a_weight_preserving_bijection() {
    for n in 0..=18 {
        for p in partitions(n) {
            let t = phi(&p);
            assert!(is_staircase(&t.core), "{p}");
            assert!(t.even_a.all_divisible_by(2) && t.even_b.all_divisible_by(2));
            assert_eq!(t.weight(), u64::from(n));
            assert_eq!(phi_inv(&t).unwrap(), p);
        }
    }
}

#[test]
fn delta_and_psi_invert() {
    for n in 0..=14 {
        for x in families::enumerate(&FamilyId::Designated, n).unwrap() {
            let Element::Designated(d) = x else {
                unreachable!()
            };
            let (alpha, beta) = delta(&d);
            assert!(beta.multiplicities().iter().all(|&(_, c)| c >= 2), "{d}");
            assert_eq!(alpha.weight() + beta.weight(), u64::from(n));
            assert_eq!(delta_inv(&alpha, &beta).unwrap(), d);
            let (even, triples) = psi(&beta).unwrap();
            assert!(even.all_divisible_by(2));
            assert!(triples.all_divisible_by(3) && triples.has_distinct_parts());
            assert_eq!(psi_inv(&even, &triples).unwrap(), beta);
        }
    }
}

#[test]
fn wright_map_preserves_weight_and_inverts() {
    let odd_distinct = FamilyId::distinct_parts(2, &[1]).unwrap();
    for n1 in 0..=14 {
        for n2 in 0..=14 {
            let firsts = families::enumerate(&odd_distinct, n1).unwrap();
            let seconds = families::enumerate(&odd_distinct, n2).unwrap();
            for a in &firsts {
                for b in &seconds {
                    let (a, b) = (a.as_partition().unwrap(), b.as_partition().unwrap());
                    let w = wright_m(a, b).unwrap();
                    assert!(w.pi.all_divisible_by(2), "{a} {b}");
                    assert_eq!(w.pi.weight() + w.triangle.weight(), a.weight() + b.weight());
                    let sign = a.len() as i64 - b.len() as i64;
                    assert_eq!(w.m, sign);
                    assert_eq!(i64::from(w.triangle.m()), sign.abs());
                    assert_eq!(w.triangle.one_overlined(), sign < 0, "{a} {b}");
                    assert_eq!(
                        wright_m_inv(&w.pi, &w.triangle).unwrap(),
                        (a.clone(), b.clone())
                    );
                }
            }
        }
    }
}
