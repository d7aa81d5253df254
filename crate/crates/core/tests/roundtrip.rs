use vrank_core::families::{self, FamilyId};
use vrank_core::{Element, Pipeline, VTuple};

const MAX_N: u32 = 16;

fn codomain(p: Pipeline, n: u32) -> Vec<VTuple> {
    families::enumerate(&p.spec().family(), n)
        .unwrap()
        .into_iter()
        .map(|x| match x {
            Element::Tuple(cs) => VTuple::new(p.spec(), cs).unwrap(),
            other => panic!("codomain element {other} is not a tuple"),
        })
        .collect()
}

#[test]
fn inverse_after_forward_is_identity() {
    for p in Pipeline::ALL {
        for n in 0..=MAX_N {
            for x in families::enumerate(&p.domain(), n).unwrap() {
                let v = p.forward(&x).unwrap();
                assert_eq!(v.weight(), u64::from(n), "{x}");
                assert_eq!(p.inverse(&v).unwrap(), x, "{} at {x}", p.name());
            }
        }
    }
}

#[test]
fn forward_after_inverse_is_identity() {
    for p in Pipeline::ALL {
        for n in 0..=MAX_N {
            for v in codomain(p, n) {
                let x = p.inverse(&v).unwrap();
                assert_eq!(x.weight(), u64::from(n), "{v}");
                assert_eq!(p.forward(&x).unwrap(), v, "{} at {v}", p.name());
            }
        }
    }
}

#[test]
fn slices_have_equal_size() {
    for p in Pipeline::ALL {
        for n in 0..=MAX_N {
            assert_eq!(
                families::count(&p.domain(), n).unwrap(),
                families::count(&p.spec().family(), n).unwrap(),
                "{} at {n}",
                p.name()
            );
        }
    }
}

#[test]
fn images_are_distinct_members() {
    for p in Pipeline::ALL {
        let codomain = p.spec().family();
        for n in 0..=12 {
            let mut seen = std::collections::BTreeSet::new();
            for x in families::enumerate(&p.domain(), n).unwrap() {
                let v = p.forward(&x).unwrap();
                assert!(codomain.is_member(&v.to_element()).unwrap());
                assert!(seen.insert(v.to_string()), "{} repeats {v}", p.name());
            }
        }
    }
}

#[test]
fn inverses_reject_non_members() {
    let spec = Pipeline::Pd.spec();
    assert!(VTuple::parse(spec.clone(), "(3;0;0;1;0)").is_err());
    assert!(VTuple::parse(spec, "(0;0;0;1;3+3)").is_err());
    assert!(Pipeline::Pd.domain().parse_member("2+1").is_err());
    assert!(FamilyId::pod2().parse_member("(3+3;0)").is_err());
}
