//! Worked-example anchors checked by `vrank selftest`.

use vrank_core::bijections::{delta, lambda_a, lambda_pd, lambda_pod, phi, psi, wright_m};
use vrank_core::families::{self, DesignatedPartition, OddStaircase, PodBipartition};
use vrank_core::oracle::{self, Theta};
use vrank_core::orbits::{self, build_orbits, classify_case, o_hat, v_rank, Case};
use vrank_core::{Element, FamilyId, FrobeniusSymbol, Partition, Pipeline, Residue, VSpec, VTuple};

use crate::tables;

type Check = fn() -> Result<(), String>;

fn p(text: &str) -> Partition {
    text.parse().expect("anchor partitions are well formed")
}

fn expect<T: PartialEq + std::fmt::Debug>(got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("got {got:?}, expected {want:?}"))
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn example_tuple() -> Result<VTuple, String> {
    let o = FamilyId::ordinary();
    let spec = VSpec::new(1, vec![o.clone(), o.clone(), o, FamilyId::Staircase]).map_err(err)?;
    VTuple::parse(spec, "(9+8+7+7+5+4;5+2+1;10+6+4+4+3+2;3+2+1)").map_err(err)
}

fn designated_88() -> DesignatedPartition {
    "20+20+20'+4+4'+4+4+2'+2+1+1+1+1+1+1+1'+1"
        .parse()
        .expect("well formed")
}

pub const ANCHORS: &[(&str, Check)] = &[
    ("conjugate (4,4,2,2,1) = (5,4,2,2)", || {
        expect(p("4+4+2+2+1").conjugate(), p("5+4+2+2"))
    }),
    ("union (4,3,3,3,2) ∪ (6,6,5)", || {
        expect(p("4+3+3+3+2").union(&p("6+6+5")), p("6+6+5+4+3+3+3+2"))
    }),
    ("scale2 (9,6,6,2,1) = (18,12,12,4,2)", || {
        expect(p("9+6+6+2+1").scale2(), p("18+12+12+4+2"))
    }),
    ("residue counts 3,1,3 in the V(1,4) example", || {
        let v = example_tuple()?;
        let counts: Vec<usize> = v.components()[..3]
            .iter()
            .map(|c| {
                c.as_partition()
                    .expect("partition")
                    .count_residue3(Residue::Plus)
            })
            .collect();
        expect(counts, vec![3, 1, 3])
    }),
    ("split (9,8,7,7,5,4) by residue 1", || {
        let s = p("9+8+7+7+5+4").split_by_residue3(Residue::Plus);
        expect((s.selected, s.complement), (p("7+7+4"), p("9+8+5")))
    }),
    ("Frobenius (3,1,0;4,3,1) = (4,3,3,3,2)", || {
        let f = FrobeniusSymbol::new(vec![3, 1, 0], vec![4, 3, 1]).map_err(err)?;
        expect(f.to_partition(), p("4+3+3+3+2"))?;
        expect(p("4+3+3+3+2").to_frobenius(), f)
    }),
    ("(60,3) ∈ D3{0}", || {
        expect(
            FamilyId::distinct_multiples_of_3()
                .is_member(&Element::Partition(p("60+3")))
                .map_err(err)?,
            true,
        )
    }),
    ("A has 3 elements of weight 2", || {
        let names: Vec<String> = families::enumerate(&FamilyId::TwoColor, 2)
            .map_err(err)?
            .iter()
            .map(ToString::to_string)
            .collect();
        expect(names, vec!["1r+1r".to_string(), "2b".into(), "2r".into()])
    }),
    ("PD has 15 elements of weight 5", || {
        expect(
            families::enumerate(&FamilyId::Designated, 5)
                .map_err(err)?
                .len(),
            15,
        )
    }),
    ("POD₋₂ has 18 elements of weight 5", || {
        expect(
            families::enumerate(&FamilyId::pod2(), 5)
                .map_err(err)?
                .len(),
            18,
        )
    }),
    ("count(A, 5) = 12", || {
        expect(families::count(&FamilyId::TwoColor, 5).map_err(err)?, 12)
    }),
    ("Φ(4,4,2,2,1) = (1, 2, 6+4)", || {
        let t = phi(&p("4+4+2+2+1"));
        expect((t.core, t.even_a, t.even_b), (p("1"), p("2"), p("6+4")))
    }),
    ("Δ of the designated partition of 88", || {
        expect(
            delta(&designated_88()),
            (p("4+4+2+2+1"), p("20+20+20+4+4+1+1+1+1+1+1+1")),
        )
    }),
    ("Ψ(20³,4²,1⁷) = (8+2+2, 60+3)", || {
        expect(
            psi(&p("20+20+20+4+4+1+1+1+1+1+1+1")).map_err(err)?,
            (p("8+2+2"), p("60+3")),
        )
    }),
    ("Λ_pd of the partition of 88", || {
        expect(
            lambda_pd(&designated_88()).to_string(),
            "(2;6+4;8+2+2;1;60+3)".into(),
        )
    }),
    ("Λ_pd(5') = (4;0;0;1;0)", || {
        expect(
            lambda_pd(&"5'".parse().map_err(err)?).to_string(),
            "(4;0;0;1;0)".into(),
        )
    }),
    ("Λ_pd(2'+1+1+1') = (0;2;0;0;3)", || {
        expect(
            lambda_pd(&"2'+1+1+1'".parse().map_err(err)?).to_string(),
            "(0;2;0;0;3)".into(),
        )
    }),
    ("Λ_a(5r) = (4;0;0;1)", || {
        expect(
            lambda_a(&"5r".parse().map_err(err)?)
                .map_err(err)?
                .to_string(),
            "(4;0;0;1)".into(),
        )
    }),
    ("Λ_a(3r+2b) = (2;0;2;1)", || {
        expect(
            lambda_a(&"3r+2b".parse().map_err(err)?)
                .map_err(err)?
                .to_string(),
            "(2;0;2;1)".into(),
        )
    }),
    (
        "φ_m((9,7,3),(17,15,11,7,3,1)) = ((16,16,14,8,6,4),(5,3,1~))",
        || {
            let w = wright_m(&p("9+7+3"), &p("17+15+11+7+3+1")).map_err(err)?;
            expect(
                (w.pi, w.triangle),
                (
                    p("16+16+14+8+6+4"),
                    OddStaircase::new(3, true).map_err(err)?,
                ),
            )
        },
    ),
    ("Λ_pod rows (5;0), (0;5), (2+1;2)", || {
        for (a, b, want) in [
            ("5", "0", "(0;0;4;1)"),
            ("0", "5", "(0;0;2+2;1~)"),
            ("2+1", "2", "(2;2;0;1)"),
        ] {
            let bp = PodBipartition::new(p(a), p(b)).map_err(err)?;
            expect(lambda_pod(&bp).map_err(err)?.to_string(), want.to_string())?;
        }
        Ok(())
    }),
    ("V(1,4) example: rank 3, Case 1 with ℓ₁ total 7", || {
        let v = example_tuple()?;
        expect(v_rank(&v), 3)?;
        expect(classify_case(&v), Case::One)
    }),
    ("V(1,4) example: Ô orbit and ranks 3, 1, -1", || {
        let v = example_tuple()?;
        let v1 = o_hat(&v).map_err(err)?;
        let v2 = o_hat(&v1).map_err(err)?;
        expect(
            v1.to_string(),
            "(10+9+8+5+4+4;7+7+5+4+2;6+3+2+1;3+2+1)".into(),
        )?;
        expect(
            v2.to_string(),
            "(9+8+5+1;10+5+4+4+2;7+7+6+4+3+2;3+2+1)".into(),
        )?;
        expect([v_rank(&v), v_rank(&v1), v_rank(&v2)], [3, 1, -1])
    }),
    ("r_V(4;0;0;1;0) = 1", || {
        expect(
            v_rank(&VTuple::parse(VSpec::pd(), "(4;0;0;1;0)").map_err(err)?),
            1,
        )
    }),
    (
        "tail weights of Λ_pd and Λ_pod codomains avoid 2 mod 3",
        || {
            expect(
                orbits::check_tail_condition(&VSpec::pd(), 2, 30).map_err(err)?,
                true,
            )?;
            expect(
                orbits::check_tail_condition(&VSpec::pod(), 2, 30).map_err(err)?,
                true,
            )
        },
    ),
    ("weight-5 PD orbit table", || {
        tables::compare(&build_orbits(Pipeline::Pd, 5).map_err(err)?)
    }),
    ("weight-5 A orbit table", || {
        tables::compare(&build_orbits(Pipeline::A, 5).map_err(err)?)
    }),
    ("weight-5 POD₋₂ orbit table", || {
        tables::compare(&build_orbits(Pipeline::Pod, 5).map_err(err)?)
    }),
    ("odd staircase theta to q^5 = 1,2,0,0,2,0", || {
        let s = oracle::theta_series(Theta::OddStaircase, 5);
        expect(s.to_csv(), "0,1\n1,2\n2,0\n3,0\n4,2\n5,0\n".into())
    }),
    ("PD series coefficient 5 = 15, A coefficient 2 = 3", || {
        let pd = oracle::family_series(&FamilyId::Designated, 10).map_err(err)?;
        let a = oracle::family_series(&FamilyId::TwoColor, 10).map_err(err)?;
        expect(
            (pd.coefficient(5).to_string(), a.coefficient(2).to_string()),
            ("15".into(), "3".into()),
        )
    }),
    (
        "pd(3n+2) ≡ 0 and p̄₋₂(3n+2) ≡ 0 (mod 3) to 300",
        || {
            for f in [FamilyId::Designated, FamilyId::overpartition_pairs()] {
                let s = oracle::family_series(&f, 300).map_err(err)?;
                let r = oracle::scan_congruence(&f.to_string(), &s, 3, 2, 300);
                expect(r.violations.len(), 0)?;
            }
            Ok(())
        },
    ),
    ("bijection --family pd --forward 5'", || {
        let out = crate::run(["vrank", "bijection", "--family", "pd", "--forward", "5'"]);
        expect(
            (out.code, out.stdout.trim().to_string()),
            (0, "(4;0;0;1;0)".into()),
        )
    }),
    ("orbits --family a --n 5 --format json", || {
        let out = crate::run([
            "vrank", "orbits", "--family", "a", "--n", "5", "--format", "json",
        ]);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).map_err(err)?;
        let orbits = v["orbits"].as_array().ok_or("missing orbits")?;
        let elements: usize = orbits
            .iter()
            .map(|o| o.as_array().map_or(0, Vec::len))
            .sum();
        expect((out.code, orbits.len(), elements), (0, 4, 12))
    }),
    ("verify --family pd --max-n 300 --method series", || {
        let out = crate::run([
            "vrank", "verify", "--family", "pd", "--max-n", "300", "--method", "series",
        ]);
        expect(out.code, 0)
    }),
];
