use proptest::prelude::*;

use srefl_core::arith::{solve_affine, CycloMatrix, CycloNumber, Rational};
use srefl_core::groups::{build_group, GroupSpec};
use srefl_core::partitions::{
    content, enumerate_partitions, mn_character, standard_tableaux, young_orthogonal_gens,
    young_seminormal_gens, DenseMatrix, Field, Partition,
};

fn cyclo(m: u32, coeffs: &[(i64, i64)]) -> CycloNumber {
    let raw: Vec<Rational> = coeffs.iter().map(|&(n, d)| Rational::new(n, d)).collect();
    CycloNumber::reduce(&raw, m)
}

fn coeff_vec() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-9i64..=9, 1i64..=5), 1..=12)
}

fn partition_of(max: usize) -> impl Strategy<Value = Partition> {
    (1..=max, any::<prop::sample::Index>()).prop_map(|(n, idx)| {
        let all = enumerate_partitions(n as i64).unwrap();
        all[idx.index(all.len())].clone()
    })
}

fn close<T: Field>(a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> bool {
    a.data
        .iter()
        .zip(&b.data)
        .all(|(x, y)| x.sub(y).magnitude() < 1e-9)
}

fn check_coxeter<T: Field>(gens: &[DenseMatrix<T>]) -> Result<(), TestCaseError> {
    let d = gens.first().map_or(1, |g| g.rows);
    let id = DenseMatrix::<T>::identity(d);
    for (i, s) in gens.iter().enumerate() {
        prop_assert!(close(&s.mul(s), &id), "s_{} is not an involution", i + 1);
        for (j, t) in gens.iter().enumerate().skip(i + 1) {
            if j == i + 1 {
                prop_assert!(
                    close(&s.mul(t).mul(s), &t.mul(s).mul(t)),
                    "braid relation fails at {}",
                    i + 1
                );
            } else {
                prop_assert!(
                    close(&s.mul(t), &t.mul(s)),
                    "s_{} and s_{} do not commute",
                    i + 1,
                    j + 1
                );
            }
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_field_axioms(m in 1u32..=12, a in coeff_vec(), b in coeff_vec(), c in coeff_vec()) {
        let (a, b, c) = (cyclo(m, &a), cyclo(m, &b), cyclo(m, &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }
        let z = (&a * &b).to_complex() - a.to_complex() * b.to_complex();
        prop_assert!(z.norm() < 1e-6 * (1.0 + a.to_complex().norm() * b.to_complex().norm()));
    }

    #[test]
    fn roots_of_unity_have_order_dividing_m(m in 1u32..=24, k in -30i64..30) {
        let z = CycloNumber::root_of_unity(m, k);
        prop_assert!(z.pow(m).is_one());
        prop_assert_eq!(&z * &CycloNumber::root_of_unity(m, -k), CycloNumber::one(m));
    }

    #[test]
    fn affine_solutions_solve_the_system(
        m in prop::sample::select(vec![1u32, 3, 4, 5, 8]),
        rows in 1usize..=4,
        cols in 1usize..=5,
        entries in prop::collection::vec(-3i64..=3, 20),
        x in prop::collection::vec(-4i64..=4, 5),
        twist in 0i64..3,
        consistent in any::<bool>(),
    ) {
        let z = CycloNumber::root_of_unity(m, 1);
        let a_rows: Vec<Vec<CycloNumber>> = (0..rows)
            .map(|r| (0..cols).map(|c| {
                let v = CycloNumber::from_int(m, entries[r * cols + c]);
                if (r + c) as i64 % 3 == twist { &v * &z } else { v }
            }).collect())
            .collect();
        let a = CycloMatrix::from_rows(m, a_rows.clone()).unwrap();
        let xs: Vec<CycloNumber> = x[..cols].iter().map(|&v| CycloNumber::from_int(m, v)).collect();
        let apply = |v: &[CycloNumber]| -> Vec<CycloNumber> {
            a_rows.iter().map(|row| row.iter().zip(v).fold(CycloNumber::zero(m), |acc, (p, q)| &acc + &(p * q))).collect()
        };
        let mut b = apply(&xs);
        if !consistent {
            b[0] = &b[0] + &CycloNumber::one(m);
        }
        let sol = solve_affine(&a, &b).unwrap();
        prop_assert_eq!(sol.rank, a.rank());
        if consistent {
            prop_assert!(!sol.empty);
            prop_assert!(sol.contains(&xs));
        }
        if !sol.empty {
            prop_assert_eq!(sol.kernel.len(), cols - sol.rank);
            prop_assert_eq!(apply(&sol.particular), b.clone());
            for v in &sol.kernel {
                prop_assert!(apply(v).iter().all(CycloNumber::is_zero));
            }
            prop_assert!(sol.same_set(&sol.clone()));
        }
    }

    #[test]
    fn partition_invariants(lambda in partition_of(9)) {
        let n = lambda.size();
        let conj = lambda.conjugate();
        prop_assert_eq!(conj.conjugate(), lambda.clone());
        prop_assert_eq!(conj.size(), n);
        prop_assert_eq!(content(&conj), -content(&lambda));
        prop_assert_eq!(conj.corners(), lambda.corners());
        prop_assert_eq!(conj.hook_dimension(), lambda.hook_dimension());
        let identity = Partition::new(vec![1; n]).unwrap();
        prop_assert_eq!(mn_character(&lambda, &identity).unwrap(), lambda.hook_dimension() as i64);
        let full_cycle = Partition::new(vec![n]).unwrap();
        // the full cycle is nonzero only on hooks
        let hook = lambda.len() + lambda.parts()[0] == n + 1;
        prop_assert_eq!(mn_character(&lambda, &full_cycle).unwrap() != 0, hook);
        prop_assert_eq!(
            mn_character(&conj, &full_cycle).unwrap(),
            mn_character(&lambda, &full_cycle).unwrap() * if n % 2 == 0 { -1 } else { 1 }
        );
    }

    #[test]
    fn young_forms_satisfy_coxeter_relations(lambda in partition_of(6)) {
        prop_assume!(lambda.size() >= 2);
        let dim = lambda.hook_dimension() as usize;
        prop_assert_eq!(standard_tableaux(&lambda).len(), dim);
        let exact = young_seminormal_gens(&lambda);
        let float = young_orthogonal_gens(&lambda);
        prop_assert_eq!(exact.len(), lambda.size() - 1);
        check_coxeter(&exact)?;
        check_coxeter(&float)?;
        for s in &float {
            for r in 0..dim {
                for c in 0..dim {
                    prop_assert!((s.get(r, c) - s.get(c, r)).abs() < 1e-12);
                }
            }
        }
        // both forms share the trace of every generator
        for (e, f) in exact.iter().zip(&float) {
            let te: f64 = (0..dim).map(|i| e.get(i, i).to_f64()).sum();
            let tf: f64 = (0..dim).map(|i| f.get(i, i)).sum();
            prop_assert!((te - tf).abs() < 1e-9);
        }
    }

    #[test]
    fn group_law_matches_matrices(spec in prop::sample::select(vec![
        GroupSpec::Cyclic(2), GroupSpec::Cyclic(5), GroupSpec::Cyclic(8),
        GroupSpec::Dicyclic(2), GroupSpec::Dicyclic(3), GroupSpec::Dicyclic(6),
    ]), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let g = build_group(spec).unwrap();
        let els = g.enumerate_elements().unwrap();
        prop_assert_eq!(els.len(), g.order);
        let a = &els[i.index(els.len())];
        let b = &els[j.index(els.len())];
        let ab = g.multiply(a.word, b.word);
        prop_assert_eq!(g.tautological_matrix(ab), a.matrix.mul(&b.matrix).unwrap());
        let conj = g.multiply(g.multiply(b.word, a.word), g.inverse(b.word));
        prop_assert_eq!(g.class_of(conj), a.class);
        prop_assert!(a.matrix.determinant().unwrap().is_one());
    }
}
