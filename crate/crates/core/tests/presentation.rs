mod common;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use schubert_min::partition::{partitions_within, Partition};
use schubert_min::presentation::{
    build_system, check_minimality_for, decomposable_partitions, decompose, linear_form, reduce_tall,
    tall_in_wide_span, tensor_of_form, valid_tuples, Bigrassmannian, Guard, Reduction, ValidTuple,
};
use schubert_min::symfun::FormalKey;

#[test]
fn decompositions_reassemble() {
    for phi in valid_tuples(5, 6, 4) {
        for (nu, d) in decomposable_partitions(&phi) {
            assert_eq!(d.recompose(phi.i, phi.j).unwrap(), nu);
            assert_eq!(d.nu_b.size() + d.nu_r.size(), phi.degree);
            assert_eq!(d.tall, d.nu_r.is_empty());
            assert!(d.nu_b.fits_in(phi.lower_block()) || d.nu_b.is_empty());
        }
    }
}

#[test]
fn decomposable_rows_match_definition() {
    // filter all partitions of the right size by the defining inequalities
    for phi in valid_tuples(4, 5, 3) {
        let size = phi.i * phi.j + phi.degree;
        let mut expected = Vec::new();
        for parts in common::partitions(size) {
            let allowable = common::fits(&parts, phi.r, phi.n - phi.r)
                && parts.len() >= phi.j
                && parts[..phi.j].iter().all(|&x| x >= phi.i);
            let next = parts.get(phi.j).copied().unwrap_or(0);
            if allowable && next <= phi.b && parts.len() <= phi.j + phi.a {
                expected.push(parts);
            }
        }
        let mut got: Vec<Vec<usize>> = decomposable_partitions(&phi)
            .into_iter()
            .map(|(nu, _)| nu.parts().to_vec())
            .collect();
        expected.sort();
        got.sort();
        assert_eq!(got, expected, "{phi}");
        assert_eq!(build_system(&phi).rows.len(), got.len());
    }
}

#[test]
fn forms_match_tensors_up_to_width_six() {
    for phi in valid_tuples(6, 6, 4) {
        for (nu, _) in decomposable_partitions(&phi) {
            let form = linear_form(&phi, &nu).unwrap();
            assert_eq!(form.to_tensor(), tensor_of_form(&phi, &nu).unwrap(), "{phi} {nu}");
        }
    }
}

#[test]
fn form_coefficients_against_polynomial_oracle() {
    let phi = ValidTuple::new(6, 3, 2, 2, 1, 2, 2).unwrap();
    for (nu, _) in decomposable_partitions(&phi) {
        let form = linear_form(&phi, &nu).unwrap();
        for (lambda, theta) in &build_system(&phi).variables {
            let gen = phi.generator(lambda).unwrap();
            let want = common::lr_oracle(gen.parts(), theta.parts(), nu.parts());
            assert_eq!(form.coeff(lambda, theta), BigInt::from(want), "{nu}: {lambda} {theta}");
        }
    }
}

#[test]
fn random_orders_agree_everywhere() {
    for phi in valid_tuples(4, 5, 4) {
        for (nu, d) in decomposable_partitions(&phi) {
            if !d.tall {
                continue;
            }
            let canonical = reduce_tall(&phi, &nu).unwrap();
            for seed in 0..3 {
                let mut run = Reduction::start(&phi, &nu).unwrap();
                run.run_random(&mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
                assert_eq!(run.output().unwrap(), canonical, "{phi} {nu} seed {seed}");
            }
        }
    }
}

#[test]
fn signs_and_measure_along_a_run() {
    let phi = ValidTuple::new(12, 6, 3, 3, 3, 3, 4).unwrap();
    let mut run = Reduction::start(&phi, &Partition::new(vec![3, 3, 3, 3, 1]).unwrap())
        .unwrap()
        .keep_states(true);
    let mut last = run.measure();
    while let Some(key) = run.pending().first().cloned() {
        run.step(&key).unwrap();
        let now = run.measure();
        assert!(now < last);
        last = now;
        for (k, c) in run.state().terms() {
            let positive = c > &BigInt::from(0);
            assert_eq!(positive, k.arity() % 2 == 1, "{k} has coefficient {c}");
        }
    }
    assert!(run.is_done());
}

#[test]
fn wide_partition_cannot_start() {
    let phi = ValidTuple::new(12, 6, 3, 3, 3, 3, 4).unwrap();
    let nu = Partition::new(vec![4, 3, 3, 2, 1]).unwrap();
    assert!(!decompose(&phi, &nu).unwrap().unwrap().tall);
    assert!(Reduction::start(&phi, &nu).is_err());
    let key = FormalKey::new(Partition::empty(), []);
    assert_eq!(key.arity(), 0);
}

#[test]
fn span_holds_in_small_degree() {
    for phi in valid_tuples(5, 8, 4) {
        if phi.degree <= phi.j.min(phi.n - phi.r - phi.i) {
            assert!(tall_in_wide_span(&phi).unwrap().holds, "{phi}");
        }
    }
}

#[test]
fn top_degree_generators_are_distinct_basis_elements() {
    for phi in valid_tuples(5, 6, 4) {
        let gens: Vec<Partition> = partitions_within(phi.a, phi.b, Some(phi.degree))
            .iter()
            .map(|l| phi.generator(l).unwrap())
            .collect();
        let mut sorted = gens.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), gens.len());
        assert!(gens.iter().all(|g| g.fits_in(phi.ambient())));
    }
}

#[test]
fn minimality_agrees_with_span_checks() {
    for n in 2..=8 {
        for v in Bigrassmannian::all(n) {
            if v.n - v.r > 4 {
                continue;
            }
            let report = check_minimality_for(&v, Guard::default()).unwrap();
            let p = v.params();
            for g in &report.generators {
                let degree = g.rho.size();
                if degree == 0 || p.a == 0 {
                    // the lowest generator has nothing below it
                    assert!(g.verdict.is_essential());
                    continue;
                }
                let phi = ValidTuple::new(v.n, v.r, p.i, p.j, p.a, p.b, degree).unwrap();
                let span = tall_in_wide_span(&phi).unwrap();
                assert_eq!(g.verdict.is_essential(), span.holds, "{v} rho = {}", g.rho);
            }
        }
    }
}
