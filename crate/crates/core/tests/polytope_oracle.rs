mod common;

use common::lr_homogeneous;
use stabprod::polytope::{
    affine_dimension, affine_witnesses, count_points, diagonal_shift_points, enumerate_points, face_filter,
    homogeneous_product, is_member, product_with_border, product_with_border_uncoupled,
};
use stabprod::sequence::{eval_composed, DiffOp};
use stabprod::{partition, Face, Partition, SchurExpansion, SequenceFamily};

fn decreasing_alphas(k: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                let cap = v.last().copied().unwrap_or(max);
                (0..=cap).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

fn face_sum(points: &[stabprod::PartialMatrix], degree: u32) -> SchurExpansion {
    let mut acc = SchurExpansion::zero(degree);
    for p in points {
        acc = acc.add(&SchurExpansion::basis(p.shape())).unwrap();
    }
    acc
}

fn ones(k: usize) -> DiffOp {
    DiffOp::unit(Partition::new(vec![1; k]).unwrap()).unwrap()
}

fn two_ones(k: usize) -> DiffOp {
    let mut parts = vec![2];
    parts.extend(std::iter::repeat_n(1, k - 2));
    DiffOp::unit(Partition::new(parts).unwrap()).unwrap()
}

#[test]
fn every_enumerated_point_is_a_member() {
    for alpha in decreasing_alphas(3, 2) {
        for n in 0..4 {
            let points = enumerate_points(n, &alpha).unwrap();
            assert_eq!(points.len() as u64, count_points(n, &alpha).unwrap());
            for p in &points {
                assert!(is_member(p, n, &alpha).unwrap());
            }
        }
    }
}

#[test]
fn lattice_points_match_tableau_oracle() {
    for k in 1..=3 {
        for alpha in decreasing_alphas(k, 2) {
            for n in 0..=4 {
                let rows: Vec<u32> = alpha.iter().map(|a| n + a).collect();
                let oracle = lr_homogeneous(&SchurExpansion::one(), &rows);
                assert_eq!(
                    homogeneous_product(n, &alpha).unwrap(),
                    oracle,
                    "k={k} n={n} α={alpha:?}"
                );
            }
        }
    }
}

#[test]
fn first_operator_leaves_the_first_face() {
    for k in 1..=3 {
        for alpha in decreasing_alphas(k, 2) {
            let seq = SequenceFamily::homogeneous(alpha.clone());
            for n in 1..=6 {
                let points = enumerate_points(n, &alpha).unwrap();
                let face = face_filter(&points, Face::D1K).unwrap();
                let value = eval_composed(&[ones(k)], &seq, n).unwrap();
                assert_eq!(value, face_sum(&face, seq.degree_at(n)), "k={k} n={n} α={alpha:?}");
                let below = count_points(n - 1, &alpha).unwrap();
                assert_eq!(face.len() as u64, points.len() as u64 - below);
            }
        }
    }
}

#[test]
fn second_operator_leaves_the_second_face() {
    for k in 2..=3 {
        for alpha in decreasing_alphas(k, 2) {
            let seq = SequenceFamily::homogeneous(alpha.clone());
            for n in 2..=6 {
                let d1 = |n| face_filter(&enumerate_points(n, &alpha).unwrap(), Face::D1K).unwrap();
                let face = face_filter(&d1(n), Face::D21).unwrap();
                let value = eval_composed(&[ones(k), two_ones(k)], &seq, n).unwrap();
                assert_eq!(value, face_sum(&face, seq.degree_at(n)), "k={k} n={n} α={alpha:?}");
                assert_eq!(face.len(), d1(n).len() - d1(n - 1).len());
            }
        }
    }
}

#[test]
fn fourfold_faces_match_operators() {
    let d211 = DiffOp::unit(partition![2, 1, 1]).unwrap();
    let d22 = DiffOp::unit(partition![2, 2]).unwrap();
    for alpha in [vec![0, 0, 0, 0], vec![1, 0, 0, 0], vec![1, 1, 1, 0], vec![2, 1, 0, 0]] {
        let seq = SequenceFamily::homogeneous(alpha.clone());
        for n in 3..=5 {
            let points = enumerate_points(n, &alpha).unwrap();
            let mut face = face_filter(&points, Face::D1K).unwrap();
            face = face_filter(&face, Face::D21).unwrap();
            face = face_filter(&face, Face::D211Second).unwrap();
            let ops = vec![ones(4), d211.clone(), d211.clone()];
            assert_eq!(
                eval_composed(&ops, &seq, n).unwrap(),
                face_sum(&face, seq.degree_at(n)),
                "(2,1,1)² n={n} α={alpha:?}"
            );
            if n >= 4 {
                face = face_filter(&face, Face::D22).unwrap();
                let mut ops = ops;
                ops.push(d22.clone());
                assert_eq!(
                    eval_composed(&ops, &seq, n).unwrap(),
                    face_sum(&face, seq.degree_at(n)),
                    "(2,2) n={n} α={alpha:?}"
                );
            }
        }
    }
}

#[test]
fn witnesses_span_full_dimension() {
    for k in 2..=5 {
        let mut tail = vec![2, 1, 0, 0, 0];
        tail.truncate(k);
        for alpha in [vec![0; k], tail] {
            for n in 1..=3 {
                let w = affine_witnesses(n, &alpha).unwrap();
                assert_eq!(w.len(), k * (k - 1) / 2 + 1);
                assert!(w.iter().all(|p| is_member(p, n, &alpha).unwrap()));
                assert_eq!(affine_dimension(&w), k * (k - 1) / 2);
            }
        }
    }
}

#[test]
fn diagonal_shift_points_lose_dimension_from_four_rows() {
    for k in 2..=5 {
        for n in 1..=3 {
            let alpha = vec![0; k];
            let points = diagonal_shift_points(n, &alpha).unwrap();
            assert_eq!(points.len(), k * (k - 1) / 2 + 1);
            assert!(points.iter().all(|p| is_member(p, n, &alpha).unwrap()));
            let lost = if k >= 2 { (k - 2) * (k.saturating_sub(3)) / 2 } else { 0 };
            assert_eq!(affine_dimension(&points), k * (k - 1) / 2 - lost, "k = {k}");
        }
    }
    // For k ≤ 3 the repaired list is the original one.
    assert_eq!(
        affine_witnesses(2, &[1, 0, 0]).unwrap(),
        diagonal_shift_points(2, &[1, 0, 0]).unwrap()
    );
}

#[test]
fn full_polytope_has_the_same_dimension() {
    for k in 2..=4 {
        let alpha = vec![0; k];
        let points = enumerate_points(3, &alpha).unwrap();
        assert_eq!(affine_dimension(&points), k * (k - 1) / 2);
    }
}

#[test]
fn bordered_product_matches_tableau_oracle() {
    for k in 1..=2 {
        for alpha in decreasing_alphas(k, 1) {
            for beta in Partition::all_up_to_weight(3) {
                for n in 0..=3 {
                    let rows: Vec<u32> = alpha.iter().map(|a| n + a).collect();
                    let oracle = lr_homogeneous(&SchurExpansion::basis(beta.clone()), &rows);
                    assert_eq!(
                        product_with_border(n, &alpha, &beta).unwrap(),
                        oracle,
                        "k={k} n={n} α={alpha:?} β={beta:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn uncoupled_centre_sum_overcounts() {
    let exact = product_with_border(1, &[0, 0, 0], &partition![1]).unwrap();
    let loose = product_with_border_uncoupled(1, &[0, 0, 0], &partition![1]).unwrap();
    assert_eq!(exact.multiplicity(&partition![2, 2]), 2);
    assert_eq!(loose.multiplicity(&partition![2, 2]), 3);
}
