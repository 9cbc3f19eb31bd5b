use proptest::prelude::*;

use coweight::autgroup::coweight_group;
use coweight::burnside::fixed_count;
use coweight::enumerate::{canonical_form, count_classes, sublattice_count};
use coweight::intmat::{hnf_left, hnf_right, is_hnf, is_integral_conjugate};
use coweight::simplex::{simplex_canonical, simplex_groups, tau, VertexTuple};
use coweight::{AutGroup, IntMatrix};

fn nonsingular(n: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(-4i64..=4, n * n)
        .prop_map(move |v| IntMatrix::new(n, v).unwrap())
        .prop_filter("singular", |m| m.det().unwrap() != 0)
}

#[derive(Clone, Debug)]
enum Elementary {
    AddCol(usize, usize, i64),
    Swap(usize, usize),
    Negate(usize),
}

fn elementary_matrix(n: usize, e: &Elementary) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    match *e {
        Elementary::AddCol(i, j, s) if i != j => m.set(i, j, s),
        Elementary::AddCol(..) => {}
        Elementary::Swap(i, j) => {
            m.set(i, i, 0);
            m.set(j, j, 0);
            m.set(i, j, 1);
            m.set(j, i, 1);
            if i == j {
                m.set(i, i, 1);
            }
        }
        Elementary::Negate(i) => m.set(i, i, -1),
    }
    m
}

/// Short random products of elementary unimodular matrices.
fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    let step = prop_oneof![
        (0..n, 0..n, prop_oneof![Just(1i64), Just(-1)]).prop_map(|(i, j, s)| Elementary::AddCol(i, j, s)),
        (0..n, 0..n).prop_map(|(i, j)| Elementary::Swap(i, j)),
        (0..n).prop_map(Elementary::Negate),
    ];
    prop::collection::vec(step, 0..8)
        .prop_map(move |word| word.iter().fold(IntMatrix::identity(n), |acc, e| acc.mul(&elementary_matrix(n, e)).unwrap()))
}

fn case(n: usize) -> impl Strategy<Value = (IntMatrix, IntMatrix, IntMatrix)> {
    (nonsingular(n), unimodular(n), unimodular(n))
}

fn group(n: usize) -> AutGroup {
    coweight_group(n).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn hnf_right_is_a_class_invariant((m, u, _) in (2usize..=4).prop_flat_map(case)) {
        let h = hnf_right(&m).unwrap();
        prop_assert!(is_hnf(h.matrix()));
        prop_assert_eq!(&hnf_right(&m.mul(&u).unwrap()).unwrap(), &h);
        prop_assert_eq!(h.index().unwrap(), m.det().unwrap().abs());
        prop_assert_eq!(&hnf_right(h.matrix()).unwrap(), &h);
    }

    #[test]
    fn hnf_left_is_the_transposed_right_form((m, _, u) in (2usize..=4).prop_flat_map(case)) {
        let l = hnf_left(&m).unwrap();
        prop_assert_eq!(&l, &hnf_right(&m.transpose()).unwrap().matrix().transpose());
        prop_assert_eq!(&hnf_left(&u.mul(&m).unwrap()).unwrap(), &l);
        prop_assert_eq!(&hnf_left(&l).unwrap(), &l);
    }

    #[test]
    fn determinant_is_multiplicative((a, b) in (2usize..=4).prop_flat_map(|n| (nonsingular(n), nonsingular(n)))) {
        prop_assert_eq!(a.mul(&b).unwrap().det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn integral_conjugacy_agrees_with_recomputation(
        (n, m, idx) in (2usize..=4).prop_flat_map(|n| (Just(n), nonsingular(n), any::<prop::sample::Index>()))
    ) {
        let g = group(n);
        let r = idx.get(g.elements());
        let h = hnf_right(&m).unwrap();
        let direct = is_integral_conjugate(&h, r).unwrap();
        let via_hnf = hnf_right(&r.mul(h.matrix()).unwrap()).unwrap() == h;
        prop_assert_eq!(direct, via_hnf);
    }

    #[test]
    fn canonical_form_is_orbit_invariant(
        (n, (m, u, _), idx) in (2usize..=3).prop_flat_map(|n| (Just(n), case(n), any::<prop::sample::Index>()))
    ) {
        let g = group(n);
        let r = idx.get(g.elements());
        let moved = r.mul(&m).unwrap().mul(&u).unwrap();
        prop_assert_eq!(canonical_form(&moved, &g).unwrap(), canonical_form(&m, &g).unwrap());
        let key = canonical_form(&m, &g).unwrap();
        prop_assert_eq!(key.canonical.index().unwrap(), m.det().unwrap().abs());
    }

    #[test]
    fn simplex_key_is_transposed_sublattice_key(
        (n, (t, l, _), idx, oriented) in (2usize..=3).prop_flat_map(|n| (Just(n), case(n), any::<prop::sample::Index>(), any::<bool>()))
    ) {
        let sg = simplex_groups::<i64>(n).unwrap();
        let g = group(n);
        let (right, left) = if oriented { (&sg.oriented, g.proper_subgroup().unwrap()) } else { (&sg.unoriented, g) };
        let r = idx.get(right.elements());
        let key = simplex_canonical(&t, right).unwrap();
        let moved = l.mul(&t).unwrap().mul(r).unwrap();
        prop_assert_eq!(&simplex_canonical(&moved, right).unwrap(), &key);
        let sub = canonical_form(&t.transpose(), &left).unwrap();
        prop_assert_eq!(key.transposed(), Some(sub));
    }

    #[test]
    fn vertex_moves_match_matrix_action(
        (n, t, word) in (2usize..=4).prop_flat_map(|n| (
            Just(n),
            nonsingular(n),
            prop::collection::vec(prop_oneof![
                (1..=n).prop_map(|i| (true, i, 0)),
                (0..n, 0..n).prop_map(|(i, j)| (false, i, j)),
            ], 0..10),
        ))
    ) {
        let sg = simplex_groups::<i64>(n).unwrap();
        let mut tuple = VertexTuple::from_matrix(&t);
        let mut r = IntMatrix::identity(n);
        for (to_origin, i, j) in word {
            let step = if to_origin {
                tuple = tuple.reorder_vertex_to_origin(i).unwrap();
                coweight::autgroup::p_generator::<i64>(n, i).unwrap().transpose()
            } else {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.swap(i, j);
                tuple = tuple.permute_vertices(&perm).unwrap();
                IntMatrix::permutation(&perm).unwrap()
            };
            r = r.mul(&step).unwrap();
        }
        prop_assert!(sg.unoriented.contains(&r));
        prop_assert_eq!(tuple.to_matrix().unwrap(), t.mul(&r).unwrap());
    }
}

#[test]
fn fixed_count_is_a_class_function() {
    for (n, k) in [(2usize, 12u64), (3, 6)] {
        let g = group(n);
        let elems = g.elements();
        for (a, r) in elems.iter().enumerate().step_by(3) {
            let s = &elems[(a * 7 + 5) % elems.len()];
            let conj = s.mul(r).unwrap().mul(&s.unimodular_inverse().unwrap()).unwrap();
            assert_eq!(fixed_count(&conj, n, k).unwrap(), fixed_count(r, n, k).unwrap());
        }
    }
}

#[test]
fn counts_are_monotone_under_subgroups() {
    for n in 2..=3usize {
        let g = group(n);
        let gp = g.proper_subgroup().unwrap();
        let trivial = AutGroup::trivial(n);
        for k in 1..=24u64 {
            let full = count_classes(n, k, &g).unwrap();
            let proper = count_classes(n, k, &gp).unwrap();
            let all = count_classes(n, k, &trivial).unwrap();
            assert!(full <= proper && proper <= all, "n={n} k={k}");
            assert_eq!(all as u128, sublattice_count(n, k));
            let (t, tp) = (tau::<i64>(n, k, false).unwrap(), tau::<i64>(n, k, true).unwrap());
            assert!(t <= tp && (tp as u128) <= sublattice_count(n, k));
        }
    }
}
