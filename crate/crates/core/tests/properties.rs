use charvar::classify::{admissible_twists, classify_component, QFactorial};
use charvar::dimensions::{codim_reducible_bound, dim_ch, dim_rep, Genus};
use charvar::groupdatum::{dims, CenterElement, Factor, ReductiveGroupDatum};
use charvar::lattices::{
    commutator_rank, fixed_rank, intersection_rank, random_unimodular, sample_commuting_action,
    verify_torus_lemma,
};
use charvar::linalg::{Matrix, GaussianRational};
use charvar::parabolics::center_weights_on_u;
use charvar::rootdata::{build_root_system, Family, SimpleTypeRank};
use charvar::tangent::{centralizer_dim, dmu_matrix, quaternion_pair, tangent_dim, SurfaceTuple};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn simple_type() -> impl Strategy<Value = SimpleTypeRank> {
    let all = SimpleTypeRank::all_up_to(8);
    (0..all.len()).prop_map(move |i| all[i])
}

fn datum() -> impl Strategy<Value = ReductiveGroupDatum> {
    (
        prop::collection::vec((simple_type(), any::<bool>()), 0..3),
        0usize..3,
    )
        .prop_map(|(fs, torus)| {
            let factors = fs
                .into_iter()
                .map(|(t, ad)| if ad { Factor::adjoint(t) } else { Factor::simply_connected(t) })
                .collect();
            ReductiveGroupDatum::new(factors, torus)
        })
}

fn genus() -> impl Strategy<Value = Genus> {
    (2u32..12).prop_map(|g| Genus::new(g).unwrap())
}

proptest! {
    #[test]
    fn rep_minus_ch_is_dim_g_minus_dim_z(d in datum(), g in genus()) {
        let (dg, dz) = dims(&d);
        prop_assert_eq!(dim_rep(&d, g) - dim_ch(&d, g), dg - dz);
        let next = Genus::new(g.get() + 1).unwrap();
        prop_assert!(dim_ch(&d, next) >= dim_ch(&d, g));
    }

    #[test]
    fn reducible_bound_grows_with_genus(t in simple_type(), g in genus(), node in 0usize..8) {
        let rs = build_root_system(t);
        let node = node % rs.rank();
        let levi: Vec<usize> = (0..rs.rank()).filter(|&i| i != node).collect();
        let next = Genus::new(g.get() + 1).unwrap();
        prop_assert!(
            codim_reducible_bound(&rs, next, &levi).unwrap()
                >= codim_reducible_bound(&rs, g, &levi).unwrap()
        );
    }

    #[test]
    fn verdicts_are_monotone_and_identity_is_q_factorial(d in datum(), g in genus()) {
        let next = Genus::new(g.get() + 1).unwrap();
        for z in admissible_twists(&d).into_iter().take(8) {
            let v = classify_component(&d, g, &z).unwrap();
            if v.terminal.value {
                prop_assert!(classify_component(&d, next, &z).unwrap().terminal.value);
            }
            prop_assert_eq!(v.q_factorial.value == QFactorial::True, z.is_identity());
        }
        let id = CenterElement::identity(&d);
        prop_assert_eq!(classify_component(&d, g, &id).unwrap().q_factorial.value, QFactorial::True);
    }

    #[test]
    fn no_a1_factor_means_terminal(d in datum()) {
        let has_a1 = d.factors().iter().any(|f| f.typerank.family() == Family::A && f.typerank.rank() == 1);
        prop_assume!(!has_a1);
        let g = Genus::new(2).unwrap();
        for z in admissible_twists(&d).into_iter().take(8) {
            prop_assert!(classify_component(&d, g, &z).unwrap().terminal.value);
        }
    }

    #[test]
    fn torus_lemma_is_basis_independent(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let act = sample_commuting_action(&mut rng, 6, 8);
        prop_assert!(verify_torus_lemma(&act));
        let (u, u_inv) = random_unimodular(&mut rng, act.rank(), 3);
        let conj = act.conjugate(&u, &u_inv).unwrap();
        prop_assert_eq!(fixed_rank(&conj), fixed_rank(&act));
        prop_assert_eq!(commutator_rank(&conj), commutator_rank(&act));
        prop_assert_eq!(intersection_rank(&conj), 0);
    }

    #[test]
    fn tangent_rank_nullity(kinds in prop::collection::vec(0u8..3, 2..4), p in 1i64..4, q in 1i64..4) {
        // 0: quaternion pair, 1: commuting diagonal pair, 2: identity pair
        let (a, b) = quaternion_pair();
        let diag = |k: i64| {
            let two = GaussianRational::from_ints(2, 0);
            let mut x = GaussianRational::from_ints(1, 0);
            for _ in 0..k {
                x = x * two.clone();
            }
            let inv = GaussianRational::from_ints(1, 0) / x.clone();
            Matrix::from_rows(vec![
                vec![x, GaussianRational::from_ints(0, 0)],
                vec![GaussianRational::from_ints(0, 0), inv],
            ])
        };
        let mut matrices = Vec::new();
        let mut quaternions = 0;
        for k in &kinds {
            match k {
                0 => {
                    quaternions += 1;
                    matrices.push(a.clone());
                    matrices.push(b.clone());
                }
                1 => {
                    matrices.push(diag(p));
                    matrices.push(diag(q));
                }
                _ => {
                    matrices.push(Matrix::identity(2));
                    matrices.push(Matrix::identity(2));
                }
            }
        }
        let twist = if quaternions % 2 == 0 { 1 } else { -1 };
        let g = Genus::new(kinds.len() as u32).unwrap();
        let t = SurfaceTuple::new(g, matrices, twist).unwrap();
        let d = dmu_matrix(&t);
        prop_assert_eq!(d.rank() + d.kernel_dim(), 6 * kinds.len());
        if centralizer_dim(&t) == 0 {
            prop_assert_eq!(tangent_dim(&t), (2 * kinds.len() - 1) * 3);
        }
        // the image of the differential is the complement of the centralizer
        prop_assert_eq!(d.rank(), 3 - centralizer_dim(&t));
    }
}

/// Weights of the Levi center on U found by searching small coroot-lattice
/// cocharacters directly.
#[test]
fn center_weights_match_brute_force() {
    for name in ["A2", "A3", "B3", "C3", "C2", "G2", "B4", "C4", "D4", "F4", "A4"] {
        let rs = build_root_system(name.parse().unwrap());
        let r = rs.rank();
        let cartan = rs.cartan();
        for k in 0..r {
            let levi: Vec<usize> = (0..r).filter(|&i| i != k).collect();
            let bound = 8i64;
            let mut best: Option<(i64, Vec<i64>)> = None;
            let mut c = vec![-bound; r];
            loop {
                let pair = |i: usize| (0..r).map(|j| c[j] * cartan[i][j]).sum::<i64>();
                if levi.iter().all(|&i| pair(i) == 0) {
                    let pk = pair(k);
                    if pk > 0 && best.as_ref().is_none_or(|(b, _)| pk < *b) {
                        best = Some((pk, c.clone()));
                    }
                }
                let mut idx = 0;
                while idx < r && c[idx] == bound {
                    c[idx] = -bound;
                    idx += 1;
                }
                if idx == r {
                    break;
                }
                c[idx] += 1;
            }
            let (_, lam) = best.unwrap_or_else(|| panic!("{name} node {k}: no generator in the search box"));
            let weights = center_weights_on_u(&rs, &levi).unwrap();
            for root in rs.positive_roots().iter().filter(|x| x.coords()[k] > 0) {
                let w: i64 = (0..r)
                    .map(|i| root.coords()[i] * (0..r).map(|j| lam[j] * cartan[i][j]).sum::<i64>())
                    .sum();
                assert!(w > 0, "{name} node {k}");
                assert_eq!(weights[root], w, "{name} node {k} root {root}");
            }
            assert_eq!(weights.len(), rs.positive_roots().iter().filter(|x| x.coords()[k] > 0).count());
        }
    }
}
