use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use cliquecover::cover_state::{build_locally_minimal_state, CoverState};
use cliquecover::degeneracy::DegeneracyContext;
use cliquecover::drivers::{solve_ecc, Engine};
use cliquecover::f1;
use cliquecover::f2;
use cliquecover::instance::{ProblemInstance, SearchLimits, Weights};
use cliquecover::io;
use cliquecover::oracle;
use cliquecover::reduction::reduce_ecc;
use cliquecover::verify::verify_solution;
use cliquecover::Graph;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut e = Vec::new();
            let mut bit = bits.iter();
            for u in 0..n {
                for v in u + 1..n {
                    if *bit.next().unwrap() {
                        e.push((u, v));
                    }
                }
            }
            Graph::new(n, e).unwrap()
        })
    })
}

fn weights() -> impl Strategy<Value = Weights> {
    let ratio = (1i64..1000, 1i64..50).prop_map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)));
    (
        prop::collection::btree_map((0usize..12, 0usize..12).prop_filter("no loops", |(u, v)| u < v), ratio.clone(), 0..10),
        prop::collection::btree_map(0usize..12, ratio, 0..4),
    )
        .prop_map(|(edges, vertices): (BTreeMap<_, _>, BTreeMap<_, _>)| Weights { edges, vertices })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn edge_list_round_trip(g in graph(12)) {
        let back = io::parse_edge_list(&io::serialize_edge_list(&g)).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn dimacs_round_trip(g in graph(12)) {
        let back = io::parse_dimacs(&io::serialize_dimacs(&g)).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn weights_round_trip(w in weights()) {
        let back = io::parse_weights(&io::serialize_weights(&w)).unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn ecc_engines_match_oracle(g in graph(7)) {
        let (kstar, _) = oracle::oracle_min_ecc(&g).unwrap();
        for k in kstar.saturating_sub(1)..=kstar + 1 {
            for r in [f1::eccs(&g, k), f2::eccs2(&g, k), f1::eccg_baseline(&g, k)] {
                prop_assert_eq!(r.is_yes(), k >= kstar);
                if let Some(s) = &r.solution {
                    let p = ProblemInstance::Ecc { graph: g.clone(), k };
                    prop_assert!(verify_solution(&p, s).is_ok());
                }
            }
        }
    }

    #[test]
    fn acc_engines_match_oracle(g in graph(6)) {
        let (tstar, _) = oracle::oracle_min_assignment(&g).unwrap();
        for t in tstar.saturating_sub(1)..=tstar {
            prop_assert_eq!(f1::accs(&g, t, &[], &[]).is_yes(), t >= tstar);
            let r = f2::accs2(&g, t, &[]);
            prop_assert_eq!(r.is_yes(), t >= tstar);
            prop_assert!(r.stats.max_depth <= t);
        }
    }

    #[test]
    fn reduced_ecc_matches_oracle(g in graph(7), slack in 0usize..2) {
        let (kstar, _) = oracle::oracle_min_ecc(&g).unwrap();
        let k = (kstar + slack).saturating_sub(1);
        let red = reduce_ecc(&g, k);
        if red.is_no() {
            prop_assert!(k < kstar);
        }
        let out = solve_ecc(&g, k, Engine::F2, true, SearchLimits::default());
        prop_assert_eq!(out.result.is_yes(), k >= kstar);
        if let Some(s) = &out.result.solution {
            let p = ProblemInstance::Ecc { graph: g.clone(), k };
            prop_assert!(verify_solution(&p, s).is_ok());
        }
    }

    #[test]
    fn eccs2_tree_bounds(g in graph(8), extra in 0usize..2) {
        let (kstar, _) = oracle::oracle_min_ecc(&g).unwrap();
        let k = kstar + extra;
        let r = f2::eccs2(&g, k);
        prop_assert!(r.is_yes());
        let d = DegeneracyContext::new(&g).d;
        prop_assert!(r.stats.max_depth <= oracle::clique_number(&g) * k);
        prop_assert!(r.stats.max_branching <= k.min(d * (d + 1) / 2));
        if g.m() > 0 {
            prop_assert!(r.stats.peak_representatives < 2 * g.m() + k * g.max_degree());
        }
    }

    #[test]
    fn cover_state_undo(g in graph(8), script in prop::collection::vec((any::<prop::sample::Index>(), any::<prop::sample::Index>(), any::<bool>()), 1..16)) {
        prop_assume!(g.m() > 0);
        let mut st = CoverState::new(&g);
        let mut snaps = Vec::new();
        for (e, l, fresh) in script {
            let (x, y) = g.edges()[e.index(g.m())];
            let cands = st.common_reps(x, y);
            snaps.push(st.snapshot());
            if fresh || cands.is_empty() {
                st.add_new_clique(x, y).unwrap();
            } else {
                st.apply_cover_edge(x, y, cands[l.index(cands.len())]).unwrap();
            }
            st.check_invariants();
        }
        while let Some(want) = snaps.pop() {
            match st.journal().last().unwrap().kind {
                cliquecover::cover_state::FrameKind::CoverEdge => st.undo_last_cover_edge().unwrap(),
                cliquecover::cover_state::FrameKind::NewClique => st.remove_last_clique().unwrap(),
            }
            prop_assert_eq!(st.snapshot(), want);
        }
    }

    #[test]
    fn locally_minimal_properties(g in graph(10), order_seed in any::<u64>(), picks in prop::collection::vec(any::<prop::sample::Index>(), 64)) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut order = g.edges().to_vec();
        order.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(order_seed));
        let mut i = 0;
        let st = build_locally_minimal_state(&g, &order, &mut |c: &[usize]| {
            i += 1;
            picks[i % picks.len()].index(c.len())
        });
        prop_assert!(st.all_edges_covered());
        let cover = st.cliques();
        for (a, ca) in cover.iter().enumerate() {
            for cb in &cover[a + 1..] {
                prop_assert!(!ca.iter().all(|v| cb.contains(v)));
                prop_assert!(!cb.iter().all(|v| ca.contains(v)));
            }
        }
        prop_assert!(cover.len() <= g.n() * g.n() / 4);
        prop_assert!(cover.iter().map(Vec::len).sum::<usize>() <= 2 * g.m());
        for x in g.vertices() {
            prop_assert!(st.memberships(x) as usize <= g.degree(x));
        }
    }
}
