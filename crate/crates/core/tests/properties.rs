mod common;

use proptest::prelude::*;

use common::*;
use ybe_garside::format::{parse_solution, render_solution};
use ybe_garside::{
    are_isomorphic, are_t_isomorphic, derive_f_from_g, words_equal_in_m, CensusEntry, ComplementTable,
    Permutation, PermutationSolution, Solution, TableauPresentation, Word,
};

fn entries() -> Vec<&'static CensusEntry> {
    full_census().collect()
}

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
}

fn entry() -> impl Strategy<Value = &'static CensusEntry> {
    (0..entries().len()).prop_map(|k| entries()[k])
}

fn words(n: usize, max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..n, 0..=max_len)
}

fn entry_with_words() -> impl Strategy<Value = (&'static CensusEntry, Vec<usize>, Vec<usize>)> {
    entry().prop_flat_map(|e| {
        let n = e.solution.n();
        (Just(e), words(n, 4), words(n, 4))
    })
}

fn entry_with_perm() -> impl Strategy<Value = (&'static CensusEntry, Permutation)> {
    entry().prop_flat_map(|e| (Just(e), perm(e.solution.n())))
}

/// Braided permutation solutions: `f` and `g` are powers of one permutation.
fn commuting_pair() -> impl Strategy<Value = PermutationSolution> {
    (1usize..=6)
        .prop_flat_map(|n| (perm(n), 0usize..6, 0usize..6))
        .prop_map(|(c, a, b)| PermutationSolution::new(c.pow(a), c.pow(b)).unwrap())
}

/// Arbitrary non-degenerate maps on three points.
fn raw_solution() -> impl Strategy<Value = Solution> {
    (prop::collection::vec(perm(3), 3), prop::collection::vec(perm(3), 3))
        .prop_map(|(g, f)| Solution::new(g, f).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn permutation_group_laws(p in perm(6), q in perm(6), k in 0usize..8) {
        let id = Permutation::identity(6);
        prop_assert_eq!(p.compose(&p.inverse()), id.clone());
        prop_assert_eq!(p.inverse().compose(&p), id.clone());
        prop_assert_eq!(p.pow(p.order()), id);
        prop_assert_eq!(p.pow(k + 1), p.pow(k).compose(&p));
        prop_assert_eq!(p.compose(&q).inverse(), q.inverse().compose(&p.inverse()));
        let cyc: Vec<Vec<usize>> = p.cycles();
        prop_assert_eq!(Permutation::from_cycles(6, &cyc).unwrap(), p);
    }

    #[test]
    fn twice_applied_s_is_identity_iff_involutive(s in raw_solution()) {
        let n = s.n();
        let square_is_id = (0..n).all(|i| (0..n).all(|j| {
            let (a, b) = s.s(i, j);
            s.s(a, b) == (i, j)
        }));
        prop_assert_eq!(square_is_id, s.is_involutive());
        prop_assert_eq!(s.is_braided(), braided(n, &table_of(&s)));
        if s.is_involutive() {
            prop_assert_eq!(derive_f_from_g(s.g_maps()).unwrap(), s.f_maps().to_vec());
        }
    }

    #[test]
    fn relabelling_preserves_the_canonical_form((e, phi) in entry_with_perm()) {
        let moved = e.solution.relabel(&phi);
        prop_assert_eq!(moved.canonical_form(), e.canonical.clone());
        let w = are_isomorphic(&e.solution, &moved).expect("relabelled copy is isomorphic");
        prop_assert_eq!(e.solution.relabel(&w), moved.clone());
        let back = are_isomorphic(&moved, &e.solution).expect("isomorphism is symmetric");
        prop_assert_eq!(moved.relabel(&back), e.solution.clone());
        prop_assert!(are_isomorphic(&e.solution, &e.solution).unwrap().is_identity());
    }

    #[test]
    fn relabelling_commutes_with_presentations((e, phi) in entry_with_perm()) {
        let moved = e.solution.relabel(&phi);
        let p = TableauPresentation::from_solution(&e.solution).unwrap();
        let q = TableauPresentation::from_solution(&moved).unwrap();
        prop_assert_eq!(p.relabel(&phi), q.clone());
        let w = are_t_isomorphic(&p, &q).expect("t-isomorphic");
        prop_assert_eq!(e.solution.relabel(&w), moved.clone());
        prop_assert_eq!(q.to_solution().unwrap(), moved.clone());
        prop_assert_eq!(parse_solution(&render_solution(&moved)).unwrap(), moved);
    }

    #[test]
    fn reversing_closes_the_square((e, u, v) in entry_with_words()) {
        let table = ComplementTable::new(&e.solution);
        let pres = TableauPresentation::from_solution(&e.solution).unwrap();
        let (u, v) = (Word::new(u), Word::new(v));
        let (uv, vu) = table.reverse_words(&u, &v);
        prop_assert_eq!(u.len() + uv.len(), v.len() + vu.len());
        prop_assert!(uv.len() <= v.len() && vu.len() <= u.len());
        prop_assert!(words_equal_in_m(&pres, &u.concat(&uv), &v.concat(&vu)).unwrap());
        let (vu2, uv2) = table.reverse_words(&v, &u);
        prop_assert_eq!((uv2, vu2), (uv, vu));
    }

    #[test]
    fn complement_of_a_word_in_a_letter((e, w) in entry().prop_flat_map(|e| (Just(e), words(e.solution.n(), 6))), x in 0usize..4) {
        let n = e.solution.n();
        let x = x % n;
        let table = ComplementTable::new(&e.solution);
        let (wx, _) = table.reverse_words(&Word::new(w.clone()), &Word::letter(x));
        prop_assert!(wx.len() <= 1);
        if !wx.is_empty() {
            let chained = w.iter().fold(x, |y, &h| e.solution.g(h).inverse().apply(y));
            prop_assert_eq!(wx, Word::letter(chained));
        }
    }

    #[test]
    fn lcm_does_not_depend_on_fold_order((e, phi) in entry_with_perm(), mask in 1u32..16) {
        let n = e.solution.n();
        let subset: Vec<usize> = phi.images().iter().copied().filter(|&x| mask & (1 << x) != 0).collect();
        prop_assume!(!subset.is_empty());
        let table = ComplementTable::new(&e.solution);
        let folded = table.fold_lcm(&subset);
        let sorted = table.multi_lcm(&subset);
        prop_assert_eq!(folded.len(), subset.len());
        prop_assert!(equal_in_monoid(n, &table_of(&e.solution), folded.letters(), sorted.letters()));
    }

    #[test]
    fn closed_form_iterates_agree(ps in commuting_pair()) {
        let n = ps.n();
        for k in 0..=2 * n {
            for x in 0..n {
                for y in 0..n {
                    prop_assert_eq!(ps.iterate_closed_form(k, x, y), ps.iterate(k, x, y));
                }
            }
        }
    }

    #[test]
    fn quotients_are_involutive_and_faithful(ps in commuting_pair()) {
        prop_assert!(ps.axioms().braided);
        let (q, sol) = ps.quotient_solution().unwrap();
        prop_assert!(sol.is_involutive() && sol.is_braided());
        let pres = TableauPresentation::from_solution(&sol).unwrap();
        for rel in ps.relations().relations() {
            let p = |(a, b): (usize, usize)| (q.class_of[a], q.class_of[b]);
            let (l, r) = (p(rel.lhs()), p(rel.rhs()));
            prop_assert!(l == r || pres.contains(l, r));
        }
    }

    #[test]
    fn cancellation_witnesses_use_defining_relations(ps in commuting_pair()) {
        let q = ps.quotient_map();
        let rels = ps.relations();
        let n = ps.n();
        for x in 0..n {
            for x2 in 0..n {
                let witness = ps.cancellation_witness(x, x2);
                prop_assert_eq!(witness.is_some(), q.class_of[x] == q.class_of[x2]);
                let Some(links) = witness else { continue };
                if x == x2 {
                    prop_assert!(links.is_empty());
                    continue;
                }
                prop_assert_eq!(links[0].from, x);
                prop_assert_eq!(links.last().unwrap().to, x2);
                for pair in links.windows(2) {
                    prop_assert_eq!(pair[0].to, pair[1].from);
                }
                for link in &links {
                    prop_assert_eq!(link.chain[0], (link.from, link.via));
                    prop_assert_eq!(*link.chain.last().unwrap(), (link.to, link.via));
                    for step in link.chain.windows(2) {
                        prop_assert_eq!(ps.s(step[0].0, step[0].1), step[1]);
                        prop_assert!(step[0] == step[1] || rels.contains(step[0], step[1]));
                    }
                }
            }
        }
    }
}
