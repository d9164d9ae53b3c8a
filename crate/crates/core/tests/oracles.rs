//! Brute-force oracles checked against the library routines.

use proptest::prelude::*;
use qn_core::congruence;
use qn_core::constructions::{double, greedy_dominating_set, hamming_perfect_code};
use qn_core::solver::{naive_min_dominating, solve_min_dominating, SearchConfig};
use qn_core::surfeit::{surfeit_of_set, zeta_m1, zeta_m2, Analysis, SurfeitProfile, TClass};
use qn_core::{CubeDim, DominatingSet, Vertex, VertexSet};

fn dim(n: u32) -> CubeDim {
    CubeDim::new(n).unwrap()
}

/// `|N[v] ∩ D|` by scanning every vertex of the cube.
fn brute_cover(d: &DominatingSet, v: Vertex) -> u32 {
    d.dim()
        .vertices()
        .filter(|&u| u.distance(v) <= 1 && d.contains(u))
        .count() as u32
}

/// Smallest dominating subset found by checking every subset of the cube in
/// increasing popcount order of the subset index.
fn brute_gamma(n: u32) -> usize {
    let order = 1usize << n;
    let full = (1u64 << order) - 1;
    let cover: Vec<u64> = (0..order)
        .map(|v| {
            (0..order)
                .filter(|&u| ((u ^ v) as u32).count_ones() <= 1)
                .fold(0u64, |m, u| m | 1 << u)
        })
        .collect();
    (1u64..1 << order)
        .filter(|&sub| {
            (0..order)
                .filter(|&i| sub >> i & 1 == 1)
                .fold(0u64, |m, i| m | cover[i])
                == full
        })
        .map(|sub| sub.count_ones() as usize)
        .min()
        .unwrap()
}

#[test]
fn subset_enumeration_oracle_small_n() {
    // 2^(2^n) subsets: n <= 4
    let expected = [1usize, 2, 2, 4];
    for n in 1..=4 {
        assert_eq!(brute_gamma(n), expected[n as usize - 1]);
        assert_eq!(
            naive_min_dominating(dim(n)).unwrap().optimum,
            expected[n as usize - 1]
        );
    }
}

#[test]
fn solver_agrees_with_naive_oracle() {
    for n in 1..=5 {
        let naive = naive_min_dominating(dim(n)).unwrap();
        assert!(naive.proven_optimal);
        for symmetry in [true, false] {
            let r = solve_min_dominating(
                dim(n),
                &SearchConfig {
                    symmetry,
                    ..Default::default()
                },
            )
            .unwrap();
            assert!(r.proven_optimal);
            assert_eq!(r.optimum, naive.optimum, "n={n}");
            assert!(r.witness.revalidate());
            assert_eq!(r.witness.len(), r.optimum);
        }
    }
    assert_eq!(naive_min_dominating(dim(5)).unwrap().optimum, 7);
}

#[test]
fn solver_witnesses_are_minimal() {
    for n in 1..=6 {
        let r = solve_min_dominating(dim(n), &SearchConfig::default()).unwrap();
        for v in r.witness.iter() {
            let mut smaller = r.witness.members().clone();
            smaller.remove(v);
            assert!(DominatingSet::new(smaller).is_err(), "n={n} drop {v}");
        }
    }
}

fn q6_witness() -> DominatingSet {
    solve_min_dominating(dim(6), &SearchConfig::default())
        .unwrap()
        .witness
}

fn q12_doubled() -> DominatingSet {
    let mut d = q6_witness();
    for _ in 0..6 {
        d = double(&d).unwrap();
    }
    d
}

fn corpus() -> Vec<DominatingSet> {
    let mut out = vec![
        hamming_perfect_code(2).unwrap(),
        hamming_perfect_code(3).unwrap(),
        q6_witness(),
        q12_doubled(),
    ];
    for n in 1..=10 {
        out.push(greedy_dominating_set(dim(n)).unwrap());
    }
    let mut d = hamming_perfect_code(2).unwrap();
    for _ in 0..4 {
        d = double(&d).unwrap();
        out.push(d.clone());
    }
    out
}

#[test]
fn excess_matches_brute_force_and_identity() {
    for d in corpus() {
        let p = d.excess_profile();
        assert!(p.identity_holds(), "{}", d.dim());
        if d.dim().get() <= 8 {
            for v in d.dim().vertices() {
                assert_eq!(p.excess(v) + 1, brute_cover(&d, v));
            }
        }
        let full = VertexSet::full(d.dim());
        assert_eq!(d.excess_of_set(&full).unwrap(), p.total());
    }
}

#[test]
fn zeta_methods_agree_on_corpus() {
    for d in corpus() {
        let p = d.excess_profile();
        let sp = SurfeitProfile::new(&d, &p).unwrap();
        let direct = surfeit_of_set(&VertexSet::full(d.dim()), &d).unwrap();
        assert_eq!(zeta_m1(&p), direct, "{}", d.dim());
        assert_eq!(zeta_m2(&sp), direct, "{}", d.dim());
        assert_eq!(sp.outside_count(), (d.dim().order() - d.len()) as u64);
    }
}

#[test]
fn q6_and_q12_values() {
    let d6 = q6_witness();
    assert_eq!(d6.len(), 12);
    let r = Analysis::new(&d6).report().unwrap();
    assert_eq!(r.delta_total, 20);
    assert_eq!(r.zeta_max, 48);
    assert!(r.methods_agree());

    let d12 = q12_doubled();
    assert_eq!(d12.len(), 768);
    let r = Analysis::new(&d12).report().unwrap();
    assert_eq!(r.delta_total, 5888);
    assert_eq!(r.zeta_max, 61440);
    assert!(r.methods_agree());
    let l5 = Analysis::new(&d12).lemma5().unwrap();
    assert_eq!(l5.rhs_x2, 2 * (2 * 5888 - 61440));
    assert_eq!(l5.lhs_x2, 0);
}

/// `T_i(v)` straight from the definitions, using explicit set operations.
fn brute_t(d: &DominatingSet, v: Vertex) -> [VertexSet; 5] {
    let dim = d.dim();
    let p = d.excess_profile();
    let nv = dim.closed_neighborhood(v).unwrap();
    let mut t: [VertexSet; 5] = std::array::from_fn(|_| VertexSet::new(dim));
    for u in dim.vertices().filter(|&u| p.excess(u) == 1) {
        let dist = dim.distance(u, v).unwrap();
        let mut common = dim.closed_neighborhood(u).unwrap();
        common.intersect_with(&nv).unwrap();
        common.intersect_with(d.members()).unwrap();
        let slot = match (dist, d.contains(u), common.len()) {
            (1, false, _) => 0,
            (1, true, _) => 4,
            (2, _, 0) => 1,
            (2, _, 2) => 2,
            (2, _, 1) => 3,
            _ => continue,
        };
        t[slot].insert(u).unwrap();
    }
    t
}

fn check_partitions(d: &DominatingSet) -> usize {
    let a = Analysis::new(d);
    let dim = d.dim();
    let delta1 = a.excess().class(1);
    let mut centres = 0;
    for v in a.c().iter() {
        centres += 1;
        let part = a.t_partition(v).unwrap();
        assert_eq!(part.t, brute_t(d, v), "centre {v}");
        let mut ring = dim.sphere(v, 1).unwrap();
        ring.union_with(&dim.sphere(v, 2).unwrap()).unwrap();
        ring.intersect_with(&delta1).unwrap();
        let total: usize = part.t.iter().map(|t| t.len()).sum();
        assert_eq!(total, ring.len());
        for i in 0..5 {
            assert!(part.s[i].is_subset(&part.t[i]));
            for j in i + 1..5 {
                assert!(part.t[i].is_disjoint(&part.t[j]));
            }
        }
        let mut t15 = part.t(TClass::T1).clone();
        t15.union_with(part.t(TClass::T5)).unwrap();
        let mut n1 = dim.sphere(v, 1).unwrap();
        n1.intersect_with(&delta1).unwrap();
        assert_eq!(t15, n1);
    }
    centres
}

#[test]
fn t_partition_matches_definitions() {
    assert_eq!(check_partitions(&q6_witness()), 4);
    assert!(check_partitions(&q12_doubled()) > 0);
    check_partitions(&greedy_dominating_set(dim(9)).unwrap());
}

fn random_dominating(n: u32, extra: Vec<u32>, drop: Vec<u32>) -> DominatingSet {
    let dim = dim(n);
    let mut s = VertexSet::full(dim);
    // thin the full cube while it stays dominating, then add back extras
    for m in drop {
        let v = Vertex::from_mask(m % dim.order() as u32);
        let mut t = s.clone();
        t.remove(v);
        if qn_core::domination::is_dominating(&t) {
            s = t;
        }
    }
    for m in extra {
        s.insert(Vertex::from_mask(m % dim.order() as u32)).unwrap();
    }
    DominatingSet::new(s).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_q6_sets_satisfy_congruences_and_lemmas(
        drop in prop::collection::vec(0u32..64, 40..200),
        extra in prop::collection::vec(0u32..64, 0..6),
    ) {
        let d = random_dominating(6, extra, drop);
        let c = congruence::check(&d).unwrap();
        prop_assert!(c.is_clean(), "{:?}", c);
        let a = Analysis::new(&d);
        prop_assert!(a.lemma1().unwrap().violations.is_empty());
        prop_assert!(a.lemma2().unwrap().violations.is_empty());
        prop_assert!(a.lemma3().unwrap().violations.is_empty());
        prop_assert!(a.report().unwrap().methods_agree());
        prop_assert!(a.surfeit().histogram().all(|(s, _)| s >= 0 && s % 2 == 0));
    }

    #[test]
    fn random_sets_excess_and_zeta(
        n in 1u32..=7,
        drop in prop::collection::vec(0u32..128, 0..300),
        extra in prop::collection::vec(0u32..128, 0..8),
    ) {
        let d = random_dominating(n, extra, drop);
        let p = d.excess_profile();
        prop_assert!(p.identity_holds());
        for v in d.dim().vertices() {
            prop_assert_eq!(p.excess(v) + 1, brute_cover(&d, v));
        }
        let sp = SurfeitProfile::new(&d, &p).unwrap();
        let direct = surfeit_of_set(&VertexSet::full(d.dim()), &d).unwrap();
        prop_assert_eq!(zeta_m1(&p), direct);
        prop_assert_eq!(zeta_m2(&sp), direct);
        prop_assert!(zeta_m1(&p) <= qn_core::surfeit::zeta_max(&p));
        prop_assert_eq!(zeta_m1(&p) == qn_core::surfeit::zeta_max(&p), p.c_size() == 0);
        prop_assert!(double(&d).unwrap().revalidate());
    }
}
