use proptest::prelude::*;
use qn_core::cube::binomial;
use qn_core::{CubeDim, SetDistance, Vertex, VertexSet};

fn arb_dim_vertex() -> impl Strategy<Value = (CubeDim, Vertex)> {
    (1u32..=10).prop_flat_map(|n| {
        (0u32..1 << n).prop_map(move |m| (CubeDim::new(n).unwrap(), Vertex::from_mask(m)))
    })
}

proptest! {
    #[test]
    fn spheres_partition_the_cube((dim, v) in arb_dim_vertex()) {
        let mut seen = VertexSet::new(dim);
        for i in 0..=dim.get() {
            let s = dim.sphere(v, i).unwrap();
            prop_assert_eq!(s.len() as u64, binomial(dim.get(), i));
            prop_assert!(s.is_disjoint(&seen));
            prop_assert!(s.iter().all(|u| u.distance(v) == i));
            seen.union_with(&s).unwrap();
        }
        prop_assert_eq!(seen, VertexSet::full(dim));
    }

    #[test]
    fn closed_neighborhood_is_ball_of_radius_one((dim, v) in arb_dim_vertex()) {
        let mut ball = dim.sphere(v, 0).unwrap();
        let s1 = dim.sphere(v, 1).unwrap();
        prop_assert!(ball.is_disjoint(&s1));
        ball.union_with(&s1).unwrap();
        prop_assert_eq!(dim.closed_neighborhood(v).unwrap(), ball);
    }

    #[test]
    fn distance_is_a_metric(a in 0u32..1024, b in 0u32..1024, c in 0u32..1024) {
        let dim = CubeDim::new(10).unwrap();
        let (a, b, c) = (Vertex::from_mask(a), Vertex::from_mask(b), Vertex::from_mask(c));
        let d = |x, y| dim.distance(x, y).unwrap();
        prop_assert_eq!(d(a, b), d(b, a));
        prop_assert_eq!(d(a, b) == 0, a == b);
        prop_assert!(d(a, c) <= d(a, b) + d(b, c));
    }

    #[test]
    fn coord_union_agrees_with_filter(masks in prop::collection::vec(0u32..256, 0..20)) {
        let dim = CubeDim::new(8).unwrap();
        let s = VertexSet::from_vertices(dim, masks.iter().map(|&m| Vertex::from_mask(m))).unwrap();
        let g = s.coord_union();
        for a in 1..=8 {
            let sa = s.filter_by_coord(a).unwrap();
            prop_assert!(sa.is_subset(&s));
            prop_assert_eq!(g.contains(a), !sa.is_empty());
        }
    }

    #[test]
    fn neighborhood_of_sets_is_monotone(
        a in prop::collection::vec(0u32..128, 0..12),
        b in prop::collection::vec(0u32..128, 0..12),
    ) {
        let dim = CubeDim::new(7).unwrap();
        let sa = VertexSet::from_vertices(dim, a.iter().map(|&m| Vertex::from_mask(m))).unwrap();
        let mut sb = sa.clone();
        for &m in &b {
            sb.insert(Vertex::from_mask(m)).unwrap();
        }
        prop_assert!(sa.closed_neighborhood().is_subset(&sb.closed_neighborhood()));
    }

    #[test]
    fn distance_to_set_matches_minimum(
        masks in prop::collection::vec(0u32..256, 1..10),
        u in 0u32..256,
        cap in 0u32..9,
    ) {
        let dim = CubeDim::new(8).unwrap();
        let s = VertexSet::from_vertices(dim, masks.iter().map(|&m| Vertex::from_mask(m))).unwrap();
        let u = Vertex::from_mask(u);
        let exact = s.iter().map(|w| w.distance(u)).min().unwrap();
        let got = s.distance_to(u, cap);
        if exact <= cap {
            prop_assert_eq!(got, SetDistance::Exact(exact));
        } else {
            prop_assert_eq!(got, SetDistance::Beyond(cap));
        }
    }
}
