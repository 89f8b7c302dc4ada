mod common;

use isobar::certificate::{check_certificate, has_equal_split, weight_pattern, WeightPattern};
use isobar::construction::{build_triangulation, f_vector, ConstructionParams, FVector};
use isobar::{certify_non_hamiltonian, face_weights, grinberg_map, Certificate};

#[test]
fn layer_lengths_and_inside_edges() {
    for (alpha, beta) in [(1, 2), (1, 5), (2, 2), (3, 2), (2, 5)] {
        let params = ConstructionParams::new(alpha, beta).unwrap();
        let t = build_triangulation(params).unwrap();
        assert_eq!(t.layers.len(), alpha as usize + 1);
        for layer in &t.layers {
            let i = layer.index;
            let expected = 3u64.pow(alpha + 1 - i) * 4u64.pow(i - 1) * beta;
            assert_eq!(layer.cycle.len() as u64, expected);
            assert_eq!(layer.expected_length, expected);
            assert!(layer.inside_edges.iter().all(|&k| k == 2));
        }
        assert_eq!(t.map.degree(t.hub) as u64, 3u64.pow(alpha) * beta);
        assert_eq!(t.map.degree(t.apex) as u64, 4u64.pow(alpha) * beta);
        assert_eq!(t.map.vertex_count() as u64, params.vertex_count().unwrap());
        assert!(t.map.faces().iter().all(|f| f.len() == 3));
    }
}

#[test]
fn dual_weights_and_certificate() {
    for (alpha, beta) in [(1, 2), (1, 5), (1, 8), (2, 2), (2, 5)] {
        let params = ConstructionParams::new(alpha, beta).unwrap();
        let g = grinberg_map(params).unwrap();
        assert!((0..g.vertex_count()).all(|v| g.degree(v) == 3));
        let hub_weight = 3i64.pow(alpha) * beta as i64 - 2;
        let apex_weight = 4i64.pow(alpha) * beta as i64 - 2;
        let weights = face_weights(&g);
        assert!(weights.iter().all(|&w| w == 3 || w == 6 || w == hub_weight || w == apex_weight));
        assert_eq!(weights.iter().sum::<i64>(), 2 * (g.vertex_count() as i64 - 2));
        let cert = certify_non_hamiltonian(&g, 32).unwrap().unwrap();
        assert_eq!(cert, Certificate::CaseA { face: 1, weight: hub_weight });
        assert!(check_certificate(&g, &cert));
    }
}

#[test]
fn census_of_smallest_dual() {
    let g = grinberg_map(ConstructionParams::new(1, 2).unwrap()).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (52, 78, 28));
    assert_eq!(f_vector(&g), FVector::from_counts(&[(5, 22), (6, 1), (8, 5)], None));
}

#[test]
fn residue_weight_patterns() {
    let expand = |parts: &[(i64, usize)]| -> Vec<i64> {
        parts.iter().flat_map(|&(w, n)| std::iter::repeat_n(w, n)).collect()
    };
    let first = expand(&[(7, 1), (3, 21), (6, 3)]);
    assert_eq!(weight_pattern(&first), WeightPattern::CaseA { residue: 1 });
    assert!(!has_equal_split(&first));

    let second = expand(&[(2, 1), (3, 18), (6, 4)]);
    assert_eq!(weight_pattern(&second), WeightPattern::CaseA { residue: 2 });
    assert!(!has_equal_split(&second));

    let third = expand(&[(4, 3), (3, 18), (6, 3)]);
    assert_eq!(weight_pattern(&third), WeightPattern::CaseB { residue: 1 });
    assert!(has_equal_split(&third));
}

#[test]
fn parameter_errors() {
    let err = ConstructionParams::new(1, 4).unwrap_err();
    assert_eq!(err.to_string(), "beta must be ≡ 2 (mod 3)");
    assert!(ConstructionParams::new(1, 0).is_err());
    assert!(ConstructionParams::new(0, 2).is_err());
}
