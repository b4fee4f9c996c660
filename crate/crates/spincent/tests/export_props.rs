use proptest::prelude::*;

use spincent::export::{
    encode_gaussian, encode_rational, format_gaussian, format_rational, parse_gaussian, parse_rational, MatrixSet,
};
use spincent_core::scalar::{frac, Gaussian, Rational};
use spincent_core::sparse::SparseMatrix;

fn rational() -> impl Strategy<Value = Rational> + Clone {
    (any::<i64>(), 1i64..=i64::MAX).prop_map(|(p, q)| frac(p, q))
}

fn gaussian() -> impl Strategy<Value = Gaussian> + Clone {
    (rational(), rational()).prop_map(|(re, im)| Gaussian::new(re, im))
}

fn square<T: Clone + std::fmt::Debug>(entry: impl Strategy<Value = T> + Clone) -> impl Strategy<Value = Vec<Vec<T>>> {
    (1usize..=5).prop_flat_map(move |n| prop::collection::vec(prop::collection::vec(entry.clone(), n), n))
}

fn set(field: &str, matrices: Vec<Vec<Vec<String>>>) -> MatrixSet {
    MatrixSet {
        schema_version: 1,
        kind: "rep".into(),
        field: field.into(),
        r: 3,
        label: None,
        m: Some(2),
        m2: None,
        size: matrices.first().map_or(0, Vec::len),
        matrices,
    }
}

proptest! {
    #[test]
    fn rational_strings_round_trip(x in rational()) {
        let s = format_rational(&x);
        prop_assert!(s.contains('/'));
        prop_assert_eq!(parse_rational(&s).unwrap(), x);
    }

    #[test]
    fn gaussian_strings_round_trip(z in gaussian()) {
        prop_assert_eq!(parse_gaussian(&format_gaussian(&z)).unwrap(), z);
    }

    #[test]
    fn rational_matrices_round_trip(dense in square(rational())) {
        let m = SparseMatrix::from_dense(&dense);
        let json = set("rational", vec![encode_rational(&m)]).to_json().unwrap();
        let back = MatrixSet::from_json(&json).unwrap();
        prop_assert_eq!(back.rational_matrices().unwrap(), vec![m]);
    }

    #[test]
    fn gaussian_matrices_round_trip(dense in square(gaussian())) {
        let m = SparseMatrix::from_dense(&dense);
        let json = set("gaussian", vec![encode_gaussian(&m)]).to_json().unwrap();
        let back = MatrixSet::from_json(&json).unwrap();
        prop_assert_eq!(back.gaussian_matrices().unwrap(), vec![m]);
    }
}
