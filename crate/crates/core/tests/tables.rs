use std::sync::Arc;

use classbent::chars::TableSource;
use classbent::{CharacterTable, Error, Group, C64};

#[test]
fn dihedral_group_of_order_eight() {
    let d4 = CharacterTable::for_label("D4").unwrap();
    assert_eq!(d4.degrees(), [1, 1, 1, 1, 2]);
    assert_eq!(d4.group().class_sizes(), [1, 2, 1, 2, 2]);
    assert!(d4.verify_orthogonality(1e-10).pass);
    let squares: usize = d4.degrees().iter().map(|d| d * d).sum();
    assert_eq!(squares, 8);
}

#[test]
fn product_table_is_tensor_of_factors() {
    let prod = CharacterTable::for_label("Z2xZ4").unwrap();
    let z2 = CharacterTable::for_label("Z2").unwrap();
    let z4 = CharacterTable::for_label("Z4").unwrap();
    assert_eq!(prod.source(), TableSource::Analytic);
    // every character of the product is χ⊗ψ for some factor characters
    for i in 0..8 {
        let row = prod.character(i);
        let found = (0..2).any(|a| {
            (0..4).any(|b| {
                (0..8).all(|x| (row[x] - z2.value(a, x / 4) * z4.value(b, x % 4)).norm() < 1e-12)
            })
        });
        assert!(found, "character {i}");
    }
}

#[test]
fn loaded_abelian_table_uses_class_sums() {
    // Z5 with index i standing for element p[i]
    let p = [0usize, 2, 4, 1, 3];
    let index_of = |e: usize| p.iter().position(|&x| x == e).unwrap();
    let cayley: Vec<Vec<usize>> = (0..5)
        .map(|i| (0..5).map(|j| index_of((p[i] + p[j]) % 5)).collect())
        .collect();
    let g = Arc::new(Group::from_cayley("scrambled", cayley, 0).unwrap());
    let t = CharacterTable::compute(g).unwrap();
    assert_eq!(t.source(), TableSource::ClassSums);
    assert!(t.verify_orthogonality(1e-10).pass);
    assert!(t.phi_inverse_deviation().unwrap() < 1e-10);
    let trivial = t.character(0);
    assert!(trivial.iter().all(|v| (v - C64::new(1.0, 0.0)).norm() < 1e-10));
}

#[test]
fn loaded_nonabelian_table_is_unsupported() {
    let s3 = Group::from_label("S3").unwrap();
    // same table under a different name is no longer recognized
    let g = Group::from_cayley("mystery", s3.cayley_rows(), s3.identity()).unwrap();
    assert!(matches!(CharacterTable::compute(Arc::new(g)), Err(Error::Unsupported(_))));
}

#[test]
fn json_export_lists_classes_in_order() {
    let q8 = CharacterTable::for_label("Q8").unwrap();
    let v = q8.to_json_value();
    assert_eq!(v["classes"], serde_json::json!(["1", "-1", "i", "j", "k"]));
    assert_eq!(v["characters"][4]["degree"], 2);
    assert_eq!(v["characters"][4]["values"][1], serde_json::json!([-2.0, 0.0]));
}
