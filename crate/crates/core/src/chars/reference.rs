//! Hardcoded character tables used to validate the class-sum computation.
//!
//! Rows are characters, columns follow the group's class order (identity
//! class first, then by smallest member). All entries of these groups are
//! integers.

use crate::group::NamedGroup;

pub fn reference_table(which: NamedGroup) -> Vec<Vec<f64>> {
    let rows: &[&[f64]] = match which {
        // classes: I, (12), (123)
        NamedGroup::S3 => &[&[1., 1., 1.], &[1., -1., 1.], &[2., 0., -1.]],
        // classes: 1, -1, i, j, k
        NamedGroup::Q8 => &[
            &[1., 1., 1., 1., 1.],
            &[1., 1., 1., -1., -1.],
            &[1., 1., -1., -1., 1.],
            &[1., 1., -1., 1., -1.],
            &[2., -2., 0., 0., 0.],
        ],
        // classes: (0,0), (0,1), (1,0), (1,1)
        NamedGroup::V4 => &[
            &[1., 1., 1., 1.],
            &[1., -1., 1., -1.],
            &[1., 1., -1., -1.],
            &[1., -1., -1., 1.],
        ],
        // classes: e, {r, r3}, r2, {s, sr2}, {sr, sr3}
        NamedGroup::D4 => &[
            &[1., 1., 1., 1., 1.],
            &[1., 1., 1., -1., -1.],
            &[1., -1., 1., 1., -1.],
            &[1., -1., 1., -1., 1.],
            &[2., 0., -2., 0., 0.],
        ],
    };
    rows.iter().map(|r| r.to_vec()).collect()
}
