//! Reference values of `λ(w − φ_⧢(w))` for the mixed-alphabet convergent
//! words of weight 3 and 4.

use crate::algebra::{NCPoly, Word};

/// `(word, relation body)` in polynomial text form.
pub const REFERENCE_ROWS: &[(&str, &str)] = &[
    ("z10", "-1*100 - 1*110"),
    ("1z0", "2*100 + 2*110"),
    ("10z", "-1*100 - 1*110"),
    ("zz10", "1010 + 1100 + 1110"),
    ("z01z", "-4*1100 - 1*1110"),
    ("z010", "-1*1000 - 4*1100"),
    ("z1z0", "-2*1010 - 6*1100 - 3*1110"),
    ("z10z", "4*1100 + 1110"),
    ("z100", "-1*1000 - 1*1010 - 1*1100"),
    ("z110", "-1*1000 - 2*1010 - 6*1100 - 2*1110"),
    ("1zz0", "2*1010 + 6*1100 + 3*1110"),
    ("1z0z", "-2*1010 - 6*1100 - 3*1110"),
    ("1z00", "3*1000 + 2*1010 + 6*1100"),
    ("1z10", "3*1000 + 5*1010 + 13*1100 + 4*1110"),
    ("10zz", "1010 + 1100 + 1110"),
    ("10z0", "-3*1000 - 2*1010 - 6*1100"),
    ("100z", "1000 + 1010 + 1100"),
    ("101z", "1000 + 1010 + 1100"),
    ("11z0", "-3*1000 - 2*1010 - 6*1100"),
    ("110z", "1000 - 1*1010 - 1*1100 - 2*1110"),
];

pub fn reference_table() -> Vec<(Word, NCPoly)> {
    REFERENCE_ROWS
        .iter()
        .map(|(w, p)| {
            (
                w.parse().expect("valid word"),
                p.parse().expect("valid body"),
            )
        })
        .collect()
}
