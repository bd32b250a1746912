//! Minimum-weight counts of previously published near-extremal codes,
//! kept as annotations: each one must land in the admissible alpha range
//! for its length and pass the modulus. The codes behind the larger
//! lengths (extended quadratic residue and symmetry codes) are outside
//! the construction families this tool builds, so the values are recorded
//! here rather than in the catalog.

use sdcodes_core::FieldKind;

#[derive(Debug, Clone, Copy)]
pub struct KnownAlpha {
    pub field: FieldKind,
    pub m: usize,
    pub alpha: u64,
    pub source: &'static str,
}

pub fn known_alphas() -> Vec<KnownAlpha> {
    let mut out = Vec::new();
    let mut push = |field, m, alphas: &[u64], source| {
        for &alpha in alphas {
            out.push(KnownAlpha {
                field,
                m,
                alpha,
                source,
            });
        }
    };

    // classified small lengths
    push(FieldKind::F3, 1, &[8, 24], "length-12 classification");
    let b24: Vec<u64> = (2..=16)
        .chain([18, 21, 24, 25, 30, 36, 66])
        .map(|b| 8 * b)
        .collect();
    push(FieldKind::F3, 2, &b24, "length-24 classification");
    push(FieldKind::F4, 1, &[9], "length-6 classification");
    push(
        FieldKind::F4,
        2,
        &[9, 18, 36, 45, 90],
        "length-12 classification",
    );
    push(
        FieldKind::F4,
        3,
        &[27, 45, 72, 81, 99, 108],
        "length-18 classification",
    );

    // constructed families at length 36 over GF(3)
    let b36: Vec<u64> = [9, 12, 14]
        .into_iter()
        .chain(16..=83)
        .chain([85, 90, 93])
        .map(|b| 8 * b)
        .collect();
    push(FieldKind::F3, 3, &b36, "length-36 constructions");

    // quadratic residue / symmetry codes at larger lengths
    push(FieldKind::F3, 6, &[357840, 213936], "length-72 codes");
    push(FieldKind::F3, 7, &[2368488, 1259520], "length-84 codes");
    push(FieldKind::F3, 8, &[15358848], "length-96 code");

    // published quaternary values
    let b4_24: [u64; 27] = [
        57, 58, 60, 61, 64, 66, 69, 70, 73, 76, 78, 82, 84, 85, 88, 93, 94, 96, 100, 106, 109, 114,
        121, 133, 138, 157, 253,
    ];
    push(
        FieldKind::F4,
        4,
        &b4_24.map(|b| 9 * b),
        "length-24 constructions",
    );
    let b4_30: [u64; 24] = [
        213, 232, 252, 261, 270, 280, 288, 297, 300, 309, 312, 318, 322, 325, 330, 336, 340, 345,
        352, 354, 357, 358, 360, 361,
    ];
    push(
        FieldKind::F4,
        5,
        &b4_30.map(|b| 9 * b),
        "length-30 constructions",
    );
    push(
        FieldKind::F4,
        6,
        &[19548, 20844, 22149, 28764],
        "length-36 codes",
    );
    out
}
