//! Combinatorial checks on codeword supports.
//!
//! Nonzero codewords of a fixed weight split into scalar classes {c x}
//! (size 2 over GF(3), size 3 over GF(4)); the supports of one
//! representative per class are the blocks examined here. For
//! near-extremal self-dual codes those blocks form 1-designs on a range of
//! weights, and regularity at the minimum weight forces the count of
//! minimum-weight words to be divisible by 8 (ternary) resp. 9
//! (quaternary): with one block per point pair bk = vr, the replication
//! number works out to exactly alpha/8 resp. alpha/9.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::code::LinearCode;
use crate::enumerate::{collect_words, GrayWalk};
use crate::error::Error;
use crate::field::{Field, FieldKind, FieldVec};

/// One scalar class of codewords: the canonical representative and how
/// many input words mapped to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarClass<F: Field> {
    pub representative: FieldVec<F>,
    pub size: usize,
}

/// Partition nonzero words by the relation x ~ c x (c a nonzero scalar).
/// The representative is the least scalar multiple. Inputs must be
/// nonzero; a closed input set yields classes of size q - 1.
pub fn scalar_classes<F: Field>(words: &[FieldVec<F>]) -> Result<Vec<ScalarClass<F>>, Error> {
    let mut classes: BTreeMap<FieldVec<F>, usize> = BTreeMap::new();
    for w in words {
        if w.is_zero() {
            return Err(Error::ZeroWord);
        }
        let canonical = F::ELEMS[1..]
            .iter()
            .map(|&c| w.scaled(c))
            .min()
            .expect("nonzero scalar exists");
        *classes.entry(canonical).or_default() += 1;
    }
    Ok(classes
        .into_iter()
        .map(|(representative, size)| ScalarClass {
            representative,
            size,
        })
        .collect())
}

/// True when no two classes share a support (multiset of blocks is a set).
pub fn supports_distinct<F: Field>(classes: &[ScalarClass<F>]) -> bool {
    let mut seen: alloc::collections::BTreeSet<Vec<usize>> = Default::default();
    classes
        .iter()
        .all(|c| seen.insert(c.representative.support()))
}

/// Incidence summary of the blocks cut out by one weight class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignInstance {
    /// Point count (the code length).
    pub v: usize,
    /// Block size (the weight).
    pub k: usize,
    /// Number of blocks (scalar classes, counted with multiplicity).
    pub b: usize,
    /// Replication number when every point lies in equally many blocks.
    pub r: Option<usize>,
}

impl DesignInstance {
    pub fn is_one_design(&self) -> bool {
        // a design needs at least one block; bk = vr then holds
        self.b > 0 && self.r.is_some()
    }
}

/// Build the design from explicit words of one weight (one block per
/// scalar class, with multiplicity).
pub fn one_design_from_words<F: Field>(
    n: usize,
    words: &[FieldVec<F>],
) -> Result<DesignInstance, Error> {
    let classes = scalar_classes(words)?;
    let Some(first) = classes.first() else {
        return Ok(DesignInstance {
            v: n,
            k: 0,
            b: 0,
            r: None,
        });
    };
    let k = first.representative.weight();
    if classes.iter().any(|c| c.representative.weight() != k) {
        return Err(Error::OutOfRange("words of mixed weight"));
    }
    let mut incidence = alloc::vec![0usize; n];
    for class in &classes {
        for p in class.representative.support() {
            incidence[p - 1] += 1;
        }
    }
    let b = classes.len();
    let r0 = incidence[0];
    let regular = incidence.iter().all(|&r| r == r0);
    let r = (regular && r0 > 0).then_some(r0);
    if let Some(r) = r {
        assert_eq!(b * k, n * r, "block count identity bk = vr");
    }
    Ok(DesignInstance { v: n, k, b, r })
}

/// Enumerate the code, keep the words of weight w, and check whether
/// their supports form a 1-design.
pub fn one_design_check<F: GrayWalk>(
    code: &LinearCode<F>,
    w: usize,
    budget: u64,
) -> Result<DesignInstance, Error> {
    let words = collect_words(code, &[w], budget)?;
    one_design_from_words(code.len(), &words)
}

/// Everything the minimum-weight counting argument needs, measured on a
/// concrete near-extremal code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub field: FieldKind,
    pub n: usize,
    /// Family index: n/12 over GF(3), n/6 over GF(4).
    pub m: usize,
    /// Measured minimum-weight count.
    pub alpha: BigUint,
    pub modulus: u64,
    /// alpha == 0 (mod modulus).
    pub modulus_ok: bool,
    /// All scalar classes at the minimum weight have size q - 1.
    pub class_sizes_ok: bool,
    /// Distinct classes have distinct supports at the minimum weight.
    pub supports_ok: bool,
    /// The design at the minimum weight.
    pub design: DesignInstance,
    /// Replication number implied by regularity; equals alpha/modulus.
    pub replication_ok: bool,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.modulus_ok
            && self.class_sizes_ok
            && self.supports_ok
            && self.design.is_one_design()
            && self.replication_ok
    }
}

/// Family index m when n is an admissible near-extremal length.
pub fn family_index(field: FieldKind, n: usize) -> Option<usize> {
    match field {
        FieldKind::F3 => (n > 0 && n.is_multiple_of(12)).then_some(n / 12),
        FieldKind::F4 => (n > 0 && n.is_multiple_of(6)).then_some(n / 6),
    }
}

/// Run the counting checks given all minimum-weight words of a
/// near-extremal code of length 12m / 6m (minimum weight 3m / 2m).
pub fn lemma_check_from_words<F: Field>(
    n: usize,
    words: &[FieldVec<F>],
) -> Result<LemmaReport, Error> {
    let m = family_index(F::KIND, n).ok_or(Error::OutOfRange("length"))?;
    let min_weight = match F::KIND {
        FieldKind::F3 => 3 * m,
        FieldKind::F4 => 2 * m,
    };
    if words.is_empty() || words[0].weight() != min_weight {
        return Err(Error::OutOfRange("not near-extremal"));
    }
    let classes = scalar_classes(words)?;
    let q1 = (F::ORDER - 1) as usize;
    let class_sizes_ok = classes.iter().all(|c| c.size == q1);
    let supports_ok = supports_distinct(&classes);
    let design = one_design_from_words(n, words)?;
    let alpha = BigUint::from(words.len());
    let modulus = F::KIND.alpha_modulus();
    let modulus_ok = num_traits::Zero::is_zero(&(&alpha % BigUint::from(modulus)));
    // regularity forces (alpha / (q-1)) * w = n * r, i.e. r = alpha/modulus
    let replication_ok = match design.r {
        Some(r) => BigUint::from(r) * BigUint::from(modulus) == alpha,
        None => false,
    };
    Ok(LemmaReport {
        field: F::KIND,
        n,
        m,
        alpha,
        modulus,
        modulus_ok,
        class_sizes_ok,
        supports_ok,
        design,
        replication_ok,
    })
}

/// Enumerate a code, confirm it is near-extremal, and run
/// [`lemma_check_from_words`] on its minimum-weight words.
pub fn lemma_check<F: GrayWalk>(code: &LinearCode<F>, budget: u64) -> Result<LemmaReport, Error> {
    let m = family_index(F::KIND, code.len()).ok_or(Error::OutOfRange("length"))?;
    let min_weight = match F::KIND {
        FieldKind::F3 => 3 * m,
        FieldKind::F4 => 2 * m,
    };
    let words = collect_words(code, &[min_weight], budget)?;
    let below: Vec<usize> = (1..min_weight).collect();
    if !collect_words(code, &below, budget)?.is_empty() {
        return Err(Error::OutOfRange("not near-extremal"));
    }
    lemma_check_from_words(code.len(), &words)
}
