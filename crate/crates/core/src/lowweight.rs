//! Low-weight codeword counting when full enumeration is out of budget.
//!
//! The standard information-set technique: systematize the generator on
//! several disjoint column sets; any codeword whose message has more than p
//! nonzero symbols in every systematic basis must, on each information set,
//! carry weight at least p + 1 minus that set's rank deficiency. Summing
//! over disjoint sets turns completed enumeration passes into an honest
//! lower bound, while the enumerated combinations give exact counts below
//! the bound.
//!
//! For a self-dual [2k, k] code the two sets are the RREF pivot columns and
//! their complement, and the complement is almost always an information set
//! too, so the bound grows by 2 per pass.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::code::LinearCode;
use crate::error::Error;
use crate::field::{Field, FieldVec};
use crate::matrix::Matrix;

/// What is known about the minimum weight after a bounded search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinWeight {
    /// The minimum weight exactly.
    Exact(usize),
    /// Only a certified lower bound (no codeword below it exists).
    AtLeast(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowWeightReport {
    pub w_max: usize,
    /// Codeword counts by weight, for weights <= w_max that were seen.
    /// Exact for every weight below `exact_below`; for weights from
    /// `exact_below` to w_max they are lower bounds only.
    pub counts: BTreeMap<usize, BigUint>,
    /// Every codeword of weight strictly below this has been enumerated.
    pub exact_below: usize,
    pub min_weight: MinWeight,
    /// Number of row combinations examined.
    pub work: u64,
}

impl LowWeightReport {
    /// True when every count up to w_max is exact.
    pub fn complete(&self) -> bool {
        self.exact_below > self.w_max
    }
}

/// A generator systematized on one information set: the first `rank` rows
/// have their pivots inside the set, the rest are zero on the whole set.
struct SysForm<F: Field> {
    rows: Vec<FieldVec<F>>,
    rank: usize,
}

fn systematic_forms<F: Field>(code: &LinearCode<F>) -> Vec<SysForm<F>> {
    let k = code.dim();
    let n = code.len();
    let mut first = Matrix::new(n, code.generator().rows().map(|r| r.to_vec()).collect());
    let p1 = first.rref();
    let in_first: BTreeSet<usize> = p1.iter().copied().collect();
    let complement: Vec<usize> = (0..n).filter(|c| !in_first.contains(c)).collect();

    let mut second = first.clone();
    let order: Vec<usize> = complement
        .iter()
        .copied()
        .chain(p1.iter().copied())
        .collect();
    let p2 = second.rref_in_order(&order);
    let rank2 = p2.iter().filter(|c| !in_first.contains(c)).count();

    let forms = [
        SysForm {
            rows: (0..k).map(|i| first.row_vec(i)).collect(),
            rank: k,
        },
        SysForm {
            rows: (0..k).map(|i| second.row_vec(i)).collect(),
            rank: rank2,
        },
    ];
    forms.into()
}

/// Lower bound on the weight of any codeword not enumerated after
/// completing message-weight pass p on all forms.
fn pass_bound<F: Field>(forms: &[SysForm<F>], k: usize, p: usize) -> usize {
    forms
        .iter()
        .map(|f| (p + 1).saturating_sub(k - f.rank))
        .sum()
}

/// Number of scalar-normalized messages of weight exactly p over k rows.
fn pass_work(k: usize, p: usize, q: u64) -> u128 {
    let mut combos: u128 = 1;
    for i in 0..p {
        combos = combos * (k - i) as u128 / (i + 1) as u128;
    }
    combos * (q - 1).pow(p.saturating_sub(1) as u32) as u128
}

/// Count codewords of weight <= w_max without full enumeration.
///
/// Enumerates all combinations of up to p generator rows (with nonzero
/// scalar coefficients, normalized so the first is 1) in each systematic
/// form, raising p until everything up to w_max is certified exact or the
/// work budget would be exceeded. The report states exactly how far the
/// counts are exact and whether the minimum weight is certified.
pub fn count_low_weight<F: Field>(
    code: &LinearCode<F>,
    w_max: usize,
    work_budget: u64,
) -> Result<LowWeightReport, Error> {
    if w_max > code.len() {
        return Err(Error::OutOfRange("w_max"));
    }
    let k = code.dim();
    if k == 0 {
        return Ok(LowWeightReport {
            w_max,
            counts: BTreeMap::new(),
            exact_below: w_max + 1,
            min_weight: MinWeight::AtLeast(w_max + 1),
            work: 0,
        });
    }
    let forms = systematic_forms(code);
    let q = F::ORDER;

    // one representative per scalar class, keyed canonically
    let mut seen: BTreeSet<FieldVec<F>> = BTreeSet::new();
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    let mut found_min: Option<usize> = None;
    let mut work: u64 = 0;

    let record = |word: &FieldVec<F>,
                  seen: &mut BTreeSet<FieldVec<F>>,
                  counts: &mut BTreeMap<usize, u64>,
                  found_min: &mut Option<usize>| {
        let w = word.weight();
        let canonical = F::ELEMS[1..]
            .iter()
            .map(|&c| word.scaled(c))
            .min()
            .expect("at least one nonzero scalar");
        if seen.insert(canonical) {
            if w <= w_max {
                *counts.entry(w).or_default() += q - 1;
            }
            if found_min.is_none_or(|m| w < m) {
                *found_min = Some(w);
            }
        }
    };

    let mut p = 0;
    loop {
        let bound = pass_bound(&forms, k, p);
        if bound > w_max {
            break;
        }
        let next = p + 1;
        let next_work: u128 = (forms.len() as u128) * pass_work(k, next, q);
        if work as u128 + next_work > work_budget as u128 {
            // cannot afford the next pass; report what is certain
            let b = pass_bound(&forms, k, p);
            return Ok(LowWeightReport {
                w_max,
                counts: to_big(&counts),
                exact_below: b,
                min_weight: min_of(found_min, b),
                work,
            });
        }
        // enumerate all normalized messages of weight exactly `next`
        for form in &forms {
            let zero = FieldVec::zero(code.len());
            enumerate_combos(&form.rows, 0, next, true, &zero, &mut |word| {
                work += 1;
                record(word, &mut seen, &mut counts, &mut found_min);
            });
        }
        p = next;
    }

    let b = pass_bound(&forms, k, p);
    Ok(LowWeightReport {
        w_max,
        counts: to_big(&counts),
        exact_below: b,
        min_weight: min_of(found_min, b),
        work,
    })
}

fn to_big(counts: &BTreeMap<usize, u64>) -> BTreeMap<usize, BigUint> {
    counts
        .iter()
        .map(|(&w, &c)| (w, BigUint::from(c)))
        .collect()
}

fn min_of(found: Option<usize>, certified: usize) -> MinWeight {
    match found {
        Some(d) if d <= certified => MinWeight::Exact(d),
        _ => MinWeight::AtLeast(certified),
    }
}

/// Sum over all choices of `remaining` further rows from index `from` on,
/// with nonzero coefficients; the first chosen coefficient is fixed to 1.
fn enumerate_combos<F: Field>(
    rows: &[FieldVec<F>],
    from: usize,
    remaining: usize,
    first: bool,
    acc: &FieldVec<F>,
    visit: &mut impl FnMut(&FieldVec<F>),
) {
    if remaining == 0 {
        visit(acc);
        return;
    }
    if rows.len() - from < remaining {
        return;
    }
    for i in from..=rows.len() - remaining {
        if first {
            let next = acc.add(&rows[i]).expect("equal lengths");
            enumerate_combos(rows, i + 1, remaining - 1, false, &next, visit);
        } else {
            for &c in &F::ELEMS[1..] {
                let next = acc.add(&rows[i].scaled(c)).expect("equal lengths");
                enumerate_combos(rows, i + 1, remaining - 1, false, &next, visit);
            }
        }
    }
}
