//! Exhaustive weight enumeration.
//!
//! The message space of a [k]-dimensional code is walked in a Gray order:
//! consecutive messages differ in a single symbol, so the current codeword
//! is updated by one plane-word addition per step and its weight by one
//! popcount. Over GF(3) the walk is the reflected modular ternary Gray code
//! (each step adds one generator row); over GF(4) it is a binary Gray code
//! over 2k bits (each step adds a row or its w-multiple).
//!
//! Walks are expressed over an arbitrary index range `start..end` of the
//! message space so callers can split the space into independent chunks and
//! merge the per-chunk counts; results are identical to a single full walk.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::code::LinearCode;
use crate::error::Error;
use crate::field::{Field, FieldVec, Gf3, Gf4};
use crate::planes::{PlaneWord, Planed};

/// Default cap on the number of codewords a full enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 1 << 31;

/// Exact codeword counts by weight. Counts are arbitrary-precision; the
/// tabulated weight distributions at large lengths overflow 64 bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightEnumerator {
    n: usize,
    counts: BTreeMap<usize, BigUint>,
}

impl WeightEnumerator {
    pub fn new(n: usize, counts: BTreeMap<usize, BigUint>) -> Self {
        let counts = counts.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        WeightEnumerator { n, counts }
    }

    pub fn from_u64_counts(n: usize, per_weight: &[u64]) -> Self {
        let counts = per_weight
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(w, &c)| (w, BigUint::from(c)))
            .collect();
        WeightEnumerator { n, counts }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn count(&self, weight: usize) -> BigUint {
        self.counts.get(&weight).cloned().unwrap_or_default()
    }

    /// Nonzero entries in increasing weight order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.counts.iter().map(|(&w, c)| (w, c))
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// Smallest positive weight with a nonzero count.
    pub fn min_weight(&self) -> Option<usize> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    /// Enumerator of a direct sum: coefficient-wise polynomial product.
    pub fn convolve(&self, rhs: &WeightEnumerator) -> WeightEnumerator {
        let mut counts: BTreeMap<usize, BigUint> = BTreeMap::new();
        for (w1, c1) in self.iter() {
            for (w2, c2) in rhs.iter() {
                let entry = counts.entry(w1 + w2).or_default();
                *entry += c1 * c2;
            }
        }
        WeightEnumerator::new(self.n + rhs.n, counts)
    }
}

/// Number of codewords q^k, or an error when it exceeds `budget`.
pub fn enumeration_size<F: Field>(k: usize, budget: u64) -> Result<u64, Error> {
    let total = u32::try_from(k)
        .ok()
        .and_then(|k| (F::ORDER as u128).checked_pow(k))
        .unwrap_or(u128::MAX);
    if total > budget as u128 {
        return Err(Error::BudgetExceeded {
            codewords: total,
            budget,
        });
    }
    Ok(total as u64)
}

/// Gray-order message walks; implemented per field.
pub trait GrayWalk: Planed {
    /// Visit the codewords of messages `start..end` (Gray order indices).
    /// `visit` receives the packed codeword and its weight.
    fn walk_range<const W: usize>(
        rows: &[FieldVec<Self>],
        start: u64,
        end: u64,
        visit: impl FnMut(&PlaneWord<W>, u32),
    );
}

impl GrayWalk for Gf3 {
    fn walk_range<const W: usize>(
        rows: &[FieldVec<Self>],
        start: u64,
        end: u64,
        mut visit: impl FnMut(&PlaneWord<W>, u32),
    ) {
        if start >= end {
            return;
        }
        let k = rows.len();
        let packed: Vec<PlaneWord<W>> = rows.iter().map(Gf3::pack).collect();

        // base-3 digits of the current index, least significant first,
        // with a sentinel digit on top
        let mut digits = alloc::vec![0u8; k + 1];
        let mut s = start;
        for d in digits.iter_mut().take(k) {
            *d = (s % 3) as u8;
            s /= 3;
        }
        // reflected Gray digit i is digit(i) - digit(i+1) mod 3; build the
        // starting codeword from those
        let mut acc = PlaneWord::ZERO;
        for i in 0..k {
            let g = (3 + digits[i] - digits[i + 1]) % 3;
            match g {
                1 => acc.add3(&packed[i]),
                2 => acc.add3(&packed[i].double3()),
                _ => {}
            }
        }
        visit(&acc, acc.weight());

        // each counter increment bumps exactly one Gray digit by +1 mod 3,
        // i.e. adds one generator row
        for _ in start..end - 1 {
            let mut j = 0;
            while digits[j] == 2 {
                digits[j] = 0;
                j += 1;
            }
            digits[j] += 1;
            acc.add3(&packed[j]);
            visit(&acc, acc.weight());
        }
    }
}

impl GrayWalk for Gf4 {
    fn walk_range<const W: usize>(
        rows: &[FieldVec<Self>],
        start: u64,
        end: u64,
        mut visit: impl FnMut(&PlaneWord<W>, u32),
    ) {
        if start >= end {
            return;
        }
        // per row: the row itself and its w-multiple; flipping Gray bit
        // 2j adds row j, flipping bit 2j+1 adds w * row j
        let var: Vec<[PlaneWord<W>; 2]> = rows
            .iter()
            .map(|r| {
                let p = Gf4::pack(r);
                [p, p.mul_omega()]
            })
            .collect();

        let mut acc = PlaneWord::ZERO;
        let mut g = start ^ (start >> 1);
        while g != 0 {
            let b = g.trailing_zeros() as usize;
            acc.xor(&var[b >> 1][b & 1]);
            g &= g - 1;
        }
        visit(&acc, acc.weight());

        for s in start + 1..end {
            let b = s.trailing_zeros() as usize;
            acc.xor(&var[b >> 1][b & 1]);
            visit(&acc, acc.weight());
        }
    }
}

/// Per-weight counts over the message index range `start..end`.
/// Chunks partitioning `0..q^k` sum to the full enumeration.
pub fn count_chunk<F: GrayWalk>(
    code: &LinearCode<F>,
    start: u64,
    end: u64,
) -> Result<Vec<u64>, Error> {
    let rows: Vec<FieldVec<F>> = code.generator_rows().collect();
    let n = code.len();
    let mut counts = alloc::vec![0u64; n + 1];
    if n <= 64 {
        F::walk_range::<1>(&rows, start, end, |_, wt| counts[wt as usize] += 1);
    } else if n <= 128 {
        F::walk_range::<2>(&rows, start, end, |_, wt| counts[wt as usize] += 1);
    } else {
        return Err(Error::LengthUnsupported(n));
    }
    Ok(counts)
}

/// Like [`count_chunk`], additionally returning every codeword whose
/// weight is in `want` (as dense vectors).
pub fn collect_chunk<F: GrayWalk>(
    code: &LinearCode<F>,
    start: u64,
    end: u64,
    want: &[usize],
) -> Result<(Vec<u64>, Vec<FieldVec<F>>), Error> {
    let rows: Vec<FieldVec<F>> = code.generator_rows().collect();
    let n = code.len();
    let mut wanted = alloc::vec![false; n + 1];
    for &w in want {
        if w <= n {
            wanted[w] = true;
        }
    }
    let mut counts = alloc::vec![0u64; n + 1];
    let mut words = Vec::new();
    if n <= 64 {
        F::walk_range::<1>(&rows, start, end, |w, wt| {
            counts[wt as usize] += 1;
            if wanted[wt as usize] {
                words.push(F::unpack(w, n));
            }
        });
    } else if n <= 128 {
        F::walk_range::<2>(&rows, start, end, |w, wt| {
            counts[wt as usize] += 1;
            if wanted[wt as usize] {
                words.push(F::unpack(w, n));
            }
        });
    } else {
        return Err(Error::LengthUnsupported(n));
    }
    Ok((counts, words))
}

/// Full exact weight enumerator over all q^k codewords (single-threaded).
///
/// Fails with [`Error::BudgetExceeded`] when q^k > budget; callers must
/// fall back to [`crate::lowweight`] in that case.
pub fn weight_enumerator_full<F: GrayWalk>(
    code: &LinearCode<F>,
    budget: u64,
) -> Result<WeightEnumerator, Error> {
    let total = enumeration_size::<F>(code.dim(), budget)?;
    let counts = count_chunk(code, 0, total)?;
    Ok(WeightEnumerator::from_u64_counts(code.len(), &counts))
}

/// All codewords of the given weights, by full enumeration.
pub fn collect_words<F: GrayWalk>(
    code: &LinearCode<F>,
    want: &[usize],
    budget: u64,
) -> Result<Vec<FieldVec<F>>, Error> {
    let total = enumeration_size::<F>(code.dim(), budget)?;
    let (_, words) = collect_chunk(code, 0, total, want)?;
    Ok(words)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use alloc::vec;
    use proptest::prelude::*;

    fn tetracode() -> LinearCode<Gf3> {
        LinearCode::from_rows(
            4,
            vec![
                FieldVec::parse("1,0,1,1").unwrap(),
                FieldVec::parse("0,1,1,2").unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn tetracode_distribution() {
        // 9 codewords: the zero word and 8 of weight 3
        let we = weight_enumerator_full(&tetracode(), DEFAULT_BUDGET).unwrap();
        assert_eq!(we.count(0), BigUint::from(1u32));
        assert_eq!(we.count(3), BigUint::from(8u32));
        assert_eq!(we.total(), BigUint::from(9u32));
        assert_eq!(we.min_weight(), Some(3));
        assert_eq!(we, naive::weight_enumerator(&tetracode()));
    }

    #[test]
    fn quaternary_repetition_pair() {
        let c = LinearCode::from_rows(2, vec![FieldVec::<Gf4>::parse("1,1").unwrap()]).unwrap();
        let we = weight_enumerator_full(&c, DEFAULT_BUDGET).unwrap();
        assert_eq!(we.count(0), BigUint::from(1u32));
        assert_eq!(we.count(2), BigUint::from(3u32));
        assert_eq!(we, naive::weight_enumerator(&c));
    }

    #[test]
    fn budget_is_enforced() {
        let c = LinearCode::from_matrix(Matrix::<Gf3>::identity(4));
        assert!(matches!(
            weight_enumerator_full(&c, 80),
            Err(Error::BudgetExceeded { codewords: 81, .. })
        ));
        assert!(weight_enumerator_full(&c, 81).is_ok());
    }

    #[test]
    fn zero_dimensional_code() {
        let c = LinearCode::<Gf3>::zero(5);
        let we = weight_enumerator_full(&c, 10).unwrap();
        assert_eq!(we.total(), BigUint::from(1u32));
        assert_eq!(we.min_weight(), None);
    }

    #[test]
    fn chunks_merge_to_full_walk() {
        let c = tetracode();
        let full = count_chunk(&c, 0, 9).unwrap();
        for split in [1, 4, 5, 8] {
            let mut a = count_chunk(&c, 0, split).unwrap();
            let b = count_chunk(&c, split, 9).unwrap();
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            assert_eq!(a, full);
        }
    }

    #[test]
    fn collect_returns_the_low_weight_words() {
        let words = collect_words(&tetracode(), &[3], DEFAULT_BUDGET).unwrap();
        assert_eq!(words.len(), 8);
        for w in &words {
            assert_eq!(w.weight(), 3);
            assert!(tetracode().contains(w).unwrap());
        }
    }

    #[test]
    fn convolve_is_direct_sum_enumerator() {
        let t = weight_enumerator_full(&tetracode(), DEFAULT_BUDGET).unwrap();
        let cubed = t.convolve(&t).convolve(&t);
        // (1 + 8 y^3)^3 = 1 + 24 y^3 + 192 y^6 + 512 y^9
        assert_eq!(cubed.count(3), BigUint::from(24u32));
        assert_eq!(cubed.count(6), BigUint::from(192u32));
        assert_eq!(cubed.count(9), BigUint::from(512u32));
        assert_eq!(cubed.count(12), BigUint::from(0u32));
    }

    fn arb_code_f3(max_k: usize, n: usize) -> impl Strategy<Value = LinearCode<Gf3>> {
        proptest::collection::vec(proptest::collection::vec(0u8..3, n), 1..=max_k).prop_map(
            move |rows| {
                LinearCode::from_rows(
                    n,
                    rows.into_iter()
                        .map(|r| FieldVec::new(r.into_iter().map(Gf3::new).collect()))
                        .collect(),
                )
                .unwrap()
            },
        )
    }

    fn arb_code_f4(max_k: usize, n: usize) -> impl Strategy<Value = LinearCode<Gf4>> {
        proptest::collection::vec(proptest::collection::vec(0u8..4, n), 1..=max_k).prop_map(
            move |rows| {
                LinearCode::from_rows(
                    n,
                    rows.into_iter()
                        .map(|r| FieldVec::new(r.into_iter().map(Gf4::new).collect()))
                        .collect(),
                )
                .unwrap()
            },
        )
    }

    proptest! {
        #[test]
        fn gray_walk_matches_naive_f3(code in arb_code_f3(5, 9)) {
            let fast = weight_enumerator_full(&code, DEFAULT_BUDGET).unwrap();
            prop_assert_eq!(fast, naive::weight_enumerator(&code));
        }

        #[test]
        fn gray_walk_matches_naive_f4(code in arb_code_f4(4, 7)) {
            let fast = weight_enumerator_full(&code, DEFAULT_BUDGET).unwrap();
            prop_assert_eq!(fast, naive::weight_enumerator(&code));
        }

        #[test]
        fn direct_sum_multiplicativity(a in arb_code_f3(3, 5), b in arb_code_f3(3, 6)) {
            let sum = crate::construct::direct_sum(&a, &b).unwrap();
            let lhs = weight_enumerator_full(&sum, DEFAULT_BUDGET).unwrap();
            let rhs = weight_enumerator_full(&a, DEFAULT_BUDGET).unwrap()
                .convolve(&weight_enumerator_full(&b, DEFAULT_BUDGET).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
