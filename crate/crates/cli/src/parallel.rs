//! Multi-threaded drivers over the chunked enumeration kernels. The
//! message space splits into contiguous index ranges walked independently;
//! merging the per-chunk counts reproduces the single-threaded result
//! exactly (everything is integer counting, no reassociation concerns).

use num_bigint::BigUint;
use rayon::prelude::*;
use sdcodes_core::code::LinearCode;
use sdcodes_core::dynamic::AnyCode;
use sdcodes_core::enumerate::{
    collect_chunk, count_chunk, enumeration_size, GrayWalk, WeightEnumerator,
};
use sdcodes_core::error::Error;
use sdcodes_core::field::FieldVec;

fn chunk_ranges(total: u64) -> Vec<(u64, u64)> {
    let threads = rayon::current_num_threads() as u64;
    let chunks = (threads * 8).min(total.max(1));
    let size = total.div_ceil(chunks);
    (0..chunks)
        .map(|i| (i * size, ((i + 1) * size).min(total)))
        .filter(|(s, e)| s < e)
        .collect()
}

/// Parallel full weight enumeration; identical output to
/// [`sdcodes_core::enumerate::weight_enumerator_full`].
pub fn weight_enumerator<F: GrayWalk + Send + Sync>(
    code: &LinearCode<F>,
    budget: u64,
) -> Result<WeightEnumerator, Error> {
    let total = enumeration_size::<F>(code.dim(), budget)?;
    let counts = chunk_ranges(total)
        .into_par_iter()
        .map(|(s, e)| count_chunk(code, s, e))
        .try_reduce(
            || vec![0u64; code.len() + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                Ok(a)
            },
        )?;
    Ok(WeightEnumerator::from_u64_counts(code.len(), &counts))
}

/// Parallel enumeration that also gathers all codewords of the wanted
/// weights.
pub fn enumerate_collecting<F: GrayWalk + Send + Sync>(
    code: &LinearCode<F>,
    want: &[usize],
    budget: u64,
) -> Result<(WeightEnumerator, Vec<FieldVec<F>>), Error> {
    let total = enumeration_size::<F>(code.dim(), budget)?;
    let pieces: Vec<(Vec<u64>, Vec<FieldVec<F>>)> = chunk_ranges(total)
        .into_par_iter()
        .map(|(s, e)| collect_chunk(code, s, e, want))
        .collect::<Result<_, _>>()?;
    let mut counts = vec![0u64; code.len() + 1];
    let mut words = Vec::new();
    for (c, w) in pieces {
        for (x, y) in counts.iter_mut().zip(c) {
            *x += y;
        }
        words.extend(w);
    }
    Ok((
        WeightEnumerator::from_u64_counts(code.len(), &counts),
        words,
    ))
}

/// Field-dispatched parallel enumeration.
pub fn any_weight_enumerator(code: &AnyCode, budget: u64) -> Result<WeightEnumerator, Error> {
    match code {
        AnyCode::F3(c) => weight_enumerator(c, budget),
        AnyCode::F4(c) => weight_enumerator(c, budget),
    }
}

/// Minimum weight and its codeword count via parallel enumeration.
pub fn any_alpha(code: &AnyCode, budget: u64) -> Result<(usize, BigUint), Error> {
    let we = any_weight_enumerator(code, budget)?;
    let d = we.min_weight().ok_or(Error::OutOfRange("zero code"))?;
    Ok((d, we.count(d)))
}
