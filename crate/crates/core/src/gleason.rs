//! Gleason-type weight enumerator analysis.
//!
//! Every self-dual ternary code of length n has weight enumerator
//!
//! ```text
//! W = sum_j a_j (1 + 8y^3)^(n/4 - 3j) (y^3 (1 - y^3)^3)^j,   0 <= j <= n/12,
//! ```
//!
//! and every Hermitian self-dual quaternary code
//!
//! ```text
//! W = sum_j a_j (1 + 3y^2)^(n/2 - 3j) (y^2 (1 - y^2)^2)^j,   0 <= j <= n/6,
//! ```
//!
//! with integer a_j. Imposing near-extremality at length 12m (resp. 6m) —
//! A_0 = 1, all weights below 3m (2m) absent — pins a_0 .. a_(m-1) by exact
//! back-substitution (the basis is unitriangular in the constrained
//! weights) and leaves the minimum-weight count alpha = A_3m (A_2m) free.
//! Every coefficient is then an affine pair A_w = s_w + t_w * alpha.
//!
//! On top of the parametric family this module checks the divisibility of
//! the s_w (mod 8 ternary, mod 9 quaternary), derives the admissible range
//! of alpha from coefficient nonnegativity, and specializes to alpha = 0
//! for extremal enumerators.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::enumerate::WeightEnumerator;
use crate::error::Error;
use crate::field::FieldKind;
use crate::poly::BigPoly;

/// No ternary near-extremal self-dual code of length 12m exists for
/// m >= 147, so parametric families are produced for m <= 146 only.
pub const MAX_M_F3: usize = 146;

/// No quaternary near-extremal Hermitian self-dual code of length 6m
/// exists for m >= 38.
pub const MAX_M_F4: usize = 37;

/// Largest admissible family index for the field.
pub fn max_m(field: FieldKind) -> usize {
    match field {
        FieldKind::F3 => MAX_M_F3,
        FieldKind::F4 => MAX_M_F4,
    }
}

/// Weight step between nonzero coefficients: 3 over GF(3), 2 over GF(4).
pub fn weight_step(field: FieldKind) -> usize {
    match field {
        FieldKind::F3 => 3,
        FieldKind::F4 => 2,
    }
}

/// Near-extremal length for family index m: 12m over GF(3), 6m over GF(4).
pub fn family_length(field: FieldKind, m: usize) -> usize {
    match field {
        FieldKind::F3 => 12 * m,
        FieldKind::F4 => 6 * m,
    }
}

fn base_factor(field: FieldKind) -> BigPoly {
    match field {
        // 1 + 8 y^3
        FieldKind::F3 => BigPoly::from_pairs([(0, BigInt::one()), (3, BigInt::from(8))]),
        // 1 + 3 y^2
        FieldKind::F4 => BigPoly::from_pairs([(0, BigInt::one()), (2, BigInt::from(3))]),
    }
}

fn twist_factor(field: FieldKind) -> BigPoly {
    let s = weight_step(field);
    // y^s (1 - y^s)^(s) with s = 3 resp. 2 exponents: (1-y^3)^3 / (1-y^2)^2
    let one_minus = BigPoly::from_pairs([(0, BigInt::one()), (s, BigInt::from(-1))]);
    BigPoly::monomial(s, 1).mul(&one_minus.pow(s))
}

/// The j-th Gleason basis polynomial for length n.
///
/// Over GF(3) the length must be a positive multiple of 4 and j <= n/12;
/// over GF(4) the length must be positive and even and j <= n/6. The
/// lowest-degree term is y^3j (resp. y^2j) with coefficient 1.
pub fn gleason_basis(field: FieldKind, n: usize, j: usize) -> Result<BigPoly, Error> {
    let (block, group) = match field {
        FieldKind::F3 => (4, 12),
        FieldKind::F4 => (2, 6),
    };
    if n == 0 || !n.is_multiple_of(block) {
        return Err(Error::OutOfRange("length"));
    }
    if j > n / group {
        return Err(Error::OutOfRange("basis index"));
    }
    let poly = base_factor(field)
        .pow(n / block - 3 * j)
        .mul(&twist_factor(field).pow(j));
    debug_assert_eq!(poly.valuation(), Some(weight_step(field) * j));
    Ok(poly)
}

/// One-parameter weight enumerator of a near-extremal self-dual code:
/// A_w = s_w + t_w * alpha, where alpha is the minimum-weight count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParametricEnumerator {
    field: FieldKind,
    m: usize,
    terms: BTreeMap<usize, (BigInt, BigInt)>,
    solved: Vec<BigInt>,
}

impl ParametricEnumerator {
    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        family_length(self.field, self.m)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Minimum weight of the family: 3m resp. 2m.
    pub fn min_weight(&self) -> usize {
        weight_step(self.field) * self.m
    }

    /// The (s, t) pairs with either component nonzero, ascending by weight.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt, &BigInt)> {
        self.terms.iter().map(|(&w, (s, t))| (w, s, t))
    }

    pub fn s(&self, weight: usize) -> BigInt {
        self.terms
            .get(&weight)
            .map(|(s, _)| s.clone())
            .unwrap_or_default()
    }

    pub fn t(&self, weight: usize) -> BigInt {
        self.terms
            .get(&weight)
            .map(|(_, t)| t.clone())
            .unwrap_or_default()
    }

    /// The solved expansion coefficients a_0 .. a_m, with a_m given at
    /// alpha = 0 (alpha enters with coefficient exactly 1 on the last
    /// basis polynomial).
    pub fn expansion_coefficients(&self) -> &[BigInt] {
        &self.solved
    }

    /// Specialize to a concrete minimum-weight count.
    pub fn evaluate(&self, alpha: &BigInt) -> Result<WeightEnumerator, Error> {
        let mut counts = BTreeMap::new();
        for (w, s, t) in self.terms() {
            let c: BigInt = s + t * alpha;
            let c: BigUint = c
                .to_biguint()
                .ok_or(Error::OutOfRange("negative coefficient at this alpha"))?;
            counts.insert(w, c);
        }
        Ok(WeightEnumerator::new(self.len(), counts))
    }
}

/// Solve the near-extremal family for index m.
pub fn parametric_near_extremal(field: FieldKind, m: usize) -> Result<ParametricEnumerator, Error> {
    if m == 0 || m > max_m(field) {
        return Err(Error::OutOfRange("family index m"));
    }
    let step = weight_step(field);
    let n = family_length(field, m);

    // For length 12m (6m) the j-th basis is cube^(m-j) * twist^j with
    // cube = base^3; build both power chains incrementally.
    let cube = base_factor(field).pow(3);
    let twist = twist_factor(field);
    let mut cube_pows = Vec::with_capacity(m + 1);
    let mut twist_pows = Vec::with_capacity(m + 1);
    cube_pows.push(BigPoly::one());
    twist_pows.push(BigPoly::one());
    for _ in 1..=m {
        cube_pows.push(cube_pows.last().unwrap().mul(&cube));
        twist_pows.push(twist_pows.last().unwrap().mul(&twist));
    }
    let basis = |j: usize| -> BigPoly {
        let b = cube_pows[m - j].mul(&twist_pows[j]);
        // unitriangular structure: lowest term y^(step*j), coefficient 1
        assert_eq!(b.valuation(), Some(step * j));
        assert!(b.coeff(step * j).is_one());
        b
    };

    // Back-substitution: A_0 = 1 gives a_0 = 1; A_(step*i) = 0 for i < m
    // gives a_i; the final constraint A_(step*m) = alpha splits a_m into
    // a constant part plus alpha itself.
    let mut solved = Vec::with_capacity(m + 1);
    solved.push(BigInt::one());
    let mut s_poly = basis(0);
    for i in 1..m {
        let a_i = -s_poly.coeff(step * i);
        s_poly = s_poly.add_scaled(&basis(i), &a_i);
        solved.push(a_i);
    }
    let t_poly = basis(m);
    let a_m = -s_poly.coeff(step * m);
    s_poly = s_poly.add_scaled(&t_poly, &a_m);
    solved.push(a_m);

    // Sum rule: at y = 1 every basis polynomial with j > 0 vanishes, so
    // the codeword total q^(n/2) is alpha-independent.
    let q = BigInt::from(match field {
        FieldKind::F3 => 3,
        FieldKind::F4 => 4,
    });
    assert_eq!(s_poly.eval_one(), q.pow(n as u32 / 2));
    assert!(t_poly.eval_one().is_zero());

    let mut terms: BTreeMap<usize, (BigInt, BigInt)> = BTreeMap::new();
    for (w, c) in s_poly.terms() {
        terms.entry(w).or_default().0 = c.clone();
    }
    for (w, c) in t_poly.terms() {
        terms.entry(w).or_default().1 = c.clone();
    }
    Ok(ParametricEnumerator {
        field,
        m,
        terms,
        solved,
    })
}

/// Outcome of the s_w divisibility check (mod 8 ternary / mod 9
/// quaternary, at the minimum weight and above).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibilityReport {
    pub field: FieldKind,
    pub m: usize,
    pub modulus: u64,
    /// Weights where s_w is not divisible, with the offending value.
    pub violations: Vec<(usize, BigInt)>,
}

impl DivisibilityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check s_w == 0 (mod 8 / mod 9) for every weight from the family
/// minimum upward. A clean report reproduces the numerical step behind
/// the divisibility theorems for this m.
pub fn divisibility_check(field: FieldKind, m: usize) -> Result<DivisibilityReport, Error> {
    let param = parametric_near_extremal(field, m)?;
    Ok(divisibility_of(&param))
}

/// The same check on an already-solved family.
pub fn divisibility_of(param: &ParametricEnumerator) -> DivisibilityReport {
    let modulus = param.field().alpha_modulus();
    let min = param.min_weight();
    let big_mod = BigInt::from(modulus);
    let violations = param
        .terms()
        .filter(|&(w, s, _)| w >= min && !s.mod_floor(&big_mod).is_zero())
        .map(|(w, s, _)| (w, s.clone()))
        .collect();
    DivisibilityReport {
        field: param.field(),
        m: param.m(),
        modulus,
        violations,
    }
}

/// Admissible minimum-weight counts alpha = modulus * beta,
/// beta_min <= beta <= beta_max.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaRange {
    pub modulus: u64,
    pub beta_min: BigInt,
    pub beta_max: BigInt,
}

impl AlphaRange {
    pub fn contains(&self, alpha: &BigInt) -> bool {
        if !alpha.mod_floor(&BigInt::from(self.modulus)).is_zero() {
            return false;
        }
        let beta = alpha / BigInt::from(self.modulus);
        beta >= self.beta_min && beta <= self.beta_max
    }
}

/// Intersect the nonnegativity constraints s_w + t_w alpha >= 0 with
/// alpha > 0 and the modulus, returning the beta interval.
pub fn alpha_range(field: FieldKind, m: usize) -> Result<AlphaRange, Error> {
    alpha_range_of(&parametric_near_extremal(field, m)?)
}

/// The same on an already-solved family.
pub fn alpha_range_of(param: &ParametricEnumerator) -> Result<AlphaRange, Error> {
    // near-extremal means the minimum-weight count is positive
    let mut lower = BigInt::one();
    let mut upper: Option<BigInt> = None;
    for (_, s, t) in param.terms() {
        match t.sign() {
            num_bigint::Sign::NoSign => {
                if s.is_negative() {
                    return Err(Error::EmptyAlphaRange);
                }
            }
            num_bigint::Sign::Plus => {
                // alpha >= ceil(-s / t)
                let bound = (-s).div_ceil(t);
                if bound > lower {
                    lower = bound;
                }
            }
            num_bigint::Sign::Minus => {
                // alpha <= floor(s / -t)
                let bound = s.div_floor(&-t);
                upper = Some(match upper {
                    Some(u) if u <= bound => u,
                    _ => bound,
                });
            }
        }
    }
    let upper = upper.ok_or(Error::EmptyAlphaRange)?;
    let modulus = param.field().alpha_modulus();
    let big_mod = BigInt::from(modulus);
    let beta_min = lower.div_ceil(&big_mod).max(BigInt::one());
    let beta_max = upper.div_floor(&big_mod);
    if beta_min > beta_max {
        return Err(Error::EmptyAlphaRange);
    }
    Ok(AlphaRange {
        modulus,
        beta_min,
        beta_max,
    })
}

/// The alpha = 0 specialization: the unique enumerator with minimum
/// weight forced above the near-extremal bound, i.e. the extremal one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalReport {
    pub field: FieldKind,
    pub m: usize,
    /// Coefficients B_w (may be negative, which proves nonexistence).
    pub coefficients: Vec<(usize, BigInt)>,
    pub nonnegative: bool,
    /// Weights above the minimum where B_w fails the modulus.
    pub divisibility_violations: Vec<(usize, BigInt)>,
}

impl ExtremalReport {
    /// The enumerator as exact counts, when all coefficients are
    /// nonnegative.
    pub fn enumerator(&self) -> Option<WeightEnumerator> {
        if !self.nonnegative {
            return None;
        }
        let counts = self
            .coefficients
            .iter()
            .map(|(w, c)| (*w, c.to_biguint().expect("nonnegative")))
            .collect();
        Some(WeightEnumerator::new(
            family_length(self.field, self.m),
            counts,
        ))
    }
}

pub fn extremal_enumerator(field: FieldKind, m: usize) -> Result<ExtremalReport, Error> {
    let param = parametric_near_extremal(field, m)?;
    let modulus = BigInt::from(field.alpha_modulus());
    let min = param.min_weight();
    let mut coefficients = Vec::new();
    let mut nonnegative = true;
    let mut divisibility_violations = Vec::new();
    for (w, s, _) in param.terms() {
        if s.is_zero() {
            continue;
        }
        if s.is_negative() {
            nonnegative = false;
        }
        if w > min && !s.mod_floor(&modulus).is_zero() {
            divisibility_violations.push((w, s.clone()));
        }
        coefficients.push((w, s.clone()));
    }
    Ok(ExtremalReport {
        field,
        m,
        coefficients,
        nonnegative,
        divisibility_violations,
    })
}
