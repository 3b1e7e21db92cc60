//! Finite sumset algebra: direct-sum verification by exhaustive enumeration,
//! contraction, finite British number systems, factorization of additive
//! systems for `[N]` into British bases, and tiling checks modulo `N`.
//!
//! [`sumset`] is the brute-force oracle everything else leans on: it walks the
//! full cartesian product of the member sets, so every call is bounded by an
//! explicit tuple budget.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith;

/// Upper bound on the number of tuples an enumeration is allowed to visit.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 10_000_000;

/// A finite set of integers, kept sorted ascending with no duplicates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FiniteSet {
    elements: Vec<BigInt>,
}

impl FiniteSet {
    /// Builds a set from arbitrary elements; duplicates collapse.
    pub fn new<I: IntoIterator<Item = BigInt>>(elements: I) -> Self {
        let mut elements: Vec<BigInt> = elements.into_iter().collect();
        elements.sort();
        elements.dedup();
        FiniteSet { elements }
    }

    pub fn from_i64s(elements: &[i64]) -> Self {
        Self::new(elements.iter().map(|&e| BigInt::from(e)))
    }

    pub fn elements(&self) -> &[BigInt] {
        &self.elements
    }

    pub fn iter(&self) -> core::slice::Iter<'_, BigInt> {
        self.elements.iter()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, value: &BigInt) -> bool {
        self.elements.binary_search(value).is_ok()
    }

    pub fn min(&self) -> Option<&BigInt> {
        self.elements.first()
    }

    pub fn max(&self) -> Option<&BigInt> {
        self.elements.last()
    }

    /// The set `{k*a : a in self}`.
    pub fn scaled(&self, k: &BigInt) -> FiniteSet {
        FiniteSet::new(self.elements.iter().map(|e| k * e))
    }

    /// Whether the elements form a run of consecutive integers.
    pub fn is_consecutive_run(&self) -> bool {
        self.elements
            .windows(2)
            .all(|w| &w[0] + BigInt::one() == w[1])
    }

    /// Smallest positive integer absent from the set.
    pub(crate) fn smallest_absent_positive(&self) -> BigInt {
        let mut expected = BigInt::one();
        for e in &self.elements {
            if !e.is_positive() {
                continue;
            }
            if *e == expected {
                expected += 1;
            } else {
                break;
            }
        }
        expected
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// An ordered list of finite sets, each containing 0 and at least one more
/// element, suitable as a (finite) collection whose sumset we can enumerate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCollection {
    sets: Vec<FiniteSet>,
}

impl FiniteCollection {
    pub fn new(sets: Vec<FiniteSet>) -> Result<Self, CollectionError> {
        for (index, set) in sets.iter().enumerate() {
            if !set.contains(&BigInt::zero()) {
                return Err(CollectionError::MemberMissingZero { index });
            }
            if set.len() < 2 {
                return Err(CollectionError::MemberTooSmall { index });
            }
        }
        Ok(FiniteCollection { sets })
    }

    pub fn sets(&self) -> &[FiniteSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Number of tuples a full enumeration visits: the product of the sizes.
    pub fn tuple_count(&self) -> BigInt {
        self.sets
            .iter()
            .fold(BigInt::one(), |acc, s| acc * BigInt::from(s.len()))
    }
}

impl fmt::Display for FiniteCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.sets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

/// Two distinct representations of the same value, disproving directness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumsetWitness {
    pub value: BigInt,
    pub first: Vec<BigInt>,
    pub second: Vec<BigInt>,
}

impl fmt::Display for SumsetWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |parts: &[BigInt]| {
            let mut out = alloc::string::String::new();
            for (i, p) in parts.iter().enumerate() {
                if i > 0 {
                    out.push_str(" + ");
                }
                out.push_str(&alloc::format!("{p}"));
            }
            out
        };
        write!(
            f,
            "{} = {} = {}",
            self.value,
            join(&self.first),
            join(&self.second)
        )
    }
}

/// Result of exhaustively enumerating a collection's sumset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumsetResult {
    sum: FiniteSet,
    witness: Option<SumsetWitness>,
}

impl SumsetResult {
    pub fn sum(&self) -> &FiniteSet {
        &self.sum
    }

    pub fn is_direct(&self) -> bool {
        self.witness.is_none()
    }

    pub fn witness(&self) -> Option<&SumsetWitness> {
        self.witness.as_ref()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CollectionError {
    #[error("set {index} does not contain 0")]
    MemberMissingZero { index: usize },
    #[error("set {index} has fewer than 2 elements")]
    MemberTooSmall { index: usize },
    #[error("enumeration needs {required} tuples, over the budget of {budget}")]
    BudgetExceeded { required: BigInt, budget: u64 },
    #[error("collection is not direct: {witness}")]
    NotDirect { witness: SumsetWitness },
    #[error("contraction selection is empty")]
    EmptySelection,
    #[error("contraction index {index} appears twice")]
    DuplicateIndex { index: usize },
    #[error("index {index} out of range for {len} sets")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("base must be at least 2, got {base}")]
    InvalidBase { base: BigInt },
    #[error("modulus must be at least 1, got {modulus}")]
    InvalidModulus { modulus: BigInt },
    #[error("not an additive system for [{size}]: sumset has {actual} of {size} expected values")]
    NotIntervalSystem { size: BigInt, actual: BigInt },
    #[error("not factorable: {reason}")]
    NotFactorable { reason: alloc::string::String },
}

fn check_budget(c: &FiniteCollection, budget: u64) -> Result<u64, CollectionError> {
    let required = c.tuple_count();
    if required > BigInt::from(budget) {
        return Err(CollectionError::BudgetExceeded { required, budget });
    }
    // Fits in u64 because the budget does.
    let mut count = 1u64;
    for s in c.sets() {
        count *= s.len() as u64;
    }
    Ok(count)
}

/// Visits every tuple of the cartesian product in lexicographic order
/// (last set fastest), yielding the tuple index and its sum.
fn for_each_tuple_sum<F: FnMut(u64, BigInt)>(c: &FiniteCollection, mut visit: F) {
    let k = c.len();
    if k == 0 {
        visit(0, BigInt::zero());
        return;
    }
    let mut choice = vec![0usize; k];
    let mut partial = Vec::with_capacity(k + 1);
    partial.push(BigInt::zero());
    for i in 0..k {
        let next = &partial[i] + &c.sets()[i].elements()[0];
        partial.push(next);
    }
    let mut index = 0u64;
    loop {
        visit(index, partial[k].clone());
        index += 1;
        // Advance the odometer, rebuilding partial sums from the changed digit.
        let mut pos = k;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < c.sets()[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
        for i in pos..k {
            partial[i + 1] = &partial[i] + &c.sets()[i].elements()[choice[i]];
        }
    }
}

/// Decodes a tuple index (as produced by [`for_each_tuple_sum`]) back into the
/// chosen element of each set.
fn decode_tuple(c: &FiniteCollection, index: u64) -> Vec<BigInt> {
    let mut rev = Vec::with_capacity(c.len());
    let mut rest = index;
    for s in c.sets().iter().rev() {
        let len = s.len() as u64;
        rev.push(s.elements()[(rest % len) as usize].clone());
        rest /= len;
    }
    rev.reverse();
    rev
}

/// Enumerates the sumset of `c`, reporting directness and, when the sumset is
/// not direct, a witness pair of representations.
///
/// This is the brute-force oracle used to verify directness claims elsewhere;
/// the witness reported is the first collision in tuple order.
pub fn sumset(c: &FiniteCollection) -> Result<SumsetResult, CollectionError> {
    sumset_with_budget(c, DEFAULT_ENUMERATION_BUDGET)
}

pub fn sumset_with_budget(
    c: &FiniteCollection,
    budget: u64,
) -> Result<SumsetResult, CollectionError> {
    check_budget(c, budget)?;
    let mut first_rep: BTreeMap<BigInt, u64> = BTreeMap::new();
    let mut collision: Option<(BigInt, u64, u64)> = None;
    for_each_tuple_sum(c, |index, value| {
        if let Some(&prev) = first_rep.get(&value) {
            if collision.is_none() {
                collision = Some((value, prev, index));
            }
        } else {
            first_rep.insert(value, index);
        }
    });
    let witness = collision.map(|(value, a, b)| SumsetWitness {
        value,
        first: decode_tuple(c, a),
        second: decode_tuple(c, b),
    });
    let sum = FiniteSet {
        elements: first_rep.into_keys().collect(),
    };
    Ok(SumsetResult { sum, witness })
}

/// Replaces the selected sets of `c` by their direct sum. The merged set takes
/// the position of the smallest selected index; the rest keep their order.
///
/// Fails with the offending witness when `c` is not direct.
pub fn contract(
    c: &FiniteCollection,
    subset_indices: &[usize],
) -> Result<FiniteCollection, CollectionError> {
    contract_with_budget(c, subset_indices, DEFAULT_ENUMERATION_BUDGET)
}

pub fn contract_with_budget(
    c: &FiniteCollection,
    subset_indices: &[usize],
    budget: u64,
) -> Result<FiniteCollection, CollectionError> {
    if subset_indices.is_empty() {
        return Err(CollectionError::EmptySelection);
    }
    let mut seen = vec![false; c.len()];
    for &index in subset_indices {
        if index >= c.len() {
            return Err(CollectionError::IndexOutOfRange {
                index,
                len: c.len(),
            });
        }
        if seen[index] {
            return Err(CollectionError::DuplicateIndex { index });
        }
        seen[index] = true;
    }

    let full = sumset_with_budget(c, budget)?;
    if let Some(witness) = full.witness {
        return Err(CollectionError::NotDirect { witness });
    }

    let selected: Vec<FiniteSet> = subset_indices
        .iter()
        .map(|&i| c.sets()[i].clone())
        .collect();
    let merged = sumset_with_budget(&FiniteCollection { sets: selected }, budget)?
        .sum
        .clone();

    let insert_at = *subset_indices.iter().min().expect("nonempty");
    let mut sets = Vec::with_capacity(c.len() - subset_indices.len() + 1);
    for (i, s) in c.sets().iter().enumerate() {
        if i == insert_at {
            sets.push(merged.clone());
        } else if !seen[i] {
            sets.push(s.clone());
        }
    }
    FiniteCollection::new(sets)
}

/// The finite British number system over the given bases:
/// `{[b0], b0*[b1], b0*b1*[b2], ...}`. Its direct sum is `[b0*b1*...]`.
pub fn british_prefix(bases: &[BigInt]) -> Result<FiniteCollection, CollectionError> {
    let two = BigInt::from(2);
    let mut product = BigInt::one();
    for base in bases {
        if *base < two {
            return Err(CollectionError::InvalidBase { base: base.clone() });
        }
        product *= base;
    }
    if product > BigInt::from(DEFAULT_ENUMERATION_BUDGET) {
        return Err(CollectionError::BudgetExceeded {
            required: product,
            budget: DEFAULT_ENUMERATION_BUDGET,
        });
    }
    let mut sets = Vec::with_capacity(bases.len());
    let mut scale = BigInt::one();
    for base in bases {
        let interval = arith::radix_interval(base).expect("base >= 2");
        sets.push(interval.scaled(&scale));
        scale *= base;
    }
    FiniteCollection::new(sets)
}

/// A factorization of an additive system for `[N]` into British bases.
///
/// `bases` are reported in discovery order; `grouping[j]` lists the base
/// indices whose British levels sum to input set `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BritishFactorization {
    bases: Vec<BigInt>,
    grouping: Vec<Vec<usize>>,
}

impl BritishFactorization {
    pub fn bases(&self) -> &[BigInt] {
        &self.bases
    }

    pub fn grouping(&self) -> &[Vec<usize>] {
        &self.grouping
    }

    /// Reassembles the original collection: each input set is the direct sum
    /// of its assigned levels of `british_prefix(bases)`.
    pub fn rebuild(&self) -> Result<FiniteCollection, CollectionError> {
        let british = british_prefix(&self.bases)?;
        let mut sets = Vec::with_capacity(self.grouping.len());
        for group in &self.grouping {
            let mut acc = FiniteSet::new([BigInt::zero()]);
            for &i in group {
                acc = pairwise_sum(&acc, &british.sets()[i]);
            }
            sets.push(acc);
        }
        FiniteCollection::new(sets)
    }
}

fn pairwise_sum(a: &FiniteSet, b: &FiniteSet) -> FiniteSet {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a.iter() {
        for y in b.iter() {
            out.push(x + y);
        }
    }
    FiniteSet::new(out)
}

/// Factors a collection whose direct sum is `[N]` (with `N` the product of the
/// set sizes) into British bases, following the constructive step: take the
/// set containing 1, let `b` be the smallest positive integer missing from it,
/// split it as `[b]` plus `b`'s multiples, then divide everything by `b` and
/// repeat.
///
/// The split is verified at every step rather than trusted; a failure reports
/// `NotFactorable` (unreachable for genuine additive systems for `[N]`).
pub fn debruijn_factor(c: &FiniteCollection) -> Result<BritishFactorization, CollectionError> {
    debruijn_factor_with_budget(c, DEFAULT_ENUMERATION_BUDGET)
}

pub fn debruijn_factor_with_budget(
    c: &FiniteCollection,
    budget: u64,
) -> Result<BritishFactorization, CollectionError> {
    let full = sumset_with_budget(c, budget)?;
    if let Some(witness) = full.witness {
        return Err(CollectionError::NotDirect { witness });
    }
    let size = c.tuple_count();
    let expected = arith::radix_interval(&size).expect("product of sizes >= 1");
    if *full.sum() != expected {
        return Err(CollectionError::NotIntervalSystem {
            size,
            actual: BigInt::from(
                full.sum()
                    .iter()
                    .filter(|e| expected.contains(e))
                    .count(),
            ),
        });
    }

    let mut work: Vec<(usize, FiniteSet)> = c
        .sets()
        .iter()
        .enumerate()
        .map(|(i, s)| (i, s.clone()))
        .collect();
    let mut bases = Vec::new();
    let mut grouping = vec![Vec::new(); c.len()];
    let one = BigInt::one();

    while !work.is_empty() {
        let pos = work
            .iter()
            .position(|(_, s)| s.contains(&one))
            .ok_or_else(|| CollectionError::NotFactorable {
                reason: alloc::string::String::from("no remaining set contains 1"),
            })?;
        let (origin, set) = work[pos].clone();
        let base = set.smallest_absent_positive();

        let multiples: FiniteSet = FiniteSet::new(
            set.iter()
                .filter(|e| e.mod_floor(&base).is_zero())
                .cloned(),
        );
        let interval = arith::radix_interval(&base).expect("base >= 2");
        if pairwise_sum(&interval, &multiples) != set {
            return Err(CollectionError::NotFactorable {
                reason: alloc::format!("set {set} does not split over base {base}"),
            });
        }

        grouping[origin].push(bases.len());
        bases.push(base.clone());

        if multiples.len() == 1 {
            work.remove(pos);
        } else {
            work[pos].1 = multiples;
        }

        for (_, s) in work.iter_mut() {
            let mut divided = Vec::with_capacity(s.len());
            for e in s.iter() {
                let (q, r) = e.div_mod_floor(&base);
                if !r.is_zero() {
                    return Err(CollectionError::NotFactorable {
                        reason: alloc::format!("element {e} is not divisible by base {base}"),
                    });
                }
                divided.push(q);
            }
            *s = FiniteSet::new(divided);
        }
    }

    Ok(BritishFactorization { bases, grouping })
}

/// Whether the tuple sums of `c`, reduced modulo `modulus`, hit every residue
/// class exactly once.
pub fn tiles_mod(c: &FiniteCollection, modulus: &BigInt) -> Result<bool, CollectionError> {
    tiles_mod_with_budget(c, modulus, DEFAULT_ENUMERATION_BUDGET)
}

pub fn tiles_mod_with_budget(
    c: &FiniteCollection,
    modulus: &BigInt,
    budget: u64,
) -> Result<bool, CollectionError> {
    if !modulus.is_positive() {
        return Err(CollectionError::InvalidModulus {
            modulus: modulus.clone(),
        });
    }
    if c.tuple_count() != *modulus {
        // Exactly-once coverage needs exactly `modulus` tuples.
        return Ok(false);
    }
    let count = check_budget(c, budget)?;
    let mut hit = vec![false; count as usize];
    let mut ok = true;
    for_each_tuple_sum(c, |_, value| {
        if !ok {
            return;
        }
        let residue = value.mod_floor(modulus);
        let slot = residue_index(&residue);
        if hit[slot] {
            ok = false;
        } else {
            hit[slot] = true;
        }
    });
    Ok(ok)
}

fn residue_index(residue: &BigInt) -> usize {
    let (_, digits) = residue.to_u64_digits();
    match digits.len() {
        0 => 0,
        1 => digits[0] as usize,
        _ => unreachable!("residue bounded by the enumeration budget"),
    }
}
