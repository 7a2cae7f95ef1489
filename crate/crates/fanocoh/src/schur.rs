//! Schur modules for `GL(N)`: dimensions, Littlewood–Richardson products and
//! coefficients, and formal non-negative sums of irreducibles.
//!
//! `Γ^λ` denotes the irreducible with highest weight `λ` (length `N`,
//! possibly negative parts). Products are computed by enumerating
//! Littlewood–Richardson skew tableaux directly: the boxes of each entry
//! value are added to the growing shape as a horizontal strip, subject to the
//! column-strictness bound and the lattice-word inequality. Working at a
//! fixed rank `N` while enumerating is exact, not an approximation: shapes
//! never shrink while boxes are added, so no tableau with at most `N` rows is
//! lost by refusing to grow row `N+1`, and every discarded tableau names a
//! module that is zero for `GL(N)`.
//!
//! Negative parts are handled by twisting with a power of the determinant
//! first and untwisting the result, using `Γ^λ ⊗ det^c = Γ^{λ + (c,…,c)}`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exec;
use crate::partition::Partition;

/// Dimension of `Γ^λ` for `GL(n)` by the Weyl formula
/// `∏_{i<j} (λ_i − λ_j + j − i) / (j − i)`.
pub fn dim_irrep(lam: &Partition, n: usize) -> Result<BigUint> {
    let padded = lam.padded(n)?;
    let l = padded.parts();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..n {
        for j in (i + 1)..n {
            let gap = (j - i) as u64;
            num *= BigUint::from((i64::from(l[i]) - i64::from(l[j])) as u64 + gap);
            den *= BigUint::from(gap);
        }
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    if !r.is_zero() {
        return Err(Error::Internal(format!(
            "Weyl dimension of {lam} at rank {n} is not integral"
        )));
    }
    Ok(q)
}

/// One horizontal-strip step of the tableau walk.
///
/// Adds `count` boxes of a single new entry value to `shape` (length `rank`),
/// calling `emit` with each legal (new shape, per-row counts) pair. The
/// constraints are: the result is weakly decreasing with at most `rank` rows;
/// no column gains two boxes (`new[i] <= old[i-1]`); row `i` stays within
/// `cap[i]` when a cap is given; and, when `prev_prefix` is present, the
/// lattice inequality `Σ_{j<=i} m[j] <= prev_prefix[i-1]` holds for every
/// row, with `prev_prefix[-1] = 0`.
fn add_strip(
    shape: &[i32],
    prev_prefix: Option<&[i64]>,
    count: i32,
    cap: Option<&[i32]>,
    emit: &mut dyn FnMut(&[i32], &[i32]),
) {
    let rank = shape.len();
    let mut new_shape = shape.to_vec();
    let mut counts = vec![0i32; rank];

    fn rec(
        row: usize,
        remaining: i32,
        shape: &[i32],
        prev_prefix: Option<&[i64]>,
        cap: Option<&[i32]>,
        new_shape: &mut Vec<i32>,
        counts: &mut Vec<i32>,
        placed_prefix: i64,
        emit: &mut dyn FnMut(&[i32], &[i32]),
    ) {
        let rank = shape.len();
        if row == rank {
            if remaining == 0 {
                emit(new_shape, counts);
            }
            return;
        }
        // Upper bound for boxes in this row.
        let mut hi = remaining;
        if row > 0 {
            hi = hi.min(shape[row - 1] - shape[row]);
        }
        if let Some(cap) = cap {
            hi = hi.min(cap[row] - shape[row]);
        }
        if let Some(pp) = prev_prefix {
            let allowed = if row == 0 { 0 } else { pp[row - 1] };
            hi = hi.min((allowed - placed_prefix).min(i64::from(i32::MAX)) as i32);
        }
        for m in 0..=hi.max(-1) {
            new_shape[row] = shape[row] + m;
            counts[row] = m;
            rec(
                row + 1,
                remaining - m,
                shape,
                prev_prefix,
                cap,
                new_shape,
                counts,
                placed_prefix + i64::from(m),
                emit,
            );
        }
        new_shape[row] = shape[row];
        counts[row] = 0;
    }

    rec(
        0,
        count,
        shape,
        prev_prefix,
        cap,
        &mut new_shape,
        &mut counts,
        0,
        emit,
    );
}

/// Walks all Littlewood–Richardson tableaux of content `content` on top of
/// the start shape, at most `rank` rows, rows capped by `cap` when given.
/// Calls `emit` once per completed tableau with the final shape.
fn lr_walk(start: &[i32], content: &[i32], cap: Option<&[i32]>, emit: &mut dyn FnMut(&[i32])) {
    struct State {
        shape: Vec<i32>,
        prefix: Option<Vec<i64>>,
    }
    // Depth-first over entry values; the frontier is tiny, recursion is fine.
    fn rec(
        value: usize,
        state: &State,
        content: &[i32],
        cap: Option<&[i32]>,
        emit: &mut dyn FnMut(&[i32]),
    ) {
        if value == content.len() {
            emit(&state.shape);
            return;
        }
        add_strip(
            &state.shape,
            state.prefix.as_deref(),
            content[value],
            cap,
            &mut |shape, counts| {
                let mut prefix = Vec::with_capacity(counts.len());
                let mut acc = 0i64;
                for &m in counts {
                    acc += i64::from(m);
                    prefix.push(acc);
                }
                let next = State {
                    shape: shape.to_vec(),
                    prefix: Some(prefix),
                };
                rec(value + 1, &next, content, cap, emit);
            },
        );
    }
    let state = State {
        shape: start.to_vec(),
        prefix: None,
    };
    rec(0, &state, content, cap, emit);
}

/// Littlewood–Richardson coefficient `c^ν_{λμ}` for non-negative partitions.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint> {
    for q in [lam, mu, nu] {
        if !q.is_nonnegative() {
            return Err(Error::InvalidPartition(format!(
                "coefficients take non-negative partitions, got {q}"
            )));
        }
    }
    if lam.weight() + mu.weight() != nu.weight() {
        return Ok(BigUint::zero());
    }
    let rank = nu.len().max(lam.len()).max(mu.len());
    let nu_p = nu.padded(rank)?;
    let lam_p = lam.padded(rank)?;
    if lam_p
        .parts()
        .iter()
        .zip(nu_p.parts())
        .any(|(&a, &b)| a > b)
    {
        return Ok(BigUint::zero());
    }
    let mu_p = mu.padded(rank)?;
    let mut count = BigUint::zero();
    // Weights match, so every filling that stays under the cap ends exactly
    // at ν; no final comparison is needed.
    lr_walk(lam_p.parts(), mu_p.parts(), Some(nu_p.parts()), &mut |_| {
        count += 1u32;
    });
    Ok(count)
}

/// Decomposition of `Γ^λ ⊗ Γ^μ` for `GL(rank)`. Parts may be negative.
pub fn lr_product(lam: &Partition, mu: &Partition, rank: usize) -> Result<ModuleSum> {
    let lam_p = lam.padded(rank)?;
    let mu_p = mu.padded(rank)?;
    let a = (-lam_p.parts().last().copied().unwrap_or(0)).max(0);
    let b = (-mu_p.parts().last().copied().unwrap_or(0)).max(0);
    let lam_t = lam_p.det_twist(a);
    let mu_t = mu_p.det_twist(b);
    let mut terms: BTreeMap<Partition, BigUint> = BTreeMap::new();
    lr_walk(lam_t.parts(), mu_t.parts(), None, &mut |shape| {
        let nu = Partition::new_unchecked(shape.to_vec()).det_twist(-(a + b));
        *terms.entry(nu).or_default() += 1u32;
    });
    Ok(ModuleSum { rank, terms })
}

/// A formal sum of irreducible `GL(rank)` modules with arbitrary-precision
/// non-negative multiplicities. Keys are full-length weight vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSum {
    rank: usize,
    terms: BTreeMap<Partition, BigUint>,
}

impl ModuleSum {
    pub fn new(rank: usize) -> Self {
        ModuleSum {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// The one-dimensional trivial module `Γ^0`.
    pub fn trivial(rank: usize) -> Self {
        let mut s = ModuleSum::new(rank);
        s.terms.insert(Partition::zeros(rank), BigUint::one());
        s
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct irreducible components.
    pub fn component_count(&self) -> usize {
        self.terms.len()
    }

    /// Adds `mult` copies of `Γ^λ`; `λ` is padded to the rank.
    pub fn add(&mut self, lam: &Partition, mult: BigUint) -> Result<()> {
        if mult.is_zero() {
            return Ok(());
        }
        let key = lam.padded(self.rank)?;
        *self.terms.entry(key).or_default() += mult;
        Ok(())
    }

    pub fn merge(&mut self, other: &ModuleSum) -> Result<()> {
        if other.rank != self.rank {
            return Err(Error::RankMismatch(format!(
                "cannot merge rank {} into rank {}",
                other.rank, self.rank
            )));
        }
        for (lam, m) in &other.terms {
            *self.terms.entry(lam.clone()).or_default() += m;
        }
        Ok(())
    }

    /// Multiplies every multiplicity by `c` (dropping everything when `c`
    /// is zero).
    pub fn scale(&mut self, c: &BigUint) {
        if c.is_zero() {
            self.terms.clear();
        } else if !c.is_one() {
            for m in self.terms.values_mut() {
                *m *= c;
            }
        }
    }

    pub fn multiplicity(&self, lam: &Partition) -> BigUint {
        lam.padded(self.rank)
            .ok()
            .and_then(|key| self.terms.get(&key).cloned())
            .unwrap_or_default()
    }

    /// Iterates components in increasing lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigUint)> {
        self.terms.iter()
    }

    /// Twists every component by `det^c`.
    pub fn det_twist(&self, c: i32) -> ModuleSum {
        ModuleSum {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(lam, m)| (lam.det_twist(c), m.clone()))
                .collect(),
        }
    }

    /// Keeps only components satisfying the predicate.
    pub fn filter(&self, mut keep: impl FnMut(&Partition) -> bool) -> ModuleSum {
        ModuleSum {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .filter(|(lam, _)| keep(lam))
                .map(|(lam, m)| (lam.clone(), m.clone()))
                .collect(),
        }
    }

    /// Total dimension, `Σ mult · dim Γ^λ`.
    pub fn dimension(&self) -> Result<BigUint> {
        let mut total = BigUint::zero();
        for (lam, m) in &self.terms {
            total += m * dim_irrep(lam, self.rank)?;
        }
        Ok(total)
    }

    /// Largest first part over all components, or `None` when empty.
    pub fn max_first_part(&self) -> Option<i32> {
        self.terms.keys().map(|lam| lam.first()).max()
    }

    /// Decomposition of the tensor product, distributing over both sums.
    /// Component pairs are processed in parallel.
    pub fn tensor(&self, other: &ModuleSum) -> Result<ModuleSum> {
        if other.rank != self.rank {
            return Err(Error::RankMismatch(format!(
                "tensor of rank {} with rank {}",
                self.rank, other.rank
            )));
        }
        let rank = self.rank;
        let pairs: Vec<(Partition, BigUint, Partition, BigUint)> = self
            .terms
            .iter()
            .flat_map(|(a, ma)| {
                other
                    .terms
                    .iter()
                    .map(move |(b, mb)| (a.clone(), ma.clone(), b.clone(), mb.clone()))
            })
            .collect();
        let partials = exec::try_map(pairs, |(a, ma, b, mb)| {
            let mut prod = lr_product(&a, &b, rank)?;
            prod.scale(&(ma * mb));
            Ok(prod)
        })?;
        let mut out = ModuleSum::new(rank);
        for p in partials {
            out.merge(&p)?;
        }
        Ok(out)
    }
}

impl Serialize for ModuleSum {
    /// `{"rank": N, "terms": [{"partition": [...], "mult": "..."}, ...]}`
    /// with components in decreasing lexicographic order.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Term<'a>(&'a Partition, &'a BigUint);
        impl Serialize for Term<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut st = s.serialize_struct("Term", 2)?;
                st.serialize_field("partition", self.0)?;
                st.serialize_field("mult", &self.1.to_string())?;
                st.end()
            }
        }
        struct Terms<'a>(&'a ModuleSum);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.terms.len()))?;
                for (lam, m) in self.0.terms.iter().rev() {
                    seq.serialize_element(&Term(lam, m))?;
                }
                seq.end()
            }
        }
        let mut st = s.serialize_struct("ModuleSum", 2)?;
        st.serialize_field("rank", &self.rank)?;
        st.serialize_field("terms", &Terms(self))?;
        st.end()
    }
}
